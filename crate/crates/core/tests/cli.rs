use std::process::{Command, Output};

fn pebbling(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pebbling"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn solve_examples() {
    let o = pebbling(&[
        "solve",
        "--graph",
        "A_",
        "--config",
        "0,2",
        "--target",
        "0",
        "--mode",
        "at-least-one",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\nsolvable\n"));
    assert!(stdout(&o).contains("(1→0)"));

    for (graph, config) in [("A_", "2,0"), ("@", "2")] {
        let o = pebbling(&[
            "solve",
            "--graph",
            graph,
            "--config",
            config,
            "--target",
            "0",
            "--mode",
            "exactly-one",
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(stdout(&o).contains("unsolvable"));
    }
}

#[test]
fn solve_json_carries_the_witness() {
    let o = pebbling(&[
        "--format",
        "json",
        "solve",
        "--family",
        "path",
        "--n",
        "3",
        "--config",
        "0,0,4",
        "--target",
        "0",
        "--mode",
        "exactly-one",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["solvable"], true);
    assert!(v["witness"].as_array().is_some_and(|w| !w.is_empty()));
}

#[test]
fn number_examples() {
    let cases = [
        (&["pi", "--graph", "A_"][..], "pi = 2\n"),
        (&["pis", "--graph", "A_"][..], "pi_s = 3\n"),
        (&["pis", "--graph", "@"][..], "pi_s = infinite\n"),
        (&["pi", "--graph", "@"][..], "pi = 1\n"),
        (&["pi", "--graph", "A?"][..], "pi = infinite\n"),
        (&["pi", "--family", "cycle", "--n", "5"][..], "pi = 5\n"),
    ];
    for (args, first_line) in cases {
        let o = pebbling(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert!(
            stdout(&o).starts_with(first_line),
            "{args:?}: {}",
            stdout(&o)
        );
    }
}

#[test]
fn edge_list_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    std::fs::write(&path, "n 4\n0 1\n1 2\n\n2 3\n").unwrap();
    let o = pebbling(&["pi", "--edges", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("pi = 8\n"));

    std::fs::write(&path, "n 3\n0 1\n1 1\n").unwrap();
    let o = pebbling(&["pi", "--edges", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_two() {
    let bad: [&[&str]; 6] = [
        &["pi", "--graph", "not graph6"],
        &["pi"],
        &["pi", "--graph", "A_", "--family", "path", "--n", "2"],
        &[
            "solve",
            "--graph",
            "A_",
            "--config",
            "1,x",
            "--target",
            "0",
            "--mode",
            "at-least-one",
        ],
        &[
            "solve",
            "--graph",
            "A_",
            "--config",
            "1,1",
            "--target",
            "5",
            "--mode",
            "at-least-one",
        ],
        &["verify", "--n-max", "9"],
    ];
    for args in bad {
        let o = pebbling(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).is_empty(), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_passes_and_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = pebbling(&[
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
        "verify",
        "--n-max",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["pass"], true);
    let records = v["records"].as_array().unwrap();
    // the edgeless pair and K2, then 2 classes at n = 3 and 6 at n = 4
    assert_eq!(records.len(), 2 + 2 + 6);
    assert!(records
        .iter()
        .filter(|r| r["n"].as_u64() >= Some(3))
        .all(|r| r["equal"] == true));
}

#[test]
fn verify_with_window_at_three_vertices() {
    let o = pebbling(&["verify", "--n-max", "3", "--window", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("overall: PASS"));
}

#[test]
fn verify_json_is_identical_across_job_counts() {
    let run = |jobs: &str| {
        let o = pebbling(&["--jobs", jobs, "--format", "json", "verify", "--n-max", "4"]);
        assert_eq!(o.status.code(), Some(0));
        o.stdout
    };
    let one = run("1");
    assert!(!one.is_empty());
    assert_eq!(one, run("4"));
}

#[test]
fn verify_csv_has_a_header_and_one_row_per_graph() {
    let o = pebbling(&["--format", "csv", "verify", "--n-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("graph6,n,pi,pi_s,equal,witness_config,witness_target,elapsed_ms")
    );
    assert_eq!(lines.count(), 4);
}
