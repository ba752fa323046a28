//! Memoized depth-first search over pebble configurations.
//!
//! Every move lowers the total by one, so the reachable state graph is a DAG
//! of depth at most the initial total and a state's outcome never depends on
//! the path that reached it. The search is iterative so that large totals do
//! not grow the call stack.

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::game::Move;
use crate::graph::{bits, Graph};

pub(crate) type State = SmallVec<[u32; 8]>;

/// How an objective judges a state before its moves are explored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Verdict {
    Win,
    Lose,
    Expand,
}

pub(crate) trait Objective {
    fn classify(&mut self, state: &[u32]) -> Verdict;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Lose,
    /// Winning via the arc at this index.
    Win(u32),
}

struct Frame {
    state: State,
    next_arc: usize,
}

/// One search space: a fixed arc order plus the memo of settled states.
pub(crate) struct Search {
    arcs: Vec<(usize, usize)>,
    memo: FxHashMap<State, Outcome>,
    memo_limit: usize,
    explored: u64,
}

impl Search {
    /// Arcs in ascending (source, destination) order.
    pub(crate) fn ascending(g: &Graph) -> Search {
        let arcs = (0..g.order())
            .flat_map(|u| bits(g.neighbor_mask(u)).map(move |v| (u, v)))
            .collect();
        Search::with_arcs(arcs)
    }

    pub(crate) fn with_arcs(arcs: Vec<(usize, usize)>) -> Search {
        Search {
            arcs,
            memo: FxHashMap::default(),
            memo_limit: usize::MAX,
            explored: 0,
        }
    }

    /// Caps the memo; it is dropped wholesale between runs once it grows past
    /// `limit` entries. Results are unaffected.
    pub(crate) fn memo_limit(mut self, limit: usize) -> Search {
        self.memo_limit = limit;
        self
    }

    /// Number of states expanded so far.
    pub(crate) fn explored(&self) -> u64 {
        self.explored
    }

    /// Whether some move sequence from `root` reaches a state the objective
    /// classifies as a win.
    pub(crate) fn run<O: Objective>(&mut self, root: &[u32], objective: &mut O) -> bool {
        match objective.classify(root) {
            Verdict::Win => return true,
            Verdict::Lose => return false,
            Verdict::Expand => {}
        }
        if let Some(&o) = self.memo.get(root) {
            return matches!(o, Outcome::Win(_));
        }
        if self.memo.len() > self.memo_limit {
            self.memo.clear();
        }

        let mut stack = vec![Frame {
            state: State::from_slice(root),
            next_arc: 0,
        }];
        self.explored += 1;
        while let Some(top) = stack.last_mut() {
            let arc = self.arcs[top.next_arc..]
                .iter()
                .position(|&(u, _)| top.state[u] >= 2)
                .map(|offset| top.next_arc + offset);
            let Some(arc) = arc else {
                let done = stack.pop().expect("stack is non-empty");
                self.memo.insert(done.state, Outcome::Lose);
                continue;
            };
            top.next_arc = arc + 1;

            let (u, v) = self.arcs[arc];
            let mut child = top.state.clone();
            child[u] -= 2;
            child[v] += 1;
            let won = match objective.classify(&child) {
                Verdict::Win => true,
                Verdict::Lose => false,
                Verdict::Expand => match self.memo.get(&child) {
                    Some(Outcome::Win(_)) => true,
                    Some(Outcome::Lose) => false,
                    None => {
                        stack.push(Frame {
                            state: child,
                            next_arc: 0,
                        });
                        self.explored += 1;
                        continue;
                    }
                },
            };
            if won {
                for frame in stack {
                    let arc = u32::try_from(frame.next_arc - 1).expect("arc index fits u32");
                    self.memo.insert(frame.state, Outcome::Win(arc));
                }
                return true;
            }
        }
        false
    }

    /// The winning line from `root` after a successful [`Search::run`]:
    /// follows memoized winning arcs until the objective accepts a state.
    pub(crate) fn witness<O: Objective>(&self, root: &[u32], objective: &mut O) -> Vec<Move> {
        let mut moves = Vec::new();
        let mut state = State::from_slice(root);
        while objective.classify(&state) != Verdict::Win {
            let Some(&Outcome::Win(arc)) = self.memo.get(&state) else {
                panic!("witness requested for a state not known to be winning");
            };
            let (u, v) = self.arcs[arc as usize];
            state[u] -= 2;
            state[v] += 1;
            moves.push(Move::new(u, v));
        }
        moves
    }
}
