//! Forced-edge closure: the degree rules alone, run to a fixpoint on the
//! whole board, with every derivation recorded.

use crate::board::{BoardGraph, Cell};

use super::engine::{Conflict, Problem, State, StepRule, IN, OUT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Contradiction {
    /// A third edge was forced at this cell.
    ThreeForced { vertex: Cell },
    /// Forced edges closed a cycle of this many cells, short of the board.
    PrematureCycle { length: usize },
    /// Fewer than two edges remain available at this cell.
    Stranded { vertex: Cell },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// The cell has exactly two edges left, so both are in every circuit.
    DegreeTwo,
    /// The cell already has two forced edges, so the rest are excluded.
    Saturated,
}

/// One derivation: `rule` applied at `vertex` decides `edge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub rule: Rule,
    pub vertex: Cell,
    pub edge: (Cell, Cell),
    pub forced: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcedState {
    pub forced: Vec<(Cell, Cell)>,
    pub forbidden: Vec<(Cell, Cell)>,
    pub contradiction: Option<Contradiction>,
    /// Derivations in the order applied; replaying them reproduces the state.
    pub log: Vec<Derivation>,
}

impl ForcedState {
    pub fn is_contradiction(&self) -> bool {
        self.contradiction.is_some()
    }
}

/// Run the degree rules to a fixpoint. Cells of degree two are handled
/// first, all together: if their edges alone already close a short cycle
/// that is reported, even when some cell also ends up with three of them.
pub fn forced_closure(graph: &BoardGraph) -> ForcedState {
    if let Some(state) = initial_cycle(graph) {
        return state;
    }
    let p = Problem::new(graph, None, false);
    let mut st = State::new(&p, false, true);
    st.propagate();
    let cell_edge = |e: usize| {
        let (u, v) = p.ends[e];
        (p.cell(u), p.cell(v))
    };
    let pick = |want: u8| -> Vec<(Cell, Cell)> {
        (0..p.ends.len())
            .filter(|&e| st.edge[e] == want)
            .map(cell_edge)
            .collect()
    };
    let contradiction = st.conflict.map(|c| match c {
        Conflict::ThreeForced(v) => Contradiction::ThreeForced { vertex: p.cell(v) },
        Conflict::PrematureCycle(length) => Contradiction::PrematureCycle { length },
        Conflict::Stranded(v) => Contradiction::Stranded { vertex: p.cell(v) },
        Conflict::Asymmetric => unreachable!("closure runs without symmetry"),
    });
    let log = st
        .log
        .as_ref()
        .expect("logging enabled")
        .iter()
        .map(|s| Derivation {
            rule: match s.rule {
                StepRule::DegreeTwo => Rule::DegreeTwo,
                StepRule::Saturated => Rule::Saturated,
            },
            vertex: p.cell(s.vertex),
            edge: cell_edge(s.edge),
            forced: s.value == IN,
        })
        .collect();
    ForcedState {
        forced: pick(IN),
        forbidden: pick(OUT),
        contradiction,
        log,
    }
}

fn initial_cycle(graph: &BoardGraph) -> Option<ForcedState> {
    let nv = graph.vertex_count();
    let mut parent: Vec<usize> = (0..nv).collect();
    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut forced: Vec<(usize, usize)> = Vec::new();
    let mut log = Vec::new();
    for v in (0..nv).filter(|&v| graph.degree(v) == 2) {
        for &w in graph.neighbors(v) {
            let e = (v.min(w), v.max(w));
            if forced.contains(&e) {
                continue;
            }
            log.push(Derivation {
                rule: Rule::DegreeTwo,
                vertex: graph.cell(v),
                edge: (graph.cell(e.0), graph.cell(e.1)),
                forced: true,
            });
            let (a, b) = (root(&mut parent, v), root(&mut parent, w));
            if a != b {
                parent[a] = b;
                forced.push(e);
                continue;
            }
            // the edge closes a cycle: measure it through the earlier edges
            let length = forced_path_len(nv, &forced, v, w);
            forced.push(e);
            if length == nv {
                return None;
            }
            return Some(ForcedState {
                forced: forced.iter().map(|&(a, b)| (graph.cell(a), graph.cell(b))).collect(),
                forbidden: Vec::new(),
                contradiction: Some(Contradiction::PrematureCycle { length }),
                log,
            });
        }
    }
    None
}

/// Cells on the path from `a` to `b` using only `edges` (which form a forest).
fn forced_path_len(nv: usize, edges: &[(usize, usize)], a: usize, b: usize) -> usize {
    let mut adj = vec![Vec::new(); nv];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut dist = vec![usize::MAX; nv];
    let mut queue = std::collections::VecDeque::from([a]);
    dist[a] = 1;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist[b]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{build_graph, Board, LeaperSpec};

    fn closure(r: usize, s: usize, m: usize, n: usize) -> ForcedState {
        forced_closure(&build_graph(LeaperSpec::new(r, s).unwrap(), Board::new(m, n).unwrap()))
    }

    #[test]
    fn snag_on_narrow_board() {
        assert!(closure(3, 4, 8, 8).is_contradiction());
        assert!(closure(3, 4, 9, 9).is_contradiction());
    }

    #[test]
    fn short_forced_cycle() {
        let f = closure(2, 3, 7, 7);
        assert_eq!(f.contradiction, Some(Contradiction::PrematureCycle { length: 8 }));
    }

    #[test]
    fn consistent_when_a_circuit_exists() {
        let f = closure(1, 2, 5, 6);
        assert_eq!(f.contradiction, None);
        assert!(!f.forced.is_empty());
    }

    #[test]
    fn log_lists_every_decision() {
        let f = closure(1, 2, 5, 6);
        assert_eq!(f.log.len(), f.forced.len() + f.forbidden.len());
        assert!(f.log.iter().all(|d| d.edge.0 == d.vertex || d.edge.1 == d.vertex));
    }
}
