use std::collections::HashSet;

use crate::board::{BoardGraph, Cell};
use crate::error::{Error, Result};
use crate::tour::Tour;

/// A spanning set of leaper edges in which every vertex has degree 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor<'g> {
    graph: &'g BoardGraph,
    /// The two chosen neighbours of each vertex, smaller first.
    partners: Vec<[usize; 2]>,
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl<'g> TwoFactor<'g> {
    /// Build from an edge list. Every edge must be a leaper edge, appear once,
    /// and every vertex must end up with exactly two edges.
    pub fn from_edges(graph: &'g BoardGraph, edges: &[(usize, usize)]) -> Result<Self> {
        let nv = graph.vertex_count();
        let mut adj: Vec<Vec<usize>> = vec![Vec::with_capacity(2); nv];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= nv || v >= nv || !graph.has_edge(u, v) {
                return Err(Error::Construction(format!(
                    "{} - {} is not a leaper edge",
                    graph.cell(u.min(nv.saturating_sub(1))),
                    graph.cell(v.min(nv.saturating_sub(1)))
                )));
            }
            if !seen.insert(ordered(u, v)) {
                return Err(Error::Construction(format!(
                    "edge {} - {} chosen twice",
                    graph.cell(u),
                    graph.cell(v)
                )));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut partners = Vec::with_capacity(nv);
        for (v, a) in adj.into_iter().enumerate() {
            if a.len() != 2 {
                return Err(Error::Degree {
                    cell: graph.cell(v),
                    degree: a.len(),
                });
            }
            partners.push(if a[0] < a[1] { [a[0], a[1]] } else { [a[1], a[0]] });
        }
        Ok(TwoFactor { graph, partners })
    }

    /// Build from closed cell sequences, each consecutive pair (and the last
    /// with the first) being a chosen edge.
    pub fn from_cycles(graph: &'g BoardGraph, cycles: &[Vec<Cell>]) -> Result<Self> {
        let board = graph.board();
        let mut edges = Vec::new();
        for cyc in cycles {
            for c in cyc {
                if !board.contains(*c) {
                    return Err(Error::OutOfBounds {
                        cell: *c,
                        m: board.m(),
                        n: board.n(),
                    });
                }
            }
            for i in 0..cyc.len() {
                let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
                edges.push((board.index(a), board.index(b)));
            }
        }
        Self::from_edges(graph, &edges)
    }

    pub fn graph(&self) -> &'g BoardGraph {
        self.graph
    }

    pub fn partners(&self, v: usize) -> [usize; 2] {
        self.partners[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.partners[u].contains(&v)
    }

    pub fn has_cell_edge(&self, a: Cell, b: Cell) -> bool {
        let board = self.graph.board();
        board.contains(a) && board.contains(b) && self.has_edge(board.index(a), board.index(b))
    }

    /// Every chosen edge once, `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .partners
            .iter()
            .enumerate()
            .flat_map(|(u, p)| p.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Replace the edges `remove` by `add`; the result must again be a
    /// two-factor.
    pub fn exchange(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Self> {
        let gone: HashSet<(usize, usize)> = remove.iter().map(|&(u, v)| ordered(u, v)).collect();
        for &(u, v) in &gone {
            if !self.has_edge(u, v) {
                return Err(Error::InvalidSplice(format!(
                    "edge {} - {} is not chosen",
                    self.graph.cell(u),
                    self.graph.cell(v)
                )));
            }
        }
        let mut edges: Vec<(usize, usize)> = self.edges().into_iter().filter(|e| !gone.contains(e)).collect();
        edges.extend_from_slice(add);
        Self::from_edges(self.graph, &edges)
    }

    /// The single Hamiltonian circuit, if the two-factor is connected.
    pub fn to_tour(&self) -> Result<Tour> {
        let dec = trace_cycles(self);
        if dec.cycles.len() != 1 {
            return Err(Error::Construction(format!(
                "two-factor has {} cycles, expected 1",
                dec.cycles.len()
            )));
        }
        let g = self.graph;
        Ok(Tour::new(
            g.spec(),
            g.board(),
            dec.cycles.into_iter().next().unwrap(),
            true,
        ))
    }
}

/// Cycles of a two-factor, each starting at its least cell and continuing
/// toward the lesser of that cell's two partners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitDecomposition {
    pub cycles: Vec<Vec<Cell>>,
    /// Index into `cycles` for each vertex.
    pub cycle_of: Vec<usize>,
}

impl CircuitDecomposition {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

pub fn trace_cycles(tf: &TwoFactor<'_>) -> CircuitDecomposition {
    let g = tf.graph;
    let nv = g.vertex_count();
    let mut cycle_of = vec![usize::MAX; nv];
    let mut cycles = Vec::new();
    for start in 0..nv {
        if cycle_of[start] != usize::MAX {
            continue;
        }
        let id = cycles.len();
        let mut cyc = vec![g.cell(start)];
        cycle_of[start] = id;
        let (mut prev, mut cur) = (start, tf.partners[start][0]);
        while cur != start {
            cycle_of[cur] = id;
            cyc.push(g.cell(cur));
            let [a, b] = tf.partners[cur];
            let next = if a == prev { b } else { a };
            prev = cur;
            cur = next;
        }
        cycles.push(cyc);
    }
    CircuitDecomposition { cycles, cycle_of }
}

/// Two chosen edges `u1-u2` and `v1-v2` on different cycles, with `u1 ~ v1`
/// and `u2 ~ v2` in the leaper graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplicePair {
    pub u1: Cell,
    pub u2: Cell,
    pub v1: Cell,
    pub v2: Cell,
}

impl SplicePair {
    pub fn new(u: (Cell, Cell), v: (Cell, Cell)) -> Self {
        SplicePair {
            u1: u.0,
            u2: u.1,
            v1: v.0,
            v2: v.1,
        }
    }

    /// Swap `v1` and `v2` if that is the orientation the graph supports.
    pub fn oriented(self, graph: &BoardGraph) -> Option<SplicePair> {
        if graph.are_adjacent(self.u1, self.v1) && graph.are_adjacent(self.u2, self.v2) {
            Some(self)
        } else if graph.are_adjacent(self.u1, self.v2) && graph.are_adjacent(self.u2, self.v1) {
            Some(SplicePair {
                v1: self.v2,
                v2: self.v1,
                ..self
            })
        } else {
            None
        }
    }
}

/// Replace `u1-u2`, `v1-v2` by `u1-v1`, `u2-v2`, merging two cycles into one.
///
/// A pair given in the crossed orientation (`u1 ~ v2`, `u2 ~ v1`) is
/// accepted and flipped.
pub fn splice<'g>(tf: &TwoFactor<'g>, pair: SplicePair) -> Result<TwoFactor<'g>> {
    let g = tf.graph;
    let pair = pair.oriented(g).ok_or_else(|| {
        Error::InvalidSplice(format!(
            "{} - {} and {} - {} are not cross-adjacent",
            pair.u1, pair.u2, pair.v1, pair.v2
        ))
    })?;
    let [u1, u2, v1, v2] = [pair.u1, pair.u2, pair.v1, pair.v2].map(|c| g.index(c));
    if !tf.has_edge(u1, u2) || !tf.has_edge(v1, v2) {
        return Err(Error::InvalidSplice(format!(
            "{} - {} or {} - {} is not a chosen edge",
            pair.u1, pair.u2, pair.v1, pair.v2
        )));
    }
    let dec = trace_cycles(tf);
    if dec.cycle_of[u1] == dec.cycle_of[v1] {
        return Err(Error::InvalidSplice(format!(
            "{} - {} and {} - {} lie on the same cycle",
            pair.u1, pair.u2, pair.v1, pair.v2
        )));
    }
    tf.exchange(&[(u1, u2), (v1, v2)], &[(u1, v1), (u2, v2)])
}

impl<'g> TwoFactor<'g> {
    pub fn splice(&self, pair: SplicePair) -> Result<TwoFactor<'g>> {
        splice(self, pair)
    }
}
