//! TSPLIB export with 0/1 weights: 0 for a leaper move, 1 otherwise.
//!
//! A Hamiltonian circuit of weight `w` in the instance uses exactly `w`
//! non-leaper steps, so an optimum of 0 is a closed leaper tour.

use std::fmt::Write as _;

use crate::board::BoardGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TsplibInstance {
    pub name: String,
    pub dimension: usize,
    /// Row-major `dimension x dimension` weights, indexed by `v = x*n + y`.
    pub weights: Vec<u8>,
}

impl TsplibInstance {
    pub fn from_graph(graph: &BoardGraph) -> Self {
        let dim = graph.vertex_count();
        let mut weights = vec![1u8; dim * dim];
        for v in 0..dim {
            weights[v * dim + v] = 0;
            for &u in graph.neighbors(v) {
                weights[v * dim + u] = 0;
            }
        }
        let spec = graph.spec();
        let board = graph.board();
        TsplibInstance {
            name: format!("leaper_{}_{}_{}x{}", spec.r(), spec.s(), board.m(), board.n()),
            dimension: dim,
            weights,
        }
    }

    pub fn weight(&self, u: usize, v: usize) -> u8 {
        self.weights[u * self.dimension + v]
    }

    /// Off-diagonal zero entries; twice the edge count of the source graph.
    pub fn zero_count(&self) -> usize {
        let zeros = self.weights.iter().filter(|&&w| w == 0).count();
        zeros - self.dimension
    }

    /// Weight of the closed circuit visiting `order` (vertex indices).
    pub fn circuit_weight(&self, order: &[usize]) -> usize {
        (0..order.len())
            .map(|i| self.weight(order[i], order[(i + 1) % order.len()]) as usize)
            .sum()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(2 * self.dimension * self.dimension + 256);
        let _ = writeln!(out, "NAME : {}", self.name);
        out.push_str("TYPE : TSP\n");
        out.push_str("COMMENT : weight 0 = leaper move, 1 = any other step\n");
        let _ = writeln!(out, "DIMENSION : {}", self.dimension);
        out.push_str("EDGE_WEIGHT_TYPE : EXPLICIT\n");
        out.push_str("EDGE_WEIGHT_FORMAT : FULL_MATRIX\n");
        out.push_str("EDGE_WEIGHT_SECTION\n");
        for row in self.weights.chunks(self.dimension.max(1)) {
            for (i, w) in row.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push(char::from(b'0' + w));
            }
            out.push('\n');
        }
        out.push_str("EOF\n");
        out
    }
}

pub fn export_tsplib(graph: &BoardGraph) -> String {
    TsplibInstance::from_graph(graph).to_text()
}
