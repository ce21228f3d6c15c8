//! Circuits for the `{1, 2k}` leaper on the `(4k+1) x (4k+2)` board, `k >= 2`.
//!
//! A Hamiltonian path through the left-half names (rows of `A` blocks joined
//! by `B` vertices, plus the `X`, `Y`, `Z` links) runs from `B_{2k-2}` to the
//! complement of `B_{2k-2}`; that path and its left-right mirror close up.

use crate::board::{build_graph, Board, Cell, LeaperSpec};
use crate::error::{Error, Result};
use crate::tour::Tour;

use super::engine::TwoFactor;

#[derive(Debug, Clone, Copy)]
struct Geometry {
    k: usize,
}

impl Geometry {
    fn width(&self) -> usize {
        4 * self.k + 2
    }

    fn bar(&self, c: Cell) -> Cell {
        Cell::new(c.x, self.width() - 1 - c.y)
    }

    /// `A^j_i` for `2 < j < 2k`, `1 <= i <= 4k`.
    fn a(&self, j: usize, i: usize) -> Cell {
        let k = self.k;
        let (t, u) = ((i - 1) / 4, (i - 1) % 4 + 1);
        match u {
            1 => Cell::new(2 * t, j),
            2 => Cell::new(2 * t + 1, j + 2 * k),
            3 => Cell::new(2 * t + 2 * k + 1, j + 2 * k - 1),
            _ => Cell::new(2 * t + 2 * k + 2, j - 1),
        }
    }

    fn b(&self, j: usize) -> Cell {
        Cell::new(2 * self.k, j)
    }

    fn x(&self, i: usize) -> Cell {
        let k = self.k;
        let (t, u) = ((i - 1) / 8, (i - 1) % 8 + 1);
        match u {
            1 => Cell::new(2 * t, 2),
            2 => Cell::new(2 * t + 1, 2 * k + 2),
            3 => Cell::new(2 * t + 2 * k + 1, 2 * k + 1),
            4 => Cell::new(2 * t + 2 * k + 2, 4 * k + 1),
            5 => Cell::new(2 * t + 2, 4 * k),
            6 => Cell::new(2 * t + 3, 2 * k),
            7 => Cell::new(2 * t + 2, 0),
            _ => Cell::new(2 * t + 2 * k + 2, 1),
        }
    }

    fn y(&self, i: usize) -> Cell {
        let k = self.k;
        let (t, u) = ((i - 1) / 8, (i - 1) % 8 + 1);
        match u {
            1 => Cell::new(2 * t, 2 * k + 1),
            2 => Cell::new(2 * t + 1, 4 * k + 1),
            3 => Cell::new(2 * t + 2 * k + 1, 4 * k),
            4 => Cell::new(2 * t + 2 * k + 2, 2 * k),
            5 => Cell::new(2 * t + 2 * k + 1, 0),
            6 => Cell::new(2 * t + 1, 1),
            7 => Cell::new(2 * t + 2 * k + 1, 2),
            _ => Cell::new(2 * t + 2 * k + 2, 2 * k + 2),
        }
    }

    fn z(&self, i: usize) -> Cell {
        let k = self.k;
        match i {
            1 => Cell::new(2 * k, 4 * k),
            2 => Cell::new(0, 4 * k + 1),
            3 => Cell::new(1, 2 * k + 1),
            4 => Cell::new(0, 1),
            5 => Cell::new(2 * k, 0),
            _ => Cell::new(4 * k, 1),
        }
    }

    /// `A^j_{4k}, ..., A^j_1`.
    fn a_row_reversed(&self, j: usize) -> impl Iterator<Item = Cell> + '_ {
        (1..=4 * self.k).rev().map(move |i| self.a(j, i))
    }

    /// `B_{j-2}, A^j reversed, B_{j+1}, A^{j+1} reversed` for even `j`.
    fn alpha(&self, j: usize) -> Vec<Cell> {
        let mut out = vec![self.b(j - 2)];
        out.extend(self.a_row_reversed(j));
        out.push(self.b(j + 1));
        out.extend(self.a_row_reversed(j + 1));
        out
    }

    /// The path from `B_{2k-2}` through every uncomplemented name, ending at
    /// `Y_{8k}` (whose successor is the complement of `B_{2k-2}`).
    fn half_path(&self) -> Vec<Cell> {
        let k = self.k;
        // `first` runs through the X and Z links, `second` starts with B_3
        let mut first: Vec<Cell> = (1..=8 * k - 4).map(|i| self.x(i)).collect();
        first.extend((1..=6).map(|i| self.z(i)));
        let mut second = vec![self.x(1), self.b(3)];
        second.extend(self.a_row_reversed(3));
        let mut j = 4;
        while j < 2 * k {
            if j % 4 == 0 {
                first.extend(self.alpha(j));
            } else {
                second.extend(self.alpha(j));
            }
            j += 2;
        }
        let (mut low, mut high) = if k % 2 == 0 { (first, second) } else { (second, first) };
        low.push(self.b(2 * k - 2));
        high.push(self.b(2 * k));
        // walk `low` backwards from B_{2k-2} to X_1, then `high` forwards
        let mut out: Vec<Cell> = low.into_iter().rev().collect();
        out.extend(high.into_iter().skip(1));
        out.extend((1..=8 * k).map(|i| self.y(i)));
        out
    }
}

/// A closed `{1, 2k}` tour of the `(4k+1) x (4k+2)` board.
pub fn construct_thm6(k: usize) -> Result<Tour> {
    if k < 2 {
        return Err(Error::Unsupported(format!(
            "the {{1,2k}} oblong layout needs k >= 2, got {k}"
        )));
    }
    let geo = Geometry { k };
    let spec = LeaperSpec::new(1, 2 * k)?;
    let board = Board::new(4 * k + 1, 4 * k + 2)?;
    let graph = build_graph(spec, board);
    let half = geo.half_path();
    let mut circuit = half.clone();
    circuit.extend(half.iter().map(|&c| geo.bar(c)));
    // route through the two-factor engine so the layout is checked edge by edge
    TwoFactor::from_cycles(&graph, &[circuit])?.to_tour()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tour::verify_tour;

    #[test]
    fn names_match_k4_diagram() {
        let g = Geometry { k: 4 };
        assert_eq!(g.a(3, 1), Cell::new(0, 3));
        assert_eq!(g.a(7, 2), Cell::new(1, 15));
        assert_eq!(g.a(3, 3), Cell::new(9, 10));
        assert_eq!(g.a(3, 4), Cell::new(10, 2));
        assert_eq!(g.a(5, 10), Cell::new(5, 13));
        assert_eq!(g.b(8), Cell::new(8, 8));
        assert_eq!(g.x(6), Cell::new(3, 8));
        assert_eq!(g.x(28), Cell::new(16, 17));
        assert_eq!(g.y(14), Cell::new(3, 1));
        assert_eq!(g.y(32), Cell::new(16, 10));
        assert_eq!(g.z(3), Cell::new(1, 9));
        assert_eq!(g.z(6), Cell::new(16, 1));
    }

    #[test]
    fn half_path_covers_half_the_board() {
        for k in 2..=8 {
            let g = Geometry { k };
            let h = g.half_path();
            assert_eq!(h.len(), (4 * k + 1) * (2 * k + 1));
            assert_eq!(h[0], g.b(2 * k - 2));
        }
    }

    #[test]
    fn tours_verify() {
        for k in 2..=8 {
            let t = construct_thm6(k).unwrap();
            let g = build_graph(t.spec(), t.board());
            assert_eq!(verify_tour(&g, &t), Ok(()), "k = {k}");
        }
        assert!(matches!(construct_thm6(1), Err(Error::Unsupported(_))));
    }
}
