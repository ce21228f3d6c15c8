//! Circuits for the `{1, 2k}` leaper on the `(4k+2) x (4k+2)` board, `k >= 3`.
//!
//! Six circuits are laid out explicitly: a basic circuit through the named
//! border vertices, its left-right complement, and four circuits `W`, `X`,
//! `Y`, `Z` through the interior blocks. Five splices join them.

use crate::board::{build_graph, Board, Cell, LeaperSpec};
use crate::error::{Error, Result};
use crate::tour::Tour;

use super::engine::{trace_cycles, SplicePair, TwoFactor};

#[derive(Debug, Clone, Copy)]
struct Geometry {
    k: usize,
}

impl Geometry {
    fn side(&self) -> usize {
        4 * self.k + 2
    }

    fn bar(&self, c: Cell) -> Cell {
        Cell::new(c.x, self.side() - 1 - c.y)
    }

    fn prime(&self, c: Cell) -> Cell {
        Cell::new(self.side() - 1 - c.x, c.y)
    }

    /// Interior block cell with superscript `a`, row `i`, column `j`
    /// (both 1-based). `kind` 0..4 stands for W, X, Y, Z.
    fn block(&self, kind: usize, a: usize, i: usize, j: usize) -> Cell {
        let k = self.k;
        // (row offset, column offset) of W, X, Y, Z within each quadrant
        let (dx, dy) = match (a, kind) {
            (0, 0) => (1, 0),
            (0, 1) => (1, 1),
            (0, 2) => (2, 0),
            (0, 3) => (2, 1),
            (1, 0) => (2, 2 * k),
            (1, 1) => (2, 2 * k + 1),
            (1, 2) => (1, 2 * k),
            (1, 3) => (1, 2 * k + 1),
            (2, 0) => (2 * k + 1, 1),
            (2, 1) => (2 * k + 1, 0),
            (2, 2) => (2 * k + 2, 1),
            (2, 3) => (2 * k + 2, 0),
            (3, 0) => (2 * k + 2, 2 * k + 1),
            (3, 1) => (2 * k + 2, 2 * k),
            (3, 2) => (2 * k + 1, 2 * k + 1),
            (3, 3) => (2 * k + 1, 2 * k),
            _ => unreachable!("superscript and kind are below 4"),
        };
        Cell::new(2 * i + dx, 2 * j + dy)
    }

    fn a(&self, t: usize) -> Cell {
        let k = self.k;
        match t {
            1 => Cell::new(1, 2 * k),
            2 => Cell::new(0, 4 * k),
            3 => Cell::new(2 * k, 4 * k - 1),
            _ => Cell::new(2 * k + 1, 2 * k - 1),
        }
    }

    fn b(&self, i: usize, t: usize) -> Cell {
        let k = self.k;
        match t {
            1 => Cell::new(1, 2 * k - 2 * i),
            2 => Cell::new(0, 4 * k - 2 * i),
            3 => Cell::new(2 * k, 4 * k - 2 * i - 1),
            4 => Cell::new(4 * k, 4 * k - 2 * i),
            5 => Cell::new(4 * k + 1, 2 * k - 2 * i),
            _ => Cell::new(2 * k + 1, 2 * k - 2 * i - 1),
        }
    }

    fn d(&self, j: usize) -> Cell {
        let k = self.k;
        Cell::new(if j % 2 == 1 { 4 * k - 1 } else { 2 * k - 1 }, j + 1)
    }

    fn e(&self, p: usize, t: usize) -> Cell {
        let k = self.k;
        match t {
            1 => Cell::new(4 * k - 4 * p + 2, 0),
            2 => Cell::new(2 * k - 4 * p + 2, 1),
            _ => Cell::new(2 * k - 4 * p + 1, 2 * k + 1),
        }
    }

    fn f(&self, q: usize, t: usize) -> Cell {
        let k = self.k;
        match t {
            1 => Cell::new(2 * k - 4 * q, 1),
            2 => Cell::new(4 * k - 4 * q, 0),
            _ => Cell::new(4 * k - 4 * q - 1, 2 * k),
        }
    }

    fn g(&self, j: usize) -> Cell {
        let k = self.k;
        if j % 2 == 1 {
            Cell::new(2 * k + 2, j - 1)
        } else {
            Cell::new(2, j - 1)
        }
    }

    fn h(&self, t: usize) -> Cell {
        let k = self.k;
        match t {
            1 => Cell::new(1, 4 * k - 1),
            2 => Cell::new(0, 2 * k - 1),
            3 => Cell::new(2 * k, 2 * k),
            4 => Cell::new(2 * k - 1, 4 * k),
            _ => Cell::new(4 * k - 1, 4 * k + 1),
        }
    }

    // The I and J triples sit two files right of Y blocks in the last block
    // column; which quadrants they use depends on the parity of k.
    fn i(&self, p: usize, t: usize) -> Cell {
        let k = self.k;
        let high = [
            Cell::new(4 * k - 4 * p + 2, 2 * k + 1),
            Cell::new(4 * k - 4 * p + 1, 4 * k + 1),
            Cell::new(2 * k - 4 * p + 1, 4 * k),
        ];
        let low = [
            Cell::new(2 * k - 4 * p + 2, 2 * k),
            Cell::new(2 * k - 4 * p + 1, 4 * k),
            Cell::new(4 * k - 4 * p + 1, 4 * k + 1),
        ];
        if k % 2 == 0 {
            high[t - 1]
        } else {
            low[t - 1]
        }
    }

    fn j(&self, q: usize, t: usize) -> Cell {
        let k = self.k;
        let low = [
            Cell::new(2 * k - 4 * q, 2 * k),
            Cell::new(2 * k - 4 * q - 1, 4 * k),
            Cell::new(4 * k - 4 * q - 1, 4 * k + 1),
        ];
        let high = [
            Cell::new(4 * k - 4 * q, 2 * k + 1),
            Cell::new(4 * k - 4 * q - 1, 4 * k + 1),
            Cell::new(2 * k - 4 * q - 1, 4 * k),
        ];
        if k % 2 == 0 {
            low[t - 1]
        } else {
            high[t - 1]
        }
    }

    fn kk(&self, t: usize) -> Cell {
        let k = self.k;
        match t {
            1 => Cell::new(2 * k + 2, 2 * k + 1),
            2 => Cell::new(2 * k + 1, 4 * k + 1),
            3 => Cell::new(1, 4 * k),
            4 => Cell::new(0, 2 * k),
            5 => Cell::new(1, 0),
            _ => Cell::new(2 * k + 1, 1),
        }
    }

    /// One half of the basic circuit, from `O` through `K_6`.
    fn basic_half(&self) -> Vec<Cell> {
        let k = self.k;
        let s = 2 * k;
        let l = k / 2 - if k % 2 == 0 { 1 } else { 0 };
        let mut out = vec![Cell::new(0, 0)];
        out.extend((1..=4).map(|t| self.a(t)));
        for i in 1..=k - 2 {
            out.extend((1..=6).map(|t| self.b(i, t)));
        }
        out.push(Cell::new(4 * k + 1, 2));
        out.push(Cell::new(4 * k, 2 * k + 2));
        out.extend((1..s).map(|j| self.d(j)));
        if k % 2 == 0 {
            for p in 1..=l {
                out.extend((1..=3).map(|t| self.e(p, t)));
                out.extend((1..=3).map(|t| self.f(p, t)));
            }
            out.extend((1..=s).map(|j| self.g(j)));
            out.extend((1..=5).map(|t| self.h(t)));
            for p in 1..=l {
                out.extend((1..=3).map(|t| self.i(p, t)));
                out.extend((1..=3).map(|t| self.j(p, t)));
            }
        } else {
            for p in 1..=l {
                out.extend((1..=3).map(|t| self.e(p, t)));
                if p < l {
                    out.extend((1..=3).map(|t| self.f(p, t)));
                }
            }
            out.extend((1..=5).rev().map(|t| self.prime(self.h(t))));
            out.extend((1..=s).rev().map(|j| self.prime(self.g(j))));
            for p in 1..=l {
                out.extend((1..=3).map(|t| self.i(p, t)));
                if p < l {
                    out.extend((1..=3).map(|t| self.j(p, t)));
                }
            }
        }
        out.extend((1..=6).map(|t| self.kk(t)));
        out
    }

    fn basic(&self) -> Vec<Cell> {
        let half = self.basic_half();
        let mut out = half.clone();
        out.extend(half.iter().map(|&c| self.prime(c)));
        out
    }

    /// The interior circuit of one block kind. `sup` maps the four roles of
    /// the pattern to superscripts.
    fn interior(&self, kind: usize, sup: [usize; 4]) -> Vec<Cell> {
        let k = self.k;
        let (ii, jj) = (k - 2, k - 1);
        let at = |a: usize, i: usize, j: usize| self.block(kind, a, i, j);
        let mut out = Vec::new();
        for i in 1..=ii {
            out.push(at(sup[0], i, 1));
            out.push(at(sup[1], i, 1));
        }
        for l in (1..=ii).rev() {
            out.push(at(sup[3], l, 1));
            for c in 2..=jj {
                out.push(at(sup[1], l, c));
                out.push(at(sup[3], l, c));
            }
            for c in (2..=jj).rev() {
                out.push(at(sup[2], l, c));
                out.push(at(sup[0], l, c));
            }
            out.push(at(sup[2], l, 1));
        }
        out
    }
}

const W: usize = 0;
const X: usize = 1;
const Y: usize = 2;
const Z: usize = 3;

fn check_k(k: usize) -> Result<Geometry> {
    if k < 3 {
        return Err(Error::Unsupported(format!(
            "the {{1,2k}} square layout needs k >= 3, got {k}"
        )));
    }
    Ok(Geometry { k })
}

/// The six circuits: basic, its complement, then `W`, `X`, `Y`, `Z`.
pub fn long_square_circuits(k: usize) -> Result<Vec<Vec<Cell>>> {
    let geo = check_k(k)?;
    let basic = geo.basic();
    let complement = basic.iter().map(|&c| geo.bar(c)).collect();
    Ok(vec![
        basic,
        complement,
        geo.interior(W, [0, 1, 2, 3]),
        geo.interior(X, [2, 3, 0, 1]),
        geo.interior(Y, [1, 0, 3, 2]),
        geo.interior(Z, [3, 2, 1, 0]),
    ])
}

/// The five splices, in application order.
///
/// The last pair pairs `Z^2_ij, Z^0_ij` with two consecutive `G` cells of the
/// complemented primed basic circuit; it is found by searching those cells.
pub fn long_square_splices(k: usize) -> Result<Vec<SplicePair>> {
    let geo = check_k(k)?;
    let (i, j) = (k - 2, k - 1);
    let graph = build_graph(spec(k), board(k));
    let bp = |c: Cell| geo.bar(geo.prime(c));
    let mut pairs = vec![
        SplicePair::new(
            (geo.e(1, 2), geo.e(1, 3)),
            (geo.block(Z, 2, i, 1), geo.block(Z, 3, i, 1)),
        ),
        SplicePair::new(
            (geo.prime(geo.e(1, 2)), geo.prime(geo.e(1, 3))),
            (geo.block(W, 0, 1, 1), geo.block(W, 1, 1, 1)),
        ),
        SplicePair::new(
            (geo.bar(geo.d(2)), geo.bar(geo.d(3))),
            (geo.block(Y, 2, i, i), geo.block(Y, 0, i, j)),
        ),
        SplicePair::new(
            (bp(geo.d(2)), bp(geo.d(3))),
            (geo.block(X, 0, 1, i), geo.block(X, 2, 1, j)),
        ),
    ];
    let target = (geo.block(Z, 2, i, j), geo.block(Z, 0, i, j));
    let s = 2 * k;
    let found: Vec<SplicePair> = (1..s)
        .map(|a| SplicePair::new((bp(geo.g(a)), bp(geo.g(a + 1))), target))
        .filter_map(|p| p.oriented(&graph))
        .collect();
    match found.as_slice() {
        [p] => pairs.push(*p),
        _ => {
            return Err(Error::Construction(format!(
                "expected one G pair adjacent to the Z block, found {}",
                found.len()
            )))
        }
    }
    Ok(pairs)
}

fn spec(k: usize) -> LeaperSpec {
    LeaperSpec::new(1, 2 * k).expect("k >= 1")
}

fn board(k: usize) -> Board {
    Board::new(4 * k + 2, 4 * k + 2).expect("positive side")
}

/// A closed `{1, 2k}` tour of the `(4k+2) x (4k+2)` board.
pub fn construct_thm5(k: usize) -> Result<Tour> {
    let circuits = long_square_circuits(k)?;
    let graph = build_graph(spec(k), board(k));
    let mut tf = TwoFactor::from_cycles(&graph, &circuits)?;
    let mut count = trace_cycles(&tf).len();
    if count != 6 {
        return Err(Error::Construction(format!("expected 6 circuits, traced {count}")));
    }
    for pair in long_square_splices(k)? {
        tf = tf.splice(pair)?;
        let now = trace_cycles(&tf).len();
        if now + 1 != count {
            return Err(Error::Construction(format!(
                "splice left {now} circuits, expected {}",
                count - 1
            )));
        }
        count = now;
    }
    tf.to_tour()
}
