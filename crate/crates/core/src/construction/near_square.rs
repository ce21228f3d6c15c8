//! Circuits for the `{r, r+1}` leaper on the `(4r+2) x (4r+2)` board.
//!
//! The top-left `(2r+1) x (2r+1)` quadrant is laid out by hand: a few named
//! link vertices, and blocks of unnamed vertices that all use the same pair of
//! directions. The other quadrants are reflections. A bar (`complement`)
//! reflects left-right and swaps East with West; a prime reflects up-down and
//! swaps North with South. Every vertex gets exactly two directions, which
//! yields two cycles; one double exchange merges them.

use crate::board::{build_graph, Board, BoardGraph, Cell, Direction, LeaperSpec};
use crate::error::{Error, Result};
use crate::tour::Tour;

use super::engine::TwoFactor;

/// The named link vertices of the quadrant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NearSquareBase {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F(usize),
    X,
}

/// A named vertex together with its reflections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NearSquareName {
    pub base: NearSquareBase,
    pub bar: bool,
    pub prime: bool,
}

impl NearSquareName {
    pub fn plain(base: NearSquareBase) -> Self {
        NearSquareName {
            base,
            bar: false,
            prime: false,
        }
    }

    pub fn bar(self) -> Self {
        NearSquareName { bar: !self.bar, ..self }
    }

    pub fn prime(self) -> Self {
        NearSquareName {
            prime: !self.prime,
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    Block(Direction, Direction),
    Named(NearSquareBase),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NearSquareLayout {
    r: usize,
}

impl NearSquareLayout {
    pub fn new(r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::Unsupported("the near-square layout needs r >= 1".into()));
        }
        Ok(NearSquareLayout { r })
    }

    pub fn spec(&self) -> LeaperSpec {
        LeaperSpec::new(self.r, self.r + 1).expect("r >= 1")
    }

    pub fn board(&self) -> Board {
        let side = 4 * self.r + 2;
        Board::new(side, side).expect("positive side")
    }

    fn side(&self) -> usize {
        4 * self.r + 2
    }

    fn quadrant_label(&self, x: usize, y: usize) -> Label {
        use Direction::*;
        use NearSquareBase as N;
        let r = self.r;
        if x < r {
            match y {
                y if y < r => Label::Block(SE, ES),
                y if y == r => Label::Named(N::D(x + 1)),
                y if y < 2 * r => Label::Block(SW, WS),
                _ => Label::Named(N::A(r - x)),
            }
        } else if x == r {
            match y {
                y if y < r => Label::Named(N::B(y + 1)),
                y if y == r => Label::Named(N::F(r)),
                _ => Label::Named(N::E(2 * r + 1 - y)),
            }
        } else if x < 2 * r {
            match y {
                y if y < r => Label::Block(NE, EN),
                y if y == r => Label::Named(N::F(2 * r - x)),
                _ => Label::Block(NW, WN),
            }
        } else {
            match y {
                0 => Label::Named(N::X),
                y if y < r => Label::Block(NE, EN),
                _ => Label::Named(N::C(y - r)),
            }
        }
    }

    fn base_directions(&self, base: NearSquareBase) -> [Direction; 2] {
        use Direction::*;
        use NearSquareBase as N;
        let r = self.r;
        match base {
            N::A(_) => [WS, ES],
            N::B(_) => [SE, EN],
            N::C(j) if j == r => [NW, SE],
            N::C(_) => [NW, SW],
            N::D(_) => [SE, SW],
            N::E(j) if j == r => [WN, SE],
            N::E(_) => [WN, WS],
            N::F(j) if j == r => [SW, EN],
            N::F(_) => [NW, EN],
            N::X => [NE, SE],
        }
    }

    /// The two directions assigned to a cell.
    pub fn directions(&self, c: Cell) -> [Direction; 2] {
        let half = 2 * self.r;
        let last = self.side() - 1;
        let bar = c.y > half;
        let prime = c.x > half;
        let qx = if prime { last - c.x } else { c.x };
        let qy = if bar { last - c.y } else { c.y };
        let dirs = match self.quadrant_label(qx, qy) {
            Label::Block(a, b) => [a, b],
            Label::Named(n) => self.base_directions(n),
        };
        dirs.map(|d| {
            let d = if bar { d.mirror_east_west() } else { d };
            if prime {
                d.mirror_north_south()
            } else {
                d
            }
        })
    }

    /// The cell carrying a given name.
    pub fn locate(&self, name: NearSquareName) -> Result<Cell> {
        use NearSquareBase as N;
        let r = self.r;
        let in_range = |j: usize, lo: usize| (lo..=r).contains(&j);
        let (x, y) = match name.base {
            N::A(j) if in_range(j, 1) => (r - j, 2 * r),
            N::B(j) if in_range(j, 1) => (r, j - 1),
            N::C(j) if in_range(j, 0) => (2 * r, r + j),
            N::D(j) if in_range(j, 1) => (j - 1, r),
            N::E(j) if in_range(j, 1) => (r, 2 * r + 1 - j),
            N::F(j) if in_range(j, 1) => (2 * r - j, r),
            N::X => (2 * r, 0),
            other => {
                return Err(Error::InvalidArgument(format!(
                    "{other:?} is not a vertex name for r = {r}"
                )))
            }
        };
        let last = self.side() - 1;
        Ok(Cell::new(
            if name.prime { last - x } else { x },
            if name.bar { last - y } else { y },
        ))
    }

    /// The edge list implied by the direction assignment, each edge once.
    /// Fails if a direction leaves the board or is not reciprocated.
    pub fn edges(&self) -> Result<Vec<(usize, usize)>> {
        let spec = self.spec();
        let board = self.board();
        let mut edges = Vec::with_capacity(board.area());
        for c in board.cells() {
            for d in self.directions(c) {
                let (dx, dy) = d.offset(spec);
                let t = board
                    .offset(c, dx, dy)
                    .ok_or_else(|| Error::Construction(format!("{d:?} from {c} leaves the board")))?;
                let back = self
                    .directions(t)
                    .iter()
                    .any(|&e| board.offset(t, e.offset(spec).0, e.offset(spec).1) == Some(c));
                if !back {
                    return Err(Error::Construction(format!(
                        "{d:?} from {c} to {t} is not reciprocated"
                    )));
                }
                let (u, v) = (board.index(c), board.index(t));
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Ok(edges)
    }

    /// The exchange that merges the two cycles: drop `F'_r-X`, `C_r-bar E'_r`
    /// and their rotated images, and join `F'_r-C_r`, `X-E_r` and images.
    pub fn merge_exchange(&self) -> Result<(Vec<(usize, usize)>, Vec<(usize, usize)>)> {
        use NearSquareBase as N;
        let r = self.r;
        let board = self.board();
        let idx = |n: NearSquareName| self.locate(n).map(|c| board.index(c));
        let f = NearSquareName::plain(N::F(r)).prime();
        let x = NearSquareName::plain(N::X);
        let c = NearSquareName::plain(N::C(r));
        let e = NearSquareName::plain(N::E(r));
        let eb = e.bar().prime();
        // images under the half turn (bar and prime together)
        let half = |n: NearSquareName| n.bar().prime();
        let remove = vec![
            (idx(f)?, idx(x)?),
            (idx(c)?, idx(eb)?),
            (idx(half(f))?, idx(half(x))?),
            (idx(half(c))?, idx(half(eb))?),
        ];
        let add = vec![
            (idx(f)?, idx(c)?),
            (idx(x)?, idx(e)?),
            (idx(half(f))?, idx(half(c))?),
            (idx(half(x))?, idx(half(e))?),
        ];
        Ok((remove, add))
    }
}

/// The two-cycle two-factor before merging.
pub fn near_square_two_factor(graph: &BoardGraph) -> Result<TwoFactor<'_>> {
    let r = graph.spec().r();
    let layout = NearSquareLayout::new(r)?;
    if graph.spec() != layout.spec() || graph.board() != layout.board() {
        return Err(Error::InvalidArgument(format!(
            "graph must be {} on {}",
            layout.spec(),
            layout.board()
        )));
    }
    TwoFactor::from_edges(graph, &layout.edges()?)
}

/// A closed `{r, r+1}` tour of the `(4r+2) x (4r+2)` board.
pub fn construct_thm4(r: usize) -> Result<Tour> {
    let layout = NearSquareLayout::new(r)?;
    let graph = build_graph(layout.spec(), layout.board());
    let tf = near_square_two_factor(&graph)?;
    let (remove, add) = layout.merge_exchange()?;
    tf.exchange(&remove, &add)?.to_tour()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::trace_cycles;
    use crate::tour::verify_tour;
    use NearSquareBase as N;

    #[test]
    fn names_match_small_diagram() {
        let l = NearSquareLayout::new(4).unwrap();
        let at = |b, bar, prime| l.locate(NearSquareName { base: b, bar, prime }).unwrap();
        assert_eq!(at(N::D(1), false, false), Cell::new(0, 4));
        assert_eq!(at(N::A(4), false, false), Cell::new(0, 8));
        assert_eq!(at(N::A(4), true, false), Cell::new(0, 9));
        assert_eq!(at(N::F(3), false, false), Cell::new(5, 4));
        assert_eq!(at(N::X, false, true), Cell::new(9, 0));
        assert_eq!(at(N::C(0), false, true), Cell::new(9, 4));
        assert_eq!(at(N::E(1), true, false), Cell::new(4, 9));
        assert_eq!(at(N::D(4), false, true), Cell::new(14, 4));
        assert_eq!(at(N::A(1), false, true), Cell::new(14, 8));
    }

    #[test]
    fn reflected_directions() {
        use Direction::*;
        let l = NearSquareLayout::new(4).unwrap();
        // bar F'_r goes NE, WS
        let c = l.locate(NearSquareName::plain(N::F(4)).bar().prime()).unwrap();
        let mut d = l.directions(c).to_vec();
        d.sort_by_key(|d| format!("{d:?}"));
        assert_eq!(d, vec![NE, WS]);
        // B'_j goes NE, ES
        let c = l.locate(NearSquareName::plain(N::B(2)).prime()).unwrap();
        let mut d = l.directions(c).to_vec();
        d.sort_by_key(|d| format!("{d:?}"));
        assert_eq!(d, vec![ES, NE]);
    }

    #[test]
    fn exactly_two_cycles_split_by_parity() {
        for r in 1..=8 {
            let l = NearSquareLayout::new(r).unwrap();
            let g = build_graph(l.spec(), l.board());
            let tf = near_square_two_factor(&g).unwrap();
            let dec = trace_cycles(&tf);
            assert_eq!(dec.len(), 2, "r = {r}");
            let id = |n: NearSquareName| dec.cycle_of[g.index(l.locate(n).unwrap())];
            let x = NearSquareName::plain(N::X);
            if r % 2 == 0 {
                assert_eq!(id(x), id(x.bar()));
                assert_eq!(id(x.prime()), id(x.bar().prime()));
                assert_ne!(id(x), id(x.prime()));
            } else {
                assert_eq!(id(x), id(x.prime()));
                assert_eq!(id(x.bar()), id(x.bar().prime()));
                assert_ne!(id(x), id(x.bar()));
            }
        }
    }

    #[test]
    fn edge_set_is_reflection_symmetric() {
        for r in 1..=6 {
            let l = NearSquareLayout::new(r).unwrap();
            let b = l.board();
            let edges: std::collections::HashSet<(Cell, Cell)> = l
                .edges()
                .unwrap()
                .into_iter()
                .map(|(u, v)| (b.cell(u), b.cell(v)))
                .collect();
            let last = b.m() - 1;
            let has = |a: Cell, c: Cell| edges.contains(&(a, c)) || edges.contains(&(c, a));
            for &(a, c) in &edges {
                let lr = |p: Cell| Cell::new(p.x, last - p.y);
                let ud = |p: Cell| Cell::new(last - p.x, p.y);
                assert!(has(lr(a), lr(c)));
                assert!(has(ud(a), ud(c)));
            }
        }
    }

    #[test]
    fn tours_verify() {
        for r in 1..=8 {
            let t = construct_thm4(r).unwrap();
            let g = build_graph(t.spec(), t.board());
            assert_eq!(verify_tour(&g, &t), Ok(()), "r = {r}");
            assert!(t.closed());
            assert_eq!(t.len(), (4 * r + 2) * (4 * r + 2));
        }
    }

    #[test]
    fn rejects_zero() {
        assert!(matches!(construct_thm4(0), Err(Error::Unsupported(_))));
    }
}
