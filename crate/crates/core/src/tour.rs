//! Tours (closed circuits or open paths) and the verifier used as the oracle
//! for every construction and search result.

use std::fmt;

use crate::board::{Board, BoardGraph, Cell, LeaperSpec};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tour {
    spec: LeaperSpec,
    board: Board,
    order: Vec<Cell>,
    closed: bool,
}

impl Tour {
    /// Wraps a visit sequence without checking it; see [`verify_tour`].
    pub fn new(spec: LeaperSpec, board: Board, order: Vec<Cell>, closed: bool) -> Self {
        Tour {
            spec,
            board,
            order,
            closed,
        }
    }

    pub fn spec(&self) -> LeaperSpec {
        self.spec
    }

    pub fn board(&self) -> Board {
        self.board
    }

    pub fn order(&self) -> &[Cell] {
        &self.order
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Visit index of each cell, indexed by `x * n + y`. Cells not on the
    /// tour hold `usize::MAX`.
    pub fn visit_indices(&self) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.board.area()];
        for (i, &c) in self.order.iter().enumerate() {
            if self.board.contains(c) {
                idx[self.board.index(c)] = i;
            }
        }
        idx
    }

    /// Consecutive pairs of the tour, including the closing pair when closed.
    pub fn moves(&self) -> Vec<(Cell, Cell)> {
        let mut out: Vec<(Cell, Cell)> = self.order.windows(2).map(|w| (w[0], w[1])).collect();
        if self.closed && self.order.len() > 2 {
            out.push((self.order[self.order.len() - 1], self.order[0]));
        }
        out
    }

    /// Canonical representative.
    ///
    /// A closed tour is rotated to start at its least cell and oriented so
    /// the second cell is the lesser of that cell's two tour neighbours. An
    /// open path is reversed if its last cell is less than its first.
    pub fn canonical(&self) -> Tour {
        let mut order = self.order.clone();
        if order.len() > 1 {
            if self.closed {
                let (start, _) = order.iter().enumerate().min_by_key(|&(_, c)| *c).unwrap();
                order.rotate_left(start);
                if order.len() > 2 && order[order.len() - 1] < order[1] {
                    order[1..].reverse();
                }
            } else if order[order.len() - 1] < order[0] {
                order.reverse();
            }
        }
        Tour { order, ..self.clone() }
    }

    /// The tour with `Cell` replaced by its image under a 180 degree rotation.
    pub fn rotated180(&self) -> Tour {
        let order = self.order.iter().map(|&c| self.board.rotate180(c)).collect();
        Tour { order, ..self.clone() }
    }
}

/// First problem found by [`verify_tour`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TourViolation {
    SpecMismatch,
    WrongLength { expected: usize, found: usize },
    OutOfBounds { index: usize, cell: Cell },
    Repeated { index: usize, cell: Cell, first: usize },
    NotAdjacent { index: usize, from: Cell, to: Cell },
    NotClosed { from: Cell, to: Cell },
}

impl fmt::Display for TourViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TourViolation::SpecMismatch => f.write_str("tour and graph disagree on leaper or board"),
            TourViolation::WrongLength { expected, found } => {
                write!(f, "tour has {found} cells, expected {expected}")
            }
            TourViolation::OutOfBounds { index, cell } => {
                write!(f, "step {index}: cell {cell} is off the board")
            }
            TourViolation::Repeated { index, cell, first } => {
                write!(f, "step {index}: cell {cell} already visited at step {first}")
            }
            TourViolation::NotAdjacent { index, from, to } => {
                write!(f, "step {index}: {from} -> {to} is not a leap")
            }
            TourViolation::NotClosed { from, to } => {
                write!(f, "closing step {from} -> {to} is not a leap")
            }
        }
    }
}

impl std::error::Error for TourViolation {}

/// Check that `tour` visits every cell of `graph` exactly once by leaper
/// moves, and closes up if it claims to.
pub fn verify_tour(graph: &BoardGraph, tour: &Tour) -> Result<(), TourViolation> {
    if graph.spec() != tour.spec || graph.board() != tour.board {
        return Err(TourViolation::SpecMismatch);
    }
    let board = graph.board();
    let mut seen = vec![usize::MAX; board.area()];
    for (i, &c) in tour.order.iter().enumerate() {
        if !board.contains(c) {
            return Err(TourViolation::OutOfBounds { index: i, cell: c });
        }
        let v = board.index(c);
        if seen[v] != usize::MAX {
            return Err(TourViolation::Repeated {
                index: i,
                cell: c,
                first: seen[v],
            });
        }
        seen[v] = i;
        if i > 0 && !graph.has_edge(board.index(tour.order[i - 1]), v) {
            return Err(TourViolation::NotAdjacent {
                index: i,
                from: tour.order[i - 1],
                to: c,
            });
        }
    }
    if tour.order.len() != board.area() {
        return Err(TourViolation::WrongLength {
            expected: board.area(),
            found: tour.order.len(),
        });
    }
    if tour.closed && tour.order.len() > 1 {
        let (a, b) = (tour.order[tour.order.len() - 1], tour.order[0]);
        if !graph.are_adjacent(a, b) {
            return Err(TourViolation::NotClosed { from: a, to: b });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::build_graph;

    fn knight_path_3x4() -> Tour {
        Tour::new(
            LeaperSpec::knight(),
            Board::new(3, 4).unwrap(),
            [
                (0, 0),
                (1, 2),
                (2, 0),
                (0, 1),
                (1, 3),
                (2, 1),
                (0, 2),
                (1, 0),
                (2, 2),
                (0, 3),
                (1, 1),
                (2, 3),
            ]
            .into_iter()
            .map(Cell::from)
            .collect(),
            false,
        )
    }

    #[test]
    fn open_path_verifies() {
        let t = knight_path_3x4();
        let g = build_graph(t.spec(), t.board());
        assert_eq!(verify_tour(&g, &t), Ok(()));
        let closed = Tour {
            closed: true,
            ..t.clone()
        };
        assert!(matches!(verify_tour(&g, &closed), Err(TourViolation::NotClosed { .. })));
    }

    #[test]
    fn violations_name_first_index() {
        let t = knight_path_3x4();
        let g = build_graph(t.spec(), t.board());
        let mut order = t.order().to_vec();
        order.swap(3, 4);
        let bad = Tour::new(t.spec(), t.board(), order, false);
        assert!(matches!(
            verify_tour(&g, &bad),
            Err(TourViolation::NotAdjacent { index: 3, .. })
        ));
        let mut order = t.order().to_vec();
        order[5] = order[1];
        let bad = Tour::new(t.spec(), t.board(), order, false);
        assert!(matches!(
            verify_tour(&g, &bad),
            Err(TourViolation::Repeated { index: 5, first: 1, .. })
        ));
        let short = Tour::new(t.spec(), t.board(), t.order()[..5].to_vec(), false);
        assert!(matches!(
            verify_tour(&g, &short),
            Err(TourViolation::WrongLength { .. })
        ));
    }

    #[test]
    fn canonical_open_path() {
        let t = knight_path_3x4();
        let mut rev = t.order().to_vec();
        rev.reverse();
        let r = Tour::new(t.spec(), t.board(), rev, false);
        assert_eq!(r.canonical(), t.canonical());
        assert_eq!(t.canonical().order()[0], Cell::new(0, 0));
    }

    #[test]
    fn canonical_closed_cycle() {
        // 4-cycle on an abstract board; only ordering matters here
        let b = Board::new(2, 2).unwrap();
        let cells: Vec<Cell> = [(1, 1), (0, 1), (0, 0), (1, 0)].into_iter().map(Cell::from).collect();
        let t = Tour::new(LeaperSpec::knight(), b, cells, true);
        let c = t.canonical();
        assert_eq!(
            c.order(),
            &[Cell::new(0, 0), Cell::new(0, 1), Cell::new(1, 1), Cell::new(1, 0)]
        );
        let mut rev = t.order().to_vec();
        rev.reverse();
        assert_eq!(Tour::new(t.spec(), b, rev, true).canonical(), c);
        assert_eq!(t.moves().len(), 4);
    }
}
