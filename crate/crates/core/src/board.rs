//! Board geometry, leaper moves and the leaper graph.
//!
//! Cells are addressed by `(x, y)` where `x` is the rank (matrix row,
//! increasing southwards) and `y` is the file (matrix column, increasing
//! eastwards). Dense arrays index a cell as `x * n + y`, so vertex order and
//! lexicographic cell order coincide.

use std::fmt;

use crate::error::{Error, Result};

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// The `{r, s}` pair describing a leaper, with `1 <= r <= s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeaperSpec {
    r: usize,
    s: usize,
}

impl LeaperSpec {
    pub fn new(r: usize, s: usize) -> Result<Self> {
        if r == 0 || r > s {
            return Err(Error::InvalidArgument(format!(
                "leaper {{{r},{s}}} must satisfy 1 <= r <= s"
            )));
        }
        Ok(LeaperSpec { r, s })
    }

    /// The knight, `{1,2}`.
    pub fn knight() -> Self {
        LeaperSpec { r: 1, s: 2 }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// `s - r`.
    pub fn d(&self) -> usize {
        self.s - self.r
    }

    /// True when `r + s` and `s - r` are relatively prime. Under this
    /// condition every leap joins cells of opposite `(x + y)` parity.
    pub fn is_coprime(&self) -> bool {
        gcd(self.r + self.s, self.s - self.r) == 1
    }

    /// The distinct `(dx, dy)` offsets of a leap; 8 of them, or 4 when `r == s`.
    pub fn offsets(&self) -> Vec<(isize, isize)> {
        let (r, s) = (self.r as isize, self.s as isize);
        let mut out = Vec::with_capacity(8);
        for (a, b) in [(r, s), (s, r)] {
            for (sa, sb) in [(-1, -1), (-1, 1), (1, -1), (1, 1)] {
                let off = (sa * a, sb * b);
                if !out.contains(&off) {
                    out.push(off);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for LeaperSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.r, self.s)
    }
}

/// An `m x n` board: `m` ranks and `n` files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Board {
    m: usize,
    n: usize,
}

impl Board {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidArgument(format!(
                "board {m}x{n} must have at least one rank and one file"
            )));
        }
        Ok(Board { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn area(&self) -> usize {
        self.m * self.n
    }

    pub fn transpose(&self) -> Board {
        Board { m: self.n, n: self.m }
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.x < self.m && c.y < self.n
    }

    pub fn index(&self, c: Cell) -> usize {
        c.x * self.n + c.y
    }

    pub fn cell(&self, v: usize) -> Cell {
        Cell::new(v / self.n, v % self.n)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.area()).map(move |v| self.cell(v))
    }

    /// The cell obtained by a 180 degree rotation about the board centre.
    pub fn rotate180(&self, c: Cell) -> Cell {
        Cell::new(self.m - 1 - c.x, self.n - 1 - c.y)
    }

    /// Shift `c` by `(dx, dy)`, returning `None` if the result leaves the board.
    pub fn offset(&self, c: Cell, dx: isize, dy: isize) -> Option<Cell> {
        let x = c.x as isize + dx;
        let y = c.y as isize + dy;
        if x < 0 || y < 0 || x >= self.m as isize || y >= self.n as isize {
            None
        } else {
            Some(Cell::new(x as usize, y as usize))
        }
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

/// A board position: rank `x`, file `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: usize,
    pub y: usize,
}

impl Cell {
    pub const fn new(x: usize, y: usize) -> Self {
        Cell { x, y }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(usize, usize)> for Cell {
    fn from((x, y): (usize, usize)) -> Self {
        Cell::new(x, y)
    }
}

/// `(x + y) mod 2`.
pub fn color_class(c: Cell) -> u8 {
    ((c.x + c.y) % 2) as u8
}

/// The eight compass-named leaps. North decreases `x`, East increases `y`,
/// and the first letter names the direction of the long (`s`) component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    NE,
    NW,
    EN,
    ES,
    SE,
    SW,
    WS,
    WN,
}

impl Direction {
    pub const ALL: [Direction; 8] = [
        Direction::NE,
        Direction::NW,
        Direction::EN,
        Direction::ES,
        Direction::SE,
        Direction::SW,
        Direction::WS,
        Direction::WN,
    ];

    pub fn offset(self, spec: LeaperSpec) -> (isize, isize) {
        let (r, s) = (spec.r as isize, spec.s as isize);
        match self {
            Direction::NE => (-s, r),
            Direction::NW => (-s, -r),
            Direction::EN => (-r, s),
            Direction::ES => (r, s),
            Direction::SE => (s, r),
            Direction::SW => (s, -r),
            Direction::WS => (r, -s),
            Direction::WN => (-r, -s),
        }
    }

    /// Left-right reflection: East and West swap.
    pub fn mirror_east_west(self) -> Direction {
        match self {
            Direction::NE => Direction::NW,
            Direction::NW => Direction::NE,
            Direction::EN => Direction::WN,
            Direction::ES => Direction::WS,
            Direction::SE => Direction::SW,
            Direction::SW => Direction::SE,
            Direction::WS => Direction::ES,
            Direction::WN => Direction::EN,
        }
    }

    /// Up-down reflection: North and South swap.
    pub fn mirror_north_south(self) -> Direction {
        match self {
            Direction::NE => Direction::SE,
            Direction::NW => Direction::SW,
            Direction::EN => Direction::ES,
            Direction::ES => Direction::EN,
            Direction::SE => Direction::NE,
            Direction::SW => Direction::NW,
            Direction::WS => Direction::WN,
            Direction::WN => Direction::WS,
        }
    }
}

/// In-bounds leaper neighbours of `c`, deduplicated and sorted by `(x, y)`.
pub fn neighbors(spec: LeaperSpec, board: Board, c: Cell) -> Result<Vec<Cell>> {
    if !board.contains(c) {
        return Err(Error::OutOfBounds {
            cell: c,
            m: board.m,
            n: board.n,
        });
    }
    let mut out: Vec<Cell> = spec
        .offsets()
        .into_iter()
        .filter_map(|(dx, dy)| board.offset(c, dx, dy))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// The leaper graph on a board. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoardGraph {
    spec: LeaperSpec,
    board: Board,
    adjacency: Vec<Vec<usize>>,
}

impl BoardGraph {
    pub fn new(spec: LeaperSpec, board: Board) -> Self {
        let offsets = spec.offsets();
        let adjacency = board
            .cells()
            .map(|c| {
                let mut adj: Vec<usize> = offsets
                    .iter()
                    .filter_map(|&(dx, dy)| board.offset(c, dx, dy))
                    .map(|t| board.index(t))
                    .collect();
                adj.sort_unstable();
                adj.dedup();
                adj
            })
            .collect();
        BoardGraph { spec, board, adjacency }
    }

    pub fn spec(&self) -> LeaperSpec {
        self.spec
    }

    pub fn board(&self) -> Board {
        self.board
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn are_adjacent(&self, a: Cell, b: Cell) -> bool {
        self.board.contains(a) && self.board.contains(b) && self.has_edge(self.index(a), self.index(b))
    }

    pub fn index(&self, c: Cell) -> usize {
        self.board.index(c)
    }

    pub fn cell(&self, v: usize) -> Cell {
        self.board.cell(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }
}

/// Build the `{r,s}`-leaper graph on an `m x n` board.
pub fn build_graph(spec: LeaperSpec, board: Board) -> BoardGraph {
    BoardGraph::new(spec, board)
}
