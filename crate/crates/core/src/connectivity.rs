//! Exact connectivity of leaper graphs, an independent BFS oracle, and the
//! explicit paths used to argue reachability on narrow boards.

use std::collections::VecDeque;
use std::fmt;

use crate::board::{gcd, Board, BoardGraph, Cell, LeaperSpec};
use crate::error::{Error, Result};

/// Which of the three connectivity conditions decided the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConnectivityReason {
    /// `r + s` and `s - r` share a factor.
    CoprimeFail,
    /// The long side is shorter than `2s`.
    TooShort,
    /// The short side is narrower than `r + s`.
    TooNarrow,
    Satisfied,
}

impl fmt::Display for ConnectivityReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConnectivityReason::CoprimeFail => "coprime-fail",
            ConnectivityReason::TooShort => "too-short",
            ConnectivityReason::TooNarrow => "too-narrow",
            ConnectivityReason::Satisfied => "satisfied",
        };
        f.write_str(s)
    }
}

/// Concrete evidence attached to a negative verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DisconnectionWitness {
    /// Every leap changes `x + y` by a multiple of `divisor`, so `to` cannot
    /// be reached from `from`.
    CommonDivisor { divisor: usize, from: Cell, to: Cell },
    /// A cell with no leaps at all.
    IsolatedCell(Cell),
    /// `from` and `to` lie in different components of a board that is too
    /// narrow.
    Separated { from: Cell, to: Cell },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityVerdict {
    pub connected: bool,
    pub reason: ConnectivityReason,
    pub witness: Option<DisconnectionWitness>,
}

impl ConnectivityVerdict {
    fn yes() -> Self {
        ConnectivityVerdict {
            connected: true,
            reason: ConnectivityReason::Satisfied,
            witness: None,
        }
    }

    fn no(reason: ConnectivityReason, witness: DisconnectionWitness) -> Self {
        ConnectivityVerdict {
            connected: false,
            reason,
            witness: Some(witness),
        }
    }
}

/// Decide connectivity of the `{r,s}` graph on an `m x n` board without
/// building it.
///
/// The board is normalised so that the shorter side plays the role of `m`.
/// Witness cells are reported in the caller's orientation. A board with a
/// single rank or file has no edges, so it is disconnected unless it is a
/// single cell.
pub fn predict_connected(spec: LeaperSpec, m: usize, n: usize) -> ConnectivityVerdict {
    let (r, s) = (spec.r(), spec.s());
    if m * n <= 1 {
        return ConnectivityVerdict::yes();
    }
    let transposed = m > n;
    let (mm, nn) = if transposed { (n, m) } else { (m, n) };
    let orient = |x: usize, y: usize| if transposed { Cell::new(y, x) } else { Cell::new(x, y) };

    let g = gcd(r + s, s - r);
    if g != 1 {
        return ConnectivityVerdict::no(
            ConnectivityReason::CoprimeFail,
            DisconnectionWitness::CommonDivisor {
                divisor: g,
                from: Cell::new(0, 0),
                to: orient(0, 1),
            },
        );
    }
    if nn < 2 * s {
        return ConnectivityVerdict::no(
            ConnectivityReason::TooShort,
            DisconnectionWitness::IsolatedCell(orient(mm / 2, nn / 2)),
        );
    }
    if mm < r + s {
        return ConnectivityVerdict::no(
            ConnectivityReason::TooNarrow,
            DisconnectionWitness::Separated {
                from: Cell::new(0, 0),
                to: orient(0, 1),
            },
        );
    }
    ConnectivityVerdict::yes()
}

fn bfs(adj: &[Vec<usize>], start: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::new();
    dist[start] = 0;
    queue.push_back(start);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// True iff a breadth-first search from `(0,0)` reaches every cell.
pub fn oracle_connected(graph: &BoardGraph) -> bool {
    adjacency_connected(graph.adjacency())
}

/// Connectivity of an arbitrary adjacency list. The empty graph counts as
/// connected.
pub fn adjacency_connected(adj: &[Vec<usize>]) -> bool {
    if adj.is_empty() {
        return true;
    }
    bfs(adj, 0).iter().all(|&d| d != usize::MAX)
}

/// A shortest leaper path from `from` to `to`, or `None` if they lie in
/// different components.
pub fn reach_witness(graph: &BoardGraph, from: Cell, to: Cell) -> Result<Option<Vec<Cell>>> {
    let board = graph.board();
    for c in [from, to] {
        if !board.contains(c) {
            return Err(Error::OutOfBounds {
                cell: c,
                m: board.m(),
                n: board.n(),
            });
        }
    }
    let (src, dst) = (graph.index(from), graph.index(to));
    let mut parent = vec![usize::MAX; graph.vertex_count()];
    parent[src] = src;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        if u == dst {
            break;
        }
        for &v in graph.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    if parent[dst] == usize::MAX {
        return Ok(None);
    }
    let mut path = vec![dst];
    let mut v = dst;
    while v != src {
        v = parent[v];
        path.push(v);
    }
    path.reverse();
    Ok(Some(path.into_iter().map(|v| graph.cell(v)).collect()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

/// Largest shortest-path distance, or `Infinite` if the graph is disconnected.
pub fn diameter(graph: &BoardGraph) -> Diameter {
    let adj = graph.adjacency();
    let mut best = 0;
    for v in 0..adj.len() {
        let dist = bfs(adj, v);
        for &d in &dist {
            if d == usize::MAX {
                return Diameter::Infinite;
            }
            best = best.max(d);
        }
    }
    Diameter::Finite(best)
}

/// Articulation vertices of an undirected graph, in increasing order.
pub fn articulation_points(adj: &[Vec<usize>]) -> Vec<usize> {
    let nv = adj.len();
    let mut disc = vec![usize::MAX; nv];
    let mut low = vec![0usize; nv];
    let mut is_cut = vec![false; nv];
    let mut timer = 0;
    // iterative DFS: (vertex, parent, next neighbour position)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..nv {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (u, p, ref mut i)) = stack.last_mut() {
            if *i < adj[u].len() {
                let v = adj[u][*i];
                *i += 1;
                if disc[v] == usize::MAX {
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, u, 0));
                } else if v != p {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if p != usize::MAX {
                    low[p] = low[p].min(low[u]);
                    if p != root && low[u] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..nv).filter(|&v| is_cut[v]).collect()
}

/// True iff the graph has no articulation vertex. Disconnected input is
/// rejected.
pub fn is_biconnected(graph: &BoardGraph) -> Result<bool> {
    adjacency_is_biconnected(graph.adjacency())
}

pub fn adjacency_is_biconnected(adj: &[Vec<usize>]) -> Result<bool> {
    if !adjacency_connected(adj) {
        return Err(Error::InvalidArgument(
            "biconnectivity is only defined here for connected graphs".into(),
        ));
    }
    Ok(articulation_points(adj).is_empty())
}

/// The file-parity walk over files `0..s`.
///
/// Starting from file 0, the walk adds `d = s - r` while `y < r` and subtracts
/// `r` otherwise; each step carries a parity increment (`d` or `s`
/// respectively). After `r` increases and `d` decreases the walk is back at
/// file 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityFunction {
    spec: LeaperSpec,
    /// `(file, parity)` in visiting order, starting with `(0, 0)`.
    steps: Vec<(usize, u8)>,
    /// Parity accumulated on returning to file 0.
    closing: u8,
    increases: usize,
    decreases: usize,
}

impl ParityFunction {
    pub fn new(spec: LeaperSpec) -> Result<Self> {
        let (r, s, d) = (spec.r(), spec.s(), spec.d());
        if d == 0 || gcd(r, s) != 1 {
            return Err(Error::InvalidArgument(format!(
                "parity walk needs r < s with gcd(r,s) = 1, got {spec}"
            )));
        }
        let mut steps = vec![(0usize, 0u8)];
        let (mut y, mut f) = (0usize, 0u8);
        let (mut increases, mut decreases) = (0, 0);
        loop {
            if y < r {
                y += d;
                f = ((f as usize + d) % 2) as u8;
                increases += 1;
            } else {
                y -= r;
                f = ((f as usize + s) % 2) as u8;
                decreases += 1;
            }
            if y == 0 {
                break;
            }
            steps.push((y, f));
        }
        Ok(ParityFunction {
            spec,
            steps,
            closing: f,
            increases,
            decreases,
        })
    }

    pub fn spec(&self) -> LeaperSpec {
        self.spec
    }

    pub fn steps(&self) -> &[(usize, u8)] {
        &self.steps
    }

    /// `f(y)` for `0 <= y < 2s`, using `f(y + s) = f(y) + r` above `s`.
    pub fn value(&self, y: usize) -> Option<u8> {
        let s = self.spec.s();
        if y >= 2 * s {
            return None;
        }
        let base = y % s;
        let f = self.steps.iter().find(|&&(z, _)| z == base).map(|&(_, f)| f)?;
        Some(if y >= s {
            ((f as usize + self.spec.r()) % 2) as u8
        } else {
            f
        })
    }

    pub fn closing_parity(&self) -> u8 {
        self.closing
    }

    pub fn increases(&self) -> usize {
        self.increases
    }

    pub fn decreases(&self) -> usize {
        self.decreases
    }
}

/// The rank-permuting path on the `(r+s-1) x infinity` strip starting at
/// `(r-1, 0)`; it ends at rank `s-1` after `r+s-2` steps.
pub fn strip_invariant_path(spec: LeaperSpec) -> Result<Vec<Cell>> {
    let (r, s) = (spec.r(), spec.s());
    if r == s || gcd(r, s) != 1 {
        return Err(Error::InvalidArgument(format!(
            "strip path needs r < s with gcd(r,s) = 1, got {spec}"
        )));
    }
    let mut path = vec![Cell::new(r - 1, 0)];
    let (mut x, mut y) = (r - 1, 0);
    while x != s - 1 {
        if x < s - 1 {
            x += r;
            y += s;
        } else {
            x -= s;
            y += r;
        }
        path.push(Cell::new(x, y));
    }
    Ok(path)
}

/// How [`cycle_path`] resolves the `±r` choice on descents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignPolicy {
    #[default]
    PreferPlus,
    PreferMinus,
    /// Keep every file in `{base, base+r, base+s, base+r+s}`.
    Lattice {
        base: usize,
    },
}

/// The `r + s` step path on the `(r+s) x 2s` board from `(0, t)` back to rank
/// 0: ascend by `(+r, ±s)` while `x < s`, otherwise descend by `(-s, ±r)`.
pub fn cycle_path(spec: LeaperSpec, t: usize, policy: SignPolicy) -> Result<Vec<Cell>> {
    let (r, s) = (spec.r(), spec.s());
    let width = 2 * s;
    if t >= width {
        return Err(Error::InvalidArgument(format!(
            "start file {t} must be below 2s = {width}"
        )));
    }
    let lattice = |base: usize| [base, base + r, base + s, base + r + s];
    if let SignPolicy::Lattice { base } = policy {
        if base + r + s >= width || !lattice(base).contains(&t) {
            return Err(Error::InvalidArgument(format!(
                "start file {t} is not in the lattice based at {base}"
            )));
        }
    }
    let mut path = vec![Cell::new(0, t)];
    let (mut x, mut y) = (0usize, t);
    for _ in 0..r + s {
        if x < s {
            x += r;
            y = if y + s < width { y + s } else { y - s };
        } else {
            x -= s;
            let plus = (y + r < width).then_some(y + r);
            let minus = y.checked_sub(r);
            y = match policy {
                SignPolicy::PreferPlus => plus.or(minus),
                SignPolicy::PreferMinus => minus.or(plus),
                // toggle the r component of y - base in {0, r, s, r+s}
                SignPolicy::Lattice { base } => {
                    if y == base || y == base + s {
                        plus
                    } else {
                        minus
                    }
                }
            }
            .ok_or_else(|| Error::InvalidArgument(format!("no legal descent from file {y}")))?;
        }
        path.push(Cell::new(x, y));
    }
    Ok(path)
}

/// The `(r+s) x 2s` board on which [`cycle_path`] lives.
pub fn cycle_board(spec: LeaperSpec) -> Board {
    Board::new(spec.r() + spec.s(), 2 * spec.s()).expect("positive dimensions")
}
