//! Exhaustive Hamiltonian circuit and path search with forced-edge pruning.
//!
//! The search branches on edges: pick the cell with the fewest undecided
//! edges (lowest index on ties), try its first undecided edge in, then out.
//! After every decision the degree rules run to a fixpoint, a chain whose
//! ends are adjacent loses the closing edge, and a node is dropped when the
//! remaining edges no longer connect the board. Paths are circuits through
//! an extra hub vertex joined to the allowed end points.
//!
//! Parallel runs split the tree at a fixed depth and combine the subtrees in
//! order, so the result and node count never depend on the worker count.

mod closure;
mod engine;

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::board::{build_graph, Board, BoardGraph, Cell, LeaperSpec};
use crate::connectivity::oracle_connected;
use crate::error::{Error, Result};
use crate::tour::Tour;

pub use closure::{forced_closure, Contradiction, Derivation, ForcedState, Rule};

use engine::{Problem, State, IN, OUT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Target {
    #[default]
    Circuit,
    /// A path with any end points.
    Path,
    /// A path from one given cell to another.
    PathBetween(Cell, Cell),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Symmetry {
    #[default]
    None,
    /// Only tours mapped to themselves by the half turn `(x,y) -> (m-1-x, n-1-y)`.
    Rot180,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Exists,
    /// Count every tour; each undirected tour is counted once.
    Count,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub target: Target,
    /// Nodes expanded before giving up.
    pub budget: u64,
    pub symmetry: Symmetry,
    pub mode: Mode,
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            target: Target::Circuit,
            budget: 100_000_000,
            symmetry: Symmetry::None,
            mode: Mode::Exists,
            workers: 1,
        }
    }
}

impl SearchOptions {
    pub fn circuit() -> Self {
        Self::default()
    }

    pub fn path() -> Self {
        SearchOptions {
            target: Target::Path,
            ..Self::default()
        }
    }

    pub fn with_budget(self, budget: u64) -> Self {
        SearchOptions { budget, ..self }
    }

    pub fn with_mode(self, mode: Mode) -> Self {
        SearchOptions { mode, ..self }
    }

    pub fn with_symmetry(self, symmetry: Symmetry) -> Self {
        SearchOptions { symmetry, ..self }
    }

    pub fn with_workers(self, workers: usize) -> Self {
        SearchOptions { workers, ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// The first tour in search order, in canonical form.
    Found(Tour),
    /// Count mode: the exact number of tours.
    Counted(u64),
    /// Exists mode: the whole tree was searched and holds no tour.
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

impl SearchReport {
    pub fn tour(&self) -> Option<&Tour> {
        match &self.outcome {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

const SPLIT_DEPTH: usize = 8;

enum Flow {
    Continue,
    Stop,
    OverBudget,
    Abort,
}

struct Walk<'a, 'p> {
    st: State<'p>,
    nodes: u64,
    cap: u64,
    count: bool,
    tours: u64,
    first: Option<Vec<Cell>>,
    visit: Option<&'a mut dyn FnMut(&[Cell])>,
    /// Index of this subtree among its siblings.
    slot: usize,
    shared: Option<&'a Shared>,
}

/// Progress published by parallel subtrees. A subtree stops once its result
/// can no longer matter: an earlier subtree found a tour, or the earlier
/// subtrees together with this one have already spent the budget.
struct Shared {
    winner: AtomicUsize,
    nodes: Vec<AtomicU64>,
    exists: bool,
}

impl Shared {
    fn irrelevant(&self, slot: usize, own: u64, cap: u64) -> bool {
        if self.exists && self.winner.load(Ordering::Relaxed) < slot {
            return true;
        }
        self.nodes[slot].store(own, Ordering::Relaxed);
        let before: u64 = self.nodes[..slot].iter().map(|n| n.load(Ordering::Relaxed)).sum();
        before + own > cap
    }
}

impl<'a, 'p> Walk<'a, 'p> {
    fn dfs(&mut self) -> Flow {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Flow::OverBudget;
        }
        if self.nodes % 256 == 0 {
            if let Some(sh) = self.shared {
                if sh.irrelevant(self.slot, self.nodes, self.cap) {
                    return Flow::Abort;
                }
            }
        }
        if !self.st.propagate() {
            return Flow::Continue;
        }
        if self.st.complete() {
            let order = self.st.extract();
            if let Some(visit) = self.visit.as_mut() {
                visit(&order);
            }
            self.tours += 1;
            if self.first.is_none() {
                self.first = Some(order);
            }
            if self.count {
                return Flow::Continue;
            }
            if let Some(sh) = self.shared {
                sh.winner.fetch_min(self.slot, Ordering::Relaxed);
            }
            return Flow::Stop;
        }
        if !self.st.available_connected() {
            return Flow::Continue;
        }
        let Some(e) = self.st.branch_edge() else {
            return Flow::Continue;
        };
        for value in [IN, OUT] {
            let mark = self.st.mark();
            self.st.set(e, value);
            let flow = self.dfs();
            self.st.undo(mark);
            if !matches!(flow, Flow::Continue) {
                return flow;
            }
        }
        Flow::Continue
    }
}

/// Decision paths to the subtrees at depth [`SPLIT_DEPTH`], in search order,
/// plus the nodes spent above them.
fn frontier(st: &mut State<'_>, depth: usize, path: &mut Vec<(usize, u8)>, out: &mut Vec<Vec<(usize, u8)>>) -> u64 {
    if !st.propagate() {
        return 1;
    }
    if depth == SPLIT_DEPTH || st.complete() {
        out.push(path.clone());
        return 0;
    }
    if !st.available_connected() {
        return 1;
    }
    let Some(e) = st.branch_edge() else {
        return 1;
    };
    let mut nodes = 1;
    for value in [IN, OUT] {
        let mark = st.mark();
        st.set(e, value);
        path.push((e, value));
        nodes += frontier(st, depth + 1, path, out);
        path.pop();
        st.undo(mark);
    }
    nodes
}

fn replay<'p>(p: &'p Problem, path: &[(usize, u8)]) -> State<'p> {
    let mut st = State::new(p, true, false);
    st.propagate();
    for &(e, v) in path {
        st.set(e, v);
        st.propagate();
    }
    st
}

fn problem(graph: &BoardGraph, opts: &SearchOptions) -> Result<Problem> {
    let hub = match opts.target {
        Target::Circuit => None,
        Target::Path => Some(None),
        Target::PathBetween(a, b) => {
            let board = graph.board();
            for c in [a, b] {
                if !board.contains(c) {
                    return Err(Error::OutOfBounds {
                        cell: c,
                        m: board.m(),
                        n: board.n(),
                    });
                }
            }
            if a == b && board.area() > 1 {
                return Err(Error::InvalidArgument("path end points must differ".into()));
            }
            Some(Some((graph.index(a), graph.index(b))))
        }
    };
    Ok(Problem::new(graph, hub, opts.symmetry == Symmetry::Rot180))
}

fn trivial(graph: &BoardGraph, opts: &SearchOptions) -> Option<SearchOutcome> {
    let area = graph.vertex_count();
    let tours = match (area, opts.target) {
        (1, _) => 1,
        (2, Target::Circuit) => 0,
        (2, _) => u64::from(graph.has_edge(0, 1)),
        (_, _) if !oracle_connected(graph) => 0,
        _ => return None,
    };
    Some(match (opts.mode, tours) {
        (Mode::Count, t) => SearchOutcome::Counted(t),
        (Mode::Exists, 0) => SearchOutcome::Exhausted,
        (Mode::Exists, _) => {
            let order = (0..area).map(|v| graph.cell(v)).collect();
            SearchOutcome::Found(Tour::new(
                graph.spec(),
                graph.board(),
                order,
                opts.target == Target::Circuit && area == 1,
            ))
        }
    })
}

/// Search for a Hamiltonian circuit or path of `graph`.
pub fn search_hamiltonian(graph: &BoardGraph, opts: &SearchOptions) -> Result<SearchReport> {
    if opts.budget == 0 {
        return Err(Error::InvalidArgument("node budget must be at least 1".into()));
    }
    if opts.workers == 0 {
        return Err(Error::InvalidArgument("worker count must be at least 1".into()));
    }
    let p = problem(graph, opts)?;
    if let Some(outcome) = trivial(graph, opts) {
        return Ok(SearchReport { outcome, nodes: 1 });
    }
    let closed = opts.target == Target::Circuit;
    let make_tour = |order: Vec<Cell>| Tour::new(p.spec, p.board, order, closed).canonical();

    let mut root = State::new(&p, true, false);
    let mut subtrees = Vec::new();
    let top = frontier(&mut root, 0, &mut Vec::new(), &mut subtrees);
    drop(root);
    if top > opts.budget {
        return Ok(SearchReport {
            outcome: SearchOutcome::BudgetExceeded,
            nodes: opts.budget,
        });
    }
    let cap = opts.budget - top;
    let count = opts.mode == Mode::Count;
    let shared = Shared {
        winner: AtomicUsize::new(usize::MAX),
        nodes: subtrees.iter().map(|_| AtomicU64::new(0)).collect(),
        exists: !count,
    };
    let run = |(slot, path): (usize, &Vec<(usize, u8)>)| {
        let mut walk = Walk {
            st: replay(&p, path),
            nodes: 0,
            cap,
            count,
            tours: 0,
            first: None,
            visit: None,
            slot,
            shared: Some(&shared),
        };
        let flow = walk.dfs();
        shared.nodes[slot].store(walk.nodes, Ordering::Relaxed);
        (walk.nodes.min(cap + 1), walk.tours, walk.first, flow)
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start workers: {e}")))?;
    let results: Vec<_> = pool.install(|| subtrees.par_iter().enumerate().map(run).collect());

    let mut nodes = top;
    let mut tours = 0u64;
    for (sub_nodes, sub_tours, first, flow) in results {
        // an abandoned subtree is reached here only when the budget ran out
        nodes += sub_nodes;
        if matches!(flow, Flow::OverBudget | Flow::Abort) || nodes > opts.budget {
            return Ok(SearchReport {
                outcome: SearchOutcome::BudgetExceeded,
                nodes: nodes.min(opts.budget),
            });
        }
        tours += sub_tours;
        if !count {
            if let Some(order) = first {
                return Ok(SearchReport {
                    outcome: SearchOutcome::Found(make_tour(order)),
                    nodes,
                });
            }
        }
    }
    let outcome = if count {
        SearchOutcome::Counted(tours)
    } else {
        SearchOutcome::Exhausted
    };
    Ok(SearchReport { outcome, nodes })
}

/// Visit every tour in search order on one thread. Returns the number of
/// tours, or `None` when the budget ran out first.
pub fn for_each_tour(graph: &BoardGraph, opts: &SearchOptions, mut visit: impl FnMut(&Tour)) -> Result<Option<u64>> {
    if opts.budget == 0 {
        return Err(Error::InvalidArgument("node budget must be at least 1".into()));
    }
    let p = problem(graph, opts)?;
    let closed = opts.target == Target::Circuit;
    if let Some(outcome) = trivial(graph, &opts.with_mode(Mode::Count)) {
        let SearchOutcome::Counted(t) = outcome else {
            unreachable!()
        };
        if t > 0 {
            let order = (0..graph.vertex_count()).map(|v| graph.cell(v)).collect();
            visit(&Tour::new(
                p.spec,
                p.board,
                order,
                closed && t == 1 && graph.vertex_count() == 1,
            ));
        }
        return Ok(Some(t));
    }
    let mut cb = |order: &[Cell]| visit(&Tour::new(p.spec, p.board, order.to_vec(), closed).canonical());
    let mut walk = Walk {
        st: State::new(&p, true, false),
        nodes: 0,
        cap: opts.budget,
        count: true,
        tours: 0,
        first: None,
        visit: Some(&mut cb),
        slot: 0,
        shared: None,
    };
    Ok(match walk.dfs() {
        Flow::OverBudget => None,
        _ => Some(walk.tours),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileCount {
    /// The smallest number of files admitting a circuit.
    Found(usize),
    /// No circuit on any width up to the limit.
    NoneUpTo(usize),
    /// The shared budget ran out while this width was being searched; all
    /// narrower widths have no circuit.
    Inconclusive { at: usize },
}

/// The smallest `n <= n_max` such that the `m x n` board has a circuit.
/// Widths giving an odd area are skipped: connected leaper graphs are
/// bipartite.
pub fn smallest_circuit_file_count(spec: LeaperSpec, m: usize, n_max: usize, budget: u64) -> Result<FileCount> {
    let mut left = budget;
    for n in 1..=n_max {
        if (m * n) % 2 == 1 && spec.is_coprime() && (spec.r() + spec.s()) % 2 == 1 {
            continue;
        }
        let graph = build_graph(spec, Board::new(m, n)?);
        if left == 0 {
            return Ok(FileCount::Inconclusive { at: n });
        }
        let report = search_hamiltonian(&graph, &SearchOptions::circuit().with_budget(left))?;
        left = left.saturating_sub(report.nodes);
        match report.outcome {
            SearchOutcome::Found(_) => return Ok(FileCount::Found(n)),
            SearchOutcome::BudgetExceeded => return Ok(FileCount::Inconclusive { at: n }),
            _ => {}
        }
    }
    Ok(FileCount::NoneUpTo(n_max))
}
