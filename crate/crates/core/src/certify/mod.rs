//! Non-Hamiltonicity certificates.
//!
//! Each certificate carries its own evidence, and [`validate_certificate`]
//! re-checks that evidence against the graph without calling the producer.

mod abc;
mod bounds;
mod filetypes;
mod text;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::board::{build_graph, Board, BoardGraph, Cell, LeaperSpec};
use crate::error::Result;
use crate::search::{forced_closure, Contradiction, Derivation, Rule};

pub use abc::{cert_abc_thm7, cert_abc_thm8, rank_offset, AbcColoring, AbcRule, AbcTag};
pub use bounds::{bound_thm2, bound_thm3, bound_thm7_area, violated_bound, BoundKind};
pub use filetypes::{
    check_reason, file_type_verdict, file_types, left_types, split_width, FileEntry, FileLabel, FileType,
    FileTypeReason, FileTypeTable, Naming, ParityCount, TypeSet, Verdict, CONFLICTS, LOOPS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    Disconnected,
    OddArea,
    AbcColoring,
    ForcedContradiction,
    FileTypeConflict,
    ParityImbalance,
    BoundViolation,
}

impl CertificateKind {
    pub const ALL: [CertificateKind; 7] = [
        CertificateKind::Disconnected,
        CertificateKind::OddArea,
        CertificateKind::AbcColoring,
        CertificateKind::ForcedContradiction,
        CertificateKind::FileTypeConflict,
        CertificateKind::ParityImbalance,
        CertificateKind::BoundViolation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CertificateKind::Disconnected => "disconnected",
            CertificateKind::OddArea => "odd-area",
            CertificateKind::AbcColoring => "abc-coloring",
            CertificateKind::ForcedContradiction => "forced-contradiction",
            CertificateKind::FileTypeConflict => "file-type-conflict",
            CertificateKind::ParityImbalance => "parity-imbalance",
            CertificateKind::BoundViolation => "bound-violation",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        CertificateKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// `to` cannot be reached from `from`.
    Disconnected {
        from: Cell,
        to: Cell,
    },
    /// The graph is bipartite and the area is odd.
    OddArea,
    Abc(AbcColoring),
    /// Replaying `log` with the degree rules ends in `contradiction`.
    Forced {
        contradiction: Contradiction,
        log: Vec<Derivation>,
    },
    /// A reason from the file types of a `(2r+1)`-rank board.
    FileTypes(FileTypeReason),
    /// The board falls below a proven lower bound; only the arithmetic is
    /// re-checked.
    Bound {
        kind: BoundKind,
        bound: usize,
        actual: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub spec: LeaperSpec,
    pub board: Board,
    pub evidence: Evidence,
}

impl Certificate {
    pub fn new(spec: LeaperSpec, board: Board, evidence: Evidence) -> Self {
        Certificate { spec, board, evidence }
    }

    pub fn kind(&self) -> CertificateKind {
        match &self.evidence {
            Evidence::Disconnected { .. } => CertificateKind::Disconnected,
            Evidence::OddArea => CertificateKind::OddArea,
            Evidence::Abc(_) => CertificateKind::AbcColoring,
            Evidence::Forced { .. } => CertificateKind::ForcedContradiction,
            Evidence::FileTypes(FileTypeReason::Parity(_) | FileTypeReason::OddExcess { .. }) => {
                CertificateKind::ParityImbalance
            }
            Evidence::FileTypes(_) => CertificateKind::FileTypeConflict,
            Evidence::Bound { .. } => CertificateKind::BoundViolation,
        }
    }

    pub fn to_text(&self) -> String {
        text::write(self)
    }

    pub fn parse(input: &str) -> Result<Certificate> {
        text::parse(input)
    }

    /// One-line description for reports.
    pub fn summary(&self) -> String {
        let detail = match &self.evidence {
            Evidence::Disconnected { from, to } => format!("{to} unreachable from {from}"),
            Evidence::OddArea => format!("bipartite with {} cells", self.board.area()),
            Evidence::Abc(c) => format!(
                "{} with {} A, {} B, {} C cells",
                c.rule,
                c.count(AbcTag::A),
                c.count(AbcTag::B),
                c.count(AbcTag::C)
            ),
            Evidence::Forced { contradiction, log } => {
                let what = match contradiction {
                    Contradiction::ThreeForced { vertex } => format!("three forced edges at {vertex}"),
                    Contradiction::PrematureCycle { length } => format!("forced cycle of length {length}"),
                    Contradiction::Stranded { vertex } => format!("{vertex} has fewer than two edges left"),
                };
                format!("{what} after {} steps", log.len())
            }
            Evidence::FileTypes(reason) => match reason {
                FileTypeReason::Conflict { file, first, second } => format!("file {file} is {first} and {second}"),
                FileTypeReason::Loop { file, first, second } => {
                    format!("file {file} is {first} and {second}, closing a short loop")
                }
                FileTypeReason::MissingFile { file, needs } => format!("file {file} needs {needs}, past the edge"),
                FileTypeReason::OddArea => "odd area".into(),
                FileTypeReason::Parity(c) => format!(
                    "unspecified links: {} in odd files, {} in even files",
                    c.odd_unspecified, c.even_unspecified
                ),
                FileTypeReason::OddExcess { count, special } => format!(
                    "odd files keep {} extra unspecified links; {special} and its mirror are even",
                    count.odd_unspecified - count.even_unspecified
                ),
            },
            Evidence::Bound { kind, bound, actual } => format!("{kind} {actual} below {bound}"),
        };
        format!("{} {}: {detail}", self.kind(), self.board)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn unreached(graph: &BoardGraph) -> Option<usize> {
    let nv = graph.vertex_count();
    let mut seen = vec![false; nv];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &w in graph.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen.iter().position(|&s| !s)
}

/// Two cells in different components.
pub fn cert_disconnected(graph: &BoardGraph) -> Option<Certificate> {
    let to = unreached(graph)?;
    Some(Certificate::new(
        graph.spec(),
        graph.board(),
        Evidence::Disconnected {
            from: graph.cell(0),
            to: graph.cell(to),
        },
    ))
}

pub fn cert_odd_area(graph: &BoardGraph) -> Option<Certificate> {
    let area = graph.board().area();
    (graph.spec().is_coprime() && area > 1 && area % 2 == 1)
        .then(|| Certificate::new(graph.spec(), graph.board(), Evidence::OddArea))
}

pub fn cert_forced(graph: &BoardGraph) -> Option<Certificate> {
    if graph.vertex_count() < 2 {
        return None;
    }
    let closure = forced_closure(graph);
    let contradiction = closure.contradiction?;
    Some(Certificate::new(
        graph.spec(),
        graph.board(),
        Evidence::Forced {
            contradiction,
            log: closure.log,
        },
    ))
}

/// Certificate from the file types of a `{r,r+1}` board with `2r+1` ranks
/// (either orientation), when the verdict rules the width out.
pub fn cert_file_types(spec: LeaperSpec, m: usize, n: usize) -> Result<Option<Certificate>> {
    let board = Board::new(m, n)?;
    let Some(files) = file_axis(spec, board) else {
        return Ok(None);
    };
    Ok(match file_type_verdict(spec.r(), files)? {
        Verdict::Feasible => None,
        Verdict::Infeasible(FileTypeReason::OddArea) => Some(Certificate::new(spec, board, Evidence::OddArea)),
        Verdict::Infeasible(reason) => Some(Certificate::new(spec, board, Evidence::FileTypes(reason))),
    })
}

/// The file count when one side is `2r+1` and the other at least `2s`.
fn file_axis(spec: LeaperSpec, board: Board) -> Option<usize> {
    let (r, s) = (spec.r(), spec.s());
    if s != r + 1 || r <= 3 {
        return None;
    }
    if board.m() == 2 * r + 1 && board.n() >= 2 * s {
        Some(board.n())
    } else if board.n() == 2 * r + 1 && board.m() >= 2 * s {
        Some(board.m())
    } else {
        None
    }
}

pub fn cert_bound(spec: LeaperSpec, m: usize, n: usize) -> Result<Option<Certificate>> {
    let board = Board::new(m, n)?;
    Ok(violated_bound(spec.r(), spec.s(), m, n)
        .map(|(kind, bound, actual)| Certificate::new(spec, board, Evidence::Bound { kind, bound, actual })))
}

/// The first certificate found, trying in order: disconnection, odd area,
/// the rank-offset colouring (or forced closure inside its regime), the
/// `{1,2k}` colouring, forced closure, file types. `None` means unknown.
pub fn certify(spec: LeaperSpec, m: usize, n: usize) -> Result<Option<Certificate>> {
    let board = Board::new(m, n)?;
    if board.area() == 1 {
        return Ok(None);
    }
    let graph = build_graph(spec, board);
    if let Some(c) = cert_disconnected(&graph).or_else(|| cert_odd_area(&graph)) {
        return Ok(Some(c));
    }
    let (r, s) = (spec.r(), spec.s());
    let abc = |coloring: Result<AbcColoring>| coloring.ok().map(|c| Certificate::new(spec, board, Evidence::Abc(c)));
    if r >= 2 && r < s {
        for transposed in [false, true] {
            if let Some(c) = abc(abc::offset_coloring(spec, board, transposed)) {
                return Ok(Some(c));
            }
        }
        let (lo, hi) = (m.min(n), m.max(n));
        if 2 * s <= lo && hi < 2 * (r + s) {
            if let Some(c) = cert_forced(&graph) {
                return Ok(Some(c));
            }
        }
    }
    if r == 1 && s % 2 == 0 {
        for transposed in [false, true] {
            if let Some(c) = abc(abc::long_leaper_coloring(s / 2, board, transposed)) {
                return Ok(Some(c));
            }
        }
    }
    if let Some(c) = cert_forced(&graph) {
        return Ok(Some(c));
    }
    cert_file_types(spec, m, n)
}

/// Re-check `cert` against `graph` from its evidence alone.
pub fn validate_certificate(graph: &BoardGraph, cert: &Certificate) -> bool {
    if cert.spec != graph.spec() || cert.board != graph.board() {
        return false;
    }
    let nv = graph.vertex_count();
    match &cert.evidence {
        Evidence::Disconnected { from, to } => {
            let board = graph.board();
            board.contains(*from)
                && board.contains(*to)
                && matches!(crate::connectivity::reach_witness(graph, *from, *to), Ok(None))
        }
        Evidence::OddArea => graph.spec().is_coprime() && nv > 1 && nv % 2 == 1,
        Evidence::Abc(coloring) => coloring.check(graph).is_ok(),
        Evidence::Forced { contradiction, log } => nv > 1 && replay(graph, log, *contradiction),
        Evidence::FileTypes(reason) => match file_axis(cert.spec, cert.board) {
            Some(files) => check_reason(cert.spec.r(), files, reason),
            None => false,
        },
        Evidence::Bound { kind, bound, actual } => {
            let b = graph.board();
            violated_bound(cert.spec.r(), cert.spec.s(), b.m(), b.n()) == Some((*kind, *bound, *actual))
        }
    }
}

/// Apply each logged step, checking its rule's premise first, then confirm
/// the claimed contradiction in the resulting state.
fn replay(graph: &BoardGraph, log: &[Derivation], contradiction: Contradiction) -> bool {
    let board = graph.board();
    let nv = graph.vertex_count();
    let mut state: HashMap<(usize, usize), bool> = HashMap::new();
    let mut forced_at = vec![0usize; nv];
    let mut forbidden_at = vec![0usize; nv];
    let mut forced_order = Vec::new();
    for d in log {
        let (a, b) = d.edge;
        if !board.contains(a) || !board.contains(b) || !board.contains(d.vertex) {
            return false;
        }
        let (u, w, v) = (graph.index(a), graph.index(b), graph.index(d.vertex));
        if !graph.has_edge(u, w) || (v != u && v != w) {
            return false;
        }
        let key = (u.min(w), u.max(w));
        if state.contains_key(&key) {
            return false;
        }
        let premise = match d.rule {
            Rule::DegreeTwo => d.forced && graph.degree(v) - forbidden_at[v] == 2,
            Rule::Saturated => !d.forced && forced_at[v] == 2,
        };
        if !premise {
            return false;
        }
        state.insert(key, d.forced);
        if d.forced {
            forced_at[u] += 1;
            forced_at[w] += 1;
            forced_order.push(key);
        } else {
            forbidden_at[u] += 1;
            forbidden_at[w] += 1;
        }
    }
    match contradiction {
        Contradiction::ThreeForced { vertex } => board.contains(vertex) && forced_at[graph.index(vertex)] >= 3,
        Contradiction::Stranded { vertex } => {
            board.contains(vertex) && {
                let v = graph.index(vertex);
                graph.degree(v) - forbidden_at[v] < 2
            }
        }
        Contradiction::PrematureCycle { length } => {
            first_cycle(nv, &forced_order).is_some_and(|len| len == length && len < nv)
        }
    }
}

/// Length of the first cycle closed by `edges` taken in order.
fn first_cycle(nv: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let mut parent: Vec<usize> = (0..nv).collect();
    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for (i, &(u, w)) in edges.iter().enumerate() {
        let (a, b) = (root(&mut parent, u), root(&mut parent, w));
        if a != b {
            parent[a] = b;
            continue;
        }
        let mut adj = vec![Vec::new(); nv];
        for &(x, y) in &edges[..i] {
            adj[x].push(y);
            adj[y].push(x);
        }
        let mut dist = vec![usize::MAX; nv];
        dist[u] = 1;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        return Some(dist[w]);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(r: usize, s: usize, m: usize, n: usize) -> BoardGraph {
        build_graph(LeaperSpec::new(r, s).unwrap(), Board::new(m, n).unwrap())
    }

    fn certified(r: usize, s: usize, m: usize, n: usize) -> Option<Certificate> {
        certify(LeaperSpec::new(r, s).unwrap(), m, n).unwrap()
    }

    #[test]
    fn odd_area() {
        assert!(cert_odd_area(&graph(1, 2, 5, 5)).is_some());
        assert!(cert_odd_area(&graph(1, 2, 5, 6)).is_none());
        assert!(cert_odd_area(&graph(4, 5, 9, 45)).is_some());
        assert!(cert_odd_area(&graph(1, 2, 1, 1)).is_none());
    }

    #[test]
    fn forced_examples() {
        let c = cert_forced(&graph(2, 3, 7, 9)).unwrap();
        assert!(matches!(
            c.evidence,
            Evidence::Forced {
                contradiction: Contradiction::PrematureCycle { length: 8 },
                ..
            }
        ));
        assert!(validate_certificate(&graph(2, 3, 7, 9), &c));
        assert!(cert_forced(&graph(3, 4, 9, 9)).is_some());
        assert!(cert_forced(&graph(1, 2, 5, 6)).is_none());
    }

    #[test]
    fn forced_certificate_fails_on_a_wider_board() {
        let c = cert_forced(&graph(2, 3, 7, 7)).unwrap();
        let wide = graph(2, 3, 7, 12);
        let moved = Certificate {
            board: wide.board(),
            ..c.clone()
        };
        assert!(!validate_certificate(&wide, &moved));
        assert!(validate_certificate(&graph(2, 3, 7, 7), &c));
    }

    #[test]
    fn forced_certificate_with_a_dropped_step_fails() {
        let g = graph(3, 4, 9, 9);
        let c = cert_forced(&g).unwrap();
        let Evidence::Forced { contradiction, log } = &c.evidence else {
            panic!()
        };
        assert!(log.len() > 2);
        let mut short = log.clone();
        short.remove(0);
        let bad = Certificate::new(
            c.spec,
            c.board,
            Evidence::Forced {
                contradiction: *contradiction,
                log: short,
            },
        );
        assert!(!validate_certificate(&g, &bad));
    }

    #[test]
    fn dispatcher_examples() {
        assert!(certified(2, 3, 9, 9).is_some());
        assert!(certified(1, 2, 5, 6).is_none());
        assert_eq!(certified(1, 2, 4, 4).unwrap().kind(), CertificateKind::AbcColoring);
        assert_eq!(certified(1, 2, 5, 5).unwrap().kind(), CertificateKind::OddArea);
        assert_eq!(certified(2, 4, 5, 5).unwrap().kind(), CertificateKind::Disconnected);
        assert_eq!(certified(2, 3, 5, 6).unwrap().kind(), CertificateKind::AbcColoring);
        assert_eq!(
            certified(4, 5, 9, 40).unwrap().kind(),
            CertificateKind::ForcedContradiction
        );
        assert!(certified(1, 2, 1, 1).is_none());
        assert_eq!(
            certified(5, 6, 11, 54).unwrap().kind(),
            CertificateKind::ParityImbalance
        );
        assert_eq!(certified(4, 5, 9, 44).unwrap().kind(), CertificateKind::ParityImbalance);
    }

    #[test]
    fn file_type_certificates() {
        let spec = LeaperSpec::new(4, 5).unwrap();
        let c = cert_file_types(spec, 9, 40).unwrap().unwrap();
        assert_eq!(c.kind(), CertificateKind::FileTypeConflict);
        assert!(validate_certificate(&build_graph(spec, c.board), &c));
        let t = cert_file_types(spec, 40, 9).unwrap().unwrap();
        assert!(validate_certificate(&build_graph(spec, t.board), &t));
        let p = cert_file_types(spec, 9, 45).unwrap().unwrap();
        assert_eq!(p.kind(), CertificateKind::OddArea);
        assert!(cert_file_types(spec, 9, 46).unwrap().is_none());
    }

    #[test]
    fn certificates_validate() {
        for (r, s, m, n) in [
            (1, 2, 3, 4),
            (1, 2, 4, 4),
            (2, 3, 6, 9),
            (2, 3, 9, 6),
            (2, 3, 7, 7),
            (3, 4, 8, 8),
            (2, 5, 10, 10),
            (1, 4, 6, 7),
            (4, 5, 9, 40),
            (2, 4, 6, 6),
        ] {
            let g = graph(r, s, m, n);
            let c = certified(r, s, m, n).unwrap_or_else(|| panic!("{r},{s} {m}x{n}"));
            assert!(validate_certificate(&g, &c), "{}", c.summary());
            assert!(!validate_certificate(&graph(r, s, m + 1, n + 1), &c));
        }
    }

    #[test]
    fn bound_certificates() {
        let spec = LeaperSpec::new(4, 5).unwrap();
        let c = cert_bound(spec, 9, 40).unwrap().unwrap();
        assert_eq!(c.kind(), CertificateKind::BoundViolation);
        assert!(validate_certificate(&build_graph(spec, c.board), &c));
        assert!(cert_bound(spec, 9, 46).unwrap().is_none());
    }

    #[test]
    fn disconnected_witness_is_checked() {
        let g = graph(1, 2, 3, 3);
        let c = cert_disconnected(&g).unwrap();
        assert_eq!(
            c.evidence,
            Evidence::Disconnected {
                from: Cell::new(0, 0),
                to: Cell::new(1, 1)
            }
        );
        assert!(validate_certificate(&g, &c));
        let bad = Certificate::new(
            c.spec,
            c.board,
            Evidence::Disconnected {
                from: Cell::new(0, 0),
                to: Cell::new(0, 1),
            },
        );
        assert!(!validate_certificate(&g, &bad));
    }
}
