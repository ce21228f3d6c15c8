//! A/B/C colourings. Every neighbour of an A cell is a B cell and there are
//! no more B cells than A cells, so a circuit entering A never leaves A ∪ B
//! and misses every C cell.

use std::fmt;

use crate::board::{gcd, Board, BoardGraph, LeaperSpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AbcTag {
    A,
    B,
    C,
}

impl AbcTag {
    pub fn symbol(self) -> char {
        match self {
            AbcTag::A => 'A',
            AbcTag::B => 'B',
            AbcTag::C => 'C',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'A' => Some(AbcTag::A),
            'B' => Some(AbcTag::B),
            'C' => Some(AbcTag::C),
            _ => None,
        }
    }
}

/// Which rule produced a colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AbcRule {
    /// Rank classes modulo `2r` shifted by `t`, on `2s` ranks.
    RankOffset { t: usize },
    /// The `{1,2k}` rules on an even number of ranks between `2k+1` and `4k`.
    LongLeaper { k: usize },
}

impl fmt::Display for AbcRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbcRule::RankOffset { t } => write!(f, "rank-offset {t}"),
            AbcRule::LongLeaper { k } => write!(f, "long-leaper {k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbcColoring {
    pub rule: AbcRule,
    /// The rule was applied to files instead of ranks.
    pub transposed: bool,
    /// One tag per cell, indexed `x * n + y`.
    pub tags: Vec<AbcTag>,
}

impl AbcColoring {
    pub fn count(&self, tag: AbcTag) -> usize {
        self.tags.iter().filter(|&&t| t == tag).count()
    }

    /// `Ok(())` when the colouring refutes a circuit on `graph`.
    pub fn check(&self, graph: &BoardGraph) -> std::result::Result<(), String> {
        if self.tags.len() != graph.vertex_count() {
            return Err(format!("{} tags for {} cells", self.tags.len(), graph.vertex_count()));
        }
        for v in 0..graph.vertex_count() {
            if self.tags[v] != AbcTag::A {
                continue;
            }
            if let Some(&w) = graph.neighbors(v).iter().find(|&&w| self.tags[w] != AbcTag::B) {
                return Err(format!(
                    "A cell {} has neighbour {} tagged {}",
                    graph.cell(v),
                    graph.cell(w),
                    self.tags[w].symbol()
                ));
            }
        }
        let (a, b, c) = (self.count(AbcTag::A), self.count(AbcTag::B), self.count(AbcTag::C));
        if a == 0 || c == 0 {
            return Err(format!("needs A and C cells, has {a} and {c}"));
        }
        if b > a {
            return Err(format!("{b} B cells exceed {a} A cells"));
        }
        Ok(())
    }
}

fn rank_coloring(board: Board, transposed: bool, rule: AbcRule, tag: impl Fn(usize, usize) -> AbcTag) -> AbcColoring {
    let tags = board
        .cells()
        .map(|c| if transposed { tag(c.y, c.x) } else { tag(c.x, c.y) })
        .collect();
    AbcColoring { rule, transposed, tags }
}

fn finish(graph: &BoardGraph, coloring: AbcColoring) -> Result<AbcColoring> {
    coloring.check(graph).map_err(Error::Construction)?;
    if coloring.count(AbcTag::A) != coloring.count(AbcTag::B) {
        return Err(Error::Construction("A and B counts differ".into()));
    }
    Ok(coloring)
}

/// The offset `t`: `s mod 2r` when below `r`, zero when above.
pub fn rank_offset(spec: LeaperSpec) -> Result<usize> {
    let (r, s) = (spec.r(), spec.s());
    let rem = s % (2 * r);
    match rem.cmp(&r) {
        std::cmp::Ordering::Less => Ok(rem),
        std::cmp::Ordering::Greater => Ok(0),
        std::cmp::Ordering::Equal => Err(Error::InvalidArgument(format!("s mod 2r = r for {spec}"))),
    }
}

pub(crate) fn offset_coloring(spec: LeaperSpec, board: Board, transposed: bool) -> Result<AbcColoring> {
    let (r, s) = (spec.r(), spec.s());
    if r < 2 || r >= s || gcd(r + s, s - r) != 1 {
        return Err(Error::InvalidArgument(format!(
            "rank-offset colouring needs 2 <= r < s, coprime, got {spec}"
        )));
    }
    let ranks = if transposed { board.n() } else { board.m() };
    if ranks != 2 * s {
        return Err(Error::InvalidArgument(format!(
            "rank-offset colouring needs {} ranks, got {ranks}",
            2 * s
        )));
    }
    let t = rank_offset(spec)?;
    let p = 2 * r;
    let tag = |x: usize, _y: usize| {
        let (a, b) = if x < s { (t, r + t) } else { (r + s + t, s + t) };
        if x % p == a % p {
            AbcTag::A
        } else if x % p == b % p {
            AbcTag::B
        } else {
            AbcTag::C
        }
    };
    let graph = BoardGraph::new(spec, board);
    finish(&graph, rank_coloring(board, transposed, AbcRule::RankOffset { t }, tag))
}

/// Colouring of a board with `m = 2s` ranks for `2 <= r < s`.
pub fn cert_abc_thm8(spec: LeaperSpec, m: usize, n: usize) -> Result<super::Certificate> {
    let board = Board::new(m, n)?;
    let coloring = offset_coloring(spec, board, false)?;
    Ok(super::Certificate::new(spec, board, super::Evidence::Abc(coloring)))
}

pub(crate) fn long_leaper_coloring(k: usize, board: Board, transposed: bool) -> Result<AbcColoring> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let m = if transposed { board.n() } else { board.m() };
    if m % 2 == 1 || m < 2 * k + 1 || m > 4 * k {
        return Err(Error::InvalidArgument(format!(
            "long-leaper colouring needs even m in [{}, {}], got {m}",
            2 * k + 1,
            4 * k
        )));
    }
    let tag = |x: usize, y: usize| {
        let (xe, ye) = (x % 2 == 0, y % 2 == 0);
        let low = x < 2 * k;
        let high = x >= m - 2 * k;
        if (ye && xe && low) || (!ye && !xe && high) {
            AbcTag::A
        } else if (ye && !xe && low) || (!ye && xe && high) {
            AbcTag::B
        } else {
            AbcTag::C
        }
    };
    let spec = LeaperSpec::new(1, 2 * k)?;
    let graph = BoardGraph::new(spec, board);
    finish(&graph, rank_coloring(board, transposed, AbcRule::LongLeaper { k }, tag))
}

/// Colouring for the `{1,2k}` leaper on an even `m` with `2k+1 <= m <= 4k`.
pub fn cert_abc_thm7(k: usize, m: usize, n: usize) -> Result<super::Certificate> {
    let board = Board::new(m, n)?;
    let coloring = long_leaper_coloring(k, board, false)?;
    let spec = LeaperSpec::new(1, 2 * k)?;
    Ok(super::Certificate::new(spec, board, super::Evidence::Abc(coloring)))
}
