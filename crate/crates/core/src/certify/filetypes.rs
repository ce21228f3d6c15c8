//! File types for `{r, r+1}` leapers on boards with `2r+1` ranks.
//!
//! File `f` is written `[a,b]` with `f = a*s - b`, `a >= 1`, `1 <= b <= s`.
//! Types derived from the left edge follow fixed rules; the right edge gives
//! the same rules applied to the mirror file `n-1-f`, with left and right
//! interchanged. A board width is ruled out when some file collects types
//! that cannot hold together, or when the links left unspecified cannot be
//! paired between odd and even files.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FileLabel {
    pub a: usize,
    pub b: usize,
}

impl FileLabel {
    pub fn new(a: usize, b: usize) -> Self {
        FileLabel { a, b }
    }

    pub fn of(file: usize, s: usize) -> Self {
        let a = file / s + 1;
        FileLabel { a, b: a * s - file }
    }

    pub fn file(self, s: usize) -> usize {
        self.a * s - self.b
    }
}

impl fmt::Display for FileLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FileType {
    /// `R`: every cell links to both right neighbours.
    AllRight,
    /// `R'`: the middle cell links to both right neighbours.
    MiddleRight,
    /// `L`: every cell links to both left neighbours.
    AllLeft,
    /// `L'`: the middle cell links to both left neighbours.
    MiddleLeft,
    /// `l`: every cell but the middle links to at least one left neighbour.
    OuterLeft,
    /// `l'`: the two end cells link to at least one left neighbour.
    EndsLeft,
    /// `r`: every cell but the middle links to at least one right neighbour.
    OuterRight,
    /// `r'`: the two end cells link to at least one right neighbour.
    EndsRight,
}

impl FileType {
    pub const ALL: [FileType; 8] = [
        FileType::AllRight,
        FileType::MiddleRight,
        FileType::AllLeft,
        FileType::MiddleLeft,
        FileType::OuterLeft,
        FileType::EndsLeft,
        FileType::OuterRight,
        FileType::EndsRight,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            FileType::AllRight => "R",
            FileType::MiddleRight => "R'",
            FileType::AllLeft => "L",
            FileType::MiddleLeft => "L'",
            FileType::OuterLeft => "l",
            FileType::EndsLeft => "l'",
            FileType::OuterRight => "r",
            FileType::EndsRight => "r'",
        }
    }

    pub fn from_symbol(sym: &str) -> Option<Self> {
        FileType::ALL.into_iter().find(|t| t.symbol() == sym)
    }

    /// The same type seen from the other edge.
    pub fn mirror(self) -> Self {
        match self {
            FileType::AllRight => FileType::AllLeft,
            FileType::MiddleRight => FileType::MiddleLeft,
            FileType::AllLeft => FileType::AllRight,
            FileType::MiddleLeft => FileType::MiddleRight,
            FileType::OuterLeft => FileType::OuterRight,
            FileType::EndsLeft => FileType::EndsRight,
            FileType::OuterRight => FileType::OuterLeft,
            FileType::EndsRight => FileType::EndsLeft,
        }
    }

    /// Link ends fixed in a file of this type; `None` when the whole file is.
    pub fn specified(self, r: usize) -> Option<usize> {
        match self {
            FileType::AllRight | FileType::AllLeft => None,
            FileType::OuterLeft | FileType::OuterRight => Some(2 * r),
            _ => Some(2),
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for FileType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct TypeSet(u8);

impl TypeSet {
    pub fn contains(self, t: FileType) -> bool {
        self.0 & t.bit() != 0
    }

    pub fn insert(&mut self, t: FileType) {
        self.0 |= t.bit();
    }

    pub fn union(self, other: TypeSet) -> TypeSet {
        TypeSet(self.0 | other.0)
    }

    pub fn mirror(self) -> TypeSet {
        self.iter().fold(TypeSet::default(), |mut acc, t| {
            acc.insert(t.mirror());
            acc
        })
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = FileType> {
        FileType::ALL.into_iter().filter(move |t| self.contains(*t))
    }

    /// Whether every link of the file is fixed.
    pub fn is_full(self) -> bool {
        self.contains(FileType::AllRight) || self.contains(FileType::AllLeft)
    }
}

impl FromIterator<FileType> for TypeSet {
    fn from_iter<I: IntoIterator<Item = FileType>>(iter: I) -> Self {
        let mut set = TypeSet::default();
        for t in iter {
            set.insert(t);
        }
        set
    }
}

impl fmt::Display for TypeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        for t in self.iter() {
            f.write_str(t.symbol())?;
        }
        Ok(())
    }
}

/// Pairs of types that cannot share a file: one side needs links the other
/// side has already used up.
pub const CONFLICTS: [(FileType, FileType); 6] = [
    (FileType::AllRight, FileType::AllLeft),
    (FileType::AllRight, FileType::MiddleLeft),
    (FileType::MiddleRight, FileType::AllLeft),
    (FileType::MiddleRight, FileType::MiddleLeft),
    (FileType::AllLeft, FileType::OuterRight),
    (FileType::AllRight, FileType::OuterLeft),
];

/// Pairs of types that together close a short circuit.
pub const LOOPS: [(FileType, FileType); 3] = [
    (FileType::OuterLeft, FileType::OuterRight),
    (FileType::OuterLeft, FileType::EndsRight),
    (FileType::EndsLeft, FileType::OuterRight),
];

/// Types forced on `[a,b]` by the left edge of the board.
pub fn left_types(r: usize, label: FileLabel) -> TypeSet {
    let s = r + 1;
    let FileLabel { a, b } = label;
    let odd = a % 2 == 1;
    let mut set = TypeSet::default();
    if a <= s {
        if a < b {
            set.insert(if odd { FileType::AllRight } else { FileType::AllLeft });
        }
        if b == a {
            set.insert(if odd {
                FileType::MiddleRight
            } else {
                FileType::MiddleLeft
            });
            if !odd {
                set.insert(FileType::OuterLeft);
            }
        }
        if b == 1 && odd && a < s {
            set.insert(FileType::OuterLeft);
        }
        if !odd && b + 1 == a {
            set.insert(FileType::EndsLeft);
        }
    }
    if r % 2 == 0 && a == s + 1 && b == s {
        set.insert(FileType::EndsLeft);
    }
    set
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FileEntry {
    pub label: FileLabel,
    pub left: TypeSet,
    pub right: TypeSet,
}

impl FileEntry {
    pub fn types(&self) -> TypeSet {
        self.left.union(self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileTypeTable {
    pub r: usize,
    pub n: usize,
    /// `n = k*s - d` with `0 <= d < s`.
    pub k: usize,
    pub d: usize,
    pub files: Vec<FileEntry>,
}

/// `(k, d)` with `n = k*s - d`, `0 <= d < s`.
pub fn split_width(n: usize, s: usize) -> (usize, usize) {
    let k = n.div_ceil(s);
    (k, k * s - n)
}

pub fn file_types(r: usize, n: usize) -> Result<FileTypeTable> {
    if r <= 3 {
        return Err(Error::OutOfTheoremRange(format!("file types need r > 3, got r = {r}")));
    }
    let s = r + 1;
    if n < 2 * s {
        return Err(Error::InvalidArgument(format!(
            "file types need n >= {}, got {n}",
            2 * s
        )));
    }
    let (k, d) = split_width(n, s);
    let files = (0..n)
        .map(|f| {
            let label = FileLabel::of(f, s);
            let mirror = FileLabel::of(n - 1 - f, s);
            FileEntry {
                label,
                left: left_types(r, label),
                right: left_types(r, mirror).mirror(),
            }
        })
        .collect();
    Ok(FileTypeTable { r, n, k, d, files })
}

impl FileTypeTable {
    pub fn s(&self) -> usize {
        self.r + 1
    }

    pub fn entry(&self, label: FileLabel) -> Option<&FileEntry> {
        if label.b == 0 || label.b > self.s() || label.a == 0 {
            return None;
        }
        self.files.get(label.file(self.s()))
    }

    pub fn types(&self, label: FileLabel) -> TypeSet {
        self.entry(label).map(FileEntry::types).unwrap_or_default()
    }

    /// The label of the mirror file `n-1-f`.
    pub fn mirror(&self, label: FileLabel) -> FileLabel {
        FileLabel::of(self.n - 1 - label.file(self.s()), self.s())
    }

    /// Parity class of a file under `naming`.
    pub fn parity(&self, file: usize, naming: Naming) -> usize {
        let f = match naming {
            Naming::Own => file,
            Naming::NearEdge => file.min(self.n - 1 - file),
        };
        FileLabel::of(f, self.s()).a % 2
    }

    /// Unspecified link ends in files that are not fully fixed, by parity.
    pub fn parity_count(&self, naming: Naming) -> ParityCount {
        let per_file = 4 * self.r + 2;
        let mut count = ParityCount {
            naming,
            ..ParityCount::default()
        };
        for (f, entry) in self.files.iter().enumerate() {
            let types = entry.types();
            if types.is_full() {
                continue;
            }
            let fixed: usize = types.iter().filter_map(|t| t.specified(self.r)).sum();
            let fixed = fixed.min(per_file);
            if self.parity(f, naming) == 1 {
                count.odd_files += 1;
                count.odd_specified += fixed;
                count.odd_unspecified += per_file - fixed;
            } else {
                count.even_files += 1;
                count.even_specified += fixed;
                count.even_unspecified += per_file - fixed;
            }
        }
        count.absorbable = match count.odd_unspecified.cmp(&count.even_unspecified) {
            std::cmp::Ordering::Greater => self.absorbable(naming, 1),
            std::cmp::Ordering::Less => self.absorbable(naming, 0),
            std::cmp::Ordering::Equal => 0,
        };
        count
    }

    fn pair_in(&self, label: FileLabel, pairs: &[(FileType, FileType)]) -> Option<(FileType, FileType)> {
        let types = self.types(label);
        pairs
            .iter()
            .copied()
            .find(|&(x, y)| types.contains(x) && types.contains(y))
    }

    fn conflict(&self, a: usize, b: usize) -> Option<FileTypeReason> {
        let file = FileLabel::new(a, b);
        self.pair_in(file, &CONFLICTS)
            .map(|(first, second)| FileTypeReason::Conflict { file, first, second })
    }

    fn short_loop(&self, a: usize, b: usize) -> Option<FileTypeReason> {
        let file = FileLabel::new(a, b);
        self.pair_in(file, &LOOPS)
            .map(|(first, second)| FileTypeReason::Loop { file, first, second })
    }

    /// Pairs of partly free files of the given parity that a leap can join.
    /// Links between such files are the only ones that do not pair an odd
    /// end with an even end.
    pub fn same_parity_links(&self, naming: Naming, parity: usize) -> Vec<(FileLabel, FileLabel)> {
        let partial: Vec<usize> = (0..self.n)
            .filter(|&f| !self.files[f].types().is_full() && self.parity(f, naming) == parity)
            .collect();
        let mut pairs = Vec::new();
        for &f in &partial {
            for g in [f + self.r, f + self.s()] {
                if partial.binary_search(&g).is_ok() {
                    pairs.push((self.files[f].label, self.files[g].label));
                }
            }
        }
        pairs
    }

    /// Leaps between two files `delta` apart on `2r+1` ranks.
    fn edges_between(&self, delta: usize) -> usize {
        let ranks = 2 * self.r + 1;
        let other = if delta == self.r { self.s() } else { self.r };
        (0..ranks).filter(|&x| x + other < ranks).count() * 2
    }

    /// Link ends of one parity that links inside that parity could cancel:
    /// two per board edge between same-parity partly free files.
    pub fn absorbable(&self, naming: Naming, parity: usize) -> usize {
        let s = self.s();
        self.same_parity_links(naming, parity)
            .iter()
            .map(|&(f, g)| 2 * self.edges_between(g.file(s) - f.file(s)))
            .sum()
    }

    /// Parity of the side holding more unspecified link ends, if links
    /// inside that side cannot cancel the excess.
    fn stuck_excess(&self, count: &ParityCount) -> Option<usize> {
        let (parity, excess) = match count.odd_unspecified.cmp(&count.even_unspecified) {
            std::cmp::Ordering::Greater => (1, count.odd_unspecified - count.even_unspecified),
            std::cmp::Ordering::Less => (0, count.even_unspecified - count.odd_unspecified),
            std::cmp::Ordering::Equal => return None,
        };
        (excess > count.absorbable && count.absorbable == self.absorbable(count.naming, parity)).then_some(parity)
    }

    fn parity_imbalance(&self) -> Option<FileTypeReason> {
        [Naming::NearEdge, Naming::Own].into_iter().find_map(|naming| {
            let count = self.parity_count(naming);
            self.stuck_excess(&count).map(|_| FileTypeReason::Parity(count))
        })
    }

    /// The refinement for `n = (s+4)s - 1` when `4 | r`: the odd files keep
    /// an excess of unspecified links, and the only link between files of
    /// equal parity joins `[r/2+2, 1]` to its mirror, which are even.
    fn odd_excess(&self) -> Option<FileTypeReason> {
        let count = self.parity_count(Naming::NearEdge);
        let special = FileLabel::new(self.r / 2 + 2, 1);
        let even = self.same_parity_links(Naming::NearEdge, 0);
        let mirror = self.mirror(special);
        let expected = [(special, mirror), (mirror, special)];
        (self.stuck_excess(&count) == Some(1) && even.len() == 1 && expected.contains(&even[0]))
            .then_some(FileTypeReason::OddExcess { count, special })
    }
}

/// How files are split into odd and even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Naming {
    /// By the `a` of the file's own label.
    Own,
    /// By the `a` of whichever of the file and its mirror is nearer the left
    /// edge.
    #[default]
    NearEdge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ParityCount {
    pub naming: Naming,
    pub odd_files: usize,
    pub even_files: usize,
    pub odd_specified: usize,
    pub even_specified: usize,
    pub odd_unspecified: usize,
    pub even_unspecified: usize,
    /// Excess link ends that links between files of the excess parity could
    /// cancel.
    pub absorbable: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FileTypeReason {
    /// One file carries two types that need more links than it has.
    Conflict {
        file: FileLabel,
        first: FileType,
        second: FileType,
    },
    /// Two types on one file close a short circuit.
    Loop {
        file: FileLabel,
        first: FileType,
        second: FileType,
    },
    /// The middle cell of `file` must link to `needs`, which lies past the
    /// right edge.
    MissingFile { file: FileLabel, needs: FileLabel },
    /// `(2r+1) n` is odd.
    OddArea,
    /// Odd and even files are left with different numbers of link ends.
    Parity(ParityCount),
    /// Odd files keep an excess that the single odd-to-odd candidate link,
    /// from `special` to its mirror, cannot absorb because both are even.
    OddExcess { count: ParityCount, special: FileLabel },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Feasible,
    Infeasible(FileTypeReason),
}

/// Rule out `n` by the enumerated file-type cases, and by the parity count
/// for widths below the improved bound. Anything else, or a case whose cited
/// types turn out not to clash, is `Feasible`.
pub fn file_type_verdict(r: usize, n: usize) -> Result<Verdict> {
    let table = file_types(r, n)?;
    let s = table.s();
    let (k, d) = (table.k, table.d);
    let odd_area = if n % 2 == 1 {
        Some(FileTypeReason::OddArea)
    } else {
        None
    };
    let reason = if k <= s {
        if k % 2 == 1 {
            table.conflict(k, s)
        } else if d % 2 == 1 {
            odd_area
        } else if d == 0 && k < s {
            table.conflict(k, s)
        } else if d == 0 {
            table.short_loop(1, 1)
        } else if d >= k {
            let file = FileLabel::new(k - 1, k - 1);
            let needs = FileLabel::new(k, k - 1);
            (table.types(file).contains(FileType::MiddleRight) && needs.file(s) >= n)
                .then_some(FileTypeReason::MissingFile { file, needs })
        } else {
            table.parity_imbalance()
        }
    } else if odd_area.is_some() {
        odd_area
    } else if r % 2 == 0 {
        match k - s {
            1 if d == 0 => table.short_loop(1, 1),
            1 => table.parity_imbalance(),
            2 if d == 1 => table.short_loop(2, 2),
            2 => table.conflict(3, d + 1),
            3 if d == 0 && r > 4 => table.conflict(6, s),
            3 if d == 0 => table.short_loop(3, 1),
            3 => table.parity_imbalance(),
            4 if d == 1 && r % 4 == 0 => table.odd_excess(),
            4 if d == 3 => table.short_loop(4, 4),
            4 if d >= 5 => table.conflict(5, d + 1),
            _ => None,
        }
    } else {
        match k - s {
            1 if d == 0 => table.short_loop(2, 2),
            1 => table.conflict(2, d + 1),
            2 if d == 0 => table.conflict(4, s),
            2 => table.parity_imbalance(),
            3 if d >= 4 => table.conflict(4, d + 1),
            _ => None,
        }
    };
    // Between the base and improved bounds the same counting, applied to
    // the whole table, settles the remaining widths.
    let reason = reason.or_else(|| {
        let improved = super::bounds::bound_thm3(r, true).ok()?;
        (n < improved).then(|| table.parity_imbalance()).flatten()
    });
    Ok(reason.map_or(Verdict::Feasible, Verdict::Infeasible))
}

/// Re-derive a reason from the typing rules alone.
pub fn check_reason(r: usize, n: usize, reason: &FileTypeReason) -> bool {
    let Ok(table) = file_types(r, n) else {
        return false;
    };
    let s = table.s();
    match *reason {
        FileTypeReason::Conflict { file, first, second } => {
            let types = table.types(file);
            CONFLICTS.contains(&(first, second)) && types.contains(first) && types.contains(second)
        }
        FileTypeReason::Loop { file, first, second } => {
            let types = table.types(file);
            LOOPS.contains(&(first, second)) && types.contains(first) && types.contains(second)
        }
        FileTypeReason::MissingFile { file, needs } => {
            table.types(file).contains(FileType::MiddleRight)
                && file.a == file.b
                && needs == FileLabel::new(file.a + 1, file.b)
                && needs.file(s) >= n
        }
        FileTypeReason::OddArea => n % 2 == 1,
        FileTypeReason::Parity(count) => {
            table.parity_count(count.naming) == count && table.stuck_excess(&count).is_some()
        }
        FileTypeReason::OddExcess { count, special } => {
            let mirror = table.mirror(special);
            table.parity_count(count.naming) == count
                && table.stuck_excess(&count) == Some(1)
                && table
                    .same_parity_links(count.naming, 0)
                    .iter()
                    .any(|&pair| pair == (special, mirror) || pair == (mirror, special))
        }
    }
}
