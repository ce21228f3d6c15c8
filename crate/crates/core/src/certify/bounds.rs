//! Lower bounds on board sizes that admit a circuit.

use std::fmt;

use crate::error::{Error, Result};

/// Least width above `2r+1` for `{r, r+1}` leapers when `r > 2`.
pub fn bound_thm2(r: usize) -> Result<usize> {
    if r <= 2 {
        return Err(Error::OutOfTheoremRange(format!("width bound needs r > 2, got {r}")));
    }
    Ok(4 * r + 2)
}

/// Least `n` for a `{r, r+1}` circuit on `(2r+1) x n`, `r > 3`. The improved
/// form adds 2 when `4 | r` and is 56 for `r = 5`.
pub fn bound_thm3(r: usize, improved: bool) -> Result<usize> {
    if r <= 3 {
        return Err(Error::OutOfTheoremRange(format!(
            "file-count bound needs r > 3, got {r}"
        )));
    }
    let base = if r % 2 == 1 {
        r * r + 5 * r + 2
    } else {
        r * r + 6 * r + 4
    };
    Ok(match (improved, r) {
        (false, _) => base,
        (true, 5) => 56,
        (true, _) if r % 4 == 0 => base + 2,
        (true, _) => base,
    })
}

/// Least area of a board carrying a `{1,2k}` circuit.
pub fn bound_thm7_area(k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::OutOfTheoremRange("area bound needs k >= 1".into()));
    }
    Ok((4 * k + 1) * (4 * k + 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `bound_thm2`, compared with the shorter side.
    Width,
    /// `bound_thm3` (base form), compared with the longer side.
    FileCount,
    /// `bound_thm7_area`, compared with the area.
    Area,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Width => "width",
            BoundKind::FileCount => "file-count",
            BoundKind::Area => "area",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [BoundKind::Width, BoundKind::FileCount, BoundKind::Area]
            .into_iter()
            .find(|k| k.name() == name)
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The bound that applies to `{r,s}` on `m x n`, as `(kind, bound, actual)`,
/// when the board falls short of it.
pub fn violated_bound(r: usize, s: usize, m: usize, n: usize) -> Option<(BoundKind, usize, usize)> {
    let (lo, hi) = (m.min(n), m.max(n));
    if s == r + 1 && r > 2 && lo > 2 * r + 1 {
        let b = bound_thm2(r).ok()?;
        if lo < b {
            return Some((BoundKind::Width, b, lo));
        }
    }
    if s == r + 1 && r > 3 && lo == 2 * r + 1 {
        let b = bound_thm3(r, false).ok()?;
        if hi < b {
            return Some((BoundKind::FileCount, b, hi));
        }
    }
    if r == 1 && s % 2 == 0 {
        let b = bound_thm7_area(s / 2).ok()?;
        if m * n < b {
            return Some((BoundKind::Area, b, m * n));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn width() {
        assert_eq!(bound_thm2(3), Ok(14));
        assert_eq!(bound_thm2(4), Ok(18));
        assert_eq!(bound_thm2(5), Ok(22));
        assert!(matches!(bound_thm2(2), Err(Error::OutOfTheoremRange(_))));
    }

    #[test]
    fn file_count() {
        assert_eq!(bound_thm3(4, false), Ok(44));
        assert_eq!(bound_thm3(4, true), Ok(46));
        assert_eq!(bound_thm3(5, false), Ok(52));
        assert_eq!(bound_thm3(5, true), Ok(56));
        assert_eq!(bound_thm3(7, false), Ok(86));
        assert_eq!(bound_thm3(6, true), Ok(76));
        assert!(bound_thm3(3, false).is_err());
    }

    #[test]
    fn area() {
        assert_eq!(bound_thm7_area(1), Ok(30));
        assert_eq!(bound_thm7_area(2), Ok(90));
        assert_eq!(bound_thm7_area(3), Ok(182));
        assert!(bound_thm7_area(0).is_err());
    }

    #[test]
    fn violations() {
        assert_eq!(violated_bound(3, 4, 8, 8), Some((BoundKind::Width, 14, 8)));
        assert_eq!(violated_bound(4, 5, 9, 40), Some((BoundKind::FileCount, 44, 40)));
        assert_eq!(violated_bound(1, 2, 5, 5), Some((BoundKind::Area, 30, 25)));
        assert_eq!(violated_bound(1, 2, 5, 6), None);
        assert_eq!(violated_bound(4, 5, 9, 46), None);
    }
}
