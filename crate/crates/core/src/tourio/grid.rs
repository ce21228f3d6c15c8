//! The grid text format.
//!
//! ```text
//! # optional comment lines
//! leaper 1 2 6 6 9 closed
//! 00 36 13 23 06 30
//! ...
//! ```
//!
//! The header gives `r s m n radix closed|open`. Each of the `m` body rows
//! holds `n` visit indices written in the radix, zero-padded to
//! `ceil(log_radix(mn))` digits (at least one). Error positions are 1-based
//! text lines and 1-based token positions within the line.

use std::fmt::Write as _;

use crate::board::{build_graph, Board, Cell, LeaperSpec};
use crate::error::{Error, Result};
use crate::tour::{verify_tour, Tour, TourViolation};

/// Digits needed to write `0..count` in `radix`, at least one.
pub fn digit_width(count: usize, radix: u32) -> usize {
    let radix = radix as usize;
    let mut w = 1;
    let mut cap = radix;
    while cap < count {
        cap = cap.saturating_mul(radix);
        w += 1;
    }
    w
}

fn check_radix(radix: u32) -> Result<()> {
    if radix == 9 || radix == 10 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("radix must be 9 or 10, got {radix}")))
    }
}

fn to_radix(mut v: usize, radix: u32, width: usize) -> String {
    let radix = radix as usize;
    let mut digits = Vec::with_capacity(width);
    while v > 0 {
        digits.push(b'0' + (v % radix) as u8);
        v /= radix;
    }
    while digits.len() < width {
        digits.push(b'0');
    }
    digits.reverse();
    String::from_utf8(digits).expect("ascii digits")
}

/// A parsed grid file: header fields plus the visit index of every cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridDocument {
    pub spec: LeaperSpec,
    pub board: Board,
    pub radix: u32,
    pub closed: bool,
    /// `body[x][y]` is the step at which cell `(x, y)` is visited.
    pub body: Vec<Vec<usize>>,
}

impl GridDocument {
    /// Lay out a spanning tour. The tour's own numbering is kept.
    pub fn from_tour(tour: &Tour, radix: u32) -> Result<Self> {
        check_radix(radix)?;
        let board = tour.board();
        if tour.len() != board.area() {
            return Err(Error::InvalidArgument(format!(
                "tour visits {} of {} cells",
                tour.len(),
                board.area()
            )));
        }
        let mut body = vec![vec![usize::MAX; board.n()]; board.m()];
        for (i, &c) in tour.order().iter().enumerate() {
            if !board.contains(c) {
                return Err(Error::OutOfBounds {
                    cell: c,
                    m: board.m(),
                    n: board.n(),
                });
            }
            if body[c.x][c.y] != usize::MAX {
                return Err(Error::InvalidArgument(format!("cell {c} visited twice")));
            }
            body[c.x][c.y] = i;
        }
        Ok(GridDocument {
            spec: tour.spec(),
            board,
            radix,
            closed: tour.closed(),
            body,
        })
    }

    pub fn to_text(&self) -> String {
        let width = digit_width(self.board.area(), self.radix);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "leaper {} {} {} {} {} {}",
            self.spec.r(),
            self.spec.s(),
            self.board.m(),
            self.board.n(),
            self.radix,
            if self.closed { "closed" } else { "open" }
        );
        for row in &self.body {
            let cells: Vec<String> = row.iter().map(|&v| to_radix(v, self.radix, width)).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parse and check that the body is a permutation of `0..mn`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or_else(|| Error::Parse {
            row: 1,
            column: 1,
            message: "missing header line".into(),
        })?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        if tokens.len() != 7 || tokens[0] != "leaper" {
            return Err(Error::Parse {
                row: hline,
                column: 1,
                message: "expected `leaper r s m n radix closed|open`".into(),
            });
        }
        let num = |i: usize| -> Result<usize> {
            tokens[i].parse::<usize>().map_err(|_| Error::Parse {
                row: hline,
                column: i + 1,
                message: format!("`{}` is not a number", tokens[i]),
            })
        };
        let (r, s, m, n, radix) = (num(1)?, num(2)?, num(3)?, num(4)?, num(5)?);
        let header_err = |column: usize, e: Error| Error::Parse {
            row: hline,
            column,
            message: e.to_string(),
        };
        let spec = LeaperSpec::new(r, s).map_err(|e| header_err(2, e))?;
        let board = Board::new(m, n).map_err(|e| header_err(4, e))?;
        let radix = u32::try_from(radix).unwrap_or(0);
        check_radix(radix).map_err(|e| header_err(6, e))?;
        let closed = match tokens[6] {
            "closed" => true,
            "open" => false,
            other => {
                return Err(Error::Parse {
                    row: hline,
                    column: 7,
                    message: format!("expected `closed` or `open`, got `{other}`"),
                })
            }
        };

        let area = board.area();
        let mut seen: Vec<Option<(usize, usize)>> = vec![None; area];
        let mut body = Vec::with_capacity(m);
        for x in 0..m {
            let (line, row) = lines.next().ok_or_else(|| Error::Parse {
                row: text.lines().count() + 1,
                column: 1,
                message: format!("expected {m} body rows, found {x}"),
            })?;
            let cells: Vec<&str> = row.split_whitespace().collect();
            if cells.len() != n {
                return Err(Error::Parse {
                    row: line,
                    column: cells.len().min(n) + 1,
                    message: format!("expected {n} entries, found {}", cells.len()),
                });
            }
            let mut vals = Vec::with_capacity(n);
            for (y, tok) in cells.iter().enumerate() {
                let bad = || Error::Parse {
                    row: line,
                    column: y + 1,
                    message: format!("`{tok}` is not a radix-{radix} number"),
                };
                if !tok.bytes().all(|b| b.is_ascii_digit() && ((b - b'0') as u32) < radix) {
                    return Err(bad());
                }
                let v = usize::from_str_radix(tok, radix).map_err(|_| bad())?;
                if v >= area {
                    return Err(Error::Parse {
                        row: line,
                        column: y + 1,
                        message: format!("index {v} is out of range 0..{area}"),
                    });
                }
                if let Some((pl, pc)) = seen[v] {
                    return Err(Error::Parse {
                        row: line,
                        column: y + 1,
                        message: format!(
                            "index {v} repeats the entry at line {pl}, position {pc}; body is not a permutation"
                        ),
                    });
                }
                seen[v] = Some((line, y + 1));
                vals.push(v);
            }
            body.push(vals);
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                row: line,
                column: 1,
                message: format!("unexpected text after {m} body rows"),
            });
        }
        Ok(GridDocument {
            spec,
            board,
            radix,
            closed,
            body,
        })
    }

    /// The tour in file order (index 0 first).
    pub fn to_tour(&self) -> Tour {
        let mut order = vec![Cell::new(0, 0); self.board.area()];
        for (x, row) in self.body.iter().enumerate() {
            for (y, &v) in row.iter().enumerate() {
                order[v] = Cell::new(x, y);
            }
        }
        Tour::new(self.spec, self.board, order, self.closed)
    }

    /// The 1-based text position of a cell's entry, counting from the header
    /// line `header_line`.
    fn position(header_line: usize, c: Cell) -> (usize, usize) {
        (header_line + 1 + c.x, c.y + 1)
    }
}

/// Write a tour as a grid document, keeping its numbering.
pub fn encode_grid(tour: &Tour, radix: u32) -> Result<String> {
    Ok(GridDocument::from_tour(tour, radix)?.to_text())
}

/// Parse a grid into a tour in file order, without checking leaps.
pub fn parse_grid(text: &str) -> Result<Tour> {
    Ok(GridDocument::parse(text)?.to_tour())
}

/// Parse, verify every leap, and return the canonical form of the tour.
pub fn decode_grid(text: &str) -> Result<Tour> {
    let doc = GridDocument::parse(text)?;
    let tour = doc.to_tour();
    let graph = build_graph(doc.spec, doc.board);
    if let Err(v) = verify_tour(&graph, &tour) {
        let header_line = text
            .lines()
            .position(|l| {
                let l = l.trim();
                !l.is_empty() && !l.starts_with('#')
            })
            .map_or(1, |i| i + 1);
        let cell = match &v {
            TourViolation::NotAdjacent { to, .. } => *to,
            TourViolation::NotClosed { to, .. } => *to,
            _ => Cell::new(0, 0),
        };
        let (row, column) = GridDocument::position(header_line, cell);
        return Err(Error::Parse {
            row,
            column,
            message: format!("rank {}, file {}: {v}", cell.x, cell.y),
        });
    }
    Ok(tour.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tourio::fixtures;

    #[test]
    fn widths() {
        assert_eq!(digit_width(1, 10), 1);
        assert_eq!(digit_width(36, 9), 2);
        assert_eq!(digit_width(81, 9), 2);
        assert_eq!(digit_width(82, 9), 3);
        assert_eq!(digit_width(324, 9), 3);
        assert_eq!(digit_width(484, 10), 3);
        assert_eq!(digit_width(1000, 10), 3);
        assert_eq!(digit_width(1001, 10), 4);
    }

    #[test]
    fn single_cell() {
        let t = Tour::new(
            LeaperSpec::knight(),
            Board::new(1, 1).unwrap(),
            vec![Cell::new(0, 0)],
            true,
        );
        let text = encode_grid(&t, 10).unwrap();
        assert_eq!(text, "leaper 1 2 1 1 10 closed\n0\n");
        assert_eq!(decode_grid(&text).unwrap(), t);
    }

    #[test]
    fn fixtures_reencode_verbatim() {
        for (name, text) in [
            ("6x6", fixtures::KNIGHT_6X6),
            ("18x18", fixtures::LEAPER45_18X18),
            ("22x22", fixtures::LEAPER1_10_22X22),
        ] {
            let doc = GridDocument::parse(text).unwrap();
            let again = encode_grid(&doc.to_tour(), doc.radix).unwrap();
            assert_eq!(again, text, "{name}");
        }
    }

    #[test]
    fn knight_6x6_values() {
        let doc = GridDocument::parse(fixtures::KNIGHT_6X6).unwrap();
        // "36" in radix 9 is 33, "38" is 35
        assert_eq!(doc.body[0][1], 33);
        assert_eq!(doc.body[1][2], 35);
    }

    #[test]
    fn duplicate_index_is_rejected() {
        let text = "leaper 1 2 1 2 10 open\n0 0\n";
        let err = GridDocument::parse(text).unwrap_err();
        match err {
            Error::Parse { row, column, message } => {
                assert_eq!((row, column), (2, 2));
                assert!(message.contains("not a permutation"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_digits_and_shape() {
        assert!(GridDocument::parse("leaper 1 2 1 2 9 open\n0 9\n").is_err());
        assert!(GridDocument::parse("leaper 1 2 2 2 10 open\n0 1\n").is_err());
        assert!(GridDocument::parse("leaper 1 2 1 2 10 open\n0 1 2\n").is_err());
        assert!(GridDocument::parse("leaper 1 2 1 2 7 open\n0 1\n").is_err());
        assert!(GridDocument::parse("leaper 1 2 1 2 10 maybe\n0 1\n").is_err());
        assert!(GridDocument::parse("").is_err());
    }

    #[test]
    fn adjacency_violation_names_cell() {
        // swap two entries of the 6x6 fixture
        let doc = GridDocument::parse(fixtures::KNIGHT_6X6).unwrap();
        let mut body = doc.body.clone();
        let tmp = body[0][0];
        body[0][0] = body[0][1];
        body[0][1] = tmp;
        let text = GridDocument { body, ..doc }.to_text();
        let err = decode_grid(&text).unwrap_err();
        assert!(matches!(err, Error::Parse { row: 2..=7, .. }), "{err}");
    }
}
