//! Plain-text certificates.
//!
//! ```text
//! certificate <kind>
//! leaper <r> <s> <m> <n>
//! <evidence lines>
//! end
//! ```
//!
//! Lines starting with `#` and blank lines are ignored when parsing.

use std::fmt::Write as _;

use super::{AbcColoring, AbcRule, AbcTag, BoundKind, Certificate, CertificateKind, Evidence};
use super::{FileLabel, FileType, FileTypeReason, Naming, ParityCount};
use crate::board::{Board, Cell, LeaperSpec};
use crate::error::{Error, Result};
use crate::search::{Contradiction, Derivation, Rule};

pub(super) fn write(cert: &Certificate) -> String {
    let mut out = String::new();
    let b = cert.board;
    let _ = writeln!(out, "certificate {}", cert.kind());
    let _ = writeln!(out, "leaper {} {} {} {}", cert.spec.r(), cert.spec.s(), b.m(), b.n());
    match &cert.evidence {
        Evidence::Disconnected { from, to } => {
            let _ = writeln!(out, "cells {} {} {} {}", from.x, from.y, to.x, to.y);
        }
        Evidence::OddArea => {
            let _ = writeln!(out, "area {}", b.area());
        }
        Evidence::Abc(c) => {
            let axis = if c.transposed { "files" } else { "ranks" };
            let _ = writeln!(out, "rule {} {axis}", c.rule);
            for row in c.tags.chunks(b.n()) {
                let line: String = row.iter().map(|t| t.symbol()).collect();
                let _ = writeln!(out, "row {line}");
            }
        }
        Evidence::Forced { contradiction, log } => {
            match contradiction {
                Contradiction::ThreeForced { vertex } => {
                    let _ = writeln!(out, "contradiction three-forced {} {}", vertex.x, vertex.y);
                }
                Contradiction::PrematureCycle { length } => {
                    let _ = writeln!(out, "contradiction premature-cycle {length}");
                }
                Contradiction::Stranded { vertex } => {
                    let _ = writeln!(out, "contradiction stranded {} {}", vertex.x, vertex.y);
                }
            }
            for d in log {
                let rule = match d.rule {
                    Rule::DegreeTwo => "degree-two",
                    Rule::Saturated => "saturated",
                };
                let (u, w) = d.edge;
                let _ = writeln!(
                    out,
                    "step {rule} {} {} {} {} {} {} {}",
                    d.vertex.x,
                    d.vertex.y,
                    u.x,
                    u.y,
                    w.x,
                    w.y,
                    if d.forced { "in" } else { "out" }
                );
            }
        }
        Evidence::FileTypes(reason) => {
            let (k, d) = super::split_width(files_of(cert), cert.spec.s());
            let _ = writeln!(out, "split {k} {d}");
            let _ = match reason {
                FileTypeReason::Conflict { file, first, second } => {
                    writeln!(out, "conflict {} {} {first} {second}", file.a, file.b)
                }
                FileTypeReason::Loop { file, first, second } => {
                    writeln!(out, "loop {} {} {first} {second}", file.a, file.b)
                }
                FileTypeReason::MissingFile { file, needs } => {
                    writeln!(out, "missing {} {} {} {}", file.a, file.b, needs.a, needs.b)
                }
                FileTypeReason::OddArea => writeln!(out, "odd-area"),
                FileTypeReason::Parity(c) => writeln!(out, "parity {}", counts(c)),
                FileTypeReason::OddExcess { count, special } => {
                    writeln!(out, "odd-excess {} {} {}", counts(count), special.a, special.b)
                }
            };
        }
        Evidence::Bound { kind, bound, actual } => {
            let _ = writeln!(out, "bound {kind} {bound} {actual}");
        }
    }
    out.push_str("end\n");
    out
}

fn files_of(cert: &Certificate) -> usize {
    let b = cert.board;
    if b.m() == 2 * cert.spec.r() + 1 {
        b.n()
    } else {
        b.m()
    }
}

fn counts(c: &ParityCount) -> String {
    format!(
        "{} {} {} {} {} {} {} {}",
        match c.naming {
            Naming::Own => "own",
            Naming::NearEdge => "near-edge",
        },
        c.odd_files,
        c.even_files,
        c.odd_specified,
        c.even_specified,
        c.odd_unspecified,
        c.even_unspecified,
        c.absorbable
    )
}

struct Line<'a> {
    row: usize,
    tokens: Vec<&'a str>,
}

impl<'a> Line<'a> {
    fn err(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            row: self.row,
            column,
            message: message.into(),
        }
    }

    fn expect(&self, keyword: &str, len: usize) -> Result<()> {
        if self.tokens[0] != keyword {
            return Err(self.err(1, format!("expected '{keyword}', found '{}'", self.tokens[0])));
        }
        if self.tokens.len() != len {
            return Err(self.err(
                1,
                format!("'{keyword}' takes {} fields, found {}", len - 1, self.tokens.len() - 1),
            ));
        }
        Ok(())
    }

    fn num(&self, i: usize) -> Result<usize> {
        self.tokens[i]
            .parse()
            .map_err(|_| self.err(i + 1, format!("expected a number, found '{}'", self.tokens[i])))
    }

    fn cell(&self, i: usize) -> Result<Cell> {
        Ok(Cell::new(self.num(i)?, self.num(i + 1)?))
    }

    fn file_type(&self, i: usize) -> Result<FileType> {
        FileType::from_symbol(self.tokens[i])
            .ok_or_else(|| self.err(i + 1, format!("unknown file type '{}'", self.tokens[i])))
    }

    fn counts(&self, i: usize) -> Result<ParityCount> {
        let naming = match self.tokens[i] {
            "own" => Naming::Own,
            "near-edge" => Naming::NearEdge,
            other => return Err(self.err(i + 1, format!("unknown naming '{other}'"))),
        };
        Ok(ParityCount {
            naming,
            odd_files: self.num(i + 1)?,
            even_files: self.num(i + 2)?,
            odd_specified: self.num(i + 3)?,
            even_specified: self.num(i + 4)?,
            odd_unspecified: self.num(i + 5)?,
            even_unspecified: self.num(i + 6)?,
            absorbable: self.num(i + 7)?,
        })
    }
}

pub(super) fn parse(input: &str) -> Result<Certificate> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| Line {
            row: i + 1,
            tokens: l.split_whitespace().collect(),
        })
        .filter(|l| !l.tokens.is_empty() && !l.tokens[0].starts_with('#'));
    let eof = |row| Error::Parse {
        row,
        column: 1,
        message: "unexpected end of input".into(),
    };
    let head = lines.next().ok_or_else(|| eof(1))?;
    head.expect("certificate", 2)?;
    let kind = CertificateKind::from_name(head.tokens[1])
        .ok_or_else(|| head.err(2, format!("unknown certificate kind '{}'", head.tokens[1])))?;
    let dims = lines.next().ok_or_else(|| eof(head.row + 1))?;
    dims.expect("leaper", 5)?;
    let spec = LeaperSpec::new(dims.num(1)?, dims.num(2)?).map_err(|e| dims.err(2, e.to_string()))?;
    let board = Board::new(dims.num(3)?, dims.num(4)?).map_err(|e| dims.err(4, e.to_string()))?;
    let mut last = dims.row;
    let mut body: Vec<Line> = Vec::new();
    let mut closed = false;
    for line in lines {
        last = line.row;
        if line.tokens[0] == "end" {
            line.expect("end", 1)?;
            closed = true;
            break;
        }
        body.push(line);
    }
    if !closed {
        return Err(eof(last + 1));
    }
    let evidence = match kind {
        CertificateKind::Disconnected => {
            let l = one(&body, last)?;
            l.expect("cells", 5)?;
            Evidence::Disconnected {
                from: l.cell(1)?,
                to: l.cell(3)?,
            }
        }
        CertificateKind::OddArea => {
            let l = one(&body, last)?;
            l.expect("area", 2)?;
            if l.num(1)? != board.area() {
                return Err(l.err(2, "area does not match the board"));
            }
            Evidence::OddArea
        }
        CertificateKind::AbcColoring => parse_abc(&body, board, last)?,
        CertificateKind::ForcedContradiction => parse_forced(&body, last)?,
        CertificateKind::FileTypeConflict | CertificateKind::ParityImbalance => {
            let reason = parse_file_types(&body, last)?;
            let cert = Certificate::new(spec, board, Evidence::FileTypes(reason));
            if cert.kind() != kind {
                return Err(body[1].err(1, format!("reason does not belong to {kind}")));
            }
            cert.evidence
        }
        CertificateKind::BoundViolation => {
            let l = one(&body, last)?;
            l.expect("bound", 4)?;
            let bound_kind = BoundKind::from_name(l.tokens[1])
                .ok_or_else(|| l.err(2, format!("unknown bound '{}'", l.tokens[1])))?;
            Evidence::Bound {
                kind: bound_kind,
                bound: l.num(2)?,
                actual: l.num(3)?,
            }
        }
    };
    Ok(Certificate::new(spec, board, evidence))
}

fn one<'b, 'a>(body: &'b [Line<'a>], last: usize) -> Result<&'b Line<'a>> {
    match body {
        [l] => Ok(l),
        [] => Err(Error::Parse {
            row: last,
            column: 1,
            message: "missing evidence line".into(),
        }),
        [_, extra, ..] => Err(extra.err(1, "unexpected extra line")),
    }
}

fn parse_abc(body: &[Line], board: Board, last: usize) -> Result<Evidence> {
    let (head, rows) = body.split_first().ok_or_else(|| Error::Parse {
        row: last,
        column: 1,
        message: "missing rule line".into(),
    })?;
    head.expect("rule", 4)?;
    let value = head.num(2)?;
    let rule = match head.tokens[1] {
        "rank-offset" => AbcRule::RankOffset { t: value },
        "long-leaper" => AbcRule::LongLeaper { k: value },
        other => return Err(head.err(2, format!("unknown rule '{other}'"))),
    };
    let transposed = match head.tokens[3] {
        "ranks" => false,
        "files" => true,
        other => return Err(head.err(4, format!("expected 'ranks' or 'files', found '{other}'"))),
    };
    if rows.len() != board.m() {
        return Err(Error::Parse {
            row: last,
            column: 1,
            message: format!("expected {} rows, found {}", board.m(), rows.len()),
        });
    }
    let mut tags = Vec::with_capacity(board.area());
    for row in rows {
        row.expect("row", 2)?;
        let text = row.tokens[1];
        if text.chars().count() != board.n() {
            return Err(row.err(2, format!("expected {} tags", board.n())));
        }
        for ch in text.chars() {
            tags.push(AbcTag::from_symbol(ch).ok_or_else(|| row.err(2, format!("unknown tag '{ch}'")))?);
        }
    }
    Ok(Evidence::Abc(AbcColoring { rule, transposed, tags }))
}

fn parse_forced(body: &[Line], last: usize) -> Result<Evidence> {
    let (head, steps) = body.split_first().ok_or_else(|| Error::Parse {
        row: last,
        column: 1,
        message: "missing contradiction line".into(),
    })?;
    if head.tokens[0] != "contradiction" || head.tokens.len() < 2 {
        return Err(head.err(1, "expected 'contradiction'"));
    }
    let contradiction = match head.tokens[1] {
        "three-forced" => {
            head.expect("contradiction", 4)?;
            Contradiction::ThreeForced { vertex: head.cell(2)? }
        }
        "premature-cycle" => {
            head.expect("contradiction", 3)?;
            Contradiction::PrematureCycle { length: head.num(2)? }
        }
        "stranded" => {
            head.expect("contradiction", 4)?;
            Contradiction::Stranded { vertex: head.cell(2)? }
        }
        other => return Err(head.err(2, format!("unknown contradiction '{other}'"))),
    };
    let log = steps
        .iter()
        .map(|l| {
            l.expect("step", 9)?;
            let rule = match l.tokens[1] {
                "degree-two" => Rule::DegreeTwo,
                "saturated" => Rule::Saturated,
                other => return Err(l.err(2, format!("unknown rule '{other}'"))),
            };
            let forced = match l.tokens[8] {
                "in" => true,
                "out" => false,
                other => return Err(l.err(9, format!("expected 'in' or 'out', found '{other}'"))),
            };
            Ok(Derivation {
                rule,
                vertex: l.cell(2)?,
                edge: (l.cell(4)?, l.cell(6)?),
                forced,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Evidence::Forced { contradiction, log })
}

fn parse_file_types(body: &[Line], last: usize) -> Result<FileTypeReason> {
    let [split, l] = body else {
        return Err(Error::Parse {
            row: last,
            column: 1,
            message: "expected a split line and a reason line".into(),
        });
    };
    split.expect("split", 3)?;
    let label = |i| -> Result<FileLabel> { Ok(FileLabel::new(l.num(i)?, l.num(i + 1)?)) };
    Ok(match l.tokens[0] {
        "conflict" => {
            l.expect("conflict", 5)?;
            FileTypeReason::Conflict {
                file: label(1)?,
                first: l.file_type(3)?,
                second: l.file_type(4)?,
            }
        }
        "loop" => {
            l.expect("loop", 5)?;
            FileTypeReason::Loop {
                file: label(1)?,
                first: l.file_type(3)?,
                second: l.file_type(4)?,
            }
        }
        "missing" => {
            l.expect("missing", 5)?;
            FileTypeReason::MissingFile {
                file: label(1)?,
                needs: label(3)?,
            }
        }
        "odd-area" => {
            l.expect("odd-area", 1)?;
            FileTypeReason::OddArea
        }
        "parity" => {
            l.expect("parity", 9)?;
            FileTypeReason::Parity(l.counts(1)?)
        }
        "odd-excess" => {
            l.expect("odd-excess", 11)?;
            FileTypeReason::OddExcess {
                count: l.counts(1)?,
                special: label(9)?,
            }
        }
        other => return Err(l.err(1, format!("unknown reason '{other}'"))),
    })
}
