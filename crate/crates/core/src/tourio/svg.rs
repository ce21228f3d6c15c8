//! SVG 1.1 drawings of tours: the board lattice plus one line per move.

use std::fmt::Write as _;

use crate::tour::Tour;

const CELL: usize = 20;

/// Ranks run down the page, files across. Closed tours include the closing
/// move, so they draw `mn` segments and open paths `mn - 1`.
pub fn render_svg(tour: &Tour) -> String {
    let board = tour.board();
    let (w, h) = (board.n() * CELL, board.m() * CELL);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(
        out,
        "<title>{} leaper {} on {}</title>",
        tour.spec(),
        if tour.closed() { "circuit" } else { "path" },
        board
    );
    let _ = writeln!(out, "<rect width=\"{w}\" height=\"{h}\" fill=\"#ffffff\"/>");
    out.push_str("<g stroke=\"#cccccc\" stroke-width=\"1\">\n");
    for x in 0..=board.m() {
        let _ = writeln!(out, "<line x1=\"0\" y1=\"{0}\" x2=\"{w}\" y2=\"{0}\"/>", x * CELL);
    }
    for y in 0..=board.n() {
        let _ = writeln!(out, "<line x1=\"{0}\" y1=\"0\" x2=\"{0}\" y2=\"{h}\"/>", y * CELL);
    }
    out.push_str("</g>\n");
    out.push_str("<g stroke=\"#1f4e9a\" stroke-width=\"1.5\">\n");
    let center = |v: usize| v * CELL + CELL / 2;
    for (a, b) in tour.moves() {
        let _ = writeln!(
            out,
            "<line class=\"move\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            center(a.y),
            center(a.x),
            center(b.y),
            center(b.x)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Number of move segments in a rendering.
pub fn count_moves(svg: &str) -> usize {
    svg.matches("class=\"move\"").count()
}
