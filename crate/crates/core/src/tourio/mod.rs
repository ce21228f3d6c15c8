//! Text formats for tours and instances: grids, TSPLIB, SVG.

pub mod fixtures;
mod grid;
mod svg;
mod tsplib;

pub use grid::{decode_grid, digit_width, encode_grid, parse_grid, GridDocument};
pub use svg::{count_moves, render_svg};
pub use tsplib::{export_tsplib, TsplibInstance};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{construct_thm4, construct_thm5, construct_thm6};

    #[test]
    fn construction_round_trips() {
        let mut tours = Vec::new();
        for r in 1..=4 {
            tours.push(construct_thm4(r).unwrap());
        }
        for k in 3..=4 {
            tours.push(construct_thm5(k).unwrap());
        }
        for k in 2..=4 {
            tours.push(construct_thm6(k).unwrap());
        }
        for t in &tours {
            for radix in [9, 10] {
                let text = encode_grid(t, radix).unwrap();
                assert_eq!(decode_grid(&text).unwrap(), t.canonical());
                assert_eq!(parse_grid(&text).unwrap(), *t);
            }
        }
    }
}
