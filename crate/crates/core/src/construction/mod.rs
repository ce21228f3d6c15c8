//! Hamiltonian circuits from explicit two-factor layouts.
//!
//! Each construction lays out a spanning 2-regular edge set on the board,
//! traces it into disjoint cycles, and merges the cycles with splices. The
//! generic engine here validates every step, so a layout mistake shows up as
//! a structural error rather than a bad tour.

mod engine;
mod long_oblong;
mod long_square;
mod near_square;

pub use engine::{splice, trace_cycles, CircuitDecomposition, SplicePair, TwoFactor};
pub use long_oblong::construct_thm6;
pub use long_square::{construct_thm5, long_square_circuits, long_square_splices};
pub use near_square::{construct_thm4, near_square_two_factor, NearSquareLayout};
