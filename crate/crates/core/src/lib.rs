//! Generalised knight (`{r,s}`-leaper) graphs on rectangular boards.
//!
//! The crate decides connectivity exactly, builds Hamiltonian circuits from
//! explicit two-factor layouts, searches small boards exhaustively and emits
//! checkable certificates of non-Hamiltonicity.

pub mod board;
pub mod connectivity;
pub mod error;

pub use board::{build_graph, color_class, neighbors, Board, BoardGraph, Cell, Direction, LeaperSpec};
pub use error::{Error, Result};
pub mod certify;
pub mod construction;
pub mod search;
pub mod tour;
pub mod tourio;
