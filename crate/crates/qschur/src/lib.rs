//! Box operators on compositions and the Schur-like bases they control.
//!
//! The objects here are integer compositions: finite sequences of positive
//! integers, drawn as left-justified rows of boxes (first part on top). Weak
//! compositions allow zero parts; `flatten` forgets them. Four partial
//! operators move single boxes or whole rows:
//!
//!   * `remove_box(i)` subtracts 1 from the rightmost part equal to i
//!   * `append_row(i)` appends a part i at the bottom
//!   * `jdt(i)` slides a box into a new bottom row: `append_row(i)` after
//!     `remove_set({1, ..., i-1})`
//!   * `add_box(1)` prepends a part 1; `add_box(i)` adds 1 to the leftmost
//!     part equal to i-1
//!
//! A partial operator that finds no part to act on returns `None`, and `None`
//! propagates through composites. Iterating the operators yields four partial
//! orders on compositions (`posets`), which pair up into dual graded and dual
//! filtered graphs (`dualgraphs`). The same combinatorics expands
//! quasisymmetric Schur functions in the fundamental basis (`qsym`) and
//! drives Pieri-type multiplication rules, straight and skew, for
//! quasisymmetric and noncommutative Schur functions (`pieri`).

pub mod compositions;
pub mod dualgraphs;
pub mod formal;
pub mod operators;
pub mod pieri;
pub mod posets;
pub mod qsym;

pub use compositions::{Composition, DescentSet, WeakComposition};
pub use formal::FormalSum;
pub use posets::SkewShape;
