//! Exact characters of symmetric groups on rectangular Young diagrams.
//!
//! The normalized character `Ch_π(λ) = n^{↓k} χ^λ_{π ∪ 1^{n-k}} / f^λ` is
//! computed three independent ways, and every route is exact:
//!
//! - [`mn_oracle`]: the Murnaghan–Nakayama rule, usable on any shape;
//! - [`stanley`]: Stanley's factorization sum for `p × q`, numerically and as
//!   a polynomial in `ℤ[P, Q]`;
//! - [`closed`]: product formulas for a single cycle on an almost-square
//!   rectangle, polynomial in the size of the input.
//!
//! [`cli`] holds the command implementations behind the `rectchar` binary.

pub mod cli;
pub mod closed;
pub mod exact;
pub mod mn_oracle;
pub mod poly;
pub mod stanley;
pub mod young;

pub use closed::{ch_rect_fast, closed_char_ed, corollary_poly, CycleParity, DiffParity, Family};
pub use exact::{HalfInt, Int, Rat};
pub use mn_oracle::{character_mn, normalized_character, one_cycle_character};
pub use poly::{BiPoly, DEPoly, JNPoly};
pub use stanley::{stanley_eval, stanley_poly, substitute_ed};
pub use young::{rectangle, Partition};
