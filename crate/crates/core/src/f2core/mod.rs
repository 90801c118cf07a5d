//! Linear algebra over F2 and the small amount of integer combinatorics
//! (binary digits, 2-adic valuations, binomials mod 2) everything else uses.

mod arith;
mod matrix;

pub use arith::{alpha2, binom_mod2, nu2, try_binom_mod2, BinaryProfile};
pub use matrix::{AffineSolution, EchelonBasis, F2Matrix, F2Vector, WORD_BITS};
