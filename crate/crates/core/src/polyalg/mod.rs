//! Polynomials in `Z/2[x_0, x_1, ...]` with the Steenrod action coming from
//! `x_k = x_k + x_{k-1}^2` under the total square, and the one-variable
//! `t`-modules used for twisting.
mod monomial;
mod steenrod;
mod tmodule;

pub use monomial::{monomials_of_weight, Monomial, Polynomial, GENERATORS, MAX_ENUMERABLE_WEIGHT};
pub use steenrod::{
    qm, qm_generator, qm_monomial, qm_via_commutator, sq, sq_monomial, sq_on_power, sq_word,
};
pub use tmodule::{t_qm, t_sq, TFamily, TModuleElement};
