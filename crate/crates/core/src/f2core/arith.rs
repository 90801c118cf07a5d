//! Integer combinatorics mod 2: binary digit counts, 2-adic valuation and
//! binomial coefficients with possibly negative upper index.

use serde::Serialize;

use crate::error::{Error, Result};

/// Number of ones in the binary expansion of `n`.
pub fn alpha2(n: u64) -> u32 {
    n.count_ones()
}

/// Largest `i` with `2^i | n`. Undefined for `n = 0`.
pub fn nu2(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::Domain("nu2(0) is undefined".into()));
    }
    Ok(n.trailing_zeros())
}

/// Coefficient of `x^i` in `(1 + x)^j` over F2.
///
/// For `j >= 0` this is Lucas: the bits of `i` must be a subset of those of
/// `j`. For `j < 0` the upper index is shifted by a power of two `2^N > i`,
/// which leaves every coefficient below `x^{2^N}` unchanged because
/// `(1 + x)^{2^N} = 1 + x^{2^N}` over F2.
pub fn binom_mod2(j: i64, i: u64) -> bool {
    let j = if j >= 0 {
        j as u64
    } else {
        let need = (64 - i.leading_zeros()).max(64 - j.unsigned_abs().leading_zeros()) + 1;
        assert!(need < 64, "binomial arguments too large: ({j}, {i})");
        ((1i64 << need) + j) as u64
    };
    i & j == i
}

/// [`binom_mod2`] for callers holding a signed lower index.
pub fn try_binom_mod2(j: i64, i: i64) -> Result<bool> {
    if i < 0 {
        return Err(Error::Domain(format!(
            "binomial lower index {i} is negative"
        )));
    }
    Ok(binom_mod2(j, i as u64))
}

/// Binary expansion data of a nonnegative integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinaryProfile {
    pub n: u64,
    pub alpha2: u32,
    /// `None` for `n = 0`.
    pub nu2: Option<u32>,
    /// Positions of the set bits, increasing.
    pub exponents: Vec<u32>,
}

impl BinaryProfile {
    pub fn new(n: u64) -> Self {
        let exponents: Vec<u32> = (0..64).filter(|&e| n >> e & 1 == 1).collect();
        BinaryProfile {
            n,
            alpha2: alpha2(n),
            nu2: nu2(n).ok(),
            exponents,
        }
    }
}
