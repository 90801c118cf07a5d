use itertools::Itertools;
use serde::Serialize;

use crate::bg::{j_module, j_vector, p_map};
use crate::error::{Error, Result};
use crate::f2core::{alpha2, binom_mod2, nu2, BinaryProfile};
use crate::graded::{class_maps_to_zero, is_homology_iso, margolis};
use crate::polyalg::Monomial;

use super::Limits;

/// `alpha(l) = alpha(n)` and `nu(l) = nu(n)`.
pub fn good_pair(n: u64, l: u64) -> Result<bool> {
    if n == 0 || l == 0 {
        return Err(Error::Domain(format!(
            "good_pair needs n, l >= 1, got ({n}, {l})"
        )));
    }
    Ok(alpha2(n) == alpha2(l) && nu2(n)? == nu2(l)?)
}

/// Whether `H(J(a); Q_1)` and `H(J(b); Q_1)` have the same dimension in
/// every degree.
pub fn q1_profiles_agree(a: u64, b: u64) -> Result<bool> {
    let pa = margolis(&*j_module(a)?, 1)?.profile();
    let pb = margolis(&*j_module(b)?, 1)?.profile();
    Ok(pa == pb)
}

/// The permutations `sigma` with `k_c >= j_{sigma(c)}` for every `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationCount {
    pub count: u64,
    pub odd: bool,
    /// `s(c) = #{b : j_b <= k_c}`.
    pub profile: Vec<usize>,
    /// `j_1 <= k_1 < j_2 <= k_2 < ... < j_d <= k_d`.
    pub interlaced: bool,
}

/// Counts `S(J, K)` by enumerating all permutations, and checks that the
/// count is odd exactly when `J` and `K` interlace, in which case it is 1.
pub fn s_jk(j: &[u32], k: &[u32]) -> Result<PermutationCount> {
    s_jk_with(j, k, &Limits::default())
}

pub fn s_jk_with(j: &[u32], k: &[u32], limits: &Limits) -> Result<PermutationCount> {
    if j.len() != k.len() {
        return Err(Error::contract(format!(
            "|J| = {} but |K| = {}",
            j.len(),
            k.len()
        )));
    }
    for set in [j, k] {
        if !set.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::contract(format!(
                "{set:?} is not strictly increasing"
            )));
        }
    }
    let d = j.len();
    if d > limits.max_permutation_size {
        return Err(Error::Resource(format!(
            "enumerating S_{d} exceeds the limit {}",
            limits.max_permutation_size
        )));
    }
    let count = (0..d)
        .permutations(d)
        .filter(|sigma| (0..d).all(|c| k[c] >= j[sigma[c]]))
        .count() as u64;
    let profile = k
        .iter()
        .map(|&kc| j.iter().filter(|&&jb| jb <= kc).count())
        .collect();
    let out = PermutationCount {
        count,
        odd: count % 2 == 1,
        profile,
        interlaced: interlaced(j, k),
    };
    if out.odd != out.interlaced || (out.odd && count != 1) {
        return Err(Error::theory(format!(
            "S({j:?}, {k:?}) has {count} elements but interlacing is {}",
            out.interlaced
        )));
    }
    Ok(out)
}

/// `j_0 <= k_0 < j_1 <= k_1 < ...` for equal-length increasing lists.
fn interlaced(j: &[u32], k: &[u32]) -> bool {
    (0..j.len()).all(|c| j[c] <= k[c] && j.get(c + 1).is_none_or(|&next| k[c] < next))
}

/// Which binomial the lemma is read with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MagicReading {
    /// `binom(m - n - 1, n)`, zero when `m - n - 1 < 0`.
    Proof,
    /// `binom(n - m - 1, n)` with the 2-adic extension to negative tops.
    Statement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MagicMismatch {
    pub n: u64,
    pub m: u64,
    pub binomial: bool,
    pub chain: bool,
}

/// For `n, m <= bound` with `alpha(m) = alpha(n) + 1`, writing
/// `m = l + 2^k` with `l < 2^k`: the binomial is odd exactly when
/// `m >= 2n` and the bits of `l` and `n` interlace.
pub fn magic_lemma_check(bound: u64) -> Result<Vec<MagicMismatch>> {
    magic_lemma_check_with(bound, MagicReading::Proof, &Limits::default())
}

pub fn magic_lemma_check_with(
    bound: u64,
    reading: MagicReading,
    limits: &Limits,
) -> Result<Vec<MagicMismatch>> {
    if bound > limits.max_magic_bound {
        return Err(Error::Resource(format!(
            "bound {bound} exceeds {}",
            limits.max_magic_bound
        )));
    }
    let mut out = Vec::new();
    for m in 1..=bound {
        let k = 63 - m.leading_zeros();
        let l = m - (1 << k);
        let lb = BinaryProfile::new(l).exponents;
        for n in 0..=bound {
            if alpha2(m) != alpha2(n) + 1 {
                continue;
            }
            let binomial = match reading {
                MagicReading::Proof => {
                    let top = m as i64 - n as i64 - 1;
                    top >= 0 && binom_mod2(top, n)
                }
                MagicReading::Statement => binom_mod2(n as i64 - m as i64 - 1, n),
            };
            let nb = BinaryProfile::new(n).exponents;
            let chain = m >= 2 * n && interlaced(&lb, &nb);
            if binomial != chain {
                out.push(MagicMismatch {
                    n,
                    m,
                    binomial,
                    chain,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixedMismatch {
    pub source: u64,
    pub target: u64,
    /// The class expected to die, or `None` when the map is a `Q_1`-iso.
    pub class: Option<String>,
}

/// For `a, b <= bound` of different parity whose `Q_1`-homologies agree as
/// graded spaces, `p(a, b)` kills `x(n)^2` (`a = 2n`) or `x_0 x(n)^2`
/// (`a = 2n + 1`), and so is not a `Q_1`-isomorphism.
pub fn mixed_parity_vanishing(bound: u64) -> Result<Vec<MixedMismatch>> {
    mixed_parity_vanishing_with(bound, &Limits::default())
}

pub fn mixed_parity_vanishing_with(bound: u64, limits: &Limits) -> Result<Vec<MixedMismatch>> {
    if bound > limits.max_module_weight {
        return Err(Error::Resource(format!(
            "bound {bound} exceeds the module limit {}",
            limits.max_module_weight
        )));
    }
    let mut out = Vec::new();
    for a in 2..=bound {
        for b in 2..=bound {
            if (a + b) % 2 == 0 || !q1_profiles_agree(a, b)? {
                continue;
            }
            let half = a / 2;
            let sq = Monomial::bottom(half).mul(&Monomial::bottom(half));
            let class = Monomial::power(0, (a % 2) as u16).mul(&sq);
            let (d, z) = j_vector(a, &[class].into_iter().collect())?;
            let p = p_map(a, b)?;
            if !class_maps_to_zero(&p, 1, d, &z) {
                out.push(MixedMismatch {
                    source: a,
                    target: b,
                    class: Some(class.to_string()),
                });
            } else if is_homology_iso(&p, 1)? {
                out.push(MixedMismatch {
                    source: a,
                    target: b,
                    class: None,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn good_pair_examples() {
        assert!(good_pair(5, 3).unwrap());
        assert!(!good_pair(2, 1).unwrap());
        assert!(good_pair(0, 3).is_err());
    }

    #[test]
    fn s_jk_examples() {
        let one = s_jk(&[2], &[3]).unwrap();
        assert_eq!((one.count, one.interlaced), (1, true));
        let two = s_jk(&[1, 2], &[2, 3]).unwrap();
        assert_eq!((two.count, two.odd, two.interlaced), (2, false, false));
        assert_eq!(two.profile, [2, 2]);
        let empty = s_jk(&[], &[]).unwrap();
        assert_eq!((empty.count, empty.interlaced), (1, true));
        assert!(s_jk(&[2, 1], &[3, 4]).is_err());
        assert!(matches!(s_jk(&[0; 9], &[0; 9]), Err(Error::Contract(_))));
        let big: Vec<u32> = (0..9).collect();
        assert!(matches!(s_jk(&big, &big), Err(Error::Resource(_))));
    }

    #[test]
    fn magic_small() {
        assert!(magic_lemma_check(64).unwrap().is_empty());
        assert!(
            !magic_lemma_check_with(64, MagicReading::Statement, &Limits::default())
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn mixed_small() {
        assert!(mixed_parity_vanishing(12).unwrap().is_empty());
    }
}
