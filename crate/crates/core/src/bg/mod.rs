//! Maps between dual Brown-Gitler modules and the extensions `Q(n, m)`.

mod maps;
mod qmodule;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::f2core::F2Vector;
use crate::graded::{module_from_weight, FiniteGradedModule};
use crate::polyalg::{Monomial, Polynomial, MAX_ENUMERABLE_WEIGHT};

pub use maps::{
    dot_sq, mahowald_exact, mu, p_k_map, p_map, q1_representatives, q_bar_agrees, q_map, sigma_map,
};
pub use qmodule::{build_q_module, QModule};

const CACHE_SLOTS: usize = MAX_ENUMERABLE_WEIGHT as usize + 1;

/// `J(n)`, built once per process.
pub fn j_module(n: u64) -> Result<Arc<FiniteGradedModule>> {
    static CACHE: OnceLock<Vec<OnceLock<Arc<FiniteGradedModule>>>> = OnceLock::new();
    if n > MAX_ENUMERABLE_WEIGHT {
        return Err(Error::Resource(format!(
            "J({n}) exceeds the supported weight {MAX_ENUMERABLE_WEIGHT}"
        )));
    }
    let slots = CACHE.get_or_init(|| (0..CACHE_SLOTS).map(|_| OnceLock::new()).collect());
    let j = slots[n as usize]
        .get_or_init(|| Arc::new(module_from_weight(n).expect("weight is within range")));
    Ok(j.clone())
}

/// Monomial basis of a module whose labels are monomials, by degree.
pub(crate) struct MonomialBasis {
    lo: i32,
    monomials: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

impl MonomialBasis {
    pub(crate) fn of(module: &FiniteGradedModule) -> Result<Self> {
        let mut monomials = Vec::new();
        let mut index = Vec::new();
        for d in module.degrees() {
            let ms = module
                .labels_in(d)
                .iter()
                .map(|l| l.parse::<Monomial>())
                .collect::<Result<Vec<_>>>()?;
            index.push(ms.iter().enumerate().map(|(i, &m)| (m, i)).collect());
            monomials.push(ms);
        }
        Ok(MonomialBasis {
            lo: module.lo(),
            monomials,
            index,
        })
    }

    pub(crate) fn monomial(&self, d: i32, idx: usize) -> Monomial {
        self.monomials[(d - self.lo) as usize][idx]
    }

    pub(crate) fn index(&self, d: i32, m: &Monomial) -> Option<usize> {
        usize::try_from(d - self.lo)
            .ok()
            .and_then(|k| self.index.get(k))
            .and_then(|ix| ix.get(m).copied())
    }

    pub(crate) fn dim(&self, d: i32) -> usize {
        usize::try_from(d - self.lo)
            .ok()
            .and_then(|k| self.monomials.get(k))
            .map_or(0, Vec::len)
    }

    pub(crate) fn polynomial(&self, d: i32, v: &F2Vector) -> Polynomial {
        let mut p = Polynomial::zero();
        for i in v.ones() {
            p.add_term(self.monomial(d, i));
        }
        p
    }

    /// Coordinates of a polynomial homogeneous of degree `d`.
    pub(crate) fn vector(&self, d: i32, p: &Polynomial) -> Result<F2Vector> {
        let mut v = F2Vector::zeros(self.dim(d));
        for m in p.terms() {
            let i = self.index(d, m).ok_or_else(|| {
                Error::Domain(format!("{m} is not a basis monomial in degree {d}"))
            })?;
            v.flip(i);
        }
        Ok(v)
    }
}

/// Coordinates of a polynomial in `J(n)`, with its degree.
pub fn j_vector(n: u64, p: &Polynomial) -> Result<(i32, F2Vector)> {
    let d = p
        .terms()
        .next()
        .map(|m| m.degree() as i32)
        .ok_or_else(|| Error::Domain("the zero polynomial has no degree".into()))?;
    if !p.is_homogeneous_of_weight(n) || !p.is_homogeneous_of_degree(d as u32) {
        return Err(Error::Domain(format!(
            "{p} is not homogeneous of weight {n}"
        )));
    }
    let j = j_module(n)?;
    let basis = MonomialBasis::of(&j)?;
    Ok((d, basis.vector(d, p)?))
}
