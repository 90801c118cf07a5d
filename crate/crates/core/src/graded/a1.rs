use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::f2core::{EchelonBasis, F2Vector};

use super::module::FiniteGradedModule;

/// Dimension of the subalgebra `A(1)` generated by `Sq^1` and `Sq^2`.
pub const A1_DIM: usize = 8;

/// Outcome of peeling free `A(1)`-summands off a module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum A1Decomposition {
    /// The module is free; one generator in each listed degree.
    Free {
        generators: Vec<i32>,
    },
    NotFree(A1Witness),
}

impl A1Decomposition {
    pub fn is_free(&self) -> bool {
        matches!(self, A1Decomposition::Free { .. })
    }

    pub fn generators(&self) -> Option<&[i32]> {
        match self {
            A1Decomposition::Free { generators } => Some(generators),
            A1Decomposition::NotFree(_) => None,
        }
    }
}

/// The element whose orbit broke freeness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct A1Witness {
    pub degree: i32,
    /// Basis labels of the offending element.
    pub element: Vec<String>,
    pub orbit_dim: usize,
    /// Generators peeled off before the failure.
    pub peeled: Vec<i32>,
}

/// Greedy decomposition into free `A(1)`-modules.
///
/// Repeatedly takes the lowest degree not yet spanned and, there, the first
/// basis vector outside the span; its `A(1)`-orbit must be 8-dimensional
/// and meet the span only in zero. Since free `A(1)`-modules are injective,
/// a free module passes with any choice of elements, and the generator
/// degrees do not depend on the tie-breaking.
pub fn a1_free_decomposition(module: &FiniteGradedModule) -> A1Decomposition {
    let mut span: BTreeMap<i32, EchelonBasis> = module
        .degrees()
        .map(|d| (d, EchelonBasis::new(module.dim(d))))
        .collect();
    let mut generators = Vec::new();
    loop {
        let next = span
            .iter()
            .find_map(|(&d, b)| b.first_missing_unit().map(|i| (d, i)));
        let Some((d, idx)) = next else {
            return A1Decomposition::Free { generators };
        };
        let v = F2Vector::unit(module.dim(d), idx);
        let orbit = a1_orbit(module, d, &v);
        let fail = |orbit_dim| {
            A1Decomposition::NotFree(A1Witness {
                degree: d,
                element: vec![module.label(d, idx).to_string()],
                orbit_dim,
                peeled: generators.clone(),
            })
        };
        if orbit.len() != A1_DIM {
            return fail(orbit.len());
        }
        for (e, w) in &orbit {
            if !span.get_mut(e).is_some_and(|b| b.insert(w)) {
                return fail(orbit.len());
            }
        }
        generators.push(d);
    }
}

/// A basis of the `A(1)`-submodule generated by `v`, as `(degree, vector)`.
pub fn a1_orbit(module: &FiniteGradedModule, d: i32, v: &F2Vector) -> Vec<(i32, F2Vector)> {
    let mut local: BTreeMap<i32, EchelonBasis> = BTreeMap::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([(d, v.clone())]);
    while let Some((e, w)) = queue.pop_front() {
        if w.is_zero() {
            continue;
        }
        let basis = local
            .entry(e)
            .or_insert_with(|| EchelonBasis::new(module.dim(e)));
        if !basis.insert(&w) {
            continue;
        }
        for i in [1u32, 2] {
            let img = module.apply_sq(i, e, &w);
            if !img.is_empty() {
                queue.push_back((e + i as i32, img));
            }
        }
        out.push((e, w));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::module::module_from_weight;

    #[test]
    fn small_weight_modules_are_not_free() {
        let j2 = module_from_weight(2).unwrap();
        let r = a1_free_decomposition(&j2);
        assert!(!r.is_free());
        for n in 2..=16 {
            assert!(!a1_free_decomposition(&module_from_weight(n).unwrap()).is_free());
        }
    }
}
