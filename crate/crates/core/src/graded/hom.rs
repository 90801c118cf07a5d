use std::sync::Arc;

use crate::error::{Error, Result};
use crate::f2core::{F2Matrix, F2Vector};

use super::map::{xor_row, ModuleMap};
use super::module::FiniteGradedModule;

/// The unique A-linear map `f: M -> J(l)` whose top component, followed by
/// the projection onto `x_0^l`, is the functional `phi` on `M^l`.
///
/// `target` must be `J(l)`: its top degree `l` is one-dimensional and it is
/// injective in the unstable category, so the blocks of `f` are determined
/// from the top down. In degree `d` the block `X` solves
/// `X * [Sq^{2^j}_J] = [Sq^{2^j}_M * f_{d+2^j}]` over all `j` with
/// `d + 2^j <= l`; injectivity of the left-hand operator certifies
/// uniqueness. The result is then checked against every `Sq^i`.
pub fn hom_solver(
    source: Arc<FiniteGradedModule>,
    target: Arc<FiniteGradedModule>,
    phi: &F2Vector,
) -> Result<ModuleMap> {
    let l = target.hi();
    if target.dim(l) != 1 || !target.is_complete() {
        return Err(Error::contract(format!(
            "hom target {} must be J(l) with a one-dimensional top degree",
            target.name()
        )));
    }
    if let Some(w) = source.window_top() {
        if w < l {
            return Err(Error::contract(format!(
                "{} is truncated at {w}, below the target top degree {l}",
                source.name()
            )));
        }
    }
    if phi.len() != source.dim(l) {
        return Err(Error::contract(format!(
            "functional has length {} but {} has dimension {} in degree {l}",
            phi.len(),
            source.name(),
            source.dim(l)
        )));
    }
    let name = format!("{} -> {}", source.name(), target.name());
    if source.total_dim() == 0 {
        return Ok(ModuleMap::zero(name, source, target));
    }
    let lo = source.lo();
    let mut blocks: Vec<F2Matrix> = source
        .degrees()
        .map(|d| F2Matrix::zeros(source.dim(d), target.dim(d)))
        .collect();
    if l >= lo && l <= source.hi() {
        let top = &mut blocks[(l - lo) as usize];
        for v in phi.ones() {
            top.set(v, 0, true);
        }
    }
    for d in (lo..=source.hi().min(l - 1)).rev() {
        let rows = source.dim(d);
        let jd = target.dim(d);
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        let mut j = 0;
        while d + (1 << j) <= l {
            let s = 1u32 << j;
            let e = d + s as i32;
            j += 1;
            let out = target.dim(e);
            if out == 0 {
                continue;
            }
            lhs.push(target.sq_matrix(s, d).into_owned());
            let mut r = F2Matrix::zeros(rows, out);
            if e <= source.hi() {
                let fe = &blocks[(e - lo) as usize];
                for v in 0..rows {
                    let mut acc = F2Vector::zeros(out);
                    source.for_each_sq_one(s, d, v, &mut |k| xor_row(&mut acc, fe, k));
                    r.set_row(v, &acc);
                }
            }
            rhs.push(r);
        }
        let rhs = F2Matrix::hstack(rows, &rhs.iter().collect::<Vec<_>>());
        if jd == 0 {
            if !rhs.is_zero() {
                return Err(Error::theory(format!(
                    "{name}: no map in degree {d} is compatible with the degrees above"
                )));
            }
            continue;
        }
        let lhs = F2Matrix::hstack(jd, &lhs.iter().collect::<Vec<_>>());
        if lhs.rank() != jd {
            return Err(Error::theory(format!(
                "{name}: degree {d} of {} is not detected by squares into degree {l}",
                target.name()
            )));
        }
        let x = lhs.solve_left(&rhs).map_err(|col| {
            Error::theory(format!(
                "{name}: linear system in degree {d} is inconsistent (column {col})"
            ))
        })?;
        blocks[(d - lo) as usize] = x;
    }
    let mut f = ModuleMap::new(name.clone(), source, target, blocks)?;
    f.verify_a_linear()
        .map_err(|e| Error::theory(format!("{name}: solver output fails re-verification: {e}")))?;
    Ok(f)
}

/// Dimension of the space of A-linear maps `M -> J(l)`, from one linear
/// system in all matrix entries with every `Sq^i` as a constraint.
pub fn hom_space_dimension(source: &FiniteGradedModule, target: &FiniteGradedModule) -> usize {
    let l = target.hi();
    let degs: Vec<i32> = source.degrees().filter(|&d| d <= l).collect();
    let mut offset = std::collections::HashMap::new();
    let mut unknowns = 0;
    for &d in &degs {
        offset.insert(d, unknowns);
        unknowns += source.dim(d) * target.dim(d);
    }
    let var = |d: i32, v: usize, u: usize| offset[&d] + v * target.dim(d) + u;
    let mut constraints: Vec<F2Vector> = Vec::new();
    for &d in &degs {
        for i in 1..=(l - d) as u32 {
            let e = d + i as i32;
            let out = target.dim(e);
            if out == 0 {
                continue;
            }
            let sq_j = target.sq_matrix(i, d);
            let sq_m = source.sq_matrix(i, d);
            for v in 0..source.dim(d) {
                for w in 0..out {
                    let mut row = F2Vector::zeros(unknowns);
                    // (f_d Sq^i)[v, w]
                    for u in 0..target.dim(d) {
                        if sq_j.get(u, w) {
                            row.flip(var(d, v, u));
                        }
                    }
                    // (Sq^i f_e)[v, w]
                    if e <= source.hi() {
                        for k in sq_m.row_ones(v) {
                            row.flip(var(e, k, w));
                        }
                    }
                    if !row.is_zero() {
                        constraints.push(row);
                    }
                }
            }
        }
    }
    let system = F2Matrix::from_rows(unknowns, &constraints);
    unknowns - system.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::module::module_from_weight;

    fn j(n: u64) -> Arc<FiniteGradedModule> {
        Arc::new(module_from_weight(n).unwrap())
    }

    #[test]
    fn j4_to_j2() {
        let f = hom_solver(j(4), j(2), &F2Vector::from_bools(&[true])).unwrap();
        assert!(f.is_a_linear());
        let show = |d: i32| -> Vec<String> {
            (0..f.source().dim(d))
                .map(|v| {
                    f.image_of(d, v)
                        .ones()
                        .map(|k| f.target().label(d, k).to_string())
                        .collect::<Vec<_>>()
                        .join("+")
                })
                .collect()
        };
        assert_eq!(show(1), ["x1"]);
        assert_eq!(show(2), ["x0^2"]);
        assert!(f.block(3).is_zero() && f.block(4).is_zero());
    }

    #[test]
    fn above_the_top_is_zero() {
        let f = hom_solver(j(4), j(7), &F2Vector::zeros(0)).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn identity_recovered() {
        for n in 1..=14 {
            let jn = j(n);
            let f = hom_solver(jn.clone(), jn.clone(), &F2Vector::from_bools(&[true])).unwrap();
            for d in jn.degrees() {
                assert_eq!(f.block(d), F2Matrix::identity(jn.dim(d)), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn solution_space_dimension() {
        for n in 1..=12u64 {
            for l in 1..=n {
                let (jn, jl) = (
                    module_from_weight(n).unwrap(),
                    module_from_weight(l).unwrap(),
                );
                assert_eq!(
                    hom_space_dimension(&jn, &jl),
                    jn.dim(l as i32),
                    "n={n} l={l}"
                );
            }
        }
    }

    #[test]
    fn wrong_length_functional() {
        assert!(hom_solver(j(4), j(2), &F2Vector::zeros(3)).is_err());
    }
}
