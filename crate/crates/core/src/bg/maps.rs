use std::sync::Arc;

use crate::error::{Error, Result};
use crate::f2core::{F2Matrix, F2Vector};
use crate::graded::{
    hom_solver, is_boundary, is_cycle, margolis, t_module, tensor, tensor_up_to,
    FiniteGradedModule, ModuleMap,
};
use crate::polyalg::{Monomial, Polynomial, TFamily, GENERATORS};

use super::{j_module, MonomialBasis};

fn all_ones(len: usize) -> F2Vector {
    F2Vector::from_indices(len, 0..len)
}

fn certified(mut f: ModuleMap) -> Result<ModuleMap> {
    f.verify_a_linear()
        .map_err(|e| Error::theory(format!("{}: {e}", f.name())))?;
    Ok(f)
}

/// Multiplication `J(n1) (x) J(n2) -> J(n1 + n2)`.
pub fn mu(n1: u64, n2: u64) -> Result<ModuleMap> {
    let (a, b) = (j_module(n1)?, j_module(n2)?);
    let target = j_module(n1 + n2)?;
    let (ba, bb, bt) = (
        MonomialBasis::of(&a)?,
        MonomialBasis::of(&b)?,
        MonomialBasis::of(&target)?,
    );
    let source = Arc::new(tensor(a.clone(), b.clone())?);
    let f = ModuleMap::from_fn(format!("mu({n1},{n2})"), source.clone(), target, |d| {
        let mut block = F2Matrix::zeros(source.dim(d), bt.dim(d));
        let mut row = 0;
        for e in a.degrees() {
            for x in 0..a.dim(e) {
                for y in 0..b.dim(d - e) {
                    let p = ba.monomial(e, x).mul(&bb.monomial(d - e, y));
                    let k = bt.index(d, &p).expect("products have the summed weight");
                    block.set(row, k, true);
                    row += 1;
                }
            }
        }
        Ok(block)
    })?;
    certified(f)
}

/// `J(2n) -> J(n)`: kills monomials divisible by `x_0` and lowers every
/// other index by one.
pub fn dot_sq(n: u64) -> Result<ModuleMap> {
    if n == 0 {
        return Err(Error::Domain("dot_sq needs n >= 1".into()));
    }
    let (source, target) = (j_module(2 * n)?, j_module(n)?);
    let (bs, bt) = (MonomialBasis::of(&source)?, MonomialBasis::of(&target)?);
    let f = ModuleMap::from_fn(format!("Sq^{n}"), source.clone(), target, |d| {
        let mut block = F2Matrix::zeros(source.dim(d), bt.dim(d));
        for r in 0..source.dim(d) {
            let m = bs.monomial(d, r);
            if m.exponent(0) > 0 {
                continue;
            }
            let mut shifted = [0u16; GENERATORS];
            shifted[..GENERATORS - 1].copy_from_slice(&m.exponents()[1..]);
            let image = Monomial::from_exponents(&shifted)?;
            block.set(r, bt.index(d, &image).expect("halved weight"), true);
        }
        Ok(block)
    })?;
    certified(f)
}

/// `Sigma J(2n - 1) -> J(2n)`, `s(x) -> x_0 x`.
pub fn sigma_map(n: u64) -> Result<ModuleMap> {
    if n == 0 {
        return Err(Error::Domain("sigma_map needs n >= 1".into()));
    }
    let odd = j_module(2 * n - 1)?;
    let target = j_module(2 * n)?;
    let (bo, bt) = (MonomialBasis::of(&odd)?, MonomialBasis::of(&target)?);
    let source = Arc::new(odd.suspend(1));
    let x0 = Monomial::power(0, 1);
    let f = ModuleMap::from_fn(
        format!("x0: {}", source.name()),
        source.clone(),
        target,
        |d| {
            let mut block = F2Matrix::zeros(source.dim(d), bt.dim(d));
            for r in 0..source.dim(d) {
                let image = bo.monomial(d - 1, r).mul(&x0);
                block.set(r, bt.index(d, &image).expect("weight 2n"), true);
            }
            Ok(block)
        },
    )?;
    certified(f)
}

/// Exactness of `0 -> Sigma J(2n-1) -> J(2n) -> J(n) -> 0` in every degree.
pub fn mahowald_exact(n: u64) -> Result<bool> {
    let sigma = sigma_map(n)?;
    let dot = dot_sq(n)?;
    if !sigma.then(&dot)?.is_zero() {
        return Ok(false);
    }
    let middle = sigma.target();
    Ok(middle.degrees().all(|d| {
        let (left, right) = (sigma.source().dim(d), dot.target().dim(d));
        sigma.rank_in(d) == left && dot.rank_in(d) == right && left + right == middle.dim(d)
    }))
}

/// `p_k: F(1) -> J(2^k)` on `F(1)` truncated at `window`:
/// `t^{2^i} -> x_{k-i}^{2^i}` for `i <= k`, and zero above.
pub fn p_k_map(k: u32, window: i32) -> Result<ModuleMap> {
    if k as usize >= GENERATORS {
        return Err(Error::Resource(format!(
            "p_{k} needs generators beyond x{}",
            GENERATORS - 1
        )));
    }
    let target = j_module(1 << k)?;
    let bt = MonomialBasis::of(&target)?;
    let source = Arc::new(t_module(TFamily::F1, window)?);
    let f = ModuleMap::from_fn(format!("p_{k}"), source.clone(), target, |d| {
        let mut block = F2Matrix::zeros(source.dim(d), bt.dim(d));
        if source.dim(d) == 1 {
            let i = d.trailing_zeros();
            if i <= k {
                let image = Monomial::power((k - i) as usize, 1 << i);
                block.set(0, bt.index(d, &image).expect("weight 2^k"), true);
            }
        }
        Ok(block)
    })?;
    certified(f)
}

/// `p(n, l): J(n) -> J(l)`, nonzero on every basis element of `J(n)^l`.
pub fn p_map(n: u64, l: u64) -> Result<ModuleMap> {
    let source = j_module(n)?;
    let phi = all_ones(source.dim(l as i32));
    Ok(hom_solver(source, j_module(l)?, &phi)?.with_name(format!("p({n},{l})")))
}

/// `(J(n) (x) (t))` truncated at degree `top`.
pub(crate) fn j_tensor_t(n: u64, family: TFamily, top: i32) -> Result<Arc<FiniteGradedModule>> {
    let j = j_module(n)?;
    let t = Arc::new(t_module(family, top - j.lo())?);
    Ok(Arc::new(tensor_up_to(j, t, Some(top))?))
}

pub(crate) fn q_map_up_to(n: u64, m: u64, top: i32) -> Result<ModuleMap> {
    if m == 0 {
        return Err(Error::Domain("q_map needs m >= 1".into()));
    }
    let source = j_tensor_t(n, TFamily::Ideal, top)?;
    let phi = all_ones(source.dim(m as i32));
    Ok(hom_solver(source, j_module(m)?, &phi)?.with_name(format!("q({n},{m})")))
}

/// `q(n, m): (J(n) (x) (t))_{<= m} -> J(m)`, nonzero on every basis element
/// of degree `m`.
pub fn q_map(n: u64, m: u64) -> Result<ModuleMap> {
    q_map_up_to(n, m, m as i32)
}

/// Whether `q(n, m)` restricted to `J(n) (x) F(1)` equals
/// `x (x) t^{2^i} -> p(n, l)(x) * p_k(t^{2^i})`, where `m = l + 2^k` and
/// `l < 2^k`.
pub fn q_bar_agrees(n: u64, m: u64) -> Result<bool> {
    if m == 0 {
        return Err(Error::Domain("q_bar_agrees needs m >= 1".into()));
    }
    let k = 63 - m.leading_zeros();
    let l = m - (1 << k);
    let q = q_map(n, m)?;
    let p = p_map(n, l)?;
    let (jn, jl, jm) = (j_module(n)?, j_module(l)?, j_module(m)?);
    let (bn, bl, bm) = (
        MonomialBasis::of(&jn)?,
        MonomialBasis::of(&jl)?,
        MonomialBasis::of(&jm)?,
    );
    let source = q.source();
    for d in source.degrees() {
        for r in 0..source.dim(d) {
            let label = source.label(d, r);
            let (x, t) = label.split_once('|').expect("tensor label");
            let j: i32 = t.trim_start_matches("t^").parse().expect("t-module label");
            if j & (j - 1) != 0 {
                continue;
            }
            let i = j.trailing_zeros();
            let e = d - j;
            let x: Monomial = x.parse()?;
            let mut expected = Polynomial::zero();
            if i <= k && e <= l as i32 {
                let px = bl.polynomial(e, &p.apply(e, &bn.vector(e, &[x].into_iter().collect())?));
                let pk = Monomial::power((k - i) as usize, 1 << i);
                expected = px.mul(&[pk].into_iter().collect());
            }
            if bm.vector(d, &expected)? != q.image_of(d, r) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Cycles representing a basis of `H(J(n); Q_1)` for `n = 2q + e >= 2`:
/// `x_0^e x(q)^2` and `x_0^e x_1 x(q-1)^2`.
pub fn q1_representatives(n: u64) -> Result<(Polynomial, Polynomial)> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "J({n}) is Q_1-acyclic; n must be at least 2"
        )));
    }
    let (q, e) = (n / 2, (n % 2) as u16);
    let x0e = Monomial::power(0, e);
    let sq = |w: u64| Monomial::bottom(w).mul(&Monomial::bottom(w));
    let first = x0e.mul(&sq(q));
    let second = x0e.mul(&Monomial::power(1, 1)).mul(&sq(q - 1));
    let reps: [Polynomial; 2] = [
        [first].into_iter().collect(),
        [second].into_iter().collect(),
    ];

    let j = j_module(n)?;
    let basis = MonomialBasis::of(&j)?;
    let report = margolis(&j, 1)?;
    if report.total() != 2 {
        return Err(Error::theory(format!(
            "H(J({n}); Q_1) has dimension {}",
            report.total()
        )));
    }
    let coords: Vec<(i32, F2Vector)> = [first, second]
        .iter()
        .map(|m| {
            let d = m.degree() as i32;
            Ok((d, basis.vector(d, &[*m].into_iter().collect())?))
        })
        .collect::<Result<_>>()?;
    for (d, z) in &coords {
        if !is_cycle(&j, 1, *d, z) || is_boundary(&j, 1, *d, z) {
            return Err(Error::theory(format!(
                "{} is not a nonzero Q_1-class",
                basis.polynomial(*d, z)
            )));
        }
    }
    let [(d1, z1), (d2, z2)] = [&coords[0], &coords[1]];
    if d1 == d2 {
        let mut sum = z1.clone();
        sum.xor_assign(z2);
        if is_boundary(&j, 1, *d1, &sum) {
            return Err(Error::theory(format!(
                "the Q_1 representatives of J({n}) are homologous"
            )));
        }
    }
    let [a, b] = reps;
    Ok((a, b))
}

/// Top degree used when building `Q(n, m)`: one above `m`, so the vanishing
/// of `Q^{m+1}` is computed rather than assumed.
pub(crate) fn q_window(m: u64) -> i32 {
    m as i32 + 1
}
