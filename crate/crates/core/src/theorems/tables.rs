use serde::Serialize;

use crate::bg::j_module;
use crate::error::{Error, Result};
use crate::graded::margolis;
use crate::polyalg::monomials_of_weight;

use super::Limits;

/// `k_{m,n} = dim H(J(n); Q_m)` for `n <= n_max`, next to three
/// independent predictions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KTable {
    pub m: u32,
    pub n_max: u64,
    /// From Margolis homology.
    pub k: Vec<usize>,
    /// The closed forms: `1, 1, 0, ...`; `2` for `n >= 2`; `2q` for
    /// `n = 2q + e`, `q >= 1`.
    pub corollary: Vec<usize>,
    /// Coefficients of `1 + t`, `(1 + t^2)/(1 - t)`,
    /// `(1 + t^4)/((1 - t)(1 - t^2))`.
    pub rational: Vec<usize>,
    /// Coefficients of the product over `k` of the truncated polynomial
    /// algebras on `x_k` (`k <= m`) and `x_k^2` (`k > m`) with
    /// `x_k^{2^{m+1}} = 0`.
    pub product: Vec<usize>,
    /// Whether the degreewise homology of `J(n)` matches the weight-`n`
    /// monomials of that quotient ring.
    pub degreewise: Vec<bool>,
}

impl KTable {
    pub fn agrees(&self) -> bool {
        self.k == self.corollary
            && self.k == self.rational
            && self.k == self.product
            && self.degreewise.iter().all(|&b| b)
    }
}

pub fn k_tables(m: u32, n_max: u64) -> Result<KTable> {
    k_tables_with(m, n_max, &Limits::default())
}

pub fn k_tables_with(m: u32, n_max: u64, limits: &Limits) -> Result<KTable> {
    if m > 2 {
        return Err(Error::Domain(format!(
            "rank tables cover Q_0, Q_1, Q_2, not Q_{m}"
        )));
    }
    if n_max > limits.max_module_weight {
        return Err(Error::Resource(format!(
            "n_max {n_max} exceeds the module limit {}",
            limits.max_module_weight
        )));
    }
    let len = n_max as usize + 1;
    let mut k = Vec::with_capacity(len);
    let mut degreewise = Vec::with_capacity(len);
    for n in 0..=n_max {
        let report = margolis(&*j_module(n)?, m)?;
        k.push(report.total());
        let mut expected: Vec<(i32, usize)> = Vec::new();
        for mono in monomials_of_weight(n)? {
            if in_quotient_basis(m, mono.exponents()) {
                let d = mono.degree() as i32;
                match expected.iter_mut().find(|(e, _)| *e == d) {
                    Some((_, c)) => *c += 1,
                    None => expected.push((d, 1)),
                }
            }
        }
        expected.sort();
        degreewise.push(report.profile() == expected);
    }
    let corollary = (0..=n_max).map(|n| corollary_value(m, n)).collect();
    let rational = rational_series(m, len);
    let product = product_series(m, len);
    Ok(KTable {
        m,
        n_max,
        k,
        corollary,
        rational,
        product,
        degreewise,
    })
}

fn in_quotient_basis(m: u32, exps: &[u16]) -> bool {
    let cap = 1u32 << (m + 1);
    exps.iter()
        .enumerate()
        .all(|(k, &e)| (e as u32) < cap && (k as u32 <= m || e % 2 == 0))
}

fn corollary_value(m: u32, n: u64) -> usize {
    match m {
        0 => usize::from(n <= 1),
        1 => {
            if n >= 2 {
                2
            } else {
                1
            }
        }
        _ => {
            let q = (n / 2) as usize;
            if q >= 1 {
                2 * q
            } else {
                1
            }
        }
    }
}

/// Power series truncated to `len` coefficients.
struct Series(Vec<i64>);

impl Series {
    fn from_poly(len: usize, terms: &[(usize, i64)]) -> Self {
        let mut c = vec![0; len];
        for &(e, a) in terms {
            if e < len {
                c[e] += a;
            }
        }
        Series(c)
    }

    /// Multiplies by `1 - t^a`.
    fn times_one_minus(&mut self, a: usize) {
        for i in (a..self.0.len()).rev() {
            self.0[i] -= self.0[i - a];
        }
    }

    /// Divides by `1 - t^a`.
    fn over_one_minus(&mut self, a: usize) {
        for i in a..self.0.len() {
            self.0[i] += self.0[i - a];
        }
    }

    fn into_counts(self) -> Vec<usize> {
        self.0
            .into_iter()
            .map(|c| {
                usize::try_from(c).expect("generating functions here have nonnegative coefficients")
            })
            .collect()
    }
}

fn rational_series(m: u32, len: usize) -> Vec<usize> {
    let mut s = match m {
        0 => Series::from_poly(len, &[(0, 1), (1, 1)]),
        1 => Series::from_poly(len, &[(0, 1), (2, 1)]),
        _ => Series::from_poly(len, &[(0, 1), (4, 1)]),
    };
    if m >= 1 {
        s.over_one_minus(1);
    }
    if m >= 2 {
        s.over_one_minus(2);
    }
    s.into_counts()
}

fn product_series(m: u32, len: usize) -> Vec<usize> {
    let mut s = Series::from_poly(len, &[(0, 1)]);
    let cap = 1usize << (m + 1);
    let mut k = 0;
    while (1usize << k) < len {
        let step = if k as u32 <= m { 1 << k } else { 2 << k };
        // sum over e < cap (or e < cap / 2 for x_k^2) of t^{e * step}
        let terms = if k as u32 <= m { cap } else { cap / 2 };
        s.times_one_minus(step * terms);
        s.over_one_minus(step);
        k += 1;
    }
    s.into_counts()
}
