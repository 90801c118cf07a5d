use serde::Serialize;

use crate::bg::{build_q_module, QModule};
use crate::error::{Error, Result};
use crate::f2core::{alpha2, binom_mod2, nu2};
use crate::graded::margolis;

/// Parity of `(n, m)`: both even, both odd, or mixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityCase {
    A,
    B,
    C,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionVerdict {
    pub n: u64,
    pub m: u64,
    pub parity_case: ParityCase,
    pub alpha_ok: bool,
    pub nu_ok: bool,
    pub binom_ok: bool,
    pub predicted_acyclic: bool,
}

/// The closed-form prediction of whether `Q(n, m)` is `Q_1`-acyclic.
///
/// For even `n, m`: `alpha(m) = alpha(n) + 1`, `nu(m) = nu(n)` and
/// `binom(m - n - 2, n)` odd. Odd pairs are decided by `(n - 1, m - 1)`;
/// mixed pairs and `n <= 1` never are.
pub fn main_criterion(n: u64, m: u64) -> Result<CriterionVerdict> {
    if n >= m {
        return Err(Error::Domain(format!(
            "criterion needs n < m, got ({n}, {m})"
        )));
    }
    let parity_case = match (n % 2, m % 2) {
        (0, 0) => ParityCase::A,
        (1, 1) => ParityCase::B,
        _ => ParityCase::C,
    };
    let mut v = CriterionVerdict {
        n,
        m,
        parity_case,
        alpha_ok: false,
        nu_ok: false,
        binom_ok: false,
        predicted_acyclic: false,
    };
    if n <= 1 {
        return Ok(v);
    }
    let (a, b) = match parity_case {
        ParityCase::A => (n, m),
        ParityCase::B => (n - 1, m - 1),
        ParityCase::C => return Ok(v),
    };
    v.alpha_ok = alpha2(b) == alpha2(a) + 1;
    v.nu_ok = nu2(b)? == nu2(a)?;
    v.binom_ok = binom_mod2(b as i64 - a as i64 - 2, a);
    v.predicted_acyclic = v.alpha_ok && v.nu_ok && v.binom_ok;
    Ok(v)
}

/// A nonzero `Q_1`-homology class, by basis labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyWitness {
    pub degree: i32,
    pub class: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub acyclic: bool,
    pub witness: Option<HomologyWitness>,
}

/// Builds `Q(n, m)` and computes its `Q_1`-homology.
pub fn acyclicity_oracle(n: u64, m: u64) -> Result<OracleVerdict> {
    oracle_on(&build_q_module(n, m)?)
}

/// The oracle on an already built module.
pub fn oracle_on(q: &QModule) -> Result<OracleVerdict> {
    let report = margolis(&q.module, 1)?;
    let witness = report.witness().map(|(d, z)| HomologyWitness {
        degree: d,
        class: q.labels(d, z),
    });
    Ok(OracleVerdict {
        acyclic: report.is_acyclic(),
        witness,
    })
}

/// Least `m` in `(n, bound]` where the criterion holds.
pub fn minimal_m(n: u64, bound: u64) -> Result<Option<u64>> {
    for m in n + 1..=bound {
        if main_criterion(n, m)?.predicted_acyclic {
            return Ok(Some(m));
        }
    }
    Ok(None)
}
