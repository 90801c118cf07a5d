use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2core::binom_mod2;

/// Modules spanned by powers of a single class `t` of degree 1, with
/// `Sq^i t^j = binom(j, i) t^{i+j}` (2-adic binomials for negative `j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TFamily {
    /// `Z/2[t]`, exponents `j >= 0`.
    Poly,
    /// The ideal `(t)`, exponents `j >= 1`.
    Ideal,
    /// The span of `t^{2^k}`, `k >= 0`.
    F1,
    /// Exponents `j >= d`; the Thom module of `d` times the canonical line
    /// bundle.
    Thom(i32),
    /// Exponents `j >= -1` with `t^0` removed.
    PTildeMinus1,
}

impl TFamily {
    pub fn contains(&self, j: i32) -> bool {
        match *self {
            TFamily::Poly => j >= 0,
            TFamily::Ideal => j >= 1,
            TFamily::F1 => j >= 1 && (j & (j - 1)) == 0,
            TFamily::Thom(d) => j >= d,
            TFamily::PTildeMinus1 => j >= -1 && j != 0,
        }
    }

    /// Lowest exponent present.
    pub fn bottom(&self) -> i32 {
        match *self {
            TFamily::Poly => 0,
            TFamily::Ideal | TFamily::F1 => 1,
            TFamily::Thom(d) => d,
            TFamily::PTildeMinus1 => -1,
        }
    }

    /// Exponents in `lo..=hi` that belong to the family.
    pub fn exponents_in(&self, lo: i32, hi: i32) -> Vec<i32> {
        (lo.max(self.bottom())..=hi)
            .filter(|&j| self.contains(j))
            .collect()
    }

    pub fn name(&self) -> String {
        match *self {
            TFamily::Poly => "P".into(),
            TFamily::Ideal => "P1".into(),
            TFamily::F1 => "F1".into(),
            TFamily::Thom(d) => format!("P_{d}"),
            TFamily::PTildeMinus1 => "P~_-1".into(),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "P" | "poly" => return Ok(TFamily::Poly),
            "P1" | "ideal" => return Ok(TFamily::Ideal),
            "F1" => return Ok(TFamily::F1),
            "P~_-1" | "ptilde" => return Ok(TFamily::PTildeMinus1),
            _ => {}
        }
        s.strip_prefix("P_")
            .and_then(|d| d.parse().ok())
            .map(TFamily::Thom)
            .ok_or_else(|| Error::Parse(format!("unknown t-module family `{s}`")))
    }
}

impl fmt::Display for TFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A basis element `t^j` of a [`TFamily`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TModuleElement {
    exponent: i32,
}

impl TModuleElement {
    pub fn new(family: TFamily, exponent: i32) -> Result<Self> {
        if !family.contains(exponent) {
            return Err(Error::Domain(format!("t^{exponent} is not in {family}")));
        }
        Ok(TModuleElement { exponent })
    }

    pub fn exponent(&self) -> i32 {
        self.exponent
    }
}

impl fmt::Display for TModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{}", self.exponent)
    }
}

/// `Sq^i t^j` inside `family`; `None` when the result is zero or leaves the
/// family.
pub fn t_sq(family: TFamily, i: u32, e: TModuleElement) -> Option<TModuleElement> {
    let target = e.exponent + i as i32;
    (binom_mod2(e.exponent as i64, i as u64) && family.contains(target))
        .then_some(TModuleElement { exponent: target })
}

/// `Q_m t^j` inside `family`, computed from squares by the commutator
/// recursion. Returns the exponents of the resulting sum.
pub fn t_qm(family: TFamily, m: u32, e: TModuleElement) -> BTreeSet<i32> {
    fn apply_sq(family: TFamily, i: u32, v: &BTreeSet<i32>) -> BTreeSet<i32> {
        let mut out = BTreeSet::new();
        for &j in v {
            if let Some(t) = t_sq(family, i, TModuleElement { exponent: j }) {
                if !out.remove(&t.exponent) {
                    out.insert(t.exponent);
                }
            }
        }
        out
    }
    fn go(family: TFamily, m: u32, v: &BTreeSet<i32>) -> BTreeSet<i32> {
        if m == 0 {
            return apply_sq(family, 1, v);
        }
        let s = 1 << m;
        let a = go(family, m - 1, &apply_sq(family, s, v));
        let b = apply_sq(family, s, &go(family, m - 1, v));
        a.symmetric_difference(&b).copied().collect()
    }
    go(family, m, &BTreeSet::from([e.exponent]))
}
