use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Number of polynomial generators `x_0 .. x_7` a [`Monomial`] can carry.
/// Weight spaces are enumerable for every weight below `2^GENERATORS`.
pub const GENERATORS: usize = 8;

/// Largest weight whose binary partitions fit in [`GENERATORS`] variables.
pub const MAX_ENUMERABLE_WEIGHT: u64 = (1 << GENERATORS) - 1;

/// A monomial `x_0^{e_0} x_1^{e_1} ...` in `Z/2[x_0, x_1, ...]`, where `x_k`
/// has degree 1 and weight `2^k`.
///
/// Ordered by degree first, then by the exponent vector read from `x_0`
/// upward.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; GENERATORS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; GENERATORS])
    }

    pub fn from_exponents(exps: &[u16]) -> Result<Self> {
        if exps.len() > GENERATORS && exps[GENERATORS..].iter().any(|&e| e != 0) {
            return Err(Error::Resource(format!(
                "monomials use at most {GENERATORS} generators"
            )));
        }
        let mut m = [0; GENERATORS];
        for (slot, &e) in m.iter_mut().zip(exps) {
            *slot = e;
        }
        Ok(Monomial(m))
    }

    /// `x_k^e`.
    pub fn power(k: usize, e: u16) -> Self {
        assert!(k < GENERATORS, "generator x{k} out of range");
        let mut m = [0; GENERATORS];
        m[k] = e;
        Monomial(m)
    }

    /// The bottom class `x(n)`: the product of the `x_k` over the set bits
    /// `k` of `n`.
    pub fn bottom(n: u64) -> Self {
        assert!(n <= MAX_ENUMERABLE_WEIGHT, "weight {n} out of range");
        let mut m = [0; GENERATORS];
        for (k, slot) in m.iter_mut().enumerate() {
            *slot = ((n >> k) & 1) as u16;
        }
        Monomial(m)
    }

    /// The top class `x_0^n`.
    pub fn top(n: u16) -> Self {
        Self::power(0, n)
    }

    pub fn exponents(&self) -> &[u16; GENERATORS] {
        &self.0
    }

    pub fn exponent(&self, k: usize) -> u16 {
        self.0[k]
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [u16; GENERATORS] {
        &mut self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn weight(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &e)| (e as u64) << k)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0;
        for (a, b) in out.iter_mut().zip(other.0) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0;
        for (a, b) in out.iter_mut().zip(other.0) {
            *a = a.checked_sub(b)?;
        }
        Some(Monomial(out))
    }

    /// Highest generator index with a nonzero exponent.
    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e != 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{k}")?;
            } else {
                write!(f, "x{k}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Accepts `1` or factors `x<k>` / `x<k>^<e>` joined by `*`. Repeated
    /// factors multiply.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut m = Monomial::one();
        for factor in s.split('*') {
            let factor = factor.trim();
            let bad = || Error::Parse(format!("malformed monomial factor `{factor}` in `{s}`"));
            let rest = factor.strip_prefix('x').ok_or_else(bad)?;
            let (k, e) = match rest.split_once('^') {
                Some((k, e)) => (k, e.trim().parse::<u16>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let k: usize = k.trim().parse().map_err(|_| bad())?;
            if k >= GENERATORS {
                return Err(Error::Parse(format!(
                    "generator x{k} exceeds the supported range x0..x{}",
                    GENERATORS - 1
                )));
            }
            m.0[k] = m.0[k].checked_add(e).ok_or_else(bad)?;
        }
        Ok(m)
    }
}

/// All monomials of weight `n` (the binary partitions of `n`) in canonical
/// order.
pub fn monomials_of_weight(n: u64) -> Result<Vec<Monomial>> {
    if n > MAX_ENUMERABLE_WEIGHT {
        return Err(Error::Resource(format!(
            "weight {n} exceeds the enumerable bound {MAX_ENUMERABLE_WEIGHT}"
        )));
    }
    fn go(k: usize, rem: u64, cur: &mut [u16; GENERATORS], out: &mut Vec<Monomial>) {
        if k == 0 {
            cur[0] = rem as u16;
            out.push(Monomial(*cur));
            cur[0] = 0;
            return;
        }
        for e in 0..=(rem >> k) {
            cur[k] = e as u16;
            go(k - 1, rem - (e << k), cur, out);
        }
        cur[k] = 0;
    }
    let mut out = Vec::new();
    go(GENERATORS - 1, n, &mut [0; GENERATORS], &mut out);
    out.sort();
    Ok(out)
}

/// An element of `Z/2[x_0, x_1, ...]`, stored as its set of monomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeSet<Monomial>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds one monomial; adding the same monomial twice cancels it.
    pub fn add_term(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        for &m in &other.terms {
            self.add_term(m);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        p.add_assign(other);
        p
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut p = Polynomial::zero();
        for a in &self.terms {
            for b in &other.terms {
                p.add_term(a.mul(b));
            }
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    pub fn is_homogeneous_of_weight(&self, n: u64) -> bool {
        self.terms.iter().all(|m| m.weight() == n)
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.iter().all(|m| m.degree() == d)
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m);
        p
    }
}

impl FromIterator<Monomial> for Polynomial {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for m in iter {
            p.add_term(m);
        }
        p
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Polynomial::zero());
        }
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        s.split('+').map(str::parse::<Monomial>).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_weight() {
        let m: Monomial = "x0^2*x2".parse().unwrap();
        assert_eq!(m.degree(), 3);
        assert_eq!(m.weight(), 6);
        let b = Monomial::bottom(22);
        assert_eq!(b.degree(), 3);
        assert_eq!(b.weight(), 22);
        assert_eq!(b.to_string(), "x1*x2*x4");
    }

    #[test]
    fn parse_and_display() {
        let m: Monomial = "x1*x0^4".parse().unwrap();
        assert_eq!(m.to_string(), "x0^4*x1");
        assert_eq!("1".parse::<Monomial>().unwrap(), Monomial::one());
        assert!("x9".parse::<Monomial>().is_err());
        assert!("y1".parse::<Monomial>().is_err());
        let p: Polynomial = "x1^3 + x0^2*x2 + x1^3".parse().unwrap();
        assert_eq!(p.to_string(), "x0^2*x2");
        assert_eq!("0".parse::<Polynomial>().unwrap(), Polynomial::zero());
    }

    #[test]
    fn weight_spaces() {
        let four: Vec<String> = monomials_of_weight(4)
            .unwrap()
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(four, vec!["x2", "x1^2", "x0^2*x1", "x0^4"]);
        let six = monomials_of_weight(6).unwrap();
        assert_eq!(six.len(), 6);
        assert_eq!(six[0], Monomial::bottom(6));
        assert_eq!(*six.last().unwrap(), Monomial::top(6));
        assert!(monomials_of_weight(256).is_err());
    }

    #[test]
    fn binary_partition_counts() {
        // b(2n) = b(2n-1) + b(n), b(2n+1) = b(2n)
        let mut b = vec![1usize];
        for n in 1..=130usize {
            let v = if n % 2 == 1 {
                b[n - 1]
            } else {
                b[n - 1] + b[n / 2]
            };
            b.push(v);
        }
        for (n, &expected) in b.iter().enumerate() {
            assert_eq!(
                monomials_of_weight(n as u64).unwrap().len(),
                expected,
                "n={n}"
            );
        }
        assert_eq!(b[48], 692);
    }

    #[test]
    fn characteristic_two() {
        let mut p = Polynomial::from(Monomial::top(3));
        p.add_term(Monomial::top(3));
        assert!(p.is_zero());
    }
}
