use crate::f2core::binom_mod2;

use super::monomial::{Monomial, Polynomial, GENERATORS};

/// `Sq^j(x_k^e)`. The total square of `x_k` is `x_k + x_{k-1}^2` for `k >= 1`
/// and `x_0` for `k = 0`.
pub fn sq_on_power(k: usize, e: u16, j: u32) -> Polynomial {
    match sq_power_term(k, e, j) {
        Some(m) => m.into(),
        None => Polynomial::zero(),
    }
}

fn sq_power_term(k: usize, e: u16, j: u32) -> Option<Monomial> {
    if j == 0 {
        return Some(Monomial::power(k, e));
    }
    if k == 0 || j > e as u32 || !binom_mod2(e as i64, j as u64) {
        return None;
    }
    let mut m = Monomial::power(k, e - j as u16);
    m.exponents_mut()[k - 1] = 2 * j as u16;
    Some(m)
}

/// `Sq^i` applied to a monomial, via the Cartan formula.
pub fn sq_monomial(i: u32, m: &Monomial) -> Polynomial {
    let mut out = Polynomial::zero();
    if i > m.degree() {
        return out;
    }
    // x_0 is fixed by the total square; only x_k for k >= 1 absorb squares.
    let vars: Vec<(usize, u16)> = (1..GENERATORS)
        .filter(|&k| m.exponent(k) != 0)
        .map(|k| (k, m.exponent(k)))
        .collect();
    let mut base = *m;
    for &(k, _) in &vars {
        base.exponents_mut()[k] = 0;
    }
    distribute(&vars, i, base, &mut out);
    out
}

fn distribute(vars: &[(usize, u16)], rem: u32, acc: Monomial, out: &mut Polynomial) {
    let Some((&(k, e), rest)) = vars.split_first() else {
        if rem == 0 {
            out.add_term(acc);
        }
        return;
    };
    let room: u32 = rest.iter().map(|&(_, e)| e as u32).sum();
    let lo = rem.saturating_sub(room);
    for j in lo..=rem.min(e as u32) {
        // binom(e, j) is odd iff the bits of j are a subset of those of e
        if j & !(e as u32) != 0 {
            continue;
        }
        let mut next = acc;
        let ex = next.exponents_mut();
        ex[k] += e - j as u16;
        ex[k - 1] += 2 * j as u16;
        distribute(rest, rem - j, next, out);
    }
}

pub fn sq(i: u32, p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for m in p.terms() {
        out.add_assign(&sq_monomial(i, m));
    }
    out
}

/// Applies `Sq^{a_1} Sq^{a_2} ... Sq^{a_r}` (rightmost first).
pub fn sq_word(word: &[u32], p: &Polynomial) -> Polynomial {
    word.iter().rev().fold(p.clone(), |acc, &i| sq(i, &acc))
}

/// The Milnor primitive `Q_m` on a generator: `Q_m x_k = x_{k-m-1}^{2^{m+1}}`
/// for `k > m` and zero otherwise.
pub fn qm_generator(m: u32, k: usize) -> Option<Monomial> {
    let m = m as usize;
    if k <= m {
        return None;
    }
    Some(Monomial::power(k - m - 1, 1 << (m + 1)))
}

/// `Q_m` on a monomial, extended as a derivation.
pub fn qm_monomial(m: u32, mono: &Monomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for k in 0..GENERATORS {
        let e = mono.exponent(k);
        if e.is_multiple_of(2) {
            continue;
        }
        let Some(img) = qm_generator(m, k) else {
            continue;
        };
        let rest = mono.div(&Monomial::power(k, 1)).expect("divisible");
        out.add_term(rest.mul(&img));
    }
    out
}

pub fn qm(m: u32, p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for mono in p.terms() {
        out.add_assign(&qm_monomial(m, mono));
    }
    out
}

/// `Q_m` computed only from squares: `Q_0 = Sq^1` and
/// `Q_m = Q_{m-1} Sq^{2^m} + Sq^{2^m} Q_{m-1}`.
pub fn qm_via_commutator(m: u32, p: &Polynomial) -> Polynomial {
    if m == 0 {
        return sq(1, p);
    }
    let s = 1u32 << m;
    let a = qm_via_commutator(m - 1, &sq(s, p));
    let b = sq(s, &qm_via_commutator(m - 1, p));
    a.add(&b)
}
