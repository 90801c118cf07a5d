//! Naive reimplementations that the library is checked against.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bgq_core::bg::{build_q_module, j_module};
use bgq_core::f2core::{binom_mod2, F2Matrix};
use bgq_core::graded::a1_free_decomposition;
use bgq_core::theorems::{main_criterion, s_jk};

/// Binary partitions of `n` counted by number of parts, parts `2^k` with
/// `k < 8`.
fn partitions_by_parts(n: u64) -> Vec<usize> {
    fn go(rest: u64, k: i32, parts: usize, out: &mut Vec<usize>) {
        if rest == 0 {
            if out.len() <= parts {
                out.resize(parts + 1, 0);
            }
            out[parts] += 1;
            return;
        }
        if k < 0 {
            return;
        }
        let p = 1u64 << k;
        let mut used = 0;
        loop {
            go(rest - used * p, k - 1, parts + used as usize, out);
            used += 1;
            if used * p > rest {
                break;
            }
        }
    }
    let mut out = Vec::new();
    go(n, 7, 0, &mut out);
    out
}

#[test]
fn j_dimensions_are_binary_partitions() {
    for n in 0..=64 {
        let j = j_module(n).unwrap();
        let counts = partitions_by_parts(n);
        for (d, &c) in counts.iter().enumerate() {
            assert_eq!(j.dim(d as i32), c, "J({n}) in degree {d}");
        }
        assert_eq!(j.total_dim(), counts.iter().sum::<usize>());
    }
}

#[test]
fn q_2_6_profile_from_partitions() {
    // J(6) in degrees 0..6 next to J(2) moved down one degree.
    let mut expected = partitions_by_parts(6);
    expected.resize(7, 0);
    for (d, c) in partitions_by_parts(2).into_iter().enumerate() {
        if d >= 1 {
            expected[d - 1] += c;
        }
    }
    assert_eq!(expected, [1, 1, 1, 2, 1, 1, 1]);
    assert_eq!(build_q_module(2, 6).unwrap().module.dims(), expected);
}

/// Poincare polynomial of `A(1)`.
const A1: [i64; 7] = [1, 1, 1, 2, 1, 1, 1];

/// Divides a Poincare polynomial by that of `A(1)`; `None` unless the
/// quotient has nonnegative integer coefficients and no remainder.
fn divide_by_a1(dims: &[usize], lo: i32) -> Option<Vec<i32>> {
    let mut rest: Vec<i64> = dims.iter().map(|&d| d as i64).collect();
    let mut gens = Vec::new();
    for i in 0..rest.len() {
        let c = rest[i];
        if c < 0 {
            return None;
        }
        if c == 0 {
            continue;
        }
        for (j, &a) in A1.iter().enumerate() {
            *rest.get_mut(i + j)? -= c * a;
        }
        gens.extend(std::iter::repeat_n(lo + i as i32, c as usize));
    }
    Some(gens)
}

#[test]
fn a1_generators_from_poincare_division() {
    let mut checked = 0;
    for n in 2..=12u64 {
        for m in n + 1..=30 {
            if !main_criterion(n, m).unwrap().predicted_acyclic {
                continue;
            }
            let q = build_q_module(n, m).unwrap();
            let predicted = divide_by_a1(&q.module.dims(), q.module.lo()).expect("divisible");
            let dec = a1_free_decomposition(&q.module);
            assert_eq!(dec.generators(), Some(&predicted[..]), "Q({n}, {m})");
            checked += 1;
        }
    }
    assert!(checked >= 8, "{checked}");
}

#[test]
fn permutation_count_is_a_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..400 {
        let d = rng.gen_range(0..=6);
        let mut draw = || {
            let mut v: Vec<u32> = rand::seq::index::sample(&mut rng, 12, d)
                .into_iter()
                .map(|x| x as u32)
                .collect();
            v.sort();
            v
        };
        let (j, k) = (draw(), draw());
        // Assign k_0 < k_1 < ... in turn; k_c has s(c) admissible j's, of
        // which c are already taken.
        let mut product = 1u64;
        for (c, &kc) in k.iter().enumerate() {
            let s = j.iter().filter(|&&jb| jb <= kc).count();
            product *= s.saturating_sub(c) as u64;
        }
        assert_eq!(s_jk(&j, &k).unwrap().count, product, "{j:?} {k:?}");
    }
}

fn naive_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] {
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn rank_matches_naive_elimination() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..200 {
        let (r, c) = if trial < 100 {
            (64, 64)
        } else {
            (rng.gen_range(1..90), rng.gen_range(1..90))
        };
        // Sparse rows make rank deficiency common.
        let density = rng.gen_range(0.02..0.6);
        let bits: Vec<Vec<bool>> = (0..r)
            .map(|_| (0..c).map(|_| rng.gen_bool(density)).collect())
            .collect();
        let m = F2Matrix::from_fn(r, c, |i, j| bits[i][j]);
        assert_eq!(m.rank(), naive_rank(bits), "trial {trial}");
    }
}

/// Coefficients of `(1 + x)^{-a}` mod `x^len` over F2, by inverting the
/// polynomial `(1 + x)^a`.
fn inverse_power_series(a: u32, len: usize) -> Vec<bool> {
    let mut p = vec![false; len];
    p[0] = true;
    for _ in 0..a {
        for i in (1..len).rev() {
            p[i] ^= p[i - 1];
        }
    }
    let mut inv = vec![false; len];
    inv[0] = true;
    for i in 1..len {
        inv[i] = (1..=i).filter(|&j| p[j] && inv[i - j]).count() % 2 == 1;
    }
    inv
}

#[test]
fn negative_binomials_match_series() {
    for a in 1..=40u32 {
        let series = inverse_power_series(a, 200);
        for (i, &c) in series.iter().enumerate() {
            assert_eq!(binom_mod2(-(a as i64), i as u64), c, "binom(-{a}, {i})");
        }
    }
}
