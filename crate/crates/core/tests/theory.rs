use std::sync::Arc;

use bgq_core::bg::{build_q_module, j_module, mu, p_map, q_bar_agrees, q_map};
use bgq_core::f2core::BinaryProfile;
use bgq_core::f2core::F2Matrix;
use bgq_core::graded::{
    is_homology_iso, margolis, pushout, t_module, tensor_up_to, FiniteGradedModule, ModuleMap,
};
use bgq_core::polyalg::TFamily;
use bgq_core::theorems::{
    acyclicity_oracle, good_pair, k_tables, main_criterion, p_reduction, q1_profiles_agree, s_jk,
};

fn identity(module: &Arc<FiniteGradedModule>) -> ModuleMap {
    ModuleMap::from_fn("id", module.clone(), module.clone(), |d| {
        let k = module.dim(d);
        Ok(F2Matrix::from_fn(k, k, |i, j| i == j))
    })
    .unwrap()
}

/// The factorization needs `l > 0` once `m = 2n`: for `m = 2n = 2^k` the
/// basis element `x_0^n (x) t^n` has `i = k - 1` and maps to `x_0^m` under
/// `q`, while `p(n, 0)` kills it.
#[test]
fn q_bar_factors_through_p() {
    let mut failures = Vec::new();
    for n in 2..=12u64 {
        for m in 2 * n..=40 {
            if !q_bar_agrees(n, m).unwrap() {
                failures.push((n, m));
            }
        }
    }
    assert_eq!(failures, [(2, 4), (4, 8), (8, 16)]);
}

#[test]
fn p_n_n_is_identity() {
    for n in 0..=20 {
        let j = j_module(n).unwrap();
        assert!(
            p_map(n, n).unwrap().same_matrices(&identity(&j)),
            "p({n},{n})"
        );
    }
}

#[test]
fn p_vanishes_above_source_weight() {
    for n in 1..=8 {
        for l in n + 1..=n + 4 {
            assert!(p_map(n, l).unwrap().is_zero());
        }
    }
}

#[test]
fn p_10_6_is_q1_iso() {
    assert!(is_homology_iso(&p_map(10, 6).unwrap(), 1).unwrap());
}

#[test]
fn mu_commutes_with_squares() {
    for total in 0..=24 {
        for n1 in 0..=total {
            let f = mu(n1, total - n1).unwrap();
            assert_eq!(
                f.a_linearity_witness(total as u32),
                None,
                "mu({n1}, {})",
                total - n1
            );
        }
    }
}

#[test]
fn suspension_of_even_weight() {
    for n in 1..=16 {
        let shifted = j_module(2 * n).unwrap().suspend(1);
        assert!(shifted
            .poincare()
            .same_dims(&j_module(2 * n + 1).unwrap().poincare()));
    }
}

#[test]
fn odd_shift_of_even_pairs() {
    for n in (2..=12).step_by(2) {
        for m in (n + 2..=26).step_by(2) {
            let even = build_q_module(n, m).unwrap();
            let odd = build_q_module(n + 1, m + 1).unwrap();
            assert!(
                odd.module
                    .poincare()
                    .same_dims(&even.module.poincare().shifted(1)),
                "Poincare Q({}, {})",
                n + 1,
                m + 1
            );
            let he: Vec<(i32, usize)> = margolis(&even.module, 1)
                .unwrap()
                .profile()
                .into_iter()
                .map(|(d, k)| (d + 1, k))
                .collect();
            assert_eq!(
                margolis(&odd.module, 1).unwrap().profile(),
                he,
                "Q({}, {})",
                n + 1,
                m + 1
            );
        }
    }
}

#[test]
fn reduction_to_p() {
    for n in 2..=10 {
        for m in 2 * n..=40 {
            let oracle = acyclicity_oracle(n, m).unwrap().acyclic;
            assert_eq!(oracle, p_reduction(n, m).unwrap(), "({n}, {m})");
        }
    }
}

#[test]
fn small_m_never_acyclic() {
    for n in 2..=16 {
        for m in n + 1..2 * n {
            assert!(!main_criterion(n, m).unwrap().predicted_acyclic);
            assert!(!acyclicity_oracle(n, m).unwrap().acyclic, "({n}, {m})");
        }
    }
}

#[test]
fn good_pairs_match_homology() {
    for n in 1..=12 {
        for l in 1..=12 {
            assert_eq!(
                good_pair(n, l).unwrap(),
                q1_profiles_agree(2 * n, 2 * l).unwrap(),
                "({n}, {l})"
            );
        }
    }
}

#[test]
fn permutation_parity_decides_p_iso() {
    let mut seen = [0usize; 2];
    for n in 1..=10u64 {
        for l in 1..=10u64 {
            if !good_pair(n, l).unwrap() {
                continue;
            }
            let j = BinaryProfile::new(l).exponents;
            let k = BinaryProfile::new(n).exponents;
            let odd = s_jk(&j, &k).unwrap().odd;
            let iso = is_homology_iso(&p_map(2 * n, 2 * l).unwrap(), 1).unwrap();
            assert_eq!(odd, iso, "({n}, {l})");
            seen[usize::from(iso)] += 1;
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn margolis_matches_quotient_ring() {
    for m in 0..=2 {
        let t = k_tables(m, 40).unwrap();
        assert!(t.degreewise.iter().all(|&b| b), "Q_{m}");
    }
}

/// Rebuilds the pushout from public pieces, checking g for A-linearity
/// directly rather than through the t-module inclusion.
#[test]
fn pushout_square_commutes() {
    for (n, m) in [(2, 6), (3, 7), (4, 12), (5, 9), (6, 14)] {
        let q = q_map(n, m).unwrap();
        let small = q.source().clone();
        let j = j_module(n).unwrap();
        let t = Arc::new(t_module(TFamily::PTildeMinus1, m as i32 - j.lo()).unwrap());
        let big = Arc::new(tensor_up_to(j, t, Some(m as i32)).unwrap());
        let mut g = ModuleMap::from_fn("g", small.clone(), big.clone(), |d| {
            let labels = big.labels_in(d);
            Ok(F2Matrix::from_fn(small.dim(d), big.dim(d), |r, c| {
                small.labels_in(d)[r] == labels[c]
            }))
        })
        .unwrap();
        g.verify_a_linear().unwrap();
        let po = pushout("Q", &q, &g).unwrap();
        let top = q.then(&po.from_p).unwrap();
        let bottom = g.then(&po.from_n).unwrap();
        assert!(top.same_matrices(&bottom), "({n}, {m})");

        let built = build_q_module(n, m).unwrap();
        let lo = built.module.lo();
        let here: Vec<usize> = (lo..=m as i32).map(|d| po.module.dim(d)).collect();
        assert_eq!(here, built.module.dims(), "({n}, {m})");
    }
}

#[test]
fn exact_rows() {
    for (n, m) in [(2, 6), (4, 12), (7, 9), (10, 22)] {
        let q = build_q_module(n, m).unwrap();
        assert!(q.inclusion.then(&q.projection).unwrap().is_zero());
        assert!(q.inclusion.is_injective() && q.projection.is_surjective());
        let back = q.desusp_section.then(&q.projection).unwrap();
        assert!(back.same_matrices(&identity(back.source())));
    }
}
