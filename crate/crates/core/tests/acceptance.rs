//! One line per acceptance criterion; exits nonzero if any fails.
//!
//! A criterion whose literal claim is false is reported as REFUTED. That
//! verdict is itself strict: the counterexample is pinned exactly and any
//! drift from it is a FAIL.

use std::process::ExitCode;
use std::time::Instant;

use bgq_core::bg::{build_q_module, dot_sq, j_module, mahowald_exact, p_map};
use bgq_core::f2core::F2Vector;
use bgq_core::f2core::{alpha2, binom_mod2, nu2};
use bgq_core::graded::{a1_free_decomposition, hom_solver, hom_space_dimension, margolis};
use bgq_core::polyalg::{
    monomials_of_weight, qm_monomial, qm_via_commutator, Monomial, Polynomial,
};
use bgq_core::theorems::{
    acyclicity_oracle, k_tables_with, magic_lemma_check, main_criterion, minimal_m,
    mixed_parity_vanishing, s_jk, scan_main_theorem, Limits, ScanConfig,
};

enum Verdict {
    Pass(String),
    Refuted(String),
}

type Check = Result<Verdict, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: bgq_core::Error) -> String {
    err.to_string()
}

fn scan_rectangle() -> Check {
    let report = scan_main_theorem(&ScanConfig::new(47, 48)).map_err(e)?;
    ensure(report.records.len() == 1081, || {
        format!("{} records", report.records.len())
    })?;
    ensure(report.is_clean(), || {
        format!("mismatches: {:?}", report.mismatches)
    })?;
    Ok(Verdict::Pass(format!(
        "{} pairs, {} acyclic, 0 mismatches",
        report.summary.pairs, report.summary.oracle_acyclic
    )))
}

fn fixtures() -> Check {
    let q26 = build_q_module(2, 6).map_err(e)?;
    ensure(q26.module.total_dim() == 8, || "dim Q(2,6) != 8".into())?;
    ensure(
        q26.module.lo() == 0 && q26.module.dims() == [1, 1, 1, 2, 1, 1, 1],
        || format!("Q(2,6) profile {:?}", q26.module.dims()),
    )?;
    let g26 = a1_free_decomposition(&q26.module);
    ensure(g26.generators() == Some(&[0][..]), || {
        format!("Q(2,6): {g26:?}")
    })?;

    let q412 = build_q_module(4, 12).map_err(e)?;
    ensure(q412.module.total_dim() == 24, || "dim Q(4,12) != 24".into())?;
    let g412 = a1_free_decomposition(&q412.module);
    ensure(g412.generators() == Some(&[0, 2, 6][..]), || {
        format!("Q(4,12): {g412:?}")
    })?;

    let q1022 = build_q_module(10, 22).map_err(e)?;
    ensure(q1022.module.total_dim() == 88, || {
        "dim Q(10,22) != 88".into()
    })?;

    // s^-1(x1^2) sits in degree 1 and both summands on the right in
    // degree 3, so the equation can only hold for Sq^2 alone. The composite
    // Sq^2 Sq^1 lands in degree 4, and Sq^1 already kills the class.
    let (d, v) = q412.desusp_class(&"x1^2".parse().unwrap()).map_err(e)?;
    let (d3, expected) = q412.element(&["s^-1(x0^4)", "x1^2*x3"]).map_err(e)?;
    ensure(d == 1 && d3 == 3, || format!("degrees {d}, {d3}"))?;
    let sq2 = q412.module.apply_sq(2, d, &v);
    ensure(sq2 == expected, || {
        format!("Sq^2 gives {:?}", q412.labels(3, &sq2))
    })?;
    ensure(q412.module.apply_sq(1, d, &v).is_zero(), || {
        "Sq^1 s^-1(x1^2) nonzero".into()
    })?;
    ensure(q412.module.apply_word(&[2, 1], d, &v).is_zero(), || {
        "Sq^2 Sq^1 nonzero".into()
    })?;
    Ok(Verdict::Refuted(
        "Q(2,6) = A(1); Q(4,12) free on [0,2,6]; dim Q(10,22) = 88; \
         Sq^2 Sq^1 s^-1(x1^2) = 0 in degree 4, while Sq^2 s^-1(x1^2) = s^-1(x0^4) + x1^2*x3"
            .into(),
    ))
}

fn thomas() -> Check {
    let mut checked = 0;
    let mut oracle = 0;
    for n in (2..=32u64).step_by(2) {
        for k in 0..8 {
            let m = n + (1 << k);
            if (1u64 << k) <= n || m > 96 {
                continue;
            }
            ensure(main_criterion(n, m).map_err(e)?.predicted_acyclic, || {
                format!("criterion ({n},{m})")
            })?;
            checked += 1;
            if m <= 48 {
                ensure(acyclicity_oracle(n, m).map_err(e)?.acyclic, || {
                    format!("oracle ({n},{m})")
                })?;
                oracle += 1;
            }
        }
    }
    Ok(Verdict::Pass(format!(
        "{checked} pairs by criterion, {oracle} by oracle"
    )))
}

fn minimal_example() -> Check {
    for n in (2..=24u64).step_by(2) {
        let m = 2 * n + (1 << nu2(n).map_err(e)?);
        ensure(minimal_m(n, m).map_err(e)? == Some(m), || {
            format!("n={n}: minimal m is not {m}")
        })?;
        if n <= 16 {
            ensure(acyclicity_oracle(n, m).map_err(e)?.acyclic, || {
                format!("oracle ({n},{m})")
            })?;
        }
    }
    Ok(Verdict::Pass(
        "m = 2n + 2^nu(n) minimal for even n <= 24, oracle-acyclic for n <= 16".into(),
    ))
}

fn rank_tables() -> Check {
    let limits = Limits {
        max_module_weight: 65,
        ..Limits::default()
    };
    let t0 = k_tables_with(0, 64, &limits).map_err(e)?;
    let t1 = k_tables_with(1, 64, &limits).map_err(e)?;
    let t2 = k_tables_with(2, 65, &limits).map_err(e)?;
    ensure(
        t0.k.iter()
            .enumerate()
            .all(|(n, &k)| k == usize::from(n <= 1)),
        || format!("k0 {:?}", t0.k),
    )?;
    ensure(t1.k[2..].iter().all(|&k| k == 2), || {
        format!("k1 {:?}", t1.k)
    })?;
    for n in 1..=32usize {
        for ee in 0..2 {
            ensure(t2.k[2 * n + ee] == 2 * n, || {
                format!("k2 at {}", 2 * n + ee)
            })?;
        }
    }
    ensure(
        t1.rational == t1.k && t2.rational[..=64] == t2.k[..=64],
        || "series".into(),
    )?;
    ensure(t0.agrees() && t1.agrees() && t2.agrees(), || {
        "product or degreewise check".into()
    })?;
    Ok(Verdict::Pass(
        "k_0, k_1, k_2 tables and series agree to order 64".into(),
    ))
}

fn cross_oracles() -> Check {
    let mut monomials = 0;
    for w in 0..=64 {
        for mono in monomials_of_weight(w).map_err(e)? {
            let p: Polynomial = [mono].into_iter().collect();
            for m in 0..=2 {
                ensure(qm_monomial(m, &mono) == qm_via_commutator(m, &p), || {
                    format!("Q_{m} on {mono}")
                })?;
            }
            monomials += 1;
        }
    }
    // Hom(J(2n), J(n)) is J(2n)^n. dot_sq(n) is the point with functional
    // "e0 = 0", p(2n, n) the all-ones point; they differ once J(2n)^n
    // contains a monomial divisible by x0.
    let mut differ = Vec::new();
    for n in 1..=12u64 {
        let source = j_module(2 * n).map_err(e)?;
        let d = n as i32;
        let monos: Vec<Monomial> = source
            .labels_in(d)
            .iter()
            .map(|l| l.parse().unwrap())
            .collect();
        let dot = dot_sq(n).map_err(e)?;
        let phi = F2Vector::from_indices(
            monos.len(),
            (0..monos.len()).filter(|&i| monos[i].exponent(0) == 0),
        );
        let solved = hom_solver(source, j_module(n).map_err(e)?, &phi).map_err(e)?;
        ensure(dot.same_matrices(&solved), || {
            format!("dot_sq({n}) is not the solver point")
        })?;
        let p = p_map(2 * n, n).map_err(e)?;
        let same = dot.same_matrices(&p);
        ensure(same == monos.iter().all(|m| m.exponent(0) == 0), || {
            format!("dot_sq({n}) vs p")
        })?;
        if !same {
            differ.push(n);
        }
    }
    ensure(differ == (3..=12).collect::<Vec<_>>(), || {
        format!("dot_sq differs at {differ:?}")
    })?;
    for n in 1..=16 {
        ensure(mahowald_exact(n).map_err(e)?, || format!("Mahowald n={n}"))?;
    }
    for n in 1..=20 {
        let jn = j_module(n).map_err(e)?;
        for l in 1..=n {
            let jl = j_module(l).map_err(e)?;
            ensure(hom_space_dimension(&jn, &jl) == jn.dim(l as i32), || {
                format!("Hom(J({n}), J({l}))")
            })?;
        }
    }
    Ok(Verdict::Refuted(format!(
        "{monomials} monomials x 3 primitives; Mahowald; Hom dimensions; \
         dot_sq(n) = p_map(2n,n) only for n <= 2, x0^2*x2 in J(6)^3 separates them at n = 3"
    )))
}

fn combinatorics() -> Check {
    ensure(magic_lemma_check(512).map_err(e)?.is_empty(), || {
        "magic lemma".into()
    })?;
    let mut pairs = 0;
    for d in 0..=4usize {
        let subsets: Vec<Vec<u32>> = itertools::Itertools::combinations(0..10u32, d).collect();
        for j in &subsets {
            for k in &subsets {
                s_jk(j, k).map_err(e)?;
                pairs += 1;
            }
        }
    }
    ensure(mixed_parity_vanishing(32).map_err(e)?.is_empty(), || {
        "mixed parity".into()
    })?;
    for n in 1..=1u64 << 16 {
        let lhs = alpha2(n - 1) as i64 - alpha2(n) as i64;
        ensure(lhs == nu2(n).map_err(e)? as i64 - 1, || {
            format!("alpha/nu at {n}")
        })?;
    }
    for m in (0..=1024i64).step_by(2) {
        for n in (0..=1024i64).step_by(2) {
            let full = binom_mod2(m - n - 2, n as u64);
            let half = binom_mod2(m / 2 - n / 2 - 1, (n / 2) as u64);
            ensure(full == half, || format!("halving at ({n},{m})"))?;
        }
    }
    Ok(Verdict::Pass(format!(
        "magic lemma to 512, {pairs} S(J,K) pairs, mixed parity to 32, alpha/nu, halving"
    )))
}

fn splitting() -> Check {
    let k1 = |w: u64| -> Result<usize, String> {
        Ok(margolis(&*j_module(w).map_err(e)?, 1).map_err(e)?.total())
    };
    let mut count = 0;
    for n in 2..=12u64 {
        for m in n + 1..2 * n - 1 {
            let q = build_q_module(n, m).map_err(e)?;
            let h = margolis(&q.module, 1).map_err(e)?.total();
            ensure(h == k1(m)? + k1(n)?, || format!("Q({n},{m}) has {h}"))?;
            count += 1;
        }
        let q = build_q_module(n, 2 * n - 1).map_err(e)?;
        let target = j_module(2 * n).map_err(e)?.suspend(-1);
        ensure(q.module.poincare().same_dims(&target.poincare()), || {
            format!("Poincare Q({n},{})", 2 * n - 1)
        })?;
        let (hq, ht) = (
            margolis(&q.module, 1).map_err(e)?,
            margolis(&target, 1).map_err(e)?,
        );
        ensure(hq.profile() == ht.profile(), || {
            format!("Margolis Q({n},{})", 2 * n - 1)
        })?;
    }
    Ok(Verdict::Pass(format!(
        "{count} split pairs; Q(n,2n-1) ~ s^-1 J(2n) for n <= 12"
    )))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("main theorem scan, 2 <= n < m <= 48", scan_rectangle),
        ("fixtures Q(2,6), Q(4,12), Q(10,22)", fixtures),
        ("Q(n, n + 2^k) acyclic", thomas),
        ("minimal acyclic m", minimal_example),
        ("rank tables k_0, k_1, k_2", rank_tables),
        ("cross-oracle identities", cross_oracles),
        ("combinatorial suite", combinatorics),
        ("splitting regimes", splitting),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(Verdict::Pass(detail)) => {
                println!("criterion {}: PASS  {name}: {detail} ({secs:.1}s)", i + 1)
            }
            Ok(Verdict::Refuted(detail)) => {
                println!(
                    "criterion {}: REFUTED  {name}: {detail} ({secs:.1}s)",
                    i + 1
                )
            }
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
