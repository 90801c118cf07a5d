use wasm_bindgen::prelude::*;

use bgq_core::bg::{build_q_module, j_module};
use bgq_core::graded::{a1_free_decomposition, margolis, FiniteGradedModule};
use bgq_core::theorems::main_criterion;

fn js(e: bgq_core::Error) -> JsError {
    JsError::new(&e.to_string())
}

/// One text row per `n`; `#` marks pairs with `Q(n, m)` predicted
/// `Q_1`-acyclic, `.` the rest, blank where `m <= n`.
#[wasm_bindgen]
pub fn criterion_grid(n_max: u32, m_max: u32) -> Result<String, JsError> {
    if n_max > 128 || m_max > 256 {
        return Err(JsError::new("grid is capped at n <= 128, m <= 256"));
    }
    let mut out = String::new();
    for n in 2..=u64::from(n_max) {
        out.push_str(&format!("{n:>3} "));
        for m in 2..=u64::from(m_max) {
            out.push(if m <= n {
                ' '
            } else if main_criterion(n, m).map_err(js)?.predicted_acyclic {
                '#'
            } else {
                '.'
            });
        }
        out.push('\n');
    }
    Ok(out)
}

/// Dimension, degreewise profile, `Q_1`-homology and `A(1)`-freeness of
/// `Q(n, m)`.
#[wasm_bindgen]
pub fn q_module_summary(n: u32, m: u32) -> Result<String, JsError> {
    if m > 32 {
        return Err(JsError::new("the demo builds Q(n, m) for m <= 32"));
    }
    let q = build_q_module(n.into(), m.into()).map_err(js)?;
    let h = margolis(&q.module, 1).map_err(js)?;
    let dims: Vec<String> = q.module.dims().iter().map(usize::to_string).collect();
    let a1 = match a1_free_decomposition(&q.module).generators() {
        Some(g) => format!("free over A(1) on degrees {g:?}"),
        None => "not free over A(1)".to_string(),
    };
    Ok(format!(
        "Q({n},{m}): dim {}; degrees {}..{}: {}\nQ_1-homology: {}\n{a1}\n",
        q.module.total_dim(),
        q.module.lo(),
        q.module.hi(),
        dims.join(" "),
        profile_text(&h.profile()),
    ))
}

/// `Q_k`-homology of `J(n)` by degree.
#[wasm_bindgen]
pub fn margolis_profile(n: u32, k: u32) -> Result<String, JsError> {
    if n > 64 || k > 3 {
        return Err(JsError::new(
            "the demo covers J(n) for n <= 64 and Q_0 .. Q_3",
        ));
    }
    let j = j_module(n.into()).map_err(js)?;
    let report = margolis(&j, k).map_err(js)?;
    Ok(format!(
        "J({n}): dim {}; Q_{k}-homology total {}: {}\n",
        FiniteGradedModule::total_dim(&j),
        report.total(),
        profile_text(&report.profile())
    ))
}

fn profile_text(profile: &[(i32, usize)]) -> String {
    if profile.is_empty() {
        return "zero".to_string();
    }
    profile
        .iter()
        .map(|(d, k)| format!("{k} in degree {d}"))
        .collect::<Vec<_>>()
        .join(", ")
}
