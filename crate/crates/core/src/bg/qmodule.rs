use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::f2core::{F2Matrix, F2Vector};
use crate::graded::{dump_text, pushout, t_module, FiniteGradedModule, ModuleMap, Side};
use crate::polyalg::{Monomial, TFamily};

use super::j_module;
use super::maps::{j_tensor_t, q_map_up_to, q_window};

/// The extension `0 -> J(m) -> Q(n, m) -> Sigma^{-1} J(n) -> 0` classified
/// by `q(n, m)`.
///
/// Basis elements coming from `J(m)` keep their monomial labels; the class
/// of `x (x) t^{-1}` is labelled `s^-1(x)`.
#[derive(Clone, Debug)]
pub struct QModule {
    pub n: u64,
    pub m: u64,
    pub module: Arc<FiniteGradedModule>,
    pub inclusion: ModuleMap,
    pub projection: ModuleMap,
    /// `s^-1(x) -> ` the class of `(0, x (x) t^{-1})`. Linear only.
    pub desusp_section: ModuleMap,
}

/// Builds `Q(n, m)` as the pushout of
/// `J(m) <- J(n) (x) (t) -> J(n) (x) P~_{-1}`, all truncated one degree
/// above `m`.
pub fn build_q_module(n: u64, m: u64) -> Result<QModule> {
    if n < 2 || n >= m {
        return Err(Error::Domain(format!(
            "Q(n, m) needs 2 <= n < m, got ({n}, {m})"
        )));
    }
    let top = q_window(m);
    let name = format!("Q({n},{m})");
    let f = q_map_up_to(n, m, top)?;
    let small = f.source().clone();
    let big = j_tensor_t(n, TFamily::PTildeMinus1, top)?;
    let g = t_inclusion(n, &small, &big, top)?;
    let po = pushout(name.clone(), &f, &g)?;

    // Nothing survives above m: J(m) stops at m, and the cokernel of g is
    // Sigma^{-1} J(n), which stops at n - 1 < m. Degree m + 1 is computed.
    if po.module.dim(top) != 0 {
        return Err(Error::theory(format!("{name} is nonzero in degree {top}")));
    }
    let labels = po
        .module
        .degrees()
        .filter(|&d| d < top)
        .map(|d| {
            po.module
                .labels_in(d)
                .iter()
                .zip(&po.origins[(d - po.module.lo()) as usize])
                .map(|(l, (side, _))| match side {
                    Side::P => l.clone(),
                    Side::N => desusp_label(l),
                })
                .collect()
        })
        .collect();
    let module = Arc::new(
        po.module
            .truncate(m as i32)?
            .mark_complete()
            .relabel(labels)?
            .with_name(name.clone()),
    );

    let jm = j_module(m)?;
    let mut inclusion = ModuleMap::from_fn(
        format!("J({m}) -> {name}"),
        jm.clone(),
        module.clone(),
        |d| Ok(po.from_p.block(d)),
    )?;
    inclusion.verify_a_linear()?;

    let desusp = Arc::new(j_module(n)?.suspend(-1));
    let mut projection = ModuleMap::from_fn(
        format!("{name} -> {}", desusp.name()),
        module.clone(),
        desusp.clone(),
        |d| {
            let mut b = F2Matrix::zeros(module.dim(d), desusp.dim(d));
            for (r, l) in module.labels_in(d).iter().enumerate() {
                if let Some(k) = desusp.index_of(d, l) {
                    b.set(r, k, true);
                }
            }
            Ok(b)
        },
    )?;
    projection.verify_a_linear()?;

    let desusp_section = ModuleMap::from_fn(
        format!("{} -> {name}", desusp.name()),
        desusp.clone(),
        module.clone(),
        |d| {
            let mut b = F2Matrix::zeros(desusp.dim(d), module.dim(d));
            for (r, l) in desusp.labels_in(d).iter().enumerate() {
                let k = module
                    .index_of(d, l)
                    .ok_or_else(|| Error::theory(format!("{l} is missing from {name}")))?;
                b.set(r, k, true);
            }
            Ok(b)
        },
    )?;

    let q = QModule {
        n,
        m,
        module,
        inclusion,
        projection,
        desusp_section,
    };
    q.check_invariants()?;
    Ok(q)
}

/// `id (x) ((t) -> P~_{-1})`, linear because the inclusion of t-modules is.
fn t_inclusion(
    n: u64,
    small: &Arc<FiniteGradedModule>,
    big: &Arc<FiniteGradedModule>,
    top: i32,
) -> Result<ModuleMap> {
    let t_top = top - j_module(n)?.lo();
    let (ideal, ptilde) = (
        Arc::new(t_module(TFamily::Ideal, t_top)?),
        Arc::new(t_module(TFamily::PTildeMinus1, t_top)?),
    );
    let mut iota = ModuleMap::from_fn("(t) -> P~_-1", ideal.clone(), ptilde.clone(), |d| {
        Ok(F2Matrix::from_fn(ideal.dim(d), ptilde.dim(d), |_, _| true))
    })?;
    iota.verify_a_linear()?;

    let g = ModuleMap::from_fn(
        format!("{} -> {}", small.name(), big.name()),
        small.clone(),
        big.clone(),
        |d| {
            let index: HashMap<&str, usize> = big
                .labels_in(d)
                .iter()
                .enumerate()
                .map(|(i, l)| (l.as_str(), i))
                .collect();
            let mut b = F2Matrix::zeros(small.dim(d), big.dim(d));
            for (r, l) in small.labels_in(d).iter().enumerate() {
                let k = index.get(l.as_str()).ok_or_else(|| {
                    Error::contract(format!("{l} is missing from {}", big.name()))
                })?;
                b.set(r, *k, true);
            }
            Ok(b)
        },
    )?;
    Ok(g.assume_a_linear())
}

fn desusp_label(tensor_label: &str) -> String {
    match tensor_label.strip_suffix("|t^-1") {
        Some(x) => format!("s^-1({x})"),
        None => tensor_label.to_string(),
    }
}

impl QModule {
    fn check_invariants(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::theory(format!("{}: {what}", self.module.name())));
        if !self.inclusion.then(&self.projection)?.is_zero() {
            return fail("projection after inclusion is nonzero");
        }
        let round = self.desusp_section.then(&self.projection)?;
        let src = round.source();
        if !src
            .degrees()
            .all(|d| round.block(d) == F2Matrix::identity(src.dim(d)))
        {
            return fail("the section does not split the projection");
        }
        if !self.inclusion.is_injective() || !self.projection.is_surjective() {
            return fail("the extension is not short exact");
        }
        let (jm, jn) = (j_module(self.m)?, j_module(self.n)?);
        if self.module.total_dim() != jm.total_dim() + jn.total_dim() {
            return fail("dimension is not dim J(m) + dim J(n)");
        }
        Ok(())
    }

    /// `s^-1(x)` as an element of `Q(n, m)`.
    pub fn desusp_class(&self, x: &Monomial) -> Result<(i32, F2Vector)> {
        self.element(&[&format!("s^-1({x})")])
    }

    /// The sum of the named basis elements, which must share a degree.
    pub fn element(&self, labels: &[&str]) -> Result<(i32, F2Vector)> {
        let mut degree = None;
        let mut found = Vec::new();
        for l in labels {
            let (d, i) = self.module.find_label(l).ok_or_else(|| {
                Error::Domain(format!(
                    "{l} is not a basis element of {}",
                    self.module.name()
                ))
            })?;
            if degree.is_some_and(|e| e != d) {
                return Err(Error::Domain("elements of different degrees".into()));
            }
            degree = Some(d);
            found.push(i);
        }
        let d = degree.ok_or_else(|| Error::Domain("empty element".into()))?;
        Ok((d, F2Vector::from_indices(self.module.dim(d), found)))
    }

    /// Basis labels in the support of `v`.
    pub fn labels(&self, d: i32, v: &F2Vector) -> Vec<String> {
        v.ones()
            .map(|i| self.module.label(d, i).to_string())
            .collect()
    }

    /// The module dump followed by the blocks of the structure maps, as
    /// `map <name> <degree> rows...` lines.
    pub fn dump_text(&self) -> String {
        let mut s = dump_text(&self.module);
        for (tag, f) in [
            ("inclusion", &self.inclusion),
            ("projection", &self.projection),
            ("section", &self.desusp_section),
        ] {
            for d in f.source().degrees() {
                let b = f.block(d);
                if b.is_zero() {
                    continue;
                }
                write!(s, "map {tag} {d}").unwrap();
                for r in b.to_bitstrings() {
                    write!(s, " {r}").unwrap();
                }
                s.push('\n');
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{a1_free_decomposition, margolis};

    #[test]
    fn q_2_6() {
        let q = build_q_module(2, 6).unwrap();
        assert_eq!(q.module.total_dim(), 8);
        assert_eq!(q.module.lo(), 0);
        assert_eq!(q.module.dims(), [1, 1, 1, 2, 1, 1, 1]);
        assert!(margolis(&q.module, 1).unwrap().is_acyclic());
        assert_eq!(
            a1_free_decomposition(&q.module).generators(),
            Some(&[0][..])
        );
        assert_eq!(q.module.labels_in(0), ["s^-1(x1)"]);
    }

    #[test]
    fn q_4_12_example_class() {
        let q = build_q_module(4, 12).unwrap();
        assert_eq!(q.module.total_dim(), 24);
        let (d, v) = q.desusp_class(&"x1^2".parse().unwrap()).unwrap();
        assert_eq!(d, 1);
        let w = q.module.apply_sq(2, d, &v);
        let mut got = q.labels(d + 2, &w);
        got.sort();
        assert_eq!(got, ["s^-1(x0^4)", "x1^2*x3"]);
        assert!(q.module.apply_sq(1, d, &v).is_zero());
        assert_eq!(
            a1_free_decomposition(&q.module).generators(),
            Some(&[0, 2, 6][..])
        );
    }

    #[test]
    fn rejects_bad_pairs() {
        assert!(build_q_module(1, 4).is_err());
        assert!(build_q_module(5, 5).is_err());
    }
}
