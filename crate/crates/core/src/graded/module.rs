use std::borrow::Cow;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::f2core::{F2Matrix, F2Vector};
use crate::polyalg::{monomials_of_weight, sq_monomial, Monomial, TFamily, TModuleElement};

/// Source of `Sq^i` rows for modules whose action is computed on demand.
pub trait RowAction: Send + Sync {
    /// Image of basis element `idx` of degree `d` under `Sq^i`, as a vector
    /// over the basis of degree `d + i`. Only called with `i >= 1` and
    /// `d + i` inside the module's range.
    fn sq_row(&self, i: u32, d: i32, idx: usize) -> F2Vector;
}

#[derive(Clone)]
enum Action {
    /// `blocks[d - lo][i - 1]` is `Sq^i` from degree `d` to `d + i`.
    Dense(Vec<Vec<F2Matrix>>),
    Rows(Arc<dyn RowAction>),
}

/// A finite graded module over the Steenrod algebra, given by a basis in
/// each degree of `lo..=hi` and the matrices of every `Sq^i`.
///
/// Matrices use the row convention: row `r` of `Sq^i` out of degree `d` is
/// the image of the `r`-th basis element of degree `d`.
///
/// A module with `window_top = Some(w)` is a truncation of a larger module:
/// degrees up to `w` are exact, but the action into degrees above `w` has
/// been discarded.
#[derive(Clone)]
pub struct FiniteGradedModule {
    name: String,
    lo: i32,
    hi: i32,
    labels: Vec<Vec<String>>,
    action: Action,
    window_top: Option<i32>,
}

impl fmt::Debug for FiniteGradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGradedModule")
            .field("name", &self.name)
            .field("lo", &self.lo)
            .field("hi", &self.hi)
            .field("dims", &self.dims())
            .field("window_top", &self.window_top)
            .finish()
    }
}

impl FiniteGradedModule {
    /// Builds a module from explicit matrices. `blocks[d - lo][i - 1]` must
    /// have shape `dim(d) x dim(d + i)` for every `1 <= i <= hi - d`.
    /// The Adem relations in low degrees are checked.
    pub fn from_dense(
        name: impl Into<String>,
        lo: i32,
        labels: Vec<Vec<String>>,
        blocks: Vec<Vec<F2Matrix>>,
        window_top: Option<i32>,
    ) -> Result<Self> {
        let hi = lo + labels.len() as i32 - 1;
        let name = name.into();
        if blocks.len() != labels.len() {
            return Err(Error::contract(format!(
                "{name}: {} degree blocks for {} degrees",
                blocks.len(),
                labels.len()
            )));
        }
        for (di, per_i) in blocks.iter().enumerate() {
            let d = lo + di as i32;
            if per_i.len() != (hi - d) as usize {
                return Err(Error::contract(format!(
                    "{name}: degree {d} carries {} squares, expected {}",
                    per_i.len(),
                    hi - d
                )));
            }
            for (k, m) in per_i.iter().enumerate() {
                let t = di + k + 1;
                if m.shape() != (labels[di].len(), labels[t].len()) {
                    return Err(Error::contract(format!(
                        "{name}: Sq^{} out of degree {d} has shape {:?}",
                        k + 1,
                        m.shape()
                    )));
                }
            }
        }
        let module = FiniteGradedModule {
            name,
            lo,
            hi,
            labels,
            action: Action::Dense(blocks),
            window_top,
        };
        module.check_adem()?;
        Ok(module)
    }

    /// Builds a module whose action rows are produced by `rows`.
    pub fn from_rows(
        name: impl Into<String>,
        lo: i32,
        labels: Vec<Vec<String>>,
        rows: Arc<dyn RowAction>,
        window_top: Option<i32>,
    ) -> Result<Self> {
        let module = FiniteGradedModule {
            name: name.into(),
            lo,
            hi: lo + labels.len() as i32 - 1,
            labels,
            action: Action::Rows(rows),
            window_top,
        };
        module.check_adem()?;
        Ok(module)
    }

    pub fn zero(name: impl Into<String>) -> Self {
        FiniteGradedModule {
            name: name.into(),
            lo: 0,
            hi: -1,
            labels: Vec::new(),
            action: Action::Dense(Vec::new()),
            window_top: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.hi
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i32> {
        self.lo..=self.hi
    }

    pub fn window_top(&self) -> Option<i32> {
        self.window_top
    }

    pub fn is_complete(&self) -> bool {
        self.window_top.is_none()
    }

    pub fn dim(&self, d: i32) -> usize {
        self.labels_in(d).len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn labels_in(&self, d: i32) -> &[String] {
        if d < self.lo || d > self.hi {
            return &[];
        }
        &self.labels[(d - self.lo) as usize]
    }

    pub fn label(&self, d: i32, idx: usize) -> &str {
        &self.labels_in(d)[idx]
    }

    /// Position of a basis label in degree `d`.
    pub fn index_of(&self, d: i32, label: &str) -> Option<usize> {
        self.labels_in(d).iter().position(|l| l == label)
    }

    /// Locates a label in any degree.
    pub fn find_label(&self, label: &str) -> Option<(i32, usize)> {
        self.degrees()
            .find_map(|d| self.index_of(d, label).map(|i| (d, i)))
    }

    /// Largest `i` for which `Sq^i` can be nonzero.
    pub fn span(&self) -> u32 {
        (self.hi - self.lo).max(0) as u32
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.action, Action::Dense(_))
    }

    /// `Sq^i` out of degree `d`, as a `dim(d) x dim(d + i)` matrix.
    pub fn sq_matrix(&self, i: u32, d: i32) -> Cow<'_, F2Matrix> {
        let (r, c) = (self.dim(d), self.dim(d + i as i32));
        if i == 0 {
            return Cow::Owned(F2Matrix::identity(r));
        }
        if r == 0 || c == 0 {
            return Cow::Owned(F2Matrix::zeros(r, c));
        }
        match &self.action {
            Action::Dense(blocks) => Cow::Borrowed(&blocks[(d - self.lo) as usize][i as usize - 1]),
            Action::Rows(rows) => {
                let mut m = F2Matrix::zeros(r, c);
                for idx in 0..r {
                    m.set_row(idx, &rows.sq_row(i, d, idx));
                }
                Cow::Owned(m)
            }
        }
    }

    /// `Sq^i` of basis element `idx` in degree `d`.
    pub fn sq_row(&self, i: u32, d: i32, idx: usize) -> F2Vector {
        let c = self.dim(d + i as i32);
        if i == 0 {
            return F2Vector::unit(c, idx);
        }
        if c == 0 {
            return F2Vector::zeros(0);
        }
        match &self.action {
            Action::Dense(blocks) => blocks[(d - self.lo) as usize][i as usize - 1].row(idx),
            Action::Rows(rows) => rows.sq_row(i, d, idx),
        }
    }

    /// Calls `f` with every coordinate of `Sq^i` of a basis element that is
    /// one. Avoids allocating for stored matrices.
    pub fn for_each_sq_one(&self, i: u32, d: i32, idx: usize, f: &mut dyn FnMut(usize)) {
        if i == 0 {
            f(idx);
            return;
        }
        if self.dim(d + i as i32) == 0 {
            return;
        }
        match &self.action {
            Action::Dense(blocks) => {
                blocks[(d - self.lo) as usize][i as usize - 1]
                    .row_ones(idx)
                    .for_each(f);
            }
            Action::Rows(rows) => rows.sq_row(i, d, idx).ones().for_each(f),
        }
    }

    /// `Sq^i` applied to an arbitrary vector of degree `d`.
    pub fn apply_sq(&self, i: u32, d: i32, v: &F2Vector) -> F2Vector {
        let mut out = F2Vector::zeros(self.dim(d + i as i32));
        if out.is_empty() {
            return out;
        }
        for idx in v.ones() {
            self.for_each_sq_one(i, d, idx, &mut |j| out.flip(j));
        }
        out
    }

    /// Applies `Sq^{a_1} ... Sq^{a_r}` (rightmost first) to a vector of
    /// degree `d`.
    pub fn apply_word(&self, word: &[u32], d: i32, v: &F2Vector) -> F2Vector {
        let mut deg = d;
        let mut cur = v.clone();
        for &i in word.iter().rev() {
            cur = self.apply_sq(i, deg, &cur);
            deg += i as i32;
        }
        cur
    }

    /// Checks `Sq^1 Sq^1 = 0`, `Sq^1 Sq^2 = Sq^3` and `Sq^2 Sq^2 = Sq^3 Sq^1`
    /// on every basis element.
    pub fn check_adem(&self) -> Result<()> {
        let relations: [(&[u32], &[u32]); 3] =
            [(&[1, 1], &[]), (&[1, 2], &[3]), (&[2, 2], &[3, 1])];
        for d in self.degrees() {
            for idx in 0..self.dim(d) {
                let v = F2Vector::unit(self.dim(d), idx);
                for (lhs, rhs) in relations {
                    let a = self.apply_word(lhs, d, &v);
                    let ok = if rhs.is_empty() {
                        a.is_zero()
                    } else {
                        a == self.apply_word(rhs, d, &v)
                    };
                    if !ok {
                        return Err(Error::contract(format!(
                            "{}: Adem relation {:?} = {:?} fails on {} in degree {d}",
                            self.name,
                            lhs,
                            rhs,
                            self.label(d, idx)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks `Sq^i x = 0` whenever `i` exceeds the degree of `x`.
    pub fn is_unstable(&self) -> bool {
        self.degrees().all(|d| {
            (1..=self.span())
                .filter(|&i| i as i32 > d)
                .all(|i| self.sq_matrix(i, d).is_zero())
        })
    }

    /// A copy with every matrix stored explicitly.
    pub fn materialize(&self) -> FiniteGradedModule {
        if self.is_dense() {
            return self.clone();
        }
        let blocks = self
            .degrees()
            .map(|d| {
                (1..=(self.hi - d) as u32)
                    .map(|i| self.sq_matrix(i, d).into_owned())
                    .collect()
            })
            .collect();
        FiniteGradedModule {
            name: self.name.clone(),
            lo: self.lo,
            hi: self.hi,
            labels: self.labels.clone(),
            action: Action::Dense(blocks),
            window_top: self.window_top,
        }
    }

    /// Degreewise dimensions.
    pub fn poincare(&self) -> PoincareSeries {
        PoincareSeries::from_dims(self.lo, self.dims())
    }

    /// Matrix equality of two modules: same range, labels and action.
    pub fn same_as(&self, other: &FiniteGradedModule) -> bool {
        self.lo == other.lo
            && self.hi == other.hi
            && self.labels == other.labels
            && self.window_top == other.window_top
            && self.degrees().all(|d| {
                (1..=(self.hi - d) as u32).all(|i| self.sq_matrix(i, d) == other.sq_matrix(i, d))
            })
    }

    /// Shifts every degree by `s`. Labels gain a suspension prefix.
    pub fn suspend(&self, s: i32) -> FiniteGradedModule {
        let labels = self
            .labels
            .iter()
            .map(|ls| ls.iter().map(|l| suspension_label(s, l)).collect())
            .collect();
        let name = if s == 0 {
            self.name.clone()
        } else {
            suspension_label(s, &self.name)
        };
        FiniteGradedModule {
            name,
            lo: self.lo + s,
            hi: self.hi + s,
            labels,
            action: self.materialize().action,
            window_top: self.window_top.map(|w| w + s),
        }
    }

    /// Discards degrees above `top` and every action landing there.
    pub fn truncate(&self, top: i32) -> Result<FiniteGradedModule> {
        if top < self.lo - 1 {
            return Err(Error::contract(format!(
                "cannot truncate {} at {top} below its bottom degree {}",
                self.name, self.lo
            )));
        }
        if top >= self.hi {
            return Ok(self.clone());
        }
        let keep = (top - self.lo + 1) as usize;
        let blocks = (self.lo..=top)
            .map(|d| {
                (1..=(top - d) as u32)
                    .map(|i| self.sq_matrix(i, d).into_owned())
                    .collect()
            })
            .collect();
        let window_top = Some(self.window_top.map_or(top, |w| w.min(top)));
        Ok(FiniteGradedModule {
            name: self.name.clone(),
            lo: self.lo,
            hi: top,
            labels: self.labels[..keep].to_vec(),
            action: Action::Dense(blocks),
            window_top,
        })
    }

    /// Marks a truncated module as exact, after the caller has shown that
    /// nothing lies above its top degree.
    pub fn mark_complete(mut self) -> Self {
        self.window_top = None;
        self
    }

    /// Replaces the basis labels; shapes must match.
    pub fn relabel(mut self, labels: Vec<Vec<String>>) -> Result<Self> {
        if labels
            .iter()
            .map(Vec::len)
            .ne(self.labels.iter().map(Vec::len))
        {
            return Err(Error::contract("relabel: basis sizes differ"));
        }
        self.labels = labels;
        Ok(self)
    }
}

fn suspension_label(s: i32, l: &str) -> String {
    match s {
        0 => l.to_string(),
        1 => format!("s({l})"),
        _ => format!("s^{s}({l})"),
    }
}

/// Degreewise dimensions, listed from `min(lo, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PoincareSeries {
    pub start: i32,
    pub coeffs: Vec<usize>,
}

impl PoincareSeries {
    pub fn from_dims(lo: i32, dims: Vec<usize>) -> Self {
        let start = lo.min(0);
        let mut coeffs = vec![0; (lo - start) as usize];
        coeffs.extend(dims);
        PoincareSeries { start, coeffs }
    }

    pub fn coeff(&self, d: i32) -> usize {
        usize::try_from(d - self.start)
            .ok()
            .and_then(|k| self.coeffs.get(k).copied())
            .unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.coeffs.iter().sum()
    }

    /// The series of the suspension by `s`.
    pub fn shifted(&self, s: i32) -> Self {
        let lo = self.start + s;
        PoincareSeries::from_dims(lo, self.coeffs.clone())
    }

    /// Equality ignoring leading zeros and trailing zeros.
    pub fn same_dims(&self, other: &PoincareSeries) -> bool {
        let lo = self.start.min(other.start);
        let hi =
            (self.start + self.coeffs.len() as i32).max(other.start + other.coeffs.len() as i32);
        (lo..hi).all(|d| self.coeff(d) == other.coeff(d))
    }
}

/// The module `J(n)`: the weight-`n` monomials in `x_0, x_1, ...` with the
/// Steenrod action of the polynomial algebra.
pub fn module_from_weight(n: u64) -> Result<FiniteGradedModule> {
    let monos = monomials_of_weight(n)?;
    let name = format!("J({n})");
    if n == 0 {
        return FiniteGradedModule::from_dense(name, 0, vec![vec!["1".into()]], vec![vec![]], None);
    }
    let lo = n.count_ones() as i32;
    let hi = n as i32;
    let mut by_degree: Vec<Vec<Monomial>> = vec![Vec::new(); (hi - lo + 1) as usize];
    for m in monos {
        by_degree[(m.degree() as i32 - lo) as usize].push(m);
    }
    let index: HashMap<Monomial, usize> = by_degree
        .iter()
        .flat_map(|ms| ms.iter().enumerate().map(|(i, &m)| (m, i)))
        .collect();
    let mut blocks = Vec::with_capacity(by_degree.len());
    for (di, ms) in by_degree.iter().enumerate() {
        let d = lo + di as i32;
        let mut per_i = Vec::with_capacity((hi - d) as usize);
        for i in 1..=(hi - d) as u32 {
            let target = &by_degree[di + i as usize];
            let mut mat = F2Matrix::zeros(ms.len(), target.len());
            for (r, m) in ms.iter().enumerate() {
                for t in sq_monomial(i, m).terms() {
                    mat.flip(r, index[t]);
                }
            }
            per_i.push(mat);
        }
        blocks.push(per_i);
    }
    let labels = by_degree
        .iter()
        .map(|ms| ms.iter().map(Monomial::to_string).collect())
        .collect();
    FiniteGradedModule::from_dense(name, lo, labels, blocks, None)
}

/// The span of `t^j` for `j` in `family` with `j <= top`, with the binomial
/// action. Always a truncation unless the family is bounded, which none are.
pub fn t_module(family: TFamily, top: i32) -> Result<FiniteGradedModule> {
    let lo = family.bottom();
    if top < lo {
        return Ok(FiniteGradedModule::zero(family.name()));
    }
    let exps: Vec<Vec<i32>> = (lo..=top)
        .map(|j| if family.contains(j) { vec![j] } else { vec![] })
        .collect();
    let mut blocks = Vec::new();
    for (di, src) in exps.iter().enumerate() {
        let d = lo + di as i32;
        let mut per_i = Vec::new();
        for i in 1..=(top - d) as u32 {
            let tgt = &exps[di + i as usize];
            let mut mat = F2Matrix::zeros(src.len(), tgt.len());
            if let (Some(&j), false) = (src.first(), tgt.is_empty()) {
                let e = TModuleElement::new(family, j)?;
                if crate::polyalg::t_sq(family, i, e).is_some() {
                    mat.set(0, 0, true);
                }
            }
            per_i.push(mat);
        }
        blocks.push(per_i);
    }
    let labels = exps
        .iter()
        .map(|js| js.iter().map(|j| format!("t^{j}")).collect())
        .collect();
    FiniteGradedModule::from_dense(family.name(), lo, labels, blocks, Some(top))
}
