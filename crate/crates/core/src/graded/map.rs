use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::f2core::{F2Matrix, F2Vector};

use super::module::FiniteGradedModule;

/// A degree-preserving linear map between graded modules, stored as one
/// matrix per source degree (row convention: row `r` is the image of the
/// `r`-th basis element).
#[derive(Clone)]
pub struct ModuleMap {
    name: String,
    source: Arc<FiniteGradedModule>,
    target: Arc<FiniteGradedModule>,
    blocks: Vec<F2Matrix>,
    a_linear: bool,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleMap")
            .field("name", &self.name)
            .field("source", &self.source.name())
            .field("target", &self.target.name())
            .field("a_linear", &self.a_linear)
            .finish()
    }
}

impl ModuleMap {
    /// `blocks[d - source.lo()]` must be `source.dim(d) x target.dim(d)`.
    /// The result carries no linearity certificate.
    pub fn new(
        name: impl Into<String>,
        source: Arc<FiniteGradedModule>,
        target: Arc<FiniteGradedModule>,
        blocks: Vec<F2Matrix>,
    ) -> Result<Self> {
        let name = name.into();
        if blocks.len() != source.dims().len() {
            return Err(Error::contract(format!(
                "{name}: {} blocks for {} source degrees",
                blocks.len(),
                source.dims().len()
            )));
        }
        for (d, b) in source.degrees().zip(&blocks) {
            if b.shape() != (source.dim(d), target.dim(d)) {
                return Err(Error::contract(format!(
                    "{name}: block in degree {d} has shape {:?}, expected {:?}",
                    b.shape(),
                    (source.dim(d), target.dim(d))
                )));
            }
        }
        Ok(ModuleMap {
            name,
            source,
            target,
            blocks,
            a_linear: false,
        })
    }

    /// Builds the map degree by degree from a closure returning each block.
    pub fn from_fn(
        name: impl Into<String>,
        source: Arc<FiniteGradedModule>,
        target: Arc<FiniteGradedModule>,
        mut block: impl FnMut(i32) -> Result<F2Matrix>,
    ) -> Result<Self> {
        let blocks = source
            .degrees()
            .map(&mut block)
            .collect::<Result<Vec<_>>>()?;
        Self::new(name, source, target, blocks)
    }

    pub fn zero(
        name: impl Into<String>,
        source: Arc<FiniteGradedModule>,
        target: Arc<FiniteGradedModule>,
    ) -> Self {
        let blocks = source
            .degrees()
            .map(|d| F2Matrix::zeros(source.dim(d), target.dim(d)))
            .collect();
        ModuleMap {
            name: name.into(),
            source,
            target,
            blocks,
            a_linear: true,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<FiniteGradedModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGradedModule> {
        &self.target
    }

    pub fn is_a_linear(&self) -> bool {
        self.a_linear
    }

    /// The matrix in source degree `d` (empty outside the source range).
    pub fn block(&self, d: i32) -> F2Matrix {
        if d < self.source.lo() || d > self.source.hi() {
            return F2Matrix::zeros(0, self.target.dim(d));
        }
        self.blocks[(d - self.source.lo()) as usize].clone()
    }

    pub fn block_ref(&self, d: i32) -> Option<&F2Matrix> {
        if d < self.source.lo() || d > self.source.hi() {
            return None;
        }
        Some(&self.blocks[(d - self.source.lo()) as usize])
    }

    pub fn apply(&self, d: i32, v: &F2Vector) -> F2Vector {
        match self.block_ref(d) {
            Some(b) => b.left_mul(v),
            None => F2Vector::zeros(self.target.dim(d)),
        }
    }

    /// Image of one basis element.
    pub fn image_of(&self, d: i32, idx: usize) -> F2Vector {
        match self.block_ref(d) {
            Some(b) => b.row(idx),
            None => F2Vector::zeros(self.target.dim(d)),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModuleMap) -> Result<ModuleMap> {
        if !Arc::ptr_eq(&self.target, &next.source) && !self.target.same_as(&next.source) {
            return Err(Error::contract(format!(
                "cannot compose {} with {}: target and source differ",
                self.name, next.name
            )));
        }
        let blocks = self
            .source
            .degrees()
            .map(|d| self.block(d).mul(&next.block(d)))
            .collect();
        Ok(ModuleMap {
            name: format!("{} . {}", next.name, self.name),
            source: self.source.clone(),
            target: next.target.clone(),
            blocks,
            a_linear: self.a_linear && next.a_linear,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(F2Matrix::is_zero)
    }

    pub fn rank_in(&self, d: i32) -> usize {
        self.block_ref(d).map_or(0, F2Matrix::rank)
    }

    pub fn is_injective(&self) -> bool {
        self.source
            .degrees()
            .all(|d| self.rank_in(d) == self.source.dim(d))
    }

    pub fn is_surjective(&self) -> bool {
        self.target
            .degrees()
            .all(|d| self.rank_in(d) == self.target.dim(d))
    }

    /// Same blocks in every degree.
    pub fn same_matrices(&self, other: &ModuleMap) -> bool {
        let lo = self.source.lo().min(other.source.lo());
        let hi = self.source.hi().max(other.source.hi());
        (lo..=hi).all(|d| self.block(d) == other.block(d))
    }

    /// The first `(degree, i, basis index)` where `f Sq^i != Sq^i f`,
    /// checking every `i` up to `max_i`.
    pub fn a_linearity_witness(&self, max_i: u32) -> Option<(i32, u32, usize)> {
        let (s, t) = (&self.source, &self.target);
        for d in s.degrees() {
            let fd = &self.blocks[(d - s.lo()) as usize];
            for i in 1..=max_i {
                let e = d + i as i32;
                let out = t.dim(e);
                let fe = self.block_ref(e);
                for v in 0..s.dim(d) {
                    // f(Sq^i v)
                    let mut lhs = F2Vector::zeros(out);
                    if let (Some(fe), false) = (fe, out == 0) {
                        s.for_each_sq_one(i, d, v, &mut |k| {
                            xor_row(&mut lhs, fe, k);
                        });
                    }
                    // Sq^i f(v)
                    let mut rhs = F2Vector::zeros(out);
                    if out > 0 {
                        for w in fd.row_ones(v) {
                            t.for_each_sq_one(i, d, w, &mut |k| rhs.flip(k));
                        }
                    }
                    if lhs != rhs {
                        return Some((d, i, v));
                    }
                }
            }
        }
        None
    }

    /// Checks commutation with every `Sq^i` and records the certificate.
    pub fn verify_a_linear(&mut self) -> Result<()> {
        let max_i = self.source.span().max(self.target.span());
        self.verify_a_linear_up_to(max_i)
    }

    /// Checks commutation with `Sq^i` for `i <= max_i`. The certificate is
    /// recorded only when `max_i` covers the full degree span.
    pub fn verify_a_linear_up_to(&mut self, max_i: u32) -> Result<()> {
        if let Some((d, i, v)) = self.a_linearity_witness(max_i) {
            return Err(Error::contract(format!(
                "{} does not commute with Sq^{i} on {} in degree {d}",
                self.name,
                self.source.label(d, v)
            )));
        }
        let lo = self.source.lo().min(self.target.lo());
        let hi = self.source.hi().max(self.target.hi());
        self.a_linear = max_i as i64 >= (hi - lo) as i64;
        Ok(())
    }

    /// Marks the map linear without checking. Only for maps whose
    /// linearity follows from how they were built.
    pub(crate) fn assume_a_linear(mut self) -> Self {
        self.a_linear = true;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// `acc += row r of m`; rows and vectors share the packed layout.
pub(crate) fn xor_row(acc: &mut F2Vector, m: &F2Matrix, r: usize) {
    acc.xor_words(m.row_words(r));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::module::module_from_weight;

    #[test]
    fn identity_is_linear() {
        let j = Arc::new(module_from_weight(9).unwrap());
        let blocks = j.degrees().map(|d| F2Matrix::identity(j.dim(d))).collect();
        let mut id = ModuleMap::new("id", j.clone(), j.clone(), blocks).unwrap();
        id.verify_a_linear().unwrap();
        assert!(id.is_a_linear());
        assert!(id.is_injective() && id.is_surjective());
        let sq = id.then(&id).unwrap();
        assert!(sq.same_matrices(&id));
    }

    #[test]
    fn non_linear_map_detected() {
        let j = Arc::new(module_from_weight(4).unwrap());
        // x2 -> x2 only; x1^2 -> 0 breaks Sq^1 x2 = x1^2
        let blocks = j
            .degrees()
            .map(|d| {
                if d == 1 {
                    F2Matrix::identity(1)
                } else {
                    F2Matrix::zeros(j.dim(d), j.dim(d))
                }
            })
            .collect();
        let mut f = ModuleMap::new("f", j.clone(), j.clone(), blocks).unwrap();
        assert_eq!(f.a_linearity_witness(3), Some((1, 1, 0)));
        assert!(f.verify_a_linear().is_err());
        assert!(!f.is_a_linear());
    }

    #[test]
    fn shape_checked() {
        let j = Arc::new(module_from_weight(4).unwrap());
        assert!(ModuleMap::new("bad", j.clone(), j.clone(), vec![]).is_err());
    }
}
