use std::sync::Arc;

use crate::error::{Error, Result};
use crate::f2core::F2Vector;

use super::module::{FiniteGradedModule, RowAction};

/// Index bookkeeping for `A (x) B`: in each total degree the basis is
/// ordered by degree of the `A` factor, then `A` index, then `B` index.
struct TensorLayout {
    lo: i32,
    a_lo: i32,
    b_lo: i32,
    /// `offsets[d - lo][e - a_lo]`: first index of the block `A^e (x) B^{d-e}`.
    offsets: Vec<Vec<usize>>,
}

impl TensorLayout {
    fn offset(&self, d: i32, e: i32) -> usize {
        self.offsets[(d - self.lo) as usize][(e - self.a_lo) as usize]
    }
}

struct TensorAction {
    a: Arc<FiniteGradedModule>,
    b: Arc<FiniteGradedModule>,
    layout: TensorLayout,
    hi: i32,
}

impl TensorAction {
    /// Splits a degree-`d` index into `(e, a_idx, b_idx)`.
    fn decode(&self, d: i32, idx: usize) -> (i32, usize, usize) {
        let row = &self.layout.offsets[(d - self.layout.lo) as usize];
        let k = row.partition_point(|&o| o <= idx) - 1;
        let e = self.layout.a_lo + k as i32;
        let local = idx - row[k];
        let bd = self.b.dim(d - e);
        (e, local / bd, local % bd)
    }
}

impl RowAction for TensorAction {
    fn sq_row(&self, i: u32, d: i32, idx: usize) -> F2Vector {
        let target = d + i as i32;
        let len = self.layout.offsets[(target - self.layout.lo) as usize]
            .last()
            .copied()
            .unwrap_or(0);
        let mut out = F2Vector::zeros(len);
        let (e, ia, ib) = self.decode(d, idx);
        let f = d - e;
        let mut a_ones = Vec::new();
        for j in 0..=i {
            let ea = e + j as i32;
            let fb = f + (i - j) as i32;
            let bd = self.b.dim(fb);
            if self.a.dim(ea) == 0 || bd == 0 {
                continue;
            }
            a_ones.clear();
            self.a.for_each_sq_one(j, e, ia, &mut |x| a_ones.push(x));
            if a_ones.is_empty() {
                continue;
            }
            let base = self.layout.offset(target, ea);
            self.b.for_each_sq_one(i - j, f, ib, &mut |y| {
                for &x in &a_ones {
                    out.flip(base + x * bd + y);
                }
            });
        }
        debug_assert!(target <= self.hi);
        out
    }
}

/// `A (x) B` with the Cartan action, restricted to total degrees that are
/// exact given the windows of the factors. The action is computed on
/// demand.
pub fn tensor(
    a: Arc<FiniteGradedModule>,
    b: Arc<FiniteGradedModule>,
) -> Result<FiniteGradedModule> {
    tensor_up_to(a, b, None)
}

/// As [`tensor`], additionally truncated at total degree `top`.
pub fn tensor_up_to(
    a: Arc<FiniteGradedModule>,
    b: Arc<FiniteGradedModule>,
    top: Option<i32>,
) -> Result<FiniteGradedModule> {
    let name = format!("{}(x){}", a.name(), b.name());
    if a.total_dim() == 0 || b.total_dim() == 0 {
        return Ok(FiniteGradedModule::zero(name));
    }
    let lo = a.lo() + b.lo();
    // Total degree d is exact only if every factor degree it uses is exact.
    let mut exact = a.hi() + b.hi();
    if let Some(w) = a.window_top() {
        exact = exact.min(w + b.lo());
    }
    if let Some(w) = b.window_top() {
        exact = exact.min(w + a.lo());
    }
    let mut window_top = (a.window_top().is_some() || b.window_top().is_some()).then_some(exact);
    let mut hi = exact;
    if let Some(t) = top {
        if t < lo - 1 {
            return Err(Error::contract(format!(
                "tensor window {t} below bottom degree {lo}"
            )));
        }
        if t < hi {
            hi = t;
            window_top = Some(t);
        }
    }
    let mut offsets = Vec::new();
    let mut labels = Vec::new();
    for d in lo..=hi {
        let mut row = Vec::with_capacity((a.hi() - a.lo() + 2) as usize);
        let mut ls = Vec::new();
        let mut acc = 0;
        for e in a.lo()..=a.hi() {
            row.push(acc);
            let (da, db) = (a.dim(e), b.dim(d - e));
            for x in 0..da {
                for y in 0..db {
                    ls.push(format!("{}|{}", a.label(e, x), b.label(d - e, y)));
                }
            }
            acc += da * db;
        }
        row.push(acc);
        offsets.push(row);
        labels.push(ls);
    }
    let action = TensorAction {
        layout: TensorLayout {
            lo,
            a_lo: a.lo(),
            b_lo: b.lo(),
            offsets,
        },
        a,
        b,
        hi,
    };
    debug_assert_eq!(action.layout.b_lo + action.layout.a_lo, lo);
    FiniteGradedModule::from_rows(name, lo, labels, Arc::new(action), window_top)
}
