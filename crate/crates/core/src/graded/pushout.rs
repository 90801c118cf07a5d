use std::sync::Arc;

use crate::error::{Error, Result};
use crate::f2core::{F2Matrix, F2Vector};

use super::map::ModuleMap;
use super::module::FiniteGradedModule;

/// Which summand of `P (+) N` a pushout basis element comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    P,
    N,
}

/// `Q = (P (+) N) / {(f(x), g(x))}` with its structure maps.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub module: Arc<FiniteGradedModule>,
    pub from_p: ModuleMap,
    pub from_n: ModuleMap,
    /// For each degree of `Q`, the summand and index each basis element
    /// lifts to.
    pub origins: Vec<Vec<(Side, usize)>>,
}

/// Relations in one degree, in reduced echelon form over the columns
/// `[N | P]`.
struct DegreeRelations {
    n_dim: usize,
    p_dim: usize,
    rows: F2Matrix,
    pivots: Vec<usize>,
    /// Column -> index in `Q`, for non-pivot columns.
    q_index: Vec<Option<usize>>,
    q_dim: usize,
}

impl DegreeRelations {
    fn reduce(&self, w: &mut F2Vector) {
        for (r, &p) in self.pivots.iter().enumerate() {
            if w.get(p) {
                w.xor_words(self.rows.row_words(r));
            }
        }
    }

    fn to_q(&self, mut w: F2Vector) -> F2Vector {
        self.reduce(&mut w);
        let mut out = F2Vector::zeros(self.q_dim);
        for c in w.ones() {
            let q = self.q_index[c].expect("reduced vectors have no pivot entries");
            out.flip(q);
        }
        out
    }
}

struct Relations {
    lo: i32,
    per_degree: Vec<DegreeRelations>,
}

impl Relations {
    fn at(&self, d: i32) -> Option<&DegreeRelations> {
        usize::try_from(d - self.lo)
            .ok()
            .and_then(|k| self.per_degree.get(k))
    }
}

/// The pushout of `f: M -> P` and `g: M -> N`, with `g` injective.
///
/// In each degree the relation rows `(g(x), f(x))` are brought to reduced
/// echelon form with the `N` columns first; the non-pivot columns give the
/// basis of `Q`, listed with the `P` columns first. `Sq^i` on `Q` lifts a
/// basis element to `P (+) N`, acts there, and reduces. Unless both maps
/// carry a linearity certificate, the relations are checked to be closed
/// under every `Sq^i`.
pub fn pushout(name: impl Into<String>, f: &ModuleMap, g: &ModuleMap) -> Result<Pushout> {
    let name = name.into();
    let (m, p, n) = (f.source(), f.target().clone(), g.target().clone());
    if !Arc::ptr_eq(m, g.source()) && !m.same_as(g.source()) {
        return Err(Error::contract("pushout maps must share their source"));
    }
    if !g.is_injective() {
        return Err(Error::contract(format!("{} is not injective", g.name())));
    }
    let windows = [m.window_top(), p.window_top(), n.window_top()];
    let window_top = windows.into_iter().flatten().min();
    let lo = p.lo().min(n.lo());
    let mut hi = p.hi().max(n.hi());
    if let Some(w) = window_top {
        hi = hi.min(w);
    }

    let mut per_degree = Vec::new();
    let mut origins = Vec::new();
    let mut labels = Vec::new();
    for d in lo..=hi {
        let (n_dim, p_dim) = (n.dim(d), p.dim(d));
        let width = n_dim + p_dim;
        let rel_rows: Vec<F2Vector> = (0..m.dim(d)).map(|x| relation_row(f, g, d, x)).collect();
        let (rows, pivots) = F2Matrix::from_rows(width, &rel_rows).rref();
        let mut is_pivot = vec![false; width];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut q_index = vec![None; width];
        let mut origin = Vec::new();
        let mut ls = Vec::new();
        let order = (n_dim..width).chain(0..n_dim);
        for c in order.filter(|&c| !is_pivot[c]) {
            q_index[c] = Some(origin.len());
            if c >= n_dim {
                origin.push((Side::P, c - n_dim));
                ls.push(p.label(d, c - n_dim).to_string());
            } else {
                origin.push((Side::N, c));
                ls.push(n.label(d, c).to_string());
            }
        }
        per_degree.push(DegreeRelations {
            n_dim,
            p_dim,
            rows,
            pivots,
            q_index,
            q_dim: origin.len(),
        });
        origins.push(origin);
        labels.push(ls);
    }
    let rel = Relations { lo, per_degree };

    if !(f.is_a_linear() && g.is_a_linear()) {
        check_relations_closed(f, g, &rel, hi)?;
    }

    // Sq^i on Q, all i.
    let mut blocks = Vec::new();
    for d in lo..=hi {
        let src = rel.at(d).unwrap();
        let mut per_i = Vec::new();
        for i in 1..=(hi - d) as u32 {
            let e = d + i as i32;
            let tgt = rel.at(e).unwrap();
            let mut mat = F2Matrix::zeros(src.q_dim, tgt.q_dim);
            if tgt.q_dim > 0 {
                for (q, &(side, idx)) in origins[(d - lo) as usize].iter().enumerate() {
                    let mut w = F2Vector::zeros(tgt.n_dim + tgt.p_dim);
                    match side {
                        Side::P => p.for_each_sq_one(i, d, idx, &mut |k| w.flip(tgt.n_dim + k)),
                        Side::N => n.for_each_sq_one(i, d, idx, &mut |k| w.flip(k)),
                    }
                    mat.set_row(q, &tgt.to_q(w));
                }
            }
            per_i.push(mat);
        }
        blocks.push(per_i);
    }
    let module = Arc::new(FiniteGradedModule::from_dense(
        name.clone(),
        lo,
        labels,
        blocks,
        window_top,
    )?);

    let structure = |side: Side, from: &Arc<FiniteGradedModule>| -> Result<ModuleMap> {
        ModuleMap::from_fn(
            format!("{} -> {name}", from.name()),
            from.clone(),
            module.clone(),
            |d| {
                let mut b = F2Matrix::zeros(from.dim(d), module.dim(d));
                if let Some(r) = rel.at(d).filter(|_| d <= hi) {
                    for x in 0..from.dim(d) {
                        let c = match side {
                            Side::P => r.n_dim + x,
                            Side::N => x,
                        };
                        b.set_row(x, &r.to_q(F2Vector::unit(r.n_dim + r.p_dim, c)));
                    }
                }
                Ok(b)
            },
        )
        .map(ModuleMap::assume_a_linear)
    };
    let from_p = structure(Side::P, &p)?;
    let from_n = structure(Side::N, &n)?;
    Ok(Pushout {
        module,
        from_p,
        from_n,
        origins,
    })
}

fn relation_row(f: &ModuleMap, g: &ModuleMap, d: i32, x: usize) -> F2Vector {
    let n_dim = g.target().dim(d);
    let p_dim = f.target().dim(d);
    let mut w = F2Vector::zeros(n_dim + p_dim);
    for k in g.image_of(d, x).ones() {
        w.flip(k);
    }
    for k in f.image_of(d, x).ones() {
        w.flip(n_dim + k);
    }
    w
}

/// Every `Sq^i` of every relation must reduce to zero.
fn check_relations_closed(f: &ModuleMap, g: &ModuleMap, rel: &Relations, hi: i32) -> Result<()> {
    let (m, p, n) = (f.source(), f.target(), g.target());
    for d in m.degrees().filter(|&d| d <= hi) {
        for x in 0..m.dim(d) {
            let gx = g.image_of(d, x);
            let fx = f.image_of(d, x);
            for i in 1..=(hi - d) as u32 {
                let e = d + i as i32;
                let Some(tgt) = rel.at(e) else { continue };
                let mut w = F2Vector::zeros(tgt.n_dim + tgt.p_dim);
                for k in gx.ones() {
                    n.for_each_sq_one(i, d, k, &mut |c| w.flip(c));
                }
                for k in fx.ones() {
                    p.for_each_sq_one(i, d, k, &mut |c| w.flip(tgt.n_dim + c));
                }
                tgt.reduce(&mut w);
                if !w.is_zero() {
                    return Err(Error::contract(format!(
                        "pushout action is not well defined: Sq^{i} of the relation from {} in degree {d}",
                        m.label(d, x)
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::module::module_from_weight;

    fn identity(m: &Arc<FiniteGradedModule>) -> ModuleMap {
        let blocks = m.degrees().map(|d| F2Matrix::identity(m.dim(d))).collect();
        ModuleMap::new("id", m.clone(), m.clone(), blocks).unwrap()
    }

    #[test]
    fn along_an_isomorphism() {
        let m = Arc::new(module_from_weight(10).unwrap());
        let p = Arc::new(module_from_weight(5).unwrap());
        let phi = F2Vector::from_indices(m.dim(5), 0..m.dim(5));
        let f = crate::graded::hom::hom_solver(m.clone(), p.clone(), &phi).unwrap();
        let g = identity(&m);
        let q = pushout("Q", &f, &g).unwrap();
        assert!(q.module.poincare().same_dims(&p.poincare()));
        assert!(q.from_p.is_injective() && q.from_p.is_surjective());
    }

    #[test]
    fn zero_map_gives_direct_sum() {
        let m = Arc::new(module_from_weight(6).unwrap());
        let p = Arc::new(module_from_weight(3).unwrap());
        let f = ModuleMap::zero("0", m.clone(), p.clone());
        let g = identity(&m);
        let q = pushout("Q", &f, &g).unwrap();
        // P (+) N/M with N = M
        assert!(q.module.poincare().same_dims(&p.poincare()));
    }

    #[test]
    fn non_linear_input_rejected() {
        let m = Arc::new(module_from_weight(4).unwrap());
        let p = Arc::new(module_from_weight(4).unwrap());
        // keeps x2 but kills x1^2: not A-linear
        let blocks = m
            .degrees()
            .map(|d| {
                if d == 1 {
                    F2Matrix::identity(1)
                } else {
                    F2Matrix::zeros(m.dim(d), p.dim(d))
                }
            })
            .collect();
        let f = ModuleMap::new("bad", m.clone(), p.clone(), blocks).unwrap();
        let g = identity(&m);
        assert!(matches!(pushout("Q", &f, &g), Err(Error::Contract(_))));
    }
}
