use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2core::{EchelonBasis, F2Matrix, F2Vector};

use super::map::ModuleMap;
use super::module::FiniteGradedModule;

/// Degree of the Milnor primitive `Q_m`.
pub fn qm_degree(m: u32) -> i32 {
    (1 << (m + 1)) - 1
}

/// `Q_m` out of degree `d`, built from the stored squares by
/// `Q_0 = Sq^1`, `Q_m = Q_{m-1} Sq^{2^m} + Sq^{2^m} Q_{m-1}`.
pub fn qm_block(module: &FiniteGradedModule, m: u32, d: i32) -> F2Matrix {
    if m == 0 {
        return module.sq_matrix(1, d).into_owned();
    }
    let s = 1i32 << m;
    let prev = qm_degree(m - 1);
    // row convention: "first a, then b" is a.mul(b)
    let sq_then_q = module
        .sq_matrix(s as u32, d)
        .mul(&qm_block(module, m - 1, d + s));
    let q_then_sq = qm_block(module, m - 1, d).mul(&module.sq_matrix(s as u32, d + prev));
    sq_then_q.add(&q_then_sq)
}

/// `Q_m` blocks for every degree of the module, indexed from `lo`.
pub fn qm_blocks(module: &FiniteGradedModule, m: u32) -> Vec<F2Matrix> {
    module.degrees().map(|d| qm_block(module, m, d)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MargolisDegree {
    pub degree: i32,
    pub kernel: usize,
    pub image: usize,
    pub homology: usize,
    /// Cycles whose classes form a basis of the homology in this degree.
    #[serde(serialize_with = "ser_vectors")]
    pub representatives: Vec<F2Vector>,
    /// True when the kernel here depends on degrees beyond a truncation
    /// window, so the entry does not count towards acyclicity.
    pub excluded: bool,
}

fn ser_vectors<S: serde::Serializer>(v: &[F2Vector], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(F2Vector::to_bitstring))
}

/// `Q_m`-homology of a module, degree by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MargolisReport {
    pub module: String,
    pub m: u32,
    /// Whether the module is exact in every degree (not a truncation).
    pub complete: bool,
    pub degrees: Vec<MargolisDegree>,
}

impl MargolisReport {
    /// Total homology dimension over the degrees that count.
    pub fn total(&self) -> usize {
        self.counted().map(|d| d.homology).sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.total() == 0
    }

    fn counted(&self) -> impl Iterator<Item = &MargolisDegree> {
        self.degrees.iter().filter(|d| !d.excluded)
    }

    /// `(degree, homology dimension)` for counted degrees with nonzero
    /// homology.
    pub fn profile(&self) -> Vec<(i32, usize)> {
        self.counted()
            .filter(|d| d.homology > 0)
            .map(|d| (d.degree, d.homology))
            .collect()
    }

    pub fn homology_in(&self, d: i32) -> usize {
        self.degrees
            .iter()
            .find(|x| x.degree == d)
            .map_or(0, |x| x.homology)
    }

    /// The first nonzero class, as `(degree, representative)`.
    pub fn witness(&self) -> Option<(i32, &F2Vector)> {
        self.counted()
            .find(|d| d.homology > 0)
            .map(|d| (d.degree, &d.representatives[0]))
    }

    pub fn excluded_degrees(&self) -> Vec<i32> {
        self.degrees
            .iter()
            .filter(|d| d.excluded)
            .map(|d| d.degree)
            .collect()
    }
}

/// `Q_m`-homology from the module's own squares.
pub fn margolis(module: &FiniteGradedModule, m: u32) -> Result<MargolisReport> {
    let blocks = qm_blocks(module, m);
    margolis_with(module, m, &blocks)
}

/// `Q_m`-homology from supplied `Q_m` blocks (`blocks[d - lo]`, shape
/// `dim(d) x dim(d + 2^{m+1} - 1)`). Rejects blocks with `Q_m^2 != 0`.
pub fn margolis_with(
    module: &FiniteGradedModule,
    m: u32,
    blocks: &[F2Matrix],
) -> Result<MargolisReport> {
    let s = qm_degree(m);
    let lo = module.lo();
    let block = |d: i32| -> Option<&F2Matrix> {
        (d >= lo && d <= module.hi()).then(|| &blocks[(d - lo) as usize])
    };
    if blocks.len() != module.dims().len() {
        return Err(Error::contract(format!(
            "{} Q_{m} blocks supplied for {} degrees",
            blocks.len(),
            module.dims().len()
        )));
    }
    for d in module.degrees() {
        let q = block(d).unwrap();
        if q.shape() != (module.dim(d), module.dim(d + s)) {
            return Err(Error::contract(format!(
                "Q_{m} block in degree {d} has shape {:?}",
                q.shape()
            )));
        }
        if let Some(next) = block(d + s) {
            if !q.mul(next).is_zero() {
                return Err(Error::contract(format!(
                    "Q_{m} squares to a nonzero map out of degree {d} of {}",
                    module.name()
                )));
            }
        }
    }
    let mut degrees = Vec::new();
    for d in module.degrees() {
        let q = block(d).unwrap();
        let cycles = q.transpose().kernel();
        let mut span = EchelonBasis::new(module.dim(d));
        let mut image = 0;
        if let Some(prev) = block(d - s) {
            for r in 0..prev.rows() {
                if span.insert(&prev.row(r)) {
                    image += 1;
                }
            }
        }
        let representatives: Vec<F2Vector> =
            cycles.iter().filter(|z| span.insert(z)).cloned().collect();
        let excluded = module.window_top().is_some_and(|w| d + s > w);
        degrees.push(MargolisDegree {
            degree: d,
            kernel: cycles.len(),
            image,
            homology: representatives.len(),
            representatives,
            excluded,
        });
    }
    Ok(MargolisReport {
        module: module.name().to_string(),
        m,
        complete: module.is_complete(),
        degrees,
    })
}

/// Per-degree data of the map a module map induces on `Q_m`-homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedDegree {
    pub degree: i32,
    pub source: usize,
    pub target: usize,
    pub rank: usize,
}

/// The map induced on `Q_m`-homology, degree by degree.
pub fn induced_on_homology(f: &ModuleMap, m: u32) -> Result<Vec<InducedDegree>> {
    let (src, tgt) = (f.source(), f.target());
    let hs = margolis(src, m)?;
    let s = qm_degree(m);
    let lo = src.lo().min(tgt.lo());
    let hi = src.hi().max(tgt.hi());
    let mut out = Vec::new();
    for d in lo..=hi {
        let boundaries = boundary_basis(tgt, m, d, s);
        let target_h = homology_dim(tgt, m, d, s);
        let mut span = boundaries.clone();
        let mut rank = 0;
        let reps: &[F2Vector] = hs
            .degrees
            .iter()
            .find(|x| x.degree == d)
            .map_or(&[], |x| &x.representatives);
        for z in reps {
            if span.insert(&f.apply(d, z)) {
                rank += 1;
            }
        }
        out.push(InducedDegree {
            degree: d,
            source: reps.len(),
            target: target_h,
            rank,
        });
    }
    Ok(out)
}

/// Whether `f` induces an isomorphism on `Q_m`-homology. Both modules
/// must be complete.
pub fn is_homology_iso(f: &ModuleMap, m: u32) -> Result<bool> {
    if !f.source().is_complete() || !f.target().is_complete() {
        return Err(Error::contract(
            "homology isomorphism test needs complete modules",
        ));
    }
    Ok(induced_on_homology(f, m)?
        .iter()
        .all(|x| x.source == x.target && x.rank == x.source))
}

/// Whether the cycle `z` of degree `d` maps to a boundary.
pub fn class_maps_to_zero(f: &ModuleMap, m: u32, d: i32, z: &F2Vector) -> bool {
    let image = f.apply(d, z);
    boundary_basis(f.target(), m, d, qm_degree(m)).contains(&image)
}

fn boundary_basis(module: &FiniteGradedModule, m: u32, d: i32, s: i32) -> EchelonBasis {
    let mut span = EchelonBasis::new(module.dim(d));
    if module.dim(d - s) > 0 && module.dim(d) > 0 {
        let prev = qm_block(module, m, d - s);
        for r in 0..prev.rows() {
            span.insert(&prev.row(r));
        }
    }
    span
}

fn homology_dim(module: &FiniteGradedModule, m: u32, d: i32, s: i32) -> usize {
    if module.dim(d) == 0 {
        return 0;
    }
    let kernel = module.dim(d) - qm_block(module, m, d).rank();
    kernel - boundary_basis(module, m, d, s).rank()
}

/// Whether `z` (degree `d`) is a `Q_m`-cycle.
pub fn is_cycle(module: &FiniteGradedModule, m: u32, d: i32, z: &F2Vector) -> bool {
    qm_block(module, m, d).left_mul(z).is_zero()
}

/// Whether `z` is a `Q_m`-boundary.
pub fn is_boundary(module: &FiniteGradedModule, m: u32, d: i32, z: &F2Vector) -> bool {
    boundary_basis(module, m, d, qm_degree(m)).contains(z)
}
