use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bg::build_q_module;
use crate::error::{Error, Result};
use crate::graded::{a1_free_decomposition, A1Decomposition};

use super::criterion::{main_criterion, oracle_on, HomologyWitness};
use super::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanConfig {
    pub n_max: u64,
    pub m_max: u64,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    pub limits: Limits,
}

impl ScanConfig {
    pub fn new(n_max: u64, m_max: u64) -> Self {
        ScanConfig {
            n_max,
            m_max,
            jobs: None,
            limits: Limits::default(),
        }
    }

    /// Every `(n, m)` with `2 <= n <= n_max` and `n < m <= m_max`, in
    /// lexicographic order.
    pub fn pairs(&self) -> Vec<(u64, u64)> {
        (2..=self.n_max)
            .flat_map(|n| (n + 1..=self.m_max).map(move |m| (n, m)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A nonzero `Q_1`-homology class of `Q(n, m)`.
    Homology(HomologyWitness),
    /// Degrees of free `A(1)`-generators.
    A1Free { generators: Vec<i32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub n: u64,
    pub m: u64,
    pub dim: usize,
    pub predicted: bool,
    pub oracle: bool,
    pub witness: Option<Witness>,
    /// Whether `Q(n, m)` is `A(1)`-free; computed when either verdict is
    /// positive.
    pub a1_free: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MismatchKind {
    /// Criterion and oracle disagree.
    Criterion,
    /// `Q_1`-acyclic but not `A(1)`-free, or the reverse.
    A1Freeness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: u64,
    pub m: u64,
    pub kind: MismatchKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub pairs: usize,
    pub predicted_acyclic: usize,
    pub oracle_acyclic: usize,
    pub mismatches: usize,
    pub wall_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub n_max: u64,
    pub m_max: u64,
    pub records: Vec<ScanRecord>,
    pub mismatches: Vec<Mismatch>,
    pub summary: ScanSummary,
}

fn scan_pair(n: u64, m: u64) -> Result<ScanRecord> {
    let predicted = main_criterion(n, m)?.predicted_acyclic;
    let q = build_q_module(n, m)?;
    let oracle = oracle_on(&q)?;
    let mut witness = oracle.witness.map(Witness::Homology);
    let mut a1_free = None;
    if predicted || oracle.acyclic {
        let dec = a1_free_decomposition(&q.module);
        a1_free = Some(dec.is_free());
        if let A1Decomposition::Free { generators } = dec {
            witness = Some(Witness::A1Free { generators });
        }
    }
    Ok(ScanRecord {
        n,
        m,
        dim: q.module.total_dim(),
        predicted,
        oracle: oracle.acyclic,
        witness,
        a1_free,
    })
}

/// Compares the criterion with the oracle on every pair of the rectangle.
/// Pairs run in parallel; records come back in pair order.
pub fn scan_main_theorem(config: &ScanConfig) -> Result<ScanReport> {
    if config.n_max >= config.m_max {
        return Err(Error::Domain(format!(
            "scan needs n_max < m_max, got {} and {}",
            config.n_max, config.m_max
        )));
    }
    if config.m_max > config.limits.max_module_weight {
        return Err(Error::Resource(format!(
            "m_max {} exceeds the module limit {}",
            config.m_max, config.limits.max_module_weight
        )));
    }
    let start = Instant::now();
    let pairs = config.pairs();
    let run =
        || -> Result<Vec<ScanRecord>> { pairs.par_iter().map(|&(n, m)| scan_pair(n, m)).collect() };
    let records = match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::Resource(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let mut mismatches = Vec::new();
    for r in &records {
        if r.predicted != r.oracle {
            mismatches.push(Mismatch {
                n: r.n,
                m: r.m,
                kind: MismatchKind::Criterion,
            });
        }
        if r.a1_free.is_some_and(|free| free != r.oracle) {
            mismatches.push(Mismatch {
                n: r.n,
                m: r.m,
                kind: MismatchKind::A1Freeness,
            });
        }
    }
    let summary = ScanSummary {
        pairs: records.len(),
        predicted_acyclic: records.iter().filter(|r| r.predicted).count(),
        oracle_acyclic: records.iter().filter(|r| r.oracle).count(),
        mismatches: mismatches.len(),
        wall_ms: start.elapsed().as_millis(),
    };
    Ok(ScanReport {
        n_max: config.n_max,
        m_max: config.m_max,
        records,
        mismatches,
        summary,
    })
}

impl ScanReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn record(&self, n: u64, m: u64) -> Option<&ScanRecord> {
        self.records.iter().find(|r| r.n == n && r.m == m)
    }

    /// One line per pair, then the summary. Wall time is left out unless
    /// asked for, so identical scans print identical text.
    pub fn to_text(&self, with_timing: bool) -> String {
        let mut s = String::new();
        writeln!(s, "# n m predicted oracle dim witness").unwrap();
        for r in &self.records {
            let witness = match &r.witness {
                None => "-".to_string(),
                Some(Witness::Homology(h)) => format!("H{}:{}", h.degree, h.class.join("+")),
                Some(Witness::A1Free { generators }) => format!(
                    "A1[{}]",
                    generators
                        .iter()
                        .map(i32::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                ),
            };
            writeln!(
                s,
                "{} {} {} {} {} {witness}",
                r.n, r.m, r.predicted, r.oracle, r.dim
            )
            .unwrap();
        }
        for x in &self.mismatches {
            writeln!(s, "mismatch {} {} {:?}", x.n, x.m, x.kind).unwrap();
        }
        let t = &self.summary;
        write!(
            s,
            "pairs {}; predicted acyclic {}; oracle acyclic {}; {} mismatches",
            t.pairs, t.predicted_acyclic, t.oracle_acyclic, t.mismatches
        )
        .unwrap();
        if with_timing {
            write!(s, "; {} ms", t.wall_ms).unwrap();
        }
        s.push('\n');
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rectangle() {
        let mut config = ScanConfig::new(4, 12);
        config.jobs = Some(2);
        let report = scan_main_theorem(&config).unwrap();
        assert_eq!(report.records.len(), config.pairs().len());
        assert!(report.is_clean(), "{}", report.to_text(false));
        let r = report.record(4, 12).unwrap();
        assert_eq!(
            r.witness,
            Some(Witness::A1Free {
                generators: vec![0, 2, 6]
            })
        );
        assert!(report.to_text(false).ends_with("0 mismatches\n"));
    }

    #[test]
    fn bad_rectangles() {
        assert!(scan_main_theorem(&ScanConfig::new(10, 10)).is_err());
        assert!(scan_main_theorem(&ScanConfig::new(10, 100)).is_err());
    }
}
