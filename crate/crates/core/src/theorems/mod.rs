//! The acyclicity criterion for `Q(n, m)`, its homological oracle, and the
//! combinatorics behind it.

mod combinatorics;
mod criterion;
mod scan;
mod tables;

use serde::{Deserialize, Serialize};

use crate::bg::p_map;
use crate::error::{Error, Result};
use crate::graded::is_homology_iso;

pub use combinatorics::{
    good_pair, magic_lemma_check, magic_lemma_check_with, mixed_parity_vanishing,
    mixed_parity_vanishing_with, q1_profiles_agree, s_jk, s_jk_with, MagicMismatch, MagicReading,
    MixedMismatch, PermutationCount,
};
pub use criterion::{
    acyclicity_oracle, main_criterion, minimal_m, oracle_on, CriterionVerdict, HomologyWitness,
    OracleVerdict, ParityCase,
};
pub use scan::{
    scan_main_theorem, Mismatch, MismatchKind, ScanConfig, ScanRecord, ScanReport, ScanSummary,
    Witness,
};
pub use tables::{k_tables, k_tables_with, KTable};

/// Resource guards for the enumerations and module scans.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest `d` for enumerating `S_d`.
    pub max_permutation_size: usize,
    /// Largest weight of a module built by a scan or table.
    pub max_module_weight: u64,
    pub max_magic_bound: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_permutation_size: 8,
            max_module_weight: 64,
            max_magic_bound: 4096,
        }
    }
}

/// For `m >= 2n` with `m = l + 2^k`, `l < 2^k`: whether `p(n, l)` is a
/// `Q_1`-isomorphism.
pub fn p_reduction(n: u64, m: u64) -> Result<bool> {
    if m < 2 * n || n == 0 {
        return Err(Error::Domain(format!(
            "reduction needs 1 <= n and m >= 2n, got ({n}, {m})"
        )));
    }
    let k = 63 - m.leading_zeros();
    let l = m - (1 << k);
    is_homology_iso(&p_map(n, l)?, 1)
}
