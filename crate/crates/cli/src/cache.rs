//! Optional on-disk cache of built modules, enabled by `BGQ_CACHE_DIR`.

use std::path::PathBuf;
use std::sync::Arc;

use bgq_core::bg::build_q_module;
use bgq_core::graded::{dump_json, parse_dump, FiniteGradedModule};

use crate::CliError;

pub const ENV: &str = "BGQ_CACHE_DIR";

fn entry(n: u64, m: u64) -> Option<PathBuf> {
    let dir = std::env::var_os(ENV)?;
    Some(PathBuf::from(dir).join(format!("q-{n}-{m}-v{}.json", env!("CARGO_PKG_VERSION"))))
}

/// `Q(n, m)`, read from the cache when present and written to it otherwise.
/// Unreadable entries are rebuilt.
pub fn q_module(n: u64, m: u64) -> Result<Arc<FiniteGradedModule>, CliError> {
    let path = entry(n, m);
    if let Some(text) = path.as_ref().and_then(|p| std::fs::read_to_string(p).ok()) {
        if let Ok(module) = parse_dump(&text) {
            return Ok(Arc::new(module));
        }
    }
    let module = build_q_module(n, m)?.module;
    if let Some(p) = path {
        if let Some(dir) = p.parent() {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(p, dump_json(&module))?;
    }
    Ok(module)
}
