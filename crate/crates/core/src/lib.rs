//! Dual Brown-Gitler modules, their Margolis homology, and the extension
//! modules `Q(n, m)` built from them.

pub mod bg;
pub mod error;
pub mod f2core;
pub mod graded;
pub mod polyalg;
pub mod theorems;

pub use error::{Error, Result};
