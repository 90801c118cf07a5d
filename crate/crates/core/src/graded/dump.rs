//! Text, JSON and DOT renderings of finite modules.
//!
//! The text dump is line oriented:
//!
//! ```text
//! module J(4)
//! range 1 4
//! window complete
//! basis 1 x2
//! ...
//! sq 1 1 1
//! end
//! ```
//!
//! `sq i d rows...` lists the rows of `Sq^i` out of degree `d` as
//! bitstrings; all-zero blocks are omitted. The JSON form carries the same
//! fields.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2core::F2Matrix;

use super::module::FiniteGradedModule;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDump {
    pub name: String,
    pub lo: i32,
    pub hi: i32,
    /// `None` for a complete module, else the truncation degree.
    pub window: Option<i32>,
    pub basis: Vec<Vec<String>>,
    pub squares: Vec<SquareBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareBlock {
    pub i: u32,
    pub degree: i32,
    pub rows: Vec<String>,
}

impl ModuleDump {
    pub fn of(module: &FiniteGradedModule) -> Self {
        let mut squares = Vec::new();
        for d in module.degrees() {
            for i in 1..=(module.hi() - d) as u32 {
                if module.dim(d) == 0 || module.dim(d + i as i32) == 0 {
                    continue;
                }
                let m = module.sq_matrix(i, d);
                if !m.is_zero() {
                    squares.push(SquareBlock {
                        i,
                        degree: d,
                        rows: m.to_bitstrings(),
                    });
                }
            }
        }
        ModuleDump {
            name: module.name().to_string(),
            lo: module.lo(),
            hi: module.hi(),
            window: module.window_top(),
            basis: module
                .degrees()
                .map(|d| module.labels_in(d).to_vec())
                .collect(),
            squares,
        }
    }

    pub fn to_module(&self) -> Result<FiniteGradedModule> {
        let degs = (self.hi - self.lo + 1).max(0) as usize;
        if self.basis.len() != degs {
            return Err(Error::Parse(format!(
                "range {}..{} needs {degs} basis lines, found {}",
                self.lo,
                self.hi,
                self.basis.len()
            )));
        }
        let dim = |d: i32| -> usize {
            usize::try_from(d - self.lo)
                .ok()
                .and_then(|k| self.basis.get(k))
                .map_or(0, Vec::len)
        };
        let mut blocks: Vec<Vec<F2Matrix>> = (self.lo..=self.hi)
            .map(|d| {
                (1..=(self.hi - d))
                    .map(|i| F2Matrix::zeros(dim(d), dim(d + i)))
                    .collect()
            })
            .collect();
        for b in &self.squares {
            let (d, e) = (b.degree, b.degree + b.i as i32);
            if b.i == 0 || d < self.lo || e > self.hi {
                return Err(Error::Parse(format!(
                    "Sq^{} out of degree {d} is out of range",
                    b.i
                )));
            }
            if b.rows.len() != dim(d) {
                return Err(Error::Parse(format!(
                    "Sq^{} out of degree {d}: {} rows, expected {}",
                    b.i,
                    b.rows.len(),
                    dim(d)
                )));
            }
            let rows: Vec<&str> = b.rows.iter().map(String::as_str).collect();
            let m = F2Matrix::from_bitstrings(dim(e), &rows).ok_or_else(|| {
                Error::Parse(format!("bad bitstring in Sq^{} out of degree {d}", b.i))
            })?;
            blocks[(d - self.lo) as usize][b.i as usize - 1] = m;
        }
        FiniteGradedModule::from_dense(
            self.name.clone(),
            self.lo,
            self.basis.clone(),
            blocks,
            self.window,
        )
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "module {}", self.name).unwrap();
        writeln!(s, "range {} {}", self.lo, self.hi).unwrap();
        match self.window {
            None => writeln!(s, "window complete").unwrap(),
            Some(w) => writeln!(s, "window {w}").unwrap(),
        }
        for (k, ls) in self.basis.iter().enumerate() {
            write!(s, "basis {}", self.lo + k as i32).unwrap();
            for l in ls {
                debug_assert!(!l.contains(char::is_whitespace));
                write!(s, " {l}").unwrap();
            }
            s.push('\n');
        }
        for b in &self.squares {
            write!(s, "sq {} {}", b.i, b.degree).unwrap();
            for r in &b.rows {
                write!(s, " {r}").unwrap();
            }
            s.push('\n');
        }
        s.push_str("end\n");
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let bad = |line: &str| Error::Parse(format!("unexpected dump line `{line}`"));
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let name = lines
            .next()
            .and_then(|l| l.strip_prefix("module "))
            .ok_or_else(|| Error::Parse("dump must start with `module <name>`".into()))?
            .to_string();
        let range = lines
            .next()
            .ok_or_else(|| Error::Parse("missing range".into()))?;
        let (lo, hi) = match range.split_whitespace().collect::<Vec<_>>()[..] {
            ["range", lo, hi] => (
                lo.parse().map_err(|_| bad(range))?,
                hi.parse().map_err(|_| bad(range))?,
            ),
            _ => return Err(bad(range)),
        };
        let wline = lines
            .next()
            .ok_or_else(|| Error::Parse("missing window".into()))?;
        let window = match wline.split_whitespace().collect::<Vec<_>>()[..] {
            ["window", "complete"] => None,
            ["window", w] => Some(w.parse().map_err(|_| bad(wline))?),
            _ => return Err(bad(wline)),
        };
        let mut basis = Vec::new();
        let mut squares = Vec::new();
        let mut ended = false;
        for line in lines {
            let mut parts = line.split_whitespace();
            match parts.next() {
                Some("basis") => {
                    let d: i32 = parts
                        .next()
                        .and_then(|x| x.parse().ok())
                        .ok_or_else(|| bad(line))?;
                    if d != lo + basis.len() as i32 {
                        return Err(bad(line));
                    }
                    basis.push(parts.map(str::to_string).collect());
                }
                Some("sq") => {
                    let i = parts
                        .next()
                        .and_then(|x| x.parse().ok())
                        .ok_or_else(|| bad(line))?;
                    let degree = parts
                        .next()
                        .and_then(|x| x.parse().ok())
                        .ok_or_else(|| bad(line))?;
                    squares.push(SquareBlock {
                        i,
                        degree,
                        rows: parts.map(str::to_string).collect(),
                    });
                }
                Some("end") => {
                    ended = true;
                    break;
                }
                _ => return Err(bad(line)),
            }
        }
        if !ended {
            return Err(Error::Parse("dump is missing its `end` line".into()));
        }
        Ok(ModuleDump {
            name,
            lo,
            hi,
            window,
            basis,
            squares,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dump serializes")
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn dump_text(module: &FiniteGradedModule) -> String {
    ModuleDump::of(module).to_text()
}

pub fn dump_json(module: &FiniteGradedModule) -> String {
    ModuleDump::of(module).to_json()
}

pub fn parse_dump(text: &str) -> Result<FiniteGradedModule> {
    let dump = if text.trim_start().starts_with('{') {
        ModuleDump::parse_json(text)?
    } else {
        ModuleDump::parse_text(text)?
    };
    dump.to_module()
}

/// Squares drawn in diagrams.
pub const DIAGRAM_SQUARES: [u32; 4] = [1, 2, 4, 8];

/// One edge `Sq^i: from -> to` between basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramEdge {
    pub i: u32,
    pub from: (i32, usize),
    pub to: (i32, usize),
}

/// Edges of `Sq^1, Sq^2, Sq^4, Sq^8` between basis elements, in basis
/// order.
pub fn diagram_edges(module: &FiniteGradedModule) -> Vec<DiagramEdge> {
    let mut out = Vec::new();
    for d in module.degrees() {
        for idx in 0..module.dim(d) {
            for i in DIAGRAM_SQUARES {
                module.for_each_sq_one(i, d, idx, &mut |k| {
                    out.push(DiagramEdge {
                        i,
                        from: (d, idx),
                        to: (d + i as i32, k),
                    })
                });
            }
        }
    }
    out
}

/// A DOT graph: one node per basis element, labelled by degree and name,
/// and one edge per nonzero coordinate of `Sq^1, Sq^2, Sq^4, Sq^8`.
pub fn to_dot(module: &FiniteGradedModule) -> String {
    let node = |(d, i): (i32, usize)| format!("d{}_{}", d.to_string().replace('-', "m"), i);
    let mut s = String::new();
    writeln!(s, "digraph \"{}\" {{", module.name().replace('"', "'")).unwrap();
    writeln!(s, "  rankdir=BT;").unwrap();
    writeln!(s, "  node [shape=plaintext];").unwrap();
    for d in module.degrees() {
        for (i, l) in module.labels_in(d).iter().enumerate() {
            writeln!(
                s,
                "  {} [label=\"{d}: {}\"];",
                node((d, i)),
                l.replace('"', "'")
            )
            .unwrap();
        }
    }
    for e in diagram_edges(module) {
        writeln!(
            s,
            "  {} -> {} [label=\"sq{}\"];",
            node(e.from),
            node(e.to),
            e.i
        )
        .unwrap();
    }
    s.push_str("}\n");
    s
}
