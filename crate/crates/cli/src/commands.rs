use std::fmt::Write as _;
use std::sync::Arc;

use bgq_core::bg::{build_q_module, j_module};
use bgq_core::graded::{
    a1_free_decomposition, margolis, to_dot, A1Decomposition, FiniteGradedModule,
};
use bgq_core::polyalg::{qm, sq, Polynomial};
use bgq_core::theorems::{k_tables, scan_main_theorem, ScanConfig};

use crate::{cache, CliError, Command};

type Out<'a> = &'a mut String;

pub fn run(command: Command, out: Out) -> Result<(), CliError> {
    match command {
        Command::Basis { n, degree } => basis(n, degree, out),
        Command::Sq { i, poly } => {
            writeln!(out, "{}", sq(i, &parse_poly(&poly)?)).unwrap();
            Ok(())
        }
        Command::Qm { m, poly } => {
            writeln!(out, "{}", qm(m, &parse_poly(&poly)?)).unwrap();
            Ok(())
        }
        Command::Margolis { module, m } => margolis_cmd(&module, m, out),
        Command::Qmodule {
            n,
            m,
            dump,
            a1_free,
        } => qmodule(n, m, dump, a1_free, out),
        Command::Scan {
            nmax,
            mmax,
            jobs,
            json,
        } => scan(nmax, mmax, jobs, json, out),
        Command::Table { m, nmax } => table(m, nmax, out),
        Command::Diagram { module, out: path } => {
            let dot = to_dot(&*module_spec(&module)?);
            match path {
                Some(p) => std::fs::write(p, dot)?,
                None => out.push_str(&dot),
            }
            Ok(())
        }
    }
}

fn parse_poly(s: &str) -> Result<Polynomial, CliError> {
    s.parse()
        .map_err(|e: bgq_core::Error| CliError::Usage(e.to_string()))
}

/// `J:n` or `Q:n,m`.
fn module_spec(spec: &str) -> Result<Arc<FiniteGradedModule>, CliError> {
    let bad = || CliError::Usage(format!("expected J:n or Q:n,m, got {spec:?}"));
    let (kind, args) = spec.split_once(':').ok_or_else(bad)?;
    let nums = args
        .split(',')
        .map(|a| a.trim().parse::<u64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| bad())?;
    match (kind, nums.as_slice()) {
        ("J", &[n]) => Ok(j_module(n)?),
        ("Q", &[n, m]) => cache::q_module(n, m),
        _ => Err(bad()),
    }
}

fn basis(n: u64, degree: Option<i32>, out: Out) -> Result<(), CliError> {
    let j = j_module(n)?;
    let degrees: Vec<i32> = match degree {
        Some(d) => vec![d],
        None => j.degrees().collect(),
    };
    for d in degrees {
        writeln!(out, "{d}: {}", j.labels_in(d).join(" ")).unwrap();
    }
    Ok(())
}

fn margolis_cmd(spec: &str, m: u32, out: Out) -> Result<(), CliError> {
    let module = module_spec(spec)?;
    let report = margolis(&module, m)?;
    writeln!(
        out,
        "# {} Q_{m}: degree kernel image homology",
        report.module
    )
    .unwrap();
    for d in &report.degrees {
        let flag = if d.excluded { " excluded" } else { "" };
        writeln!(
            out,
            "{} {} {} {}{flag}",
            d.degree, d.kernel, d.image, d.homology
        )
        .unwrap();
    }
    writeln!(out, "total {}", report.total()).unwrap();
    Ok(())
}

fn qmodule(n: u64, m: u64, dump: bool, a1_free: bool, out: Out) -> Result<(), CliError> {
    let (module, dump_text) = if dump {
        let q = build_q_module(n, m)?;
        let text = q.dump_text();
        (q.module, Some(text))
    } else {
        (cache::q_module(n, m)?, None)
    };
    let dims: Vec<String> = module.dims().iter().map(usize::to_string).collect();
    write!(
        out,
        "dim {}; degrees {}..{}: {}",
        module.total_dim(),
        module.lo(),
        module.hi(),
        dims.join(" ")
    )
    .unwrap();
    if a1_free {
        match a1_free_decomposition(&module) {
            A1Decomposition::Free { generators } => {
                write!(out, "; A(1)-free on degrees {generators:?}").unwrap()
            }
            A1Decomposition::NotFree(w) => write!(
                out,
                "; not A(1)-free: orbit of {} in degree {} has dimension {}",
                w.element.join(" + "),
                w.degree,
                w.orbit_dim
            )
            .unwrap(),
        }
    }
    out.push('\n');
    if let Some(text) = dump_text {
        out.push_str(&text);
    }
    Ok(())
}

fn scan(nmax: u64, mmax: u64, jobs: Option<usize>, json: bool, out: Out) -> Result<(), CliError> {
    let mut config = ScanConfig::new(nmax, mmax);
    config.jobs = jobs;
    let report = scan_main_theorem(&config)?;
    if json {
        out.push_str(&report.to_json());
        out.push('\n');
    } else {
        out.push_str(&report.to_text(false));
    }
    eprintln!(
        "scan: {} pairs in {} ms",
        report.summary.pairs, report.summary.wall_ms
    );
    if report.is_clean() {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!(
            "{} mismatches",
            report.mismatches.len()
        )))
    }
}

fn table(m: u32, nmax: u64, out: Out) -> Result<(), CliError> {
    let t = k_tables(m, nmax)?;
    writeln!(out, "# k_{{{m},n}}, corollary value, delta").unwrap();
    for (n, (&k, &c)) in t.k.iter().zip(&t.corollary).enumerate() {
        writeln!(
            out,
            "k_{{{m},{n}}} = {k}  corollary {c}  delta {}",
            k as i64 - c as i64
        )
        .unwrap();
    }
    if t.agrees() {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!(
            "k_{m} table disagrees with its closed forms"
        )))
    }
}
