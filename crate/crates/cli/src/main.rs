mod args;
mod render;

use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;
use serde_json::{json, Value};

use sheaf_census::census::{
    census_bdi_k0, census_bdi_k1, census_diii, count_formula_k0, count_formula_k1,
    cuspidal_formula_k0, cuspidal_formula_k1, nilpotent_formula_k0, nilpotent_formula_k1,
    orbits_bdi, orbits_diii, CensusReport, CentralCharacter, OrbitLabel, PairType, Subset,
};
use sheaf_census::diagrams::{enum_lambda, SigmaBReading, SigmaClass};
use sheaf_census::groups::{kappa1_data_bdi, kappa1_data_diii, PairParity};
use sheaf_census::partitions::count_bipartitions;
use sheaf_census::qseries::expr::parse_expr;
use sheaf_census::qseries::format_rational;
use sheaf_census::verify::{run_suite, Selection, SuiteConfig};
use sheaf_census::Error;

use args::{
    CensusOpts, CensusPair, CentralArg, ClassArg, Cli, Command, OrbitPair, SeriesArgs, SubsetArg,
    VerifyArgs,
};
use render::{render, Output, Table};

/// Exit status of a command that ran to completion.
enum Status {
    Ok,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let result = match &cli.command {
        Command::Orbits { pair } => cmd_orbits(pair),
        Command::Census { pair } => cmd_census(pair),
        Command::Verify(a) => cmd_verify(a),
        Command::Series(a) => cmd_series(a),
    };
    let (output, status) = match result {
        Ok(r) => r,
        Err(e) => {
            match &e {
                Error::Parse(p) => eprintln!("error: {p}\n{}", p.diagnostic()),
                other => eprintln!("error: {other}"),
            }
            return ExitCode::from(2);
        }
    };
    let text = render(&output, cli.format, command);
    let written = match &cli.out {
        Some(path) => write_atomic(path, &text),
        None => io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    match status {
        Status::Ok => ExitCode::SUCCESS,
        Status::Mismatch => ExitCode::from(1),
    }
}

fn write_atomic(path: &Path, text: &str) -> io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp-{}", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload serializes")
}

#[derive(Serialize)]
struct OrbitRow {
    diagram: String,
    delta: Option<String>,
    a: Option<u32>,
    b: Option<u32>,
    r: Option<u32>,
    class: Option<SigmaClass>,
    k0: u64,
    k1: u64,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn cmd_orbits(pair: &OrbitPair) -> sheaf_census::Result<(Output, Status)> {
    let rows: Vec<OrbitRow> = match pair {
        OrbitPair::Bdi {
            sig,
            class,
            richardson,
        } => {
            let parity = PairParity::of(sig.p, sig.q);
            let wanted = class.map(|c| match c {
                ClassArg::Sigma1 => SigmaClass::Sigma1,
                ClassArg::Sigma2 => SigmaClass::Sigma2,
                ClassArg::Sigma3 => SigmaClass::Sigma3,
            });
            let mut rows = Vec::new();
            for OrbitLabel { diagram, delta } in orbits_bdi(sig.p, sig.q) {
                if *richardson && !diagram.is_sigma_b(SigmaBReading::Standard) {
                    continue;
                }
                let c = diagram.classify()?;
                if wanted.is_some_and(|w| w != c.class) {
                    continue;
                }
                rows.push(OrbitRow {
                    diagram: diagram.to_string(),
                    delta: delta.map(|d| d.to_string()),
                    a: Some(c.a),
                    b: Some(c.b),
                    r: Some(c.r),
                    class: Some(c.class),
                    k0: 1 << c.r,
                    k1: kappa1_data_bdi(&diagram, parity)?.count,
                });
            }
            rows
        }
        OrbitPair::Diii { n, richardson } => {
            let mut rows = Vec::new();
            for OrbitLabel { diagram, .. } in orbits_diii(*n) {
                if *richardson && !diagram.is_lambda_b() {
                    continue;
                }
                rows.push(OrbitRow {
                    diagram: diagram.to_string(),
                    delta: None,
                    a: None,
                    b: None,
                    r: None,
                    class: None,
                    k0: 1,
                    k1: kappa1_data_diii(&diagram)?.count,
                });
            }
            rows
        }
    };
    let table = Table {
        headers: vec!["diagram", "delta", "a", "b", "r", "class", "k0", "k1"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.diagram.clone(),
                    opt(&r.delta),
                    opt(&r.a),
                    opt(&r.b),
                    opt(&r.r),
                    opt(&r.class),
                    r.k0.to_string(),
                    r.k1.to_string(),
                ]
            })
            .collect(),
        footer: vec![format!("{} orbits", rows.len())],
    };
    Ok((
        Output {
            payload: to_value(&rows),
            warnings: Vec::new(),
            table,
            plain: None,
        },
        Status::Ok,
    ))
}

fn subset_of(s: SubsetArg) -> Subset {
    match s {
        SubsetArg::All => Subset::All,
        SubsetArg::Cuspidal => Subset::Cuspidal,
        SubsetArg::Nilpotent => Subset::Nilpotent,
        SubsetArg::Full => Subset::Full,
    }
}

fn wants(central: CentralArg, c: CentralCharacter) -> bool {
    matches!(
        (central, c),
        (CentralArg::Both, _)
            | (CentralArg::K0, CentralCharacter::K0)
            | (CentralArg::K1, CentralCharacter::K1)
    )
}

/// The closed-form total a sub-census should have, if one is known.
fn expected_total(r: &CensusReport, subset: Subset) -> sheaf_census::Result<Option<u64>> {
    let k0 = r.central == CentralCharacter::K0;
    Ok(match r.pair.kind {
        PairType::Bdi => {
            let (p, q) = (r.pair.p.unwrap_or(0), r.pair.q.unwrap_or(0));
            match (subset, k0) {
                (Subset::All, true) => Some(count_formula_k0(p, q)?),
                (Subset::All, false) => Some(count_formula_k1(p, q)?),
                (Subset::Cuspidal, true) => cuspidal_formula_k0(p, q)?,
                (Subset::Cuspidal, false) => Some(cuspidal_formula_k1(p, q)),
                (Subset::Nilpotent, true) => nilpotent_formula_k0(p, q)?,
                (Subset::Nilpotent, false) => Some(nilpotent_formula_k1(p, q)),
                (Subset::Full, _) => None,
            }
        }
        PairType::Diii => {
            let n = r.pair.n.unwrap_or(0);
            match (subset, k0) {
                (Subset::All, true) => Some(enum_lambda(n).len() as u64),
                (Subset::All, false) if n.is_multiple_of(2) => {
                    Some(count_bipartitions(i64::from(n / 2)))
                }
                (Subset::All, false) | (Subset::Cuspidal, _) => Some(0),
                _ => None,
            }
        }
    })
}

fn cmd_census(pair: &CensusPair) -> sheaf_census::Result<(Output, Status)> {
    let (reports, opts): (Vec<CensusReport>, &CensusOpts) = match pair {
        CensusPair::Bdi { sig, opts } => {
            let mut v = Vec::new();
            if wants(opts.central, CentralCharacter::K0) {
                v.push(census_bdi_k0(sig.p, sig.q));
            }
            if wants(opts.central, CentralCharacter::K1) {
                v.push(census_bdi_k1(sig.p, sig.q));
            }
            (v, opts)
        }
        CensusPair::Diii { n, opts } => {
            let (k0, k1) = census_diii(*n);
            let v = [k0, k1]
                .into_iter()
                .filter(|r| wants(opts.central, r.central))
                .collect();
            (v, opts)
        }
    };
    let subset = subset_of(opts.subset);
    let reports: Vec<CensusReport> = reports.iter().map(|r| r.subset(subset)).collect();
    let mut warnings: Vec<String> = reports
        .first()
        .map(|r| r.warnings.clone())
        .unwrap_or_default();
    let mut status = Status::Ok;
    if opts.check {
        for r in &reports {
            match expected_total(r, subset)? {
                Some(e) if e == r.total => {}
                Some(e) => {
                    let msg = format!(
                        "{} total {} disagrees with closed form {}",
                        r.central, r.total, e
                    );
                    eprintln!("mismatch: {msg}");
                    warnings.push(format!("check failed: {msg}"));
                    status = Status::Mismatch;
                }
                None => warnings.push(format!(
                    "check skipped: no closed form for {} with this subset",
                    r.central
                )),
            }
        }
    }
    let mut rows = Vec::new();
    let mut footer = Vec::new();
    for r in &reports {
        for e in &r.strata {
            rows.push(vec![
                r.central.to_string(),
                e.support.to_string(),
                opt(&e.delta),
                e.m.to_string(),
                e.k.to_string(),
                e.mu.to_string(),
                to_value(&e.family).as_str().unwrap_or_default().to_string(),
                e.count.to_string(),
            ]);
        }
        rows.push(vec![
            r.central.to_string(),
            "total".into(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            r.total.to_string(),
        ]);
        footer.push(format!("{} {}: total {}", r.pair, r.central, r.total));
    }
    let table = Table {
        headers: vec![
            "central", "support", "delta", "m", "k", "mu", "family", "count",
        ],
        rows,
        footer,
    };
    Ok((
        Output {
            payload: to_value(&reports),
            warnings,
            table,
            plain: None,
        },
        status,
    ))
}

fn cmd_verify(a: &VerifyArgs) -> sheaf_census::Result<(Output, Status)> {
    let config = SuiteConfig {
        order: a.order,
        sweep: a.sweep,
        k1_sweep: a.k1_sweep,
    };
    let report = run_suite(&Selection::parse(&a.suite), &config)?;
    let rows = report
        .checks
        .iter()
        .map(|c| {
            vec![
                c.id.clone(),
                c.status.to_string(),
                c.cells.to_string(),
                c.range.clone(),
                c.witness
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default(),
            ]
        })
        .collect();
    let footer = vec![format!(
        "overall: {} ({} checks)",
        report.status,
        report.checks.len()
    )];
    let table = Table {
        headers: vec!["id", "status", "cells", "range", "witness"],
        rows,
        footer,
    };
    let status = if report.passed() {
        Status::Ok
    } else {
        Status::Mismatch
    };
    Ok((
        Output {
            payload: to_value(&report),
            warnings: Vec::new(),
            table,
            plain: None,
        },
        status,
    ))
}

fn cmd_series(a: &SeriesArgs) -> sheaf_census::Result<(Output, Status)> {
    let expr = parse_expr(&a.expr)?;
    let order = a.coeff.map_or(a.order, |k| a.order.max(k));
    let series = expr.eval(order)?;
    let canonical = expr.to_string();
    let (payload, plain, rows) = match a.coeff {
        Some(k) => {
            let c = format_rational(series.coeff(k)?);
            (
                json!({"expr": canonical, "order": order, "coeff": k, "value": c}),
                c.clone(),
                vec![vec![k.to_string(), c]],
            )
        }
        None => {
            let cs: Vec<String> = series.coeffs().iter().map(format_rational).collect();
            let rows = cs
                .iter()
                .enumerate()
                .map(|(i, c)| vec![i.to_string(), c.clone()])
                .collect();
            (
                json!({"expr": canonical, "order": order, "coefficients": cs}),
                cs.join(", "),
                rows,
            )
        }
    };
    let table = Table {
        headers: vec!["exponent", "coefficient"],
        rows,
        footer: Vec::new(),
    };
    Ok((
        Output {
            payload,
            warnings: Vec::new(),
            table,
            plain: Some(plain),
        },
        Status::Ok,
    ))
}
