//! Command-line front end: invariant tables, BPS tables, the verification
//! suite, and reproduction of the bundled golden tables.
//!
//! Exit codes: 0 success; 1 failed check or table mismatch; 2 invalid
//! geometry; 3 unsupported genus-zero request. Rationals print canonically as
//! `p/q` (bare integer when the denominator is 1); no decimal output exists.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::exactmath::Rational;
use crate::genus0::{self, gv_genus0, integrality_report};
use crate::genus1::conjecture_invariants;
use crate::geometry::{InvariantKind, SplitGeometry};
use crate::tables;
use crate::verify::{run_suite, CheckFilter, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_BAD_GEOMETRY: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Parser)]
#[command(
    name = "gwlocal",
    about = "Exact genus-0/1 Gromov-Witten and BPS tables for local Calabi-Yau n-folds",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for tables and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindChoice {
    /// Genus-one invariants plus genus-zero tables where supported.
    All,
    /// Genus-one invariants only.
    Genus1,
    /// Genus-zero one- and two-point invariants (supported geometries only).
    Genus0,
}

#[derive(Subcommand)]
enum Command {
    /// Genus-one invariants N_{1,d} (and genus-zero GW for supported geometries).
    Invariants {
        /// Geometry: grammar P<l>/O(-c1,...,-cm) or a preset (kp4, o1x3_p3, ...).
        #[arg(long)]
        geometry: String,
        #[arg(long, default_value_t = 20)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = KindChoice::All)]
        kind: KindChoice,
    },
    /// Genus-zero BPS tables n_{0,d} with integrality flags.
    Bps {
        #[arg(long)]
        geometry: String,
        #[arg(long, default_value_t = 20)]
        max_degree: usize,
        /// Report divisibility by these moduli (comma-separated).
        #[arg(long, value_delimiter = ',')]
        moduli: Vec<u64>,
    },
    /// Run the verification suite; exit 0 only if every check passes.
    Verify {
        /// Restrict to one check family: residue_lemma, prop66, binomial,
        /// lemma72, localization, degree_one.
        #[arg(long)]
        only: Option<String>,
        /// Bound override for the selected family (degree for lemma72,
        /// r for binomial, n otherwise).
        #[arg(long)]
        max: Option<usize>,
        /// Geometry sweep bound (total dimension).
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        /// Localization sweep bound (total dimension).
        #[arg(long, default_value_t = 8)]
        loc_max_n: u32,
        /// Number of weight draws per geometry.
        #[arg(long, default_value_t = 3)]
        seeds: u64,
        /// Base seed for the weight draws.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Recompute the bundled golden tables and diff cell by cell.
    Reproduce {
        /// Restrict to one bundled geometry.
        #[arg(long)]
        geometry: Option<String>,
    },
}

/// Parse arguments and run; returns the process exit code.
pub fn run() -> i32 {
    init_thread_pool();
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(CliError::BadGeometry(msg)) => {
            eprintln!("error: {msg}");
            EXIT_BAD_GEOMETRY
        }
        Err(CliError::Unsupported(msg)) => {
            eprintln!("error: {msg}");
            EXIT_UNSUPPORTED
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("error: {msg}");
            EXIT_CHECK_FAILED
        }
    }
}

/// Cap the worker pool from GWLOCAL_THREADS (default: rayon's choice).
fn init_thread_pool() {
    if let Ok(raw) = std::env::var("GWLOCAL_THREADS") {
        if let Ok(threads) = raw.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

enum CliError {
    BadGeometry(String),
    Unsupported(String),
    Internal(String),
}

fn parse_geometry(spec: &str) -> Result<SplitGeometry, CliError> {
    spec.parse::<SplitGeometry>()
        .map_err(|e| CliError::BadGeometry(e.to_string()))
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Invariants {
            geometry,
            max_degree,
            kind,
        } => cmd_invariants(&geometry, max_degree, kind, cli.format),
        Command::Bps {
            geometry,
            max_degree,
            moduli,
        } => cmd_bps(&geometry, max_degree, &moduli, cli.format),
        Command::Verify {
            only,
            max,
            max_n,
            loc_max_n,
            seeds,
            seed,
        } => cmd_verify(
            only.as_deref(),
            max,
            max_n,
            loc_max_n,
            seeds,
            seed,
            cli.format,
        ),
        Command::Reproduce { geometry } => cmd_reproduce(geometry.as_deref(), cli.format),
    }
}

/// One output table: degrees, exact values, integrality flags, and optional
/// divisibility flags per modulus.
struct OutputTable {
    geometry: String,
    kind: InvariantKind,
    degrees: Vec<usize>,
    values: Vec<Rational>,
    integral: Vec<bool>,
    moduli: Vec<u64>,
    divisible: Vec<Vec<bool>>, // indexed [modulus][row]
}

impl OutputTable {
    fn from_values<'a>(
        geometry: &SplitGeometry,
        kind: InvariantKind,
        values: impl Iterator<Item = (usize, &'a Rational)>,
    ) -> Self {
        let mut degrees = Vec::new();
        let mut vals = Vec::new();
        let mut integral = Vec::new();
        for (d, v) in values {
            degrees.push(d);
            integral.push(v.is_integer());
            vals.push(v.clone());
        }
        OutputTable {
            geometry: geometry.to_string(),
            kind,
            degrees,
            values: vals,
            integral,
            moduli: Vec::new(),
            divisible: Vec::new(),
        }
    }

    fn with_moduli(mut self, moduli: &[u64]) -> Self {
        self.moduli = moduli.to_vec();
        self.divisible = moduli
            .iter()
            .map(|&m| self.values.iter().map(|v| v.is_divisible_by(m)).collect())
            .collect();
        self
    }
}

fn emit_tables(tables: &[OutputTable], format: Format) {
    match format {
        Format::Text => {
            for t in tables {
                println!("geometry {}  kind {}", t.geometry, t.kind);
                let mut header = format!("{:>4}  {:<40}  {}", "d", "value", "integral");
                for m in &t.moduli {
                    header.push_str(&format!("  mod{m}"));
                }
                println!("{header}");
                for i in 0..t.degrees.len() {
                    let mut line = format!(
                        "{:>4}  {:<40}  {}",
                        t.degrees[i],
                        t.values[i].to_string(),
                        if t.integral[i] { "yes" } else { "NO" }
                    );
                    for flags in &t.divisible {
                        line.push_str(if flags[i] { "  yes" } else { "  no" });
                    }
                    println!("{line}");
                }
                println!();
            }
        }
        Format::Csv => {
            for (idx, t) in tables.iter().enumerate() {
                if idx > 0 {
                    println!();
                }
                println!("# geometry={} kind={}", t.geometry, t.kind);
                println!("d,value,integral");
                for i in 0..t.degrees.len() {
                    println!("{},{},{}", t.degrees[i], t.values[i], t.integral[i]);
                }
            }
        }
        Format::Json => {
            let arr: Vec<_> = tables
                .iter()
                .map(|t| {
                    let mut obj = json!({
                        "geometry": t.geometry,
                        "kind": t.kind.name(),
                        "degrees": t.degrees,
                        "values": t.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        "integral": t.integral,
                    });
                    if !t.moduli.is_empty() {
                        let div: serde_json::Map<String, serde_json::Value> = t
                            .moduli
                            .iter()
                            .zip(&t.divisible)
                            .map(|(m, flags)| (m.to_string(), json!(flags)))
                            .collect();
                        obj["divisible"] = serde_json::Value::Object(div);
                    }
                    obj
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&arr).expect("json"));
        }
    }
}

fn cmd_invariants(
    geometry: &str,
    max_degree: usize,
    kind: KindChoice,
    format: Format,
) -> Result<i32, CliError> {
    let geom = parse_geometry(geometry)?;
    if max_degree < 1 {
        return Err(CliError::BadGeometry(
            "max-degree must be at least 1".into(),
        ));
    }
    let mut tables = Vec::new();
    if matches!(kind, KindChoice::All | KindChoice::Genus1) {
        let series = conjecture_invariants(&geom, max_degree)
            .map_err(|e| CliError::Internal(e.to_string()))?;
        tables.push(OutputTable::from_values(
            &geom,
            InvariantKind::Genus1Gw,
            series.values().iter().map(|(&d, v)| (d, v)),
        ));
    }
    let want_genus0 = match kind {
        KindChoice::Genus0 => {
            if !genus0::is_supported(&geom) {
                return Err(CliError::Unsupported(format!(
                    "no genus-zero recipe for {geom}; supported: P4/O(-5), P3/O(-1,-3), P3/O(-2,-2)"
                )));
            }
            true
        }
        KindChoice::All => genus0::is_supported(&geom),
        KindChoice::Genus1 => false,
    };
    if want_genus0 {
        let (one, two) =
            genus0::gw_pair(&geom, max_degree).map_err(|e| CliError::Internal(e.to_string()))?;
        tables.push(OutputTable::from_values(
            &geom,
            InvariantKind::Genus0OnepointH3,
            one.values().iter().map(|(&d, v)| (d, v)),
        ));
        tables.push(OutputTable::from_values(
            &geom,
            InvariantKind::Genus0TwopointH2H2,
            two.values().iter().map(|(&d, v)| (d, v)),
        ));
    }
    emit_tables(&tables, format);
    Ok(EXIT_OK)
}

fn cmd_bps(
    geometry: &str,
    max_degree: usize,
    moduli: &[u64],
    format: Format,
) -> Result<i32, CliError> {
    let geom = parse_geometry(geometry)?;
    if !genus0::is_supported(&geom) {
        return Err(CliError::Unsupported(format!(
            "no genus-zero recipe for {geom}; supported: P4/O(-5), P3/O(-1,-3), P3/O(-2,-2)"
        )));
    }
    if max_degree >= 50 {
        eprintln!("note: computing BPS tables to degree {max_degree}; large degrees take a while");
    }
    let (gw_one, gw_two) =
        genus0::gw_pair(&geom, max_degree).map_err(|e| CliError::Internal(e.to_string()))?;
    let one = gv_genus0(&gw_one, 1).map_err(|e| CliError::Internal(e.to_string()))?;
    let two = gv_genus0(&gw_two, 2).map_err(|e| CliError::Internal(e.to_string()))?;
    let mut tables = Vec::new();
    for bps in [&one, &two] {
        let table =
            OutputTable::from_values(&geom, bps.kind(), bps.values().iter().map(|(&d, v)| (d, v)))
                .with_moduli(moduli);
        tables.push(table);
    }
    emit_tables(&tables, format);
    if format == Format::Text && !moduli.is_empty() {
        for bps in [&one, &two] {
            let report = integrality_report(bps, moduli);
            println!(
                "summary {}: {}/{} integral",
                bps.kind(),
                report.integer_count,
                report.rows.len()
            );
            for (i, &m) in report.moduli.iter().enumerate() {
                let count = report.rows.iter().filter(|r| r.divisible[i]).count();
                println!("  divisible by {m}: {count}/{}", report.rows.len());
            }
        }
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    only: Option<&str>,
    max: Option<usize>,
    max_n: u32,
    loc_max_n: u32,
    seeds: u64,
    seed: u64,
    format: Format,
) -> Result<i32, CliError> {
    let filter = match only {
        None => CheckFilter::All,
        Some(name) => CheckFilter::parse(name).ok_or_else(|| {
            CliError::BadGeometry(format!(
                "unknown check {name:?}; expected one of residue_lemma, prop66, binomial, lemma72, localization, degree_one"
            ))
        })?,
    };
    let mut config = SuiteConfig {
        max_n,
        localization_max_n: loc_max_n,
        seeds,
        base_seed: seed,
        filter,
        ..SuiteConfig::default()
    };
    if let Some(bound) = max {
        match filter {
            CheckFilter::Lemma72 => config.lemma72_d_max = bound,
            CheckFilter::Binomial => config.binomial_r_max = bound,
            _ => {
                config.max_n = bound as u32;
                config.localization_max_n = (bound as u32).min(loc_max_n);
            }
        }
    }
    let results = run_suite(&config);
    let all_passed = results.iter().all(|r| r.passed);
    match format {
        Format::Json => {
            let arr: Vec<_> = results
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "parameters": r.parameters,
                        "passed": r.passed,
                        "lhs": r.lhs,
                        "rhs": r.rhs,
                        "detail": r.detail,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&arr).expect("json"));
        }
        Format::Csv => {
            println!("name,parameters,passed,lhs,rhs");
            for r in &results {
                println!(
                    "{},{},{},{},{}",
                    r.name,
                    r.parameters.replace(',', ";"),
                    r.passed,
                    r.lhs.replace(',', ";"),
                    r.rhs.replace(',', ";")
                );
            }
        }
        Format::Text => {
            for r in &results {
                println!("{r}");
            }
            println!(
                "{}: {} checks, {} failed",
                if all_passed { "PASS" } else { "FAIL" },
                results.len(),
                results.iter().filter(|r| !r.passed).count()
            );
        }
    }
    Ok(if all_passed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn cmd_reproduce(geometry: Option<&str>, format: Format) -> Result<i32, CliError> {
    let filter = match geometry {
        Some(spec) => {
            let geom = parse_geometry(spec)?;
            if !tables::builtin_fixtures()
                .iter()
                .any(|t| t.geometry == geom)
            {
                return Err(CliError::Unsupported(format!(
                    "no bundled table for {geom}"
                )));
            }
            Some(geom)
        }
        None => None,
    };
    let report =
        tables::reproduce(filter.as_ref()).map_err(|e| CliError::Internal(e.to_string()))?;
    match format {
        Format::Json => {
            let mismatches: Vec<_> = report
                .mismatches
                .iter()
                .map(|m| {
                    json!({
                        "geometry": m.geometry.to_string(),
                        "kind": m.kind.name(),
                        "degree": m.degree,
                        "computed": m.computed.to_string(),
                        "fixture": m.fixture.to_string(),
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "cells_checked": report.cells_checked,
                    "reference_only_cells": report.reference_only_cells,
                    "mismatches": mismatches,
                    "passed": report.passed(),
                }))
                .expect("json")
            );
        }
        _ => {
            for m in &report.mismatches {
                println!(
                    "MISMATCH {} {} d={}: computed {} fixture {}",
                    m.geometry, m.kind, m.degree, m.computed, m.fixture
                );
            }
            println!(
                "{}: {} derivable cells checked, {} mismatches; {} genus-1 cells are reference-only (not derivable here) and excluded from pass/fail",
                if report.passed() { "PASS" } else { "FAIL" },
                report.cells_checked,
                report.mismatches.len(),
                report.reference_only_cells,
            );
        }
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}
