use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context as _, Result};
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crossring::association::{AssociationData, Context};
use crossring::drawing::{fuzz_drawing, validate};
use crossring::regions::Regions;
use crossring::robustness::{analyze, RobustnessReport};
use crossring::solver::{bound_table, solve, witness_to_drawing, Family, SearchOptions, SmallGraph};
use crossring::{canonical, certify, Certificate, Drawing, Error};

const EXIT_INVALID: u8 = 1;
const EXIT_FALSIFIED: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "crossring", version, about = "Drawings of C_m x C_n: validation, certification, exact solving")]
struct Cli {
    /// Progress messages on stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the canonical drawing with (m-2)n crossings.
    GenCanonical {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that a drawing file is a good drawing on the sphere.
    Validate { file: PathBuf },
    /// Robustness indices and, for robust drawings, the associated crossings.
    Analyze {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run every check and emit a certificate.
    Certify {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact crossing number by planarization search.
    Solve {
        /// cm-cn:M,N, cm-pn:M,N, k:N, k:A,B or petersen.
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 6)]
        max_k: usize,
        /// Maximum number of planarity tests.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        budget: Option<u64>,
        #[arg(long)]
        no_symmetry: bool,
        /// Write the witness drawing (products of cycles only).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Lower-bound table as CSV.
    Bound {
        #[arg(long)]
        m: usize,
        /// Inclusive range, e.g. 3..40.
        #[arg(long, value_parser = parse_range)]
        n_range: (usize, usize),
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certify perturbed canonical drawings.
    Fuzz {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where falsification fixtures are written.
        #[arg(long, default_value = "quarantine")]
        quarantine: PathBuf,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or("expected A..B")?;
    let a: usize = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b: usize = b.trim().parse().map_err(|e| format!("{e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_USAGE);
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = match e.downcast_ref::<Error>() {
                Some(Error::BudgetExceeded { .. }) => EXIT_BUDGET,
                Some(Error::Precondition(_) | Error::InvalidSize { .. } | Error::Parse(_)) => {
                    EXIT_USAGE
                }
                _ if e.downcast_ref::<Usage>().is_some() => EXIT_USAGE,
                _ => EXIT_INVALID,
            };
            ExitCode::from(code)
        }
    }
}

#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// `CROSSRING_THREADS` caps the worker pool.
fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("CROSSRING_THREADS") {
        let t: usize = v.parse().with_context(|| format!("CROSSRING_THREADS={v:?}"))?;
        if t == 0 {
            bail!("CROSSRING_THREADS must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    Ok(())
}

fn emit(output: Option<&Path>, input: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => {
            if input.is_some_and(|i| same_path(i, p)) {
                return Err(Usage(format!("output {} would overwrite the input", p.display())).into());
            }
            fs::write(p, text).with_context(|| format!("writing {}", p.display()))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                out.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn same_path(a: &Path, b: &Path) -> bool {
    match (fs::canonicalize(a), fs::canonicalize(b)) {
        (Ok(x), Ok(y)) => x == y,
        _ => a == b,
    }
}

fn load(path: &Path) -> Result<Drawing> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    // Any problem with the file itself is a validation failure, never a usage error.
    Drawing::from_json(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<u8> {
    let verbose = cli.verbose > 0;
    match cli.command {
        Command::GenCanonical { m, n, output } => {
            let d = canonical(m, n)?;
            emit(output.as_deref(), None, &d.to_json_pretty())?;
            Ok(0)
        }
        Command::Validate { file } => {
            let d = match load(&file) {
                Ok(d) => d,
                Err(e) => {
                    println!("{}", serde_json::json!({ "valid": false, "error": format!("{e:#}") }));
                    return Ok(EXIT_INVALID);
                }
            };
            let report = validate(&d);
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(if report.is_valid() { 0 } else { EXIT_INVALID })
        }
        Command::Analyze { file, output } => {
            let d = load(&file)?;
            if !validate(&d).is_valid() {
                eprintln!("error: {} is not a valid drawing", file.display());
                return Ok(EXIT_INVALID);
            }
            let report = analyze_drawing(&d)?;
            emit(output.as_deref(), Some(&file), &serde_json::to_string_pretty(&report)?)?;
            Ok(0)
        }
        Command::Certify { file, output } => {
            let d = load(&file)?;
            let cert = certify(&d);
            emit(output.as_deref(), Some(&file), &cert.to_json())?;
            Ok(certificate_code(&cert))
        }
        Command::Solve { graph, max_k, budget, no_symmetry, output } => {
            let g: SmallGraph = graph.parse()?;
            let opts = SearchOptions { k_max: max_k, budget, symmetry: !no_symmetry };
            let outcome = solve(&g, &opts)?;
            let mut witness_valid = None;
            if let Some(w) = &outcome.witness {
                if let Err(msg) = w.verify(&g) {
                    eprintln!("witness rejected: {msg}");
                    return Ok(EXIT_FALSIFIED);
                }
                if matches!(g.family(), Family::CycleCycle { .. }) {
                    let d = witness_to_drawing(&g, w)?;
                    let ok = validate(&d).is_valid() && d.crossing_count() == w.k;
                    witness_valid = Some(ok);
                    if !ok {
                        eprintln!("witness drawing failed validation");
                        return Ok(EXIT_FALSIFIED);
                    }
                    if let Some(p) = &output {
                        emit(Some(p), None, &d.to_json_pretty())?;
                    }
                }
            }
            let summary = SolveSummary {
                graph: graph.clone(),
                max_k,
                crossing_number: outcome.crossing_number,
                levels: outcome
                    .levels
                    .iter()
                    .map(|l| Level { k: l.k, selections: l.selections, planarity_tests: l.planarity_tests })
                    .collect(),
                symmetries: outcome.symmetries,
                candidate_pairs: outcome.candidate_pairs,
                witness_pairs: outcome.witness.as_ref().map(|w| w.pairs.clone()),
                witness_drawing_valid: witness_valid,
            };
            println!("{}", serde_json::to_string_pretty(&summary)?);
            Ok(0)
        }
        Command::Bound { m, n_range: (a, b), output } => {
            let rows = bound_table(m, a..=b)?;
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["m", "n", "regime", "value", "ceiling"])?;
            for r in rows {
                w.write_record([
                    r.m.to_string(),
                    r.n.to_string(),
                    r.regime.to_string(),
                    r.value.to_string(),
                    r.ceiling().to_string(),
                ])?;
            }
            let text = String::from_utf8(w.into_inner()?)?;
            emit(output.as_deref(), None, &text)?;
            Ok(0)
        }
        Command::Fuzz { m, n, count, seed, quarantine } => fuzz(m, n, count, seed, &quarantine, verbose),
    }
}

fn certificate_code(cert: &Certificate) -> u8 {
    if !cert.valid {
        EXIT_INVALID
    } else if cert.passed() {
        0
    } else {
        EXIT_FALSIFIED
    }
}

#[derive(Serialize)]
struct Level {
    k: usize,
    selections: u64,
    planarity_tests: u64,
}

#[derive(Serialize)]
struct SolveSummary {
    graph: String,
    max_k: usize,
    crossing_number: Option<usize>,
    levels: Vec<Level>,
    symmetries: usize,
    candidate_pairs: usize,
    witness_pairs: Option<Vec<(usize, usize)>>,
    witness_drawing_valid: Option<bool>,
}

#[derive(Serialize)]
struct Analysis {
    digest: String,
    robustness: RobustnessReport,
    association: Option<Vec<AssociationData>>,
    association_error: Option<String>,
}

fn analyze_drawing(d: &Drawing) -> Result<Analysis> {
    let regions = Regions::new(d);
    let robustness = analyze(d, &regions);
    let (mut association, mut association_error) = (None, None);
    if robustness.robust {
        let ctx = Context::with_regions(d, regions, robustness.clone())?;
        match (0..d.n()).map(|j| ctx.associated(j)).collect::<Result<Vec<_>, _>>() {
            Ok(a) => association = Some(a),
            Err(e) => association_error = Some(e.to_string()),
        }
    }
    Ok(Analysis { digest: d.digest(), robustness, association, association_error })
}

#[derive(Serialize)]
struct FuzzSummary {
    m: usize,
    n: usize,
    count: u64,
    first_seed: u64,
    robust: u64,
    non_robust: u64,
    /// Non-robust drawings large enough for the heavy-cycle check.
    non_robust_above_threshold: u64,
    max_slack: usize,
    falsified_seeds: Vec<u64>,
}

#[derive(Serialize)]
struct Fixture<'a> {
    seed: u64,
    drawing: serde_json::Value,
    certificate: &'a Certificate,
}

fn fuzz(m: usize, n: usize, count: u64, seed: u64, quarantine: &Path, verbose: bool) -> Result<u8> {
    canonical(m, n)?;
    let results: Vec<(u64, Result<(Drawing, Certificate), Error>)> = (0..count)
        .into_par_iter()
        .map(|i| {
            let s = seed.wrapping_add(i);
            (s, fuzz_drawing(m, n, s).map(|d| {
                let c = certify(&d);
                (d, c)
            }))
        })
        .collect();
    let mut summary = FuzzSummary {
        m,
        n,
        count,
        first_seed: seed,
        robust: 0,
        non_robust: 0,
        non_robust_above_threshold: 0,
        max_slack: 0,
        falsified_seeds: Vec::new(),
    };
    for (s, r) in results {
        let (d, cert) = r?;
        if cert.robust {
            summary.robust += 1;
        } else {
            summary.non_robust += 1;
            if cert.prop13.is_some() {
                summary.non_robust_above_threshold += 1;
            }
        }
        summary.max_slack = summary.max_slack.max(cert.total_crossings.saturating_sub(cert.lower_bound));
        if !cert.passed() {
            summary.falsified_seeds.push(s);
            fs::create_dir_all(quarantine)
                .with_context(|| format!("creating {}", quarantine.display()))?;
            let path = quarantine.join(format!("falsification-m{m}-n{n}-seed{s}.json"));
            let fixture = Fixture { seed: s, drawing: serde_json::from_str(&d.to_json())?, certificate: &cert };
            fs::write(&path, serde_json::to_string_pretty(&fixture)?)?;
            if verbose {
                eprintln!("seed {s}: falsified, fixture at {}", path.display());
            }
        }
    }
    println!("{}", serde_json::to_string_pretty(&summary)?);
    Ok(if summary.falsified_seeds.is_empty() { 0 } else { EXIT_FALSIFIED })
}
