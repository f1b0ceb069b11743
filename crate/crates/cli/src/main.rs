//! Command-line front end: construct measure snapshots, verify claims,
//! sweep parameters. Data goes to --out (or stdout); progress and timing go
//! to stderr. Exit codes: 0 all selected claims pass, 1 claim failure,
//! 2 configuration or feasibility error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cantor2w::estimators::MeasurePair1D;
use cantor2w::measure::{row_offsets, Placement};
use cantor2w::params::auto_b;
use cantor2w::report::{run_claims, ClaimId, OutputFormat, Report, RunConfig, SCHEMA_VERSION};
use cantor2w::snapshot::{RowLayout, Snapshot};
use cantor2w::Error;

#[derive(Parser)]
#[command(
    name = "cantor2w",
    version,
    about = "Cantor-type measure pairs: construction and claim verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Kernel homogeneity parameter, 0 <= alpha < 2.
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    /// Middle-gap fraction b; defaults to the smallest admissible b for alpha.
    #[arg(long)]
    b: Option<f64>,
    /// Generation cap of the omega midpoint atomization.
    #[arg(long, default_value_t = 14)]
    depth_omega: usize,
    /// Generation cap of the sigma atom truncation.
    #[arg(long, default_value_t = 12)]
    depth_sigma: usize,
    /// Generation cap for testing partial sums and the lemma search.
    #[arg(long, default_value_t = 10)]
    k_max: usize,
    /// Off-testing targets (comma-separated positive numbers).
    #[arg(long, value_delimiter = ',', default_values_t = [1.0, 2.0, 4.0, 8.0])]
    n_targets: Vec<f64>,
    /// Seed for the random members of candidate families.
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Output format.
    #[arg(long, default_value = "json")]
    format: String,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build the measure pair and write a reproducibility snapshot.
    Construct(CommonOpts),
    /// Run claim pipelines and write a pass/fail report.
    Verify {
        #[command(flatten)]
        common: CommonOpts,
        /// Comma-separated subset of claims; all when omitted.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
    },
    /// Run verify over a list of parameter values, one report per value.
    Sweep {
        #[command(flatten)]
        common: CommonOpts,
        /// Which parameter to sweep.
        #[arg(long, value_parser = ["alpha", "b", "depth"])]
        parameter: String,
        /// Values for the swept parameter (comma-separated).
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<f64>,
        /// Comma-separated subset of claims; defaults to
        /// testing-divergence,a2-1d,offtest-frac.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
    },
}

fn build_config(common: &CommonOpts) -> Result<RunConfig, Error> {
    let b = match common.b {
        Some(b) => b,
        None => auto_b(common.alpha)?,
    };
    let mut cfg = RunConfig::new(common.alpha, b)?;
    cfg.depth_omega = common.depth_omega;
    cfg.depth_sigma = common.depth_sigma;
    cfg.planar_depth_omega = common.depth_omega.saturating_sub(2).max(6);
    cfg.planar_depth_sigma = common.depth_sigma.saturating_sub(2).max(5);
    cfg.k_max = common.k_max;
    cfg.n_targets = common.n_targets.clone();
    cfg.seed = common.seed;
    cfg.format = common.format.parse()?;
    cfg.params_1d()?;
    cfg.params_planar()?;
    Ok(cfg)
}

fn parse_claims(claims: &Option<Vec<String>>, default: &[ClaimId]) -> Result<Vec<ClaimId>, Error> {
    match claims {
        None => Ok(default.to_vec()),
        Some(list) => {
            if list.is_empty() || list.iter().all(|s| s.trim().is_empty()) {
                return Err(Error::InvalidParameters("empty claims list".into()));
            }
            list.iter().map(|s| s.trim().parse()).collect()
        }
    }
}

fn emit(out: &Option<PathBuf>, data: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, data)?,
        None => print!("{data}"),
    }
    Ok(())
}

fn cmd_construct(common: &CommonOpts) -> Result<(), Error> {
    let cfg = build_config(common)?;
    let params = cfg.params_1d()?;
    let pair = MeasurePair1D::build(&params, Placement::Center)?;
    let snap = Snapshot {
        schema_version: cantor2w::snapshot::SCHEMA_VERSION,
        params,
        generations: params.depth_sigma,
        atoms: pair.sigma.atoms().to_vec(),
        rows: row_offsets(params.alpha, cfg.n_targets.len())
            .into_iter()
            .map(|a_n| RowLayout { a_n, height: 0.0 })
            .collect(),
    };
    emit(&common.out, &snap.to_json()).map_err(|e| Error::InvalidParameters(e.to_string()))?;
    Ok(())
}

fn render_report(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => report.to_csv(),
    }
}

fn cmd_verify(common: &CommonOpts, claims: &Option<Vec<String>>) -> Result<bool, Error> {
    let cfg = build_config(common)?;
    let ids = parse_claims(claims, &ClaimId::ALL)?;
    let report = run_claims(&cfg, &ids)?;
    emit(&common.out, &render_report(&report, cfg.format))
        .map_err(|e| Error::InvalidParameters(e.to_string()))?;
    Ok(report.all_pass)
}

fn cmd_sweep(
    common: &CommonOpts,
    parameter: &str,
    values: &[f64],
    claims: &Option<Vec<String>>,
) -> Result<bool, Error> {
    if values.is_empty() {
        return Err(Error::InvalidParameters("empty sweep value list".into()));
    }
    let default_claims = [
        ClaimId::TestingDivergence,
        ClaimId::A2OneD,
        ClaimId::OfftestFrac,
    ];
    let ids = parse_claims(claims, &default_claims)?;
    let format: OutputFormat = common.format.parse()?;
    let mut entries = Vec::new();
    let mut all_pass = true;
    for &v in values {
        let mut point = common.clone();
        match parameter {
            "alpha" => {
                point.alpha = v;
                point.b = common.b; // None → auto per alpha
            }
            "b" => point.b = Some(v),
            "depth" => {
                let d = v as usize;
                point.depth_omega = d;
                point.depth_sigma = d.saturating_sub(2).max(1);
            }
            _ => unreachable!("clap restricts the parameter values"),
        }
        eprintln!("[sweep] {parameter} = {v}");
        let entry = match build_config(&point).and_then(|cfg| run_claims(&cfg, &ids)) {
            Ok(report) => {
                all_pass &= report.all_pass;
                serde_json::json!({ "value": v, "report": report })
            }
            Err(e) => {
                // per-value failures are recorded and the sweep continues
                all_pass = false;
                serde_json::json!({ "value": v, "error": e.to_string() })
            }
        };
        entries.push(entry);
    }
    let rendered = match format {
        OutputFormat::Json => serde_json::to_string_pretty(&serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "parameter": parameter,
            "sweep": entries,
        }))
        .expect("sweep serialization cannot fail"),
        OutputFormat::Csv => {
            let mut out = String::from("claim_id,param,value,bound,pass\n");
            for e in &entries {
                let v = &e["value"];
                if let Some(err) = e.get("error").and_then(|x| x.as_str()) {
                    out.push_str(&format!("error,{parameter}={v}:{err},,,false\n"));
                    continue;
                }
                let report: Report =
                    serde_json::from_value(e["report"].clone()).expect("just serialized");
                for c in &report.claims {
                    for ch in &c.checks {
                        out.push_str(&format!(
                            "{},{parameter}={v}:{},{},{},{}\n",
                            c.claim, ch.name, ch.value, ch.bound, ch.pass
                        ));
                    }
                }
            }
            out
        }
    };
    emit(&common.out, &rendered).map_err(|e| Error::InvalidParameters(e.to_string()))?;
    Ok(all_pass)
}

fn remediation(e: &Error) -> Option<&'static str> {
    match e {
        Error::InfeasibleTarget { .. } => {
            Some("raise --depth-sigma/--depth-omega or lower the --n-targets entries")
        }
        Error::NoAdmissibleC { .. } => Some("raise --depth-omega or widen the placement grid"),
        Error::DepthOverflow { .. } => Some("raise the construction depths"),
        _ => None,
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("CANTOR2W_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => {
                eprintln!("error: CANTOR2W_THREADS must be a positive integer, got {threads:?}");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Construct(common) => cmd_construct(common).map(|()| true),
        Command::Verify { common, claims } => cmd_verify(common, claims),
        Command::Sweep {
            common,
            parameter,
            values,
            claims,
        } => cmd_sweep(common, parameter, values, claims),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(hint) = remediation(&e) {
                eprintln!("hint: {hint}");
            }
            ExitCode::from(2)
        }
    }
}
