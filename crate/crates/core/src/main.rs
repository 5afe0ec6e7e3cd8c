//! Command-line driver: synthesize certified instances, verify games, and
//! expose the counting, Galois, and equilibrium subroutines. Reports are
//! JSON on stdout (or --out); the exit code is 0 exactly when the requested
//! check passes.

use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use nashdeg::certifier::{
    certify_full_symmetric, certify_irreducible, check_dense, derangement, mixed_volume_full,
};
use nashdeg::jsonio;
use nashdeg::pipeline::{synthesize, verify_coeffs, SynthesisConfig};
use nashdeg::rat::parse_rat;
use nashdeg::solver::enumerate_ne;

#[derive(Parser)]
#[command(version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a certified instance with derangement-degree equilibrium
    /// coordinates
    Synthesize {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// perturbation magnitude, e.g. 1/8
        #[arg(long, default_value = "1/8")]
        magnitude: String,
        #[arg(long, default_value_t = 64)]
        denom_bound: u64,
        #[arg(long, default_value_t = 50)]
        max_resamples: usize,
        /// interval tolerance, e.g. 2^-64
        #[arg(long, default_value = "2^-64")]
        tol: String,
        #[arg(long, default_value_t = 2000)]
        prime_budget: usize,
        /// disable the density-repair shift pass
        #[arg(long)]
        no_density_repair: bool,
        /// allow n = 6 (degree-265 eliminants, no runtime guarantee)
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-run the full solver and certifier stack on a game, tensor, or
    /// bundle file
    Verify {
        path: PathBuf,
        #[arg(long, default_value = "2^-64")]
        tol: String,
        #[arg(long, default_value_t = 2000)]
        prime_budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check mixed volumes against derangement numbers over a range
    Mixedvol {
        lo: usize,
        hi: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Density, irreducibility, and Galois certification of one polynomial
    Galois {
        path: PathBuf,
        #[arg(long, default_value_t = 2000)]
        prime_budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate Nash equilibria of a game over all support patterns
    Ne {
        path: PathBuf,
        #[arg(long, default_value = "2^-64")]
        tol: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Tolerances are powers of two, written 2^-k.
fn parse_tol_bits(s: &str) -> anyhow::Result<u32> {
    let rest = s
        .strip_prefix("2^-")
        .with_context(|| format!("tolerance must look like 2^-64, got {s:?}"))?;
    let bits: u32 = rest.parse().context("tolerance exponent")?;
    if bits == 0 || bits > 4096 {
        bail!("tolerance exponent out of range 1..=4096");
    }
    Ok(bits)
}

fn emit(report: &Value, out: Option<&PathBuf>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(report)?;
    match out {
        Some(path) => fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

fn load_json(path: &PathBuf) -> anyhow::Result<Value> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    Ok(serde_json::from_str(&text)?)
}

fn run() -> anyhow::Result<bool> {
    match Cli::parse().command {
        Command::Synthesize {
            n,
            seed,
            magnitude,
            denom_bound,
            max_resamples,
            tol,
            prime_budget,
            no_density_repair,
            allow_large,
            out,
        } => {
            let mut cfg = SynthesisConfig::new(n, seed);
            cfg.magnitude = parse_rat(&magnitude)?;
            cfg.denom_bound = denom_bound;
            cfg.max_resamples = max_resamples;
            cfg.tol_bits = parse_tol_bits(&tol)?;
            cfg.prime_budget = prime_budget;
            cfg.density_repair = !no_density_repair;
            cfg.allow_large = allow_large;
            let bundle = synthesize(&cfg)?;
            emit(&jsonio::bundle_to_json(&bundle), out.as_ref())?;
            Ok(bundle.certificate.passes())
        }
        Command::Verify {
            path,
            tol,
            prime_budget,
            out,
        } => {
            let v = load_json(&path)?;
            let c = jsonio::game_from_json(&v)?;
            let report = verify_coeffs(&c, parse_tol_bits(&tol)?, prime_budget)?;
            emit(&jsonio::verify_report_to_json(&report), out.as_ref())?;
            Ok(report.certificate.passes())
        }
        Command::Mixedvol { lo, hi, out } => {
            if lo > hi {
                bail!("empty range {lo}..{hi}");
            }
            let mut rows = vec![];
            let mut all_match = true;
            for n in lo..=hi {
                let mv = mixed_volume_full(n)?;
                let dn = derangement(n);
                all_match &= mv == dn;
                rows.push(json!({
                    "n": n,
                    "mixed_volume": mv.to_string(),
                    "derangement": dn.to_string(),
                    "match": mv == dn,
                }));
            }
            emit(&json!({ "rows": rows, "pass": all_match }), out.as_ref())?;
            Ok(all_match)
        }
        Command::Galois {
            path,
            prime_budget,
            out,
        } => {
            let v = load_json(&path)?;
            let p = jsonio::any_poly_from_json(&v)?;
            let density = check_dense(&p)?;
            let irr = certify_irreducible(&p, prime_budget)?;
            let gal = certify_full_symmetric(&p, prime_budget)?;
            let report = jsonio::galois_report_to_json(&density, &irr, &gal);
            let pass = report["pass"].as_bool().unwrap_or(false);
            emit(&report, out.as_ref())?;
            Ok(pass)
        }
        Command::Ne { path, tol, out } => {
            let v = load_json(&path)?;
            let c = jsonio::game_from_json(&v)?;
            let report = enumerate_ne(&c, parse_tol_bits(&tol)?)?;
            emit(&jsonio::ne_report_to_json(&report), out.as_ref())?;
            Ok(report.complete)
        }
    }
}

fn main() {
    match run() {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}
