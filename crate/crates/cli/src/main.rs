use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use curvedwave::euclid_limit::{contracted_profile, convergence_report, spherical_bessel_j};
use curvedwave::hyperbolic::hyperbolic_radial;
use curvedwave::polynomials::{eval_q, unified_q};
use curvedwave::spectrum::{degeneracy, enumerate_levels};
use curvedwave::{
    cos_k, Curvature64, Error as CoreError, HyperbolicRadialSpec64, LimitSequenceSpec64,
};

mod verify;

/// Sample count for the polynomial curves over [0, pi]. Odd so the
/// equator r = pi/2 lands exactly on a grid point.
const CURVE_SAMPLES: usize = 629;

/// Sample count for limit curves and hyperbolic profile dumps.
const DUMP_SAMPLES: usize = 501;

#[derive(Parser)]
#[command(
    name = "curvedwave",
    version,
    about = "Tables, figure datasets, and verification runs for waves on curved 3-space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Energy levels, degeneracies, and quantum numbers on the curved sphere
    Spectrum {
        /// Largest total quantum number N to enumerate
        #[arg(long = "N-max")]
        n_max: u32,
        /// Curvature (must be positive)
        #[arg(long, default_value_t = 1.0)]
        kappa: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Exact radial polynomial coefficients plus sampled curves at kappa = 1
    Polynomials {
        /// Polynomial degrees, comma separated
        #[arg(long = "n", value_delimiter = ',', required = true)]
        n_list: Vec<u32>,
        /// Angular momenta, comma separated
        #[arg(long = "L", value_delimiter = ',', required = true)]
        l_list: Vec<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Flat-space limit: profile curves against the Bessel reference plus a distance table
    Limit {
        /// Angular momentum of the sequence
        #[arg(long = "L")]
        l: u32,
        /// Wavenumber held fixed along the sequence
        #[arg(long)]
        k: f64,
        /// Degrees of the sequence members, comma separated
        #[arg(long = "n", value_delimiter = ',', required = true)]
        n_list: Vec<u32>,
        /// Right edge of the comparison range (must stay inside every member's hemisphere)
        #[arg(long = "r-max")]
        r_max: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Regular radial profile on the hyperbolic space, dumped over rho
    Hyperbolic {
        /// Curvature (must be negative)
        #[arg(long, allow_hyphen_values = true)]
        kappa: f64,
        /// Angular momentum
        #[arg(long = "L")]
        l: u32,
        /// Wavenumber: the energy parameter is k^2
        #[arg(long)]
        k: f64,
        /// Largest rho in the dump
        #[arg(long = "r-max", default_value_t = 5.0)]
        r_max: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run an invariant suite and emit a JSON report; exits 1 if any check fails
    Verify {
        /// Which suite to run
        #[arg(value_enum)]
        suite: verify::Suite,
        /// Override the required tolerance of every tolerance-style check
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub(crate) enum CliError {
    Usage(String),
    Failure(String),
}

/// Parameter problems surface as usage errors; numerical breakdowns
/// inside a legitimate run do not.
pub(crate) fn from_core(e: CoreError) -> CliError {
    match e {
        CoreError::InvalidCurvature { .. }
        | CoreError::CurvatureSign { .. }
        | CoreError::NonpositiveEnergy { .. }
        | CoreError::InvalidLimitSpec { .. } => CliError::Usage(e.to_string()),
        other => CliError::Failure(other.to_string()),
    }
}

/// 17 significant digits, enough to round-trip any f64.
fn fmt17(x: f64) -> String {
    format!("{:.16e}", x)
}

pub(crate) fn write_artifact(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn sibling(out: &Path, suffix: &str) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".into());
    let ext = out
        .extension()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "csv".into());
    out.with_file_name(format!("{stem}_{suffix}.{ext}"))
}

pub(crate) fn json_text(doc: &Value) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("report serializes");
    text.push('\n');
    text
}

fn cmd_spectrum(
    n_max: u32,
    kappa: f64,
    out: Option<&Path>,
    format: Format,
) -> Result<(), CliError> {
    let curvature = Curvature64::new(kappa).map_err(from_core)?;
    let levels = enumerate_levels(n_max, curvature).map_err(from_core)?;
    match format {
        Format::Csv => {
            let mut text =
                String::from("N,n,n_r,L,type,energy_over_kappa,degeneracy_of_N,energy\n");
            for level in &levels {
                text.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    level.n_total,
                    level.n,
                    level.n_r,
                    level.l,
                    level.solution_type,
                    level.energy_coeff,
                    degeneracy(level.n_total),
                    fmt17(level.energy_sq()),
                ));
            }
            write_artifact(out, &text)
        }
        Format::Json => {
            let rows: Vec<Value> = levels
                .iter()
                .map(|level| {
                    json!({
                        "N": level.n_total,
                        "n": level.n,
                        "n_r": level.n_r,
                        "L": level.l,
                        "type": level.solution_type.to_string(),
                        "energy_over_kappa": level.energy_coeff,
                        "degeneracy_of_N": degeneracy(level.n_total),
                        "energy": level.energy_sq(),
                    })
                })
                .collect();
            let doc = json!({ "kappa": kappa, "levels": rows });
            write_artifact(out, &json_text(&doc))
        }
    }
}

fn cmd_polynomials(
    n_list: &[u32],
    l_list: &[u32],
    out: Option<&Path>,
    format: Format,
) -> Result<(), CliError> {
    let kappa = Curvature64::new(1.0).expect("unit curvature");
    let grid: Vec<f64> = (0..CURVE_SAMPLES)
        .map(|i| PI * i as f64 / (CURVE_SAMPLES - 1) as f64)
        .collect();
    let pairs: Vec<(u32, u32)> = n_list
        .iter()
        .flat_map(|&n| l_list.iter().map(move |&l| (n, l)))
        .collect();

    match format {
        Format::Csv => {
            let Some(out) = out else {
                return Err(CliError::Usage(
                    "csv polynomials produce a curve table and a coefficient table; \
                     pass --out so both files have a place to go"
                        .into(),
                ));
            };
            let mut curves = String::from("n,L,r,value\n");
            let mut coeffs = String::from("n,L,power,numerator,denominator\n");
            for &(n, l) in &pairs {
                let poly = unified_q(n, l);
                for (power, c) in poly.coeffs().iter().enumerate() {
                    coeffs.push_str(&format!("{n},{l},{power},{},{}\n", c.numer(), c.denom()));
                }
                for &r in &grid {
                    let value = eval_q(&poly, cos_k(kappa, r));
                    curves.push_str(&format!("{n},{l},{},{}\n", fmt17(r), fmt17(value)));
                }
            }
            write_artifact(Some(out), &curves)?;
            write_artifact(Some(&sibling(out, "coefficients")), &coeffs)
        }
        Format::Json => {
            let entries: Vec<Value> = pairs
                .iter()
                .map(|&(n, l)| {
                    let poly = unified_q(n, l);
                    let values: Vec<f64> = grid
                        .iter()
                        .map(|&r| eval_q(&poly, cos_k(kappa, r)))
                        .collect();
                    let mut entry = poly.to_json();
                    let obj = entry.as_object_mut().expect("entry is an object");
                    obj.insert("r".into(), json!(grid));
                    obj.insert("value".into(), json!(values));
                    entry
                })
                .collect();
            let doc = json!({ "kappa": 1.0, "entries": entries });
            write_artifact(out, &json_text(&doc))
        }
    }
}

fn cmd_limit(
    l: u32,
    k: f64,
    n_list: &[u32],
    r_max: f64,
    out: Option<&Path>,
    format: Format,
) -> Result<(), CliError> {
    let spec = LimitSequenceSpec64 {
        l,
        k,
        n_values: n_list.to_vec(),
        r_max,
    };
    let report = convergence_report(&spec).map_err(from_core)?;
    let grid: Vec<f64> = (0..DUMP_SAMPLES)
        .map(|j| r_max * j as f64 / (DUMP_SAMPLES - 1) as f64)
        .collect();
    let reference: Vec<f64> = grid.iter().map(|&r| spherical_bessel_j(l, k * r)).collect();
    let mut curves: Vec<(u32, Vec<f64>)> = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let profile = contracted_profile(n, l, k).map_err(from_core)?;
        let values: Result<Vec<f64>, _> = grid.iter().map(|&r| profile.eval(r)).collect();
        curves.push((n, values.map_err(from_core)?));
    }

    match format {
        Format::Csv => {
            let Some(out) = out else {
                return Err(CliError::Usage(
                    "csv limit output produces a distance table and a curve table; \
                     pass --out so both files have a place to go"
                        .into(),
                ));
            };
            let mut distances = String::from("L,k,n,kappa_n,sup_distance\n");
            for entry in &report.entries {
                distances.push_str(&format!(
                    "{l},{},{},{},{}\n",
                    fmt17(k),
                    entry.n,
                    fmt17(entry.kappa_n),
                    fmt17(entry.sup_distance),
                ));
            }
            let mut curve_text = String::from("n,r,profile,bessel_reference\n");
            for (n, values) in &curves {
                for (j, &r) in grid.iter().enumerate() {
                    curve_text.push_str(&format!(
                        "{n},{},{},{}\n",
                        fmt17(r),
                        fmt17(values[j]),
                        fmt17(reference[j]),
                    ));
                }
            }
            write_artifact(Some(out), &distances)?;
            write_artifact(Some(&sibling(out, "curves")), &curve_text)
        }
        Format::Json => {
            let entries: Vec<Value> = report
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "n": e.n,
                        "kappa_n": e.kappa_n,
                        "sup_distance": e.sup_distance,
                    })
                })
                .collect();
            let curve_docs: Vec<Value> = curves
                .iter()
                .map(|(n, values)| json!({ "n": n, "profile": values }))
                .collect();
            let doc = json!({
                "L": l,
                "k": k,
                "r_max": r_max,
                "strictly_decreasing": report.strictly_decreasing,
                "entries": entries,
                "r": grid,
                "bessel_reference": reference,
                "curves": curve_docs,
            });
            write_artifact(out, &json_text(&doc))
        }
    }
}

fn cmd_hyperbolic(
    kappa: f64,
    l: u32,
    k: f64,
    rho_max: f64,
    out: Option<&Path>,
    format: Format,
) -> Result<(), CliError> {
    let curvature = Curvature64::new(kappa).map_err(from_core)?;
    let spec = HyperbolicRadialSpec64::new(l, curvature, k * k).map_err(from_core)?;
    if !rho_max.is_finite() || rho_max <= 0.0 {
        return Err(CliError::Usage(format!(
            "r-max must be positive and finite, got {rho_max}"
        )));
    }
    let grid: Vec<f64> = (0..DUMP_SAMPLES)
        .map(|j| rho_max * j as f64 / (DUMP_SAMPLES - 1) as f64)
        .collect();
    let values: Result<Vec<f64>, _> = grid
        .iter()
        .map(|&rho| hyperbolic_radial(&spec, rho))
        .collect();
    let values = values.map_err(from_core)?;

    match format {
        Format::Csv => {
            let mut text = String::from("rho,value\n");
            for (j, &rho) in grid.iter().enumerate() {
                text.push_str(&format!("{},{}\n", fmt17(rho), fmt17(values[j])));
            }
            write_artifact(out, &text)
        }
        Format::Json => {
            let doc = json!({
                "kappa": kappa,
                "L": l,
                "k": k,
                "energy_sq": k * k,
                "rho": grid,
                "value": values,
            });
            write_artifact(out, &json_text(&doc))
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Spectrum {
            n_max,
            kappa,
            out,
            format,
        } => cmd_spectrum(n_max, kappa, out.as_deref(), format).map(|()| ExitCode::SUCCESS),
        Command::Polynomials {
            n_list,
            l_list,
            out,
            format,
        } => cmd_polynomials(&n_list, &l_list, out.as_deref(), format).map(|()| ExitCode::SUCCESS),
        Command::Limit {
            l,
            k,
            n_list,
            r_max,
            out,
            format,
        } => cmd_limit(l, k, &n_list, r_max, out.as_deref(), format).map(|()| ExitCode::SUCCESS),
        Command::Hyperbolic {
            kappa,
            l,
            k,
            r_max,
            out,
            format,
        } => cmd_hyperbolic(kappa, l, k, r_max, out.as_deref(), format).map(|()| ExitCode::SUCCESS),
        Command::Verify { suite, tol, out } => verify::run(suite, tol, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => err.exit(),
    };
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
