//! Command-line front door.
//!
//! Every command reads sets as JSON files, point clouds as CSV, prints one
//! deterministic JSON report to standard output (keys sorted, floats at 12
//! significant digits, newline-terminated) and exits 0 on success, 1 when a
//! computation is refused because a hypothesis could not be certified, and
//! 2 on input errors. Sampled audits draw from a seeded generator; the seed
//! appears in the report of every command that samples.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::defaults::{BRACKET_INIT, DEFAULT_TOL, MAX_DOUBLINGS};
use crate::efficiency::{eff, weff, PointCloud};
use crate::error::{Error, Result};
use crate::jsonfmt;
use crate::norms::{order_unit_norm, OrderUnitSpec};
use crate::order::{min_via_eff, DominationRelation};
use crate::phi::PhiProblem;
use crate::sampling::seeded;
use crate::scalarize::{
    bound_scalarize, characterize_eff, characterize_weff, reference_scalarize, separate,
    Orientation,
};
use crate::sets::SetExpr;
use crate::suites::{run_all, run_suite, SuiteConfig, SUITE_NAMES};
use crate::vector::Vector;

#[derive(Debug, Parser)]
#[command(
    name = "uslev",
    about = "Scalarizing functionals with uniform sublevel sets; efficient points of finite outcome sets",
    version
)]
pub struct Cli {
    /// Seed for every sampled audit in the invoked command.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the scalarizing functional at a point.
    Phi {
        /// Set expression JSON file (the set A).
        #[arg(long)]
        set: String,
        /// Direction k as a comma-separated list.
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        /// Evaluation point as a comma-separated list.
        #[arg(long, required_unless_present = "dump_grid", allow_hyphen_values = true)]
        point: Option<String>,
        /// Force the bisection path instead of the closed form.
        #[arg(long)]
        oracle: bool,
        /// Emit a raw value grid "x0,x1,y0,y1,nx,ny" (2-D sets only).
        #[arg(long, allow_hyphen_values = true)]
        dump_grid: Option<String>,
    },
    /// Order-unit norm of a point with respect to a cone and unit.
    Norm {
        /// Cone expression JSON file.
        #[arg(long)]
        cone: String,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Efficient (or weakly efficient) points of a CSV cloud.
    Eff {
        #[arg(long)]
        points: String,
        /// Domination set JSON file.
        #[arg(long)]
        set: String,
        /// Use the algebraic interior of the set.
        #[arg(long)]
        weak: bool,
    },
    /// Minimal points of the relation induced by a domination set.
    Min {
        #[arg(long)]
        points: String,
        #[arg(long)]
        set: String,
    },
    /// Pointwise characterization of the (weakly) efficient set.
    Characterize {
        #[arg(long)]
        points: String,
        #[arg(long)]
        set: String,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long)]
        weak: bool,
    },
    /// Reference-point scalarization with certificates.
    Scalarize {
        #[arg(long)]
        points: String,
        /// Shape set H (JSON file).
        #[arg(long)]
        set: String,
        /// Reference point a.
        #[arg(long = "ref", allow_hyphen_values = true)]
        reference: String,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        /// Domination set D (JSON file).
        #[arg(long)]
        dom: String,
    },
    /// Bound-anchored characterization with per-point directions.
    Bound {
        #[arg(long)]
        points: String,
        #[arg(long)]
        set: String,
        #[arg(long = "ref", allow_hyphen_values = true)]
        reference: String,
        /// "below" (cloud under the reference) or "above".
        #[arg(long)]
        orientation: String,
    },
    /// Separate a set from a cloud of points by the functional's sign.
    Separate {
        #[arg(long)]
        set: String,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long)]
        points: String,
    },
    /// Run the seeded property suites.
    Check {
        /// Suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        /// Sample-size scale; 0 runs everything vacuously.
        #[arg(long, default_value_t = 1)]
        sizes: usize,
        /// List available suites and exit.
        #[arg(long)]
        list: bool,
    },
}

pub fn main_entry() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

/// Runs a parsed command, returning the stdout payload and the exit code.
pub fn run(cli: Cli) -> Result<(String, u8)> {
    let tol = tolerance_from_env()?;
    let seed = cli.seed;
    match cli.command {
        Command::Phi {
            set,
            k,
            point,
            oracle,
            dump_grid,
        } => {
            let set = parse_set(&set)?;
            let k = Vector::parse(&k)?;
            let problem = PhiProblem::new(set, k, tol)?;
            if let Some(grid_spec) = dump_grid {
                let value = dump_grid_report(&problem, &grid_spec, oracle)?;
                return Ok((jsonfmt::render(&value), 0));
            }
            let y = Vector::parse(&point.expect("clap enforces --point"))?;
            let value = if oracle {
                problem.eval_oracle(&y, BRACKET_INIT, MAX_DOUBLINGS)?
            } else {
                problem.evaluate(&y)?
            };
            let report = json!({
                "class": value.class_name(),
                "phi": jsonfmt::ext(value),
            });
            Ok((jsonfmt::render(&report), 0))
        }
        Command::Norm { cone, k, point } => {
            let cone = parse_set(&cone)?;
            let unit = Vector::parse(&k)?;
            let y = Vector::parse(&point)?;
            let spec = OrderUnitSpec::new(cone, unit, tol)?;
            let norm = order_unit_norm(&spec, &y)?;
            let mut report = json!({ "norm": jsonfmt::number(norm) });
            if !spec.warnings().is_empty() {
                report["warnings"] = json!(spec.warnings());
            }
            Ok((jsonfmt::render(&report), 0))
        }
        Command::Eff { points, set, weak } => {
            let cloud = parse_points(&points)?;
            let set = parse_set(&set)?;
            let result = if weak {
                weff(&cloud, &set, tol)?
            } else {
                eff(&cloud, &set, tol)?
            };
            Ok((jsonfmt::render(&jsonfmt::normalized(&result)), 0))
        }
        Command::Min { points, set } => {
            let cloud = parse_points(&points)?;
            let set = parse_set(&set)?;
            let indices = min_via_eff(&set, &cloud, tol)?;
            // Cross-check against the relation route; the two are provably
            // equal for a constant domination set.
            let relation = DominationRelation::new(set, tol)?;
            debug_assert_eq!(indices, relation.min_points(&cloud)?);
            Ok((jsonfmt::render(&jsonfmt::indices(&indices)), 0))
        }
        Command::Characterize {
            points,
            set,
            k,
            weak,
        } => {
            let cloud = parse_points(&points)?;
            let set = parse_set(&set)?;
            let k = Vector::parse(&k)?;
            let mut rng = seeded(seed);
            let outcome = if weak {
                characterize_weff(&cloud, &set, &k, tol, &mut rng)?
            } else {
                characterize_eff(&cloud, &set, &k, tol)?
            };
            let mut value = jsonfmt::normalized(&outcome);
            value["seed"] = json!(seed);
            Ok((jsonfmt::render(&value), 0))
        }
        Command::Scalarize {
            points,
            set,
            reference,
            k,
            dom,
        } => {
            let cloud = parse_points(&points)?;
            let shape = parse_set(&set)?;
            let domination = parse_set(&dom)?;
            let anchor = Vector::parse(&reference)?;
            let k = Vector::parse(&k)?;
            let mut rng = seeded(seed);
            let report =
                reference_scalarize(&cloud, &shape, &anchor, &k, &domination, tol, &mut rng)?;
            let mut value = jsonfmt::normalized(&report);
            value["seed"] = json!(seed);
            Ok((jsonfmt::render(&value), 0))
        }
        Command::Bound {
            points,
            set,
            reference,
            orientation,
        } => {
            let cloud = parse_points(&points)?;
            let set = parse_set(&set)?;
            let anchor = Vector::parse(&reference)?;
            let orientation: Orientation = orientation.parse()?;
            let report = bound_scalarize(&cloud, &set, &anchor, orientation, tol)?;
            Ok((jsonfmt::render(&jsonfmt::normalized(&report)), 0))
        }
        Command::Separate { set, k, points } => {
            let set = parse_set(&set)?;
            let k = Vector::parse(&k)?;
            let cloud = parse_points(&points)?;
            let mut rng = seeded(seed);
            let report = separate(&set, &k, &cloud, tol, &mut rng)?;
            let mut value = jsonfmt::normalized(&report);
            value["seed"] = json!(seed);
            Ok((jsonfmt::render(&value), 0))
        }
        Command::Check { suite, sizes, list } => {
            if list {
                let value = json!({ "suites": SUITE_NAMES });
                return Ok((jsonfmt::render(&value), 0));
            }
            let cfg = SuiteConfig { seed, scale: sizes };
            let outcomes = if suite == "all" {
                run_all(&cfg)?
            } else {
                vec![run_suite(&suite, &cfg)?]
            };
            let mut text = String::new();
            let mut failures = 0;
            for outcome in &outcomes {
                if !outcome.passed {
                    failures += 1;
                }
                text.push_str(&jsonfmt::render(&jsonfmt::normalized(outcome)));
            }
            let mut summary = json!({
                "seed": seed,
                "sizes": sizes,
                "suites": outcomes.len(),
                "failures": failures,
            });
            if sizes == 0 {
                summary["warning"] = json!("sizes=0: every suite passed vacuously");
            }
            text.push_str(&jsonfmt::render(&summary));
            Ok((text, if failures > 0 { 1 } else { 0 }))
        }
    }
}

fn tolerance_from_env() -> Result<f64> {
    match std::env::var("USLEV_TOL") {
        Ok(raw) => {
            let tol: f64 = raw.parse().map_err(|_| {
                Error::InvalidInput(format!("USLEV_TOL must be a number, got \"{raw}\""))
            })?;
            if !(tol > 0.0) || !tol.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "USLEV_TOL must be a positive real, got {tol}"
                )));
            }
            Ok(tol)
        }
        Err(_) => Ok(DEFAULT_TOL),
    }
}

/// Reads and validates a set expression from a JSON file.
pub fn parse_set(path: &str) -> Result<SetExpr> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.into(),
        source,
    })?;
    let set: SetExpr = serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.into(),
        source,
    })?;
    set.validate()
        .map_err(|e| Error::InvalidSet(format!("{path}: {e}")))?;
    Ok(set)
}

pub fn parse_points(path: &str) -> Result<PointCloud> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.into(),
        source,
    })?;
    PointCloud::from_csv_str(&text).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))
}

fn dump_grid_report(problem: &PhiProblem, spec: &str, oracle: bool) -> Result<Value> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() != 6 {
        return Err(Error::InvalidInput(
            "grid spec must be \"x0,x1,y0,y1,nx,ny\"".into(),
        ));
    }
    let x0: f64 = parts[0].parse().map_err(|_| bad_grid(parts[0]))?;
    let x1: f64 = parts[1].parse().map_err(|_| bad_grid(parts[1]))?;
    let y0: f64 = parts[2].parse().map_err(|_| bad_grid(parts[2]))?;
    let y1: f64 = parts[3].parse().map_err(|_| bad_grid(parts[3]))?;
    let nx: usize = parts[4].parse().map_err(|_| bad_grid(parts[4]))?;
    let ny: usize = parts[5].parse().map_err(|_| bad_grid(parts[5]))?;
    if problem.direction.dim() != 2 {
        return Err(Error::Unsupported("grid dumps are two-dimensional".into()));
    }
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidInput("grid needs at least 2x2 nodes".into()));
    }
    let xs: Vec<f64> = (0..nx)
        .map(|i| x0 + (x1 - x0) * i as f64 / (nx - 1) as f64)
        .collect();
    let ys: Vec<f64> = (0..ny)
        .map(|j| y0 + (y1 - y0) * j as f64 / (ny - 1) as f64)
        .collect();
    let mut rows = Vec::with_capacity(ny);
    for &yv in &ys {
        let mut row = Vec::with_capacity(nx);
        for &xv in &xs {
            let p = Vector::new(vec![xv, yv]).unwrap();
            let value = if oracle {
                problem.eval_oracle(&p, BRACKET_INIT, MAX_DOUBLINGS)?
            } else {
                problem.evaluate(&p)?
            };
            row.push(jsonfmt::ext(value));
        }
        rows.push(Value::Array(row));
    }
    Ok(json!({
        "xs": xs.iter().map(|v| jsonfmt::number(*v)).collect::<Vec<_>>(),
        "ys": ys.iter().map(|v| jsonfmt::number(*v)).collect::<Vec<_>>(),
        "values": Value::Array(rows),
    }))
}

fn bad_grid(token: &str) -> Error {
    Error::InvalidInput(format!("grid spec token \"{token}\" is not a number"))
}
