//! Command-line front end for the rendezvous toolkit: code
//! construction and verification, exact failure probabilities, Monte
//! Carlo simulation, parameter sweeps, lower-bound tables, graph games,
//! and prebuilt experiment recipes.
//!
//! Exit codes: 0 success, 1 a built-in comparison failed, 2 usage or
//! domain error.

mod output;
mod recipes;

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use rdv_bounds::{abcd_min_bound, four_n_lower_bound, uniform_bound_equal_wait, uniform_bound_general};
use rdv_codes::{
    build_base_b_code, build_binary_code, build_padded_code, verify_rendezvous_code,
    RendezvousCode,
};
use rdv_core::WalkSchedule;
use rdv_exact::{exact_pair_failure, exact_strategy_failure, permanent, FiniteSupportDist, ResidualMatrix};
use rdv_graphs::{Graph, GraphStrategy};
use rdv_sim::{estimate_expected_time, estimate_failure, sweep, Setting, SimConfig, SweepAxis};
use rdv_strategies::{aw_optimal_failure, Strategy};
use serde_json::json;

use output::{csv_artifact, emit, fmt_f64, json_artifact};

#[derive(Parser)]
#[command(name = "rdv-cli", version, about = "Rendezvous strategy toolkit")]
struct Cli {
    /// Worker thread count; results never depend on this setting.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build or check rendezvous codes.
    Code {
        #[command(subcommand)]
        cmd: CodeCmd,
    },
    /// Exact failure probabilities and matrix permanents.
    Exact {
        #[command(subcommand)]
        cmd: ExactCmd,
    },
    /// Monte Carlo failure or expected-time estimate on the complete graph.
    Simulate(SimulateArgs),
    /// Failure estimates across a parameter grid, as CSV.
    Sweep(SweepArgs),
    /// Reference tables of lower bounds.
    Bounds {
        #[command(subcommand)]
        cmd: BoundsCmd,
    },
    /// Rendezvous games on cycles, circulants, and hypercubes.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Prebuilt experiments with built-in pass/fail checks.
    Recipe {
        #[command(subcommand)]
        cmd: RecipeCmd,
    },
}

#[derive(Subcommand)]
enum CodeCmd {
    /// Print a code as JSON, e.g. `code gen binary:d=2`.
    Gen {
        /// binary:d=D | padded:n=N | baseb:a=A:b=B:k=K
        descriptor: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the embedded waiter/wanderer property of every row pair.
    Verify { descriptor: String },
}

#[derive(Subcommand)]
enum ExactCmd {
    /// Exact failure probability of one schedule pair.
    Pair {
        #[arg(long)]
        n: usize,
        #[arg(long = "T")]
        t: usize,
        /// Comma-separated labels, 0 meaning wait.
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact failure probability of a finite-support strategy.
    Strategy {
        #[arg(long)]
        strategy: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "T")]
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Permanent of a 0/1 matrix given as JSON rows.
    Permanent {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long = "T")]
    t: usize,
    /// e.g. aw:0.2689, code:binary:d=10, uniform, wfm:waiter
    #[arg(long)]
    strategy: String,
    /// Partner strategy for asymmetric pairs.
    #[arg(long)]
    strategy2: Option<String>,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Estimate mean meeting time (censored at 20n) instead of failure.
    #[arg(long)]
    expected_time: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    strategy: String,
    #[arg(long, default_value_t = 20_000)]
    trials: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Horizon grid start:stop:step (inclusive).
    #[arg(long = "T-grid")]
    t_grid: Option<String>,
    /// Comma-separated wait probabilities; needs an aw strategy.
    #[arg(long)]
    theta_grid: Option<String>,
    /// Horizon used with --theta-grid (default n).
    #[arg(long = "T")]
    t: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// CSV of failure lower bounds over a horizon grid.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long = "T-grid")]
        t_grid: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Simulate a graph strategy against a uniform automorphism.
    Sim {
        /// cycle:N | circulant:N:K | hypercube:D
        #[arg(long)]
        graph: String,
        /// alpern | velocity | hamiltonian[:k=K]
        #[arg(long)]
        strategy: String,
        #[arg(long = "T")]
        t: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Count edge crossings as meetings (default: on for cycles).
        #[arg(long)]
        edge_meeting: Option<bool>,
        #[arg(long)]
        expected_time: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum RecipeCmd {
    /// Run a named recipe; exit 1 if its checks fail.
    Run {
        name: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List available recipes.
    List,
}

fn main() {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // A process-global pool; per-trial seeding keeps results
        // independent of its size.
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: cannot size the worker pool: {e}");
            std::process::exit(2);
        }
    }
    match dispatch(cli.command) {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

/// RDV_SEED overrides any --seed argument.
fn resolve_seed(arg: u64) -> Result<u64, String> {
    match std::env::var("RDV_SEED") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("RDV_SEED = {v:?} is not a u64")),
        Err(_) => Ok(arg),
    }
}

fn dispatch(command: Command) -> Result<bool, String> {
    match command {
        Command::Code { cmd } => run_code(cmd),
        Command::Exact { cmd } => run_exact(cmd),
        Command::Simulate(args) => run_simulate(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Bounds { cmd } => run_bounds(cmd),
        Command::Graph { cmd } => run_graph(cmd),
        Command::Recipe { cmd } => run_recipe(cmd),
    }
}

fn build_code(descriptor: &str) -> Result<RendezvousCode, String> {
    // Code descriptors are strategy descriptors without the `code:` prefix.
    let strategy = Strategy::parse(&format!("code:{descriptor}"))
        .or_else(|_| Strategy::parse(descriptor))
        .map_err(|e| e.to_string())?;
    match strategy {
        Strategy::Binary { d } => build_binary_code(d).map_err(|e| e.to_string()),
        Strategy::Padded { n } => build_padded_code(n).map_err(|e| e.to_string()),
        Strategy::BaseB { a, b, k, .. } => {
            build_base_b_code(a, b, k, None).map_err(|e| e.to_string())
        }
        _ => Err(format!("{descriptor:?} does not name a code")),
    }
}

fn run_code(cmd: CodeCmd) -> Result<bool, String> {
    match cmd {
        CodeCmd::Gen { descriptor, out } => {
            let code = build_code(&descriptor)?;
            let rows: Vec<&[u32]> = code.rows().iter().map(|r| r.steps()).collect();
            let artifact = json_artifact(
                json!({ "command": "code gen", "descriptor": descriptor }),
                None,
                json!({
                    "n": code.n(),
                    "t_len": code.t_len(),
                    "size": code.size(),
                    "rows": rows,
                }),
            );
            emit(out.as_deref(), &artifact)?;
            Ok(true)
        }
        CodeCmd::Verify { descriptor } => {
            let code = build_code(&descriptor)?;
            let witness = verify_rendezvous_code(&code);
            let artifact = json_artifact(
                json!({ "command": "code verify", "descriptor": descriptor }),
                None,
                json!({
                    "is_valid": witness.is_valid(),
                    "first_violation": witness.first_violation().map(|v| format!("{v:?}")),
                }),
            );
            emit(None, &artifact)?;
            Ok(witness.is_valid())
        }
    }
}

fn parse_schedule(n: usize, text: &str) -> Result<WalkSchedule, String> {
    let steps: Vec<u32> = text
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| format!("bad label {s:?}")))
        .collect::<Result<_, _>>()?;
    WalkSchedule::new(n, steps).map_err(|e| e.to_string())
}

fn run_exact(cmd: ExactCmd) -> Result<bool, String> {
    match cmd {
        ExactCmd::Pair { n, t, x, y, out } => {
            let x = parse_schedule(n, &x)?;
            let y = parse_schedule(n, &y)?;
            let p = exact_pair_failure(&x, &y, t).map_err(|e| e.to_string())?;
            let artifact = json_artifact(
                json!({ "command": "exact pair", "n": n, "T": t }),
                None,
                json!({ "failure": p.to_string(), "failure_f64": p.to_f64() }),
            );
            emit(out.as_deref(), &artifact)?;
            Ok(true)
        }
        ExactCmd::Strategy {
            strategy,
            n,
            t,
            out,
        } => {
            let descriptor = Strategy::parse(&strategy).map_err(|e| e.to_string())?;
            let dist = finite_support(&descriptor, n)?;
            let p = exact_strategy_failure(&dist, t).map_err(|e| e.to_string())?;
            let artifact = json_artifact(
                json!({ "command": "exact strategy", "strategy": descriptor, "n": n, "T": t }),
                None,
                json!({ "failure": p.to_string(), "failure_f64": p.to_f64() }),
            );
            emit(out.as_deref(), &artifact)?;
            Ok(true)
        }
        ExactCmd::Permanent { matrix, out } => {
            let rows: Vec<Vec<u8>> =
                serde_json::from_str(&matrix).map_err(|e| format!("bad matrix JSON: {e}"))?;
            let m = rows.len();
            let mut zeroes = BTreeSet::new();
            for (i, row) in rows.iter().enumerate() {
                if row.len() != m {
                    return Err("matrix must be square".into());
                }
                for (j, &v) in row.iter().enumerate() {
                    match v {
                        0 => {
                            zeroes.insert((i, j));
                        }
                        1 => {}
                        _ => return Err(format!("entry {v} is not 0/1")),
                    }
                }
            }
            let residual = ResidualMatrix::new(m, zeroes).map_err(|e| e.to_string())?;
            let value = permanent(&residual).map_err(|e| e.to_string())?;
            let artifact = json_artifact(
                json!({ "command": "exact permanent", "m": m }),
                None,
                json!({ "permanent": value.to_string() }),
            );
            emit(out.as_deref(), &artifact)?;
            Ok(true)
        }
    }
}

/// The exact engine needs an explicit finite support; code strategies
/// become the uniform distribution over their rows.
fn finite_support(strategy: &Strategy, n: usize) -> Result<FiniteSupportDist, String> {
    let uniform_rows = |code: RendezvousCode| {
        FiniteSupportDist::uniform(code.rows().to_vec()).map_err(|e| e.to_string())
    };
    match strategy {
        Strategy::Binary { d } => uniform_rows(build_binary_code(*d).map_err(|e| e.to_string())?),
        Strategy::Padded { n } => uniform_rows(build_padded_code(*n).map_err(|e| e.to_string())?),
        Strategy::BaseB { a, b, k, .. } => {
            uniform_rows(build_base_b_code(*a, *b, *k, None).map_err(|e| e.to_string())?)
        }
        Strategy::FiniteSupport {
            schedules,
            probabilities,
        } => {
            let probs: Vec<BigRational> = probabilities
                .iter()
                .map(|&p| {
                    BigRational::from_float(p).ok_or_else(|| format!("bad probability {p}"))
                })
                .collect::<Result<_, _>>()?;
            FiniteSupportDist::new(schedules.clone(), probs).map_err(|e| e.to_string())
        }
        other => {
            let _ = n;
            Err(format!("{other:?} has no finite support; use simulate"))
        }
    }
}

fn build_strategy_config(args: &SimulateArgs, seed: u64) -> Result<SimConfig, String> {
    let strategy = Strategy::parse(&args.strategy).map_err(|e| e.to_string())?;
    let strategy2 = args
        .strategy2
        .as_deref()
        .map(Strategy::parse)
        .transpose()
        .map_err(|e| e.to_string())?;
    Ok(SimConfig {
        n: args.n,
        t: args.t,
        trials: args.trials,
        seed,
        setting: Setting::Complete {
            strategy,
            strategy2,
        },
    })
}

fn run_simulate(args: SimulateArgs) -> Result<bool, String> {
    let seed = resolve_seed(args.seed)?;
    let cfg = build_strategy_config(&args, seed)?;
    let result = if args.expected_time {
        let et = estimate_expected_time(&cfg).map_err(|e| e.to_string())?;
        serde_json::to_value(&et).expect("encodes")
    } else {
        let est = estimate_failure(&cfg).map_err(|e| e.to_string())?;
        serde_json::to_value(est).expect("encodes")
    };
    let artifact = json_artifact(
        json!({ "command": "simulate", "sim": cfg, "expected_time": args.expected_time }),
        Some(seed),
        result,
    );
    emit(args.out.as_deref(), &artifact)?;
    Ok(true)
}

/// Parses `start:stop:step` into an inclusive grid.
fn parse_grid(text: &str) -> Result<Vec<usize>, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let [start, stop, step] = parts.as_slice() else {
        return Err(format!("grid {text:?} is not start:stop:step"));
    };
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad grid number {s:?}"))
    };
    let (start, stop, step) = (parse(start)?, parse(stop)?, parse(step)?);
    if step == 0 || stop < start {
        return Err(format!("grid {text:?} is empty or has step 0"));
    }
    Ok((start..=stop).step_by(step).collect())
}

fn run_sweep(args: SweepArgs) -> Result<bool, String> {
    let seed = resolve_seed(args.seed)?;
    let strategy = Strategy::parse(&args.strategy).map_err(|e| e.to_string())?;
    let (axis, param_name) = match (&args.t_grid, &args.theta_grid) {
        (Some(g), None) => {
            // Horizon 0 points are skipped; failure there is trivially 1.
            let grid: Vec<usize> = parse_grid(g)?.into_iter().filter(|&t| t > 0).collect();
            (SweepAxis::Horizon(grid), "T")
        }
        (None, Some(g)) => {
            let thetas: Vec<f64> = g
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| format!("bad theta {s:?}"))
                })
                .collect::<Result<_, _>>()?;
            (SweepAxis::Theta(thetas), "theta")
        }
        _ => return Err("give exactly one of --T-grid or --theta-grid".into()),
    };
    let template = SimConfig {
        n: args.n,
        t: args.t.unwrap_or(args.n),
        trials: args.trials,
        seed,
        setting: Setting::Complete {
            strategy,
            strategy2: None,
        },
    };
    let points = sweep(&template, &axis).map_err(|e| e.to_string())?;
    let rows: Vec<String> = points
        .iter()
        .map(|p| {
            let e = &p.estimate;
            format!(
                "{param_name},{},{},{},{},{},{}",
                fmt_f64(p.param),
                fmt_f64(e.point),
                fmt_f64(e.ci_low),
                fmt_f64(e.ci_high),
                e.trials,
                e.seed
            )
        })
        .collect();
    let config = json!({ "command": "sweep", "template": template, "axis": axis });
    let artifact = csv_artifact(
        &config,
        Some(seed),
        "param,point,ci_low,ci_high,trials,seed",
        &rows,
    );
    emit(args.out.as_deref(), &artifact)?;
    Ok(true)
}

fn run_bounds(cmd: BoundsCmd) -> Result<bool, String> {
    let BoundsCmd::Table { n, t_grid, out } = cmd;
    if n == 0 {
        return Err("n must be positive".into());
    }
    let grid = parse_grid(&t_grid)?;
    let rows: Vec<String> = grid
        .iter()
        .map(|&t| {
            let u = t as f64 / n as f64;
            let thm5 = four_n_lower_bound((4.0 - u).clamp(0.0, 4.0)).expect("delta in range");
            // One optimal wait/wander round per n steps; fractional
            // exponent interpolates between full rounds.
            let aw_opt = if t == 0 {
                1.0
            } else if t <= n {
                aw_optimal_failure(t, n).expect("0 < T <= n")
            } else {
                aw_optimal_failure(n, n).expect("valid").powf(u)
            };
            format!(
                "{t},{},{},{},{},{}",
                fmt_f64(abcd_min_bound(t, n)),
                fmt_f64(uniform_bound_general(t, n)),
                fmt_f64(uniform_bound_equal_wait(t, n)),
                fmt_f64(thm5),
                fmt_f64(aw_opt)
            )
        })
        .collect();
    let config = json!({ "command": "bounds table", "n": n, "T_grid": t_grid });
    let artifact = csv_artifact(
        &config,
        None,
        "T,eq_abcd_min,eq_1T2n,eq_1T4n,thm5,aw_opt",
        &rows,
    );
    emit(out.as_deref(), &artifact)?;
    Ok(true)
}

fn run_graph(cmd: GraphCmd) -> Result<bool, String> {
    let GraphCmd::Sim {
        graph,
        strategy,
        t,
        trials,
        seed,
        edge_meeting,
        expected_time,
        out,
    } = cmd;
    let seed = resolve_seed(seed)?;
    let graph = Graph::parse(&graph).map_err(|e| e.to_string())?;
    let strategy = GraphStrategy::parse(&strategy).map_err(|e| e.to_string())?;
    let edge_meeting = edge_meeting.unwrap_or(matches!(graph, Graph::Cycle { .. }));
    let cfg = SimConfig {
        n: graph.num_vertices(),
        t,
        trials,
        seed,
        setting: Setting::Graph {
            graph,
            strategy,
            edge_meeting,
        },
    };
    let result = if expected_time {
        serde_json::to_value(estimate_expected_time(&cfg).map_err(|e| e.to_string())?)
    } else {
        serde_json::to_value(estimate_failure(&cfg).map_err(|e| e.to_string())?)
    }
    .expect("encodes");
    let artifact = json_artifact(
        json!({ "command": "graph sim", "sim": cfg, "expected_time": expected_time }),
        Some(seed),
        result,
    );
    emit(out.as_deref(), &artifact)?;
    Ok(true)
}

fn run_recipe(cmd: RecipeCmd) -> Result<bool, String> {
    match cmd {
        RecipeCmd::List => {
            for name in recipes::RECIPES {
                println!("{name}");
            }
            Ok(true)
        }
        RecipeCmd::Run { name, seed, out } => {
            let seed = resolve_seed(seed)?;
            let outcome = recipes::run(&name, seed)?;
            emit(out.as_deref(), &outcome.artifact)?;
            Ok(outcome.pass)
        }
    }
}
