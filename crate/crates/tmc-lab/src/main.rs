//! Command-line front end. Machine-readable JSON (or CSV) goes to stdout,
//! human summaries to stderr. Exit codes: 0 success, 1 domain or input
//! error, 2 exact budget exceeded (a bounds-only result is still emitted).

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tmc_lab::coloring::{construct_theorem1, verify_tmc, TotalColoring};
use tmc_lab::error::{Error, Result};
use tmc_lab::formats::{emit_edge_list, emit_graph6, parse_auto, parse_edge_list, parse_graph6};
use tmc_lab::graph::Graph;
use tmc_lab::randgraph::{run_threshold_experiment, ExperimentConfig};
use tmc_lab::solver;
use tmc_lab::theorems::{classify, sweep_crosscheck};
use tmc_lab::SCHEMA;

#[derive(Parser)]
#[command(name = "tmc-lab", version, about = "Total monochromatic connection numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Bounds,
    Classify,
    Auto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file; "-" or omitted reads stdin.
    input: Option<PathBuf>,
    /// Input format; auto detects edge lists by a leading digit.
    #[arg(long, value_enum, default_value = "auto")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Compute tmc(G): exact value, bounds, or a closed-form classification.
    Compute {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value = "auto")]
        mode: Mode,
        /// Largest order the exact solver will attempt.
        #[arg(long, default_value_t = solver::DEFAULT_MAX_N)]
        max_n: usize,
        /// Write stdout payload to this file instead.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a total coloring against the TMC definition.
    Verify {
        /// Graph file; "-" reads stdin.
        input: PathBuf,
        /// Coloring JSON file.
        coloring: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Cross-check theorem rules against the exact solver on every
    /// connected isomorphism class up to the given order.
    Sweep {
        n_max: usize,
        /// Emit the per-class CSV table instead of the JSON report.
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a seeded G(n,p) threshold experiment from a JSON config.
    Random {
        config: PathBuf,
        /// Override the config seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Override the config trial count.
        #[arg(long)]
        trials: Option<usize>,
        /// Emit the per-trial CSV table instead of the JSON summary.
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the constructive coloring with m - n + 2 + l(G) colors.
    Construct {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Convert between graph formats.
    Convert {
        #[command(flatten)]
        graph: GraphInput,
        /// Target format.
        #[arg(long, value_enum)]
        to: ConvertTarget,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertTarget {
    Graph6,
    EdgeList,
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
            .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Invalid(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn read_graph(spec: &GraphInput) -> Result<Graph> {
    let text = read_input(&spec.input)?;
    match spec.format {
        Format::Auto => parse_auto(&text),
        Format::Graph6 => parse_graph6(text.trim()),
        Format::EdgeList => parse_edge_list(&text),
    }
}

fn write_output(output: &Option<PathBuf>, payload: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, payload)
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", p.display()))),
        None => {
            println!("{payload}");
            Ok(())
        }
    }
}

fn init_pool(jobs: Option<usize>) -> Result<()> {
    if let Some(n) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn cmd_compute(
    graph: &GraphInput,
    mode: Mode,
    max_n: usize,
    output: &Option<PathBuf>,
) -> Result<u8> {
    let g = read_graph(graph)?;
    let over_budget = g.n() > max_n || g.m() > 64;
    let base = |mut v: serde_json::Value| {
        let obj = v.as_object_mut().unwrap();
        obj.insert("schema".into(), json!(SCHEMA));
        obj.insert("n".into(), json!(g.n()));
        obj.insert("m".into(), json!(g.m()));
        v
    };
    let (payload, code) = match mode {
        Mode::Bounds => {
            let (lb, ub) = (solver::tmc_lower_bound(&g), solver::tmc_upper_bound(&g));
            eprintln!("bounds: {lb} <= tmc <= {ub}");
            (base(json!({"method": "bounds-only", "lb": lb, "ub": ub})), 0)
        }
        Mode::Classify => {
            let v = classify(&g);
            eprintln!(
                "classify: rule {} value {:?} bounds {:?}",
                v.rule.name(),
                v.value,
                v.bounds
            );
            let fired: Vec<&str> = v.fired.iter().map(|&(r, _)| r.name()).collect();
            (
                base(json!({
                    "method": v.rule.name(),
                    "tmc": v.value,
                    "fired": fired,
                    "witness": v.witness,
                    "lb": v.bounds.0,
                    "ub": v.bounds.1,
                })),
                0,
            )
        }
        Mode::Exact | Mode::Auto => {
            if mode == Mode::Auto {
                let v = classify(&g);
                if let Some(value) = v.value {
                    eprintln!("classified: tmc = {value} via {}", v.rule.name());
                    let payload =
                        base(json!({"method": v.rule.name(), "tmc": value, "witness": v.witness}));
                    write_output(output, &serde_json::to_string_pretty(&payload).unwrap())?;
                    return Ok(0);
                }
            }
            if over_budget {
                let out = solver::tmc_with_budget(&g, max_n);
                let (lb, ub) = out.bounds();
                eprintln!("budget exceeded (n > {max_n}); bounds: {lb} <= tmc <= {ub}");
                (base(json!({"method": out.method, "lb": lb, "ub": ub})), 2)
            } else {
                let out = solver::tmc_exact(&g);
                let value = out.exact_value().expect("within budget");
                eprintln!("tmc = {value} via {}", out.method);
                let certificate = out.certificate.as_ref().map(|c| c.to_json());
                (
                    base(json!({
                        "method": out.method,
                        "tmc": value,
                        "certificate": certificate,
                    })),
                    0,
                )
            }
        }
    };
    write_output(output, &serde_json::to_string_pretty(&payload).unwrap())?;
    Ok(code)
}

fn cmd_verify(graph: &GraphInput, coloring: &PathBuf, output: &Option<PathBuf>) -> Result<u8> {
    let g = read_graph(graph)?;
    let text = fs::read_to_string(coloring)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", coloring.display())))?;
    let col = TotalColoring::from_json(&text)?;
    let outcome = verify_tmc(&g, &col)?;
    let payload = json!({
        "schema": SCHEMA,
        "ok": outcome.ok,
        "num_colors": col.num_colors(),
        "failing_pair": outcome.failing_pair,
    });
    match outcome.failing_pair {
        None => eprintln!("valid TMC-coloring with {} colors", col.num_colors()),
        Some((u, v)) => eprintln!("not a TMC-coloring: pair ({u}, {v}) unconnected"),
    }
    write_output(output, &serde_json::to_string_pretty(&payload).unwrap())?;
    Ok(if outcome.ok { 0 } else { 1 })
}

fn cmd_sweep(n_max: usize, csv: bool, output: &Option<PathBuf>) -> Result<u8> {
    let report = sweep_crosscheck(n_max)?;
    eprintln!(
        "sweep n <= {n_max}: {} classes, {} discrepancies",
        report.classes,
        report.discrepancies.len()
    );
    let payload = if csv {
        report.to_csv()
    } else {
        serde_json::to_string_pretty(&json!({
            "schema": SCHEMA,
            "classes": report.classes,
            "pass": report.pass(),
            "discrepancies": report.discrepancies,
            "rows": report.rows,
        }))
        .unwrap()
    };
    write_output(output, &payload)?;
    Ok(if report.pass() { 0 } else { 1 })
}

fn cmd_random(
    config: &PathBuf,
    seed: Option<u64>,
    trials: Option<usize>,
    csv: bool,
    output: &Option<PathBuf>,
) -> Result<u8> {
    let text = fs::read_to_string(config)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", config.display())))?;
    let mut cfg: ExperimentConfig =
        serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("config: {e}")))?;
    if let Some(s) = seed {
        cfg.seed = s;
    }
    if let Some(t) = trials {
        cfg.trials = t;
    }
    let result = run_threshold_experiment(&cfg)?;
    for s in &result.summaries {
        eprintln!(
            "n={} p={:.5} yes={:.3} no={:.3} unknown={:.3} connected={:.3}",
            s.n, s.p, s.yes_fraction, s.no_fraction, s.unknown_fraction, s.connected_fraction
        );
    }
    let payload = if csv {
        result.to_csv()
    } else {
        serde_json::to_string_pretty(&json!({
            "schema": SCHEMA,
            "config": cfg,
            "summaries": result.summaries,
        }))
        .unwrap()
    };
    write_output(output, &payload)?;
    Ok(0)
}

fn cmd_construct(graph: &GraphInput, output: &Option<PathBuf>) -> Result<u8> {
    let g = read_graph(graph)?;
    let col = construct_theorem1(&g)?;
    debug_assert!(verify_tmc(&g, &col)?.ok);
    eprintln!("constructed TMC-coloring with {} colors", col.num_colors());
    write_output(output, &serde_json::to_string_pretty(&col.to_json()).unwrap())?;
    Ok(0)
}

fn cmd_convert(graph: &GraphInput, to: ConvertTarget, output: &Option<PathBuf>) -> Result<u8> {
    let g = read_graph(graph)?;
    let payload = match to {
        ConvertTarget::Graph6 => emit_graph6(&g)?,
        ConvertTarget::EdgeList => emit_edge_list(&g).trim_end().to_string(),
    };
    write_output(output, &payload)?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    match &cli.command {
        Command::Compute { graph, mode, max_n, output } => {
            cmd_compute(graph, *mode, *max_n, output)
        }
        Command::Verify { input, coloring, format, output } => {
            let graph = GraphInput { input: Some(input.clone()), format: *format };
            cmd_verify(&graph, coloring, output)
        }
        Command::Sweep { n_max, csv, jobs, output } => {
            init_pool(*jobs)?;
            cmd_sweep(*n_max, *csv, output)
        }
        Command::Random { config, seed, trials, csv, jobs, output } => {
            init_pool(*jobs)?;
            cmd_random(config, *seed, *trials, *csv, output)
        }
        Command::Construct { graph, output } => cmd_construct(graph, output),
        Command::Convert { graph, to, output } => cmd_convert(graph, *to, output),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
