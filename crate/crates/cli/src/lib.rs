//! Argument parsing and dispatch for the `ccpareto` binary.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use ccpareto::harness::{
    emit_tables, erdos_renyi, gen_domset_setting, gen_instance_i, load_config, load_graph,
    random_uniform_instance, read_csv, read_instance, render_table, run_experiment,
    write_instance, DomsetSetting, ExperimentConfig, GraphFormat, Instance, TableFormat,
    PAPER_BUDGET,
};
use ccpareto::oracles::{
    brute_force_front, extreme_point_set, greedy_uniform, kruskal_lambda, BruteForceFront,
};
use ccpareto::{BiObjective, Error, ObjectiveVector, SplitMix64};
use clap::{Args, Parser, Subcommand};

/// Chance-constrained optimization with evolutionary multi-objective
/// algorithms.
#[derive(Debug, Clone, PartialEq, Parser)]
#[command(name = "ccpareto", version)]
pub struct CliCommand {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Verb {
    /// Generate an instance file.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Run an experiment described by a config file.
    Run(RunArgs),
    /// Run an exact reference solver on an instance file.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Re-emit a results CSV as CSV or markdown.
    Table(TableArgs),
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum GenCommand {
    /// The two-type worst-case uniform instance.
    InstanceI {
        /// Number of items; even and at least 4.
        #[arg(long, value_parser = parse_even_n)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Random integer uniform instance.
    Uniform {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 50)]
        max_weight: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Dominating set with stochastic node weights.
    Domset(GenDomsetArgs),
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct GenDomsetArgs {
    /// uniform_random, degree_based or neg_correlated.
    #[arg(long, value_parser = parse_setting)]
    pub setting: DomsetSetting,
    /// Graph file to read.
    #[arg(long, conflicts_with = "random_n", required_unless_present = "random_n")]
    pub graph: Option<PathBuf>,
    #[arg(long, value_parser = parse_graph_format, default_value = "edge_list")]
    pub graph_format: GraphFormat,
    /// Vertex count of an Erdős–Rényi graph to draw instead.
    #[arg(long)]
    pub random_n: Option<usize>,
    #[arg(long, default_value_t = 0.05, value_parser = parse_probability)]
    pub edge_prob: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub config: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_parser = parse_budget)]
    pub budget: Option<u64>,
    /// Comma-separated β values in (0, 0.5].
    #[arg(long, value_delimiter = ',', value_parser = parse_beta)]
    pub betas: Option<Vec<f64>>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub replicates: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub p_ub: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_parser = parse_format)]
    pub format: Option<TableFormat>,
    /// Share one weight assignment across replicates.
    #[arg(long)]
    pub fixed_weights: bool,
    /// Full-scale budget of 10⁷ evaluations per run.
    #[arg(long, conflicts_with = "budget")]
    pub paper_protocol: bool,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum OracleCommand {
    /// Extreme points via the greedy/Kruskal oracle at every weighting in Λ.
    ExtremePoints {
        #[arg(long)]
        instance: PathBuf,
        /// CSV file for the points.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pareto front and extreme points by enumeration (at most 24 bits).
    BruteForce {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Greedy optimum of a uniform instance for one weighting.
    Greedy {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, value_parser = parse_probability)]
        lambda: f64,
    },
    /// Kruskal optimum of a spanning-tree instance for one weighting.
    Kruskal {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, value_parser = parse_probability)]
        lambda: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_parser = parse_format, default_value = "markdown")]
    pub format: TableFormat,
    /// Defaults to standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_even_n(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("'{s}' is not a count"))?;
    if n < 4 || !n.is_multiple_of(2) {
        return Err(format!("n must be even and at least 4, got {n}"));
    }
    Ok(n)
}

fn parse_beta(s: &str) -> Result<f64, String> {
    let b: f64 = s.parse().map_err(|_| format!("'{s}' is not a number"))?;
    if b > 0.0 && b <= 0.5 {
        Ok(b)
    } else {
        Err(format!("beta {b} outside (0, 0.5]"))
    }
}

fn parse_probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|_| format!("'{s}' is not a number"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("{p} outside [0, 1]"))
    }
}

fn parse_budget(s: &str) -> Result<u64, String> {
    // Accept 1e5-style budgets as well as plain integers.
    let b: f64 = s.parse().map_err(|_| format!("'{s}' is not a number"))?;
    if b >= 1.0 && b.fract() == 0.0 && b <= u64::MAX as f64 {
        Ok(b as u64)
    } else {
        Err(format!("budget must be a positive integer, got {s}"))
    }
}

fn parse_setting(s: &str) -> Result<DomsetSetting, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_graph_format(s: &str) -> Result<GraphFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<TableFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `argv` (including the program name). Never touches the filesystem.
pub fn parse_args<I, T>(argv: I) -> Result<CliCommand, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    CliCommand::try_parse_from(argv)
}

/// Exit status for a library error: 2 for I/O and malformed files, 1 otherwise.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_io() {
        2
    } else {
        1
    }
}

fn points_csv(points: &[(f64, ObjectiveVector)]) -> String {
    let mut out = String::from("lambda,mu,var\n");
    for (lambda, p) in points {
        let _ = writeln!(out, "{lambda},{},{}", p.mu, p.var);
    }
    out
}

fn write_file(path: &Path, text: &str) -> ccpareto::Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn brute_force(instance: &Instance) -> ccpareto::Result<BruteForceFront> {
    let problem: &dyn BiObjective = match instance {
        Instance::Uniform { instance, .. } => instance,
        Instance::SpanningTree(inst) => inst,
        Instance::DominatingSet(inst) => inst,
    };
    brute_force_front(
        problem.ground_size(),
        |x| problem.evaluate(x).feasible,
        |x| problem.evaluate(x).objectives,
    )
}

fn gen(cmd: GenCommand) -> ccpareto::Result<String> {
    match cmd {
        GenCommand::InstanceI { n, out } => {
            let (instance, conf) = gen_instance_i(n)?;
            let k = instance.k();
            let doc = Instance::Uniform {
                instance,
                k_alpha: Some(conf.k_alpha()),
            };
            write_instance(&doc, &out)?;
            Ok(format!("wrote instance I with n = {n}, k = {k} to {}", out.display()))
        }
        GenCommand::Uniform {
            n,
            k,
            max_weight,
            seed,
            out,
        } => {
            let mut rng = SplitMix64::new(seed);
            let instance = random_uniform_instance(n, k, max_weight, &mut rng)?;
            write_instance(&Instance::Uniform { instance, k_alpha: None }, &out)?;
            Ok(format!("wrote uniform instance with n = {n}, k = {k} to {}", out.display()))
        }
        GenCommand::Domset(args) => {
            let graph = match (&args.graph, args.random_n) {
                (Some(path), _) => load_graph(path, args.graph_format)?.graph,
                (None, Some(n)) => erdos_renyi(n, args.edge_prob, &mut SplitMix64::new(args.seed))?,
                (None, None) => return Err(Error::Domain("no graph given".into())),
            };
            let inst = gen_domset_setting(&graph, args.setting, args.seed)?;
            let (n, m) = (graph.n_vertices(), graph.n_edges());
            write_instance(&Instance::DominatingSet(inst), &args.out)?;
            Ok(format!(
                "wrote {} dominating-set instance with {n} vertices, {m} edges to {}",
                args.setting,
                args.out.display()
            ))
        }
    }
}

fn apply_overrides(cfg: &mut ExperimentConfig, args: &RunArgs) {
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if args.paper_protocol {
        cfg.budget = PAPER_BUDGET;
    }
    if let Some(budget) = args.budget {
        cfg.budget = budget;
    }
    if let Some(betas) = &args.betas {
        cfg.betas = betas.clone();
    }
    if let Some(r) = args.replicates {
        cfg.replicates = r as usize;
    }
    if let Some(p) = args.p_ub {
        cfg.convex_gsemo.p_ub = Some(p as usize);
    }
    if let Some(out) = &args.out {
        cfg.output = Some(out.clone());
    }
    if let Some(format) = args.format {
        cfg.format = format;
    }
    if args.fixed_weights {
        cfg.fixed_weights = true;
    }
}

fn run(args: RunArgs) -> ccpareto::Result<String> {
    let mut cfg = load_config(&args.config)?;
    apply_overrides(&mut cfg, &args);
    cfg.validate()?;
    let report = run_experiment(&cfg)?;
    let rows = report.rows.len();
    match &cfg.output {
        Some(path) => {
            emit_tables(&report.rows, cfg.format, path)?;
            Ok(format!(
                "{rows} result rows ({} algorithms × {} replicates) written to {}",
                cfg.algorithms.len(),
                cfg.replicates,
                path.display()
            ))
        }
        None => {
            print!("{}", render_table(&report.rows, cfg.format)?);
            Ok(format!("{rows} result rows"))
        }
    }
}

fn oracle(cmd: OracleCommand) -> ccpareto::Result<String> {
    match cmd {
        OracleCommand::ExtremePoints { instance, out } => {
            let inst = read_instance(&instance)?;
            let set = match &inst {
                Instance::Uniform { instance, .. } => extreme_point_set(instance)?,
                Instance::SpanningTree(i) => extreme_point_set(i)?,
                Instance::DominatingSet(_) => {
                    return Err(Error::Domain(
                        "extreme-point oracle needs a uniform or mst instance".into(),
                    ))
                }
            };
            let points: Vec<(f64, ObjectiveVector)> =
                set.points.iter().map(|p| (p.lambda, p.objectives)).collect();
            let csv = points_csv(&points);
            match out {
                Some(path) => {
                    write_file(&path, &csv)?;
                    Ok(format!("{} extreme points written to {}", set.len(), path.display()))
                }
                None => {
                    print!("{csv}");
                    Ok(format!("{} extreme points", set.len()))
                }
            }
        }
        OracleCommand::BruteForce { instance, out } => {
            let inst = read_instance(&instance)?;
            let bf = brute_force(&inst)?;
            let mut csv = String::from("kind,mu,var\n");
            for p in &bf.front {
                let _ = writeln!(csv, "front,{},{}", p.mu, p.var);
            }
            for p in &bf.extreme {
                let _ = writeln!(csv, "extreme,{},{}", p.mu, p.var);
            }
            let summary = format!(
                "{} front points, {} extreme points",
                bf.front.len(),
                bf.extreme.len()
            );
            match out {
                Some(path) => {
                    write_file(&path, &csv)?;
                    Ok(format!("{summary} written to {}", path.display()))
                }
                None => {
                    print!("{csv}");
                    Ok(summary)
                }
            }
        }
        OracleCommand::Greedy { instance, lambda } => match read_instance(&instance)? {
            Instance::Uniform { instance, .. } => {
                let x = greedy_uniform(&instance, lambda)?;
                let p = instance.objectives(&x);
                Ok(format!("selection {x}: mu = {}, var = {}", p.mu, p.var))
            }
            other => Err(Error::Domain(format!(
                "greedy oracle needs a uniform instance, got {}",
                other.kind()
            ))),
        },
        OracleCommand::Kruskal { instance, lambda } => match read_instance(&instance)? {
            Instance::SpanningTree(inst) => {
                let x = kruskal_lambda(&inst, lambda)?;
                let p = inst.objectives(&x);
                Ok(format!("tree {x}: mu = {}, var = {}", p.mu, p.var))
            }
            other => Err(Error::Domain(format!(
                "Kruskal oracle needs an mst instance, got {}",
                other.kind()
            ))),
        },
    }
}

fn table(args: TableArgs) -> ccpareto::Result<String> {
    let rows = read_csv(&args.input)?;
    match &args.out {
        Some(path) => {
            emit_tables(&rows, args.format, path)?;
            Ok(format!("{} result rows written to {}", rows.len(), path.display()))
        }
        None => {
            print!("{}", render_table(&rows, args.format)?);
            Ok(format!("{} result rows", rows.len()))
        }
    }
}

/// Runs a parsed command, printing a summary line on success and the error
/// on failure. Returns the process exit status.
pub fn dispatch(cmd: CliCommand) -> i32 {
    let (component, result) = match cmd.verb {
        Verb::Gen(c) => ("gen", gen(c)),
        Verb::Run(a) => ("run", run(a)),
        Verb::Oracle(c) => ("oracle", oracle(c)),
        Verb::Table(a) => ("table", table(a)),
    };
    match result {
        Ok(summary) => {
            eprintln!("{summary}");
            0
        }
        Err(e) => {
            eprintln!("error: {component}: {e}");
            exit_code(&e)
        }
    }
}

/// Parses and dispatches; usage errors exit with status 1, `--help` and
/// `--version` with 0.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(cmd) => dispatch(cmd),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                1
            } else {
                0
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_instance_i_parses() {
        let cmd = parse_args(["ccpareto", "gen", "instance-i", "--n", "100", "--out", "i100.inst"])
            .unwrap();
        assert_eq!(
            cmd.verb,
            Verb::Gen(GenCommand::InstanceI {
                n: 100,
                out: "i100.inst".into()
            })
        );
    }

    #[test]
    fn odd_n_is_a_usage_error() {
        let err = parse_args(["ccpareto", "gen", "instance-i", "--n", "101", "--out", "x"])
            .unwrap_err();
        assert!(err.use_stderr());
        assert!(err.to_string().contains("--n"));
    }

    #[test]
    fn run_overrides() {
        let cmd = parse_args([
            "ccpareto", "run", "--config", "exp.toml", "--betas", "0.2,0.01", "--budget", "1e5",
        ])
        .unwrap();
        let Verb::Run(args) = cmd.verb else { panic!() };
        assert_eq!(args.config, PathBuf::from("exp.toml"));
        assert_eq!(args.betas, Some(vec![0.2, 0.01]));
        assert_eq!(args.budget, Some(100_000));
    }

    #[test]
    fn bad_flags_are_rejected() {
        for argv in [
            vec!["ccpareto", "run", "--config", "c", "--betas", "0.7"],
            vec!["ccpareto", "run", "--config", "c", "--bogus"],
            vec!["ccpareto", "frobnicate"],
            vec!["ccpareto", "oracle", "greedy", "--instance", "x", "--lambda", "2"],
            vec!["ccpareto", "gen", "domset", "--setting", "gaussian", "--random-n", "5", "--out", "o"],
            vec!["ccpareto", "gen", "domset", "--setting", "degree_based", "--out", "o"],
        ] {
            assert!(parse_args(&argv).is_err(), "{argv:?}");
        }
    }

    #[test]
    fn help_is_not_an_error_exit() {
        let err = parse_args(["ccpareto", "run", "--help"]).unwrap_err();
        assert!(!err.use_stderr());
    }
}
