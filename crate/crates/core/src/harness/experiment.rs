use std::path::Path;

use log::info;
use rayon::prelude::*;

use super::config::{AlgorithmKind, ExperimentConfig, ProblemSpec};
use super::generators::{
    erdos_renyi, gen_domset_setting, gen_instance_i, random_uniform_instance, DomsetSetting,
};
use super::graph_io::{load_graph, GraphFormat};
use super::instance_file::{read_instance, Instance};
use crate::algorithms::{
    decode_alpha, run_convex_gsemo, run_convex_mu_ea, run_gsemo, run_one_one_ea, Outcome,
    RunConfig, RunResult,
};
use crate::error::{Error, Result};
use crate::model::Confidence;
use crate::oracles::mann_whitney_u;
use crate::problems::{
    BiObjective, DominatingSetInstance, Graph, Penalized, SpanningTreeInstance, UniformInstance,
};
use crate::rng::{derive_seed, SplitMix64};

/// Seed streams derived from a replicate seed.
const WEIGHT_STREAM: u64 = 0x5745_4947_4854;
const GRAPH_STREAM: u64 = 0x0047_5241_5048;
const ALGORITHM_STREAM: u64 = 0x0041_4c47;

/// Aggregates of one algorithm at one `β`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmStats {
    pub algorithm: AlgorithmKind,
    /// Mean and sample standard deviation of the decoded `g` values of the
    /// feasible runs.
    pub mean: f64,
    pub std: f64,
    pub max_pop_mean: f64,
    pub max_pop_std: f64,
    /// Runs that ended without a feasible solution.
    pub infeasible: usize,
}

/// One `(instance, β)` cell of the result tables.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub instance: String,
    pub beta: f64,
    pub stats: Vec<AlgorithmStats>,
    /// (1+1) EA vs GSEMO.
    pub p1: Option<f64>,
    /// (1+1) EA vs Convex GSEMO.
    pub p2: Option<f64>,
    /// GSEMO vs Convex GSEMO.
    pub p3: Option<f64>,
}

impl ResultRow {
    pub fn stats_for(&self, algorithm: AlgorithmKind) -> Option<&AlgorithmStats> {
        self.stats.iter().find(|s| s.algorithm == algorithm)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub rows: Vec<ResultRow>,
    /// Total fitness evaluations per algorithm, in config order.
    pub evaluations: Vec<(AlgorithmKind, u64)>,
}

/// The instance a replicate runs on.
#[derive(Debug, Clone)]
enum Problem {
    Uniform(UniformInstance),
    SpanningTree(SpanningTreeInstance),
    DominatingSet(DominatingSetInstance),
}

impl Problem {
    fn ground_size(&self) -> usize {
        self.as_bi_objective().ground_size()
    }

    fn as_bi_objective(&self) -> &dyn BiObjective {
        match self {
            Problem::Uniform(p) => p,
            Problem::SpanningTree(p) => p,
            Problem::DominatingSet(p) => p,
        }
    }

    fn run_single(&self, cfg: &RunConfig, conf: Confidence) -> Result<RunResult> {
        match self {
            Problem::Uniform(p) => run_one_one_ea(&Penalized::new(p, conf), cfg),
            Problem::DominatingSet(p) => run_one_one_ea(&Penalized::new(p, conf), cfg),
            Problem::SpanningTree(_) => Err(Error::domain(
                "the (1+1) EA has no scalar formulation for spanning trees",
            )),
        }
    }
}

impl From<Instance> for Problem {
    fn from(inst: Instance) -> Self {
        match inst {
            Instance::Uniform { instance, .. } => Problem::Uniform(instance),
            Instance::SpanningTree(i) => Problem::SpanningTree(i),
            Instance::DominatingSet(i) => Problem::DominatingSet(i),
        }
    }
}

/// Builds replicate instances; fixed parts are prepared once.
enum Source {
    Fixed(Problem),
    UniformRandom { n: usize, k: usize, max_weight: u64 },
    Domset { graph: Graph, setting: DomsetSetting },
}

impl Source {
    fn prepare(spec: &ProblemSpec) -> Result<(Source, String)> {
        Ok(match spec {
            ProblemSpec::InstanceI { n } => (
                Source::Fixed(Problem::Uniform(gen_instance_i(*n)?.0)),
                format!("instance_i_n{n}"),
            ),
            ProblemSpec::File { path } => (
                Source::Fixed(read_instance(path)?.into()),
                file_label(path),
            ),
            ProblemSpec::UniformRandom { n, k, max_weight } => (
                Source::UniformRandom {
                    n: *n,
                    k: *k,
                    max_weight: *max_weight,
                },
                format!("uniform_n{n}_k{k}"),
            ),
            ProblemSpec::Domset {
                setting,
                graph,
                format,
                random_graph,
            } => {
                let setting: DomsetSetting = setting.parse()?;
                let (graph, name) = match (graph, random_graph) {
                    (Some(path), None) => {
                        let format = match format {
                            Some(f) => f.parse()?,
                            None => GraphFormat::default(),
                        };
                        (load_graph(path, format)?.graph, file_label(path))
                    }
                    (None, Some(rg)) => {
                        let mut rng = SplitMix64::new(derive_seed(rg.seed, GRAPH_STREAM));
                        (erdos_renyi(rg.n, rg.p, &mut rng)?, format!("gnp_n{}", rg.n))
                    }
                    _ => {
                        return Err(Error::domain(
                            "domset problem needs exactly one of 'graph' or 'random_graph'",
                        ))
                    }
                };
                (Source::Domset { graph, setting }, format!("{name}_{setting}"))
            }
        })
    }

    fn instance(&self, weight_seed: u64) -> Result<Problem> {
        Ok(match self {
            Source::Fixed(p) => p.clone(),
            Source::UniformRandom { n, k, max_weight } => {
                let mut rng = SplitMix64::new(weight_seed);
                Problem::Uniform(random_uniform_instance(*n, *k, *max_weight, &mut rng)?)
            }
            Source::Domset { graph, setting } => {
                Problem::DominatingSet(gen_domset_setting(graph, *setting, weight_seed)?)
            }
        })
    }
}

fn file_label(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Decoded value per β (None when infeasible) plus accounting of one run
/// of one algorithm.
struct Cell {
    values: Vec<Option<f64>>,
    max_pop: usize,
    evaluations: u64,
}

fn run_replicate(
    cfg: &ExperimentConfig,
    source: &Source,
    confidences: &[Confidence],
    replicate: usize,
) -> Result<Vec<Cell>> {
    let replicate_seed = derive_seed(cfg.seed, replicate as u64);
    let weight_base = if cfg.fixed_weights {
        derive_seed(cfg.seed, 0)
    } else {
        replicate_seed
    };
    let problem = source.instance(derive_seed(weight_base, WEIGHT_STREAM))?;
    let n = problem.ground_size();

    let mut cells = Vec::with_capacity(cfg.algorithms.len());
    for &algorithm in &cfg.algorithms {
        let fail = |beta: f64, source: Error| Error::Run {
            algorithm: algorithm.key().to_string(),
            replicate,
            beta,
            source: Box::new(source),
        };
        let seed = derive_seed(replicate_seed, ALGORITHM_STREAM + algorithm as u64);
        let mut cell = Cell {
            values: Vec::with_capacity(confidences.len()),
            max_pop: 0,
            evaluations: 0,
        };
        if algorithm.is_multi_objective() {
            let run_cfg = RunConfig {
                budget: cfg.budget,
                seed,
                p_ub: Some(cfg.convex_gsemo.p_ub.unwrap_or(n * n)),
                mu_pop: Some(cfg.convex_mu_ea.mu_pop.unwrap_or(n.max(2))),
            };
            let problem = problem.as_bi_objective();
            let result = match algorithm {
                AlgorithmKind::Gsemo => run_gsemo(problem, &run_cfg),
                AlgorithmKind::ConvexGsemo => run_convex_gsemo(problem, &run_cfg),
                AlgorithmKind::ConvexMuEa => run_convex_mu_ea(problem, &run_cfg),
                AlgorithmKind::OneOneEa => unreachable!(),
            }
            .map_err(|e| fail(cfg.betas[0], e))?;
            let archive = result.archive().expect("multi-objective runs keep an archive");
            for conf in confidences {
                cell.values.push(match decode_alpha(archive, conf) {
                    Ok((_, value)) => Some(value),
                    Err(Error::NoFeasible) => None,
                    Err(e) => return Err(fail(1.0 - conf.alpha(), e)),
                });
            }
            cell.max_pop = result.max_pop;
            cell.evaluations = result.evaluations_used;
        } else {
            for (b, conf) in confidences.iter().enumerate() {
                let run_cfg = RunConfig::new(cfg.budget, derive_seed(seed, b as u64));
                let result = problem
                    .run_single(&run_cfg, *conf)
                    .map_err(|e| fail(cfg.betas[b], e))?;
                let Outcome::Best {
                    fitness, feasible, ..
                } = result.outcome
                else {
                    unreachable!("single-objective runs return their best solution")
                };
                cell.values.push(feasible.then_some(fitness));
                cell.max_pop = cell.max_pop.max(result.max_pop);
                cell.evaluations += result.evaluations_used;
            }
        }
        cells.push(cell);
    }
    Ok(cells)
}

/// Mean and sample standard deviation (0 for fewer than two values).
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    (mean, (ss / (n - 1.0)).sqrt())
}

fn p_value(a: Option<&Vec<f64>>, b: Option<&Vec<f64>>) -> Option<f64> {
    let (a, b) = (a?, b?);
    mann_whitney_u(a, b).ok().map(|r| r.p)
}

/// Runs every replicate of `cfg` and aggregates one row per `β`.
///
/// Replicates run in parallel; aggregation follows replicate order, so the
/// result depends only on the config.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let (source, default_label) = Source::prepare(&cfg.problem)?;
    let label = cfg.label.clone().unwrap_or(default_label);
    let confidences = cfg
        .betas
        .iter()
        .map(|&b| Confidence::from_beta(b))
        .collect::<Result<Vec<_>>>()?;

    let replicates: Vec<Vec<Cell>> = (0..cfg.replicates)
        .into_par_iter()
        .map(|r| {
            let cells = run_replicate(cfg, &source, &confidences, r);
            info!("{label}: replicate {r} done");
            cells
        })
        .collect::<Result<_>>()?;

    let evaluations = cfg
        .algorithms
        .iter()
        .enumerate()
        .map(|(a, &alg)| (alg, replicates.iter().map(|r| r[a].evaluations).sum()))
        .collect();

    let mut rows = Vec::with_capacity(cfg.betas.len());
    for (b, &beta) in cfg.betas.iter().enumerate() {
        let mut samples = Vec::new();
        let mut stats = Vec::new();
        for (a, &algorithm) in cfg.algorithms.iter().enumerate() {
            let values: Vec<f64> = replicates.iter().filter_map(|r| r[a].values[b]).collect();
            let pops: Vec<f64> = replicates.iter().map(|r| r[a].max_pop as f64).collect();
            let (mean, std) = mean_std(&values);
            let (max_pop_mean, max_pop_std) = mean_std(&pops);
            stats.push(AlgorithmStats {
                algorithm,
                mean,
                std,
                max_pop_mean,
                max_pop_std,
                infeasible: cfg.replicates - values.len(),
            });
            samples.push((algorithm, values));
        }
        let sample = |alg: AlgorithmKind| {
            samples
                .iter()
                .find(|(a, v)| *a == alg && !v.is_empty())
                .map(|(_, v)| v)
        };
        use AlgorithmKind::*;
        rows.push(ResultRow {
            instance: label.clone(),
            beta,
            p1: p_value(sample(OneOneEa), sample(Gsemo)),
            p2: p_value(sample(OneOneEa), sample(ConvexGsemo)),
            p3: p_value(sample(Gsemo), sample(ConvexGsemo)),
            stats,
        });
    }
    Ok(ExperimentReport { rows, evaluations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::config::RandomGraph;

    fn small(problem: ProblemSpec) -> ExperimentConfig {
        let mut cfg = ExperimentConfig::new(problem);
        cfg.budget = 300;
        cfg.replicates = 3;
        cfg.betas = vec![0.2, 0.01];
        cfg
    }

    #[test]
    fn single_replicate_has_zero_std() {
        let mut cfg = small(ProblemSpec::InstanceI { n: 10 });
        cfg.replicates = 1;
        cfg.betas = vec![0.1];
        let report = run_experiment(&cfg).unwrap();
        assert_eq!(report.rows.len(), 1);
        for s in &report.rows[0].stats {
            assert_eq!(s.std, 0.0);
        }
    }

    #[test]
    fn evaluation_accounting() {
        let cfg = small(ProblemSpec::UniformRandom {
            n: 8,
            k: 3,
            max_weight: 20,
        });
        let report = run_experiment(&cfg).unwrap();
        for (alg, evals) in report.evaluations {
            let expected = if alg.is_multi_objective() { 3 * 300 } else { 3 * 2 * 300 };
            assert_eq!(evals, expected, "{alg}");
        }
    }

    #[test]
    fn deterministic_and_monotone_in_beta() {
        let mut cfg = small(ProblemSpec::Domset {
            setting: "uniform_random".into(),
            graph: None,
            format: None,
            random_graph: Some(RandomGraph {
                n: 12,
                p: 0.3,
                seed: 1,
            }),
        });
        cfg.betas = vec![0.2, 0.1, 1e-4];
        cfg.algorithms = vec![
            AlgorithmKind::Gsemo,
            AlgorithmKind::ConvexGsemo,
            AlgorithmKind::ConvexMuEa,
        ];
        let a = run_experiment(&cfg).unwrap();
        assert_eq!(a, run_experiment(&cfg).unwrap());
        for alg in &cfg.algorithms {
            let means: Vec<f64> = a.rows.iter().map(|r| r.stats_for(*alg).unwrap().mean).collect();
            assert!(means.windows(2).all(|w| w[0] <= w[1]), "{alg}: {means:?}");
        }
    }

    #[test]
    fn fixed_weights_share_the_instance() {
        let mut cfg = small(ProblemSpec::UniformRandom {
            n: 6,
            k: 2,
            max_weight: 9,
        });
        cfg.fixed_weights = true;
        cfg.algorithms = vec![AlgorithmKind::ConvexGsemo];
        cfg.budget = 2000;
        // Every replicate finds the same optimum of the shared instance.
        let report = run_experiment(&cfg).unwrap();
        assert_eq!(report.rows[0].stats[0].std, 0.0);
    }

    #[test]
    fn spanning_tree_rejects_scalar_ea() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.toml");
        std::fs::write(
            &path,
            "type = \"mst\"\nn = 3\nedges = [[1, 2], [2, 3], [1, 3]]\nweights = [[1, 1], [2, 2], [3, 3]]\n",
        )
        .unwrap();
        let mut cfg = small(ProblemSpec::File { path });
        cfg.replicates = 1;
        match run_experiment(&cfg) {
            Err(Error::Run { algorithm, replicate, .. }) => {
                assert_eq!(algorithm, "one_one_ea");
                assert_eq!(replicate, 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn identical_samples_give_unit_p() {
        let v = vec![1.0, 2.0, 3.0];
        assert_eq!(p_value(Some(&v), Some(&v)), Some(1.0));
    }
}
