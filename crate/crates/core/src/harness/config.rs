//! Experiment configuration files.
//!
//! ```toml
//! label = "er100"
//! budget = 100000
//! replicates = 30
//! seed = 1
//! betas = [0.2, 0.1, 0.01]
//! algorithms = ["one_one_ea", "gsemo", "convex_gsemo"]
//! output = "results.csv"
//! format = "csv"
//! fixed_weights = false
//!
//! [problem]
//! type = "domset"
//! setting = "neg_correlated"
//! graph = "graphs/cfat200-1.mtx"
//! format = "matrix_market"
//!
//! [convex_gsemo]
//! p_ub = 400
//! ```

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::generators::DomsetSetting;
use super::graph_io::GraphFormat;
use crate::error::{Error, Result};

/// Evaluations per run at desk scale.
pub const DEFAULT_BUDGET: u64 = 100_000;

/// Evaluations per run in the full-scale protocol.
pub const PAPER_BUDGET: u64 = 10_000_000;

/// `β = 1 − α` values of the full-scale tables.
pub const DEFAULT_BETAS: [f64; 10] = [
    0.2, 0.1, 1e-2, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12, 1e-14, 1e-16,
];

/// The search algorithms an experiment can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgorithmKind {
    OneOneEa,
    Gsemo,
    ConvexGsemo,
    ConvexMuEa,
}

impl AlgorithmKind {
    pub const ALL: [AlgorithmKind; 4] = [
        AlgorithmKind::OneOneEa,
        AlgorithmKind::Gsemo,
        AlgorithmKind::ConvexGsemo,
        AlgorithmKind::ConvexMuEa,
    ];

    /// Identifier used in configs and CSV files.
    pub fn key(&self) -> &'static str {
        match self {
            AlgorithmKind::OneOneEa => "one_one_ea",
            AlgorithmKind::Gsemo => "gsemo",
            AlgorithmKind::ConvexGsemo => "convex_gsemo",
            AlgorithmKind::ConvexMuEa => "convex_mu_ea",
        }
    }

    /// Human-readable name for reports.
    pub fn label(&self) -> &'static str {
        match self {
            AlgorithmKind::OneOneEa => "(1+1) EA",
            AlgorithmKind::Gsemo => "GSEMO",
            AlgorithmKind::ConvexGsemo => "Convex GSEMO",
            AlgorithmKind::ConvexMuEa => "Convex (μ+1)-EA",
        }
    }

    pub fn is_multi_objective(&self) -> bool {
        !matches!(self, AlgorithmKind::OneOneEa)
    }
}

impl fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for AlgorithmKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgorithmKind::ALL
            .into_iter()
            .find(|a| a.key() == s.replace('-', "_"))
            .ok_or_else(|| Error::domain(format!("unknown algorithm '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableFormat {
    #[default]
    Csv,
    Markdown,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "markdown" | "md" => Ok(TableFormat::Markdown),
            _ => Err(Error::domain(format!(
                "unknown table format '{s}' (expected csv or markdown)"
            ))),
        }
    }
}

/// Where the instance of each replicate comes from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ProblemSpec {
    /// The two-type worst-case uniform instance.
    InstanceI { n: usize },
    /// A fixed instance file.
    File { path: PathBuf },
    /// Random integer uniform instances.
    UniformRandom {
        n: usize,
        k: usize,
        #[serde(default = "default_max_weight")]
        max_weight: u64,
    },
    /// Dominating set on a graph file or an Erdős–Rényi graph, with node
    /// weights drawn under `setting`.
    Domset {
        setting: String,
        #[serde(default)]
        graph: Option<PathBuf>,
        #[serde(default)]
        format: Option<String>,
        #[serde(default)]
        random_graph: Option<RandomGraph>,
    },
}

fn default_max_weight() -> u64 {
    50
}

/// `G(n, p)` drawn from its own seed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RandomGraph {
    pub n: usize,
    pub p: f64,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ConvexGsemoSection {
    /// Defaults to `n²` for ground set size `n`.
    pub p_ub: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ConvexMuEaSection {
    /// Defaults to the ground set size.
    pub mu_pop: Option<usize>,
}

fn default_budget() -> u64 {
    DEFAULT_BUDGET
}

fn default_replicates() -> usize {
    30
}

fn default_betas() -> Vec<f64> {
    DEFAULT_BETAS.to_vec()
}

fn default_algorithms() -> Vec<AlgorithmKind> {
    vec![
        AlgorithmKind::OneOneEa,
        AlgorithmKind::Gsemo,
        AlgorithmKind::ConvexGsemo,
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub label: Option<String>,
    #[serde(default = "default_budget")]
    pub budget: u64,
    #[serde(default = "default_replicates")]
    pub replicates: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_betas")]
    pub betas: Vec<f64>,
    #[serde(default = "default_algorithms")]
    pub algorithms: Vec<AlgorithmKind>,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub format: TableFormat,
    /// Share one random weight assignment across all replicates.
    #[serde(default)]
    pub fixed_weights: bool,
    pub problem: ProblemSpec,
    #[serde(default)]
    pub convex_gsemo: ConvexGsemoSection,
    #[serde(default)]
    pub convex_mu_ea: ConvexMuEaSection,
}

impl ExperimentConfig {
    /// A config with default settings for `problem`.
    pub fn new(problem: ProblemSpec) -> Self {
        ExperimentConfig {
            label: None,
            budget: DEFAULT_BUDGET,
            replicates: default_replicates(),
            seed: 0,
            betas: default_betas(),
            algorithms: default_algorithms(),
            output: None,
            format: TableFormat::Csv,
            fixed_weights: false,
            problem,
            convex_gsemo: ConvexGsemoSection::default(),
            convex_mu_ea: ConvexMuEaSection::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.budget == 0 {
            return Err(Error::domain("budget must be at least 1"));
        }
        if self.replicates == 0 {
            return Err(Error::domain("replicate count must be at least 1"));
        }
        if self.betas.is_empty() {
            return Err(Error::domain("beta list is empty"));
        }
        if let Some(b) = self.betas.iter().find(|b| !(**b > 0.0 && **b <= 0.5)) {
            return Err(Error::domain(format!("beta {b} outside (0, 0.5]")));
        }
        if self.algorithms.is_empty() {
            return Err(Error::domain("algorithm list is empty"));
        }
        for (i, a) in self.algorithms.iter().enumerate() {
            if self.algorithms[..i].contains(a) {
                return Err(Error::domain(format!("algorithm {a} listed twice")));
            }
        }
        if let ProblemSpec::Domset { setting, .. } = &self.problem {
            setting.parse::<DomsetSetting>()?;
        }
        if let ProblemSpec::Domset {
            format: Some(f), ..
        } = &self.problem
        {
            f.parse::<GraphFormat>()?;
        }
        Ok(())
    }

    /// Rewrites relative problem and output paths against `dir`.
    pub fn resolve_paths(&mut self, dir: &Path) {
        match &mut self.problem {
            ProblemSpec::File { path } => *path = dir.join(&*path),
            ProblemSpec::Domset {
                graph: Some(graph), ..
            } => *graph = dir.join(&*graph),
            _ => {}
        }
        if let Some(out) = &mut self.output {
            *out = dir.join(&*out);
        }
    }
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

pub fn parse_config(text: &str, source: &str) -> Result<ExperimentConfig> {
    let cfg: ExperimentConfig = toml::from_str(text).map_err(|e| Error::Parse {
        path: source.to_string(),
        line: e.span().map_or(1, |s| line_of(text, s.start)),
        msg: e.message().to_string(),
    })?;
    cfg.validate()?;
    Ok(cfg)
}

/// Reads and validates a config; relative paths resolve against the config's
/// directory.
pub fn load_config(path: impl AsRef<Path>) -> Result<ExperimentConfig> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut cfg = parse_config(&text, &path.display().to_string())?;
    if let Some(dir) = path.parent() {
        cfg.resolve_paths(dir);
    }
    Ok(cfg)
}
