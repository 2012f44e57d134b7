use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{Confidence, StochItem};
use crate::problems::{DominatingSetInstance, Graph, UniformInstance};
use crate::rng::SplitMix64;
use crate::solution::Solution;

/// Cardinality bound `round(0.51·n)` of the worst-case instance.
pub fn instance_i_k(n: usize) -> usize {
    (0.51 * n as f64).round() as usize
}

/// The two-type worst-case uniform instance on `n` items.
///
/// Items alternate a, b, a, b, … so even indices are type a with
/// `(n² + δ, 1)` and odd indices are type b with `(n², 2)`, where
/// `δ = 1 / (2·sqrt(1.48·k))`. The instance comes with `K_α = 1`.
pub fn gen_instance_i(n: usize) -> Result<(UniformInstance, Confidence)> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "instance I needs an even n >= 4, got {n}"
        )));
    }
    let k = instance_i_k(n);
    let delta = 1.0 / (2.0 * (k as f64 * 1.48).sqrt());
    let base = (n * n) as f64;
    let mut items = Vec::with_capacity(n);
    for i in 0..n {
        let item = if i % 2 == 0 {
            StochItem::new(base + delta, 1.0)?
        } else {
            StochItem::new(base, 2.0)?
        };
        items.push(item);
    }
    let inst = UniformInstance::new(items, k)?;
    Ok((inst, Confidence::from_k_alpha(1.0)?))
}

/// Where a run on instance I ended up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InstanceIOutcome {
    /// `k` items including every type-a item.
    Global,
    /// `k` items including every type-b item.
    Local,
    Other,
}

/// Classifies a solution of [`gen_instance_i`] by its composition.
pub fn classify_instance_i(n: usize, x: &Solution) -> InstanceIOutcome {
    let k = instance_i_k(n);
    if x.count_ones() != k {
        return InstanceIOutcome::Other;
    }
    let type_b = x.iter_ones().filter(|i| i % 2 == 1).count();
    if type_b == n / 2 {
        InstanceIOutcome::Local
    } else if k - type_b == n / 2 {
        InstanceIOutcome::Global
    } else {
        InstanceIOutcome::Other
    }
}

/// `n` items with integer expectations and variances drawn uniformly from
/// `{1, …, max_weight}`.
pub fn random_uniform_instance(
    n: usize,
    k: usize,
    max_weight: u64,
    rng: &mut SplitMix64,
) -> Result<UniformInstance> {
    if max_weight == 0 {
        return Err(Error::domain("maximal weight must be at least 1"));
    }
    let items = (0..n)
        .map(|_| {
            let mu = rng.range_inclusive(1, max_weight) as f64;
            let var = rng.range_inclusive(1, max_weight) as f64;
            StochItem::new(mu, var)
        })
        .collect::<Result<Vec<_>>>()?;
    UniformInstance::new(items, k)
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn erdos_renyi(n: usize, p: f64, rng: &mut SplitMix64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("edge probability {p} outside [0, 1]")));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Stochastic node-weight models for dominating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomsetSetting {
    /// `μ ~ U{n, …, 2n}`, `v ~ U{n², …, 2n²}`.
    UniformRandom,
    /// `μ = (n + deg)⁵ / n⁴`, `v ~ U{n², …, 2n²}`.
    DegreeBased,
    /// `μ ~ U{0, …, n²}`, `v = (n² − μ)·n²`.
    NegCorrelated,
}

impl DomsetSetting {
    pub const ALL: [DomsetSetting; 3] = [
        DomsetSetting::UniformRandom,
        DomsetSetting::DegreeBased,
        DomsetSetting::NegCorrelated,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            DomsetSetting::UniformRandom => "uniform_random",
            DomsetSetting::DegreeBased => "degree_based",
            DomsetSetting::NegCorrelated => "neg_correlated",
        }
    }
}

impl fmt::Display for DomsetSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DomsetSetting {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DomsetSetting::ALL
            .into_iter()
            .find(|setting| setting.name() == s.replace('-', "_"))
            .ok_or_else(|| {
                Error::domain(format!(
                    "unknown weight setting '{s}' (expected uniform_random, degree_based or neg_correlated)"
                ))
            })
    }
}

/// Draws node weights for `graph` under `setting`.
pub fn gen_domset_setting(
    graph: &Graph,
    setting: DomsetSetting,
    seed: u64,
) -> Result<DominatingSetInstance> {
    let n = graph.n_vertices() as u64;
    let n2 = n * n;
    let mut rng = SplitMix64::new(seed);
    let mut weights = Vec::with_capacity(graph.n_vertices());
    for u in 0..graph.n_vertices() {
        let item = match setting {
            DomsetSetting::UniformRandom => {
                let mu = rng.range_inclusive(n, 2 * n);
                let var = rng.range_inclusive(n2, 2 * n2);
                StochItem::new(mu as f64, var as f64)?
            }
            DomsetSetting::DegreeBased => {
                let nf = n as f64;
                let mu = (nf + graph.degree(u) as f64).powi(5) / nf.powi(4);
                let var = rng.range_inclusive(n2, 2 * n2);
                StochItem::new(mu, var as f64)?
            }
            DomsetSetting::NegCorrelated => {
                let mu = rng.range_inclusive(0, n2);
                let var = (n2 - mu) * n2;
                StochItem::relaxed(mu as f64, var as f64)?
            }
        };
        weights.push(item);
    }
    DominatingSetInstance::new(graph.clone(), weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_i_parameters() {
        let (inst, conf) = gen_instance_i(100).unwrap();
        assert_eq!(inst.k(), 51);
        assert_eq!(conf.k_alpha(), 1.0);
        let delta = inst.items()[0].mu() - 10000.0;
        assert!((delta - 0.0575514).abs() < 1e-6, "delta = {delta}");
        assert_eq!(inst.items()[0].var(), 1.0);
        assert_eq!(inst.items()[1].as_point().mu, 10000.0);
        assert_eq!(inst.items()[1].var(), 2.0);
        assert_eq!(gen_instance_i(100).unwrap(), (inst, conf));
    }

    #[test]
    fn instance_i_rejects_odd() {
        assert!(gen_instance_i(101).is_err());
        assert!(gen_instance_i(2).is_err());
    }

    #[test]
    fn instance_i_optimum_by_enumeration() {
        let n = 8;
        let (inst, conf) = gen_instance_i(n).unwrap();
        let mut best = (f64::INFINITY, 0u64);
        for mask in 0..1u64 << n {
            let f = inst.penalized_fitness(&Solution::from_mask(mask, n), &conf);
            if f < best.0 {
                best = (f, mask);
            }
        }
        let x = Solution::from_mask(best.1, n);
        assert_eq!(classify_instance_i(n, &x), InstanceIOutcome::Global);

        // The local optimum is strictly worse.
        let k = instance_i_k(n);
        let local = Solution::from_indices(n, (1..n).step_by(2).chain([0]).take(k));
        assert_eq!(classify_instance_i(n, &local), InstanceIOutcome::Local);
        assert!(inst.penalized_fitness(&local, &conf) > best.0);
    }

    #[test]
    fn classification_of_other() {
        assert_eq!(classify_instance_i(8, &Solution::ones(8)), InstanceIOutcome::Other);
    }

    #[test]
    fn domset_bounds_and_boundaries() {
        let g = Graph::new(5, vec![(0, 1), (1, 2)]).unwrap();
        let nc = gen_domset_setting(&g, DomsetSetting::NegCorrelated, 3).unwrap();
        for w in nc.weights() {
            assert_eq!(w.var(), (25.0 - w.mu()) * 25.0);
        }
        let db = gen_domset_setting(&g, DomsetSetting::DegreeBased, 3).unwrap();
        assert_eq!(db.weights()[4].mu(), 5.0);
        assert!((db.weights()[1].mu() - 7f64.powi(5) / 625.0).abs() < 1e-9);
    }

    #[test]
    fn uniform_random_draws_stay_in_range() {
        let n = 10_000;
        let g = Graph::new(n, Vec::new()).unwrap();
        let inst = gen_domset_setting(&g, DomsetSetting::UniformRandom, 9).unwrap();
        let nf = n as f64;
        for w in inst.weights() {
            assert!((nf..=2.0 * nf).contains(&w.mu()));
            assert!((nf * nf..=2.0 * nf * nf).contains(&w.var()));
        }
    }

    #[test]
    fn settings_parse() {
        assert_eq!(
            "neg-correlated".parse::<DomsetSetting>().unwrap(),
            DomsetSetting::NegCorrelated
        );
        assert!("gaussian".parse::<DomsetSetting>().is_err());
    }

    #[test]
    fn generators_are_seeded() {
        let a = erdos_renyi(30, 0.2, &mut SplitMix64::new(5)).unwrap();
        let b = erdos_renyi(30, 0.2, &mut SplitMix64::new(5)).unwrap();
        assert_eq!(a, b);
        let x = gen_domset_setting(&a, DomsetSetting::UniformRandom, 1).unwrap();
        let y = gen_domset_setting(&b, DomsetSetting::UniformRandom, 1).unwrap();
        assert_eq!(x, y);
    }
}
