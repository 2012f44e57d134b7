//! The evolutionary algorithms: (1+1) EA, GSEMO, Convex GSEMO and the
//! Convex (μ+1)-EA. All of them use standard bit mutation, count every
//! fitness evaluation (including initialization) against the budget, and
//! are fully determined by their seed.

mod convex;
mod gsemo;
mod mutation;
mod one_one;

pub use convex::{run_convex_gsemo, run_convex_gsemo_observed, run_convex_mu_ea};
pub use gsemo::{run_gsemo, run_gsemo_observed};
pub use mutation::standard_bit_mutation;
pub use one_one::run_one_one_ea;

use crate::error::{Error, Result};
use crate::model::{g_value, Confidence, ObjectiveVector};
use crate::problems::Evaluated;
use crate::solution::Solution;

/// Budget, seed and population parameters of a single run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub budget: u64,
    pub seed: u64,
    /// Population cap of Convex GSEMO.
    pub p_ub: Option<usize>,
    /// Population size of the Convex (μ+1)-EA.
    pub mu_pop: Option<usize>,
}

impl RunConfig {
    pub fn new(budget: u64, seed: u64) -> Self {
        RunConfig {
            budget,
            seed,
            p_ub: None,
            mu_pop: None,
        }
    }

    pub fn with_p_ub(mut self, p_ub: usize) -> Self {
        self.p_ub = Some(p_ub);
        self
    }

    pub fn with_mu_pop(mut self, mu_pop: usize) -> Self {
        self.mu_pop = Some(mu_pop);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.budget == 0 {
            return Err(Error::domain("budget must be at least 1"));
        }
        if self.p_ub == Some(0) {
            return Err(Error::domain("population cap must be at least 1"));
        }
        if let Some(mu) = self.mu_pop {
            if mu < 2 {
                return Err(Error::domain("population size must be at least 2"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Member {
    pub solution: Solution,
    pub objectives: ObjectiveVector,
    pub feasible: bool,
}

impl Member {
    fn new(solution: Solution, eval: Evaluated) -> Self {
        Member {
            solution,
            objectives: eval.objectives,
            feasible: eval.feasible,
        }
    }
}

/// Population of a multi-objective run.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Archive {
    members: Vec<Member>,
    max_size_seen: usize,
}

impl Archive {
    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Largest population size observed during the run.
    pub fn max_size_seen(&self) -> usize {
        self.max_size_seen
    }

    pub fn objectives(&self) -> Vec<ObjectiveVector> {
        self.members.iter().map(|m| m.objectives).collect()
    }

    fn note_size(&mut self) {
        self.max_size_seen = self.max_size_seen.max(self.members.len());
    }
}

/// What a run returns besides its accounting.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Archive(Archive),
    Best {
        solution: Solution,
        fitness: f64,
        feasible: bool,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub outcome: Outcome,
    pub evaluations_used: u64,
    pub max_pop: usize,
    /// `(evaluation index, best fitness)` at every strict improvement of a
    /// single-objective run; empty for multi-objective runs.
    pub trace: Vec<(u64, f64)>,
}

impl RunResult {
    pub fn archive(&self) -> Option<&Archive> {
        match &self.outcome {
            Outcome::Archive(a) => Some(a),
            Outcome::Best { .. } => None,
        }
    }
}

/// The archive member minimizing `μ + K_α·sqrt(v)` among feasible members;
/// ties go to the smaller variance, then the earlier member.
pub fn decode_alpha(archive: &Archive, conf: &Confidence) -> Result<(Solution, f64)> {
    let mut best: Option<(&Member, f64)> = None;
    for m in archive.members.iter().filter(|m| m.feasible) {
        let value = g_value(m.objectives.mu, m.objectives.var, conf);
        let better = match best {
            None => true,
            Some((b, bv)) => {
                value < bv || (value == bv && m.objectives.var < b.objectives.var)
            }
        };
        if better {
            best = Some((m, value));
        }
    }
    best.map(|(m, v)| (m.solution.clone(), v))
        .ok_or(Error::NoFeasible)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn member(mu: f64, var: f64, feasible: bool) -> Member {
        Member {
            solution: Solution::zeros(1),
            objectives: ObjectiveVector::new(mu, var),
            feasible,
        }
    }

    fn archive(members: Vec<Member>) -> Archive {
        let n = members.len();
        Archive {
            members,
            max_size_seen: n,
        }
    }

    #[test]
    fn decode_examples() {
        let mut a = archive(vec![member(3.0, 5.0, true), member(4.0, 1.0, true)]);
        a.members[1].solution = Solution::ones(1);
        let k0 = Confidence::new(0.5).unwrap();
        let (s, v) = decode_alpha(&a, &k0).unwrap();
        assert_eq!((s, v), (Solution::zeros(1), 3.0));
        let k1 = Confidence::from_k_alpha(1.0).unwrap();
        let (s, v) = decode_alpha(&a, &k1).unwrap();
        assert_eq!((s, v), (Solution::ones(1), 5.0));
    }

    #[test]
    fn decode_skips_infeasible() {
        let a = archive(vec![member(0.0, 0.0, false)]);
        let k1 = Confidence::from_k_alpha(1.0).unwrap();
        assert!(matches!(decode_alpha(&a, &k1), Err(Error::NoFeasible)));
        let b = archive(vec![member(0.0, 0.0, false), member(9.0, 0.0, true)]);
        assert_eq!(decode_alpha(&b, &k1).unwrap().1, 9.0);
    }

    #[test]
    fn config_validation() {
        assert!(RunConfig::new(0, 1).validate().is_err());
        assert!(RunConfig::new(1, 1).with_p_ub(0).validate().is_err());
        assert!(RunConfig::new(1, 1).with_mu_pop(1).validate().is_err());
        assert!(RunConfig::new(5, 1).with_mu_pop(2).validate().is_ok());
    }
}
