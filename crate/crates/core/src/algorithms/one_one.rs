use super::{standard_bit_mutation, Outcome, RunConfig, RunResult};
use crate::error::Result;
use crate::problems::SingleObjective;
use crate::rng::SplitMix64;
use crate::solution::Solution;

/// (1+1) EA minimizing `problem`; offspring replace the parent on `f(y) ≤ f(x)`.
pub fn run_one_one_ea<P: SingleObjective + ?Sized>(problem: &P, cfg: &RunConfig) -> Result<RunResult> {
    cfg.validate()?;
    let mut rng = SplitMix64::new(cfg.seed);
    let mut x = Solution::random(problem.ground_size(), &mut rng);
    let mut fx = problem.fitness(&x);
    let mut evaluations = 1;
    let mut trace = vec![(1, fx)];

    while evaluations < cfg.budget {
        let y = standard_bit_mutation(&x, &mut rng);
        let fy = problem.fitness(&y);
        evaluations += 1;
        if fy <= fx {
            if fy < fx {
                trace.push((evaluations, fy));
            }
            x = y;
            fx = fy;
        }
    }

    let feasible = problem.is_feasible(&x);
    Ok(RunResult {
        outcome: Outcome::Best {
            solution: x,
            fitness: fx,
            feasible,
        },
        evaluations_used: evaluations,
        max_pop: 1,
        trace,
    })
}
