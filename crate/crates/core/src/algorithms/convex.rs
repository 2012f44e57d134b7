use super::{standard_bit_mutation, Archive, Member, Outcome, RunConfig, RunResult};
use crate::error::{Error, Result};
use crate::hull::{convex_hull_rank, envelope_indices, is_on_envelope};
use crate::model::dominates;
use crate::problems::BiObjective;
use crate::rng::SplitMix64;
use crate::solution::Solution;

/// Convex GSEMO with population cap `cfg.p_ub`.
pub fn run_convex_gsemo<P: BiObjective + ?Sized>(problem: &P, cfg: &RunConfig) -> Result<RunResult> {
    run_convex_gsemo_observed(problem, cfg, |_| {})
}

/// Convex GSEMO, calling `observe` with the archive after every iteration.
pub fn run_convex_gsemo_observed<P, F>(
    problem: &P,
    cfg: &RunConfig,
    mut observe: F,
) -> Result<RunResult>
where
    P: BiObjective + ?Sized,
    F: FnMut(&Archive),
{
    cfg.validate()?;
    let p_ub = cfg
        .p_ub
        .ok_or_else(|| Error::domain("Convex GSEMO requires a population cap"))?;
    let mut rng = SplitMix64::new(cfg.seed);
    let x = Solution::random(problem.ground_size(), &mut rng);
    let eval = problem.evaluate(&x);
    let mut archive = Archive::default();
    archive.members.push(Member::new(x, eval));
    archive.note_size();
    let mut evaluations = 1;
    observe(&archive);

    while evaluations < cfg.budget {
        let parent = rng.below(archive.len() as u64) as usize;
        let y = standard_bit_mutation(&archive.members[parent].solution, &mut rng);
        let eval = problem.evaluate(&y);
        evaluations += 1;
        let fy = eval.objectives;
        if is_on_envelope(&fy, &archive.objectives()) {
            archive.members.retain(|m| !dominates(&fy, &m.objectives));
            archive.members.push(Member::new(y, eval));

            let mut keep = envelope_indices(&archive.objectives());
            keep.sort_unstable();
            let mut keep = keep.into_iter().peekable();
            let mut index = 0;
            archive.members.retain(|_| {
                let kept = keep.peek() == Some(&index);
                if kept {
                    keep.next();
                }
                index += 1;
                kept
            });

            if archive.len() > p_ub {
                let worst = archive
                    .members
                    .iter()
                    .enumerate()
                    .max_by(|(i, a), (j, b)| {
                        a.objectives.var.total_cmp(&b.objectives.var).then(j.cmp(i))
                    })
                    .map(|(i, _)| i)
                    .expect("archive is non-empty");
                archive.members.remove(worst);
            }
            archive.note_size();
        }
        observe(&archive);
    }

    Ok(RunResult {
        max_pop: archive.max_size_seen,
        outcome: Outcome::Archive(archive),
        evaluations_used: evaluations,
        trace: Vec::new(),
    })
}

/// Convex (μ+1)-EA with population size `cfg.mu_pop`: after each offspring,
/// the member maximal in `(hull rank, variance)` is removed, the oldest
/// first among ties.
pub fn run_convex_mu_ea<P: BiObjective + ?Sized>(problem: &P, cfg: &RunConfig) -> Result<RunResult> {
    cfg.validate()?;
    let mu = cfg
        .mu_pop
        .ok_or_else(|| Error::domain("Convex (mu+1)-EA requires a population size"))?;
    if cfg.budget < mu as u64 {
        return Err(Error::domain(format!(
            "budget {} cannot pay for {mu} initial evaluations",
            cfg.budget
        )));
    }
    let mut rng = SplitMix64::new(cfg.seed);
    let mut population = Archive::default();
    for _ in 0..mu {
        let x = Solution::random(problem.ground_size(), &mut rng);
        let eval = problem.evaluate(&x);
        population.members.push(Member::new(x, eval));
    }
    population.note_size();
    let mut evaluations = mu as u64;

    while evaluations < cfg.budget {
        let parent = rng.below(mu as u64) as usize;
        let y = standard_bit_mutation(&population.members[parent].solution, &mut rng);
        let eval = problem.evaluate(&y);
        evaluations += 1;
        population.members.push(Member::new(y, eval));

        let ranks = convex_hull_rank(&population.objectives()).ranks();
        let mut worst = 0;
        for i in 1..population.len() {
            let key = (ranks[i], population.members[i].objectives.var);
            let best = (ranks[worst], population.members[worst].objectives.var);
            if key.0 > best.0 || (key.0 == best.0 && key.1 > best.1) {
                worst = i;
            }
        }
        population.members.remove(worst);
    }

    Ok(RunResult {
        max_pop: population.max_size_seen,
        outcome: Outcome::Archive(population),
        evaluations_used: evaluations,
        trace: Vec::new(),
    })
}
