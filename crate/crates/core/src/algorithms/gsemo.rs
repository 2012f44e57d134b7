use super::{standard_bit_mutation, Archive, Member, Outcome, RunConfig, RunResult};
use crate::error::Result;
use crate::model::{dominates, strongly_dominates};
use crate::problems::BiObjective;
use crate::rng::SplitMix64;
use crate::solution::Solution;

/// Global SEMO.
pub fn run_gsemo<P: BiObjective + ?Sized>(problem: &P, cfg: &RunConfig) -> Result<RunResult> {
    run_gsemo_observed(problem, cfg, |_| {})
}

/// GSEMO, calling `observe` with the archive after every iteration.
pub fn run_gsemo_observed<P, F>(problem: &P, cfg: &RunConfig, mut observe: F) -> Result<RunResult>
where
    P: BiObjective + ?Sized,
    F: FnMut(&Archive),
{
    cfg.validate()?;
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
        if !archive
            .members
            .iter()
            .any(|m| strongly_dominates(&m.objectives, &fy))
        {
            archive.members.retain(|m| !dominates(&fy, &m.objectives));
            archive.members.push(Member::new(y, eval));
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
