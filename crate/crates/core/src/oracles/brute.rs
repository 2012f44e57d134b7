use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lambda::exact_int;
use crate::model::{f_lambda, ObjectiveVector};
use crate::solution::Solution;

/// Largest ground set that exhaustive enumeration accepts.
pub const ENUMERATION_LIMIT: usize = 24;

fn check_size(n: usize) -> Result<()> {
    if n > ENUMERATION_LIMIT {
        Err(Error::TooLarge {
            size: n,
            limit: ENUMERATION_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// Pareto front and extreme points of the feasible region, by enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceFront {
    /// Distinct non-dominated vectors by increasing expectation.
    pub front: Vec<ObjectiveVector>,
    /// Extreme points by increasing expectation.
    pub extreme: Vec<ObjectiveVector>,
}

/// Non-dominated subset of distinct vectors, sorted by increasing `mu`.
pub fn pareto_front(points: &[ObjectiveVector]) -> Vec<ObjectiveVector> {
    let mut sorted = points.to_vec();
    sorted.sort_by(|a, b| a.mu.total_cmp(&b.mu).then(a.var.total_cmp(&b.var)));
    let mut front: Vec<ObjectiveVector> = Vec::new();
    for p in sorted {
        if front.last().is_none_or(|last| p.var < last.var) {
            front.push(p);
        }
    }
    front
}

/// Relation between `f_λ(a)` and `f_λ(b)` at the weighting where the front
/// points `p` and `q` tie.
fn compare_at_slope(
    p: &ObjectiveVector,
    q: &ObjectiveVector,
    a: &ObjectiveVector,
    b: &ObjectiveVector,
) -> Ordering {
    // λ = num / (num + den) with num = p.var − q.var and den = q.mu − p.mu.
    let exact = (|| {
        let num = exact_int(p.var)? - exact_int(q.var)?;
        let den = exact_int(q.mu)? - exact_int(p.mu)?;
        let fa = num * exact_int(a.mu)? + den * exact_int(a.var)?;
        let fb = num * exact_int(b.mu)? + den * exact_int(b.var)?;
        Some(fa.cmp(&fb))
    })();
    exact.unwrap_or_else(|| {
        let num = p.var - q.var;
        let lambda = num / (num + (q.mu - p.mu));
        let (fa, fb) = (f_lambda(a, lambda), f_lambda(b, lambda));
        if (fa - fb).abs() <= 1e-12 * fa.abs().max(fb.abs()).max(1.0) {
            Ordering::Equal
        } else {
            fa.total_cmp(&fb)
        }
    })
}

/// Definition-1 extreme points of a Pareto front: for `λ = 0`, `λ = 1` and
/// every slope between two front points, the maximal-variance minimizer of
/// `f_λ`.
pub fn extreme_points_of_front(front: &[ObjectiveVector]) -> Vec<ObjectiveVector> {
    if front.is_empty() {
        return Vec::new();
    }
    let mut chosen: Vec<ObjectiveVector> = Vec::new();
    let mut push = |p: ObjectiveVector| {
        if !chosen.contains(&p) {
            chosen.push(p);
        }
    };
    // Front is sorted by increasing mu, hence decreasing var.
    push(front[0]);
    push(front[front.len() - 1]);
    for i in 0..front.len() {
        for j in i + 1..front.len() {
            let (p, q) = (&front[i], &front[j]);
            let mut best = 0;
            for c in 1..front.len() {
                match compare_at_slope(p, q, &front[c], &front[best]) {
                    Ordering::Less => best = c,
                    Ordering::Equal if front[c].var > front[best].var => best = c,
                    _ => {}
                }
            }
            push(front[best]);
        }
    }
    chosen.sort_by(|a, b| a.mu.total_cmp(&b.mu));
    chosen
}

/// Enumerates all `2^n` bitstrings and returns the front of the feasible ones.
pub fn brute_force_front<F, E>(n: usize, feasible: F, evaluate: E) -> Result<BruteForceFront>
where
    F: Fn(&Solution) -> bool + Sync,
    E: Fn(&Solution) -> ObjectiveVector + Sync,
{
    check_size(n)?;
    let points: Vec<ObjectiveVector> = (0u64..1 << n)
        .into_par_iter()
        .filter_map(|mask| {
            let x = Solution::from_mask(mask, n);
            feasible(&x).then(|| evaluate(&x))
        })
        .collect();
    let front = pareto_front(&points);
    let extreme = extreme_points_of_front(&front);
    Ok(BruteForceFront { front, extreme })
}

/// Minimum of a scalar fitness over all `2^n` bitstrings.
pub fn brute_force_optimum<F>(n: usize, fitness: F) -> Result<f64>
where
    F: Fn(&Solution) -> f64 + Sync,
{
    check_size(n)?;
    Ok((0u64..1 << n)
        .into_par_iter()
        .map(|mask| fitness(&Solution::from_mask(mask, n)))
        .reduce(|| f64::INFINITY, f64::min))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Confidence, StochItem};
    use crate::problems::UniformInstance;

    fn inst(raw: &[(f64, f64)], k: usize) -> UniformInstance {
        let items = raw.iter().map(|&(m, v)| StochItem::new(m, v).unwrap()).collect();
        UniformInstance::new(items, k).unwrap()
    }

    fn ov(m: f64, v: f64) -> ObjectiveVector {
        ObjectiveVector::new(m, v)
    }

    #[test]
    fn dominated_item_leaves_single_front_point() {
        let i = inst(&[(1.0, 1.0), (2.0, 4.0)], 1);
        let bf = brute_force_front(2, |x| i.is_feasible(x), |x| i.objectives(x)).unwrap();
        assert_eq!(bf.front, vec![ov(1.0, 1.0)]);
        assert_eq!(bf.extreme, vec![ov(1.0, 1.0)]);
    }

    #[test]
    fn incomparable_items_are_both_extreme() {
        let i = inst(&[(3.0, 1.0), (1.0, 2.0)], 1);
        let bf = brute_force_front(2, |x| i.is_feasible(x), |x| i.objectives(x)).unwrap();
        assert_eq!(bf.front, vec![ov(1.0, 2.0), ov(3.0, 1.0)]);
        assert_eq!(bf.extreme, bf.front);
    }

    #[test]
    fn collinear_front_point_is_not_extreme() {
        let front = vec![ov(0.0, 4.0), ov(2.0, 2.0), ov(4.0, 0.0)];
        assert_eq!(extreme_points_of_front(&front), vec![ov(0.0, 4.0), ov(4.0, 0.0)]);
    }

    #[test]
    fn optimum_examples() {
        let k1 = Confidence::from_k_alpha(1.0).unwrap();
        let i = inst(&[(1.0, 1.0); 3], 1);
        let opt = brute_force_optimum(3, |x| i.penalized_fitness(x, &k1)).unwrap();
        assert_eq!(opt, 2.0);

        let all = inst(&[(1.0, 1.0), (2.0, 3.0)], 2);
        let opt = brute_force_optimum(2, |x| all.penalized_fitness(x, &k1)).unwrap();
        assert!((opt - (3.0 + 2.0)).abs() < 1e-12);
    }

    #[test]
    fn refuses_large_ground_sets() {
        assert!(matches!(
            brute_force_optimum(25, |_| 0.0),
            Err(Error::TooLarge { size: 25, .. })
        ));
    }
}
