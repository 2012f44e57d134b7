//! Lower-left convex envelopes in `(μ, v)` space and convex hull ranking.
//!
//! The envelope runs from the lexicographic `(μ, v)` minimum to the
//! lexicographic `(v, μ)` minimum and contains strict vertices only:
//! points in the interior of a hull edge are excluded, and repeated
//! objective vectors are represented once (by their highest index).

use std::cmp::Ordering;

use crate::lambda::exact_int;
use crate::model::ObjectiveVector;

/// Sign of the cross product `(a − o) × (b − o)`; exact for integer input.
fn turn(o: &ObjectiveVector, a: &ObjectiveVector, b: &ObjectiveVector) -> Ordering {
    let exact = (|| {
        let (ox, oy) = (exact_int(o.mu)?, exact_int(o.var)?);
        let (ax, ay) = (exact_int(a.mu)?, exact_int(a.var)?);
        let (bx, by) = (exact_int(b.mu)?, exact_int(b.var)?);
        Some(((ax - ox) * (by - oy)).cmp(&((ay - oy) * (bx - ox))))
    })();
    exact.unwrap_or_else(|| {
        let lhs = (a.mu - o.mu) * (b.var - o.var);
        let rhs = (a.var - o.var) * (b.mu - o.mu);
        lhs.total_cmp(&rhs)
    })
}

/// Indices of the envelope vertices of `points`, ordered by increasing `μ`.
pub fn envelope_indices(points: &[ObjectiveVector]) -> Vec<usize> {
    envelope_of(points, (0..points.len()).collect())
}

fn envelope_of(points: &[ObjectiveVector], mut order: Vec<usize>) -> Vec<usize> {
    assert!(!order.is_empty(), "envelope of an empty point set");
    order.sort_by(|&i, &j| {
        let (p, q) = (&points[i], &points[j]);
        p.mu.total_cmp(&q.mu)
            .then(p.var.total_cmp(&q.var))
            .then(j.cmp(&i))
    });
    order.dedup_by(|later, first| points[*later] == points[*first]);

    let mut hull: Vec<usize> = Vec::with_capacity(order.len());
    for i in order {
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            if turn(&points[o], &points[a], &points[i]) == Ordering::Greater {
                break;
            }
            hull.pop();
        }
        hull.push(i);
    }
    // Lower hull past the minimum variance belongs to the lower-right chain.
    let min_var = hull
        .iter()
        .map(|&i| points[i].var)
        .fold(f64::INFINITY, f64::min);
    let end = hull
        .iter()
        .position(|&i| points[i].var == min_var)
        .expect("hull is non-empty");
    hull.truncate(end + 1);
    hull
}

/// Envelope vertices of `points` ordered by increasing `μ`.
pub fn lower_envelope(points: &[ObjectiveVector]) -> Vec<ObjectiveVector> {
    envelope_indices(points)
        .into_iter()
        .map(|i| points[i])
        .collect()
}

/// Points together with their convex hull rank.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedPopulation {
    entries: Vec<(ObjectiveVector, usize)>,
}

impl RankedPopulation {
    pub fn entries(&self) -> &[(ObjectiveVector, usize)] {
        &self.entries
    }

    /// Ranks parallel to the input order.
    pub fn ranks(&self) -> Vec<usize> {
        self.entries.iter().map(|(_, r)| *r).collect()
    }

    pub fn max_rank(&self) -> usize {
        self.entries.iter().map(|(_, r)| *r).max().unwrap_or(0)
    }
}

/// Peels envelopes off the point set: rank `r` is the envelope of what
/// remains after removing ranks `1..r`.
pub fn convex_hull_rank(points: &[ObjectiveVector]) -> RankedPopulation {
    assert!(!points.is_empty(), "ranking an empty population");
    let mut ranks = vec![0usize; points.len()];
    let mut remaining: Vec<usize> = (0..points.len()).collect();
    let mut rank = 1;
    while !remaining.is_empty() {
        for i in envelope_of(points, remaining.clone()) {
            ranks[i] = rank;
        }
        remaining.retain(|&i| ranks[i] == 0);
        rank += 1;
    }
    RankedPopulation {
        entries: points.iter().copied().zip(ranks).collect(),
    }
}

/// True iff `candidate` is a strict vertex of the envelope of
/// `points ∪ {candidate}`; a repeat of an existing point is not.
pub fn is_on_envelope(candidate: &ObjectiveVector, points: &[ObjectiveVector]) -> bool {
    if points.iter().any(|p| p == candidate) {
        return false;
    }
    let mut all = Vec::with_capacity(points.len() + 1);
    all.extend_from_slice(points);
    all.push(*candidate);
    envelope_indices(&all).contains(&points.len())
}
