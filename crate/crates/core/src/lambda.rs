//! Weightings `λ` of the scalarization `f_λ`, the pairwise order-switch
//! thresholds `λ_{i,j}` and the threshold set `Λ`.
//!
//! Integer-valued inputs are handled with exact rational arithmetic so that
//! ties at a threshold are real ties rather than rounding accidents.

use std::cmp::Ordering;

use crate::model::{f_lambda, StochItem};

/// Largest magnitude for which an `f64` integer is handled exactly.
const EXACT_LIMIT: f64 = 9_007_199_254_740_992.0; // 2^53

/// Returns the value as an integer when it is integral and exactly representable.
#[inline]
pub fn exact_int(x: f64) -> Option<i128> {
    if x.fract() == 0.0 && x.abs() <= EXACT_LIMIT {
        Some(x as i128)
    } else {
        None
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A reduced rational `num / den` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: i128,
    den: i128,
}

impl Ratio {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den).max(1);
        let sign = if den < 0 { -1 } else { 1 };
        Ratio {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact threshold for integer-valued items, if both items are integral.
pub fn exact_threshold(a: &StochItem, b: &StochItem) -> Option<Option<Ratio>> {
    let (mu_a, var_a) = (exact_int(a.mu())?, exact_int(a.var())?);
    let (mu_b, var_b) = (exact_int(b.mu())?, exact_int(b.var())?);
    if var_a < var_b && mu_a > mu_b {
        Some(Some(Ratio::new(var_b - var_a, (mu_a - mu_b) + (var_b - var_a))))
    } else {
        Some(None)
    }
}

/// The weighting at which `f_λ(a)` and `f_λ(b)` swap order, defined only
/// for incomparable pairs with `var(a) < var(b)` and `mu(a) > mu(b)`.
pub fn lambda_threshold(a: &StochItem, b: &StochItem) -> Option<f64> {
    if let Some(exact) = exact_threshold(a, b) {
        return exact.map(|r| r.to_f64());
    }
    if a.var() < b.var() && a.mu() > b.mu() {
        let dv = b.var() - a.var();
        Some(dv / ((a.mu() - b.mu()) + dv))
    } else {
        None
    }
}

/// Sorted distinct thresholds of an item list, framed by 0 and 1.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaSet {
    values: Vec<f64>,
    exact: Option<Vec<Ratio>>,
    pair_count: usize,
}

impl LambdaSet {
    /// Λ over all ordered incomparable pairs of `items`.
    pub fn from_items(items: &[StochItem]) -> Self {
        let all_integral = items
            .iter()
            .all(|it| exact_int(it.mu()).is_some() && exact_int(it.var()).is_some());
        let mut pair_count = 0;
        if all_integral {
            let mut ratios = vec![Ratio::new(0, 1), Ratio::new(1, 1)];
            for a in items {
                for b in items {
                    if let Some(Some(r)) = exact_threshold(a, b) {
                        pair_count += 1;
                        ratios.push(r);
                    }
                }
            }
            ratios.sort();
            ratios.dedup();
            let values = ratios.iter().map(Ratio::to_f64).collect();
            LambdaSet {
                values,
                exact: Some(ratios),
                pair_count,
            }
        } else {
            let mut values = vec![0.0, 1.0];
            for a in items {
                for b in items {
                    if let Some(t) = lambda_threshold(a, b) {
                        pair_count += 1;
                        values.push(t);
                    }
                }
            }
            values.sort_by(f64::total_cmp);
            values.dedup_by(|x, y| (*x - *y).abs() <= 1e-12);
            // Tolerance dedup may have swallowed the 1.0 endpoint.
            if let Some(last) = values.last_mut() {
                *last = 1.0;
            }
            LambdaSet {
                values,
                exact: None,
                pair_count,
            }
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Exact rationals parallel to [`values`](Self::values) for integer inputs.
    pub fn exact(&self) -> Option<&[Ratio]> {
        self.exact.as_deref()
    }

    /// Number of incomparable item pairs `ℓ`.
    pub fn pair_count(&self) -> usize {
        self.pair_count
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The weightings to evaluate greedy oracles at, endpoints mapped to
    /// their lexicographic forms.
    pub fn weightings(&self) -> Vec<Weighting> {
        let last = self.values.len() - 1;
        (0..=last)
            .map(|i| {
                if i == 0 {
                    Weighting::VarianceFirst
                } else if i == last {
                    Weighting::ExpectationFirst
                } else {
                    match &self.exact {
                        Some(r) => Weighting::Exact(r[i]),
                        None => Weighting::Real(self.values[i]),
                    }
                }
            })
            .collect()
    }
}

/// `Λ` for a list of items.
pub fn lambda_set(items: &[StochItem]) -> LambdaSet {
    LambdaSet::from_items(items)
}

/// A scalarization of the two objectives used to order items.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Weighting {
    /// `λ = 0`: lexicographic on `(var, mu)`.
    VarianceFirst,
    /// `λ = 1`: lexicographic on `(mu, var)`.
    ExpectationFirst,
    /// Interior rational `λ`.
    Exact(Ratio),
    /// Interior real `λ`.
    Real(f64),
}

impl Weighting {
    pub fn from_lambda(lambda: f64) -> Self {
        if lambda <= 0.0 {
            Weighting::VarianceFirst
        } else if lambda >= 1.0 {
            Weighting::ExpectationFirst
        } else {
            Weighting::Real(lambda)
        }
    }

    pub fn lambda(&self) -> f64 {
        match self {
            Weighting::VarianceFirst => 0.0,
            Weighting::ExpectationFirst => 1.0,
            Weighting::Exact(r) => r.to_f64(),
            Weighting::Real(l) => *l,
        }
    }

    /// Greedy order of two items: increasing `f_λ`; ties go to the larger
    /// variance so greedy selections are the maximal-variance optimum.
    pub fn compare_items(&self, a: &StochItem, b: &StochItem) -> Ordering {
        match self {
            Weighting::VarianceFirst => a
                .var()
                .total_cmp(&b.var())
                .then(a.mu().total_cmp(&b.mu())),
            Weighting::ExpectationFirst => a
                .mu()
                .total_cmp(&b.mu())
                .then(a.var().total_cmp(&b.var())),
            Weighting::Exact(r) => {
                let exact = (|| {
                    let (ma, va) = (exact_int(a.mu())?, exact_int(a.var())?);
                    let (mb, vb) = (exact_int(b.mu())?, exact_int(b.var())?);
                    let (p, q) = (r.num(), r.den());
                    let fa = p.checked_mul(ma)?.checked_add((q - p).checked_mul(va)?)?;
                    let fb = p.checked_mul(mb)?.checked_add((q - p).checked_mul(vb)?)?;
                    Some(fa.cmp(&fb))
                })();
                exact
                    .unwrap_or_else(|| {
                        let l = r.to_f64();
                        f_lambda(&a.as_point(), l).total_cmp(&f_lambda(&b.as_point(), l))
                    })
                    .then(b.var().total_cmp(&a.var()))
            }
            Weighting::Real(l) => f_lambda(&a.as_point(), *l)
                .total_cmp(&f_lambda(&b.as_point(), *l))
                .then(b.var().total_cmp(&a.var())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn it(mu: f64, var: f64) -> StochItem {
        StochItem::new(mu, var).unwrap()
    }

    #[test]
    fn threshold_examples() {
        let t = lambda_threshold(&it(3.0, 1.0), &it(1.0, 2.0)).unwrap();
        assert!((t - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(lambda_threshold(&it(1.0, 1.0), &it(2.0, 2.0)), None);
        assert_eq!(lambda_threshold(&it(5.0, 1.0), &it(1.0, 5.0)), Some(0.5));
        // Only the orientation var(a) < var(b) defines a threshold.
        assert_eq!(lambda_threshold(&it(1.0, 2.0), &it(3.0, 1.0)), None);
    }

    #[test]
    fn real_valued_threshold() {
        let t = lambda_threshold(&it(3.5, 1.0), &it(1.0, 2.25)).unwrap();
        assert!((t - 1.25 / (2.5 + 1.25)).abs() < 1e-15);
    }

    #[test]
    fn set_examples() {
        let comparable = lambda_set(&[it(1.0, 1.0), it(2.0, 2.0)]);
        assert_eq!(comparable.values(), &[0.0, 1.0]);
        assert_eq!(comparable.pair_count(), 0);

        let single = lambda_set(&[it(3.0, 1.0), it(1.0, 2.0)]);
        assert_eq!(single.len(), 3);
        assert!((single.values()[1] - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(single.pair_count(), 1);
    }

    #[test]
    fn duplicate_thresholds_collapse() {
        // Both pairs switch at 1/2.
        let set = lambda_set(&[it(2.0, 1.0), it(1.0, 2.0), it(3.0, 2.0), it(2.0, 3.0)]);
        assert!(set.values().contains(&0.5));
        let halves = set.values().iter().filter(|v| **v == 0.5).count();
        assert_eq!(halves, 1);
    }

    #[test]
    fn ratio_ordering() {
        assert!(Ratio::new(1, 3) < Ratio::new(1, 2));
        assert_eq!(Ratio::new(2, 4), Ratio::new(1, 2));
        assert_eq!(Ratio::new(-1, -2), Ratio::new(1, 2));
    }

    #[test]
    fn exact_weighting_ties_prefer_variance() {
        let a = it(3.0, 1.0);
        let b = it(1.0, 2.0);
        let w = Weighting::Exact(Ratio::new(1, 3));
        assert_eq!(w.compare_items(&b, &a), Ordering::Less);
        assert_eq!(w.compare_items(&a, &b), Ordering::Greater);
    }
}
