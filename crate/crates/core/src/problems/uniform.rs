use crate::error::{Error, Result};
use crate::model::{g_value, Confidence, ObjectiveVector, StochItem};
use crate::solution::Solution;

/// Subset selection with the uniform constraint `|x|₁ ≥ k`.
#[derive(Debug, Clone, PartialEq)]
pub struct UniformInstance {
    items: Vec<StochItem>,
    k: usize,
    sum_mu: f64,
    sum_var: f64,
}

impl UniformInstance {
    pub fn new(items: Vec<StochItem>, k: usize) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::domain("instance has no items"));
        }
        if k == 0 || k > items.len() {
            return Err(Error::domain(format!(
                "cardinality bound k = {k} outside [1, {}]",
                items.len()
            )));
        }
        let sum_mu = items.iter().map(StochItem::mu).sum();
        let sum_var = items.iter().map(StochItem::var).sum();
        Ok(UniformInstance {
            items,
            k,
            sum_mu,
            sum_var,
        })
    }

    pub fn items(&self) -> &[StochItem] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Per-unit penalty of the expectation objective, `1 + Σμ_i`.
    pub fn penalty_mu(&self) -> f64 {
        1.0 + self.sum_mu
    }

    /// Per-unit penalty of the variance objective, `1 + Σσ_i²`.
    pub fn penalty_var(&self) -> f64 {
        1.0 + self.sum_var
    }

    /// `L = 1 + Σμ_i + K_α·(Σσ_i²)^½`, larger than `g` of any subset.
    pub fn penalty_unit(&self, conf: &Confidence) -> f64 {
        1.0 + self.sum_mu + conf.k_alpha() * self.sum_var.sqrt()
    }

    fn check_len(&self, x: &Solution) {
        assert_eq!(
            x.len(),
            self.items.len(),
            "solution length does not match instance"
        );
    }

    /// `(Σμ_i x_i, Σσ_i² x_i)` without penalties.
    pub fn sums(&self, x: &Solution) -> (f64, f64) {
        self.check_len(x);
        x.iter_ones().fold((0.0, 0.0), |(m, v), i| {
            (m + self.items[i].mu(), v + self.items[i].var())
        })
    }

    pub fn is_feasible(&self, x: &Solution) -> bool {
        self.check_len(x);
        x.count_ones() >= self.k
    }

    /// Single-objective fitness: `g(x)` when feasible, `(k − |x|₁)·L` otherwise.
    pub fn penalized_fitness(&self, x: &Solution, conf: &Confidence) -> f64 {
        let ones = x.count_ones();
        if ones >= self.k {
            let (m, v) = self.sums(x);
            g_value(m, v, conf)
        } else {
            self.check_len(x);
            (self.k - ones) as f64 * self.penalty_unit(conf)
        }
    }

    /// Penalized bi-objective vector.
    pub fn objectives(&self, x: &Solution) -> ObjectiveVector {
        let ones = x.count_ones();
        if ones >= self.k {
            let (m, v) = self.sums(x);
            ObjectiveVector::new(m, v)
        } else {
            self.check_len(x);
            let missing = (self.k - ones) as f64;
            ObjectiveVector::new(missing * self.penalty_mu(), missing * self.penalty_var())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> UniformInstance {
        UniformInstance::new(
            vec![
                StochItem::new(1.0, 1.0).unwrap(),
                StochItem::new(2.0, 4.0).unwrap(),
            ],
            1,
        )
        .unwrap()
    }

    #[test]
    fn single_objective_examples() {
        let inst = small();
        let k1 = Confidence::from_k_alpha(1.0).unwrap();
        let x11 = Solution::from_bits(vec![true, true]);
        assert!((inst.penalized_fitness(&x11, &k1) - (3.0 + 5f64.sqrt())).abs() < 1e-12);
        let x00 = Solution::zeros(2);
        assert!((inst.penalized_fitness(&x00, &k1) - (1.0 + 3.0 + 5f64.sqrt())).abs() < 1e-12);
        let x10 = Solution::from_bits(vec![true, false]);
        assert_eq!(inst.penalized_fitness(&x10, &k1), 2.0);
    }

    #[test]
    fn bi_objective_examples() {
        let inst = small();
        let ov = |m, v| ObjectiveVector::new(m, v);
        assert_eq!(inst.objectives(&Solution::from_bits(vec![true, true])), ov(3.0, 5.0));
        assert_eq!(inst.objectives(&Solution::zeros(2)), ov(4.0, 6.0));
        assert_eq!(inst.objectives(&Solution::from_bits(vec![false, true])), ov(2.0, 4.0));
    }

    #[test]
    fn rejects_bad_k() {
        let items = vec![StochItem::new(1.0, 1.0).unwrap()];
        assert!(UniformInstance::new(items.clone(), 0).is_err());
        assert!(UniformInstance::new(items, 2).is_err());
        assert!(UniformInstance::new(vec![], 1).is_err());
    }

    #[test]
    #[should_panic(expected = "does not match")]
    fn length_mismatch_panics() {
        small().objectives(&Solution::ones(3));
    }
}
