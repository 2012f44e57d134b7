use crate::rng::SplitMix64;
use crate::solution::Solution;

/// Flips every bit independently with probability `1/n`.
///
/// Draws exactly one bounded integer per bit, so the stream consumption
/// depends only on the length and the generator's rejection events.
pub fn standard_bit_mutation(x: &Solution, rng: &mut SplitMix64) -> Solution {
    let n = x.len() as u64;
    let mut y = x.clone();
    for i in 0..x.len() {
        if rng.below(n) == 0 {
            y.flip(i);
        }
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_bit_always_flips() {
        let mut rng = SplitMix64::new(3);
        let x = Solution::zeros(1);
        for _ in 0..100 {
            assert_eq!(standard_bit_mutation(&x, &mut rng), Solution::ones(1));
        }
    }

    #[test]
    fn mean_hamming_distance_is_one() {
        let mut rng = SplitMix64::new(11);
        let x = Solution::zeros(100);
        let trials = 100_000;
        let total: usize = (0..trials)
            .map(|_| standard_bit_mutation(&x, &mut rng).hamming(&x))
            .sum();
        let mean = total as f64 / trials as f64;
        assert!((mean - 1.0).abs() <= 0.05, "mean distance {mean}");
    }

    #[test]
    fn deterministic_given_seed() {
        let x = Solution::from_mask(0b1011_0110, 8);
        let a = standard_bit_mutation(&x, &mut SplitMix64::new(99));
        let b = standard_bit_mutation(&x, &mut SplitMix64::new(99));
        assert_eq!(a, b);
    }
}
