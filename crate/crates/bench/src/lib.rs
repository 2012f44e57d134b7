//! Fixtures shared by the criterion benches.

use ccpareto::harness::random_uniform_instance;
use ccpareto::{ObjectiveVector, SplitMix64, UniformInstance};

/// Points scattered in a square, roughly a third of them near a convex front.
pub fn point_cloud(n: usize, seed: u64) -> Vec<ObjectiveVector> {
    let mut rng = SplitMix64::new(seed);
    (0..n)
        .map(|i| {
            let t = rng.next_f64();
            if i % 3 == 0 {
                ObjectiveVector::new(1000.0 * t, 1000.0 * (1.0 - t).powi(2))
            } else {
                ObjectiveVector::new(1000.0 * t, 1000.0 * rng.next_f64())
            }
        })
        .collect()
}

/// Random integer uniform instance with k = n/2.
pub fn uniform(n: usize, seed: u64) -> UniformInstance {
    random_uniform_instance(n, n / 2, 50, &mut SplitMix64::new(seed)).expect("valid sizes")
}
