//! Instances shared by the benchmarks.

use gabidulin_core::{q_cauchy, verify, ExtMatrix, FieldTower};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A random Gabidulin `X` (`k × (n-k)`, `s = 1`) and a uniformly random
/// matrix of the same shape.
pub fn instances(tower: &FieldTower, k: usize, n: usize, seed: u64) -> (ExtMatrix, ExtMatrix) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = verify::random_params(tower, k, n, 1, &mut rng);
    let x = q_cauchy::build(tower, &params).expect("valid params");
    (x, verify::random_matrix(tower, k, n - k, &mut rng))
}
