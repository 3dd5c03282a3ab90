//! Fixtures shared by the relcalc benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use relcalc::generate::random_relation;
use relcalc::Relation;

/// A seeded random relation with the given edge density.
pub fn random(n: usize, density: f64, seed: u64) -> Relation {
    random_relation(n, density, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// A single cycle through all `n` nodes, the worst case for closure depth.
pub fn cycle(n: usize) -> Relation {
    Relation::from_fn(n, |i, j| j == (i + 1) % n).expect("n >= 1")
}
