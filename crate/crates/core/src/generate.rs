//! Seeded random relations and graphs.

use rand::Rng;

use crate::graph::Graph;
use crate::relation::Relation;

/// Includes each of the `n²` pairs independently with probability `density`.
///
/// Panics if `n` is not a valid carrier size or `density` is outside `[0, 1]`.
pub fn random_relation<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> Relation {
    Relation::from_fn(n, |_, _| rng.gen_bool(density)).expect("valid carrier size")
}

pub fn random_graph<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("endpoints below n")
}
