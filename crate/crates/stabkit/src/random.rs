//! Random test instances: random graphs plus random local Clifford
//! scramblings. Every stabilizer state is locally Clifford equivalent to a
//! graph state, so this construction reaches every state up to local
//! Clifford equivalence.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::graphstate::{graph_state, Graph};
use crate::lclifford::random_lc_with_rng;
use crate::stabilizer::StabilizerGroup;

/// A graph with each edge present independently with probability 1/2.
pub fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen() {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("random edges are valid")
}

/// A connected random graph, by rejection.
pub fn random_connected_graph(n: usize, rng: &mut impl Rng) -> Graph {
    loop {
        let g = random_graph(n, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// A random stabilizer group: random graph state scrambled by a random
/// local Clifford operation.
pub fn random_stabilizer(n: usize, rng: &mut impl Rng) -> StabilizerGroup {
    let base = graph_state(&random_graph(n, rng));
    random_lc_with_rng(n, rng)
        .apply(&base)
        .expect("dimensions match")
}

/// A random fully entangled stabilizer group: connected random graph state
/// scrambled by a random local Clifford operation.
pub fn random_fully_entangled(n: usize, rng: &mut impl Rng) -> StabilizerGroup {
    let base = graph_state(&random_connected_graph(n, rng));
    random_lc_with_rng(n, rng)
        .apply(&base)
        .expect("dimensions match")
}

/// Seeded convenience wrapper around [`random_stabilizer`].
pub fn random_stabilizer_seeded(n: usize, seed: u64) -> StabilizerGroup {
    random_stabilizer(n, &mut StdRng::seed_from_u64(seed))
}
