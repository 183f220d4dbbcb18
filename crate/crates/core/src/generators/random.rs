use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_max, check_min, finish, GeneratorError};
use crate::graph::Graph;

/// Random connected graph: a random recursive spanning tree plus every other
/// pair independently with probability `p`. Deterministic for a given seed.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    check_min("random", "n", n as u32, 1)?;
    check_max("random", "n", n as u32, 2000)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut tree = vec![usize::MAX; n];
    for (v, parent) in tree.iter_mut().enumerate().skip(1) {
        *parent = rng.gen_range(0..v);
        edges.push((*parent, v));
    }
    for u in 0..n {
        for (v, &parent) in tree.iter().enumerate().skip(u + 1) {
            if parent != u && rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    let labels = (0..n).map(|i| format!("v{i}")).collect();
    Ok(finish(labels, vec![(); n], &edges).0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_and_seeded() {
        for seed in 0..50 {
            let g = random_connected(9, 0.3, seed).unwrap();
            assert!(g.is_connected());
            assert_eq!(g, random_connected(9, 0.3, seed).unwrap());
        }
        assert_eq!(random_connected(6, 1.0, 1).unwrap().size(), 15);
    }
}
