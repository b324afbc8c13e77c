//! Paths, cycles, cliques, grids and seeded random graphs.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ZooError;
use crate::graph::Graph;

/// A standard family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Clique(usize),
    /// `rows × cols` grid with vertex `r * cols + c`.
    Grid(usize, usize),
    /// `G(n, p)` drawn from a ChaCha8 stream seeded with `seed`.
    Random {
        n: usize,
        p: f64,
        seed: u64,
    },
}

pub fn gen_standard(family: Family) -> Result<Graph, ZooError> {
    let bad = |m: &str| Err(ZooError::Config(m.to_string()));
    let (n, edges): (usize, Vec<(usize, usize)>) = match family {
        Family::Path(n) => {
            if n == 0 {
                return bad("path needs at least one vertex");
            }
            (n, (1..n).map(|i| (i - 1, i)).collect())
        }
        Family::Cycle(n) => {
            if n < 3 {
                return bad("cycle needs at least three vertices");
            }
            (n, (0..n).map(|i| (i, (i + 1) % n)).collect())
        }
        Family::Clique(n) => {
            if n == 0 {
                return bad("clique needs at least one vertex");
            }
            (n, (0..n).tuple_combinations().collect())
        }
        Family::Grid(p, q) => {
            if p == 0 || q == 0 {
                return bad("grid needs positive dimensions");
            }
            let mut e = Vec::new();
            for r in 0..p {
                for c in 0..q {
                    let v = r * q + c;
                    if c + 1 < q {
                        e.push((v, v + 1));
                    }
                    if r + 1 < p {
                        e.push((v, v + q));
                    }
                }
            }
            (p * q, e)
        }
        Family::Random { n, p, seed } => {
            if n == 0 || !(0.0..=1.0).contains(&p) {
                return bad("random graph needs n ≥ 1 and 0 ≤ p ≤ 1");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (
                n,
                (0..n)
                    .tuple_combinations()
                    .filter(|_| rng.gen_bool(p))
                    .collect(),
            )
        }
    };
    Ok(Graph::new(n, &edges)?)
}
