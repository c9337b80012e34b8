//! Random connected r-regular graphs by the configuration (pairing) model
//! with full rejection.
//!
//! Each attempt shuffles the `n·r` degree stubs and pairs consecutive stubs.
//! Pairings that produce a loop or a repeated edge are rejected, as are
//! disconnected results, so every simple connected r-regular graph on the
//! labeled vertex set is equally likely.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Identifies the sampling procedure and random source, for corpus metadata.
pub const GENERATOR_ID: &str = "configuration-model/chacha8-rand0.8";

pub const MAX_ATTEMPTS: usize = 10_000;

pub fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!(
            "random regular graph needs n >= 3, got {n}"
        )));
    }
    if r >= n {
        return Err(Error::invalid(format!(
            "degree r = {r} must be below n = {n}"
        )));
    }
    if n * r % 2 == 1 {
        return Err(Error::invalid(format!(
            "n·r must be even, got n = {n}, r = {r}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    let mut seen = HashSet::with_capacity(n * r / 2);
    'attempt: for _ in 0..MAX_ATTEMPTS {
        stubs.shuffle(&mut rng);
        seen.clear();
        let mut edges = Vec::with_capacity(n * r / 2);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Generation(format!(
        "no simple connected {r}-regular graph on {n} vertices after {MAX_ATTEMPTS} pairings"
    )))
}
