//! Seeded random graphs with a prescribed maximum-degree floor whose every
//! nonempty vertex set has positive potential.

use madsq_core::density::{check_mad_bound, min_potential_containing, PotentialParams};
use madsq_core::error::DensityError;
use madsq_core::{Graph, GraphBuilder};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplerConfig {
    pub vertex_count: usize,
    pub target_params: PotentialParams,
    pub delta_min: usize,
    pub seed: u64,
    /// Candidate edges tried in total, accepted or not.
    pub max_attempts: usize,
}

impl SamplerConfig {
    pub fn new(
        vertex_count: usize,
        target_params: PotentialParams,
        delta_min: usize,
        seed: u64,
    ) -> Self {
        SamplerConfig {
            vertex_count,
            target_params,
            delta_min,
            seed,
            max_attempts: 20 * vertex_count,
        }
    }
}

#[derive(Debug, Error)]
pub enum SampleError {
    #[error("invalid sampler configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("max attempts ({attempts}) exhausted with maximum degree {reached}, wanted {wanted}")]
    Exhausted {
        attempts: usize,
        reached: usize,
        wanted: usize,
    },
    #[error("sampled graph failed the global density check")]
    GlobalCheckFailed,
    #[error(transparent)]
    Density(#[from] DensityError),
}

struct Sampler {
    b: GraphBuilder,
    p: PotentialParams,
    attempts: usize,
    max_attempts: usize,
}

impl Sampler {
    /// Inserts `uv` unless some set containing both ends would drop below potential 1.
    fn try_insert(&mut self, u: usize, v: usize) -> Result<bool, SampleError> {
        self.attempts += 1;
        if u == v || self.b.has_edge(u, v) {
            return Ok(false);
        }
        self.b.add_edge(u, v).expect("endpoints are in range");
        let g = self.b.clone().build();
        if min_potential_containing(&g, self.p, &[u, v])?.value >= 1 {
            Ok(true)
        } else {
            self.b.remove_edge(u, v);
            Ok(false)
        }
    }

    fn exhausted(&self) -> bool {
        self.attempts >= self.max_attempts
    }
}

/// Deterministic per seed. A random hub is joined to `delta_min` other
/// vertices, then random pairs are inserted subject to the potential guard
/// until the attempt budget runs out. The result is re-checked globally.
pub fn sample_sparse_graph(cfg: &SamplerConfig) -> Result<Graph, SampleError> {
    let n = cfg.vertex_count;
    if n == 0 || cfg.delta_min == 0 || cfg.max_attempts == 0 {
        return Err(SampleError::InvalidConfig(
            "vertex_count, delta_min and max_attempts must be positive",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut s = Sampler {
        b: GraphBuilder::new(n),
        p: cfg.target_params,
        attempts: 0,
        max_attempts: cfg.max_attempts,
    };

    let hub = rng.gen_range(0..n);
    let mut others: Vec<usize> = (0..n).filter(|&v| v != hub).collect();
    others.shuffle(&mut rng);
    let mut hub_degree = 0;
    for &v in &others {
        if hub_degree >= cfg.delta_min || s.exhausted() {
            break;
        }
        if s.try_insert(hub, v)? {
            hub_degree += 1;
        }
    }
    if hub_degree < cfg.delta_min {
        return Err(SampleError::Exhausted {
            attempts: s.attempts,
            reached: hub_degree,
            wanted: cfg.delta_min,
        });
    }

    while n > 1 && !s.exhausted() {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        s.try_insert(u, v)?;
    }

    let g = s.b.build();
    if !check_mad_bound(&g, cfg.target_params)?.holds {
        return Err(SampleError::GlobalCheckFailed);
    }
    Ok(g)
}
