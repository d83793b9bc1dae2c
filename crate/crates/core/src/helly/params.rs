use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Sampling knobs shared by the randomized algorithms.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleParams {
    /// Oversampling constant in `p = c ln n / (ε n)`.
    pub c: f64,
    pub seed: u64,
    /// Overrides the default `ε` of the calling algorithm.
    pub eps: Option<f64>,
    /// Independent repetitions; `None` means `⌈log2 n⌉ + 3`.
    pub repeats: Option<u32>,
    /// Run the desk-scale Helly oracle before the algorithm.
    pub verify_class: bool,
}

impl Default for SampleParams {
    fn default() -> Self {
        SampleParams { c: 3.0, seed: 0, eps: None, repeats: None, verify_class: false }
    }
}

impl SampleParams {
    pub fn with_seed(seed: u64) -> Self {
        SampleParams { seed, ..Self::default() }
    }

    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<()> {
        if !(self.c >= 1.0) {
            return Err(Error::BadParams(format!("c = {} must be at least 1", self.c)));
        }
        if let Some(eps) = self.eps {
            if !(eps > 0.0 && eps < 1.0) {
                return Err(Error::BadParams(format!("eps = {eps} must lie in (0, 1)")));
            }
        }
        if self.repeats == Some(0) {
            return Err(Error::BadParams("repeats must be positive".into()));
        }
        Ok(())
    }

    pub fn repeats_for(&self, n: usize) -> u32 {
        self.repeats.unwrap_or_else(|| default_repeats(n))
    }

    /// Independent generator for one step of one call.
    pub(crate) fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

/// `⌈log2 n⌉ + 3`.
pub fn default_repeats(n: usize) -> u32 {
    (usize::BITS - n.max(1).saturating_sub(1).leading_zeros()) + 3
}
