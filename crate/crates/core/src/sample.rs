//! Seeded random elements for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coef::RatFunc;
use crate::error::Result;
use crate::ncalg::{NcPoly, OreAlgebraSpec};
use crate::ncalg::Strategy;

pub struct ElementSampler {
    rng: ChaCha8Rng,
}

impl ElementSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A small nonzero scalar: `±1`, `±2`, `±q^k` for `|k| ≤ 2`, or `1+q`.
    pub fn scalar(&mut self) -> RatFunc {
        let sign = if self.rng.gen_bool(0.5) { 1 } else { -1 };
        match self.rng.gen_range(0..4) {
            0 => RatFunc::from_int(sign),
            1 => RatFunc::from_int(2 * sign),
            2 => RatFunc::scaled_qpow(sign, self.rng.gen_range(-2..=2)),
            _ => RatFunc::one().add(&RatFunc::q()),
        }
    }

    /// A random word of length at most `max_len` in generators `0..below`.
    pub fn word(&mut self, below: usize, max_len: usize) -> Vec<usize> {
        if below == 0 {
            return Vec::new();
        }
        let len = self.rng.gen_range(0..=max_len);
        (0..len).map(|_| self.rng.gen_range(0..below)).collect()
    }

    /// A random element of the subalgebra generated by `x_0 .. x_{below-1}`,
    /// with one to three terms of degree at most `max_degree`, in normal
    /// form. May be zero if terms cancel.
    pub fn element(&mut self, spec: &OreAlgebraSpec, below: usize, max_degree: usize) -> Result<NcPoly> {
        let terms = self.rng.gen_range(1..=3);
        let mut out = NcPoly::zero();
        for _ in 0..terms {
            let w = self.word(below, max_degree);
            let c = self.scalar();
            out = out.add(&spec.reduce_word(&w, &c, Strategy::default())?);
        }
        Ok(out)
    }

    /// Like [`Self::element`] but never zero.
    pub fn nonzero_element(&mut self, spec: &OreAlgebraSpec, below: usize, max_degree: usize) -> Result<NcPoly> {
        loop {
            let e = self.element(spec, below, max_degree)?;
            if !e.is_zero() {
                return Ok(e);
            }
        }
    }
}
