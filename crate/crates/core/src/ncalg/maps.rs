//! The level maps `σ_j`, `σ_j^{-1}`, `δ_j` on `A_{j-1}`, and the torus action.

use super::{word_weight, Monomial, NcPoly, OreAlgebraSpec, TorusWeight};
use crate::coef::RatFunc;
use crate::error::{Error, Result};

impl OreAlgebraSpec {
    fn check_below(&self, j: usize, a: &NcPoly) -> Result<()> {
        if j >= self.len() {
            return Err(Error::IndexOutOfRange(format!("level {} of {}", j + 1, self.len())));
        }
        match a.max_generator() {
            Some(g) if g >= j => Err(Error::LevelViolation {
                level: j + 1,
                generator: g + 1,
            }),
            _ => Ok(()),
        }
    }

    /// Scalar by which `σ_j^power` multiplies a word.
    fn sigma_scalar(&self, j: usize, word: &[usize], power: i64) -> Result<RatFunc> {
        let mut c = RatFunc::one();
        for &g in word {
            c = c.mul(&self.lambda(j, g).powi(power)?);
        }
        Ok(c)
    }

    pub fn apply_sigma(&self, j: usize, a: &NcPoly) -> Result<NcPoly> {
        self.apply_sigma_pow(j, a, 1)
    }

    pub fn apply_sigma_inv(&self, j: usize, a: &NcPoly) -> Result<NcPoly> {
        self.apply_sigma_pow(j, a, -1)
    }

    /// `σ_j^power(a)` for any integer power. σ_j scales each generator, so
    /// normal forms map to normal forms.
    pub fn apply_sigma_pow(&self, j: usize, a: &NcPoly, power: i64) -> Result<NcPoly> {
        self.check_below(j, a)?;
        let mut out = NcPoly::zero();
        for (m, c) in a.terms() {
            out.add_term(m.clone(), &c.mul(&self.sigma_scalar(j, m.letters(), power)?));
        }
        Ok(out)
    }

    /// `δ_j` of the product of the letters of `word` (which need not be
    /// sorted), by the twisted Leibniz rule
    /// `δ(w_1⋯w_k) = Σ_p σ(w_1⋯w_{p-1}) δ(w_p) w_{p+1}⋯w_k`.
    pub(crate) fn delta_of_word(&self, j: usize, word: &[usize]) -> Result<NcPoly> {
        let mut out = NcPoly::zero();
        for p in 0..word.len() {
            let d = self.delta(j, word[p]);
            if d.is_zero() {
                continue;
            }
            let prefix_scale = self.sigma_scalar(j, &word[..p], 1)?;
            for (m, c) in d.terms() {
                let mut w = word[..p].to_vec();
                w.extend_from_slice(m.letters());
                w.extend_from_slice(&word[p + 1..]);
                out.add_term(Monomial(w), &c.mul(&prefix_scale));
            }
        }
        self.normalize(&out)
    }

    pub fn apply_delta(&self, j: usize, a: &NcPoly) -> Result<NcPoly> {
        self.check_below(j, a)?;
        let mut out = NcPoly::zero();
        for (m, c) in a.terms() {
            out.add_assign_scaled(&self.delta_of_word(j, m.letters())?, c);
        }
        Ok(out)
    }

    /// `δ_j^n(a)`.
    pub fn apply_delta_pow(&self, j: usize, a: &NcPoly, n: usize) -> Result<NcPoly> {
        let mut cur = a.clone();
        for _ in 0..n {
            if cur.is_zero() {
                break;
            }
            cur = self.apply_delta(j, &cur)?;
        }
        Ok(cur)
    }

    /// Smallest `d` with `δ_j^{d+1}(a) = 0`, searching up to `bound`.
    pub fn nilpotency_index(&self, j: usize, a: &NcPoly, bound: usize) -> Result<usize> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        self.check_below(j, a)?;
        let mut cur = a.clone();
        for d in 0..=bound {
            let next = self.apply_delta(j, &cur)?;
            if next.is_zero() {
                return Ok(d);
            }
            cur = next;
        }
        Err(Error::NilpotenceBoundExceeded { bound })
    }

    pub fn monomial_weight(&self, m: &Monomial) -> Vec<i64> {
        word_weight(&self.weights, self.torus_rank, m)
    }

    pub fn torus_weight(&self, a: &NcPoly) -> Result<TorusWeight> {
        let mut terms = a.terms();
        let (first, _) = terms.next().ok_or(Error::ZeroElement)?;
        let w = self.monomial_weight(first);
        if terms.all(|(m, _)| self.monomial_weight(m) == w) {
            Ok(TorusWeight::Homogeneous(w))
        } else {
            Ok(TorusWeight::Inhomogeneous)
        }
    }

    /// Eigenvalue of a weight under the torus element `h`:
    /// `Π_k h_k^{w_k}`.
    pub fn character(&self, h: &[RatFunc], w: &[i64]) -> Result<RatFunc> {
        if h.len() != self.torus_rank || w.len() != self.torus_rank {
            return Err(Error::InvalidSpec("torus element of wrong rank".into()));
        }
        h.iter()
            .zip(w)
            .try_fold(RatFunc::one(), |acc, (x, &e)| Ok(acc.mul(&x.powi(e)?)))
    }

    /// Action of the torus element `h` on `a`.
    pub fn torus_act(&self, h: &[RatFunc], a: &NcPoly) -> Result<NcPoly> {
        let mut out = NcPoly::zero();
        for (m, c) in a.terms() {
            let w = self.monomial_weight(m);
            out.add_term(m.clone(), &c.mul(&self.character(h, &w)?));
        }
        Ok(out)
    }

    /// Algebra endomorphism scaling generator `i` by `scales[i]`. Used for
    /// maps like the dehomogenisation automorphism `x_ij ↦ q^{-1} x_ij`.
    pub fn scale_generators(&self, scales: &[RatFunc], a: &NcPoly) -> NcPoly {
        a.map_scalars(|m| {
            m.letters()
                .iter()
                .fold(RatFunc::one(), |acc, &g| acc.mul(&scales[g]))
        })
    }
}
