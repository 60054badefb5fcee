//! Deleting the derivation of the top variable.
//!
//! For `R = A[X; σ, δ]` with `σδ = q δσ` (`q` the top-level constant `q_N`)
//! and `δ` locally nilpotent, the map
//!
//! ```text
//! θ(a) = Σ_{n≥0} (1-q)^{-n} / [n]!_q · δ^n σ^{-n}(a) X^{-n}
//! ```
//!
//! embeds `A` in the localisation `R̂`, and the image of `A[Y; σ]` under
//! `Y ↦ X` is a skew polynomial ring `B[X; α]` with no derivation.

mod laurent;

pub use laurent::{laurent_mul, LaurentElem};

use crate::coef::{q_factorial, RatFunc};
use crate::error::{Error, Result};
use crate::ncalg::{Monomial, NcPoly, OreAlgebraSpec};

fn check_theta_input(spec: &OreAlgebraSpec, a: &NcPoly) -> Result<RatFunc> {
    let top = spec.top();
    if let Some(g) = a.max_generator().filter(|&g| g >= top) {
        return Err(Error::LevelViolation {
            level: top + 1,
            generator: g + 1,
        });
    }
    let q = spec.level_q(top).clone();
    if q.is_one() {
        return Err(Error::TopLevelConstantIsOne);
    }
    Ok(q)
}

/// `(1-q)^{-n} / [n]!_q`
fn theta_coefficient(q: &RatFunc, n: u32) -> Result<RatFunc> {
    let one_minus_q = RatFunc::one().sub(q);
    one_minus_q.powi(-(n as i64))?.div(&q_factorial(n, q))
}

/// `θ(a)` for `a` in the subalgebra below the top generator.
pub fn theta(spec: &OreAlgebraSpec, a: &NcPoly, bound: usize) -> Result<LaurentElem> {
    let q = check_theta_input(spec, a)?;
    let top = spec.top();
    let mut out = LaurentElem::zero();
    for n in 0..=bound {
        let shifted = spec.apply_sigma_pow(top, a, -(n as i64))?;
        let term = spec.apply_delta_pow(top, &shifted, n)?;
        if term.is_zero() {
            return Ok(out);
        }
        let c = theta_coefficient(&q, n as u32)?;
        out = out.add(&LaurentElem::monomial(term.scale(&c), -(n as i64)));
    }
    Err(Error::NilpotenceBoundExceeded { bound })
}

/// The same map expanded as `Σ (1-q)^{-n}/[n]!_q · q^{n²} σ^{-n} δ^n(a) X^{-n}`.
pub fn theta_alt(spec: &OreAlgebraSpec, a: &NcPoly, bound: usize) -> Result<LaurentElem> {
    let q = check_theta_input(spec, a)?;
    let top = spec.top();
    let mut out = LaurentElem::zero();
    let mut delta_n = a.clone();
    for n in 0..=bound {
        if delta_n.is_zero() {
            return Ok(out);
        }
        let c = theta_coefficient(&q, n as u32)?.mul(&q.powi((n * n) as i64)?);
        let term = spec.apply_sigma_pow(top, &delta_n, -(n as i64))?;
        out = out.add(&LaurentElem::monomial(term.scale(&c), -(n as i64)));
        delta_n = spec.apply_delta(top, &delta_n)?;
    }
    Err(Error::NilpotenceBoundExceeded { bound })
}

/// Extension of `θ` to `A[Y; σ]` with `θ(Y) = X`. The input is a normal
/// form over `spec` in which the top generator plays the role of `Y`; the
/// multiplication of `A[Y; σ]` is that of [`delete_top_variable`]`(spec)`.
pub fn theta_extended(spec: &OreAlgebraSpec, p: &NcPoly, bound: usize) -> Result<LaurentElem> {
    let top = spec.top();
    let mut out = LaurentElem::zero();
    for (m, c) in p.terms() {
        let split = m.letters().iter().position(|&g| g == top).unwrap_or(m.degree());
        let base = NcPoly::term(Monomial(m.letters()[..split].to_vec()), c.clone());
        let y_power = (m.degree() - split) as i64;
        out = out.add(&theta(spec, &base, bound)?.shift(y_power));
    }
    Ok(out)
}

/// Smallest `s ≥ 0` with `θ(a) X^s ∈ R`.
pub fn min_shift(spec: &OreAlgebraSpec, a: &NcPoly, bound: usize) -> Result<usize> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let t = theta(spec, a, bound)?;
    Ok(t.min_exponent().map_or(0, |k| (-k).max(0) as usize))
}

/// The algebra `A[Y; σ]`: the same data with the top derivation removed.
pub fn delete_top_variable(spec: &OreAlgebraSpec) -> OreAlgebraSpec {
    const SUFFIX: &str = " [top derivation deleted]";
    let name = if spec.name().is_empty() || spec.name().ends_with(SUFFIX) {
        spec.name().to_string()
    } else {
        format!("{}{SUFFIX}", spec.name())
    };
    spec.with_zero_delta(spec.top()).with_name(name)
}
