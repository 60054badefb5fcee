use super::{NcPoly, OreAlgebraSpec};
use crate::error::{Error, Result};

/// Outcome of a normality test: for each generator `x_i`, the exponent `s_i`
/// with `a x_i = q^{s_i} x_i a`, or `None` where no such power exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityReport {
    pub exponents: Vec<Option<i64>>,
}

impl NormalityReport {
    pub fn is_normal(&self) -> bool {
        self.exponents.iter().all(Option::is_some)
    }

    /// The exponent list when every generator q-commutes with the element.
    pub fn exponents(&self) -> Option<Vec<i64>> {
        self.exponents.iter().copied().collect()
    }
}

impl OreAlgebraSpec {
    /// The integer `s` with `ab = q^s ba`, if one exists.
    ///
    /// The ratio is taken monomial by monomial and must be the same exact
    /// power of `q` everywhere.
    pub fn qcommute_exponent(&self, a: &NcPoly, b: &NcPoly) -> Result<Option<i64>> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroElement);
        }
        let ab = self.mul(a, b)?;
        let ba = self.mul(b, a)?;
        Ok(ratio_exponent(&ab, &ba))
    }

    pub fn is_normal(&self, a: &NcPoly) -> Result<NormalityReport> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let exponents = (0..self.len())
            .map(|i| self.qcommute_exponent(a, &NcPoly::generator(i)))
            .collect::<Result<_>>()?;
        Ok(NormalityReport { exponents })
    }
}

/// `Some(s)` when `lhs = q^s rhs` exactly.
pub(crate) fn ratio_exponent(lhs: &NcPoly, rhs: &NcPoly) -> Option<i64> {
    if lhs.len() != rhs.len() || lhs.is_zero() {
        return None;
    }
    let mut found = None;
    for ((ml, cl), (mr, cr)) in lhs.terms().zip(rhs.terms()) {
        if ml != mr {
            return None;
        }
        let s = cl.div(cr).ok()?.as_qpow()?;
        match found {
            None => found = Some(s),
            Some(t) if t != s => return None,
            _ => {}
        }
    }
    found
}
