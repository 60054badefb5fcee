//! The coefficient field `Q(q)`.
//!
//! Elements are kept as reduced fractions of integer polynomials with a
//! positive leading coefficient in the denominator, so structural equality is
//! field equality.

mod poly;

pub use poly::IntPoly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self {
            num: IntPoly::constant(c),
            den: IntPoly::one(),
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::qpow(1)
    }

    /// `q^s` for any integer `s`.
    pub fn qpow(s: i64) -> Self {
        let k = s.unsigned_abs() as usize;
        let mono = IntPoly::monomial(BigInt::one(), k);
        if s >= 0 {
            Self {
                num: mono,
                den: IntPoly::one(),
            }
        } else {
            Self {
                num: IntPoly::one(),
                den: mono,
            }
        }
    }

    /// `c * q^s`
    pub fn scaled_qpow(c: i64, s: i64) -> Self {
        Self::qpow(s).mul_int(c)
    }

    /// Build `num / den` and reduce to canonical form.
    pub fn from_parts(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if let Some((c, k)) = den.as_monomial() {
            let shift = k.min(num.order().unwrap());
            let g = num.content().gcd(c);
            (
                num.shift_down(shift).div_exact_scalar(&g),
                den.shift_down(shift).div_exact_scalar(&g),
            )
        } else {
            let g = num.gcd(&den);
            let (n, d) = if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            };
            let c = n.content().gcd(&d.content());
            if c.is_one() {
                (n, d)
            } else {
                (n.div_exact_scalar(&c), d.div_exact_scalar(&c))
            }
        };
        if den.leading().is_some_and(Signed::is_negative) {
            num = num.neg();
            den = den.neg();
        }
        Self { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        Self::reduce(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        Self::reduce(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_int(&self, c: i64) -> Self {
        Self::reduce(self.num.scale(&BigInt::from(c)), self.den.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// `Some((sign, s))` when the value is exactly `sign * q^s` with
    /// `sign = ±1`.
    pub fn as_signed_qpow(&self) -> Option<(i8, i64)> {
        let (nc, nk) = self.num.as_monomial()?;
        let (dc, dk) = self.den.as_monomial()?;
        if !dc.is_one() || !nc.abs().is_one() {
            return None;
        }
        let sign = if nc.is_negative() { -1 } else { 1 };
        Some((sign, nk as i64 - dk as i64))
    }

    /// `Some(s)` when the value is exactly `q^s`.
    pub fn as_qpow(&self) -> Option<i64> {
        match self.as_signed_qpow()? {
            (1, s) => Some(s),
            _ => None,
        }
    }

    /// In `Q(q)` the only roots of unity are `1` and `-1`.
    pub fn is_root_of_unity(&self) -> bool {
        matches!(self.as_signed_qpow(), Some((_, 0)))
    }

    /// Sign of the leading numerator coefficient; used to decide whether a
    /// rendered term gets a leading minus.
    pub fn is_negative(&self) -> bool {
        self.num.leading().is_some_and(Signed::is_negative)
    }

    /// True when the rendering needs no parentheses as a product factor.
    pub fn is_atomic(&self) -> bool {
        self.den.is_one() && self.num.term_count() <= 1
            || self.as_signed_qpow().is_some()
    }
}

/// The q-integer `[i]_base = 1 + base + ... + base^(i-1)`.
pub fn q_integer(i: u32, base: &RatFunc) -> RatFunc {
    let mut acc = RatFunc::zero();
    let mut pow = RatFunc::one();
    for _ in 0..i {
        acc = acc.add(&pow);
        pow = pow.mul(base);
    }
    acc
}

/// The q-factorial `[n]!_base = [1]_base [2]_base ... [n]_base`.
pub fn q_factorial(n: u32, base: &RatFunc) -> RatFunc {
    (1..=n).fold(RatFunc::one(), |acc, i| acc.mul(&q_integer(i, base)))
}

pub fn is_root_of_unity(a: &RatFunc) -> bool {
    a.is_root_of_unity()
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::div`] for a checked form.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::div(self, rhs).expect("division by zero in Q(q)")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((sign, s)) = self.as_signed_qpow() {
            let body = match s {
                0 => "1".to_string(),
                1 => "q".to_string(),
                _ => format!("q^{s}"),
            };
            return write!(f, "{}{body}", if sign < 0 { "-" } else { "" });
        }
        if self.den.is_one() {
            return f.write_str(&self.num.render("q"));
        }
        let num = if self.num.term_count() > 1 {
            format!("({})", self.num.render("q"))
        } else {
            self.num.render("q")
        };
        let den = match self.den.as_monomial() {
            Some((c, k)) if c.is_one() || k == 0 => self.den.render("q"),
            _ => format!("({})", self.den.render("q")),
        };
        write!(f, "{num}/{den}")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = Error;

    /// Accepts integer-coefficient rational expressions in the single symbol
    /// `q`, e.g. `(q^2-1)/q` or `-q^-2`.
    fn from_str(s: &str) -> Result<Self> {
        crate::expr::parse(s)?.eval_scalar()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn addition_examples() {
        let q = RatFunc::q();
        assert!((&q + &q.neg()).is_zero());
        let qi = RatFunc::qpow(-1);
        assert_eq!((&q + &qi).to_string(), "(q^2+1)/q");
        let d = &q - &qi;
        assert_eq!((&d + &RatFunc::zero()).to_string(), "(q^2-1)/q");
    }

    #[test]
    fn multiplicative_examples() {
        assert!((&RatFunc::q() * &RatFunc::qpow(-1)).is_one());
        assert_eq!(RatFunc::qpow(-2).to_string(), "q^-2");
        let x = &RatFunc::one() - &RatFunc::qpow(-2);
        assert_eq!(x.inv().unwrap().to_string(), "q^2/(q^2-1)");
        assert!(matches!(RatFunc::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn q_factorials() {
        let q = RatFunc::q();
        assert!(q_factorial(0, &q).is_one());
        assert_eq!(q_factorial(2, &q), r("1+q"));
        assert_eq!(q_factorial(3, &q), r("(1+q)*(1+q+q^2)"));
    }

    #[test]
    fn roots_of_unity() {
        assert!(RatFunc::from_int(-1).is_root_of_unity());
        assert!(RatFunc::one().is_root_of_unity());
        assert!(!RatFunc::q().is_root_of_unity());
        assert!(!RatFunc::qpow(-2).is_root_of_unity());
        assert!(!RatFunc::from_int(2).is_root_of_unity());
    }

    #[test]
    fn canonical_denominator_sign() {
        let a = RatFunc::from_parts(
            IntPoly::constant(BigInt::from(3)),
            IntPoly::from_coeffs(vec![BigInt::from(2), BigInt::from(-4)]),
        )
        .unwrap();
        assert_eq!(a.to_string(), "-3/(4*q-2)");
        assert_eq!(a.denominator().leading().unwrap(), &BigInt::from(4));
    }

    #[test]
    fn render_parse_roundtrip_samples() {
        for s in ["q", "q^-1", "(q^2-1)/q", "-q^3", "2*q-1", "q^2/(q^2-1)", "-3/(4*q-2)", "1/(2*q)"] {
            assert_eq!(r(s).to_string(), s, "{s}");
        }
    }

    #[test]
    fn powers() {
        let x = r("1+q");
        assert_eq!(x.powi(-2).unwrap(), r("1/(q^2+2*q+1)"));
        assert_eq!(RatFunc::q().powi(5).unwrap(), RatFunc::qpow(5));
    }
}
