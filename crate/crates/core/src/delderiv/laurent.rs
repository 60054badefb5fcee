use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::coef::RatFunc;
use crate::error::{Error, Result};
use crate::ncalg::{render_term, Monomial, NcPoly, OreAlgebraSpec};

/// An element `Σ_i a_i X^i` of the localisation `R̂ = R[X^{-1}]` of
/// `R = A[X; σ, δ]`, with coefficients `a_i ∈ A` written on the left.
///
/// `X` is the top generator of the spec and `A` the subalgebra generated by
/// the others. Coefficients on the left with `X`-powers on the right give a
/// unique representation, so equality is map equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentElem {
    coeffs: BTreeMap<i64, NcPoly>,
}

impl LaurentElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_base(NcPoly::one())
    }

    /// `a X^0`.
    pub fn from_base(a: NcPoly) -> Self {
        Self::monomial(a, 0)
    }

    /// `a X^k`.
    pub fn monomial(a: NcPoly, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !a.is_zero() {
            coeffs.insert(k, a);
        }
        Self { coeffs }
    }

    pub fn x_pow(k: i64) -> Self {
        Self::monomial(NcPoly::one(), k)
    }

    /// View a normal-form element of `R` in `R̂`: sorted words end in their
    /// `X` letters, so each term splits as (coefficient word) · `X^e`.
    pub fn from_poly(spec: &OreAlgebraSpec, p: &NcPoly) -> Result<Self> {
        if !p.is_normal_form() {
            return Err(Error::Eval("expected a normal form".into()));
        }
        let top = spec.top();
        let mut out = Self::zero();
        for (m, c) in p.terms() {
            let split = m.letters().iter().position(|&g| g == top).unwrap_or(m.degree());
            let e = (m.degree() - split) as i64;
            let mut a = NcPoly::zero();
            a.add_term(Monomial(m.letters()[..split].to_vec()), c);
            out.add_assign(&Self::monomial(a, e));
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> NcPoly {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in ascending exponent order.
    pub fn coeffs(&self) -> impl DoubleEndedIterator<Item = (i64, &NcPoly)> {
        self.coeffs.iter().map(|(&k, a)| (k, a))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// The coefficient when only `X^0` occurs.
    pub fn as_base(&self) -> Option<NcPoly> {
        match self.coeffs.len() {
            0 => Some(NcPoly::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// `Some(k)` when the element is exactly `X^k`.
    pub fn as_x_power(&self) -> Option<i64> {
        let mut it = self.coeffs.iter();
        let (&k, a) = it.next()?;
        (it.next().is_none() && *a == NcPoly::one()).then_some(k)
    }

    fn add_assign(&mut self, other: &Self) {
        for (&k, a) in &other.coeffs {
            let s = self.coeff(k).add(a);
            if s.is_zero() {
                self.coeffs.remove(&k);
            } else {
                self.coeffs.insert(k, s);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&k, a)| (k, a.scale(c))).collect(),
        }
    }

    /// Right multiplication by `X^s`.
    pub fn shift(&self, s: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&k, a)| (k + s, a.clone())).collect(),
        }
    }

    /// Highest exponent first, e.g. `x[1,1] - q*x[1,2]*x[2,1]*X^-1`.
    pub fn render(&self, spec: &OreAlgebraSpec) -> String {
        self.render_with(spec.names())
    }

    pub fn render_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (&k, a) in self.coeffs.iter().rev() {
            for (m, c) in a.terms() {
                let negative = c.is_negative();
                let abs = if negative { c.neg() } else { c.clone() };
                if out.is_empty() {
                    if negative {
                        out.push('-');
                    }
                } else {
                    out.push_str(if negative { " - " } else { " + " });
                }
                out.push_str(&render_term(&abs, m, names, Some(k)));
            }
        }
        out
    }
}

impl fmt::Display for LaurentElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&[]))
    }
}

impl fmt::Debug for LaurentElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentElem({self})")
    }
}

/// Moves powers of `X` to the right of base-algebra coefficients, caching
/// the single-step images of monomials.
pub(crate) struct Commuter<'a> {
    spec: &'a OreAlgebraSpec,
    bound: usize,
    up: HashMap<Monomial, LaurentElem>,
    down: HashMap<Monomial, LaurentElem>,
}

impl<'a> Commuter<'a> {
    pub(crate) fn new(spec: &'a OreAlgebraSpec, bound: usize) -> Self {
        Self {
            spec,
            bound,
            up: HashMap::new(),
            down: HashMap::new(),
        }
    }

    /// `X m = σ(m) X + δ(m)`.
    fn x_times_monomial(&mut self, m: &Monomial) -> Result<LaurentElem> {
        if let Some(r) = self.up.get(m) {
            return Ok(r.clone());
        }
        let top = self.spec.top();
        let p = NcPoly::term(m.clone(), RatFunc::one());
        let r = LaurentElem::monomial(self.spec.apply_sigma(top, &p)?, 1)
            .add(&LaurentElem::from_base(self.spec.apply_delta(top, &p)?));
        self.up.insert(m.clone(), r.clone());
        Ok(r)
    }

    /// `X^{-1} m = Σ_{n≥0} (-1)^n σ^{-1}((δσ^{-1})^n(m)) X^{-(n+1)}`, from
    /// `X^{-1} c = σ^{-1}(c) X^{-1} - X^{-1} δ(σ^{-1}(c)) X^{-1}`.
    fn x_inv_times_monomial(&mut self, m: &Monomial) -> Result<LaurentElem> {
        if let Some(r) = self.down.get(m) {
            return Ok(r.clone());
        }
        let top = self.spec.top();
        let mut out = LaurentElem::zero();
        let mut cur = NcPoly::term(m.clone(), RatFunc::one());
        let mut n = 0usize;
        while !cur.is_zero() {
            if n > self.bound {
                return Err(Error::NilpotenceBoundExceeded { bound: self.bound });
            }
            let s_inv = self.spec.apply_sigma_inv(top, &cur)?;
            let sign = RatFunc::from_int(if n % 2 == 0 { 1 } else { -1 });
            out.add_assign(&LaurentElem::monomial(s_inv.scale(&sign), -(n as i64) - 1));
            cur = self.spec.apply_delta(top, &s_inv)?;
            n += 1;
        }
        self.down.insert(m.clone(), out.clone());
        Ok(out)
    }

    /// `X^e · u` for a Laurent element `u`.
    pub(crate) fn x_pow_times(&mut self, e: i64, u: &LaurentElem) -> Result<LaurentElem> {
        let mut cur = u.clone();
        for _ in 0..e.unsigned_abs() {
            let mut next = LaurentElem::zero();
            for (&k, a) in &cur.coeffs {
                for (m, c) in a.terms() {
                    let step = if e > 0 {
                        self.x_times_monomial(m)?
                    } else {
                        self.x_inv_times_monomial(m)?
                    };
                    next.add_assign(&step.scale(c).shift(k));
                }
            }
            cur = next;
        }
        Ok(cur)
    }

    pub(crate) fn mul(&mut self, u: &LaurentElem, v: &LaurentElem) -> Result<LaurentElem> {
        let mut out = LaurentElem::zero();
        for (&i, a) in &u.coeffs {
            for (&j, b) in &v.coeffs {
                let moved = self.x_pow_times(i, &LaurentElem::from_base(b.clone()))?;
                for (&k, c) in &moved.coeffs {
                    let prod = self.spec.mul(a, c)?;
                    out.add_assign(&LaurentElem::monomial(prod, k + j));
                }
            }
        }
        Ok(out)
    }
}

/// Product in `R̂`. Commuting `X^{-1}` past a coefficient needs `δ` to be
/// nilpotent on it; `bound` caps the number of steps.
pub fn laurent_mul(
    spec: &OreAlgebraSpec,
    u: &LaurentElem,
    v: &LaurentElem,
    bound: usize,
) -> Result<LaurentElem> {
    for (_, a) in u.coeffs().chain(v.coeffs()) {
        if a.max_generator().is_some_and(|g| g >= spec.top()) {
            return Err(Error::LevelViolation {
                level: spec.top() + 1,
                generator: a.max_generator().unwrap() + 1,
            });
        }
    }
    Commuter::new(spec, bound).mul(u, v)
}
