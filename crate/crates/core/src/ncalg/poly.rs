use std::cmp::Ordering;
use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use crate::coef::RatFunc;

/// A word in the generators, stored as 0-based generator indices.
///
/// Ordered by length first and lexicographically within a length, which is
/// also the print order of terms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub Vec<usize>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        Self(vec![i])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// Nondecreasing left to right.
    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = Vec::with_capacity(self.0.len() + other.0.len());
        w.extend_from_slice(&self.0);
        w.extend_from_slice(&other.0);
        Self(w)
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A finite linear combination of monomials with coefficients in `Q(q)`.
///
/// Values produced by the algebra operations are in PBW normal form: every
/// stored monomial is sorted and no coefficient is zero. Building one from
/// arbitrary words is possible through [`NcPoly::from_raw_terms`], but such a
/// value only becomes meaningful after [`crate::OreAlgebraSpec::normalize`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NcPoly {
    terms: BTreeMap<Monomial, RatFunc>,
}

impl NcPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(RatFunc::one())
    }

    pub fn constant(c: RatFunc) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn generator(i: usize) -> Self {
        Self::term(Monomial::generator(i), RatFunc::one())
    }

    pub fn term(m: Monomial, c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_raw_terms(terms: impl IntoIterator<Item = (Monomial, RatFunc)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, RatFunc> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// The scalar part, if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest generator index appearing in any term.
    pub fn max_generator(&self) -> Option<usize> {
        self.terms.keys().filter_map(Monomial::max_letter).max()
    }

    pub fn is_normal_form(&self) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| m.is_sorted() && !c.is_zero())
    }

    pub fn add_term(&mut self, m: Monomial, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Self, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), &v.mul(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &RatFunc::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &RatFunc::from_int(-1));
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.mul(c)))
                .collect(),
        }
    }

    /// Apply `f` to every monomial; the scalar returned multiplies the term.
    /// The monomial itself is kept, so the result stays in normal form.
    pub fn map_scalars(&self, mut f: impl FnMut(&Monomial) -> RatFunc) -> Self {
        Self::from_raw_terms(
            self.terms
                .iter()
                .map(|(m, v)| (m.clone(), v.mul(&f(m)))),
        )
    }

    /// Render with the given generator names. Terms appear in (degree,
    /// lexicographic) order; the output parses back to the same value.
    pub fn render_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let negative = c.is_negative();
            let abs = if negative { c.neg() } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&render_term(&abs, m, names, None));
        }
        out
    }
}

/// A fraction already reads as one factor under left-associative `*` and
/// `/`; only a bare multi-term numerator needs parentheses.
fn render_factor(c: &RatFunc) -> String {
    if c.denominator().is_one() && !c.is_atomic() {
        format!("({c})")
    } else {
        c.to_string()
    }
}

/// Render `c * m * X^x_exp` with `c` assumed nonnegative-leading.
pub(crate) fn render_term(
    c: &RatFunc,
    m: &Monomial,
    names: &[String],
    x_exp: Option<i64>,
) -> String {
    let mut factors: Vec<String> = Vec::new();
    if !c.is_one() {
        factors.push(render_factor(c));
    }
    for &g in m.letters() {
        factors.push(names.get(g).cloned().unwrap_or_else(|| format!("g_{}", g + 1)));
    }
    match x_exp {
        None | Some(0) => {}
        Some(1) => factors.push("X".to_string()),
        Some(e) => factors.push(format!("X^{e}")),
    }
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&[]))
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly({self})")
    }
}
