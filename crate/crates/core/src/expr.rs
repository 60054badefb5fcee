//! Text expressions over an algebra.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' exponent)?
//! exponent:= '-'? INT | '(' '-'? INT ')'
//! atom    := INT | 'q' | 'X' | 'g_' INT | IDENT ('[' ... ']')?
//!          | '[' INT (',' INT)* '|' INT (',' INT)* ']' | '(' sum ')'
//! ```
//!
//! Products keep their left-to-right order. `X` is the top generator viewed
//! in the Laurent localisation and is only meaningful there.

use num_bigint::BigInt;

use crate::coef::RatFunc;
use crate::delderiv::LaurentElem;
use crate::error::{Error, Result};
use crate::ncalg::{NcPoly, OreAlgebraSpec};
use crate::qmat::{self, MinorIndex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Q,
    /// The top variable `X`.
    Top,
    /// A generator by display name, e.g. `x[1,2]`.
    Gen(String),
    /// A generator by 1-based index, `g_k`.
    GenIndex(usize),
    /// A quantum minor `[I|J]`, 1-based.
    Minor(Vec<usize>, Vec<usize>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.product()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let v = self.integer()?;
        let v = i64::try_from(v).map_err(|_| self.error("exponent too large"))?;
        if paren {
            self.expect(b')')?;
        }
        Ok(if neg { -v } else { v })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn small_integer(&mut self) -> Result<usize> {
        let v = self.integer()?;
        usize::try_from(v).map_err(|_| self.error("index too large"))
    }

    fn index_list(&mut self) -> Result<Vec<usize>> {
        let mut out = vec![self.small_integer()?];
        while self.eat(b',') {
            out.push(self.small_integer()?);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                let rows = self.index_list()?;
                self.expect(b'|')?;
                let cols = self.index_list()?;
                self.expect(b']')?;
                Ok(Expr::Minor(rows, cols))
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => self.identifier(),
            Some(c) => Err(self.error(&format!("unexpected character `{}`", c as char))),
        }
    }

    fn identifier(&mut self) -> Result<Expr> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let mut name = std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_string();
        // An index group only attaches when written directly after the name.
        if self.src.get(self.pos) == Some(&b'[') {
            let open = self.pos;
            match self.src[open..].iter().position(|&c| c == b']') {
                Some(len) => {
                    let inner = std::str::from_utf8(&self.src[open..open + len + 1]).unwrap();
                    name.extend(inner.chars().filter(|c| !c.is_whitespace()));
                    self.pos = open + len + 1;
                }
                None => return Err(self.error("unclosed `[`")),
            }
            return Ok(Expr::Gen(name));
        }
        match name.as_str() {
            "q" => Ok(Expr::Q),
            "X" => Ok(Expr::Top),
            _ => match name.strip_prefix("g_").map(str::parse::<usize>) {
                Some(Ok(k)) if k >= 1 => Ok(Expr::GenIndex(k)),
                Some(_) => Err(Error::Parse {
                    pos: start,
                    msg: format!("bad generator index in `{name}`"),
                }),
                None => Ok(Expr::Gen(name)),
            },
        }
    }
}

/// What an expression evaluates into.
trait Domain {
    type V: Clone;
    fn scalar(&self, c: RatFunc) -> Self::V;
    fn as_scalar(&self, v: &Self::V) -> Option<RatFunc>;
    fn generator(&self, i: usize) -> Result<Self::V>;
    fn resolve(&self, name: &str) -> Result<usize>;
    fn top(&self) -> Result<Self::V>;
    fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Self::V>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn neg(&self, a: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Result<Self::V>;
    /// Inverse of a non-scalar, when it has one.
    fn inverse(&self, a: &Self::V) -> Result<Self::V>;

    fn eval(&self, e: &Expr) -> Result<Self::V> {
        Ok(match e {
            Expr::Int(n) => self.scalar(RatFunc::from_bigint(n.clone())),
            Expr::Q => self.scalar(RatFunc::q()),
            Expr::Top => self.top()?,
            Expr::Gen(name) => self.generator(self.resolve(name)?)?,
            Expr::GenIndex(k) => self.generator(k - 1)?,
            Expr::Minor(r, c) => self.minor(r, c)?,
            Expr::Neg(a) => self.neg(&self.eval(a)?),
            Expr::Add(a, b) => self.add(&self.eval(a)?, &self.eval(b)?),
            Expr::Sub(a, b) => self.add(&self.eval(a)?, &self.neg(&self.eval(b)?)),
            Expr::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?)?,
            Expr::Div(a, b) => {
                let d = self.eval(b)?;
                let d = self
                    .as_scalar(&d)
                    .ok_or_else(|| Error::Eval("division by a non-scalar".into()))?;
                let inv = d.inv()?;
                self.mul(&self.eval(a)?, &self.scalar(inv))?
            }
            Expr::Pow(a, e) => {
                let base = self.eval(a)?;
                if let Some(c) = self.as_scalar(&base) {
                    return Ok(self.scalar(c.powi(*e)?));
                }
                let base = if *e < 0 { self.inverse(&base)? } else { base };
                let mut acc = self.scalar(RatFunc::one());
                for _ in 0..e.unsigned_abs() {
                    acc = self.mul(&acc, &base)?;
                }
                acc
            }
        })
    }
}

struct Scalars;

impl Domain for Scalars {
    type V = RatFunc;
    fn scalar(&self, c: RatFunc) -> RatFunc {
        c
    }
    fn as_scalar(&self, v: &RatFunc) -> Option<RatFunc> {
        Some(v.clone())
    }
    fn generator(&self, _: usize) -> Result<RatFunc> {
        Err(Error::Eval("generators are not allowed in a scalar".into()))
    }
    fn resolve(&self, name: &str) -> Result<usize> {
        Err(Error::UnknownGenerator(name.to_string()))
    }
    fn top(&self) -> Result<RatFunc> {
        Err(Error::Eval("X is not allowed in a scalar".into()))
    }
    fn minor(&self, _: &[usize], _: &[usize]) -> Result<RatFunc> {
        Err(Error::Eval("minors are not allowed in a scalar".into()))
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.add(b)
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        a.neg()
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> Result<RatFunc> {
        Ok(a.mul(b))
    }
    fn inverse(&self, a: &RatFunc) -> Result<RatFunc> {
        a.inv()
    }
}

/// Free algebra on named generators: products concatenate words.
struct Free<'a> {
    names: &'a [String],
}

fn resolve_in(names: &[String], name: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
}

fn poly_add(a: &NcPoly, b: &NcPoly) -> NcPoly {
    a.add(b)
}

impl Domain for Free<'_> {
    type V = NcPoly;
    fn scalar(&self, c: RatFunc) -> NcPoly {
        NcPoly::constant(c)
    }
    fn as_scalar(&self, v: &NcPoly) -> Option<RatFunc> {
        v.as_constant()
    }
    fn generator(&self, i: usize) -> Result<NcPoly> {
        if i < self.names.len() {
            Ok(NcPoly::generator(i))
        } else {
            Err(Error::UnknownGenerator(format!("g_{}", i + 1)))
        }
    }
    fn resolve(&self, name: &str) -> Result<usize> {
        resolve_in(self.names, name)
    }
    fn top(&self) -> Result<NcPoly> {
        Err(Error::Eval("X used outside delderiv context".into()))
    }
    fn minor(&self, _: &[usize], _: &[usize]) -> Result<NcPoly> {
        Err(Error::Eval("minors are not available here".into()))
    }
    fn add(&self, a: &NcPoly, b: &NcPoly) -> NcPoly {
        poly_add(a, b)
    }
    fn neg(&self, a: &NcPoly) -> NcPoly {
        a.neg()
    }
    fn mul(&self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
        let mut out = NcPoly::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out.add_term(ma.concat(mb), &ca.mul(cb));
            }
        }
        Ok(out)
    }
    fn inverse(&self, _: &NcPoly) -> Result<NcPoly> {
        Err(Error::Eval("negative power of a non-scalar".into()))
    }
}

/// The algebra itself, in normal form.
struct Algebra<'a> {
    spec: &'a OreAlgebraSpec,
}

fn spec_minor(spec: &OreAlgebraSpec, rows: &[usize], cols: &[usize]) -> Result<NcPoly> {
    let (m, n) = spec
        .matrix_shape()
        .ok_or_else(|| Error::Eval("minors need a quantum matrix algebra".into()))?;
    let idx = MinorIndex::new(rows.to_vec(), cols.to_vec())?;
    qmat::quantum_minor_in(spec, m, n, &idx)
}

impl Domain for Algebra<'_> {
    type V = NcPoly;
    fn scalar(&self, c: RatFunc) -> NcPoly {
        NcPoly::constant(c)
    }
    fn as_scalar(&self, v: &NcPoly) -> Option<RatFunc> {
        v.as_constant()
    }
    fn generator(&self, i: usize) -> Result<NcPoly> {
        self.spec.generator(i)
    }
    fn resolve(&self, name: &str) -> Result<usize> {
        resolve_in(self.spec.names(), name)
    }
    fn top(&self) -> Result<NcPoly> {
        Err(Error::Eval("X used outside delderiv context".into()))
    }
    fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<NcPoly> {
        spec_minor(self.spec, rows, cols)
    }
    fn add(&self, a: &NcPoly, b: &NcPoly) -> NcPoly {
        poly_add(a, b)
    }
    fn neg(&self, a: &NcPoly) -> NcPoly {
        a.neg()
    }
    fn mul(&self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
        self.spec.mul(a, b)
    }
    fn inverse(&self, _: &NcPoly) -> Result<NcPoly> {
        Err(Error::Eval("negative power of a non-scalar; only the top variable X is invertible, in the localisation".into()))
    }
}

/// The localisation `R̂ = R[X^{-1}]`, `X` the top generator.
struct Laurent<'a> {
    spec: &'a OreAlgebraSpec,
    bound: usize,
}

impl Domain for Laurent<'_> {
    type V = LaurentElem;
    fn scalar(&self, c: RatFunc) -> LaurentElem {
        LaurentElem::from_base(NcPoly::constant(c))
    }
    fn as_scalar(&self, v: &LaurentElem) -> Option<RatFunc> {
        v.as_base()?.as_constant()
    }
    fn generator(&self, i: usize) -> Result<LaurentElem> {
        self.spec.generator(i)?;
        Ok(if i == self.spec.top() {
            LaurentElem::x_pow(1)
        } else {
            LaurentElem::from_base(NcPoly::generator(i))
        })
    }
    fn resolve(&self, name: &str) -> Result<usize> {
        resolve_in(self.spec.names(), name)
    }
    fn top(&self) -> Result<LaurentElem> {
        Ok(LaurentElem::x_pow(1))
    }
    fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<LaurentElem> {
        let p = spec_minor(self.spec, rows, cols)?;
        LaurentElem::from_poly(self.spec, &p)
    }
    fn add(&self, a: &LaurentElem, b: &LaurentElem) -> LaurentElem {
        a.add(b)
    }
    fn neg(&self, a: &LaurentElem) -> LaurentElem {
        a.neg()
    }
    fn mul(&self, a: &LaurentElem, b: &LaurentElem) -> Result<LaurentElem> {
        crate::delderiv::laurent_mul(self.spec, a, b, self.bound)
    }
    fn inverse(&self, a: &LaurentElem) -> Result<LaurentElem> {
        match a.as_x_power() {
            Some(k) => Ok(LaurentElem::x_pow(-k)),
            None => Err(Error::Eval("only powers of X are invertible".into())),
        }
    }
}

impl Expr {
    pub fn eval_scalar(&self) -> Result<RatFunc> {
        Scalars.eval(self)
    }

    /// Evaluate in the free algebra on `names`; products are concatenations
    /// and nothing is normalised.
    pub fn eval_free(&self, names: &[String]) -> Result<NcPoly> {
        Free { names }.eval(self)
    }

    /// Evaluate in the algebra, producing a PBW normal form.
    pub fn eval(&self, spec: &OreAlgebraSpec) -> Result<NcPoly> {
        Algebra { spec }.eval(self)
    }

    /// Evaluate in the Laurent localisation at the top generator.
    pub fn eval_laurent(&self, spec: &OreAlgebraSpec, nilpotence_bound: usize) -> Result<LaurentElem> {
        Laurent {
            spec,
            bound: nilpotence_bound,
        }
        .eval(self)
    }

    pub fn mentions_top(&self) -> bool {
        match self {
            Expr::Top => true,
            Expr::Neg(a) | Expr::Pow(a, _) => a.mentions_top(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.mentions_top() || b.mentions_top()
            }
            _ => false,
        }
    }
}

/// Parse and evaluate in one go.
pub fn eval_str(spec: &OreAlgebraSpec, text: &str) -> Result<NcPoly> {
    parse(text)?.eval(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_generator_with_spaces_in_index() {
        assert_eq!(parse("x[1, 2]").unwrap(), Expr::Gen("x[1,2]".into()));
        assert_eq!(parse("g_3").unwrap(), Expr::GenIndex(3));
        assert_eq!(parse("[1,2|1,3]").unwrap(), Expr::Minor(vec![1, 2], vec![1, 3]));
    }

    #[test]
    fn negative_exponents() {
        assert_eq!(parse("q^-2").unwrap().eval_scalar().unwrap(), RatFunc::qpow(-2));
        assert_eq!(parse("q^(-2)").unwrap().eval_scalar().unwrap(), RatFunc::qpow(-2));
        assert_eq!(parse("X^-1").unwrap(), Expr::Pow(Box::new(Expr::Top), -1));
    }

    #[test]
    fn syntax_error_reports_position() {
        match parse("x[1,1] * * x[2,2]") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 9),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("(q"), Err(Error::Parse { .. })));
        assert!(matches!(parse("q)"), Err(Error::Parse { .. })));
    }

    #[test]
    fn precedence() {
        // 2 + 3*q^2 at q: pow binds tighter than *, which binds tighter than +
        let v = parse("2+3*q^2").unwrap().eval_scalar().unwrap();
        assert_eq!(v.to_string(), "3*q^2+2");
        let v = parse("-q^2").unwrap().eval_scalar().unwrap();
        assert_eq!(v, RatFunc::qpow(2).neg());
    }

    #[test]
    fn free_products_keep_order() {
        use crate::ncalg::Monomial;
        let names = vec!["a".to_string(), "b".to_string()];
        let p = parse("b*a").unwrap().eval_free(&names).unwrap();
        assert_eq!(p, NcPoly::term(Monomial(vec![1, 0]), RatFunc::one()));
    }
}
