//! PBW straightening. Each inversion `x_j x_i` with `j > i` is replaced by
//! `λ_{ji} x_i x_j + δ_j(x_i)` until every word is sorted.
//!
//! Termination holds because every correction term only uses generators
//! strictly below the larger letter of the inversion; the step budget guards
//! against malformed user data regardless.

use std::collections::BTreeMap;

use super::{Monomial, NcPoly, OreAlgebraSpec};
use crate::coef::RatFunc;
use crate::error::{Error, Result};

/// Which inversion to rewrite first in an unsorted word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

impl Strategy {
    fn find_inversion(self, w: &[usize]) -> Option<usize> {
        let mut it = (0..w.len().saturating_sub(1)).filter(|&p| w[p] > w[p + 1]);
        match self {
            Self::Leftmost => it.next(),
            Self::Rightmost => it.last(),
        }
    }
}

struct Reducer<'a> {
    spec: &'a OreAlgebraSpec,
    strategy: Strategy,
    pending: BTreeMap<Vec<usize>, RatFunc>,
    done: NcPoly,
    steps: u64,
}

impl<'a> Reducer<'a> {
    fn new(spec: &'a OreAlgebraSpec, strategy: Strategy) -> Self {
        Self {
            spec,
            strategy,
            pending: BTreeMap::new(),
            done: NcPoly::zero(),
            steps: 0,
        }
    }

    fn push(&mut self, word: Vec<usize>, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        if word.windows(2).all(|w| w[0] <= w[1]) {
            self.done.add_term(Monomial(word), &c);
            return;
        }
        match self.pending.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn run(mut self) -> Result<NcPoly> {
        let budget = self.spec.steps_budget();
        // Words produced by later steps merge with pending ones of equal
        // spelling before being rewritten.
        while let Some((word, c)) = self.pending.pop_last() {
            let Some(p) = self.strategy.find_inversion(&word) else {
                self.done.add_term(Monomial(word), &c);
                continue;
            };
            self.steps += 1;
            if self.steps > budget {
                return Err(Error::StepBudgetExceeded { budget });
            }
            let (b, a) = (word[p], word[p + 1]);
            let mut swapped = word.clone();
            swapped.swap(p, p + 1);
            let lambda = self.spec.lambda(b, a);
            self.push(swapped, c.mul(lambda));
            let delta = self.spec.delta(b, a);
            if delta.is_zero() {
                continue;
            }
            let corrections: Vec<(Vec<usize>, RatFunc)> = delta
                .terms()
                .map(|(m, v)| {
                    let mut w = Vec::with_capacity(word.len() + m.degree());
                    w.extend_from_slice(&word[..p]);
                    w.extend_from_slice(m.letters());
                    w.extend_from_slice(&word[p + 2..]);
                    (w, c.mul(v))
                })
                .collect();
            for (w, v) in corrections {
                self.push(w, v);
            }
        }
        Ok(self.done)
    }
}

impl OreAlgebraSpec {
    fn check_letters(&self, word: &[usize]) -> Result<()> {
        match word.iter().find(|&&g| g >= self.len()) {
            Some(&g) => Err(Error::IndexOutOfRange(format!(
                "generator {} of {}",
                g + 1,
                self.len()
            ))),
            None => Ok(()),
        }
    }

    /// Normal form of `c * word` for an arbitrary word.
    pub fn reduce_word(&self, word: &[usize], c: &RatFunc, strategy: Strategy) -> Result<NcPoly> {
        self.check_letters(word)?;
        let mut r = Reducer::new(self, strategy);
        r.push(word.to_vec(), c.clone());
        r.run()
    }

    /// Normal form of an arbitrary linear combination of words.
    pub fn normalize(&self, p: &NcPoly) -> Result<NcPoly> {
        self.normalize_with(p, Strategy::default())
    }

    pub fn normalize_with(&self, p: &NcPoly, strategy: Strategy) -> Result<NcPoly> {
        let mut r = Reducer::new(self, strategy);
        for (m, c) in p.terms() {
            self.check_letters(m.letters())?;
            r.push(m.0.clone(), c.clone());
        }
        r.run()
    }

    /// Product in normal form.
    pub fn mul(&self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
        if a.is_zero() || b.is_zero() {
            return Ok(NcPoly::zero());
        }
        let mut r = Reducer::new(self, Strategy::default());
        for (ma, ca) in a.terms() {
            self.check_letters(ma.letters())?;
            for (mb, cb) in b.terms() {
                self.check_letters(mb.letters())?;
                r.push(ma.concat(mb).0, ca.mul(cb));
            }
        }
        r.run()
    }

    /// Product of several factors, left to right.
    pub fn mul_all<'p>(&self, factors: impl IntoIterator<Item = &'p NcPoly>) -> Result<NcPoly> {
        factors
            .into_iter()
            .try_fold(NcPoly::one(), |acc, f| self.mul(&acc, f))
    }

    /// `a^e` for `e >= 0`.
    pub fn pow(&self, a: &NcPoly, e: u32) -> Result<NcPoly> {
        (0..e).try_fold(NcPoly::one(), |acc, _| self.mul(&acc, a))
    }

    /// Normal form of the product of the given generators in order.
    pub fn word(&self, letters: &[usize]) -> Result<NcPoly> {
        self.reduce_word(letters, &RatFunc::one(), Strategy::default())
    }
}
