//! Iterated Ore extensions `k[x_1][x_2; σ_2, δ_2] ... [x_N; σ_N, δ_N]` with
//! CGL data, and the arithmetic on their PBW normal forms.
//!
//! Generators are 0-based internally. Level `j` is the extension adding
//! generator `j`; its straightening rule is
//!
//! ```text
//! x_j x_i = λ_{ji} x_i x_j + δ_j(x_i)      (i < j)
//! ```
//!
//! where `δ_j(x_i)` only involves generators below `j`.

mod axioms;
mod maps;
mod poly;
mod qcomm;
mod rewrite;
mod serial;

pub use axioms::{is_torsionfree, Axiom, AxiomCheck, CglReport, LevelReport, Torsionfree};
pub use poly::{Monomial, NcPoly};
pub use qcomm::NormalityReport;
pub(crate) use poly::render_term;
pub use rewrite::Strategy;
pub use serial::SpecFile;

use crate::coef::RatFunc;
use crate::error::{Error, Result};

pub const DEFAULT_STEPS_BUDGET: u64 = 1_000_000;
pub const DEFAULT_NILPOTENCE_BOUND: usize = 64;

/// Full CGL datum of an iterated Ore extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreAlgebraSpec {
    name: String,
    names: Vec<String>,
    /// `lambda[j][i]` for `i < j`.
    lambda: Vec<Vec<RatFunc>>,
    /// `delta[j][i]` for `i < j`.
    delta: Vec<Vec<NcPoly>>,
    level_q: Vec<RatFunc>,
    torus_rank: usize,
    weights: Vec<Vec<i64>>,
    h: Vec<Vec<RatFunc>>,
    matrix_shape: Option<(usize, usize)>,
    steps_budget: u64,
}

/// Torus weight of an element: the common weight of all its monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorusWeight {
    Homogeneous(Vec<i64>),
    Inhomogeneous,
}

impl TorusWeight {
    pub fn as_homogeneous(&self) -> Option<&[i64]> {
        match self {
            Self::Homogeneous(w) => Some(w),
            Self::Inhomogeneous => None,
        }
    }
}

impl OreAlgebraSpec {
    pub fn builder(names: Vec<String>) -> SpecBuilder {
        SpecBuilder::new(names)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of generators `N`.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn lambda(&self, j: usize, i: usize) -> &RatFunc {
        &self.lambda[j][i]
    }

    pub fn delta(&self, j: usize, i: usize) -> &NcPoly {
        &self.delta[j][i]
    }

    pub fn level_q(&self, j: usize) -> &RatFunc {
        &self.level_q[j]
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn weight(&self, i: usize) -> &[i64] {
        &self.weights[i]
    }

    pub fn h_elem(&self, j: usize) -> &[RatFunc] {
        &self.h[j]
    }

    /// `(m, n)` when this is a quantum matrix algebra with row-major
    /// generators; enables minor syntax in expressions.
    pub fn matrix_shape(&self) -> Option<(usize, usize)> {
        self.matrix_shape
    }

    pub fn steps_budget(&self) -> u64 {
        self.steps_budget
    }

    pub fn with_steps_budget(mut self, budget: u64) -> Self {
        self.steps_budget = budget;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Index of the top generator `X = x_N`.
    pub fn top(&self) -> usize {
        self.names.len() - 1
    }

    pub fn render(&self, p: &NcPoly) -> String {
        p.render_with(&self.names)
    }

    pub fn generator(&self, i: usize) -> Result<NcPoly> {
        if i >= self.len() {
            return Err(Error::IndexOutOfRange(format!(
                "generator {} of {}",
                i + 1,
                self.len()
            )));
        }
        Ok(NcPoly::generator(i))
    }

    /// Same algebra with the given level's derivation replaced by zero.
    pub(crate) fn with_zero_delta(&self, j: usize) -> Self {
        let mut out = self.clone();
        for d in &mut out.delta[j] {
            *d = NcPoly::zero();
        }
        out
    }

    /// Mutable access for deliberately corrupting data in tests and
    /// verification harnesses.
    pub fn mutate(&self) -> SpecBuilder {
        SpecBuilder {
            spec: self.clone(),
        }
    }
}

/// Builder for [`OreAlgebraSpec`]. Unset entries default to `λ = 1`,
/// `δ = 0`, `q_j = 1`, zero torus rank.
#[derive(Clone, Debug)]
pub struct SpecBuilder {
    spec: OreAlgebraSpec,
}

impl SpecBuilder {
    pub fn new(names: Vec<String>) -> Self {
        let n = names.len();
        Self {
            spec: OreAlgebraSpec {
                name: String::new(),
                lambda: (0..n).map(|j| vec![RatFunc::one(); j]).collect(),
                delta: (0..n).map(|j| vec![NcPoly::zero(); j]).collect(),
                level_q: vec![RatFunc::one(); n],
                torus_rank: 0,
                weights: vec![Vec::new(); n],
                h: vec![Vec::new(); n],
                matrix_shape: None,
                steps_budget: DEFAULT_STEPS_BUDGET,
                names,
            },
        }
    }

    pub fn name(mut self, name: impl Into<String>) -> Self {
        self.spec.name = name.into();
        self
    }

    pub fn lambda(mut self, j: usize, i: usize, v: RatFunc) -> Self {
        self.spec.lambda[j][i] = v;
        self
    }

    pub fn delta(mut self, j: usize, i: usize, p: NcPoly) -> Self {
        self.spec.delta[j][i] = p;
        self
    }

    pub fn level_q(mut self, j: usize, v: RatFunc) -> Self {
        self.spec.level_q[j] = v;
        self
    }

    pub fn torus(mut self, rank: usize, weights: Vec<Vec<i64>>, h: Vec<Vec<RatFunc>>) -> Self {
        self.spec.torus_rank = rank;
        self.spec.weights = weights;
        self.spec.h = h;
        self
    }

    pub fn weight(mut self, i: usize, w: Vec<i64>) -> Self {
        self.spec.weights[i] = w;
        self
    }

    pub fn h_elem(mut self, j: usize, h: Vec<RatFunc>) -> Self {
        self.spec.h[j] = h;
        self
    }

    pub fn matrix_shape(mut self, m: usize, n: usize) -> Self {
        self.spec.matrix_shape = Some((m, n));
        self
    }

    pub fn steps_budget(mut self, budget: u64) -> Self {
        self.spec.steps_budget = budget;
        self
    }

    /// Validate structure and produce the spec.
    ///
    /// Checks dimensions, distinct names, that each `δ_j(x_i)` is in normal
    /// form over generators below `j`, and that the weights make every
    /// straightening rule homogeneous. Whether the data satisfy the CGL
    /// axioms is left to [`OreAlgebraSpec::check_cgl_axioms`].
    pub fn build(self) -> Result<OreAlgebraSpec> {
        let s = self.spec;
        let n = s.names.len();
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        if n == 0 {
            return bad("no generators".into());
        }
        for (i, name) in s.names.iter().enumerate() {
            if name.is_empty() || name == "X" || name == "q" {
                return bad(format!("generator {} has reserved or empty name `{name}`", i + 1));
            }
            if s.names[..i].contains(name) {
                return bad(format!("duplicate generator name `{name}`"));
            }
        }
        if s.weights.len() != n || s.h.len() != n || s.level_q.len() != n {
            return bad("per-generator tables have the wrong length".into());
        }
        for j in 0..n {
            if s.weights[j].len() != s.torus_rank {
                return bad(format!("weight of generator {} is not of length {}", j + 1, s.torus_rank));
            }
            if s.h[j].len() != s.torus_rank {
                return bad(format!("h element {} is not of length {}", j + 1, s.torus_rank));
            }
            if s.lambda[j].len() != j || s.delta[j].len() != j {
                return bad(format!("level {} tables have the wrong length", j + 1));
            }
            for i in 0..j {
                let d = &s.delta[j][i];
                if !d.is_normal_form() {
                    return bad(format!("δ_{}(x_{}) is not in normal form", j + 1, i + 1));
                }
                if d.max_generator().is_some_and(|g| g >= j) {
                    return bad(format!(
                        "δ_{}(x_{}) uses a generator not below level {}",
                        j + 1,
                        i + 1,
                        j + 1
                    ));
                }
                let target: Vec<i64> = (0..s.torus_rank)
                    .map(|k| s.weights[j][k] + s.weights[i][k])
                    .collect();
                for (m, _) in d.terms() {
                    let w = word_weight(&s.weights, s.torus_rank, m);
                    if w != target {
                        return bad(format!(
                            "δ_{}(x_{}) is not homogeneous of the weight of x_{} x_{}",
                            j + 1,
                            i + 1,
                            j + 1,
                            i + 1
                        ));
                    }
                }
            }
        }
        if let Some((m, nn)) = s.matrix_shape {
            if m * nn != n {
                return bad(format!("matrix shape {m}x{nn} does not match {n} generators"));
            }
        }
        Ok(s)
    }

    /// Produce the spec without validation. Only for constructing malformed
    /// inputs on purpose.
    pub fn build_unchecked(self) -> OreAlgebraSpec {
        self.spec
    }
}

pub(crate) fn word_weight(weights: &[Vec<i64>], rank: usize, m: &Monomial) -> Vec<i64> {
    let mut w = vec![0; rank];
    for &g in m.letters() {
        for (acc, x) in w.iter_mut().zip(&weights[g]) {
            *acc += x;
        }
    }
    w
}
