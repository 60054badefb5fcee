//! Checking the CGL axioms for a spec, level by level.
//!
//! The identity `σ_j δ_j = q_j δ_j σ_j` is verified on generators only: both
//! sides are σ_j-twisted derivations into `A_{j-1}`, so agreement on a
//! generating set forces agreement everywhere. Local nilpotence is not
//! decidable from finite data and is checked up to a bound, on generators and
//! a few seeded samples.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::{NcPoly, OreAlgebraSpec};
use crate::error::Result;
use crate::sample::ElementSampler;

const NILPOTENCE_SAMPLES: usize = 3;
const NILPOTENCE_SAMPLE_SEED: u64 = 0x5eed_c91;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// (a) `σ_j δ_j(x_i) = q_j δ_j σ_j(x_i)` for `i < j`.
    SigmaDeltaCommutation,
    /// (b) `δ_j` nilpotent on generators and samples within the bound.
    LocalNilpotence,
    /// (c) `q_j` is not a root of unity.
    LevelConstant,
    /// (d) `h_j(x_i) = σ_j(x_i)` for `i < j`.
    TorusRealisesSigma,
    /// (e) the `h_j`-eigenvalue of `x_j` is not a root of unity.
    Eigenvalue,
    /// (f) `λ_{ji} ≠ 0`.
    LambdaNonzero,
    /// σ_j preserves the defining relations of `A_{j-1}`.
    SigmaWellDefined,
    /// δ_j is compatible with the defining relations of `A_{j-1}`.
    DeltaWellDefined,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::SigmaDeltaCommutation => "sigma-delta commutation",
            Self::LocalNilpotence => "local nilpotence",
            Self::LevelConstant => "q_j not a root of unity",
            Self::TorusRealisesSigma => "h_j realises sigma_j",
            Self::Eigenvalue => "h_j-eigenvalue of x_j not a root of unity",
            Self::LambdaNonzero => "lambda nonzero",
            Self::SigmaWellDefined => "sigma_j respects relations",
            Self::DeltaWellDefined => "delta_j respects relations",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    /// Empty when passed; otherwise the first offending case.
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelReport {
    /// 1-based level.
    pub level: usize,
    pub generator: String,
    pub checks: Vec<AxiomCheck>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CglReport {
    pub levels: Vec<LevelReport>,
}

impl CglReport {
    pub fn all_pass(&self) -> bool {
        self.levels
            .iter()
            .all(|l| l.checks.iter().all(|c| c.passed))
    }

    pub fn failures(&self) -> impl Iterator<Item = (&LevelReport, &AxiomCheck)> {
        self.levels
            .iter()
            .flat_map(|l| l.checks.iter().filter(|c| !c.passed).map(move |c| (l, c)))
    }

    pub fn fails(&self, axiom: Axiom) -> bool {
        self.failures().any(|(_, c)| c.axiom == axiom)
    }
}

struct Collector {
    axiom: Axiom,
    detail: Option<String>,
}

impl Collector {
    fn new(axiom: Axiom) -> Self {
        Self { axiom, detail: None }
    }

    fn fail(&mut self, msg: impl FnOnce() -> String) {
        if self.detail.is_none() {
            self.detail = Some(msg());
        }
    }

    fn finish(self) -> AxiomCheck {
        AxiomCheck {
            axiom: self.axiom,
            passed: self.detail.is_none(),
            detail: self.detail.unwrap_or_default(),
        }
    }
}

impl OreAlgebraSpec {
    pub fn check_cgl_axioms(&self, nilpotence_bound: usize) -> Result<CglReport> {
        let levels = (0..self.len())
            .map(|j| self.check_level(j, nilpotence_bound))
            .collect::<Result<_>>()?;
        Ok(CglReport { levels })
    }

    fn check_level(&self, j: usize, bound: usize) -> Result<LevelReport> {
        let names = self.names();
        let mut comm = Collector::new(Axiom::SigmaDeltaCommutation);
        let mut nil = Collector::new(Axiom::LocalNilpotence);
        let mut lvl = Collector::new(Axiom::LevelConstant);
        let mut torus = Collector::new(Axiom::TorusRealisesSigma);
        let mut eig = Collector::new(Axiom::Eigenvalue);
        let mut nonzero = Collector::new(Axiom::LambdaNonzero);
        let mut sigma_ok = Collector::new(Axiom::SigmaWellDefined);
        let mut delta_ok = Collector::new(Axiom::DeltaWellDefined);

        let qj = self.level_q(j);
        if qj.is_zero() || qj.is_root_of_unity() {
            lvl.fail(|| format!("q_{} = {qj}", j + 1));
        }
        let h = self.h_elem(j);
        match self.character(h, self.weight(j)) {
            Ok(e) if !e.is_zero() && !e.is_root_of_unity() => {}
            Ok(e) => eig.fail(|| format!("eigenvalue of {} is {e}", names[j])),
            Err(e) => eig.fail(|| e.to_string()),
        }

        for i in 0..j {
            let lam = self.lambda(j, i);
            if lam.is_zero() {
                nonzero.fail(|| format!("lambda({}, {}) = 0", names[j], names[i]));
            }
            match self.character(h, self.weight(i)) {
                Ok(c) if &c == lam => {}
                Ok(c) => torus.fail(|| {
                    format!("h_{} acts on {} by {c}, lambda is {lam}", j + 1, names[i])
                }),
                Err(e) => torus.fail(|| e.to_string()),
            }
        }

        for i in 0..j {
            let xi = NcPoly::generator(i);
            let lhs = self.apply_sigma(j, &self.apply_delta(j, &xi)?)?;
            let rhs = self
                .apply_delta(j, &self.apply_sigma(j, &xi)?)?
                .scale(qj);
            if lhs != rhs {
                comm.fail(|| {
                    format!(
                        "at {}: sigma delta = {}, q_j delta sigma = {}",
                        names[i],
                        self.render(&lhs),
                        self.render(&rhs)
                    )
                });
            }
        }
        self.check_relations(j, &mut sigma_ok, &mut delta_ok)?;
        self.check_nilpotence(j, bound, &mut nil)?;

        Ok(LevelReport {
            level: j + 1,
            generator: names[j].clone(),
            checks: [comm, nil, lvl, torus, eig, nonzero, sigma_ok, delta_ok]
                .into_iter()
                .map(Collector::finish)
                .collect(),
        })
    }

    /// σ_j and δ_j must respect every relation
    /// `x_k x_i = λ_{ki} x_i x_k + δ_k(x_i)` with `i < k < j`.
    fn check_relations(&self, j: usize, sigma_ok: &mut Collector, delta_ok: &mut Collector) -> Result<()> {
        let names = self.names();
        for k in 0..j {
            for i in 0..k {
                let lam_ki = self.lambda(k, i);
                let dk = self.delta(k, i);

                // σ_j(x_k x_i - λ x_i x_k) = λ_{jk} λ_{ji} δ_k(x_i) must equal σ_j(δ_k(x_i)).
                let scaled = dk.scale(&self.lambda(j, k).mul(self.lambda(j, i)));
                if scaled != self.apply_sigma(j, dk)? {
                    sigma_ok.fail(|| format!("relation between {} and {}", names[k], names[i]));
                }

                let lhs = self
                    .delta_of_word(j, &[k, i])?
                    .sub(&self.delta_of_word(j, &[i, k])?.scale(lam_ki));
                let rhs = self.apply_delta(j, dk)?;
                if lhs != rhs {
                    delta_ok.fail(|| {
                        format!(
                            "relation between {} and {}: {} vs {}",
                            names[k],
                            names[i],
                            self.render(&lhs),
                            self.render(&rhs)
                        )
                    });
                }
            }
        }
        Ok(())
    }

    fn check_nilpotence(&self, j: usize, bound: usize, nil: &mut Collector) -> Result<()> {
        let mut candidates: Vec<NcPoly> = (0..j).map(NcPoly::generator).collect();
        if j > 0 {
            let mut sampler = ElementSampler::new(NILPOTENCE_SAMPLE_SEED ^ j as u64);
            for _ in 0..NILPOTENCE_SAMPLES {
                let s = sampler.element(self, j, 3)?;
                if !s.is_zero() {
                    candidates.push(s);
                }
            }
        }
        for a in &candidates {
            if a.is_zero() {
                continue;
            }
            if let Err(e) = self.nilpotency_index(j, a, bound) {
                nil.fail(|| format!("on {}: {e}", self.render(a)));
            }
        }
        Ok(())
    }
}

/// Verdict of the torsionfree test on the group generated by the `λ_{ji}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Torsionfree {
    Yes,
    No,
    /// Some `λ_{ji}` is not of the form `±q^k`.
    Undecided,
}

/// Decide whether the subgroup of `Q(q)^*` generated by the `λ_{ji}` is
/// torsionfree, when every `λ_{ji}` has the form `±q^k`.
///
/// Such a subgroup sits inside `{±1} × q^Z`; it has torsion exactly when it
/// contains `-1`. Writing the generators as `(ε_i, k_i)` and `g = gcd(k_i)`,
/// `-1` is absent iff the sign is a homomorphic function of the exponent,
/// i.e. there is `c ∈ {0,1}` with `ε_i = (-1)^{c k_i / g}` for every `i`.
pub fn is_torsionfree(spec: &OreAlgebraSpec) -> Torsionfree {
    let mut gens: Vec<(bool, i64)> = Vec::new();
    for j in 0..spec.len() {
        for i in 0..j {
            match spec.lambda(j, i).as_signed_qpow() {
                Some((sign, k)) => gens.push((sign < 0, k)),
                None => return Torsionfree::Undecided,
            }
        }
    }
    let g = gens.iter().fold(0i64, |acc, &(_, k)| acc.gcd(&k));
    let consistent = |c: i64| {
        gens.iter().all(|&(neg, k)| {
            let parity = if g == 0 { 0 } else { (c * (k / g)).rem_euclid(2) };
            neg == (parity == 1)
        })
    };
    if consistent(0) || consistent(1) {
        Torsionfree::Yes
    } else {
        Torsionfree::No
    }
}
