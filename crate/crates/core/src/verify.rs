//! The verification suite: nine exact checks of the structural facts the
//! engine is built around. Each criterion is deterministic given the seed.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::cauchon;
use crate::coef::RatFunc;
use crate::delderiv::{self, laurent_mul, LaurentElem};
use crate::error::Result;
use crate::grassmann;
use crate::ncalg::{
    is_torsionfree, Axiom, Monomial, NcPoly, OreAlgebraSpec, Strategy, Torsionfree,
    DEFAULT_NILPOTENCE_BOUND,
};
use crate::presets;
use crate::qmat;
use crate::sample::ElementSampler;

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Restrict the matrix-size-dependent checks to one shape.
    pub size: Option<(usize, usize)>,
    pub nilpotence_bound: usize,
    /// Random pairs per algebra for the θ checks.
    pub theta_pairs: usize,
    /// Random triples and words for the rewriting checks.
    pub rewrite_samples: usize,
    /// Random elements per level for the σδ identity.
    pub level_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            size: None,
            nilpotence_bound: DEFAULT_NILPOTENCE_BOUND,
            theta_pairs: 100,
            rewrite_samples: 500,
            level_samples: 50,
        }
    }
}

impl VerifyConfig {
    fn shapes(&self, default: &[(usize, usize)]) -> Vec<(usize, usize)> {
        match self.size {
            Some(s) => vec![s],
            None => default.to_vec(),
        }
    }

    /// Shapes with `m ≤ n`, transposing a user-supplied one if needed.
    fn wide_shapes(&self, default: &[(usize, usize)]) -> Vec<(usize, usize)> {
        self.shapes(default)
            .into_iter()
            .map(|(m, n)| (m.min(n), m.max(n)))
            .collect()
    }

    fn seed_for(&self, criterion: u8, salt: u64) -> u64 {
        self.seed ^ ((criterion as u64) << 56) ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    /// Summary on success, first failure otherwise.
    pub detail: String,
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}. {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "height-one H-prime generators are normal H-eigenvectors"),
    (2, "quantum determinant is central"),
    (3, "Cauchon diagram counts"),
    (4, "theta is a homomorphism"),
    (5, "two theta expansions agree"),
    (6, "CGL axiom checker"),
    (7, "rewriting soundness"),
    (8, "extremal maximal minors are normal; phi scaling"),
    (9, "torsionfree verdict"),
];

/// Outcome of one check: `Ok(summary)` or `Err(first failure)`.
type Outcome = std::result::Result<String, String>;

fn fail<T>(msg: impl Into<String>) -> std::result::Result<T, String> {
    Err(msg.into())
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn run_criterion(id: u8, cfg: &VerifyConfig) -> Option<CriterionResult> {
    let (_, title) = *CRITERIA.iter().find(|(i, _)| *i == id)?;
    let start = Instant::now();
    let outcome = match id {
        1 => height_one_generators(cfg),
        2 => determinant_central(cfg),
        3 => cauchon_counts(cfg),
        4 => theta_homomorphism(cfg),
        5 => theta_expansions(cfg),
        6 => cgl_checker(cfg),
        7 => rewriting(cfg),
        8 => grassmannian(cfg),
        _ => torsionfree(cfg),
    };
    let (passed, detail) = match outcome {
        Ok(s) => (true, s),
        Err(s) => (false, s),
    };
    Some(CriterionResult {
        id,
        title,
        passed,
        detail,
        elapsed: start.elapsed(),
    })
}

/// Runs every criterion, one thread each; results are in criterion order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionResult> {
    std::thread::scope(|s| {
        let handles: Vec<_> = CRITERIA
            .iter()
            .map(|&(id, _)| s.spawn(move || run_criterion(id, cfg).expect("known criterion")))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion thread panicked"))
            .collect()
    })
}

fn height_one_generators(cfg: &VerifyConfig) -> Outcome {
    let mut checked = 0;
    for (m, n) in cfg.wide_shapes(&[(2, 2), (2, 3), (3, 3)]) {
        let spec = lift(qmat::oqm(m, n))?;
        let gens = lift(qmat::height_one_hprime_generators(m, n))?;
        if gens.len() != m + n - 1 {
            return fail(format!("{m}x{n}: {} generators, expected {}", gens.len(), m + n - 1));
        }
        for (a, g) in gens.iter().enumerate() {
            if gens[..a].contains(g) {
                return fail(format!("{m}x{n}: generator {} repeats an earlier one", a + 1));
            }
            if !lift(spec.is_normal(g))?.is_normal() {
                return fail(format!("{m}x{n}: {} is not normal", spec.render(g)));
            }
            if lift(spec.torus_weight(g))?.as_homogeneous().is_none() {
                return fail(format!("{m}x{n}: {} is not an H-eigenvector", spec.render(g)));
            }
            checked += 1;
        }
        let c_m = lift(qmat::c_minor(m, n, m))?;
        let b_n = lift(qmat::b_minor(m, n, n))?;
        if c_m != b_n {
            return fail(format!("{m}x{n}: c_m != b_n"));
        }
    }
    Ok(format!("{checked} generators normal and homogeneous; c_m = b_n"))
}

fn determinant_central(cfg: &VerifyConfig) -> Outcome {
    let sizes: Vec<usize> = match cfg.size {
        Some((m, n)) => vec![m.min(n)],
        None => vec![2, 3],
    };
    let mut checked = 0;
    for n in sizes {
        let spec = lift(qmat::oqm(n, n))?;
        let det = lift(qmat::quantum_det(&spec))?;
        for g in 0..spec.len() {
            let e = lift(spec.qcommute_exponent(&det, &NcPoly::generator(g)))?;
            if e != Some(0) {
                return fail(format!("n={n}: det_q vs {} gives {e:?}", spec.names()[g]));
            }
            checked += 1;
        }
    }
    Ok(format!("det_q commutes with {checked} generators"))
}

/// Every colouring of an `m × n` grid, kept when each black cell has a fully
/// black row prefix or column prefix. Bit `i*n + j` is cell `(i+1, j+1)`.
fn brute_force_cauchon(m: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
    let cells = m * n;
    let black = |mask: u32, i: usize, j: usize| mask >> (i * n + j) & 1 == 1;
    (0u32..1 << cells)
        .filter(|&mask| {
            (0..m).all(|i| {
                (0..n).all(|j| {
                    !black(mask, i, j)
                        || (0..j).all(|c| black(mask, i, c))
                        || (0..i).all(|r| black(mask, r, j))
                })
            })
        })
        .map(|mask| {
            (0..cells)
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| (b / n + 1, b % n + 1))
                .collect()
        })
        .collect()
}

fn cauchon_counts(cfg: &VerifyConfig) -> Outcome {
    let c22 = lift(cauchon::count(2, 2))?;
    if c22 != 14 {
        return fail(format!("count(2,2) = {c22}, expected 14"));
    }
    let mut summary = Vec::new();
    for (m, n) in cfg.shapes(&[(2, 3), (3, 3)]) {
        if m * n > 16 {
            return fail(format!("{m}x{n} is too large for the brute-force oracle"));
        }
        let mut found: Vec<Vec<(usize, usize)>> = lift(cauchon::enumerate(m, n))?
            .iter()
            .map(|d| d.black().iter().copied().collect())
            .collect();
        found.sort();
        let mut oracle = brute_force_cauchon(m, n);
        oracle.sort();
        if found != oracle {
            return fail(format!(
                "{m}x{n}: enumeration gives {}, brute force {}",
                found.len(),
                oracle.len()
            ));
        }
        let ones = lift(cauchon::count_by_black(m, n))?.get(&1).copied().unwrap_or(0);
        if ones != m + n - 1 {
            return fail(format!("{m}x{n}: {ones} one-box diagrams, expected {}", m + n - 1));
        }
        summary.push(format!("{m}x{n}: {}", found.len()));
    }
    Ok(format!("count(2,2) = 14; brute force agrees at {}", summary.join(", ")))
}

fn theta_shapes(cfg: &VerifyConfig) -> Vec<(usize, usize)> {
    cfg.shapes(&[(2, 2), (2, 3)])
}

/// Seeded base-algebra samples for the θ checks over `oqm(m, n)`.
fn theta_samples(cfg: &VerifyConfig, criterion: u8, spec: &OreAlgebraSpec, salt: u64) -> Result<Vec<(NcPoly, NcPoly)>> {
    let mut s = ElementSampler::new(cfg.seed_for(criterion, salt));
    let below = spec.top();
    (0..cfg.theta_pairs)
        .map(|_| Ok((s.element(spec, below, 3)?, s.element(spec, below, 3)?)))
        .collect()
}

/// `x11 - q x12 x21 X^{-1}` over `O_q(M_2)`, written out by hand.
fn theta_x11_expected() -> LaurentElem {
    let x11 = NcPoly::generator(0);
    let x12_x21 = NcPoly::term(Monomial(vec![1, 2]), RatFunc::q().neg());
    LaurentElem::from_base(x11).add(&LaurentElem::monomial(x12_x21, -1))
}

fn theta_homomorphism(cfg: &VerifyConfig) -> Outcome {
    let bound = cfg.nilpotence_bound;
    let spec22 = lift(qmat::oqm(2, 2))?;
    let t = lift(delderiv::theta(&spec22, &NcPoly::generator(0), bound))?;
    if t != theta_x11_expected() {
        return fail(format!("theta(x11) = {}", t.render(&spec22)));
    }
    let mut pairs = 0;
    for (m, n) in theta_shapes(cfg) {
        let spec = lift(qmat::oqm(m, n))?;
        for (a, b) in lift(theta_samples(cfg, 4, &spec, (m * 8 + n) as u64))? {
            let ab = lift(spec.mul(&a, &b))?;
            let lhs = lift(delderiv::theta(&spec, &ab, bound))?;
            let ta = lift(delderiv::theta(&spec, &a, bound))?;
            let tb = lift(delderiv::theta(&spec, &b, bound))?;
            let rhs = lift(laurent_mul(&spec, &ta, &tb, bound))?;
            if lhs != rhs {
                return fail(format!(
                    "{m}x{n}: theta(ab) != theta(a)theta(b) for a = {}, b = {}",
                    spec.render(&a),
                    spec.render(&b)
                ));
            }
            if ta.is_zero() != a.is_zero() {
                return fail(format!("{m}x{n}: theta({}) = 0", spec.render(&a)));
            }
            let sum = lift(delderiv::theta(&spec, &a.add(&b), bound))?;
            if sum != ta.add(&tb) {
                return fail(format!("{m}x{n}: theta is not additive"));
            }
            pairs += 1;
        }
        if lift(delderiv::theta(&spec, &NcPoly::one(), bound))? != LaurentElem::one() {
            return fail(format!("{m}x{n}: theta(1) != 1"));
        }
    }
    Ok(format!("theta(x11) matches; {pairs} random pairs multiplicative"))
}

fn theta_expansions(cfg: &VerifyConfig) -> Outcome {
    let bound = cfg.nilpotence_bound;
    let mut count = 0;
    for (m, n) in theta_shapes(cfg) {
        let spec = lift(qmat::oqm(m, n))?;
        for (a, b) in lift(theta_samples(cfg, 4, &spec, (m * 8 + n) as u64))? {
            for x in [a, b] {
                let t = lift(delderiv::theta(&spec, &x, bound))?;
                let alt = lift(delderiv::theta_alt(&spec, &x, bound))?;
                if t != alt {
                    return fail(format!("{m}x{n}: expansions differ on {}", spec.render(&x)));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} samples agree"))
}

fn expect_failure(spec: &OreAlgebraSpec, axiom: Axiom, bound: usize, label: &str) -> std::result::Result<(), String> {
    let report = lift(spec.check_cgl_axioms(bound))?;
    if report.fails(axiom) {
        Ok(())
    } else {
        fail(format!("mutation `{label}` was not caught by `{axiom}`"))
    }
}

/// The three seeded mutations: a sign flip in one correction term, a wrong
/// level constant and a vanishing straightening coefficient.
pub fn mutations() -> Result<Vec<(&'static str, OreAlgebraSpec, Axiom)>> {
    let s23 = qmat::oqm(2, 3)?;
    // Top level x[2,3] has corrections at x[1,1] and x[1,2]; flipping one
    // breaks compatibility with x[1,2] x[1,1] = q^{-1} x[1,1] x[1,2].
    let top = s23.top();
    let flipped = s23
        .mutate()
        .delta(top, 0, s23.delta(top, 0).neg())
        .name("sign-flipped delta")
        .build()?;
    let s22 = qmat::oqm(2, 2)?;
    let wrong_q = s22
        .mutate()
        .level_q(s22.top(), RatFunc::qpow(-1))
        .name("wrong level constant")
        .build()?;
    let zero_lambda = s22
        .mutate()
        .lambda(s22.top(), 1, RatFunc::zero())
        .name("zero lambda")
        .build()?;
    Ok(vec![
        ("flipped delta sign", flipped, Axiom::DeltaWellDefined),
        ("wrong q_j", wrong_q, Axiom::SigmaDeltaCommutation),
        ("zero lambda", zero_lambda, Axiom::LambdaNonzero),
    ])
}

fn cgl_checker(cfg: &VerifyConfig) -> Outcome {
    let bound = cfg.nilpotence_bound;
    let mut algebras: Vec<OreAlgebraSpec> = cfg
        .shapes(&[(1, 1), (2, 2), (2, 3), (3, 3)])
        .into_iter()
        .map(|(m, n)| qmat::oqm(m, n))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    algebras.push(presets::quantum_plane());
    algebras.push(presets::uq_sl3_plus());
    for spec in &algebras {
        let report = lift(spec.check_cgl_axioms(bound))?;
        let first = report.failures().next().map(|(level, check)| {
            format!(
                "{}: level {} fails {}: {}",
                spec.name(),
                level.level,
                check.axiom,
                check.detail
            )
        });
        if let Some(msg) = first {
            return fail(msg);
        }
    }
    let muts = lift(mutations())?;
    for (label, spec, axiom) in &muts {
        expect_failure(spec, *axiom, bound, label)?;
    }
    let mut elements = 0;
    for (k, spec) in algebras.iter().enumerate() {
        let mut s = ElementSampler::new(cfg.seed_for(6, k as u64));
        for j in 1..spec.len() {
            let qj = spec.level_q(j);
            for _ in 0..cfg.level_samples {
                let a = lift(s.element(spec, j, 3))?;
                let lhs = lift(spec.apply_delta(j, &a).and_then(|d| spec.apply_sigma(j, &d)))?;
                let rhs = lift(spec.apply_sigma(j, &a).and_then(|d| spec.apply_delta(j, &d)))?.scale(qj);
                if lhs != rhs {
                    return fail(format!(
                        "{}: sigma delta != q_j delta sigma at level {} on {}",
                        spec.name(),
                        j + 1,
                        spec.render(&a)
                    ));
                }
                elements += 1;
            }
        }
    }
    Ok(format!(
        "{} algebras pass, {} mutations caught, identity holds on {elements} samples",
        algebras.len(),
        muts.len()
    ))
}

fn rewriting(cfg: &VerifyConfig) -> Outcome {
    let mut checked = 0;
    for (m, n) in cfg.shapes(&[(2, 3)]) {
        let spec = lift(qmat::oqm(m, n))?;
        let mut s = ElementSampler::new(cfg.seed_for(7, (m * 8 + n) as u64));
        for _ in 0..cfg.rewrite_samples {
            let a = lift(s.element(&spec, spec.len(), 2))?;
            let b = lift(s.element(&spec, spec.len(), 2))?;
            let c = lift(s.element(&spec, spec.len(), 2))?;
            let left = lift(spec.mul(&a, &b).and_then(|ab| spec.mul(&ab, &c)))?;
            let right = lift(spec.mul(&b, &c).and_then(|bc| spec.mul(&a, &bc)))?;
            if left != right {
                return fail(format!(
                    "{m}x{n}: (ab)c != a(bc) for a = {}, b = {}, c = {}",
                    spec.render(&a),
                    spec.render(&b),
                    spec.render(&c)
                ));
            }
            let word = s.word(spec.len(), 7);
            let coeff = s.scalar();
            let l = lift(spec.reduce_word(&word, &coeff, Strategy::Leftmost))?;
            let r = lift(spec.reduce_word(&word, &coeff, Strategy::Rightmost))?;
            if l != r {
                return fail(format!("{m}x{n}: strategies disagree on word {word:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} triples associative, {checked} words strategy-independent"))
}

fn grassmannian(cfg: &VerifyConfig) -> Outcome {
    let mut checks = 0;
    for (m, n) in cfg.wide_shapes(&[(2, 3), (2, 4)]) {
        let r = lift(grassmann::extremal_normality_report(m, n))?;
        if let Some(e) = r.first.iter().chain(&r.last).find(|e| e.exponent.is_none()) {
            return fail(format!("{m}x{n}: an extremal minor does not q-commute with {:?}", e.cols));
        }
        checks += r.check_count();
    }
    let phi_shape = cfg.size.unwrap_or((2, 2));
    let phi = lift(grassmann::phi_scaling_check(phi_shape.0, phi_shape.1))?;
    if let Some(e) = phi.entries.iter().find(|e| !e.passed) {
        return fail(format!("phi does not scale {} by q^-{}", e.minor, e.size));
    }
    Ok(format!(
        "{checks} extremal exponents exist; phi scales {} minors",
        phi.entries.len()
    ))
}

fn torsionfree(cfg: &VerifyConfig) -> Outcome {
    let mut algebras: Vec<OreAlgebraSpec> = cfg
        .shapes(&[(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)])
        .into_iter()
        .map(|(m, n)| qmat::oqm(m, n))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    algebras.push(presets::quantum_plane());
    algebras.push(presets::uq_sl3_plus());
    for spec in &algebras {
        let v = is_torsionfree(spec);
        if v != Torsionfree::Yes {
            return fail(format!("{}: verdict {v:?}", spec.name()));
        }
    }
    Ok(format!("{} algebras torsionfree", algebras.len()))
}
