//! Generic quantum matrices `O_q(M_{m,n})` presented as an iterated Ore
//! extension in row-major order, and their quantum minors.
//!
//! Relations, for `j < l` and `i < k`:
//!
//! ```text
//! x_ij x_il = q x_il x_ij
//! x_ij x_kj = q x_kj x_ij
//! x_ij x_kl = x_kl x_ij                           (j > l)
//! x_ij x_kl - x_kl x_ij = (q - q^{-1}) x_il x_kj   (j < l)
//! ```

use crate::coef::RatFunc;
use crate::error::{Error, Result};
use crate::ncalg::{Monomial, NcPoly, OreAlgebraSpec, Strategy};

/// 0-based generator index of `x_{ij}` (1-based `i`, `j`) in `O_q(M_{m,n})`.
pub fn gen_index(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

/// 1-based `(i, j)` of generator `g`.
pub fn gen_position(n: usize, g: usize) -> (usize, usize) {
    (g / n + 1, g % n + 1)
}

pub fn gen_name(i: usize, j: usize) -> String {
    format!("x[{i},{j}]")
}

pub fn oqm(m: usize, n: usize) -> Result<OreAlgebraSpec> {
    if m == 0 || n == 0 {
        return Err(Error::IndexOutOfRange(format!("quantum matrices need m, n >= 1, got {m}x{n}")));
    }
    let count = m * n;
    let names: Vec<String> = (0..count)
        .map(|g| {
            let (i, j) = gen_position(n, g);
            gen_name(i, j)
        })
        .collect();
    let q = RatFunc::q();
    let q_inv = RatFunc::qpow(-1);
    let correction = q.sub(&q_inv).neg();
    let mut b = OreAlgebraSpec::builder(names)
        .name(format!("O_q(M_{{{m},{n}}})"))
        .matrix_shape(m, n);

    let mut weights = Vec::with_capacity(count);
    let mut hs = Vec::with_capacity(count);
    for g in 0..count {
        let (k, l) = gen_position(n, g);
        let mut w = vec![0; m + n];
        w[k - 1] = 1;
        w[m + l - 1] = 1;
        weights.push(w);
        let mut h = vec![RatFunc::one(); m + n];
        h[k - 1] = q_inv.clone();
        h[m + l - 1] = q_inv.clone();
        hs.push(h);

        b = b.level_q(g, RatFunc::qpow(-2));
        for a in 0..g {
            let (i, j) = gen_position(n, a);
            if i == k || j == l {
                b = b.lambda(g, a, q_inv.clone());
            } else if j < l {
                // i < k here: x_kl x_ij = x_ij x_kl - (q - q^{-1}) x_il x_kj
                let word = Monomial(vec![gen_index(n, i, l), gen_index(n, k, j)]);
                b = b.delta(g, a, NcPoly::term(word, correction.clone()));
            }
        }
    }
    b.torus(m + n, weights, hs).build()
}

/// Row and column sets of a quantum minor, 1-based and strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinorIndex {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

fn strictly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

impl MinorIndex {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::IndexOutOfRange(format!(
                "minor needs equally many rows and columns, got {rows:?} | {cols:?}"
            )));
        }
        if !strictly_increasing(&rows) || !strictly_increasing(&cols) || rows[0] == 0 || cols[0] == 0 {
            return Err(Error::IndexOutOfRange(format!(
                "minor indices must be strictly increasing and 1-based, got {rows:?} | {cols:?}"
            )));
        }
        Ok(Self { rows, cols })
    }

    /// `[a..=b | c..=d]`
    pub fn ranges(rows: std::ops::RangeInclusive<usize>, cols: std::ops::RangeInclusive<usize>) -> Result<Self> {
        Self::new(rows.collect(), cols.collect())
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    fn check_fits(&self, m: usize, n: usize) -> Result<()> {
        if *self.rows.last().unwrap() > m || *self.cols.last().unwrap() > n {
            return Err(Error::IndexOutOfRange(format!("{self} does not fit in {m}x{n}")));
        }
        Ok(())
    }
}

impl std::fmt::Display for MinorIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "[{}|{}]", join(&self.rows), join(&self.cols))
    }
}

/// All permutations of `0..t` in lexicographic order.
pub fn permutations(t: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                go(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(t), &mut vec![false; t], &mut out);
    out
}

/// Number of inversions.
pub fn perm_length(p: &[usize]) -> usize {
    let mut count = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                count += 1;
            }
        }
    }
    count
}

/// `[I|J] = Σ_σ (-q)^{l(σ)} x_{i_1 j_σ(1)} ⋯ x_{i_t j_σ(t)}` in `O_q(M_{m,n})`.
pub fn quantum_minor_in(spec: &OreAlgebraSpec, m: usize, n: usize, idx: &MinorIndex) -> Result<NcPoly> {
    idx.check_fits(m, n)?;
    let t = idx.size();
    let minus_q = RatFunc::q().neg();
    let mut out = NcPoly::zero();
    for perm in permutations(t) {
        let word: Vec<usize> = (0..t)
            .map(|a| gen_index(n, idx.rows[a], idx.cols[perm[a]]))
            .collect();
        let c = minus_q.powi(perm_length(&perm) as i64)?;
        out = out.add(&spec.reduce_word(&word, &c, Strategy::default())?);
    }
    Ok(out)
}

fn shape_of(spec: &OreAlgebraSpec) -> Result<(usize, usize)> {
    spec.matrix_shape()
        .ok_or_else(|| Error::InvalidSpec("not a quantum matrix algebra".into()))
}

pub fn quantum_minor(spec: &OreAlgebraSpec, idx: &MinorIndex) -> Result<NcPoly> {
    let (m, n) = shape_of(spec)?;
    quantum_minor_in(spec, m, n, idx)
}

/// `det_q` of `O_q(M_n)`.
pub fn quantum_det(spec: &OreAlgebraSpec) -> Result<NcPoly> {
    let (m, n) = shape_of(spec)?;
    if m != n {
        return Err(Error::InvalidSpec(format!("det_q needs a square algebra, got {m}x{n}")));
    }
    quantum_minor_in(spec, m, n, &MinorIndex::ranges(1..=n, 1..=n)?)
}

/// Index set of `b_i`: `[1..i | n-i+1..n]` for `i ≤ m`, and
/// `[1..m | n-i+1..n+m-i]` for `m < i ≤ n`.
pub fn b_index(m: usize, n: usize, i: usize) -> Result<MinorIndex> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange(format!("b_{i} needs 1 <= i <= n = {n}")));
    }
    if i <= m {
        MinorIndex::ranges(1..=i, n - i + 1..=n)
    } else {
        MinorIndex::ranges(1..=m, n - i + 1..=n + m - i)
    }
}

/// Index set of `c_i = [m-i+1..m | 1..i]`.
pub fn c_index(m: usize, i: usize) -> Result<MinorIndex> {
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange(format!("c_{i} needs 1 <= i <= m = {m}")));
    }
    MinorIndex::ranges(m - i + 1..=m, 1..=i)
}

pub fn b_minor(m: usize, n: usize, i: usize) -> Result<NcPoly> {
    quantum_minor(&oqm(m, n)?, &b_index(m, n, i)?)
}

pub fn c_minor(m: usize, n: usize, i: usize) -> Result<NcPoly> {
    quantum_minor(&oqm(m, n)?, &c_index(m, i)?)
}

/// `b_1, …, b_n, c_1, …, c_{m-1}`: generators of the height-one H-primes.
/// Requires `m ≤ n`; transpose first otherwise.
pub fn height_one_hprime_generators(m: usize, n: usize) -> Result<Vec<NcPoly>> {
    if m > n {
        return Err(Error::IndexOutOfRange(format!(
            "expected m <= n, got {m}x{n}; transpose first"
        )));
    }
    let spec = oqm(m, n)?;
    let mut out = Vec::with_capacity(m + n - 1);
    for i in 1..=n {
        out.push(quantum_minor(&spec, &b_index(m, n, i)?)?);
    }
    for i in 1..m {
        out.push(quantum_minor(&spec, &c_index(m, i)?)?);
    }
    Ok(out)
}

/// Image of `a ∈ O_q(M_{m,n})` under `x_ij ↦ x_ji` in `O_q(M_{n,m})`.
pub fn transpose(m: usize, n: usize, a: &NcPoly) -> Result<NcPoly> {
    let target = oqm(n, m)?;
    let mut out = NcPoly::zero();
    for (mono, c) in a.terms() {
        let word: Vec<usize> = mono
            .letters()
            .iter()
            .map(|&g| {
                let (i, j) = gen_position(n, g);
                gen_index(m, j, i)
            })
            .collect();
        out = out.add(&target.reduce_word(&word, c, Strategy::default())?);
    }
    Ok(out)
}

/// The projection `O_q(M_n) → O_q(M_{m,n})` keeping the first `m` rows and
/// sending the other generators to zero.
pub fn project_rows(n: usize, m: usize, a: &NcPoly) -> Result<NcPoly> {
    if m > n {
        return Err(Error::IndexOutOfRange(format!("cannot keep {m} of {n} rows")));
    }
    let keep = m * n;
    Ok(NcPoly::from_raw_terms(
        a.terms()
            .filter(|(mono, _)| mono.letters().iter().all(|&g| g < keep))
            .map(|(mono, c)| (mono.clone(), c.clone())),
    ))
}

/// Embed an element of `O_q(M_{|I|,|J|})` into `O_q(M_{m,n})` through
/// `x_ab ↦ x_{I_a J_b}`. Row-major order is preserved, so normal forms map to
/// normal forms.
pub fn embed(rows: &[usize], cols: &[usize], n: usize, a: &NcPoly) -> NcPoly {
    let t = cols.len();
    NcPoly::from_raw_terms(a.terms().map(|(mono, c)| {
        let word = mono
            .letters()
            .iter()
            .map(|&g| {
                let (i, j) = gen_position(t, g);
                gen_index(n, rows[i - 1], cols[j - 1])
            })
            .collect();
        (Monomial(word), c.clone())
    }))
}
