//! Maximal quantum minors of `O_q(M_{m,n})`, the normality of the two
//! extreme ones against all others, and the scaling automorphism
//! `φ(x_ij) = q^{-1} x_ij`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coef::RatFunc;
use crate::error::{Error, Result};
use crate::ncalg::{NcPoly, OreAlgebraSpec};
use crate::qmat::{self, MinorIndex};

/// Largest number of maximal minors the normality report will handle.
pub const MAX_MINORS: usize = 20;

/// All `[J] = [1..m | J]` for `m`-subsets `J ⊆ {1..n}`.
#[derive(Clone, Debug)]
pub struct MaximalMinorSet {
    pub m: usize,
    pub n: usize,
    pub minors: BTreeMap<Vec<usize>, NcPoly>,
}

/// `k`-subsets of `{1..n}` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn check_shape(m: usize, n: usize) -> Result<()> {
    if m == 0 || m > n {
        return Err(Error::IndexOutOfRange(format!("expected 1 <= m <= n, got {m}x{n}")));
    }
    Ok(())
}

pub fn maximal_minors(m: usize, n: usize) -> Result<MaximalMinorSet> {
    check_shape(m, n)?;
    let spec = qmat::oqm(m, n)?;
    let mut minors = BTreeMap::new();
    for cols in subsets(n, m) {
        let idx = MinorIndex::new((1..=m).collect(), cols.clone())?;
        minors.insert(cols, qmat::quantum_minor(&spec, &idx)?);
    }
    Ok(MaximalMinorSet { m, n, minors })
}

impl MaximalMinorSet {
    pub fn len(&self) -> usize {
        self.minors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minors.is_empty()
    }

    pub fn get(&self, cols: &[usize]) -> Option<&NcPoly> {
        self.minors.get(cols)
    }
}

/// Exponent `s` with `e·[J] = q^s [J]·e`, or `None`.
#[derive(Clone, Debug, Serialize)]
pub struct MinorExponent {
    pub cols: Vec<usize>,
    pub exponent: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalNormalityReport {
    pub m: usize,
    pub n: usize,
    /// Against `[1..m]`.
    pub first: Vec<MinorExponent>,
    /// Against `[n-m+1..n]`.
    pub last: Vec<MinorExponent>,
}

impl ExtremalNormalityReport {
    pub fn success(&self) -> bool {
        self.first.iter().chain(&self.last).all(|e| e.exponent.is_some())
    }

    pub fn check_count(&self) -> usize {
        self.first.len() + self.last.len()
    }
}

pub fn extremal_normality_report(m: usize, n: usize) -> Result<ExtremalNormalityReport> {
    check_shape(m, n)?;
    if binomial(n, m) > MAX_MINORS {
        return Err(Error::SizeLimit(format!(
            "C({n},{m}) maximal minors exceeds {MAX_MINORS}"
        )));
    }
    let spec = qmat::oqm(m, n)?;
    let set = maximal_minors(m, n)?;
    let first_cols: Vec<usize> = (1..=m).collect();
    let last_cols: Vec<usize> = (n - m + 1..=n).collect();
    let against = |cols: &[usize]| -> Result<Vec<MinorExponent>> {
        let e = &set.minors[cols];
        set.minors
            .iter()
            .map(|(j, minor)| {
                Ok(MinorExponent {
                    cols: j.clone(),
                    exponent: spec.qcommute_exponent(e, minor)?,
                })
            })
            .collect()
    };
    Ok(ExtremalNormalityReport {
        m,
        n,
        first: against(&first_cols)?,
        last: against(&last_cols)?,
    })
}

/// `φ` on `O_q(M_{m,n})`: every generator scaled by `q^{-1}`.
pub fn phi(spec: &OreAlgebraSpec, a: &NcPoly) -> NcPoly {
    spec.scale_generators(&vec![RatFunc::qpow(-1); spec.len()], a)
}

/// `φ^{-1}`: every generator scaled by `q`.
pub fn phi_inv(spec: &OreAlgebraSpec, a: &NcPoly) -> NcPoly {
    spec.scale_generators(&vec![RatFunc::q(); spec.len()], a)
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiScalingEntry {
    pub minor: String,
    pub size: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiScalingReport {
    pub m: usize,
    pub n: usize,
    pub entries: Vec<PhiScalingEntry>,
}

impl PhiScalingReport {
    pub fn success(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }
}

/// Checks `φ([I|J]) = q^{-t} [I|J]` for every `t × t` minor.
pub fn phi_scaling_check(m: usize, n: usize) -> Result<PhiScalingReport> {
    let spec = qmat::oqm(m, n)?;
    let mut entries = Vec::new();
    for t in 1..=m.min(n) {
        let expected_scale = RatFunc::qpow(-(t as i64));
        for rows in subsets(m, t) {
            for cols in subsets(n, t) {
                let idx = MinorIndex::new(rows.clone(), cols)?;
                let minor = qmat::quantum_minor(&spec, &idx)?;
                entries.push(PhiScalingEntry {
                    minor: idx.to_string(),
                    size: t,
                    passed: phi(&spec, &minor) == minor.scale(&expected_scale),
                });
            }
        }
    }
    Ok(PhiScalingReport { m, n, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 3), vec![vec![1, 2, 3]]);
        assert_eq!(binomial(6, 3), 20);
    }

    #[test]
    fn maximal_minor_shapes() {
        assert_eq!(maximal_minors(2, 4).unwrap().len(), 6);
        let row = maximal_minors(1, 3).unwrap();
        for j in 1..=3 {
            assert_eq!(row.get(&[j]).unwrap(), &NcPoly::generator(j - 1));
        }
        let sq = maximal_minors(2, 2).unwrap();
        let spec = qmat::oqm(2, 2).unwrap();
        assert_eq!(sq.get(&[1, 2]).unwrap(), &qmat::quantum_det(&spec).unwrap());
        assert!(maximal_minors(3, 2).is_err());
    }

    #[test]
    fn extremal_minors_small() {
        let r = extremal_normality_report(1, 2).unwrap();
        assert!(r.success());
        assert_eq!(r.check_count(), 4);
        let sq = extremal_normality_report(2, 2).unwrap();
        assert_eq!(sq.first[0].exponent, Some(0));
    }

    #[test]
    fn phi_on_generators_and_det() {
        let spec = qmat::oqm(2, 2).unwrap();
        let x11 = NcPoly::generator(0);
        assert_eq!(phi(&spec, &x11), x11.scale(&RatFunc::qpow(-1)));
        assert_eq!(phi(&spec, &NcPoly::one()), NcPoly::one());
        let det = qmat::quantum_det(&spec).unwrap();
        assert_eq!(phi(&spec, &det), det.scale(&RatFunc::qpow(-2)));
        assert_eq!(phi_inv(&spec, &phi(&spec, &det)), det);
        assert!(phi_scaling_check(2, 2).unwrap().success());
    }
}
