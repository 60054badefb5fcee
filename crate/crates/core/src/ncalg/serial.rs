//! JSON form of a spec. Scalars and correction terms are stored as rendered
//! text; printing then parsing gives back an identical spec.

use serde::{Deserialize, Serialize};

use super::{NcPoly, OreAlgebraSpec, SpecBuilder};
use crate::coef::RatFunc;
use crate::error::{Error, Result};
use crate::expr;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecFile {
    #[serde(default)]
    pub name: String,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix_shape: Option<[usize; 2]>,
    /// Straightening coefficients; missing pairs default to 1.
    #[serde(default)]
    pub lambda: Vec<Entry>,
    /// Nonzero correction terms.
    #[serde(default)]
    pub delta: Vec<Entry>,
    pub level_q: Vec<String>,
    pub torus_rank: usize,
    pub weights: Vec<Vec<i64>>,
    pub h: Vec<Vec<String>>,
}

/// A table entry for level `j` and generator `i < j`, both 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub j: usize,
    pub i: usize,
    pub value: String,
}

fn scalar(s: &str) -> Result<RatFunc> {
    s.parse()
}

impl SpecFile {
    pub fn from_spec(spec: &OreAlgebraSpec) -> Self {
        let mut lambda = Vec::new();
        let mut delta = Vec::new();
        for j in 0..spec.len() {
            for i in 0..j {
                lambda.push(Entry {
                    j: j + 1,
                    i: i + 1,
                    value: spec.lambda(j, i).to_string(),
                });
                let d = spec.delta(j, i);
                if !d.is_zero() {
                    delta.push(Entry {
                        j: j + 1,
                        i: i + 1,
                        value: spec.render(d),
                    });
                }
            }
        }
        Self {
            name: spec.name().to_string(),
            generators: spec.names().to_vec(),
            matrix_shape: spec.matrix_shape().map(|(m, n)| [m, n]),
            lambda,
            delta,
            level_q: (0..spec.len()).map(|j| spec.level_q(j).to_string()).collect(),
            torus_rank: spec.torus_rank(),
            weights: (0..spec.len()).map(|j| spec.weight(j).to_vec()).collect(),
            h: (0..spec.len())
                .map(|j| spec.h_elem(j).iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn to_spec(&self) -> Result<OreAlgebraSpec> {
        let n = self.generators.len();
        let mut b = SpecBuilder::new(self.generators.clone()).name(self.name.clone());
        let check = |e: &Entry| {
            if e.i == 0 || e.j > n || e.i >= e.j {
                Err(Error::InvalidSpec(format!(
                    "table entry ({}, {}) is not a pair i < j within 1..={n}",
                    e.j, e.i
                )))
            } else {
                Ok(())
            }
        };
        for e in &self.lambda {
            check(e)?;
            b = b.lambda(e.j - 1, e.i - 1, scalar(&e.value)?);
        }
        for e in &self.delta {
            check(e)?;
            let p: NcPoly = expr::parse(&e.value)?.eval_free(&self.generators)?;
            b = b.delta(e.j - 1, e.i - 1, p);
        }
        if self.level_q.len() != n || self.weights.len() != n || self.h.len() != n {
            return Err(Error::InvalidSpec(
                "level_q, weights and h need one entry per generator".into(),
            ));
        }
        for (j, s) in self.level_q.iter().enumerate() {
            b = b.level_q(j, scalar(s)?);
        }
        let h = self
            .h
            .iter()
            .map(|row| row.iter().map(|s| scalar(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        b = b.torus(self.torus_rank, self.weights.clone(), h);
        if let Some([m, nn]) = self.matrix_shape {
            b = b.matrix_shape(m, nn);
        }
        b.build()
    }
}

impl OreAlgebraSpec {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SpecFile::from_spec(self)).expect("spec serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SpecFile = serde_json::from_str(text)?;
        file.to_spec()
    }
}
