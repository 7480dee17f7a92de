//! JSON instance documents.
//!
//! ```json
//! {"example": 1, "n": 5, "m": 10, "l": 20, "seed": 7, "scale": 1.0,
//!  "matrices": {"q": [[[...]]], "a": [[...]], "b": [...]}}
//! ```
//!
//! `matrices` is optional: without it the data is regenerated from the seed.
//! `q` holds the `m` factors `Q_i` (each `n × n`, rows first), `a` the `l × n`
//! constraint matrix and `b` the `l` bounds.

use std::fs;
use std::path::Path;

use fbsplit::problems::{ExampleInstance, ExampleKind};
use fbsplit::{Matrix, RandomSpec};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub example: u8,
    pub n: usize,
    pub m: usize,
    pub l: usize,
    pub seed: u64,
    #[serde(default = "unit_scale")]
    pub scale: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Matrices>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Matrices {
    pub q: Vec<Vec<Vec<f64>>>,
    pub a: Vec<Vec<f64>>,
    pub b: Vec<f64>,
}

fn unit_scale() -> f64 {
    1.0
}

impl InstanceDoc {
    pub fn from_instance(inst: &ExampleInstance, with_matrices: bool) -> Self {
        InstanceDoc {
            example: inst.kind.number(),
            n: inst.spec.n,
            m: inst.spec.m,
            l: inst.spec.l,
            seed: inst.spec.seed,
            scale: inst.spec.scale,
            matrices: with_matrices.then(|| Matrices {
                q: inst.factors.iter().map(Matrix::to_rows).collect(),
                a: inst.constraints.to_rows(),
                b: inst.bounds.clone(),
            }),
        }
    }

    pub fn spec(&self) -> RandomSpec {
        RandomSpec {
            n: self.n,
            m: self.m,
            l: self.l,
            seed: self.seed,
            scale: self.scale,
        }
    }

    pub fn kind(&self) -> Result<ExampleKind> {
        ExampleKind::from_number(self.example)
            .ok_or_else(|| Error::Instance(format!("unknown example {}", self.example)))
    }

    /// Explicit matrices win over the seed when both are present.
    pub fn to_instance(&self) -> Result<ExampleInstance> {
        let kind = self.kind()?;
        match &self.matrices {
            None => Ok(ExampleInstance::generate(kind, self.spec())?),
            Some(mats) => {
                let factors = mats
                    .q
                    .iter()
                    .map(|q| Matrix::from_rows(q))
                    .collect::<fbsplit::Result<Vec<_>>>()?;
                let a = Matrix::from_rows(&mats.a)?;
                Ok(ExampleInstance::from_parts(kind, self.spec(), factors, a, mats.b.clone())?)
            }
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| Error::Json {
            path: path.to_owned(),
            source,
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).map_err(|source| Error::Json {
            path: path.to_owned(),
            source,
        })?;
        fs::write(path, text + "\n").map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })
    }
}
