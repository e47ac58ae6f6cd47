//! JSON projector files:
//!
//! ```json
//! { "dim": 2, "atoms": [ { "name": "P[1,3]", "matrix": [[[1,0],[0,0]],[[0,0],[0,0]]] } ] }
//! ```
//!
//! Complex entries are always `[re, im]` pairs. States use
//! `{ "amplitudes": [[re, im], ...], "label": "optional" }`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{QlatError, Result};
use crate::linalg::{Matrix, StateVector};
use crate::projector::Projector;
use crate::tolerance::ToleranceConfig;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectorFile {
    pub dim: usize,
    pub atoms: Vec<AtomEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AtomEntry {
    pub name: String,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub amplitudes: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

pub fn complex_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

impl ProjectorFile {
    pub fn from_projectors(dim: usize, projectors: &[Projector]) -> Self {
        let atoms = projectors
            .iter()
            .enumerate()
            .map(|(i, p)| AtomEntry {
                name: p.name().map_or_else(|| format!("#{i}"), str::to_string),
                matrix: p
                    .matrix()
                    .rows()
                    .into_iter()
                    .map(|r| r.into_iter().map(complex_pair).collect())
                    .collect(),
            })
            .collect();
        Self { dim, atoms }
    }

    /// Validated, named projectors.
    pub fn projectors(&self, tol: &ToleranceConfig) -> Result<Vec<Projector>> {
        if self.dim == 0 {
            return Err(QlatError::BadShape);
        }
        self.atoms
            .iter()
            .map(|a| {
                let rows = a
                    .matrix
                    .iter()
                    .map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
                    .collect();
                let m = Matrix::from_rows(rows)?;
                m.check_dim(self.dim)?;
                Ok(Projector::new(m, tol.eps_equal)?.named(a.name.clone()))
            })
            .collect()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| QlatError::Input(format!("projector file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("projector file serialises")
    }
}

impl StateFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| QlatError::Input(format!("state: {e}")))
    }

    pub fn state(&self, tol: &ToleranceConfig) -> Result<StateVector> {
        let amps = self
            .amplitudes
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        let v = StateVector::new(amps, tol.eps_equal)?;
        Ok(match &self.label {
            Some(l) => v.with_label(l.clone()),
            None => v,
        })
    }
}
