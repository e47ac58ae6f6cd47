use serde::{Deserialize, Serialize};

use crate::error::{QlatError, Result};

/// Numeric thresholds shared by every comparison in the crate.
///
/// `eps_equal` decides matrix/vector equality (Frobenius or Euclidean norm of
/// the difference). `eps_eig` is the eigenvalue slack used when extracting the
/// eigenvalue-2 eigenspace of `P_a + P_b` for meets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    pub eps_equal: f64,
    pub eps_eig: f64,
}

impl ToleranceConfig {
    pub const DEFAULT_EPS_EQUAL: f64 = 1e-9;
    pub const DEFAULT_EPS_EIG: f64 = 1e-8;

    pub fn new(eps_equal: f64, eps_eig: f64) -> Result<Self> {
        check_unit_interval("eps_equal", eps_equal)?;
        check_unit_interval("eps_eig", eps_eig)?;
        Ok(Self { eps_equal, eps_eig })
    }

    pub fn with_eps_equal(self, eps_equal: f64) -> Result<Self> {
        Self::new(eps_equal, self.eps_eig)
    }

    pub fn with_eps_eig(self, eps_eig: f64) -> Result<Self> {
        Self::new(self.eps_equal, eps_eig)
    }
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            eps_equal: Self::DEFAULT_EPS_EQUAL,
            eps_eig: Self::DEFAULT_EPS_EIG,
        }
    }
}

fn check_unit_interval(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 && value < 1.0 {
        Ok(())
    } else {
        Err(QlatError::InvalidTolerance { name, value })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let t = ToleranceConfig::default();
        assert_eq!(t.eps_equal, 1e-9);
        assert_eq!(t.eps_eig, 1e-8);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(ToleranceConfig::new(0.0, 1e-8).is_err());
        assert!(ToleranceConfig::new(1e-9, 1.0).is_err());
        assert!(ToleranceConfig::new(f64::NAN, 1e-8).is_err());
        assert!(ToleranceConfig::default().with_eps_equal(1e-6).is_ok());
    }
}
