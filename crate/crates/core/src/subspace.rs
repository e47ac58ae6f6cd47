//! Closed subspaces represented canonically by their orthogonal projectors,
//! with the Hilbert-lattice operations on them.

use std::cmp::Ordering;

use crate::error::{QlatError, Result};
use crate::linalg::{hermitian_eigendecomposition, Matrix};
use crate::projector::{negate_projector, Projector};
use crate::tolerance::ToleranceConfig;

/// `ran(P)` for an orthogonal projector `P`.
#[derive(Debug, Clone)]
pub struct Subspace {
    projector: Projector,
    rank: usize,
}

impl Subspace {
    /// The range of `projector`. Fails when the trace is not within `eps` of
    /// an integer.
    pub fn from_projector(projector: Projector, tol: &ToleranceConfig) -> Result<Self> {
        let trace = projector.trace();
        let rank = trace.round();
        if (trace - rank).abs() > tol.eps_equal || rank < 0.0 {
            return Err(QlatError::FractionalRank { trace });
        }
        Ok(Self {
            projector,
            rank: rank as usize,
        })
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            projector: Projector::zero(dim).named("{0}"),
            rank: 0,
        }
    }

    pub fn full(dim: usize) -> Self {
        Self {
            projector: Projector::identity(dim).named(format!("C^{dim}")),
            rank: dim,
        }
    }

    pub fn projector(&self) -> &Projector {
        &self.projector
    }

    pub fn matrix(&self) -> &Matrix {
        self.projector.matrix()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.projector.dim()
    }

    pub fn name(&self) -> Option<&str> {
        self.projector.name()
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.projector = self.projector.named(name);
        self
    }

    /// Name if present, otherwise a generic description.
    pub fn label(&self) -> String {
        match self.name() {
            Some(n) => n.to_string(),
            None if self.rank == 0 => "{0}".into(),
            None if self.rank == self.dim() => format!("C^{}", self.dim()),
            None => format!("<rank {} subspace>", self.rank),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0
    }

    pub fn is_full(&self) -> bool {
        self.rank == self.dim()
    }

    pub fn is_trivial(&self) -> bool {
        self.is_zero() || self.is_full()
    }

    /// Canonical equality: projectors within `eps` in Frobenius norm.
    pub fn same(&self, other: &Subspace, tol: &ToleranceConfig) -> bool {
        self.dim() == other.dim()
            && self.rank == other.rank
            && self.matrix().distance(other.matrix()) <= tol.eps_equal
    }

    fn check_dim(&self, other: &Subspace) -> Result<()> {
        self.matrix().check_dim(other.dim())
    }

    /// `self ⊆ other`, tested as `‖P_b P_a − P_a‖ ≤ eps`.
    pub fn leq(&self, other: &Subspace, tol: &ToleranceConfig) -> Result<bool> {
        self.check_dim(other)?;
        let prod = other.matrix() * self.matrix();
        Ok(prod.distance(self.matrix()) <= tol.eps_equal)
    }

    /// Range intersection: the eigenvalue-2 eigenspace of `P_a + P_b`.
    pub fn meet(&self, other: &Subspace, tol: &ToleranceConfig) -> Result<Subspace> {
        self.check_dim(other)?;
        let dim = self.dim();
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(dim));
        }
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        let sum = self.matrix() + other.matrix();
        let eig = hermitian_eigendecomposition(&sum, 2.0 * tol.eps_equal + 1e-12)?;
        let threshold = 2.0 - tol.eps_eig;
        let rank = eig.values.iter().filter(|&&l| l >= threshold).count();
        let subspace = match rank {
            0 => Subspace::zero(dim),
            r if r == dim => Subspace::full(dim),
            r => Subspace {
                projector: Projector::new_unchecked(eig.spectral_projector(|l| l >= threshold)),
                rank: r,
            },
        };
        Ok(subspace)
    }

    /// Closed span, computed as `(a^⊥ ∧ b^⊥)^⊥`.
    pub fn join(&self, other: &Subspace, tol: &ToleranceConfig) -> Result<Subspace> {
        self.check_dim(other)?;
        Ok(self
            .complement()
            .meet(&other.complement(), tol)?
            .complement())
    }

    /// Orthogonal complement, `ran(1̂ − P)`.
    pub fn complement(&self) -> Subspace {
        let dim = self.dim();
        if self.is_zero() {
            return Subspace::full(dim);
        }
        if self.is_full() {
            return Subspace::zero(dim);
        }
        Subspace {
            projector: negate_projector(&self.projector),
            rank: dim - self.rank,
        }
    }

    /// `‖P_a P_b − P_b P_a‖ ≤ eps`.
    pub fn commutes(&self, other: &Subspace, tol: &ToleranceConfig) -> Result<bool> {
        self.check_dim(other)?;
        let ab = self.matrix() * other.matrix();
        let ba = other.matrix() * self.matrix();
        Ok(ab.distance(&ba) <= tol.eps_equal)
    }

    /// `P_E P P_E = P P_E`: every vector of `self` stays in `self` under `p`.
    pub fn invariant_under(&self, p: &Projector, tol: &ToleranceConfig) -> Result<bool> {
        self.matrix().check_dim(p.dim())?;
        let pe = self.matrix();
        let lhs = &(pe * p.matrix()) * pe;
        let rhs = p.matrix() * pe;
        Ok(lhs.distance(&rhs) <= tol.eps_equal)
    }

    /// Deterministic ordering key: rank, then projector entries rounded to a
    /// 1e-6 grid in row-major `(re, im)` order.
    pub fn canonical_key(&self) -> (usize, Vec<(i64, i64)>) {
        let round = |x: f64| (x * 1e6).round() as i64;
        (
            self.rank,
            self.matrix()
                .entries()
                .iter()
                .map(|z| (round(z.re), round(z.im)))
                .collect(),
        )
    }

    pub fn canonical_cmp(&self, other: &Subspace) -> Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projector::build_qubit_projector;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn atom(a: usize, b: usize) -> Subspace {
        Subspace::from_projector(build_qubit_projector(a, b).unwrap(), &tol()).unwrap()
    }

    #[test]
    fn leq_examples() {
        let t = tol();
        assert!(Subspace::zero(2).leq(&atom(1, 3), &t).unwrap());
        assert!(atom(1, 3).leq(&Subspace::full(2), &t).unwrap());
        assert!(!atom(1, 3).leq(&atom(1, 1), &t).unwrap());
    }

    #[test]
    fn meet_examples() {
        let t = tol();
        assert!(atom(1, 3).meet(&atom(1, 1), &t).unwrap().is_zero());
        assert!(atom(1, 3).meet(&atom(1, 3), &t).unwrap().same(&atom(1, 3), &t));
        assert!(atom(1, 3).meet(&Subspace::full(2), &t).unwrap().same(&atom(1, 3), &t));
    }

    #[test]
    fn join_examples() {
        let t = tol();
        assert!(atom(1, 3).join(&atom(1, 1), &t).unwrap().is_full());
        assert!(atom(1, 2).join(&Subspace::zero(2), &t).unwrap().same(&atom(1, 2), &t));
        assert!(atom(1, 3).join(&atom(2, 3), &t).unwrap().is_full());
    }

    #[test]
    fn complement_examples() {
        let t = tol();
        assert!(atom(1, 2).complement().same(&atom(2, 2), &t));
        assert!(Subspace::zero(2).complement().is_full());
        assert!(Subspace::full(2).complement().is_zero());
        assert_eq!(atom(1, 2).complement().name(), Some("P[2,2]"));
    }

    #[test]
    fn commutes_examples() {
        let t = tol();
        assert!(atom(1, 3).commutes(&atom(2, 3), &t).unwrap());
        assert!(!atom(1, 3).commutes(&atom(1, 1), &t).unwrap());
        assert!(atom(1, 2).commutes(&Subspace::full(2), &t).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let t = tol();
        let e = atom(1, 3).meet(&Subspace::full(3), &t).unwrap_err();
        assert_eq!(e, QlatError::DimensionMismatch { expected: 2, found: 3 });
        assert!(atom(1, 3).leq(&Subspace::zero(3), &t).is_err());
        assert!(atom(1, 3).commutes(&Subspace::zero(3), &t).is_err());
    }

    #[test]
    fn meet_in_three_dimensions() {
        let t = tol();
        // xy-plane ∧ xz-plane = x-axis
        let xy = Subspace::from_projector(
            Projector::new(Matrix::from_real_rows(&[&[1., 0., 0.], &[0., 1., 0.], &[0., 0., 0.]]).unwrap(), 1e-9)
                .unwrap(),
            &t,
        )
        .unwrap();
        let xz = Subspace::from_projector(
            Projector::new(Matrix::from_real_rows(&[&[1., 0., 0.], &[0., 0., 0.], &[0., 0., 1.]]).unwrap(), 1e-9)
                .unwrap(),
            &t,
        )
        .unwrap();
        let m = xy.meet(&xz, &t).unwrap();
        assert_eq!(m.rank(), 1);
        let x = Matrix::from_real_rows(&[&[1., 0., 0.], &[0., 0., 0.], &[0., 0., 0.]]).unwrap();
        assert!(m.matrix().distance(&x) < 1e-12);
        assert!(xy.join(&xz, &t).unwrap().is_full());
    }

    #[test]
    fn fractional_trace_rejected() {
        let half = Matrix::from_real_rows(&[&[0.5, 0.0], &[0.0, 0.0]]).unwrap();
        let p = Projector::new_unchecked(half);
        assert!(matches!(
            Subspace::from_projector(p, &tol()),
            Err(QlatError::FractionalRank { .. })
        ));
    }
}
