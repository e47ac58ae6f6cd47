//! Orthogonal projectors, the built-in qubit family and the state-level
//! operations on them (membership, Born-rule expectation).

use num_complex::Complex64;

use crate::error::{QlatError, Result};
use crate::linalg::{inner, vec_norm, Matrix, StateVector, ONE, ZERO};

/// A Hermitian idempotent matrix with an optional display name.
#[derive(Debug, Clone, PartialEq)]
pub struct Projector {
    matrix: Matrix,
    name: Option<String>,
}

impl Projector {
    /// Validates Hermiticity and idempotence within `eps` (Frobenius norm).
    pub fn new(matrix: Matrix, eps: f64) -> Result<Self> {
        let deviation = matrix.hermitian_deviation();
        if deviation > eps {
            return Err(QlatError::NotHermitian { deviation });
        }
        let deviation = (&matrix * &matrix).distance(&matrix);
        if deviation > eps {
            return Err(QlatError::NotIdempotent { deviation });
        }
        Ok(Self { matrix, name: None })
    }

    pub(crate) fn new_unchecked(matrix: Matrix) -> Self {
        Self { matrix, name: None }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new_unchecked(Matrix::zeros(dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self::new_unchecked(Matrix::identity(dim))
    }

    /// Rank-one projector onto the line spanned by `state`.
    pub fn onto_state(state: &StateVector) -> Self {
        let unit = state.normalized();
        Self::new_unchecked(Matrix::outer(unit.amplitudes()))
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }
}

/// Name of the built-in qubit projector `P[a,b]`.
pub fn qubit_name(a: usize, b: usize) -> String {
    format!("P[{a},{b}]")
}

fn check_qubit_indices(a: usize, b: usize) -> Result<()> {
    if !(1..=2).contains(&a) {
        return Err(QlatError::IndexOutOfRange {
            what: "row selector a",
            value: a,
            allowed: "1..=2",
        });
    }
    if !(1..=3).contains(&b) {
        return Err(QlatError::IndexOutOfRange {
            what: "axis b",
            value: b,
            allowed: "1..=3",
        });
    }
    Ok(())
}

/// The qubit projector family indexed by `a ∈ {1,2}`, `b ∈ {1,2,3}`:
///
/// ```text
/// P[a,b] = ½ [ 1 − (−1)^a δ_b3            (−1)^a (−δ_b1 + i δ_b2) ]
///            [ (−1)^a (−δ_b1 − i δ_b2)    1 + (−1)^a δ_b3         ]
/// ```
///
/// `b` picks the axis (1 = x, 2 = y, 3 = z) and `a` the eigenvalue branch.
/// All entries are dyadic, so the matrices are exact in binary floating point.
pub fn build_qubit_projector(a: usize, b: usize) -> Result<Projector> {
    check_qubit_indices(a, b)?;
    let sign = if a % 2 == 0 { 1.0 } else { -1.0 };
    let delta = |k: usize| if b == k { 1.0 } else { 0.0 };
    let half = 0.5;
    let m00 = Complex64::new(half * (1.0 - sign * delta(3)), 0.0);
    let m01 = Complex64::new(-delta(1), delta(2)) * (sign * half);
    let m10 = Complex64::new(-delta(1), -delta(2)) * (sign * half);
    let m11 = Complex64::new(half * (1.0 + sign * delta(3)), 0.0);
    let matrix = Matrix::from_rows(vec![vec![m00, m01], vec![m10, m11]])?;
    Ok(Projector::new_unchecked(matrix).named(qubit_name(a, b)))
}

/// The six qubit projectors in `(a, b)` order `(1,1), (2,1), (1,2), …, (2,3)`.
pub fn qubit_projectors() -> Vec<Projector> {
    (1..=3)
        .flat_map(|b| (1..=2).map(move |a| (a, b)))
        .map(|(a, b)| build_qubit_projector(a, b).expect("indices in range"))
        .collect()
}

/// Index of the complementary branch: 1 ↔ 2.
pub fn partner(a: usize) -> usize {
    if a % 2 == 1 {
        a + 1
    } else {
        a - 1
    }
}

/// `1̂ − P`.
pub fn negate_projector(p: &Projector) -> Projector {
    let m = &Matrix::identity(p.dim()) - p.matrix();
    let out = Projector::new_unchecked(m);
    match p.name() {
        Some(n) => out.named(negated_name(n)),
        None => out,
    }
}

fn negated_name(name: &str) -> String {
    // P[a,b] negates to its partner by construction
    if let Some((a, b)) = parse_qubit_name(name) {
        return qubit_name(partner(a), b);
    }
    match name.strip_prefix('!') {
        Some(inner) => inner.to_string(),
        None => format!("!{name}"),
    }
}

pub(crate) fn parse_qubit_name(name: &str) -> Option<(usize, usize)> {
    let body = name.strip_prefix("P[")?.strip_suffix(']')?;
    let (a, b) = body.split_once(',')?;
    let (a, b) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
    check_qubit_indices(a, b).ok()?;
    Some((a, b))
}

/// `‖P[1,b] + P[2,b] − 1̂‖_F ≤ eps`.
pub fn resolution_check(b: usize, eps: f64) -> Result<bool> {
    let p1 = build_qubit_projector(1, b)?;
    let p2 = build_qubit_projector(2, b)?;
    let sum = p1.matrix() + p2.matrix();
    Ok(sum.distance(&Matrix::identity(2)) <= eps)
}

/// Unit eigenvector of `P[a,b]` at eigenvalue 1, with a real non-negative
/// first non-zero component.
pub fn eigenstate(a: usize, b: usize) -> Result<StateVector> {
    check_qubit_indices(a, b)?;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let amps = match (a, b) {
        (1, 3) => vec![ONE, ZERO],
        (2, 3) => vec![ZERO, ONE],
        (1, 1) => vec![Complex64::new(r, 0.0), Complex64::new(r, 0.0)],
        (2, 1) => vec![Complex64::new(r, 0.0), Complex64::new(-r, 0.0)],
        (1, 2) => vec![Complex64::new(r, 0.0), Complex64::new(0.0, r)],
        (2, 2) => vec![Complex64::new(r, 0.0), Complex64::new(0.0, -r)],
        _ => unreachable!("indices checked"),
    };
    Ok(StateVector::new(amps, 0.0)?.with_label(format!("psi[{a},{b}]")))
}

/// `v ∈ ran(P)`, i.e. `‖P v − v‖ ≤ eps ‖v‖`.
pub fn membership(v: &StateVector, p: &Projector, eps: f64) -> Result<bool> {
    p.matrix().check_dim(v.dim())?;
    let norm = v.norm();
    if norm <= eps {
        return Err(QlatError::ZeroVector);
    }
    let pv = p.matrix().apply(v.amplitudes());
    let diff: Vec<_> = pv.iter().zip(v.amplitudes()).map(|(a, b)| a - b).collect();
    Ok(vec_norm(&diff) <= eps * norm)
}

/// Born-rule value `⟨ψ|P|ψ⟩` for the normalised state, clamped to `[0, 1]`.
pub fn expectation(v: &StateVector, p: &Projector) -> Result<f64> {
    p.matrix().check_dim(v.dim())?;
    if v.norm() == 0.0 {
        return Err(QlatError::ZeroVector);
    }
    let unit = v.normalized();
    let pv = p.matrix().apply(unit.amplitudes());
    Ok(inner(unit.amplitudes(), &pv).re.clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-9;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn exact(p: &Projector, rows: [[Complex64; 2]; 2]) {
        let expected = Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
        assert_eq!(p.matrix(), &expected, "{:?}", p.name());
    }

    #[test]
    fn hand_substituted_family_members() {
        exact(
            &build_qubit_projector(1, 3).unwrap(),
            [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]],
        );
        exact(
            &build_qubit_projector(1, 1).unwrap(),
            [[c(0.5, 0.0), c(0.5, 0.0)], [c(0.5, 0.0), c(0.5, 0.0)]],
        );
        exact(
            &build_qubit_projector(1, 2).unwrap(),
            [[c(0.5, 0.0), c(0.0, -0.5)], [c(0.0, 0.5), c(0.5, 0.0)]],
        );
    }

    #[test]
    fn index_out_of_range() {
        assert!(matches!(
            build_qubit_projector(0, 1),
            Err(QlatError::IndexOutOfRange { value: 0, .. })
        ));
        assert!(build_qubit_projector(3, 1).is_err());
        assert!(build_qubit_projector(1, 4).is_err());
        assert!(eigenstate(1, 0).is_err());
    }

    #[test]
    fn negation_examples() {
        let n13 = negate_projector(&build_qubit_projector(1, 3).unwrap());
        exact(&n13, [[c(0.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
        assert_eq!(n13.name(), Some("P[2,3]"));
        let n11 = negate_projector(&build_qubit_projector(1, 1).unwrap());
        exact(&n11, [[c(0.5, 0.0), c(-0.5, 0.0)], [c(-0.5, 0.0), c(0.5, 0.0)]]);
        let n = negate_projector(&Projector::identity(4));
        assert_eq!(n.matrix(), Projector::zero(4).matrix());
    }

    #[test]
    fn family_is_hermitian_idempotent_trace_one() {
        for p in qubit_projectors() {
            let m = p.matrix();
            assert!(m.hermitian_deviation() <= 1e-12);
            assert!((m * m).distance(m) <= 1e-12);
            assert!((p.trace() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn resolution_and_partner_identity_are_exact() {
        for b in 1..=3 {
            assert!(resolution_check(b, EPS).unwrap());
            let sum = build_qubit_projector(1, b).unwrap().matrix()
                + build_qubit_projector(2, b).unwrap().matrix();
            assert_eq!(sum, Matrix::identity(2));
            for a in 1..=2 {
                let neg = negate_projector(&build_qubit_projector(a, b).unwrap());
                assert_eq!(neg.matrix(), build_qubit_projector(partner(a), b).unwrap().matrix());
            }
        }
    }

    #[test]
    fn eigenstates_are_fixed_points() {
        for b in 1..=3 {
            for a in 1..=2 {
                let p = build_qubit_projector(a, b).unwrap();
                let v = eigenstate(a, b).unwrap();
                assert!((v.norm() - 1.0).abs() < 1e-15);
                assert!(membership(&v, &p, EPS).unwrap());
                assert!(!membership(&v, &negate_projector(&p), EPS).unwrap());
            }
        }
        let v = eigenstate(1, 2).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(v.amplitudes(), &[c(r, 0.0), c(0.0, r)]);
    }

    #[test]
    fn membership_examples_and_errors() {
        let e1 = StateVector::new(vec![ONE, ZERO], EPS).unwrap();
        assert!(membership(&e1, &build_qubit_projector(1, 3).unwrap(), EPS).unwrap());
        assert!(!membership(&e1, &build_qubit_projector(2, 3).unwrap(), EPS).unwrap());
        assert!(membership(&e1, &Projector::identity(2), EPS).unwrap());
        let v3 = StateVector::new(vec![ONE, ONE, ONE], EPS).unwrap();
        assert!(matches!(
            membership(&v3, &Projector::identity(2), EPS),
            Err(QlatError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn expectation_examples() {
        let p13 = build_qubit_projector(1, 3).unwrap();
        let p12 = build_qubit_projector(1, 2).unwrap();
        let psi13 = eigenstate(1, 3).unwrap();
        let psi11 = eigenstate(1, 1).unwrap();
        assert_eq!(expectation(&psi13, &p13).unwrap(), 1.0);
        assert!((expectation(&psi11, &p13).unwrap() - 0.5).abs() < 1e-15);
        assert!((expectation(&psi11, &p12).unwrap() - 0.5).abs() < 1e-15);
        // unnormalised input is normalised internally
        let v = StateVector::new(vec![c(3.0, 0.0), ZERO], EPS).unwrap();
        assert_eq!(expectation(&v, &p13).unwrap(), 1.0);
    }

    #[test]
    fn projector_validation() {
        let m = Matrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(matches!(Projector::new(m, EPS), Err(QlatError::NotHermitian { .. })));
        let m = Matrix::from_real_rows(&[&[2.0, 0.0], &[0.0, 0.0]]).unwrap();
        assert!(matches!(Projector::new(m, EPS), Err(QlatError::NotIdempotent { .. })));
    }

    #[test]
    fn qubit_name_round_trip() {
        assert_eq!(parse_qubit_name("P[2, 3]"), Some((2, 3)));
        assert_eq!(parse_qubit_name("P[3,3]"), None);
        assert_eq!(negated_name("dead"), "!dead");
        assert_eq!(negated_name("!dead"), "dead");
    }
}
