//! Dense complex linear algebra at desk scale.
//!
//! Everything here is row-major and allocation-light; the largest matrices the
//! rest of the crate builds are 8×8.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{QlatError, Result};

pub type Scalar = Complex64;

pub const ZERO: Scalar = Complex64::new(0.0, 0.0);
pub const ONE: Scalar = Complex64::new(1.0, 0.0);

/// Square complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(QlatError::BadShape);
        }
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(QlatError::NonFinite("matrix"));
        }
        Ok(Self { dim, data })
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    /// `|v⟩⟨v|` without normalisation.
    pub fn outer(v: &[Scalar]) -> Self {
        let dim = v.len();
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = v[i] * v[j].conj();
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.dim).map(<[Scalar]>::to_vec).collect()
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] = self[(j, i)].conj();
            }
        }
        m
    }

    pub fn scale(&self, s: Scalar) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
    }

    /// Frobenius norm of `self - other`.
    pub fn distance(&self, other: &Matrix) -> f64 {
        debug_assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn hermitian_deviation(&self) -> f64 {
        self.distance(&self.adjoint())
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        debug_assert_eq!(v.len(), self.dim);
        self.data
            .chunks(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn check_dim(&self, other: usize) -> Result<()> {
        if self.dim == other {
            Ok(())
        } else {
            Err(QlatError::DimensionMismatch {
                expected: self.dim,
                found: other,
            })
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.dim + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix({}x{})[", self.dim, self.dim)?;
        for row in self.data.chunks(self.dim) {
            write!(f, " ")?;
            for z in row {
                write!(f, " {:+.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

pub fn inner(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn vec_norm(v: &[Scalar]) -> f64 {
    v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
}

/// A pure state. Never the zero vector.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Scalar>,
    label: Option<String>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Scalar>, eps: f64) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(QlatError::BadShape);
        }
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(QlatError::NonFinite("state vector"));
        }
        if vec_norm(&amplitudes) <= eps {
            return Err(QlatError::ZeroVector);
        }
        Ok(Self {
            amplitudes,
            label: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Scalar] {
        &self.amplitudes
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn norm(&self) -> f64 {
        vec_norm(&self.amplitudes)
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Self {
            amplitudes: self.amplitudes.iter().map(|z| z / n).collect(),
            label: self.label.clone(),
        }
    }
}

/// Spectral decomposition of a Hermitian matrix: ascending eigenvalues with
/// the matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<Scalar>>,
}

impl Eigen {
    /// Columns of `V` as a matrix (`V[(i, k)]` = component `i` of vector `k`).
    pub fn vector_matrix(&self) -> Matrix {
        let n = self.values.len();
        let mut v = Matrix::zeros(n);
        for (k, vec) in self.vectors.iter().enumerate() {
            for i in 0..n {
                v[(i, k)] = vec[i];
            }
        }
        v
    }

    /// Orthogonal projector onto the span of eigenvectors whose eigenvalue
    /// satisfies `keep`.
    pub fn spectral_projector(&self, keep: impl Fn(f64) -> bool) -> Matrix {
        let n = self.values.len();
        let mut p = Matrix::zeros(n);
        for (lambda, v) in self.values.iter().zip(&self.vectors) {
            if keep(*lambda) {
                p = &p + &Matrix::outer(v);
            }
        }
        p
    }
}

/// Eigendecomposition of a Hermitian matrix. Closed form for 2×2, cyclic
/// Jacobi rotations otherwise.
pub fn hermitian_eigendecomposition(m: &Matrix, eps: f64) -> Result<Eigen> {
    let deviation = m.hermitian_deviation();
    if deviation > eps {
        return Err(QlatError::NotHermitian { deviation });
    }
    let mut eig = match m.dim() {
        1 => Eigen {
            values: vec![m[(0, 0)].re],
            vectors: vec![vec![ONE]],
        },
        2 => eigen_2x2(m),
        _ => eigen_jacobi(m),
    };
    sort_ascending(&mut eig);
    Ok(eig)
}

fn eigen_2x2(m: &Matrix) -> Eigen {
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    // average the two off-diagonal entries to absorb Hermitian round-off
    let b = (m[(0, 1)] + m[(1, 0)].conj()) * 0.5;
    let mean = 0.5 * (a + d);
    let half_gap = 0.5 * (a - d);
    let radius = half_gap.hypot(b.norm());
    let lo = mean - radius;
    let hi = mean + radius;

    if b.norm() <= f64::EPSILON * (a.abs() + d.abs()).max(1.0) {
        let (e0, e1) = (vec![ONE, ZERO], vec![ZERO, ONE]);
        return Eigen {
            values: vec![a, d],
            vectors: vec![e0, e1],
        };
    }

    let vector_for = |lambda: f64| {
        // Two candidate null vectors of (m - λ); keep the better-conditioned one.
        let from_row0 = [b, Complex64::new(lambda - a, 0.0)];
        let from_row1 = [Complex64::new(lambda - d, 0.0), b.conj()];
        let pick = if vec_norm(&from_row0) >= vec_norm(&from_row1) {
            from_row0
        } else {
            from_row1
        };
        let n = vec_norm(&pick);
        vec![pick[0] / n, pick[1] / n]
    };

    Eigen {
        values: vec![lo, hi],
        vectors: vec![vector_for(lo), vector_for(hi)],
    }
}

const JACOBI_MAX_SWEEPS: usize = 64;

fn eigen_jacobi(m: &Matrix) -> Eigen {
    let n = m.dim();
    let mut a = m.clone();
    // enforce exact Hermitian symmetry before rotating
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let avg = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = avg;
            a[(j, i)] = avg.conj();
        }
    }
    let mut v = Matrix::identity(n);
    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);

    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let values = (0..n).map(|i| a[(i, i)].re).collect();
    let vectors = (0..n).map(|k| (0..n).map(|i| v[(i, k)]).collect()).collect();
    Eigen { values, vectors }
}

/// One complex Jacobi rotation annihilating `a[(p, q)]`. The rotation is the
/// phase fix `diag(1, e^{-iφ})` followed by a real Givens rotation, applied as
/// `A ← J† A J`, `V ← V J`.
fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let n = a.dim();
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r; // e^{iφ}
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta == 0.0 {
        1.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // J restricted to (p, q): [[c, s], [-s e^{-iφ}, c e^{-iφ}]]
    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(s, 0.0);
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
}

fn sort_ascending(eig: &mut Eigen) {
    let mut order: Vec<usize> = (0..eig.values.len()).collect();
    order.sort_by(|&i, &j| eig.values[i].total_cmp(&eig.values[j]));
    eig.values = order.iter().map(|&i| eig.values[i]).collect();
    eig.vectors = order.iter().map(|&i| eig.vectors[i].clone()).collect();
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Scalar {
        Complex64::new(re, im)
    }

    fn reconstruction_error(m: &Matrix, eig: &Eigen) -> (f64, f64) {
        let n = m.dim();
        let v = eig.vector_matrix();
        let mut d = Matrix::zeros(n);
        for (i, &l) in eig.values.iter().enumerate() {
            d[(i, i)] = c(l, 0.0);
        }
        let rebuilt = &(&v * &d) * &v.adjoint();
        let unitary = (&v.adjoint() * &v).distance(&Matrix::identity(n));
        (rebuilt.distance(m), unitary)
    }

    #[test]
    fn diagonal_input() {
        let m = Matrix::from_real_rows(&[&[1.0, 0.0], &[0.0, 0.0]]).unwrap();
        let eig = hermitian_eigendecomposition(&m, 1e-9).unwrap();
        assert_eq!(eig.values, vec![0.0, 1.0]);
    }

    #[test]
    fn rank_one_uniform() {
        let m = Matrix::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]]).unwrap();
        let eig = hermitian_eigendecomposition(&m, 1e-9).unwrap();
        assert!((eig.values[0] - 0.0).abs() < 1e-15);
        assert!((eig.values[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sum_of_two_projectors_solves_quadratic() {
        // trace 2, det 1/2  =>  λ = 1 ± sqrt(1/2)
        let m = Matrix::from_real_rows(&[&[1.5, 0.5], &[0.5, 0.5]]).unwrap();
        let eig = hermitian_eigendecomposition(&m, 1e-9).unwrap();
        let (tr, det) = (2.0_f64, 0.5_f64);
        let disc = (tr * tr / 4.0 - det).sqrt();
        assert!((eig.values[0] - (tr / 2.0 - disc)).abs() < 1e-14);
        assert!((eig.values[1] - (tr / 2.0 + disc)).abs() < 1e-14);
        let (rec, uni) = reconstruction_error(&m, &eig);
        assert!(rec < 2e-10 && uni < 2e-10);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = Matrix::from_rows(vec![vec![ONE, ONE], vec![ZERO, ONE]]).unwrap();
        assert!(matches!(
            hermitian_eigendecomposition(&m, 1e-9),
            Err(QlatError::NotHermitian { .. })
        ));
    }

    #[test]
    fn jacobi_handles_degenerate_spectrum() {
        let m = Matrix::identity(5);
        let eig = hermitian_eigendecomposition(&m, 1e-9).unwrap();
        assert!(eig.values.iter().all(|&l| (l - 1.0).abs() < 1e-15));
    }

    #[test]
    fn rejects_empty_and_ragged() {
        assert_eq!(Matrix::from_rows(vec![]), Err(QlatError::BadShape));
        assert_eq!(
            Matrix::from_rows(vec![vec![ONE, ZERO], vec![ONE]]),
            Err(QlatError::BadShape)
        );
        assert_eq!(
            Matrix::from_rows(vec![vec![c(f64::NAN, 0.0)]]),
            Err(QlatError::NonFinite("matrix"))
        );
        assert_eq!(
            StateVector::new(vec![ZERO, ZERO], 1e-9),
            Err(QlatError::ZeroVector)
        );
    }

    fn hermitian_strategy() -> impl Strategy<Value = Matrix> {
        (1usize..=8).prop_flat_map(|n| {
            proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), n * n).prop_map(move |raw| {
                let mut m = Matrix::zeros(n);
                for i in 0..n {
                    for j in 0..n {
                        let (re, im) = raw[i * n + j];
                        m[(i, j)] = c(re, im);
                    }
                }
                // (M + M†) / 2
                (&m + &m.adjoint()).scale(c(0.5, 0.0))
            })
        })
    }

    proptest! {
        #[test]
        fn decomposition_reconstructs(m in hermitian_strategy()) {
            let eig = hermitian_eigendecomposition(&m, 1e-9).unwrap();
            let n = m.dim() as f64;
            let (rec, uni) = reconstruction_error(&m, &eig);
            prop_assert!(rec <= 1e-10 * n, "reconstruction {rec}");
            prop_assert!(uni <= 1e-10 * n, "unitarity {uni}");
            prop_assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
