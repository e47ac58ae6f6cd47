//! Explicit finite ortholattices of subspaces and the law checkers that run
//! on them.
//!
//! Elements are referenced by their index into [`FiniteOrthoLattice::elements`].
//! The element list is sorted by [`Subspace::canonical_key`], so indices,
//! reports and witnesses are reproducible.

use serde::Serialize;

use crate::error::{QlatError, Result};
use crate::subspace::Subspace;
use crate::tolerance::ToleranceConfig;

/// Upper bound on the size of a generated closure. Generic subspaces in
/// dimension ≥ 3 can generate infinite lattices.
pub const MAX_ELEMENTS: usize = 512;

#[derive(Debug, Clone)]
pub struct FiniteOrthoLattice {
    dim: usize,
    tol: ToleranceConfig,
    elements: Vec<Subspace>,
    leq: Vec<Vec<bool>>,
    complement: Vec<usize>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Law {
    Orthomodular,
    Distributive,
}

impl Law {
    pub fn as_str(self) -> &'static str {
        match self {
            Law::Orthomodular => "orthomodular",
            Law::Distributive => "distributive",
        }
    }
}

/// Outcome of a law check. `witness` holds element indices of the first
/// violation in lexicographic tuple order: `(a, b)` for orthomodularity,
/// `(a, b, c)` for distributivity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawVerdict {
    pub law: Law,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl FiniteOrthoLattice {
    /// `{0, full} ∪ atoms ∪ atoms^⊥`, closed under meet, join and complement.
    pub fn build(dim: usize, atoms: &[Subspace], tol: &ToleranceConfig) -> Result<Self> {
        let mut seeds = Vec::with_capacity(2 * atoms.len());
        for a in atoms {
            if a.dim() != dim {
                return Err(QlatError::DimensionMismatch {
                    expected: dim,
                    found: a.dim(),
                });
            }
            seeds.push(a.clone());
        }
        for a in atoms {
            seeds.push(a.complement());
        }
        Self::close(dim, seeds, tol)
    }

    /// Smallest sub-ortholattice containing `seeds` together with `{0}` and
    /// the full space.
    pub fn close(dim: usize, seeds: Vec<Subspace>, tol: &ToleranceConfig) -> Result<Self> {
        let mut elements: Vec<Subspace> = vec![Subspace::zero(dim), Subspace::full(dim)];
        for s in seeds {
            if s.dim() != dim {
                return Err(QlatError::DimensionMismatch {
                    expected: dim,
                    found: s.dim(),
                });
            }
            insert_unique(&mut elements, s, tol)?;
        }

        // saturate; pairs below `done` were already combined
        let mut done = 0;
        while done < elements.len() {
            let n = elements.len();
            for i in 0..n {
                let lo = if i < done { done } else { 0 };
                for j in lo.max(i)..n {
                    let m = elements[i].meet(&elements[j], tol)?;
                    let jn = elements[i].join(&elements[j], tol)?;
                    insert_unique(&mut elements, m, tol)?;
                    insert_unique(&mut elements, jn, tol)?;
                }
            }
            for i in done..n {
                let c = elements[i].complement();
                insert_unique(&mut elements, c, tol)?;
            }
            done = n;
        }

        elements.sort_by(Subspace::canonical_cmp);
        Self::from_closed(dim, elements, tol)
    }

    fn from_closed(dim: usize, elements: Vec<Subspace>, tol: &ToleranceConfig) -> Result<Self> {
        let n = elements.len();
        let find = |s: &Subspace| -> Result<usize> {
            elements
                .iter()
                .position(|e| e.same(s, tol))
                .ok_or(QlatError::ElementNotInLattice)
        };
        let mut leq = vec![vec![false; n]; n];
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        let mut complement = vec![0; n];
        for i in 0..n {
            complement[i] = find(&elements[i].complement())?;
            for j in 0..n {
                leq[i][j] = elements[i].leq(&elements[j], tol)?;
                meet[i][j] = find(&elements[i].meet(&elements[j], tol)?)?;
                join[i][j] = find(&elements[i].join(&elements[j], tol)?)?;
            }
        }
        Ok(Self {
            dim,
            tol: *tol,
            elements,
            leq,
            complement,
            meet,
            join,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tolerance(&self) -> &ToleranceConfig {
        &self.tol
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Subspace {
        &self.elements[i]
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.elements.iter().position(|e| e.same(s, &self.tol))
    }

    /// Index of the element with the given display name.
    pub fn index_by_name(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e.name() == Some(name))
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn complement(&self, a: usize) -> usize {
        self.complement[a]
    }

    /// Every `(a, b)` with `a ≤ b`, in index order.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.leq[a][b])
            .collect()
    }

    /// `a ≤ b ⇒ b = a ∨ (a^⊥ ∧ b)`.
    pub fn check_orthomodular(&self) -> LawVerdict {
        let witness = self
            .order_pairs()
            .into_iter()
            .find(|&(a, b)| self.join(a, self.meet(self.complement(a), b)) != b)
            .map(|(a, b)| vec![a, b]);
        LawVerdict {
            law: Law::Orthomodular,
            holds: witness.is_none(),
            witness,
        }
    }

    /// `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` at one triple.
    pub fn distributive_at(&self, a: usize, b: usize, c: usize) -> bool {
        self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))
    }

    /// All violating triples, lexicographic.
    pub fn distributive_violations(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.len();
        (0..n)
            .flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
            .filter(|&(a, b, c)| !self.distributive_at(a, b, c))
    }

    pub fn check_distributive(&self) -> LawVerdict {
        let witness = self
            .distributive_violations()
            .next()
            .map(|(a, b, c)| vec![a, b, c]);
        LawVerdict {
            law: Law::Distributive,
            holds: witness.is_none(),
            witness,
        }
    }

    pub fn check(&self, law: Law) -> LawVerdict {
        match law {
            Law::Orthomodular => self.check_orthomodular(),
            Law::Distributive => self.check_distributive(),
        }
    }
}

fn insert_unique(elements: &mut Vec<Subspace>, s: Subspace, tol: &ToleranceConfig) -> Result<()> {
    if elements.iter().any(|e| e.same(&s, tol)) {
        return Ok(());
    }
    if elements.len() >= MAX_ELEMENTS {
        return Err(QlatError::LatticeTooLarge {
            limit: MAX_ELEMENTS,
        });
    }
    elements.push(s);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::projector::{build_qubit_projector, qubit_projectors, Projector};

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn qubit_atoms() -> Vec<Subspace> {
        qubit_projectors()
            .into_iter()
            .map(|p| Subspace::from_projector(p, &tol()).unwrap())
            .collect()
    }

    fn qubit_lattice() -> FiniteOrthoLattice {
        FiniteOrthoLattice::build(2, &qubit_atoms(), &tol()).unwrap()
    }

    fn named(l: &FiniteOrthoLattice, name: &str) -> usize {
        l.index_by_name(name).unwrap_or_else(|| panic!("{name} missing"))
    }

    #[test]
    fn qubit_lattice_has_eight_elements() {
        let l = qubit_lattice();
        assert_eq!(l.len(), 8);
        assert!(l.element(l.bottom()).is_zero());
        assert!(l.element(l.top()).is_full());
        for a in 1..=2 {
            for b in 1..=3 {
                named(&l, &format!("P[{a},{b}]"));
            }
        }
    }

    #[test]
    fn single_atom_gives_four_elements() {
        let p = Subspace::from_projector(build_qubit_projector(1, 3).unwrap(), &tol()).unwrap();
        let l = FiniteOrthoLattice::build(2, &[p], &tol()).unwrap();
        assert_eq!(l.len(), 4);
        named(&l, "P[1,3]");
        named(&l, "P[2,3]");
    }

    #[test]
    fn empty_atoms_give_two_elements() {
        let l = FiniteOrthoLattice::build(3, &[], &tol()).unwrap();
        assert_eq!(l.len(), 2);
        assert!(l.check_distributive().holds);
        assert!(l.check_orthomodular().holds);
        assert_eq!(l.complement(0), 1);
    }

    #[test]
    fn deterministic_ordering() {
        let l = qubit_lattice();
        let names: Vec<_> = l.elements().iter().map(Subspace::label).collect();
        assert_eq!(
            names,
            ["{0}", "P[2,3]", "P[2,1]", "P[1,2]", "P[2,2]", "P[1,1]", "P[1,3]", "C^2"]
        );
        let mut reversed = qubit_atoms();
        reversed.reverse();
        let l2 = FiniteOrthoLattice::build(2, &reversed, &tol()).unwrap();
        let names2: Vec<_> = l2.elements().iter().map(Subspace::label).collect();
        assert_eq!(names, names2);
    }

    #[test]
    fn order_relation_is_a_partial_order() {
        let l = qubit_lattice();
        let n = l.len();
        for a in 0..n {
            assert!(l.leq(a, a));
            for b in 0..n {
                if a != b {
                    assert!(!(l.leq(a, b) && l.leq(b, a)));
                }
                for c in 0..n {
                    if l.leq(a, b) && l.leq(b, c) {
                        assert!(l.leq(a, c));
                    }
                }
            }
            assert_eq!(l.complement(l.complement(a)), a);
        }
        assert_eq!(l.complement(l.bottom()), l.top());
    }

    #[test]
    fn qubit_lattice_is_orthomodular_not_distributive() {
        let l = qubit_lattice();
        assert!(l.check_orthomodular().holds);
        let d = l.check_distributive();
        assert!(!d.holds);
        assert_eq!(d.witness.as_ref().map(Vec::len), Some(3));

        // a = P[1,3], b = P[1,1], c = P[2,1]
        let (a, b, c) = (named(&l, "P[1,3]"), named(&l, "P[1,1]"), named(&l, "P[2,1]"));
        assert_eq!(l.meet(a, l.join(b, c)), a);
        assert_eq!(l.join(l.meet(a, b), l.meet(a, c)), l.bottom());
        assert!(l.distributive_violations().any(|t| t == (a, b, c)));
    }

    #[test]
    fn boolean_block_is_distributive() {
        let p = Subspace::from_projector(build_qubit_projector(1, 3).unwrap(), &tol()).unwrap();
        let l = FiniteOrthoLattice::build(2, &[p], &tol()).unwrap();
        assert!(l.check_distributive().holds);
        assert!(l.check_orthomodular().holds);
    }

    #[test]
    fn closure_adds_generated_elements() {
        // two planes in C^3 generate their intersection line and its complement
        let t = tol();
        let plane = |rows: &[&[f64]]| {
            Subspace::from_projector(Projector::new(Matrix::from_real_rows(rows).unwrap(), 1e-9).unwrap(), &t)
                .unwrap()
        };
        let xy = plane(&[&[1., 0., 0.], &[0., 1., 0.], &[0., 0., 0.]]);
        let xz = plane(&[&[1., 0., 0.], &[0., 0., 0.], &[0., 0., 1.]]);
        let l = FiniteOrthoLattice::build(3, &[xy, xz], &t).unwrap();
        // coordinate subspaces of C^3: 2^3
        assert_eq!(l.len(), 8);
        assert!(l.check_distributive().holds);
    }

    #[test]
    fn dimension_mismatch() {
        let p = Subspace::from_projector(build_qubit_projector(1, 3).unwrap(), &tol()).unwrap();
        assert!(matches!(
            FiniteOrthoLattice::build(3, &[p], &tol()),
            Err(QlatError::DimensionMismatch { .. })
        ));
    }
}
