//! Pseudo-complements on finite lattices and the Heyting-feasibility test.
//!
//! The pseudo-complement of `a` is the greatest element of the disjoint set
//! `{b : b ∧ a = 0}`. We compute the supremum of that set by folding joins in
//! element order and then ask whether the supremum is itself disjoint from
//! `a`. In a non-distributive lattice the join always exists but may fall
//! outside the set, which is exactly how the qubit lattice fails.

use serde::Serialize;

use crate::error::{QlatError, Result};
use crate::lattice::{FiniteOrthoLattice, LawVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PseudoComplementReport {
    pub element: usize,
    pub disjoint_set: Vec<usize>,
    pub supremum: usize,
    pub exists: bool,
    pub pseudo_complement: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeytingVerdict {
    pub feasible: bool,
    pub table: Vec<PseudoComplementReport>,
    pub distributive: LawVerdict,
}

pub fn pseudo_complement(lattice: &FiniteOrthoLattice, a: usize) -> Result<PseudoComplementReport> {
    if a >= lattice.len() {
        return Err(QlatError::ElementNotInLattice);
    }
    let bottom = lattice.bottom();
    let disjoint_set: Vec<usize> = (0..lattice.len())
        .filter(|&b| lattice.meet(b, a) == bottom)
        .collect();
    let supremum = disjoint_set
        .iter()
        .fold(bottom, |acc, &b| lattice.join(acc, b));
    let exists = disjoint_set.contains(&supremum);
    Ok(PseudoComplementReport {
        element: a,
        disjoint_set,
        supremum,
        exists,
        pseudo_complement: exists.then_some(supremum),
    })
}

/// Pseudo-complements exist everywhere and the lattice is distributive.
pub fn heyting_feasible(lattice: &FiniteOrthoLattice) -> HeytingVerdict {
    let table: Vec<_> = (0..lattice.len())
        .map(|a| pseudo_complement(lattice, a).expect("index in range"))
        .collect();
    let distributive = lattice.check_distributive();
    HeytingVerdict {
        feasible: distributive.holds && table.iter().all(|r| r.exists),
        table,
        distributive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projector::{build_qubit_projector, qubit_projectors};
    use crate::subspace::Subspace;
    use crate::tolerance::ToleranceConfig;

    fn sub(a: usize, b: usize) -> Subspace {
        Subspace::from_projector(build_qubit_projector(a, b).unwrap(), &ToleranceConfig::default()).unwrap()
    }

    fn qubit_lattice() -> FiniteOrthoLattice {
        let atoms: Vec<_> = qubit_projectors()
            .into_iter()
            .map(|p| Subspace::from_projector(p, &ToleranceConfig::default()).unwrap())
            .collect();
        FiniteOrthoLattice::build(2, &atoms, &ToleranceConfig::default()).unwrap()
    }

    fn block(a: usize, b: usize) -> FiniteOrthoLattice {
        FiniteOrthoLattice::build(2, &[sub(a, b)], &ToleranceConfig::default()).unwrap()
    }

    #[test]
    fn atom_of_qubit_lattice_has_no_pseudo_complement() {
        let l = qubit_lattice();
        let a = l.index_by_name("P[1,3]").unwrap();
        let r = pseudo_complement(&l, a).unwrap();
        assert!(!r.exists);
        assert_eq!(r.pseudo_complement, None);
        assert_eq!(r.supremum, l.top());
        let mut expected: Vec<usize> = (0..l.len()).filter(|&i| i != a && i != l.top()).collect();
        expected.sort();
        assert_eq!(r.disjoint_set, expected);
        assert_eq!(r.disjoint_set.len(), 6);
    }

    #[test]
    fn block_atom_pseudo_complement_is_partner() {
        let l = block(1, 3);
        let a = l.index_by_name("P[1,3]").unwrap();
        let r = pseudo_complement(&l, a).unwrap();
        assert!(r.exists);
        assert_eq!(r.pseudo_complement, l.index_by_name("P[2,3]"));
    }

    #[test]
    fn bottom_pseudo_complement_is_top() {
        for l in [qubit_lattice(), block(1, 1)] {
            let r = pseudo_complement(&l, l.bottom()).unwrap();
            assert!(r.exists);
            assert_eq!(r.pseudo_complement, Some(l.top()));
        }
    }

    #[test]
    fn element_not_in_lattice() {
        let l = block(1, 2);
        assert_eq!(pseudo_complement(&l, 4), Err(QlatError::ElementNotInLattice));
    }

    #[test]
    fn feasibility_verdicts() {
        let q = heyting_feasible(&qubit_lattice());
        assert!(!q.feasible);
        assert!(!q.distributive.holds);
        let l = qubit_lattice();
        for r in &q.table {
            assert_eq!(r.exists, l.element(r.element).is_trivial());
        }
        assert!(heyting_feasible(&block(2, 2)).feasible);
        let two = FiniteOrthoLattice::build(2, &[], &ToleranceConfig::default()).unwrap();
        assert!(heyting_feasible(&two).feasible);
    }

    #[test]
    fn block_pseudo_complements_are_orthocomplements() {
        for b in 1..=3 {
            let l = block(1, b);
            for e in 0..l.len() {
                let r = pseudo_complement(&l, e).unwrap();
                assert_eq!(r.pseudo_complement, Some(l.complement(e)));
                assert_eq!(l.meet(e, l.complement(e)), l.bottom());
            }
        }
    }
}
