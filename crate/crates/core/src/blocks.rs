//! Boolean blocks: the four-element invariant-subspace lattice of a single
//! projector, families of them, and their union.

use serde::Serialize;

use crate::error::{QlatError, Result};
use crate::lattice::FiniteOrthoLattice;
use crate::projector::Projector;
use crate::subspace::Subspace;
use crate::tolerance::ToleranceConfig;

/// `{0, ran(P), ran(1̂ − P), full}`: the subspaces invariant under `P`.
#[derive(Debug, Clone)]
pub struct BooleanBlock {
    generator: Projector,
    lattice: FiniteOrthoLattice,
}

impl BooleanBlock {
    pub fn new(generator: Projector, tol: &ToleranceConfig) -> Result<Self> {
        let range = Subspace::from_projector(generator.clone(), tol)?;
        let dim = range.dim();
        if range.is_trivial() {
            return Err(QlatError::TrivialGenerator {
                rank: range.rank(),
                dim,
            });
        }
        let lattice = FiniteOrthoLattice::build(dim, &[range], tol)?;
        debug_assert_eq!(lattice.len(), 4);
        for e in lattice.elements() {
            debug_assert!(e.invariant_under(&generator, tol)?);
        }
        Ok(Self { generator, lattice })
    }

    pub fn generator(&self) -> &Projector {
        &self.generator
    }

    pub fn lattice(&self) -> &FiniteOrthoLattice {
        &self.lattice
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.lattice.index_of(s).is_some()
    }

    /// Same element set as `other` (a projector and its negation generate the
    /// same block).
    pub fn same_elements(&self, other: &BooleanBlock) -> bool {
        self.lattice.len() == other.lattice.len()
            && other.lattice.elements().iter().all(|e| self.contains(e))
    }

    /// Every element satisfies `P_E P P_E = P P_E`.
    pub fn invariance_holds(&self) -> Result<bool> {
        let tol = *self.lattice.tolerance();
        for e in self.lattice.elements() {
            if !e.invariant_under(&self.generator, &tol)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn build_block(p: &Projector, tol: &ToleranceConfig) -> Result<BooleanBlock> {
    BooleanBlock::new(p.clone(), tol)
}

/// The collection Σ of nontrivial projectors and its deduplicated blocks.
#[derive(Debug, Clone)]
pub struct BlockFamily {
    dim: usize,
    tol: ToleranceConfig,
    sigma: Vec<Projector>,
    blocks: Vec<BooleanBlock>,
}

/// Adjacency over Σ: `edges` lists index pairs `(i, j)`, `i < j`, whose
/// projectors commute.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutationGraph {
    pub nodes: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl BlockFamily {
    pub fn new(dim: usize, sigma: Vec<Projector>, tol: &ToleranceConfig) -> Result<Self> {
        let mut blocks: Vec<BooleanBlock> = Vec::new();
        for p in &sigma {
            if p.dim() != dim {
                return Err(QlatError::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            let block = BooleanBlock::new(p.clone(), tol)?;
            if !blocks.iter().any(|b| b.same_elements(&block)) {
                blocks.push(block);
            }
        }
        Ok(Self {
            dim,
            tol: *tol,
            sigma,
            blocks,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sigma(&self) -> &[Projector] {
        &self.sigma
    }

    pub fn blocks(&self) -> &[BooleanBlock] {
        &self.blocks
    }

    /// Whether `a ∧ b` is defined: the projectors commute. Trivial subspaces
    /// commute with everything.
    pub fn meet_defined(&self, a: &Subspace, b: &Subspace) -> Result<bool> {
        a.commutes(b, &self.tol)
    }

    /// Whether some block of the family contains both `a` and `b`.
    pub fn co_member(&self, a: &Subspace, b: &Subspace) -> bool {
        self.blocks.iter().any(|blk| blk.contains(a) && blk.contains(b))
    }

    /// Blocks (by index) that contain `s`.
    pub fn blocks_containing(&self, s: &Subspace) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&i| self.blocks[i].contains(s))
            .collect()
    }

    /// Deduplicated union of all block elements, as a lattice.
    pub fn union_lattice(&self) -> Result<FiniteOrthoLattice> {
        let elements: Vec<Subspace> = self
            .blocks
            .iter()
            .flat_map(|b| b.lattice().elements().iter().cloned())
            .collect();
        FiniteOrthoLattice::close(self.dim, elements, &self.tol)
    }

    pub fn commutation_graph(&self) -> Result<CommutationGraph> {
        let subs: Vec<Subspace> = self
            .sigma
            .iter()
            .map(|p| Subspace::from_projector(p.clone(), &self.tol))
            .collect::<Result<_>>()?;
        let mut edges = Vec::new();
        for i in 0..subs.len() {
            for j in (i + 1)..subs.len() {
                if subs[i].commutes(&subs[j], &self.tol)? {
                    edges.push((i, j));
                }
            }
        }
        let nodes = self
            .sigma
            .iter()
            .enumerate()
            .map(|(i, p)| p.name().map_or_else(|| format!("#{i}"), str::to_string))
            .collect();
        Ok(CommutationGraph { nodes, edges })
    }
}
