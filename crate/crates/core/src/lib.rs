//! Closed-subspace lattices of finite-dimensional complex Hilbert spaces and
//! propositional semantics over them.
//!
//! The crate builds the Hilbert lattice spanned by a set of projectors
//! (the qubit family `P[a,b]` is built in), checks its algebraic laws,
//! tests whether it can carry a Heyting algebra, splits it into Boolean
//! blocks of commuting projectors, and evaluates propositions about a
//! prepared state in three ways: bivalently in the full lattice, with
//! truth-value gaps over the blocks, and as Born-rule degrees.

pub mod blocks;
pub mod error;
pub mod formula;
pub mod heyting;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod projector;
pub mod semantics;
pub mod subspace;
pub mod tolerance;

pub use blocks::{build_block, BlockFamily, BooleanBlock, CommutationGraph};
pub use error::{QlatError, Result};
pub use formula::{parse, print, Formula, Node, ParseError};
pub use heyting::{heyting_feasible, pseudo_complement, HeytingVerdict, PseudoComplementReport};
pub use lattice::{FiniteOrthoLattice, Law, LawVerdict};
pub use linalg::{hermitian_eigendecomposition, Eigen, Matrix, Scalar, StateVector};
pub use projector::{
    build_qubit_projector, eigenstate, expectation, membership, negate_projector, partner, qubit_name,
    qubit_projectors, resolution_check, Projector,
};
pub use semantics::{
    AtomRegistry, Classification, Evaluation, Evaluator, Preparation, SemanticsMode, TruthVerdict,
    VerdictKind,
};
pub use subspace::Subspace;
pub use tolerance::ToleranceConfig;
