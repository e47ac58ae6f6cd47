//! Truth evaluation of propositions about a prepared pure state.
//!
//! Three modes:
//!
//! * **hilbert** – bivalent: every meet and join of the full subspace lattice
//!   is defined, and the proposition holds iff the state lies in the formula's
//!   subspace. A proposition and its negation can both come out false.
//! * **supervaluational** – meets between non-commuting nontrivial subspaces
//!   are undefined. The formula is first simplified with rules valid in every
//!   Boolean block; anything still needing an undefined operation is a gap.
//!   Results whose simplified subspace is the top (bottom) element are
//!   supertrue (superfalse).
//! * **many-valued** – the Born-rule degree `⟨ψ|P|ψ⟩` for an atom, and one
//!   minus it for a negation. Binary connectives are rejected.

use std::fmt;

use serde::Serialize;

use crate::error::{QlatError, Result};
use crate::formula::{Formula, Node};
use crate::linalg::StateVector;
use crate::projector::{build_qubit_projector, eigenstate, expectation, membership, Projector};
use crate::subspace::Subspace;
use crate::tolerance::ToleranceConfig;

/// Named atoms available to formulas.
#[derive(Debug, Clone)]
pub struct AtomRegistry {
    dim: usize,
    atoms: Vec<(String, Subspace)>,
}

impl AtomRegistry {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            atoms: Vec::new(),
        }
    }

    /// The six projectors `P[a,b]` on `C^2`.
    pub fn qubit() -> Self {
        let tol = ToleranceConfig::default();
        let mut reg = Self::new(2);
        for b in 1..=3 {
            for a in 1..=2 {
                let p = build_qubit_projector(a, b).expect("valid qubit indices");
                reg.insert(p, &tol).expect("qubit projectors are valid");
            }
        }
        reg
    }

    /// Adds a named projector; unnamed projectors get `#k`.
    pub fn insert(&mut self, p: Projector, tol: &ToleranceConfig) -> Result<()> {
        p.matrix().check_dim(self.dim).map_err(|_| QlatError::DimensionMismatch {
            expected: self.dim,
            found: p.dim(),
        })?;
        let name = p
            .name()
            .map_or_else(|| format!("#{}", self.atoms.len()), str::to_string);
        let sub = Subspace::from_projector(p.named(name.clone()), tol)?;
        self.atoms.retain(|(n, _)| *n != name);
        self.atoms.push((name, sub));
        Ok(())
    }

    pub fn from_projectors(dim: usize, projectors: Vec<Projector>, tol: &ToleranceConfig) -> Result<Self> {
        let mut reg = Self::new(dim);
        for p in projectors {
            reg.insert(p, tol)?;
        }
        Ok(reg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, name: &str) -> Result<&Subspace> {
        self.atoms
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
            .ok_or_else(|| QlatError::UnboundAtom(name.to_string()))
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&str, &Subspace)> {
        self.atoms.iter().map(|(n, s)| (n.as_str(), s))
    }

    /// Display name for a subspace: a registered atom name, `!atom`, or a
    /// generic description.
    pub fn describe(&self, s: &Subspace, tol: &ToleranceConfig) -> String {
        if s.is_zero() {
            return "{0}".into();
        }
        if s.is_full() {
            return format!("C^{}", s.dim());
        }
        if let Some((n, _)) = self.atoms.iter().find(|(_, a)| a.same(s, tol)) {
            return n.clone();
        }
        if let Some((n, _)) = self.atoms.iter().find(|(_, a)| a.complement().same(s, tol)) {
            return format!("!{n}");
        }
        s.label()
    }
}

/// A prepared pure state and the rank-one subspace it spans.
#[derive(Debug, Clone)]
pub struct Preparation {
    state: StateVector,
    support: Subspace,
}

impl Preparation {
    pub fn new(state: StateVector, tol: &ToleranceConfig) -> Result<Self> {
        let mut p = Projector::onto_state(&state);
        if let Some(label) = state.label() {
            p = p.named(label);
        }
        let support = Subspace::from_projector(p, tol)?;
        debug_assert_eq!(support.rank(), 1);
        debug_assert!(membership(&state, support.projector(), tol.eps_equal)?);
        Ok(Self { state, support })
    }

    /// `psi[a,b]`, the eigenstate of `P[a,b]`.
    pub fn qubit_eigenstate(a: usize, b: usize) -> Result<Self> {
        Self::new(eigenstate(a, b)?, &ToleranceConfig::default())
    }

    pub fn state(&self) -> &StateVector {
        &self.state
    }

    pub fn support(&self) -> &Subspace {
        &self.support
    }

    pub fn dim(&self) -> usize {
        self.state.dim()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SemanticsMode {
    Hilbert,
    Supervaluational,
    ManyValued,
}

impl SemanticsMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SemanticsMode::Hilbert => "hilbert",
            SemanticsMode::Supervaluational => "super",
            SemanticsMode::ManyValued => "mv",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictKind {
    True,
    False,
    Gap,
    Degree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    SuperTrue,
    SuperFalse,
}

/// Outcome of evaluating one formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TruthVerdict {
    True,
    False,
    /// True in every admissible resolution of gaps.
    SuperTrue,
    /// False in every admissible resolution of gaps.
    SuperFalse,
    /// No truth value.
    Gap,
    Degree(f64),
}

impl TruthVerdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            TruthVerdict::True | TruthVerdict::SuperTrue => VerdictKind::True,
            TruthVerdict::False | TruthVerdict::SuperFalse => VerdictKind::False,
            TruthVerdict::Gap => VerdictKind::Gap,
            TruthVerdict::Degree(_) => VerdictKind::Degree,
        }
    }

    pub fn classification(&self) -> Option<Classification> {
        match self {
            TruthVerdict::SuperTrue => Some(Classification::SuperTrue),
            TruthVerdict::SuperFalse => Some(Classification::SuperFalse),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<f64> {
        match self {
            TruthVerdict::Degree(d) => Some(*d),
            _ => None,
        }
    }

    fn from_bool(b: bool) -> Self {
        if b {
            TruthVerdict::True
        } else {
            TruthVerdict::False
        }
    }
}

impl fmt::Display for TruthVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruthVerdict::True => f.write_str("True"),
            TruthVerdict::False => f.write_str("False"),
            TruthVerdict::SuperTrue => f.write_str("True (SuperTrue)"),
            TruthVerdict::SuperFalse => f.write_str("False (SuperFalse)"),
            TruthVerdict::Gap => f.write_str("Gap"),
            TruthVerdict::Degree(d) => write!(f, "Degree({d})"),
        }
    }
}

/// A verdict with the ordered list of steps that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub verdict: TruthVerdict,
    pub trace: Vec<String>,
}

/// Formula evaluator bound to an atom registry and tolerances.
#[derive(Debug, Clone)]
pub struct Evaluator<'a> {
    registry: &'a AtomRegistry,
    tol: ToleranceConfig,
    counterfactual_joins: bool,
}

impl<'a> Evaluator<'a> {
    pub fn new(registry: &'a AtomRegistry, tol: ToleranceConfig) -> Self {
        Self {
            registry,
            tol,
            counterfactual_joins: false,
        }
    }

    /// In supervaluational mode, evaluate otherwise-undefined operations
    /// between non-commuting subspaces in the full lattice instead of
    /// producing a gap. The final state meet is unaffected.
    pub fn with_counterfactual_joins(mut self, on: bool) -> Self {
        self.counterfactual_joins = on;
        self
    }

    pub fn evaluate(&self, prep: &Preparation, f: &Formula, mode: SemanticsMode) -> Result<Evaluation> {
        self.check_prep(prep)?;
        match mode {
            SemanticsMode::Hilbert => self.eval_hilbert(prep, f),
            SemanticsMode::Supervaluational => self.eval_super(prep, f),
            SemanticsMode::ManyValued => self.eval_mv(prep, f),
        }
    }

    fn check_prep(&self, prep: &Preparation) -> Result<()> {
        if prep.dim() != self.registry.dim() {
            return Err(QlatError::DimensionMismatch {
                expected: self.registry.dim(),
                found: prep.dim(),
            });
        }
        Ok(())
    }

    fn describe(&self, s: &Subspace) -> String {
        self.registry.describe(s, &self.tol)
    }

    /// True iff the state lies in `support ∧ p`; otherwise that meet is `{0}`
    /// and the proposition is false.
    pub fn eval_atom_hilbert(&self, prep: &Preparation, p: &Subspace) -> Result<TruthVerdict> {
        let m = prep.support().meet(p, &self.tol)?;
        Ok(TruthVerdict::from_bool(m.same(prep.support(), &self.tol)))
    }

    /// Subspace of `f` in the full lattice, recording each operation.
    pub fn hilbert_subspace(&self, f: &Formula, trace: &mut Vec<String>) -> Result<Subspace> {
        let tol = &self.tol;
        let s = match &f.node {
            Node::Atom(name) => return Ok(self.registry.get(name)?.clone()),
            Node::Not(c) => self.hilbert_subspace(c, trace)?.complement(),
            Node::And(l, r) => {
                let l = self.hilbert_subspace(l, trace)?;
                let r = self.hilbert_subspace(r, trace)?;
                l.meet(&r, tol)?
            }
            Node::Or(l, r) => {
                let l = self.hilbert_subspace(l, trace)?;
                let r = self.hilbert_subspace(r, trace)?;
                l.join(&r, tol)?
            }
        };
        trace.push(format!("{f} => {}", self.describe(&s)));
        Ok(s)
    }

    fn eval_hilbert(&self, prep: &Preparation, f: &Formula) -> Result<Evaluation> {
        let mut trace = Vec::new();
        let s = self.hilbert_subspace(f, &mut trace)?;
        let verdict = self.eval_atom_hilbert(prep, &s)?;
        trace.push(format!(
            "state meet: support ∧ {} => {}",
            self.describe(&s),
            if verdict == TruthVerdict::True {
                "support"
            } else {
                "{0}"
            }
        ));
        Ok(Evaluation { verdict, trace })
    }

    fn eval_super(&self, prep: &Preparation, f: &Formula) -> Result<Evaluation> {
        let mut trace = Vec::new();
        let residue = self.simplify(f, &mut trace)?;
        let verdict = match &residue {
            Residue::Value(s) => {
                if !prep.support().commutes(s, &self.tol)? {
                    trace.push(format!(
                        "state meet: support ∧ {} undefined (non-commuting) => Gap",
                        self.describe(s)
                    ));
                    TruthVerdict::Gap
                } else {
                    let v = self.eval_atom_hilbert(prep, s)?;
                    let v = match v {
                        TruthVerdict::True if s.is_full() => TruthVerdict::SuperTrue,
                        TruthVerdict::False if s.is_zero() => TruthVerdict::SuperFalse,
                        other => other,
                    };
                    trace.push(format!("state meet: support ∧ {} => {v}", self.describe(s)));
                    v
                }
            }
            unresolved => {
                trace.push(format!(
                    "residue {} contains an undefined operation => Gap",
                    unresolved.render(self)
                ));
                TruthVerdict::Gap
            }
        };
        Ok(Evaluation { verdict, trace })
    }

    /// Stage-one rewriting of the subspace expression. Rules, tried in order
    /// at each binary node after its operands are simplified:
    ///
    /// 1. complement pair: `X ∨ X^⊥ → full`, `X ∧ X^⊥ → {0}`; idempotence
    ///    `X ∧ X → X`, `X ∨ X → X`
    /// 2. trivial elements: `{0}` and `full` absorbed or annihilating
    /// 3. commuting operands: replaced by their lattice value
    ///
    /// A binary node surviving all three keeps its operands as an undefined
    /// operation (or, with counterfactual joins, is evaluated in the full
    /// lattice).
    fn simplify(&self, f: &Formula, trace: &mut Vec<String>) -> Result<Residue> {
        match &f.node {
            Node::Atom(name) => Ok(Residue::Value(self.registry.get(name)?.clone())),
            Node::Not(c) => {
                let inner = self.simplify(c, trace)?;
                Ok(match inner {
                    Residue::Value(s) => Residue::Value(s.complement()),
                    Residue::Complement(x) => {
                        trace.push(format!("{f} => {} [double complement]", x.render(self)));
                        *x
                    }
                    other => Residue::Complement(Box::new(other)),
                })
            }
            Node::And(l, r) | Node::Or(l, r) => {
                let op = if matches!(f.node, Node::And(..)) {
                    Op::Meet
                } else {
                    Op::Join
                };
                let l = self.simplify(l, trace)?;
                let r = self.simplify(r, trace)?;
                let (out, rule) = self.combine(op, l, r)?;
                if let Some(rule) = rule {
                    trace.push(format!("{f} => {} [{rule}]", out.render(self)));
                }
                Ok(out)
            }
        }
    }

    fn combine(&self, op: Op, l: Residue, r: Residue) -> Result<(Residue, Option<&'static str>)> {
        let tol = &self.tol;
        let dim = self.registry.dim();
        let annihilator = || match op {
            Op::Meet => Subspace::zero(dim),
            Op::Join => Subspace::full(dim),
        };

        if l.is_complement_of(&r, tol) {
            return Ok((Residue::Value(annihilator()), Some("complement pair")));
        }
        if l.same(&r, tol) {
            return Ok((l, Some("idempotence")));
        }

        let is_annihilator = |x: &Residue| match (op, x) {
            (Op::Meet, Residue::Value(s)) => s.is_zero(),
            (Op::Join, Residue::Value(s)) => s.is_full(),
            _ => false,
        };
        let is_unit = |x: &Residue| match (op, x) {
            (Op::Meet, Residue::Value(s)) => s.is_full(),
            (Op::Join, Residue::Value(s)) => s.is_zero(),
            _ => false,
        };
        if is_annihilator(&l) || is_annihilator(&r) {
            return Ok((Residue::Value(annihilator()), Some("trivial element")));
        }
        if is_unit(&l) {
            return Ok((r, Some("trivial element")));
        }
        if is_unit(&r) {
            return Ok((l, Some("trivial element")));
        }

        if let (Residue::Value(a), Residue::Value(b)) = (&l, &r) {
            let value = |a: &Subspace, b: &Subspace| match op {
                Op::Meet => a.meet(b, tol),
                Op::Join => a.join(b, tol),
            };
            if a.commutes(b, tol)? {
                return Ok((Residue::Value(value(a, b)?), Some("commuting pair")));
            }
            if self.counterfactual_joins {
                return Ok((Residue::Value(value(a, b)?), Some("counterfactual lattice value")));
            }
        }

        let node = match op {
            Op::Meet => Residue::Meet(Box::new(l), Box::new(r)),
            Op::Join => Residue::Join(Box::new(l), Box::new(r)),
        };
        Ok((node, Some("undefined: non-commuting operands")))
    }

    fn eval_mv(&self, prep: &Preparation, f: &Formula) -> Result<Evaluation> {
        let mut negations = 0usize;
        let mut node = f;
        loop {
            match &node.node {
                Node::Not(c) => {
                    negations += 1;
                    node = c;
                }
                Node::Atom(name) => {
                    let atom = self.registry.get(name)?;
                    let v = expectation(prep.state(), atom.projector())?;
                    let mut trace = vec![format!("<psi|{name}|psi> = {v}")];
                    let mut degree = v;
                    for _ in 0..negations {
                        degree = (1.0 - degree).clamp(0.0, 1.0);
                        trace.push(format!("negation: 1 - previous = {degree}"));
                    }
                    return Ok(Evaluation {
                        verdict: TruthVerdict::Degree(degree),
                        trace,
                    });
                }
                Node::And(..) => {
                    return Err(QlatError::UnsupportedConnective {
                        connective: "&",
                        mode: "many-valued",
                    })
                }
                Node::Or(..) => {
                    return Err(QlatError::UnsupportedConnective {
                        connective: "|",
                        mode: "many-valued",
                    })
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Meet,
    Join,
}

/// Partially simplified subspace expression.
#[derive(Debug, Clone)]
enum Residue {
    Value(Subspace),
    Complement(Box<Residue>),
    Meet(Box<Residue>, Box<Residue>),
    Join(Box<Residue>, Box<Residue>),
}

impl Residue {
    fn same(&self, other: &Residue, tol: &ToleranceConfig) -> bool {
        match (self, other) {
            (Residue::Value(a), Residue::Value(b)) => a.same(b, tol),
            (Residue::Complement(a), Residue::Complement(b)) => a.same(b, tol),
            (Residue::Meet(a, b), Residue::Meet(c, d)) | (Residue::Join(a, b), Residue::Join(c, d)) => {
                a.same(c, tol) && b.same(d, tol)
            }
            _ => false,
        }
    }

    fn is_complement_of(&self, other: &Residue, tol: &ToleranceConfig) -> bool {
        match (self, other) {
            (Residue::Value(a), Residue::Value(b)) => a.complement().same(b, tol),
            (Residue::Complement(x), y) | (y, Residue::Complement(x)) => x.same(y, tol),
            _ => false,
        }
    }

    fn render(&self, ev: &Evaluator<'_>) -> String {
        match self {
            Residue::Value(s) => ev.describe(s),
            Residue::Complement(x) => format!("!({})", x.render(ev)),
            Residue::Meet(a, b) => format!("({} ∧ {})", a.render(ev), b.render(ev)),
            Residue::Join(a, b) => format!("({} ∨ {})", a.render(ev), b.render(ev)),
        }
    }
}
