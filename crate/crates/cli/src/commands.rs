use std::fs;

use qlat_core::io::ProjectorFile;
use qlat_core::{
    heyting_feasible, parse, print, AtomRegistry, BlockFamily, Evaluation, Evaluator, FiniteOrthoLattice,
    Law, LawVerdict, SemanticsMode, ToleranceConfig,
};
use serde_json::{json, Value};

use crate::args::{Command, EvalArgs, HeytingCommand, LatticeCommand, LawArg, SemanticsArg};
use crate::error::{CliError, CliResult};
use crate::expect::{bool_checks, classification_str, kind_str, verdict_checks, Check};
use crate::render::SCHEMA;
use crate::{demo, source};

/// A report plus the assertions that decide the exit code.
pub struct Outcome {
    pub report: Value,
    pub checks: Vec<Check>,
    /// Checks already appear inside the report body.
    pub embedded: bool,
}

impl Outcome {
    pub fn plain(report: Value) -> Self {
        Self {
            report,
            checks: Vec::new(),
            embedded: false,
        }
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    /// The report with a top-level `expectations` list when any were given.
    pub fn into_report(self) -> Value {
        let mut report = self.report;
        if !self.checks.is_empty() && !self.embedded {
            report["expectations"] = Value::Array(self.checks.iter().map(Check::to_json).collect());
        }
        report
    }
}

pub fn run(cmd: &Command, tol: &ToleranceConfig) -> CliResult<Outcome> {
    match cmd {
        Command::GenProjectors { out } => gen_projectors(out.as_deref()),
        Command::Lattice(LatticeCommand::Build { projectors }) => {
            let l = source::lattice_from(&source::projectors(projectors, tol)?, tol)?;
            Ok(Outcome::plain(lattice_report(&l)))
        }
        Command::Lattice(LatticeCommand::Check {
            law,
            projectors,
            expect,
        }) => {
            let l = source::lattice_from(&source::projectors(projectors, tol)?, tol)?;
            let law = match law {
                LawArg::Orthomodular => Law::Orthomodular,
                LawArg::Distributive => Law::Distributive,
            };
            let verdict = l.check(law);
            let checks = bool_checks(expect, "holds", verdict.holds)?;
            let mut report = law_json(&l, &verdict);
            report["schema"] = json!(SCHEMA);
            report["command"] = json!("lattice-check");
            Ok(Outcome {
                report,
                checks,
                embedded: false,
            })
        }
        Command::Heyting(HeytingCommand::Check { lattice, expect }) => {
            let l = source::lattice(lattice, tol)?;
            let mut report = heyting_report(&l);
            report["source"] = json!(lattice);
            let feasible = report["feasible"].as_bool().unwrap_or(false);
            let checks = bool_checks(expect, "feasible", feasible)?;
            Ok(Outcome {
                report,
                checks,
                embedded: false,
            })
        }
        Command::Blocks { projectors } => {
            let set = source::projectors(projectors, tol)?;
            let family = BlockFamily::new(set.dim, set.projectors, tol)?;
            Ok(Outcome::plain(blocks_report(&family)?))
        }
        Command::Eval(args) => eval(args, tol),
        Command::Demo(args) => demo::run(args, tol),
    }
}

fn gen_projectors(out: Option<&std::path::Path>) -> CliResult<Outcome> {
    let file = ProjectorFile::from_projectors(2, &qlat_core::qubit_projectors());
    let mut report = serde_json::to_value(&file).expect("projector file serialises");
    report["schema"] = json!(SCHEMA);
    report["command"] = json!("gen-projectors");
    if let Some(path) = out {
        let mut body = serde_json::to_string_pretty(&report).expect("projector file serialises");
        body.push('\n');
        fs::write(path, body).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let names: Vec<&str> = file.atoms.iter().map(|a| a.name.as_str()).collect();
        return Ok(Outcome::plain(json!({
            "schema": SCHEMA,
            "command": "gen-projectors",
            "out": path.display().to_string(),
            "dim": file.dim,
            "atoms": names,
        })));
    }
    Ok(Outcome::plain(report))
}

fn names(l: &FiniteOrthoLattice, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| l.element(i).label()).collect()
}

pub fn law_json(l: &FiniteOrthoLattice, v: &LawVerdict) -> Value {
    let mut out = json!({
        "law": v.law.as_str(),
        "holds": v.holds,
        "witness": v.witness.as_ref().map(|w| names(l, w)),
    });
    if let (Law::Distributive, Some(w)) = (v.law, &v.witness) {
        let (a, b, c) = (w[0], w[1], w[2]);
        out["lhs"] = json!(l.element(l.meet(a, l.join(b, c))).label());
        out["rhs"] = json!(l.element(l.join(l.meet(a, b), l.meet(a, c))).label());
    }
    out
}

pub fn lattice_report(l: &FiniteOrthoLattice) -> Value {
    let elements: Vec<Value> = l
        .elements()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            json!({
                "index": i,
                "name": e.label(),
                "rank": e.rank(),
                "complement": l.element(l.complement(i)).label(),
            })
        })
        .collect();
    json!({
        "schema": SCHEMA,
        "command": "lattice-build",
        "dim": l.dim(),
        "elements": elements,
        "leq": l.order_pairs(),
        "laws": [
            law_json(l, &l.check_orthomodular()),
            law_json(l, &l.check_distributive()),
        ],
    })
}

pub fn heyting_report(l: &FiniteOrthoLattice) -> Value {
    let v = heyting_feasible(l);
    let table: Vec<Value> = v
        .table
        .iter()
        .map(|r| {
            let pc = r.pseudo_complement.map(|i| l.element(i).label());
            let ortho = l.complement(r.element);
            json!({
                "element": l.element(r.element).label(),
                "disjoint_set": names(l, &r.disjoint_set),
                "supremum": l.element(r.supremum).label(),
                "exists": r.exists,
                "pseudo_complement": pc,
                "equals_orthocomplement": r.pseudo_complement == Some(ortho),
            })
        })
        .collect();
    json!({
        "schema": SCHEMA,
        "command": "heyting-check",
        "elements": l.len(),
        "table": table,
        "feasible": v.feasible,
        "verdict": if v.feasible { "Heyting algebra" } else { "not a Heyting algebra" },
        "distributive": law_json(l, &v.distributive),
    })
}

pub fn blocks_report(family: &BlockFamily) -> CliResult<Value> {
    let blocks: Vec<Value> = family
        .blocks()
        .iter()
        .map(|b| -> CliResult<Value> {
            Ok(json!({
                "generator": b.generator().name().unwrap_or("-"),
                "elements": b.lattice().elements().iter().map(|e| e.label()).collect::<Vec<_>>(),
                "invariance": b.invariance_holds()?,
            }))
        })
        .collect::<CliResult<_>>()?;
    let graph = family.commutation_graph()?;
    let union = family.union_lattice()?;
    Ok(json!({
        "schema": SCHEMA,
        "command": "blocks",
        "dim": family.dim(),
        "blocks": blocks,
        "commutation_graph": {
            "nodes": graph.nodes,
            "edges": graph.edges,
        },
        "union": {
            "elements": union.elements().iter().map(|e| e.label()).collect::<Vec<_>>(),
            "size": union.len(),
            "orthomodular": union.check_orthomodular().holds,
            "distributive": union.check_distributive().holds,
        },
    }))
}

pub fn mode(s: SemanticsArg) -> SemanticsMode {
    match s {
        SemanticsArg::Hilbert => SemanticsMode::Hilbert,
        SemanticsArg::Super => SemanticsMode::Supervaluational,
        SemanticsArg::Mv => SemanticsMode::ManyValued,
    }
}

pub fn evaluation_json(e: &Evaluation) -> Value {
    let mut out = json!({
        "verdict": kind_str(e.verdict.kind()),
        "display": e.verdict.to_string(),
        "trace": e.trace,
    });
    if let Some(c) = e.verdict.classification() {
        out["classification"] = json!(classification_str(Some(c)));
    }
    if let Some(d) = e.verdict.degree() {
        out["degree"] = json!(d);
    }
    out
}

fn eval(args: &EvalArgs, tol: &ToleranceConfig) -> CliResult<Outcome> {
    if args.counterfactual_joins && args.semantics != SemanticsArg::Super {
        return Err(CliError::Usage(
            "--counterfactual-joins only applies to --semantics super".into(),
        ));
    }
    let prep = source::state(&args.state, tol)?;
    let set = source::projectors(&args.projectors, tol)?;
    let reg = AtomRegistry::from_projectors(set.dim, set.projectors, tol)?;
    let f = parse(&args.formula)?;
    let ev = Evaluator::new(&reg, *tol).with_counterfactual_joins(args.counterfactual_joins);
    let m = mode(args.semantics);
    let e = ev.evaluate(&prep, &f, m)?;
    let checks = verdict_checks(&args.expect, &e.verdict, tol.eps_equal)?;
    let mut report = evaluation_json(&e);
    report["schema"] = json!(SCHEMA);
    report["command"] = json!("eval");
    report["state"] = json!(prep.state().label().unwrap_or("inline"));
    report["formula"] = json!(print(&f));
    report["semantics"] = json!(m.as_str());
    report["counterfactual_joins"] = json!(args.counterfactual_joins);
    Ok(Outcome {
        report,
        checks,
        embedded: false,
    })
}
