//! Resolution of `builtin:` names, inline JSON and file paths.

use std::fs;

use qlat_core::io::{ProjectorFile, StateFile};
use qlat_core::{
    build_block, build_qubit_projector, qubit_projectors, FiniteOrthoLattice, Preparation, Projector,
    Subspace, ToleranceConfig,
};

use crate::error::{CliError, CliResult};

pub struct ProjectorSet {
    pub dim: usize,
    pub projectors: Vec<Projector>,
}

fn read(path: &str) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

/// `P[m,R]` → `(m, R)`.
pub fn qubit_indices(name: &str) -> Option<(usize, usize)> {
    let body = name.strip_prefix("P[")?.strip_suffix(']')?;
    let (a, b) = body.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

pub fn projectors(src: &str, tol: &ToleranceConfig) -> CliResult<ProjectorSet> {
    if src == "builtin:qubit" {
        return Ok(ProjectorSet {
            dim: 2,
            projectors: qubit_projectors(),
        });
    }
    if let Some(rest) = src.strip_prefix("builtin:") {
        return Err(CliError::Usage(format!("unknown builtin projector set `{rest}`")));
    }
    let file = ProjectorFile::from_json(&read(src)?)?;
    let projectors = file.projectors(tol)?;
    Ok(ProjectorSet {
        dim: file.dim,
        projectors,
    })
}

pub fn lattice_from(set: &ProjectorSet, tol: &ToleranceConfig) -> CliResult<FiniteOrthoLattice> {
    let atoms = set
        .projectors
        .iter()
        .map(|p| Subspace::from_projector(p.clone(), tol))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FiniteOrthoLattice::build(set.dim, &atoms, tol)?)
}

/// `builtin:qubit`, `builtin:block:P[m,R]`, or a projector file.
pub fn lattice(src: &str, tol: &ToleranceConfig) -> CliResult<FiniteOrthoLattice> {
    if let Some(name) = src.strip_prefix("builtin:block:") {
        let (m, r) = qubit_indices(name)
            .ok_or_else(|| CliError::Usage(format!("expected builtin:block:P[m,R], got `{src}`")))?;
        let p = build_qubit_projector(m, r)?;
        return Ok(build_block(&p, tol)?.lattice().clone());
    }
    lattice_from(&projectors(src, tol)?, tol)
}

/// `builtin:psi[m,R]`, an inline `{"amplitudes": …}` object, or a state file.
pub fn state(src: &str, tol: &ToleranceConfig) -> CliResult<Preparation> {
    if let Some(rest) = src.strip_prefix("builtin:") {
        let (m, r) = rest
            .strip_prefix("psi")
            .and_then(|idx| qubit_indices(&format!("P{idx}")))
            .ok_or_else(|| CliError::Usage(format!("expected builtin:psi[m,R], got `{src}`")))?;
        return Ok(Preparation::qubit_eigenstate(m, r)?);
    }
    let text = if src.trim_start().starts_with('{') {
        src.to_string()
    } else {
        read(src)?
    };
    let v = StateFile::from_json(&text)?.state(tol)?;
    Ok(Preparation::new(v, tol)?)
}
