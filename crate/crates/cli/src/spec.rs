//! The JSON group-specification format and its validation.
//!
//! A specification carries the grading modulus, the named variables, the
//! source (and optionally target) generator matrices with entries in the
//! cyclotomic literal grammar, the grading value of each generator, and
//! optional degree/truncation options.

use serde::Deserialize;

use relequiv_core::exact::parse_cyclotomic;
use relequiv_core::group::{close_group, GeneratorInput, GradedGroup};
use relequiv_core::matrix::CycMatrix;

use crate::CliError;

pub const DEFAULT_DMAX: usize = 6;
pub const DEFAULT_MAX_ORDER: usize = 10_000;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpecFile {
    pub m: u32,
    pub variables: Vec<String>,
    pub rho_generators: Vec<Vec<Vec<String>>>,
    #[serde(default)]
    pub eta_generators: Option<Vec<Vec<Vec<String>>>>,
    pub sigma_values: Vec<u32>,
    #[serde(default)]
    pub options: SpecOptions,
}

#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecOptions {
    #[serde(default)]
    pub dmax: Option<usize>,
    #[serde(default)]
    pub k_degree_bound: Option<u32>,
    #[serde(default)]
    pub check_degree: Option<u32>,
    #[serde(default)]
    pub max_order: Option<usize>,
}

/// A parsed and validated specification, with the group not yet closed.
pub struct GroupSpec {
    pub variables: Vec<String>,
    pub m: u32,
    pub generators: Vec<GeneratorInput>,
    pub options: SpecOptions,
}

fn parse_matrix(
    raw: &[Vec<String>],
    what: &str,
    index: usize,
    expect_dim: Option<usize>,
) -> Result<CycMatrix, CliError> {
    let nrows = raw.len();
    if nrows == 0 {
        return Err(CliError::parse(format!("{what} {index}: empty matrix")));
    }
    let mut rows = Vec::with_capacity(nrows);
    for (r, row) in raw.iter().enumerate() {
        if row.len() != nrows {
            return Err(CliError::parse(format!(
                "{what} {index}: ragged or non-square matrix (row {r} has {} entries, expected {nrows})",
                row.len()
            )));
        }
        let mut entries = Vec::with_capacity(row.len());
        for (c, text) in row.iter().enumerate() {
            let value = parse_cyclotomic(text).map_err(|e| {
                CliError::parse(format!("{what} {index}, row {r}, column {c}: {e}"))
            })?;
            entries.push(value);
        }
        rows.push(entries);
    }
    if let Some(n) = expect_dim {
        if nrows != n {
            return Err(CliError::parse(format!(
                "{what} {index}: dimension {nrows} does not match the {n} declared variables"
            )));
        }
    }
    Ok(CycMatrix::from_rows(rows))
}

pub fn parse_spec(text: &str) -> Result<GroupSpec, CliError> {
    let file: GroupSpecFile = serde_json::from_str(text)
        .map_err(|e| CliError::parse(format!("invalid specification JSON: {e}")))?;
    if file.m < 1 {
        return Err(CliError::parse("grading modulus m must be >= 1".into()));
    }
    if file.variables.is_empty() {
        return Err(CliError::parse("at least one variable required".into()));
    }
    if file.rho_generators.is_empty() {
        return Err(CliError::parse("at least one generator required".into()));
    }
    if file.rho_generators.len() != file.sigma_values.len() {
        return Err(CliError::parse(format!(
            "{} source generators but {} sigma values",
            file.rho_generators.len(),
            file.sigma_values.len()
        )));
    }
    if let Some(eta) = &file.eta_generators {
        if eta.len() != file.rho_generators.len() {
            return Err(CliError::parse(format!(
                "{} source generators but {} target generators",
                file.rho_generators.len(),
                eta.len()
            )));
        }
    }
    for (i, &s) in file.sigma_values.iter().enumerate() {
        if s >= file.m {
            return Err(CliError::parse(format!(
                "sigma value {s} of generator {i} out of range for m = {}",
                file.m
            )));
        }
    }
    let n = file.variables.len();
    let mut generators = Vec::with_capacity(file.rho_generators.len());
    let mut eta_dim: Option<usize> = None;
    for (i, raw) in file.rho_generators.iter().enumerate() {
        let rho = parse_matrix(raw, "source generator", i, Some(n))?;
        let eta = match &file.eta_generators {
            Some(etas) => {
                let m = parse_matrix(&etas[i], "target generator", i, eta_dim)?;
                eta_dim = Some(m.nrows());
                Some(m)
            }
            None => None,
        };
        generators.push(GeneratorInput { rho, eta, sigma: file.sigma_values[i] });
    }
    Ok(GroupSpec {
        variables: file.variables,
        m: file.m,
        generators,
        options: file.options,
    })
}

/// Closes the group described by a validated spec.
pub fn build_group(spec: &GroupSpec, max_order: Option<usize>) -> Result<GradedGroup, CliError> {
    let bound = max_order
        .or(spec.options.max_order)
        .unwrap_or(DEFAULT_MAX_ORDER);
    close_group(&spec.generators, spec.m, bound)
        .map_err(|e| CliError::group(format!("group construction failed: {e}")))
}
