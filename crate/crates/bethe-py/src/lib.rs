//! Python bindings for the Bethe population engine: the JSON problem
//! schema and the subcommand pipelines, plus a few exact scalar helpers.
//!
//! All reports come back as JSON strings in the same schema the CLI
//! prints; rationals travel as `"p/q"` strings.

// pyo3's generated glue trips useless_conversion on current clippy
#![allow(clippy::useless_conversion)]

use bethe_core::bethe::weight_multiplicity_sl2;
use bethe_core::cli::{
    dwg_check_report, fold_check_report, gaudin_check_report, kernel_check_report, parse_type,
    populate_report, solve_report, verify_report, CliError, PopulationDump, ProblemDto, Report,
    SolverFlags,
};
use bethe_core::exactmath::{wronskian2, Poly};
use bethe_core::rational::{format_rational, parse_rational};
use bethe_core::rootdata::WeightVec;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn to_py_err(e: CliError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn report_to_string(report: Report) -> PyResult<String> {
    serde_json::to_string_pretty(&report).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn parse_problem(problem_json: &str) -> PyResult<ProblemDto> {
    serde_json::from_str(problem_json)
        .map_err(|e| PyValueError::new_err(format!("malformed problem JSON: {e}")))
}

fn parse_dump(dump_json: &str) -> PyResult<PopulationDump> {
    serde_json::from_str(dump_json)
        .map_err(|e| PyValueError::new_err(format!("malformed population dump: {e}")))
}

fn solver_flags(attempts: usize, tol: f64, seed: u64) -> SolverFlags {
    SolverFlags {
        attempts,
        tol,
        seed,
    }
}

/// Generate the population of a tuple; returns the populate report with the
/// dump under `payload`.
#[pyfunction]
#[pyo3(signature = (problem_json, max_nodes=None))]
fn populate(problem_json: &str, max_nodes: Option<usize>) -> PyResult<String> {
    let dto = parse_problem(problem_json)?;
    let report = populate_report(dto, None, None, max_nodes).map_err(to_py_err)?;
    report_to_string(report)
}

/// Verify the critical-point criterion for a tuple, or for every node of a
/// population dump.
#[pyfunction]
#[pyo3(signature = (problem_json, population_json=None))]
fn verify(problem_json: &str, population_json: Option<&str>) -> PyResult<String> {
    let dto = parse_problem(problem_json)?;
    let dump = population_json.map(parse_dump).transpose()?;
    let report = verify_report(dto, dump).map_err(to_py_err)?;
    report_to_string(report)
}

/// Multistart Newton solve with the count check against the sl2 weight
/// multiplicity.
#[pyfunction]
#[pyo3(signature = (problem_json, attempts=200, tol=1e-10, seed=0, max_denominator=10_000))]
fn solve(
    problem_json: &str,
    attempts: usize,
    tol: f64,
    seed: u64,
    max_denominator: u64,
) -> PyResult<String> {
    let dto = parse_problem(problem_json)?;
    let report = solve_report(dto, &solver_flags(attempts, tol, seed), max_denominator)
        .map_err(to_py_err)?;
    report_to_string(report)
}

/// Exact kernel / divided-Wronskian identities on a type A population dump.
#[pyfunction]
fn kernel_check(problem_json: &str, population_json: &str) -> PyResult<String> {
    let dto = parse_problem(problem_json)?;
    let dump = parse_dump(population_json)?;
    let report = kernel_check_report(dto, dump).map_err(to_py_err)?;
    report_to_string(report)
}

/// Bethe eigenvector checks for the sl2 trigonometric Gaudin operators.
#[pyfunction]
#[pyo3(signature = (problem_json, attempts=200, tol=1e-10, seed=0))]
fn gaudin_check(problem_json: &str, attempts: usize, tol: f64, seed: u64) -> PyResult<String> {
    let dto = parse_problem(problem_json)?;
    let report = gaudin_check_report(dto, &solver_flags(attempts, tol, seed)).map_err(to_py_err)?;
    report_to_string(report)
}

/// Dynamical Weyl group suite at a dominant integral lambda.
#[pyfunction]
#[pyo3(signature = (problem_json, lambda_, limit_lambda=10_000, conjecture_l=None, attempts=200, tol=1e-10, seed=0))]
fn dwg_check(
    problem_json: &str,
    lambda_: u64,
    limit_lambda: u64,
    conjecture_l: Option<Vec<usize>>,
    attempts: usize,
    tol: f64,
    seed: u64,
) -> PyResult<String> {
    let dto = parse_problem(problem_json)?;
    let report = dwg_check_report(
        dto,
        lambda_,
        limit_lambda,
        &conjecture_l.unwrap_or_default(),
        &solver_flags(attempts, tol, seed),
    )
    .map_err(to_py_err)?;
    report_to_string(report)
}

/// Node-wise embedding of a folded population dump into its target dump.
#[pyfunction]
fn fold_check(source_json: &str, target_json: &str) -> PyResult<String> {
    let src = parse_dump(source_json)?;
    let tgt = parse_dump(target_json)?;
    let report = fold_check_report(src, tgt).map_err(to_py_err)?;
    report_to_string(report)
}

/// Cartan matrix, symmetrizer and Weyl group order of a named root system,
/// e.g. "B2".
#[pyfunction]
fn root_system(rs_type: &str) -> PyResult<(Vec<Vec<i64>>, Vec<i64>, u64)> {
    let rs = parse_type(rs_type).map_err(to_py_err)?;
    let order = rs
        .weyl_order()
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((
        rs.cartan().to_vec(),
        rs.symmetrizer().to_vec(),
        order as u64,
    ))
}

/// Shifted Weyl reflection `s_i . lambda` in coroot coordinates
/// ("p/q" strings, 1-based direction).
#[pyfunction]
fn reflect_shifted(rs_type: &str, direction: usize, coords: Vec<String>) -> PyResult<Vec<String>> {
    let rs = parse_type(rs_type).map_err(to_py_err)?;
    if direction == 0 || direction > rs.rank() {
        return Err(PyValueError::new_err("direction out of range"));
    }
    let lam = WeightVec(
        coords
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| PyValueError::new_err(e.to_string()))?,
    );
    let image = rs.reflect_shifted(direction - 1, &lam);
    Ok(image.0.iter().map(format_rational).collect())
}

/// Exact two-argument Wronskian `W(f, g) = f' g - f g'` on low-to-high
/// "p/q" coefficient lists.
#[pyfunction]
fn wronskian(f: Vec<String>, g: Vec<String>) -> PyResult<Vec<String>> {
    let parse = |v: &[String]| -> PyResult<Poly> {
        Ok(Poly::from_coeffs(
            v.iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| PyValueError::new_err(e.to_string()))?,
        ))
    };
    let w = wronskian2(&parse(&f)?, &parse(&g)?);
    Ok(w.coeffs().iter().map(format_rational).collect())
}

/// Dimension of the weight subspace of an sl2 tensor product:
/// the number of `(m_1..m_n)` with `0 <= m_s <= lambdas[s]`, `sum m_s = l`.
#[pyfunction]
fn weight_multiplicity(lambdas: Vec<u32>, l: usize) -> u64 {
    weight_multiplicity_sl2(&lambdas, l)
}

#[pymodule]
fn bethe_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(populate, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_check, m)?)?;
    m.add_function(wrap_pyfunction!(gaudin_check, m)?)?;
    m.add_function(wrap_pyfunction!(dwg_check, m)?)?;
    m.add_function(wrap_pyfunction!(fold_check, m)?)?;
    m.add_function(wrap_pyfunction!(root_system, m)?)?;
    m.add_function(wrap_pyfunction!(reflect_shifted, m)?)?;
    m.add_function(wrap_pyfunction!(wronskian, m)?)?;
    m.add_function(wrap_pyfunction!(weight_multiplicity, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
