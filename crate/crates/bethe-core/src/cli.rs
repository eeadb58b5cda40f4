//! Command-line driver: JSON input schema, subcommand runners, and
//! deterministic report generation.
//!
//! All rationals travel as `"p/q"` strings and polynomials as low-to-high
//! coefficient arrays of such strings, in every payload. Reports are
//! byte-identical for identical inputs and seeds. Exit codes: 0 all-pass,
//! 1 any check failure, 2 input error.

use crate::bethe::{count_check, rationalize_verified, roots_to_tuple, solve_newton, SolveOptions};
use crate::exactmath::Poly;
use crate::fundop::{exp_kernel_checks, kernel_check_trig, xxx_frame_check, CheckReport};
use crate::gaudin::{
    canonical_limit_angles, check_weight_flip, conjecture_check, dwg_commutation_check,
    dwg_operator, verify_bethe_eigen, Sl2Tensor,
};
use crate::population::{
    check_degree_law, check_degree_weight_consistency, check_edge_involution, check_relations,
    check_weight_consistency, default_max_nodes, fold_check, generate, weyl_label, Population,
};
use crate::rational::{format_rational, parse_rational, rat_int, to_f64, Rational};
use crate::reproduce::{verify_critical_point, FamilyKind, PolyTuple, Problem, Weight};
use crate::rootdata::{fold_plan, Family, MultWeight, RootSystem, WeightVec, WeylWord};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

/// Exit status conventions shared by every subcommand.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

type CliResult<T> = Result<T, CliError>;

fn input_err<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

// ---- JSON schema ----

#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum FamilyDto {
    #[serde(rename = "TRIG")]
    Trig,
    #[serde(rename = "EXP")]
    Exp,
    #[serde(rename = "XXX")]
    Xxx { h: String },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemDto {
    #[serde(rename = "type")]
    pub rs_type: String,
    pub family: FamilyDto,
    #[serde(rename = "Lambda")]
    pub lambdas: Vec<Vec<String>>,
    pub z: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tuple: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NodeDto {
    /// 1-based reflection indices, first applied first.
    pub word: Vec<usize>,
    pub weight: Vec<String>,
    pub tuple: Vec<Vec<String>>,
    pub degrees: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PopulationDump {
    pub problem: ProblemDto,
    pub nodes: Vec<NodeDto>,
    pub failures: Vec<String>,
    pub node_count: usize,
    pub weyl_order: u64,
    pub tau_bijective: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub status: String,
    pub checks: Vec<CheckLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payload: Option<serde_json::Value>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            status: "pass".into(),
            checks: Vec::new(),
            payload: None,
        }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        if !passed {
            self.status = "fail".into();
        }
        self.checks.push(CheckLine {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn absorb(&mut self, prefix: &str, report: &CheckReport) {
        for item in &report.items {
            self.push(
                format!("{prefix}{}", item.name),
                item.passed,
                item.detail.clone(),
            );
        }
    }

    fn passed(&self) -> bool {
        self.status == "pass"
    }
}

// ---- DTO conversion ----

pub fn parse_type(s: &str) -> CliResult<RootSystem> {
    let s = s.trim();
    let (fam, rank) = s.split_at(1);
    let family = match fam {
        "A" => Family::A,
        "B" => Family::B,
        "C" => Family::C,
        "D" => Family::D,
        "E" => Family::E,
        "F" => Family::F,
        "G" => Family::G,
        _ => return Err(CliError::Input(format!("unknown type {s:?}"))),
    };
    let rank: usize = rank
        .parse()
        .map_err(|_| CliError::Input(format!("bad rank in type {s:?}")))?;
    RootSystem::make(family, rank).map_err(input_err)
}

fn parse_rat_vec(v: &[String]) -> CliResult<Vec<Rational>> {
    v.iter()
        .map(|s| parse_rational(s).map_err(input_err))
        .collect()
}

fn format_rat_vec(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn poly_to_dto(p: &Poly) -> Vec<String> {
    format_rat_vec(p.coeffs())
}

fn poly_from_dto(coeffs: &[String]) -> CliResult<Poly> {
    Ok(Poly::from_coeffs(parse_rat_vec(coeffs)?))
}

impl ProblemDto {
    pub fn to_problem(&self) -> CliResult<Problem> {
        let rs = parse_type(&self.rs_type)?;
        let family = match &self.family {
            FamilyDto::Trig => FamilyKind::Trig,
            FamilyDto::Exp => FamilyKind::Exp,
            FamilyDto::Xxx { h } => FamilyKind::Xxx {
                h: parse_rational(h).map_err(input_err)?,
            },
        };
        let lambdas = self
            .lambdas
            .iter()
            .map(|v| Ok(WeightVec(parse_rat_vec(v)?)))
            .collect::<CliResult<Vec<_>>>()?;
        let zs = parse_rat_vec(&self.z)?;
        Problem::new(rs, lambdas, zs, family).map_err(input_err)
    }

    pub fn weight(&self, problem: &Problem) -> CliResult<Weight> {
        match &problem.family {
            FamilyKind::Xxx { .. } => {
                let kappa = self
                    .kappa
                    .as_ref()
                    .ok_or_else(|| CliError::Input("XXX problems need a kappa field".into()))?;
                Ok(Weight::Mult(
                    MultWeight::new(parse_rat_vec(kappa)?).map_err(input_err)?,
                ))
            }
            _ => {
                let w = self
                    .weight
                    .as_ref()
                    .ok_or_else(|| CliError::Input("problem needs a weight field".into()))?;
                Ok(Weight::Additive(WeightVec(parse_rat_vec(w)?)))
            }
        }
    }

    pub fn tuple(&self, problem: &Problem) -> CliResult<PolyTuple> {
        match &self.tuple {
            None => Ok(PolyTuple::trivial(problem.rank())),
            Some(rows) => {
                if rows.len() != problem.rank() {
                    return Err(CliError::Input("tuple length must equal the rank".into()));
                }
                let polys = rows
                    .iter()
                    .map(|r| poly_from_dto(r))
                    .collect::<CliResult<Vec<_>>>()?;
                Ok(PolyTuple::new(polys))
            }
        }
    }
}

fn weight_to_dto(w: &Weight) -> Vec<String> {
    format_rat_vec(w.coords())
}

// ---- CLI surface ----

#[derive(Debug, Parser)]
#[command(
    name = "bethe",
    about = "Exact construction and verification of Bethe Ansatz solution populations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SolverFlags {
    /// Multistart attempts.
    #[arg(long, default_value_t = 200)]
    pub attempts: usize,
    /// Convergence tolerance on the residual.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Seed for the multistart sampling.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate the population of a tuple by BFS over simple reproductions.
    Populate {
        #[arg(long)]
        input: PathBuf,
        /// Override the family of the input problem (trig, exp, xxx).
        #[arg(long)]
        family: Option<String>,
        /// Step for the xxx family when overriding.
        #[arg(long)]
        h: Option<String>,
        /// Node budget; defaults to 4 |W| or BETHE_MAX_NODES.
        #[arg(long)]
        max_nodes: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Verify the critical-point criterion for a tuple, or re-verify every
    /// node of a population dump.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        population: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Solve the Bethe equation numerically and compare counts with the
    /// sl2 weight multiplicity.
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// Override the family of the input problem (trig, exp, xxx).
        #[arg(long)]
        family: Option<String>,
        /// Step for the xxx family when overriding.
        #[arg(long)]
        h: Option<String>,
        #[command(flatten)]
        solver: SolverFlags,
        /// Snap denominator bound for rationalization attempts.
        #[arg(long, default_value_t = 10_000)]
        max_denominator: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exact kernel / divided-Wronskian identities on a type A population.
    KernelCheck {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        population: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Bethe eigenvector checks for the sl2 trigonometric Gaudin operators.
    GaudinCheck {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        solver: SolverFlags,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Dynamical Weyl group suite: weight flip, commutation, canonical
    /// limit, and the Bethe-vector comparison pipeline.
    DwgCheck {
        #[arg(long)]
        input: PathBuf,
        /// Dominant integral lambda.
        #[arg(long)]
        lambda: u64,
        /// Large lambda for the projective limit check.
        #[arg(long, default_value_t = 10_000)]
        limit_lambda: u64,
        /// Degrees l for the conjecture pipeline (comma separated list).
        #[arg(long)]
        conjecture_l: Option<String>,
        #[command(flatten)]
        solver: SolverFlags,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Node-wise embedding of a folded population into its target.
    FoldCheck {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(report) => {
            if report.passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(CliError::Input(msg)) => {
            eprintln!("input error: {msg}");
            EXIT_INPUT_ERROR
        }
        Err(CliError::CheckFailed(msg)) => {
            eprintln!("check failed: {msg}");
            EXIT_CHECK_FAILED
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("malformed JSON in {}: {e}", path.display())))
}

fn emit(report: &Report, output: Option<&Path>) -> CliResult<()> {
    let text = serde_json::to_string_pretty(report).map_err(input_err)?;
    println!("{text}");
    if let Some(path) = output {
        std::fs::write(path, text.as_bytes())
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn dispatch(cli: Cli) -> CliResult<Report> {
    match cli.command {
        Command::Populate {
            input,
            family,
            h,
            max_nodes,
            output,
        } => {
            let report = run_populate(&input, family.as_deref(), h.as_deref(), max_nodes)?;
            emit(&report, output.as_deref())?;
            Ok(report)
        }
        Command::Verify {
            input,
            population,
            output,
        } => {
            let report = run_verify(&input, population.as_deref())?;
            emit(&report, output.as_deref())?;
            Ok(report)
        }
        Command::Solve {
            input,
            family,
            h,
            solver,
            max_denominator,
            output,
        } => {
            let report = run_solve(
                &input,
                family.as_deref(),
                h.as_deref(),
                &solver,
                max_denominator,
            )?;
            emit(&report, output.as_deref())?;
            Ok(report)
        }
        Command::KernelCheck {
            input,
            population,
            output,
        } => {
            let report = run_kernel_check(&input, &population)?;
            emit(&report, output.as_deref())?;
            Ok(report)
        }
        Command::GaudinCheck {
            input,
            solver,
            output,
        } => {
            let report = run_gaudin_check(&input, &solver)?;
            emit(&report, output.as_deref())?;
            Ok(report)
        }
        Command::DwgCheck {
            input,
            lambda,
            limit_lambda,
            conjecture_l,
            solver,
            output,
        } => {
            let ls = match conjecture_l {
                None => Vec::new(),
                Some(s) => s
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| CliError::Input(format!("bad l value {t:?}")))
                    })
                    .collect::<CliResult<Vec<_>>>()?,
            };
            let report = run_dwg_check(&input, lambda, limit_lambda, &ls, &solver)?;
            emit(&report, output.as_deref())?;
            Ok(report)
        }
        Command::FoldCheck {
            source,
            target,
            output,
        } => {
            let report = run_fold_check(&source, &target)?;
            emit(&report, output.as_deref())?;
            Ok(report)
        }
    }
}

fn family_override(dto: &mut ProblemDto, family: Option<&str>, h: Option<&str>) -> CliResult<()> {
    let Some(name) = family else {
        return Ok(());
    };
    dto.family = match name.to_ascii_lowercase().as_str() {
        "trig" => FamilyDto::Trig,
        "exp" => FamilyDto::Exp,
        "xxx" => FamilyDto::Xxx {
            h: h.unwrap_or("1/1").to_string(),
        },
        other => return Err(CliError::Input(format!("unknown family {other:?}"))),
    };
    Ok(())
}

fn max_nodes_for(problem: &Problem, flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("BETHE_MAX_NODES")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or_else(|| default_max_nodes(problem))
}

/// Builds the dump payload of a generated population.
pub fn population_dump(
    dto: &ProblemDto,
    problem: &Problem,
    pop: &Population,
) -> CliResult<PopulationDump> {
    let label = weyl_label(problem, pop).map_err(input_err)?;
    let nodes = pop
        .nodes
        .iter()
        .map(|n| NodeDto {
            word: n.word.0.iter().map(|i| i + 1).collect(),
            weight: weight_to_dto(&n.weight),
            tuple: n.tuple.0.iter().map(poly_to_dto).collect(),
            degrees: n.tuple.degrees(),
        })
        .collect();
    Ok(PopulationDump {
        problem: dto.clone(),
        nodes,
        failures: pop
            .failures
            .iter()
            .map(|f| format!("node {} direction {}: {}", f.node, f.direction + 1, f.error))
            .collect(),
        node_count: pop.len(),
        weyl_order: label.weyl_order as u64,
        tau_bijective: label.bijective,
    })
}

pub fn run_populate(
    input: &Path,
    family: Option<&str>,
    h: Option<&str>,
    max_nodes: Option<usize>,
) -> CliResult<Report> {
    let dto: ProblemDto = read_json(input)?;
    populate_report(dto, family, h, max_nodes)
}

/// DTO-level populate runner, shared by the CLI and the Python bindings.
pub fn populate_report(
    mut dto: ProblemDto,
    family: Option<&str>,
    h: Option<&str>,
    max_nodes: Option<usize>,
) -> CliResult<Report> {
    family_override(&mut dto, family, h)?;
    let problem = dto.to_problem()?;
    let weight = dto.weight(&problem)?;
    let start = dto.tuple(&problem)?;
    let budget = max_nodes_for(&problem, max_nodes);
    let pop = generate(&problem, start, weight, budget).map_err(input_err)?;
    let dump = population_dump(&dto, &problem, &pop)?;

    let mut report = Report::new("populate");
    report.push(
        "closure",
        pop.is_closed(),
        format!("{} nodes, {} failures", pop.len(), pop.failures.len()),
    );
    report.push(
        "tau_bijective",
        dump.tau_bijective,
        format!("|W| = {}", dump.weyl_order),
    );
    let relations = check_relations(&problem, &pop);
    report.push(
        "relations",
        relations.passed(),
        format!("{} relations checked", relations.checked),
    );
    report.push(
        "degree_law",
        check_degree_law(&problem, &pop).is_ok(),
        "degree law on every edge",
    );
    report.push(
        "edge_involution",
        check_edge_involution(&pop).is_ok(),
        "following a direction twice returns",
    );
    report.push(
        "weight_consistency",
        check_weight_consistency(&problem, &pop).is_ok(),
        "node weights equal transported base weight",
    );
    if matches!(problem.family, FamilyKind::Trig | FamilyKind::Exp) {
        report.push(
            "degree_weight_consistency",
            check_degree_weight_consistency(&problem, &pop).is_ok(),
            "weight at infinity from degrees matches transport",
        );
    }
    report.payload = Some(serde_json::to_value(&dump).map_err(input_err)?);
    Ok(report)
}

pub fn run_verify(input: &Path, population: Option<&Path>) -> CliResult<Report> {
    let dto: ProblemDto = read_json(input)?;
    let dump = match population {
        Some(path) => Some(read_json(path)?),
        None => None,
    };
    verify_report(dto, dump)
}

/// DTO-level verify runner.
pub fn verify_report(dto: ProblemDto, population: Option<PopulationDump>) -> CliResult<Report> {
    let problem = dto.to_problem()?;
    let mut report = Report::new("verify");
    match population {
        None => {
            let weight = dto.weight(&problem)?;
            let tuple = dto.tuple(&problem)?;
            let degrees = tuple.degrees();
            let verdict = verify_critical_point(&problem, &tuple, &weight, &degrees);
            let detail = format!("{verdict:?}");
            report.push("critical_point", verdict.is_critical(), detail);
        }
        Some(dump) => {
            let pop_problem = dump.problem.to_problem()?;
            let base_weight = dump.problem.weight(&pop_problem)?;
            for (idx, node) in dump.nodes.iter().enumerate() {
                let tuple = PolyTuple::new(
                    node.tuple
                        .iter()
                        .map(|r| poly_from_dto(r))
                        .collect::<CliResult<Vec<_>>>()?,
                );
                let word = WeylWord(node.word.iter().map(|i| i - 1).collect());
                let mut weight = base_weight.clone();
                for &i in &word.0 {
                    weight = pop_problem.reflect_weight(i, &weight).map_err(input_err)?;
                }
                let recorded = parse_rat_vec(&node.weight)?;
                let weight_ok = weight.coords() == recorded.as_slice();
                let verdict = verify_critical_point(&pop_problem, &tuple, &weight, &node.degrees);
                report.push(
                    format!("node_{idx}"),
                    verdict.is_critical() && weight_ok,
                    format!("weight transported: {weight_ok}, verdict: {verdict:?}"),
                );
            }
        }
    }
    Ok(report)
}

pub fn run_solve(
    input: &Path,
    family: Option<&str>,
    h: Option<&str>,
    solver: &SolverFlags,
    max_denominator: u64,
) -> CliResult<Report> {
    let mut dto: ProblemDto = read_json(input)?;
    family_override(&mut dto, family, h)?;
    solve_report(dto, solver, max_denominator)
}

/// DTO-level solve runner.
pub fn solve_report(
    dto: ProblemDto,
    solver: &SolverFlags,
    max_denominator: u64,
) -> CliResult<Report> {
    let problem = dto.to_problem()?;
    let weight = dto.weight(&problem)?;
    let l = dto
        .l
        .clone()
        .ok_or_else(|| CliError::Input("solve needs an l field (degrees)".into()))?;
    if l.len() != problem.rank() {
        return Err(CliError::Input("l length must equal the rank".into()));
    }
    let opts = SolveOptions {
        attempts: solver.attempts,
        tol: solver.tol,
        seed: solver.seed,
        ..SolveOptions::default()
    };
    let solutions = solve_newton(&problem, &weight, &l, &opts);
    let mut report = Report::new("solve");
    report.push(
        "solutions",
        true,
        format!("{} distinct orbit representatives", solutions.len()),
    );
    if problem.rank() == 1 {
        let count = count_check(&problem, &weight, l[0], &opts).map_err(input_err)?;
        report.push(
            "count_vs_multiplicity",
            count.within_bound,
            format!(
                "found {} of multiplicity {} (match: {}); condition numbers {:?}",
                count.found, count.multiplicity, count.matches, count.condition_numbers
            ),
        );
    }
    let mut payload = Vec::new();
    for sol in &solutions {
        let coords: Vec<Vec<[f64; 2]>> = sol
            .coords
            .iter()
            .map(|color| color.iter().map(|c| [c.re, c.im]).collect())
            .collect();
        let floats = roots_to_tuple(sol);
        let rationalized: Option<Vec<Vec<String>>> =
            rationalize_verified(&problem, &weight, &l, &floats, max_denominator, 1e-6)
                .ok()
                .map(|t| t.0.iter().map(poly_to_dto).collect());
        payload.push(serde_json::json!({
            "coords": coords,
            "rationalized": rationalized,
        }));
    }
    report.payload = Some(serde_json::Value::Array(payload));
    Ok(report)
}

pub fn run_kernel_check(input: &Path, population: &Path) -> CliResult<Report> {
    let dto: ProblemDto = read_json(input)?;
    let dump: PopulationDump = read_json(population)?;
    kernel_check_report(dto, dump)
}

/// DTO-level kernel-check runner.
pub fn kernel_check_report(dto: ProblemDto, dump: PopulationDump) -> CliResult<Report> {
    let problem = dto.to_problem()?;
    let pop = rebuild_population(&problem, &dump)?;
    let mut report = Report::new("kernel-check");
    let checks = match problem.family {
        FamilyKind::Trig => kernel_check_trig(&problem, &pop),
        FamilyKind::Exp => exp_kernel_checks(&problem, &pop),
        FamilyKind::Xxx { .. } => xxx_frame_check(&problem, &pop),
    }
    .map_err(input_err)?;
    report.absorb("", &checks);
    Ok(report)
}

/// Regenerates the population from the dump's base node so that the edge
/// structure is available; asserts the dump nodes agree with the rebuilt
/// ones.
fn rebuild_population(problem: &Problem, dump: &PopulationDump) -> CliResult<Population> {
    let base_weight = dump.problem.weight(problem)?;
    let base_tuple = match dump.nodes.first() {
        Some(node) => PolyTuple::new(
            node.tuple
                .iter()
                .map(|r| poly_from_dto(r))
                .collect::<CliResult<Vec<_>>>()?,
        ),
        None => return Err(CliError::Input("population dump has no nodes".into())),
    };
    let pop = generate(
        problem,
        base_tuple,
        base_weight,
        4 * dump.nodes.len().max(2),
    )
    .map_err(input_err)?;
    if pop.len() != dump.nodes.len() {
        return Err(CliError::Input(format!(
            "dump has {} nodes but regeneration gives {}",
            dump.nodes.len(),
            pop.len()
        )));
    }
    Ok(pop)
}

pub fn run_gaudin_check(input: &Path, solver: &SolverFlags) -> CliResult<Report> {
    let dto: ProblemDto = read_json(input)?;
    gaudin_check_report(dto, solver)
}

/// DTO-level gaudin-check runner.
pub fn gaudin_check_report(dto: ProblemDto, solver: &SolverFlags) -> CliResult<Report> {
    let problem = dto.to_problem()?;
    let weight = dto.weight(&problem)?;
    let l = dto
        .l
        .clone()
        .ok_or_else(|| CliError::Input("gaudin-check needs an l field".into()))?;
    let opts = SolveOptions {
        attempts: solver.attempts,
        tol: solver.tol,
        seed: solver.seed,
        ..SolveOptions::default()
    };
    let solutions = solve_newton(&problem, &weight, &l, &opts);
    let mut report = Report::new("gaudin-check");
    report.push(
        "solutions",
        !solutions.is_empty(),
        format!("{} Bethe solutions", solutions.len()),
    );
    for (k, sol) in solutions.iter().enumerate() {
        match verify_bethe_eigen(&problem, &weight, sol) {
            Err(e) => report.push(format!("eigenvector_{k}"), false, e.to_string()),
            Ok(rep) => {
                let worst = rep.residuals.iter().cloned().fold(0.0, f64::max);
                report.push(
                    format!("eigenvector_{k}"),
                    worst <= 1e-8,
                    format!(
                        "max relative residual {worst:.3e}; eigenvalues {:?}",
                        rep.eigenvalues
                            .iter()
                            .map(|c| format!("{:.6}+{:.6}i", c.re, c.im))
                            .collect::<Vec<_>>()
                    ),
                );
            }
        }
    }
    Ok(report)
}

pub fn run_dwg_check(
    input: &Path,
    lambda: u64,
    limit_lambda: u64,
    conjecture_l: &[usize],
    solver: &SolverFlags,
) -> CliResult<Report> {
    let dto: ProblemDto = read_json(input)?;
    dwg_check_report(dto, lambda, limit_lambda, conjecture_l, solver)
}

/// DTO-level dwg-check runner.
pub fn dwg_check_report(
    dto: ProblemDto,
    lambda: u64,
    limit_lambda: u64,
    conjecture_l: &[usize],
    solver: &SolverFlags,
) -> CliResult<Report> {
    let problem = dto.to_problem()?;
    if problem.rank() != 1 {
        return Err(CliError::Input("dwg-check requires an sl2 problem".into()));
    }
    let lambdas: Vec<u32> = problem
        .lambdas
        .iter()
        .map(|w| w.0[0].to_integer().try_into().expect("small weight"))
        .collect();
    let tensor = Sl2Tensor::new(lambdas);
    let zs: Vec<f64> = problem.zs.iter().map(to_f64).collect();
    let lam_rat = rat_int(lambda as i64);
    let mut report = Report::new("dwg-check");

    let a = dwg_operator(&tensor, &lam_rat).map_err(input_err)?;
    report.push(
        "weight_flip",
        check_weight_flip(&tensor, &a),
        "A maps V[nu] into V[-nu] exactly",
    );
    let res = dwg_commutation_check(&tensor, &zs, &lam_rat).map_err(input_err)?;
    report.push(
        "commutation",
        res <= 1e-10,
        format!("max relative residual {res:.3e}"),
    );
    let angles =
        canonical_limit_angles(&tensor, &rat_int(limit_lambda as i64)).map_err(input_err)?;
    let worst_angle = angles.iter().cloned().fold(0.0, f64::max);
    report.push(
        "canonical_limit",
        worst_angle <= 1e-3,
        format!("max column angle {worst_angle:.3e} at lambda = {limit_lambda}"),
    );
    let opts = SolveOptions {
        attempts: solver.attempts,
        tol: solver.tol,
        seed: solver.seed,
        ..SolveOptions::default()
    };
    for &l in conjecture_l {
        match conjecture_check(&problem, lambda as u32, l, &opts) {
            Err(e) => report.push(format!("conjecture_l{l}"), false, e.to_string()),
            Ok(cases) => {
                for (k, case) in cases.iter().enumerate() {
                    report.push(
                        format!("conjecture_l{l}_case{k}"),
                        case.sine <= 1e-6,
                        format!(
                            "sine angle {:.3e}, descendant off-diagonal: {}",
                            case.sine, case.descendant_off_diagonal
                        ),
                    );
                }
            }
        }
    }
    Ok(report)
}

pub fn run_fold_check(source: &Path, target: &Path) -> CliResult<Report> {
    let src_dump: PopulationDump = read_json(source)?;
    let tgt_dump: PopulationDump = read_json(target)?;
    fold_check_report(src_dump, tgt_dump)
}

/// DTO-level fold-check runner.
pub fn fold_check_report(src_dump: PopulationDump, tgt_dump: PopulationDump) -> CliResult<Report> {
    let src_problem = src_dump.problem.to_problem()?;
    let tgt_problem = tgt_dump.problem.to_problem()?;
    let plan = fold_plan(&src_problem.rs).map_err(input_err)?;
    if plan.target.family() != tgt_problem.rs.family() {
        return Err(CliError::Input(format!(
            "target dump type does not match the folding target {:?}",
            plan.target.family()
        )));
    }
    let src = rebuild_population(&src_problem, &src_dump)?;
    let tgt = rebuild_population(&tgt_problem, &tgt_dump)?;
    let fold = fold_check(&plan, &src, &tgt);
    let mut report = Report::new("fold-check");
    report.push(
        "embedding",
        fold.passed(),
        format!(
            "{} source nodes checked, {} violations",
            fold.checked,
            fold.violations.len()
        ),
    );
    for v in &fold.violations {
        report.push(format!("node_{}", v.node), false, v.detail.clone());
    }
    Ok(report)
}
