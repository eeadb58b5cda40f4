//! Kernel theory of the fundamental differential/difference operator for
//! type A populations: kernel bases extracted from staircase descendants,
//! divided-Wronskian reconstruction, kernel-shape and exponent checks, and
//! the discrete frame divisibility.
//!
//! The operator itself is never composed with rational-function
//! coefficients; everything in scope is equivalent to exact Wronskian
//! identities on the kernel basis.

use crate::exactmath::{
    discrete_wronskian_scaled, divided_wronskian, exp_wronskian, qwronskian, solve_square,
    ExactError, ExpPoly, Poly, QPoly,
};
use crate::population::Population;
use crate::rational::{rat_int, Rational};
use crate::reproduce::{FamilyKind, Problem};
use crate::rootdata::{Family, RootSystem, WeightVec};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FundopError {
    #[error("population is not closed along the staircase words (missing node at word {0:?})")]
    MissingNode(Vec<usize>),
    #[error("operation requires a type A population of the {0} family")]
    WrongFamily(String),
    #[error("cartan matrix is singular; alpha-coordinates are undefined")]
    SingularCartan,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// One named exact check with its verdict.
#[derive(Debug, Clone)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A list of named checks; passes iff every item passes.
#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.items.extend(other.items);
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

/// Coordinates of `lambda_base - lambda_node` in the simple-root basis:
/// solves `A^T a = m(base) - m(node)` exactly.
pub fn alpha_coordinates(
    rs: &RootSystem,
    base: &WeightVec,
    node: &WeightVec,
) -> Result<Vec<Rational>, FundopError> {
    let r = rs.rank();
    let a_t: Vec<Vec<Rational>> = (0..r)
        .map(|j| (0..r).map(|i| rat_int(rs.a(j, i))).collect())
        .collect();
    let rhs: Vec<Rational> = (0..r).map(|j| &base.0[j] - &node.0[j]).collect();
    solve_square(&a_t, &rhs).ok_or(FundopError::SingularCartan)
}

fn require_type_a(
    problem: &Problem,
    label: &str,
    want_xxx: bool,
    want_exp: bool,
) -> Result<usize, FundopError> {
    let ok_family = match &problem.family {
        FamilyKind::Trig => !want_xxx && !want_exp,
        FamilyKind::Exp => want_exp,
        FamilyKind::Xxx { .. } => want_xxx,
    };
    match problem.rs.family() {
        Some((Family::A, n)) if ok_family => Ok(n),
        _ => Err(FundopError::WrongFamily(label.into())),
    }
}

/// The staircase node for the k-th kernel element (1-based `k`): the
/// descendant of the base in directions `(k-1, k-2, ..., 1)`.
fn staircase_node(pop: &Population, k: usize) -> Result<usize, FundopError> {
    let word: Vec<usize> = (0..k.saturating_sub(1)).rev().collect();
    pop.node_by_word(&word)
        .ok_or(FundopError::MissingNode(word))
}

/// Kernel basis of the fundamental differential operator of a closed type A
/// trigonometric population: `u_k = x^{a_1(lambda_node)} y_1(node_k)` where
/// `node_k` is the `(k-1, ..., 1)`-staircase descendant.
pub fn kernel_basis(problem: &Problem, pop: &Population) -> Result<Vec<QPoly>, FundopError> {
    let n = require_type_a(problem, "trigonometric", false, false)?;
    let base = pop.nodes[0]
        .weight
        .as_additive()
        .ok_or_else(|| FundopError::WrongFamily("trigonometric".into()))?
        .clone();
    let mut us = Vec::with_capacity(n + 1);
    for k in 1..=n + 1 {
        let node = staircase_node(pop, k)?;
        let lam_node = pop.nodes[node].weight.as_additive().unwrap();
        let a = alpha_coordinates(&problem.rs, &base, lam_node)?;
        us.push(QPoly::new(a[0].clone(), pop.nodes[node].tuple.0[0].clone()));
    }
    Ok(us)
}

/// `(lambda, alpha_j)` for all j, the divisor exponents of the divided
/// Wronskians.
fn lambda_alpha(problem: &Problem, lam: &WeightVec) -> Vec<Rational> {
    (0..problem.rank())
        .map(|j| problem.rs.weight_pairing(lam, j))
        .collect()
}

/// Reconstruction check: the divided Wronskian of the first `i` kernel
/// elements is proportional to `y_i` (exponent zero), and the full one is a
/// nonzero constant.
pub fn verify_reconstruction(problem: &Problem, pop: &Population, us: &[QPoly]) -> CheckReport {
    let mut report = CheckReport::default();
    let n = problem.rank();
    let lam = pop.nodes[0].weight.as_additive().unwrap();
    let exps = lambda_alpha(problem, lam);
    let ts: Vec<Poly> = (0..n).map(|j| problem.build_t(j)).collect();
    for i in 1..=n + 1 {
        let name = format!("divided_wronskian_{i}");
        match divided_wronskian(&us[..i], &exps, &ts) {
            Err(e) => report.push(name, false, format!("division failed: {e}")),
            Ok(w) => {
                if i <= n {
                    let expected = QPoly::from_poly(pop.nodes[0].tuple.0[i - 1].clone());
                    let ok = w.proportional(&expected);
                    report.push(
                        name,
                        ok,
                        if ok {
                            format!("divided Wronskian of u_1..u_{i} is proportional to y_{i}")
                        } else {
                            format!("got {w}, expected proportional to {expected}")
                        },
                    );
                } else {
                    let ok = !w.is_zero() && w.exponent.is_zero() && w.part.degree() == Some(0);
                    report.push(
                        name,
                        ok,
                        if ok {
                            "full divided Wronskian is a nonzero constant".to_string()
                        } else {
                            format!("got {w}, expected nonzero constant")
                        },
                    );
                }
            }
        }
    }
    report
}

/// Kernel shape: exponents `(lambda + rho, alpha_1 + ... + alpha_{k-1})`,
/// part degrees `deg y_1 + (Lambda_inf, alpha_1 + ... + alpha_{k-1})`, and
/// `p_k(0) != 0`.
pub fn kernel_shape_check(problem: &Problem, pop: &Population, us: &[QPoly]) -> CheckReport {
    let mut report = CheckReport::default();
    let rs = &problem.rs;
    let lam = pop.nodes[0].weight.as_additive().unwrap();
    let degrees = pop.nodes[0].tuple.degrees();
    let lam_inf = rs.lambda_infinity(&problem.lambdas, &degrees);
    let deg_y1 = degrees[0] as i64;
    let mut exp_expect = Rational::zero();
    let mut deg_shift = Rational::zero();
    for (k, u) in us.iter().enumerate() {
        // partial sums over alpha_1 .. alpha_k (0-based k)
        if k > 0 {
            let j = k - 1;
            exp_expect += &(&lam.0[j] + &Rational::one()) * rat_int(rs.d(j));
            deg_shift += rs.weight_pairing(&lam_inf, j);
        }
        let name = format!("kernel_shape_u{}", k + 1);
        let exp_ok = u.exponent == exp_expect;
        let expected_deg = rat_int(deg_y1) + deg_shift.clone();
        let deg_ok = rat_int(u.part.degree_i64()) == expected_deg;
        let base_ok = !u.part.is_zero() && !u.part.eval(&Rational::zero()).is_zero();
        report.push(
            name,
            exp_ok && deg_ok && base_ok,
            format!(
                "exponent {} (expected {}), part degree {:?} (expected {}), p(0) != 0: {}",
                u.exponent,
                exp_expect,
                u.part.degree(),
                expected_deg,
                base_ok
            ),
        );
    }
    report
}

/// Full Wronskian product formula:
/// `W(u_1, ..., u_{N+1}) = const * prod_s (x^{(lambda, alpha_s)} T_s)^{N+1-s}`.
pub fn full_wronskian_check(problem: &Problem, pop: &Population, us: &[QPoly]) -> CheckReport {
    let mut report = CheckReport::default();
    let n = problem.rank();
    let lam = pop.nodes[0].weight.as_additive().unwrap();
    let w = qwronskian(us);
    let mut exponent = Rational::zero();
    let mut part = Poly::one();
    for s in 0..n {
        let mult = (n - s) as u32; // N + 1 - (s+1)
        exponent += &problem.rs.weight_pairing(lam, s) * rat_int(mult as i64);
        part = &part * &problem.build_t(s).pow(mult);
    }
    let expected = QPoly::new(exponent, part);
    let ok = w.proportional(&expected);
    report.push(
        "full_wronskian_product",
        ok,
        if ok {
            "W(u_1..u_{N+1}) matches the T-product up to scalar".to_string()
        } else {
            format!("got {w}, expected proportional to {expected}")
        },
    );
    report
}

/// All trigonometric kernel checks bundled: basis extraction,
/// reconstruction, shapes, product formula, and the second-order operator
/// identity on every edge.
pub fn kernel_check_trig(problem: &Problem, pop: &Population) -> Result<CheckReport, FundopError> {
    let us = kernel_basis(problem, pop)?;
    let mut report = CheckReport::default();
    report.merge(verify_reconstruction(problem, pop, &us));
    report.merge(kernel_shape_check(problem, pop, &us));
    report.merge(full_wronskian_check(problem, pop, &us));
    report.merge(operator_edge_check(problem, pop)?);
    Ok(report)
}

/// Exponential-family mirror of the kernel checks: kernel elements
/// `e^{a_1 x} y_1(node_k)` with plain-action alpha-coordinates, divided by
/// `e^{...} prod T_j^{i-j}`.
pub fn exp_kernel_checks(problem: &Problem, pop: &Population) -> Result<CheckReport, FundopError> {
    let n = require_type_a(problem, "exponential", false, true)?;
    let base = pop.nodes[0].weight.as_additive().unwrap().clone();
    let mut us: Vec<ExpPoly> = Vec::with_capacity(n + 1);
    for k in 1..=n + 1 {
        let node = staircase_node(pop, k)?;
        let lam_node = pop.nodes[node].weight.as_additive().unwrap();
        let a = alpha_coordinates(&problem.rs, &base, lam_node)?;
        us.push(ExpPoly::new(
            a[0].clone(),
            pop.nodes[node].tuple.0[0].clone(),
        ));
    }

    let mut report = CheckReport::default();
    let exps = lambda_alpha(problem, &base);
    let lam_inf = problem
        .rs
        .lambda_infinity(&problem.lambdas, &pop.nodes[0].tuple.degrees());
    let deg_y1 = pop.nodes[0].tuple.degrees()[0] as i64;

    // kernel shape: rates (lambda, alpha_1 + .. + alpha_{k-1}) and degrees
    let mut rate_expect = Rational::zero();
    let mut deg_shift = Rational::zero();
    for (k, u) in us.iter().enumerate() {
        if k > 0 {
            rate_expect += &exps[k - 1];
            deg_shift += problem.rs.weight_pairing(&lam_inf, k - 1);
        }
        let rate_ok = u.rate == rate_expect;
        let deg_ok = rat_int(u.part.degree_i64()) == rat_int(deg_y1) + deg_shift.clone();
        report.push(
            format!("exp_kernel_shape_u{}", k + 1),
            rate_ok && deg_ok,
            format!("rate {} (expected {rate_expect})", u.rate),
        );
    }

    // divided Wronskians reproduce y_i
    for i in 1..=n + 1 {
        let w = exp_wronskian(&us[..i]);
        let mut div_rate = Rational::zero();
        let mut div_poly = Poly::one();
        for (j, ej) in exps.iter().enumerate().take(i - 1) {
            let mult = (i - 1 - j) as u32;
            div_rate += ej * &rat_int(mult as i64);
            div_poly = &div_poly * &problem.build_t(j).pow(mult);
        }
        let name = format!("exp_divided_wronskian_{i}");
        if w.rate != div_rate {
            report.push(name, false, "rate mismatch in divided Wronskian");
            continue;
        }
        match w.part.divide_exact(&div_poly) {
            Err(e) => report.push(name, false, format!("division failed: {e}")),
            Ok(q) => {
                let ok = if i <= n {
                    q.monicize() == pop.nodes[0].tuple.0[i - 1]
                } else {
                    q.degree() == Some(0)
                };
                report.push(
                    name,
                    ok,
                    if ok {
                        "quotient proportional to y_i".to_string()
                    } else {
                        format!("quotient {q} not proportional to expected polynomial")
                    },
                );
            }
        }
    }
    Ok(report)
}

/// Discrete (XXX) frame divisibility: the scaled discrete Wronskians of the
/// kernel elements, divided by the `T^(h)`-shift products of the frame, must
/// divide exactly and reproduce `y_i` up to scalar. Divisibility direction
/// only; frame maximality is out of scope.
pub fn xxx_frame_check(problem: &Problem, pop: &Population) -> Result<CheckReport, FundopError> {
    let n = require_type_a(problem, "difference", true, false)?;
    let FamilyKind::Xxx { h } = problem.family.clone() else {
        unreachable!()
    };
    let base = pop.nodes[0].weight.as_mult().unwrap().clone();

    // row k: polynomial part y_1(node_k) with multiplicative scale
    // prod_{j<k} kappa_j^{d_j}, standing for e^{(lambda, alpha_1+..+alpha_{k-1}) h}
    let mut rows: Vec<(Poly, Rational)> = Vec::with_capacity(n + 1);
    let mut scale = Rational::one();
    for k in 1..=n + 1 {
        if k > 1 {
            let j = k - 2;
            for _ in 0..problem.rs.d(j) {
                scale *= &base.0[j];
            }
        }
        let node = staircase_node(pop, k)?;
        rows.push((pop.nodes[node].tuple.0[0].clone(), scale.clone()));
    }

    let mut report = CheckReport::default();
    let half = rat_int(1) / rat_int(2);
    for i in 1..=n + 1 {
        let w = discrete_wronskian_scaled(&rows[..i], &h)?;
        // divisor: prod_{j=1}^{i-1} prod_{s=1}^{i-j} T_j^(h)(x + (s + j/2 - 3/2) h)
        let mut div = Poly::one();
        for j in 1..i {
            let tj = problem.build_t_h(j - 1);
            for s in 1..=i - j {
                let offset =
                    &h * &(rat_int(s as i64) + &half * rat_int(j as i64) - rat_int(1) - &half);
                div = &div * &tj.shift(&offset);
            }
        }
        let name = format!("xxx_divided_wronskian_{i}");
        match w.divide_exact(&div) {
            Err(e) => report.push(name, false, format!("division failed: {e}")),
            Ok(q) => {
                let ok = if i <= n {
                    q.monicize() == pop.nodes[0].tuple.0[i - 1]
                } else {
                    q.degree() == Some(0) && !q.is_zero()
                };
                report.push(
                    name,
                    ok,
                    if ok {
                        "discrete divided Wronskian reproduces y_i up to scalar".to_string()
                    } else {
                        format!("quotient {q} not proportional to expected polynomial")
                    },
                );
            }
        }
    }
    Ok(report)
}

/// Numerator and denominator of
/// `-ln''(u) + ln'(u) (ln'(b) - ln'(u))` for quasi-polynomials `u`, `b`,
/// as exact polynomials.
fn second_order_expr(u: &QPoly, b: &QPoly) -> (Poly, Poly) {
    let log_prime = |q: &QPoly| -> (Poly, Poly) {
        // ln'(x^a p) = (a p + x p') / (x p)
        let num = &q.part.scale(&q.exponent) + &q.part.derivative().mul_xpow(1);
        let den = q.part.mul_xpow(1);
        (num, den)
    };
    let (nu, du) = log_prime(u);
    let (nb, db) = log_prime(b);
    // ln''(u) = (nu' du - nu du') / du^2
    let second = &(&nu.derivative() * &du) - &(&nu * &du.derivative());
    // L = [-second * db + nu (nb du - nu db)] / (du^2 db)
    let num = &(&(-&second) * &db) + &(&nu * &(&(&nb * &du) - &(&nu * &db)));
    let den = &(&du * &du) * &db;
    (num, den)
}

/// Operator-independence surrogate: on every edge of a type A trigonometric
/// population, the two second-order expressions built from the parent and
/// child slot-`i` quasi-polynomials agree as rational functions (checked by
/// cross-multiplication after clearing denominators).
pub fn operator_edge_check(
    problem: &Problem,
    pop: &Population,
) -> Result<CheckReport, FundopError> {
    let n = require_type_a(problem, "trigonometric", false, false)?;
    let base = pop.nodes[0].weight.as_additive().unwrap().clone();
    let mut report = CheckReport::default();
    let mut alphas = Vec::with_capacity(pop.len());
    for node in &pop.nodes {
        let lam = node.weight.as_additive().unwrap();
        alphas.push(alpha_coordinates(&problem.rs, &base, lam)?);
    }
    for (src, edges) in pop.edges.iter().enumerate() {
        for (i, target) in edges.iter().enumerate() {
            let Some(t) = target else { continue };
            if *t < src {
                continue; // each undirected edge once
            }
            let name = format!("same_middle_edge_{src}_{i}");
            let a_src = &alphas[src];
            let a_tgt = &alphas[*t];
            let neighbors_ok = (0..n).all(|j| j == i || a_src[j] == a_tgt[j]);
            if !neighbors_ok {
                report.push(
                    name,
                    false,
                    "alpha-coordinates differ off the edge direction",
                );
                continue;
            }
            let u = QPoly::new(a_src[i].clone(), pop.nodes[src].tuple.0[i].clone());
            let u2 = QPoly::new(a_tgt[i].clone(), pop.nodes[*t].tuple.0[i].clone());
            // b = x^{(lambda, alpha_i) + a_{i-1} + a_{i+1}} T_i y_{i-1} y_{i+1}
            let mut b_exp = problem.rs.weight_pairing(&base, i);
            let mut b_part = problem.build_t(i);
            if i > 0 {
                b_exp += &a_src[i - 1];
                b_part = &b_part * &pop.nodes[src].tuple.0[i - 1];
            }
            if i + 1 < n {
                b_exp += &a_src[i + 1];
                b_part = &b_part * &pop.nodes[src].tuple.0[i + 1];
            }
            let b = QPoly::new(b_exp, b_part);
            let (n1, d1) = second_order_expr(&u, &b);
            let (n2, d2) = second_order_expr(&u2, &b);
            let ok = &n1 * &d2 == &n2 * &d1;
            report.push(
                name,
                ok,
                if ok {
                    "second-order factor identity holds".to_string()
                } else {
                    "second-order factor identity violated".to_string()
                },
            );
        }
    }
    Ok(report)
}
