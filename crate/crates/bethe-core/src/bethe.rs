//! Master-function residuals for the three Bethe families, a multistart
//! damped Newton solver with orbit deduplication, and solution-count checks
//! against sl2 weight multiplicities.

// the color index i runs across several parallel per-color structures
#![allow(clippy::needless_range_loop)]

use crate::exactmath::Poly;
use crate::numeric::{condition_estimate, solve_complex, vec_norm, CMat, FPoly, C64};
use crate::rational::{approximate_f64, to_f64};
use crate::reproduce::{verify_critical_point, FamilyKind, PolyTuple, Problem, Verdict, Weight};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BetheError {
    #[error("configuration touches a singular hyperplane")]
    SingularConfiguration,
    #[error("weight kind does not match the family")]
    WeightKindMismatch,
    #[error("rationalization rejected: {0}")]
    RationalizationRejected(String),
}

/// Distance below which a configuration counts as singular.
pub const SINGULAR_GUARD: f64 = 1e-8;

/// A candidate Bethe configuration: coordinates grouped by color.
#[derive(Debug, Clone)]
pub struct BetheConfig {
    pub coords: Vec<Vec<C64>>,
}

impl BetheConfig {
    pub fn total_len(&self) -> usize {
        self.coords.iter().map(Vec::len).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.coords.iter().map(Vec::len).collect()
    }

    fn flatten(&self) -> Vec<C64> {
        self.coords.iter().flatten().copied().collect()
    }

    fn unflatten(template: &[usize], flat: &[C64]) -> Self {
        let mut coords = Vec::with_capacity(template.len());
        let mut at = 0;
        for &l in template {
            coords.push(flat[at..at + l].to_vec());
            at += l;
        }
        BetheConfig { coords }
    }

    /// Sorted-coordinate representative of the symmetric-group orbit.
    pub fn sorted(&self) -> Vec<Vec<C64>> {
        self.coords
            .iter()
            .map(|color| {
                let mut v = color.clone();
                v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
                v
            })
            .collect()
    }
}

/// Two configurations lie in the same symmetric-group orbit when the sorted
/// coordinates of every color match within `tol` after greedy pairing
/// (plain positional comparison is unstable when real parts tie up to
/// rounding noise).
pub fn same_orbit(a: &BetheConfig, b: &BetheConfig, tol: f64) -> bool {
    if a.degrees() != b.degrees() {
        return false;
    }
    for (ca, cb) in a.sorted().iter().zip(&b.sorted()) {
        let mut used = vec![false; cb.len()];
        for x in ca {
            let best = cb
                .iter()
                .enumerate()
                .filter(|(k, _)| !used[*k])
                .min_by(|(_, u), (_, v)| (x - *u).norm().total_cmp(&(x - *v).norm()));
            match best {
                Some((k, y)) if (x - y).norm() < tol => used[k] = true,
                _ => return false,
            }
        }
    }
    true
}

/// Problem data lowered to floats.
struct FloatData {
    zs: Vec<C64>,
    /// `(Lambda_s, alpha_i) = d_i <Lambda_s, alpha_i^vee>` indexed `[s][i]`.
    lam_alpha: Vec<Vec<f64>>,
    /// `(alpha_i, alpha_j)`.
    root_pairing: Vec<Vec<f64>>,
    /// Cartan matrix entries as f64.
    cartan: Vec<Vec<f64>>,
    rank: usize,
}

fn lower(problem: &Problem) -> FloatData {
    let r = problem.rank();
    FloatData {
        zs: problem
            .zs
            .iter()
            .map(|z| C64::new(to_f64(z), 0.0))
            .collect(),
        lam_alpha: problem
            .lambdas
            .iter()
            .map(|lam| {
                (0..r)
                    .map(|i| to_f64(&problem.rs.weight_pairing(lam, i)))
                    .collect()
            })
            .collect(),
        root_pairing: (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| problem.rs.root_pairing(i, j) as f64)
                    .collect()
            })
            .collect(),
        cartan: (0..r)
            .map(|i| (0..r).map(|j| problem.rs.a(i, j) as f64).collect())
            .collect(),
        rank: r,
    }
}

fn weight_pairings_f64(problem: &Problem, weight: &Weight) -> Result<Vec<f64>, BetheError> {
    if !problem.weight_matches_family(weight) {
        return Err(BetheError::WeightKindMismatch);
    }
    Ok(weight.coords().iter().map(to_f64).collect())
}

fn guarded(d: C64) -> Result<C64, BetheError> {
    if d.norm() < SINGULAR_GUARD {
        Err(BetheError::SingularConfiguration)
    } else {
        Ok(d)
    }
}

/// Trigonometric Bethe residual: for each coordinate `t = t_j^(i)`,
/// `-(lam, a_i)/t - sum_s (Lam_s, a_i)/(t - z_s)
///  + sum_{m != i} sum_k (a_m, a_i)/(t - t_k^(m))
///  + sum_{s != j} (a_i, a_i)/(t - t_s^(i))`.
pub fn residual_trig(
    config: &BetheConfig,
    problem: &Problem,
    lam: &Weight,
) -> Result<Vec<C64>, BetheError> {
    let data = lower(problem);
    let mcoords = weight_pairings_f64(problem, lam)?;
    let mut out = Vec::with_capacity(config.total_len());
    for i in 0..data.rank {
        let di = problem.rs.d(i) as f64;
        for (j, &t) in config.coords[i].iter().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            acc -= C64::new(di * mcoords[i], 0.0) / guarded(t)?;
            for (s, z) in data.zs.iter().enumerate() {
                let w = data.lam_alpha[s][i];
                if w != 0.0 {
                    acc -= C64::new(w, 0.0) / guarded(t - z)?;
                }
            }
            for m in 0..data.rank {
                let pairing = data.root_pairing[m][i];
                if m == i || pairing == 0.0 {
                    continue;
                }
                for &u in &config.coords[m] {
                    acc += C64::new(pairing, 0.0) / guarded(t - u)?;
                }
            }
            let self_pairing = data.root_pairing[i][i];
            for (s, &u) in config.coords[i].iter().enumerate() {
                if s != j {
                    acc += C64::new(self_pairing, 0.0) / guarded(t - u)?;
                }
            }
            out.push(acc);
        }
    }
    Ok(out)
}

/// Exponential residual: the `-(lam, a_i)/t` term is replaced by the
/// constant `-(lam, a_i)`.
pub fn residual_exp(
    config: &BetheConfig,
    problem: &Problem,
    lam: &Weight,
) -> Result<Vec<C64>, BetheError> {
    let data = lower(problem);
    let mcoords = weight_pairings_f64(problem, lam)?;
    let mut out = Vec::with_capacity(config.total_len());
    for i in 0..data.rank {
        let di = problem.rs.d(i) as f64;
        for (j, &t) in config.coords[i].iter().enumerate() {
            let mut acc = C64::new(-di * mcoords[i], 0.0);
            for (s, z) in data.zs.iter().enumerate() {
                let w = data.lam_alpha[s][i];
                if w != 0.0 {
                    acc -= C64::new(w, 0.0) / guarded(t - z)?;
                }
            }
            for m in 0..data.rank {
                let pairing = data.root_pairing[m][i];
                if m == i || pairing == 0.0 {
                    continue;
                }
                for &u in &config.coords[m] {
                    acc += C64::new(pairing, 0.0) / guarded(t - u)?;
                }
            }
            let self_pairing = data.root_pairing[i][i];
            for (s, &u) in config.coords[i].iter().enumerate() {
                if s != j {
                    acc += C64::new(self_pairing, 0.0) / guarded(t - u)?;
                }
            }
            out.push(acc);
        }
    }
    Ok(out)
}

/// XXX residual, formulated additively as `kappa_i - (product)` to avoid
/// spurious zeros at poles.
pub fn residual_xxx(
    config: &BetheConfig,
    problem: &Problem,
    kappa: &Weight,
) -> Result<Vec<C64>, BetheError> {
    let FamilyKind::Xxx { h } = &problem.family else {
        return Err(BetheError::WeightKindMismatch);
    };
    let h = to_f64(h);
    let data = lower(problem);
    let kcoords = weight_pairings_f64(problem, kappa)?;
    let mut out = Vec::with_capacity(config.total_len());
    for i in 0..data.rank {
        for (j, &t) in config.coords[i].iter().enumerate() {
            let mut prod = C64::new(1.0, 0.0);
            for (s, z) in data.zs.iter().enumerate() {
                let w = data.lam_alpha[s][i];
                if w != 0.0 {
                    let shift = C64::new(w * h / 2.0, 0.0);
                    prod *= (t - z + shift) / guarded(t - z - shift)?;
                }
            }
            for m in 0..data.rank {
                if m == i {
                    continue;
                }
                let a_im = data.cartan[i][m];
                if a_im == 0.0 {
                    continue;
                }
                let mut factor = C64::new(1.0, 0.0);
                for &u in &config.coords[m] {
                    let half = C64::new(h / 2.0, 0.0);
                    factor *= (t - u + half) / guarded(t - u - half)?;
                }
                // integer exponent -a_im
                let e = -a_im as i64;
                let powed = if e >= 0 {
                    factor.powi(e as i32)
                } else {
                    guarded(factor)?;
                    factor.powi(e as i32)
                };
                prod *= powed;
            }
            for (s, &u) in config.coords[i].iter().enumerate() {
                if s != j {
                    let hh = C64::new(h, 0.0);
                    prod *= (t - u - hh) / guarded(t - u + hh)?;
                }
            }
            out.push(C64::new(kcoords[i], 0.0) - prod);
        }
    }
    Ok(out)
}

/// `log |Phi|` + phase accumulated term-wise; diagnostics only (the
/// residuals are its logarithmic gradient).
pub fn master_log_value(
    config: &BetheConfig,
    problem: &Problem,
    lam: &Weight,
) -> Result<C64, BetheError> {
    let data = lower(problem);
    let mcoords = weight_pairings_f64(problem, lam)?;
    let exponential = matches!(problem.family, FamilyKind::Exp);
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..data.rank {
        let di = problem.rs.d(i) as f64;
        for &t in &config.coords[i] {
            if exponential {
                acc -= C64::new(di * mcoords[i], 0.0) * t;
            } else {
                acc -= C64::new(di * mcoords[i], 0.0) * guarded(t)?.ln();
            }
            for (s, z) in data.zs.iter().enumerate() {
                let w = data.lam_alpha[s][i];
                if w != 0.0 {
                    acc -= C64::new(w, 0.0) * guarded(t - z)?.ln();
                }
            }
        }
        let self_pairing = data.root_pairing[i][i];
        let color = &config.coords[i];
        for j in 0..color.len() {
            for s in j + 1..color.len() {
                acc += C64::new(self_pairing, 0.0) * guarded(color[j] - color[s])?.ln();
            }
        }
    }
    for i in 0..data.rank {
        for m in i + 1..data.rank {
            let pairing = data.root_pairing[i][m];
            if pairing == 0.0 {
                continue;
            }
            for &t in &config.coords[i] {
                for &u in &config.coords[m] {
                    acc += C64::new(pairing, 0.0) * guarded(t - u)?.ln();
                }
            }
        }
    }
    Ok(acc)
}

/// Residual of the family the problem belongs to.
pub fn residual(
    config: &BetheConfig,
    problem: &Problem,
    weight: &Weight,
) -> Result<Vec<C64>, BetheError> {
    match problem.family {
        FamilyKind::Trig => residual_trig(config, problem, weight),
        FamilyKind::Exp => residual_exp(config, problem, weight),
        FamilyKind::Xxx { .. } => residual_xxx(config, problem, weight),
    }
}

fn residual_flat(
    template: &[usize],
    flat: &[C64],
    problem: &Problem,
    weight: &Weight,
) -> Option<Vec<C64>> {
    let config = BetheConfig::unflatten(template, flat);
    residual(&config, problem, weight).ok()
}

/// `sum_k coeffs[k] * prod_{l != k} factors[l]`, by prefix/suffix products.
fn sum_excluding(factors: &[C64], coeffs: &[f64]) -> C64 {
    let n = factors.len();
    let mut prefix = vec![C64::new(1.0, 0.0); n + 1];
    for k in 0..n {
        prefix[k + 1] = prefix[k] * factors[k];
    }
    let mut suffix = vec![C64::new(1.0, 0.0); n + 1];
    for k in (0..n).rev() {
        suffix[k] = suffix[k + 1] * factors[k];
    }
    (0..n)
        .map(|k| C64::new(coeffs[k], 0.0) * prefix[k] * suffix[k + 1])
        .sum()
}

/// The Bethe system with all denominators cleared: a polynomial system with
/// the same zeros away from the singular hyperplanes, but growing at
/// infinity, which keeps the Newton iteration from escaping along the
/// decay of the rational residual. Convergence is always certified against
/// the true family residual afterwards.
fn cleared_residual(config: &BetheConfig, problem: &Problem, weight: &Weight) -> Vec<C64> {
    let data = lower(problem);
    let wcoords: Vec<f64> = weight.coords().iter().map(to_f64).collect();
    let mut out = Vec::with_capacity(config.total_len());
    match &problem.family {
        FamilyKind::Trig | FamilyKind::Exp => {
            let trig = matches!(problem.family, FamilyKind::Trig);
            for i in 0..data.rank {
                let di = problem.rs.d(i) as f64;
                for (j, &t) in config.coords[i].iter().enumerate() {
                    let mut factors = Vec::new();
                    let mut coeffs = Vec::new();
                    if trig {
                        factors.push(t);
                        coeffs.push(-di * wcoords[i]);
                    }
                    for (s, z) in data.zs.iter().enumerate() {
                        let w = data.lam_alpha[s][i];
                        if w != 0.0 {
                            factors.push(t - z);
                            coeffs.push(-w);
                        }
                    }
                    for m in 0..data.rank {
                        let pairing = data.root_pairing[m][i];
                        if m == i || pairing == 0.0 {
                            continue;
                        }
                        for &u in &config.coords[m] {
                            factors.push(t - u);
                            coeffs.push(pairing);
                        }
                    }
                    let self_pairing = data.root_pairing[i][i];
                    for (s, &u) in config.coords[i].iter().enumerate() {
                        if s != j {
                            factors.push(t - u);
                            coeffs.push(self_pairing);
                        }
                    }
                    let mut p = sum_excluding(&factors, &coeffs);
                    if !trig {
                        // constant first term times the full product
                        let full: C64 = factors.iter().product();
                        p += C64::new(-di * wcoords[i], 0.0) * full;
                    }
                    out.push(p);
                }
            }
        }
        FamilyKind::Xxx { h } => {
            let h = to_f64(h);
            for i in 0..data.rank {
                for (j, &t) in config.coords[i].iter().enumerate() {
                    let mut numer = C64::new(1.0, 0.0);
                    let mut denom = C64::new(1.0, 0.0);
                    for (s, z) in data.zs.iter().enumerate() {
                        let w = data.lam_alpha[s][i];
                        if w != 0.0 {
                            let shift = C64::new(w * h / 2.0, 0.0);
                            numer *= t - z + shift;
                            denom *= t - z - shift;
                        }
                    }
                    for m in 0..data.rank {
                        if m == i {
                            continue;
                        }
                        let e = -problem.rs.a(i, m);
                        if e <= 0 {
                            continue;
                        }
                        let half = C64::new(h / 2.0, 0.0);
                        for &u in &config.coords[m] {
                            for _ in 0..e {
                                numer *= t - u + half;
                                denom *= t - u - half;
                            }
                        }
                    }
                    let hh = C64::new(h, 0.0);
                    for (s, &u) in config.coords[i].iter().enumerate() {
                        if s != j {
                            numer *= t - u - hh;
                            denom *= t - u + hh;
                        }
                    }
                    out.push(C64::new(wcoords[i], 0.0) * denom - numer);
                }
            }
        }
    }
    out
}

fn cleared_flat(template: &[usize], flat: &[C64], problem: &Problem, weight: &Weight) -> Vec<C64> {
    let config = BetheConfig::unflatten(template, flat);
    cleared_residual(&config, problem, weight)
}

/// Central finite-difference Jacobian of the cleared system, with a real
/// step; valid because the components are holomorphic (polynomial).
fn fd_jacobian_cleared(
    template: &[usize],
    flat: &[C64],
    problem: &Problem,
    weight: &Weight,
) -> CMat {
    let n = flat.len();
    let mut jac = CMat::zeros(n, n);
    for c in 0..n {
        let step = 1e-6 * (1.0 + flat[c].norm());
        let mut plus = flat.to_vec();
        plus[c] += C64::new(step, 0.0);
        let mut minus = flat.to_vec();
        minus[c] -= C64::new(step, 0.0);
        let fp = cleared_flat(template, &plus, problem, weight);
        let fm = cleared_flat(template, &minus, problem, weight);
        for r in 0..n {
            jac[(r, c)] = (fp[r] - fm[r]) / C64::new(2.0 * step, 0.0);
        }
    }
    jac
}

/// Central finite-difference Jacobian of the true residual, used for
/// condition estimates at converged points.
fn fd_jacobian(
    template: &[usize],
    flat: &[C64],
    problem: &Problem,
    weight: &Weight,
) -> Option<CMat> {
    let n = flat.len();
    let mut jac = CMat::zeros(n, n);
    for c in 0..n {
        let step = 1e-6 * (1.0 + flat[c].norm());
        let mut plus = flat.to_vec();
        plus[c] += C64::new(step, 0.0);
        let mut minus = flat.to_vec();
        minus[c] -= C64::new(step, 0.0);
        let fp = residual_flat(template, &plus, problem, weight)?;
        let fm = residual_flat(template, &minus, problem, weight)?;
        for r in 0..n {
            jac[(r, c)] = (fp[r] - fm[r]) / C64::new(2.0 * step, 0.0);
        }
    }
    Some(jac)
}

/// Options for the multistart Newton solver. The defaults implement the
/// documented policy: damping factor 1/2 on residual increase, at most 200
/// iterations, start points from a disk of radius `2 (1 + max |z_s|)`,
/// dedup tolerance 1e-6 on sorted coordinates.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub attempts: usize,
    pub tol: f64,
    pub seed: u64,
    pub max_iters: usize,
    pub dedup_tol: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            attempts: 200,
            tol: 1e-10,
            seed: 0,
            max_iters: 200,
            dedup_tol: 1e-6,
        }
    }
}

fn newton_attempt(
    template: &[usize],
    start: Vec<C64>,
    escape_radius: f64,
    problem: &Problem,
    weight: &Weight,
    opts: &SolveOptions,
) -> Option<Vec<C64>> {
    let converged = |x: &[C64]| {
        residual_flat(template, x, problem, weight).is_some_and(|f| vec_norm(&f) <= opts.tol)
    };
    let mut x = start;
    let mut p = cleared_flat(template, &x, problem, weight);
    for _ in 0..opts.max_iters {
        if converged(&x) {
            return Some(x);
        }
        if x.iter().any(|c| c.norm() > escape_radius) {
            return None;
        }
        let jac = fd_jacobian_cleared(template, &x, problem, weight);
        let dx = solve_complex(&jac, &p, 1e-14)?;
        let pnorm = vec_norm(&p);
        let mut step = 1.0f64;
        let mut accepted = false;
        for _ in 0..30 {
            let cand: Vec<C64> = x
                .iter()
                .zip(&dx)
                .map(|(xi, di)| xi - C64::new(step, 0.0) * di)
                .collect();
            let pc = cleared_flat(template, &cand, problem, weight);
            if vec_norm(&pc) < pnorm {
                x = cand;
                p = pc;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    converged(&x).then_some(x)
}

/// Multistart damped Newton iteration on the family residual; converged
/// points are deduplicated by sorted-coordinate matching per color and
/// returned as distinct orbit representatives, reproducibly for a given
/// seed.
pub fn solve_newton(
    problem: &Problem,
    weight: &Weight,
    l: &[usize],
    opts: &SolveOptions,
) -> Vec<BetheConfig> {
    assert_eq!(l.len(), problem.rank());
    let total: usize = l.iter().sum();
    if total == 0 {
        return vec![BetheConfig {
            coords: vec![Vec::new(); problem.rank()],
        }];
    }
    let radius = 2.0
        * (1.0
            + problem
                .zs
                .iter()
                .map(|z| to_f64(z).abs())
                .fold(0.0, f64::max));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut solutions: Vec<BetheConfig> = Vec::new();
    for _ in 0..opts.attempts {
        let start: Vec<C64> = (0..total)
            .map(|_| {
                let r = radius * rng.gen::<f64>().sqrt();
                let theta = 2.0 * std::f64::consts::PI * rng.gen::<f64>();
                C64::new(r * theta.cos(), r * theta.sin())
            })
            .collect();
        let Some(found) = newton_attempt(l, start, 50.0 * radius, problem, weight, opts) else {
            continue;
        };
        let config = BetheConfig::unflatten(l, &found);
        // coordinates within a color must stay pairwise distinct
        let diagonal = config.coords.iter().any(|color| {
            color
                .iter()
                .enumerate()
                .any(|(a, x)| color[..a].iter().any(|y| (x - y).norm() < opts.dedup_tol))
        });
        if diagonal {
            continue;
        }
        let duplicate = solutions
            .iter()
            .any(|s| same_orbit(s, &config, opts.dedup_tol));
        if !duplicate {
            solutions.push(config);
        }
    }
    solutions
}

/// `#{(m_1..m_n) : 0 <= m_s <= Lambda_s, sum m_s = l}` by dynamic
/// programming; the dimension of the weight-`Lambda_inf` subspace of the
/// sl2 tensor product.
pub fn weight_multiplicity_sl2(lambdas: &[u32], l: usize) -> u64 {
    let mut dp = vec![0u64; l + 1];
    dp[0] = 1;
    for &lam in lambdas {
        let mut next = vec![0u64; l + 1];
        for (used, &ways) in dp.iter().enumerate() {
            if ways == 0 {
                continue;
            }
            for take in 0..=lam as usize {
                if used + take <= l {
                    next[used + take] += ways;
                }
            }
        }
        dp = next;
    }
    dp[l]
}

/// Outcome of a solution-count experiment against the multiplicity bound.
#[derive(Debug, Clone)]
pub struct CountReport {
    pub found: usize,
    pub multiplicity: u64,
    pub matches: bool,
    pub within_bound: bool,
    /// Jacobian condition estimates at the found solutions, a
    /// non-degeneracy proxy.
    pub condition_numbers: Vec<f64>,
}

/// Runs the solver on an sl2 problem and compares the orbit count to the
/// weight multiplicity.
pub fn count_check(
    problem: &Problem,
    weight: &Weight,
    l: usize,
    opts: &SolveOptions,
) -> Result<CountReport, BetheError> {
    assert_eq!(problem.rank(), 1, "count_check is the sl2 comparison");
    let lambdas: Vec<u32> = problem
        .lambdas
        .iter()
        .map(|lam| {
            lam.0[0]
                .to_integer()
                .try_into()
                .expect("dominant integral weight fits u32")
        })
        .collect();
    let solutions = solve_newton(problem, weight, &[l], opts);
    let mut condition_numbers = Vec::new();
    for sol in &solutions {
        let flat = sol.flatten();
        if flat.is_empty() {
            continue;
        }
        if let Some(j) = fd_jacobian(&[l], &flat, problem, weight) {
            if let Some(c) = condition_estimate(&j, 1e-14) {
                condition_numbers.push(c);
            }
        }
    }
    let multiplicity = weight_multiplicity_sl2(&lambdas, l);
    Ok(CountReport {
        found: solutions.len(),
        multiplicity,
        matches: solutions.len() as u64 == multiplicity,
        within_bound: solutions.len() as u64 <= multiplicity,
        condition_numbers,
    })
}

/// Expands a configuration into the float tuple `y_i = prod_j (x - t_j^(i))`.
pub fn roots_to_tuple(config: &BetheConfig) -> Vec<FPoly> {
    config
        .coords
        .iter()
        .map(|color| FPoly::from_roots(color))
        .collect()
}

/// Snaps float coefficients to nearby rationals with denominators at most
/// `max_den`. Coefficients farther than `snap_tol` from their snap (or with
/// imaginary part above it) are rejected.
pub fn rationalize(tuple: &[FPoly], max_den: u64, snap_tol: f64) -> Result<PolyTuple, BetheError> {
    let mut polys = Vec::with_capacity(tuple.len());
    for fp in tuple {
        let m = fp.monicize();
        let mut coeffs = Vec::with_capacity(m.0.len());
        for c in &m.0 {
            if c.im.abs() > snap_tol {
                return Err(BetheError::RationalizationRejected(format!(
                    "coefficient {c} has a non-real part beyond the snapping budget"
                )));
            }
            let snapped = approximate_f64(c.re, max_den).ok_or_else(|| {
                BetheError::RationalizationRejected(format!("cannot approximate {c}"))
            })?;
            if (to_f64(&snapped) - c.re).abs() > snap_tol {
                return Err(BetheError::RationalizationRejected(format!(
                    "coefficient {c} is farther than {snap_tol} from any rational with denominator <= {max_den}"
                )));
            }
            coeffs.push(snapped);
        }
        polys.push(Poly::from_coeffs(coeffs));
    }
    Ok(PolyTuple::new(polys))
}

/// Rationalizes and then insists the exact tuple passes the critical-point
/// criterion at the given weight and degrees.
pub fn rationalize_verified(
    problem: &Problem,
    weight: &Weight,
    l: &[usize],
    tuple: &[FPoly],
    max_den: u64,
    snap_tol: f64,
) -> Result<PolyTuple, BetheError> {
    let exact = rationalize(tuple, max_den, snap_tol)?;
    match verify_critical_point(problem, &exact, weight, l) {
        Verdict::Critical => Ok(exact),
        v => Err(BetheError::RationalizationRejected(format!(
            "exact verification failed: {v:?}"
        ))),
    }
}

/// Convenience: the zero-based degrees of a weight vector viewed as sl2
/// highest weights, for count comparisons.
pub fn is_zero_weight(w: &Weight) -> bool {
    w.coords().iter().all(|c| c.is_zero())
}
