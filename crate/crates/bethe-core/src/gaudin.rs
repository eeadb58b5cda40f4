//! sl2 representation theory: tensor products of irreducible modules,
//! trigonometric Gaudin operators, Bethe vectors through the explicit sl2
//! weight function, and dynamical Weyl group operators.
//!
//! Normalization: the invariant form is fixed by `(alpha, alpha) = 2` with
//! `h = alpha^vee`, so `Omega^0 = (h x h)/4`, `Omega^+ = Omega^0 + e x f`,
//! `Omega^- = Omega^0 + f x e`, and the weight `lambda` acts on factor `i`
//! as `(lambda/2) h^(i)`. The scale is locked by the eigenvector oracle in
//! the tests rather than asserted.

use crate::bethe::{solve_newton, BetheConfig, SolveOptions};
use crate::numeric::{least_squares, poly_roots, sine_angle, vec_norm, CMat, FPoly, C64};
use crate::rational::{rat_int, to_f64, Rational};
use crate::reproduce::{FamilyKind, Problem, Weight};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaudinError {
    #[error("weight function vanished at the supplied configuration")]
    ZeroVector,
    #[error("dynamical Weyl operator undefined here: {0}")]
    NonGeneric(String),
    #[error("configuration touches a singular hyperplane")]
    SingularConfiguration,
    #[error("operation requires an sl2 (rank 1) trigonometric problem")]
    WrongProblem,
}

/// Tensor product of irreducible sl2 modules with highest weights
/// `lambdas`; basis vectors are `F^{m_1} v_1 x ... x F^{m_n} v_n` with
/// `0 <= m_s <= Lambda_s`, indexed in mixed radix order.
#[derive(Debug, Clone)]
pub struct Sl2Tensor {
    pub lambdas: Vec<u32>,
    strides: Vec<usize>,
    dim: usize,
}

impl Sl2Tensor {
    pub fn new(lambdas: Vec<u32>) -> Self {
        let mut strides = vec![0usize; lambdas.len()];
        let mut dim = 1usize;
        for (s, &lam) in lambdas.iter().enumerate().rev() {
            strides[s] = dim;
            dim *= lam as usize + 1;
        }
        Sl2Tensor {
            lambdas,
            strides,
            dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factors(&self) -> usize {
        self.lambdas.len()
    }

    pub fn index(&self, m: &[u32]) -> usize {
        m.iter()
            .zip(&self.strides)
            .map(|(&mi, &st)| mi as usize * st)
            .sum()
    }

    pub fn mvec(&self, mut idx: usize) -> Vec<u32> {
        let mut m = Vec::with_capacity(self.factors());
        for &st in &self.strides {
            m.push((idx / st) as u32);
            idx %= st;
        }
        m
    }

    /// Weight of a basis vector: `sum_s (Lambda_s - 2 m_s)`.
    pub fn weight_of(&self, idx: usize) -> i64 {
        self.mvec(idx)
            .iter()
            .zip(&self.lambdas)
            .map(|(&m, &lam)| lam as i64 - 2 * m as i64)
            .sum()
    }

    /// Indices of the weight subspace `V[mu]`, ascending.
    pub fn block(&self, mu: i64) -> Vec<usize> {
        (0..self.dim).filter(|&i| self.weight_of(i) == mu).collect()
    }

    pub fn weights_present(&self) -> Vec<i64> {
        let mut w: Vec<i64> = (0..self.dim).map(|i| self.weight_of(i)).collect();
        w.sort();
        w.dedup();
        w
    }

    /// `e` on factor `s`: `F^m v -> m (Lambda - m + 1) F^{m-1} v`.
    fn e_factor(&self, s: usize, idx: usize) -> Option<(usize, i64)> {
        let m = self.mvec(idx)[s] as i64;
        if m == 0 {
            return None;
        }
        let lam = self.lambdas[s] as i64;
        Some((idx - self.strides[s], m * (lam - m + 1)))
    }

    /// `f` on factor `s`: `F^m v -> F^{m+1} v`.
    fn f_factor(&self, s: usize, idx: usize) -> Option<usize> {
        let m = self.mvec(idx)[s];
        if m >= self.lambdas[s] {
            return None;
        }
        Some(idx + self.strides[s])
    }

    fn h_factor(&self, s: usize, idx: usize) -> i64 {
        let m = self.mvec(idx)[s] as i64;
        self.lambdas[s] as i64 - 2 * m
    }

    /// Coproduct `E = sum_s e^(s)` on an exact vector.
    pub fn apply_e(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (idx, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for s in 0..self.factors() {
                if let Some((j, coeff)) = self.e_factor(s, idx) {
                    out[j] += c * rat_int(coeff);
                }
            }
        }
        out
    }

    /// Coproduct `F = sum_s f^(s)` on an exact vector.
    pub fn apply_f(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (idx, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for s in 0..self.factors() {
                if let Some(j) = self.f_factor(s, idx) {
                    out[j] += c;
                }
            }
        }
        out
    }

    pub fn apply_h(&self, v: &[Rational]) -> Vec<Rational> {
        v.iter()
            .enumerate()
            .map(|(idx, c)| c * rat_int(self.weight_of(idx)))
            .collect()
    }
}

/// Exact rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    pub n: usize,
    pub data: Vec<Rational>,
}

impl QMat {
    pub fn zeros(n: usize) -> Self {
        QMat {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.n + j] = v;
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j) * &v[j])
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect()
    }

    pub fn to_cmat(&self) -> CMat {
        let mut m = CMat::zeros(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m[(i, j)] = C64::new(to_f64(self.get(i, j)), 0.0);
            }
        }
        m
    }

    pub fn apply_c(&self, v: &[C64]) -> Vec<C64> {
        self.to_cmat().apply(v)
    }
}

/// The trigonometric Gaudin operators `H_i(lambda_param)`, `i = 1..n`, as
/// full-dimension complex matrices: `H_i = lambda^(i) + sum_{j != i}
/// r^(i,j)(z_i / z_j)` with `r(z) = (Omega^+ z + Omega^-)/(z - 1)`.
pub fn build_gaudin(tensor: &Sl2Tensor, zs: &[f64], lambda_param: C64) -> Vec<CMat> {
    let n = tensor.factors();
    assert_eq!(zs.len(), n);
    let dim = tensor.dim();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut h = CMat::zeros(dim, dim);
        for col in 0..dim {
            // lambda^(i) = (lambda/2) h^(i)
            let hi = tensor.h_factor(i, col) as f64;
            h[(col, col)] += lambda_param * C64::new(hi / 2.0, 0.0);
            for j in 0..n {
                if j == i {
                    continue;
                }
                let z = C64::new(zs[i] / zs[j], 0.0);
                let denom = z - C64::new(1.0, 0.0);
                // Omega^0 = h x h / 4 (both orientations agree)
                let hh = (tensor.h_factor(i, col) * tensor.h_factor(j, col)) as f64 / 4.0;
                h[(col, col)] += (z + C64::new(1.0, 0.0)) / denom * C64::new(hh, 0.0);
                // Omega^+ contributes z/(z-1) e^(i) f^(j)
                if let Some((row_e, ce)) = tensor.e_factor(i, col) {
                    if let Some(row) = tensor.f_factor(j, row_e) {
                        h[(row, col)] += z / denom * C64::new(ce as f64, 0.0);
                    }
                }
                // Omega^- contributes 1/(z-1) f^(i) e^(j)
                if let Some((row_e, ce)) = tensor.e_factor(j, col) {
                    if let Some(row) = tensor.f_factor(i, row_e) {
                        h[(row, col)] += C64::new(ce as f64, 0.0) / denom;
                    }
                }
            }
        }
        out.push(h);
    }
    out
}

fn permutations(l: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..l).collect();
    // Heap's algorithm, iterative
    let mut c = vec![0usize; l];
    out.push(cur.clone());
    let mut i = 0;
    while i < l {
        if c[i] < i {
            if i % 2 == 0 {
                cur.swap(0, i);
            } else {
                cur.swap(c[i], i);
            }
            out.push(cur.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// The explicit sl2 weight function on the weight block of `l = #t`
/// coordinates: `omega(t) = sum_m omega_m(t) F^m v` with
/// `omega_m = (prod m_j!)^{-1} Sym prod_s prod_{i in block_s} 1/(t_i - z_s)`,
/// returned as a full-dimension vector supported on `V[Lambda_inf]`.
pub fn weight_function(
    tensor: &Sl2Tensor,
    zs: &[C64],
    ts: &[C64],
) -> Result<Vec<C64>, GaudinError> {
    let l = ts.len();
    let n = tensor.factors();
    let mut out = vec![C64::new(0.0, 0.0); tensor.dim()];
    let perms = permutations(l);
    // enumerate m with sum = l, 0 <= m_s <= Lambda_s
    let mut stack = vec![(0usize, Vec::<u32>::new(), 0usize)];
    while let Some((s, m, used)) = stack.pop() {
        if s == n {
            if used != l {
                continue;
            }
            let mut fact = 1.0f64;
            for &ms in &m {
                for k in 1..=ms as usize {
                    fact *= k as f64;
                }
            }
            let mut sym = C64::new(0.0, 0.0);
            for sigma in &perms {
                let mut term = C64::new(1.0, 0.0);
                let mut pos = 0usize;
                'outer: for (sidx, &ms) in m.iter().enumerate() {
                    for _ in 0..ms {
                        let d = ts[sigma[pos]] - zs[sidx];
                        if d.norm() < 1e-12 {
                            return Err(GaudinError::SingularConfiguration);
                        }
                        term /= d;
                        pos += 1;
                        if term.norm() == 0.0 {
                            break 'outer;
                        }
                    }
                }
                sym += term;
            }
            out[tensor.index(&m)] = sym / C64::new(fact, 0.0);
            continue;
        }
        let remaining = l - used;
        for take in 0..=(tensor.lambdas[s] as usize).min(remaining) {
            let mut m2 = m.clone();
            m2.push(take as u32);
            stack.push((s + 1, m2, used + take));
        }
    }
    Ok(out)
}

/// Report of the Bethe-eigenvector test for one configuration.
#[derive(Debug, Clone)]
pub struct EigenReport {
    pub residuals: Vec<f64>,
    pub eigenvalues: Vec<C64>,
}

/// Checks that `omega(t)` is a common eigenvector of
/// `H_i(lambda + rho + Lambda_inf / 2)` (sl2: `rho = 1`), reporting the
/// relative residual per operator with Rayleigh-quotient eigenvalues.
pub fn verify_bethe_eigen(
    problem: &Problem,
    lam: &Weight,
    config: &BetheConfig,
) -> Result<EigenReport, GaudinError> {
    let (tensor, zs) = sl2_data(problem)?;
    let lam_val = match lam {
        Weight::Additive(w) => to_f64(&w.0[0]),
        _ => return Err(GaudinError::WrongProblem),
    };
    let l = config.coords[0].len();
    let lam_inf: i64 = tensor.lambdas.iter().map(|&x| x as i64).sum::<i64>() - 2 * l as i64;
    let zc: Vec<C64> = zs.iter().map(|&z| C64::new(z, 0.0)).collect();
    let omega = weight_function(&tensor, &zc, &config.coords[0])?;
    let norm = vec_norm(&omega);
    if norm < 1e-13 {
        return Err(GaudinError::ZeroVector);
    }
    let param = C64::new(lam_val + 1.0 + lam_inf as f64 / 2.0, 0.0);
    let hs = build_gaudin(&tensor, &zs, param);
    let mut residuals = Vec::new();
    let mut eigenvalues = Vec::new();
    for h in &hs {
        let hv = h.apply(&omega);
        let mu = crate::numeric::dot(&omega, &hv) / C64::new(norm * norm, 0.0);
        let diff: Vec<C64> = hv.iter().zip(&omega).map(|(a, b)| a - mu * b).collect();
        residuals.push(vec_norm(&diff) / norm);
        eigenvalues.push(mu);
    }
    Ok(EigenReport {
        residuals,
        eigenvalues,
    })
}

fn sl2_data(problem: &Problem) -> Result<(Sl2Tensor, Vec<f64>), GaudinError> {
    if problem.rank() != 1 || !matches!(problem.family, FamilyKind::Trig) {
        return Err(GaudinError::WrongProblem);
    }
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
    let zs: Vec<f64> = problem.zs.iter().map(to_f64).collect();
    Ok((Sl2Tensor::new(lambdas), zs))
}

/// `binom(lam + 1, k)` as a rational function of `lam` evaluated exactly:
/// `prod_{s=0}^{k-1} (lam + 1 - s) / k!`.
fn binom_rat(lam: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut num = Rational::one();
    for s in 0..k {
        num *= lam + rat_int(1 - s);
    }
    let mut den = Rational::one();
    for s in 1..=k {
        den *= rat_int(s);
    }
    num / den
}

/// `(mu + 1)! / (lam + 1)!` with `mu = lam - nu`, as the exact product of
/// linear factors (defined for any rational `lam` where no factor
/// vanishes).
fn factorial_ratio(lam: &Rational, nu: i64) -> Result<Rational, GaudinError> {
    let mut acc = Rational::one();
    if nu > 0 {
        for s in 0..nu {
            let f = lam + rat_int(1 - s);
            if f.is_zero() {
                return Err(GaudinError::NonGeneric(format!(
                    "factorial ratio pole at lambda = {}",
                    s - 1
                )));
            }
            acc /= f;
        }
    } else {
        for t in 1..=-nu {
            acc *= lam + rat_int(1 + t);
        }
    }
    Ok(acc)
}

/// The dynamical Weyl operator `A_w(lambda)` of the nontrivial sl2 Weyl
/// element on the whole tensor product, as an exact rational matrix. For a
/// basis vector `v` of weight `nu` the intertwiner recursion
/// `u_0 = v`, `u_{j+1} = -(e u_j) / ((j+1)(mu - j))` with `mu = lam - nu`
/// gives
/// `A_w(lam) v = (mu+1)!/(lam+1)! sum_j C(lam+1, j+nu) F^{j+nu} u_j`,
/// a rational function of `lam` evaluated exactly at any non-singular
/// rational argument.
pub fn a_w_matrix(tensor: &Sl2Tensor, lam: &Rational) -> Result<QMat, GaudinError> {
    let dim = tensor.dim();
    let mut out = QMat::zeros(dim);
    for b in 0..dim {
        let nu = tensor.weight_of(b);
        let mu = lam - rat_int(nu);
        let prefactor = factorial_ratio(lam, nu)?;
        let mut u = vec![Rational::zero(); dim];
        u[b] = Rational::one();
        let mut acc = vec![Rational::zero(); dim];
        let mut j: i64 = 0;
        loop {
            let k = j + nu;
            if k >= 0 {
                let coeff = binom_rat(lam, k);
                if !coeff.is_zero() {
                    let mut w = u.clone();
                    for _ in 0..k {
                        w = tensor.apply_f(&w);
                    }
                    for (a, x) in acc.iter_mut().zip(&w) {
                        *a += &coeff * x;
                    }
                }
            }
            let eu = tensor.apply_e(&u);
            if eu.iter().all(|c| c.is_zero()) {
                break;
            }
            let denom = rat_int(j + 1) * (&mu - rat_int(j));
            if denom.is_zero() {
                return Err(GaudinError::NonGeneric(format!(
                    "recursion denominator vanishes at j = {j}, mu = {mu}"
                )));
            }
            u = eu.iter().map(|c| -c / &denom).collect();
            j += 1;
        }
        for (row, val) in acc.into_iter().enumerate() {
            if !val.is_zero() {
                out.set(row, b, &prefactor * &val);
            }
        }
    }
    Ok(out)
}

/// The block-shifted operator: `A_shift(lam) v = A_w(lam + nu) v` for
/// `v in V[nu]`. Requires `lam >= sum Lambda_s` so every shifted argument
/// stays in the range where the intertwiner recursion is defined.
pub fn dwg_operator(tensor: &Sl2Tensor, lam: &Rational) -> Result<QMat, GaudinError> {
    let total: i64 = tensor.lambdas.iter().map(|&x| x as i64).sum();
    if lam < &rat_int(total) {
        return Err(GaudinError::NonGeneric(format!(
            "lambda must dominate the total weight {total}"
        )));
    }
    let dim = tensor.dim();
    let mut out = QMat::zeros(dim);
    let mut cache: BTreeMap<i64, QMat> = BTreeMap::new();
    for b in 0..dim {
        let nu = tensor.weight_of(b);
        let a = match cache.get(&nu) {
            Some(m) => m,
            None => {
                let m = a_w_matrix(tensor, &(lam + rat_int(nu)))?;
                cache.entry(nu).or_insert(m)
            }
        };
        for row in 0..dim {
            let v = a.get(row, b).clone();
            if !v.is_zero() {
                out.set(row, b, v);
            }
        }
    }
    Ok(out)
}

/// Exact block-structure check: `A maps V[nu] into V[-nu]`.
pub fn check_weight_flip(tensor: &Sl2Tensor, a: &QMat) -> bool {
    for col in 0..tensor.dim() {
        let nu = tensor.weight_of(col);
        for row in 0..tensor.dim() {
            if !a.get(row, col).is_zero() && tensor.weight_of(row) != -nu {
                return false;
            }
        }
    }
    true
}

/// Relative residual of the commutation identity
/// `A(lam) H_i(lam + 1 + nu/2) v = H_i(w.lam + 1 + w(nu)/2) A(lam) v`
/// over all weight blocks and operators; `A` exact, `H` float.
pub fn dwg_commutation_check(
    tensor: &Sl2Tensor,
    zs: &[f64],
    lam: &Rational,
) -> Result<f64, GaudinError> {
    let a = dwg_operator(tensor, lam)?;
    let ac = a.to_cmat();
    let lam_f = to_f64(lam);
    let mut worst: f64 = 0.0;
    for nu in tensor.weights_present() {
        let rows = tensor.block(-nu);
        let cols = tensor.block(nu);
        // restricted A block
        let mut ab = CMat::zeros(rows.len(), cols.len());
        for (ri, &r) in rows.iter().enumerate() {
            for (ci, &c) in cols.iter().enumerate() {
                ab[(ri, ci)] = ac[(r, c)];
            }
        }
        let h1s = build_gaudin(tensor, zs, C64::new(lam_f + 1.0 + nu as f64 / 2.0, 0.0));
        // w . lam = -lam - 2, w(nu) = -nu
        let h2s = build_gaudin(tensor, zs, C64::new(-lam_f - 1.0 - nu as f64 / 2.0, 0.0));
        for (h1, h2) in h1s.iter().zip(&h2s) {
            let mut h1b = CMat::zeros(cols.len(), cols.len());
            for (ri, &r) in cols.iter().enumerate() {
                for (ci, &c) in cols.iter().enumerate() {
                    h1b[(ri, ci)] = h1[(r, c)];
                }
            }
            let mut h2b = CMat::zeros(rows.len(), rows.len());
            for (ri, &r) in rows.iter().enumerate() {
                for (ci, &c) in rows.iter().enumerate() {
                    h2b[(ri, ci)] = h2[(r, c)];
                }
            }
            let lhs = ab.mul(&h1b);
            let rhs = h2b.mul(&ab);
            let scale = ab.norm_fro() * h1b.norm_fro();
            if scale > 0.0 {
                let res = lhs.sub(&rhs).norm_fro() / scale;
                worst = worst.max(res);
            }
        }
    }
    Ok(worst)
}

/// Per-column sine angles between the shifted operator at large `lambda`
/// and the canonical flip `F^m v -> F^{Lambda - m} v`, which it approaches
/// projectively per block.
pub fn canonical_limit_angles(tensor: &Sl2Tensor, lam: &Rational) -> Result<Vec<f64>, GaudinError> {
    let a = dwg_operator(tensor, lam)?.to_cmat();
    let mut angles = Vec::with_capacity(tensor.dim());
    for col in 0..tensor.dim() {
        let m = tensor.mvec(col);
        let flipped: Vec<u32> = m
            .iter()
            .zip(&tensor.lambdas)
            .map(|(&mi, &lami)| lami - mi)
            .collect();
        let target = tensor.index(&flipped);
        let image: Vec<C64> = (0..tensor.dim()).map(|r| a[(r, col)]).collect();
        let mut canon = vec![C64::new(0.0, 0.0); tensor.dim()];
        canon[target] = C64::new(1.0, 0.0);
        angles.push(sine_angle(&image, &canon));
    }
    Ok(angles)
}

/// One case of the conjecture pipeline for a single Bethe solution.
#[derive(Debug, Clone)]
pub struct ConjectureCase {
    pub t: Vec<C64>,
    pub t_w: Vec<C64>,
    pub sine: f64,
    pub descendant_off_diagonal: bool,
}

/// Pipeline comparing the dynamical Weyl action with the reproduction
/// action on Bethe vectors: solve at dominant integral `lambda`, reproduce
/// each solution in floats, extract the descendant roots, and report the
/// sine of the angle between `A(lam) omega(t)` and `omega(t_w)`.
pub fn conjecture_check(
    problem: &Problem,
    lam: u32,
    l: usize,
    opts: &SolveOptions,
) -> Result<Vec<ConjectureCase>, GaudinError> {
    let (tensor, zs) = sl2_data(problem)?;
    let weight = Weight::Additive(crate::rootdata::WeightVec(vec![rat_int(lam as i64)]));
    let sols = solve_newton(problem, &weight, &[l], opts);
    let zc: Vec<C64> = zs.iter().map(|&z| C64::new(z, 0.0)).collect();
    let lam_rat = rat_int(lam as i64);
    let lam_inf: i64 = tensor.lambdas.iter().map(|&x| x as i64).sum::<i64>() - 2 * l as i64;
    let a = a_w_matrix(&tensor, &(&lam_rat + rat_int(lam_inf)))?;
    let mut out = Vec::new();
    for sol in sols {
        let t = sol.coords[0].clone();
        let t_w = float_descendant_roots(problem, lam, &t)?;
        // off-diagonality of the descendant: distinct roots away from 0, z_s
        let mut off = true;
        for (i, a_root) in t_w.iter().enumerate() {
            if a_root.norm() < 1e-8 {
                off = false;
            }
            for b_root in &t_w[..i] {
                if (a_root - b_root).norm() < 1e-8 {
                    off = false;
                }
            }
            for z in &zc {
                if (a_root - z).norm() < 1e-8 {
                    off = false;
                }
            }
        }
        let omega_t = weight_function(&tensor, &zc, &t)?;
        let omega_tw = weight_function(&tensor, &zc, &t_w)?;
        if vec_norm(&omega_t) < 1e-13 || vec_norm(&omega_tw) < 1e-13 {
            return Err(GaudinError::ZeroVector);
        }
        let image = a.apply_c(&omega_t);
        let sine = sine_angle(&image, &omega_tw);
        out.push(ConjectureCase {
            t,
            t_w,
            sine,
            descendant_off_diagonal: off,
        });
    }
    Ok(out)
}

/// Float reproduction: solves the sl2 trigonometric identity
/// `c y ytilde + x (y ytilde' - y' ytilde) = T` in complex floats by least
/// squares with pivot tolerance 1e-10 and returns the roots of the
/// descendant.
pub fn float_descendant_roots(
    problem: &Problem,
    lam: u32,
    t: &[C64],
) -> Result<Vec<C64>, GaudinError> {
    let y = FPoly::from_roots(t);
    let total: usize = problem
        .lambdas
        .iter()
        .map(|w| {
            let v: u32 = w.0[0].to_integer().try_into().expect("small weight");
            v as usize
        })
        .sum();
    let deg_y = t.len();
    if total < deg_y {
        return Err(GaudinError::NonGeneric(
            "descendant degree would be negative".into(),
        ));
    }
    let q = total - deg_y;
    let c = lam as f64 + 1.0;
    // g = T(x) = prod (x - z_s)^{Lambda_s}
    let mut g = FPoly::one();
    for (w, z) in problem.lambdas.iter().zip(&problem.zs) {
        let e: u32 = w.0[0].to_integer().try_into().expect("small weight");
        let zf = C64::new(to_f64(z), 0.0);
        for _ in 0..e {
            g = g.mul(&FPoly(vec![-zf, C64::new(1.0, 0.0)]));
        }
    }
    // column j: x^j ((c + j) y - x y')
    let yp = y.derivative();
    let xyp = {
        let mut v = vec![C64::new(0.0, 0.0)];
        v.extend(yp.0.iter().copied());
        FPoly(v)
    };
    let nrows = total + 1;
    let mut mat = CMat::zeros(nrows, q + 1);
    for j in 0..=q {
        let scaled: Vec<C64> =
            y.0.iter()
                .map(|co| co * C64::new(c + j as f64, 0.0))
                .collect();
        let col = {
            let base = FPoly(scaled);
            let diff: Vec<C64> = (0..base.0.len().max(xyp.0.len()))
                .map(|k| {
                    let a = base.0.get(k).copied().unwrap_or(C64::new(0.0, 0.0));
                    let b = xyp.0.get(k).copied().unwrap_or(C64::new(0.0, 0.0));
                    a - b
                })
                .collect::<Vec<_>>();
            diff
        };
        for (k, v) in col.iter().enumerate() {
            if k + j < nrows {
                mat[(k + j, j)] += *v;
            }
        }
    }
    let rhs: Vec<C64> = (0..nrows)
        .map(|k| g.0.get(k).copied().unwrap_or(C64::new(0.0, 0.0)))
        .collect();
    let coeffs = least_squares(&mat, &rhs, 1e-10)
        .ok_or_else(|| GaudinError::NonGeneric("float reproduction solve is singular".into()))?;
    let ytilde = FPoly(coeffs);
    Ok(poly_roots(&ytilde, 400, 1e-14))
}
