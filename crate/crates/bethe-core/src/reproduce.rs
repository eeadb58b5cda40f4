//! The simple reproduction procedures as exact linear solves, plus
//! off-diagonality, fertility, and the critical-point criterion.
//!
//! A tuple of coordinates is represented by the r-tuple of monic polynomials
//! `y_i(x) = prod_j (x - t_j^(i))`; the roots themselves are never
//! materialized. Reproduction in direction `i` replaces `y_i` by the unique
//! polynomial solution of the defining Wronskian identity, found by solving
//! the linear system on its coefficients. After every successful solve the
//! identity is re-evaluated exactly, coefficient by coefficient.

use crate::exactmath::{qwronskian, solve_dense, LinSolve, Poly, QPoly};
use crate::rational::{rat_int, Rational};
use crate::rootdata::{MultWeight, RootDataError, RootSystem, WeightVec};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReproduceError {
    #[error("invalid problem data: {0}")]
    InvalidProblem(String),
    #[error("tuple is infertile in direction {direction}: {reason}")]
    Infertile { direction: usize, reason: String },
    #[error("reproduction in direction {direction} has a {kernel_dim}-dimensional solution space")]
    AmbiguousSolution { direction: usize, kernel_dim: usize },
    #[error("degenerate weight in direction {direction}: {reason}")]
    WeightWall { direction: usize, reason: String },
    #[error("solved descendant fails the defining Wronskian identity in direction {direction}")]
    IdentityFailure { direction: usize },
    #[error("weight kind does not match the problem family")]
    WeightKindMismatch,
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// Which Bethe system the problem belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyKind {
    Trig,
    Exp,
    Xxx { h: Rational },
}

/// Fixed data of a Bethe problem: root system, marked points with dominant
/// integral weights, and the family.
#[derive(Debug, Clone)]
pub struct Problem {
    pub rs: RootSystem,
    pub lambdas: Vec<WeightVec>,
    pub zs: Vec<Rational>,
    pub family: FamilyKind,
}

/// An r-tuple of monic polynomials, considered up to scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyTuple(pub Vec<Poly>);

impl PolyTuple {
    /// Monicizes every entry.
    pub fn new(polys: Vec<Poly>) -> Self {
        PolyTuple(polys.into_iter().map(|p| p.monicize()).collect())
    }

    pub fn trivial(rank: usize) -> Self {
        PolyTuple(vec![Poly::one(); rank])
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.0.iter().map(|p| p.degree().unwrap_or(0)).collect()
    }
}

/// Weight datum transported along a population: additive for the
/// trigonometric and exponential families, multiplicative for XXX.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight {
    Additive(WeightVec),
    Mult(MultWeight),
}

impl Weight {
    pub fn coords(&self) -> &[Rational] {
        match self {
            Weight::Additive(w) => &w.0,
            Weight::Mult(k) => &k.0,
        }
    }

    pub fn as_additive(&self) -> Option<&WeightVec> {
        match self {
            Weight::Additive(w) => Some(w),
            Weight::Mult(_) => None,
        }
    }

    pub fn as_mult(&self) -> Option<&MultWeight> {
        match self {
            Weight::Mult(k) => Some(k),
            Weight::Additive(_) => None,
        }
    }
}

impl Problem {
    pub fn new(
        rs: RootSystem,
        lambdas: Vec<WeightVec>,
        zs: Vec<Rational>,
        family: FamilyKind,
    ) -> Result<Self, ReproduceError> {
        let err = |msg: String| Err(ReproduceError::InvalidProblem(msg));
        if lambdas.len() != zs.len() {
            return err("Lambda list and z list must have equal length".into());
        }
        for lam in &lambdas {
            if lam.rank() != rs.rank() {
                return err("weight rank mismatch".into());
            }
            if !lam.is_dominant_integral() {
                return err(format!("weight {lam:?} is not dominant integral"));
            }
        }
        for (s, z) in zs.iter().enumerate() {
            for z2 in zs.iter().skip(s + 1) {
                if z == z2 {
                    return err("marked points must be pairwise distinct".into());
                }
            }
        }
        match &family {
            FamilyKind::Trig => {
                if zs.iter().any(|z| z.is_zero()) {
                    return err("trigonometric family requires z_s != 0".into());
                }
            }
            FamilyKind::Exp => {}
            FamilyKind::Xxx { h } => {
                if h.is_zero() {
                    return err("XXX family requires h != 0".into());
                }
                for (s, z) in zs.iter().enumerate() {
                    for z2 in zs.iter().skip(s + 1) {
                        if ((z - z2) / h).denom().is_one() {
                            return err("XXX family requires z_i - z_j not in h*Z".into());
                        }
                    }
                }
            }
        }
        Ok(Problem {
            rs,
            lambdas,
            zs,
            family,
        })
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn weight_matches_family(&self, w: &Weight) -> bool {
        matches!(
            (&self.family, w),
            (FamilyKind::Xxx { .. }, Weight::Mult(_))
                | (FamilyKind::Trig | FamilyKind::Exp, Weight::Additive(_))
        )
    }

    /// Reflects a transported weight in direction `i` according to the
    /// family: shifted action for TRIG, plain for EXP, multiplicative for XXX.
    pub fn reflect_weight(&self, i: usize, w: &Weight) -> Result<Weight, ReproduceError> {
        if !self.weight_matches_family(w) {
            return Err(ReproduceError::WeightKindMismatch);
        }
        Ok(match (&self.family, w) {
            (FamilyKind::Trig, Weight::Additive(lam)) => {
                Weight::Additive(self.rs.reflect_shifted(i, lam))
            }
            (FamilyKind::Exp, Weight::Additive(lam)) => {
                Weight::Additive(self.rs.reflect_plain(i, lam))
            }
            (FamilyKind::Xxx { .. }, Weight::Mult(k)) => Weight::Mult(self.rs.reflect_mult(i, k)),
            _ => unreachable!(),
        })
    }

    /// `T_i(x) = prod_s (x - z_s)^{<Lambda_s, alpha_i^vee>}`.
    pub fn build_t(&self, i: usize) -> Poly {
        let mut acc = Poly::one();
        for (lam, z) in self.lambdas.iter().zip(&self.zs) {
            let e: u32 = lam.0[i]
                .to_integer()
                .try_into()
                .expect("dominant integral weight fits u32");
            let factor = Poly::from_coeffs(vec![-z.clone(), Rational::one()]);
            acc = &acc * &factor.pow(e);
        }
        acc
    }

    /// `T_i^(h)(x) = prod_s prod_{j=1}^{(Lambda_s, alpha_i)}
    /// (x - z_s - (Lambda_s, alpha_i) h/2 + j h)` for the XXX family.
    pub fn build_t_h(&self, i: usize) -> Poly {
        let FamilyKind::Xxx { h } = &self.family else {
            panic!("build_t_h requires the XXX family");
        };
        let mut acc = Poly::one();
        for (lam, z) in self.lambdas.iter().zip(&self.zs) {
            let pairing = self.rs.weight_pairing(lam, i);
            let bound: i64 = pairing
                .to_integer()
                .try_into()
                .expect("scalar product fits i64");
            for j in 1..=bound {
                // x - z_s - pairing*h/2 + j*h
                let c = -z - &(&pairing * h) / rat_int(2) + h * rat_int(j);
                acc = &acc * &Poly::from_coeffs(vec![c, Rational::one()]);
            }
        }
        acc
    }

    /// Family-appropriate T polynomial for direction `i`.
    pub fn t_poly(&self, i: usize) -> Poly {
        match self.family {
            FamilyKind::Xxx { .. } => self.build_t_h(i),
            _ => self.build_t(i),
        }
    }

    /// The right-hand side of the reproduction identity in direction `i`:
    /// `T_i prod_{j != i} y_j^{-a_ij}` (TRIG/EXP), or with `y_m(x + h/2)`
    /// and `T_i^(h)` for XXX.
    pub fn rhs_g(&self, tuple: &PolyTuple, i: usize) -> Poly {
        let mut acc = self.t_poly(i);
        for j in 0..self.rank() {
            if j == i {
                continue;
            }
            let e = -self.rs.a(i, j);
            if e == 0 {
                continue;
            }
            let base = match &self.family {
                FamilyKind::Xxx { h } => tuple.0[j].shift(&(h / rat_int(2))),
                _ => tuple.0[j].clone(),
            };
            acc = &acc * &base.pow(e as u32);
        }
        acc
    }
}

/// A successful reproduction step: the descendant tuple (slot `i` replaced
/// and monicized), the reflected weight, and the raw (non-monic) solution
/// that satisfies the identity on the nose.
#[derive(Debug, Clone)]
pub struct Descendant {
    pub tuple: PolyTuple,
    pub weight: Weight,
    pub raw: Poly,
}

/// Solves `sum_j column_j(x) b_j = g(x)` exactly for the coefficients `b_j`
/// of the unknown polynomial of degree at most `q`.
fn solve_coefficient_system(
    columns: &[Poly],
    g: &Poly,
    direction: usize,
) -> Result<Poly, ReproduceError> {
    let nrows = columns
        .iter()
        .map(|c| c.degree().map_or(0, |d| d + 1))
        .chain([g.degree().map_or(0, |d| d + 1)])
        .max()
        .unwrap_or(1)
        .max(1);
    let ncols = columns.len();
    let a: Vec<Vec<Rational>> = (0..nrows)
        .map(|r| (0..ncols).map(|c| columns[c].coeff(r)).collect())
        .collect();
    let b: Vec<Rational> = (0..nrows).map(|r| g.coeff(r)).collect();
    match solve_dense(&a, &b) {
        LinSolve::Unique(x) => Ok(Poly::from_coeffs(x)),
        LinSolve::Inconsistent => Err(ReproduceError::Infertile {
            direction,
            reason: "coefficient system is inconsistent".into(),
        }),
        LinSolve::Underdetermined { nullity, .. } => Err(ReproduceError::AmbiguousSolution {
            direction,
            kernel_dim: nullity,
        }),
    }
}

/// Reproduction in direction `i`, dispatched on the problem family.
pub fn reproduce(
    problem: &Problem,
    tuple: &PolyTuple,
    weight: &Weight,
    i: usize,
) -> Result<Descendant, ReproduceError> {
    if !problem.weight_matches_family(weight) {
        return Err(ReproduceError::WeightKindMismatch);
    }
    match (&problem.family, weight) {
        (FamilyKind::Trig, Weight::Additive(lam)) => reproduce_trig(problem, tuple, lam, i),
        (FamilyKind::Exp, Weight::Additive(lam)) => reproduce_exp(problem, tuple, lam, i),
        (FamilyKind::Xxx { h }, Weight::Mult(kappa)) => {
            let h = h.clone();
            reproduce_xxx(problem, tuple, kappa, &h, i)
        }
        _ => unreachable!(),
    }
}

/// Trigonometric reproduction: solves
/// `c y ytilde + x (y ytilde' - y' ytilde) = g` with
/// `c = <lam + rho, alpha_i^vee>`, the polynomial form of
/// `W(y, x^c ytilde) = x^{c-1} g` in the determinant convention.
pub fn reproduce_trig(
    problem: &Problem,
    tuple: &PolyTuple,
    lam: &WeightVec,
    i: usize,
) -> Result<Descendant, ReproduceError> {
    let y = &tuple.0[i];
    let c = &lam.0[i] + &Rational::one();
    let g = problem.rhs_g(tuple, i);
    let q = target_degree(&g, y, i)?;

    // column for b_j: x^j ((c + j) y - x y')
    let xyp = y.derivative().mul_xpow(1);
    let columns: Vec<Poly> = (0..=q)
        .map(|j| (&y.scale(&(&c + &rat_int(j as i64))) - &xyp).mul_xpow(j))
        .collect();
    let raw = solve_coefficient_system(&columns, &g, i)?;

    // re-evaluate the defining identity as an exact QPoly identity
    let lhs = qwronskian(&[QPoly::from_poly(y.clone()), QPoly::new(c, raw.clone())]);
    let rhs = QPoly::new(lam.0[i].clone(), g);
    if lhs != rhs {
        return Err(ReproduceError::IdentityFailure { direction: i });
    }

    descendant(problem, tuple, Weight::Additive(lam.clone()), raw, i)
}

/// Exponential reproduction: solves
/// `c y ytilde + (y ytilde' - y' ytilde) = g` with `c = <lam, alpha_i^vee>`,
/// the polynomial form of `W(y, e^{cx} ytilde) = e^{cx} g`.
pub fn reproduce_exp(
    problem: &Problem,
    tuple: &PolyTuple,
    lam: &WeightVec,
    i: usize,
) -> Result<Descendant, ReproduceError> {
    let y = &tuple.0[i];
    let c = lam.0[i].clone();
    if c.is_zero() {
        return Err(ReproduceError::WeightWall {
            direction: i,
            reason: "<lambda, alpha_i^vee> = 0".into(),
        });
    }
    let g = problem.rhs_g(tuple, i);
    let q = target_degree(&g, y, i)?;

    // column for b_j: x^j (c y - y') + j x^{j-1} y
    let yp = y.derivative();
    let base = &y.scale(&c) - &yp;
    let columns: Vec<Poly> = (0..=q)
        .map(|j| {
            let mut col = base.mul_xpow(j);
            if j > 0 {
                col = &col + &y.scale(&rat_int(j as i64)).mul_xpow(j - 1);
            }
            col
        })
        .collect();
    let raw = solve_coefficient_system(&columns, &g, i)?;

    // identity: c y r + (y r' - y' r) = g exactly
    let lhs = &(&y.scale(&c) * &raw) + &(&(y * &raw.derivative()) - &(&yp * &raw));
    if lhs != g {
        return Err(ReproduceError::IdentityFailure { direction: i });
    }

    descendant(problem, tuple, Weight::Additive(lam.clone()), raw, i)
}

/// Difference reproduction: solves
/// `kappa_i y(x) ytilde(x+h) - y(x+h) ytilde(x) = g_h`,
/// the polynomial form of `W_h(y, e^{cx} ytilde) = e^{cx} g_h` with
/// `kappa_i = e^{c h}`.
pub fn reproduce_xxx(
    problem: &Problem,
    tuple: &PolyTuple,
    kappa: &MultWeight,
    h: &Rational,
    i: usize,
) -> Result<Descendant, ReproduceError> {
    let y = &tuple.0[i];
    let ki = kappa.0[i].clone();
    if ki.is_one() {
        return Err(ReproduceError::WeightWall {
            direction: i,
            reason: "kappa_i = 1 makes the leading coefficient vanish".into(),
        });
    }
    let g = problem.rhs_g(tuple, i);
    let q = target_degree(&g, y, i)?;

    let y_shift = y.shift(h);
    // column for b_j: kappa_i y(x) (x+h)^j - y(x+h) x^j
    let xh = Poly::from_coeffs(vec![h.clone(), Rational::one()]);
    let ky = y.scale(&ki);
    let columns: Vec<Poly> = (0..=q)
        .map(|j| &(&ky * &xh.pow(j as u32)) - &y_shift.mul_xpow(j))
        .collect();
    let raw = solve_coefficient_system(&columns, &g, i)?;

    let lhs = &(&ky * &raw.shift(h)) - &(&y_shift * &raw);
    if lhs != g {
        return Err(ReproduceError::IdentityFailure { direction: i });
    }

    descendant(problem, tuple, Weight::Mult(kappa.clone()), raw, i)
}

fn target_degree(g: &Poly, y: &Poly, direction: usize) -> Result<usize, ReproduceError> {
    let q = g.degree_i64() - y.degree_i64();
    if q < 0 {
        return Err(ReproduceError::Infertile {
            direction,
            reason: format!("target degree {q} is negative"),
        });
    }
    Ok(q as usize)
}

fn descendant(
    problem: &Problem,
    tuple: &PolyTuple,
    weight: Weight,
    raw: Poly,
    i: usize,
) -> Result<Descendant, ReproduceError> {
    let mut polys = tuple.0.clone();
    polys[i] = raw.monicize();
    Ok(Descendant {
        tuple: PolyTuple(polys),
        weight: problem.reflect_weight(i, &weight)?,
        raw,
    })
}

/// Family-dependent off-diagonality, decided by exact gcd and evaluation.
pub fn is_off_diagonal(problem: &Problem, tuple: &PolyTuple) -> bool {
    let r = problem.rank();
    let coprime = |a: &Poly, b: &Poly| match (a.degree(), b.degree()) {
        (Some(0), _) | (_, Some(0)) => true,
        _ => Poly::gcd(a, b).is_ok_and(|g| g.degree() == Some(0)),
    };
    for i in 0..r {
        let yi = &tuple.0[i];
        if !yi.is_squarefree() {
            return false;
        }
        if matches!(problem.family, FamilyKind::Trig) && yi.eval(&Rational::zero()).is_zero() {
            return false;
        }
        match &problem.family {
            FamilyKind::Trig | FamilyKind::Exp => {
                for j in 0..r {
                    if j != i && problem.rs.a(i, j) != 0 && !coprime(yi, &tuple.0[j]) {
                        return false;
                    }
                }
                if !coprime(yi, &problem.build_t(i)) {
                    return false;
                }
            }
            FamilyKind::Xxx { h } => {
                let half = h / rat_int(2);
                for m in 0..r {
                    if m != i && problem.rs.a(i, m) != 0 && !coprime(yi, &tuple.0[m].shift(&half)) {
                        return false;
                    }
                }
                if !coprime(yi, &problem.build_t_h(i)) {
                    return false;
                }
                if !coprime(yi, &yi.shift(h)) {
                    return false;
                }
            }
        }
    }
    true
}

/// True when all `r` directed reproductions succeed.
pub fn is_fertile(problem: &Problem, tuple: &PolyTuple, weight: &Weight) -> bool {
    (0..problem.rank()).all(|i| reproduce(problem, tuple, weight, i).is_ok())
}

/// Verdict of the exact critical-point criterion: degrees, off-diagonality
/// and fertility. An ambiguous direction propagates as `Indeterminate`
/// rather than a boolean.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Critical,
    NotCritical { reasons: Vec<String> },
    Indeterminate { direction: usize, kernel_dim: usize },
}

impl Verdict {
    pub fn is_critical(&self) -> bool {
        matches!(self, Verdict::Critical)
    }
}

/// The module's exact substitute for per-root evaluation of the Bethe
/// equation: `deg y_i = l_i`, off-diagonal, and fertile.
pub fn verify_critical_point(
    problem: &Problem,
    tuple: &PolyTuple,
    weight: &Weight,
    l: &[usize],
) -> Verdict {
    let mut reasons = Vec::new();
    let degs = tuple.degrees();
    if degs != l {
        reasons.push(format!("degrees {degs:?} differ from required {l:?}"));
    }
    if !is_off_diagonal(problem, tuple) {
        reasons.push("tuple is not off-diagonal".into());
    }
    for i in 0..problem.rank() {
        match reproduce(problem, tuple, weight, i) {
            Ok(_) => {}
            Err(ReproduceError::AmbiguousSolution {
                direction,
                kernel_dim,
            }) => {
                return Verdict::Indeterminate {
                    direction,
                    kernel_dim,
                }
            }
            Err(e) => reasons.push(e.to_string()),
        }
    }
    if reasons.is_empty() {
        Verdict::Critical
    } else {
        Verdict::NotCritical { reasons }
    }
}

/// Folded copy of a tuple along a folding plan (each target slot takes the
/// polynomial of its source slot).
pub fn fold_tuple(plan: &crate::rootdata::FoldPlan, tuple: &PolyTuple) -> PolyTuple {
    PolyTuple(plan.fold_slots(&tuple.0))
}

/// Degree predicted by the reproduction degree law,
/// `deg ytilde_i = deg T_i + sum_{j != i} (-a_ij) deg y_j - deg y_i`.
pub fn predicted_descendant_degree(problem: &Problem, tuple: &PolyTuple, i: usize) -> i64 {
    let mut d = problem.t_poly(i).degree_i64();
    for j in 0..problem.rank() {
        if j != i {
            d += -problem.rs.a(i, j) * tuple.0[j].degree_i64();
        }
    }
    d - tuple.0[i].degree_i64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse_rational, rat};
    use crate::rootdata::Family;

    fn wv(coords: &[&str]) -> WeightVec {
        WeightVec(coords.iter().map(|s| parse_rational(s).unwrap()).collect())
    }

    fn sl2_problem(lams: &[i64], zs: &[&str], family: FamilyKind) -> Problem {
        let rs = RootSystem::make(Family::A, 1).unwrap();
        let lambdas = lams.iter().map(|&l| WeightVec(vec![rat_int(l)])).collect();
        let z = zs.iter().map(|s| parse_rational(s).unwrap()).collect();
        Problem::new(rs, lambdas, z, family).unwrap()
    }

    #[test]
    fn problem_validation() {
        let rs = RootSystem::make(Family::A, 1).unwrap();
        // z = 0 rejected for TRIG
        assert!(Problem::new(
            rs.clone(),
            vec![WeightVec(vec![rat_int(1)])],
            vec![rat_int(0)],
            FamilyKind::Trig
        )
        .is_err());
        // coincident z rejected
        assert!(Problem::new(
            rs.clone(),
            vec![WeightVec(vec![rat_int(1)]), WeightVec(vec![rat_int(1)])],
            vec![rat_int(1), rat_int(1)],
            FamilyKind::Trig
        )
        .is_err());
        // z_i - z_j in hZ rejected for XXX
        assert!(Problem::new(
            rs.clone(),
            vec![WeightVec(vec![rat_int(1)]), WeightVec(vec![rat_int(1)])],
            vec![rat_int(1), rat_int(2)],
            FamilyKind::Xxx { h: rat_int(1) }
        )
        .is_err());
        // non-dominant weight rejected
        assert!(Problem::new(
            rs,
            vec![WeightVec(vec![rat(1, 2)])],
            vec![rat_int(1)],
            FamilyKind::Trig
        )
        .is_err());
    }

    #[test]
    fn build_t_examples() {
        let p = sl2_problem(&[1], &["1"], FamilyKind::Trig);
        assert_eq!(p.build_t(0), Poly::from_roots(&[rat_int(1)]));
        let p2 = sl2_problem(&[2], &["3"], FamilyKind::Trig);
        assert_eq!(p2.build_t(0), Poly::from_roots(&[rat_int(3), rat_int(3)]));
        let p0 = sl2_problem(&[], &[], FamilyKind::Trig);
        assert_eq!(p0.build_t(0), Poly::one());
    }

    #[test]
    fn build_t_h_examples() {
        // one point z=0, (Lambda, alpha)=1, h=1 -> (x + 1/2)
        let p = sl2_problem(&[1], &["0"], FamilyKind::Xxx { h: rat_int(1) });
        assert_eq!(
            p.build_t_h(0),
            Poly::from_coeffs(vec![rat(1, 2), Rational::one()])
        );
        // (Lambda, alpha)=2, h=1 -> x(x+1)
        let p2 = sl2_problem(&[2], &["0"], FamilyKind::Xxx { h: rat_int(1) });
        assert_eq!(
            p2.build_t_h(0),
            Poly::from_coeffs(vec![rat_int(0), rat_int(1), rat_int(1)])
        );
        // zero weight -> 1
        let p3 = sl2_problem(&[0], &["0"], FamilyKind::Xxx { h: rat_int(1) });
        assert_eq!(p3.build_t_h(0), Poly::one());
    }

    #[test]
    fn rhs_exponents() {
        // B2, direction 2 (0-based 1): -a_21 = 2, so g = T_2 y_1^2
        let rs = RootSystem::make(Family::B, 2).unwrap();
        let p = Problem::new(rs, vec![], vec![], FamilyKind::Trig).unwrap();
        let y1 = Poly::from_roots(&[rat_int(2)]);
        let tuple = PolyTuple::new(vec![y1.clone(), Poly::one()]);
        assert_eq!(p.rhs_g(&tuple, 1), &y1 * &y1);
        // A2, direction 1: g = T_1 y_2
        let rs = RootSystem::make(Family::A, 2).unwrap();
        let p = Problem::new(rs, vec![], vec![], FamilyKind::Trig).unwrap();
        let y2 = Poly::from_roots(&[rat_int(5)]);
        let tuple = PolyTuple::new(vec![Poly::one(), y2.clone()]);
        assert_eq!(p.rhs_g(&tuple, 0), y2);
        // all y_j = 1 -> T_i
        let p1 = sl2_problem(&[1], &["1"], FamilyKind::Trig);
        assert_eq!(
            p1.rhs_g(&PolyTuple::trivial(1), 0),
            Poly::from_roots(&[rat_int(1)])
        );
    }

    #[test]
    fn trig_reproduction_trivial_and_seed() {
        // n=0: y=1, T=1, lam=5/3 (c=8/3) -> raw 3/8 = 1/c, monic 1
        let p = sl2_problem(&[], &[], FamilyKind::Trig);
        let lam = wv(&["5/3"]);
        let d = reproduce_trig(&p, &PolyTuple::trivial(1), &lam, 0).unwrap();
        assert_eq!(d.raw, Poly::constant(rat(3, 8)));
        assert_eq!(d.tuple.0[0], Poly::one());
        assert_eq!(d.weight, Weight::Additive(wv(&["-11/3"])));

        // seed: Lambda=(1), z=(1), lam=5/3, y = x - 5/8 -> ytilde = 1
        let p = sl2_problem(&[1], &["1"], FamilyKind::Trig);
        let y = PolyTuple::new(vec![Poly::from_roots(&[rat(5, 8)])]);
        let d = reproduce_trig(&p, &y, &lam, 0).unwrap();
        assert_eq!(d.tuple.0[0], Poly::one());
        assert_eq!(d.raw, Poly::constant(rat(3, 5)));
    }

    #[test]
    fn trig_reproduction_involution() {
        let p = sl2_problem(&[1], &["1"], FamilyKind::Trig);
        let lam = wv(&["5/3"]);
        let y = PolyTuple::new(vec![Poly::from_roots(&[rat(5, 8)])]);
        let d = reproduce_trig(&p, &y, &lam, 0).unwrap();
        let lam2 = d.weight.as_additive().unwrap().clone();
        let back = reproduce_trig(&p, &d.tuple, &lam2, 0).unwrap();
        assert_eq!(back.tuple, y);
        assert_eq!(back.weight, Weight::Additive(lam));
    }

    #[test]
    fn exp_reproduction_examples() {
        // y=1, g=1, c=3/2 -> raw 2/3
        let p = sl2_problem(&[], &[], FamilyKind::Exp);
        let d = reproduce_exp(&p, &PolyTuple::trivial(1), &wv(&["3/2"]), 0).unwrap();
        assert_eq!(d.raw, Poly::constant(rat(2, 3)));
        // y=1, g=x (T = x from z=0), c=1: c(x+b) + 1 = x  =>  b = -1
        let p2 = sl2_problem(&[1], &["0"], FamilyKind::Exp);
        let d2 = reproduce_exp(&p2, &PolyTuple::trivial(1), &wv(&["1"]), 0).unwrap();
        assert_eq!(d2.raw, Poly::from_coeffs(vec![rat_int(-1), rat_int(1)]));
        // c = 0 is a wall
        let err = reproduce_exp(&p, &PolyTuple::trivial(1), &wv(&["0"]), 0).unwrap_err();
        assert!(matches!(err, ReproduceError::WeightWall { .. }));
    }

    #[test]
    fn exp_reproduction_involution() {
        let p = sl2_problem(&[2], &["1"], FamilyKind::Exp);
        let lam = wv(&["5/3"]);
        let start = PolyTuple::trivial(1);
        let d = reproduce_exp(&p, &start, &lam, 0).unwrap();
        let lam2 = d.weight.as_additive().unwrap().clone();
        let back = reproduce_exp(&p, &d.tuple, &lam2, 0).unwrap();
        assert_eq!(back.tuple, start);
    }

    #[test]
    fn xxx_reproduction_examples() {
        let h = rat_int(1);
        // y=1, g_h=1 (no points), kappa=2 -> raw 1/(kappa-1) = 1
        let p = sl2_problem(&[], &[], FamilyKind::Xxx { h: h.clone() });
        let k = MultWeight::new(vec![rat_int(2)]).unwrap();
        let d = reproduce_xxx(&p, &PolyTuple::trivial(1), &k, &h, 0).unwrap();
        assert_eq!(d.raw, Poly::one());
        // kappa = 1 is a wall
        let k1 = MultWeight::new(vec![rat_int(1)]).unwrap();
        let err = reproduce_xxx(&p, &PolyTuple::trivial(1), &k1, &h, 0).unwrap_err();
        assert!(matches!(err, ReproduceError::WeightWall { .. }));
        // one point z=0, Lambda=1: g_h = x + 1/2; with r = x + b:
        // 2 r(x+1) - r(x) = x + 2 + b = x + 1/2  =>  b = -3/2
        let p2 = sl2_problem(&[1], &["0"], FamilyKind::Xxx { h: h.clone() });
        let d2 = reproduce_xxx(&p2, &PolyTuple::trivial(1), &k, &h, 0).unwrap();
        assert_eq!(d2.raw, Poly::from_coeffs(vec![rat(-3, 2), rat_int(1)]));
    }

    #[test]
    fn xxx_reproduction_involution() {
        let h = rat_int(1);
        let p = sl2_problem(&[2], &["1/3"], FamilyKind::Xxx { h: h.clone() });
        let k = MultWeight::new(vec![rat_int(3)]).unwrap();
        let start = PolyTuple::trivial(1);
        let d = reproduce_xxx(&p, &start, &k, &h, 0).unwrap();
        let k2 = d.weight.as_mult().unwrap().clone();
        let back = reproduce_xxx(&p, &d.tuple, &k2, &h, 0).unwrap();
        assert_eq!(back.tuple, start);
        assert_eq!(back.weight, Weight::Mult(k));
    }

    #[test]
    fn off_diagonal_checks() {
        let p = sl2_problem(&[1], &["1"], FamilyKind::Trig);
        assert!(is_off_diagonal(&p, &PolyTuple::trivial(1)));
        // root at 0 fails TRIG
        assert!(!is_off_diagonal(&p, &PolyTuple::new(vec![Poly::x()])));
        // seed tuple passes
        assert!(is_off_diagonal(
            &p,
            &PolyTuple::new(vec![Poly::from_roots(&[rat(5, 8)])])
        ));
        // common root with T fails
        assert!(!is_off_diagonal(
            &p,
            &PolyTuple::new(vec![Poly::from_roots(&[rat_int(1)])])
        ));
        // root at 0 passes EXP
        let pe = sl2_problem(&[1], &["1"], FamilyKind::Exp);
        assert!(is_off_diagonal(&pe, &PolyTuple::new(vec![Poly::x()])));
    }

    #[test]
    fn xxx_off_diagonal_shifted_conditions() {
        let h = rat_int(1);
        let p = sl2_problem(&[1], &["0"], FamilyKind::Xxx { h: h.clone() });
        // y with roots t and t+h violates gcd(y, y(x+h)) = 1
        let bad = PolyTuple::new(vec![Poly::from_roots(&[rat_int(2), rat_int(3)])]);
        assert!(!is_off_diagonal(&p, &bad));
        let good = PolyTuple::new(vec![Poly::from_roots(&[rat_int(2), rat(7, 2)])]);
        assert!(is_off_diagonal(&p, &good));
        // root of T^h (= -1/2) violates the T condition
        let on_t = PolyTuple::new(vec![Poly::from_roots(&[rat(-1, 2)])]);
        assert!(!is_off_diagonal(&p, &on_t));
    }

    #[test]
    fn verify_critical_point_cases() {
        let p = sl2_problem(&[1], &["1"], FamilyKind::Trig);
        let lam = Weight::Additive(wv(&["5/3"]));
        let seed = PolyTuple::new(vec![Poly::from_roots(&[rat(5, 8)])]);
        assert!(verify_critical_point(&p, &seed, &lam, &[1]).is_critical());
        // trivial tuple at l = 0
        assert!(verify_critical_point(&p, &PolyTuple::trivial(1), &lam, &[0]).is_critical());
        // y = T fails off-diagonality
        let bad = PolyTuple::new(vec![Poly::from_roots(&[rat_int(1)])]);
        assert!(!verify_critical_point(&p, &bad, &lam, &[1]).is_critical());
        // wrong degree fails
        assert!(!verify_critical_point(&p, &seed, &lam, &[2]).is_critical());
    }

    #[test]
    fn critical_descendants_stay_critical() {
        // if a verified critical tuple has an off-diagonal direction-i
        // descendant, the descendant is critical at the reflected weight
        let p = sl2_problem(&[1, 2], &["1", "2"], FamilyKind::Trig);
        let lam = Weight::Additive(wv(&["5/3"]));
        // build a critical tuple by reproducing from the trivial one twice
        let d1 = reproduce(&p, &PolyTuple::trivial(1), &lam, 0).unwrap();
        assert!(is_off_diagonal(&p, &d1.tuple));
        let degrees = d1.tuple.degrees();
        assert!(verify_critical_point(&p, &d1.tuple, &d1.weight, &degrees).is_critical());
        let d2 = reproduce(&p, &d1.tuple, &d1.weight, 0).unwrap();
        assert!(is_off_diagonal(&p, &d2.tuple));
        let degrees2 = d2.tuple.degrees();
        assert!(verify_critical_point(&p, &d2.tuple, &d2.weight, &degrees2).is_critical());
    }

    #[test]
    fn degree_law_on_seed() {
        let p = sl2_problem(&[1], &["1"], FamilyKind::Trig);
        let seed = PolyTuple::new(vec![Poly::from_roots(&[rat(5, 8)])]);
        assert_eq!(predicted_descendant_degree(&p, &seed, 0), 0);
        assert_eq!(
            predicted_descendant_degree(&p, &PolyTuple::trivial(1), 0),
            1
        );
    }
}
