//! Dense univariate polynomials over arbitrary-precision rationals.
//!
//! Coefficients are stored low-to-high. Invariant: the coefficient vector
//! never ends in a zero, so the zero polynomial is the empty vector and
//! `degree()` returns `None` for it.

use crate::rational::{rat_int, Rational};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ExactError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// Builds from a low-to-high coefficient list, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The monic polynomial with the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut p = Poly::one();
        for r in roots {
            p = &p * &Poly::from_coeffs(vec![-r.clone(), Rational::one()]);
        }
        p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counting as a large negative sentinel.
    pub fn degree_i64(&self) -> i64 {
        self.degree().map_or(i64::MIN / 2, |d| d as i64)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat_int(k as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// `p(x + s)`, computed by Horner evaluation at `x + s`.
    pub fn shift(&self, s: &Rational) -> Poly {
        let xs = Poly::from_coeffs(vec![s.clone(), Rational::one()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &xs) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Multiplies by `x^k`.
    pub fn mul_xpow(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient. Idempotent; the zero polynomial
    /// stays zero. Tuples of polynomials are considered up to scalars, so
    /// this is the canonical representative.
    pub fn monicize(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divmod(&self, div: &Poly) -> Result<(Poly, Poly), ExactError> {
        let dd = div.degree().ok_or(ExactError::DivisionByZeroPoly)?;
        let lc = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Ok((Poly::zero(), self.clone()));
        }
        let qlen = rem.len() - dd;
        let mut q = vec![Rational::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in div.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[k + j] -= t;
            }
            q[k] = c;
        }
        Ok((Poly::from_coeffs(q), Poly::from_coeffs(rem)))
    }

    /// Exact division; a nonzero remainder is an error.
    pub fn divide_exact(&self, div: &Poly) -> Result<Poly, ExactError> {
        let (q, r) = self.divmod(div)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactError::NonDivisible)
        }
    }

    /// Monic greatest common divisor. `gcd(0, 0)` is undefined.
    pub fn gcd(a: &Poly, b: &Poly) -> Result<Poly, ExactError> {
        if a.is_zero() && b.is_zero() {
            return Err(ExactError::Undefined);
        }
        let mut f = a.clone();
        let mut g = b.clone();
        while !g.is_zero() {
            let (_, r) = f.divmod(&g)?;
            f = g;
            g = r;
        }
        Ok(f.monicize())
    }

    /// True when the polynomial has no repeated roots, i.e. `gcd(p, p')` is
    /// constant. Nonzero constants are squarefree; the zero polynomial is not.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => Poly::gcd(self, &self.derivative())
                .map(|g| g.degree() == Some(0))
                .unwrap_or(false),
        }
    }
}

/// Product of powers, `prod_i p_i^{e_i}`.
pub fn pow_product(factors: &[(Poly, u32)]) -> Poly {
    let mut acc = Poly::one();
    for (p, e) in factors {
        acc = &acc * &p.pow(*e);
    }
    acc
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn degree_sentinel_and_invariant() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(
            Poly::from_coeffs(vec![rat_int(0), rat_int(0)]),
            Poly::zero()
        );
        assert_eq!(p(&[1, 2, 3]).degree(), Some(2));
    }

    #[test]
    fn shift_matches_binomial() {
        // (x+1)^2 = x^2 + 2x + 1
        let sq = p(&[0, 0, 1]);
        assert_eq!(sq.shift(&rat_int(1)), p(&[1, 2, 1]));
        // shifting back is the inverse
        assert_eq!(sq.shift(&rat(3, 7)).shift(&rat(-3, 7)), sq);
    }

    #[test]
    fn divmod_and_exact_division() {
        let a = p(&[-1, 0, 1]); // x^2 - 1
        let b = p(&[-1, 1]); // x - 1
        assert_eq!(a.divide_exact(&b).unwrap(), p(&[1, 1]));
        let err = p(&[1, 1, 1]).divide_exact(&b);
        assert_eq!(err.unwrap_err(), ExactError::NonDivisible);
    }

    #[test]
    fn gcd_cases() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(Poly::gcd(&a, &b).unwrap(), b);
        assert_eq!(Poly::gcd(&Poly::zero(), &b).unwrap(), b);
        assert_eq!(
            Poly::gcd(&Poly::zero(), &Poly::zero()).unwrap_err(),
            ExactError::Undefined
        );
    }

    #[test]
    fn squarefree_detection() {
        let double_root = &p(&[-1, 1]) * &p(&[-1, 1]);
        assert!(!double_root.is_squarefree());
        assert!(p(&[-1, 0, 1]).is_squarefree());
        assert!(p(&[5]).is_squarefree());
        assert!(!Poly::zero().is_squarefree());
    }

    #[test]
    fn monicize_idempotent() {
        let q = p(&[2, 4, 6]);
        let m = q.monicize();
        assert!(m.is_monic());
        assert_eq!(m.monicize(), m);
        assert_eq!(Poly::zero().monicize(), Poly::zero());
    }

    #[test]
    fn roots_and_eval() {
        let q = Poly::from_roots(&[rat(5, 8), rat_int(2)]);
        assert!(q.eval(&rat(5, 8)).is_zero());
        assert!(q.eval(&rat_int(2)).is_zero());
        assert!(!q.eval(&rat_int(3)).is_zero());
        assert!(q.is_monic());
    }
}
