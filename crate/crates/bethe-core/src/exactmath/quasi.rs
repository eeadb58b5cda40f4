//! Quasi-polynomials `x^a p(x)` and exponential polynomials `e^{a x} p(x)`.

use crate::rational::Rational;
use num_traits::Zero;
use std::fmt;

use super::Poly;

/// `x^a * p(x)` with a rational exponent `a`.
///
/// Normalized so that `p(0) != 0` unless `p = 0`: any power of `x` dividing
/// the part is pulled into the exponent, which makes exponent comparison
/// meaningful.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPoly {
    pub exponent: Rational,
    pub part: Poly,
}

impl QPoly {
    pub fn new(exponent: Rational, part: Poly) -> Self {
        if part.is_zero() {
            return QPoly {
                exponent: Rational::zero(),
                part,
            };
        }
        let k = part
            .coeffs()
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero poly has a nonzero coefficient");
        if k == 0 {
            QPoly { exponent, part }
        } else {
            let reduced = Poly::from_coeffs(part.coeffs()[k..].to_vec());
            QPoly {
                exponent: exponent + Rational::from_integer(k.into()),
                part: reduced,
            }
        }
    }

    pub fn from_poly(part: Poly) -> Self {
        QPoly::new(Rational::zero(), part)
    }

    pub fn is_zero(&self) -> bool {
        self.part.is_zero()
    }

    /// d/dx (x^a p) = x^{a-1} (a p + x p').
    pub fn derivative(&self) -> QPoly {
        let ap = self.part.scale(&self.exponent);
        let xdp = self.part.derivative().mul_xpow(1);
        QPoly::new(
            &self.exponent - &Rational::from_integer(1.into()),
            &ap + &xdp,
        )
    }

    /// Equality up to a nonzero scalar on the part.
    pub fn proportional(&self, other: &QPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.exponent == other.exponent && self.part.monicize() == other.part.monicize()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^({}) * [{}]", self.exponent, self.part)
    }
}

/// `e^{a x} * p(x)` with a rational rate `a`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExpPoly {
    pub rate: Rational,
    pub part: Poly,
}

impl ExpPoly {
    pub fn new(rate: Rational, part: Poly) -> Self {
        ExpPoly { rate, part }
    }

    pub fn is_zero(&self) -> bool {
        self.part.is_zero()
    }

    /// d/dx (e^{ax} p) = e^{ax} (a p + p').
    pub fn derivative(&self) -> ExpPoly {
        ExpPoly {
            rate: self.rate.clone(),
            part: &self.part.scale(&self.rate) + &self.part.derivative(),
        }
    }

    pub fn proportional(&self, other: &ExpPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.rate == other.rate && self.part.monicize() == other.part.monicize()
    }
}
