//! Exact Wronskians: continuous, quasi-polynomial, exponential, discrete,
//! and divided.

use crate::rational::{rat_int, Rational};
use num_traits::Zero;

use super::{ExactError, ExpPoly, Poly, QPoly};

/// Two-argument Wronskian `W(f, g) = f' g - f g'`.
pub fn wronskian2(f: &Poly, g: &Poly) -> Poly {
    &(&f.derivative() * g) - &(f * &g.derivative())
}

/// Determinant of a square matrix of polynomials by cofactor expansion
/// (sizes here stay small).
fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    match n {
        0 => Poly::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = Poly::zero();
            for k in 0..n {
                if m[k][0].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = (0..n)
                    .filter(|&r| r != k)
                    .map(|r| m[r][1..].to_vec())
                    .collect();
                let term = &m[k][0] * &poly_det(&minor);
                if k % 2 == 0 {
                    acc = &acc + &term;
                } else {
                    acc = &acc - &term;
                }
            }
            acc
        }
    }
}

/// Multi-argument Wronskian as the determinant `det(f_k^{(j-1)})`,
/// rows indexed by functions and columns by derivative order.
///
/// Note the sign convention: for two polynomial arguments this is
/// `f g' - f' g = -wronskian2(f, g)`.
pub fn wronskian_det(fs: &[Poly]) -> Poly {
    let n = fs.len();
    let mut rows = Vec::with_capacity(n);
    for f in fs {
        let mut row = Vec::with_capacity(n);
        let mut cur = f.clone();
        for j in 0..n {
            if j > 0 {
                cur = cur.derivative();
            }
            row.push(cur.clone());
        }
        rows.push(row);
    }
    poly_det(&rows)
}

/// Wronskian determinant of quasi-polynomials `x^{a_k} p_k`.
///
/// Every entry of row `k`, column `j` is `x^{a_k - (j-1)}` times a
/// polynomial, so every monomial of the determinant carries the common
/// exponent `sum_k a_k - n(n-1)/2`; the result is returned in normalized
/// `QPoly` form.
pub fn qwronskian(fs: &[QPoly]) -> QPoly {
    assert!(!fs.is_empty(), "qwronskian needs at least one argument");
    let n = fs.len();
    let mut rows = Vec::with_capacity(n);
    let mut exp_sum = Rational::zero();
    for f in fs {
        exp_sum += &f.exponent;
        let mut row = Vec::with_capacity(n);
        let mut part = f.part.clone();
        for j in 0..n {
            if j > 0 {
                // derivative of x^{a-(j-2)} p: part becomes (a-(j-2)) p + x p'
                let e = &f.exponent - &rat_int(j as i64 - 1);
                part = &part.scale(&e) + &part.derivative().mul_xpow(1);
            }
            row.push(part.clone());
        }
        rows.push(row);
    }
    let det = poly_det(&rows);
    let exponent = exp_sum - rat_int((n * (n - 1) / 2) as i64);
    QPoly::new(exponent, det)
}

/// Wronskian determinant of exponential polynomials `e^{a_k x} p_k`;
/// the rate of the result is `sum_k a_k`.
pub fn exp_wronskian(fs: &[ExpPoly]) -> ExpPoly {
    assert!(!fs.is_empty(), "exp_wronskian needs at least one argument");
    let n = fs.len();
    let mut rows = Vec::with_capacity(n);
    let mut rate_sum = Rational::zero();
    for f in fs {
        rate_sum += &f.rate;
        let mut row = Vec::with_capacity(n);
        let mut part = f.part.clone();
        for j in 0..n {
            if j > 0 {
                part = &part.scale(&f.rate) + &part.derivative();
            }
            row.push(part.clone());
        }
        rows.push(row);
    }
    ExpPoly::new(rate_sum, poly_det(&rows))
}

/// Discrete Wronskian `W_h(f_1, ..., f_n) = det(f_k(x + (j-1) h))`.
pub fn discrete_wronskian(fs: &[Poly], h: &Rational) -> Result<Poly, ExactError> {
    if h.is_zero() {
        return Err(ExactError::ZeroStep);
    }
    let n = fs.len();
    let mut rows = Vec::with_capacity(n);
    for f in fs {
        let row: Vec<Poly> = (0..n).map(|j| f.shift(&(h * rat_int(j as i64)))).collect();
        rows.push(row);
    }
    Ok(poly_det(&rows))
}

/// Discrete Wronskian of rows `s_k^{j-1} p_k(x + (j-1) h)`.
///
/// This is the polynomial content of `W_h` applied to `e^{a_k x} p_k` after
/// the common factor `e^{a_k x}` is pulled out of row `k`: the scalar
/// `s_k = e^{a_k h}` is supplied by the caller as an explicit rational.
pub fn discrete_wronskian_scaled(
    rows: &[(Poly, Rational)],
    h: &Rational,
) -> Result<Poly, ExactError> {
    if h.is_zero() {
        return Err(ExactError::ZeroStep);
    }
    let n = rows.len();
    let mut m = Vec::with_capacity(n);
    for (p, s) in rows {
        let mut row = Vec::with_capacity(n);
        let mut scale = Rational::from_integer(1.into());
        for j in 0..n {
            if j > 0 {
                scale *= s;
            }
            row.push(p.shift(&(h * rat_int(j as i64))).scale(&scale));
        }
        m.push(row);
    }
    Ok(poly_det(&m))
}

/// Divided Wronskian: `W(u_1, ..., u_i)` divided exactly by
/// `prod_{j<i} (x^{e_j} T_j)^{i-j}` where `e_j` is the j-th entry of
/// `divisor_exponents` (the scalar products `(lambda, alpha_j)`).
///
/// The exponent subtraction is exact on the `QPoly` exponent; a failure of
/// the polynomial division signals a violated population identity.
pub fn divided_wronskian(
    us: &[QPoly],
    divisor_exponents: &[Rational],
    ts: &[Poly],
) -> Result<QPoly, ExactError> {
    let i = us.len();
    assert!(i >= 1);
    assert!(divisor_exponents.len() >= i - 1 && ts.len() >= i - 1);
    let w = qwronskian(us);
    if i == 1 {
        return Ok(w);
    }
    let mut exp = Rational::zero();
    let mut div = Poly::one();
    for j in 0..i - 1 {
        let mult = rat_int((i - 1 - j) as i64);
        exp += &divisor_exponents[j] * &mult;
        div = &div * &ts[j].pow((i - 1 - j) as u32);
    }
    let part = w.part.divide_exact(&div)?;
    Ok(QPoly::new(&w.exponent - &exp, part))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn wronskian2_pinned_values() {
        let f = p(&[0, 1]);
        assert!(wronskian2(&f, &f).is_zero());
        assert_eq!(wronskian2(&p(&[0, 1]), &p(&[1])), Poly::one());
        // W(x^2, x^3) = 2x * x^3 - x^2 * 3x^2 = -x^4
        assert_eq!(
            wronskian2(&p(&[0, 0, 1]), &p(&[0, 0, 0, 1])),
            Poly::monomial(rat_int(-1), 4)
        );
    }

    #[test]
    fn det_convention_is_opposite_for_pairs() {
        let f = p(&[0, 0, 1]);
        let g = p(&[0, 0, 0, 1]);
        assert_eq!(
            wronskian_det(&[f.clone(), g.clone()]),
            &Poly::zero() - &wronskian2(&f, &g)
        );
    }

    #[test]
    fn qwronskian_single_and_repeated() {
        let q = QPoly::new(rat(5, 3), p(&[1, 1]));
        assert_eq!(qwronskian(std::slice::from_ref(&q)), q);
        assert!(qwronskian(&[q.clone(), q]).is_zero());
    }

    #[test]
    fn qwronskian_seed_pair() {
        // sl2 seed identity: with y = x - 5/8, lam = 5/3, raw descendant
        // 3/5, one has W(y, x^{lam+1} * 3/5) = x^lam (x - 1).
        let lam = rat(5, 3);
        let y = Poly::from_roots(&[rat(5, 8)]);
        let w = qwronskian(&[
            QPoly::from_poly(y),
            QPoly::new(&lam + &rat_int(1), Poly::constant(rat(3, 5))),
        ]);
        assert_eq!(w.exponent, lam);
        assert_eq!(w.part, p(&[-1, 1]));
    }

    #[test]
    fn qwronskian_matches_plain_det_on_integer_exponents() {
        let fs = [p(&[1, 2, 1]), p(&[0, 3, 0, 1]), p(&[5, 0, 2])];
        let qs: Vec<QPoly> = fs.iter().cloned().map(QPoly::from_poly).collect();
        let q = qwronskian(&qs);
        let d = wronskian_det(&fs);
        let dq = QPoly::from_poly(d);
        assert_eq!(q, dq);
    }

    #[test]
    fn discrete_wronskian_pinned_values() {
        let h = rat_int(1);
        assert_eq!(discrete_wronskian(&[p(&[2, 1])], &h).unwrap(), p(&[2, 1]));
        // W_h(1, x) = (x+h) - x = h
        assert_eq!(
            discrete_wronskian(&[Poly::one(), Poly::x()], &rat(3, 2)).unwrap(),
            Poly::constant(rat(3, 2))
        );
        assert!(discrete_wronskian(&[p(&[1, 1]), p(&[1, 1])], &h)
            .unwrap()
            .is_zero());
        assert_eq!(
            discrete_wronskian(&[Poly::one()], &rat_int(0)).unwrap_err(),
            ExactError::ZeroStep
        );
    }

    #[test]
    fn discrete_antisymmetry() {
        let h = rat(1, 3);
        let f = p(&[1, 4, 2]);
        let g = p(&[0, 1, 0, 5]);
        let a = discrete_wronskian(&[f.clone(), g.clone()], &h).unwrap();
        let b = discrete_wronskian(&[g, f], &h).unwrap();
        assert_eq!(a, &Poly::zero() - &b);
    }

    #[test]
    fn divided_wronskian_seed_and_negative() {
        // sl2 seed: divide W(u1, u2) = x^lam (x-1) by x^lam T with T = x-1.
        let lam = rat(5, 3);
        let y = Poly::from_roots(&[rat(5, 8)]);
        let us = [
            QPoly::from_poly(y),
            QPoly::new(&lam + &rat_int(1), Poly::constant(rat(3, 5))),
        ];
        let t = p(&[-1, 1]);
        let w =
            divided_wronskian(&us, std::slice::from_ref(&lam), std::slice::from_ref(&t)).unwrap();
        assert!(w.exponent.is_zero());
        assert_eq!(w.part.degree(), Some(0));

        // unrelated divisor polynomial is not exact
        let bad = divided_wronskian(&us, &[lam], &[p(&[-3, 1])]);
        assert_eq!(bad.unwrap_err(), ExactError::NonDivisible);
    }

    #[test]
    fn divided_wronskian_identity_inverts() {
        // re-multiplying the divisor reproduces the plain qwronskian
        let lam = rat(5, 3);
        let t = p(&[-1, 1]);
        let us = [
            QPoly::from_poly(Poly::from_roots(&[rat(5, 8)])),
            QPoly::new(&lam + &rat_int(1), Poly::constant(rat(3, 5))),
        ];
        let w = qwronskian(&us);
        let dw =
            divided_wronskian(&us, std::slice::from_ref(&lam), std::slice::from_ref(&t)).unwrap();
        let back = QPoly::new(&dw.exponent + &lam, &dw.part * &t);
        assert_eq!(back, w);
    }
}
