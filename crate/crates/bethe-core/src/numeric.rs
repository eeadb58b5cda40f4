//! Small dense complex linear algebra and float polynomial helpers shared
//! by the numerical solver and the Gaudin module.

use num_complex::Complex64;

pub type C64 = Complex64;

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    pub nrows: usize,
    pub ncols: usize,
    pub data: Vec<C64>,
}

impl CMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        CMat {
            nrows,
            ncols,
            data: vec![C64::new(0.0, 0.0); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn mul(&self, other: &CMat) -> CMat {
        assert_eq!(self.ncols, other.nrows);
        let mut out = CMat::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..other.ncols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &CMat) -> CMat {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        CMat {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.ncols);
        (0..self.nrows)
            .map(|i| (0..self.ncols).map(|j| self[(i, j)] * v[j]).sum::<C64>())
            .collect()
    }

    pub fn norm_fro(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn commutator_norm(&self, other: &CMat) -> f64 {
        self.mul(other).sub(&other.mul(self)).norm_fro()
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.ncols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.ncols + j]
    }
}

/// Gaussian elimination with partial pivoting; `None` when a pivot falls
/// below `tol`.
pub fn solve_complex(a: &CMat, b: &[C64], tol: f64) -> Option<Vec<C64>> {
    assert_eq!(a.nrows, a.ncols);
    assert_eq!(b.len(), a.nrows);
    let n = a.nrows;
    let mut m = a.clone();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let (p, best) = (col..n)
            .map(|r| (r, m[(r, col)].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if best < tol {
            return None;
        }
        if p != col {
            for j in 0..n {
                let t = m[(col, j)];
                m[(col, j)] = m[(p, j)];
                m[(p, j)] = t;
            }
            rhs.swap(col, p);
        }
        let inv = C64::new(1.0, 0.0) / m[(col, col)];
        for j in col..n {
            m[(col, j)] *= inv;
        }
        rhs[col] *= inv;
        for r in 0..n {
            if r != col {
                let f = m[(r, col)];
                if f.norm_sqr() == 0.0 {
                    continue;
                }
                for j in col..n {
                    let t = f * m[(col, j)];
                    m[(r, j)] -= t;
                }
                let t = f * rhs[col];
                rhs[r] -= t;
            }
        }
    }
    Some(rhs)
}

/// Least-squares solution of an overdetermined system through the normal
/// equations `A^H A x = A^H b`.
pub fn least_squares(a: &CMat, b: &[C64], pivot_tol: f64) -> Option<Vec<C64>> {
    assert_eq!(b.len(), a.nrows);
    let n = a.ncols;
    let mut ata = CMat::zeros(n, n);
    let mut atb = vec![C64::new(0.0, 0.0); n];
    for i in 0..n {
        for j in 0..n {
            let mut s = C64::new(0.0, 0.0);
            for r in 0..a.nrows {
                s += a[(r, i)].conj() * a[(r, j)];
            }
            ata[(i, j)] = s;
        }
        let mut s = C64::new(0.0, 0.0);
        for r in 0..a.nrows {
            s += a[(r, i)].conj() * b[r];
        }
        atb[i] = s;
    }
    solve_complex(&ata, &atb, pivot_tol)
}

/// Frobenius condition number estimate via explicit inversion.
pub fn condition_estimate(a: &CMat, tol: f64) -> Option<f64> {
    assert_eq!(a.nrows, a.ncols);
    let n = a.nrows;
    let mut inv = CMat::zeros(n, n);
    for col in 0..n {
        let mut e = vec![C64::new(0.0, 0.0); n];
        e[col] = C64::new(1.0, 0.0);
        let x = solve_complex(a, &e, tol)?;
        for (r, v) in x.into_iter().enumerate() {
            inv[(r, col)] = v;
        }
    }
    Some(a.norm_fro() * inv.norm_fro())
}

pub fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

pub fn vec_sub(a: &[C64], b: &[C64]) -> Vec<C64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Hermitian inner product `<a, b> = sum conj(a_i) b_i`.
pub fn dot(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Sine of the angle between `v` and the line spanned by `w`.
pub fn sine_angle(v: &[C64], w: &[C64]) -> f64 {
    let nv = vec_norm(v);
    let nw = vec_norm(w);
    if nv == 0.0 || nw == 0.0 {
        return 1.0;
    }
    let coeff = dot(w, v) / C64::new(nw * nw, 0.0);
    let proj: Vec<C64> = w.iter().map(|x| coeff * x).collect();
    vec_norm(&vec_sub(v, &proj)) / nv
}

/// Dense float polynomial, coefficients low-to-high.
#[derive(Debug, Clone)]
pub struct FPoly(pub Vec<C64>);

impl FPoly {
    pub fn one() -> Self {
        FPoly(vec![C64::new(1.0, 0.0)])
    }

    pub fn from_roots(roots: &[C64]) -> Self {
        let mut coeffs = vec![C64::new(1.0, 0.0)];
        for r in roots {
            let mut next = vec![C64::new(0.0, 0.0); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= r * c;
            }
            coeffs = next;
        }
        FPoly(coeffs)
    }

    /// Numerical degree: trailing coefficients below `1e-12 * max|c|`
    /// are treated as zero.
    pub fn degree(&self) -> usize {
        let mut d = self.0.len().saturating_sub(1);
        let scale = self.0.iter().map(|c| c.norm()).fold(0.0, f64::max);
        while d > 0 && self.0[d].norm() <= 1e-12 * scale {
            d -= 1;
        }
        d
    }

    pub fn eval(&self, x: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> FPoly {
        if self.0.len() <= 1 {
            return FPoly(vec![C64::new(0.0, 0.0)]);
        }
        FPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * C64::new(k as f64, 0.0))
                .collect(),
        )
    }

    pub fn mul(&self, other: &FPoly) -> FPoly {
        let mut out = vec![C64::new(0.0, 0.0); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        FPoly(out)
    }

    /// Scales so the leading coefficient (at the numerical degree) is one.
    pub fn monicize(&self) -> FPoly {
        let d = self.degree();
        let lc = self.0[d];
        FPoly(self.0[..=d].iter().map(|c| c / lc).collect())
    }
}

/// All complex roots by Durand-Kerner iteration with a Newton polish.
/// Robust for the small degrees used here.
pub fn poly_roots(p: &FPoly, iters: usize, tol: f64) -> Vec<C64> {
    let q = p.monicize();
    let n = q.degree();
    if n == 0 {
        return Vec::new();
    }
    let radius = 1.0 + q.0[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = C64::new(0.4, 0.9);
    let mut roots: Vec<C64> = (0..n).map(|k| seed.powu(k as u32 + 1) * radius).collect();
    for _ in 0..iters {
        let mut moved = 0.0f64;
        for k in 0..n {
            let mut denom = C64::new(1.0, 0.0);
            for j in 0..n {
                if j != k {
                    denom *= roots[k] - roots[j];
                }
            }
            if denom.norm() < 1e-300 {
                continue;
            }
            let delta = q.eval(roots[k]) / denom;
            roots[k] -= delta;
            moved = moved.max(delta.norm());
        }
        if moved < tol {
            break;
        }
    }
    // Newton polish
    let dq = q.derivative();
    for r in roots.iter_mut() {
        for _ in 0..3 {
            let d = dq.eval(*r);
            if d.norm() > 1e-14 {
                *r -= q.eval(*r) / d;
            }
        }
    }
    roots
}
