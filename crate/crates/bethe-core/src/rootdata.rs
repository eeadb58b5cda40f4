//! Cartan matrices with symmetrizers, weights in coroot coordinates,
//! shifted/plain/multiplicative Weyl actions, orbit enumeration, and the
//! folding maps used by the population embeddings.
//!
//! Conventions: the Cartan matrix entry `a[i][j]` satisfies
//! `(alpha_i, alpha_j) = d_i a[i][j]`, equivalently
//! `a[i][j] = <alpha_j^pairing...>`; concretely `<alpha_i, alpha_j^vee> = a[j][i]`.
//! Weights are stored purely in coroot coordinates `m_i = <lambda, alpha_i^vee>`;
//! the ambient root-space realization is never materialized.

use crate::rational::{rat, rat_int, rat_pow, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("invalid family/rank pair: {0}")]
    InvalidType(String),
    #[error("operation requires a finite-type root system")]
    UnsupportedType,
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("no folding is defined for this type")]
    NoFolding,
    #[error("canonical reference weight has a non-free orbit for this type")]
    ReferenceCollision,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A symmetrizable generalized Cartan matrix with a fixed minimal symmetrizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    family: Option<(Family, usize)>,
    rank: usize,
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
}

/// Additive weight in coroot coordinates, `m_i = <lambda, alpha_i^vee>`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVec(pub Vec<Rational>);

/// Multiplicative weight for the XXX family; coordinate `i` stands for
/// `e^{<lambda, alpha_i^vee> h}`. All coordinates are nonzero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultWeight(pub Vec<Rational>);

/// A word in the simple reflections, stored as 0-based indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylWord(pub Vec<usize>);

impl WeightVec {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn zero(rank: usize) -> Self {
        WeightVec(vec![Rational::zero(); rank])
    }

    /// `rho` has every coroot pairing equal to 1.
    pub fn rho(rank: usize) -> Self {
        WeightVec(vec![Rational::one(); rank])
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.0
            .iter()
            .all(|m| m.denom().is_one() && *m >= Rational::zero())
    }
}

impl MultWeight {
    pub fn new(coords: Vec<Rational>) -> Result<Self, RootDataError> {
        if coords.iter().any(|k| k.is_zero()) {
            return Err(RootDataError::InvalidCartan(
                "multiplicative weight coordinates must be nonzero".into(),
            ));
        }
        Ok(MultWeight(coords))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl RootSystem {
    /// Standard simple root system in Bourbaki ordering with the minimal
    /// positive symmetrizer.
    pub fn make(family: Family, rank: usize) -> Result<Self, RootDataError> {
        let invalid = || RootDataError::InvalidType(format!("{family}{rank}"));
        let (a, d): (Vec<Vec<i64>>, Vec<i64>) = match family {
            Family::A => {
                if rank < 1 {
                    return Err(invalid());
                }
                (chain(rank), vec![1; rank])
            }
            Family::B => {
                // alpha_1..alpha_{r-1} long, alpha_r short
                if rank < 2 {
                    return Err(invalid());
                }
                let mut a = chain(rank);
                a[rank - 1][rank - 2] = -2;
                let mut d = vec![2; rank];
                d[rank - 1] = 1;
                (a, d)
            }
            Family::C => {
                // alpha_1..alpha_{r-1} short, alpha_r long
                if rank < 2 {
                    return Err(invalid());
                }
                let mut a = chain(rank);
                a[rank - 2][rank - 1] = -2;
                let mut d = vec![1; rank];
                d[rank - 1] = 2;
                (a, d)
            }
            Family::D => {
                if rank < 4 {
                    return Err(invalid());
                }
                // chain alpha_1 .. alpha_{r-1}, with alpha_r attached to
                // alpha_{r-2}
                let mut a = chain(rank - 1);
                for row in &mut a {
                    row.push(0);
                }
                a.push(vec![0; rank]);
                a[rank - 1][rank - 1] = 2;
                a[rank - 3][rank - 1] = -1;
                a[rank - 1][rank - 3] = -1;
                (a, vec![1; rank])
            }
            Family::E => {
                if !(6..=8).contains(&rank) {
                    return Err(invalid());
                }
                // Bourbaki: chain 1-3-4-5-6(-7)(-8) with 2 attached to 4
                let mut a = vec![vec![0i64; rank]; rank];
                for (i, row) in a.iter_mut().enumerate() {
                    row[i] = 2;
                }
                let mut edges = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
                if rank >= 7 {
                    edges.push((5, 6));
                }
                if rank == 8 {
                    edges.push((6, 7));
                }
                for (i, j) in edges {
                    a[i][j] = -1;
                    a[j][i] = -1;
                }
                (a, vec![1; rank])
            }
            Family::F => {
                if rank != 4 {
                    return Err(invalid());
                }
                let mut a = chain(4);
                a[2][1] = -2;
                (a, vec![2, 2, 1, 1])
            }
            Family::G => {
                if rank != 2 {
                    return Err(invalid());
                }
                (vec![vec![2, -3], vec![-1, 2]], vec![1, 3])
            }
        };
        let rs = RootSystem {
            family: Some((family, rank)),
            rank,
            a,
            d,
        };
        rs.validate()?;
        Ok(rs)
    }

    /// A root system from raw generalized Cartan data. Non-finite types are
    /// accepted here; orbit and population-cardinality operations reject
    /// them with `UnsupportedType`.
    pub fn from_cartan(a: Vec<Vec<i64>>, d: Vec<i64>) -> Result<Self, RootDataError> {
        let rank = a.len();
        let rs = RootSystem {
            family: None,
            rank,
            a,
            d,
        };
        rs.validate()?;
        Ok(rs)
    }

    fn validate(&self) -> Result<(), RootDataError> {
        let bad = |msg: &str| Err(RootDataError::InvalidCartan(msg.into()));
        if self.a.len() != self.rank || self.d.len() != self.rank {
            return bad("dimension mismatch");
        }
        for (i, row) in self.a.iter().enumerate() {
            if row.len() != self.rank {
                return bad("cartan matrix not square");
            }
            if row[i] != 2 {
                return bad("diagonal entries must equal 2");
            }
            for (j, &v) in row.iter().enumerate() {
                if i != j {
                    if v > 0 {
                        return bad("off-diagonal entries must be nonpositive");
                    }
                    if (v == 0) != (self.a[j][i] == 0) {
                        return bad("a_ij = 0 must be symmetric");
                    }
                }
            }
        }
        if self.d.iter().any(|&x| x <= 0) {
            return bad("symmetrizer must be positive");
        }
        for i in 0..self.rank {
            for j in 0..self.rank {
                if self.d[i] * self.a[i][j] != self.d[j] * self.a[j][i] {
                    return bad("DA is not symmetric");
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn family(&self) -> Option<(Family, usize)> {
        self.family
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    /// Scalar product `(alpha_i, alpha_j) = d_i a_ij`.
    pub fn root_pairing(&self, i: usize, j: usize) -> i64 {
        self.d[i] * self.a[i][j]
    }

    /// Scalar product `(mu, alpha_i) = d_i <mu, alpha_i^vee>`.
    pub fn weight_pairing(&self, mu: &WeightVec, i: usize) -> Rational {
        &mu.0[i] * rat_int(self.d[i])
    }

    /// Finite type check: all leading principal minors of `DA` positive.
    pub fn is_finite_type(&self) -> bool {
        // integer Gaussian elimination on the symmetrized matrix, done in
        // rationals for exactness
        let n = self.rank;
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| rat_int(self.d[i] * self.a[i][j])).collect())
            .collect();
        // Cholesky-style positivity test: all pivots positive
        for k in 0..n {
            if m[k][k] <= Rational::zero() {
                return false;
            }
            #[allow(clippy::needless_range_loop)] // rows i and k alias `m`
            for i in k + 1..n {
                let f = &m[i][k] / &m[k][k];
                for j in k..n {
                    let t = &f * &m[k][j];
                    m[i][j] -= t;
                }
            }
        }
        true
    }

    /// Order of the Weyl group for the standard finite families.
    pub fn weyl_order(&self) -> Result<u128, RootDataError> {
        if !self.is_finite_type() {
            return Err(RootDataError::UnsupportedType);
        }
        let fact = |n: usize| -> u128 { (1..=n as u128).product() };
        match self.family {
            Some((Family::A, r)) => Ok(fact(r + 1)),
            Some((Family::B, r)) | Some((Family::C, r)) => Ok((1u128 << r) * fact(r)),
            Some((Family::D, r)) => Ok((1u128 << (r - 1)) * fact(r)),
            Some((Family::E, 6)) => Ok(51_840),
            Some((Family::E, 7)) => Ok(2_903_040),
            Some((Family::E, 8)) => Ok(696_729_600),
            Some((Family::F, 4)) => Ok(1_152),
            Some((Family::G, 2)) => Ok(12),
            _ => {
                // custom finite-type matrix: enumerate the orbit of the
                // reference weight
                let orbit = self.shifted_orbit(&self.reference_weight())?;
                Ok(orbit.len() as u128)
            }
        }
    }

    /// Plain reflection `s_i`: `m_j -> m_j - m_i a_ji`.
    pub fn reflect_plain(&self, i: usize, lam: &WeightVec) -> WeightVec {
        let mi = lam.0[i].clone();
        WeightVec(
            lam.0
                .iter()
                .enumerate()
                .map(|(j, mj)| mj - &(&mi * rat_int(self.a[j][i])))
                .collect(),
        )
    }

    /// Shifted reflection `s_i . lam = s_i(lam + rho) - rho`:
    /// `m_j -> m_j - (m_i + 1) a_ji`.
    pub fn reflect_shifted(&self, i: usize, lam: &WeightVec) -> WeightVec {
        let c = &lam.0[i] + &Rational::one();
        WeightVec(
            lam.0
                .iter()
                .enumerate()
                .map(|(j, mj)| mj - &(&c * rat_int(self.a[j][i])))
                .collect(),
        )
    }

    /// Multiplicative reflection: `kappa_j -> kappa_j kappa_i^{-a_ji}`.
    pub fn reflect_mult(&self, i: usize, kappa: &MultWeight) -> MultWeight {
        let ki = kappa.0[i].clone();
        MultWeight(
            kappa
                .0
                .iter()
                .enumerate()
                .map(|(j, kj)| kj * rat_pow(&ki, -self.a[j][i]))
                .collect(),
        )
    }

    /// Applies a word left-to-right: the first letter acts first.
    pub fn apply_word_shifted(&self, word: &WeylWord, lam: &WeightVec) -> WeightVec {
        word.0
            .iter()
            .fold(lam.clone(), |acc, &i| self.reflect_shifted(i, &acc))
    }

    pub fn apply_word_plain(&self, word: &WeylWord, lam: &WeightVec) -> WeightVec {
        word.0
            .iter()
            .fold(lam.clone(), |acc, &i| self.reflect_plain(i, &acc))
    }

    pub fn apply_word_mult(&self, word: &WeylWord, kappa: &MultWeight) -> MultWeight {
        word.0
            .iter()
            .fold(kappa.clone(), |acc, &i| self.reflect_mult(i, &acc))
    }

    fn orbit_by<T, F>(&self, start: &T, reflect: F) -> Result<Vec<T>, RootDataError>
    where
        T: Clone + Ord,
        F: Fn(usize, &T) -> T,
    {
        if !self.is_finite_type() {
            return Err(RootDataError::UnsupportedType);
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let mut queue = vec![start.clone()];
        seen.insert(start.clone());
        while let Some(w) = queue.pop() {
            out.push(w.clone());
            for i in 0..self.rank {
                let next = reflect(i, &w);
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// The full orbit of `lam` under the shifted action (finite types only).
    pub fn shifted_orbit(&self, lam: &WeightVec) -> Result<Vec<WeightVec>, RootDataError> {
        self.orbit_by(lam, |i, w| self.reflect_shifted(i, w))
    }

    pub fn plain_orbit(&self, lam: &WeightVec) -> Result<Vec<WeightVec>, RootDataError> {
        self.orbit_by(lam, |i, w| self.reflect_plain(i, w))
    }

    pub fn mult_orbit(&self, kappa: &MultWeight) -> Result<Vec<MultWeight>, RootDataError> {
        self.orbit_by(kappa, |i, w| self.reflect_mult(i, w))
    }

    /// True iff every coroot pairing of every point of the shifted orbit is
    /// a non-integer. Decided by exhaustive orbit enumeration.
    pub fn is_strongly_nonintegral(&self, lam: &WeightVec) -> Result<bool, RootDataError> {
        let orbit = self.shifted_orbit(lam)?;
        Ok(orbit
            .iter()
            .all(|w| w.0.iter().all(|m| !m.denom().is_one())))
    }

    /// Plain-action analogue used by the exponential family: every pairing
    /// along the plain orbit is a non-integer (hence nonzero) and the orbit
    /// is free.
    pub fn is_plain_nonintegral(&self, lam: &WeightVec) -> Result<bool, RootDataError> {
        let orbit = self.plain_orbit(lam)?;
        let free = orbit.len() as u128 == self.weyl_order()?;
        Ok(free
            && orbit
                .iter()
                .all(|w| w.0.iter().all(|m| !m.denom().is_one())))
    }

    /// The weight at infinity: `<Lambda_inf, alpha_j^vee> =
    /// sum_s <Lambda_s, alpha_j^vee> - sum_i l_i a_ji`.
    pub fn lambda_infinity(&self, lambdas: &[WeightVec], l: &[usize]) -> WeightVec {
        assert_eq!(l.len(), self.rank);
        let mut m = vec![Rational::zero(); self.rank];
        for lam in lambdas {
            for (j, c) in m.iter_mut().enumerate() {
                *c += &lam.0[j];
            }
        }
        for (j, c) in m.iter_mut().enumerate() {
            for (i, &li) in l.iter().enumerate() {
                *c -= rat_int(li as i64 * self.a[j][i]);
            }
        }
        WeightVec(m)
    }

    /// Fixed strongly non-integral reference weight `m_i = 1/(2i + 3)`
    /// (1-based `i`), used for canonical Weyl-word keys.
    pub fn reference_weight(&self) -> WeightVec {
        WeightVec((1..=self.rank).map(|i| rat(1, 2 * i as i64 + 3)).collect())
    }

    /// Canonical key of a Weyl word: the image of the reference weight under
    /// the shifted action. Two words are equal in the Weyl group iff their
    /// keys are equal, provided the reference orbit is free; see
    /// [`RootSystem::assert_reference_free`].
    pub fn word_key(&self, word: &WeylWord) -> WeightVec {
        self.apply_word_shifted(word, &self.reference_weight())
    }

    /// Collision-freeness of canonical keys for the active type: the shifted
    /// orbit of the reference weight must have exactly `|W|` elements.
    pub fn assert_reference_free(&self) -> Result<(), RootDataError> {
        let orbit = self.shifted_orbit(&self.reference_weight())?;
        if orbit.len() as u128 == self.weyl_order()? {
            Ok(())
        } else {
            Err(RootDataError::ReferenceCollision)
        }
    }
}

fn chain(rank: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        a[i][i] = 2;
        if i + 1 < rank {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    a
}

/// How a rank-`r` system folds into a higher-rank one: target slot `t` is a
/// copy of source slot `slot_source[t]`, and the source direction `i`
/// corresponds to the set of target directions `{t : slot_source[t] = i}`
/// (pairwise commuting reflections).
#[derive(Debug, Clone)]
pub struct FoldPlan {
    pub target: RootSystem,
    pub slot_source: Vec<usize>,
}

impl FoldPlan {
    /// Folded copy of per-slot data (weights, tuples, degree lists).
    pub fn fold_slots<T: Clone>(&self, source: &[T]) -> Vec<T> {
        self.slot_source
            .iter()
            .map(|&s| source[s].clone())
            .collect()
    }

    pub fn fold_weight(&self, w: &WeightVec) -> WeightVec {
        WeightVec(self.fold_slots(&w.0))
    }

    pub fn fold_mult(&self, k: &MultWeight) -> MultWeight {
        MultWeight(self.fold_slots(&k.0))
    }

    /// Target directions realizing the source direction `i`.
    pub fn directions(&self, i: usize) -> Vec<usize> {
        self.slot_source
            .iter()
            .enumerate()
            .filter_map(|(t, &s)| (s == i).then_some(t))
            .collect()
    }
}

/// Folding of `B_N` into `A_{2N-1}` (the long-root polynomials are mirrored)
/// and of `G_2` into `C_3` (the long-root polynomial is doubled onto the two
/// short `C_3` nodes).
pub fn fold_plan(rs: &RootSystem) -> Result<FoldPlan, RootDataError> {
    match rs.family {
        Some((Family::B, n)) => {
            let target = RootSystem::make(Family::A, 2 * n - 1)?;
            let slot_source = (0..2 * n - 1)
                .map(|t| if t < n { t } else { 2 * n - 2 - t })
                .collect();
            Ok(FoldPlan {
                target,
                slot_source,
            })
        }
        Some((Family::G, 2)) => {
            let target = RootSystem::make(Family::C, 3)?;
            Ok(FoldPlan {
                target,
                slot_source: vec![1, 0, 1],
            })
        }
        _ => Err(RootDataError::NoFolding),
    }
}
