//! Lie-theoretic data of a simple, simply-connected compact group.
//!
//! Everything is derived from the Gram matrix of the simple roots in
//! Bourbaki numbering, normalized so that long roots have squared length 2.
//! Weights are stored in Dynkin labels; the Cartan matrix is laid out so
//! that row `i` holds the labels of the simple root `α_i`.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn from_letter(letter: char) -> Option<Series> {
        match letter.to_ascii_uppercase() {
            'A' => Some(Series::A),
            'B' => Some(Series::B),
            'C' => Some(Series::C),
            'D' => Some(Series::D),
            'E' => Some(Series::E),
            'F' => Some(Series::F),
            'G' => Some(Series::G),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn admits(self, rank: usize) -> bool {
        match self {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    series: Series,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    inverse_cartan: Vec<Vec<Rational64>>,
    quad_form: Vec<Vec<Rational64>>,
    /// `(α_i, α_i) / 2`; 1 for long roots.
    half_lengths: Vec<Rational64>,
    simple_roots: Vec<Weight>,
    rho: Weight,
    theta: Weight,
    marks: Vec<i64>,
    dual_coxeter: i64,
    positive_roots: Vec<Weight>,
    /// Positive roots in the simple-root basis, parallel to `positive_roots`.
    root_coefficients: Vec<Vec<i64>>,
}

/// Builds the root system of type `series` and `rank`, e.g. `('A', 2)`.
pub fn build_root_system(series: char, rank: usize) -> Result<RootSystem> {
    let name = format!("{series}{rank}");
    let series = Series::from_letter(series).ok_or_else(|| Error::InvalidType(name.clone()))?;
    if !series.admits(rank) {
        return Err(Error::InvalidType(name));
    }
    Ok(RootSystem::from_gram(
        series,
        rank,
        simple_root_gram(series, rank),
    ))
}

impl FromStr for RootSystem {
    type Err = Error;

    /// Parses type strings such as `"A1"`, `"g2"`, `"E8"` case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::InvalidType(s.to_string()))?;
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::InvalidType(s.to_string()))?;
        build_root_system(letter, rank)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// Gram matrix `(α_i, α_j)` of the simple roots, Bourbaki numbering.
fn simple_root_gram(series: Series, n: usize) -> Vec<Vec<Rational64>> {
    let mut g = vec![vec![Rational64::zero(); n]; n];
    let link = |g: &mut Vec<Vec<Rational64>>, i: usize, j: usize, v: Rational64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match series {
        Series::A => {
            (0..n).for_each(|i| g[i][i] = r(2, 1));
            (0..n - 1).for_each(|i| link(&mut g, i, i + 1, r(-1, 1)));
        }
        Series::B => {
            (0..n - 1).for_each(|i| g[i][i] = r(2, 1));
            g[n - 1][n - 1] = r(1, 1);
            (0..n - 1).for_each(|i| link(&mut g, i, i + 1, r(-1, 1)));
        }
        Series::C => {
            (0..n - 1).for_each(|i| g[i][i] = r(1, 1));
            g[n - 1][n - 1] = r(2, 1);
            (0..n - 2).for_each(|i| link(&mut g, i, i + 1, r(-1, 2)));
            link(&mut g, n - 2, n - 1, r(-1, 1));
        }
        Series::D => {
            (0..n).for_each(|i| g[i][i] = r(2, 1));
            (0..n - 2).for_each(|i| link(&mut g, i, i + 1, r(-1, 1)));
            link(&mut g, n - 3, n - 1, r(-1, 1));
        }
        Series::E => {
            (0..n).for_each(|i| g[i][i] = r(2, 1));
            // 1 - 3 - 4 - 5 - ... with 2 attached to 4
            link(&mut g, 0, 2, r(-1, 1));
            link(&mut g, 1, 3, r(-1, 1));
            (2..n - 1).for_each(|i| link(&mut g, i, i + 1, r(-1, 1)));
        }
        Series::F => {
            g[0][0] = r(2, 1);
            g[1][1] = r(2, 1);
            g[2][2] = r(1, 1);
            g[3][3] = r(1, 1);
            link(&mut g, 0, 1, r(-1, 1));
            link(&mut g, 1, 2, r(-1, 1));
            link(&mut g, 2, 3, r(-1, 2));
        }
        Series::G => {
            g[0][0] = r(2, 3);
            g[1][1] = r(2, 1);
            link(&mut g, 0, 1, r(-1, 1));
        }
    }
    g
}

pub(crate) fn invert(m: &[Vec<Rational64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut row = row.clone();
            row.extend((0..n).map(|j| {
                if i == j {
                    Rational64::one()
                } else {
                    Rational64::zero()
                }
            }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        a[col].iter_mut().for_each(|x| *x /= p);
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let factor = a[row][col];
                let pivot_row = a[col].clone();
                a[row]
                    .iter_mut()
                    .zip(&pivot_row)
                    .for_each(|(x, &y)| *x -= factor * y);
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

fn is_positive_definite(m: &[Vec<Rational64>]) -> bool {
    // Sylvester: all leading principal minors positive, via exact elimination.
    let n = m.len();
    let mut a = m.to_vec();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            let pivot_row = a[k].clone();
            for (x, &v) in a[i][k..].iter_mut().zip(&pivot_row[k..]) {
                *x -= f * v;
            }
        }
    }
    true
}

impl RootSystem {
    fn from_gram(series: Series, rank: usize, gram: Vec<Vec<Rational64>>) -> RootSystem {
        let n = rank;
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = gram[i][j] * 2 / gram[j][j];
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        let half_lengths: Vec<Rational64> = (0..n).map(|i| gram[i][i] / 2).collect();
        let cartan_q: Vec<Vec<Rational64>> = cartan
            .iter()
            .map(|row| row.iter().map(|&v| Rational64::from_integer(v)).collect())
            .collect();
        let inverse_cartan = invert(&cartan_q).expect("Cartan matrix of finite type is invertible");
        // A Q = D with D = diag(half_lengths), so Q = A^{-1} D.
        let quad_form: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| inverse_cartan[i][j] * half_lengths[j])
                    .collect()
            })
            .collect();
        let simple_roots: Vec<Weight> = cartan.iter().map(|row| Weight::new(row.clone())).collect();

        let root_coefficients = positive_root_coefficients(&cartan);
        let positive_roots: Vec<Weight> = root_coefficients
            .iter()
            .map(|c| labels_of(&cartan, c))
            .collect();
        let (top, top_coeffs) = root_coefficients
            .iter()
            .enumerate()
            .max_by_key(|(_, c)| c.iter().sum::<i64>())
            .expect("at least one positive root");
        let theta = positive_roots[top].clone();
        let marks: Vec<i64> = top_coeffs
            .iter()
            .zip(&half_lengths)
            .map(|(&c, &d)| {
                let m = d * c;
                debug_assert!(m.is_integer());
                m.to_integer()
            })
            .collect();
        let dual_coxeter = marks.iter().sum::<i64>() + 1;

        RootSystem {
            series,
            rank,
            cartan,
            inverse_cartan,
            quad_form,
            half_lengths,
            simple_roots,
            rho: Weight::new(vec![1; n]),
            theta,
            marks,
            dual_coxeter,
            positive_roots,
            root_coefficients,
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `Q_ij = ⟨ω_i, ω_j⟩` under the basic inner product.
    pub fn quad_form(&self) -> &[Vec<Rational64>] {
        &self.quad_form
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Highest root.
    pub fn theta(&self) -> &Weight {
        &self.theta
    }

    /// Coefficients `a∨_i` of `θ∨` in the simple coroots.
    pub fn theta_covector_marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn dimension(&self) -> usize {
        self.rank + 2 * self.positive_roots.len()
    }

    /// Checks the structural invariants of the Cartan matrix and quadratic form.
    pub fn check_invariants(&self) -> bool {
        let n = self.rank;
        let cartan_ok = (0..n).all(|i| {
            (0..n).all(|j| {
                let v = self.cartan[i][j];
                if i == j {
                    v == 2
                } else {
                    v <= 0 && ((v == 0) == (self.cartan[j][i] == 0))
                }
            })
        });
        // Symmetrization B_ij = A_ij * d_j must be positive definite.
        let sym: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rational64::from_integer(self.cartan[i][j]) * self.half_lengths[j])
                    .collect()
            })
            .collect();
        let sym_ok =
            (0..n).all(|i| (0..n).all(|j| sym[i][j] == sym[j][i])) && is_positive_definite(&sym);
        let q_ok = (0..n).all(|i| (0..n).all(|j| self.quad_form[i][j] == self.quad_form[j][i]))
            && is_positive_definite(&self.quad_form);
        let long_ok = self
            .simple_roots
            .iter()
            .zip(&self.half_lengths)
            .filter(|(_, d)| d.is_one())
            .all(|(a, _)| self.inner_product(a, a) == Rational64::from_integer(2));
        cartan_ok && sym_ok && q_ok && long_ok && self.level(&self.rho) == self.dual_coxeter - 1
    }

    /// Exact `xᵀ Q y`.
    pub fn inner_product(&self, x: &Weight, y: &Weight) -> Rational64 {
        let mut acc = Rational64::zero();
        for (i, &xi) in x.labels().iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.labels().iter().enumerate() {
                if yj != 0 {
                    acc += self.quad_form[i][j] * (xi * yj);
                }
            }
        }
        acc
    }

    /// Inner product with a rational vector in Dynkin coordinates.
    pub fn inner_product_rational(&self, x: &Weight, y: &[Rational64]) -> Rational64 {
        let mut acc = Rational64::zero();
        for (i, &xi) in x.labels().iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                acc += self.quad_form[i][j] * yj * xi;
            }
        }
        acc
    }

    /// `⟨μ, θ∨⟩ = Σ a∨_i μ_i`.
    pub fn level(&self, x: &Weight) -> i64 {
        x.labels().iter().zip(&self.marks).map(|(a, b)| a * b).sum()
    }

    /// Coordinates of `x` in the simple-root basis.
    pub fn root_coordinates(&self, x: &Weight) -> Vec<Rational64> {
        (0..self.rank)
            .map(|j| {
                x.labels()
                    .iter()
                    .enumerate()
                    .map(|(i, &l)| self.inverse_cartan[i][j] * l)
                    .sum()
            })
            .collect()
    }

    pub(crate) fn root_coefficients(&self) -> &[Vec<i64>] {
        &self.root_coefficients
    }

    /// Simple reflection `s_i` applied in place.
    pub fn reflect_in_place(&self, i: usize, x: &mut Weight) {
        let c = x.labels()[i];
        if c != 0 {
            x.labels_mut()
                .iter_mut()
                .zip(&self.cartan[i])
                .for_each(|(l, a)| *l -= c * a);
        }
    }

    pub fn reflect(&self, i: usize, x: &Weight) -> Weight {
        let mut y = x.clone();
        self.reflect_in_place(i, &mut y);
        y
    }

    /// Dominant representative of the (linear) Weyl orbit of `x`, with the
    /// parity of the number of reflections used.
    pub fn dominant_conjugate(&self, x: &Weight) -> (Weight, i64) {
        let mut y = x.clone();
        let mut sign = 1;
        while let Some(i) = y.labels().iter().position(|&l| l < 0) {
            self.reflect_in_place(i, &mut y);
            sign = -sign;
        }
        (y, sign)
    }

    /// ρ-shifted reduction `x ↦ w(x+ρ) − ρ` to the dominant chamber.
    ///
    /// Returns `(x, 0)` when `x + ρ` lies on a reflection wall.
    pub fn dominant_reduce(&self, x: &Weight) -> (Weight, i64) {
        let shifted = x + &self.rho;
        let (y, sign) = self.dominant_conjugate(&shifted);
        if y.labels().contains(&0) {
            (x.clone(), 0)
        } else {
            (&y - &self.rho, sign)
        }
    }

    /// `−w₀(μ)`.
    pub fn dual_weight(&self, x: &Weight) -> Weight {
        self.dominant_conjugate(&-x).0
    }

    /// Weyl dimension formula, exact.
    pub fn weyl_dimension(&self, lambda: &Weight) -> i64 {
        let shifted = lambda + &self.rho;
        let mut num = Rational64::one();
        for alpha in &self.positive_roots {
            num *= self.inner_product(&shifted, alpha) / self.inner_product(&self.rho, alpha);
        }
        debug_assert!(num.is_integer());
        num.to_integer()
    }

    /// Checks that a weight has the right number of labels.
    pub fn check_rank(&self, x: &Weight) -> Result<()> {
        if x.rank() == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                weight: x.to_string(),
                expected: self.rank,
                found: x.rank(),
            })
        }
    }
}

fn labels_of(cartan: &[Vec<i64>], coeffs: &[i64]) -> Weight {
    let n = cartan.len();
    Weight::new(
        (0..n)
            .map(|j| coeffs.iter().zip(cartan).map(|(c, row)| c * row[j]).sum())
            .collect(),
    )
}

/// Positive roots in the simple-root basis, generated by root strings.
fn positive_root_coefficients(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    use std::collections::HashSet;
    let n = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    };
    let mut roots: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut known: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            let labels = labels_of(cartan, beta);
            for i in 0..n {
                if *beta == unit(i) {
                    continue;
                }
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - labels.labels()[i];
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots
}
