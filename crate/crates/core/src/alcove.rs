//! Level-ℓ weights, Kac–Walton folding into the fundamental alcove, and
//! alcove positions of the conjugacy classes `C_μ`.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::fusion::FusionTable;
use crate::rootsys::{RootSystem, Series};
use crate::weight::Weight;

/// All dominant weights of level at most `level`, in lexicographic order.
pub fn level_weights(rs: &RootSystem, level: u32) -> Vec<Weight> {
    let marks = rs.theta_covector_marks();
    let mut out = Vec::new();
    let mut current = vec![0i64; rs.rank()];
    fn recurse(
        i: usize,
        budget: i64,
        marks: &[i64],
        current: &mut Vec<i64>,
        out: &mut Vec<Weight>,
    ) {
        if i == marks.len() {
            out.push(Weight::new(current.clone()));
            return;
        }
        let mut label = 0;
        while label * marks[i] <= budget {
            current[i] = label;
            recurse(i + 1, budget - label * marks[i], marks, current, out);
            label += 1;
        }
        current[i] = 0;
    }
    recurse(0, level as i64, marks, &mut current, &mut out);
    out
}

/// A root system at a fixed twist level `k`, with fusion level `ℓ = k − h∨`
/// and its enumerated basis `Λ*_ℓ`.
#[derive(Debug, Clone)]
pub struct FusionContext {
    rs: RootSystem,
    fusion_level: u32,
    basis: Vec<Weight>,
    index: HashMap<Weight, usize>,
    table: OnceLock<FusionTable>,
}

/// Identifies the context a ring element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ContextKey {
    pub series: Series,
    pub rank: usize,
    pub fusion_level: u32,
}

impl PartialEq for FusionContext {
    fn eq(&self, other: &Self) -> bool {
        self.rs == other.rs && self.fusion_level == other.fusion_level
    }
}

impl FusionContext {
    pub fn new(rs: RootSystem, fusion_level: u32) -> FusionContext {
        let basis = level_weights(&rs, fusion_level);
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        FusionContext {
            rs,
            fusion_level,
            basis,
            index,
            table: OnceLock::new(),
        }
    }

    pub fn key(&self) -> ContextKey {
        ContextKey {
            series: self.rs.series(),
            rank: self.rs.rank(),
            fusion_level: self.fusion_level,
        }
    }

    /// Full structure-constant tensor, computed on first use.
    pub fn fusion_table(&self) -> &FusionTable {
        self.table.get_or_init(|| FusionTable::compute(self))
    }

    /// Context at twist level `k`; fails when `k < h∨`.
    pub fn from_twist(rs: RootSystem, twist_level: u32) -> Result<FusionContext> {
        let h = rs.dual_coxeter();
        if (twist_level as i64) < h {
            return Err(Error::LevelBelowDualCoxeter {
                twist: twist_level,
                dual_coxeter: h as u32,
            });
        }
        Ok(FusionContext::new(rs, twist_level - h as u32))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn fusion_level(&self) -> u32 {
        self.fusion_level
    }

    pub fn twist_level(&self) -> u32 {
        self.fusion_level + self.rs.dual_coxeter() as u32
    }

    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.index.contains_key(w)
    }

    pub fn check_basis(&self, w: &Weight) -> Result<usize> {
        self.rs.check_rank(w)?;
        self.index_of(w)
            .ok_or_else(|| Error::NotInBasis(w.to_string()))
    }

    /// Kac–Walton folding: acts with the ρ-shifted affine Weyl group at
    /// level `k` and returns the representative in `Λ*_ℓ` together with
    /// the determinant, or `(None, 0)` if `x + ρ` lies on an affine wall.
    pub fn affine_reduce(&self, x: &Weight) -> (Option<Weight>, i64) {
        let rs = &self.rs;
        let k = self.twist_level() as i64;
        let theta = rs.theta();
        let mut y = x + rs.rho();
        let mut sign = 1;
        loop {
            if let Some(i) = y.labels().iter().position(|&l| l < 0) {
                rs.reflect_in_place(i, &mut y);
                sign = -sign;
                continue;
            }
            let excess = rs.level(&y) - k;
            if excess > 0 {
                // s_{θ,k}: y ↦ y − (⟨y,θ∨⟩ − k) θ
                y = &y - &(excess * theta);
                sign = -sign;
                continue;
            }
            break;
        }
        if y.labels().contains(&0) || rs.level(&y) == k {
            (None, 0)
        } else {
            (Some(&y - rs.rho()), sign)
        }
    }

    /// The ρ-shifted affine reflection in the wall `⟨x, θ∨⟩ = k`.
    pub fn affine_reflect(&self, x: &Weight) -> Weight {
        let rs = &self.rs;
        let y = x + rs.rho();
        let excess = rs.level(&y) - self.twist_level() as i64;
        &(&y - &(excess * rs.theta())) - rs.rho()
    }

    pub fn alcove_position(&self, mu: &Weight) -> Result<AlcovePosition> {
        if self.fusion_level == 0 {
            return Err(Error::LevelZero);
        }
        self.check_basis(mu)?;
        let l = self.fusion_level as i64;
        let level = self.rs.level(mu);
        let coordinates = mu.labels().iter().map(|&m| Rational64::new(m, l)).collect();
        let mut walls: Vec<usize> = Vec::new();
        if level == l {
            walls.push(0);
        }
        walls.extend(
            mu.labels()
                .iter()
                .enumerate()
                .filter(|(_, &m)| m == 0)
                .map(|(i, _)| i + 1),
        );
        let stabilizer = if walls.is_empty() {
            Stabilizer::Torus
        } else if mu.is_zero() {
            Stabilizer::Whole
        } else {
            Stabilizer::Wall(walls.clone())
        };
        Ok(AlcovePosition {
            coordinates,
            affine_coordinate: Rational64::new(l - level, l),
            vertex: walls.len() == self.rs.rank(),
            walls,
            stabilizer,
        })
    }
}

/// Stabilizer class of a point of the closed alcove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stabilizer {
    /// Open alcove: the maximal torus `T`.
    Torus,
    /// The vertex `0`: all of `K`.
    Whole,
    /// `K_I` for the listed walls.
    Wall(Vec<usize>),
}

impl fmt::Display for Stabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stabilizer::Torus => write!(f, "T"),
            Stabilizer::Whole => write!(f, "K"),
            Stabilizer::Wall(walls) => {
                let ids: Vec<String> = walls.iter().map(|w| w.to_string()).collect();
                write!(f, "K_{{{}}}", ids.join(","))
            }
        }
    }
}

/// Position of `μ/ℓ` in the closed fundamental alcove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcovePosition {
    /// `μ_i / ℓ`.
    pub coordinates: Vec<Rational64>,
    /// `1 − level(μ)/ℓ`.
    pub affine_coordinate: Rational64,
    /// Closed walls containing the point, sorted; `0` is the affine wall.
    pub walls: Vec<usize>,
    pub vertex: bool,
    pub stabilizer: Stabilizer,
}

impl AlcovePosition {
    pub fn is_interior(&self) -> bool {
        self.walls.is_empty()
    }
}
