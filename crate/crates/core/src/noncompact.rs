//! The noncompact side for complex semisimple `G` with maximal compact `K`.
//!
//! `K_•(C*_r G)` is free on regular dominant weights and Dirac induction is
//! the ρ-shift `[V_μ] ↦ β_{μ+ρ}`. At twist level `k` the twisted group is
//! free on the regular level-`k` weights, the map `q` sends `σ_μ` to the
//! generator labelled `μ + ρ`, and the quotient ring structure is the
//! Verlinde product transported along `q`.

use std::collections::BTreeMap;
use std::fmt;

use crate::alcove::{AlcovePosition, FusionContext};
use crate::error::{Error, Result};
use crate::fusion::{fuse, FusionElement};
use crate::rootsys::RootSystem;
use crate::weight::Weight;

/// Parity of the K-theory degree, `dim G/K mod 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// For complex `G`, `dim G/K = dim K`, whose parity is that of the rank.
pub fn degree_parity(rs: &RootSystem) -> Parity {
    if rs.dimension().is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Generator `β_σ` of the twisted noncompact K-group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NoncompactBasisElement {
    pub regular_weight: Weight,
    pub twist_level: u32,
}

impl fmt::Display for NoncompactBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "β{}", self.regular_weight)
    }
}

/// Integer combination of generators `β_σ` at a fixed twist level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoncompactElement {
    pub twist_level: u32,
    pub degree: Parity,
    coeffs: BTreeMap<Weight, i64>,
}

impl NoncompactElement {
    pub fn zero(ctx: &FusionContext) -> NoncompactElement {
        NoncompactElement {
            twist_level: ctx.twist_level(),
            degree: degree_parity(ctx.root_system()),
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds an element from regular weights, which must all lie in
    /// `Λ*_{k,reg}`.
    pub fn from_terms<I: IntoIterator<Item = (Weight, i64)>>(
        ctx: &FusionContext,
        terms: I,
    ) -> Result<NoncompactElement> {
        let mut x = NoncompactElement::zero(ctx);
        for (sigma, c) in terms {
            check_regular(ctx, &sigma)?;
            x.add_term(sigma, c);
        }
        Ok(x)
    }

    fn add_term(&mut self, sigma: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(sigma.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&sigma);
        }
    }

    pub fn coeff(&self, sigma: &Weight) -> i64 {
        self.coeffs.get(sigma).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.coeffs.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for NoncompactElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*β{w}")?;
        }
        Ok(())
    }
}

fn check_regular(ctx: &FusionContext, sigma: &Weight) -> Result<()> {
    let rs = ctx.root_system();
    rs.check_rank(sigma)?;
    let k = ctx.twist_level() as i64;
    if !sigma.is_strictly_dominant() || rs.level(sigma) > k - 1 {
        return Err(Error::NotInBasis(sigma.to_string()));
    }
    Ok(())
}

/// Strictly dominant weights of level at most `k − 1`.
pub fn regular_level_weights(rs: &RootSystem, twist_level: u32) -> Result<Vec<Weight>> {
    let h = rs.dual_coxeter();
    if (twist_level as i64) < h {
        return Err(Error::LevelBelowDualCoxeter {
            twist: twist_level,
            dual_coxeter: h as u32,
        });
    }
    // Enumerate labels ≥ 1 directly rather than by shifting.
    let marks = rs.theta_covector_marks();
    let mut out = Vec::new();
    let mut current = vec![1i64; rs.rank()];
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
        let mut label = 1;
        while label * marks[i] <= budget {
            current[i] = label;
            recurse(i + 1, budget - label * marks[i], marks, current, out);
            label += 1;
        }
        current[i] = 1;
    }
    let minimum: i64 = marks.iter().sum();
    let budget = twist_level as i64 - 1;
    if budget >= minimum {
        recurse(0, budget, marks, &mut current, &mut out);
    }
    Ok(out)
}

/// Dirac induction at twist level `k`: `μ ↦ β_{μ+ρ}`.
pub fn dirac_induce(
    rs: &RootSystem,
    twist_level: u32,
    mu: &Weight,
) -> Result<NoncompactBasisElement> {
    rs.check_rank(mu)?;
    let h = rs.dual_coxeter();
    if (twist_level as i64) < h {
        return Err(Error::LevelBelowDualCoxeter {
            twist: twist_level,
            dual_coxeter: h as u32,
        });
    }
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.to_string()));
    }
    let bound = twist_level as i64 - h;
    let level = rs.level(mu);
    if level > bound {
        return Err(Error::LevelOverflow {
            weight: mu.to_string(),
            level,
            bound,
        });
    }
    Ok(NoncompactBasisElement {
        regular_weight: mu + rs.rho(),
        twist_level,
    })
}

/// `q(σ_μ) = β_{μ+ρ}`, extended linearly.
pub fn q_map(ctx: &FusionContext, a: &FusionElement) -> Result<NoncompactElement> {
    if a.key() != ctx.key() {
        return Err(Error::ContextMismatch);
    }
    let rho = ctx.root_system().rho();
    let mut out = NoncompactElement::zero(ctx);
    for (mu, c) in a.terms() {
        out.add_term(mu + rho, c);
    }
    Ok(out)
}

/// Inverse of [`q_map`].
pub fn q_inverse(ctx: &FusionContext, x: &NoncompactElement) -> Result<FusionElement> {
    if x.twist_level != ctx.twist_level() {
        return Err(Error::ContextMismatch);
    }
    let rho = ctx.root_system().rho();
    FusionElement::from_terms(ctx, x.terms().map(|(sigma, c)| (sigma - rho, c)))
}

/// Product on the quotient `K_•(C*_r G)/I_G`, defined by
/// `q(a)·q(b) = q(a ⋆ b)`. The unit is `β_ρ`.
pub fn quotient_product(
    ctx: &FusionContext,
    x: &NoncompactElement,
    y: &NoncompactElement,
) -> Result<NoncompactElement> {
    let a = q_inverse(ctx, x)?;
    let b = q_inverse(ctx, y)?;
    q_map(ctx, &fuse(ctx, &a, &b)?)
}

pub fn quotient_unit(ctx: &FusionContext) -> NoncompactElement {
    let mut x = NoncompactElement::zero(ctx);
    x.add_term(ctx.root_system().rho().clone(), 1);
    x
}

/// Coefficient of the unit `β_ρ`.
pub fn quotient_trace(ctx: &FusionContext, x: &NoncompactElement) -> i64 {
    x.coeff(ctx.root_system().rho())
}

/// Symbolic correspondence `G/K ← D_μ → G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correspondence {
    /// Proper leg `b : D_μ → G/K`.
    pub proper_leg: String,
    /// Moment leg `f : D_μ → G`.
    pub moment_leg: String,
}

/// The induced q-Hamiltonian `G`-space `D_μ = G ×_K C_μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QHamiltonianGenerator {
    pub mu: Weight,
    pub position: AlcovePosition,
    pub description: String,
    pub legs: Correspondence,
}

impl QHamiltonianGenerator {
    /// The base conjugacy class is a single point.
    pub fn is_identity_class(&self) -> bool {
        self.mu.is_zero()
    }
}

pub fn make_generator(ctx: &FusionContext, mu: &Weight) -> Result<QHamiltonianGenerator> {
    let position = ctx.alcove_position(mu)?;
    let description = if mu.is_zero() {
        "D_0 = G ×_K {e} = G/K".to_string()
    } else {
        format!("D_{mu} = G ×_K C_{mu}")
    };
    Ok(QHamiltonianGenerator {
        mu: mu.clone(),
        position,
        description,
        legs: Correspondence {
            proper_leg: "b: [g, c] ↦ gK".to_string(),
            moment_leg: "f: [g, c] ↦ g c g⁻¹".to_string(),
        },
    })
}

/// Generators for every basis weight, in basis order.
pub fn all_generators(ctx: &FusionContext) -> Result<Vec<QHamiltonianGenerator>> {
    ctx.basis()
        .iter()
        .map(|mu| make_generator(ctx, mu))
        .collect()
}

/// The quantization class `Q(D_μ)`, i.e. `σ_μ`.
pub fn quantize(ctx: &FusionContext, g: &QHamiltonianGenerator) -> Result<FusionElement> {
    FusionElement::basis(ctx, &g.mu)
}

/// `Q(D_{μ1}) ⋆ Q(D_{μ2})` expanded in generator classes.
pub fn quantize_product(
    ctx: &FusionContext,
    g1: &QHamiltonianGenerator,
    g2: &QHamiltonianGenerator,
) -> Result<FusionElement> {
    fuse(ctx, &quantize(ctx, g1)?, &quantize(ctx, g2)?)
}
