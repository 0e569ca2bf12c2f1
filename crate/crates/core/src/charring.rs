//! The representation ring `R(K)`, the wrong-way map `ι_!` onto the Verlinde
//! ring, and the Verlinde ideal `I_K = ker ι_!`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::ToPrimitive;

use crate::alcove::FusionContext;
use crate::error::{Error, Result};
use crate::fusion::{CharElement, FusionElement};
use crate::rootsys::RootSystem;
use crate::weight::Weight;
use crate::weyl::{signed_orbit, weyl_group};

const SINGULAR_THRESHOLD: f64 = 1e-9;

/// `[V_λ] ↦ ±σ_μ` where `μ` is the folded representative of `λ`, or `0`
/// when `λ + ρ` lies on an affine wall.
pub fn iota_shriek(ctx: &FusionContext, x: &CharElement) -> Result<FusionElement> {
    let mut out = FusionElement::zero(ctx);
    for (lambda, c) in x.terms() {
        ctx.root_system().check_rank(lambda)?;
        if let (Some(mu), sign) = ctx.affine_reduce(lambda) {
            out.add_term_unchecked(mu, sign * c);
        }
    }
    Ok(out)
}

/// Membership in the level-ℓ Verlinde ideal.
pub fn ideal_member(ctx: &FusionContext, x: &CharElement) -> Result<bool> {
    Ok(iota_shriek(ctx, x)?.is_zero())
}

fn alternating_sum(
    rs: &RootSystem,
    group: &[crate::weyl::WeylElement],
    nu: &Weight,
    point: &[f64],
) -> Complex64 {
    signed_orbit(group, nu)
        .iter()
        .map(|(v, det)| {
            let pairing: f64 = v
                .labels()
                .iter()
                .enumerate()
                .map(|(i, &vi)| {
                    (0..rs.rank())
                        .map(|j| rs.quad_form()[i][j].to_f64().unwrap() * vi as f64 * point[j])
                        .sum::<f64>()
                })
                .sum();
            Complex64::from_polar(*det as f64, 2.0 * PI * pairing)
        })
        .sum()
}

/// Weyl character formula `χ_λ(exp 2πi x) = A_{λ+ρ}(x) / A_ρ(x)` at a point
/// `x` given in Dynkin coordinates.
pub fn char_value(rs: &RootSystem, lambda: &Weight, point: &[Rational64]) -> Result<Complex64> {
    let x = CharElement::irreducible(lambda.clone())?;
    char_element_value(rs, &x, point)
}

/// Linear extension of [`char_value`].
pub fn char_element_value(
    rs: &RootSystem,
    x: &CharElement,
    point: &[Rational64],
) -> Result<Complex64> {
    let group = weyl_group(rs)?;
    if point.len() != rs.rank() {
        return Err(Error::RankMismatch {
            weight: format!("{point:?}"),
            expected: rs.rank(),
            found: point.len(),
        });
    }
    let p: Vec<f64> = point.iter().map(|q| q.to_f64().unwrap()).collect();
    let denominator = alternating_sum(rs, &group, rs.rho(), &p);
    if denominator.norm() <= SINGULAR_THRESHOLD {
        return Err(Error::SingularPoint);
    }
    let mut total = Complex64::new(0.0, 0.0);
    for (lambda, c) in x.terms() {
        rs.check_rank(lambda)?;
        total += alternating_sum(rs, &group, &(lambda + rs.rho()), &p) * c as f64;
    }
    Ok(total / denominator)
}

/// The Verlinde points `(μ + ρ)/k`, `μ ∈ Λ*_ℓ`.
pub fn verlinde_points(ctx: &FusionContext) -> Vec<Vec<Rational64>> {
    let k = ctx.twist_level() as i64;
    ctx.basis()
        .iter()
        .map(|mu| {
            (mu + ctx.root_system().rho())
                .labels()
                .iter()
                .map(|&l| Rational64::new(l, k))
                .collect()
        })
        .collect()
}
