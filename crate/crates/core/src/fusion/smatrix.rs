//! Floating-point Verlinde-formula oracle. Independent of the folding path:
//! the only shared inputs are the basis and the quadratic form.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::alcove::FusionContext;
use crate::error::{Error, Result};
use crate::weight::Weight;
use crate::weyl::{signed_orbit, weyl_group};

pub const INTEGRALITY_TOLERANCE: f64 = 1e-6;

/// Modular S-matrix of the level-ℓ basis, normalized to be unitary.
pub fn s_matrix(ctx: &FusionContext) -> Result<Vec<Vec<Complex64>>> {
    let rs = ctx.root_system();
    let group = weyl_group(rs)?;
    let k = ctx.twist_level() as f64;
    let shifted: Vec<Weight> = ctx.basis().iter().map(|mu| mu + rs.rho()).collect();
    let raw: Vec<Vec<Complex64>> = shifted
        .iter()
        .map(|lam| {
            let orbit = signed_orbit(&group, lam);
            shifted
                .iter()
                .map(|mu| {
                    orbit
                        .iter()
                        .map(|(v, det)| {
                            let phase = rs
                                .inner_product(v, mu)
                                .to_f64()
                                .expect("finite inner product");
                            Complex64::from_polar(*det as f64, -2.0 * PI * phase / k)
                        })
                        .sum()
                })
                .collect()
        })
        .collect();
    let norm = raw[0].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    Ok(raw
        .into_iter()
        .map(|row| row.into_iter().map(|z| z / norm).collect())
        .collect())
}

/// `max |(S S†) − I|` over all entries.
pub fn unitarity_defect(s: &[Vec<Complex64>]) -> f64 {
    let n = s.len();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let z: Complex64 = (0..n).map(|m| s[i][m] * s[j][m].conj()).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((z - target).norm());
        }
    }
    worst
}

/// Verlinde formula over a precomputed S-matrix.
#[derive(Debug, Clone)]
pub struct VerlindeOracle {
    basis: Vec<Weight>,
    s: Vec<Vec<Complex64>>,
}

impl VerlindeOracle {
    pub fn new(ctx: &FusionContext) -> Result<VerlindeOracle> {
        Ok(VerlindeOracle {
            basis: ctx.basis().to_vec(),
            s: s_matrix(ctx)?,
        })
    }

    pub fn s(&self) -> &[Vec<Complex64>] {
        &self.s
    }

    /// `N^ν = Σ_σ S_{aσ} S_{bσ} conj(S_{νσ}) / S_{0σ}`, unrounded.
    pub fn raw_coefficient(&self, a: usize, b: usize, nu: usize) -> Complex64 {
        let s = &self.s;
        (0..s.len())
            .map(|sigma| s[a][sigma] * s[b][sigma] * s[nu][sigma].conj() / s[0][sigma])
            .sum()
    }

    /// Rounded row of the product `σ_a ⋆ σ_b`, indexed by basis position.
    pub fn fuse_indices(&self, a: usize, b: usize) -> Result<Vec<i64>> {
        (0..self.basis.len())
            .map(|nu| {
                let z = self.raw_coefficient(a, b, nu);
                let rounded = z.re.round();
                if (z - rounded).norm() > INTEGRALITY_TOLERANCE || rounded < 0.0 {
                    Err(Error::NonIntegralOracle { value: z.re })
                } else {
                    Ok(rounded as i64)
                }
            })
            .collect()
    }

    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }
}

/// Fusion coefficients of `σ_{μ1} ⋆ σ_{μ2}` by the Verlinde formula; zero
/// entries are omitted.
pub fn fuse_via_smatrix(
    ctx: &FusionContext,
    mu1: &Weight,
    mu2: &Weight,
) -> Result<BTreeMap<Weight, i64>> {
    let (a, b) = (ctx.check_basis(mu1)?, ctx.check_basis(mu2)?);
    let oracle = VerlindeOracle::new(ctx)?;
    Ok(oracle
        .fuse_indices(a, b)?
        .into_iter()
        .zip(ctx.basis())
        .filter(|(n, _)| *n != 0)
        .map(|(n, w)| (w.clone(), n))
        .collect())
}
