//! The Verlinde ring `R^ℓ(LK)`: Kac–Walton fusion on the basis `σ_μ`,
//! charge conjugation, the unit-coefficient trace and the Verlinde-formula
//! oracle.

mod classical;
mod smatrix;

pub use classical::{tensor_decompose, weight_multiplicities, CharElement};
pub use smatrix::{
    fuse_via_smatrix, s_matrix, unitarity_defect, VerlindeOracle, INTEGRALITY_TOLERANCE,
};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::alcove::{ContextKey, FusionContext};
use crate::error::{Error, Result};
use crate::weight::Weight;
use classical::{add_coeff, racah_speiser, write_terms};

/// Element of the Verlinde ring over a fixed [`FusionContext`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionElement {
    key: ContextKey,
    coeffs: BTreeMap<Weight, i64>,
}

impl FusionElement {
    pub fn zero(ctx: &FusionContext) -> FusionElement {
        FusionElement {
            key: ctx.key(),
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element `σ_μ`.
    pub fn basis(ctx: &FusionContext, mu: &Weight) -> Result<FusionElement> {
        FusionElement::from_terms(ctx, [(mu.clone(), 1)])
    }

    pub fn unit(ctx: &FusionContext) -> FusionElement {
        let mut x = FusionElement::zero(ctx);
        x.coeffs.insert(Weight::zero(ctx.root_system().rank()), 1);
        x
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, i64)>>(
        ctx: &FusionContext,
        terms: I,
    ) -> Result<FusionElement> {
        let mut x = FusionElement::zero(ctx);
        for (w, c) in terms {
            ctx.check_basis(&w)?;
            add_coeff(&mut x.coeffs, w, c);
        }
        Ok(x)
    }

    pub fn key(&self) -> ContextKey {
        self.key
    }

    pub fn coeff(&self, mu: &Weight) -> i64 {
        self.coeffs.get(mu).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.coeffs.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &FusionElement) -> Result<FusionElement> {
        if self.key != other.key {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.clone();
        for (w, c) in other.terms() {
            add_coeff(&mut out.coeffs, w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: i64) -> FusionElement {
        let mut out = FusionElement {
            key: self.key,
            coeffs: BTreeMap::new(),
        };
        for (w, c) in self.terms() {
            add_coeff(&mut out.coeffs, w.clone(), c * s);
        }
        out
    }

    pub(crate) fn add_term_unchecked(&mut self, w: Weight, c: i64) {
        add_coeff(&mut self.coeffs, w, c);
    }
}

impl fmt::Display for FusionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms())
    }
}

/// Dense tensor `N[a][b][c] = c^{μ_c}_{μ_a μ_b}` indexed by basis position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTable {
    size: usize,
    data: Vec<i64>,
}

impl FusionTable {
    pub(crate) fn compute(ctx: &FusionContext) -> FusionTable {
        let rs = ctx.root_system();
        let n = ctx.len();
        let weights: Vec<BTreeMap<Weight, i64>> = ctx
            .basis()
            .iter()
            .map(|mu| weight_multiplicities(rs, mu).expect("basis weights are dominant"))
            .collect();
        let mut data = vec![0; n * n * n];
        for a in 0..n {
            for b in a..n {
                let classical = racah_speiser(rs, &ctx.basis()[a], &weights[b]);
                for (nu, m) in classical.terms() {
                    if let (Some(c), sign) = ctx.affine_reduce(nu) {
                        let c = ctx.index_of(&c).expect("folded weight lies in the basis");
                        data[(a * n + b) * n + c] += sign * m;
                        if a != b {
                            data[(b * n + a) * n + c] += sign * m;
                        }
                    }
                }
            }
        }
        FusionTable { size: n, data }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> i64 {
        self.data[(a * self.size + b) * self.size + c]
    }

    /// Nonzero entries `(a, b, c, n)` in index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, i64)> + '_ {
        let n = self.size;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(move |(i, &v)| (i / (n * n), (i / n) % n, i % n, v))
    }
}

/// `c^{ν}_{μ1 μ2}` for basis weights.
pub fn structure_constant(
    ctx: &FusionContext,
    mu1: &Weight,
    mu2: &Weight,
    nu: &Weight,
) -> Result<i64> {
    let (a, b, c) = (
        ctx.check_basis(mu1)?,
        ctx.check_basis(mu2)?,
        ctx.check_basis(nu)?,
    );
    Ok(ctx.fusion_table().get(a, b, c))
}

/// Fusion product, the bilinear extension of `σ_a ⋆ σ_b = Σ_c N_ab^c σ_c`.
pub fn fuse(ctx: &FusionContext, a: &FusionElement, b: &FusionElement) -> Result<FusionElement> {
    if a.key != b.key || a.key != ctx.key() {
        return Err(Error::ContextMismatch);
    }
    let table = ctx.fusion_table();
    let index = |w: &Weight| ctx.index_of(w).expect("element keys lie in the basis");
    let mut out = FusionElement::zero(ctx);
    for (wa, ca) in a.terms() {
        let ia = index(wa);
        for (wb, cb) in b.terms() {
            let ib = index(wb);
            for (ic, nu) in ctx.basis().iter().enumerate() {
                let n = table.get(ia, ib, ic);
                if n != 0 {
                    out.add_term_unchecked(nu.clone(), ca * cb * n);
                }
            }
        }
    }
    Ok(out)
}

/// `μ* = −w₀(μ)`.
pub fn charge_conjugate(ctx: &FusionContext, mu: &Weight) -> Result<Weight> {
    ctx.check_basis(mu)?;
    Ok(ctx.root_system().dual_weight(mu))
}

/// Coefficient of the unit `σ_0`.
pub fn trace(ctx: &FusionContext, a: &FusionElement) -> i64 {
    a.coeff(&Weight::zero(ctx.root_system().rank()))
}

/// `P[μ][ν] = trace(σ_μ ⋆ σ_ν)`.
pub fn frobenius_matrix(ctx: &FusionContext) -> Vec<Vec<i64>> {
    let table = ctx.fusion_table();
    let n = ctx.len();
    let unit = ctx
        .index_of(&Weight::zero(ctx.root_system().rank()))
        .expect("zero weight is always in the basis");
    (0..n)
        .map(|a| (0..n).map(|b| table.get(a, b, unit)).collect())
        .collect()
}

pub fn is_permutation_matrix(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    m.iter()
        .all(|row| row.len() == n && row.iter().all(|&v| v == 0 || v == 1))
        && m.iter().all(|row| row.iter().sum::<i64>() == 1)
        && (0..n).all(|j| m.iter().map(|row| row[j]).sum::<i64>() == 1)
}

/// Basis weights `μ3` with `c^{μ3}_{μ1 μ2} > 0`.
pub fn horn_support(ctx: &FusionContext, mu1: &Weight, mu2: &Weight) -> Result<BTreeSet<Weight>> {
    let (a, b) = (ctx.check_basis(mu1)?, ctx.check_basis(mu2)?);
    let table = ctx.fusion_table();
    Ok(ctx
        .basis()
        .iter()
        .enumerate()
        .filter(|&(c, _)| table.get(a, b, c) > 0)
        .map(|(_, w)| w.clone())
        .collect())
}
