//! Classical representation data of `K`: weight systems and tensor products.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weight::Weight;

/// Element of the representation ring `R(K)`: a finite integer combination
/// of irreducible classes `[V_λ]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CharElement {
    coeffs: BTreeMap<Weight, i64>,
}

impl CharElement {
    pub fn zero() -> CharElement {
        CharElement::default()
    }

    pub fn irreducible(lambda: Weight) -> Result<CharElement> {
        let mut x = CharElement::zero();
        x.add_term(lambda, 1)?;
        Ok(x)
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, i64)>>(terms: I) -> Result<CharElement> {
        let mut x = CharElement::zero();
        for (w, c) in terms {
            x.add_term(w, c)?;
        }
        Ok(x)
    }

    pub fn add_term(&mut self, lambda: Weight, coeff: i64) -> Result<()> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        add_coeff(&mut self.coeffs, lambda, coeff);
        Ok(())
    }

    pub fn coeff(&self, lambda: &Weight) -> i64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.coeffs.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &CharElement) -> CharElement {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            add_coeff(&mut out.coeffs, w.clone(), c);
        }
        out
    }

    pub fn scale(&self, s: i64) -> CharElement {
        let mut out = CharElement::zero();
        for (w, c) in self.terms() {
            add_coeff(&mut out.coeffs, w.clone(), c * s);
        }
        out
    }

    /// Product in `R(K)`, by bilinear extension of [`tensor_decompose`].
    pub fn mul(&self, rs: &RootSystem, other: &CharElement) -> Result<CharElement> {
        let mut out = CharElement::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                for (w, c) in tensor_decompose(rs, a, b)?.terms() {
                    add_coeff(&mut out.coeffs, w.clone(), ca * cb * c);
                }
            }
        }
        Ok(out)
    }

    /// `Σ c_λ dim V_λ`.
    pub fn dimension(&self, rs: &RootSystem) -> i64 {
        self.terms().map(|(w, c)| c * rs.weyl_dimension(w)).sum()
    }
}

impl fmt::Display for CharElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms())
    }
}

pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Weight, i64)>,
) -> fmt::Result {
    let mut empty = true;
    for (w, c) in terms {
        if !empty {
            write!(f, " + ")?;
        }
        write!(f, "{c}*{w}")?;
        empty = false;
    }
    if empty {
        write!(f, "0")?;
    }
    Ok(())
}

pub(crate) fn add_coeff(map: &mut BTreeMap<Weight, i64>, w: Weight, c: i64) {
    if c == 0 {
        return;
    }
    match map.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if *o.get() == 0 {
                o.remove();
            }
        }
    }
}

/// Weight system of `V_λ` with multiplicities, by Freudenthal's recursion.
///
/// Weights are processed in layers of increasing depth below `λ`. The
/// recursion runs over exact rationals and each multiplicity must come out
/// integral.
pub fn weight_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, i64>> {
    rs.check_rank(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let rho = rs.rho();
    let top = {
        let s = lambda + rho;
        rs.inner_product(&s, &s)
    };
    let roots: Vec<(&Weight, i64)> = rs
        .positive_roots()
        .iter()
        .zip(rs.root_coefficients())
        .map(|(a, c)| (a, c.iter().sum::<i64>()))
        .collect();

    let mut mult: HashMap<Weight, i64> = HashMap::from([(lambda.clone(), 1)]);
    // depth of each weight below λ (sum of root coordinates of λ − μ)
    let mut layer: BTreeSet<Weight> = BTreeSet::from([lambda.clone()]);
    let mut depth = 0i64;
    while !layer.is_empty() {
        depth += 1;
        let candidates: BTreeSet<Weight> = layer
            .iter()
            .flat_map(|mu| rs.simple_roots().iter().map(move |a| mu - a))
            .filter(|mu| is_weight_of(rs, lambda, mu))
            .collect();
        for mu in &candidates {
            let mut num = Rational64::zero();
            for &(alpha, height) in &roots {
                let mut j = 1;
                let mut above = mu + alpha;
                while j * height <= depth {
                    match mult.get(&above) {
                        Some(&m) => num += rs.inner_product(&above, alpha) * m,
                        None => break,
                    }
                    above = &above + alpha;
                    j += 1;
                }
            }
            let here = {
                let s = mu + rho;
                rs.inner_product(&s, &s)
            };
            let m = num * 2 / (top - here);
            assert!(
                m.is_integer() && !m.is_negative(),
                "Freudenthal recursion produced a non-integral multiplicity {m} at {mu}"
            );
            mult.insert(mu.clone(), m.to_integer());
        }
        layer = candidates;
    }
    Ok(mult.into_iter().filter(|&(_, m)| m > 0).collect())
}

/// `μ` is a weight of `V_λ` iff its dominant conjugate lies below `λ` in the
/// root order.
fn is_weight_of(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> bool {
    let (dom, _) = rs.dominant_conjugate(mu);
    rs.root_coordinates(&(lambda - &dom))
        .iter()
        .all(|c| c.is_integer() && !c.is_negative())
}

/// Racah–Speiser decomposition of `V_λ ⊗ V_μ`.
pub fn tensor_decompose(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<CharElement> {
    let (big, small) = if rs.weyl_dimension(lambda) >= rs.weyl_dimension(mu) {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    rs.check_rank(big)?;
    if !big.is_dominant() {
        return Err(Error::NotDominant(big.to_string()));
    }
    let weights = weight_multiplicities(rs, small)?;
    Ok(racah_speiser(rs, big, &weights))
}

pub(crate) fn racah_speiser(
    rs: &RootSystem,
    lambda: &Weight,
    weights: &BTreeMap<Weight, i64>,
) -> CharElement {
    let mut out = BTreeMap::new();
    for (xi, &m) in weights {
        let (nu, sign) = rs.dominant_reduce(&(lambda + xi));
        if sign != 0 {
            add_coeff(&mut out, nu, sign * m);
        }
    }
    debug_assert!(out.values().all(|&c| c > 0));
    CharElement { coeffs: out }
}
