#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::Zero;
use verlinde::fusion::weight_multiplicities;
use verlinde::{CharElement, RootSystem, Weight};

pub fn rs(name: &str) -> RootSystem {
    name.parse().unwrap()
}

pub fn w<const N: usize>(l: [i64; N]) -> Weight {
    Weight::from(l)
}

/// Tensor product by multiplying formal characters and peeling off the
/// character of the highest remaining weight. Shares nothing with the
/// Racah–Speiser path except the weight systems themselves.
pub fn tensor_by_peeling(rs: &RootSystem, a: &Weight, b: &Weight) -> BTreeMap<Weight, i64> {
    let ma = weight_multiplicities(rs, a).unwrap();
    let mb = weight_multiplicities(rs, b).unwrap();
    let mut product: BTreeMap<Weight, i64> = BTreeMap::new();
    for (x, cx) in &ma {
        for (y, cy) in &mb {
            *product.entry(x + y).or_insert(0) += cx * cy;
        }
    }
    let height = |v: &Weight| -> Rational64 {
        rs.root_coordinates(v)
            .into_iter()
            .fold(Rational64::zero(), |acc, c| acc + c)
    };
    let mut out = BTreeMap::new();
    while let Some(top) = product
        .iter()
        .filter(|(_, &c)| c != 0)
        .max_by(|(x, _), (y, _)| height(x).cmp(&height(y)).then_with(|| x.cmp(y)))
        .map(|(w, &c)| (w.clone(), c))
    {
        let (nu, m) = top;
        assert!(nu.is_dominant() && m > 0, "peeling hit {nu} with {m}");
        out.insert(nu.clone(), m);
        for (x, cx) in weight_multiplicities(rs, &nu).unwrap() {
            *product.entry(x).or_insert(0) -= m * cx;
        }
        product.retain(|_, c| *c != 0);
    }
    out
}

pub fn char_to_map(x: &CharElement) -> BTreeMap<Weight, i64> {
    x.terms().map(|(w, c)| (w.clone(), c)).collect()
}

/// Closed-form A1 fusion rule at level ℓ.
pub fn a1_fusion_rule(level: i64, a: i64, b: i64, c: i64) -> i64 {
    let hi = (a + b).min(2 * level - a - b);
    ((a - b).abs() <= c && c <= hi && (a + b + c) % 2 == 0) as i64
}
