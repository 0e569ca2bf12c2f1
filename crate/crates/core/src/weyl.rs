//! Explicit finite Weyl group, used only by the floating-point oracles.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weight::Weight;

pub const MAX_ENUMERATION_RANK: usize = 4;

#[derive(Debug, Clone)]
pub struct WeylElement {
    /// Images of the fundamental weights, in Dynkin labels.
    images: Vec<Weight>,
    pub det: i64,
}

impl WeylElement {
    pub fn apply(&self, x: &Weight) -> Weight {
        let n = self.images.len();
        let mut out = vec![0; n];
        for (img, &c) in self.images.iter().zip(x.labels()) {
            if c != 0 {
                out.iter_mut()
                    .zip(img.labels())
                    .for_each(|(o, l)| *o += c * l);
            }
        }
        Weight::new(out)
    }
}

/// All elements of the Weyl group, found by breadth-first search on the
/// orbit of ρ (the action on ρ is free).
pub fn weyl_group(rs: &RootSystem) -> Result<Vec<WeylElement>> {
    let n = rs.rank();
    if n > MAX_ENUMERATION_RANK {
        return Err(Error::RankTooLarge(n));
    }
    let identity = WeylElement {
        images: (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                Weight::new(v)
            })
            .collect(),
        det: 1,
    };
    let mut seen: HashSet<Weight> = HashSet::from([rs.rho().clone()]);
    let mut elements = vec![identity];
    let mut frontier = 0;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        frontier += 1;
        for i in 0..n {
            let next = WeylElement {
                images: current.images.iter().map(|w| rs.reflect(i, w)).collect(),
                det: -current.det,
            };
            if seen.insert(next.apply(rs.rho())) {
                elements.push(next);
            }
        }
    }
    Ok(elements)
}

/// The orbit `{(w(x), det w)}` over the whole group.
pub fn signed_orbit(group: &[WeylElement], x: &Weight) -> Vec<(Weight, i64)> {
    group.iter().map(|w| (w.apply(x), w.det)).collect()
}
