//! Exact Verlinde fusion rings of compact simple groups and their
//! noncompact counterparts.
//!
//! The level-ℓ Verlinde ring is computed exactly by Racah–Speiser tensor
//! decomposition followed by Kac–Walton folding into the fundamental alcove.
//! Floating-point S-matrix and Weyl-character evaluations are provided as
//! independent oracles.

pub mod alcove;
pub mod charring;
mod error;
pub mod fusion;
pub mod noncompact;
pub mod rootsys;
pub mod steinberg;
mod weight;
pub mod weyl;

pub use alcove::{level_weights, AlcovePosition, ContextKey, FusionContext, Stabilizer};
pub use error::{Error, Result};
pub use fusion::{CharElement, FusionElement, FusionTable};
pub use rootsys::{build_root_system, RootSystem, Series};
pub use weight::{ParseWeightError, Weight};
