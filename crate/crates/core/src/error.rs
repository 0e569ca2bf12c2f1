use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid type {0}: not a finite simple type")]
    InvalidType(String),
    #[error("fusion level is zero")]
    LevelZero,
    #[error("elements belong to different fusion contexts")]
    ContextMismatch,
    #[error("rank {0} exceeds the Weyl group enumeration cap of 4")]
    RankTooLarge(usize),
    #[error("oracle entry {value} is not within 1e-6 of an integer")]
    NonIntegralOracle { value: f64 },
    #[error("Weyl denominator vanishes at the evaluation point")]
    SingularPoint,
    #[error("twist level {twist} is below the dual Coxeter number {dual_coxeter}")]
    LevelBelowDualCoxeter { twist: u32, dual_coxeter: u32 },
    #[error("weight {weight} has level {level}, above the bound {bound}")]
    LevelOverflow {
        weight: String,
        level: i64,
        bound: i64,
    },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {weight} has {found} labels, expected {expected}")]
    RankMismatch {
        weight: String,
        expected: usize,
        found: usize,
    },
    #[error("weight {0} is not in the basis")]
    NotInBasis(String),
}

impl Error {
    /// Stable variant name, used for CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidType(_) => "InvalidType",
            Error::LevelZero => "LevelZero",
            Error::ContextMismatch => "ContextMismatch",
            Error::RankTooLarge(_) => "RankTooLarge",
            Error::NonIntegralOracle { .. } => "NonIntegralOracle",
            Error::SingularPoint => "SingularPoint",
            Error::LevelBelowDualCoxeter { .. } => "LevelBelowDualCoxeter",
            Error::LevelOverflow { .. } => "LevelOverflow",
            Error::NotDominant(_) => "NotDominant",
            Error::RankMismatch { .. } => "RankMismatch",
            Error::NotInBasis(_) => "NotInBasis",
        }
    }
}
