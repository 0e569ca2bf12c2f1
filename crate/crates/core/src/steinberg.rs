//! Fibers of the trace map on `SL(2,ℝ)` and `SL(2,ℂ)`, and the closed
//! interval cover of `SL(2,ℝ)`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    SL2R,
    SL2C,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::SL2R => write!(f, "SL(2,ℝ)"),
            Group::SL2C => write!(f, "SL(2,ℂ)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum StratumKind {
    /// The whole fiber is one conjugacy class.
    SingleClass,
    /// A central element `±I₂`.
    PointClass,
    UnipotentClass,
}

impl fmt::Display for StratumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StratumKind::SingleClass => write!(f, "single-class"),
            StratumKind::PointClass => write!(f, "point-class"),
            StratumKind::UnipotentClass => write!(f, "unipotent-class"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub name: String,
    pub kind: StratumKind,
    pub model: String,
}

/// Conjugacy-class stratification of `Tr⁻¹(r)`. Strata are listed so that a
/// point class precedes the unipotent classes whose closure contains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberDescriptor {
    pub group: Group,
    pub trace_re: Rational64,
    pub trace_im: Rational64,
    pub strata: Vec<Stratum>,
    /// Affine variety model of a singular fiber.
    pub variety: Option<String>,
}

impl FiberDescriptor {
    pub fn is_singular(&self) -> bool {
        self.strata.len() > 1
    }
}

fn two() -> Rational64 {
    Rational64::from_integer(2)
}

fn single(name: &str, model: &str) -> Vec<Stratum> {
    vec![Stratum {
        name: name.to_string(),
        kind: StratumKind::SingleClass,
        model: model.to_string(),
    }]
}

pub fn classify_fiber_sl2c(re: Rational64, im: Rational64) -> FiberDescriptor {
    let central = im.is_zero() && re.abs() == two();
    let (strata, variety) = if central {
        let (sign, point, shift) = if re.is_positive() {
            ("", "I₂", "−")
        } else {
            ("−", "−I₂", "+")
        };
        (
            vec![
                Stratum {
                    name: point.to_string(),
                    kind: StratumKind::PointClass,
                    model: point.to_string(),
                },
                Stratum {
                    name: format!("{sign}unipotent class"),
                    kind: StratumKind::UnipotentClass,
                    model: format!("{{g ({sign}1 1; 0 {sign}1) g⁻¹ | g ∈ SL(2,ℂ)}}"),
                },
            ],
            Some(format!("V((a{shift}1)²+bc) ⊂ ℂ³, singular at {point}")),
        )
    } else {
        (single("semisimple class", "SL(2,ℂ)/A"), None)
    };
    FiberDescriptor {
        group: Group::SL2C,
        trace_re: re,
        trace_im: im,
        strata,
        variety,
    }
}

pub fn classify_fiber_sl2r(r: Rational64) -> FiberDescriptor {
    let (strata, variety) = if r.abs() > two() {
        (single("hyperbolic class", "SL(2,ℝ)/A"), None)
    } else if r.abs() < two() {
        (single("elliptic class", "SL(2,ℝ)/SO(2)"), None)
    } else {
        let (sign, point) = if r.is_positive() {
            ("", "I₂")
        } else {
            ("−", "−I₂")
        };
        let half = |cond: &str| Stratum {
            name: format!("{sign}unipotent class, b {cond} 0"),
            kind: StratumKind::UnipotentClass,
            model: format!("{{g ({sign}1 b; 0 {sign}1) g⁻¹ | b {cond} 0, g ∈ SL(2,ℝ)}}"),
        };
        (
            vec![
                Stratum {
                    name: point.to_string(),
                    kind: StratumKind::PointClass,
                    model: point.to_string(),
                },
                half(">"),
                half("<"),
            ],
            Some(format!("V(x²+y²−z²) ⊂ ℝ³, cone point {point}")),
        )
    };
    FiberDescriptor {
        group: Group::SL2R,
        trace_re: r,
        trace_im: Rational64::zero(),
        strata,
        variety,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CoverPiece {
    F1,
    F2,
    F3,
    F4,
}

impl fmt::Display for CoverPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CoverPiece::F1 => "F1",
            CoverPiece::F2 => "F2",
            CoverPiece::F3 => "F3",
            CoverPiece::F4 => "F4",
        };
        f.write_str(s)
    }
}

/// Pieces `Tr⁻¹((−∞,−3])`, `Tr⁻¹([−3,0])`, `Tr⁻¹([0,3])`, `Tr⁻¹([3,∞))`
/// containing the fiber over `r`.
pub fn cover_member_sl2r(r: Rational64) -> BTreeSet<CoverPiece> {
    let three = Rational64::from_integer(3);
    let zero = Rational64::zero();
    let mut out = BTreeSet::new();
    if r <= -three {
        out.insert(CoverPiece::F1);
    }
    if -three <= r && r <= zero {
        out.insert(CoverPiece::F2);
    }
    if zero <= r && r <= three {
        out.insert(CoverPiece::F3);
    }
    if r >= three {
        out.insert(CoverPiece::F4);
    }
    out
}
