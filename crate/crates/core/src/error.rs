use std::fmt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("residue {value} out of range for modulus {modulus}")]
    ResidueOutOfRange { value: usize, modulus: usize },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },
    #[error("{order} does not divide {modulus}")]
    NotADivisor { order: usize, modulus: usize },
    #[error("empty set has no {0}")]
    EmptySet(&'static str),
    #[error("integer {value} outside ambient range [0, {bound})")]
    OutsideAmbient { value: usize, bound: usize },
    #[error("ambient bound must be positive")]
    ZeroBound,
    #[error("integer set members must be strictly increasing")]
    NotIncreasing,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid layered set: {0}")]
    InvalidLayers(LayerInvariant),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

/// The [`LayeredSet`](crate::LayeredSet) invariant a rejected input breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LayerInvariant {
    TooFewLayers(usize),
    FirstCoordinateNotZero(usize),
    ZeroNotInFirstLayer,
    NotIncreasing { index: usize },
    EmptyLayer { index: usize },
    Gcd(usize),
    ModulusMismatch { index: usize },
}

impl fmt::Display for LayerInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooFewLayers(s) => write!(f, "need at least 2 layers, got {s}"),
            Self::FirstCoordinateNotZero(a) => write!(f, "first layer has a = {a}, expected 0"),
            Self::ZeroNotInFirstLayer => write!(f, "0 is not in the first layer"),
            Self::NotIncreasing { index } => {
                write!(f, "a-values not strictly increasing at layer {index}")
            }
            Self::EmptyLayer { index } => write!(f, "layer {index} is empty"),
            Self::Gcd(g) => write!(f, "gcd of nonzero a is {g}, expected 1"),
            Self::ModulusMismatch { index } => write!(f, "layer {index} has a different modulus"),
        }
    }
}
