use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// A vertex label is not below the ground-set size.
    LabelOutOfRange { label: usize, ground_size: usize },
    /// A constructor parameter violates its documented range.
    InvalidParameter(String),
    /// A vertex map is not a bijection of the ground set.
    NotABijection,
    /// The gluing automorphism does not preserve the base complex.
    NotAnAutomorphism,
    /// The gluing automorphism does not exchange the two gluing subcomplexes.
    SubcomplexMismatch,
    /// A label of the ground set carries no singleton face.
    GhostVertex(usize),
    /// Subset enumeration refused because `2^m` exceeds the configured ceiling.
    TooManyVertices { m: usize, ceiling: usize },
    /// Series operands carry different truncation degrees.
    DegreeMismatch { left: usize, right: usize },
    /// Inversion requested for a series whose constant term is not ±1.
    NonUnitConstant(i128),
    /// `p / (1+t)^m` is not a series with non-negative coefficients.
    NotDivisible { degree: usize, coefficient: i128 },
    /// Exact integer arithmetic exceeded the representable range.
    Overflow,
    /// The Koszul oracle only applies to flag complexes.
    NotFlag,
    /// An atom without a declared series reached a series computation.
    UndeclaredAtom(String),
    /// A loop space was requested on a space that is not simply connected.
    NotSimplyConnected(String),
    /// The term falls outside what the series or sphere machinery can evaluate.
    Unsupported(String),
    /// A summand handed to Hilton–Milnor is not the suspension of a connected space.
    NotASuspension(String),
    /// The Betti table has `b_0 != 1`, so the moment-angle complex is not connected.
    Disconnected,
    /// The sphere ceiling is below the top dimension of an exact factor.
    CeilingTooLow { needed: u32, got: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LabelOutOfRange { label, ground_size } => {
                write!(f, "vertex label {label} out of range for ground set of size {ground_size}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NotABijection => f.write_str("vertex map is not a bijection"),
            Error::NotAnAutomorphism => f.write_str("vertex map is not a simplicial automorphism"),
            Error::SubcomplexMismatch => {
                f.write_str("automorphism does not exchange the gluing subcomplexes")
            }
            Error::GhostVertex(v) => write!(f, "ghost vertex {v} present"),
            Error::TooManyVertices { m, ceiling } => {
                write!(f, "{m} vertices exceeds the enumeration ceiling of {ceiling}")
            }
            Error::DegreeMismatch { left, right } => {
                write!(f, "truncation degrees differ: {left} vs {right}")
            }
            Error::NonUnitConstant(c) => write!(f, "constant term {c} is not a unit"),
            Error::NotDivisible { degree, coefficient } => write!(
                f,
                "not divisible: quotient has coefficient {coefficient} in degree {degree}"
            ),
            Error::Overflow => f.write_str("integer overflow in exact arithmetic"),
            Error::NotFlag => f.write_str("complex is not flag"),
            Error::UndeclaredAtom(name) => write!(f, "atom {name} has no declared series"),
            Error::NotSimplyConnected(term) => write!(f, "loop of non-simply-connected {term}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::NotASuspension(term) => write!(f, "{term} is not a suspension"),
            Error::Disconnected => f.write_str("moment-angle complex is not connected"),
            Error::CeilingTooLow { needed, got } => {
                write!(f, "sphere ceiling {got} is below the required {needed}")
            }
        }
    }
}

impl core::error::Error for Error {}
