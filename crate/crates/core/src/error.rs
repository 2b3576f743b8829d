use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    InvalidPrime(u32),
    Config(&'static str),
    DivisionByZero,
    /// The named field is not contained in the other one.
    NotASubfield(&'static str),
    NotInField,
    GeneratorsInsufficient,
    NotATower,
    PresentationMismatch,
    NotADerivation,
    AmbientMismatch,
    UnsupportedPrime(u32),
    ExponentTooLarge(u32),
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPrime(p) => write!(f, "{p} is not a prime"),
            Error::Config(msg) => write!(f, "configuration error: {msg}"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::NotASubfield(what) => write!(f, "not a subfield: {what}"),
            Error::NotInField => f.write_str("element does not lie in the field"),
            Error::GeneratorsInsufficient => f.write_str("generators do not generate the field"),
            Error::NotATower => f.write_str("fields do not form a tower K <= E <= F"),
            Error::PresentationMismatch => f.write_str("derivations belong to different presentations"),
            Error::NotADerivation => f.write_str("values violate the Jacobian condition of a derivation"),
            Error::AmbientMismatch => f.write_str("fields live in different ambient fields"),
            Error::UnsupportedPrime(p) => write!(f, "prime {p} is not supported (only 2, 3, 5)"),
            Error::ExponentTooLarge(e) => write!(f, "extension has exponent {e}, expected 1"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
        }
    }
}

impl core::error::Error for Error {}
