use std::fmt;

use inseparable::Error as MathError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse { pos: usize, msg: String },
    UnknownVariable { pos: usize, name: String },
    DivisionByZero { pos: usize },
    Schema(String),
    UnknownCommand(String),
    Io(String),
    /// A module error, with the command or generator it came from.
    Math { context: String, err: MathError },
}

impl CliError {
    pub fn math(context: impl Into<String>, err: MathError) -> Self {
        CliError::Math { context: context.into(), err }
    }

    /// 2 for input problems, 3 for violated mathematical preconditions.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math { err, .. } => match err {
                MathError::NotASubfield(_)
                | MathError::ExponentTooLarge(_)
                | MathError::NotADerivation
                | MathError::NotATower
                | MathError::NotInField
                | MathError::GeneratorsInsufficient
                | MathError::UnsupportedPrime(_) => 3,
                _ => 2,
            },
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { pos, msg } => write!(f, "parse error at {pos}: {msg}"),
            CliError::UnknownVariable { pos, name } => write!(f, "unknown variable `{name}` at {pos}"),
            CliError::DivisionByZero { pos } => write!(f, "division by zero at {pos}"),
            CliError::Schema(msg) => write!(f, "invalid spec: {msg}"),
            CliError::UnknownCommand(c) => write!(f, "unknown command `{c}`"),
            CliError::Io(msg) => write!(f, "{msg}"),
            CliError::Math { context, err } => write!(f, "{context}: {err}"),
        }
    }
}

impl std::error::Error for CliError {}

pub type CliResult<T> = Result<T, CliError>;
