use std::fmt;

/// A command failure carrying its process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

pub const MISMATCH: u8 = 1;
pub const USAGE: u8 = 2;
pub const CAPACITY: u8 = 3;

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: USAGE,
            message: message.into(),
        }
    }

    pub fn mismatch(message: impl Into<String>) -> Self {
        Failure {
            code: MISMATCH,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<impartial::Error> for Failure {
    fn from(e: impartial::Error) -> Self {
        use impartial::Error as E;
        let code = match e {
            E::Capacity { .. } | E::Overflow(_) => CAPACITY,
            E::Inconsistent(_) => MISMATCH,
            E::Cycle | E::Precondition(_) | E::InvalidArgument(_) => USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::usage(format!("malformed JSON: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::usage(format!("cannot write CSV: {e}"))
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

pub type CliResult<T> = Result<T, Failure>;
