use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Validation,
    Numerical,
    Io,
}

#[derive(Debug)]
pub struct CliError {
    pub kind: Kind,
    pub message: String,
}

impl CliError {
    pub fn validation(field: &str, reason: impl fmt::Display) -> Self {
        Self {
            kind: Kind::Validation,
            message: format!("invalid --{field}: {reason}"),
        }
    }

    pub fn io(context: impl fmt::Display, err: std::io::Error) -> Self {
        Self {
            kind: Kind::Io,
            message: format!("{context}: {err}"),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.kind {
            Kind::Validation => 2,
            Kind::Numerical => 3,
            Kind::Io => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<rabi_dsc::Error> for CliError {
    fn from(err: rabi_dsc::Error) -> Self {
        let kind = if err.is_numerical() {
            Kind::Numerical
        } else {
            Kind::Validation
        };
        Self {
            kind,
            message: err.to_string(),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
