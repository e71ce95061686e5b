//! Failure kinds of a CLI run and their exit codes.

use exact_rings::RingError;
use serde_json::json;
use spectral_analysis::SpectralError;
use xij_operators::XijError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_GOLDEN_MISMATCH: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_SIZE_GUARD: i32 = 4;
pub const EXIT_POLE: i32 = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    /// Malformed command line or l-expression.
    Parse(String),
    /// Well-formed but unusable input: bad n, unknown family, bad modulus,
    /// unreadable golden file.
    Input(String),
    /// A symbolic determinant above the size guard.
    SizeGuard(String),
    /// A denominator vanishes under the requested specialization.
    Pole(String),
    /// The stored golden file disagrees with the output.
    GoldenMismatch(String),
    /// The command ran but a verified property does not hold.
    CheckFailed(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Input(_) => "input",
            CliError::SizeGuard(_) => "size-guard",
            CliError::Pole(_) => "pole",
            CliError::GoldenMismatch(_) => "golden-mismatch",
            CliError::CheckFailed(_) => "check-failed",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Input(_) => EXIT_INPUT,
            CliError::SizeGuard(_) => EXIT_SIZE_GUARD,
            CliError::Pole(_) => EXIT_POLE,
            CliError::GoldenMismatch(_) => EXIT_GOLDEN_MISMATCH,
            CliError::CheckFailed(_) => EXIT_CHECK_FAILED,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m)
            | CliError::Input(m)
            | CliError::SizeGuard(m)
            | CliError::Pole(m)
            | CliError::GoldenMismatch(m)
            | CliError::CheckFailed(m) => m,
        }
    }

    /// Single-line JSON record written to stderr.
    pub fn to_line(&self) -> String {
        let one_line = self.message().split_whitespace().collect::<Vec<_>>().join(" ");
        json!({ "error": { "kind": self.kind(), "exit_code": self.exit_code(), "message": one_line } }).to_string()
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::Parse { .. } => CliError::Parse(e.to_string()),
            RingError::DivisionByZero | RingError::Pole { .. } | RingError::NotInvertible { .. } => {
                CliError::Pole(e.to_string())
            }
            RingError::NotInQr | RingError::InvalidModulus(_) => CliError::Input(e.to_string()),
        }
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::Ring(r) => r.into(),
            SpectralError::SizeGuard { .. } => CliError::SizeGuard(e.to_string()),
            SpectralError::Xij(x) => x.into(),
            SpectralError::Unsupported(_) | SpectralError::UnknownCase(_) | SpectralError::OutOfRange { .. } => {
                CliError::Input(e.to_string())
            }
        }
    }
}

impl From<XijError> for CliError {
    fn from(e: XijError) -> Self {
        match e {
            XijError::Structure { .. } => CliError::CheckFailed(e.to_string()),
            XijError::OutOfRange { .. } => CliError::Input(e.to_string()),
        }
    }
}
