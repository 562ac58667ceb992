use std::io::Write;

use serde_json::Value;
use thiserror::Error;

use seifert11::dunwoody::DunwoodyError;
use seifert11::foxcalc::FoxError;
use seifert11::knots11::{KnotError, LensError};
use seifert11::presentations::{GroupTableError, HomCountError, PresentationError};
use seifert11::ConstraintViolation;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or input files: exit 2.
    #[error("{0}")]
    Usage(String),
    /// Valid input on which a computation or claim fails: exit 1.
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl From<ConstraintViolation> for CliError {
    fn from(e: ConstraintViolation) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<PresentationError> for CliError {
    fn from(e: PresentationError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<GroupTableError> for CliError {
    fn from(e: GroupTableError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<HomCountError> for CliError {
    fn from(e: HomCountError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<LensError> for CliError {
    fn from(e: LensError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<KnotError> for CliError {
    fn from(e: KnotError) -> Self {
        match e {
            KnotError::Degenerate | KnotError::Overflow | KnotError::Lens(_) | KnotError::Constraint(_) => {
                CliError::Usage(e.to_string())
            }
            KnotError::Unsupported(_) | KnotError::GcdViolation { .. } | KnotError::AmbiguousTerminal(_) => {
                CliError::Domain(e.to_string())
            }
        }
    }
}

impl From<DunwoodyError> for CliError {
    fn from(e: DunwoodyError) -> Self {
        match e {
            DunwoodyError::InconsistentPairing(_) | DunwoodyError::CriterionFailed(_) => {
                CliError::Domain(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FoxError> for CliError {
    fn from(e: FoxError) -> Self {
        match e {
            FoxError::ZeroPolynomial => CliError::Domain(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// What a subcommand produced, in both output formats.
#[derive(Debug)]
pub struct Outcome {
    pub json: Value,
    pub text: String,
    /// `false` when a check ran to completion and failed.
    pub ok: bool,
}

impl Outcome {
    pub fn ok(json: Value, text: String) -> Self {
        Outcome { json, text, ok: true }
    }

    pub fn print(&self, json: bool) {
        // a closed pipe (`| head`) is not an error worth reporting
        let mut out = std::io::stdout().lock();
        let _ = if json {
            writeln!(out, "{}", serde_json::to_string_pretty(&self.json).expect("values serialize"))
        } else if self.text.is_empty() {
            Ok(())
        } else {
            writeln!(out, "{}", self.text.trim_end())
        };
    }
}
