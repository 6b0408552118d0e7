//! Scenario-driven front end: load a scenario file, build the instance it
//! describes and run the verification battery for its kind.

pub mod config;
pub mod instance;
pub mod invert;
pub mod report;
pub mod suite;
pub mod table;

pub use config::{load_scenario, parse_scenario, Backend, Kind, ScenarioConfig};
pub use report::VerificationReport;
pub use suite::{fuzz, run_suite, SuiteOptions};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] quadstruct::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit code: every error is a configuration or construction problem.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Runs `$body` with `$f` bound to the scenario's field.
#[macro_export]
macro_rules! with_field {
    ($backend:expr, $f:ident => $body:expr) => {
        match $backend {
            $crate::config::Backend::Rational => {
                let $f = quadstruct::Rationals;
                $body
            }
            $crate::config::Backend::Prime(p) => {
                let $f = quadstruct::PrimeField::new(p)?;
                $body
            }
        }
    };
}
