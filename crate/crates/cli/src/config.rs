use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Everything a command needs besides its own inputs. Nothing is read from
/// the environment.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub format: Format,
    pub output: Option<PathBuf>,
    pub seed: u64,
    pub tol: f64,
    pub samples: usize,
}

impl RunConfig {
    pub fn new(
        format: Format,
        output: Option<PathBuf>,
        seed: u64,
        tol: f64,
        samples: usize,
    ) -> Result<Self, CliError> {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(CliError::Usage(format!(
                "--tol must be positive, got {tol}"
            )));
        }
        if samples == 0 {
            return Err(CliError::Usage("--samples must be at least 1".into()));
        }
        Ok(RunConfig {
            format,
            output,
            seed,
            tol,
            samples,
        })
    }

    pub fn json(&self) -> bool {
        self.format == Format::Json
    }
}

/// Input and usage problems; all of them exit with status 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn input(path: &Path, e: impl std::fmt::Display) -> Self {
        CliError::Input {
            path: path.to_path_buf(),
            message: e.to_string(),
        }
    }
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

/// Rendered output plus whether every checked property held.
pub struct Outcome {
    pub body: String,
    pub passed: bool,
}

impl Outcome {
    pub fn new(body: String, passed: bool) -> Self {
        Outcome { body, passed }
    }

    pub fn write(self, output: Option<&Path>) -> Result<ExitCode, CliError> {
        let mut body = self.body;
        if !body.ends_with('\n') {
            body.push('\n');
        }
        match output {
            Some(path) => std::fs::write(path, body).map_err(|source| CliError::Write {
                path: path.to_path_buf(),
                source,
            })?,
            None => print!("{body}"),
        }
        Ok(ExitCode::from(if self.passed { 0 } else { 1 }))
    }
}
