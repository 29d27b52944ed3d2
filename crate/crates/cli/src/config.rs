use hodge_cones::linalg::DEFAULT_TOLERANCE;

use crate::error::CliError;
use crate::output::Format;

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Parameters shared by the subcommands.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub n: u32,
    pub e: usize,
    pub k: Option<u32>,
    pub seed: u64,
    pub samples: usize,
    pub format: Format,
    /// Only steers the floating-point pre-pass of large PSD tests.
    pub tolerance: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { n: 1, e: 2, k: None, seed: DEFAULT_SEED, samples: 1000, format: Format::Json, tolerance: DEFAULT_TOLERANCE }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.n < 1 {
            return Err(CliError::usage("n must be at least 1"));
        }
        if self.e < 2 {
            return Err(CliError::usage("e must be at least 2"));
        }
        if let Some(k) = self.k {
            let top = self.n * self.e as u32;
            if k > top {
                return Err(CliError::usage(format!("k = {k} exceeds n·e = {top}")));
            }
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(CliError::usage("tolerance must be a positive number"));
        }
        Ok(())
    }

    pub fn top_degree(&self) -> u32 {
        self.n * self.e as u32
    }
}

/// Rayon worker count from `HODGE_CONES_THREADS`, if set.
pub fn thread_cap(value: Option<&str>) -> Result<Option<usize>, CliError> {
    match value.map(str::trim) {
        None | Some("") => Ok(None),
        Some(s) => match s.parse::<usize>() {
            Ok(0) | Err(_) => Err(CliError::usage(format!("HODGE_CONES_THREADS must be a positive integer, got {s:?}"))),
            Ok(t) => Ok(Some(t)),
        },
    }
}
