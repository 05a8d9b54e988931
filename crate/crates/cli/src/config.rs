use std::path::Path;

use luspace_core::fiberlab::{DEFAULT_RESTARTS, DEFAULT_SAMPLES, FIBER_TOL};
use luspace_core::linalg::RANK_TOL;
use luspace_core::polytope::TIGHT_TOL;
use luspace_core::qstate::MAX_QUBITS;
use luspace_core::{Error, Result};
use serde::Deserialize;

/// Defaults read from `--config`; command-line flags take precedence.
#[derive(Clone, Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub tight_tol: f64,
    pub rank_tol: f64,
    pub fiber_tol: f64,
    pub samples: usize,
    pub seed: u64,
    pub max_restarts: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            tight_tol: TIGHT_TOL,
            rank_tol: RANK_TOL,
            fiber_tol: FIBER_TOL,
            samples: DEFAULT_SAMPLES,
            seed: 1,
            max_restarts: DEFAULT_RESTARTS,
        }
    }
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let cfg: Config = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        for (name, v) in [
            ("tight_tol", cfg.tight_tol),
            ("rank_tol", cfg.rank_tol),
            ("fiber_tol", cfg.fiber_tol),
        ] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::InvalidInput(format!(
                    "config: {name} must be finite and non-negative"
                )));
            }
        }
        Ok(cfg)
    }

    pub fn max_qubits(&self) -> usize {
        MAX_QUBITS
    }
}
