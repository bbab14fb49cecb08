use crate::error::{Error, Result};

/// Truncation control for infinite series and lattice sums.
#[derive(Debug, Clone, Copy)]
pub struct SeriesControl {
    /// Relative truncation tolerance (> 0).
    pub rel_tol: f64,
    /// Hard cap on the number of terms/shells (>= 1).
    pub max_terms: usize,
}

impl SeriesControl {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0) {
            return Err(Error::Domain("rel_tol must be positive".into()));
        }
        if max_terms == 0 {
            return Err(Error::Domain("max_terms must be >= 1".into()));
        }
        Ok(SeriesControl { rel_tol, max_terms })
    }
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            rel_tol: 1e-14,
            max_terms: 100_000,
        }
    }
}
