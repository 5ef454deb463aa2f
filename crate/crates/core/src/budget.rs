use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Limits applied to a single Gröbner/saturation computation.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
    /// Maximum number of ring variables a computation may use.
    pub max_variables: Option<usize>,
    /// S-pairs of (sugar) degree above this are skipped and the result is
    /// flagged as truncated.
    pub max_degree: Option<u32>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub fn with_max_variables(mut self, n: usize) -> Self {
        self.max_variables = Some(n);
        self
    }

    pub fn with_max_degree(mut self, d: u32) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn check_time(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::resource("time limit exceeded")),
            _ => Ok(()),
        }
    }

    pub fn check_variables(&self, n: usize) -> Result<()> {
        match self.max_variables {
            Some(max) if n > max => Err(Error::resource(format!(
                "{n} variables exceeds the limit of {max}"
            ))),
            _ => Ok(()),
        }
    }
}
