//! Size guards for the exponential parts of the computation. Exceeding one is
//! reported as [`Error::LimitExceeded`](crate::Error::LimitExceeded).

use crate::error::{Error, Result};

/// Environment variable that overrides [`Limits::max_lattice`].
pub const MAX_LATTICE_ENV: &str = "CHROMAKAC_MAX_LATTICE";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count accepted by lattice enumeration and
    /// deletion-contraction.
    pub max_vertices: usize,
    /// Largest bond lattice that will be enumerated.
    pub max_lattice: usize,
    /// Largest number of colours the brute-force colouring counter will try.
    pub max_colors: u64,
    /// Largest vertex count for brute-force colouring.
    pub max_coloring_vertices: usize,
    /// Largest edge count for brute-force orientation enumeration.
    pub max_orientation_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 16,
            max_lattice: 2_000_000,
            max_colors: 8,
            max_coloring_vertices: 10,
            max_orientation_edges: 20,
        }
    }
}

impl Limits {
    /// Defaults, with `max_lattice` taken from the environment when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_LATTICE_ENV) {
            limits.max_lattice = raw
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("{MAX_LATTICE_ENV}={raw:?} is not a count")))?;
        }
        Ok(limits)
    }

    pub(crate) fn check(what: &'static str, value: u128, limit: u128) -> Result<()> {
        if value > limit {
            return Err(Error::LimitExceeded { what, limit, reached: value });
        }
        Ok(())
    }
}
