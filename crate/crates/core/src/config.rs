use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 24;
pub const DEFAULT_SAMPLE_COUNT: u64 = 100_000;
pub const MIN_ENUMERATION_CAP: u128 = 1 << 10;

/// Limits and seeding shared by every enumeration in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub enumeration_cap: u128,
    pub sample_count: u64,
    pub rng_seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            sample_count: DEFAULT_SAMPLE_COUNT,
            rng_seed: 0,
        }
    }
}

impl RunConfig {
    pub fn new(enumeration_cap: u128, sample_count: u64, rng_seed: u64) -> Result<Self> {
        if enumeration_cap < MIN_ENUMERATION_CAP {
            return Err(Error::InvalidRange(format!(
                "enumeration cap {enumeration_cap} is below {MIN_ENUMERATION_CAP}"
            )));
        }
        if sample_count == 0 {
            return Err(Error::InvalidRange("sample count must be positive".into()));
        }
        Ok(RunConfig {
            enumeration_cap,
            sample_count,
            rng_seed,
        })
    }

    pub fn check_budget(&self, needed: u128) -> Result<()> {
        if needed > self.enumeration_cap {
            Err(Error::BudgetExceeded {
                needed,
                cap: self.enumeration_cap,
            })
        } else {
            Ok(())
        }
    }

    /// Budget check on an optional size where `None` means overflow.
    pub fn check_budget_opt(&self, needed: Option<u128>) -> Result<()> {
        self.check_budget(needed.unwrap_or(u128::MAX))
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.rng_seed)
    }
}
