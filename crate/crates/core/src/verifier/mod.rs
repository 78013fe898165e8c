//! Campaigns checking "spectral iff tiles" over Z_p^2, pair certificates,
//! and the search for a non-tiling spectral set in Z_3^5.

mod campaign;
pub mod kernel;
mod orbits;
mod pair;
mod report;
mod z35;

use std::ops::Range;

use serde::Serialize;

use crate::enumerate::{binomial, MAX_ENUM_CELLS};
use crate::error::{Error, Result};
use crate::field::PrimeModulus;

pub use campaign::{verify_fuglede, CampaignOutcome, RunMetadata};
pub use kernel::{PlaneKernel, Structure, Verdict};
pub use pair::{certify_pair, check_pair, check_pair_text, DifferenceCheck, PairCertificate};
pub use report::{SizeTally, VerificationReport, Violation, ViolationKind};
pub use z35::{search_z35, search_z35_with, Z35Search};

/// Identifier of the sampling generator, recorded in sampled reports.
pub const RNG_ALGORITHM: &str = "chacha8-seed_from_u64-stream_per_sample";

/// Largest family a size-restricted campaign will enumerate.
pub const MAX_CAMPAIGN_SETS: u64 = 100_000_000;

/// Largest prime for which the whole power set is enumerated.
pub const MAX_EXHAUSTIVE_PRIME: u32 = 5;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CampaignMode {
    Exhaustive,
    Size { k: u32 },
    Sampled { n: u64, seed: u64 },
}

impl std::str::FromStr for CampaignMode {
    type Err = Error;

    /// `exhaustive`, `size:<k>` or `sample:<n>`; a sample seed defaults to 0.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidConfig(format!("unknown mode {s:?}"));
        if s == "exhaustive" {
            return Ok(CampaignMode::Exhaustive);
        }
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        let n: u64 = arg.trim().parse().map_err(|_| bad())?;
        match kind {
            "size" => Ok(CampaignMode::Size { k: u32::try_from(n).map_err(|_| bad())? }),
            "sample" => Ok(CampaignMode::Sampled { n, seed: 0 }),
            _ => Err(bad()),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CampaignConfig {
    pub p: PrimeModulus,
    pub mode: CampaignMode,
    pub jobs: usize,
    /// Search every size for spectra instead of skipping sizes other than
    /// `1`, `p`, `p^2`, and flag spectral sets of those sizes.
    pub audit: bool,
}

impl CampaignConfig {
    pub fn new(p: PrimeModulus, mode: CampaignMode) -> Self {
        CampaignConfig { p, mode, jobs: 1, audit: false }
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn with_audit(mut self, audit: bool) -> Self {
        self.audit = audit;
        self
    }

    pub fn cells(&self) -> u32 {
        self.p.get() * self.p.get()
    }

    pub fn validate(&self) -> Result<()> {
        let p = self.p.get();
        if self.jobs == 0 {
            return Err(Error::InvalidConfig("jobs must be at least 1".into()));
        }
        if p > kernel::MAX_KERNEL_PRIME {
            return Err(Error::InvalidConfig(format!("campaigns need p <= {}, got {p}", kernel::MAX_KERNEL_PRIME)));
        }
        let cells = self.cells();
        debug_assert!(u64::from(cells) <= MAX_ENUM_CELLS);
        match self.mode {
            CampaignMode::Exhaustive if p > MAX_EXHAUSTIVE_PRIME => Err(Error::InvalidConfig(format!(
                "exhaustive campaigns need p <= {MAX_EXHAUSTIVE_PRIME}; restrict the size for p = {p}"
            ))),
            CampaignMode::Size { k } if k == 0 || k > cells => {
                Err(Error::InvalidConfig(format!("size {k} outside 1..={cells}")))
            }
            CampaignMode::Size { k } if binomial(u64::from(cells), u64::from(k)) > MAX_CAMPAIGN_SETS => {
                Err(Error::InvalidConfig(format!(
                    "C({cells},{k}) sets exceed the campaign limit of {MAX_CAMPAIGN_SETS}"
                )))
            }
            CampaignMode::Sampled { n: 0, .. } => Err(Error::InvalidConfig("sample count must be positive".into())),
            _ => Ok(()),
        }
    }

    /// Number of work items: sets for enumerations, draws for samples.
    pub fn total_work(&self) -> u64 {
        let cells = u64::from(self.cells());
        match self.mode {
            CampaignMode::Exhaustive => (1u64 << cells) - 1,
            CampaignMode::Size { k } => binomial(cells, u64::from(k)),
            CampaignMode::Sampled { n, .. } => n,
        }
    }
}

/// Splits `0..total` into `jobs` contiguous ranges whose lengths differ by
/// at most one, longer ranges first.
pub fn partition_work(total: u64, jobs: usize) -> Vec<Range<u64>> {
    let jobs = jobs.max(1) as u64;
    let (base, extra) = (total / jobs, total % jobs);
    let mut start = 0;
    (0..jobs)
        .map(|i| {
            let len = base + u64::from(i < extra);
            let r = start..start + len;
            start += len;
            r
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_examples() {
        assert_eq!(partition_work(10, 3), vec![0..4, 4..7, 7..10]);
        let r = partition_work(5, 8);
        assert_eq!(r.iter().filter(|r| r.end - r.start == 1).count(), 5);
        assert_eq!(r.iter().filter(|r| r.is_empty()).count(), 3);
        let r = partition_work(85_900_584, 16);
        assert_eq!(r.len(), 16);
        assert_eq!(r.iter().map(|r| r.end - r.start).sum::<u64>(), 85_900_584);
        assert_eq!(r.last().unwrap().end, 85_900_584);
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("exhaustive".parse::<CampaignMode>().unwrap(), CampaignMode::Exhaustive);
        assert_eq!("size:7".parse::<CampaignMode>().unwrap(), CampaignMode::Size { k: 7 });
        assert_eq!("sample:10".parse::<CampaignMode>().unwrap(), CampaignMode::Sampled { n: 10, seed: 0 });
        assert!("size:".parse::<CampaignMode>().is_err());
        assert!("all".parse::<CampaignMode>().is_err());
    }

    #[test]
    fn config_limits() {
        let p = |q| PrimeModulus::new(q).unwrap();
        assert!(CampaignConfig::new(p(5), CampaignMode::Exhaustive).validate().is_ok());
        assert!(CampaignConfig::new(p(7), CampaignMode::Exhaustive).validate().is_err());
        assert!(CampaignConfig::new(p(7), CampaignMode::Size { k: 7 }).validate().is_ok());
        assert!(CampaignConfig::new(p(7), CampaignMode::Size { k: 20 }).validate().is_err());
        assert!(CampaignConfig::new(p(11), CampaignMode::Size { k: 11 }).validate().is_err());
        assert!(CampaignConfig::new(p(3), CampaignMode::Size { k: 0 }).validate().is_err());
        assert!(CampaignConfig::new(p(3), CampaignMode::Exhaustive).with_jobs(0).validate().is_err());
    }
}
