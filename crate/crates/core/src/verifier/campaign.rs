use std::collections::BTreeMap;
use std::ops::Range;
use std::time::Instant;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::kernel::{PlaneKernel, Verdict};
use super::orbits::orbit_stats;
use super::report::{SizeTally, VerificationReport, Violation, ViolationKind, MAX_LISTED_VIOLATIONS};
use super::{partition_work, CampaignConfig, CampaignMode, RNG_ALGORITHM};
use crate::enumerate::{SizeFilter, SubsetMasks};
use crate::error::Result;
use crate::setfile::format_set;
use crate::space::{Ambient, PointSet};

/// Run facts that vary between runs and so stay out of the report.
#[derive(Clone, Debug, Serialize)]
pub struct RunMetadata {
    pub jobs: usize,
    pub ranges: Vec<(u64, u64)>,
    pub wall_clock_secs: f64,
}

#[derive(Clone, Debug)]
pub struct CampaignOutcome {
    pub report: VerificationReport,
    pub metadata: RunMetadata,
}

#[derive(Default)]
struct Partial {
    sizes: BTreeMap<u32, SizeTally>,
    counts: BTreeMap<ViolationKind, u64>,
    violations: Vec<(ViolationKind, u64, Verdict)>,
    spectral: Vec<u64>,
}

impl Partial {
    fn flag(&mut self, kind: ViolationKind, mask: u64, v: &Verdict) {
        *self.counts.entry(kind).or_default() += 1;
        if self.violations.len() < MAX_LISTED_VIOLATIONS {
            self.violations.push((kind, mask, *v));
        }
    }
}

struct Worker<'a> {
    kernel: &'a PlaneKernel,
    config: &'a CampaignConfig,
    keep_spectral: bool,
    out: Partial,
}

impl Worker<'_> {
    fn examine(&mut self, mask: u64) {
        let v = self.kernel.classify(mask, !self.config.audit);
        self.out.sizes.entry(v.size).or_default().record(&v);
        if v.spectral && self.keep_spectral {
            self.out.spectral.push(mask);
        }
        if v.spectral != v.tiles {
            self.out.flag(ViolationKind::SpectralTiling, mask, &v);
        }
        if v.tiles != v.structure.is_tile_shape() {
            self.out.flag(ViolationKind::Structure, mask, &v);
        }
        if self.config.audit && v.spectral {
            let p = self.kernel.p();
            if v.size != 1 && !v.size.is_multiple_of(p) {
                self.out.flag(ViolationKind::SizeNotMultiple, mask, &v);
            }
            if v.size > p && v.size != self.kernel.cells() {
                self.out.flag(ViolationKind::DensityGap, mask, &v);
            }
        }
    }

    fn run(mut self, range: Range<u64>) -> Result<Partial> {
        let cells = u64::from(self.kernel.cells());
        match self.config.mode {
            CampaignMode::Exhaustive => {
                // rank r is the mask r + 1, skipping the empty set
                for mask in SubsetMasks::new(cells, SizeFilter::All, range.start + 1..range.end + 1)? {
                    self.examine(mask);
                }
            }
            CampaignMode::Size { k } => {
                for mask in SubsetMasks::new(cells, SizeFilter::Exactly(k), range)? {
                    self.examine(mask);
                }
            }
            CampaignMode::Sampled { seed, .. } => {
                for i in range {
                    let mask = sample(self.kernel, self.config.audit, seed, i);
                    self.examine(mask);
                }
            }
        }
        Ok(self.out)
    }
}

/// Draw `index` of a sampled campaign: a uniform nonempty set, or in audit
/// mode a uniform set among those of sizes neither 1 nor a multiple of `p`.
fn sample(kernel: &PlaneKernel, audit: bool, seed: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    loop {
        let mask = rng.next_u64() & kernel.full_mask();
        let k = mask.count_ones();
        let admissible = if audit { k > 1 && !k.is_multiple_of(kernel.p()) } else { k > 0 };
        if admissible {
            return mask;
        }
    }
}

pub fn verify_fuglede(config: &CampaignConfig) -> Result<CampaignOutcome> {
    config.validate()?;
    let started = Instant::now();
    let ambient = Ambient::new(config.p, 2)?;
    let kernel = PlaneKernel::new(&ambient)?;
    let sampled = matches!(config.mode, CampaignMode::Sampled { .. });
    let ranges = partition_work(config.total_work(), config.jobs);
    let partials: Vec<Result<Partial>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|r| {
                let worker = Worker { kernel: &kernel, config, keep_spectral: !sampled, out: Partial::default() };
                let r = r.clone();
                scope.spawn(move || worker.run(r))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("campaign worker panicked")).collect()
    });

    // partials arrive in range order, so concatenation keeps global order
    let mut sizes: BTreeMap<u32, SizeTally> = BTreeMap::new();
    let mut violation_counts: BTreeMap<ViolationKind, u64> = BTreeMap::new();
    let mut listed = Vec::new();
    let mut spectral = Vec::new();
    for part in partials {
        let part = part?;
        for (k, t) in &part.sizes {
            sizes.entry(*k).or_default().merge(t);
        }
        for (kind, n) in part.counts {
            *violation_counts.entry(kind).or_default() += n;
        }
        listed.extend(part.violations);
        spectral.extend(part.spectral);
    }
    listed.truncate(MAX_LISTED_VIOLATIONS);
    let violations = listed
        .into_iter()
        .map(|(kind, mask, v)| Violation {
            kind,
            size: v.size,
            spectral: v.spectral,
            tiles: v.tiles,
            structure: v.structure,
            set: format_set(&PointSet::from_mask(ambient, mask).expect("mask within the plane")),
        })
        .collect();
    let mut totals = SizeTally::default();
    for t in sizes.values() {
        totals.merge(t);
    }
    let orbits = (!sampled).then(|| {
        spectral.sort_unstable();
        orbit_stats(&ambient, &spectral)
    });
    let report = VerificationReport {
        p: config.p.get(),
        mode: config.mode,
        audit: config.audit,
        rng: sampled.then_some(RNG_ALGORITHM),
        examined: totals.examined,
        sizes,
        totals,
        violation_counts,
        violations,
        orbits,
    };
    let metadata = RunMetadata {
        jobs: config.jobs,
        ranges: ranges.iter().map(|r| (r.start, r.end)).collect(),
        wall_clock_secs: started.elapsed().as_secs_f64(),
    };
    Ok(CampaignOutcome { report, metadata })
}
