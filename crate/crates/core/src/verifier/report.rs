use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::kernel::{Structure, Verdict};
use super::CampaignMode;

/// Violations kept in a report; the counts cover all of them.
pub const MAX_LISTED_VIOLATIONS: usize = 1000;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SizeTally {
    pub examined: u64,
    pub spectral: u64,
    pub tiling: u64,
    /// `p`-point sets missing a direction.
    pub graph: u64,
    pub points: u64,
    pub full: u64,
    /// Spectral, tiling and structural verdicts all coincide.
    pub agree: u64,
    /// Spectral verdict taken from the size alone.
    pub pruned: u64,
}

impl SizeTally {
    pub(crate) fn record(&mut self, v: &Verdict) {
        self.examined += 1;
        self.spectral += u64::from(v.spectral);
        self.tiling += u64::from(v.tiles);
        match v.structure {
            Structure::Point => self.points += 1,
            Structure::Graph => self.graph += 1,
            Structure::Full => self.full += 1,
            Structure::None => {}
        }
        self.agree += u64::from(v.spectral == v.tiles && v.tiles == v.structure.is_tile_shape());
        self.pruned += u64::from(v.pruned);
    }

    pub(crate) fn merge(&mut self, o: &SizeTally) {
        self.examined += o.examined;
        self.spectral += o.spectral;
        self.tiling += o.tiling;
        self.graph += o.graph;
        self.points += o.points;
        self.full += o.full;
        self.agree += o.agree;
        self.pruned += o.pruned;
    }

    /// Sets that are a point, a graph, or the whole plane.
    pub fn structured(&self) -> u64 {
        self.points + self.graph + self.full
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// Spectral and tiling verdicts differ.
    SpectralTiling,
    /// Tiling verdict differs from the point/graph/full-plane shape test.
    Structure,
    /// Spectral with size neither 1 nor a multiple of `p` (audit only).
    SizeNotMultiple,
    /// Spectral with `p < |E| < p^2` (audit only).
    DensityGap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub size: u32,
    pub spectral: bool,
    pub tiles: bool,
    pub structure: Structure,
    /// The offending set in set-file syntax.
    pub set: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitStats {
    /// Affine orbits of spectral sets, by size.
    pub spectral_orbits: BTreeMap<u32, u64>,
    /// Images of spectral sets under affine generators that were not
    /// themselves found spectral.
    pub invariance_failures: u64,
}

/// Deterministic campaign outcome: identical across runs and job counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub p: u32,
    pub mode: CampaignMode,
    pub audit: bool,
    pub rng: Option<&'static str>,
    pub examined: u64,
    pub sizes: BTreeMap<u32, SizeTally>,
    pub totals: SizeTally,
    pub violation_counts: BTreeMap<ViolationKind, u64>,
    pub violations: Vec<Violation>,
    /// `None` for sampled campaigns, whose sets are not closed under the
    /// affine group.
    pub orbits: Option<OrbitStats>,
}

impl VerificationReport {
    pub fn violation_count(&self) -> u64 {
        self.violation_counts.values().sum()
    }

    pub fn is_clean(&self) -> bool {
        self.violation_count() == 0 && self.orbits.as_ref().is_none_or(|o| o.invariance_failures == 0)
    }

    /// `spectral = tiling = points + graphs + full plane`, overall and per
    /// size.
    pub fn cross_equalities_hold(&self) -> bool {
        let eq = |t: &SizeTally| t.spectral == t.tiling && t.tiling == t.structured();
        eq(&self.totals) && self.sizes.values().all(eq)
    }

    /// Canonical JSON: object keys sorted, two-space indentation.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
        out.push('\n');
        out
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        let mode = match self.mode {
            CampaignMode::Exhaustive => "exhaustive".to_string(),
            CampaignMode::Size { k } => format!("size {k}"),
            CampaignMode::Sampled { n, seed } => format!("{n} samples, seed {seed}"),
        };
        let _ = writeln!(s, "p = {}, {mode}{}", self.p, if self.audit { ", audit" } else { "" });
        let _ = writeln!(s, "{:>5} {:>10} {:>9} {:>9} {:>9} {:>10} {:>9}", "size", "examined", "spectral", "tiling", "graph", "agree", "pruned");
        for (k, t) in &self.sizes {
            let _ = writeln!(
                s,
                "{k:>5} {:>10} {:>9} {:>9} {:>9} {:>10} {:>9}",
                t.examined, t.spectral, t.tiling, t.graph, t.agree, t.pruned
            );
        }
        let t = &self.totals;
        let _ = writeln!(
            s,
            "{:>5} {:>10} {:>9} {:>9} {:>9} {:>10} {:>9}",
            "all", t.examined, t.spectral, t.tiling, t.graph, t.agree, t.pruned
        );
        if let Some(o) = &self.orbits {
            let orbits: Vec<String> = o.spectral_orbits.iter().map(|(k, n)| format!("{k}:{n}")).collect();
            let _ = writeln!(s, "spectral orbits by size: {}", orbits.join(" "));
            if o.invariance_failures > 0 {
                let _ = writeln!(s, "affine invariance failures: {}", o.invariance_failures);
            }
        }
        let _ = writeln!(s, "violations: {}", self.violation_count());
        for v in &self.violations {
            let _ = writeln!(s, "  {:?} (size {}):", v.kind, v.size);
            for line in v.set.lines() {
                let _ = writeln!(s, "    {line}");
            }
        }
        s
    }
}
