use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fourier::{convolve_indicator, hyperplane_profile};
use crate::setfile::{format_set, parse_pair, read_pair};
use crate::space::PointSet;
use crate::spectra::is_spectral_pair;
use crate::tiling::{is_tiling_pair, tiles, Obstruction};

/// Profile of `E` along one difference of the partner.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferenceCheck {
    pub difference: String,
    pub profile: Vec<u64>,
    pub zero: bool,
}

/// Verdicts on a pair `(E, A)` together with the data they rest on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCertificate {
    pub set: PointSet,
    pub partner: PointSet,
    pub spectral_pair: bool,
    pub tiling_pair: bool,
    /// Whether `E` tiles with any partner; decided in the plane and on the
    /// line, and whenever `|E|` does not divide the ambient size.
    pub set_tiles: Option<bool>,
    pub obstruction: Option<Obstruction>,
    /// One entry per unordered pair of partner elements, `a_j - a_i` with
    /// `i < j` in cell order.
    pub differences: Vec<DifferenceCheck>,
    /// FNV-1a of the table `x ↦ |E ∩ (x - A)|`, as little-endian `u64`s.
    pub convolution_hash: u64,
}

#[derive(Serialize)]
struct CertificateView<'a> {
    set: String,
    partner: String,
    p: u32,
    d: usize,
    size: u64,
    partner_size: u64,
    spectral_pair: bool,
    tiling_pair: bool,
    set_tiles: Option<bool>,
    obstruction: Option<&'a Obstruction>,
    obstruction_text: Option<String>,
    differences_checked: usize,
    differences: &'a [DifferenceCheck],
    convolution_hash: String,
}

fn fnv1a(values: &[u64]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in values.iter().flat_map(|v| v.to_le_bytes()) {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub fn certify_pair(set: &PointSet, partner: &PointSet) -> Result<PairCertificate> {
    set.ambient().check_same(partner.ambient())?;
    if set.is_empty() || partner.is_empty() {
        return Err(Error::EmptySet);
    }
    let a = *set.ambient();
    let elems: Vec<_> = partner.vectors().collect();
    let mut differences = Vec::new();
    for (i, u) in elems.iter().enumerate() {
        for v in &elems[i + 1..] {
            let m = a.sub(v, u);
            let prof = hyperplane_profile(set, &m)?;
            differences.push(DifferenceCheck {
                difference: m.to_string(),
                zero: prof.is_constant(),
                profile: prof.counts().to_vec(),
            });
        }
    }
    let obstruction = (!a.cells().is_multiple_of(set.len()))
        .then_some(Obstruction::Divisibility { size: set.len(), cells: a.cells() });
    let set_tiles = if obstruction.is_some() {
        Some(false)
    } else if a.dim() <= 2 {
        Some(tiles(set)?)
    } else {
        None
    };
    Ok(PairCertificate {
        set: set.clone(),
        partner: partner.clone(),
        spectral_pair: is_spectral_pair(set, partner)?,
        tiling_pair: is_tiling_pair(set, partner)?,
        set_tiles,
        obstruction,
        differences,
        convolution_hash: fnv1a(&convolve_indicator(set, partner)?),
    })
}

pub fn check_pair_text(text: &str) -> Result<PairCertificate> {
    let (e, a) = parse_pair(text)?;
    certify_pair(&e, &a)
}

pub fn check_pair(path: impl AsRef<Path>) -> Result<PairCertificate> {
    let (e, a) = read_pair(path)?;
    certify_pair(&e, &a)
}

impl PairCertificate {
    /// Recomputes every verdict from the two sets alone.
    pub fn reverify(&self) -> Result<bool> {
        Ok(certify_pair(&self.set, &self.partner)? == *self)
    }

    /// Spectral pair whose first set cannot tile at all.
    pub fn is_spectral_non_tile(&self) -> bool {
        self.spectral_pair && self.set_tiles == Some(false)
    }

    pub fn to_json(&self) -> String {
        let view = CertificateView {
            set: format_set(&self.set),
            partner: format_set(&self.partner),
            p: self.set.ambient().p(),
            d: self.set.ambient().dim(),
            size: self.set.len(),
            partner_size: self.partner.len(),
            spectral_pair: self.spectral_pair,
            tiling_pair: self.tiling_pair,
            set_tiles: self.set_tiles,
            obstruction: self.obstruction.as_ref(),
            obstruction_text: self.obstruction.as_ref().map(|o| o.to_string()),
            differences_checked: self.differences.len(),
            differences: &self.differences,
            convolution_hash: format!("{:016x}", self.convolution_hash),
        };
        let value = serde_json::to_value(view).expect("certificate serializes");
        let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
        out.push('\n');
        out
    }

    pub fn summary(&self) -> String {
        let zero = self.differences.iter().filter(|d| d.zero).count();
        let tiles = match (self.set_tiles, &self.obstruction) {
            (_, Some(o)) => format!("false ({o})"),
            (Some(t), None) => t.to_string(),
            (None, None) => "undecided".to_string(),
        };
        format!(
            "spectral pair: {}\ntiling pair: {}\nset tiles: {tiles}\nzero differences: {zero} of {}\nconvolution hash: {:016x}\n",
            self.spectral_pair,
            self.tiling_pair,
            self.differences.len(),
            self.convolution_hash
        )
    }
}
