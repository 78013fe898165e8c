//! Local search for a 6-point spectral set in Z_3^5, which cannot tile
//! since 6 does not divide 243.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::pair::{certify_pair, PairCertificate};
use crate::error::Result;
use crate::space::{Ambient, PointSet};
use crate::spectra::spectrum_search;

const SIZE: usize = 6;
/// Moves without improvement before a restart.
const PATIENCE: u32 = 300;

#[derive(Clone, Debug)]
pub struct Z35Search {
    pub certificate: Option<PairCertificate>,
    pub restarts: u64,
    pub candidates: u64,
    pub elapsed: Duration,
}

/// `(clique bound, zero set size)`, larger is better.
fn score(cells: &[u64], ambient: Ambient) -> Result<(u64, u64, Option<PointSet>)> {
    let e = PointSet::from_cells(ambient, cells.iter().copied())?;
    let s = spectrum_search(&e)?;
    Ok((s.clique_bound, s.zero_set_size, s.spectrum))
}

/// Columns of a random 5×6 matrix over Z_3 whose first column is zero and
/// whose columns are distinct, read as cells.
fn random_columns(rng: &mut ChaCha8Rng, cells: u64) -> Vec<u64> {
    let mut cols = vec![0u64];
    while cols.len() < SIZE {
        let c = rng.gen_range(1..cells);
        if !cols.contains(&c) {
            cols.push(c);
        }
    }
    cols
}

pub fn search_z35_with(budget: Duration, seed: u64) -> Result<Z35Search> {
    let started = Instant::now();
    let ambient = Ambient::of(3, 5)?;
    let cells = ambient.cells();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut restarts = 0;
    let mut candidates = 0;
    while started.elapsed() < budget {
        restarts += 1;
        let mut cur = random_columns(&mut rng, cells);
        let (mut bound, mut zeros, mut spectrum) = score(&cur, ambient)?;
        candidates += 1;
        let mut stale = 0;
        while spectrum.is_none() && stale < PATIENCE && started.elapsed() < budget {
            let slot = rng.gen_range(1..SIZE);
            let c = rng.gen_range(1..cells);
            if cur.contains(&c) {
                continue;
            }
            let mut next = cur.clone();
            next[slot] = c;
            let (b, z, s) = score(&next, ambient)?;
            candidates += 1;
            if (b, z) > (bound, zeros) {
                stale = 0;
            } else {
                stale += 1;
            }
            if (b, z) >= (bound, zeros) {
                (cur, bound, zeros, spectrum) = (next, b, z, s);
            }
        }
        if let Some(a) = spectrum {
            let e = PointSet::from_cells(ambient, cur.iter().copied())?;
            let cert = certify_pair(&e, &a)?;
            if cert.is_spectral_non_tile() {
                return Ok(Z35Search { certificate: Some(cert), restarts, candidates, elapsed: started.elapsed() });
            }
        }
    }
    Ok(Z35Search { certificate: None, restarts, candidates, elapsed: started.elapsed() })
}

/// A certified non-tiling spectral pair, or `None` when the budget runs out.
pub fn search_z35(budget: Duration, seed: u64) -> Result<Option<PairCertificate>> {
    Ok(search_z35_with(budget, seed)?.certificate)
}
