//! Spectral sets: exact decisions and numeric checks of the expansion
//! identities.
//!
//! `A` is a spectrum of `E` when `|A| = |E|` and `Ê(a - a') = 0` for all
//! distinct `a, a' ∈ A`. Only differences matter, so a spectrum can always
//! be translated to contain 0, and the search looks for a clique through 0
//! in the graph on Z_p^d whose edges are differences in the zero set.
//!
//! The empty set is rejected by every decision here. It would form a
//! spectral pair with itself, but it cannot tile, and keeping both
//! decisions defined on the same domain keeps "spectral iff tiles" a
//! meaningful statement.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;

use crate::cyclotomic::ComplexApprox;
use crate::directions::DirectionClass;
use crate::error::{Error, Result};
use crate::fourier::{character, zero_set, ZeroSet};
use crate::space::{PointSet, Vector};

/// Tolerance of the numeric expansion checks.
pub const EXPANSION_TOLERANCE: f64 = 1e-9;

/// A certified spectral pair `(E, A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralPair {
    set: PointSet,
    spectrum: PointSet,
    witness: Vec<DirectionClass>,
}

impl SpectralPair {
    pub fn new(set: PointSet, spectrum: PointSet) -> Result<Self> {
        if !is_spectral_pair(&set, &spectrum)? {
            return Err(Error::InvalidSpectralPair);
        }
        let a = *set.ambient();
        let points: Vec<Vector> = spectrum.vectors().collect();
        let mut classes = BTreeSet::new();
        for (i, x) in points.iter().enumerate() {
            for y in &points[i + 1..] {
                classes.insert(DirectionClass::of(&a, &a.sub(x, y)).expect("distinct"));
            }
        }
        Ok(SpectralPair { set, spectrum, witness: classes.into_iter().collect() })
    }

    pub fn set(&self) -> &PointSet {
        &self.set
    }

    pub fn spectrum(&self) -> &PointSet {
        &self.spectrum
    }

    /// Direction classes of the differences of `A`, each one a zero of `Ê`.
    pub fn witness(&self) -> &[DirectionClass] {
        &self.witness
    }
}

fn check_operands(e: &PointSet, a: &PointSet) -> Result<()> {
    e.ambient().check_same(a.ambient())?;
    if e.is_empty() || a.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(())
}

fn differences_in(zs: &ZeroSet, a: &PointSet) -> bool {
    let amb = a.ambient();
    let cells: Vec<u64> = a.cells().collect();
    cells
        .iter()
        .enumerate()
        .all(|(i, &x)| cells[i + 1..].iter().all(|&y| zs.contains_cell(amb.sub_cells(x, y))))
}

/// Every nonzero difference of `A` is a zero of `Ê`.
pub fn is_orthogonal_spectrum(e: &PointSet, a: &PointSet) -> Result<bool> {
    check_operands(e, a)?;
    Ok(differences_in(&zero_set(e)?, a))
}

pub fn is_spectral_pair(e: &PointSet, a: &PointSet) -> Result<bool> {
    check_operands(e, a)?;
    Ok(e.len() == a.len() && is_orthogonal_spectrum(e, a)?)
}

/// Outcome of a spectrum search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumSearch {
    /// A spectrum containing 0, when one exists.
    pub spectrum: Option<PointSet>,
    /// Size of the largest clique through 0 in the zero-difference graph.
    /// Exact when no spectrum exists; otherwise a lower bound equal to |E|.
    pub clique_bound: u64,
    pub zero_set_size: u64,
}

struct CliqueSearch<'a> {
    adj: &'a [Vec<u64>],
    target: usize,
    clique: Vec<usize>,
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    fn run(&mut self, cands: Vec<u64>) -> bool {
        if self.clique.len() > self.best.len() {
            self.best = self.clique.clone();
        }
        if self.clique.len() == self.target {
            return true;
        }
        let mut rest = cands;
        loop {
            let remaining: usize = rest.iter().map(|w| w.count_ones() as usize).sum();
            if remaining == 0 || self.clique.len() + remaining <= self.best.len() {
                return false;
            }
            let (w, word) = rest.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, &w)| (i, w)).expect("nonempty");
            let v = w * 64 + word.trailing_zeros() as usize;
            rest[w] &= rest[w] - 1;
            let next: Vec<u64> = rest.iter().zip(&self.adj[v]).map(|(a, b)| a & b).collect();
            self.clique.push(v);
            if self.run(next) {
                return true;
            }
            self.clique.pop();
        }
    }
}

/// Searches for a spectrum containing 0. Vertices are restricted to the
/// zero set, since every element of such a spectrum differs from 0 by a
/// zero of `Ê`. Candidates are tried in ascending cell order, so the
/// returned spectrum is the lexicographically least one through 0.
pub fn spectrum_search(e: &PointSet) -> Result<SpectrumSearch> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    let amb = *e.ambient();
    let zs = zero_set(e)?;
    let verts: Vec<u64> = zs.as_set().cells().collect();
    let target = e.len() as usize;
    let words = verts.len().div_ceil(64).max(1);
    let adj: Vec<Vec<u64>> = verts
        .iter()
        .map(|&u| {
            let mut row = vec![0u64; words];
            for (j, &v) in verts.iter().enumerate() {
                if u != v && zs.contains_cell(amb.sub_cells(u, v)) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();
    let mut all = vec![0u64; words];
    for j in 0..verts.len() {
        all[j / 64] |= 1 << (j % 64);
    }
    let mut search = CliqueSearch { adj: &adj, target: target - 1, clique: Vec::new(), best: Vec::new() };
    let found = search.run(all);
    let clique_bound = search.best.len() as u64 + 1;
    let spectrum = found.then(|| {
        PointSet::from_cells(amb, std::iter::once(0).chain(search.best.iter().map(|&i| verts[i])))
            .expect("cells of the ambient")
    });
    Ok(SpectrumSearch { spectrum, clique_bound, zero_set_size: zs.len() })
}

pub fn find_spectrum(e: &PointSet) -> Result<Option<PointSet>> {
    Ok(spectrum_search(e)?.spectrum)
}

pub fn is_spectral(e: &PointSet) -> Result<bool> {
    Ok(find_spectrum(e)?.is_some())
}

/// Expansion coefficients `c_a(f) = |E|^{-1} Σ_{x∈E} χ(-x·a) f(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralCoefficients {
    values: BTreeMap<u64, ComplexApprox>,
}

impl SpectralCoefficients {
    /// Coefficient for the frequency at `cell`.
    pub fn get(&self, cell: u64) -> Option<ComplexApprox> {
        self.values.get(&cell).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, ComplexApprox)> + '_ {
        self.values.iter().map(|(&c, &v)| (c, v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn check_table(e: &PointSet, f: &[Complex64]) -> Result<()> {
    let n = e.ambient().cells() as usize;
    if f.len() != n {
        return Err(Error::TableLength { expected: n, found: f.len() });
    }
    Ok(())
}

/// `f` is a table over all cells of the ambient.
pub fn coefficients(e: &PointSet, a: &PointSet, f: &[Complex64]) -> Result<SpectralCoefficients> {
    if !is_spectral_pair(e, a)? {
        return Err(Error::InvalidSpectralPair);
    }
    check_table(e, f)?;
    let amb = e.ambient();
    let p = amb.p();
    let inv_size = 1.0 / e.len() as f64;
    let xs: Vec<(u64, Vector)> = e.cells().map(|c| (c, amb.from_index(c))).collect();
    let values = a
        .cells()
        .map(|ac| {
            let av = amb.from_index(ac);
            let sum: Complex64 = xs
                .iter()
                .map(|(c, x)| {
                    let dot = amb.dot_unchecked(x, &av) as u64;
                    character(p, (p as u64 - dot) % p as u64) * f[*c as usize]
                })
                .sum();
            (ac, sum * inv_size)
        })
        .collect();
    Ok(SpectralCoefficients { values })
}

/// `max_{x∈E} |f(x) - Σ_a c_a χ(x·a)|` against the tolerance, scaled by
/// `max(1, max |f|)`. Points outside `E` are not checked.
pub fn reconstruct_check(e: &PointSet, a: &PointSet, f: &[Complex64]) -> Result<bool> {
    let coeffs = coefficients(e, a, f)?;
    let amb = e.ambient();
    let p = amb.p();
    let scale = e.cells().map(|c| f[c as usize].norm()).fold(1.0, f64::max);
    let worst = e
        .cells()
        .map(|xc| {
            let x = amb.from_index(xc);
            let series: Complex64 = coeffs
                .iter()
                .map(|(ac, c)| c * character(p, amb.dot_unchecked(&x, &amb.from_index(ac)) as u64))
                .sum();
            (f[xc as usize] - series).norm()
        })
        .fold(0.0, f64::max);
    Ok(worst < EXPANSION_TOLERANCE * scale)
}

/// `Σ_a |c_a|² = |E|^{-1} Σ_{x∈E} |f(x)|²` to relative tolerance.
pub fn parseval_check(e: &PointSet, a: &PointSet, f: &[Complex64]) -> Result<bool> {
    let coeffs = coefficients(e, a, f)?;
    let lhs: f64 = coeffs.iter().map(|(_, c)| c.norm_sqr()).sum();
    let rhs: f64 = e.cells().map(|c| f[c as usize].norm_sqr()).sum::<f64>() / e.len() as f64;
    Ok((lhs - rhs).abs() <= EXPANSION_TOLERANCE * lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE))
}

/// `δ_0(x) = |E|^{-1} Σ_{a∈A} χ(x·a)` for every `x ∈ E`; needs `0 ∈ E`.
pub fn delta_check(e: &PointSet, a: &PointSet) -> Result<bool> {
    if !is_spectral_pair(e, a)? {
        return Err(Error::InvalidSpectralPair);
    }
    if !e.contains_cell(0) {
        return Err(Error::OriginNotInSet);
    }
    let amb = e.ambient();
    let p = amb.p();
    let freqs: Vec<Vector> = a.vectors().collect();
    let n = e.len() as f64;
    Ok(e.vectors().all(|x| {
        let s: Complex64 = freqs.iter().map(|av| character(p, amb.dot_unchecked(&x, av) as u64)).sum::<Complex64>() / n;
        let expect = if x.is_zero() { 1.0 } else { 0.0 };
        (s - Complex64::new(expect, 0.0)).norm() < EXPANSION_TOLERANCE
    }))
}
