//! Exact Fourier coefficients of indicator functions on Z_p^d.
//!
//! Coefficients are stored unnormalized: for a set `E` and frequency `m`,
//! `fourier_coefficient(E, m) = Σ_{x∈E} χ(-x·m) = Σ_t n(t) ξ^t`, where
//! `χ(u) = e^{2πiu/p}`, `ξ = χ(-1)` and `n(t) = |{x ∈ E : x·m = t}|`.
//! The conventional transform carries an extra factor `p^{-d}`; it never
//! affects whether a coefficient vanishes, so it is applied only by the
//! numeric checks that need it.
//!
//! An integer combination of the p-th roots of unity vanishes exactly when
//! all its coordinates agree, so `Ê(m) = 0` is decided by asking whether
//! `E` meets the `p` hyperplanes `x·m = t` equally often.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::cyclotomic::{ComplexApprox, CyclotomicValue};
use crate::error::{Error, Result};
use crate::space::{direction_representatives, Ambient, PointSet, Vector};

/// The character `χ(u) = e^{2πiu/p}` evaluated numerically.
pub fn character(p: u32, u: u64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * (u % p as u64) as f64 / p as f64)
}

/// Counts of a set on the parallel hyperplanes `x·m = t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneProfile {
    m: Vector,
    counts: Vec<u64>,
}

impl HyperplaneProfile {
    pub fn frequency(&self) -> &Vector {
        &self.m
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Equidistribution: every level holds the same number of points.
    pub fn is_constant(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] == w[1])
    }
}

fn check_frequency(ambient: &Ambient, m: &Vector) -> Result<()> {
    if m.dim() != ambient.dim() {
        return Err(Error::DimensionMismatch { expected: ambient.dim(), found: m.dim() });
    }
    if let Some(&c) = m.coords().iter().find(|&&c| c >= ambient.p()) {
        return Err(Error::ResidueOutOfRange { value: c as u64, p: ambient.p() });
    }
    Ok(())
}

fn level_counts(set: &PointSet, m: &Vector) -> Vec<u64> {
    let a = set.ambient();
    let mut counts = vec![0u64; a.p() as usize];
    for x in set.vectors() {
        counts[a.dot_unchecked(&x, m) as usize] += 1;
    }
    counts
}

pub fn hyperplane_profile(set: &PointSet, m: &Vector) -> Result<HyperplaneProfile> {
    check_frequency(set.ambient(), m)?;
    if m.is_zero() {
        return Err(Error::ZeroFrequency);
    }
    Ok(HyperplaneProfile { m: m.clone(), counts: level_counts(set, m) })
}

/// The unnormalized coefficient `Σ_{x∈E} χ(-x·m)` in canonical form.
pub fn fourier_coefficient(set: &PointSet, m: &Vector) -> Result<CyclotomicValue> {
    let a = set.ambient();
    check_frequency(a, m)?;
    let p = a.modulus();
    if m.is_zero() {
        return Ok(CyclotomicValue::constant(p, set.len() as i64));
    }
    let raw = level_counts(set, m).into_iter().map(|c| c as i64).collect();
    Ok(CyclotomicValue::from_raw(p, raw))
}

/// Decides `Ê(m) = 0` for `m ≠ 0` by equidistribution of the profile.
pub fn is_zero_coefficient(set: &PointSet, m: &Vector) -> Result<bool> {
    Ok(hyperplane_profile(set, m)?.is_constant())
}

/// The nonzero frequencies at which the transform of a set vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroSet {
    members: PointSet,
}

impl ZeroSet {
    pub fn ambient(&self) -> &Ambient {
        self.members.ambient()
    }

    /// Members as a point set (never contains 0).
    pub fn as_set(&self) -> &PointSet {
        &self.members
    }

    pub fn contains(&self, m: &Vector) -> bool {
        self.members.contains(m)
    }

    pub fn contains_cell(&self, cell: u64) -> bool {
        self.members.contains_cell(cell)
    }

    pub fn len(&self) -> u64 {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// One representative per direction class, first nonzero coordinate 1.
    pub fn classes(&self) -> Vec<Vector> {
        direction_representatives(self.ambient()).into_iter().filter(|m| self.contains(m)).collect()
    }
}

/// Tests one frequency per direction class and closes each zero under
/// scaling by units.
pub fn zero_set(set: &PointSet) -> Result<ZeroSet> {
    let a = *set.ambient();
    let mut members = PointSet::empty(a)?;
    for rep in direction_representatives(&a) {
        let counts = level_counts(set, &rep);
        if counts.windows(2).all(|w| w[0] == w[1]) {
            for r in a.modulus().units() {
                members.insert_cell(a.index(&a.scale(r, &rep)));
            }
        }
    }
    Ok(ZeroSet { members })
}

/// [`zero_set`], re-checked against a per-frequency test of every nonzero
/// `m`. Panics if the two disagree, which would mean a vanishing
/// coefficient whose scalar multiples do not vanish.
pub fn zero_set_audited(set: &PointSet) -> Result<ZeroSet> {
    let zs = zero_set(set)?;
    let a = *set.ambient();
    for m in a.vectors().filter(|m| !m.is_zero()) {
        let direct = is_zero_coefficient(set, &m)?;
        assert_eq!(
            direct,
            zs.contains(&m),
            "zero set is not closed under scaling at m = {m} for\n{set}"
        );
    }
    Ok(zs)
}

/// `(E ⋆ T)(x) = Σ_τ E(x − τ) T(τ)`, indexed by cell.
pub fn convolve_indicator(e: &PointSet, t: &PointSet) -> Result<Vec<u64>> {
    e.ambient().check_same(t.ambient())?;
    let a = e.ambient();
    let mut out = vec![0u64; a.cells() as usize];
    for tau in t.cells() {
        for x in e.cells() {
            out[a.add_cells(x, tau) as usize] += 1;
        }
    }
    Ok(out)
}

/// Exact Fourier inversion: `p^d E(x) = Σ_m χ(x·m) Ê(m)` for every `x`,
/// with `Ê` unnormalized.
pub fn inversion_check(set: &PointSet) -> bool {
    let a = *set.ambient();
    let p = a.modulus();
    let coeffs: Vec<CyclotomicValue> = a
        .vectors()
        .map(|m| fourier_coefficient(set, &m).expect("frequency from the same ambient"))
        .collect();
    let q = a.p() as u64;
    let ok = a.vectors().all(|x| {
        let mut sum = CyclotomicValue::zero(p);
        for (cell, coeff) in coeffs.iter().enumerate() {
            let m = a.from_index(cell as u64);
            // χ(x·m) = ξ^{-x·m}
            let k = (q - a.dot_unchecked(&x, &m) as u64) % q;
            sum = &sum + &coeff.rotate(k);
        }
        let expect = if set.contains(&x) { a.cells() as i64 } else { 0 };
        sum == CyclotomicValue::constant(p, expect)
    });
    ok
}

pub fn evaluate_complex(v: &CyclotomicValue) -> ComplexApprox {
    v.evaluate_complex()
}
