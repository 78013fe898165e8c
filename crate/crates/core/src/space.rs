//! Vectors and point sets in Z_p^d.
//!
//! Cells are indexed row-major with the first coordinate least significant:
//! `(x_1, ..., x_d) ↦ x_1 + x_2 p + ... + x_d p^{d-1}`. Every file format and
//! report in this crate relies on this convention.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{PrimeModulus, Residue};

pub const MAX_DIMENSION: usize = 8;

/// Largest ambient for which a membership bitmap is materialized.
pub const MAX_SET_CELLS: u64 = 1 << 24;

/// The space Z_p^d.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ambient {
    p: PrimeModulus,
    d: usize,
    cells: u64,
}

impl Ambient {
    pub fn new(p: PrimeModulus, d: usize) -> Result<Self> {
        if d == 0 || d > MAX_DIMENSION {
            return Err(Error::InvalidDimension(d));
        }
        let cells = (p.get() as u64)
            .checked_pow(d as u32)
            .ok_or(Error::AmbientTooLarge { p: p.get(), d, reason: "p^d overflows 64 bits" })?;
        Ok(Ambient { p, d, cells })
    }

    /// Convenience constructor from raw integers.
    pub fn of(p: u64, d: usize) -> Result<Self> {
        Ambient::new(PrimeModulus::new(p)?, d)
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p.get()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn cells(&self) -> u64 {
        self.cells
    }

    pub fn vector(&self, coords: &[u64]) -> Result<Vector> {
        self.check_len(coords.len())?;
        let mut out = Vec::with_capacity(self.d);
        for &c in coords {
            if c >= self.p() as u64 {
                return Err(Error::ResidueOutOfRange { value: c, p: self.p() });
            }
            out.push(c as Residue);
        }
        Ok(Vector(out))
    }

    pub fn zero(&self) -> Vector {
        Vector(vec![0; self.d])
    }

    fn check_len(&self, found: usize) -> Result<()> {
        if found != self.d {
            return Err(Error::DimensionMismatch { expected: self.d, found });
        }
        Ok(())
    }

    fn check(&self, v: &Vector) -> Result<()> {
        self.check_len(v.0.len())
    }

    pub fn index(&self, v: &Vector) -> u64 {
        debug_assert_eq!(v.0.len(), self.d);
        v.0.iter().rev().fold(0u64, |acc, &c| acc * self.p() as u64 + c as u64)
    }

    pub fn from_index(&self, mut index: u64) -> Vector {
        debug_assert!(index < self.cells);
        let p = self.p() as u64;
        let mut coords = Vec::with_capacity(self.d);
        for _ in 0..self.d {
            coords.push((index % p) as Residue);
            index /= p;
        }
        Vector(coords)
    }

    /// All vectors in cell-index order.
    pub fn vectors(&self) -> impl Iterator<Item = Vector> + '_ {
        (0..self.cells).map(move |i| self.from_index(i))
    }

    pub fn dot(&self, u: &Vector, v: &Vector) -> Result<Residue> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.dot_unchecked(u, v))
    }

    #[inline]
    pub(crate) fn dot_unchecked(&self, u: &Vector, v: &Vector) -> Residue {
        let acc: u64 = u.0.iter().zip(&v.0).map(|(&a, &b)| a as u64 * b as u64).sum();
        self.p.reduce(acc)
    }

    pub fn add(&self, u: &Vector, v: &Vector) -> Vector {
        Vector(u.0.iter().zip(&v.0).map(|(&a, &b)| self.p.add(a, b)).collect())
    }

    pub fn sub(&self, u: &Vector, v: &Vector) -> Vector {
        Vector(u.0.iter().zip(&v.0).map(|(&a, &b)| self.p.sub(a, b)).collect())
    }

    pub fn neg(&self, u: &Vector) -> Vector {
        Vector(u.0.iter().map(|&a| self.p.neg(a)).collect())
    }

    pub fn scale(&self, r: Residue, u: &Vector) -> Vector {
        Vector(u.0.iter().map(|&a| self.p.mul(r, a)).collect())
    }

    /// Cell index of `u + v`, computed without materializing vectors.
    pub(crate) fn add_cells(&self, u: u64, v: u64) -> u64 {
        let p = self.p() as u64;
        let (mut u, mut v) = (u, v);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.d {
            let s = (u % p + v % p) % p;
            out += s * place;
            place *= p;
            u /= p;
            v /= p;
        }
        out
    }

    pub(crate) fn sub_cells(&self, u: u64, v: u64) -> u64 {
        let p = self.p() as u64;
        let (mut u, mut v) = (u, v);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.d {
            let s = (u % p + p - v % p) % p;
            out += s * place;
            place *= p;
            u /= p;
            v /= p;
        }
        out
    }

    pub(crate) fn check_same(&self, other: &Ambient) -> Result<()> {
        if self != other {
            return Err(Error::AmbientMismatch {
                p1: self.p(),
                d1: self.d,
                p2: other.p(),
                d2: other.d,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}^{}", self.p, self.d)
    }
}

/// A vector of residues. Which ambient it belongs to is tracked by the caller.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(pub(crate) Vec<Residue>);

impl Vector {
    pub fn coords(&self) -> &[Residue] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A subset of Z_p^d stored as a membership bitmap over the cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet {
    ambient: Ambient,
    bits: Vec<u64>,
    size: u64,
}

impl PointSet {
    pub fn empty(ambient: Ambient) -> Result<Self> {
        if ambient.cells() > MAX_SET_CELLS {
            return Err(Error::AmbientTooLarge {
                p: ambient.p(),
                d: ambient.dim(),
                reason: "too many cells for a membership bitmap",
            });
        }
        let words = ambient.cells().div_ceil(64) as usize;
        Ok(PointSet { ambient, bits: vec![0; words], size: 0 })
    }

    pub fn full(ambient: Ambient) -> Result<Self> {
        let mut s = PointSet::empty(ambient)?;
        for c in 0..ambient.cells() {
            s.insert_cell(c);
        }
        Ok(s)
    }

    /// Builds a set from vectors; repeated vectors collapse to one element.
    pub fn from_vectors<'a, I>(ambient: Ambient, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Vector>,
    {
        let mut s = PointSet::empty(ambient)?;
        for v in vectors {
            ambient.check(v)?;
            if let Some(&c) = v.0.iter().find(|&&c| c >= ambient.p()) {
                return Err(Error::ResidueOutOfRange { value: c as u64, p: ambient.p() });
            }
            s.insert_cell(ambient.index(v));
        }
        Ok(s)
    }

    /// Builds a set from raw coordinate tuples.
    pub fn from_coords(ambient: Ambient, points: &[&[u64]]) -> Result<Self> {
        let vs = points.iter().map(|c| ambient.vector(c)).collect::<Result<Vec<_>>>()?;
        PointSet::from_vectors(ambient, &vs)
    }

    pub fn from_cells<I: IntoIterator<Item = u64>>(ambient: Ambient, cells: I) -> Result<Self> {
        let mut s = PointSet::empty(ambient)?;
        for c in cells {
            if c >= ambient.cells() {
                return Err(Error::ResidueOutOfRange { value: c, p: ambient.p() });
            }
            s.insert_cell(c);
        }
        Ok(s)
    }

    /// Builds a set from a single-word bitmap (ambients with at most 64 cells).
    pub fn from_mask(ambient: Ambient, mask: u64) -> Result<Self> {
        if ambient.cells() > 64 || (ambient.cells() < 64 && mask >> ambient.cells() != 0) {
            return Err(Error::ResidueOutOfRange { value: mask, p: ambient.p() });
        }
        let mut s = PointSet::empty(ambient)?;
        s.bits[0] = mask;
        s.size = mask.count_ones() as u64;
        Ok(s)
    }

    /// The bitmap as one word, when the ambient has at most 64 cells.
    pub fn to_mask(&self) -> Option<u64> {
        (self.ambient.cells() <= 64).then(|| self.bits[0])
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    #[inline]
    pub fn len(&self) -> u64 {
        self.size
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn is_full(&self) -> bool {
        self.size == self.ambient.cells()
    }

    #[inline]
    pub fn contains_cell(&self, cell: u64) -> bool {
        self.bits[(cell / 64) as usize] >> (cell % 64) & 1 == 1
    }

    pub fn contains(&self, v: &Vector) -> bool {
        v.dim() == self.ambient.dim()
            && v.0.iter().all(|&c| c < self.ambient.p())
            && self.contains_cell(self.ambient.index(v))
    }

    pub fn insert_cell(&mut self, cell: u64) -> bool {
        let (w, b) = ((cell / 64) as usize, cell % 64);
        let fresh = self.bits[w] >> b & 1 == 0;
        if fresh {
            self.bits[w] |= 1 << b;
            self.size += 1;
        }
        fresh
    }

    pub fn remove_cell(&mut self, cell: u64) -> bool {
        let (w, b) = ((cell / 64) as usize, cell % 64);
        let present = self.bits[w] >> b & 1 == 1;
        if present {
            self.bits[w] &= !(1 << b);
            self.size -= 1;
        }
        present
    }

    /// Member cells in ascending order.
    pub fn cells(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as u64;
                rest &= rest - 1;
                Some(w as u64 * 64 + b)
            })
        })
    }

    pub fn vectors(&self) -> impl Iterator<Item = Vector> + '_ {
        self.cells().map(|c| self.ambient.from_index(c))
    }

    pub fn translate(&self, by: &Vector) -> PointSet {
        let shift = self.ambient.index(by);
        let mut out = PointSet::empty(self.ambient).expect("same ambient");
        for c in self.cells() {
            out.insert_cell(self.ambient.add_cells(c, shift));
        }
        out
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    /// Compares two sets of the same ambient as binary integers in which
    /// cell `i` carries weight `2^i`.
    pub fn cmp_as_integer(&self, other: &PointSet) -> Ordering {
        self.bits.iter().rev().cmp(other.bits.iter().rev())
    }
}

impl fmt::Display for PointSet {
    /// Writes the set in set-file syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::setfile::write_set(f, self)
    }
}

/// One representative per direction class of nonzero vectors: the unique
/// scaling whose first nonzero coordinate is 1. Returned in ascending
/// coordinate order.
pub fn direction_representatives(ambient: &Ambient) -> Vec<Vector> {
    let mut reps: Vec<Vector> = ambient
        .vectors()
        .filter(|v| v.0.iter().find(|&&c| c != 0) == Some(&1))
        .collect();
    reps.sort();
    reps
}

/// Scales a nonzero vector so its first nonzero coordinate is 1.
pub fn normalize_direction(ambient: &Ambient, v: &Vector) -> Option<Vector> {
    let lead = *v.0.iter().find(|&&c| c != 0)?;
    let inv = ambient.modulus().inv(lead)?;
    Some(ambient.scale(inv, v))
}
