//! Invertible affine maps of Z_p^d and orbit representatives in the plane.

use std::cmp::Ordering;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{PrimeModulus, Residue};
use crate::space::{Ambient, PointSet, Vector};

/// `x ↦ M x + τ` with `det M` a unit mod p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    ambient: Ambient,
    /// Row-major d×d.
    matrix: Vec<Residue>,
    translation: Vector,
}

/// Determinant mod p by Gaussian elimination.
pub fn determinant(p: PrimeModulus, d: usize, matrix: &[Residue]) -> Residue {
    let mut m = matrix.to_vec();
    let mut det = 1;
    for col in 0..d {
        let Some(pivot) = (col..d).find(|&r| m[r * d + col] != 0) else {
            return 0;
        };
        if pivot != col {
            for k in 0..d {
                m.swap(pivot * d + k, col * d + k);
            }
            det = p.neg(det);
        }
        let piv = m[col * d + col];
        det = p.mul(det, piv);
        let inv = p.inv(piv).expect("nonzero pivot");
        for r in col + 1..d {
            let factor = p.mul(m[r * d + col], inv);
            if factor == 0 {
                continue;
            }
            for k in col..d {
                m[r * d + k] = p.sub(m[r * d + k], p.mul(factor, m[col * d + k]));
            }
        }
    }
    det
}

fn invert_matrix(p: PrimeModulus, d: usize, matrix: &[Residue]) -> Option<Vec<Residue>> {
    let w = 2 * d;
    let mut aug = vec![0; d * w];
    for r in 0..d {
        aug[r * w..r * w + d].copy_from_slice(&matrix[r * d..r * d + d]);
        aug[r * w + d + r] = 1;
    }
    for col in 0..d {
        let pivot = (col..d).find(|&r| aug[r * w + col] != 0)?;
        for k in 0..w {
            aug.swap(pivot * w + k, col * w + k);
        }
        let inv = p.inv(aug[col * w + col])?;
        for k in 0..w {
            aug[col * w + k] = p.mul(aug[col * w + k], inv);
        }
        for r in (0..d).filter(|&r| r != col) {
            let factor = aug[r * w + col];
            if factor != 0 {
                for k in 0..w {
                    aug[r * w + k] = p.sub(aug[r * w + k], p.mul(factor, aug[col * w + k]));
                }
            }
        }
    }
    Some((0..d).flat_map(|r| aug[r * w + d..r * w + w].to_vec()).collect())
}

impl AffineMap {
    pub fn new(ambient: Ambient, matrix: Vec<Residue>, translation: Vector) -> Result<Self> {
        let d = ambient.dim();
        if matrix.len() != d * d {
            return Err(Error::DimensionMismatch { expected: d * d, found: matrix.len() });
        }
        if translation.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: translation.dim() });
        }
        if let Some(&c) = matrix.iter().chain(translation.coords()).find(|&&c| c >= ambient.p()) {
            return Err(Error::ResidueOutOfRange { value: c as u64, p: ambient.p() });
        }
        if determinant(ambient.modulus(), d, &matrix) == 0 {
            return Err(Error::SingularMatrix(ambient.p()));
        }
        Ok(AffineMap { ambient, matrix, translation })
    }

    pub fn identity(ambient: Ambient) -> Self {
        let d = ambient.dim();
        let matrix = (0..d * d).map(|i| (i / d == i % d) as Residue).collect();
        AffineMap { ambient, matrix, translation: ambient.zero() }
    }

    pub fn translation_by(ambient: Ambient, by: Vector) -> Self {
        AffineMap { translation: by, ..AffineMap::identity(ambient) }
    }

    /// Uniformly random invertible linear part and translation.
    pub fn random<R: Rng + ?Sized>(ambient: Ambient, rng: &mut R) -> Self {
        let d = ambient.dim();
        let p = ambient.p();
        loop {
            let matrix: Vec<Residue> = (0..d * d).map(|_| rng.gen_range(0..p)).collect();
            if determinant(ambient.modulus(), d, &matrix) != 0 {
                let t: Vec<Residue> = (0..d).map(|_| rng.gen_range(0..p)).collect();
                return AffineMap { ambient, matrix, translation: Vector(t) };
            }
        }
    }

    pub fn matrix(&self) -> &[Residue] {
        &self.matrix
    }

    pub fn translation(&self) -> &Vector {
        &self.translation
    }

    pub fn linear_apply(&self, v: &Vector) -> Vector {
        let d = self.ambient.dim();
        let p = self.ambient.modulus();
        Vector(
            (0..d)
                .map(|r| {
                    let s: u64 = (0..d).map(|k| self.matrix[r * d + k] as u64 * v.0[k] as u64).sum();
                    p.reduce(s)
                })
                .collect(),
        )
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.ambient.add(&self.linear_apply(v), &self.translation)
    }

    pub fn apply_set(&self, set: &PointSet) -> Result<PointSet> {
        self.ambient.check_same(set.ambient())?;
        let mut out = PointSet::empty(self.ambient)?;
        for v in set.vectors() {
            out.insert_cell(self.ambient.index(&self.apply(&v)));
        }
        Ok(out)
    }

    /// The linear map `(M^T)^{-1}` with the given translation; this is how
    /// frequencies transform when points transform by `M`.
    pub fn dual(&self, translation: Vector) -> AffineMap {
        let d = self.ambient.dim();
        let p = self.ambient.modulus();
        let inv = invert_matrix(p, d, &self.matrix).expect("invertible by construction");
        let matrix = (0..d * d).map(|i| inv[(i % d) * d + i / d]).collect();
        AffineMap { ambient: self.ambient, matrix, translation }
    }
}

/// Every invertible 2×2 matrix mod p, row-major.
pub fn general_linear_group_2(p: PrimeModulus) -> Vec<[Residue; 4]> {
    let q = p.get();
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    if p.sub(p.mul(a, d), p.mul(b, c)) != 0 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// Orbit representative of `set` under the affine group of Z_p^2: the
/// image with the smallest bitmap, read as a binary integer with cell `i`
/// weighing `2^i`. So the empty set maps to itself and every singleton
/// maps to `{(0,0)}`.
pub fn canonicalize(set: &PointSet) -> Result<PointSet> {
    let ambient = *set.ambient();
    if ambient.dim() != 2 {
        return Err(Error::UnsupportedDimension(ambient.dim()));
    }
    if set.is_empty() {
        return Ok(set.clone());
    }
    let p = ambient.modulus();
    let points: Vec<Vector> = set.vectors().collect();
    let mut best: Option<PointSet> = None;
    let mut image = Vec::with_capacity(points.len());
    for m in general_linear_group_2(p) {
        image.clear();
        image.extend(points.iter().map(|v| {
            let x = p.add(p.mul(m[0], v.0[0]), p.mul(m[1], v.0[1]));
            let y = p.add(p.mul(m[2], v.0[0]), p.mul(m[3], v.0[1]));
            ambient.index(&Vector(vec![x, y]))
        }));
        for shift in 0..ambient.cells() {
            let mut candidate = PointSet::empty(ambient)?;
            for &c in &image {
                candidate.insert_cell(ambient.add_cells(c, shift));
            }
            let better = match &best {
                None => true,
                Some(b) => candidate.cmp_as_integer(b) == Ordering::Less,
            };
            if better {
                best = Some(candidate);
            }
        }
    }
    Ok(best.expect("nonempty group"))
}
