//! Single-word classification of plane sets for campaign throughput.
//!
//! For `p <= 7` the plane has at most 49 cells, so a set is one `u64` and
//! translations are two cyclic rotations. The decisions mirror the library
//! routines in [`crate::spectra`], [`crate::tiling`] and
//! [`crate::directions`]; tests hold the two in agreement.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::space::{direction_representatives, Ambient};

pub const MAX_KERNEL_PRIME: u32 = 7;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Structure {
    Point,
    Graph,
    Full,
    None,
}

impl Structure {
    pub fn is_tile_shape(self) -> bool {
        self != Structure::None
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub size: u32,
    pub spectral: bool,
    pub tiles: bool,
    pub structure: Structure,
    /// The spectral verdict was inferred from the size alone.
    pub pruned: bool,
    /// Number of direction classes at which the transform vanishes.
    pub zero_classes: u32,
}

#[derive(Clone, Debug)]
pub struct PlaneKernel {
    p: u32,
    cells: u32,
    full: u64,
    /// `levels[c][t]`: cells with `x·m_c = t`.
    levels: Vec<Vec<u64>>,
    /// `lines[c]`: nonzero multiples of `m_c`.
    lines: Vec<u64>,
    /// `class_of[u]` for nonzero cell `u`.
    class_of: Vec<u8>,
    /// Cells whose first coordinate is below `k`, for each `k`.
    columns_below: Vec<u64>,
    /// `difference[u * cells + v]` is the cell `u - v`.
    difference: Vec<u8>,
}

impl PlaneKernel {
    pub fn new(ambient: &Ambient) -> Result<Self> {
        if ambient.dim() != 2 {
            return Err(Error::UnsupportedDimension(ambient.dim()));
        }
        let p = ambient.p();
        if p > MAX_KERNEL_PRIME {
            return Err(Error::InvalidConfig(format!("plane kernel supports p <= {MAX_KERNEL_PRIME}, got {p}")));
        }
        let cells = p * p;
        let full = (1u64 << cells) - 1;
        let reps = direction_representatives(ambient);
        let mut levels = Vec::with_capacity(reps.len());
        let mut lines = Vec::with_capacity(reps.len());
        let mut class_of = vec![u8::MAX; cells as usize];
        for (ci, m) in reps.iter().enumerate() {
            let mut lv = vec![0u64; p as usize];
            for (cell, x) in ambient.vectors().enumerate() {
                lv[ambient.dot_unchecked(&x, m) as usize] |= 1 << cell;
            }
            levels.push(lv);
            let mut line = 0u64;
            for r in 1..p {
                let c = ambient.index(&ambient.scale(r, m));
                line |= 1 << c;
                class_of[c as usize] = ci as u8;
            }
            lines.push(line);
        }
        let columns_below = (0..=p)
            .map(|k| (0..cells).filter(|c| c % p < k).fold(0u64, |acc, c| acc | 1 << c))
            .collect();
        let difference = (0..u64::from(cells))
            .flat_map(|u| (0..u64::from(cells)).map(move |v| (u, v)))
            .map(|(u, v)| ambient.sub_cells(u, v) as u8)
            .collect();
        Ok(PlaneKernel { p, cells, full, levels, lines, class_of, columns_below, difference })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn cells(&self) -> u32 {
        self.cells
    }

    pub fn full_mask(&self) -> u64 {
        self.full
    }

    /// `mask + τ` for the cell `τ`.
    #[inline]
    pub fn translate(&self, mask: u64, shift: u32) -> u64 {
        let p = self.p;
        let (a, b) = (shift % p, shift / p);
        let m = if a == 0 {
            mask
        } else {
            let keep = self.columns_below[(p - a) as usize];
            ((mask & keep) << a) | ((mask & !keep) >> (p - a))
        };
        if b == 0 {
            m
        } else {
            ((m << (p * b)) & self.full) | (m >> (p * (p - b)))
        }
    }

    #[inline]
    fn sub_cells(&self, u: u32, v: u32) -> u32 {
        u32::from(self.difference[(u * self.cells + v) as usize])
    }

    /// Nonzero frequencies where the transform of `mask` vanishes, and how
    /// many direction classes they form.
    #[inline]
    pub fn zero_set(&self, mask: u64) -> (u64, u32) {
        let k = mask.count_ones();
        if !k.is_multiple_of(self.p) {
            // p equal level counts cannot sum to k
            return (0, 0);
        }
        let per_level = k / self.p;
        let mut zs = 0u64;
        let mut classes = 0;
        for (lv, &line) in self.levels.iter().zip(&self.lines) {
            if lv.iter().all(|&l| (mask & l).count_ones() == per_level) {
                zs |= line;
                classes += 1;
            }
        }
        (zs, classes)
    }

    fn clique(&self, zs: u64, mut cands: u64, need: u32) -> bool {
        if need == 0 {
            return true;
        }
        while cands.count_ones() >= need {
            let v = cands.trailing_zeros();
            cands &= cands - 1;
            let adj = self.translate(zs, v) & zs;
            if self.clique(zs, cands & adj, need - 1) {
                return true;
            }
        }
        false
    }

    /// A spectrum through 0 of size `k` exists iff the zero-difference graph
    /// on the zero set has a `(k-1)`-clique.
    pub fn has_spectrum(&self, zs: u64, k: u32) -> bool {
        k == 1 || (zs != 0 && self.clique(zs, zs, k - 1))
    }

    fn cover(&self, full: u64, translates: &[u64], elems: &[u32], covered: u64) -> bool {
        if covered == full {
            return true;
        }
        let target = (!covered).trailing_zeros();
        elems.iter().any(|&e| {
            let t = translates[self.sub_cells(target, e) as usize];
            t & covered == 0 && self.cover(full, translates, elems, covered | t)
        })
    }

    pub fn tiles(&self, mask: u64) -> bool {
        let k = mask.count_ones();
        if k == 0 || !self.cells.is_multiple_of(k) {
            return false;
        }
        let mut elems = [0u32; 64];
        let mut n = 0;
        let mut rest = mask;
        while rest != 0 {
            elems[n] = rest.trailing_zeros();
            rest &= rest - 1;
            n += 1;
        }
        let mut translates = [0u64; 64];
        for (s, t) in translates.iter_mut().take(self.cells as usize).enumerate() {
            *t = self.translate(mask, s as u32);
        }
        // a complement can be translated to contain 0, so E itself is placed
        self.cover(self.full, &translates, &elems[..n], mask)
    }

    /// Point, full plane, or a `p`-point set missing some direction.
    pub fn structure(&self, mask: u64) -> Structure {
        let k = mask.count_ones();
        if k == 1 {
            return Structure::Point;
        }
        if k == self.cells {
            return Structure::Full;
        }
        if k != self.p {
            return Structure::None;
        }
        let mut elems = [0u32; 8];
        let mut rest = mask;
        for slot in elems.iter_mut().take(k as usize) {
            *slot = rest.trailing_zeros();
            rest &= rest - 1;
        }
        let all_classes = (1u32 << (self.p + 1)) - 1;
        let mut seen = 0u32;
        for i in 0..k as usize {
            for j in i + 1..k as usize {
                seen |= 1 << self.class_of[self.sub_cells(elems[j], elems[i]) as usize];
            }
            if seen == all_classes {
                return Structure::None;
            }
        }
        Structure::Graph
    }

    /// With `prune`, sizes other than `1`, `p` and `p^2` are declared
    /// non-spectral without a search.
    pub fn classify(&self, mask: u64, prune: bool) -> Verdict {
        let k = mask.count_ones();
        let (zs, zero_classes) = self.zero_set(mask);
        let trivial_size = k == 1 || k == self.p || k == self.cells;
        let pruned = prune && !trivial_size;
        let spectral = !pruned && self.has_spectrum(zs, k);
        Verdict { size: k, spectral, tiles: self.tiles(mask), structure: self.structure(mask), pruned, zero_classes }
    }
}
