//! Translational tilings: exact checks, complement search and the plane
//! constructions (hyperplane partners, graph partners, size trichotomy).

use serde::Serialize;

use crate::cyclotomic::CyclotomicValue;
use crate::directions::{graph_presentation, GraphPresentation};
use crate::error::{Error, Result};
use crate::fourier::{convolve_indicator, fourier_coefficient, is_zero_coefficient};
use crate::space::{Ambient, PointSet, Vector};

/// A certified tiling pair: every point is uniquely `e + τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingPair {
    set: PointSet,
    complement: PointSet,
}

impl TilingPair {
    pub fn new(set: PointSet, complement: PointSet) -> Result<Self> {
        if !is_tiling_pair(&set, &complement)? {
            return Err(Error::InvalidTilingPair);
        }
        Ok(TilingPair { set, complement })
    }

    pub fn set(&self) -> &PointSet {
        &self.set
    }

    pub fn complement(&self) -> &PointSet {
        &self.complement
    }
}

/// Why a set was found not to tile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Obstruction {
    /// `|E|` does not divide `p^d`.
    Divisibility { size: u64, cells: u64 },
    /// The exact-cover search ran out of translations.
    SearchExhausted,
}

impl std::fmt::Display for Obstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Obstruction::Divisibility { size, cells } => write!(f, "{size} does not divide {cells}"),
            Obstruction::SearchExhausted => f.write_str("exact-cover search exhausted"),
        }
    }
}

pub fn is_tiling_pair(e: &PointSet, t: &PointSet) -> Result<bool> {
    e.ambient().check_same(t.ambient())?;
    if e.is_empty() || t.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(convolve_indicator(e, t)?.iter().all(|&v| v == 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingSearch {
    pub complement: Option<PointSet>,
    pub obstruction: Option<Obstruction>,
}

struct Cover<'a> {
    ambient: Ambient,
    tile: &'a [u64],
    covered: PointSet,
    chosen: Vec<u64>,
}

impl Cover<'_> {
    fn translate_fits(&self, shift: u64) -> bool {
        self.tile.iter().all(|&c| !self.covered.contains_cell(self.ambient.add_cells(c, shift)))
    }

    fn place(&mut self, shift: u64, on: bool) {
        for &c in self.tile {
            let cell = self.ambient.add_cells(c, shift);
            if on {
                self.covered.insert_cell(cell);
            } else {
                self.covered.remove_cell(cell);
            }
        }
    }

    fn solve(&mut self) -> bool {
        let Some(target) = (0..self.ambient.cells()).find(|&c| !self.covered.contains_cell(c)) else {
            return true;
        };
        let mut shifts: Vec<u64> = self.tile.iter().map(|&e| self.ambient.sub_cells(target, e)).collect();
        shifts.sort_unstable();
        for shift in shifts {
            if self.translate_fits(shift) {
                self.place(shift, true);
                self.chosen.push(shift);
                if self.solve() {
                    return true;
                }
                self.chosen.pop();
                self.place(shift, false);
            }
        }
        false
    }
}

/// Exact-cover search: always cover the least uncovered cell, trying
/// translations in ascending cell order.
pub fn tiling_search(e: &PointSet) -> Result<TilingSearch> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    let a = *e.ambient();
    if !a.cells().is_multiple_of(e.len()) {
        return Ok(TilingSearch {
            complement: None,
            obstruction: Some(Obstruction::Divisibility { size: e.len(), cells: a.cells() }),
        });
    }
    let tile: Vec<u64> = e.cells().collect();
    let mut cover = Cover { ambient: a, tile: &tile, covered: PointSet::empty(a)?, chosen: Vec::new() };
    if cover.solve() {
        let t = PointSet::from_cells(a, cover.chosen.iter().copied())?;
        Ok(TilingSearch { complement: Some(t), obstruction: None })
    } else {
        Ok(TilingSearch { complement: None, obstruction: Some(Obstruction::SearchExhausted) })
    }
}

pub fn find_tiling_complement(e: &PointSet) -> Result<Option<PointSet>> {
    Ok(tiling_search(e)?.complement)
}

pub fn tiles(e: &PointSet) -> Result<bool> {
    Ok(find_tiling_complement(e)?.is_some())
}

/// `{x : x·m = 0}`.
pub fn zero_level(ambient: &Ambient, m: &Vector) -> Result<PointSet> {
    let vs: Vec<Vector> = ambient.vectors().filter(|x| ambient.dot_unchecked(x, m) == 0).collect();
    PointSet::from_vectors(*ambient, &vs)
}

/// For a `p`-point plane set whose transform vanishes at `m`, the zero level
/// of `m` is a tiling partner.
pub fn line_perp_partner(e: &PointSet, m: &Vector) -> Result<TilingPair> {
    let a = *e.ambient();
    if a.dim() != 2 {
        return Err(Error::UnsupportedDimension(a.dim()));
    }
    if e.len() != a.p() as u64 {
        return Err(Error::WrongSize { expected: a.p() as u64, found: e.len() });
    }
    if !is_zero_coefficient(e, m)? {
        return Err(Error::NotAZero);
    }
    let partner = zero_level(&a, m)?;
    let pair = TilingPair::new(e.clone(), partner);
    assert!(pair.is_ok(), "zero level of a vanishing frequency failed to tile:\n{e}");
    pair
}

/// The fiber line `{t e2}` tiles with any full-support graph.
pub fn graph_partner(g: &GraphPresentation) -> Result<TilingPair> {
    g.validate()?;
    if !g.has_full_support() {
        return Err(Error::InvalidPresentation("graph partner needs f defined on all of Z_p"));
    }
    let a = *g.ambient();
    let line: Vec<Vector> = (0..a.p()).map(|t| a.scale(t, g.e2())).collect();
    let partner = PointSet::from_vectors(a, &line)?;
    let pair = TilingPair::new(g.presented_set(), partner);
    assert!(pair.is_ok(), "fiber line failed to tile a full graph");
    pair
}

/// Shape of a plane set with respect to translational tiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TileShape {
    Point,
    Graph(GraphPresentation),
    Full,
    NotATile(Obstruction),
    /// A tile outside the point/graph/full trichotomy. Never expected.
    Unexplained { size: u64 },
}

pub fn tileshot_classify(e: &PointSet) -> Result<TileShape> {
    let a = *e.ambient();
    if a.dim() != 2 {
        return Err(Error::UnsupportedDimension(a.dim()));
    }
    let search = tiling_search(e)?;
    if let Some(obstruction) = search.obstruction {
        return Ok(TileShape::NotATile(obstruction));
    }
    let n = e.len();
    let p = a.p() as u64;
    Ok(if n == 1 {
        TileShape::Point
    } else if n == a.cells() {
        TileShape::Full
    } else if n == p {
        match graph_presentation(e)? {
            Some(g) if g.has_full_support() => TileShape::Graph(g),
            _ => TileShape::Unexplained { size: n },
        }
    } else {
        TileShape::Unexplained { size: n }
    })
}

/// Tiling through the transform: `|E||T| = p^d` and `Ê(m) T̂(m) = 0` for
/// every nonzero `m`, with the products computed exactly.
pub fn fourier_tiling_criterion(e: &PointSet, t: &PointSet) -> Result<bool> {
    e.ambient().check_same(t.ambient())?;
    let a = *e.ambient();
    if e.len() * t.len() != a.cells() {
        return Ok(false);
    }
    for m in a.vectors().filter(|m| !m.is_zero()) {
        let prod = &fourier_coefficient(e, &m)? * &fourier_coefficient(t, &m)?;
        if !prod.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact check, for the line `L` spanned by `m` in the plane, that the
/// normalized transform of `L^⊥ = {x : x·m = 0}` equals `p^{-1} 1_L`. In
/// unnormalized form this is `Σ_{x∈L^⊥} χ(-x·s) = p · 1_L(s)` for all `s`.
pub fn perp_line_transform_identity(ambient: &Ambient, m: &Vector) -> Result<bool> {
    if ambient.dim() != 2 {
        return Err(Error::UnsupportedDimension(ambient.dim()));
    }
    if m.is_zero() {
        return Err(Error::ZeroFrequency);
    }
    let perp = zero_level(ambient, m)?;
    let line_pts: Vec<Vector> = (0..ambient.p()).map(|t| ambient.scale(t, m)).collect();
    let line = PointSet::from_vectors(*ambient, &line_pts)?;
    let p = ambient.modulus();
    for s in ambient.vectors() {
        let lhs = fourier_coefficient(&perp, &s)?;
        let rhs = CyclotomicValue::constant(p, p.get() as i64 * line.contains(&s) as i64);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
