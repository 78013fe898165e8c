//! Direction sets and graph presentations in the plane.
//!
//! Two nonzero vectors point in the same direction when one is a unit
//! multiple of the other. The direction set of `E` is the set of classes of
//! its nonzero differences. A plane set that misses some direction `u` meets
//! every line parallel to `u` at most once, and is therefore the graph of a
//! function over any axis complementary to `u`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Residue;
use crate::space::{direction_representatives, normalize_direction, Ambient, PointSet, Vector};

/// A direction, represented by its scaling with first nonzero coordinate 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectionClass {
    representative: Vector,
}

impl DirectionClass {
    /// The class of a nonzero vector.
    pub fn of(ambient: &Ambient, v: &Vector) -> Option<Self> {
        normalize_direction(ambient, v).map(|representative| DirectionClass { representative })
    }

    pub fn representative(&self) -> &Vector {
        &self.representative
    }
}

impl fmt::Display for DirectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DirectionSet {
    classes: BTreeSet<DirectionClass>,
}

impl DirectionSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn contains(&self, class: &DirectionClass) -> bool {
        self.classes.contains(class)
    }

    pub fn iter(&self) -> impl Iterator<Item = &DirectionClass> {
        self.classes.iter()
    }
}

/// Classes of the nonzero differences `x - y`, `x, y ∈ E`.
pub fn direction_set(set: &PointSet) -> Result<DirectionSet> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let a = set.ambient();
    let points: Vec<Vector> = set.vectors().collect();
    let mut classes = BTreeSet::new();
    for (i, x) in points.iter().enumerate() {
        for y in &points[i + 1..] {
            classes.insert(DirectionClass::of(a, &a.sub(x, y)).expect("distinct points"));
        }
    }
    Ok(DirectionSet { classes })
}

/// All `(p^d - 1)/(p - 1)` directions of the ambient.
pub fn all_directions(ambient: &Ambient) -> DirectionSet {
    DirectionSet {
        classes: direction_representatives(ambient)
            .into_iter()
            .map(|representative| DirectionClass { representative })
            .collect(),
    }
}

pub fn determines_all_directions(set: &PointSet) -> Result<bool> {
    Ok(direction_set(set)? == all_directions(set.ambient()))
}

/// Directions not determined by `set`, in ascending order.
pub fn missing_directions(set: &PointSet) -> Result<Vec<DirectionClass>> {
    let present = direction_set(set)?;
    Ok(all_directions(set.ambient()).classes.into_iter().filter(|c| !present.contains(c)).collect())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisKind {
    /// `e1·e2 = 0`, `e1·e1 ≠ 0`.
    Orthogonal,
    /// `e1·e1 = e2·e2 = 0`, `e1·e2 = 1`: the hyperbolic plane.
    Isotropic,
}

/// `E = { x e1 + f(x) e2 : x ∈ S }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphPresentation {
    ambient: Ambient,
    e1: Vector,
    e2: Vector,
    kind: AxisKind,
    values: BTreeMap<Residue, Residue>,
}

impl GraphPresentation {
    /// Checks every structural invariant before accepting the data.
    pub fn new(
        ambient: Ambient,
        e1: Vector,
        e2: Vector,
        kind: AxisKind,
        values: BTreeMap<Residue, Residue>,
    ) -> Result<Self> {
        let g = GraphPresentation { ambient, e1, e2, kind, values };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let a = &self.ambient;
        if a.dim() != 2 {
            return Err(Error::UnsupportedDimension(a.dim()));
        }
        for v in [&self.e1, &self.e2] {
            if v.dim() != 2 || v.coords().iter().any(|&c| c >= a.p()) {
                return Err(Error::InvalidPresentation("basis vector outside the plane"));
            }
        }
        let p = a.modulus();
        let (x1, y1) = (self.e1.coords()[0], self.e1.coords()[1]);
        let (x2, y2) = (self.e2.coords()[0], self.e2.coords()[1]);
        if p.sub(p.mul(x1, y2), p.mul(y1, x2)) == 0 {
            return Err(Error::InvalidPresentation("e1 and e2 are linearly dependent"));
        }
        let dot = |u: &Vector, v: &Vector| a.dot_unchecked(u, v);
        match self.kind {
            AxisKind::Orthogonal => {
                if dot(&self.e1, &self.e2) != 0 || dot(&self.e1, &self.e1) == 0 {
                    return Err(Error::InvalidPresentation("orthogonal kind needs e1·e2 = 0 and e1·e1 ≠ 0"));
                }
            }
            AxisKind::Isotropic => {
                if dot(&self.e1, &self.e1) != 0 || dot(&self.e2, &self.e2) != 0 || dot(&self.e1, &self.e2) != 1 {
                    return Err(Error::InvalidPresentation("isotropic kind needs e1·e1 = e2·e2 = 0 and e1·e2 = 1"));
                }
            }
        }
        if self.values.iter().any(|(&x, &y)| x >= a.p() || y >= a.p()) {
            return Err(Error::InvalidPresentation("function value outside Z_p"));
        }
        Ok(())
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn e1(&self) -> &Vector {
        &self.e1
    }

    pub fn e2(&self) -> &Vector {
        &self.e2
    }

    pub fn kind(&self) -> AxisKind {
        self.kind
    }

    pub fn values(&self) -> &BTreeMap<Residue, Residue> {
        &self.values
    }

    pub fn support(&self) -> impl Iterator<Item = Residue> + '_ {
        self.values.keys().copied()
    }

    /// Whether `f` is defined on all of Z_p.
    pub fn has_full_support(&self) -> bool {
        self.values.len() == self.ambient.p() as usize
    }

    pub fn point(&self, x: Residue, y: Residue) -> Vector {
        let a = &self.ambient;
        a.add(&a.scale(x, &self.e1), &a.scale(y, &self.e2))
    }

    pub fn presented_set(&self) -> PointSet {
        let pts: Vec<Vector> = self.values.iter().map(|(&x, &y)| self.point(x, y)).collect();
        PointSet::from_vectors(self.ambient, &pts).expect("points of the same plane")
    }

    /// The fiber direction, i.e. the class of `e2`.
    pub fn fiber_direction(&self) -> DirectionClass {
        DirectionClass::of(&self.ambient, &self.e2).expect("e2 is nonzero")
    }

    /// The normal `m` of the fibers: `x·m` is constant along every line
    /// parallel to `e2`.
    pub fn fiber_normal(&self) -> Vector {
        let p = self.ambient.modulus();
        let (a, b) = (self.e2.coords()[0], self.e2.coords()[1]);
        normalize_direction(&self.ambient, &Vector(vec![p.neg(b), a])).expect("e2 is nonzero")
    }
}

/// Basis adapted to fibers along `u`: orthogonal when `u·u ≠ 0`, otherwise
/// the pair of isotropic lines scaled so `e1·e2 = 1`. `None` when neither
/// exists (only the isotropic direction of Z_2^2).
fn adapted_basis(a: &Ambient, u: &Vector) -> Option<(Vector, Vector, AxisKind)> {
    let p = a.modulus();
    let (x, y) = (u.coords()[0], u.coords()[1]);
    if a.dot_unchecked(u, u) != 0 {
        let e1 = normalize_direction(a, &Vector(vec![p.neg(y), x]))?;
        return Some((e1, u.clone(), AxisKind::Orthogonal));
    }
    // u = (1, i) with i² = -1; the other isotropic line is spanned by (1, -i)
    let e1 = Vector(vec![x, p.neg(y)]);
    let pairing = a.dot_unchecked(&e1, u);
    if pairing == 0 {
        return None;
    }
    let e2 = a.scale(p.inv(pairing)?, u);
    Some((e1, e2, AxisKind::Isotropic))
}

/// Presents `set` as a graph with fibers along `fiber`, if `set` does not
/// determine that direction.
pub fn graph_presentation_along(set: &PointSet, fiber: &DirectionClass) -> Result<Option<GraphPresentation>> {
    let a = *set.ambient();
    if a.dim() != 2 {
        return Err(Error::UnsupportedDimension(a.dim()));
    }
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let Some((e1, e2, kind)) = adapted_basis(&a, fiber.representative()) else {
        return Ok(None);
    };
    let p = a.modulus();
    let (x1, y1, x2, y2) = (e1.coords()[0], e1.coords()[1], e2.coords()[0], e2.coords()[1]);
    let det_inv = p.inv(p.sub(p.mul(x1, y2), p.mul(y1, x2))).expect("independent basis");
    let mut values = BTreeMap::new();
    for v in set.vectors() {
        let (vx, vy) = (v.coords()[0], v.coords()[1]);
        // Cramer's rule for v = s e1 + t e2
        let s = p.mul(det_inv, p.sub(p.mul(vx, y2), p.mul(vy, x2)));
        let t = p.mul(det_inv, p.sub(p.mul(x1, vy), p.mul(y1, vx)));
        if values.insert(s, t).is_some() {
            return Ok(None);
        }
    }
    let g = GraphPresentation { ambient: a, e1, e2, kind, values };
    debug_assert!(g.validate().is_ok());
    debug_assert_eq!(&g.presented_set(), set);
    Ok(Some(g))
}

/// Graph presentation over the least missing direction that admits an
/// adapted basis; `None` when `set` determines every such direction.
pub fn graph_presentation(set: &PointSet) -> Result<Option<GraphPresentation>> {
    let a = set.ambient();
    if a.dim() != 2 {
        return Err(Error::UnsupportedDimension(a.dim()));
    }
    for fiber in missing_directions(set)? {
        if let Some(g) = graph_presentation_along(set, &fiber)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}
