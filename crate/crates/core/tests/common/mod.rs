//! Brute-force references, written against coordinates and floating-point
//! sums only. None of the library's decision code is used here.

#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;

use fpf_core::{Ambient, PointSet};

pub const NUMERIC_ZERO: f64 = 1e-7;

pub fn coords(a: &Ambient, cell: u64) -> Vec<u64> {
    let p = u64::from(a.p());
    let mut c = cell;
    (0..a.dim())
        .map(|_| {
            let r = c % p;
            c /= p;
            r
        })
        .collect()
}

pub fn cell(a: &Ambient, xs: &[u64]) -> u64 {
    let p = u64::from(a.p());
    xs.iter().rev().fold(0, |acc, &x| acc * p + x % p)
}

pub fn dot(a: &Ambient, x: &[u64], y: &[u64]) -> u64 {
    x.iter().zip(y).map(|(u, v)| u * v).sum::<u64>() % u64::from(a.p())
}

pub fn add(a: &Ambient, x: u64, y: u64) -> u64 {
    let (x, y) = (coords(a, x), coords(a, y));
    let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| u + v).collect();
    cell(a, &s)
}

pub fn sub(a: &Ambient, x: u64, y: u64) -> u64 {
    let p = u64::from(a.p());
    let (x, y) = (coords(a, x), coords(a, y));
    let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| u + p - v).collect();
    cell(a, &s)
}

/// `Σ_{x∈E} e^{-2πi x·m/p}` in floating point.
pub fn dft(set: &PointSet, m: u64) -> Complex64 {
    let a = set.ambient();
    let mv = coords(a, m);
    let p = f64::from(a.p());
    set.cells()
        .map(|c| {
            let t = dot(a, &coords(a, c), &mv) as f64;
            Complex64::from_polar(1.0, -2.0 * PI * t / p)
        })
        .sum()
}

pub fn numeric_zero(set: &PointSet, m: u64) -> bool {
    dft(set, m).norm() < NUMERIC_ZERO
}

fn clique(adj: &[Vec<bool>], cands: &[usize], need: usize) -> bool {
    if need == 0 {
        return true;
    }
    for (i, &v) in cands.iter().enumerate() {
        let rest: Vec<usize> = cands[i + 1..].iter().copied().filter(|&u| adj[v][u]).collect();
        if rest.len() + 1 >= need && clique(adj, &rest, need - 1) {
            return true;
        }
    }
    false
}

/// Spectral iff some `A ∋ 0` of size `|E|` has all differences at numeric
/// zeros of the transform.
pub fn naive_spectral(set: &PointSet) -> bool {
    let a = set.ambient();
    let k = set.len() as usize;
    if k == 1 {
        return true;
    }
    let zeros: Vec<u64> = (1..a.cells()).filter(|&m| numeric_zero(set, m)).collect();
    let is_zero = |m: u64| m != 0 && zeros.binary_search(&m).is_ok();
    let adj: Vec<Vec<bool>> =
        zeros.iter().map(|&u| zeros.iter().map(|&v| is_zero(sub(a, u, v))).collect()).collect();
    let cands: Vec<usize> = (0..zeros.len()).collect();
    clique(&adj, &cands, k - 1)
}

fn cover(a: &Ambient, tile: &[u64], covered: &mut Vec<bool>) -> bool {
    let Some(target) = covered.iter().position(|&c| !c) else {
        return true;
    };
    for &e in tile {
        let shift = sub(a, target as u64, e);
        let cells: Vec<usize> = tile.iter().map(|&t| add(a, t, shift) as usize).collect();
        if cells.iter().all(|&c| !covered[c]) {
            for &c in &cells {
                covered[c] = true;
            }
            if cover(a, tile, covered) {
                return true;
            }
            for &c in &cells {
                covered[c] = false;
            }
        }
    }
    false
}

pub fn naive_tiles(set: &PointSet) -> bool {
    let a = set.ambient();
    let tile: Vec<u64> = set.cells().collect();
    let mut covered = vec![false; a.cells() as usize];
    cover(a, &tile, &mut covered)
}

/// Normalized direction of the nonzero difference `u`: scaled so the first
/// nonzero coordinate is 1, found by trying every scalar.
pub fn naive_direction(a: &Ambient, u: u64) -> u64 {
    let p = u64::from(a.p());
    let x = coords(a, u);
    (1..p)
        .map(|r| x.iter().map(|c| c * r % p).collect::<Vec<u64>>())
        .find(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .map(|v| cell(a, &v))
        .expect("nonzero vector")
}

pub fn naive_directions(set: &PointSet) -> Vec<u64> {
    let a = set.ambient();
    let cells: Vec<u64> = set.cells().collect();
    let mut out: Vec<u64> = cells
        .iter()
        .flat_map(|&x| cells.iter().filter(move |&&y| y != x).map(move |&y| (x, y)))
        .map(|(x, y)| naive_direction(a, sub(a, x, y)))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// A point, the plane, or `p` points missing some direction.
pub fn naive_tile_shape(set: &PointSet) -> bool {
    let a = set.ambient();
    let n = set.len();
    let p = u64::from(a.p());
    n == 1 || n == a.cells() || (n == p && (naive_directions(set).len() as u64) < p + 1)
}

pub fn random_set<R: Rng>(a: Ambient, rng: &mut R, density: f64) -> PointSet {
    loop {
        let s = PointSet::from_cells(a, (0..a.cells()).filter(|_| rng.gen_bool(density))).unwrap();
        if !s.is_empty() {
            return s;
        }
    }
}

pub fn random_sized_set<R: Rng>(a: Ambient, rng: &mut R, k: u64) -> PointSet {
    let cells = rand::seq::index::sample(rng, a.cells() as usize, k as usize);
    PointSet::from_cells(a, cells.into_iter().map(|c| c as u64)).unwrap()
}

/// A set with exactly `per_level` points on each hyperplane `x·m = t`.
pub fn balanced_set<R: Rng>(a: Ambient, rng: &mut R, m: u64, per_level: usize) -> PointSet {
    let mv = coords(&a, m);
    let mut levels = vec![Vec::new(); a.p() as usize];
    for c in 0..a.cells() {
        levels[dot(&a, &coords(&a, c), &mv) as usize].push(c);
    }
    let mut chosen = Vec::new();
    for level in &levels {
        let pick = rand::seq::index::sample(rng, level.len(), per_level.min(level.len()));
        chosen.extend(pick.into_iter().map(|i| level[i]));
    }
    PointSet::from_cells(a, chosen).unwrap()
}

/// Graph `{(x, f(x))}` of a random function, through the origin.
pub fn random_graph<R: Rng>(a: Ambient, rng: &mut R) -> PointSet {
    let p = u64::from(a.p());
    let f: Vec<u64> = std::iter::once(0).chain((1..p).map(|_| rng.gen_range(0..p))).collect();
    PointSet::from_cells(a, (0..p).map(|x| cell(&a, &[x, f[x as usize]]))).unwrap()
}
