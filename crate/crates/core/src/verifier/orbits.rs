//! Affine orbits among the spectral sets found by a campaign.

use std::collections::BTreeMap;

use super::report::OrbitStats;
use crate::space::{Ambient, Vector};

/// Cell permutations generating the affine group of the plane: the two
/// unit translations, a transvection, the coordinate swap, and scaling
/// the first coordinate by a primitive root.
fn generators(ambient: &Ambient) -> Vec<Vec<u8>> {
    let p = ambient.modulus();
    let g = p.primitive_root();
    let maps: [&dyn Fn(u32, u32) -> (u32, u32); 5] = [
        &|x, y| (p.add(x, 1), y),
        &|x, y| (x, p.add(y, 1)),
        &|x, y| (p.add(x, y), y),
        &|x, y| (y, x),
        &|x, y| (p.mul(g, x), y),
    ];
    maps.iter()
        .map(|f| {
            ambient
                .vectors()
                .map(|v| {
                    let (x, y) = f(v.0[0], v.0[1]);
                    ambient.index(&Vector(vec![x, y])) as u8
                })
                .collect()
        })
        .collect()
}

fn image(perm: &[u8], mut mask: u64) -> u64 {
    let mut out = 0;
    while mask != 0 {
        out |= 1 << perm[mask.trailing_zeros() as usize];
        mask &= mask - 1;
    }
    out
}

fn find(parent: &mut [u32], mut i: u32) -> u32 {
    while parent[i as usize] != i {
        let up = parent[parent[i as usize] as usize];
        parent[i as usize] = up;
        i = up;
    }
    i
}

/// `sorted` must be sorted and duplicate-free.
pub(crate) fn orbit_stats(ambient: &Ambient, sorted: &[u64]) -> OrbitStats {
    let gens = generators(ambient);
    let mut parent: Vec<u32> = (0..sorted.len() as u32).collect();
    let mut invariance_failures = 0;
    for (i, &mask) in sorted.iter().enumerate() {
        for perm in &gens {
            match sorted.binary_search(&image(perm, mask)) {
                Ok(j) => {
                    let (a, b) = (find(&mut parent, i as u32), find(&mut parent, j as u32));
                    if a != b {
                        parent[a.max(b) as usize] = a.min(b);
                    }
                }
                Err(_) => invariance_failures += 1,
            }
        }
    }
    let mut spectral_orbits = BTreeMap::new();
    for (i, &mask) in sorted.iter().enumerate() {
        if find(&mut parent, i as u32) == i as u32 {
            *spectral_orbits.entry(mask.count_ones()).or_insert(0) += 1;
        }
    }
    OrbitStats { spectral_orbits, invariance_failures }
}
