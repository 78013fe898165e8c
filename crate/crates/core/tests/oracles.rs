//! Library and campaign kernel against brute-force references.

mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use fpf_core::directions::{direction_set, graph_presentation};
use fpf_core::fourier::{convolve_indicator, evaluate_complex, fourier_coefficient, zero_set};
use fpf_core::spectra::{find_spectrum, is_spectral, is_spectral_pair};
use fpf_core::tiling::{find_tiling_complement, is_tiling_pair, tiles};
use fpf_core::verifier::{PlaneKernel, Structure};
use fpf_core::{Ambient, PointSet};

fn plane(p: u64) -> Ambient {
    Ambient::of(p, 2).unwrap()
}

fn library_shape(set: &PointSet) -> bool {
    let a = set.ambient();
    let n = set.len();
    n == 1
        || n == a.cells()
        || (n == u64::from(a.p()) && graph_presentation(set).unwrap().is_some_and(|g| g.has_full_support()))
}

#[test]
fn every_set_in_small_planes_matches_brute_force() {
    for p in [2, 3] {
        let a = plane(p);
        let kernel = PlaneKernel::new(&a).unwrap();
        let (mut spectral, mut tiling) = (0, 0);
        for mask in 1u64..1 << a.cells() {
            let set = PointSet::from_mask(a, mask).unwrap();
            let naive_s = naive_spectral(&set);
            let naive_t = naive_tiles(&set);
            assert_eq!(is_spectral(&set).unwrap(), naive_s, "{set}");
            assert_eq!(tiles(&set).unwrap(), naive_t, "{set}");
            assert_eq!(library_shape(&set), naive_tile_shape(&set), "{set}");
            for prune in [false, true] {
                let v = kernel.classify(mask, prune);
                assert_eq!(v.spectral, naive_s, "{set}");
                assert_eq!(v.tiles, naive_t, "{set}");
                assert_eq!(v.structure.is_tile_shape(), naive_tile_shape(&set), "{set}");
            }
            spectral += u64::from(naive_s);
            tiling += u64::from(naive_t);
        }
        // points + p-point sets missing a direction + the plane
        let expected = match p {
            // every 2-subset of Z_2^2 misses two of the three directions
            2 => 4 + 6 + 1,
            // every 3-subset has at most 3 difference directions of 4
            3 => 9 + 84 + 1,
            _ => unreachable!(),
        };
        assert_eq!((spectral, tiling), (expected, expected));
    }
}

#[test]
fn kernel_matches_brute_force_on_random_p5_sets() {
    let a = plane(5);
    let kernel = PlaneKernel::new(&a).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for i in 0..10_000 {
        // uniform sets are almost never 5 points, so mix in sized draws
        let set = match i % 4 {
            0 => random_sized_set(a, &mut rng, 5),
            1 => random_graph(a, &mut rng),
            2 => random_sized_set(a, &mut rng, [10, 15, 20][i % 3]),
            _ => random_set(a, &mut rng, 0.5),
        };
        let mask = set.to_mask().unwrap();
        let v = kernel.classify(mask, false);
        let k = set.len();
        // the unpruned naive clique search only pays off where zeros exist
        if k % 5 == 0 || k == 1 {
            assert_eq!(v.spectral, naive_spectral(&set), "{set}");
        } else {
            assert!((1..a.cells()).all(|m| !numeric_zero(&set, m)), "{set}");
            assert!(!v.spectral);
        }
        assert_eq!(v.tiles, naive_tiles(&set), "{set}");
        assert_eq!(v.structure.is_tile_shape(), naive_tile_shape(&set), "{set}");
    }
}

#[test]
fn kernel_matches_library_on_random_p7_sets() {
    let a = plane(7);
    let kernel = PlaneKernel::new(&a).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for i in 0..1500 {
        let set = if i % 2 == 0 { random_sized_set(a, &mut rng, 7) } else { random_graph(a, &mut rng) };
        let v = kernel.classify(set.to_mask().unwrap(), false);
        assert_eq!(v.spectral, is_spectral(&set).unwrap(), "{set}");
        assert_eq!(v.tiles, tiles(&set).unwrap(), "{set}");
        assert_eq!(v.structure == Structure::Graph, library_shape(&set), "{set}");
        let zs = zero_set(&set).unwrap();
        assert_eq!(kernel.zero_set(set.to_mask().unwrap()).0, zs.as_set().to_mask().unwrap());
    }
}

#[test]
fn witnesses_verify_against_brute_force_definitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for p in [3, 5, 7] {
        let a = plane(p);
        for _ in 0..50 {
            let set = random_graph(a, &mut rng);
            let spec = find_spectrum(&set).unwrap().expect("graphs are spectral");
            assert!(is_spectral_pair(&set, &spec).unwrap());
            let freqs: Vec<u64> = spec.cells().collect();
            for (i, &u) in freqs.iter().enumerate() {
                for &v in &freqs[i + 1..] {
                    assert!(numeric_zero(&set, sub(&a, u, v)));
                }
            }
            let t = find_tiling_complement(&set).unwrap().expect("graphs tile");
            assert!(is_tiling_pair(&set, &t).unwrap());
            let mut hits = vec![0u32; a.cells() as usize];
            for e in set.cells() {
                for s in t.cells() {
                    hits[add(&a, e, s) as usize] += 1;
                }
            }
            assert!(hits.iter().all(|&h| h == 1));
        }
    }
}

#[test]
fn exact_coefficients_match_floating_point_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (p, d) in [(2, 3), (3, 1), (3, 3), (5, 2), (7, 2), (11, 1), (13, 2)] {
        let a = Ambient::of(p, d).unwrap();
        for _ in 0..40 {
            let set = random_set(a, &mut rng, 0.4);
            for m in 0..a.cells().min(60) {
                let exact = fourier_coefficient(&set, &a.from_index(m)).unwrap();
                let z = evaluate_complex(&exact);
                let naive = dft(&set, m);
                assert!((z - naive).norm() < 1e-8, "p={p} d={d} m={m}");
                assert_eq!(exact.is_zero(), naive.norm() < NUMERIC_ZERO);
            }
        }
    }
}

#[test]
fn convolution_counts_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (p, d) in [(3, 2), (5, 1), (2, 4)] {
        let a = Ambient::of(p, d).unwrap();
        for _ in 0..20 {
            let e = random_set(a, &mut rng, 0.3);
            let t = random_set(a, &mut rng, 0.3);
            let conv = convolve_indicator(&e, &t).unwrap();
            let mut naive = vec![0u64; a.cells() as usize];
            for x in e.cells() {
                for y in t.cells() {
                    naive[add(&a, x, y) as usize] += 1;
                }
            }
            assert_eq!(conv, naive);
        }
    }
}

#[test]
fn direction_sets_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for (p, d) in [(3, 2), (5, 2), (3, 3), (7, 1)] {
        let a = Ambient::of(p, d).unwrap();
        for _ in 0..50 {
            let set = random_set(a, &mut rng, 0.15);
            if set.len() < 2 {
                continue;
            }
            let lib: Vec<u64> = direction_set(&set).unwrap().iter().map(|c| a.index(c.representative())).collect();
            let mut lib = lib;
            lib.sort_unstable();
            assert_eq!(lib, naive_directions(&set));
        }
    }
}
