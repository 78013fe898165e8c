//! Invariants over generated inputs.

mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fpf_core::affine::AffineMap;
use fpf_core::cyclotomic::CyclotomicValue;
use fpf_core::enumerate::{binomial, next_combination, rank_combination, unrank_combination};
use fpf_core::field::{evaluate_polynomial, interpolate};
use fpf_core::fourier::{fourier_coefficient, hyperplane_profile, is_zero_coefficient, zero_set};
use fpf_core::setfile::{format_pair, format_set, parse_pair, parse_set};
use fpf_core::spectra::{find_spectrum, is_spectral, is_spectral_pair};
use fpf_core::tiling::{find_tiling_complement, is_tiling_pair, tiles};
use fpf_core::verifier::{partition_work, PlaneKernel};
use fpf_core::{Ambient, PointSet, PrimeModulus};

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn ambient_strategy() -> impl Strategy<Value = Ambient> {
    (prop::sample::select(&PRIMES[..]), 1usize..=3).prop_map(|(p, d)| Ambient::of(p, d).unwrap())
}

/// A nonempty set with its ambient, drawn by density.
fn set_strategy() -> impl Strategy<Value = PointSet> {
    (ambient_strategy(), any::<u64>(), 0.05f64..0.9).prop_map(|(a, seed, density)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        common::random_set(a, &mut rng, density)
    })
}

fn small_plane_set() -> impl Strategy<Value = PointSet> {
    (prop::sample::select(vec![3u64, 5]), any::<u64>(), 0.1f64..0.5).prop_map(|(p, seed, density)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = Ambient::of(p, 2).unwrap();
        if seed % 2 == 0 {
            common::random_graph(a, &mut rng)
        } else {
            common::random_set(a, &mut rng, density)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_inverse_and_pow(p in prop::sample::select(&PRIMES[..]), x in 1u32..1000) {
        let f = PrimeModulus::new(p).unwrap();
        let x = f.reduce(u64::from(x));
        prop_assume!(x != 0);
        prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
        prop_assert_eq!(f.pow(x, p - 1), 1);
    }

    #[test]
    fn interpolation_round_trips(p in prop::sample::select(vec![3u64, 5, 7, 11]), seed: u64) {
        let f = PrimeModulus::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values: BTreeMap<u32, u32> = (0..f.get()).map(|x| (x, rand::Rng::gen_range(&mut rng, 0..f.get()))).collect();
        let coeffs = interpolate(f, &values).unwrap();
        prop_assert!(coeffs.len() <= p as usize);
        for (&x, &y) in &values {
            prop_assert_eq!(evaluate_polynomial(f, &coeffs, x), y);
        }
    }

    #[test]
    fn cyclotomic_ring_matches_complex_evaluation(
        p in prop::sample::select(vec![3u64, 5, 7, 13]),
        a in prop::collection::vec(-20i64..20, 13),
        b in prop::collection::vec(-20i64..20, 13),
    ) {
        let f = PrimeModulus::new(p).unwrap();
        let n = p as usize;
        let x = CyclotomicValue::from_raw(f, a[..n].to_vec());
        let y = CyclotomicValue::from_raw(f, b[..n].to_vec());
        let close = |u: &CyclotomicValue, z: num_complex::Complex64| (u.evaluate_complex() - z).norm() < 1e-6;
        prop_assert!(close(&(&x + &y), x.evaluate_complex() + y.evaluate_complex()));
        prop_assert!(close(&(&x * &y), x.evaluate_complex() * y.evaluate_complex()));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x - &x).is_zero());
        // adding a multiple of 1 + ξ + ... + ξ^{p-1} does not change the value
        let shifted: Vec<i64> = a[..n].iter().map(|c| c + 7).collect();
        prop_assert_eq!(CyclotomicValue::from_raw(f, shifted), x.clone());
        prop_assert_eq!(x.is_zero(), x.evaluate_complex().norm() < 1e-9);
    }

    #[test]
    fn zero_iff_equidistributed(set in set_strategy(), m_seed: u64, r_seed: u64) {
        let a = *set.ambient();
        let m = a.from_index(1 + m_seed % (a.cells() - 1));
        let prof = hyperplane_profile(&set, &m).unwrap();
        prop_assert_eq!(prof.total(), set.len());
        let zero = is_zero_coefficient(&set, &m).unwrap();
        prop_assert_eq!(zero, prof.is_constant());
        prop_assert_eq!(fourier_coefficient(&set, &m).unwrap().is_zero(), zero);
        let r = 1 + (r_seed % u64::from(a.p() - 1)) as u32;
        prop_assert_eq!(is_zero_coefficient(&set, &a.scale(r, &m)).unwrap(), zero);
    }

    #[test]
    fn transform_is_translation_covariant(set in set_strategy(), shift: u64, m_seed: u64) {
        let a = *set.ambient();
        let t = set.translate(&a.from_index(shift % a.cells()));
        let m = a.from_index(m_seed % a.cells());
        let before = fourier_coefficient(&set, &m).unwrap().evaluate_complex().norm();
        let after = fourier_coefficient(&t, &m).unwrap().evaluate_complex().norm();
        prop_assert!((before - after).abs() < 1e-9);
        let (zs, zt) = (zero_set(&set).unwrap(), zero_set(&t).unwrap());
        prop_assert_eq!(zs.as_set(), zt.as_set());
    }

    #[test]
    fn spectral_pairs_and_tilings_follow_affine_maps(set in small_plane_set(), seed: u64) {
        let a = *set.ambient();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = AffineMap::random(a, &mut rng);
        let image = phi.apply_set(&set).unwrap();
        prop_assert_eq!(is_spectral(&set).unwrap(), is_spectral(&image).unwrap());
        prop_assert_eq!(tiles(&set).unwrap(), tiles(&image).unwrap());
        if let Some(spec) = find_spectrum(&set).unwrap() {
            let dual = phi.dual(a.zero()).apply_set(&spec).unwrap();
            prop_assert!(is_spectral_pair(&image, &dual).unwrap());
        }
        if let Some(t) = find_tiling_complement(&set).unwrap() {
            let linear = AffineMap::new(a, phi.matrix().to_vec(), a.zero()).unwrap();
            prop_assert!(is_tiling_pair(&image, &linear.apply_set(&t).unwrap()).unwrap());
        }
    }

    #[test]
    fn kernel_translation_matches_library(set in small_plane_set(), shift: u64) {
        let a = *set.ambient();
        let k = PlaneKernel::new(&a).unwrap();
        let s = shift % a.cells();
        let lib = set.translate(&a.from_index(s)).to_mask().unwrap();
        prop_assert_eq!(k.translate(set.to_mask().unwrap(), s as u32), lib);
    }

    #[test]
    fn combination_ranks_round_trip(n in 1u64..40, k_seed: u32, r_seed: u64) {
        let k = k_seed % (n as u32 + 1);
        let total = binomial(n, u64::from(k));
        let r = r_seed % total;
        let mask = unrank_combination(n, k, r);
        prop_assert_eq!(mask.count_ones(), k);
        prop_assert!(mask < 1u64 << n);
        prop_assert_eq!(rank_combination(mask), r);
        if r + 1 < total && k > 0 {
            prop_assert_eq!(next_combination(mask), unrank_combination(n, k, r + 1));
        }
    }

    #[test]
    fn partitions_cover_contiguously(total in 0u64..1_000_000_000, jobs in 1usize..64) {
        let parts = partition_work(total, jobs);
        prop_assert_eq!(parts.len(), jobs);
        prop_assert_eq!(parts[0].start, 0);
        prop_assert_eq!(parts[jobs - 1].end, total);
        for w in parts.windows(2) {
            prop_assert_eq!(w[0].end, w[1].start);
        }
        let lens: Vec<u64> = parts.iter().map(|r| r.end - r.start).collect();
        prop_assert!(lens.iter().max().unwrap() - lens.iter().min().unwrap() <= 1);
    }

    #[test]
    fn set_files_round_trip(set in set_strategy(), other in set_strategy()) {
        prop_assert_eq!(&parse_set(&format_set(&set)).unwrap(), &set);
        if set.ambient() == other.ambient() {
            let (x, y) = parse_pair(&format_pair(&set, &other)).unwrap();
            prop_assert_eq!((&x, &y), (&set, &other));
        }
    }
}
