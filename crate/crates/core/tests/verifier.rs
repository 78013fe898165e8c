mod common;

use std::time::Duration;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fpf_core::affine::AffineMap;
use fpf_core::setfile::format_pair;
use fpf_core::tiling::Obstruction;
use fpf_core::verifier::{
    certify_pair, check_pair, check_pair_text, search_z35, verify_fuglede, CampaignConfig, CampaignMode, PlaneKernel,
    ViolationKind,
};
use fpf_core::{Ambient, PointSet, PrimeModulus};

fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn config(p: u64, mode: CampaignMode) -> CampaignConfig {
    CampaignConfig::new(PrimeModulus::new(p).unwrap(), mode)
}

#[test]
fn p3_exhaustive_tallies() {
    let r = verify_fuglede(&config(3, CampaignMode::Exhaustive)).unwrap().report;
    assert_eq!(r.examined, 511);
    assert!(r.is_clean());
    assert!(r.cross_equalities_hold());
    assert_eq!(r.sizes[&1].spectral, 9);
    assert_eq!(r.sizes[&3].graph, 84);
    assert_eq!(r.sizes[&9].full, 1);
    assert_eq!(r.totals.spectral, 94);
    let orbits = r.orbits.as_ref().unwrap();
    assert_eq!(orbits.invariance_failures, 0);
    // three collinear points, or three in general position
    assert_eq!(orbits.spectral_orbits[&3], 2);
}

#[test]
fn audit_and_pruned_campaigns_agree_set_for_set() {
    let a = Ambient::of(3, 2).unwrap();
    let k = PlaneKernel::new(&a).unwrap();
    for mask in 1u64..512 {
        let (pruned, audited) = (k.classify(mask, true), k.classify(mask, false));
        assert_eq!(pruned.spectral, audited.spectral, "mask {mask:#b}");
        assert!(!audited.pruned);
    }
    let audit = verify_fuglede(&config(3, CampaignMode::Exhaustive).with_audit(true)).unwrap().report;
    let pruned = verify_fuglede(&config(3, CampaignMode::Exhaustive)).unwrap().report;
    assert_eq!(audit.totals.pruned, 0);
    assert!(pruned.totals.pruned > 0);
    assert!(audit.is_clean());
    for (size, t) in &audit.sizes {
        assert_eq!(t.spectral, pruned.sizes[size].spectral);
    }
}

#[test]
fn size_restricted_campaign_counts_match_exhaustive() {
    let full = verify_fuglede(&config(5, CampaignMode::Exhaustive)).unwrap().report;
    let five = verify_fuglede(&config(5, CampaignMode::Size { k: 5 }).with_jobs(3)).unwrap().report;
    assert_eq!(five.sizes.len(), 1);
    assert_eq!(five.sizes[&5], full.sizes[&5]);
    assert_eq!(five.examined, 53_130);
}

#[test]
fn json_is_sorted_and_stable() {
    let c = config(3, CampaignMode::Exhaustive);
    let a = verify_fuglede(&c.with_jobs(1)).unwrap().report.to_json();
    let b = verify_fuglede(&c.with_jobs(5)).unwrap().report.to_json();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(v["examined"], 511);
    assert!(v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn z35_fixture_certifies() {
    let cert = check_pair(fixture("z35_pair.txt")).unwrap();
    assert!(cert.spectral_pair);
    assert!(!cert.tiling_pair);
    assert_eq!(cert.set_tiles, Some(false));
    assert_eq!(cert.obstruction, Some(Obstruction::Divisibility { size: 6, cells: 243 }));
    assert_eq!(cert.obstruction.as_ref().unwrap().to_string(), "6 does not divide 243");
    assert_eq!(cert.differences.len(), 15);
    assert!(cert.differences.iter().all(|d| d.zero && d.profile == vec![2, 2, 2]));
    assert!(cert.reverify().unwrap());
}

#[test]
fn plane_fixture_verdicts() {
    let cert = check_pair(fixture("x_axis_y_axis.txt")).unwrap();
    assert!(cert.tiling_pair);
    assert!(!cert.spectral_pair);
}

#[test]
fn pair_verdicts_follow_affine_maps() {
    let a = Ambient::of(3, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..200 {
        let e = common::random_set(a, &mut rng, 0.4);
        let other = common::random_set(a, &mut rng, 0.4);
        let base = certify_pair(&e, &other).unwrap();
        let phi = AffineMap::random(a, &mut rng);
        let e2 = phi.apply_set(&e).unwrap();
        let spec = phi.dual(a.zero()).apply_set(&other).unwrap();
        assert_eq!(certify_pair(&e2, &spec).unwrap().spectral_pair, base.spectral_pair);
        let linear = AffineMap::new(a, phi.matrix().to_vec(), a.zero()).unwrap();
        let comp = linear.apply_set(&other).unwrap();
        let moved = certify_pair(&e2, &comp).unwrap();
        assert_eq!(moved.tiling_pair, base.tiling_pair);
        assert_eq!(moved.set_tiles, base.set_tiles);
    }
}

#[test]
fn z35_pair_survives_affine_maps_in_z35() {
    let (e, spec) = fpf_core::setfile::read_pair(fixture("z35_pair.txt")).unwrap();
    let a = *e.ambient();
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for _ in 0..10 {
        let phi = AffineMap::random(a, &mut rng);
        let shift = a.from_index(rand::Rng::gen_range(&mut rng, 0..a.cells()));
        let e2 = phi.apply_set(&e).unwrap();
        let a2 = phi.dual(shift).apply_set(&spec).unwrap();
        let cert = check_pair_text(&format_pair(&e2, &a2)).unwrap();
        assert!(cert.is_spectral_non_tile());
    }
}

#[test]
fn z35_search_returns_certified_pairs() {
    let cert = search_z35(Duration::from_secs(60), 2026).unwrap().expect("a pair within a minute");
    assert!(cert.is_spectral_non_tile());
    assert_eq!(cert.set.len(), 6);
    let replay = check_pair_text(&format_pair(&cert.set, &cert.partner)).unwrap();
    assert_eq!(replay, cert);
}

#[test]
fn violations_embed_replayable_sets() {
    // an empty report lists nothing, and the kinds serialize in kebab case
    let r = verify_fuglede(&config(2, CampaignMode::Exhaustive).with_audit(true)).unwrap().report;
    assert!(r.violations.is_empty());
    let v = serde_json::to_value(ViolationKind::SizeNotMultiple).unwrap();
    assert_eq!(v, "size-not-multiple");
    let set = PointSet::from_mask(Ambient::of(2, 2).unwrap(), 0b0111).unwrap();
    assert_eq!(fpf_core::setfile::parse_set(&set.to_string()).unwrap(), set);
}
