mod common;

use gwcurves::newton::{preset, LatticePolygon};
use gwcurves::tropical::{enumerate_curves, enumerate_curves_with, Defect, Enumeration, EnumerationOptions};
use gwcurves::wallcross::kontsevich_nd;
use gwcurves::{Error, GwElement};
use num_bigint::BigInt;

use common::tropical::check_curve;

const QUARTIC_CHAIN: [&str; 4] = ["p2:4", "F1_4_2E", "BlF1", "Bl2F1"];

fn polygons() -> Vec<(String, LatticePolygon)> {
    ["p2:1", "p2:2", "p2:3", "p2:4", "F1_4_2E", "BlF1", "Bl2F1"]
        .iter()
        .map(|n| (n.to_string(), preset(n).unwrap()))
        .collect()
}

#[test]
fn every_emitted_curve_is_simple_rational_and_weight_one() {
    for (name, poly) in polygons() {
        let e = enumerate_curves(&poly);
        assert!(e.rejected.anomalies.is_empty(), "{name}: {:?}", e.rejected.anomalies);
        for c in &e.curves {
            check_curve(&name, &poly, c);
        }
    }
}

#[test]
fn set_aside_candidates_are_reducible_tilings() {
    let expected = [("p2:4", 55), ("F1_4_2E", 9), ("BlF1", 0), ("Bl2F1", 0), ("p2:3", 0)];
    for (name, count) in expected {
        let poly = preset(name).unwrap();
        let e = enumerate_curves(&poly);
        assert_eq!(e.rejected.reducible.len(), count, "{name}");
        for (sub, defect) in &e.rejected.reducible {
            assert!(matches!(defect, Defect::Reducible { components: 2 }), "{name}: {defect}");
            sub.check_tiling(&poly).unwrap();
            // line plus elliptic curve: every triangle is unimodular
            assert!(sub.triangles().all(|t| t.double_area() == 1), "{name}");
        }
    }
}

#[test]
fn complex_counts_match_kontsevich() {
    for d in 1..=4 {
        let c = enumerate_curves(&preset(&format!("p2:{d}")).unwrap()).count().unwrap();
        assert_eq!(BigInt::from(c.complex), kontsevich_nd(d).unwrap(), "degree {d}");
    }
}

#[test]
fn totals_are_hyperbolic_plus_ones() {
    for (name, poly) in polygons() {
        let c = enumerate_curves(&poly).count().unwrap();
        let normal = GwElement::from_rank_signature(c.complex, c.welschinger).unwrap();
        assert!(c.motivic.is_equivalent(&normal), "{name}");
        assert_eq!(c.normal_form, normal);
    }
}

fn canonical_json(e: &Enumeration) -> String {
    serde_json::to_string(&e.curves).unwrap()
        + &serde_json::to_string(&e.rejected.reducible.iter().map(|(s, _)| s).collect::<Vec<_>>()).unwrap()
}

#[test]
fn output_is_identical_across_thread_counts() {
    for name in QUARTIC_CHAIN {
        let poly = preset(name).unwrap();
        let one = canonical_json(&enumerate_curves_with(&poly, EnumerationOptions::single_threaded()));
        let four = canonical_json(&enumerate_curves_with(&poly, EnumerationOptions { threads: Some(4) }));
        let default = canonical_json(&enumerate_curves(&poly));
        assert_eq!(one, four, "{name}");
        assert_eq!(one, default, "{name}");
    }
}

#[test]
fn curve_json_shape() {
    let e = enumerate_curves(&preset("p2:2").unwrap());
    let v: serde_json::Value = serde_json::to_value(&e.curves[0]).unwrap();
    let obj = v.as_object().unwrap();
    let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    for k in ["path", "cells", "motivic", "complex", "welschinger"] {
        assert!(keys.contains(&k), "{keys:?}");
    }
    assert_eq!(v["path"][0], serde_json::json!([0, 0]));
    assert_eq!(v["cells"][0]["kind"], "triangle");
    assert_eq!(v["motivic"]["terms"][0]["class"], 1);
    assert_eq!(v["complex"], 1);
}

#[test]
fn anomalies_make_the_count_fail() {
    let poly = preset("p2:2").unwrap();
    let mut e = enumerate_curves(&poly);
    let bogus = e.curves[0].subdivision.clone();
    e.rejected.anomalies.push((bogus, Defect::HeavyEnd { length: 2 }));
    assert!(matches!(e.count(), Err(Error::InvariantViolation(_))));
}
