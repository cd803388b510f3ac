use num_complex::Complex64;
use serde_json::Value;
use talex_core::presentations::KnotSpec;
use talex_core::riley::{riley_poly, Convention};
use talex_web::{monic_json, riley_json, talex_at_json};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

fn complex(v: &Value) -> Complex64 {
    Complex64::new(v["re"].as_f64().unwrap(), v["im"].as_f64().unwrap())
}

#[test]
fn riley_slice_lies_on_the_curve() {
    let out = parse(riley_json("K:7,3", "riley", -3.0, 3.0, 61).unwrap());
    assert_eq!(out["degree"], 5);
    let phi = riley_poly(&"K:7,3".parse::<KnotSpec>().unwrap().presentation(), Convention::Riley).unwrap().xy_form;
    assert_eq!(out["polynomial"], phi.to_string());
    let curve = out["curve"].as_array().unwrap();
    assert!(!curve.is_empty());
    for pt in curve {
        let (x, y) = (pt[0].as_f64().unwrap(), pt[1].as_f64().unwrap());
        let z = |v: f64| Complex64::new(v, 0.0);
        assert!(phi.eval(z(x), z(y)).norm() <= 1e-8 * phi.eval_abs(z(x), z(y)).max(1.0), "({x}, {y})");
    }
}

#[test]
fn shifted_convention_moves_the_reducible_locus() {
    let riley = parse(riley_json("J:2,2", "riley", -1.0, 1.0, 5).unwrap());
    let shifted = parse(riley_json("J:2,2", "shifted", -1.0, 1.0, 5).unwrap());
    assert_ne!(riley["polynomial"], shifted["polynomial"]);
    for (a, b) in riley["curve"].as_array().unwrap().iter().zip(shifted["curve"].as_array().unwrap()) {
        assert!((a[1].as_f64().unwrap() - 2.0 - b[1].as_f64().unwrap()).abs() < 1e-9);
    }
}

#[test]
fn talex_over_the_metabelian_slice() {
    let out = parse(talex_at_json("K:7,3", "riley", 0.0, 0.0).unwrap());
    assert_eq!(out["genus"], 1);
    let chars = out["characters"].as_array().unwrap();
    assert_eq!(chars.len(), 3);
    for c in chars {
        assert_eq!(c["degree"], 2);
        assert!(c["residual"].as_f64().unwrap() < 1e-9);
    }
}

#[test]
fn five_two_has_two_monic_characters() {
    let out = parse(monic_json("K:7,3").unwrap());
    assert_eq!(out["status"], "finite_set");
    let mut xs: Vec<f64> = out["points"].as_array().unwrap().iter().map(|p| complex(&p["x"]).re).collect();
    xs.sort_by(f64::total_cmp);
    let r = 0.5f64.sqrt();
    assert!((xs[0] + r).abs() < 1e-9 && (xs[1] - r).abs() < 1e-9, "{xs:?}");
    for p in out["points"].as_array().unwrap() {
        assert!((complex(&p["y"]) - 0.5).norm() < 1e-9);
    }
}

#[test]
fn fibered_knots_are_monic_everywhere() {
    let out = parse(monic_json("J:2,2").unwrap());
    assert_eq!(out["status"], "whole_component_monic");
}

#[test]
fn bad_inputs_are_errors() {
    assert!(riley_json("K:8,3", "riley", -1.0, 1.0, 10).is_err());
    assert!(riley_json("K:7,3", "nope", -1.0, 1.0, 10).is_err());
    assert!(riley_json("K:7,3", "riley", 1.0, -1.0, 10).is_err());
    assert!(riley_json("K:7,3", "riley", -1.0, 1.0, 1).is_err());
    assert!(talex_at_json("W:", "riley", 0.0, 0.0).is_err());
    assert!(monic_json("garbage").is_err());
}
