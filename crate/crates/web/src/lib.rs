//! JSON-returning operations behind the browser demo.
//!
//! Every operation has a plain Rust entry point returning a JSON string; the
//! `wasm32` build wraps them with `wasm-bindgen`.

use num_complex::Complex64;
use serde_json::{json, Value};
use talex_core::charvariety::{fiber, monic_characters, CharVarietyError, MonicStatus};
use talex_core::polyring::{PolyError, XYPoly};
use talex_core::presentations::{KnotSpec, PresentationError};
use talex_core::riley::{riley_poly, Convention};
use talex_core::twisted::{twisted_alexander_symbolic, TwistedError};
use thiserror::Error;

/// Default residual tolerance used by every operation.
pub const TOL: f64 = 1e-9;
/// Imaginary parts below this count as real on the plotted slice.
const REAL_EPS: f64 = 1e-7;
const MAX_SAMPLES: usize = 2000;

#[derive(Debug, Error)]
pub enum WebError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Twisted(#[from] TwistedError),
    #[error(transparent)]
    CharVariety(#[from] CharVarietyError),
}

fn knot(spec: &str) -> Result<KnotSpec, WebError> {
    Ok(spec.parse()?)
}

fn convention(name: &str) -> Result<Convention, WebError> {
    name.parse().map_err(|_| WebError::Input(format!("unknown convention '{name}'")))
}

fn complex(z: Complex64) -> Value {
    json!({"re": z.re, "im": z.im})
}

/// Points `(x, y)` with `x` real in `[x_min, x_max]` and `φ(x, y) = 0`, `y` real.
fn real_slice(phi: &XYPoly, x_min: f64, x_max: f64, samples: usize) -> Result<Vec<[f64; 2]>, WebError> {
    let mut out = Vec::new();
    for i in 0..samples {
        let x = x_min + (x_max - x_min) * i as f64 / (samples - 1) as f64;
        for p in fiber(phi, Complex64::new(x, 0.0))? {
            if p.y.im.abs() < REAL_EPS {
                out.push([x, p.y.re]);
            }
        }
    }
    Ok(out)
}

/// Riley polynomial of a knot together with a sampled real slice of its zero set.
pub fn riley_json(spec: &str, conv: &str, x_min: f64, x_max: f64, samples: usize) -> Result<String, WebError> {
    if !(x_min < x_max) || !(2..=MAX_SAMPLES).contains(&samples) {
        return Err(WebError::Input(format!("need x_min < x_max and 2 <= samples <= {MAX_SAMPLES}")));
    }
    let spec = knot(spec)?;
    let riley = riley_poly(&spec.presentation(), convention(conv)?)?;
    let curve = real_slice(&riley.xy_form, x_min, x_max, samples)?;
    Ok(json!({
        "knot": spec.to_string(),
        "polynomial": riley.xy_form.to_string(),
        "degree": riley.degree()?,
        "curve": curve,
    })
    .to_string())
}

/// The twisted Alexander polynomial evaluated at every character over `x`.
pub fn talex_at_json(spec: &str, conv: &str, x_re: f64, x_im: f64) -> Result<String, WebError> {
    let spec = knot(spec)?;
    let ta = twisted_alexander_symbolic(&spec.presentation(), convention(conv)?)?;
    let x = Complex64::new(x_re, x_im);
    let characters = fiber(&ta.modulus.phi, x)?
        .into_iter()
        .map(|p| -> Result<Value, WebError> {
            let n = ta.at(p.x, p.y, TOL)?.normalize_monic()?;
            let coeffs: Vec<Value> = n.poly.coeffs.iter().map(|(j, c)| json!({"power": j, "coeff": complex(*c)})).collect();
            Ok(json!({
                "y": complex(p.y),
                "residual": p.residual,
                "degree": n.degree,
                "monic": n.is_monic,
                "leading": complex(n.leading),
                "coefficients": coeffs,
            }))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let symbolic: Vec<Value> = ta.coeffs.iter().map(|(j, c)| json!({"power": j, "coeff": c.to_string()})).collect();
    Ok(json!({
        "knot": spec.to_string(),
        "x": complex(x),
        "genus": ta.genus,
        "symbolic": symbolic,
        "characters": characters,
    })
    .to_string())
}

/// Characters at which the twisted Alexander polynomial is monic.
pub fn monic_json(spec: &str) -> Result<String, WebError> {
    let spec = knot(spec)?;
    let report = monic_characters(&spec.presentation(), TOL, None)?;
    let status = match report.status {
        MonicStatus::FiniteSet => "finite_set",
        MonicStatus::WholeComponentMonic => "whole_component_monic",
    };
    let points: Vec<Value> = report
        .points
        .iter()
        .map(|m| json!({"x": complex(m.point.x), "y": complex(m.point.y), "degree": m.degree}))
        .collect();
    Ok(json!({"knot": spec.to_string(), "status": status, "bound": report.bound, "points": points}).to_string())
}

#[cfg(target_arch = "wasm32")]
mod bindings {
    use wasm_bindgen::prelude::*;

    fn js<T>(r: Result<T, super::WebError>) -> Result<T, JsError> {
        r.map_err(|e| JsError::new(&e.to_string()))
    }

    #[wasm_bindgen]
    pub fn riley(spec: &str, convention: &str, x_min: f64, x_max: f64, samples: usize) -> Result<String, JsError> {
        js(super::riley_json(spec, convention, x_min, x_max, samples))
    }

    #[wasm_bindgen]
    pub fn talex_at(spec: &str, convention: &str, x_re: f64, x_im: f64) -> Result<String, JsError> {
        js(super::talex_at_json(spec, convention, x_re, x_im))
    }

    #[wasm_bindgen]
    pub fn monic(spec: &str) -> Result<String, JsError> {
        js(super::monic_json(spec))
    }
}
