use serde::Serialize;
use serde_json::{json, Value};
use talex_core::charvariety::{
    bezout_bound, degree_drop_locus, fibered_and_genus_detect, finiteness_criterion, metabelian_slice, monic_characters,
    CharVarietyError, CharacterPoint,
};
use talex_core::presentations::{alexander_poly, classical_invariants, j_to_twobridge, schubert_signs, KnotSpec};
use talex_core::riley::riley_poly;
use talex_core::twisted::{reciprocality_check, twisted_alexander_symbolic};

use crate::args::{Cli, PointArg, Vars, Verb};
use crate::goldens::{run_goldens, GoldenData};
use crate::sweep::{degree_table, pairs, DegreeRow};
use crate::CliError;

/// A computed result, and whether every check it contains passed.
pub struct Report {
    pub result: Value,
    pub verified: bool,
    /// Replaces the generic text rendering when set.
    pub text: Option<String>,
}

impl Report {
    fn ok(result: impl Serialize) -> Result<Self, CliError> {
        Ok(Report {
            result: serde_json::to_value(result)?,
            verified: true,
            text: None,
        })
    }
}

fn usage(flag: &str, msg: impl Into<String>) -> CliError {
    CliError::Usage {
        flag: flag.to_string(),
        message: msg.into(),
    }
}

fn present(knot: &KnotSpec) -> Result<Report, CliError> {
    let p = knot.presentation();
    let (signs, two_bridge) = match knot {
        KnotSpec::Schubert(params) => (Some(schubert_signs(*params)), None),
        KnotSpec::J(params) => (None, j_to_twobridge(params.k, params.l()).ok()),
        KnotSpec::Word(_) => (None, None),
    };
    Report::ok(json!({
        "source": p.source,
        "pivot": p.pivot.to_string(),
        "relator": p.relator.to_string(),
        "relator_length": p.relator.len(),
        "schubert_signs": signs,
        "two_bridge": two_bridge,
    }))
}

fn alexander(knot: &KnotSpec) -> Result<Report, CliError> {
    let delta = alexander_poly(&knot.presentation());
    let coefficients: Vec<String> = delta.t_coeffs().values().map(|c| c.as_constant().unwrap_or_default().to_string()).collect();
    Report::ok(json!({
        "delta": delta,
        "coefficients": coefficients,
        "invariants": classical_invariants(&delta)?,
    }))
}

fn riley(cli: &Cli, knot: &KnotSpec, vars: Vars) -> Result<Report, CliError> {
    let r = riley_poly(&knot.presentation(), cli.convention)?;
    let phi = match vars {
        Vars::Xy => serde_json::to_value(&r.xy_form)?,
        Vars::Sy => serde_json::to_value(&r.sy_form)?,
    };
    Report::ok(json!({
        "convention": r.convention,
        "vars": vars,
        "phi": phi,
        "total_degree": r.degree()?,
        "y_degree": r.xy_form.deg_y(),
    }))
}

fn talex(cli: &Cli, knot: &KnotSpec, at: Option<PointArg>) -> Result<Report, CliError> {
    let ta = twisted_alexander_symbolic(&knot.presentation(), cli.convention)?;
    match at {
        None => Report::ok(json!({
            "phi": ta.modulus.phi,
            "twisted": ta,
            "degree": ta.degree(),
            "symbolic_monic": ta.is_monic(),
            "reciprocal": reciprocality_check(&ta.coeffs),
        })),
        Some(pt) => {
            let numeric = ta.at(pt.x, pt.y, cli.tol)?;
            Report::ok(json!({
                "point": CharacterPoint::new(&ta.modulus.phi, pt.x, pt.y),
                "normalized": numeric.normalize_monic()?,
                "genus_bound": ta.genus_bound,
            }))
        }
    }
}

fn alpha_of(knot: &KnotSpec) -> Result<i64, CliError> {
    match knot {
        KnotSpec::Schubert(p) => Ok(p.alpha),
        KnotSpec::J(p) => Ok(j_to_twobridge(p.k, p.l())?.alpha),
        KnotSpec::Word(_) => Err(usage("--knot", "the criterion needs K:alpha,beta or J:k,l")),
    }
}

fn bound(knot: &KnotSpec) -> Result<Report, CliError> {
    let KnotSpec::J(p) = knot else {
        return Err(usage("--knot", "the bound applies to J:k,l knots"));
    };
    match bezout_bound(p.k, p.q) {
        Ok(b) => Report::ok(json!({"k": p.k, "q": p.q, "status": "bounded", "bound": b})),
        Err(CharVarietyError::FiberedOrExcluded(reason)) => {
            Report::ok(json!({"k": p.k, "q": p.q, "status": "fibered_or_excluded", "reason": reason}))
        }
        Err(e) => Err(e.into()),
    }
}

fn degree_text(rows: &[DegreeRow]) -> String {
    let mut out = format!(
        "{:>3} {:>3} {:>8} {:>8} {:>8} {:>8}  {}\n",
        "k", "q", "deg phi", "expected", "deg psi", "expected", "pass"
    );
    for r in rows {
        let top = r.top_degree.map_or("-".to_string(), |d| d.to_string());
        out.push_str(&format!(
            "{:>3} {:>3} {:>8} {:>8} {:>8} {:>8}  {}{}\n",
            r.k,
            r.q,
            r.riley_degree,
            r.riley_expected,
            top,
            r.top_expected,
            r.pass,
            r.note.as_ref().map_or(String::new(), |n| format!("  ({n})")),
        ));
    }
    out
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let tol = cli.tol;
    match &cli.command {
        Verb::Present { knot } => present(knot),
        Verb::Alexander { knot } => alexander(knot),
        Verb::Riley { knot, vars } => riley(cli, knot, *vars),
        Verb::Talex { knot, at } => talex(cli, knot, *at),
        Verb::Monic { knot, factor } => Report::ok(monic_characters(&knot.presentation(), tol, factor.as_ref())?),
        Verb::Degdrop { knot } => Report::ok(json!({ "points": degree_drop_locus(&knot.presentation(), tol)? })),
        Verb::Metabelian { knot } => Report::ok(metabelian_slice(&knot.presentation(), tol)?),
        Verb::Bound { knot } => bound(knot),
        Verb::Criterion { knot } => {
            let alpha = alpha_of(knot)?;
            Report::ok(finiteness_criterion(alpha, &alexander_poly(&knot.presentation()))?)
        }
        Verb::Fibered { knot, samples, seed } => {
            if *samples == 0 {
                return Err(usage("--samples", "need at least one sample"));
            }
            let r = fibered_and_genus_detect(&knot.presentation(), *samples, *seed, tol)?;
            Ok(Report {
                verified: r.consistent_with_classical,
                result: serde_json::to_value(r)?,
                text: None,
            })
        }
        Verb::Degrees { k, q } => {
            let rows = degree_table(&pairs(k.iter(), q.iter()), cli.convention)?;
            let all_pass = rows.iter().all(|r| r.pass);
            Ok(Report {
                text: Some(degree_text(&rows)),
                result: json!({"convention": cli.convention, "rows": rows, "all_pass": all_pass}),
                verified: all_pass,
            })
        }
        Verb::Goldens { data } => {
            let data = match data {
                Some(path) => {
                    let raw = std::fs::read_to_string(path).map_err(|e| usage("--data", format!("{}: {e}", path.display())))?;
                    serde_json::from_str(&raw).map_err(|e| usage("--data", e.to_string()))?
                }
                None => GoldenData::default(),
            };
            let items = run_goldens(&data, tol);
            let all_pass = items.iter().all(|i| i.pass);
            let text = items
                .iter()
                .map(|i| format!("{} {}: {}\n", if i.pass { "PASS" } else { "FAIL" }, i.id, i.detail))
                .collect();
            Ok(Report {
                text: Some(text),
                result: json!({"items": items, "all_pass": all_pass}),
                verified: all_pass,
            })
        }
    }
}
