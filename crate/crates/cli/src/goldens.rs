//! Reference examples reproduced end to end. The reference data is a value,
//! so a perturbed copy can be injected to check that mismatches are caught.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use talex_core::charvariety::{
    bezout_bound, degree_drop_locus, finiteness_criterion, metabelian_slice, monic_characters, solve_system, CharVarietyError,
    CharacterPoint, MonicStatus,
};
use talex_core::freegroup::Word;
use talex_core::polyring::{complex_json, MPoly, PolyError, XYPoly};
use talex_core::presentations::{alexander_poly, j_relator, schubert_relator, JParams, KnotPresentation, TwoBridgeParams};
use talex_core::riley::{riley_poly, riley_recursion_check, unit_ratio, Convention, RecursionOutcome};
use talex_core::twisted::{reciprocality_check, reducible_formula_check, twisted_alexander_with, wada_check, TwistedError};

use crate::sweep::{degree_table, is_fibered_member, pairs, par_map};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GoldenPoint {
    #[serde(with = "complex_json")]
    pub x: Complex64,
    #[serde(with = "complex_json")]
    pub y: Complex64,
}

impl GoldenPoint {
    fn new(x: Complex64, y: Complex64) -> Self {
        GoldenPoint { x, y }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionCase {
    pub label: String,
    pub alpha: i64,
    pub beta: i64,
    pub leading_coeff: i64,
    pub expected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenData {
    /// Pivot word of `7₄` and its two Riley factors.
    pub seven_four_word: String,
    pub seven_four_first_factor: MPoly,
    pub seven_four_second_factor: MPoly,
    /// Alexander polynomial coefficients, lowest degree first.
    pub seven_four_alexander: Vec<i64>,
    pub five_two_alpha: i64,
    pub five_two_beta: i64,
    pub five_two_riley: XYPoly,
    /// `ψ₀ = ψ₂`.
    pub five_two_outer: XYPoly,
    /// `ψ₁`.
    pub five_two_middle: XYPoly,
    pub five_two_monic: Vec<GoldenPoint>,
    pub five_two_degree_drop: Vec<GoldenPoint>,
    pub point_tol: f64,
    pub reducible_tol: f64,
    pub slice_margin: f64,
    pub criteria: Vec<CriterionCase>,
    /// `(k, q, bound, monic count)`.
    pub bound_case: (i64, i64, i64, usize),
    /// `(k, q)` with `k = 2q`, which the bound must reject.
    pub bound_excluded: (i64, i64),
    pub sweep_k: (i64, i64),
    pub sweep_q: (i64, i64),
    pub recursion_k: (i64, i64),
    pub recursion_q_max: i64,
}

fn laurent(terms: &[(i64, i32, u32)]) -> MPoly {
    terms.iter().fold(MPoly::zero(), |acc, &(c, s, y)| &acc + &MPoly::term(c, s, y, 0))
}

impl Default for GoldenData {
    fn default() -> Self {
        let c = Complex64::new;
        let r = 0.5f64.sqrt();
        let i6 = 1.0 / 6f64.sqrt();
        GoldenData {
            seven_four_word: "bAbABaBabAbABaBa".into(),
            seven_four_first_factor: laurent(&[(1, 0, 0), (1, -2, 2), (1, 2, 2), (-1, 0, 3)]),
            seven_four_second_factor: laurent(&[
                (1, 0, 0),
                (-2, -2, 1),
                (-2, 2, 1),
                (3, -2, 2),
                (2, 0, 2),
                (3, 2, 2),
                (-1, -2, 3),
                (-3, 0, 3),
                (-1, 2, 3),
                (1, 0, 4),
            ]),
            seven_four_alexander: vec![4, -7, 4],
            five_two_alpha: 7,
            five_two_beta: 3,
            five_two_riley: XYPoly::from_i64(&[
                (1, 0, 0),
                (-4, 2, 0),
                (2, 4, 0),
                (2, 0, 1),
                (-1, 2, 1),
                (-1, 4, 1),
                (-1, 0, 2),
                (2, 2, 2),
                (-1, 0, 3),
            ]),
            five_two_outer: XYPoly::from_i64(&[(2, 2, 0), (-1, 2, 1), (1, 0, 2)]),
            five_two_middle: XYPoly::from_i64(&[(-2, 1, 0)]),
            five_two_monic: vec![GoldenPoint::new(c(r, 0.0), c(0.5, 0.0)), GoldenPoint::new(c(-r, 0.0), c(0.5, 0.0))],
            five_two_degree_drop: vec![
                GoldenPoint::new(c(0.0, i6), c(-2.0 / 3.0, 0.0)),
                GoldenPoint::new(c(0.0, -i6), c(-2.0 / 3.0, 0.0)),
            ],
            point_tol: 1e-9,
            reducible_tol: 1e-8,
            slice_margin: 1e-3,
            criteria: vec![
                CriterionCase { label: "5_2".into(), alpha: 7, beta: 3, leading_coeff: 2, expected: true },
                CriterionCase { label: "7_4".into(), alpha: 15, beta: 11, leading_coeff: 4, expected: false },
            ],
            bound_case: (2, 2, 36, 2),
            bound_excluded: (4, 2),
            sweep_k: (1, 6),
            sweep_q: (-3, 3),
            recursion_k: (2, 5),
            recursion_q_max: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenItem {
    pub id: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, thiserror::Error)]
pub enum GoldenError {
    #[error(transparent)]
    Twisted(#[from] TwistedError),
    #[error(transparent)]
    CharVariety(#[from] CharVarietyError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("bad reference data: {0}")]
    Data(String),
}

type ItemResult = Result<(bool, String), GoldenError>;

fn twobridge(alpha: i64, beta: i64) -> Result<KnotPresentation, GoldenError> {
    let p = TwoBridgeParams::new(alpha, beta).map_err(|e| GoldenError::Data(e.to_string()))?;
    Ok(schubert_relator(p))
}

fn t_poly(coeffs: &[i64]) -> MPoly {
    coeffs
        .iter()
        .enumerate()
        .fold(MPoly::zero(), |acc, (j, &c)| &acc + &MPoly::term(c, 0, 0, j as i32))
}

/// Whether `found` and `expected` pair up within `tol` in each coordinate.
pub fn points_match(found: &[CharacterPoint], expected: &[GoldenPoint], tol: f64) -> bool {
    let close = |p: &CharacterPoint, g: &GoldenPoint| (p.x - g.x).norm() < tol && (p.y - g.y).norm() < tol;
    found.len() == expected.len()
        && expected.iter().all(|g| found.iter().any(|p| close(p, g)))
        && found.iter().all(|p| expected.iter().any(|g| close(p, g)))
}

fn riley_factorization(d: &GoldenData) -> ItemResult {
    let word: Word = d.seven_four_word.parse().map_err(|e| GoldenError::Data(format!("{e}")))?;
    let p = KnotPresentation::explicit(word);
    let riley = riley_poly(&p, Convention::Riley)?;
    let product = &d.seven_four_first_factor * &d.seven_four_second_factor;
    let unit = unit_ratio(&riley.sy_form, &product);
    let delta = t_poly(&d.seven_four_alexander);
    let delta_ok = alexander_poly(&p) == delta;
    let hi = d.seven_four_alexander.len() as i32 - 1;
    let expected_reducible = d
        .seven_four_alexander
        .iter()
        .enumerate()
        .fold(MPoly::zero(), |acc, (j, &c)| &acc + &MPoly::term(c, 2 * j as i32 - hi, 0, 0));
    let reducible = d.seven_four_first_factor.subs_y(2);
    let reducible_ok = reducible == expected_reducible;
    Ok((
        unit.is_some() && delta_ok && reducible_ok,
        format!(
            "phi = unit * product: {}; alexander matches: {delta_ok}; first factor at y=2 = {reducible}",
            unit.map_or("no".to_string(), |(sign, j)| format!("yes (sign {sign}, s^{j})")),
        ),
    ))
}

fn five_two(d: &GoldenData, tol: f64) -> ItemResult {
    let p = twobridge(d.five_two_alpha, d.five_two_beta)?;
    let riley = riley_poly(&p, Convention::Riley)?;
    let ta = twisted_alexander_with(&p, &riley)?;
    let phi_ok = riley.xy_form == d.five_two_riley;
    let psi_ok = ta.coeffs.len() == 3
        && ta.coeff(0) == d.five_two_outer
        && ta.coeff(2) == d.five_two_outer
        && ta.coeff(1) == d.five_two_middle;
    let monic = monic_characters(&p, tol, None)?;
    let monic_points: Vec<_> = monic.points.iter().map(|m| m.point).collect();
    let monic_ok = monic.status == MonicStatus::FiniteSet && points_match(&monic_points, &d.five_two_monic, d.point_tol);
    let drop = degree_drop_locus(&p, tol)?;
    let drop_ok = points_match(&drop, &d.five_two_degree_drop, d.point_tol);
    // ψ₂ = 0 and ψ₁ = 1: the cascade's next level must be empty.
    let cascade = solve_system(&riley.xy_form, &ta.coeff(2), tol)?;
    let middle_minus_one = &ta.coeff(1) - &XYPoly::one();
    let cascade_empty = cascade
        .points()
        .is_some_and(|pts| pts.iter().all(|pt| middle_minus_one.eval(pt.x, pt.y).norm() > tol * middle_minus_one.eval_abs(pt.x, pt.y).max(1.0)));
    Ok((
        phi_ok && psi_ok && monic_ok && drop_ok && cascade_empty,
        format!(
            "phi: {phi_ok}; psi: {psi_ok}; monic points {} ({monic_ok}); degree drop points {} ({drop_ok}); cascade empty: {cascade_empty}",
            monic_points.len(),
            drop.len()
        ),
    ))
}

fn sweep_pairs(d: &GoldenData) -> Vec<(i64, i64)> {
    pairs(d.sweep_k.0..=d.sweep_k.1, d.sweep_q.0..=d.sweep_q.1)
}

fn riley_degrees(d: &GoldenData) -> ItemResult {
    let rows = degree_table(&sweep_pairs(d), Convention::Shifted)?;
    let bad: Vec<_> = rows.iter().filter(|r| r.riley_degree != r.riley_expected).map(|r| (r.k, r.q)).collect();
    Ok((bad.is_empty(), format!("{} knots, mismatches {bad:?}", rows.len())))
}

fn top_degrees(d: &GoldenData) -> ItemResult {
    let rows = degree_table(&sweep_pairs(d), Convention::Shifted)?;
    let bad: Vec<_> = rows
        .iter()
        .filter(|r| r.top_degree.is_some_and(|t| t != r.top_expected))
        .map(|r| (r.k, r.q))
        .collect();
    let vacuous: Vec<_> = rows.iter().filter(|r| r.top_degree.is_none()).map(|r| (r.k, r.q)).collect();
    Ok((
        bad.is_empty(),
        format!("{} knots, mismatches {bad:?}, no nonabelian characters {vacuous:?}", rows.len()),
    ))
}

fn recursion(d: &GoldenData) -> ItemResult {
    let ks: Vec<i64> = (d.recursion_k.0..=d.recursion_k.1).collect();
    let reports = par_map(&ks, |&k| riley_recursion_check(k, d.recursion_q_max, Convention::Shifted));
    let mut notes = Vec::new();
    let mut pass = true;
    for r in &reports {
        for s in &r.steps {
            let ok = !matches!(s.outcome, RecursionOutcome::Fails { .. }) && s.degree_additive;
            pass &= ok;
            let how = match s.outcome {
                RecursionOutcome::Exact => "exact".to_string(),
                RecursionOutcome::UpToUnit { sign, s_power } => format!("unit {sign}*s^{s_power}"),
                RecursionOutcome::Fails { .. } => "fails".to_string(),
            };
            notes.push(format!("k={} q={}: {how}", r.k, s.q));
        }
    }
    Ok((pass, notes.join("; ")))
}

fn reducible(d: &GoldenData) -> ItemResult {
    let knots = [
        twobridge(d.five_two_alpha, d.five_two_beta)?,
        twobridge(15, 11)?,
        j_relator(JParams::new(2, 1).map_err(|e| GoldenError::Data(e.to_string()))?),
    ];
    let mut pass = true;
    let mut notes = Vec::new();
    for p in &knots {
        let r = reducible_formula_check(p, d.reducible_tol)?;
        let worst = r.entries.iter().map(|e| e.max_coeff_error).fold(0.0, f64::max);
        pass &= r.all_pass();
        notes.push(format!("{}: {} roots, max error {worst:e}", p.source, r.entries.len()));
    }
    Ok((pass, notes.join("; ")))
}

struct SweepFacts {
    k: i64,
    q: i64,
    reciprocal: bool,
    within_bound: bool,
    wada: bool,
    fibered_ok: bool,
}

fn twisted_properties(d: &GoldenData, tol: f64) -> ItemResult {
    let knots: Vec<_> = sweep_pairs(d).into_iter().filter(|&kq| kq != (1, 1)).collect();
    let facts = par_map(&knots, |&(k, q)| -> Result<SweepFacts, GoldenError> {
        let p = j_relator(JParams::new(k, q).map_err(|e| GoldenError::Data(e.to_string()))?);
        let riley = riley_poly(&p, Convention::Riley)?;
        let ta = twisted_alexander_with(&p, &riley)?;
        let fibered_ok = if is_fibered_member(k, q) {
            let m = monic_characters(&p, tol, None)?;
            m.status == MonicStatus::WholeComponentMonic && ta.degree() == ta.genus_bound
        } else {
            true
        };
        Ok(SweepFacts {
            k,
            q,
            reciprocal: reciprocality_check(&ta.coeffs),
            within_bound: ta.degree() <= ta.genus_bound,
            wada: wada_check(&p, &riley)?.holds,
            fibered_ok,
        })
    });
    let facts = facts.into_iter().collect::<Result<Vec<_>, _>>()?;
    let bad: Vec<_> = facts
        .iter()
        .filter(|f| !(f.reciprocal && f.within_bound && f.wada && f.fibered_ok))
        .map(|f| (f.k, f.q))
        .collect();
    let fibered = knots.iter().filter(|&&(k, q)| is_fibered_member(k, q)).count();
    Ok((
        bad.is_empty(),
        format!("{} knots ({fibered} fibered, J(1,2) is the unknot and skipped), failures {bad:?}", facts.len()),
    ))
}

fn criterion(d: &GoldenData) -> ItemResult {
    let mut pass = true;
    let mut notes = Vec::new();
    for case in &d.criteria {
        let delta = alexander_poly(&twobridge(case.alpha, case.beta)?);
        let r = finiteness_criterion(case.alpha, &delta)?;
        let ok = r.overall == case.expected && r.c == case.leading_coeff.into();
        pass &= ok;
        notes.push(format!("{}: c = {}, verdict {}", case.label, r.c, r.overall));
    }
    let fibered: Vec<_> = sweep_pairs(d).into_iter().filter(|&(k, q)| is_fibered_member(k, q)).collect();
    for &(k, q) in &fibered {
        let p = j_relator(JParams::new(k, q).map_err(|e| GoldenError::Data(e.to_string()))?);
        let alpha = talex_core::presentations::j_to_twobridge(k, 2 * q)
            .map_err(|e| GoldenError::Data(e.to_string()))?
            .alpha;
        let r = finiteness_criterion(alpha, &alexander_poly(&p))?;
        pass &= !r.overall && r.c == 1.into();
    }
    notes.push(format!("{} fibered members all false", fibered.len()));
    Ok((pass, notes.join("; ")))
}

fn slice(d: &GoldenData, tol: f64) -> ItemResult {
    let mut pass = true;
    let mut notes = Vec::new();
    let five_two = twobridge(d.five_two_alpha, d.five_two_beta)?;
    for (p, check_leading) in [(&five_two, true), (&twobridge(15, 11)?, false)] {
        let r = metabelian_slice(p, tol)?;
        let margin = r.entries.iter().map(|e| (e.leading_value - 1.0).norm()).fold(f64::INFINITY, f64::min);
        pass &= !r.entries.is_empty() && r.all_full_degree() && r.genus_bound == 2;
        if check_leading {
            pass &= margin > d.slice_margin;
        }
        notes.push(format!(
            "{}: {} characters, degrees {:?}, min |leading - 1| = {margin:.3e}",
            p.source,
            r.entries.len(),
            r.entries.iter().map(|e| e.degree).collect::<Vec<_>>()
        ));
    }
    Ok((pass, notes.join("; ")))
}

fn bound(d: &GoldenData, tol: f64) -> ItemResult {
    let (k, q, expected, count) = d.bound_case;
    let b = bezout_bound(k, q)?;
    let p = j_relator(JParams::new(k, q).map_err(|e| GoldenError::Data(e.to_string()))?);
    let monic = monic_characters(&p, tol, None)?;
    let excluded = bezout_bound(d.bound_excluded.0, d.bound_excluded.1).is_err();
    let n = monic.points.len();
    Ok((
        b == expected && n == count && n as i64 <= b && excluded,
        format!("J({k}, {}): {n} monic characters, bound {b}; k = 2q rejected: {excluded}", 2 * q),
    ))
}

/// Runs every item; an item whose computation errors is reported as failing.
pub fn run_goldens(d: &GoldenData, tol: f64) -> Vec<GoldenItem> {
    type Check<'a> = Box<dyn Fn() -> ItemResult + Send + Sync + 'a>;
    let checks: Vec<(&'static str, Check)> = vec![
        ("riley-factorization", Box::new(|| riley_factorization(d))),
        ("five-two", Box::new(|| five_two(d, tol))),
        ("riley-degrees", Box::new(|| riley_degrees(d))),
        ("top-degrees", Box::new(|| top_degrees(d))),
        ("recursion", Box::new(|| recursion(d))),
        ("reducible-formula", Box::new(|| reducible(d))),
        ("twisted-properties", Box::new(|| twisted_properties(d, tol))),
        ("finiteness-criterion", Box::new(|| criterion(d))),
        ("metabelian-slice", Box::new(|| slice(d, tol))),
        ("monic-bound", Box::new(|| bound(d, tol))),
    ];
    checks
        .into_iter()
        .map(|(id, check)| match check() {
            Ok((pass, detail)) => GoldenItem { id, pass, detail },
            Err(e) => GoldenItem {
                id,
                pass: false,
                detail: format!("error: {e}"),
            },
        })
        .collect()
}
