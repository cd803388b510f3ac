//! Numeric points of the nonabelian character variety `φ(x, y) = 0` and the
//! monic, degree-drop and fibering statements built on them.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::polyring::roots::DEFAULT_TOL;
use crate::polyring::{complex_roots, complex_roots_int, resultant_y, Coeff, MPoly, PolyError, RileyModulus, RootError, XYPoly};
use crate::presentations::{
    alexander_poly, classical_invariants, ClassicalInvariants, KnotPresentation, PresentationError, PresentationSource,
};
use crate::riley::Convention;
use crate::twisted::{twisted_alexander_symbolic, TwistedAlex, TwistedError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CharVarietyError {
    #[error(transparent)]
    Twisted(#[from] TwistedError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Roots(#[from] RootError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("the curves share a component; the intersection is not finite")]
    SharedComponent,
    #[error("the factor does not divide the Riley polynomial")]
    NotAFactor,
    #[error("bound does not apply: {0}")]
    FiberedOrExcluded(String),
}

/// A numeric character `(x, y)` with `residual = |φ(x, y)|`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CharacterPoint {
    #[serde(with = "crate::polyring::complex_json")]
    pub x: Complex64,
    #[serde(with = "crate::polyring::complex_json")]
    pub y: Complex64,
    pub residual: f64,
}

impl CharacterPoint {
    pub fn new(phi: &XYPoly, x: Complex64, y: Complex64) -> Self {
        CharacterPoint {
            x,
            y,
            residual: phi.eval(x, y).norm(),
        }
    }

    pub fn distance(&self, other: &CharacterPoint) -> f64 {
        (self.x - other.x).norm().max((self.y - other.y).norm())
    }
}

fn cmp_points(a: &CharacterPoint, b: &CharacterPoint) -> Ordering {
    a.x.re
        .total_cmp(&b.x.re)
        .then(a.x.im.total_cmp(&b.x.im))
        .then(a.y.re.total_cmp(&b.y.re))
        .then(a.y.im.total_cmp(&b.y.im))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SolveOutcome {
    SharedComponent,
    Points { points: Vec<CharacterPoint> },
}

impl SolveOutcome {
    pub fn points(&self) -> Option<&[CharacterPoint]> {
        match self {
            SolveOutcome::Points { points } => Some(points),
            SolveOutcome::SharedComponent => None,
        }
    }
}

fn vanishes(p: &XYPoly, x: Complex64, y: Complex64, tol: f64) -> bool {
    p.eval(x, y).norm() <= tol * p.eval_abs(x, y).max(1.0)
}

/// Newton's method on the square system `f = g = 0`.
fn newton2(f: &XYPoly, g: &XYPoly, mut x: Complex64, mut y: Complex64) -> (Complex64, Complex64) {
    let (fx, fy, gx, gy) = (f.derivative_x(), f.derivative_y(), g.derivative_x(), g.derivative_y());
    for _ in 0..100 {
        let (a, b, c, d) = (fx.eval(x, y), fy.eval(x, y), gx.eval(x, y), gy.eval(x, y));
        let (u, v) = (f.eval(x, y), g.eval(x, y));
        let det = a * d - b * c;
        if det.norm() == 0.0 || !det.is_finite() {
            break;
        }
        let dx = (d * u - b * v) / det;
        let dy = (a * v - c * u) / det;
        if !dx.is_finite() || !dy.is_finite() {
            break;
        }
        x -= dx;
        y -= dy;
        if dx.norm().max(dy.norm()) < 1e-16 * (1.0 + x.norm().max(y.norm())) {
            break;
        }
    }
    (x, y)
}

/// Newton's method in `y` on `f(x, ·)`.
fn newton_y(f: &XYPoly, x: Complex64, mut y: Complex64) -> Complex64 {
    let fy = f.derivative_y();
    for _ in 0..50 {
        let d = fy.eval(x, y);
        if d.norm() == 0.0 {
            break;
        }
        let step = f.eval(x, y) / d;
        if !step.is_finite() {
            break;
        }
        y -= step;
        if step.norm() < 1e-16 * (1.0 + y.norm()) {
            break;
        }
    }
    y
}

/// Distinct `y`-roots of `φ(x, ·)`, each polished by Newton's method.
pub fn fiber(phi: &XYPoly, x: Complex64) -> Result<Vec<CharacterPoint>, CharVarietyError> {
    let roots = complex_roots(&phi.specialize_x(x), DEFAULT_TOL)?;
    Ok(roots
        .into_iter()
        .map(|r| CharacterPoint::new(phi, x, newton_y(phi, x, r.z)))
        .collect())
}

fn dedupe(mut points: Vec<CharacterPoint>, radius: f64) -> Vec<CharacterPoint> {
    points.sort_by(cmp_points);
    let mut out: Vec<CharacterPoint> = Vec::new();
    for p in points {
        let scale = 1.0 + p.x.norm().max(p.y.norm());
        if !out.iter().any(|q| q.distance(&p) <= radius * scale) {
            out.push(p);
        }
    }
    out
}

/// How far Newton polishing may move a point away from its elimination seed.
const SEED_RADIUS: f64 = 1e-3;

/// Common zeros of `phi` and `g` by elimination of `y`.
pub fn solve_system(phi: &XYPoly, g: &XYPoly, tol: f64) -> Result<SolveOutcome, CharVarietyError> {
    if g.is_zero() {
        return Ok(SolveOutcome::SharedComponent);
    }
    let res = resultant_y(phi, g);
    if res.is_zero() {
        return Ok(SolveOutcome::SharedComponent);
    }
    if res.degree() == Some(0) {
        return Ok(SolveOutcome::Points { points: Vec::new() });
    }
    let mut found = Vec::new();
    for xr in complex_roots_int(&res, DEFAULT_TOL)? {
        for cand in fiber(phi, xr.z)? {
            let (x, y) = newton2(phi, g, cand.x, cand.y);
            let drift = (x - cand.x).norm().max((y - cand.y).norm());
            let near = drift <= SEED_RADIUS * (1.0 + cand.x.norm().max(cand.y.norm()));
            if near && vanishes(phi, x, y, tol) && vanishes(g, x, y, tol) {
                found.push(CharacterPoint::new(phi, x, y));
            }
        }
    }
    Ok(SolveOutcome::Points {
        points: dedupe(found, tol.sqrt()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MonicStatus {
    FiniteSet,
    WholeComponentMonic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    WholeVariety,
    Component,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonicPoint {
    pub point: CharacterPoint,
    pub leading_index: i32,
    #[serde(with = "crate::polyring::complex_json")]
    pub leading_value: Complex64,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonicReport {
    pub status: MonicStatus,
    pub scope: Scope,
    pub points: Vec<MonicPoint>,
    pub bound: Option<i64>,
}

/// The twisted Alexander polynomial with coefficients reduced modulo a factor of `φ`.
fn restrict(ta: &TwistedAlex, factor: Option<&XYPoly>) -> Result<(RileyModulus, BTreeMap<i32, XYPoly>), CharVarietyError> {
    let Some(f) = factor else {
        return Ok((ta.modulus.clone(), ta.coeffs.clone()));
    };
    let m = RileyModulus::new(f.clone())?;
    if !m.reduce(&ta.modulus.phi).is_zero() {
        return Err(CharVarietyError::NotAFactor);
    }
    let coeffs = ta
        .coeffs
        .iter()
        .map(|(&j, p)| (j, m.reduce(p)))
        .filter(|(_, p)| !p.is_zero())
        .collect();
    Ok((m, coeffs))
}

fn j_bound(p: &KnotPresentation) -> Option<i64> {
    match p.source {
        PresentationSource::J(j) => bezout_bound(j.k, j.q).ok(),
        _ => None,
    }
}

/// Characters with monic twisted Alexander polynomial, optionally on one
/// component `factor` of `φ`.
pub fn monic_characters(p: &KnotPresentation, tol: f64, factor: Option<&XYPoly>) -> Result<MonicReport, CharVarietyError> {
    let ta = twisted_alexander_symbolic(p, Convention::Riley)?;
    let (m, coeffs) = restrict(&ta, factor)?;
    let scope = if factor.is_some() { Scope::Component } else { Scope::WholeVariety };
    let bound = j_bound(p);
    let whole = MonicReport {
        status: MonicStatus::WholeComponentMonic,
        scope,
        points: Vec::new(),
        bound,
    };
    let Some((_, top)) = coeffs.last_key_value() else {
        return Ok(MonicReport { status: MonicStatus::FiniteSet, ..whole });
    };
    if top.is_one() {
        return Ok(whole);
    }
    let mut candidates = match solve_system(&m.phi, &(top - &XYPoly::one()), tol)? {
        SolveOutcome::SharedComponent => return Ok(whole),
        SolveOutcome::Points { points } => points,
    };
    // Where the top coefficient vanishes a lower one leads; check those pointwise.
    if let SolveOutcome::Points { points } = solve_system(&m.phi, top, tol)? {
        candidates.extend(points);
    }
    let mut points = Vec::new();
    for c in dedupe(candidates, tol.sqrt()) {
        let numeric = ta.at(c.x, c.y, tol)?;
        let Ok(n) = numeric.normalize_monic() else {
            continue;
        };
        if n.is_monic {
            let (leading_index, leading_value) = n.poly.leading().expect("nonzero");
            points.push(MonicPoint {
                point: c,
                leading_index,
                leading_value,
                degree: n.degree,
            });
        }
    }
    Ok(MonicReport {
        status: MonicStatus::FiniteSet,
        scope,
        points,
        bound,
    })
}

/// Characters where the twisted Alexander polynomial drops below its generic degree.
pub fn degree_drop_locus(p: &KnotPresentation, tol: f64) -> Result<Vec<CharacterPoint>, CharVarietyError> {
    let ta = twisted_alexander_symbolic(p, Convention::Riley)?;
    let points = match solve_system(&ta.modulus.phi, ta.top(), tol)? {
        SolveOutcome::SharedComponent => return Err(CharVarietyError::SharedComponent),
        SolveOutcome::Points { points } => points,
    };
    let generic = ta.degree();
    let mut out = Vec::new();
    for pt in points {
        let d = ta.at(pt.x, pt.y, tol)?.degree();
        if d.is_none_or(|d| d < generic) {
            out.push(pt);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SliceEntry {
    pub point: CharacterPoint,
    pub degree: i64,
    #[serde(with = "crate::polyring::complex_json")]
    pub leading_value: Complex64,
    pub is_monic: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SliceReport {
    pub genus_bound: i64,
    pub entries: Vec<SliceEntry>,
}

impl SliceReport {
    pub fn all_full_degree(&self) -> bool {
        self.entries.iter().all(|e| e.degree == self.genus_bound)
    }
}

/// Characters on the slice `x = 0`, i.e. `s = √-1`.
pub fn metabelian_slice(p: &KnotPresentation, tol: f64) -> Result<SliceReport, CharVarietyError> {
    let ta = twisted_alexander_symbolic(p, Convention::Riley)?;
    let mut entries = Vec::new();
    for pt in fiber(&ta.modulus.phi, Complex64::new(0.0, 0.0))? {
        let n = ta.at(pt.x, pt.y, tol)?.normalize_monic()?;
        entries.push(SliceEntry {
            point: pt,
            degree: n.degree,
            leading_value: n.leading,
            is_monic: n.is_monic,
        });
    }
    Ok(SliceReport {
        genus_bound: ta.genus_bound,
        entries,
    })
}

/// Upper bound on the number of monic characters of a nonfibered `J(k, 2q)`.
pub fn bezout_bound(k: i64, q: i64) -> Result<i64, CharVarietyError> {
    let excluded = |why: &str| Err(CharVarietyError::FiberedOrExcluded(format!("J({k}, {}): {why}", 2 * q)));
    if k <= 0 || q == 0 {
        return excluded("not a knot in the family");
    }
    if k == 2 * q {
        return excluded("k = 2q, the character variety has two components");
    }
    if k == 1 || (k == 3 && q > 0) || (k == 2 && q.abs() == 1) {
        return excluded("fibered; every nonabelian character is monic");
    }
    let (k1, aq) = (k + 1, q.abs());
    Ok(if k % 2 == 0 {
        2 * k1 * k1 * q * q - k1 * (k + 4) * aq
    } else {
        k1 * (k - 1) * aq
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeVerdict {
    pub p: i64,
    pub c_mod_p: i64,
    pub c_squared_mod_p: i64,
    pub passes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub alpha: i64,
    #[serde(serialize_with = "crate::report::serialize_decimal")]
    pub c: Coeff,
    pub primes: Vec<PrimeVerdict>,
    pub overall: bool,
}

fn odd_prime_divisors(mut n: i64) -> Vec<i64> {
    n = n.abs();
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out.retain(|&p| p != 2);
    out
}

/// Whether some odd prime `p | α` has `c ≢ 0` and `c² ≢ ±1 (mod p)`.
pub fn finiteness_criterion(alpha: i64, delta: &MPoly) -> Result<CriterionReport, CharVarietyError> {
    let c = classical_invariants(delta)?.leading_coeff;
    let primes: Vec<PrimeVerdict> = odd_prime_divisors(alpha)
        .into_iter()
        .map(|p| {
            let c_mod_p = c.mod_floor(&Coeff::from(p)).to_i64().expect("reduced");
            let c_squared_mod_p = (c_mod_p * c_mod_p) % p;
            PrimeVerdict {
                p,
                c_mod_p,
                c_squared_mod_p,
                passes: c_mod_p != 0 && c_squared_mod_p != 1 && c_squared_mod_p != p - 1,
            }
        })
        .collect();
    Ok(CriterionReport {
        alpha,
        overall: primes.iter().any(|v| v.passes),
        c,
        primes,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FiberedVerdict {
    ConsistentWithFibered,
    NonfiberedCertificate {
        point: CharacterPoint,
        #[serde(with = "crate::polyring::complex_json")]
        leading_value: Complex64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiberedReport {
    pub samples: usize,
    pub seed: u64,
    pub points_examined: usize,
    pub degree_histogram: BTreeMap<i64, usize>,
    pub genus_estimate: Option<i64>,
    pub verdict: FiberedVerdict,
    pub classical: ClassicalInvariants,
    pub consistent_with_classical: bool,
}

/// Uniform sample from the disk `|x| ≤ radius`.
fn sample_disk(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    let theta = std::f64::consts::TAU * rng.gen::<f64>();
    Complex64::from_polar(r, theta)
}

pub const SAMPLE_RADIUS: f64 = 3.0;

/// Seeded random characters: the modal degree estimates the genus, and any
/// nonmonic character certifies that the knot is not fibered.
pub fn fibered_and_genus_detect(p: &KnotPresentation, samples: usize, seed: u64, tol: f64) -> Result<FiberedReport, CharVarietyError> {
    let ta = twisted_alexander_symbolic(p, Convention::Riley)?;
    let classical = classical_invariants(&alexander_poly(p))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut histogram: BTreeMap<i64, usize> = BTreeMap::new();
    let mut certificate = None;
    let mut examined = 0;
    for _ in 0..samples {
        let x = sample_disk(&mut rng, SAMPLE_RADIUS);
        for pt in fiber(&ta.modulus.phi, x)? {
            let Ok(numeric) = ta.at(pt.x, pt.y, tol) else {
                continue;
            };
            let n = numeric.normalize_monic()?;
            examined += 1;
            *histogram.entry(n.degree).or_default() += 1;
            if !n.is_monic && certificate.is_none() {
                certificate = Some(FiberedVerdict::NonfiberedCertificate {
                    point: pt,
                    leading_value: n.leading,
                });
            }
        }
    }
    let modal = histogram
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(a.0.cmp(b.0)))
        .map(|(&d, _)| d);
    let genus_estimate = modal.filter(|d| (d + 2) % 4 == 0).map(|d| (d + 2) / 4);
    let verdict = certificate.unwrap_or(FiberedVerdict::ConsistentWithFibered);
    let says_fibered = matches!(verdict, FiberedVerdict::ConsistentWithFibered);
    Ok(FiberedReport {
        samples,
        seed,
        points_examined: examined,
        degree_histogram: histogram,
        consistent_with_classical: genus_estimate == Some(classical.genus) && says_fibered == classical.fibered,
        genus_estimate,
        verdict,
        classical,
    })
}
