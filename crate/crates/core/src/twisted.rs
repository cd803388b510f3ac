//! Twisted Alexander polynomials of the Riley representation, computed in the
//! quotient ring `ℤ[x, y] / (φ)`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::freegroup::{Gen, GroupRingElt, Word};
use crate::polyring::{complex_roots_int, div_exact_t, to_xy, Mat2, MPoly, PolyError, RileyModulus, RootError, UniPoly, XYPoly};
use crate::presentations::{alexander_poly, classical_invariants, KnotPresentation, PresentationError};
use crate::riley::{riley_poly, Convention, RepMatrices, RileyPolynomial};

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TwistedError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Roots(#[from] RootError),
    #[error("point is not on the character variety (|phi| = {residual:.3e})")]
    NotOnVariety { residual: f64 },
    #[error("twisted Alexander polynomial is zero")]
    ZeroPolynomial,
    #[error("the Riley polynomial is a unit; there are no nonabelian characters")]
    EmptyVariety,
}

/// Which Fox derivative forms the numerator: `∂r/∂a` (the default) or `∂r/∂b`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FoxColumn {
    #[default]
    A,
    B,
}

impl FoxColumn {
    pub fn generator(self) -> Gen {
        match self {
            FoxColumn::A => Gen::A,
            FoxColumn::B => Gen::B,
        }
    }

    /// The generator whose `det Φ(1 - g)` is the matching denominator.
    pub fn complement(self) -> Gen {
        match self {
            FoxColumn::A => Gen::B,
            FoxColumn::B => Gen::A,
        }
    }
}

/// `t^{e(w)} ρ(w)`.
pub fn phi_word(w: &Word, rep: &RepMatrices) -> Mat2 {
    let t = MPoly::term(1, 0, 0, w.exponent_sum() as i32);
    rep.word_matrix(w).scale(&t)
}

/// The linear extension of [`phi_word`] to the group ring.
pub fn phi_map(e: &GroupRingElt, rep: &RepMatrices) -> Mat2 {
    e.terms().fold(Mat2::zero(), |acc, (w, c)| {
        &acc + &phi_word(w, rep).scale(&MPoly::constant(c.clone()))
    })
}

/// `Φ(∂r/∂g)`, accumulated along one pass over `r`. Entries are reduced
/// modulo `m` when given.
pub fn fox_image(r: &Word, g: Gen, rep: &RepMatrices, m: Option<&RileyModulus>) -> Mat2 {
    let reduce = |p: &Mat2| match m {
        Some(m) => p.map(|e| m.reduce_sy(e)),
        None => p.clone(),
    };
    let mut prefix = Mat2::identity();
    let mut exp = 0i32;
    let mut acc = Mat2::zero();
    for &l in r.letters() {
        let step = reduce(&(&prefix * rep.letter(l)));
        let next_exp = exp + i32::from(l.exp);
        if l.gen == g {
            if l.exp > 0 {
                acc = &acc + &prefix.map(|e| e.shift(0, 0, exp));
            } else {
                acc = &acc - &step.map(|e| e.shift(0, 0, next_exp));
            }
        }
        prefix = step;
        exp = next_exp;
    }
    reduce(&acc)
}

/// `det Φ(1 - g) = 1 - tr(ρ(g)) t + t²`.
pub fn denominator(g: Gen, rep: &RepMatrices) -> MPoly {
    let m = match g {
        Gen::A => &rep.c,
        Gen::B => &rep.d,
    };
    let one_minus = &Mat2::identity() - &m.scale(&MPoly::t());
    one_minus.det()
}

/// Numerator `det Φ(∂r/∂g)` for the given column, reduced mod `m` when given.
pub fn numerator(p: &KnotPresentation, column: FoxColumn, rep: &RepMatrices, m: Option<&RileyModulus>) -> MPoly {
    let det = fox_image(&p.relator, column.generator(), rep, m).det();
    match m {
        Some(m) => m.reduce_sy(&det),
        None => det,
    }
}

/// The quotient `det M / det Φ(1 - g)` in `ℤ[s^{±1}, y][t^{±1}] / (φ)`, unnormalized.
pub fn twisted_quotient_sy(
    p: &KnotPresentation,
    column: FoxColumn,
    rep: &RepMatrices,
    m: &RileyModulus,
) -> Result<MPoly, PolyError> {
    let num = numerator(p, column, rep, Some(m));
    let den = denominator(column.complement(), rep);
    div_exact_t(&num, &den, Some(m))
}

/// Even shift moving the smallest exponent into `{0, 1}`.
pub fn even_shift(lo: i32) -> i32 {
    -(lo - lo.rem_euclid(2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistedAlex {
    /// `ψ_j`, keyed by the exponent of `t` after normalization.
    pub coeffs: BTreeMap<i32, XYPoly>,
    #[serde(skip)]
    pub modulus: RileyModulus,
    pub genus: i64,
    /// `4g - 2`.
    pub genus_bound: i64,
    pub normalization_shift: i32,
    pub convention: Convention,
}

impl TwistedAlex {
    pub fn low(&self) -> i32 {
        *self.coeffs.keys().next().expect("nonzero")
    }

    pub fn high(&self) -> i32 {
        *self.coeffs.keys().next_back().expect("nonzero")
    }

    pub fn degree(&self) -> i64 {
        i64::from(self.high() - self.low())
    }

    pub fn top(&self) -> &XYPoly {
        &self.coeffs[&self.high()]
    }

    pub fn coeff(&self, j: i32) -> XYPoly {
        self.coeffs.get(&j).cloned().unwrap_or_else(XYPoly::zero)
    }

    /// Whether `ψ_top` is the constant `1` in the quotient ring.
    pub fn is_monic(&self) -> bool {
        self.top().is_one()
    }

    /// Numeric evaluation at a character point; fails off the variety.
    pub fn at(&self, x: Complex64, y: Complex64, tol: f64) -> Result<NumericTPoly, TwistedError> {
        let phi = &self.modulus.phi;
        let residual = phi.eval(x, y).norm();
        if residual > tol * phi.eval_abs(x, y).max(1.0) {
            return Err(TwistedError::NotOnVariety { residual });
        }
        Ok(self.eval_unchecked(x, y, tol))
    }

    pub fn eval_unchecked(&self, x: Complex64, y: Complex64, tol: f64) -> NumericTPoly {
        NumericTPoly {
            coeffs: self.coeffs.iter().map(|(&j, p)| (j, p.eval(x, y))).collect(),
            tol,
        }
    }
}

pub fn twisted_alexander_symbolic(p: &KnotPresentation, convention: Convention) -> Result<TwistedAlex, TwistedError> {
    let riley = riley_poly(p, convention)?;
    twisted_alexander_with(p, &riley)
}

/// As [`twisted_alexander_symbolic`], reusing an already computed Riley polynomial.
pub fn twisted_alexander_with(p: &KnotPresentation, riley: &RileyPolynomial) -> Result<TwistedAlex, TwistedError> {
    let modulus = riley.modulus()?;
    if modulus.deg_y == 0 {
        return Err(TwistedError::EmptyVariety);
    }
    let rep = RepMatrices::new(riley.convention);
    let quotient = twisted_quotient_sy(p, FoxColumn::A, &rep, &modulus)?;
    let (lo, _) = quotient.t_range().ok_or(TwistedError::ZeroPolynomial)?;
    let shift = even_shift(lo);
    let coeffs = quotient
        .t_coeffs()
        .into_iter()
        .map(|(j, c)| Ok((j + shift, modulus.reduce(&to_xy(&c)?))))
        .collect::<Result<BTreeMap<_, _>, PolyError>>()?;
    let genus = classical_invariants(&alexander_poly(p))?.genus;
    Ok(TwistedAlex {
        coeffs,
        modulus,
        genus,
        genus_bound: 4 * genus - 2,
        normalization_shift: shift,
        convention: riley.convention,
    })
}

/// A twisted Alexander polynomial evaluated at a point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericTPoly {
    #[serde(with = "crate::polyring::complex_json::map")]
    pub coeffs: BTreeMap<i32, Complex64>,
    pub tol: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalizedNumeric {
    pub poly: NumericTPoly,
    pub shift: i32,
    pub degree: i64,
    pub is_monic: bool,
    #[serde(with = "crate::polyring::complex_json")]
    pub leading: Complex64,
}

impl NumericTPoly {
    pub fn scale(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    fn threshold(&self) -> f64 {
        self.tol * self.scale()
    }

    /// Exponents whose coefficients exceed `tol · max|c|`.
    pub fn support(&self) -> Vec<i32> {
        let th = self.threshold();
        self.coeffs
            .iter()
            .filter(|(_, c)| c.norm() > th)
            .map(|(&j, _)| j)
            .collect()
    }

    pub fn degree(&self) -> Option<i64> {
        let s = self.support();
        Some(i64::from(s.last()? - s.first()?))
    }

    pub fn leading(&self) -> Option<(i32, Complex64)> {
        let j = *self.support().last()?;
        Some((j, self.coeffs[&j]))
    }

    /// Even shift to minimum exponent in `{0, 1}`; monic iff the leading
    /// coefficient is `1` within `tol`.
    pub fn normalize_monic(&self) -> Result<NormalizedNumeric, TwistedError> {
        let support = self.support();
        let (&lo, &hi) = support.first().zip(support.last()).ok_or(TwistedError::ZeroPolynomial)?;
        let shift = even_shift(lo);
        let coeffs = support.iter().map(|&j| (j + shift, self.coeffs[&j])).collect();
        let leading = self.coeffs[&hi];
        Ok(NormalizedNumeric {
            poly: NumericTPoly { coeffs, tol: self.tol },
            shift,
            degree: i64::from(hi - lo),
            is_monic: (leading - 1.0).norm() < self.tol * self.scale().max(1.0),
            leading,
        })
    }
}

/// Symbolic normalization of a coefficient map: `(shifted map, shift, degree, monic)`.
pub fn normalize_symbolic(coeffs: &BTreeMap<i32, XYPoly>) -> Result<(BTreeMap<i32, XYPoly>, i32, i64, bool), TwistedError> {
    let nonzero: BTreeMap<i32, &XYPoly> = coeffs.iter().filter(|(_, p)| !p.is_zero()).map(|(&j, p)| (j, p)).collect();
    let (&lo, _) = nonzero.first_key_value().ok_or(TwistedError::ZeroPolynomial)?;
    let (&hi, top) = nonzero.last_key_value().expect("nonempty");
    let shift = even_shift(lo);
    let monic = top.is_one();
    let shifted = nonzero.into_iter().map(|(j, p)| (j + shift, p.clone())).collect();
    Ok((shifted, shift, i64::from(hi - lo), monic))
}

/// Whether `ψ_{lo+i} = ψ_{hi-i}` for all `i`.
pub fn reciprocality_check(coeffs: &BTreeMap<i32, XYPoly>) -> bool {
    let (Some(&lo), Some(&hi)) = (coeffs.keys().next(), coeffs.keys().next_back()) else {
        return true;
    };
    let zero = XYPoly::zero();
    (lo..=hi).all(|j| coeffs.get(&j).unwrap_or(&zero) == coeffs.get(&(lo + hi - j)).unwrap_or(&zero))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WadaReport {
    pub holds: bool,
    /// `i` with `det M₁ · det Φ(1-b) = t^{2i} det M₂ · det Φ(1-a)`.
    pub shift: Option<i32>,
}

/// Compares the two column choices exactly in the quotient ring.
pub fn wada_check(p: &KnotPresentation, riley: &RileyPolynomial) -> Result<WadaReport, TwistedError> {
    let m = riley.modulus()?;
    let rep = RepMatrices::new(riley.convention);
    let num_b = numerator(p, FoxColumn::B, &rep, Some(&m));
    let num_a = numerator(p, FoxColumn::A, &rep, Some(&m));
    let lhs = m.reduce_sy(&(&num_b * &denominator(Gen::B, &rep)));
    let rhs = m.reduce_sy(&(&num_a * &denominator(Gen::A, &rep)));
    let (Some((l_lo, _)), Some((r_lo, _))) = (lhs.t_range(), rhs.t_range()) else {
        return Ok(WadaReport { holds: lhs.is_zero() && rhs.is_zero(), shift: None });
    };
    let diff = l_lo - r_lo;
    if diff % 2 != 0 {
        return Ok(WadaReport { holds: false, shift: None });
    }
    Ok(WadaReport {
        holds: lhs == rhs.shift(0, 0, diff),
        shift: Some(diff / 2),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReducibleEntry {
    #[serde(with = "crate::polyring::complex_json")]
    pub s0: Complex64,
    pub phi_residual: f64,
    pub max_coeff_error: f64,
    pub t_shift: i32,
    pub monic_in_t: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReducibleReport {
    pub entries: Vec<ReducibleEntry>,
}

impl ReducibleReport {
    pub fn all_pass(&self) -> bool {
        !self.entries.is_empty() && self.entries.iter().all(|e| e.pass)
    }
}

fn t_poly_numeric(p: &MPoly, s: Complex64, y: Complex64) -> Result<BTreeMap<i32, Complex64>, PolyError> {
    p.eval_sy(s, y)
}

fn poly_mul(a: &BTreeMap<i32, Complex64>, b: &BTreeMap<i32, Complex64>) -> BTreeMap<i32, Complex64> {
    let mut out = BTreeMap::new();
    for (i, x) in a {
        for (j, y) in b {
            *out.entry(i + j).or_insert(Complex64::new(0.0, 0.0)) += x * y;
        }
    }
    out
}

/// At each root `s₀` of `Δ(s²)`, compares `det M(s₀, y_red)` with `Δ(s₀t) Δ(s₀⁻¹t)`.
pub fn reducible_formula_check(p: &KnotPresentation, tol: f64) -> Result<ReducibleReport, TwistedError> {
    let delta = alexander_poly(p);
    let riley = riley_poly(p, Convention::Riley)?;
    let rep = RepMatrices::new(Convention::Riley);
    let det = numerator(p, FoxColumn::A, &rep, None);
    let (_, hi) = delta.t_range().ok_or(TwistedError::ZeroPolynomial)?;
    let mut in_s = vec![num_bigint::BigInt::from(0); 2 * hi as usize + 1];
    for (m, c) in delta.terms() {
        in_s[2 * m.t as usize] = c.clone();
    }
    let roots = complex_roots_int(&UniPoly::new(in_s), tol.min(crate::polyring::roots::DEFAULT_TOL))?;
    let y_red = Complex64::new(2.0, 0.0);
    let mut entries = Vec::new();
    for root in roots {
        let s0 = root.z;
        let phi_residual = riley.sy_form.eval_sy_scalar(s0, y_red)?.norm();
        let got = t_poly_numeric(&det, s0, y_red)?;
        let scaled = |f: Complex64| -> BTreeMap<i32, Complex64> {
            delta.terms().map(|(m, c)| (m.t, crate::polyring::coeff_to_f64(c) * f.powi(m.t))).collect()
        };
        let expected = poly_mul(&scaled(s0), &scaled(1.0 / s0));
        let th = tol * got.values().map(|c| c.norm()).fold(0.0, f64::max);
        let trimmed: BTreeMap<i32, Complex64> = got.into_iter().filter(|(_, c)| c.norm() > th).collect();
        let g_lo = trimmed.keys().next().copied().unwrap_or(0);
        let e_lo = expected.keys().next().copied().unwrap_or(0);
        let t_shift = g_lo - e_lo;
        let keys: std::collections::BTreeSet<i32> = trimmed
            .keys()
            .map(|j| j - t_shift)
            .chain(expected.keys().copied())
            .collect();
        let zero = Complex64::new(0.0, 0.0);
        let max_coeff_error = keys
            .iter()
            .map(|&j| (trimmed.get(&(j + t_shift)).unwrap_or(&zero) - expected.get(&j).unwrap_or(&zero)).norm())
            .fold(0.0, f64::max);
        let monic_in_t = trimmed
            .values()
            .next_back()
            .is_some_and(|c| (c - 1.0).norm() < tol);
        entries.push(ReducibleEntry {
            s0,
            phi_residual,
            max_coeff_error,
            t_shift,
            monic_in_t,
            pass: phi_residual < tol && max_coeff_error < tol && t_shift % 2 == 0,
        });
    }
    Ok(ReducibleReport { entries })
}
