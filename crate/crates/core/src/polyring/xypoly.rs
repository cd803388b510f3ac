//! Ordinary integer polynomials in `x = s + s^{-1}` and `y`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::mpoly::{coeff_to_f64, write_term, MPoly, Monomial};
use super::upoly::UniPoly;
use super::{Coeff, PolyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct XYMonomial {
    pub x: u32,
    pub y: u32,
}

/// Graded lexicographic, `y` before `x`.
impl Ord for XYMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.x + self.y)
            .cmp(&(other.x + other.y))
            .then(self.y.cmp(&other.y))
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for XYMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `ℤ[x, y]`, canonical (sorted, zero-free).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct XYPoly {
    terms: Vec<(XYMonomial, Coeff)>,
}

impl XYPoly {
    pub fn zero() -> Self {
        XYPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<Coeff>) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn term(c: impl Into<Coeff>, ex: u32, ey: u32) -> Self {
        Self::from_terms([(XYMonomial { x: ex, y: ey }, c.into())])
    }

    pub fn x() -> Self {
        Self::term(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::term(1, 0, 1)
    }

    /// Convenience constructor from `(coefficient, e_x, e_y)` triples.
    pub fn from_i64(terms: &[(i64, u32, u32)]) -> Self {
        Self::from_terms(terms.iter().map(|&(c, ex, ey)| (XYMonomial { x: ex, y: ey }, Coeff::from(c))))
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (XYMonomial, Coeff)>,
    {
        let mut acc: FxHashMap<XYMonomial, Coeff> = FxHashMap::default();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        XYPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(Coeff::zero()),
            [(m, c)] if m.x == 0 && m.y == 0 => Some(c.clone()),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&XYMonomial, &Coeff)> + ExactSizeIterator {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.y).max()
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.x).max()
    }

    /// Maximum of `e_x + e_y` over the terms.
    pub fn total_degree(&self) -> Result<u32, PolyError> {
        self.terms
            .iter()
            .map(|(m, _)| m.x + m.y)
            .max()
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// Coefficients as a polynomial in `y` over `ℤ[x]`; entry `k` multiplies `y^k`.
    pub fn y_coeffs(&self) -> Vec<UniPoly> {
        let n = self.deg_y().map_or(0, |d| d as usize + 1);
        let mut dense: Vec<Vec<Coeff>> = vec![Vec::new(); n];
        for (m, c) in &self.terms {
            let row = &mut dense[m.y as usize];
            if row.len() <= m.x as usize {
                row.resize(m.x as usize + 1, Coeff::zero());
            }
            row[m.x as usize] = c.clone();
        }
        dense.into_iter().map(UniPoly::new).collect()
    }

    pub fn from_y_coeffs(coeffs: &[UniPoly]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().flat_map(|(k, p)| {
            p.coeffs()
                .iter()
                .enumerate()
                .map(move |(i, c)| (XYMonomial { x: i as u32, y: k as u32 }, c.clone()))
        }))
    }

    /// Leading coefficient in `y`, as a polynomial in `x`.
    pub fn lc_y(&self) -> UniPoly {
        self.y_coeffs().pop().unwrap_or_else(UniPoly::zero)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, a)| (*m, a * c)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `y ↦ y + c`.
    pub fn shift_y(&self, c: i64) -> Self {
        let lin = &XYPoly::y() + &XYPoly::constant(c);
        let mut acc = XYPoly::zero();
        for a in self.y_coeffs().iter().rev() {
            acc = &(&acc * &lin) + &XYPoly::from_y_coeffs(std::slice::from_ref(a));
        }
        acc
    }

    /// Substitutes a constant `y`, leaving a polynomial in `x`.
    pub fn subs_y(&self, value: i64) -> UniPoly {
        let v = Coeff::from(value);
        let mut acc = UniPoly::zero();
        for a in self.y_coeffs().iter().rev() {
            acc = &acc.scale(&v) + a;
        }
        acc
    }

    pub fn derivative_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.x > 0)
                .map(|(m, c)| (XYMonomial { x: m.x - 1, y: m.y }, c * Coeff::from(m.x))),
        )
    }

    pub fn derivative_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.y > 0)
                .map(|(m, c)| (XYMonomial { x: m.x, y: m.y - 1 }, c * Coeff::from(m.y))),
        )
    }

    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(m, c)| coeff_to_f64(c) * x.powi(m.x as i32) * y.powi(m.y as i32))
            .sum()
    }

    /// `Σ |c|·|x|^i·|y|^j`, the natural scale for residuals at `(x, y)`.
    pub fn eval_abs(&self, x: Complex64, y: Complex64) -> f64 {
        let (ax, ay) = (x.norm(), y.norm());
        self.terms
            .iter()
            .map(|(m, c)| coeff_to_f64(c).abs() * ax.powi(m.x as i32) * ay.powi(m.y as i32))
            .sum()
    }

    /// The univariate polynomial in `y` obtained by fixing `x`, lowest degree first.
    pub fn specialize_x(&self, x: Complex64) -> Vec<Complex64> {
        self.y_coeffs().iter().map(|p| p.eval(x)).collect()
    }

    /// Substitutes `x = s + s^{-1}`.
    pub fn to_sy(&self) -> MPoly {
        let xs = &MPoly::s() + &MPoly::s_inv();
        let max_x = self.deg_x().unwrap_or(0);
        let mut xpows = vec![MPoly::one()];
        for i in 1..=max_x as usize {
            let next = &xpows[i - 1] * &xs;
            xpows.push(next);
        }
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            for (mm, cc) in xpows[m.x as usize].terms() {
                terms.push((Monomial::new(mm.s, m.y, 0), c * cc));
            }
        }
        MPoly::from_terms(terms)
    }
}

/// Rewrites an `s ↔ s^{-1}`-symmetric, `t`-free polynomial in `x = s + s^{-1}`.
///
/// Uses `s^n + s^{-n} = x·(s^{n-1} + s^{1-n}) − (s^{n-2} + s^{2-n})`.
pub fn to_xy(p: &MPoly) -> Result<XYPoly, PolyError> {
    if p.has_t() {
        return Err(PolyError::UnexpectedT);
    }
    if !p.is_s_symmetric() {
        return Err(PolyError::NotSymmetric);
    }
    let max_s = p.s_range().map_or(0, |(_, hi)| hi.max(0)) as usize;
    // power_sums[n] = s^n + s^{-n} in x (power_sums[0] = 2).
    let mut power_sums: Vec<UniPoly> = vec![UniPoly::constant(2), UniPoly::x()];
    for n in 2..=max_s {
        let next = &(&UniPoly::x() * &power_sums[n - 1]) - &power_sums[n - 2];
        power_sums.push(next);
    }
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        // Symmetric, so take each s^n + s^{-n} pair once via its positive member.
        let basis = match m.s.cmp(&0) {
            Ordering::Less => continue,
            Ordering::Equal => UniPoly::one(),
            Ordering::Greater => power_sums[m.s as usize].clone(),
        };
        for (i, b) in basis.coeffs().iter().enumerate() {
            terms.push((XYMonomial { x: i as u32, y: m.y }, c * b));
        }
    }
    Ok(XYPoly::from_terms(terms))
}

impl Add for &XYPoly {
    type Output = XYPoly;
    fn add(self, rhs: &XYPoly) -> XYPoly {
        XYPoly::from_terms(self.terms.iter().chain(rhs.terms.iter()).cloned())
    }
}

impl Sub for &XYPoly {
    type Output = XYPoly;
    fn sub(self, rhs: &XYPoly) -> XYPoly {
        XYPoly::from_terms(
            self.terms
                .iter()
                .cloned()
                .chain(rhs.terms.iter().map(|(m, c)| (*m, -c))),
        )
    }
}

impl Mul for &XYPoly {
    type Output = XYPoly;
    fn mul(self, rhs: &XYPoly) -> XYPoly {
        let mut acc: FxHashMap<XYMonomial, Coeff> = FxHashMap::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = XYMonomial { x: ma.x + mb.x, y: ma.y + mb.y };
                *acc.entry(m).or_insert_with(Coeff::zero) += ca * cb;
            }
        }
        XYPoly::from_terms(acc)
    }
}

impl Neg for &XYPoly {
    type Output = XYPoly;
    fn neg(self) -> XYPoly {
        XYPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Display for XYPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            write_term(f, c, &[("x", m.x as i64), ("y", m.y as i64)], i == 0)?;
        }
        Ok(())
    }
}
