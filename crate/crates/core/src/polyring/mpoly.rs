//! Sparse Laurent polynomials in `s^{±1}`, `y`, `t^{±1}` over the integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use super::PolyError;

/// Arbitrary-precision integer coefficient.
pub type Coeff = BigInt;

/// Exponent vector `s^s · y^y · t^t`; `y` is never negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub s: i32,
    pub y: u32,
    pub t: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { s: 0, y: 0, t: 0 };

    pub fn new(s: i32, y: u32, t: i32) -> Self {
        Monomial { s, y, t }
    }

    fn degree(&self) -> i64 {
        self.s as i64 + self.y as i64 + self.t as i64
    }

    #[inline]
    fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            s: self.s + other.s,
            y: self.y + other.y,
            t: self.t + other.t,
        }
    }
}

/// Graded lexicographic on `(t, y, s)`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.t.cmp(&other.t))
            .then(self.y.cmp(&other.y))
            .then(self.s.cmp(&other.s))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `ℤ[s^{±1}, y, t^{±1}]`.
///
/// Terms are kept sorted ascending in the monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(Monomial, Coeff)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<Coeff>) -> Self {
        Self::term(c, 0, 0, 0)
    }

    /// `c · s^s · y^y · t^t`.
    pub fn term(c: impl Into<Coeff>, s: i32, y: u32, t: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: vec![(Monomial::new(s, y, t), c)],
        }
    }

    pub fn s() -> Self {
        Self::term(1, 1, 0, 0)
    }

    pub fn s_inv() -> Self {
        Self::term(1, -1, 0, 0)
    }

    pub fn y() -> Self {
        Self::term(1, 0, 1, 0)
    }

    pub fn t() -> Self {
        Self::term(1, 0, 0, 1)
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut acc: FxHashMap<Monomial, Coeff> = FxHashMap::default();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Monomial, Coeff>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        MPoly { terms }
    }

    fn from_sorted_unchecked(terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> + ExactSizeIterator {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn coeff(&self, m: Monomial) -> Coeff {
        match self.terms.binary_search_by(|(k, _)| k.cmp(&m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Coeff::zero(),
        }
    }

    /// Constant polynomial value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(Coeff::zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Multiplies by the monomial `s^ds y^dy t^dt`.
    pub fn shift(&self, ds: i32, dy: u32, dt: i32) -> Self {
        let d = Monomial::new(ds, dy, dt);
        let mut terms: Vec<_> = self.terms.iter().map(|(m, c)| (m.mul(d), c.clone())).collect();
        // The graded order is not translation invariant.
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        MPoly { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn bits(&self) -> u64 {
        self.terms.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
    }

    pub fn max_y(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.y).max()
    }

    /// Largest `e_s + e_y` over all terms, ignoring `t`.
    pub fn sy_degree(&self) -> Option<i64> {
        self.terms.iter().map(|(m, _)| i64::from(m.s) + i64::from(m.y)).max()
    }

    pub fn t_range(&self) -> Option<(i32, i32)> {
        let lo = self.terms.iter().map(|(m, _)| m.t).min()?;
        let hi = self.terms.iter().map(|(m, _)| m.t).max()?;
        Some((lo, hi))
    }

    pub fn s_range(&self) -> Option<(i32, i32)> {
        let lo = self.terms.iter().map(|(m, _)| m.s).min()?;
        let hi = self.terms.iter().map(|(m, _)| m.s).max()?;
        Some((lo, hi))
    }

    pub fn has_t(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.t != 0)
    }

    /// The coefficient of `t^j`, as a polynomial in `s, y`.
    pub fn t_coeff(&self, j: i32) -> MPoly {
        MPoly::from_sorted_unchecked(
            self.terms
                .iter()
                .filter(|(m, _)| m.t == j)
                .map(|(m, c)| (Monomial::new(m.s, m.y, 0), c.clone()))
                .collect(),
        )
    }

    /// Splits into `t`-coefficients, keyed by exponent.
    pub fn t_coeffs(&self) -> std::collections::BTreeMap<i32, MPoly> {
        let mut out: std::collections::BTreeMap<i32, Vec<(Monomial, Coeff)>> = Default::default();
        for (m, c) in &self.terms {
            out.entry(m.t)
                .or_default()
                .push((Monomial::new(m.s, m.y, 0), c.clone()));
        }
        out.into_iter()
            .map(|(j, mut v)| {
                v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
                (j, MPoly::from_sorted_unchecked(v))
            })
            .collect()
    }

    /// Inverse of [`MPoly::t_coeffs`].
    pub fn from_t_coeffs<'a, I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = (i32, &'a MPoly)>,
    {
        let mut terms = Vec::new();
        for (j, p) in coeffs {
            terms.extend(p.terms.iter().map(|(m, c)| (Monomial::new(m.s, m.y, m.t + j), c.clone())));
        }
        MPoly::from_terms(terms)
    }

    /// Groups by power of `y`: entry `k` is the coefficient of `y^k` (a polynomial in `s, t`).
    pub fn y_coeffs(&self) -> Vec<MPoly> {
        let n = self.max_y().map_or(0, |d| d as usize + 1);
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); n];
        for (m, c) in &self.terms {
            buckets[m.y as usize].push((Monomial::new(m.s, 0, m.t), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut v| {
                v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
                MPoly::from_sorted_unchecked(v)
            })
            .collect()
    }

    /// Inverse of [`MPoly::y_coeffs`].
    pub fn from_y_coeffs(coeffs: &[MPoly]) -> Self {
        let mut terms = Vec::new();
        for (k, p) in coeffs.iter().enumerate() {
            terms.extend(p.terms.iter().map(|(m, c)| (Monomial::new(m.s, m.y + k as u32, m.t), c.clone())));
        }
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        MPoly::from_sorted_unchecked(terms)
    }

    /// `p(s, y, t) ↦ p(s^{-1}, y, t)`.
    pub fn invert_s(&self) -> Self {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial::new(-m.s, m.y, m.t), c.clone()))
            .collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        MPoly { terms }
    }

    pub fn is_s_symmetric(&self) -> bool {
        *self == self.invert_s()
    }

    /// Substitutes `y ↦ y + c`.
    pub fn shift_y(&self, c: i64) -> Self {
        if c == 0 {
            return self.clone();
        }
        let coeffs = self.y_coeffs();
        // Horner in y: ((a_n)(y+c) + a_{n-1})(y+c) + ...
        let lin = &MPoly::y() + &MPoly::constant(c);
        let mut acc = MPoly::zero();
        for a in coeffs.iter().rev() {
            acc = &(&acc * &lin) + a;
        }
        acc
    }

    /// Substitutes `y ↦ value` for an integer value.
    pub fn subs_y(&self, value: i64) -> Self {
        let v = Coeff::from(value);
        MPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.s, 0, m.t), c * v.pow(m.y))),
        )
    }

    /// Substitutes `t ↦ 1`.
    pub fn subs_t_one(&self) -> Self {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (Monomial::new(m.s, m.y, 0), c.clone())))
    }

    /// Numeric evaluation at `(s, y)`, returning the complex `t`-coefficients.
    pub fn eval_sy(&self, s: Complex64, y: Complex64) -> Result<std::collections::BTreeMap<i32, Complex64>, PolyError> {
        if s == Complex64::zero() && self.terms.iter().any(|(m, _)| m.s < 0) {
            return Err(PolyError::DivisionByZero);
        }
        let mut out: std::collections::BTreeMap<i32, Complex64> = Default::default();
        for (m, c) in &self.terms {
            let v = coeff_to_f64(c) * s.powi(m.s) * y.powi(m.y as i32);
            *out.entry(m.t).or_insert(Complex64::zero()) += v;
        }
        Ok(out)
    }

    /// Numeric evaluation of a `t`-free polynomial.
    pub fn eval_sy_scalar(&self, s: Complex64, y: Complex64) -> Result<Complex64, PolyError> {
        Ok(self.eval_sy(s, y)?.values().sum())
    }
}

pub(crate) fn coeff_to_f64(c: &Coeff) -> f64 {
    c.to_f64().unwrap_or(if c.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

fn merge(a: &MPoly, b: &MPoly, negate_b: bool) -> MPoly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    let (x, y) = (&a.terms, &b.terms);
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            Ordering::Less => {
                out.push(x[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_b { -&y[j].1 } else { y[j].1.clone() };
                out.push((y[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &x[i].1 - &y[j].1 } else { &x[i].1 + &y[j].1 };
                if !c.is_zero() {
                    out.push((x[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&x[i..]);
    for (m, c) in &y[j..] {
        out.push((*m, if negate_b { -c } else { c.clone() }));
    }
    MPoly::from_sorted_unchecked(out)
}

fn multiply(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() || b.is_zero() {
        return MPoly::zero();
    }
    let (a, b) = if a.len() < b.len() { (a, b) } else { (b, a) };
    let headroom = 64 - (a.len() as u64).leading_zeros() as u64 + 1;
    if a.bits() + b.bits() + headroom < 126 {
        // Small-coefficient fast path: every partial sum fits in i128.
        let bs: Vec<(Monomial, i128)> = b.terms.iter().map(|(m, c)| (*m, c.to_i128().unwrap())).collect();
        let mut acc: FxHashMap<Monomial, i128> =
            FxHashMap::with_capacity_and_hasher(a.len() * b.len() / 2 + 1, Default::default());
        for (ma, ca) in &a.terms {
            let ca = ca.to_i128().unwrap();
            for (mb, cb) in &bs {
                *acc.entry(ma.mul(*mb)).or_insert(0) += ca * cb;
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(m, c)| (m, Coeff::from(c)))
            .collect();
        terms.sort_unstable_by(|x, y| x.0.cmp(&y.0));
        return MPoly::from_sorted_unchecked(terms);
    }
    let mut acc: FxHashMap<Monomial, Coeff> = FxHashMap::default();
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let e = acc.entry(ma.mul(*mb)).or_insert_with(Coeff::zero);
            *e += ca * cb;
        }
    }
    MPoly::from_map(acc)
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        merge(self, rhs, false)
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        merge(self, rhs, true)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        multiply(self, rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(mut self) -> MPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: &MPoly) -> MPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        *self = &*self - rhs;
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::constant(c)
    }
}

pub(crate) fn write_power(f: &mut fmt::Formatter<'_>, var: &str, e: i64, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{var}")
    } else {
        write!(f, "{var}^{e}")
    }
}

/// Writes `c·m` as a signed summand; `exps` lists `(variable, exponent)`.
pub(crate) fn write_term(f: &mut fmt::Formatter<'_>, c: &Coeff, exps: &[(&str, i64)], leading: bool) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    match (leading, neg) {
        (true, true) => f.write_str("-")?,
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
        (true, false) => {}
    }
    let is_unit_monomial = exps.iter().all(|(_, e)| *e == 0);
    let mut first = true;
    if !abs.is_one() || is_unit_monomial {
        write!(f, "{abs}")?;
        first = false;
    }
    for (v, e) in exps {
        write_power(f, v, *e, &mut first)?;
    }
    Ok(())
}

impl fmt::Display for MPoly {
    /// Highest term first in the canonical monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            write_term(f, c, &[("t", m.t as i64), ("y", m.y as i64), ("s", m.s as i64)], i == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_sym() -> MPoly {
        &MPoly::s() + &MPoly::s_inv()
    }

    #[test]
    fn difference_of_squares() {
        let p = &MPoly::s() + &MPoly::s_inv();
        let q = &MPoly::s() - &MPoly::s_inv();
        assert_eq!(&p * &q, &MPoly::term(1, 2, 0, 0) - &MPoly::term(1, -2, 0, 0));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let p = &x_sym() + &MPoly::term(-7, 1, 3, -2);
        let z = &p + &(-&p);
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
    }

    #[test]
    fn square_of_x() {
        let expected = MPoly::from_terms([
            (Monomial::new(2, 0, 0), 1.into()),
            (Monomial::new(0, 0, 0), 2.into()),
            (Monomial::new(-2, 0, 0), 1.into()),
        ]);
        assert_eq!(x_sym().pow(2), expected);
        assert_eq!(x_sym().pow(0), MPoly::one());
    }

    #[test]
    fn big_coefficients_take_slow_path() {
        let big = MPoly::constant(Coeff::from(1u64 << 62) * Coeff::from(1u64 << 62));
        let p = &big * &big;
        assert_eq!(p.as_constant().unwrap(), Coeff::from(2).pow(248u32));
    }

    #[test]
    fn shift_y_then_back() {
        let p = &(&MPoly::y().pow(3) - &MPoly::term(2, 1, 1, 0)) + &MPoly::term(1, -1, 0, 1);
        assert_eq!(p.shift_y(2).shift_y(-2), p);
        assert_eq!(MPoly::y().shift_y(-2), &MPoly::y() - &MPoly::constant(2));
    }

    #[test]
    fn eval_rejects_zero_s_with_negative_powers() {
        let p = MPoly::s_inv();
        assert_eq!(
            p.eval_sy_scalar(Complex64::zero(), Complex64::zero()),
            Err(PolyError::DivisionByZero)
        );
        let q = MPoly::s();
        assert_eq!(q.eval_sy_scalar(Complex64::zero(), Complex64::zero()).unwrap(), Complex64::zero());
    }

    #[test]
    fn display_is_canonical() {
        let p = &(&MPoly::term(2, 0, 1, 0) - &MPoly::term(1, -2, 0, 0)) + &MPoly::term(-3, 0, 0, 2);
        assert_eq!(p.to_string(), "-3*t^2 + 2*y - s^-2");
    }
}
