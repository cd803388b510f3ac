//! 2×2 matrices over `ℤ[s^{±1}, y, t^{±1}]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::mpoly::MPoly;
use super::PolyError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub e: [[MPoly; 2]; 2],
}

impl Mat2 {
    pub fn new(a: MPoly, b: MPoly, c: MPoly, d: MPoly) -> Self {
        Mat2 { e: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        Self::new(MPoly::one(), MPoly::zero(), MPoly::zero(), MPoly::one())
    }

    pub fn zero() -> Self {
        Self::new(MPoly::zero(), MPoly::zero(), MPoly::zero(), MPoly::zero())
    }

    pub fn det(&self) -> MPoly {
        let [[a, b], [c, d]] = &self.e;
        &(a * d) - &(b * c)
    }

    pub fn trace(&self) -> MPoly {
        &self.e[0][0] + &self.e[1][1]
    }

    /// `[[d, -b], [-c, a]]`; the inverse whenever `det = 1`.
    pub fn adjugate(&self) -> Self {
        let [[a, b], [c, d]] = &self.e;
        Self::new(d.clone(), -b, -c, a.clone())
    }

    pub fn scale(&self, k: &MPoly) -> Self {
        self.map(|p| p * k)
    }

    pub fn map(&self, f: impl Fn(&MPoly) -> MPoly) -> Self {
        let [[a, b], [c, d]] = &self.e;
        Self::new(f(a), f(b), f(c), f(d))
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(MPoly::is_zero)
    }

    /// Numeric evaluation at `(s, y, t)`.
    pub fn eval(&self, s: Complex64, y: Complex64, t: Complex64) -> Result<[[Complex64; 2]; 2], PolyError> {
        let ev = |p: &MPoly| -> Result<Complex64, PolyError> {
            Ok(p.eval_sy(s, y)?.into_iter().map(|(j, c)| c * t.powi(j)).sum())
        };
        Ok([
            [ev(&self.e[0][0])?, ev(&self.e[0][1])?],
            [ev(&self.e[1][0])?, ev(&self.e[1][1])?],
        ])
    }
}

impl Add for &Mat2 {
    type Output = Mat2;
    fn add(self, rhs: &Mat2) -> Mat2 {
        let (l, r) = (&self.e, &rhs.e);
        Mat2::new(&l[0][0] + &r[0][0], &l[0][1] + &r[0][1], &l[1][0] + &r[1][0], &l[1][1] + &r[1][1])
    }
}

impl Sub for &Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: &Mat2) -> Mat2 {
        let (l, r) = (&self.e, &rhs.e);
        Mat2::new(&l[0][0] - &r[0][0], &l[0][1] - &r[0][1], &l[1][0] - &r[1][0], &l[1][1] - &r[1][1])
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        let (l, r) = (&self.e, &rhs.e);
        let entry = |i: usize, j: usize| &(&l[i][0] * &r[0][j]) + &(&l[i][1] * &r[1][j]);
        Mat2::new(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1))
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.map(|p| -p)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjugate_inverts_unimodular() {
        let c = Mat2::new(MPoly::s(), MPoly::one(), MPoly::zero(), MPoly::s_inv());
        assert!(c.det().is_one());
        assert_eq!(&c * &c.adjugate(), Mat2::identity());
    }

    #[test]
    fn trace_and_det_of_product() {
        let c = Mat2::new(MPoly::s(), MPoly::one(), MPoly::zero(), MPoly::s_inv());
        let d = Mat2::new(
            MPoly::s(),
            MPoly::zero(),
            &MPoly::constant(2) - &MPoly::y(),
            MPoly::s_inv(),
        );
        assert!((&c * &d).det().is_one());
        // tr(C D^{-1}) = y
        assert_eq!((&c * &d.adjugate()).trace(), MPoly::y());
    }
}
