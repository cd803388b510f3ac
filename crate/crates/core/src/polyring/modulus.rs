//! Reduction modulo a polynomial whose leading `y`-coefficient is a unit.

use std::collections::BTreeMap;

use num_traits::{One, Signed};

use super::mpoly::MPoly;
use super::upoly::UniPoly;
use super::xypoly::XYPoly;
use super::{Coeff, PolyError};

/// A modulus `φ(x, y)` with leading `y`-coefficient `±1`.
///
/// Division by `φ` in `y` never leaves `ℤ`, both in the `(x, y)` form and in
/// the Laurent `(s, y)` form obtained from `x = s + s^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RileyModulus {
    pub phi: XYPoly,
    pub deg_y: u32,
    pub lead_sign: i8,
    phi_sy: MPoly,
    phi_y: Vec<UniPoly>,
    phi_sy_y: Vec<MPoly>,
}

impl RileyModulus {
    pub fn new(phi: XYPoly) -> Result<Self, PolyError> {
        let deg_y = phi.deg_y().ok_or(PolyError::ZeroPolynomial)?;
        let lead = phi.lc_y();
        let lead_sign = match lead.as_constant_unit() {
            Some(sign) => sign,
            None => return Err(PolyError::NonUnitLeading),
        };
        let phi_sy = phi.to_sy();
        let phi_y = phi.y_coeffs();
        let phi_sy_y = phi_sy.y_coeffs();
        Ok(RileyModulus {
            phi,
            deg_y,
            lead_sign,
            phi_sy,
            phi_y,
            phi_sy_y,
        })
    }

    /// `φ` with `x = s + s^{-1}` substituted.
    pub fn phi_sy(&self) -> &MPoly {
        &self.phi_sy
    }

    /// Remainder of `p` on division by `φ` in `y`.
    pub fn reduce(&self, p: &XYPoly) -> XYPoly {
        let d = self.deg_y as usize;
        let mut c = p.y_coeffs();
        if c.len() <= d {
            return p.clone();
        }
        let sign = Coeff::from(self.lead_sign);
        for e in (d..c.len()).rev() {
            if c[e].is_zero() {
                continue;
            }
            // φ = sign·y^d + lower, so y^d ≡ -sign·lower.
            let q = c[e].scale(&sign);
            for j in 0..d {
                let delta = &q * &self.phi_y[j];
                c[e - d + j] = &c[e - d + j] - &delta;
            }
            c[e] = UniPoly::zero();
        }
        c.truncate(d);
        XYPoly::from_y_coeffs(&c)
    }

    /// Remainder of a Laurent polynomial in `s, y, t` on division by `φ(s, y)` in `y`.
    pub fn reduce_sy(&self, p: &MPoly) -> MPoly {
        let d = self.deg_y as usize;
        if p.max_y().map_or(true, |e| (e as usize) < d) {
            return p.clone();
        }
        let mut c = p.y_coeffs();
        let sign = Coeff::from(self.lead_sign);
        for e in (d..c.len()).rev() {
            if c[e].is_zero() {
                continue;
            }
            let q = c[e].scale(&sign);
            for j in 0..d {
                if self.phi_sy_y[j].is_zero() {
                    continue;
                }
                let delta = &q * &self.phi_sy_y[j];
                c[e - d + j] = &c[e - d + j] - &delta;
            }
            c[e] = MPoly::zero();
        }
        c.truncate(d);
        MPoly::from_y_coeffs(&c)
    }
}

trait ConstantUnit {
    fn as_constant_unit(&self) -> Option<i8>;
}

impl ConstantUnit for UniPoly {
    fn as_constant_unit(&self) -> Option<i8> {
        if self.degree() != Some(0) {
            return None;
        }
        let c = self.lc();
        if c.is_one() {
            Some(1)
        } else if c.is_negative() && (-c).is_one() {
            Some(-1)
        } else {
            None
        }
    }
}

/// Free-function form of [`RileyModulus::reduce`].
pub fn reduce_mod(p: &XYPoly, m: &RileyModulus) -> XYPoly {
    m.reduce(p)
}

/// Exact quotient of Laurent polynomials in `t` whose coefficients live in
/// `ℤ[s^{±1}, y]`, optionally modulo a Riley modulus.
///
/// `den` must have leading `t`-coefficient exactly `1`. The remainder must
/// vanish (modulo `m` when given); anything else is
/// [`PolyError::NonzeroRemainder`].
pub fn div_exact_t(num: &MPoly, den: &MPoly, m: Option<&RileyModulus>) -> Result<MPoly, PolyError> {
    let reduce = |p: &MPoly| match m {
        Some(m) => m.reduce_sy(p),
        None => p.clone(),
    };
    let den_c = den.t_coeffs();
    let (&den_lo, _) = den_c.first_key_value().ok_or(PolyError::ZeroPolynomial)?;
    let (&den_hi, den_lead) = den_c.last_key_value().expect("nonempty");
    if !den_lead.is_one() {
        return Err(PolyError::NotMonicInT);
    }
    let den_c: Vec<(i32, MPoly)> = den_c.into_iter().map(|(j, p)| (j, reduce(&p))).collect();

    let mut rem: BTreeMap<i32, MPoly> = num
        .t_coeffs()
        .into_iter()
        .map(|(j, p)| (j, reduce(&p)))
        .filter(|(_, p)| !p.is_zero())
        .collect();
    let Some(&num_lo) = rem.keys().next() else {
        return Ok(MPoly::zero());
    };
    let q_lo = num_lo - den_lo;
    let mut quotient: BTreeMap<i32, MPoly> = BTreeMap::new();
    while let Some((&e, _)) = rem.last_key_value() {
        let qe = e - den_hi;
        if qe < q_lo {
            break;
        }
        let c = rem.remove(&e).expect("present");
        for (j, dj) in &den_c[..den_c.len() - 1] {
            let k = qe + j;
            let prod = reduce(&(&c * dj));
            let slot = rem.entry(k).or_insert_with(MPoly::zero);
            *slot = &*slot - &prod;
            if slot.is_zero() {
                rem.remove(&k);
            }
        }
        quotient.insert(qe, c);
    }
    if !rem.is_empty() {
        return Err(PolyError::NonzeroRemainder);
    }
    Ok(MPoly::from_t_coeffs(quotient.iter().map(|(j, p)| (*j, p))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_sy() -> MPoly {
        &MPoly::s() + &MPoly::s_inv()
    }

    fn quadratic_den() -> MPoly {
        // t^2 - (s + s^-1) t + 1
        &(&MPoly::term(1, 0, 0, 2) - &(&x_sy() * &MPoly::t())) + &MPoly::one()
    }

    fn example_phi() -> XYPoly {
        // 1 - 4x^2 + 2x^4 + (2 - x^2 - x^4)y - (1 - 2x^2)y^2 - y^3
        XYPoly::from_i64(&[
            (1, 0, 0),
            (-4, 2, 0),
            (2, 4, 0),
            (2, 0, 1),
            (-1, 2, 1),
            (-1, 4, 1),
            (-1, 0, 2),
            (2, 2, 2),
            (-1, 0, 3),
        ])
    }

    #[test]
    fn modulus_reduces_itself_to_zero() {
        let m = RileyModulus::new(example_phi()).unwrap();
        assert_eq!(m.lead_sign, -1);
        assert!(m.reduce(&example_phi()).is_zero());
        assert!(m.reduce_sy(m.phi_sy()).is_zero());
    }

    #[test]
    fn already_reduced_is_unchanged() {
        let m = RileyModulus::new(example_phi()).unwrap();
        let p = XYPoly::from_i64(&[(2, 2, 0), (-1, 2, 1), (1, 0, 2)]);
        assert_eq!(m.reduce(&p), p);
    }

    #[test]
    fn cubic_remainder_multiplies_back() {
        // φ = y^3 + (x^2 - 2) y - 5: y^3 ≡ -(x^2-2) y + 5
        let phi = XYPoly::from_i64(&[(1, 0, 3), (1, 2, 1), (-2, 0, 1), (-5, 0, 0)]);
        let m = RileyModulus::new(phi.clone()).unwrap();
        let p = XYPoly::y().pow(3);
        let r = m.reduce(&p);
        assert_eq!(r, XYPoly::from_i64(&[(-1, 2, 1), (2, 0, 1), (5, 0, 0)]));
        // p - r is exactly one copy of φ
        assert_eq!(&p - &r, phi);
    }

    #[test]
    fn non_unit_leading_is_rejected() {
        let phi = XYPoly::from_i64(&[(2, 0, 2), (1, 0, 0)]);
        assert_eq!(RileyModulus::new(phi), Err(PolyError::NonUnitLeading));
        let phi = XYPoly::from_i64(&[(1, 1, 2), (1, 0, 0)]);
        assert_eq!(RileyModulus::new(phi), Err(PolyError::NonUnitLeading));
    }

    #[test]
    fn constructed_quotient() {
        let den = quadratic_den();
        let q = &MPoly::t() + &MPoly::one();
        let num = &den * &q;
        assert_eq!(div_exact_t(&num, &den, None).unwrap(), q);
    }

    #[test]
    fn monomial_quotient() {
        let num = MPoly::term(1, 0, 0, 3);
        let den = MPoly::term(1, 0, 0, 2);
        assert_eq!(div_exact_t(&num, &den, None).unwrap(), MPoly::t());
    }

    #[test]
    fn laurent_quotient() {
        let den = quadratic_den();
        let q = &MPoly::term(3, 1, 1, -2) - &MPoly::term(1, 0, 0, -1);
        assert_eq!(div_exact_t(&(&den * &q), &den, None).unwrap(), q);
    }

    #[test]
    fn remainder_is_a_hard_failure() {
        let den = quadratic_den();
        let num = &(&den * &MPoly::t()) + &MPoly::y();
        assert_eq!(div_exact_t(&num, &den, None), Err(PolyError::NonzeroRemainder));
    }

    #[test]
    fn remainder_vanishing_mod_phi_is_accepted() {
        let m = RileyModulus::new(example_phi()).unwrap();
        let den = quadratic_den();
        let num = &(&den * &MPoly::t()) + &(m.phi_sy() * &MPoly::term(1, 1, 0, 1));
        assert_eq!(div_exact_t(&num, &den, Some(&m)).unwrap(), MPoly::t());
    }

    #[test]
    fn non_monic_denominator_is_rejected() {
        let den = MPoly::term(2, 0, 0, 1);
        assert_eq!(div_exact_t(&MPoly::t(), &den, None), Err(PolyError::NotMonicInT));
    }
}
