//! Riley polynomials of nonabelian representations `a ↦ C`, `b ↦ D`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::freegroup::{Gen, Letter, Word};
use crate::polyring::{to_xy, Mat2, MPoly, PolyError, RileyModulus, XYPoly};
use crate::presentations::{j_block, j_relator_unchecked, KnotPresentation, PresentationSource};

/// Which lower-left entry `D` carries: `2 - y` (Riley) or `-y` (shifted).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    #[default]
    Riley,
    Shifted,
}

impl Convention {
    /// The `y`-value of the reducible locus.
    pub fn reducible_y(self) -> i64 {
        match self {
            Convention::Riley => 2,
            Convention::Shifted => 0,
        }
    }

    pub fn other(self) -> Self {
        match self {
            Convention::Riley => Convention::Shifted,
            Convention::Shifted => Convention::Riley,
        }
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "riley" => Ok(Convention::Riley),
            "shifted" => Ok(Convention::Shifted),
            _ => Err(format!("unknown convention {s:?} (expected riley or shifted)")),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Riley => "riley",
            Convention::Shifted => "shifted",
        })
    }
}

/// The images of `a`, `b` and their inverses, with `t = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrices {
    pub c: Mat2,
    pub d: Mat2,
    pub c_inv: Mat2,
    pub d_inv: Mat2,
    pub convention: Convention,
}

impl RepMatrices {
    pub fn new(convention: Convention) -> Self {
        let c = Mat2::new(MPoly::s(), MPoly::one(), MPoly::zero(), MPoly::s_inv());
        let lower = &MPoly::constant(convention.reducible_y()) - &MPoly::y();
        let d = Mat2::new(MPoly::s(), MPoly::zero(), lower, MPoly::s_inv());
        RepMatrices {
            c_inv: c.adjugate(),
            d_inv: d.adjugate(),
            c,
            d,
            convention,
        }
    }

    pub fn letter(&self, l: Letter) -> &Mat2 {
        match (l.gen, l.exp > 0) {
            (Gen::A, true) => &self.c,
            (Gen::A, false) => &self.c_inv,
            (Gen::B, true) => &self.d,
            (Gen::B, false) => &self.d_inv,
        }
    }

    pub fn word_matrix(&self, w: &Word) -> Mat2 {
        w.letters()
            .iter()
            .fold(Mat2::identity(), |acc, &l| &acc * self.letter(l))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RileyPolynomial {
    pub sy_form: MPoly,
    pub xy_form: XYPoly,
    pub convention: Convention,
    pub source: PresentationSource,
}

impl RileyPolynomial {
    pub fn modulus(&self) -> Result<RileyModulus, PolyError> {
        RileyModulus::new(self.xy_form.clone())
    }

    /// Total degree of the `(x, y)` form.
    pub fn degree(&self) -> Result<u32, PolyError> {
        self.xy_form.total_degree()
    }
}

/// `W¹¹ + (s⁻¹ - s) W¹²`.
pub fn riley_from_matrix(w: &Mat2) -> MPoly {
    let factor = &MPoly::s_inv() - &MPoly::s();
    &w.e[0][0] + &(&factor * &w.e[0][1])
}

pub fn riley_poly(p: &KnotPresentation, convention: Convention) -> Result<RileyPolynomial, PolyError> {
    let rep = RepMatrices::new(convention);
    let sy_form = riley_from_matrix(&rep.word_matrix(&p.pivot));
    let xy_form = to_xy(&sy_form)?;
    Ok(RileyPolynomial {
        sy_form,
        xy_form,
        convention,
        source: p.source.clone(),
    })
}

/// Re-expresses `φ` in the other convention: `y ↦ y + 2` going to shifted,
/// `y ↦ y - 2` going back.
pub fn convention_shift(r: &RileyPolynomial) -> RileyPolynomial {
    let c = match r.convention {
        Convention::Riley => 2,
        Convention::Shifted => -2,
    };
    RileyPolynomial {
        sy_form: r.sy_form.shift_y(c),
        xy_form: r.xy_form.shift_y(c),
        convention: r.convention.other(),
        source: r.source.clone(),
    }
}

pub fn trace_poly(w: &Word, rep: &RepMatrices) -> MPoly {
    rep.word_matrix(w).trace()
}

/// `tr N^q` from `tr N` for `det N = 1`.
pub fn trace_power(tr: &MPoly, q: i64) -> MPoly {
    let n = q.unsigned_abs();
    let (mut prev, mut cur) = (MPoly::constant(2), tr.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(tr * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `φ` on the reducible locus, as a Laurent polynomial in `s`.
pub fn reducible_specialization(r: &RileyPolynomial) -> MPoly {
    r.sy_form.subs_y(r.convention.reducible_y())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RecursionOutcome {
    Exact,
    UpToUnit { sign: i8, s_power: i32 },
    Fails { difference: MPoly },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursionStep {
    pub q: i64,
    pub outcome: RecursionOutcome,
    pub degree: i64,
    pub previous_degree: i64,
    pub degree_additive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursionReport {
    pub k: i64,
    pub convention: Convention,
    pub trace: MPoly,
    pub trace_degree: i64,
    pub steps: Vec<RecursionStep>,
}

impl RecursionReport {
    pub fn all_hold(&self) -> bool {
        self.steps
            .iter()
            .all(|s| !matches!(s.outcome, RecursionOutcome::Fails { .. }))
    }
}

/// `±s^j` with `p = ±s^j q`, if one exists.
pub fn unit_ratio(p: &MPoly, q: &MPoly) -> Option<(i8, i32)> {
    let (mp, cp) = p.terms().next()?;
    let (mq, cq) = q.terms().next()?;
    if mp.y != mq.y || mp.t != mq.t {
        return None;
    }
    let sign: i8 = if cp == cq {
        1
    } else if *cp == -cq {
        -1
    } else {
        return None;
    };
    let j = mp.s - mq.s;
    let candidate = q.shift(j, 0, 0);
    let candidate = if sign < 0 { -candidate } else { candidate };
    (candidate == *p).then_some((sign, j))
}

/// Checks `φ_{k,q} = tr(W_m) φ_{k,q-1} - φ_{k,q-2}` for `q = 2..=q_max`.
pub fn riley_recursion_check(k: i64, q_max: i64, convention: Convention) -> RecursionReport {
    assert!(k > 0 && q_max >= 2, "recursion check needs k > 0 and q_max >= 2");
    let rep = RepMatrices::new(convention);
    let trace = trace_poly(&j_block(k), &rep);
    let trace_degree = trace.sy_degree().unwrap_or(0);
    let phi = |q: i64| riley_from_matrix(&rep.word_matrix(&j_relator_unchecked(k, q).pivot));
    let mut prev2 = phi(0);
    let mut prev1 = phi(1);
    let mut steps = Vec::new();
    for q in 2..=q_max {
        let cur = phi(q);
        let predicted = &(&trace * &prev1) - &prev2;
        let outcome = if cur == predicted {
            RecursionOutcome::Exact
        } else if let Some((sign, s_power)) = unit_ratio(&cur, &predicted) {
            RecursionOutcome::UpToUnit { sign, s_power }
        } else {
            RecursionOutcome::Fails {
                difference: &cur - &predicted,
            }
        };
        let degree = cur.sy_degree().unwrap_or(0);
        let previous_degree = prev1.sy_degree().unwrap_or(0);
        steps.push(RecursionStep {
            q,
            outcome,
            degree,
            previous_degree,
            degree_additive: degree == previous_degree + trace_degree,
        });
        prev2 = prev1;
        prev1 = cur;
    }
    RecursionReport {
        k,
        convention,
        trace,
        trace_degree,
        steps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{j_relator, schubert_relator, JParams, TwoBridgeParams};

    fn xy(terms: &[(i64, u32, u32)]) -> XYPoly {
        XYPoly::from_i64(terms)
    }

    #[test]
    fn rep_matrices_are_unimodular() {
        for conv in [Convention::Riley, Convention::Shifted] {
            let rep = RepMatrices::new(conv);
            assert!(rep.c.det().is_one());
            assert!(rep.d.det().is_one());
            assert_eq!(&rep.c * &rep.c_inv, Mat2::identity());
            assert_eq!(&rep.d * &rep.d_inv, Mat2::identity());
        }
        let rep = RepMatrices::new(Convention::Riley);
        assert_eq!((&rep.c * &rep.d_inv).trace(), MPoly::y());
    }

    #[test]
    fn twist_knot_shifted() {
        let p = j_relator(JParams::new(2, 1).unwrap());
        let r = riley_poly(&p, Convention::Shifted).unwrap();
        let expected = &(&(&MPoly::term(1, 2, 0, 0) + &MPoly::term(1, -2, 0, 0)) - &MPoly::y()) - &MPoly::one();
        assert_eq!(r.sy_form, expected);
        assert_eq!(r.xy_form, xy(&[(1, 2, 0), (-1, 0, 1), (-3, 0, 0)]));
    }

    #[test]
    fn trefoil_riley_and_shift() {
        let p = schubert_relator(TwoBridgeParams::new(3, 1).unwrap());
        let r = riley_poly(&p, Convention::Riley).unwrap();
        assert_eq!(r.xy_form, xy(&[(1, 2, 0), (-1, 0, 1), (-1, 0, 0)]));
        let shifted = convention_shift(&r);
        assert_eq!(shifted.xy_form, xy(&[(1, 2, 0), (-1, 0, 1), (-3, 0, 0)]));
        assert_eq!(convention_shift(&shifted), r);
        assert_eq!(reducible_specialization(&r), reducible_specialization(&shifted));
    }

    #[test]
    fn five_two_riley_polynomial() {
        let expected = xy(&[
            (1, 0, 0),
            (-4, 2, 0),
            (2, 4, 0),
            (2, 0, 1),
            (-1, 2, 1),
            (-1, 4, 1),
            (-1, 0, 2),
            (2, 2, 2),
            (-1, 0, 3),
        ]);
        let j = riley_poly(&j_relator(JParams::new(2, 2).unwrap()), Convention::Riley).unwrap();
        assert_eq!(j.xy_form, expected);
        let k = riley_poly(&schubert_relator(TwoBridgeParams::new(7, 3).unwrap()), Convention::Riley).unwrap();
        assert_eq!(k.xy_form, expected);
        assert_eq!(j.degree().unwrap(), 5);
        // y = 2 gives 2x^2 - 7
        let at_two = expected.subs_y(2);
        assert_eq!(at_two, crate::polyring::UniPoly::from_i64(&[-7, 0, 2]));
    }

    #[test]
    fn trace_powers() {
        let rep = RepMatrices::new(Convention::Shifted);
        let w1 = j_block(2);
        let tr = trace_poly(&w1, &rep);
        // (1 - s^2 y) + (-s^-2 y + (y + 1)^2)
        let expected = &(&(&MPoly::one() - &MPoly::term(1, 2, 1, 0)) - &MPoly::term(1, -2, 1, 0))
            + &(&MPoly::y() + &MPoly::one()).pow(2);
        assert_eq!(tr, expected);
        assert_eq!(tr.sy_degree(), Some(3));
        assert_eq!(trace_power(&tr, 1), tr);
        assert_eq!(trace_power(&tr, 0), MPoly::constant(2));
        assert_eq!(trace_power(&tr, -2), trace_power(&tr, 2));
        let w = rep.word_matrix(&w1);
        assert_eq!(trace_power(&tr, 3), (&(&w * &w) * &w).trace());
    }

    #[test]
    fn recursion_small() {
        for k in [2, 3] {
            let report = riley_recursion_check(k, 3, Convention::Riley);
            assert!(report.all_hold(), "{report:?}");
        }
    }

    #[test]
    fn unit_ratio_detects_monomial_factor() {
        let q = &MPoly::s() + &MPoly::y();
        let p = -q.shift(3, 0, 0);
        assert_eq!(unit_ratio(&p, &q), Some((-1, 3)));
        assert_eq!(unit_ratio(&(&p + &MPoly::one()), &q), None);
    }
}
