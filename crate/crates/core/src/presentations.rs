//! One-relator presentations `⟨a, b | w a = b w⟩` of 2-bridge knot groups and
//! their classical Alexander invariants.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::freegroup::{abelianize, fox_derivative, Gen, Word, WordParseError};
use crate::polyring::{Coeff, MPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("J({k}, {l}) is not a knot: k*l must be even")]
    NotAKnot { k: i64, l: i64 },
    #[error("J({k}, {l}) is the unknot")]
    Unknot { k: i64, l: i64 },
    #[error("Alexander polynomial has odd exponent span {0}")]
    OddSpan(i32),
    #[error("Alexander polynomial is zero")]
    ZeroPolynomial,
    #[error("cannot parse knot spec {0:?}: expected K:alpha,beta, J:k,l or W:word")]
    BadSpec(String),
    #[error(transparent)]
    Word(#[from] WordParseError),
}

/// Schubert parameters of `K(α, β)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TwoBridgeParams {
    pub alpha: i64,
    pub beta: i64,
}

impl TwoBridgeParams {
    pub fn new(alpha: i64, beta: i64) -> Result<Self, PresentationError> {
        let bad = |why: &str| Err(PresentationError::InvalidParams(format!("K({alpha}, {beta}): {why}")));
        if alpha < 3 || alpha % 2 == 0 {
            return bad("alpha must be odd and at least 3");
        }
        if beta % 2 == 0 || beta.abs() >= alpha {
            return bad("beta must be odd with -alpha < beta < alpha");
        }
        if alpha.gcd(&beta) != 1 {
            return bad("alpha and beta must be coprime");
        }
        Ok(TwoBridgeParams { alpha, beta })
    }
}

/// Parameters of the double twist knot `J(k, 2q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct JParams {
    pub k: i64,
    pub q: i64,
}

impl JParams {
    pub fn new(k: i64, q: i64) -> Result<Self, PresentationError> {
        if k <= 0 {
            return Err(PresentationError::InvalidParams(format!("J({k}, {}): k must be positive", 2 * q)));
        }
        if q == 0 {
            return Err(PresentationError::Unknot { k, l: 0 });
        }
        Ok(JParams { k, q })
    }

    /// The twist parameter `l = 2q`.
    pub fn l(&self) -> i64 {
        2 * self.q
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PresentationSource {
    Schubert(TwoBridgeParams),
    J(JParams),
    ExplicitWord { word: String },
}

impl fmt::Display for PresentationSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationSource::Schubert(p) => write!(f, "K:{},{}", p.alpha, p.beta),
            PresentationSource::J(p) => write!(f, "J:{},{}", p.k, p.l()),
            PresentationSource::ExplicitWord { word } => write!(f, "W:{word}"),
        }
    }
}

/// A presentation with pivot `w` and relator `w a w⁻¹ b⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KnotPresentation {
    pub pivot: Word,
    pub relator: Word,
    pub source: PresentationSource,
}

impl KnotPresentation {
    pub fn from_pivot(pivot: Word, source: PresentationSource) -> Self {
        let relator = pivot.mul(&Word::a()).mul(&pivot.inverse()).mul(&Word::b().inverse());
        KnotPresentation { pivot, relator, source }
    }

    pub fn schubert(p: TwoBridgeParams) -> Self {
        schubert_relator(p)
    }

    pub fn j(p: JParams) -> Self {
        j_relator(p)
    }

    pub fn explicit(pivot: Word) -> Self {
        let word = pivot.to_string();
        Self::from_pivot(pivot, PresentationSource::ExplicitWord { word })
    }

    /// The `J`-parameters when the presentation came from that family.
    pub fn j_params(&self) -> Option<JParams> {
        match self.source {
            PresentationSource::J(p) => Some(p),
            _ => None,
        }
    }
}

/// Signs `ε_i = (-1)^⌊iβ/α⌋` for `i = 1..α-1`.
pub fn schubert_signs(p: TwoBridgeParams) -> Vec<i8> {
    (1..p.alpha)
        .map(|i| if Integer::div_floor(&(i * p.beta), &p.alpha).is_even() { 1 } else { -1 })
        .collect()
}

pub fn schubert_relator(p: TwoBridgeParams) -> KnotPresentation {
    let letters = schubert_signs(p).into_iter().enumerate().map(|(i, e)| {
        let gen = if i % 2 == 0 { Gen::A } else { Gen::B };
        crate::freegroup::Letter::new(gen, e)
    });
    KnotPresentation::from_pivot(Word::from_letters(letters), PresentationSource::Schubert(p))
}

/// The block `w_m` of the `J(k, 2q)` pivot.
pub fn j_block(k: i64) -> Word {
    let m = k / 2;
    let ba = Word::b().mul(&Word::a().inverse());
    let left = ba.pow(m);
    let right = Word::b().inverse().mul(&Word::a()).pow(m);
    if k % 2 == 0 {
        left.mul(&right)
    } else {
        left.mul(&Word::b()).mul(&Word::a()).mul(&right)
    }
}

pub fn j_relator(p: JParams) -> KnotPresentation {
    j_relator_unchecked(p.k, p.q)
}

/// `J(k, 2q)` without rejecting `q = 0`; the pivot is then empty.
pub(crate) fn j_relator_unchecked(k: i64, q: i64) -> KnotPresentation {
    let pivot = j_block(k).pow(q);
    KnotPresentation::from_pivot(pivot, PresentationSource::J(JParams { k, q }))
}

/// Schubert parameters of `J(k, l)`: `β/α ≡ l/(1 - kl)` modulo `ℤ`.
pub fn j_to_twobridge(k: i64, l: i64) -> Result<TwoBridgeParams, PresentationError> {
    if k <= 0 || l == 0 {
        return Err(PresentationError::InvalidParams(format!("J({k}, {l}): need k > 0, l != 0")));
    }
    if (k * l) % 2 != 0 {
        return Err(PresentationError::NotAKnot { k, l });
    }
    let d = 1 - k * l;
    let alpha = d.abs();
    if alpha == 1 {
        return Err(PresentationError::Unknot { k, l });
    }
    let r = (l * d.signum()).rem_euclid(alpha);
    let beta = if r % 2 != 0 { r } else { r - alpha };
    TwoBridgeParams::new(alpha, beta)
}

/// The raw `t`-image of `∂r/∂a`, before normalization.
pub fn alexander_raw(p: &KnotPresentation) -> MPoly {
    abelianize(&fox_derivative(&p.relator, Gen::A))
}

/// Shifts a polynomial in `t` to minimum exponent 0 and makes its leading
/// coefficient positive.
pub fn normalize_t(p: &MPoly) -> MPoly {
    let Some((lo, _)) = p.t_range() else {
        return MPoly::zero();
    };
    let shifted = p.shift(0, 0, -lo);
    let lead = shifted.terms().last().map(|(_, c)| c.clone()).unwrap_or_default();
    if lead.is_negative() {
        -shifted
    } else {
        shifted
    }
}

pub fn alexander_poly(p: &KnotPresentation) -> MPoly {
    normalize_t(&alexander_raw(p))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalInvariants {
    pub genus: i64,
    pub fibered: bool,
    #[serde(serialize_with = "crate::report::serialize_decimal")]
    pub leading_coeff: Coeff,
}

pub fn classical_invariants(delta: &MPoly) -> Result<ClassicalInvariants, PresentationError> {
    let (lo, hi) = delta.t_range().ok_or(PresentationError::ZeroPolynomial)?;
    let span = hi - lo;
    if span % 2 != 0 {
        return Err(PresentationError::OddSpan(span));
    }
    let lead = delta.t_coeff(hi).as_constant().unwrap_or_else(Coeff::zero);
    Ok(ClassicalInvariants {
        genus: i64::from(span / 2),
        fibered: lead.abs() == Coeff::from(1),
        leading_coeff: lead,
    })
}

/// A knot given as `K:alpha,beta`, `J:k,l` or `W:word`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KnotSpec {
    Schubert(TwoBridgeParams),
    J(JParams),
    Word(Word),
}

impl KnotSpec {
    pub fn presentation(&self) -> KnotPresentation {
        match self {
            KnotSpec::Schubert(p) => schubert_relator(*p),
            KnotSpec::J(p) => j_relator(*p),
            KnotSpec::Word(w) => KnotPresentation::explicit(w.clone()),
        }
    }
}

impl FromStr for KnotSpec {
    type Err = PresentationError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let bad = || PresentationError::BadSpec(spec.to_string());
        let (kind, body) = spec.trim().split_once(':').ok_or_else(bad)?;
        let pair = || -> Result<(i64, i64), PresentationError> {
            let (u, v) = body.split_once(',').ok_or_else(bad)?;
            Ok((u.trim().parse().map_err(|_| bad())?, v.trim().parse().map_err(|_| bad())?))
        };
        match kind.trim() {
            "K" | "k" => {
                let (alpha, beta) = pair()?;
                Ok(KnotSpec::Schubert(TwoBridgeParams::new(alpha, beta)?))
            }
            "J" | "j" => {
                let (k, l) = pair()?;
                if l % 2 != 0 {
                    return Err(PresentationError::InvalidParams(format!("J:{k},{l}: l must be even")));
                }
                Ok(KnotSpec::J(JParams::new(k, l / 2)?))
            }
            "W" | "w" => Ok(KnotSpec::Word(body.trim().parse()?)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotSpec::Schubert(p) => write!(f, "K:{},{}", p.alpha, p.beta),
            KnotSpec::J(p) => write!(f, "J:{},{}", p.k, p.l()),
            KnotSpec::Word(w) => write!(f, "W:{w}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::fox_fundamental_identity_holds;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn t_poly(coeffs: &[i64]) -> MPoly {
        MPoly::from_t_coeffs(
            coeffs
                .iter()
                .enumerate()
                .map(|(j, &c)| (j as i32, MPoly::constant(c)))
                .collect::<Vec<_>>()
                .iter()
                .map(|(j, p)| (*j, p)),
        )
    }

    #[test]
    fn schubert_words() {
        let k31 = schubert_relator(TwoBridgeParams::new(3, 1).unwrap());
        assert_eq!(k31.pivot, word("ab"));
        let k75 = schubert_relator(TwoBridgeParams::new(7, 5).unwrap());
        assert_eq!(k75.pivot, word("aBabAb"));
    }

    #[test]
    fn invalid_schubert_params() {
        assert!(TwoBridgeParams::new(8, 3).is_err());
        assert!(TwoBridgeParams::new(7, 4).is_err());
        assert!(TwoBridgeParams::new(9, 3).is_err());
        assert!(TwoBridgeParams::new(7, 7).is_err());
    }

    #[test]
    fn j_words() {
        assert_eq!(j_relator(JParams::new(2, 2).unwrap()).pivot, word("bABa").pow(2));
        assert_eq!(j_relator(JParams::new(4, 2).unwrap()).pivot, word("bAbABaBa").pow(2));
        assert_eq!(j_relator(JParams::new(3, 1).unwrap()).pivot, word("bAbaBa"));
        assert!(JParams::new(2, 0).is_err());
        assert!(JParams::new(0, 1).is_err());
    }

    #[test]
    fn j_to_schubert() {
        assert_eq!(j_to_twobridge(4, 4).unwrap(), TwoBridgeParams { alpha: 15, beta: 11 });
        assert_eq!(j_to_twobridge(2, 4).unwrap(), TwoBridgeParams { alpha: 7, beta: 3 });
        assert_eq!(j_to_twobridge(2, 2).unwrap(), TwoBridgeParams { alpha: 3, beta: 1 });
        assert_eq!(j_to_twobridge(1, 2), Err(PresentationError::Unknot { k: 1, l: 2 }));
        assert_eq!(j_to_twobridge(3, 3), Err(PresentationError::NotAKnot { k: 3, l: 3 }));
    }

    #[test]
    fn alexander_polynomials() {
        let k73 = schubert_relator(TwoBridgeParams::new(7, 3).unwrap());
        assert_eq!(alexander_poly(&k73), t_poly(&[2, -3, 2]));
        let k15 = schubert_relator(TwoBridgeParams::new(15, 11).unwrap());
        assert_eq!(alexander_poly(&k15), t_poly(&[4, -7, 4]));
        let trefoil = j_relator(JParams::new(2, 1).unwrap());
        assert_eq!(alexander_poly(&trefoil), t_poly(&[1, -1, 1]));
    }

    #[test]
    fn classical() {
        let inv = classical_invariants(&t_poly(&[2, -3, 2])).unwrap();
        assert_eq!((inv.genus, inv.fibered, inv.leading_coeff), (1, false, Coeff::from(2)));
        let inv = classical_invariants(&t_poly(&[1, -1, 1])).unwrap();
        assert_eq!((inv.genus, inv.fibered, inv.leading_coeff), (1, true, Coeff::from(1)));
        let inv = classical_invariants(&t_poly(&[4, -7, 4])).unwrap();
        assert_eq!((inv.genus, inv.fibered, inv.leading_coeff), (1, false, Coeff::from(4)));
        assert_eq!(classical_invariants(&t_poly(&[1, 1])), Err(PresentationError::OddSpan(1)));
    }

    #[test]
    fn relators_are_balanced() {
        for k in 1..=6 {
            for q in -3..=3 {
                let p = j_relator_unchecked(k, q);
                assert_eq!(p.relator.exponent_sum(), 0);
                assert!(fox_fundamental_identity_holds(&p.relator));
            }
        }
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("K:7,3".parse::<KnotSpec>().unwrap(), KnotSpec::Schubert(TwoBridgeParams { alpha: 7, beta: 3 }));
        assert_eq!("J:2,-4".parse::<KnotSpec>().unwrap(), KnotSpec::J(JParams { k: 2, q: -2 }));
        assert_eq!("W:bABa".parse::<KnotSpec>().unwrap(), KnotSpec::Word(word("bABa")));
        for bad in ["K:7", "J:2,3", "X:1,2", "K:8,3", "W:abc"] {
            assert!(bad.parse::<KnotSpec>().is_err(), "{bad}");
        }
        for good in ["K:7,3", "J:4,4", "W:bABa"] {
            assert_eq!(good.parse::<KnotSpec>().unwrap().to_string(), good);
        }
    }
}
