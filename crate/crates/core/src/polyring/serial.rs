//! JSON wire format: `{"vars": [...], "terms": [{"e": [...], "c": "<decimal>"}]}`.
//!
//! Coefficients travel as decimal strings so no precision is lost.

use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::mpoly::{MPoly, Monomial};
use super::xypoly::{XYMonomial, XYPoly};
use super::Coeff;

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Vec<i64>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

const SYT: [&str; 3] = ["s", "y", "t"];
const XY: [&str; 2] = ["x", "y"];

fn check_vars<E: serde::de::Error>(got: &[String], want: &[&str]) -> Result<(), E> {
    if got.len() != want.len() || got.iter().zip(want).any(|(a, b)| a != b) {
        return Err(E::custom(format!("expected vars {want:?}, got {got:?}")));
    }
    Ok(())
}

fn parse_coeff<E: serde::de::Error>(c: &str) -> Result<Coeff, E> {
    Coeff::from_str(c).map_err(|e| E::custom(format!("bad coefficient {c:?}: {e}")))
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            vars: SYT.iter().map(|v| v.to_string()).collect(),
            terms: self
                .terms()
                .rev()
                .map(|(m, c)| TermJson {
                    e: vec![m.s as i64, m.y as i64, m.t as i64],
                    c: c.to_string(),
                })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(de)?;
        check_vars(&raw.vars, &SYT)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let [s, y, tt] = t.e[..] else {
                return Err(D::Error::custom("exponent vector must have length 3"));
            };
            let y = u32::try_from(y).map_err(|_| D::Error::custom("y exponent must be nonnegative"))?;
            let s = i32::try_from(s).map_err(D::Error::custom)?;
            let tt = i32::try_from(tt).map_err(D::Error::custom)?;
            terms.push((Monomial::new(s, y, tt), parse_coeff(&t.c)?));
        }
        Ok(MPoly::from_terms(terms))
    }
}

impl Serialize for XYPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            vars: XY.iter().map(|v| v.to_string()).collect(),
            terms: self
                .terms()
                .rev()
                .map(|(m, c)| TermJson {
                    e: vec![m.x as i64, m.y as i64],
                    c: c.to_string(),
                })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for XYPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(de)?;
        check_vars(&raw.vars, &XY)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let [x, y] = t.e[..] else {
                return Err(D::Error::custom("exponent vector must have length 2"));
            };
            let x = u32::try_from(x).map_err(|_| D::Error::custom("x exponent must be nonnegative"))?;
            let y = u32::try_from(y).map_err(|_| D::Error::custom("y exponent must be nonnegative"))?;
            terms.push((XYMonomial { x, y }, parse_coeff(&t.c)?));
        }
        Ok(XYPoly::from_terms(terms))
    }
}

/// Serde adapter writing complex numbers as `{"re": .., "im": ..}`.
pub mod complex_json {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct ReIm {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(z: &Complex64, ser: S) -> Result<S::Ok, S::Error> {
        ReIm { re: z.re, im: z.im }.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Complex64, D::Error> {
        let r = ReIm::deserialize(de)?;
        Ok(Complex64::new(r.re, r.im))
    }

    /// The same adapter for `BTreeMap<i32, Complex64>`.
    pub mod map {
        use std::collections::BTreeMap;

        use num_complex::Complex64;
        use serde::ser::SerializeMap;
        use serde::{Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(m: &BTreeMap<i32, Complex64>, ser: S) -> Result<S::Ok, S::Error> {
            let mut out = ser.serialize_map(Some(m.len()))?;
            for (k, v) in m {
                out.serialize_entry(&k.to_string(), &super::ReIm { re: v.re, im: v.im })?;
            }
            out.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BTreeMap<i32, Complex64>, D::Error> {
            let raw: BTreeMap<String, super::ReIm> = BTreeMap::deserialize(de)?;
            raw.into_iter()
                .map(|(k, v)| {
                    let k: i32 = k.parse().map_err(serde::de::Error::custom)?;
                    Ok((k, Complex64::new(v.re, v.im)))
                })
                .collect()
        }
    }
}
