//! Command-line grammar. Every parsed command serializes back to JSON so a
//! report carries enough to rerun it.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Serialize, Serializer};
use talex_core::polyring::{complex_json, XYPoly};
use talex_core::presentations::KnotSpec;
use talex_core::riley::Convention;

#[derive(Debug, Clone, Parser, Serialize)]
#[command(name = "talex", version, about = "Twisted Alexander polynomials of 2-bridge knots")]
pub struct Cli {
    #[command(subcommand)]
    #[serde(flatten)]
    pub command: Verb,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Relative tolerance for numeric zero tests.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    /// Parametrization of the representation: riley or shifted.
    #[arg(long, global = true, default_value_t = Convention::Riley)]
    pub convention: Convention,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Vars {
    /// `x = s + 1/s` and `y`.
    Xy,
    /// Laurent form in `s` and `y`.
    Sy,
}

fn display<T: fmt::Display, S: Serializer>(v: &T, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_str(v)
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "verb", rename_all = "snake_case")]
pub enum Verb {
    /// Print the one-relator presentation.
    Present {
        /// K:alpha,beta, J:k,l or W:word.
        #[arg(long)]
        #[serde(serialize_with = "display")]
        knot: KnotSpec,
    },
    /// Classical Alexander polynomial, genus and fiberedness.
    Alexander {
        #[arg(long)]
        #[serde(serialize_with = "display")]
        knot: KnotSpec,
    },
    /// Riley polynomial.
    Riley {
        #[arg(long)]
        #[serde(serialize_with = "display")]
        knot: KnotSpec,
        #[arg(long, value_enum, default_value_t = Vars::Xy)]
        vars: Vars,
    },
    /// Twisted Alexander polynomial, symbolically or at a character.
    Talex {
        #[arg(long)]
        #[serde(serialize_with = "display")]
        knot: KnotSpec,
        /// Character `x,y`; complex values as `a+bi`.
        #[arg(long)]
        at: Option<PointArg>,
    },
    /// Characters with monic twisted Alexander polynomial.
    Monic {
        #[arg(long)]
        #[serde(serialize_with = "display")]
        knot: KnotSpec,
        /// Restrict to a factor of the Riley polynomial: polynomial JSON in
        /// `x, y`, or `@path` to a file holding it.
        #[arg(long, value_parser = parse_factor)]
        factor: Option<XYPoly>,
    },
    /// Characters where the degree drops below `4g - 2`.
    Degdrop {
        #[arg(long)]
        #[serde(serialize_with = "display")]
        knot: KnotSpec,
    },
    /// Characters on the slice `x = 0`.
    Metabelian {
        #[arg(long)]
        #[serde(serialize_with = "display")]
        knot: KnotSpec,
    },
    /// Bound on the number of monic characters of `J(k, 2q)`.
    Bound {
        #[arg(long)]
        #[serde(serialize_with = "display")]
        knot: KnotSpec,
    },
    /// Arithmetic finiteness criterion for monic characters.
    Criterion {
        #[arg(long)]
        #[serde(serialize_with = "display")]
        knot: KnotSpec,
    },
    /// Sampled fiberedness and genus detection.
    Fibered {
        #[arg(long)]
        #[serde(serialize_with = "display")]
        knot: KnotSpec,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Degree formulas over a range of `J(k, 2q)`.
    Degrees {
        /// Inclusive range `lo:hi`.
        #[arg(long, default_value = "1:6", allow_hyphen_values = true)]
        k: IntRange,
        /// Inclusive range `lo:hi`; `q = 0` is skipped.
        #[arg(long, default_value = "-3:3", allow_hyphen_values = true)]
        q: IntRange,
    },
    /// Reproduce the reference examples.
    Goldens {
        /// JSON file replacing the built-in reference data.
        #[arg(long)]
        data: Option<PathBuf>,
    },
}

impl Verb {
    pub fn name(&self) -> &'static str {
        match self {
            Verb::Present { .. } => "present",
            Verb::Alexander { .. } => "alexander",
            Verb::Riley { .. } => "riley",
            Verb::Talex { .. } => "talex",
            Verb::Monic { .. } => "monic",
            Verb::Degdrop { .. } => "degdrop",
            Verb::Metabelian { .. } => "metabelian",
            Verb::Bound { .. } => "bound",
            Verb::Criterion { .. } => "criterion",
            Verb::Fibered { .. } => "fibered",
            Verb::Degrees { .. } => "degrees",
            Verb::Goldens { .. } => "goldens",
        }
    }
}

fn parse_factor(raw: &str) -> Result<XYPoly, String> {
    let text = match raw.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?,
        None => raw.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| format!("not a polynomial in x, y: {e}"))
}

/// A character given on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PointArg {
    #[serde(with = "complex_json")]
    pub x: Complex64,
    #[serde(with = "complex_json")]
    pub y: Complex64,
}

impl FromStr for PointArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (x, y) = s.split_once(',').ok_or_else(|| format!("expected x,y, got {s:?}"))?;
        let parse = |v: &str| v.trim().parse::<Complex64>().map_err(|e| format!("bad complex number {v:?}: {e}"));
        Ok(PointArg { x: parse(x)?, y: parse(y)? })
    }
}

/// An inclusive integer range `lo:hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn iter(self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("expected lo:hi, got {s:?}");
        let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(IntRange { lo, hi })
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

impl Serialize for IntRange {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}
