//! Words in the free group on `a, b`, their group ring, Fox derivatives and
//! abelianization.
//!
//! Text syntax: `a`, `b` for the generators and `A`, `B` for their inverses,
//! so `baBA` is `b·a·b⁻¹·a⁻¹`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::polyring::{Coeff, MPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    A,
    B,
}

/// `gen^exp` with `exp = ±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Gen,
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: Gen, exp: i8) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        Letter { gen, exp }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, exp: -self.exp }
    }

    fn to_char(self) -> char {
        match (self.gen, self.exp) {
            (Gen::A, 1) => 'a',
            (Gen::A, _) => 'A',
            (Gen::B, 1) => 'b',
            (Gen::B, _) => 'B',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid letter {0:?} in word (expected one of a, A, b, B)")]
pub struct WordParseError(pub char);

/// A freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn generator(gen: Gen) -> Self {
        Word(vec![Letter::new(gen, 1)])
    }

    pub fn a() -> Self {
        Self::generator(Gen::A)
    }

    pub fn b() -> Self {
        Self::generator(Gen::B)
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        Self::from_letters(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Free reduction; stored words are always reduced, so this is a copy.
    pub fn reduce(&self) -> Word {
        Self::from_letters(self.0.iter().copied())
    }

    /// Sum of exponents; the image of the word under abelianization.
    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|l| l.exp as i64).sum()
    }

    fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }
}

impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            letters.push(match ch {
                'a' => Letter::new(Gen::A, 1),
                'A' => Letter::new(Gen::A, -1),
                'b' => Letter::new(Gen::B, 1),
                'B' => Letter::new(Gen::B, -1),
                _ => return Err(WordParseError(ch)),
            });
        }
        Ok(Word::from_letters(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        self.0.iter().try_for_each(|l| write!(f, "{}", l.to_char()))
    }
}

/// A finite integer combination of reduced words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElt {
    terms: BTreeMap<Word, Coeff>,
}

impl GroupRingElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        Self::from_term(w, Coeff::one())
    }

    pub fn from_term(w: Word, c: Coeff) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    fn add_term(&mut self, w: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Left multiplication by a word.
    pub(crate) fn left_mul_word(&self, w: &Word) -> GroupRingElt {
        let mut out = GroupRingElt::zero();
        for (u, c) in &self.terms {
            out.add_term(w.mul(u), c.clone());
        }
        out
    }
}

impl Add for &GroupRingElt {
    type Output = GroupRingElt;
    fn add(self, rhs: &GroupRingElt) -> GroupRingElt {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Mul for &GroupRingElt {
    type Output = GroupRingElt;
    fn mul(self, rhs: &GroupRingElt) -> GroupRingElt {
        let mut out = GroupRingElt::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.mul(v), a * b);
            }
        }
        out
    }
}

impl Sub for &GroupRingElt {
    type Output = GroupRingElt;
    fn sub(self, rhs: &GroupRingElt) -> GroupRingElt {
        self + &(-rhs)
    }
}

impl Neg for &GroupRingElt {
    type Output = GroupRingElt;
    fn neg(self) -> GroupRingElt {
        GroupRingElt {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for GroupRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c < &Coeff::zero();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{abs}*{w}")?;
            }
        }
        Ok(())
    }
}

/// The Fox derivative `∂w/∂g`.
///
/// A letter `g` at position `i` contributes `+w[..i]`; a letter `g⁻¹`
/// contributes `−w[..=i]`.
pub fn fox_derivative(w: &Word, g: Gen) -> GroupRingElt {
    let mut out = GroupRingElt::zero();
    for (i, l) in w.letters().iter().enumerate() {
        if l.gen != g {
            continue;
        }
        if l.exp == 1 {
            out.add_term(w.prefix(i), Coeff::one());
        } else {
            out.add_term(w.prefix(i + 1), -Coeff::one());
        }
    }
    out
}

/// Maps every word to `t^(exponent sum)`, extended linearly.
pub fn abelianize(e: &GroupRingElt) -> MPoly {
    MPoly::from_terms(e.terms().map(|(w, c)| {
        let t = i32::try_from(w.exponent_sum()).expect("exponent sum fits in i32");
        (crate::polyring::Monomial::new(0, 0, t), c.clone())
    }))
}

/// Checks `(∂r/∂a)(a − 1) + (∂r/∂b)(b − 1) = r − 1` in the group ring.
pub fn fox_fundamental_identity_holds(r: &Word) -> bool {
    let one = GroupRingElt::one();
    let a_minus_1 = &GroupRingElt::from_word(Word::a()) - &one;
    let b_minus_1 = &GroupRingElt::from_word(Word::b()) - &one;
    let lhs = &(&fox_derivative(r, Gen::A) * &a_minus_1) + &(&fox_derivative(r, Gen::B) * &b_minus_1);
    let rhs = &GroupRingElt::from_word(r.clone()) - &one;
    lhs == rhs
}

/// Checks the product rule `∂(uv)/∂g = ∂u/∂g + u·∂v/∂g` for both generators.
pub fn fox_product_rule_holds(u: &Word, v: &Word) -> bool {
    [Gen::A, Gen::B].into_iter().all(|g| {
        let lhs = fox_derivative(&u.mul(v), g);
        let rhs = &fox_derivative(u, g) + &fox_derivative(v, g).left_mul_word(u);
        lhs == rhs
    })
}
