#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use talex_core::freegroup::{Gen, Letter, Word};
use talex_core::polyring::{MPoly, XYPoly};

pub const CASES: u32 = 256;

pub fn config(seed: u64) -> Config {
    Config {
        cases: CASES,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

fn coeff() -> impl Strategy<Value = BigInt> {
    prop_oneof![
        4 => (-9i64..=9).prop_map(BigInt::from),
        1 => any::<i64>().prop_map(|c| BigInt::from(c) << 70),
    ]
}

pub fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((coeff(), -3i32..=3, 0u32..=3, -2i32..=2), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .fold(MPoly::zero(), |acc, (c, s, y, t)| &acc + &MPoly::term(c, s, y, t))
    })
}

/// Polynomials in `s, y` only.
pub fn sy_poly() -> impl Strategy<Value = MPoly> {
    mpoly().prop_map(|p| p.subs_t_one())
}

pub fn xypoly(max_x: u32, max_y: u32) -> impl Strategy<Value = XYPoly> {
    prop::collection::vec((-9i64..=9, 0..=max_x, 0..=max_y), 0..6).prop_map(|terms| XYPoly::from_i64(&terms))
}

/// `±y^d + (terms of lower y-degree)`.
pub fn unit_leading(max_d: u32) -> impl Strategy<Value = XYPoly> {
    (1..=max_d, any::<bool>(), xypoly(3, max_d)).prop_map(|(d, neg, lower)| {
        let lower = XYPoly::from_y_coeffs(&lower.y_coeffs().into_iter().take(d as usize).collect::<Vec<_>>());
        let lead = XYPoly::term(if neg { -1 } else { 1 }, 0, d);
        &lead + &lower
    })
}

pub fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((any::<bool>(), any::<bool>()), 0..max_len).prop_map(|ls| {
        Word::from_letters(
            ls.into_iter()
                .map(|(is_a, pos)| Letter::new(if is_a { Gen::A } else { Gen::B }, if pos { 1 } else { -1 })),
        )
    })
}
