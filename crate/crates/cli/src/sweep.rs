//! Parallel driver over `J(k, 2q)` parameter ranges. Results come back in
//! input order regardless of scheduling.

use rayon::prelude::*;
use serde::Serialize;
use talex_core::presentations::{j_relator, JParams};
use talex_core::riley::{riley_poly, Convention};
use talex_core::twisted::{twisted_alexander_with, TwistedError};

/// Environment variable capping the worker count; `0` or unset means automatic.
pub const THREADS_VAR: &str = "TALEX_THREADS";

fn thread_count() -> usize {
    std::env::var(THREADS_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

/// Maps `f` over `items` on a pool sized by [`THREADS_VAR`].
pub fn par_map<I, T, F>(items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    match rayon::ThreadPoolBuilder::new().num_threads(thread_count()).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

/// All `(k, q)` with `q ≠ 0`, sorted.
pub fn pairs(ks: impl IntoIterator<Item = i64>, qs: impl IntoIterator<Item = i64> + Clone) -> Vec<(i64, i64)> {
    ks.into_iter()
        .filter(|&k| k > 0)
        .flat_map(|k| qs.clone().into_iter().filter(|&q| q != 0).map(move |q| (k, q)))
        .collect()
}

/// The knots `J(1, 2q)`, `J(3, 2q)` with `q > 0`, and `J(2, ±2)`, minus the unknot `J(1, 2)`.
pub fn is_fibered_member(k: i64, q: i64) -> bool {
    (k == 1 && q != 1) || (k == 3 && q > 0) || (k == 2 && q.abs() == 1)
}

/// Total degree of the Riley polynomial of `J(k, 2q)`.
pub fn expected_riley_degree(k: i64, q: i64) -> i64 {
    match (k, q > 0) {
        (1, true) => 2 * q - 2,
        (_, true) => (k + 1) * q - 1,
        (_, false) => (k + 1) * q.abs(),
    }
}

/// Total degree of the top coefficient of the twisted Alexander polynomial of `J(k, 2q)`.
pub fn expected_top_degree(k: i64, q: i64) -> i64 {
    if k % 2 == 0 {
        (k + 1) * q.abs() - (k + 4) / 2
    } else if k == 1 && q > 0 {
        0
    } else if q > 0 {
        (k - 3) / 2
    } else {
        (k - 1) / 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub k: i64,
    pub q: i64,
    pub riley_degree: i64,
    pub riley_expected: i64,
    /// `None` when the nonabelian character variety is empty.
    pub top_degree: Option<i64>,
    pub top_expected: i64,
    pub note: Option<String>,
    pub pass: bool,
}

pub fn degree_row(k: i64, q: i64, convention: Convention) -> Result<DegreeRow, TwistedError> {
    let p = j_relator(JParams::new(k, q)?);
    let riley = riley_poly(&p, convention)?;
    let riley_degree = i64::from(riley.degree()?);
    let riley_expected = expected_riley_degree(k, q);
    let top_expected = expected_top_degree(k, q);
    let (top_degree, note) = match twisted_alexander_with(&p, &riley) {
        Ok(ta) => (Some(i64::from(ta.top().total_degree()?)), None),
        Err(TwistedError::EmptyVariety) => (None, Some("unknot: no nonabelian characters".to_string())),
        Err(e) => return Err(e),
    };
    let pass = riley_degree == riley_expected && top_degree.is_none_or(|d| d == top_expected);
    Ok(DegreeRow {
        k,
        q,
        riley_degree,
        riley_expected,
        top_degree,
        top_expected,
        note,
        pass,
    })
}

pub fn degree_table(pairs: &[(i64, i64)], convention: Convention) -> Result<Vec<DegreeRow>, TwistedError> {
    par_map(pairs, |&(k, q)| degree_row(k, q, convention)).into_iter().collect()
}
