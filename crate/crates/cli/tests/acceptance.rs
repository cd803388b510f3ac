//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};
use talex_core::charvariety::*;
use talex_core::freegroup::{fox_derivative, fox_fundamental_identity_holds, Gen, Letter, Word};
use talex_core::polyring::{complex_roots, complex_roots_int, resultant_y, to_xy, MPoly, UniPoly, XYPoly};
use talex_core::presentations::*;
use talex_core::riley::*;
use talex_core::twisted::*;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn laurent(terms: &[(i64, i32, u32)]) -> MPoly {
    terms.iter().fold(MPoly::zero(), |acc, &(c, s, y)| &acc + &MPoly::term(c, s, y, 0))
}

fn t_poly(coeffs: &[i64]) -> MPoly {
    coeffs
        .iter()
        .enumerate()
        .fold(MPoly::zero(), |acc, (j, &c)| &acc + &MPoly::term(c, 0, 0, j as i32))
}

fn xy(terms: &[(i64, u32, u32)]) -> XYPoly {
    XYPoly::from_i64(terms)
}

fn k(alpha: i64, beta: i64) -> KnotPresentation {
    schubert_relator(TwoBridgeParams::new(alpha, beta).unwrap())
}

fn j(k: i64, q: i64) -> KnotPresentation {
    j_relator(JParams::new(k, q).unwrap())
}

fn sweep() -> Vec<(i64, i64)> {
    (1..=6).flat_map(|k| (-3..=3).filter(|&q| q != 0).map(move |q| (k, q))).collect()
}

fn is_fibered_member(k: i64, q: i64) -> bool {
    (k == 1 && q != 1) || (k == 3 && q > 0) || (k == 2 && q.abs() == 1)
}

/// `Δ(s²)` as an ordinary polynomial in `s`.
fn in_s_squared(delta: &MPoly) -> UniPoly {
    let (_, hi) = delta.t_range().unwrap();
    let mut c = vec![BigInt::zero(); 2 * hi as usize + 1];
    for jj in 0..=hi {
        c[2 * jj as usize] = delta.t_coeff(jj).as_constant().unwrap();
    }
    UniPoly::new(c)
}

fn point_set_matches(found: &[CharacterPoint], expected: &[(Complex64, Complex64)], tol: f64) -> bool {
    let close = |p: &CharacterPoint, e: &(Complex64, Complex64)| (p.x - e.0).norm() < tol && (p.y - e.1).norm() < tol;
    found.len() == expected.len()
        && expected.iter().all(|e| found.iter().any(|p| close(p, e)))
        && found.iter().all(|p| expected.iter().any(|e| close(p, e)))
}

fn seven_four_factorization() -> Outcome {
    let pivot: Word = "bAbABaBabAbABaBa".parse().map_err(err)?;
    check(pivot == j_block(4).pow(2), "word is ((ba^-1)^2 (b^-1 a)^2)^2")?;
    let p = KnotPresentation::explicit(pivot);
    let phi = riley_poly(&p, Convention::Riley).map_err(err)?;
    let first = laurent(&[(1, 0, 0), (1, -2, 2), (1, 2, 2), (-1, 0, 3)]);
    let second = laurent(&[
        (1, 0, 0),
        (-2, -2, 1),
        (-2, 2, 1),
        (3, -2, 2),
        (2, 0, 2),
        (3, 2, 2),
        (-1, -2, 3),
        (-3, 0, 3),
        (-1, 2, 3),
        (1, 0, 4),
    ]);
    let (sign, power) = unit_ratio(&phi.sy_form, &(&first * &second)).ok_or("phi is not a unit times the product")?;
    let delta = t_poly(&[4, -7, 4]);
    check(alexander_poly(&k(15, 11)) == delta, "Alexander polynomial of K(15, 11)")?;
    check(alexander_poly(&p) == delta, "Alexander polynomial of the word presentation")?;
    let reducible = first.subs_y(2);
    check(reducible == laurent(&[(4, -2, 0), (-7, 0, 0), (4, 2, 0)]), format!("first factor at y = 2 is {reducible}"))?;
    let from_delta = delta
        .terms()
        .fold(MPoly::zero(), |acc, (m, c)| &acc + &MPoly::term(c.clone(), 2 * m.t - 2, 0, 0));
    check(reducible == from_delta, "s^-2 Delta(s^2)")?;
    Ok(format!("phi = {sign} * s^{power} * product"))
}

fn five_two_golden() -> Outcome {
    let p = k(7, 3);
    let riley = riley_poly(&p, Convention::Riley).map_err(err)?;
    let phi = xy(&[(1, 0, 0), (-4, 2, 0), (2, 4, 0), (2, 0, 1), (-1, 2, 1), (-1, 4, 1), (-1, 0, 2), (2, 2, 2), (-1, 0, 3)]);
    check(riley.xy_form == phi, format!("phi = {}", riley.xy_form))?;
    let ta = twisted_alexander_with(&p, &riley).map_err(err)?;
    let outer = xy(&[(2, 2, 0), (-1, 2, 1), (1, 0, 2)]);
    let middle = xy(&[(-2, 1, 0)]);
    check(ta.coeffs.keys().copied().collect::<Vec<_>>() == vec![0, 1, 2], "support {0, 1, 2}")?;
    check(ta.coeff(0) == outer && ta.coeff(2) == outer, "psi_0 = psi_2")?;
    check(ta.coeff(1) == middle, "psi_1")?;
    let c = Complex64::new;
    let r = 0.5f64.sqrt();
    let monic = monic_characters(&p, 1e-9, None).map_err(err)?;
    let monic_pts: Vec<_> = monic.points.iter().map(|m| m.point).collect();
    check(
        monic.status == MonicStatus::FiniteSet && point_set_matches(&monic_pts, &[(c(r, 0.0), c(0.5, 0.0)), (c(-r, 0.0), c(0.5, 0.0))], 1e-9),
        format!("monic characters {monic_pts:?}"),
    )?;
    let i6 = 1.0 / 6f64.sqrt();
    let drop = degree_drop_locus(&p, 1e-9).map_err(err)?;
    check(
        point_set_matches(&drop, &[(c(0.0, i6), c(-2.0 / 3.0, 0.0)), (c(0.0, -i6), c(-2.0 / 3.0, 0.0))], 1e-9),
        format!("degree drop {drop:?}"),
    )?;
    let on_top_zero = solve_system(&phi, &outer, 1e-9).map_err(err)?;
    let pts = on_top_zero.points().ok_or("psi_2 shares a component with phi")?;
    let shifted = &middle - &XYPoly::one();
    let cascade: Vec<_> = pts
        .iter()
        .filter(|pt| shifted.eval(pt.x, pt.y).norm() <= 1e-9 * shifted.eval_abs(pt.x, pt.y).max(1.0))
        .collect();
    check(cascade.is_empty(), "psi_2 = 0 and psi_1 = 1 has solutions")?;
    Ok(format!("{} monic, {} degree-drop characters", monic_pts.len(), drop.len()))
}

fn riley_degrees() -> Outcome {
    let mut bad = Vec::new();
    for (kk, q) in sweep() {
        let d = i64::from(riley_poly(&j(kk, q), Convention::Riley).map_err(err)?.degree().map_err(err)?);
        let expected = match (kk, q > 0) {
            (1, true) => 2 * q - 2,
            (_, true) => (kk + 1) * q - 1,
            (_, false) => (kk + 1) * q.abs(),
        };
        if d != expected {
            bad.push((kk, q, d, expected));
        }
    }
    check(bad.is_empty(), format!("mismatches {bad:?}"))?;
    Ok(format!("{} knots", sweep().len()))
}

fn top_degrees() -> Outcome {
    let mut bad = Vec::new();
    let mut vacuous = Vec::new();
    for (kk, q) in sweep() {
        let expected = if kk % 2 == 0 {
            (kk + 1) * q.abs() - (kk + 4) / 2
        } else if kk == 1 && q > 0 {
            0
        } else if q > 0 {
            (kk - 3) / 2
        } else {
            (kk - 1) / 2
        };
        match twisted_alexander_symbolic(&j(kk, q), Convention::Riley) {
            Ok(ta) => {
                let d = i64::from(ta.top().total_degree().map_err(err)?);
                if d != expected {
                    bad.push((kk, q, d, expected));
                }
            }
            Err(TwistedError::EmptyVariety) => {
                let phi = riley_poly(&j(kk, q), Convention::Riley).map_err(err)?;
                check(phi.xy_form.as_constant().is_some_and(|c| c.abs().is_one()), "empty variety must have unit phi")?;
                vacuous.push((kk, q));
            }
            Err(e) => return Err(format!("J({kk}, {}): {e}", 2 * q)),
        }
    }
    check(bad.is_empty(), format!("mismatches {bad:?}"))?;
    check(vacuous == vec![(1, 1)], format!("unexpected empty varieties {vacuous:?}"))?;
    Ok(format!("{} knots; J(1, 2) is the unknot, no nonabelian characters", sweep().len() - vacuous.len()))
}

fn recursion() -> Outcome {
    let rep = RepMatrices::new(Convention::Shifted);
    let mut notes = Vec::new();
    for kk in 2..=5 {
        let block = j_block(kk);
        let trace = rep.word_matrix(&block).trace();
        let phi = |q: i64| riley_from_matrix(&rep.word_matrix(&block.pow(q)));
        for q in 2..=3 {
            let (cur, predicted) = (phi(q), &(&trace * &phi(q - 1)) - &phi(q - 2));
            let how = if cur == predicted {
                "exact".to_string()
            } else {
                let (sign, power) = unit_ratio(&cur, &predicted).ok_or(format!("k={kk} q={q} fails"))?;
                format!("unit {sign}*s^{power}")
            };
            let additive = cur.sy_degree() == phi(q - 1).sy_degree().zip(trace.sy_degree()).map(|(a, b)| a + b);
            check(additive, format!("k={kk} q={q}: degrees not additive"))?;
            notes.push(format!("k={kk},q={q}:{how}"));
        }
        let report = riley_recursion_check(kk, 3, Convention::Shifted);
        check(report.all_hold(), format!("library check disagrees for k={kk}"))?;
    }
    Ok(notes.join(" "))
}

fn reducible() -> Outcome {
    let tol = 1e-8;
    let rep = RepMatrices::new(Convention::Riley);
    let mut notes = Vec::new();
    for (name, p) in [("5_2", k(7, 3)), ("7_4", k(15, 11)), ("3_1", j(2, 1))] {
        let delta = alexander_poly(&p);
        let det = fox_image(&p.relator, Gen::A, &rep, None).det();
        let phi = riley_poly(&p, Convention::Riley).map_err(err)?;
        let roots = complex_roots_int(&in_s_squared(&delta), 1e-12).map_err(err)?;
        let mut worst: f64 = 0.0;
        for root in &roots {
            let s0 = root.z;
            let y2 = Complex64::new(2.0, 0.0);
            check(phi.sy_form.eval_sy_scalar(s0, y2).map_err(err)?.norm() < tol, format!("{name}: phi(s0, 2) != 0"))?;
            let got = det.eval_sy(s0, y2).map_err(err)?;
            let scaled = |f: Complex64| -> Vec<Complex64> {
                let (_, hi) = delta.t_range().unwrap();
                (0..=hi)
                    .map(|jj| f.powi(jj) * delta.t_coeff(jj).as_constant().unwrap().to_string().parse::<f64>().unwrap())
                    .collect()
            };
            let (a, b) = (scaled(s0), scaled(1.0 / s0));
            let mut expected = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (jj, y) in b.iter().enumerate() {
                    expected[i + jj] += x * y;
                }
            }
            let significant: BTreeMap<i32, Complex64> = got.into_iter().filter(|(_, c)| c.norm() > tol).collect();
            let lo = *significant.keys().next().ok_or(format!("{name}: det M vanishes"))?;
            check(lo % 2 == 0, format!("{name}: odd t-shift {lo}"))?;
            let zero = Complex64::new(0.0, 0.0);
            let hi = (*significant.keys().next_back().unwrap() - lo).max(expected.len() as i32 - 1);
            for jj in 0..=hi {
                let g = significant.get(&(jj + lo)).unwrap_or(&zero);
                let e = expected.get(jj as usize).unwrap_or(&zero);
                worst = worst.max((g - e).norm());
            }
        }
        check(worst < tol, format!("{name}: max coefficient error {worst:e}"))?;
        notes.push(format!("{name}: {} roots, max error {worst:.1e}", roots.len()));
    }
    Ok(notes.join("; "))
}

fn twisted_properties() -> Outcome {
    let mut fibered = 0;
    for (kk, q) in sweep().into_iter().filter(|&kq| kq != (1, 1)) {
        let p = j(kk, q);
        let name = format!("J({kk}, {})", 2 * q);
        let riley = riley_poly(&p, Convention::Riley).map_err(err)?;
        let ta = twisted_alexander_with(&p, &riley).map_err(err)?;
        let genus = classical_invariants(&alexander_poly(&p)).map_err(err)?.genus;
        check(reciprocality_check(&ta.coeffs), format!("{name}: not reciprocal"))?;
        check(ta.degree() <= 4 * genus - 2, format!("{name}: degree {} > 4g - 2", ta.degree()))?;
        check(wada_check(&p, &riley).map_err(err)?.holds, format!("{name}: column choices disagree"))?;
        if is_fibered_member(kk, q) {
            fibered += 1;
            let m = monic_characters(&p, 1e-9, None).map_err(err)?;
            check(m.status == MonicStatus::WholeComponentMonic, format!("{name}: not monic everywhere"))?;
            check(ta.degree() == 4 * genus - 2, format!("{name}: degree {} != 4g - 2", ta.degree()))?;
        }
    }
    Ok(format!("{} knots, {fibered} fibered", sweep().len() - 1))
}

fn criterion() -> Outcome {
    let r = finiteness_criterion(7, &alexander_poly(&k(7, 3))).map_err(err)?;
    check(r.overall && r.c == BigInt::from(2), "5_2 must satisfy the criterion")?;
    let r = finiteness_criterion(15, &alexander_poly(&k(15, 11))).map_err(err)?;
    check(!r.overall && r.c == BigInt::from(4), "7_4 must fail the criterion")?;
    check(r.primes.iter().all(|v| v.c_squared_mod_p == 1), "16 = 1 mod 3 and mod 5")?;
    let mut count = 0;
    for (kk, q) in sweep().into_iter().filter(|&(kk, q)| is_fibered_member(kk, q)) {
        let alpha = j_to_twobridge(kk, 2 * q).map_err(err)?.alpha;
        let r = finiteness_criterion(alpha, &alexander_poly(&j(kk, q))).map_err(err)?;
        check(!r.overall && r.c.abs().is_one(), format!("J({kk}, {}) must fail", 2 * q))?;
        count += 1;
    }
    Ok(format!("5_2 true, 7_4 false, {count} fibered members false"))
}

fn slice() -> Outcome {
    let mut notes = Vec::new();
    for (name, p, nonmonic) in [("5_2", k(7, 3), true), ("7_4", k(15, 11), false)] {
        let ta = twisted_alexander_symbolic(&p, Convention::Riley).map_err(err)?;
        let zero = Complex64::new(0.0, 0.0);
        let roots = complex_roots(&ta.modulus.phi.specialize_x(zero), 1e-12).map_err(err)?;
        check(!roots.is_empty(), format!("{name}: empty slice"))?;
        let mut closest = f64::INFINITY;
        for root in &roots {
            let n = ta.at(zero, root.z, 1e-9).map_err(err)?.normalize_monic().map_err(err)?;
            check(n.degree == 2, format!("{name}: degree {} at y = {}", n.degree, root.z))?;
            closest = closest.min((n.leading - 1.0).norm());
        }
        if nonmonic {
            check(closest > 1e-3, format!("{name}: leading value within {closest:e} of 1"))?;
        }
        let report = metabelian_slice(&p, 1e-9).map_err(err)?;
        check(report.all_full_degree() && report.entries.len() == roots.len(), format!("{name}: library slice disagrees"))?;
        notes.push(format!("{name}: {} characters, min |lead - 1| = {closest:.3}", roots.len()));
    }
    Ok(notes.join("; "))
}

fn bound() -> Outcome {
    let b = bezout_bound(2, 2).map_err(err)?;
    check(b == 36, format!("bound {b}"))?;
    let m = monic_characters(&j(2, 2), 1e-9, None).map_err(err)?;
    check(m.points.len() == 2 && m.points.len() as i64 <= b, format!("{} monic characters", m.points.len()))?;
    check(j_to_twobridge(2, 4).map_err(err)? == TwoBridgeParams { alpha: 7, beta: 3 }, "J(2, 4) is 5_2")?;
    check(matches!(bezout_bound(4, 2), Err(CharVarietyError::FiberedOrExcluded(_))), "k = 2q must be rejected")?;
    Ok(format!("2 <= {b}; k = 2q rejected"))
}

const PROPERTY_CASES: u32 = 256;

fn runner(seed: u64) -> TestRunner {
    TestRunner::new(Config {
        cases: PROPERTY_CASES,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    })
}

fn word_strategy() -> impl Strategy<Value = Word> {
    prop::collection::vec((any::<bool>(), any::<bool>()), 0..24).prop_map(|ls| {
        Word::from_letters(ls.into_iter().map(|(a, pos)| Letter::new(if a { Gen::A } else { Gen::B }, if pos { 1 } else { -1 })))
    })
}

fn mpoly_strategy() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((-9i64..=9, -3i32..=3, 0u32..=3, -2i32..=2), 0..6)
        .prop_map(|ts| ts.into_iter().fold(MPoly::zero(), |acc, (c, s, y, t)| &acc + &MPoly::term(c, s, y, t)))
}

fn xy_strategy() -> impl Strategy<Value = XYPoly> {
    prop::collection::vec((-9i64..=9, 0u32..=4, 0u32..=3), 0..6).prop_map(|ts| XYPoly::from_i64(&ts))
}

/// `y^d + lower terms`.
fn monic_y_strategy() -> impl Strategy<Value = XYPoly> {
    (1u32..=3, prop::collection::vec((-5i64..=5, 0u32..=2), 0..4)).prop_map(|(d, lower)| {
        let coeffs: Vec<UniPoly> = (0..d)
            .map(|i| lower.iter().filter(|(_, e)| e % d == i).fold(UniPoly::zero(), |acc, &(c, e)| &acc + &UniPoly::from_i64(&[0, c]).pow(e / d).scale(&c.into())))
            .collect();
        &XYPoly::term(1, 0, d) + &XYPoly::from_y_coeffs(&coeffs)
    })
}

/// Primitive part of the last nonzero pseudo-remainder: the gcd up to a constant.
fn gcd_degree(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> usize {
    let trim = |v: &mut Vec<BigInt>| {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() && !a.is_empty() {
            let la = a.last().unwrap().clone();
            let shift = a.len() - b.len();
            for x in a.iter_mut() {
                *x *= &lb;
            }
            for (i, c) in b.iter().enumerate() {
                a[i + shift] -= &la * c;
            }
            trim(&mut a);
        }
        let content = a.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if !content.is_zero() {
            for x in a.iter_mut() {
                *x /= &content;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn properties() -> Outcome {
    let mut notes = Vec::new();
    let mut run = |name: &str, result: Result<(), String>| {
        notes.push(format!("{name} {PROPERTY_CASES}"));
        result.map_err(|e| format!("{name}: {e}"))
    };

    run(
        "fox",
        runner(101)
            .run(&word_strategy(), |w| {
                prop_assert!(fox_fundamental_identity_holds(&w));
                let t_minus_1 = &MPoly::t() - &MPoly::one();
                let sum = &talex_core::freegroup::abelianize(&fox_derivative(&w, Gen::A))
                    + &talex_core::freegroup::abelianize(&fox_derivative(&w, Gen::B));
                prop_assert_eq!(&sum * &t_minus_1, &MPoly::term(1, 0, 0, w.exponent_sum() as i32) - &MPoly::one());
                Ok(())
            })
            .map_err(err),
    )?;

    run(
        "ring",
        runner(102)
            .run(&(mpoly_strategy(), mpoly_strategy(), mpoly_strategy()), |(a, b, c)| {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a + &b) - &b, a.clone());
                prop_assert_eq!(&a * &MPoly::one(), a);
                Ok(())
            })
            .map_err(err),
    )?;

    run(
        "to_xy",
        runner(103)
            .run(&xy_strategy(), |p| {
                prop_assert_eq!(to_xy(&p.to_sy()).map_err(|e| TestCaseError::fail(e.to_string()))?, p);
                Ok(())
            })
            .map_err(err),
    )?;

    let params = (1i64..=40).prop_flat_map(|h| {
        let alpha = 2 * h + 1;
        (Just(alpha), -alpha + 1..alpha)
    });
    run(
        "det(-1)",
        runner(104)
            .run(&params, |(alpha, beta)| {
                let Ok(p) = TwoBridgeParams::new(alpha, beta) else {
                    return Ok(());
                };
                let delta = alexander_poly(&schubert_relator(p));
                let at_minus_one: BigInt = delta
                    .t_coeffs()
                    .iter()
                    .map(|(jj, c)| c.as_constant().unwrap() * if jj % 2 == 0 { 1 } else { -1 })
                    .sum();
                prop_assert_eq!(at_minus_one.abs(), BigInt::from(alpha));
                Ok(())
            })
            .map_err(err),
    )?;

    let pair = (monic_y_strategy(), monic_y_strategy(), prop::option::of(-3i64..=3), -3i64..=3);
    run(
        "resultant",
        runner(105)
            .run(&pair, |(g, h, common, x0)| {
                let (g, h) = match common {
                    Some(c) => {
                        let f = &XYPoly::y() - &XYPoly::constant(c);
                        (&g * &f, &h * &f)
                    }
                    None => (g, h),
                };
                let res = resultant_y(&g, &h);
                if common.is_some() {
                    prop_assert!(res.is_zero());
                }
                let at = |p: &XYPoly| -> Vec<BigInt> { p.y_coeffs().iter().map(|u| u.eval_int(&BigInt::from(x0))).collect() };
                let shared = gcd_degree(at(&g), at(&h)) > 0;
                prop_assert_eq!(res.eval_int(&BigInt::from(x0)).is_zero(), shared);
                Ok(())
            })
            .map_err(err),
    )?;
    Ok(notes.join(", "))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "7_4 Riley polynomial factors", limit: Some(Duration::from_secs(5)), run: seven_four_factorization },
        Criterion { id: 2, name: "5_2 reference values", limit: Some(Duration::from_secs(10)), run: five_two_golden },
        Criterion { id: 3, name: "Riley polynomial degrees over the sweep", limit: Some(Duration::from_secs(60)), run: riley_degrees },
        Criterion { id: 4, name: "top coefficient degrees over the sweep", limit: Some(Duration::from_secs(120)), run: top_degrees },
        Criterion { id: 5, name: "Riley recursion in q", limit: None, run: recursion },
        Criterion { id: 6, name: "reducible characters", limit: None, run: reducible },
        Criterion { id: 7, name: "reciprocality, degree bound, column choice, fibered members", limit: None, run: twisted_properties },
        Criterion { id: 8, name: "arithmetic finiteness criterion", limit: None, run: criterion },
        Criterion { id: 9, name: "metabelian slice", limit: None, run: slice },
        Criterion { id: 10, name: "monic count within the bound", limit: None, run: bound },
        Criterion { id: 11, name: "property suites", limit: None, run: properties },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed >= limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(note) => println!("PASS [{:>2}] {}: {note} ({elapsed:.2?})", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL [{:>2}] {}: {why} ({elapsed:.2?})", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
