//! Complex roots of univariate polynomials.
//!
//! Initial approximations come from the eigenvalues of the companion matrix
//! (complex Schur form), which are then polished simultaneously with the
//! Aberth–Ehrlich iteration. Nearby approximations are merged into a single
//! root with multiplicity when the merged point passes a derivative test.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use super::upoly::UniPoly;

pub const DEFAULT_TOL: f64 = 1e-9;
const MAX_ABERTH_ITERS: usize = 600;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Root {
    #[serde(with = "crate::polyring::complex_json")]
    pub z: Complex64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("polynomial has degree < 1")]
    Constant,
    #[error("root iteration did not converge; {} approximations are unreliable", partial.len())]
    NonConvergence { partial: Vec<Root> },
}

fn horner(p: &[Complex64], z: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn horner_with_derivative(p: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &c in p.iter().rev() {
        d = d * z + v;
        v = v * z + c;
    }
    (v, d)
}

fn abs_scale(p: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    p.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
}

fn derivative(p: &[Complex64]) -> Vec<Complex64> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * i as f64)
        .collect()
}

/// Eigenvalues of the companion matrix of a monic polynomial.
fn companion_eigenvalues(monic: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = monic.len() - 1;
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        m[(i, n - 1)] = -monic[i];
    }
    let schur = m.try_schur(1e-15, 2000)?;
    let (_, t) = schur.unpack();
    let mut out = Vec::with_capacity(n);
    let mut i = 0;
    while i < n {
        let sub = if i + 1 < n { t[(i + 1, i)].norm() } else { 0.0 };
        let scale = t[(i, i)].norm() + if i + 1 < n { t[(i + 1, i + 1)].norm() } else { 0.0 };
        if i + 1 < n && sub > 1e-12 * scale.max(1e-300) {
            // 2×2 block
            let (a, b, c, d) = (t[(i, i)], t[(i, i + 1)], t[(i + 1, i)], t[(i + 1, i + 1)]);
            let tr = a + d;
            let det = a * d - b * c;
            let disc = (tr * tr - 4.0 * det).sqrt();
            out.push((tr + disc) / 2.0);
            out.push((tr - disc) / 2.0);
            i += 2;
        } else {
            out.push(t[(i, i)]);
            i += 1;
        }
    }
    out.iter().all(|z| z.is_finite()).then_some(out)
}

fn circle_guesses(monic: &[Complex64]) -> Vec<Complex64> {
    let n = monic.len() - 1;
    // Fujiwara-style radius.
    let r = (0..n)
        .map(|k| monic[k].norm().powf(1.0 / (n - k) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    (0..n)
        .map(|k| Complex64::from_polar(r, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64))
        .collect()
}

fn aberth(p: &[Complex64], z: &mut [Complex64]) -> bool {
    let n = z.len();
    for i in 0..n {
        for j in 0..i {
            if (z[i] - z[j]).norm() < 1e-12 * (1.0 + z[i].norm()) {
                z[i] += Complex64::new(1e-7, 1e-7) * (1.0 + z[i].norm()) * (i as f64 + 1.0);
            }
        }
    }
    for _ in 0..MAX_ABERTH_ITERS {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (v, d) = horner_with_derivative(p, z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let diff = z[i] - z[j];
                    if diff.norm() > 0.0 {
                        sum += 1.0 / diff;
                    }
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if max_step < 1e-15 {
            return true;
        }
    }
    false
}

/// Groups approximations of a multiple root and polishes the centre by
/// Newton's method on the `(m-1)`-th derivative.
fn cluster(p: &[Complex64], mut z: Vec<Complex64>, tol: f64) -> Vec<Root> {
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let radius = tol.sqrt().max(1e-6);
    let mut used = vec![false; z.len()];
    let mut roots = Vec::new();
    for i in 0..z.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let mut members = vec![z[i]];
        for j in i + 1..z.len() {
            if !used[j] && (z[j] - z[i]).norm() < radius * (1.0 + z[i].norm()) {
                members.push(z[j]);
                used[j] = true;
            }
        }
        let m = members.len();
        if m == 1 {
            roots.push(Root { z: z[i], multiplicity: 1 });
            continue;
        }
        let mut centre = members.iter().sum::<Complex64>() / m as f64;
        let mut dp = p.to_vec();
        for _ in 0..m - 1 {
            dp = derivative(&dp);
        }
        for _ in 0..50 {
            let (v, d) = horner_with_derivative(&dp, centre);
            if d.norm() == 0.0 {
                break;
            }
            let step = v / d;
            centre -= step;
            if step.norm() < 1e-16 * (1.0 + centre.norm()) {
                break;
            }
        }
        // A genuine m-fold root makes p, p', ..., p^(m-1) all small at the centre.
        let mut q = p.to_vec();
        let mut genuine = true;
        for _ in 0..m {
            if horner(&q, centre).norm() > radius * abs_scale(&q, centre).max(f64::MIN_POSITIVE) {
                genuine = false;
                break;
            }
            q = derivative(&q);
        }
        if genuine {
            roots.push(Root { z: centre, multiplicity: m });
        } else {
            roots.extend(members.into_iter().map(|z| Root { z, multiplicity: 1 }));
        }
    }
    roots.sort_by(|a, b| a.z.re.total_cmp(&b.z.re).then(a.z.im.total_cmp(&b.z.im)));
    roots
}

/// All complex roots of `Σ coeffs[i] z^i`, with multiplicity, sorted by real
/// then imaginary part.
pub fn complex_roots(coeffs: &[Complex64], tol: f64) -> Result<Vec<Root>, RootError> {
    let mut p: Vec<Complex64> = coeffs.to_vec();
    while p.last().is_some_and(|c| c.norm() == 0.0) {
        p.pop();
    }
    if p.len() < 2 {
        return Err(RootError::Constant);
    }
    let zeros = p.iter().take_while(|c| c.norm() == 0.0).count();
    let core: Vec<Complex64> = p[zeros..].to_vec();
    let mut roots = Vec::new();
    if zeros > 0 {
        roots.push(Root { z: Complex64::new(0.0, 0.0), multiplicity: zeros });
    }
    if core.len() >= 2 {
        let lead = *core.last().unwrap();
        let monic: Vec<Complex64> = core.iter().map(|c| c / lead).collect();
        let mut z = companion_eigenvalues(&monic).unwrap_or_else(|| circle_guesses(&monic));
        let converged = aberth(&monic, &mut z);
        let residual_ok = z
            .iter()
            .all(|&r| horner(&monic, r).norm() <= tol * abs_scale(&monic, r));
        let found = cluster(&monic, z, tol);
        if !converged && !residual_ok {
            roots.extend(found);
            return Err(RootError::NonConvergence { partial: roots });
        }
        roots.extend(found);
    }
    roots.sort_by(|a, b| a.z.re.total_cmp(&b.z.re).then(a.z.im.total_cmp(&b.z.im)));
    Ok(roots)
}

/// Roots of an integer polynomial.
pub fn complex_roots_int(p: &UniPoly, tol: f64) -> Result<Vec<Root>, RootError> {
    complex_roots(&p.to_complex(), tol)
}

/// Flattens roots, repeating each according to its multiplicity.
pub fn expand(roots: &[Root]) -> Vec<Complex64> {
    roots
        .iter()
        .flat_map(|r| std::iter::repeat(r.z).take(r.multiplicity))
        .collect()
}
