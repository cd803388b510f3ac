//! `y`-resultants of polynomials in `ℤ[x][y]` by the subresultant PRS.

use super::upoly::UniPoly;
use super::xypoly::XYPoly;

type YPoly = Vec<UniPoly>;

fn deg(p: &YPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn trim(mut p: YPoly) -> YPoly {
    while p.last().is_some_and(UniPoly::is_zero) {
        p.pop();
    }
    p
}

fn lc(p: &YPoly) -> &UniPoly {
    p.last().expect("nonzero polynomial")
}

/// `lc(b)^(deg a - deg b + 1) · a mod b`.
fn pseudo_remainder(a: &YPoly, b: &YPoly) -> YPoly {
    let n = deg(b).expect("nonzero divisor");
    let lb = lc(b).clone();
    let mut r = a.clone();
    let mut e = deg(a).expect("nonzero dividend") as i64 - n as i64 + 1;
    while let Some(dr) = deg(&r) {
        if dr < n {
            break;
        }
        let lr = r[dr].clone();
        let off = dr - n;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[off + j] = &r[off + j] - &(&lr * bj);
        }
        r = trim(r);
        e -= 1;
    }
    let scale = lb.pow(e.max(0) as u32);
    trim(r.iter().map(|c| c * &scale).collect())
}

fn exact(p: &UniPoly, d: &UniPoly) -> UniPoly {
    p.exact_div(d)
        .expect("subresultant PRS division is exact over the integers")
}

/// The resultant of `p` and `q` with respect to `y`, as a polynomial in `x`.
///
/// Zero exactly when `p` and `q` share a factor of positive `y`-degree.
pub fn resultant_y(p: &XYPoly, q: &XYPoly) -> UniPoly {
    if p.is_zero() || q.is_zero() {
        return UniPoly::zero();
    }
    let mut a: YPoly = trim(p.y_coeffs());
    let mut b: YPoly = trim(q.y_coeffs());
    let mut sign = false;
    let (mut da, mut db) = (deg(&a).unwrap(), deg(&b).unwrap());
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            sign = !sign;
        }
    }
    if db == 0 {
        let r = lc(&b).pow(da as u32);
        return if sign { -&r } else { r };
    }
    let mut g = UniPoly::one();
    let mut h = UniPoly::one();
    loop {
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = !sign;
        }
        let r = pseudo_remainder(&a, &b);
        a = b;
        let divisor = &g * &h.pow(delta);
        b = r.iter().map(|c| exact(c, &divisor)).collect();
        g = lc(&a).clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => exact(&g.pow(delta), &h.pow(delta - 1)),
        };
        let Some(new_db) = deg(&b) else {
            return UniPoly::zero();
        };
        da = deg(&a).unwrap();
        db = new_db;
        if db == 0 {
            break;
        }
    }
    let res = if da == 1 {
        lc(&b).clone()
    } else {
        exact(&lc(&b).pow(da as u32), &h.pow(da as u32 - 1))
    };
    if sign {
        -&res
    } else {
        res
    }
}
