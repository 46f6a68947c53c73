use num_traits::Zero;

use super::HyperellipticCurve;
use crate::error::{Error, Result};
use crate::field::{Embedding, Field, MAX_DEGREE};
use crate::newton::{np_validate, NewtonPolygon, Slope};

/// Point counting walks `F_{q^g}`; its size is capped here.
pub const ZETA_BOUND: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaData {
    /// `#C(F_{q^r})` for `r = 1..=g`, points at infinity included.
    pub point_counts: Vec<u64>,
    /// `L(T) = sum a_i T^i`, degree `2g`, `a_0 = 1`.
    pub l_polynomial: Vec<i128>,
    /// Newton polygon of `L` with respect to `v_q`.
    pub newton_polygon: NewtonPolygon,
}

pub fn zeta_data(curve: &HyperellipticCurve) -> Result<ZetaData> {
    let base = curve.field();
    let g = curve.genus();
    let (p, k) = (base.p(), base.k());
    let q = base.order() as i128;
    base.order()
        .checked_pow(g as u32)
        .filter(|&n| n <= ZETA_BOUND)
        .ok_or_else(|| Error::TooLarge(format!("q^g exceeds {ZETA_BOUND}")))?;
    if k * g > MAX_DEGREE {
        return Err(Error::TooLarge(format!("needs GF({p}^{})", k * g)));
    }

    let point_counts = (1..=g)
        .map(|r| count_points(curve, &Field::new(p, k * r)?))
        .collect::<Result<Vec<u64>>>()?;

    // power sums of Frobenius eigenvalues
    let sums: Vec<i128> = point_counts
        .iter()
        .enumerate()
        .map(|(i, &n)| q.pow(i as u32 + 1) + 1 - n as i128)
        .collect();
    let mut a = vec![0i128; 2 * g + 1];
    a[0] = 1;
    for i in 1..=g {
        let s: i128 = (1..=i).map(|j| sums[j - 1] * a[i - j]).sum();
        debug_assert_eq!(s % i as i128, 0);
        a[i] = -s / i as i128;
    }
    for i in 0..g {
        a[2 * g - i] = q.pow((g - i) as u32) * a[i];
    }

    let newton_polygon = l_newton_polygon(&a, p, k)?;
    Ok(ZetaData {
        point_counts,
        l_polynomial: a,
        newton_polygon,
    })
}

fn count_points(curve: &HyperellipticCurve, ext: &Field) -> Result<u64> {
    ext.check_enumerable()?;
    let emb = Embedding::new(curve.field(), ext)?;
    let f = emb.map_poly(curve.f());
    let coeffs: Vec<_> = f.coeffs().iter().rev().copied().collect();
    let mut affine: i64 = 0;
    for x in ext.elements() {
        let v = coeffs
            .iter()
            .fold(ext.zero(), |acc, &c| ext.add(ext.mul(acc, x), c));
        affine += 1 + ext.quadratic_character(v) as i64;
    }
    let deg = f.degree().unwrap();
    let infinity = if deg % 2 == 1 {
        1
    } else {
        1 + ext.quadratic_character(f.leading()) as i64
    };
    Ok((affine + infinity) as u64)
}

fn valuation(mut n: i128, p: u64) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let p = p as i128;
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    Some(v)
}

/// Lower convex hull of `(i, v_p(a_i) / k)`.
fn l_newton_polygon(a: &[i128], p: u64, k: usize) -> Result<NewtonPolygon> {
    let pts: Vec<(i64, Slope)> = a
        .iter()
        .enumerate()
        .filter_map(|(i, &c)| valuation(c, p).map(|v| (i as i64, Slope::new(v as i64, k as i64))))
        .collect();
    let mut hull: Vec<(i64, Slope)> = Vec::new();
    for pt in pts {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            // drop the middle point unless it lies strictly below the chord
            let cross = (y2 - y1) * Slope::from(pt.0 - x1) - (pt.1 - y1) * Slope::from(x2 - x1);
            if cross >= Slope::zero() {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut slopes = Vec::with_capacity(a.len() - 1);
    for w in hull.windows(2) {
        let (x1, y1) = w[0];
        let (x2, y2) = w[1];
        let s = (y2 - y1) / Slope::from(x2 - x1);
        slopes.extend(std::iter::repeat_n(s, (x2 - x1) as usize));
    }
    np_validate(slopes)
}
