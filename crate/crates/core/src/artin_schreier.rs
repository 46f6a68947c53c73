//! Artin–Schreier curves `W^p - W = f(X)` and the translations `X -> X + a`
//! that extend to automorphisms.

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Elem, Embedding, Field, Matrix, Poly};

/// Reduces `h` modulo `{y^p - y : y in k[X]}`: every `c X^(pm)` with `m >= 1`
/// becomes `c^(1/p) X^m`, top degree first. Returns the reduced non-constant
/// part and the constant term.
pub fn as_reduce(h: &Poly) -> (Poly, Elem) {
    let field = h.field();
    let p = field.p() as usize;
    let mut c: Vec<Elem> = h.coeffs().to_vec();
    for d in (1..c.len()).rev() {
        if d % p == 0 && !c[d].is_zero() {
            let root = field.frobenius(c[d], -1);
            c[d / p] = field.add(c[d / p], root);
            c[d] = field.zero();
        }
    }
    let constant = c.first().copied().unwrap_or(field.zero());
    if let Some(c0) = c.first_mut() {
        *c0 = field.zero();
    }
    (Poly::new(field, c), constant)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASCurve {
    f: Poly,
    genus: usize,
}

impl ASCurve {
    /// Reduces `f` first; the reduced degree must be positive and prime to p.
    pub fn new(f: &Poly) -> Result<ASCurve> {
        let (f, _) = as_reduce(f);
        let p = f.field().p() as usize;
        let m = match f.degree() {
            Some(m) if m > 0 => m,
            _ => return Err(Error::InvalidCurve("f reduces to a constant".into())),
        };
        if m % p == 0 {
            return Err(Error::InvalidCurve(format!("degree {m} divisible by {p}")));
        }
        Ok(ASCurve {
            genus: (p - 1) * (m - 1) / 2,
            f,
        })
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn field(&self) -> &Field {
        self.f.field()
    }

    pub fn degree(&self) -> usize {
        self.f.degree().unwrap()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }
}

#[derive(Clone, Debug)]
pub struct TranslationGroupData {
    /// Field the witnesses live in.
    pub field: Field,
    /// Ascending; always contains 0.
    pub witnesses: Vec<Elem>,
    pub group_order: u64,
    /// `p · group_order`.
    pub sylow_order: u64,
    /// `group_order = p^n`.
    pub n: usize,
}

/// True when `X -> X + a` lifts, i.e. `f(X+a) - f(X)` reduces to a constant.
pub fn translation_lifts(f: &Poly, a: Elem) -> bool {
    let one = f.field().one();
    let diff = &f.compose_linear(one, a) - f;
    as_reduce(&diff).0.is_zero()
}

/// All translations defined over `F_{p^ext}` that lift. `ext` must be a
/// multiple of the degree of the curve's field.
pub fn translation_group(curve: &ASCurve, ext: usize) -> Result<TranslationGroupData> {
    let base = curve.field();
    let field = Field::new(base.p(), ext)?;
    field.check_enumerable()?;
    let f = Embedding::new(base, &field)?.map_poly(curve.f());
    let witnesses: Vec<Elem> = field
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter(|&a| translation_lifts(&f, a))
        .collect();
    let n = prime_span_dim(&field, &witnesses);
    let group_order = witnesses.len() as u64;
    if field.p().checked_pow(n as u32) != Some(group_order) {
        return Err(Error::Invalid(
            "lifting translations are not closed under addition".into(),
        ));
    }
    Ok(TranslationGroupData {
        sylow_order: field.p() * group_order,
        field,
        witnesses,
        group_order,
        n,
    })
}

/// Dimension of the `F_p`-span of `xs`, using power-basis coordinates.
fn prime_span_dim(field: &Field, xs: &[Elem]) -> usize {
    if xs.is_empty() {
        return 0;
    }
    let fp = Field::prime(field.p()).unwrap();
    let cols: Vec<Vec<Elem>> = xs
        .iter()
        .map(|&x| {
            field
                .coeffs(x)
                .into_iter()
                .map(|c| fp.from_int(c as i64))
                .collect()
        })
        .collect();
    Matrix::from_columns(&fp, field.k(), &cols).rank()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigActionReport {
    pub p: u64,
    pub genus: usize,
    pub sylow_order: u64,
    /// `|G| / g`.
    pub ratio1: Ratio<i64>,
    /// `|G| / g^2`.
    pub ratio2: Ratio<i64>,
    /// `g > 0` and `|G| / g > 2p / (p-1)`.
    pub condition_n: bool,
    /// `|G| / g^2 = 4p / (p-1)^2`.
    pub extremal: bool,
}

pub fn big_action_report(curve: &ASCurve, sylow_order: u64) -> Result<BigActionReport> {
    let g = curve.genus() as i64;
    if g == 0 {
        return Err(Error::ZeroGenus);
    }
    let p = curve.field().p() as i64;
    let order = sylow_order as i64;
    let ratio1 = Ratio::new(order, g);
    let ratio2 = Ratio::new(order, g * g);
    Ok(BigActionReport {
        p: p as u64,
        genus: g as usize,
        sylow_order,
        ratio1,
        ratio2,
        condition_n: ratio1 > Ratio::new(2 * p, p - 1),
        extremal: ratio2 == Ratio::new(4 * p, (p - 1) * (p - 1)),
    })
}

/// `deg f = 1 + l·2^s` with `l > 1` odd and `s >= 3`. Always false outside
/// characteristic 2.
pub fn d8_degree_check(f: &Poly) -> bool {
    f.field().p() == 2 && f.degree().is_some_and(d8_degree_condition)
}

pub fn d8_degree_condition(deg: usize) -> bool {
    if deg < 2 {
        return false;
    }
    let m = deg - 1;
    let s = m.trailing_zeros();
    s >= 3 && (m >> s) > 1
}

/// `c · X^(p^s + 1)` with `c` the least element of `F_{p^(2s)}` satisfying
/// `c^(p^s - 1) = -1` (so `c = 1` when `p = 2`). This is `X · R(X)` for the
/// additive `R = c X^(p^s)`, and its lifting translations are exactly
/// `F_{p^(2s)}`. The untwisted `X^(p^s+1)` needs `F_{p^(4s)}` for odd `p`.
pub fn twisted_additive_product(p: u64, s: u32) -> Result<Poly> {
    let field = Field::new(p, 2 * s as usize)?;
    let d = p.pow(s);
    let minus_one = field.neg(field.one());
    let c = field
        .elements()
        .find(|&c| field.pow(c, d - 1) == minus_one)
        .or_else(|| (p == 2).then(|| field.one()))
        .expect("F_(p^2s) contains a (p^s-1)-th root of -1");
    Ok(Poly::monomial(&field, c, (d + 1) as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_pow(field: &Field, d: usize) -> Poly {
        Poly::monomial(field, field.one(), d)
    }

    #[test]
    fn reduction_examples() {
        let f2 = Field::prime(2).unwrap();
        let h = &x_pow(&f2, 4) + &x_pow(&f2, 2);
        assert!(as_reduce(&h).0.is_zero());
        let f3 = Field::prime(3).unwrap();
        assert_eq!(as_reduce(&x_pow(&f3, 3)).0, x_pow(&f3, 1));
        let g = Poly::from_ints(&f3, &[2, 1, 1, 0, 1]);
        let (r, c) = as_reduce(&g);
        assert_eq!(r, Poly::from_ints(&f3, &[0, 1, 1, 0, 1]));
        assert_eq!(c, f3.from_int(2));
    }

    #[test]
    fn x3_over_f4() {
        let f2 = Field::prime(2).unwrap();
        let c = ASCurve::new(&x_pow(&f2, 3)).unwrap();
        assert_eq!(c.genus(), 1);
        let t = translation_group(&c, 2).unwrap();
        assert_eq!((t.group_order, t.n), (4, 2));
    }

    #[test]
    fn x5_over_f16() {
        let f2 = Field::prime(2).unwrap();
        let c = ASCurve::new(&x_pow(&f2, 5)).unwrap();
        let t = translation_group(&c, 4).unwrap();
        assert_eq!(t.group_order, 16);
        let r = big_action_report(&c, t.sylow_order).unwrap();
        assert_eq!(r.ratio2, Ratio::from_integer(8));
        assert!(r.extremal && r.condition_n);
    }

    #[test]
    fn x4_over_f9() {
        let f3 = Field::prime(3).unwrap();
        let c = ASCurve::new(&x_pow(&f3, 4)).unwrap();
        assert_eq!(c.genus(), 3);
        assert_eq!(translation_group(&c, 2).unwrap().group_order, 1);
        let t = translation_group(&c, 4).unwrap();
        assert_eq!(t.group_order, 9);
        let r = big_action_report(&c, t.sylow_order).unwrap();
        assert_eq!(r.ratio2, Ratio::from_integer(3));
        assert!(r.extremal);
    }

    #[test]
    fn twisted_product_saturates_at_double_degree() {
        for (p, s) in [(2, 1), (2, 2), (3, 1)] {
            let f = twisted_additive_product(p, s).unwrap();
            let c = ASCurve::new(&f).unwrap();
            let q = p.pow(2 * s);
            assert_eq!(
                translation_group(&c, 2 * s as usize).unwrap().group_order,
                q
            );
            assert_eq!(
                translation_group(&c, 4 * s as usize).unwrap().group_order,
                q
            );
        }
    }

    #[test]
    fn small_group_fails_condition() {
        let f3 = Field::prime(3).unwrap();
        let c = ASCurve::new(&Poly::from_ints(&f3, &[0, 0, 1, 0, 0, 0, 0, 1])).unwrap();
        let r = big_action_report(&c, 3).unwrap();
        assert!(!r.condition_n);
    }

    #[test]
    fn degree_condition() {
        assert!(d8_degree_condition(25));
        assert!(d8_degree_condition(41));
        assert!(!d8_degree_condition(17));
        assert!(!d8_degree_condition(13));
    }

    #[test]
    fn rejects_degree_divisible_by_p() {
        let f3 = Field::prime(3).unwrap();
        // X^6 + X^2 reduces to X^2 + X^2 = 2X^2, which is fine
        assert!(ASCurve::new(&Poly::from_ints(&f3, &[0, 0, 1, 0, 0, 0, 1])).is_ok());
        let f5 = Field::prime(5).unwrap();
        assert!(ASCurve::new(&Poly::from_ints(&f5, &[1])).is_err());
    }
}
