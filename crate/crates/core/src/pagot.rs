//! Spaces of logarithmic differentials on the projective line: `F_p`-spaces of
//! dimension `n` whose nonzero elements are `df/f` with `m+1` simple poles and
//! a single zero, of order `m-1`, at infinity.
//!
//! A form is kept either as pole/residue data ([`LogForm`]) or as a rational
//! function `num/den · dz` ([`RationalForm`]). Verification only uses the
//! rational shape, so poles never have to be found.

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{parse_elem, Elem, Field, Poly};

/// `sum h_i dz / (z - x_i)` with distinct poles and residues in `F_p^*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogForm {
    field: Field,
    poles: Vec<Elem>,
    residues: Vec<u64>,
}

impl LogForm {
    pub fn new(field: &Field, poles: Vec<Elem>, residues: Vec<u64>) -> Result<LogForm> {
        if poles.len() != residues.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} poles, {} residues",
                poles.len(),
                residues.len()
            )));
        }
        let p = field.p();
        if let Some(h) = residues.iter().find(|&&h| h % p == 0) {
            return Err(Error::Invalid(format!("residue {h} is divisible by {p}")));
        }
        let mut sorted = poles.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("poles must be distinct".into()));
        }
        Ok(LogForm {
            field: field.clone(),
            poles,
            residues: residues.into_iter().map(|h| h % p).collect(),
        })
    }

    /// The form `df/f` for `f = prod (z - x_i)^(e_i)`; exponents divisible by
    /// p drop out.
    pub fn from_exponents(field: &Field, factors: &[(Elem, i64)]) -> Result<LogForm> {
        let p = field.p() as i64;
        let (poles, residues) = factors
            .iter()
            .filter(|(_, e)| e.rem_euclid(p) != 0)
            .map(|&(x, e)| (x, e.rem_euclid(p) as u64))
            .unzip();
        LogForm::new(field, poles, residues)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn poles(&self) -> &[Elem] {
        &self.poles
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn pole_count(&self) -> usize {
        self.poles.len()
    }

    /// Image under `z -> a z + b`: poles move, residues stay.
    pub fn affine_image(&self, a: Elem, b: Elem) -> Result<LogForm> {
        if a.is_zero() {
            return Err(Error::Invalid("affine map must be invertible".into()));
        }
        let f = &self.field;
        let poles = self.poles.iter().map(|&x| f.add(f.mul(a, x), b)).collect();
        LogForm::new(f, poles, self.residues.clone())
    }

    /// `sum_i h_i x_i^l = 0` for `0 <= l <= upto`.
    pub fn power_sums_vanish(&self, upto: usize) -> bool {
        let f = &self.field;
        (0..=upto).all(|l| {
            self.poles
                .iter()
                .zip(&self.residues)
                .fold(f.zero(), |acc, (&x, &h)| {
                    f.add(acc, f.mul(f.from_int(h as i64), f.pow(x, l as u64)))
                })
                .is_zero()
        })
    }

    pub fn to_rational(&self) -> RationalForm {
        RationalForm::new(
            logform_numerator(self),
            Poly::from_roots(&self.field, &self.poles),
        )
    }
}

/// `N(z) = sum_i h_i prod_{j != i} (z - x_j)`, so that the form is
/// `N / prod (z - x_i) · dz`.
pub fn logform_numerator(w: &LogForm) -> Poly {
    let f = &w.field;
    let mut acc = Poly::zero(f);
    for (i, &h) in w.residues.iter().enumerate() {
        let others: Vec<Elem> = w
            .poles
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &x)| x)
            .collect();
        acc = &acc + &Poly::from_roots(f, &others).scale(f.from_int(h as i64));
    }
    acc
}

/// `num / den · dz` in lowest terms with `den` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalForm {
    pub num: Poly,
    pub den: Poly,
}

impl RationalForm {
    pub fn new(num: Poly, den: Poly) -> RationalForm {
        assert!(!den.is_zero(), "zero denominator");
        let g = num.gcd(&den);
        let g = if g.is_zero() {
            Poly::one(den.field())
        } else {
            g
        };
        let num = num.divrem(&g).0;
        let den = den.divrem(&g).0;
        let lc = den.field().inv(den.leading()).unwrap();
        RationalForm {
            num: num.scale(lc),
            den: den.scale(lc),
        }
    }

    pub fn field(&self) -> &Field {
        self.den.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, c: Elem) -> RationalForm {
        RationalForm::new(self.num.scale(c), self.den.clone())
    }

    pub fn add(&self, other: &RationalForm) -> RationalForm {
        let g = self.den.gcd(&other.den);
        let a = other.den.divrem(&g).0;
        let b = self.den.divrem(&g).0;
        RationalForm::new(&(&self.num * &a) + &(&other.num * &b), &self.den * &a)
    }

    /// Pullback along `z -> a z + b`: `num(az+b) / den(az+b) · a dz`.
    pub fn pullback(&self, a: Elem, b: Elem) -> RationalForm {
        RationalForm::new(
            self.num.compose_linear(a, b).scale(a),
            self.den.compose_linear(a, b),
        )
    }

    /// Why this form is not logarithmic with `m+1` simple poles and a single
    /// zero at infinity, if it is not.
    pub fn defect(&self, m: usize) -> Option<String> {
        if self.num.is_zero() {
            return Some("form vanishes".into());
        }
        let nd = self.num.degree().unwrap();
        if nd != 0 {
            return Some(format!(
                "numerator has degree {nd}, so zeros away from infinity"
            ));
        }
        if !self.den.is_squarefree() {
            return Some("pole of order at least 2".into());
        }
        let poles = self.den.degree().unwrap();
        if poles != m + 1 {
            return Some(format!("{poles} poles, expected {}", m + 1));
        }
        // residue num/den' at every pole lies in F_p iff
        // num^p = num · den'^(p-1) modulo den
        let p = self.field().p();
        let d1 = self.den.derivative();
        let lhs = self.num.pow_mod(p, &self.den);
        let rhs = (&self.num * &d1.pow_mod(p - 1, &self.den)).rem(&self.den);
        if lhs != rhs {
            return Some("a residue lies outside F_p".into());
        }
        None
    }
}

#[derive(Clone, Debug)]
pub struct LSpaceCandidate {
    pub field: Field,
    pub m: usize,
    pub basis: Vec<RationalForm>,
}

impl LSpaceCandidate {
    pub fn new(m: usize, basis: Vec<RationalForm>) -> Result<LSpaceCandidate> {
        let field = basis
            .first()
            .ok_or_else(|| Error::Invalid("empty basis".into()))?
            .field()
            .clone();
        if basis.iter().any(|w| w.field() != &field) {
            return Err(Error::FieldMismatch);
        }
        Ok(LSpaceCandidate { field, m, basis })
    }

    /// `m` is taken from the pole count of the first form.
    pub fn from_logforms(forms: &[LogForm]) -> Result<LSpaceCandidate> {
        let m = forms
            .first()
            .ok_or_else(|| Error::Invalid("empty basis".into()))?
            .pole_count()
            .checked_sub(1)
            .ok_or_else(|| Error::Invalid("form without poles".into()))?;
        LSpaceCandidate::new(m, forms.iter().map(LogForm::to_rational).collect())
    }

    pub fn n(&self) -> usize {
        self.basis.len()
    }

    pub fn combination(&self, coeffs: &[u64]) -> RationalForm {
        let f = &self.field;
        let zero = RationalForm::new(Poly::zero(f), Poly::one(f));
        self.basis
            .iter()
            .zip(coeffs)
            .filter(|(_, &c)| c != 0)
            .fold(zero, |acc, (w, &c)| acc.add(&w.scale(f.from_int(c as i64))))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail {
        /// Coefficients in `F_p` of the failing combination.
        combination: Vec<u64>,
        reason: String,
    },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Checks all `p^n - 1` nonzero combinations, in order of the base-p index
/// with the first coefficient least significant.
pub fn verify_lspace(c: &LSpaceCandidate) -> Verdict {
    let p = c.field.p();
    let n = c.n() as u32;
    let total = p.pow(n);
    for idx in 1..total {
        let mut coeffs = Vec::with_capacity(n as usize);
        let mut v = idx;
        for _ in 0..n {
            coeffs.push(v % p);
            v /= p;
        }
        if let Some(reason) = c.combination(&coeffs).defect(c.m) {
            return Verdict::Fail {
                combination: coeffs,
                reason,
            };
        }
    }
    Verdict::Pass
}

#[derive(Clone, Debug)]
pub struct PairCheck {
    /// `deg(iA + jB) = (m+1)/p` for every `[i:j]` in `P^1(F_p)`.
    pub degrees_ok: bool,
    /// `((A^p - A B^(p-1))^(p-1))^((p-1)-th derivative) = -1`.
    pub identity_ok: bool,
    /// `A dz / (A^p B - A B^p)` and `B dz / (A^p B - A B^p)`, built on pass.
    pub forms: Option<(RationalForm, RationalForm)>,
    /// Independent check of the span of the two forms.
    pub lspace: Option<Verdict>,
}

impl PairCheck {
    pub fn pass(&self) -> bool {
        self.degrees_ok && self.identity_ok
    }
}

fn degrees_ok(a: &Poly, b: &Poly, d: usize) -> bool {
    let f = a.field();
    a.degree() == Some(d)
        && (0..f.p()).all(|i| (&a.scale(f.from_int(i as i64)) + b).degree() == Some(d))
}

fn identity_ok(a: &Poly, b: &Poly) -> bool {
    let f = a.field();
    let p = f.p();
    let h = &a.pow(p) - &(a * &b.pow(p - 1));
    let t = h.pow(p - 1).derivative_n((p - 1) as usize);
    t == Poly::constant(f, f.neg(f.one()))
}

pub fn pair_forms(a: &Poly, b: &Poly) -> (RationalForm, RationalForm) {
    let p = a.field().p();
    let d = &(&a.pow(p) * b) - &(a * &b.pow(p));
    (
        RationalForm::new(a.clone(), d.clone()),
        RationalForm::new(b.clone(), d),
    )
}

pub fn pagot_pair_check(a: &Poly, b: &Poly, m: usize) -> Result<PairCheck> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let p = a.field().p() as usize;
    if !(m + 1).is_multiple_of(p) {
        return Err(Error::DegreeMismatch(format!(
            "{p} does not divide m+1 = {}",
            m + 1
        )));
    }
    let d = (m + 1) / p;
    if a.degree() != Some(d) || b.degree() != Some(d) {
        return Err(Error::DegreeMismatch(format!(
            "deg A = {:?}, deg B = {:?}, expected {d}",
            a.degree(),
            b.degree()
        )));
    }
    let mut out = PairCheck {
        degrees_ok: degrees_ok(a, b, d),
        identity_ok: identity_ok(a, b),
        forms: None,
        lspace: None,
    };
    if out.pass() {
        let (w0, wp) = pair_forms(a, b);
        let cand = LSpaceCandidate::new(m, vec![w0.clone(), wp.clone()])?;
        out.lspace = Some(verify_lspace(&cand));
        out.forms = Some((w0, wp));
    }
    Ok(out)
}

/// How the pair space is cut down before enumeration.
pub const PAIR_NORMALIZATION: &str =
    "translation: A has zero z^(d-1) coefficient when p does not divide d";

#[derive(Clone, Debug)]
pub struct PagotSearch {
    pub p: u64,
    pub m: usize,
    pub k: usize,
    pub field: Field,
    pub candidates: u64,
    /// Pairs `(A, B)` passing the criterion, in enumeration order.
    pub witnesses: Vec<(Poly, Poly)>,
}

impl PagotSearch {
    pub fn exhausted(&self) -> bool {
        self.witnesses.is_empty()
    }
}

fn poly_from_index(field: &Field, mut idx: u64, len: usize) -> Vec<Elem> {
    let q = field.order();
    (0..len)
        .map(|_| {
            let e = field.elem(idx % q).unwrap();
            idx /= q;
            e
        })
        .collect()
}

/// Exhaustive search for pairs `(A, B)` over `F_{p^k}` of degree
/// `(m+1)/p`. The degree condition alone forces `lc(B)/lc(A)` outside `F_p`,
/// so over the prime field nothing survives.
pub fn pagot_search(p: u64, m: usize, k: usize, budget: u64) -> Result<PagotSearch> {
    let field = Field::new(p, k)?;
    let pu = p as usize;
    if !(m + 1).is_multiple_of(pu) {
        return Err(Error::DegreeMismatch(format!(
            "{p} does not divide m+1 = {}",
            m + 1
        )));
    }
    let d = (m + 1) / pu;
    let q = field.order();
    let pinned = !d.is_multiple_of(pu);
    let free_a = if pinned { d - 1 } else { d };
    let count_a = q
        .checked_pow(free_a as u32)
        .and_then(|x| x.checked_mul(q - 1));
    let count_b = q.checked_pow(d as u32).and_then(|x| x.checked_mul(q - p));
    let candidates = count_a
        .zip(count_b)
        .and_then(|(x, y)| x.checked_mul(y))
        .filter(|&n| n <= budget)
        .ok_or_else(|| {
            Error::BudgetExceeded(format!(
                "search over GF({p}^{k}) with d = {d} exceeds {budget}"
            ))
        })?;
    if candidates == 0 {
        return Ok(PagotSearch {
            p,
            m,
            k,
            field,
            candidates,
            witnesses: vec![],
        });
    }

    let mut a_list = Vec::new();
    for lc in 1..q {
        for low in 0..q.pow(free_a as u32) {
            let mut c = poly_from_index(&field, low, free_a);
            if pinned {
                c.push(Elem::ZERO);
            }
            c.push(field.elem(lc).unwrap());
            a_list.push(Poly::new(&field, c));
        }
    }
    let witnesses: Vec<(Poly, Poly)> = a_list
        .par_iter()
        .flat_map_iter(|a| {
            let f = &field;
            let lca = a.leading();
            let lcs: Vec<Elem> = f
                .elements()
                .filter(|&l| (0..p).all(|i| !f.add(l, f.mul(f.from_int(i as i64), lca)).is_zero()))
                .collect();
            let a = a.clone();
            lcs.into_iter().flat_map(move |lcb| {
                let a = a.clone();
                let f = f.clone();
                (0..q.pow(d as u32)).filter_map(move |low| {
                    let mut c = poly_from_index(&f, low, d);
                    c.push(lcb);
                    let b = Poly::new(&f, c);
                    identity_ok(&a, &b).then(|| (a.clone(), b))
                })
            })
        })
        .collect();
    Ok(PagotSearch {
        p,
        m,
        k,
        field,
        candidates,
        witnesses,
    })
}

#[derive(Clone, Debug)]
pub struct ElementaryFamily {
    pub p: u64,
    pub n: usize,
    /// `m + 1 = p^(n-1) (p-1)`.
    pub m: usize,
    pub basis: Vec<LogForm>,
    pub candidate: LSpaceCandidate,
    pub verdict: Verdict,
}

/// `f_j = prod_{e in {0..p-1}^n} (z - sum e_i a_i)^(e_j)`, `w_j = df_j/f_j`.
/// The points `sum e_i a_i` must be distinct, i.e. the `a_i` independent
/// over `F_p`.
pub fn elementary_family(field: &Field, a: &[Elem]) -> Result<ElementaryFamily> {
    let n = a.len();
    if n < 2 {
        return Err(Error::OutOfRange(format!(
            "need at least 2 parameters, got {n}"
        )));
    }
    let p = field.p();
    let total = p
        .checked_pow(n as u32)
        .filter(|&t| t <= 1 << 20)
        .ok_or_else(|| Error::TooLarge(format!("{p}^{n} points")))?;
    let mut points = Vec::with_capacity(total as usize);
    let mut eps = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut v = idx;
        let e: Vec<u64> = (0..n)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect();
        let x = e.iter().zip(a).fold(field.zero(), |acc, (&ei, &ai)| {
            field.add(acc, field.mul(field.from_int(ei as i64), ai))
        });
        points.push(x);
        eps.push(e);
    }
    let mut sorted = points.clone();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DegenerateParameters(
            "parameters are dependent over F_p, so pole positions collide".into(),
        ));
    }
    let basis = (0..n)
        .map(|j| {
            let factors: Vec<(Elem, i64)> = points
                .iter()
                .zip(&eps)
                .map(|(&x, e)| (x, e[j] as i64))
                .collect();
            LogForm::from_exponents(field, &factors)
        })
        .collect::<Result<Vec<_>>>()?;
    let m = (p.pow(n as u32 - 1) * (p - 1) - 1) as usize;
    let candidate = LSpaceCandidate::new(m, basis.iter().map(LogForm::to_rational).collect())?;
    let verdict = verify_lspace(&candidate);
    Ok(ElementaryFamily {
        p,
        n,
        m,
        basis,
        candidate,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub p: u64,
    pub n: usize,
    pub m: usize,
    /// `p^(n-1) | m+1`; must hold for a genuine space.
    pub theorem_holds: bool,
    /// `p^(n-1) (p-1) | m+1`; an observation only.
    pub conjecture_holds: bool,
    pub common_poles: usize,
    /// `(m+1) (p-1)^(n-1) / p^(n-1)`.
    pub expected_common_poles: Ratio<i64>,
}

impl DivisibilityReport {
    pub fn common_poles_match(&self) -> bool {
        self.expected_common_poles == Ratio::from_integer(self.common_poles as i64)
    }
}

pub fn divisibility_necessity_check(c: &LSpaceCandidate) -> DivisibilityReport {
    let p = c.field.p() as i64;
    let n = c.n() as u32;
    let m1 = c.m as i64 + 1;
    let pn1 = p.pow(n - 1);
    let common = c
        .basis
        .iter()
        .skip(1)
        .fold(c.basis[0].den.clone(), |g, w| g.gcd(&w.den));
    DivisibilityReport {
        p: p as u64,
        n: n as usize,
        m: c.m,
        theorem_holds: m1 % pn1 == 0,
        conjecture_holds: m1 % (pn1 * (p - 1)) == 0,
        common_poles: common.degree().unwrap_or(0),
        expected_common_poles: Ratio::new(m1 * (p - 1).pow(n - 1), pn1),
    }
}

/// `m dz / (z^(m+1) - z)`, the logarithmic derivative of `z^(-m) - 1`.
pub fn example1_form(p: u64, m: usize) -> Result<RationalForm> {
    if m == 0 || (m as u64).is_multiple_of(p) {
        return Err(Error::Invalid(format!(
            "m = {m} must be positive and prime to {p}"
        )));
    }
    let f = Field::prime(p)?;
    let den = &Poly::monomial(&f, f.one(), m + 1) - &Poly::monomial(&f, f.one(), 1);
    Ok(RationalForm::new(
        Poly::constant(&f, f.from_int(m as i64)),
        den,
    ))
}

/// The same form by its poles, which live in the smallest `F_{p^k}`
/// containing the `m`-th roots of unity: residue `-m` at 0 and 1 at each root.
pub fn example1_logform(p: u64, m: usize) -> Result<LogForm> {
    example1_form(p, m)?;
    let k = (1..=crate::field::MAX_DEGREE)
        .find(|&k| (p.pow(k as u32) - 1).is_multiple_of(m as u64))
        .ok_or_else(|| Error::TooLarge(format!("roots of unity of order {m} mod {p}")))?;
    let f = Field::new(p, k)?;
    let den = &Poly::monomial(&f, f.one(), m + 1) - &Poly::monomial(&f, f.one(), 1);
    let poles = den.roots()?;
    let minus_m = (-(m as i64)).rem_euclid(p as i64) as u64;
    let residues = poles
        .iter()
        .map(|x| if x.is_zero() { minus_m } else { 1 })
        .collect();
    LogForm::new(&f, poles, residues)
}

/// `df/f` for `f = prod_{1 <= i <= p-1} (z - i)^i`, equal to `dz / (1 - z^(p-1))`.
/// It has `p-1` poles.
pub fn example2_logform(p: u64) -> Result<LogForm> {
    let f = Field::prime(p)?;
    let factors: Vec<(Elem, i64)> = (1..p as i64).map(|i| (f.from_int(i), i)).collect();
    LogForm::from_exponents(&f, &factors)
}

pub fn example2_form(p: u64) -> Result<RationalForm> {
    let f = Field::prime(p)?;
    let den = &Poly::one(&f) - &Poly::monomial(&f, f.one(), (p - 1) as usize);
    Ok(RationalForm::new(Poly::one(&f), den))
}

/// Serialized log form: poles as element text over `GF(p^k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogFormRecord {
    pub p: u64,
    pub k: usize,
    pub poles: Vec<String>,
    pub residues: Vec<i64>,
}

impl LogFormRecord {
    pub fn from_form(w: &LogForm) -> LogFormRecord {
        let f = &w.field;
        LogFormRecord {
            p: f.p(),
            k: f.k(),
            poles: w.poles.iter().map(|&x| f.format_coeff(x)).collect(),
            residues: w.residues.iter().map(|&h| h as i64).collect(),
        }
    }

    pub fn to_form(&self) -> Result<LogForm> {
        let f = Field::new(self.p, self.k)?;
        let poles = self
            .poles
            .iter()
            .map(|s| parse_elem(&f, s))
            .collect::<Result<Vec<_>>>()?;
        let p = self.p as i64;
        LogForm::new(
            &f,
            poles,
            self.residues
                .iter()
                .map(|&h| h.rem_euclid(p) as u64)
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_poles_in_char_2() {
        let f = Field::prime(2).unwrap();
        let w = LogForm::new(&f, vec![f.zero(), f.one()], vec![1, 1]).unwrap();
        assert_eq!(logform_numerator(&w), Poly::one(&f));
        let c = LSpaceCandidate::from_logforms(&[w]).unwrap();
        assert_eq!(c.m, 1);
        assert!(verify_lspace(&c).is_pass());
    }

    #[test]
    fn example_forms_verify() {
        for (p, m) in [(2, 1), (3, 1), (3, 2), (3, 4), (5, 1), (5, 2), (5, 4)] {
            let c = LSpaceCandidate::new(m, vec![example1_form(p, m).unwrap()]).unwrap();
            assert_eq!(verify_lspace(&c), Verdict::Pass, "p={p} m={m}");
            let w = example1_logform(p, m).unwrap();
            assert_eq!(w.pole_count(), m + 1);
            let c2 = LSpaceCandidate::from_logforms(&[w]).unwrap();
            assert!(verify_lspace(&c2).is_pass());
        }
        for p in [3, 5] {
            let w = example2_logform(p).unwrap();
            assert_eq!(w.to_rational(), example2_form(p).unwrap());
            let c = LSpaceCandidate::from_logforms(&[w]).unwrap();
            assert_eq!(c.m as u64, p - 2);
            assert!(verify_lspace(&c).is_pass());
        }
    }

    #[test]
    fn pole_cancellation_is_caught() {
        let f = Field::prime(3).unwrap();
        let e = |x: i64| f.from_int(x);
        let w1 = LogForm::new(&f, vec![e(0), e(1)], vec![1, 2]).unwrap();
        let w2 = LogForm::new(&f, vec![e(0), e(2)], vec![2, 1]).unwrap();
        let c = LSpaceCandidate::from_logforms(&[w1, w2]).unwrap();
        match verify_lspace(&c) {
            Verdict::Fail {
                combination,
                reason,
            } => {
                assert_eq!(combination, vec![2, 1]);
                assert!(reason.contains("3 poles"));
            }
            Verdict::Pass => panic!("expected failure"),
        }
    }

    #[test]
    fn non_log_rational_form_is_rejected() {
        let f = Field::new(3, 2).unwrap();
        let g = f.gen();
        // residue g at 0 is not in F_3
        let w = RationalForm::new(
            Poly::constant(&f, g),
            Poly::from_roots(&f, &[f.zero(), f.one()]),
        );
        assert!(w.defect(1).unwrap().contains("outside"));
    }

    #[test]
    fn family_in_char_2() {
        let f = Field::new(2, 2).unwrap();
        let fam = elementary_family(&f, &[f.one(), f.gen()]).unwrap();
        assert_eq!(fam.m + 1, 2);
        assert!(fam.verdict.is_pass());
        let r = divisibility_necessity_check(&fam.candidate);
        assert!(r.theorem_holds && r.common_poles_match());
        assert!(matches!(
            elementary_family(&f, &[f.one(), f.one()]),
            Err(Error::DegenerateParameters(_))
        ));
    }

    #[test]
    fn pair_degree_mismatch() {
        let f = Field::prime(3).unwrap();
        let a = Poly::from_ints(&f, &[0, 1]);
        let b = Poly::from_ints(&f, &[0, 0, 1]);
        assert!(matches!(
            pagot_pair_check(&a, &b, 2),
            Err(Error::DegreeMismatch(_))
        ));
        assert!(matches!(
            pagot_pair_check(&a, &a, 3),
            Err(Error::DegreeMismatch(_))
        ));
    }

    #[test]
    fn record_round_trip() {
        let w = example1_logform(3, 4).unwrap();
        let r = LogFormRecord::from_form(&w);
        assert_eq!(r.to_form().unwrap(), w);
    }
}
