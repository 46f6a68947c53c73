//! Prime fields `F_p` and extensions `F_{p^k}`.
//!
//! An element is stored as its index `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`,
//! where `c_i` are its coordinates in the power basis `1, x, ..., x^{k-1}`
//! modulo the field's defining polynomial. The index order is the canonical
//! order used everywhere results are sorted.
//!
//! Fields up to [`TABLE_BOUND`] elements lazily build discrete log tables so
//! that multiplication is two lookups; larger fields fall back to schoolbook
//! multiplication in the power basis.

mod matrix;
mod poly;
mod text;

pub use matrix::{semilinear_product, Matrix};
pub use poly::Poly;
pub use text::{parse_elem, parse_poly};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest field order for which operations that walk every element run.
pub const ENUMERATION_BOUND: u64 = 1 << 24;
/// Largest field order for which log/antilog tables are built.
pub const TABLE_BOUND: u64 = 1 << 24;
/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 12;

/// An element of some [`Field`], identified by its index.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A finite field `F_{p^k}` with a fixed defining polynomial.
///
/// Cheap to clone; all clones share the same lookup tables.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

struct FieldInner {
    p: u64,
    k: usize,
    order: u64,
    /// Monic defining polynomial, ascending, length `k + 1`.
    modulus: Vec<u64>,
    /// `p^i` for `i = 0..=k`.
    powers: Vec<u64>,
    tables: OnceLock<Option<LogTables>>,
}

struct LogTables {
    generator: u64,
    /// `exp[i] = g^i` for `i < q - 1`.
    exp: Vec<u32>,
    /// `log[x]` for `x != 0`.
    log: Vec<u32>,
}

static FIELD_CACHE: OnceLock<Mutex<HashMap<(u64, usize), Field>>> = OnceLock::new();

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    /// `F_{p^k}` defined by the least monic irreducible polynomial of degree
    /// `k`, where monic polynomials are ordered by the index of their
    /// non-leading coefficient vector. Fields are cached per `(p, k)`.
    pub fn new(p: u64, k: usize) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::TooLarge(format!("characteristic {p} exceeds 2^31")));
        }
        if k == 0 || k > MAX_DEGREE {
            return Err(Error::OutOfRange(format!(
                "extension degree {k} not in 1..={MAX_DEGREE}"
            )));
        }
        let order = checked_order(p, k)?;
        let cache = FIELD_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = cache.lock().unwrap().get(&(p, k)) {
            return Ok(f.clone());
        }
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            least_irreducible(p, k)?
        };
        let field = Field::raw(p, k, order, modulus);
        cache.lock().unwrap().insert((p, k), field.clone());
        Ok(field)
    }

    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1)
    }

    /// A field with an explicitly chosen defining polynomial (ascending,
    /// monic). Fails if the polynomial is reducible.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        let k = modulus.len().saturating_sub(1);
        if k == 0 || k > MAX_DEGREE || modulus[k] != 1 {
            return Err(Error::Invalid(
                "modulus must be monic of degree 1..=12".into(),
            ));
        }
        let order = checked_order(p, k)?;
        let modulus: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        if !is_irreducible(p, &modulus)? {
            return Err(Error::Invalid("modulus is reducible".into()));
        }
        Ok(Field::raw(p, k, order, modulus))
    }

    fn raw(p: u64, k: usize, order: u64, modulus: Vec<u64>) -> Field {
        let powers = (0..=k as u32).map(|i| p.pow(i)).collect();
        Field(Arc::new(FieldInner {
            p,
            k,
            order,
            modulus,
            powers,
            tables: OnceLock::new(),
        }))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn k(&self) -> usize {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }

    /// Errors with `TooLarge` unless every element can be visited.
    pub fn check_enumerable(&self) -> Result<()> {
        if self.order() > ENUMERATION_BOUND {
            return Err(Error::TooLarge(format!(
                "GF({}^{}) has more than {} elements",
                self.p(),
                self.k(),
                ENUMERATION_BOUND
            )));
        }
        Ok(())
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order()).map(Elem)
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(1)
    }

    /// The class of `x`. In `F_p` (modulus `x`) this is zero.
    pub fn gen(&self) -> Elem {
        if self.k() == 1 {
            Elem(0)
        } else {
            Elem(self.p())
        }
    }

    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index >= self.order() {
            return Err(Error::OutOfRange(format!(
                "index {index} outside GF({}^{})",
                self.p(),
                self.k()
            )));
        }
        Ok(Elem(index))
    }

    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p() as i64) as u64)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Elem> {
        if coeffs.len() > self.k() {
            return Err(Error::Invalid(format!(
                "{} coordinates for a degree-{} field",
                coeffs.len(),
                self.k()
            )));
        }
        let p = self.p();
        Ok(Elem(
            coeffs
                .iter()
                .zip(&self.0.powers)
                .map(|(c, w)| (c % p) * w)
                .sum(),
        ))
    }

    /// Power-basis coordinates, length `k`.
    pub fn coeffs(&self, a: Elem) -> Vec<u64> {
        let p = self.p();
        let mut v = a.0;
        (0..self.k())
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    /// `Some(c)` when `a` lies in the prime field.
    pub fn to_prime(&self, a: Elem) -> Option<u64> {
        (a.0 < self.p()).then_some(a.0)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p();
        if self.k() == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= p { s - p } else { s });
        }
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out, mut w) = (a.0, b.0, 0, 1);
        while x > 0 || y > 0 {
            let d = x % p + y % p;
            out += if d >= p { d - p } else { d } * w;
            x /= p;
            y /= p;
            w *= p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.p();
        if self.k() == 1 {
            return Elem(if a.0 == 0 { 0 } else { p - a.0 });
        }
        if p == 2 {
            return a;
        }
        let (mut x, mut out, mut w) = (a.0, 0, 1);
        while x > 0 {
            let d = x % p;
            out += if d == 0 { 0 } else { p - d } * w;
            x /= p;
            w *= p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem(0);
        }
        if self.k() == 1 {
            return Elem(a.0 * b.0 % self.p());
        }
        match self.tables() {
            Some(t) => {
                let n = (self.order() - 1) as u32;
                let mut s = t.log[a.0 as usize] + t.log[b.0 as usize];
                if s >= n {
                    s -= n;
                }
                Elem(t.exp[s as usize] as u64)
            }
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p();
        let k = self.k();
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % p;
            }
        }
        let m = &self.0.modulus;
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &mi) in m.iter().enumerate().take(k) {
                let idx = top - k + i;
                prod[idx] = (prod[idx] + (p - c) * mi) % p;
            }
        }
        self.from_coeffs(&prod[..k])
            .expect("reduced product has k coordinates")
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        if e == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return a;
        }
        if let Some(t) = self.tables() {
            let n = self.order() - 1;
            let l = (t.log[a.0 as usize] as u128 * (e % n) as u128 % n as u128) as usize;
            return Elem(t.exp[l] as u64);
        }
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.0 == 0 {
            return None;
        }
        if let Some(t) = self.tables() {
            let n = (self.order() - 1) as u32;
            let l = t.log[a.0 as usize];
            return Some(Elem(t.exp[((n - l) % n) as usize] as u64));
        }
        Some(self.pow(a, self.order() - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// `a^(p^e)`; negative `e` applies the inverse Frobenius.
    pub fn frobenius(&self, a: Elem, e: i64) -> Elem {
        let k = self.k() as i64;
        let e = e.rem_euclid(k) as u32;
        if e == 0 || a.0 < self.p() {
            return a;
        }
        self.pow(a, self.p().pow(e))
    }

    /// Quadratic character: 0 at zero, 1 on nonzero squares, -1 otherwise.
    /// Requires odd characteristic.
    pub fn quadratic_character(&self, a: Elem) -> i8 {
        if a.0 == 0 {
            return 0;
        }
        if let Some(t) = self.tables() {
            return if t.log[a.0 as usize] % 2 == 0 { 1 } else { -1 };
        }
        if self.pow(a, (self.order() - 1) / 2) == self.one() {
            1
        } else {
            -1
        }
    }

    /// A generator of the multiplicative group (least index).
    pub fn primitive_element(&self) -> Elem {
        match self.tables() {
            Some(t) => Elem(t.generator),
            None => Elem(self.find_primitive()),
        }
    }

    /// Discrete log to the base [`Field::primitive_element`].
    pub fn log(&self, a: Elem) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        self.tables().map(|t| t.log[a.0 as usize] as u64)
    }

    fn find_primitive(&self) -> u64 {
        let n = self.order() - 1;
        let factors = prime_factors(n);
        (1..self.order())
            .find(|&g| {
                factors
                    .iter()
                    .all(|r| self.pow_slow(Elem(g), n / r) != self.one())
            })
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn pow_slow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow_any(acc, base);
            }
            base = self.mul_slow_any(base, base);
            e >>= 1;
        }
        acc
    }

    fn mul_slow_any(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            Elem(0)
        } else if self.k() == 1 {
            Elem(a.0 * b.0 % self.p())
        } else {
            self.mul_slow(a, b)
        }
    }

    fn tables(&self) -> Option<&LogTables> {
        if self.k() == 1 && self.order() > TABLE_BOUND {
            return None;
        }
        self.0
            .tables
            .get_or_init(|| {
                if self.order() > TABLE_BOUND {
                    return None;
                }
                let q = self.order();
                let g = self.find_primitive();
                let mut exp = Vec::with_capacity((q - 1) as usize);
                let mut log = vec![0u32; q as usize];
                let mut x = 1u64;
                for i in 0..q - 1 {
                    exp.push(x as u32);
                    log[x as usize] = i as u32;
                    x = self.mul_slow_any(Elem(x), Elem(g)).0;
                }
                Some(LogTables {
                    generator: g,
                    exp,
                    log,
                })
            })
            .as_ref()
    }

    /// `"[c0,c1,...] over GF(p^k)"`.
    pub fn format_elem(&self, a: Elem) -> String {
        format!(
            "{} over GF({}^{})",
            self.format_coords(a),
            self.p(),
            self.k()
        )
    }

    /// `"[c0,c1,...]"`.
    pub fn format_coords(&self, a: Elem) -> String {
        let parts: Vec<String> = self.coeffs(a).iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Coefficient form used inside polynomial text: a bare integer over
    /// `F_p`, coordinates otherwise.
    pub fn format_coeff(&self, a: Elem) -> String {
        if self.k() == 1 {
            a.0.to_string()
        } else {
            self.format_coords(a)
        }
    }

    /// Defining polynomial as text, e.g. `"1*x^0 + 1*x^1 + 1*x^4"`.
    pub fn describe(&self) -> String {
        let prime = Field::prime(self.p()).expect("characteristic already validated");
        let coeffs = self
            .0
            .modulus
            .iter()
            .map(|&c| prime.from_int(c as i64))
            .collect();
        format!(
            "GF({}^{}) mod {}",
            self.p(),
            self.k(),
            Poly::new(&prime, coeffs)
        )
    }
}

/// Embedding of a subfield `F_{p^k}` into `F_{p^(kr)}`, fixed by sending
/// the generator of the subfield's power basis to the least-index root of its
/// defining polynomial.
#[derive(Clone, Debug)]
pub struct Embedding {
    sub: Field,
    ext: Field,
    basis_images: Vec<Elem>,
}

impl Embedding {
    pub fn new(sub: &Field, ext: &Field) -> Result<Embedding> {
        if sub.p() != ext.p() || !ext.k().is_multiple_of(sub.k()) {
            return Err(Error::FieldMismatch);
        }
        let root = if sub.k() == 1 {
            ext.zero()
        } else {
            let coeffs: Vec<Elem> = sub
                .modulus()
                .iter()
                .map(|&c| ext.from_int(c as i64))
                .collect();
            let m = Poly::new(ext, coeffs);
            let step = (ext.order() - 1) / (sub.order() - 1);
            let h = ext.pow(ext.primitive_element(), step);
            let mut cands: Vec<Elem> = (0..sub.order() - 1).map(|j| ext.pow(h, j)).collect();
            cands.sort();
            *cands
                .iter()
                .find(|&&a| m.eval(a).is_zero())
                .expect("defining polynomial splits in the extension")
        };
        let basis_images = (0..sub.k() as u64).map(|i| ext.pow(root, i)).collect();
        Ok(Embedding {
            sub: sub.clone(),
            ext: ext.clone(),
            basis_images,
        })
    }

    pub fn map(&self, a: Elem) -> Elem {
        let ext = &self.ext;
        self.sub
            .coeffs(a)
            .iter()
            .zip(&self.basis_images)
            .fold(ext.zero(), |acc, (&c, &b)| {
                ext.add(acc, ext.mul(ext.from_int(c as i64), b))
            })
    }

    pub fn map_poly(&self, f: &Poly) -> Poly {
        Poly::new(&self.ext, f.coeffs().iter().map(|&c| self.map(c)).collect())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {:?})", self.p(), self.k(), self.0.modulus)
    }
}

fn checked_order(p: u64, k: usize) -> Result<u64> {
    p.checked_pow(k as u32)
        .filter(|&q| q < 1 << 62)
        .ok_or_else(|| Error::TooLarge(format!("{p}^{k} does not fit the element encoding")))
}

fn least_irreducible(p: u64, k: usize) -> Result<Vec<u64>> {
    let count = p.pow(k as u32);
    for idx in 0..count {
        let mut m = Vec::with_capacity(k + 1);
        let mut v = idx;
        for _ in 0..k {
            m.push(v % p);
            v /= p;
        }
        m.push(1);
        if m[0] != 0 && is_irreducible(p, &m)? {
            return Ok(m);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Rabin's test for a monic polynomial over `F_p` (ascending coefficients).
pub fn is_irreducible(p: u64, modulus: &[u64]) -> Result<bool> {
    let fp = Field::prime(p)?;
    let m = Poly::new(
        &fp,
        modulus.iter().map(|&c| fp.from_int(c as i64)).collect(),
    );
    let k = match m.degree() {
        Some(d) if d >= 1 => d,
        _ => return Ok(false),
    };
    if k == 1 {
        return Ok(true);
    }
    let x = Poly::monomial(&fp, fp.one(), 1);
    // x^(p^i) mod m for i = 1..=k
    let mut frob = vec![x.clone()];
    for _ in 0..k {
        let last = frob.last().unwrap();
        frob.push(last.pow_mod(p, &m));
    }
    if frob[k] != x {
        return Ok(false);
    }
    for r in prime_factors(k as u64) {
        let h = &frob[k / r as usize] - &x;
        if m.gcd(&h).degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_has_modulus_x() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 2);
    }

    #[test]
    fn rejects_composite_and_large() {
        assert_eq!(Field::new(9, 1).unwrap_err(), Error::NonPrime(9));
        assert!(matches!(Field::new(3, 13), Err(Error::OutOfRange(_))));
        let big = Field::new(65521, 3).unwrap();
        assert!(matches!(big.check_enumerable(), Err(Error::TooLarge(_))));
    }

    #[test]
    fn frobenius_of_generator_is_a_power() {
        let f = Field::new(3, 2).unwrap();
        let g = f.gen();
        assert_eq!(f.frobenius(g, 1), f.pow(g, 3));
        assert_eq!(f.frobenius(f.frobenius(g, 1), -1), g);
        for c in 0..3 {
            assert_eq!(f.frobenius(f.from_int(c), 1), f.from_int(c));
        }
    }

    #[test]
    fn table_and_schoolbook_agree() {
        let f = Field::new(5, 3).unwrap();
        for a in f.elements().step_by(7) {
            for b in f.elements().step_by(11) {
                assert_eq!(f.mul(a, b), f.mul_slow_any(a, b));
            }
        }
    }

    #[test]
    fn quadratic_character_counts_squares() {
        let f = Field::new(7, 2).unwrap();
        let squares = f
            .elements()
            .filter(|&a| f.quadratic_character(a) == 1)
            .count();
        assert_eq!(squares as u64, (f.order() - 1) / 2);
    }

    #[test]
    fn explicit_reducible_modulus_rejected() {
        assert!(Field::with_modulus(2, &[1, 0, 1]).is_err());
        assert!(Field::with_modulus(2, &[1, 1, 1]).is_ok());
    }
}
