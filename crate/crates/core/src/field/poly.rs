use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Elem, Field};
use crate::error::Result;

/// Dense univariate polynomial over a [`Field`], ascending coefficients,
/// never carrying trailing zeros. The zero polynomial has no coefficients
/// and degree `None`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Coefficients given as small integers, mapped into the prime field.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, field.one())
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn monomial(field: &Field, c: Elem, degree: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; degree + 1];
        coeffs[degree] = c;
        Poly::new(field, coeffs)
    }

    /// `x - root`.
    pub fn linear(field: &Field, root: Elem) -> Poly {
        Poly::new(field, vec![field.neg(root), field.one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.field.inv(self.leading()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    /// Product truncated to degree `<= cap`.
    pub fn mul_truncated(&self, other: &Poly, cap: usize) -> Poly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(cap + 1);
        let mut out = vec![Elem::ZERO; len];
        for (i, &a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j] = f.add(out[i + j], f.mul(a, b));
                }
            }
        }
        Poly::new(f, out)
    }

    /// `self^e` truncated to degree `<= cap`, by square-and-multiply with
    /// truncation after every step.
    pub fn pow_truncated(&self, mut e: u64, cap: usize) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut base = self.truncate(cap);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_truncated(&base, cap);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_truncated(&base, cap);
            }
        }
        acc
    }

    pub fn pow(&self, e: u64) -> Poly {
        let cap = self.degree().map_or(0, |d| d * e as usize);
        self.pow_truncated(e, cap)
    }

    pub fn truncate(&self, cap: usize) -> Poly {
        Poly::new(
            &self.field,
            self.coeffs.iter().take(cap + 1).copied().collect(),
        )
    }

    /// Euclidean division. Panics on division by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let f = &self.field;
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = f.inv(d.leading()).unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let mut q = vec![Elem::ZERO; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = r[top];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, inv);
            q[top - dd] = t;
            for (i, &di) in d.coeffs.iter().enumerate() {
                r[top - dd + i] = f.sub(r[top - dd + i], f.mul(t, di));
            }
        }
        (Poly::new(f, q), Poly::new(f, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut acc = Poly::one(&self.field).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(m);
            }
            base = (&base * &base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        self.derivative_n(1)
    }

    /// The `n`-th formal derivative.
    pub fn derivative_n(&self, n: usize) -> Poly {
        let f = &self.field;
        let p = f.p();
        let coeffs = (n..self.coeffs.len())
            .map(|i| {
                // falling factorial i (i-1) ... (i-n+1) mod p
                let factor = (0..n).fold(1u64, |acc, t| acc * ((i - t) as u64 % p) % p);
                f.mul(self.coeffs[i], f.from_int(factor as i64))
            })
            .collect();
        Poly::new(f, coeffs)
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self(a x + b)`.
    pub fn compose_linear(&self, a: Elem, b: Elem) -> Poly {
        let f = &self.field;
        let lin = Poly::new(f, vec![b, a]);
        self.coeffs.iter().rev().fold(Poly::zero(f), |acc, &c| {
            &(&acc * &lin) + &Poly::constant(f, c)
        })
    }

    /// Apply `x -> x^(p^e)` to every coefficient.
    pub fn twist(&self, e: i64) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.frobenius(c, e)).collect())
    }

    pub fn is_squarefree(&self) -> bool {
        if self.degree().unwrap_or(0) == 0 {
            return !self.is_zero();
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// All roots in the coefficient field, ascending, without multiplicity.
    pub fn roots(&self) -> Result<Vec<Elem>> {
        self.field.check_enumerable()?;
        if self.is_zero() {
            return Ok(self.field.elements().collect());
        }
        Ok(self
            .field
            .elements()
            .filter(|&x| self.eval(x).is_zero())
            .collect())
    }

    /// Product of `x - r` over the given roots.
    pub fn from_roots(field: &Field, roots: &[Elem]) -> Poly {
        roots
            .iter()
            .fold(Poly::one(field), |acc, &r| &acc * &Poly::linear(field, r))
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let f = &self.field;
        debug_assert!(f == &rhs.field);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            f,
            (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            f,
            (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect(),
        )
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Poly) -> Poly {
        let cap = self.coeffs.len() + rhs.coeffs.len();
        self.mul_truncated(rhs, cap)
    }
}

/// Sparse ascending text: `"c*x^i + ..."`, or `"0"`.
impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| format!("{}*x^{}", self.field.format_coeff(c), i))
            .collect();
        if terms.is_empty() {
            write!(out, "0")
        } else {
            write!(out, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "Poly[{}]({})", self.field.order(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn pow_truncated_zero_exponent_is_one() {
        let f = fp(5);
        let g = Poly::from_ints(&f, &[1, 2, 3]);
        assert_eq!(g.pow_truncated(0, 7), Poly::one(&f));
    }

    #[test]
    fn freshmans_dream_over_f2() {
        let f = fp(2);
        let g = Poly::from_ints(&f, &[1, 1]).pow(2);
        assert_eq!(g.pow_truncated(1, 2), Poly::from_ints(&f, &[1, 0, 1]));
    }

    #[test]
    fn cube_over_f3_matches_repeated_multiplication() {
        let f = fp(3);
        let g = Poly::from_ints(&f, &[0, 2, 0, 1]);
        let direct = &(&g * &g) * &g;
        // char 3: (x^3 + 2x)^3 = x^9 + 2x^3
        assert_eq!(direct, Poly::from_ints(&f, &[0, 0, 0, 2, 0, 0, 0, 0, 0, 1]));
        assert_eq!(g.pow_truncated(3, 9), direct);
        assert_eq!(g.pow_truncated(3, 5), Poly::from_ints(&f, &[0, 0, 0, 2]));
    }

    #[test]
    fn divrem_reconstructs() {
        let f = Field::new(3, 2).unwrap();
        let a = Poly::new(&f, f.elements().skip(1).take(7).collect());
        let b = Poly::new(&f, vec![f.gen(), f.one(), f.from_int(2)]);
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn derivative_in_char_p() {
        let f = fp(3);
        let g = Poly::from_ints(&f, &[1, 1, 1, 1]);
        assert_eq!(g.derivative(), Poly::from_ints(&f, &[1, 2]));
        assert_eq!(g.derivative_n(2), Poly::from_ints(&f, &[2]));
        assert!(g.derivative_n(3).is_zero());
    }

    #[test]
    fn squarefree_and_roots() {
        let f = fp(7);
        let g = Poly::from_roots(&f, &[f.from_int(1), f.from_int(3), f.from_int(5)]);
        assert!(g.is_squarefree());
        assert_eq!(
            g.roots().unwrap(),
            vec![f.from_int(1), f.from_int(3), f.from_int(5)]
        );
        assert!(!(&g * &Poly::linear(&f, f.from_int(3))).is_squarefree());
    }

    #[test]
    fn compose_linear_shifts_roots() {
        let f = fp(11);
        let g = Poly::from_roots(&f, &[f.from_int(2), f.from_int(4)]);
        // g(x + 1) vanishes at 1 and 3
        let h = g.compose_linear(f.one(), f.one());
        assert_eq!(h.roots().unwrap(), vec![f.from_int(1), f.from_int(3)]);
    }

    #[test]
    fn display_is_sparse_ascending() {
        let f = fp(5);
        assert_eq!(
            Poly::from_ints(&f, &[1, 0, 0, 4]).to_string(),
            "1*x^0 + 4*x^3"
        );
        assert_eq!(Poly::zero(&f).to_string(), "0");
    }
}
