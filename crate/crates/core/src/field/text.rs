//! Text input for elements and polynomials.
//!
//! Accepted syntax is a sum of terms; each term is a product of factors
//! separated by `*` or juxtaposed:
//!
//! * an integer (reduced into the prime field),
//! * `g` or `g^e`, the class of the generator of the power basis,
//! * `[c0,c1,...]`, an element by coordinates,
//! * `x` or `x^e`, the polynomial variable (polynomials only).
//!
//! The output format of [`super::Poly`]'s `Display` parses back to the same
//! polynomial.

use super::{Elem, Field, Poly};
use crate::error::{Error, Result};

struct Term {
    coeff: Elem,
    xpow: usize,
}

struct Parser<'a> {
    field: &'a Field,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(field: &'a Field, s: &str) -> Self {
        Parser {
            field,
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        let s: String = self.chars.iter().collect();
        Error::Parse(format!("{msg} at offset {} in {s:?}", self.pos))
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("number out of range"))
    }

    fn exponent(&mut self) -> Result<u64> {
        if self.peek() == Some('^') {
            self.pos += 1;
            self.number()
        } else {
            Ok(1)
        }
    }

    fn terms(&mut self) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        let mut negate = false;
        match self.peek() {
            Some('-') => {
                negate = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let mut t = self.term()?;
            if negate {
                t.coeff = self.field.neg(t.coeff);
            }
            out.push(t);
            match self.peek() {
                None => break,
                Some('+') => negate = false,
                Some('-') => negate = true,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Term> {
        let f = self.field;
        let mut coeff = f.one();
        let mut xpow = 0usize;
        let mut seen = false;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.number()?;
                    coeff = f.mul(coeff, f.from_int((n % f.p()) as i64));
                }
                Some('g') => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    coeff = f.mul(coeff, f.pow(f.gen(), e));
                }
                Some('x') | Some('z') | Some('X') | Some('t') => {
                    self.pos += 1;
                    xpow += self.exponent()? as usize;
                }
                Some('[') => {
                    self.pos += 1;
                    let mut coords = Vec::new();
                    loop {
                        coords.push(self.number()?);
                        match self.peek() {
                            Some(',') => self.pos += 1,
                            Some(']') => {
                                self.pos += 1;
                                break;
                            }
                            _ => return Err(self.err("expected ',' or ']'")),
                        }
                    }
                    coeff = f.mul(coeff, f.from_coeffs(&coords)?);
                }
                _ => {
                    if !seen {
                        return Err(self.err("expected a term"));
                    }
                    break;
                }
            }
            seen = true;
            if self.peek() == Some('*') {
                self.pos += 1;
                if self.peek().is_none() {
                    return Err(self.err("dangling '*'"));
                }
            }
        }
        Ok(Term { coeff, xpow })
    }
}

/// Parse a polynomial such as `"x^5 + 2*x + 1"` or `"g*x^2 + [1,1]"`.
pub fn parse_poly(field: &Field, s: &str) -> Result<Poly> {
    let mut p = Parser::new(field, s);
    if p.chars.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let terms = p.terms()?;
    let deg = terms.iter().map(|t| t.xpow).max().unwrap_or(0);
    let mut coeffs = vec![Elem::ZERO; deg + 1];
    for t in terms {
        coeffs[t.xpow] = field.add(coeffs[t.xpow], t.coeff);
    }
    Ok(Poly::new(field, coeffs))
}

/// Parse a field element such as `"2"`, `"g^3 + 1"` or `"[0,1]"`.
pub fn parse_elem(field: &Field, s: &str) -> Result<Elem> {
    let poly = parse_poly(field, s)?;
    if poly.degree().unwrap_or(0) > 0 {
        return Err(Error::Parse(format!("{s:?} is not a field element")));
    }
    Ok(poly.coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_human_and_canonical_forms() {
        let f = Field::prime(7).unwrap();
        let a = parse_poly(&f, "x^5 + 3x^2 - 1").unwrap();
        assert_eq!(a, Poly::from_ints(&f, &[6, 0, 3, 0, 0, 1]));
        assert_eq!(parse_poly(&f, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn parses_extension_coefficients() {
        let f = Field::new(3, 2).unwrap();
        let a = parse_poly(&f, "g*x^2 + [1,2]").unwrap();
        assert_eq!(a.coeff(2), f.gen());
        assert_eq!(a.coeff(0), f.from_coeffs(&[1, 2]).unwrap());
        assert_eq!(parse_poly(&f, &a.to_string()).unwrap(), a);
        assert_eq!(parse_elem(&f, "g^2").unwrap(), f.mul(f.gen(), f.gen()));
    }

    #[test]
    fn rejects_garbage() {
        let f = Field::prime(5).unwrap();
        assert!(parse_poly(&f, "x^").is_err());
        assert!(parse_poly(&f, "x + + 1").is_err());
        assert!(parse_poly(&f, "").is_err());
        assert!(parse_elem(&f, "x").is_err());
    }
}
