//! Hyperelliptic curves `y^2 = f(x)` in odd characteristic: Cartier–Manin
//! matrix, p-rank, a-number, point counts and the zeta function, plus the
//! searches built on them.

mod search;
mod zeta;

pub use search::{
    hasse_polynomial, klein_quotient_invariants, lambda_triples, prank_witness_table,
    search_ordinary_triple, search_prank0_triple, search_triple, supersingular_lambdas,
    triple_curve, KleinPart, KleinReport, TriplePredicate, TripleSearch, WitnessEntry,
    WitnessTable,
};
pub use zeta::{zeta_data, ZetaData, ZETA_BOUND};

use crate::error::{Error, Result};
use crate::field::{semilinear_product, Field, Matrix, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticCurve {
    f: Poly,
    genus: usize,
}

impl HyperellipticCurve {
    /// `y^2 = f(x)` with `f` squarefree of degree at least 3 over a field of
    /// odd characteristic. Genus is `floor((deg f - 1) / 2)`.
    pub fn new(f: Poly) -> Result<HyperellipticCurve> {
        if f.field().p() == 2 {
            return Err(Error::InvalidCurve(
                "characteristic 2 is not supported".into(),
            ));
        }
        let deg = f.degree().unwrap_or(0);
        if deg < 3 {
            return Err(Error::InvalidCurve(format!("degree {deg} gives genus 0")));
        }
        if !f.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        Ok(HyperellipticCurve {
            genus: (deg - 1) / 2,
            f,
        })
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn field(&self) -> &Field {
        self.f.field()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartierData {
    /// `A[i][j] = c_{ip-j}` for `1 <= i, j <= g`, where `c_m` is the `x^m`
    /// coefficient of `f^((p-1)/2)`.
    pub matrix: Matrix,
    pub p_rank: usize,
    pub a_number: usize,
}

pub fn cartier_matrix(curve: &HyperellipticCurve) -> CartierData {
    let field = curve.field();
    let p = field.p() as usize;
    let g = curve.genus();
    let h = curve.f().pow_truncated(((p - 1) / 2) as u64, g * p - 1);
    let matrix = Matrix::from_fn(field, g, g, |i, j| h.coeff((i + 1) * p - (j + 1)));
    let a_number = g - matrix.rank();
    CartierData {
        p_rank: iterated_rank(&matrix, g),
        a_number,
        matrix,
    }
}

/// Rank of `A · A^(p) · ... · A^(p^(n-1))`.
fn iterated_rank(a: &Matrix, n: usize) -> usize {
    let mut acc = (a.clone(), 1i64);
    for _ in 1..n {
        acc = semilinear_product(&acc.0, acc.1, a, 1).expect("square matrices compose");
    }
    acc.0.rank()
}

pub fn is_ordinary(curve: &HyperellipticCurve) -> bool {
    cartier_matrix(curve).p_rank == curve.genus()
}
