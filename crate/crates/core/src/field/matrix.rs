use std::fmt;

use super::{Elem, Field};
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Elem,
    ) -> Matrix {
        let data = (0..rows * cols).map(|i| f(i / cols, i % cols)).collect();
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Entries given as small integers in the prime field.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix::from_fn(field, r, c, |i, j| {
            field.from_int(rows[i][j])
        }))
    }

    pub fn zero(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(field, rows, cols, |_, _| Elem::ZERO)
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        Matrix::from_fn(
            field,
            n,
            n,
            |i, j| if i == j { field.one() } else { Elem::ZERO },
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Frobenius applied entrywise: `M^(p^e)`.
    pub fn twist(&self, e: i64) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.frobenius(x, e)).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        Ok(Matrix::from_fn(f, self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Elem::ZERO, |acc, t| {
                f.add(acc, f.mul(self.get(i, t), other.get(t, j)))
            })
        }))
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(
                "sum of differently shaped matrices".into(),
            ));
        }
        let f = &self.field;
        Ok(Matrix::from_fn(f, self.rows, self.cols, |i, j| {
            f.add(self.get(i, j), other.get(i, j))
        }))
    }

    pub fn apply(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch("vector length".into()));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Elem::ZERO, |acc, j| f.add(acc, f.mul(self.get(i, j), v[j])))
            })
            .collect())
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(r * m.cols + j, pr * m.cols + j);
            }
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in 0..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i == r || factor.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Elem::ZERO; self.cols];
                v[fc] = f.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(row, fc));
                }
                v
            })
            .collect()
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &Field, rows: usize, cols: &[Vec<Elem>]) -> Matrix {
        Matrix::from_fn(field, rows, cols.len(), |i, j| cols[j][i])
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix::new(&self.field, self.rows + other.rows, self.cols, data)
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts".into()));
        }
        Ok(Matrix::from_fn(
            &self.field,
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j)
                } else {
                    other.get(i, j - self.cols)
                }
            },
        ))
    }

    pub fn block_diag(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(Matrix::from_fn(
            &self.field,
            self.rows + other.rows,
            self.cols + other.cols,
            |i, j| match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j),
                (false, false) => other.get(i - self.rows, j - self.cols),
                _ => Elem::ZERO,
            },
        ))
    }
}

/// Composition of semilinear maps: `M1 · M2^(p^twist1)`, with twist
/// `twist1 + twist2`. If `v -> M1 v^(p^t1)` and `v -> M2 v^(p^t2)` are the
/// two maps, the result is the matrix of their composite (first `M2`).
pub fn semilinear_product(
    m1: &Matrix,
    twist1: i64,
    m2: &Matrix,
    twist2: i64,
) -> Result<(Matrix, i64)> {
    Ok((m1.mul(&m2.twist(twist1))?, twist1 + twist2))
}

impl fmt::Display for Matrix {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = self
                    .row(i)
                    .iter()
                    .map(|&e| self.field.format_coeff(e))
                    .collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(out, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "Matrix{}x{}{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity_and_zero() {
        let f = Field::new(5, 2).unwrap();
        assert_eq!(Matrix::identity(&f, 4).rank(), 4);
        assert_eq!(Matrix::zero(&f, 3, 5).rank(), 0);
    }

    #[test]
    fn semilinear_square_of_nilpotent_is_zero() {
        let f = Field::prime(3).unwrap();
        let a = Matrix::from_ints(&f, &[&[0, 0], &[1, 0]]).unwrap();
        let (sq, twist) = semilinear_product(&a, 1, &a, 1).unwrap();
        assert!(sq.is_zero());
        assert_eq!(twist, 2);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = Field::prime(7).unwrap();
        let m = Matrix::from_ints(&f, &[&[1, 2, 3, 4], &[2, 4, 6, 1], &[3, 6, 2, 5]]).unwrap();
        let ker = m.kernel();
        assert_eq!(ker.len() + m.rank(), 4);
        for v in ker {
            assert!(m.apply(&v).unwrap().iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let f = Field::prime(2).unwrap();
        let a = Matrix::zero(&f, 2, 3);
        assert!(matches!(a.mul(&a), Err(Error::DimensionMismatch(_))));
    }
}
