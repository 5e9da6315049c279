use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LinalgError;

/// Dense rectangular integer matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Permutation matrix whose row `i` is the standard basis vector `e_{perm[i]}`.
    ///
    /// Under `X -> P X Pᵀ` this moves entry `(perm[i], perm[j])` to `(i, j)`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &p) in perm.iter().enumerate() {
            assert!(p < n, "permutation index out of range");
            m[(i, p)] = BigInt::one();
        }
        m
    }

    /// Permutation that sends coordinate `from` to the last position and
    /// shifts the coordinates after it up by one.
    pub fn rotate_to_end(n: usize, from: usize) -> Self {
        let perm: Vec<usize> = (0..n).filter(|&i| i != from).chain([from]).collect();
        Self::permutation(&perm)
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(LinalgError::RaggedRows {
                    row: i,
                    expected: c,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data,
        })
    }

    /// Builds an `rows × cols` matrix from a row-major vector.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        IntMatrix { rows, cols, data }
    }

    /// Convenience constructor for literals; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("ragged integer matrix literal")
    }

    /// Matrix whose columns are the given vectors; `n` fixes the row count
    /// when there are no columns.
    pub fn from_columns(n: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(n, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), n, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &IntMatrix) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Inverse of a unimodular matrix, computed by integer Gauss-Jordan
    /// elimination. Returns `None` unless the determinant is ±1.
    pub fn unimodular_inverse(&self) -> Option<IntMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = IntMatrix::identity(n);
        // Column-wise Euclid: row operations only, so `inv` accumulates the
        // left inverse.
        for col in 0..n {
            loop {
                let pivot = (col..n)
                    .filter(|&r| !a[(r, col)].is_zero())
                    .min_by(|&x, &y| a[(x, col)].magnitude().cmp(a[(y, col)].magnitude()))?;
                a.swap_rows(col, pivot);
                inv.swap_rows(col, pivot);
                let mut done = true;
                for r in col + 1..n {
                    if a[(r, col)].is_zero() {
                        continue;
                    }
                    let q = num_integer::Integer::div_floor(&a[(r, col)], &a[(col, col)]);
                    a.add_row_multiple(r, col, &-&q);
                    inv.add_row_multiple(r, col, &-&q);
                    if !a[(r, col)].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            let p = a[(col, col)].clone();
            if p == -BigInt::one() {
                a.negate_row(col);
                inv.negate_row(col);
            } else if !p.is_one() {
                return None;
            }
        }
        for col in (0..n).rev() {
            for r in 0..col {
                let q = a[(r, col)].clone();
                if !q.is_zero() {
                    a.add_row_multiple(r, col, &-&q);
                    inv.add_row_multiple(r, col, &-&q);
                }
            }
        }
        Some(inv)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[dst] += k * row[src]`
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * k;
            self[(dst, j)] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `col[dst] += k * col[src]`
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * k;
            self[(i, dst)] += v;
        }
    }

    pub(crate) fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -&self[(i, c)];
            self[(i, c)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = a * &rhs[(k, j)];
                    out[(i, j)] += v;
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{}", self)
    }
}

/// Inline form `[a b; c d]`.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x)?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        let b = &a * &a.transpose();
        assert_eq!(b, IntMatrix::from_i64(&[&[14, 32], &[32, 77]]));
    }

    #[test]
    fn inverse_of_unimodular() {
        let a = IntMatrix::from_i64(&[&[0, -1], &[-1, 2]]);
        let inv = a.unimodular_inverse().unwrap();
        assert_eq!(inv, IntMatrix::from_i64(&[&[-2, -1], &[-1, 0]]));
        assert!((&a * &inv).is_identity());

        let b = IntMatrix::from_i64(&[&[2, 3, 1], &[1, 1, 0], &[5, 7, 3]]);
        let binv = b.unimodular_inverse().unwrap();
        assert!((&b * &binv).is_identity());

        assert!(IntMatrix::from_i64(&[&[2, 0], &[0, 1]])
            .unimodular_inverse()
            .is_none());
    }

    #[test]
    fn rotate_to_end_moves_coordinate() {
        let p = IntMatrix::rotate_to_end(3, 0);
        assert_eq!(p, IntMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]));
    }

    #[test]
    fn display_inline() {
        let a = IntMatrix::from_i64(&[&[1, -2], &[0, 1]]);
        assert_eq!(a.to_string(), "[1 -2; 0 1]");
        assert_eq!(IntMatrix::identity(0).to_string(), "[]");
    }
}
