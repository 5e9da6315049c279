use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, LinalgError};

/// Exact symmetric matrix over the rationals. The 0×0 matrix is a valid value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymMatrix {
    n: usize,
    data: Vec<BigRational>,
}

impl SymMatrix {
    /// The 0×0 matrix.
    pub fn empty() -> Self {
        SymMatrix {
            n: 0,
            data: Vec::new(),
        }
    }

    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![BigRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, BigRational::one())
    }

    pub fn scalar(n: usize, x: BigRational) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn diag(entries: &[BigRational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n);
        for (i, x) in entries.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn diag_i64(entries: &[i64]) -> Self {
        Self::diag(&entries.iter().map(|&x| BigRational::from_integer(x.into())).collect::<Vec<_>>())
    }

    /// Validates shape and exact symmetry.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(LinalgError::RaggedRows {
                    row: i,
                    expected: n,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        for i in 0..n {
            for j in i + 1..n {
                if data[i * n + j] != data[j * n + i] {
                    return Err(LinalgError::NotSymmetric { i, j });
                }
            }
        }
        Ok(SymMatrix { n, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, LinalgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    /// Integer symmetric matrix; validates symmetry.
    pub fn from_int_matrix(m: &IntMatrix) -> Result<Self, LinalgError> {
        if !m.is_square() {
            return Err(LinalgError::SizeMismatch {
                expected: "square".into(),
                found: format!("{}x{}", m.rows(), m.cols()),
            });
        }
        Self::from_rows(
            m.to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(BigRational::from_integer).collect())
                .collect(),
        )
    }

    /// `C Cᵀ` for an integer matrix `C`.
    pub fn gram(c: &IntMatrix) -> Self {
        let prod = c * &c.transpose();
        Self::from_int_matrix(&prod).expect("C Cᵀ is symmetric")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &BigRational> {
        self.data.iter()
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// Integer entries, or `None` if some entry has a denominator.
    pub fn to_int_matrix(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        Some(IntMatrix::from_vec(
            self.n,
            self.n,
            self.data.iter().map(|x| x.to_integer()).collect(),
        ))
    }

    /// Least common multiple of all entry denominators (1 for integer matrices).
    pub fn denominator_lcm(&self) -> BigInt {
        self.data
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// Sets `(i, j)` and `(j, i)` together.
    pub fn set(&mut self, i: usize, j: usize, x: BigRational) {
        let n = self.n;
        self.data[j * n + i] = x.clone();
        self.data[i * n + j] = x;
    }

    pub fn neg(&self) -> Self {
        SymMatrix {
            n: self.n,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn direct_sum(&self, other: &SymMatrix) -> Self {
        let n = self.n + other.n;
        let mut m = Self::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.data[i * n + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                m.data[(self.n + i) * n + self.n + j] = other.get(i, j).clone();
            }
        }
        m
    }

    /// `self ⊕ [x]`.
    pub fn bordered(&self, x: BigRational) -> Self {
        self.direct_sum(&Self::diag(&[x]))
    }

    /// Leading principal submatrix of size `k`.
    pub fn leading(&self, k: usize) -> Self {
        assert!(k <= self.n);
        let mut m = Self::zeros(k);
        for i in 0..k {
            for j in 0..k {
                m.data[i * k + j] = self.get(i, j).clone();
            }
        }
        m
    }

    /// Principal submatrix on the given index set, in that order.
    pub fn principal(&self, idx: &[usize]) -> Self {
        let k = idx.len();
        let mut m = Self::zeros(k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.data[a * k + b] = self.get(i, j).clone();
            }
        }
        m
    }

    /// `xᵀ G x` for an integer vector.
    pub fn quad_form(&self, x: &[BigInt]) -> BigRational {
        let q: Vec<BigRational> = x.iter().map(|v| BigRational::from_integer(v.clone())).collect();
        self.quad_form_rat(&q)
    }

    /// `xᵀ G x` for a rational vector.
    pub fn quad_form_rat(&self, x: &[BigRational]) -> BigRational {
        assert_eq!(x.len(), self.n, "vector length mismatch");
        let mut acc = BigRational::zero();
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            let mut row = BigRational::zero();
            for j in 0..self.n {
                if !x[j].is_zero() {
                    row += self.get(i, j) * &x[j];
                }
            }
            acc += &x[i] * row;
        }
        acc
    }

    /// `G x` for a rational vector.
    pub fn mul_vec(&self, x: &[BigRational]) -> Vec<BigRational> {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(_, v)| !v.is_zero())
                    .fold(BigRational::zero(), |acc, (g, v)| acc + g * v)
            })
            .collect()
    }

    /// Maximum absolute row sum (the Gershgorin radius bound on |eigenvalues|).
    pub fn max_abs_row_sum(&self) -> BigRational {
        (0..self.n)
            .map(|i| self.row(i).iter().fold(BigRational::zero(), |a, x| a + x.abs()))
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    /// `(L·G, L)` with `L` the lcm of the denominators, row-major.
    pub(crate) fn integer_lift(&self) -> (Vec<BigInt>, BigInt) {
        let l = self.denominator_lcm();
        let m = self
            .data
            .iter()
            .map(|x| x.numer() * (&l / x.denom()))
            .collect();
        (m, l)
    }

    /// `P G Pᵀ` with no checks on `P`. Callers validate unimodularity.
    ///
    /// Works on the integer lift so that each output entry is normalized once.
    pub(crate) fn transform(&self, p: &IntMatrix) -> SymMatrix {
        let n = self.n;
        debug_assert_eq!(p.rows(), n);
        debug_assert_eq!(p.cols(), n);
        let (m, l) = self.integer_lift();
        // tmp = P M
        let mut tmp = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let pik = &p[(i, k)];
                if pik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let g = &m[k * n + j];
                    if !g.is_zero() {
                        tmp[i * n + j] += pik * g;
                    }
                }
            }
        }
        let mut out = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let mut acc = BigInt::zero();
                for k in 0..n {
                    let pjk = &p[(j, k)];
                    if !pjk.is_zero() && !tmp[i * n + k].is_zero() {
                        acc += &tmp[i * n + k] * pjk;
                    }
                }
                out.set(i, j, BigRational::new(acc, l.clone()));
            }
        }
        out
    }
}

impl std::ops::Add for &SymMatrix {
    type Output = SymMatrix;

    fn add(self, rhs: &SymMatrix) -> SymMatrix {
        assert_eq!(self.n, rhs.n, "adding matrices of different sizes");
        SymMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymMatrix{}", self)
    }
}

/// Inline form `[a b; c d]`; the empty matrix prints as `[]`.
impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
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

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn symmetry_is_checked() {
        let err = SymMatrix::from_i64(&[&[1, 2], &[3, 4]]).unwrap_err();
        assert_eq!(err, LinalgError::NotSymmetric { i: 0, j: 1 });
        assert!(SymMatrix::from_i64(&[&[1, 2], &[2, 4]]).is_ok());
    }

    #[test]
    fn empty_matrix_is_valid() {
        let e = SymMatrix::from_rows(vec![]).unwrap();
        assert_eq!(e.size(), 0);
        assert_eq!(e, SymMatrix::empty());
        assert_eq!(e.to_string(), "[]");
        assert_eq!(e.bordered(q(-1, 1)), SymMatrix::diag_i64(&[-1]));
    }

    #[test]
    fn quadratic_form_value() {
        let g = SymMatrix::from_i64(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(g.quad_form(&[1.into(), 1.into()]), q(2, 1));
        let h = SymMatrix::from_rows(vec![vec![q(1, 2), q(1, 3)], vec![q(1, 3), q(0, 1)]]).unwrap();
        assert_eq!(h.quad_form(&[2.into(), 3.into()]), q(6, 1));
        assert_eq!(h.denominator_lcm(), BigInt::from(6));
        assert!(!h.is_integral());
    }

    #[test]
    fn display_rationals() {
        let h = SymMatrix::from_rows(vec![vec![q(1, 2), q(-3, 1)], vec![q(-3, 1), q(0, 1)]]).unwrap();
        assert_eq!(h.to_string(), "[1/2 -3; -3 0]");
    }
}
