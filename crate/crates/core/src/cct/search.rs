use num_bigint::BigInt;
use num_integer::Roots;

use super::{CctError, GramFactor};
use crate::linalg::{inertia, IntMatrix, SymMatrix};

/// Exhaustive search for an integer `C` with `C Cᵀ = G`.
///
/// Rows of `C` are filled in order. Only canonical factors are enumerated
/// (see [`GramFactor`]), which turns the sign and permutation symmetries of
/// the columns into pruning: within a run of columns whose entries agree on
/// all earlier rows, entries are non-increasing, and a column whose earlier
/// entries are all zero can only start with a positive value. Entries are
/// tried from largest to smallest, and the first complete factor found is
/// returned. `None` means the finite canonical search space is exhausted.
pub fn cct_search(g: &SymMatrix) -> Result<Option<GramFactor>, CctError> {
    let gi = g.to_int_matrix().ok_or(CctError::NotIntegral)?;
    if inertia(g).n_minus != 0 {
        return Err(CctError::NotPositiveSemidefinite);
    }
    let n = g.size();
    let mut target = vec![vec![0i64; n]; n];
    for (i, row) in target.iter_mut().enumerate() {
        for (j, t) in row.iter_mut().enumerate() {
            *t = i64::try_from(&gi[(i, j)]).map_err(|_| CctError::TooLarge)?;
            if t.unsigned_abs() > (1 << 40) {
                return Err(CctError::TooLarge);
            }
        }
    }

    let mut s = Search {
        g: target,
        cols: Vec::new(),
    };
    if !s.row(0) {
        return Ok(None);
    }
    let cols: Vec<Vec<BigInt>> = s
        .cols
        .iter()
        .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    Ok(Some(GramFactor::canonical(&IntMatrix::from_columns(n, &cols))))
}

struct Search {
    g: Vec<Vec<i64>>,
    /// Columns built so far; each has one entry per completed row.
    cols: Vec<Vec<i64>>,
}

/// Per-row scratch state for assigning entries to the existing columns.
struct RowCtx {
    i: usize,
    /// `tied[t]`: column `t` agrees with column `t-1` on every earlier row.
    tied: Vec<bool>,
    /// `suffix[t][j]`: sum of squares of row `j` over columns `t..`.
    suffix: Vec<Vec<i128>>,
    entries: Vec<i64>,
}

impl Search {
    fn row(&mut self, i: usize) -> bool {
        let n = self.g.len();
        if i == n {
            return true;
        }
        let m = self.cols.len();
        let tied = (0..m)
            .map(|t| t > 0 && self.cols[t] == self.cols[t - 1])
            .collect();
        let mut suffix = vec![vec![0i128; i]; m + 1];
        for t in (0..m).rev() {
            for j in 0..i {
                let x = self.cols[t][j] as i128;
                suffix[t][j] = suffix[t + 1][j] + x * x;
            }
        }
        let mut ctx = RowCtx {
            i,
            tied,
            suffix,
            entries: vec![0; m],
        };
        let dots = vec![0i128; i];
        self.assign(&mut ctx, 0, self.g[i][i] as i128, dots)
    }

    fn assign(&mut self, ctx: &mut RowCtx, t: usize, budget: i128, dots: Vec<i128>) -> bool {
        let i = ctx.i;
        let m = self.cols.len();
        if t == m {
            if (0..i).any(|j| dots[j] != self.g[i][j] as i128) {
                return false;
            }
            return self.open_columns(ctx, budget);
        }

        let mut hi = isqrt(budget);
        if ctx.tied[t] {
            hi = hi.min(ctx.entries[t - 1] as i128);
        }
        let lo = -isqrt(budget);
        let mut x = hi;
        while x >= lo {
            let rest = budget - x * x;
            let next: Vec<i128> = (0..i)
                .map(|j| dots[j] + x * self.cols[t][j] as i128)
                .collect();
            // Cauchy-Schwarz: the remaining columns must still reach every
            // inner product target.
            let feasible = (0..i).all(|j| {
                let gap = self.g[i][j] as i128 - next[j];
                gap * gap <= rest * ctx.suffix[t + 1][j]
            });
            if feasible {
                ctx.entries[t] = x as i64;
                if self.assign(ctx, t + 1, rest, next) {
                    return true;
                }
            }
            x -= 1;
        }
        false
    }

    /// Finishes row `i`: commits the entries and splits the leftover norm
    /// into new columns (non-increasing positive values) before recursing.
    fn open_columns(&mut self, ctx: &mut RowCtx, budget: i128) -> bool {
        let i = ctx.i;
        for (col, &x) in self.cols.iter_mut().zip(&ctx.entries) {
            col.push(x);
        }
        let base = self.cols.len();
        let mut parts = Vec::new();
        let ok = self.partitions(i, budget, isqrt(budget), &mut parts, base);
        if !ok {
            for col in self.cols.iter_mut() {
                col.pop();
            }
        }
        ok
    }

    fn partitions(
        &mut self,
        i: usize,
        rest: i128,
        cap: i128,
        parts: &mut Vec<i64>,
        base: usize,
    ) -> bool {
        if rest == 0 {
            for &p in parts.iter() {
                let mut col = vec![0i64; i];
                col.push(p);
                self.cols.push(col);
            }
            if self.row(i + 1) {
                return true;
            }
            self.cols.truncate(base);
            return false;
        }
        let mut x = cap.min(isqrt(rest));
        while x >= 1 {
            parts.push(x as i64);
            if self.partitions(i, rest - x * x, x, parts, base) {
                return true;
            }
            parts.pop();
            x -= 1;
        }
        false
    }
}

fn isqrt(x: i128) -> i128 {
    if x <= 0 {
        0
    } else {
        x.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn two_by_one() {
        let f = cct_search(&sym(&[&[2]])).unwrap().unwrap();
        assert_eq!(f.matrix(), &IntMatrix::from_i64(&[&[1, 1]]));
    }

    #[test]
    fn two_by_two() {
        let f = cct_search(&sym(&[&[2, 1], &[1, 2]])).unwrap().unwrap();
        assert_eq!(f.matrix(), &IntMatrix::from_i64(&[&[1, 1, 0], &[1, 0, 1]]));
    }

    #[test]
    fn counterexample_has_no_factor() {
        let a = sym(&[
            &[2, 1, 1, 1, 0, 0],
            &[1, 2, 1, 1, 1, 0],
            &[1, 1, 2, 1, 1, 1],
            &[1, 1, 1, 2, 1, 1],
            &[0, 1, 1, 1, 2, 1],
            &[0, 0, 1, 1, 1, 2],
        ]);
        assert_eq!(cct_search(&a).unwrap(), None);
    }

    #[test]
    fn semidefinite_and_zero_rows() {
        let f = cct_search(&sym(&[&[1, 1], &[1, 1]])).unwrap().unwrap();
        assert_eq!(f.matrix(), &IntMatrix::from_i64(&[&[1], &[1]]));
        let z = cct_search(&sym(&[&[0, 0], &[0, 3]])).unwrap().unwrap();
        assert_eq!(z.gram(), sym(&[&[0, 0], &[0, 3]]));
        assert_eq!(cct_search(&SymMatrix::empty()).unwrap().unwrap().matrix().cols(), 0);
    }

    #[test]
    fn errors() {
        assert_eq!(
            cct_search(&SymMatrix::diag_i64(&[1, -1])),
            Err(CctError::NotPositiveSemidefinite)
        );
        let half = SymMatrix::from_rows(vec![vec![num_rational::BigRational::new(
            1.into(),
            2.into(),
        )]])
        .unwrap();
        assert_eq!(cct_search(&half), Err(CctError::NotIntegral));
    }
}
