//! Dense exact matrices with deterministic echelon reduction.

use super::{ExactError, Scalar};

/// Row-major dense matrix over exact scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
pub struct Rref {
    pub mat: Mat,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// All entries must share one field: a single cyclotomic order may
    /// appear, and plain rationals embed into it.
    pub fn validate_field(&self) -> Result<u32, ExactError> {
        let mut order = 1u32;
        for s in &self.data {
            let o = s.order();
            if o != 1 {
                if order == 1 {
                    order = o;
                } else if order != o {
                    return Err(ExactError::FieldMismatch(order, o));
                }
            }
        }
        Ok(order)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                if !self[(i, k)].is_zero() && !other[(k, j)].is_zero() {
                    acc += &(&self[(i, k)] * &other[(k, j)]);
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    if !self[(i, k)].is_zero() && !v[k].is_zero() {
                        acc += &(&self[(i, k)] * &v[k]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form with canonical pivoting: columns scanned left
    /// to right, the pivot is the first row (in order) with a nonzero entry.
    /// Deterministic for a given input.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let piv = (r..m.rows).find(|&i| !m[(i, c)].is_zero());
            let Some(piv) = piv else { continue };
            m.swap_rows(r, piv);
            let inv = m[(r, c)].inv().expect("pivot nonzero");
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in c..m.cols {
                        let t = &m[(r, j)] * &factor;
                        let v = &m[(i, j)] - &t;
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { mat: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Canonical kernel basis: one vector per free column, with a 1 in the
    /// free position and the negated reduced column in the pivot positions.
    /// Vectors are linearly independent and satisfy `A v = 0` exactly.
    pub fn nullspace(&self) -> Result<Vec<Vec<Scalar>>, ExactError> {
        self.validate_field()?;
        let Rref { mat, pivots } = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&mat[(r, free)];
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// A particular solution of `A x = b` (free variables set to zero), or
    /// an inconsistency error.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vec<Scalar>, ExactError> {
        assert_eq!(self.rows, b.len());
        let aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        aug.validate_field()?;
        let Rref { mat, pivots } = aug.rref();
        if pivots.contains(&self.cols) {
            return Err(ExactError::Inconsistent);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = mat[(r, self.cols)].clone();
        }
        Ok(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Factor once, solve many times against different right-hand sides.
    pub fn prepare_solve(&self) -> PreparedSolve {
        let aug = Mat::from_fn(self.rows, self.cols + self.rows, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else if j - self.cols == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let Rref { mat, pivots } = aug.rref();
        // pivots beyond the original columns mean rows of the identity block
        // became pivots: those rows encode the consistency conditions.
        let col_pivots: Vec<usize> = pivots.iter().copied().filter(|&c| c < self.cols).collect();
        PreparedSolve { rref_aug: mat, pivots: col_pivots, cols: self.cols, rows: self.rows }
    }
}

/// Precomputed elimination of a matrix A, exposing fast exact solves.
pub struct PreparedSolve {
    rref_aug: Mat,
    pivots: Vec<usize>,
    cols: usize,
    rows: usize,
}

impl PreparedSolve {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Particular solution of `A x = b` with free variables zero.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vec<Scalar>, ExactError> {
        assert_eq!(b.len(), self.rows);
        let mut x = vec![Scalar::zero(); self.cols];
        for r in 0..self.rref_aug.rows {
            let mut acc = Scalar::zero();
            for j in 0..self.rows {
                let t = &self.rref_aug[(r, self.cols + j)];
                if !t.is_zero() && !b[j].is_zero() {
                    acc += &(t * &b[j]);
                }
            }
            if r < self.pivots.len() {
                x[self.pivots[r]] = acc;
            } else if !acc.is_zero() {
                return Err(ExactError::Inconsistent);
            }
        }
        Ok(x)
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn identity_has_empty_kernel() {
        let m = Mat::identity(3);
        assert!(m.nullspace().unwrap().is_empty());
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let m = Mat::zero(2, 2);
        let ns = m.nullspace().unwrap();
        assert_eq!(ns.len(), 2);
    }

    #[test]
    fn symmetric_rank_one_kernel() {
        let m = Mat::from_rows(vec![vec![s(1), s(1)], vec![s(1), s(1)]]);
        let ns = m.nullspace().unwrap();
        assert_eq!(ns.len(), 1);
        // spanned by (1, -1)
        let v = &ns[0];
        assert_eq!(&v[0] + &v[1], Scalar::zero());
        assert!(!v[0].is_zero());
        for v in &ns {
            let prod = m.mul_vec(v);
            assert!(prod.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rank_nullity() {
        let m = Mat::from_rows(vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(1), s(0), s(1)],
        ]);
        let rank = m.rank();
        let nullity = m.nullspace().unwrap().len();
        assert_eq!(rank + nullity, 3);
    }

    #[test]
    fn solve_roundtrip() {
        let m = Mat::from_rows(vec![vec![s(2), s(1)], vec![s(1), s(-1)]]);
        let b = vec![s(5), s(1)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
    }

    #[test]
    fn solve_inconsistent() {
        let m = Mat::from_rows(vec![vec![s(1), s(1)], vec![s(1), s(1)]]);
        let b = vec![s(0), s(1)];
        assert!(matches!(m.solve(&b), Err(ExactError::Inconsistent)));
    }

    #[test]
    fn mixed_cyclotomic_orders_error() {
        let m = Mat::from_rows(vec![vec![Scalar::zeta(5), Scalar::zeta(8)]]);
        assert!(matches!(m.nullspace(), Err(ExactError::FieldMismatch(_, _))));
    }

    #[test]
    fn cyclotomic_kernel() {
        let z = Scalar::zeta(4);
        // [1, z; -z, 1] has kernel spanned by (z, -... ) rank 1 since det = 1 + z^2... = 0
        let m = Mat::from_rows(vec![
            vec![Scalar::one(), z.clone()],
            vec![-&z, Scalar::one()],
        ]);
        // det = 1 - (-z*z) = 1 + z^2 = 0
        let ns = m.nullspace().unwrap();
        assert_eq!(ns.len(), 1);
        let prod = m.mul_vec(&ns[0]);
        assert!(prod.iter().all(|x| x.is_zero()));
    }
}
