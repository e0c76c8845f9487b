//! Dense exact linear algebra over [`Scalar`]: Gaussian elimination,
//! solving, inversion. Sizes here are tiny (d <= ~16), so no pivot-growth
//! or sparsity tricks; exactness does all the work.

use crate::error::{Error, Result};
use crate::scalar::{Ring, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zero(ring: Ring, rows: usize, cols: usize) -> Mat {
        Mat {
            ring,
            rows,
            cols,
            data: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: Ring, n: usize) -> Mat {
        let mut m = Mat::zero(ring, n, n);
        for i in 0..n {
            m[(i, i)] = ring.one();
        }
        m
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Scalar>>) -> Result<Mat> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::InvalidInput("ragged matrix rows".into()));
            }
            for s in row {
                if s.ring() != ring {
                    return Err(Error::RingMismatch(ring.to_string(), s.ring().to_string()));
                }
                data.push(s);
            }
        }
        Ok(Mat {
            ring,
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Mat::zero(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.cols {
                    let b = &other[(j, k)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, k)] = &out[(i, k)] + &(a * b);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![self.ring.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = &out[i] + &(a * &v[j]);
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let s = &self[(i, j)];
                if (i == j && !s.is_one()) || (i != j && !s.is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// In-place reduced row echelon form; returns the pivot column per row.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self[(row, col)].inverse().expect("pivot is nonzero");
            for c in col..self.cols {
                self[(row, c)] = &self[(row, c)] * &inv;
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let f = self[(r, col)].clone();
                    for c in col..self.cols {
                        self[(r, c)] = &self[(r, c)] - &(&f * &self[(row, c)]);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn inverse(&self) -> Result<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zero(self.ring, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.ring.one();
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(Error::SingularMatrix);
        }
        let mut out = Mat::zero(self.ring, n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Ok(out)
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

/// Outcome of an exact linear solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solve {
    /// No solution exists.
    Inconsistent,
    /// Exactly one solution.
    Unique(Vec<Scalar>),
    /// Affine solution set: the particular solution sets every free
    /// variable to zero (lexicographically-first pivot normalization).
    Parametric {
        particular: Vec<Scalar>,
        free_columns: Vec<usize>,
    },
}

impl Solve {
    pub fn particular(&self) -> Option<&[Scalar]> {
        match self {
            Solve::Inconsistent => None,
            Solve::Unique(v) => Some(v),
            Solve::Parametric { particular, .. } => Some(particular),
        }
    }
}

/// Solves A x = b exactly over the ring of A.
pub fn solve(a: &Mat, b: &[Scalar]) -> Solve {
    assert_eq!(a.rows(), b.len());
    let ring = a.ring();
    let n = a.cols();
    let mut aug = Mat::zero(ring, a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let pivots = aug.rref();
    // a pivot in the rhs column means 0 = 1
    if pivots.last() == Some(&n) {
        return Solve::Inconsistent;
    }
    let mut x = vec![ring.zero(); n];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug[(row, n)].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        Solve::Unique(x)
    } else {
        Solve::Parametric {
            particular: x,
            free_columns: free,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Ring::rational().from_i64(n)
    }

    #[test]
    fn solve_unique() {
        let ring = Ring::rational();
        let a = Mat::from_rows(ring, vec![vec![q(2), q(1)], vec![q(1), q(-1)]]).unwrap();
        match solve(&a, &[q(3), q(0)]) {
            Solve::Unique(x) => {
                assert_eq!(x[0], Ring::rational().from_ratio(1, 1).unwrap());
                assert_eq!(x[1], q(1));
            }
            other => panic!("expected unique solution, got {other:?}"),
        }
    }

    #[test]
    fn solve_inconsistent_and_parametric() {
        let ring = Ring::rational();
        let a = Mat::from_rows(ring, vec![vec![q(1), q(1)], vec![q(2), q(2)]]).unwrap();
        assert_eq!(solve(&a, &[q(1), q(3)]), Solve::Inconsistent);
        match solve(&a, &[q(1), q(2)]) {
            Solve::Parametric {
                particular,
                free_columns,
            } => {
                assert_eq!(particular, vec![q(1), q(0)]);
                assert_eq!(free_columns, vec![1]);
            }
            other => panic!("expected parametric, got {other:?}"),
        }
    }

    #[test]
    fn inverse_round_trip() {
        let ring = Ring::rational();
        let p = Mat::from_rows(ring, vec![vec![q(1), q(1)], vec![q(1), q(-1)]]).unwrap();
        let pinv = p.inverse().unwrap();
        assert!(p.mul(&pinv).is_identity());
        assert!(pinv.mul(&p).is_identity());
        let sing = Mat::from_rows(ring, vec![vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap();
        assert!(sing.inverse().is_err());
    }

    #[test]
    fn gf_p_elimination() {
        let f5 = Ring::gfp(5).unwrap();
        let a = Mat::from_rows(
            f5,
            vec![
                vec![f5.from_i64(2), f5.from_i64(3)],
                vec![f5.from_i64(1), f5.from_i64(3)],
            ],
        )
        .unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
    }
}
