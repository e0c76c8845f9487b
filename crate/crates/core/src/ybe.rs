//! Yang-Baxter operators of cocommutative linear racks: the matrix
//! R(a (x) b) = b^(1) (x) (a * b^(2)) on A (x) A, the braid relation at
//! matrix level, and the explicit inverse from the bar-star tensor.

use crate::bialg::{Axiom, AxiomReport, StructureBialgebra};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::scalar::Scalar;

/// Linear map on A (x) A as a d^2 x d^2 matrix; tensor index (j,k) = j*d + k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOperator {
    dim: usize,
    mat: Mat,
}

impl TensorOperator {
    /// Dimension d of the underlying module A.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Mat {
        &self.mat
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.mat[(row, col)]
    }

    /// When every column is a standard basis vector, the operator is the
    /// linearization of a set map on pairs; returns column -> row.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let n = self.dim * self.dim;
        let mut out = Vec::with_capacity(n);
        for col in 0..n {
            let mut hit = None;
            for row in 0..n {
                let s = &self.mat[(row, col)];
                if !s.is_zero() {
                    if hit.is_some() || !s.is_one() {
                        return None;
                    }
                    hit = Some(row);
                }
            }
            out.push(hit?);
        }
        Some(out)
    }
}

/// The operator R(a (x) b) = b^(1) (x) (a * b^(2)). The proposition behind
/// it assumes a cocommutative counital coalgebra, so both are preconditions.
pub fn build_r(a: &StructureBialgebra) -> Result<TensorOperator> {
    let cocomm = a.check_cocommutative();
    if !cocomm.pass {
        return Err(Error::NotCocommutative(cocomm.witness.unwrap()[0]));
    }
    if a.find_counit().is_none() {
        return Err(Error::MissingCounit);
    }
    Ok(build_r_unchecked(a))
}

/// Builds R without the cocommutativity gate, for exploration; the braid
/// verdict is then informative only.
pub fn build_r_unchecked(a: &StructureBialgebra) -> TensorOperator {
    let d = a.dim();
    let mut mat = Mat::zero(a.ring(), d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            let col = i * d + j;
            for p in 0..d {
                for q in 0..d {
                    let c = a.mu(j, p, q);
                    if c.is_zero() {
                        continue;
                    }
                    for k in 0..d {
                        let m = a.m(i, q, k);
                        if !m.is_zero() {
                            let row = p * d + k;
                            mat[(row, col)] = &mat[(row, col)] + &(c * m);
                        }
                    }
                }
            }
        }
    }
    TensorOperator { dim: d, mat }
}

/// The inverse operator R^{-1}(a (x) b) = (b bar* a^(1)) (x) a^(2), built
/// from the second multiplication tensor.
pub fn build_r_inverse(
    a: &StructureBialgebra,
    barstar: &StructureBialgebra,
) -> Result<TensorOperator> {
    if barstar.dim() != a.dim() || barstar.ring() != a.ring() {
        return Err(Error::MissingBarstar);
    }
    let d = a.dim();
    let mut mat = Mat::zero(a.ring(), d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            let col = i * d + j;
            for p in 0..d {
                for q in 0..d {
                    let c = a.mu(i, p, q);
                    if c.is_zero() {
                        continue;
                    }
                    for k in 0..d {
                        let m = barstar.m(j, p, k);
                        if !m.is_zero() {
                            let row = k * d + q;
                            mat[(row, col)] = &mat[(row, col)] + &(c * m);
                        }
                    }
                }
            }
        }
    }
    Ok(TensorOperator { dim: d, mat })
}

fn kron_with_identity(r: &TensorOperator, on_left: bool) -> Mat {
    let d = r.dim;
    let n = d * d * d;
    let mut out = Mat::zero(r.mat.ring(), n, n);
    for p in 0..d {
        for q in 0..d {
            for i in 0..d {
                for j in 0..d {
                    let v = &r.mat[(p * d + q, i * d + j)];
                    if v.is_zero() {
                        continue;
                    }
                    for t in 0..d {
                        if on_left {
                            // (R (x) id): acts on the first two factors
                            out[((p * d + q) * d + t, (i * d + j) * d + t)] = v.clone();
                        } else {
                            // (id (x) R): acts on the last two factors
                            out[((t * d + p) * d + q, (t * d + i) * d + j)] = v.clone();
                        }
                    }
                }
            }
        }
    }
    out
}

/// (R (x) id)(id (x) R)(R (x) id) = (id (x) R)(R (x) id)(id (x) R) as
/// d^3 x d^3 matrices, compared entrywise.
pub fn check_braid(r: &TensorOperator) -> AxiomReport {
    let a = kron_with_identity(r, true);
    let b = kron_with_identity(r, false);
    let lhs = a.mul(&b).mul(&a);
    let rhs = b.mul(&a).mul(&b);
    let n = lhs.rows();
    for row in 0..n {
        for col in 0..n {
            if lhs[(row, col)] != rhs[(row, col)] {
                return AxiomReport::failing(
                    Axiom::Braid,
                    vec![row, col],
                    vec![lhs[(row, col)].clone()],
                    vec![rhs[(row, col)].clone()],
                );
            }
        }
    }
    AxiomReport::passing(Axiom::Braid)
}

/// R Rinv = Rinv R = id on A (x) A.
pub fn check_inverse(r: &TensorOperator, rinv: &TensorOperator) -> AxiomReport {
    for (first, second) in [(r, rinv), (rinv, r)] {
        let prod = first.mat.mul(&second.mat);
        if !prod.is_identity() {
            let n = prod.rows();
            for row in 0..n {
                for col in 0..n {
                    let want = if row == col {
                        prod.ring().one()
                    } else {
                        prod.ring().zero()
                    };
                    if prod[(row, col)] != want {
                        return AxiomReport::failing(
                            Axiom::YbeInverse,
                            vec![row, col],
                            vec![prod[(row, col)].clone()],
                            vec![want],
                        );
                    }
                }
            }
        }
    }
    AxiomReport::passing(Axiom::YbeInverse)
}
