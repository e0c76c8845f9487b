//! Finite-dimensional algebras, coalgebras and bialgebras presented by
//! structure constants, with exact checkers for every identity the crate
//! cares about.
//!
//! The multiplication tensor stores `m[i][j][k]` with e_i e_j = sum_k
//! `m[i][j][k]` e_k, the comultiplication `mu[i][j][k]` with Delta(e_i) =
//! sum over j,k of `mu[i][j][k]` e_j (x) e_k. Every identity in scope is
//! multilinear, so checking it on basis tuples decides it on the whole
//! space; the one exception (plain self-distributivity) is handled by its
//! polarization, see [`StructureBialgebra::check_sd_plain`].
//!
//! Checkers are pure, scan basis tuples in index order and report the
//! lowest witness, so reports are deterministic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Mat, Solve};
use crate::scalar::{Ring, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureBialgebra {
    ring: Ring,
    dim: usize,
    mult: Vec<Scalar>,
    comult: Vec<Scalar>,
    counit: Option<Vec<Scalar>>,
    unit_index: Option<usize>,
}

/// Element of A (x) A as a d^2 coefficient vector, index (j,k) = j*d + k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    pub dim: usize,
    pub coeffs: Vec<Scalar>,
}

impl TensorVector {
    pub fn get(&self, j: usize, k: usize) -> &Scalar {
        &self.coeffs[j * self.dim + k]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Coassoc,
    Counit,
    Compat,
    SdBialgebra,
    SdPlain,
    CubeZero,
    Novikov,
    GenIdempotent,
    GenJordan,
    Cocommutative,
    LinearInverse,
    Braid,
    YbeInverse,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::Coassoc => "coassoc",
            Axiom::Counit => "counit",
            Axiom::Compat => "compat",
            Axiom::SdBialgebra => "sd-bialgebra",
            Axiom::SdPlain => "sd-plain",
            Axiom::CubeZero => "cube-zero",
            Axiom::Novikov => "novikov",
            Axiom::GenIdempotent => "gen-idempotent",
            Axiom::GenJordan => "gen-jordan",
            Axiom::Cocommutative => "cocommutative",
            Axiom::LinearInverse => "linear-inverse",
            Axiom::Braid => "braid",
            Axiom::YbeInverse => "ybe-inverse",
        };
        write!(f, "{s}")
    }
}

/// Verdict for one axiom. On failure the two unequal sides are stored as
/// coefficient vectors, so the witness can be re-checked independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub pass: bool,
    /// Basis indices pinning down the failing instance; the layout depends
    /// on the axiom (triple for sd, pair for compat, ...).
    pub witness: Option<Vec<usize>>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

impl AxiomReport {
    pub fn passing(axiom: Axiom) -> AxiomReport {
        AxiomReport {
            axiom,
            pass: true,
            witness: None,
            lhs: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn failing(axiom: Axiom, witness: Vec<usize>, lhs: Vec<Scalar>, rhs: Vec<Scalar>) -> Self {
        AxiomReport {
            axiom,
            pass: false,
            witness: Some(witness),
            lhs,
            rhs,
        }
    }
}

impl std::fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.pass {
            write!(f, "{:<16} pass", self.axiom.to_string())
        } else {
            write!(
                f,
                "{:<16} FAIL  witness={:?}  lhs=[{}]  rhs=[{}]",
                self.axiom.to_string(),
                self.witness.as_deref().unwrap_or(&[]),
                fmt_vec(&self.lhs),
                fmt_vec(&self.rhs),
            )
        }
    }
}

fn fmt_vec(v: &[Scalar]) -> String {
    v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ")
}

/// Ladder of linear structures from the generalized axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LinearClass {
    Shelf,
    Rack,
    Quandle,
}

/// Sub-verdicts of the linear shelf/rack/quandle axioms.
#[derive(Clone, Debug)]
pub struct LinearRackReport {
    /// axiom 1: mul . Delta = id
    pub idempotent: AxiomReport,
    /// axiom 2: two-sided bar-star inverse identities; absent without a
    /// second multiplication tensor
    pub inverse: Option<AxiomReport>,
    /// axiom 3: generalized self-distributivity
    pub self_distributive: AxiomReport,
    pub class: Option<LinearClass>,
}

/// Counit found by the linear solver; `unique` is false when the solution
/// space was positive-dimensional (free variables pinned to zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counit {
    pub vector: Vec<Scalar>,
    pub unique: bool,
}

impl StructureBialgebra {
    pub fn new(ring: Ring, dim: usize) -> StructureBialgebra {
        StructureBialgebra {
            ring,
            dim,
            mult: vec![ring.zero(); dim * dim * dim],
            comult: vec![ring.zero(); dim * dim * dim],
            counit: None,
            unit_index: None,
        }
    }

    pub fn from_tensors(
        ring: Ring,
        dim: usize,
        mult: Vec<Scalar>,
        comult: Vec<Scalar>,
        counit: Option<Vec<Scalar>>,
        unit_index: Option<usize>,
    ) -> Result<StructureBialgebra> {
        let want = dim * dim * dim;
        if mult.len() != want || comult.len() != want {
            return Err(Error::InvalidInput(format!(
                "tensor length must be {want} for dimension {dim}"
            )));
        }
        if let Some(eps) = &counit {
            if eps.len() != dim {
                return Err(Error::InvalidInput("counit length must equal dim".into()));
            }
        }
        if let Some(u) = unit_index {
            if u >= dim {
                return Err(Error::InvalidInput("unit index out of range".into()));
            }
        }
        for s in mult.iter().chain(&comult).chain(counit.iter().flatten()) {
            if s.ring() != ring {
                return Err(Error::RingMismatch(ring.to_string(), s.ring().to_string()));
            }
        }
        Ok(StructureBialgebra {
            ring,
            dim,
            mult,
            comult,
            counit,
            unit_index,
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counit(&self) -> Option<&[Scalar]> {
        self.counit.as_deref()
    }

    pub fn unit_index(&self) -> Option<usize> {
        self.unit_index
    }

    pub fn set_counit(&mut self, eps: Vec<Scalar>) {
        assert_eq!(eps.len(), self.dim);
        self.counit = Some(eps);
    }

    pub fn set_unit_index(&mut self, i: usize) {
        assert!(i < self.dim);
        self.unit_index = Some(i);
    }

    fn at(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    /// m_{ij}^k
    pub fn m(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[self.at(i, j, k)]
    }

    /// mu_i^{jk}
    pub fn mu(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.comult[self.at(i, j, k)]
    }

    pub fn set_m(&mut self, i: usize, j: usize, k: usize, s: Scalar) {
        assert_eq!(s.ring(), self.ring);
        let at = self.at(i, j, k);
        self.mult[at] = s;
    }

    pub fn set_mu(&mut self, i: usize, j: usize, k: usize, s: Scalar) {
        assert_eq!(s.ring(), self.ring);
        let at = self.at(i, j, k);
        self.comult[at] = s;
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec();
        v[i] = self.ring.one();
        v
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![self.ring.zero(); self.dim]
    }

    /// e_i e_j as a coefficient vector.
    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| self.m(i, j, k).clone()).collect()
    }

    /// Bilinear extension of the multiplication tensor.
    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let mut out = self.zero_vec();
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let c = &u[i] * &v[j];
                for k in 0..self.dim {
                    let m = self.m(i, j, k);
                    if !m.is_zero() {
                        out[k] = &out[k] + &(&c * m);
                    }
                }
            }
        }
        out
    }

    /// Linear extension of the comultiplication.
    pub fn comul(&self, u: &[Scalar]) -> TensorVector {
        assert_eq!(u.len(), self.dim);
        let d = self.dim;
        let mut coeffs = vec![self.ring.zero(); d * d];
        for i in 0..d {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..d {
                for k in 0..d {
                    let mu = self.mu(i, j, k);
                    if !mu.is_zero() {
                        coeffs[j * d + k] = &coeffs[j * d + k] + &(&u[i] * mu);
                    }
                }
            }
        }
        TensorVector { dim: d, coeffs }
    }

    /// (Delta (x) id) Delta u, flattened with index ((p,q,r)) = (p d + q) d + r.
    pub fn sweedler3(&self, u: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim;
        let mut out = vec![self.ring.zero(); d * d * d];
        let t = self.comul(u);
        for j in 0..d {
            for k in 0..d {
                let c = t.get(j, k);
                if c.is_zero() {
                    continue;
                }
                for p in 0..d {
                    for q in 0..d {
                        let mu = self.mu(j, p, q);
                        if !mu.is_zero() {
                            let at = (p * d + q) * d + k;
                            out[at] = &out[at] + &(c * mu);
                        }
                    }
                }
            }
        }
        out
    }

    /// Component-wise product on A (x) A: (a(x)b)(c(x)d) = ac (x) bd.
    fn tensor_mul(&self, s: &TensorVector, t: &TensorVector) -> TensorVector {
        let d = self.dim;
        let mut coeffs = vec![self.ring.zero(); d * d];
        for i in 0..d {
            for j in 0..d {
                let a = s.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..d {
                    for l in 0..d {
                        let b = t.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        let c = a * b;
                        // (e_i (x) e_j)(e_k (x) e_l) = e_i e_k (x) e_j e_l
                        for p in 0..d {
                            let m1 = self.m(i, k, p);
                            if m1.is_zero() {
                                continue;
                            }
                            for q in 0..d {
                                let m2 = self.m(j, l, q);
                                if !m2.is_zero() {
                                    let at = p * d + q;
                                    coeffs[at] = &coeffs[at] + &(&(&c * m1) * m2);
                                }
                            }
                        }
                    }
                }
            }
        }
        TensorVector { dim: d, coeffs }
    }

    // ----- axiom checkers -----

    /// (Delta (x) id) Delta = (id (x) Delta) Delta on every basis vector.
    pub fn check_coassoc(&self) -> AxiomReport {
        let d = self.dim;
        for i in 0..d {
            let lhs = self.sweedler3(&self.basis(i));
            let mut rhs = vec![self.ring.zero(); d * d * d];
            for j in 0..d {
                for k in 0..d {
                    let c = self.mu(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    for p in 0..d {
                        for q in 0..d {
                            let mu = self.mu(k, p, q);
                            if !mu.is_zero() {
                                let at = (j * d + p) * d + q;
                                rhs[at] = &rhs[at] + &(c * mu);
                            }
                        }
                    }
                }
            }
            if lhs != rhs {
                return AxiomReport::failing(Axiom::Coassoc, vec![i], lhs, rhs);
            }
        }
        AxiomReport::passing(Axiom::Coassoc)
    }

    /// Solves the 2 d^2 linear equations of the counit axiom. If a counit is
    /// stored, verifies that one instead of solving.
    pub fn find_counit(&self) -> Option<Counit> {
        if let Some(eps) = &self.counit {
            return self.counit_valid(eps).then(|| Counit {
                vector: eps.clone(),
                unique: true,
            });
        }
        let d = self.dim;
        let mut rows = Vec::with_capacity(2 * d * d);
        let mut rhs = Vec::with_capacity(2 * d * d);
        let one = self.ring.one();
        let zero = self.ring.zero();
        for i in 0..d {
            for k in 0..d {
                // sum_j mu_i^{jk} eps_j = delta_{ik}
                rows.push((0..d).map(|j| self.mu(i, j, k).clone()).collect::<Vec<_>>());
                rhs.push(if i == k { one.clone() } else { zero.clone() });
            }
        }
        for i in 0..d {
            for j in 0..d {
                // sum_k mu_i^{jk} eps_k = delta_{ij}
                rows.push((0..d).map(|k| self.mu(i, j, k).clone()).collect::<Vec<_>>());
                rhs.push(if i == j { one.clone() } else { zero.clone() });
            }
        }
        let a = Mat::from_rows(self.ring, rows).expect("rows share the ring");
        match linalg::solve(&a, &rhs) {
            Solve::Inconsistent => None,
            Solve::Unique(v) => Some(Counit {
                vector: v,
                unique: true,
            }),
            Solve::Parametric { particular, .. } => Some(Counit {
                vector: particular,
                unique: false,
            }),
        }
    }

    fn counit_valid(&self, eps: &[Scalar]) -> bool {
        let d = self.dim;
        for i in 0..d {
            for k in 0..d {
                let mut s = self.ring.zero();
                for j in 0..d {
                    s = &s + &(self.mu(i, j, k) * &eps[j]);
                }
                let want = if i == k { self.ring.one() } else { self.ring.zero() };
                if s != want {
                    return false;
                }
            }
            for j in 0..d {
                let mut s = self.ring.zero();
                for k in 0..d {
                    s = &s + &(self.mu(i, j, k) * &eps[k]);
                }
                let want = if i == j { self.ring.one() } else { self.ring.zero() };
                if s != want {
                    return false;
                }
            }
        }
        true
    }

    pub fn check_counit(&self) -> AxiomReport {
        match self.find_counit() {
            Some(_) => AxiomReport::passing(Axiom::Counit),
            None => AxiomReport::failing(Axiom::Counit, vec![], vec![], vec![]),
        }
    }

    /// Delta(e_i e_j) = Delta(e_i) Delta(e_j) for all basis pairs.
    pub fn check_compat(&self) -> AxiomReport {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = self.comul(&self.mul_basis(i, j));
                let rhs = self.tensor_mul(&self.comul(&self.basis(i)), &self.comul(&self.basis(j)));
                if lhs != rhs {
                    return AxiomReport::failing(Axiom::Compat, vec![i, j], lhs.coeffs, rhs.coeffs);
                }
            }
        }
        AxiomReport::passing(Axiom::Compat)
    }

    /// (a b) c = (a c^(1)) (b c^(2)) on basis triples; trilinear, so this
    /// decides the identity on the whole space.
    pub fn check_sd_bialgebra(&self) -> AxiomReport {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lhs = self.mul(&self.mul_basis(i, j), &self.basis(k));
                    let mut rhs = self.zero_vec();
                    for p in 0..d {
                        for q in 0..d {
                            let c = self.mu(k, p, q);
                            if c.is_zero() {
                                continue;
                            }
                            let t = self.mul(&self.mul_basis(i, p), &self.mul_basis(j, q));
                            for r in 0..d {
                                if !t[r].is_zero() {
                                    rhs[r] = &rhs[r] + &(c * &t[r]);
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        return AxiomReport::failing(Axiom::SdBialgebra, vec![i, j, k], lhs, rhs);
                    }
                }
            }
        }
        AxiomReport::passing(Axiom::SdBialgebra)
    }

    /// Plain self-distributivity (ab)c = (ac)(bc) for all elements.
    ///
    /// The identity is quadratic in c, so basis triples alone do not decide
    /// it. Substituting c = d + f polarizes it into the basis-triple
    /// identity plus (af)(bd) + (ad)(bf) = 0 over all basis quadruples
    /// (including d = f, which over characteristic != 2 forces the cube to
    /// vanish); together these are equivalent to the element-wise identity.
    pub fn check_sd_plain(&self) -> AxiomReport {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lhs = self.mul(&self.mul_basis(i, j), &self.basis(k));
                    let rhs = self.mul(&self.mul_basis(i, k), &self.mul_basis(j, k));
                    if lhs != rhs {
                        return AxiomReport::failing(Axiom::SdPlain, vec![i, j, k], lhs, rhs);
                    }
                }
            }
        }
        for a in 0..d {
            for b in 0..d {
                for e in 0..d {
                    for f in 0..d {
                        let t1 = self.mul(&self.mul_basis(a, f), &self.mul_basis(b, e));
                        let t2 = self.mul(&self.mul_basis(a, e), &self.mul_basis(b, f));
                        let sum: Vec<Scalar> =
                            t1.iter().zip(&t2).map(|(x, y)| x + y).collect();
                        if sum.iter().any(|s| !s.is_zero()) {
                            return AxiomReport::failing(
                                Axiom::SdPlain,
                                vec![a, b, e, f],
                                sum,
                                self.zero_vec(),
                            );
                        }
                    }
                }
            }
        }
        AxiomReport::passing(Axiom::SdPlain)
    }

    /// (e_i e_j) e_k = 0 for all basis triples.
    pub fn check_cube_zero(&self) -> AxiomReport {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = self.mul(&self.mul_basis(i, j), &self.basis(k));
                    if v.iter().any(|s| !s.is_zero()) {
                        return AxiomReport::failing(
                            Axiom::CubeZero,
                            vec![i, j, k],
                            v,
                            self.zero_vec(),
                        );
                    }
                }
            }
        }
        AxiomReport::passing(Axiom::CubeZero)
    }

    /// Novikov: left-symmetric associator plus (xy)z = (xz)y.
    pub fn check_novikov(&self) -> AxiomReport {
        let d = self.dim;
        let assoc = |i: usize, j: usize, k: usize| -> Vec<Scalar> {
            let l = self.mul(&self.mul_basis(i, j), &self.basis(k));
            let r = self.mul(&self.basis(i), &self.mul_basis(j, k));
            l.iter().zip(&r).map(|(x, y)| x - y).collect()
        };
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lhs = assoc(i, j, k);
                    let rhs = assoc(j, i, k);
                    if lhs != rhs {
                        return AxiomReport::failing(Axiom::Novikov, vec![i, j, k], lhs, rhs);
                    }
                    let lhs = self.mul(&self.mul_basis(i, j), &self.basis(k));
                    let rhs = self.mul(&self.mul_basis(i, k), &self.basis(j));
                    if lhs != rhs {
                        return AxiomReport::failing(Axiom::Novikov, vec![i, j, k], lhs, rhs);
                    }
                }
            }
        }
        AxiomReport::passing(Axiom::Novikov)
    }

    /// mul . Delta = id on basis vectors.
    pub fn check_gen_idempotent(&self) -> AxiomReport {
        let d = self.dim;
        for i in 0..d {
            let t = self.comul(&self.basis(i));
            let mut acc = self.zero_vec();
            for p in 0..d {
                for q in 0..d {
                    let c = t.get(p, q);
                    if c.is_zero() {
                        continue;
                    }
                    for r in 0..d {
                        let m = self.m(p, q, r);
                        if !m.is_zero() {
                            acc[r] = &acc[r] + &(c * m);
                        }
                    }
                }
            }
            if acc != self.basis(i) {
                return AxiomReport::failing(Axiom::GenIdempotent, vec![i], acc, self.basis(i));
            }
        }
        AxiomReport::passing(Axiom::GenIdempotent)
    }

    /// ((a^(1) a^(2)) b) a^(3) = (a^(1) a^(2)) (b a^(3)) on basis pairs.
    pub fn check_gen_jordan(&self) -> AxiomReport {
        let d = self.dim;
        for a in 0..d {
            let t3 = self.sweedler3(&self.basis(a));
            for b in 0..d {
                let mut lhs = self.zero_vec();
                let mut rhs = self.zero_vec();
                for p in 0..d {
                    for q in 0..d {
                        let m12 = self.mul_basis(p, q);
                        if m12.iter().all(|s| s.is_zero()) {
                            // both sides multiply by a^(1) a^(2) first
                            continue;
                        }
                        for r in 0..d {
                            let c = &t3[(p * d + q) * d + r];
                            if c.is_zero() {
                                continue;
                            }
                            let l = self.mul(&self.mul(&m12, &self.basis(b)), &self.basis(r));
                            let rr = self.mul(&m12, &self.mul_basis(b, r));
                            for s in 0..d {
                                lhs[s] = &lhs[s] + &(c * &l[s]);
                                rhs[s] = &rhs[s] + &(c * &rr[s]);
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return AxiomReport::failing(Axiom::GenJordan, vec![a, b], lhs, rhs);
                }
            }
        }
        AxiomReport::passing(Axiom::GenJordan)
    }

    /// tau . Delta = Delta.
    pub fn check_cocommutative(&self) -> AxiomReport {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if self.mu(i, j, k) != self.mu(i, k, j) {
                        return AxiomReport::failing(
                            Axiom::Cocommutative,
                            vec![i, j, k],
                            vec![self.mu(i, j, k).clone()],
                            vec![self.mu(i, k, j).clone()],
                        );
                    }
                }
            }
        }
        AxiomReport::passing(Axiom::Cocommutative)
    }

    /// Linear shelf/rack/quandle axioms. Axiom 2 needs the second
    /// multiplication tensor (bar-star, as a bialgebra sharing this
    /// coalgebra); without it the class caps at shelf.
    pub fn check_linear_rack(
        &self,
        barstar: Option<&StructureBialgebra>,
    ) -> Result<LinearRackReport> {
        let eps = match &self.counit {
            Some(e) => e.clone(),
            None => self.find_counit().ok_or(Error::MissingCounit)?.vector,
        };
        let idempotent = self.check_gen_idempotent();
        let self_distributive = self.check_sd_bialgebra();
        let inverse = match barstar {
            None => None,
            Some(bs) => {
                if bs.dim != self.dim || bs.ring != self.ring {
                    return Err(Error::InvalidInput(
                        "bar-star tensor has mismatched shape or ring".into(),
                    ));
                }
                Some(self.check_linear_inverse(bs, &eps))
            }
        };
        let class = if !self_distributive.pass {
            None
        } else if !matches!(&inverse, Some(r) if r.pass) {
            Some(LinearClass::Shelf)
        } else if !idempotent.pass {
            Some(LinearClass::Rack)
        } else {
            Some(LinearClass::Quandle)
        };
        Ok(LinearRackReport {
            idempotent,
            inverse,
            self_distributive,
            class,
        })
    }

    /// (b * a^(2)) bar* a^(1) = eps(a) b = (b bar* a^(2)) * a^(1).
    fn check_linear_inverse(&self, bs: &StructureBialgebra, eps: &[Scalar]) -> AxiomReport {
        let d = self.dim;
        for a in 0..d {
            for b in 0..d {
                let mut want = self.zero_vec();
                want[b] = eps[a].clone();
                let mut lhs1 = self.zero_vec();
                let mut lhs2 = self.zero_vec();
                for p in 0..d {
                    for q in 0..d {
                        let c = self.mu(a, p, q);
                        if c.is_zero() {
                            continue;
                        }
                        let t1 = bs.mul(&self.mul_basis(b, q), &self.basis(p));
                        let t2 = self.mul(&bs.mul_basis(b, q), &self.basis(p));
                        for r in 0..d {
                            lhs1[r] = &lhs1[r] + &(c * &t1[r]);
                            lhs2[r] = &lhs2[r] + &(c * &t2[r]);
                        }
                    }
                }
                if lhs1 != want {
                    return AxiomReport::failing(Axiom::LinearInverse, vec![a, b], lhs1, want);
                }
                if lhs2 != want {
                    return AxiomReport::failing(Axiom::LinearInverse, vec![a, b], lhs2, want);
                }
            }
        }
        AxiomReport::passing(Axiom::LinearInverse)
    }

    // ----- dualization and basis change -----

    /// Comultiplication dual to this multiplication on the dual basis:
    /// mu_k^{ij} = m_{ij}^k. The multiplication of the result is zero.
    pub fn dualize_mult_to_comult(&self) -> StructureBialgebra {
        let mut out = StructureBialgebra::new(self.ring, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out.set_mu(k, i, j, self.m(i, j, k).clone());
                }
            }
        }
        out
    }

    /// Multiplication dual to this comultiplication: m_{ij}^k = mu_k^{ij}.
    pub fn dualize_comult_to_mult(&self) -> StructureBialgebra {
        let mut out = StructureBialgebra::new(self.ring, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out.set_m(i, j, k, self.mu(k, i, j).clone());
                }
            }
        }
        out
    }

    /// Rewrites all structure constants in the basis e'_j = sum_i P_{ij} e_i
    /// (columns of P are the new basis vectors). P must be invertible.
    pub fn change_basis(&self, p: &Mat) -> Result<StructureBialgebra> {
        let d = self.dim;
        if p.rows() != d || p.cols() != d || p.ring() != self.ring {
            return Err(Error::InvalidInput("basis matrix has wrong shape or ring".into()));
        }
        let pinv = p.inverse()?;
        let mut out = StructureBialgebra::new(self.ring, d);
        // e'_i e'_j = sum_{a,b} P_{ai} P_{bj} e_a e_b, then back through P^{-1}
        for i in 0..d {
            for j in 0..d {
                let mut prod_old = self.zero_vec();
                for a in 0..d {
                    if p[(a, i)].is_zero() {
                        continue;
                    }
                    for b in 0..d {
                        if p[(b, j)].is_zero() {
                            continue;
                        }
                        let c = &p[(a, i)] * &p[(b, j)];
                        for r in 0..d {
                            let m = self.m(a, b, r);
                            if !m.is_zero() {
                                prod_old[r] = &prod_old[r] + &(&c * m);
                            }
                        }
                    }
                }
                let coords = pinv.apply(&prod_old);
                for k in 0..d {
                    out.set_m(i, j, k, coords[k].clone());
                }
            }
        }
        // Delta(e'_i) with both tensor legs converted to the new basis
        for i in 0..d {
            let mut t = vec![self.ring.zero(); d * d];
            for a in 0..d {
                if p[(a, i)].is_zero() {
                    continue;
                }
                for j in 0..d {
                    for k in 0..d {
                        let mu = self.mu(a, j, k);
                        if !mu.is_zero() {
                            t[j * d + k] = &t[j * d + k] + &(&p[(a, i)] * mu);
                        }
                    }
                }
            }
            for jn in 0..d {
                for kn in 0..d {
                    let mut s = self.ring.zero();
                    for j in 0..d {
                        if pinv[(jn, j)].is_zero() {
                            continue;
                        }
                        for k in 0..d {
                            let v = &t[j * d + k];
                            if !v.is_zero() {
                                s = &s + &(&(&pinv[(jn, j)] * v) * &pinv[(kn, k)]);
                            }
                        }
                    }
                    out.set_mu(i, jn, kn, s);
                }
            }
        }
        if let Some(eps) = &self.counit {
            let new_eps = (0..d)
                .map(|i| {
                    let mut s = self.ring.zero();
                    for a in 0..d {
                        s = &s + &(&p[(a, i)] * &eps[a]);
                    }
                    s
                })
                .collect();
            out.counit = Some(new_eps);
        }
        if let Some(u) = self.unit_index {
            // keep the marker only if the unit element is still a basis vector
            let coords = pinv.apply(&self.basis(u));
            let nonzero: Vec<usize> = (0..d).filter(|&k| !coords[k].is_zero()).collect();
            if let [k] = nonzero[..] {
                if coords[k].is_one() {
                    out.unit_index = Some(k);
                }
            }
        }
        Ok(out)
    }

    /// Type invariants from the data definition: stored counit satisfies the
    /// counit axiom; a marked unit is group-like with eps = 1.
    pub fn validate_invariants(&self) -> Result<()> {
        if let Some(eps) = &self.counit {
            if !self.counit_valid(eps) {
                return Err(Error::InvalidInput("stored counit fails the counit axiom".into()));
            }
        }
        if let Some(u) = self.unit_index {
            let t = self.comul(&self.basis(u));
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let want = if j == u && k == u {
                        self.ring.one()
                    } else {
                        self.ring.zero()
                    };
                    if *t.get(j, k) != want {
                        return Err(Error::InvalidInput(
                            "marked unit is not group-like".into(),
                        ));
                    }
                }
            }
            if let Some(eps) = &self.counit {
                if !eps[u].is_one() {
                    return Err(Error::InvalidInput("counit of the marked unit is not 1".into()));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::magma::FiniteMagma;

    fn q(n: i64) -> Scalar {
        Ring::rational().from_i64(n)
    }

    fn group_like_2dim(coeffs: [i64; 8]) -> StructureBialgebra {
        let ring = Ring::rational();
        let mut a = StructureBialgebra::new(ring, 2);
        let pairs = [(0, 0), (0, 1), (1, 0), (1, 1)];
        for (n, &(i, j)) in pairs.iter().enumerate() {
            a.set_m(i, j, 0, ring.from_i64(coeffs[2 * n]));
            a.set_m(i, j, 1, ring.from_i64(coeffs[2 * n + 1]));
        }
        a.set_mu(0, 0, 0, ring.one());
        a.set_mu(1, 1, 1, ring.one());
        a
    }

    #[test]
    fn trivial_quandle_algebra_products() {
        let a = construct::rack_algebra(&FiniteMagma::trivial(2), Ring::rational()).unwrap();
        // t0 t1 = t0
        assert_eq!(a.mul(&a.basis(0), &a.basis(1)), a.basis(0));
        let zero = a.zero_vec();
        assert_eq!(a.mul(&zero, &a.basis(1)), zero);
    }

    #[test]
    fn dihedral_product_and_comul() {
        let a = construct::rack_algebra(&FiniteMagma::dihedral(3), Ring::rational()).unwrap();
        assert_eq!(a.mul(&a.basis(0), &a.basis(1)), a.basis(2));
        let t = a.comul(&a.basis(0));
        assert!(t.get(0, 0).is_one());
        assert!(t.coeffs.iter().filter(|s| !s.is_zero()).count() == 1);
        let s3 = a.sweedler3(&a.basis(0));
        assert!(s3[0].is_one());
        assert_eq!(s3.iter().filter(|s| !s.is_zero()).count(), 1);
    }

    #[test]
    fn coassoc_pass_and_fail() {
        let a = group_like_2dim([0; 8]);
        assert!(a.check_coassoc().pass);

        // Delta x = x(x)x + x(x)y is not coassociative
        let ring = Ring::rational();
        let mut b = StructureBialgebra::new(ring, 2);
        b.set_mu(0, 0, 0, q(1));
        b.set_mu(0, 0, 1, q(1));
        let r = b.check_coassoc();
        assert!(!r.pass);
        assert_eq!(r.witness, Some(vec![0]));
        assert_ne!(r.lhs, r.rhs);
    }

    #[test]
    fn type3_comult_is_coassociative() {
        // Dx = x(x)x + a y(x)y, Dy = x(x)y + y(x)x with a = 2
        let ring = Ring::rational();
        let mut a = StructureBialgebra::new(ring, 2);
        a.set_mu(0, 0, 0, q(1));
        a.set_mu(0, 1, 1, q(2));
        a.set_mu(1, 0, 1, q(1));
        a.set_mu(1, 1, 0, q(1));
        assert!(a.check_coassoc().pass);
        let c = a.find_counit().unwrap();
        assert!(c.unique);
        assert_eq!(c.vector, vec![q(1), q(0)]);
    }

    #[test]
    fn counit_group_like_and_type2() {
        let a = group_like_2dim([0; 8]);
        assert_eq!(a.find_counit().unwrap().vector, vec![q(1), q(1)]);

        let ring = Ring::rational();
        let mut b = StructureBialgebra::new(ring, 2);
        b.set_mu(0, 0, 0, q(1));
        b.set_mu(1, 0, 1, q(1));
        b.set_mu(1, 1, 0, q(1));
        assert_eq!(b.find_counit().unwrap().vector, vec![q(1), q(0)]);
    }

    #[test]
    fn compat_fails_for_non_multiplicative_square() {
        // group-like Delta with x x = x + y
        let a = group_like_2dim([1, 1, 0, 0, 0, 0, 0, 0]);
        let r = a.check_compat();
        assert!(!r.pass);
        assert_eq!(r.witness, Some(vec![0, 0]));
    }

    #[test]
    fn sd_bialgebra_detects_non_rack() {
        // x*y = x+y mod 3 fails Q3; its groupoid algebra fails the identity
        let table = (0..3).map(|x| (0..3).map(|y| (x + y) % 3).collect()).collect();
        let m = FiniteMagma::new(3, table).unwrap();
        let a = construct::groupoid_algebra(&m, Ring::rational());
        let r = a.check_sd_bialgebra();
        assert!(!r.pass);
        assert!(r.witness.is_some());
    }

    #[test]
    fn sd_plain_trivial_quandle_rings() {
        let t2q = construct::rack_algebra(&FiniteMagma::trivial(2), Ring::rational()).unwrap();
        assert!(!t2q.check_sd_plain().pass);
        let t2f2 = construct::rack_algebra(&FiniteMagma::trivial(2), Ring::gfp(2).unwrap()).unwrap();
        assert!(t2f2.check_sd_plain().pass);
    }

    #[test]
    fn cube_zero_examples() {
        let a1 = construct::novikov_example(construct::NovikovKind::A1, Ring::rational());
        assert!(a1.check_cube_zero().pass);
        assert!(a1.check_sd_plain().pass);
        assert!(a1.check_novikov().pass);
        let t2 = construct::rack_algebra(&FiniteMagma::trivial(2), Ring::rational()).unwrap();
        let r = t2.check_cube_zero();
        assert!(!r.pass);
        assert_eq!(r.witness, Some(vec![0, 0, 0]));
        let zero = StructureBialgebra::new(Ring::rational(), 3);
        assert!(zero.check_cube_zero().pass);
    }

    #[test]
    fn novikov_a2_and_dihedral() {
        let a2 = construct::novikov_example(construct::NovikovKind::A2, Ring::rational());
        assert!(a2.check_novikov().pass);
        assert!(!a2.check_sd_plain().pass);
        let a2f2 = construct::novikov_example(construct::NovikovKind::A2, Ring::gfp(2).unwrap());
        assert!(a2f2.check_sd_plain().pass);
        let r3 = construct::rack_algebra(&FiniteMagma::dihedral(3), Ring::rational()).unwrap();
        let r = r3.check_novikov();
        assert!(!r.pass);
        // witness is reproducible: re-evaluate both sides
        assert_ne!(r.lhs, r.rhs);
    }

    #[test]
    fn gen_idempotent_rack_vs_non_quandle() {
        let q3 = construct::rack_algebra(&FiniteMagma::dihedral(3), Ring::rational()).unwrap();
        assert!(q3.check_gen_idempotent().pass);
        // 2-element rack x*y = other(x): group-like mul . Delta sends x to other(x)
        let m = FiniteMagma::new(2, vec![vec![1, 1], vec![0, 0]]).unwrap();
        let a = construct::rack_algebra(&m, Ring::rational()).unwrap();
        let r = a.check_gen_idempotent();
        assert!(!r.pass);
        assert_eq!(r.witness, Some(vec![0]));
    }

    #[test]
    fn gen_jordan_quandle_algebras() {
        for m in [FiniteMagma::dihedral(3), FiniteMagma::trivial(2)] {
            let a = construct::rack_algebra(&m, Ring::rational()).unwrap();
            assert!(a.check_gen_jordan().pass);
        }
        // type-1 entry 12: x^2=0, xy=y, yx=0, y^2=0 — verdict: pass
        let a = group_like_2dim([0, 0, 0, 1, 0, 0, 0, 0]);
        assert!(a.check_gen_jordan().pass);
    }

    #[test]
    fn dualize_three_associative_algebras() {
        let ring = Ring::rational();
        // 1) e1 e1 = e1, e1 e2 = e2 e1 = e2, e2 e2 = e1
        let mut alg1 = StructureBialgebra::new(ring, 2);
        alg1.set_m(0, 0, 0, q(1));
        alg1.set_m(0, 1, 1, q(1));
        alg1.set_m(1, 0, 1, q(1));
        alg1.set_m(1, 1, 0, q(1));
        let d1 = alg1.dualize_mult_to_comult();
        assert!(d1.mu(0, 0, 0).is_one() && d1.mu(0, 1, 1).is_one());
        assert!(d1.mu(1, 0, 1).is_one() && d1.mu(1, 1, 0).is_one());
        assert!(d1.check_coassoc().pass);

        // 2) e2 e2 = 0
        let mut alg2 = StructureBialgebra::new(ring, 2);
        alg2.set_m(0, 0, 0, q(1));
        alg2.set_m(0, 1, 1, q(1));
        alg2.set_m(1, 0, 1, q(1));
        let d2 = alg2.dualize_mult_to_comult();
        assert!(d2.mu(0, 0, 0).is_one());
        assert!(d2.mu(0, 1, 1).is_zero());
        assert!(d2.check_coassoc().pass);

        // 3) e2 e2 = a e1 with a = 5
        let mut alg3 = StructureBialgebra::new(ring, 2);
        alg3.set_m(0, 0, 0, q(1));
        alg3.set_m(0, 1, 1, q(1));
        alg3.set_m(1, 0, 1, q(1));
        alg3.set_m(1, 1, 0, q(5));
        let d3 = alg3.dualize_mult_to_comult();
        assert_eq!(*d3.mu(0, 1, 1), q(5));
        assert!(d3.check_coassoc().pass);

        // round trip
        assert_eq!(d1.dualize_comult_to_mult().mult, alg1.mult);
    }

    #[test]
    fn change_basis_identity_and_group_like() {
        let ring = Ring::rational();
        // type-1 dual comultiplication
        let mut a = StructureBialgebra::new(ring, 2);
        a.set_mu(0, 0, 0, q(1));
        a.set_mu(0, 1, 1, q(1));
        a.set_mu(1, 0, 1, q(1));
        a.set_mu(1, 1, 0, q(1));
        let id = Mat::identity(ring, 2);
        assert_eq!(a.change_basis(&id).unwrap(), a);
        let p = Mat::from_rows(ring, vec![vec![q(1), q(1)], vec![q(1), q(-1)]]).unwrap();
        let b = a.change_basis(&p).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let want = if j == i && k == i { q(1) } else { q(0) };
                    assert_eq!(*b.mu(i, j, k), want, "mu_{i}^{{{j}{k}}}");
                }
            }
        }
        let singular = Mat::from_rows(ring, vec![vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap();
        assert!(a.change_basis(&singular).is_err());
    }

    #[test]
    fn change_basis_splits_algebra_one_into_idempotents() {
        let ring = Ring::rational();
        let mut alg1 = StructureBialgebra::new(ring, 2);
        alg1.set_m(0, 0, 0, q(1));
        alg1.set_m(0, 1, 1, q(1));
        alg1.set_m(1, 0, 1, q(1));
        alg1.set_m(1, 1, 0, q(1));
        // e1 = e1' + e2', e2 = e1' - e2' means new basis vectors are the
        // columns of P^{-1}... writing the primed basis in terms of the old:
        // e1' = (e1+e2)/2, e2' = (e1-e2)/2.
        let half = Ring::rational().from_ratio(1, 2).unwrap();
        let mhalf = Ring::rational().from_ratio(-1, 2).unwrap();
        let p = Mat::from_rows(
            ring,
            vec![vec![half.clone(), half.clone()], vec![half, mhalf]],
        )
        .unwrap();
        let b = alg1.change_basis(&p).unwrap();
        // expect 1'): e1'e1' = e1', e1'e2' = e2'e1' = 0, e2'e2' = e2'
        assert!(b.m(0, 0, 0).is_one() && b.m(0, 0, 1).is_zero());
        assert!(b.m(0, 1, 0).is_zero() && b.m(0, 1, 1).is_zero());
        assert!(b.m(1, 0, 0).is_zero() && b.m(1, 0, 1).is_zero());
        assert!(b.m(1, 1, 1).is_one() && b.m(1, 1, 0).is_zero());
    }

    #[test]
    fn cocommutativity_flags() {
        let a = group_like_2dim([0; 8]);
        assert!(a.check_cocommutative().pass);
        let ring = Ring::rational();
        let mut b = StructureBialgebra::new(ring, 2);
        b.set_mu(0, 0, 1, q(1));
        assert!(!b.check_cocommutative().pass);
    }

    #[test]
    fn invariant_validation() {
        let mut a = group_like_2dim([0; 8]);
        a.set_counit(vec![q(1), q(1)]);
        a.set_unit_index(0);
        assert!(a.validate_invariants().is_ok());
        let mut bad = group_like_2dim([0; 8]);
        bad.set_counit(vec![q(1), q(2)]);
        assert!(bad.validate_invariants().is_err());
        // a stored counit is verified rather than re-solved
        assert!(bad.find_counit().is_none());
        assert!(!bad.check_counit().pass);
        let c = a.find_counit().unwrap();
        assert!(c.unique);
        assert_eq!(c.vector, vec![q(1), q(1)]);
    }
}
