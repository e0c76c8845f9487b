//! Constructors turning magmas, groups and brackets into structure-constant
//! bialgebras: rack algebras, the augmented extension, the inverse-axiom
//! phi map, Leibniz racks, group adjoint algebras and the two Novikov
//! examples.

use crate::bialg::StructureBialgebra;
use crate::error::{Error, Result};
use crate::magma::{FiniteMagma, MagmaClass};
use crate::scalar::{Ring, Scalar};

pub use crate::group::GroupTable;

/// Group-like coalgebra on the basis of any finite magma, multiplication
/// linearly extended from the Cayley table. No axioms are assumed; use
/// [`rack_algebra`] when the input must be a rack.
pub fn groupoid_algebra(x: &FiniteMagma, ring: Ring) -> StructureBialgebra {
    let n = x.size();
    let mut a = StructureBialgebra::new(ring, n);
    for i in 0..n {
        for j in 0..n {
            a.set_m(i, j, x.op(i, j), ring.one());
        }
        a.set_mu(i, i, i, ring.one());
    }
    a.set_counit(vec![ring.one(); n]);
    a
}

/// The rack algebra `k[X]` with group-like comultiplication and the
/// coefficient-sum counit.
pub fn rack_algebra(x: &FiniteMagma, ring: Ring) -> Result<StructureBialgebra> {
    let report = x.check_axioms();
    if report.class.is_none_or(|c| c < MagmaClass::Rack) {
        return Err(Error::NotARack(format!(
            "q2={} q3={} witness={:?}",
            report.q2, report.q3, report.witness
        )));
    }
    Ok(groupoid_algebra(x, ring))
}

/// Basis { x - x0 | x != x0 } of the augmentation ideal of `k[X]`.
pub fn augmentation_ideal_basis(x: &FiniteMagma, ring: Ring, x0: usize) -> Vec<Vec<Scalar>> {
    let n = x.size();
    assert!(x0 < n);
    (0..n)
        .filter(|&i| i != x0)
        .map(|i| {
            let mut v = vec![ring.zero(); n];
            v[i] = ring.one();
            v[x0] = -&ring.one();
            v
        })
        .collect()
}

/// The extension k (+) `k[X]`: basis index 0 is the coaugmented element 1,
/// basis i+1 is x_i, with the multiplication rules 1 x_i = 1, x_i 1 = 0,
/// 1 1 = 0 taken verbatim.
pub fn augmented_rack_bialgebra(x: &FiniteMagma, ring: Ring) -> Result<StructureBialgebra> {
    let report = x.check_axioms();
    if report.class.is_none_or(|c| c < MagmaClass::Rack) {
        return Err(Error::NotARack("augmented extension needs a rack".into()));
    }
    let n = x.size();
    let d = n + 1;
    let mut a = StructureBialgebra::new(ring, d);
    for i in 0..d {
        a.set_mu(i, i, i, ring.one());
    }
    for i in 0..n {
        a.set_m(0, i + 1, 0, ring.one()); // 1 * x_i = 1
        for j in 0..n {
            a.set_m(i + 1, j + 1, x.op(i, j) + 1, ring.one());
        }
    }
    a.set_counit(vec![ring.one(); d]);
    a.set_unit_index(0);
    Ok(a)
}

/// Bilinear map by structure constants, `phi[i][j]` a d-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearMap {
    ring: Ring,
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl BilinearMap {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn on_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let d = self.dim;
        self.coeffs[(i * d + j) * d..(i * d + j + 1) * d].to_vec()
    }

    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim;
        let mut out = vec![self.ring.zero(); d];
        for i in 0..d {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if v[j].is_zero() {
                    continue;
                }
                let c = &u[i] * &v[j];
                for k in 0..d {
                    let m = &self.coeffs[(i * d + j) * d + k];
                    if !m.is_zero() {
                        out[k] = &out[k] + &(&c * m);
                    }
                }
            }
        }
        out
    }
}

/// The inverse-axiom map of a rack: on generators phi(a, b) = c where c is
/// the unique solution of c * a = b, i.e. c = b bar* a.
pub fn phi_map(x: &FiniteMagma, ring: Ring) -> Result<BilinearMap> {
    let bar = x
        .left_divide()
        .map_err(|_| Error::NotARack("phi map needs unique right division".into()))?;
    let n = x.size();
    let mut coeffs = vec![ring.zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            coeffs[(a * n + b) * n + bar.op(b, a)] = ring.one();
        }
    }
    Ok(BilinearMap {
        ring,
        dim: n,
        coeffs,
    })
}

/// Evaluates phi(x^(1), y) x^(2) in `k[X]`; equals eps(x) y when phi comes
/// from [`phi_map`].
pub fn phi_invax_apply(
    alg: &StructureBialgebra,
    phi: &BilinearMap,
    x: &[Scalar],
    y: &[Scalar],
) -> Vec<Scalar> {
    let d = alg.dim();
    let t = alg.comul(x);
    let mut out = alg.zero_vec();
    for p in 0..d {
        for q in 0..d {
            let c = t.get(p, q);
            if c.is_zero() {
                continue;
            }
            let mut ep = alg.zero_vec();
            ep[p] = alg.ring().one();
            let mut eq = alg.zero_vec();
            eq[q] = alg.ring().one();
            let w = alg.mul(&phi.apply(&ep, y), &eq);
            for r in 0..d {
                out[r] = &out[r] + &(c * &w[r]);
            }
        }
    }
    out
}

/// Solves x a = b in the algebra of a trivial quandle: multiplication there
/// collapses to x a = eps(a) x, so a solution exists iff eps(a) != 0, or in
/// the degenerate case b = 0 (x = 0 works).
pub fn solve_right_mult(
    t: &FiniteMagma,
    ring: Ring,
    a: &[Scalar],
    b: &[Scalar],
) -> Result<Option<Vec<Scalar>>> {
    if *t != FiniteMagma::trivial(t.size()) {
        return Err(Error::InvalidInput("solver requires a trivial quandle".into()));
    }
    let n = t.size();
    if a.len() != n || b.len() != n {
        return Err(Error::InvalidInput("coefficient vectors must have length n".into()));
    }
    let mut eps_a = ring.zero();
    for s in a {
        eps_a = &eps_a + s;
    }
    if eps_a.is_zero() {
        if b.iter().all(|s| s.is_zero()) {
            return Ok(Some(vec![ring.zero(); n]));
        }
        return Ok(None);
    }
    let inv = eps_a.inverse()?;
    let x: Vec<Scalar> = b.iter().map(|s| &inv * s).collect();
    // verify before returning
    let alg = rack_algebra(t, ring)?;
    debug_assert_eq!(alg.mul(&x, a), b.to_vec());
    Ok(Some(x))
}

/// Bracket algebra given by structure constants; construction validates the
/// right Leibniz identity `[[a,b],c] = [[a,c],b] + [a,[b,c]]` on basis triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizData {
    ring: Ring,
    dim: usize,
    bracket: Vec<Scalar>,
}

impl LeibnizData {
    pub fn new(ring: Ring, dim: usize, bracket: Vec<Scalar>) -> Result<LeibnizData> {
        if bracket.len() != dim * dim * dim {
            return Err(Error::InvalidInput("bracket tensor has wrong length".into()));
        }
        if bracket.iter().any(|s| s.ring() != ring) {
            return Err(Error::InvalidInput("bracket scalars must share the ring".into()));
        }
        let l = LeibnizData { ring, dim, bracket };
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    let lhs = l.bracket_vec(&l.bracket_basis(a, b), &l.basis(c));
                    let r1 = l.bracket_vec(&l.bracket_basis(a, c), &l.basis(b));
                    let r2 = l.bracket_vec(&l.basis(a), &l.bracket_basis(b, c));
                    let rhs: Vec<Scalar> = r1.iter().zip(&r2).map(|(x, y)| x + y).collect();
                    if lhs != rhs {
                        return Err(Error::NotLeibniz([a, b, c]));
                    }
                }
            }
        }
        Ok(l)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.ring.zero(); self.dim];
        v[i] = self.ring.one();
        v
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let d = self.dim;
        self.bracket[(i * d + j) * d..(i * d + j + 1) * d].to_vec()
    }

    pub fn bracket_vec(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim;
        let mut out = vec![self.ring.zero(); d];
        for i in 0..d {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if v[j].is_zero() {
                    continue;
                }
                let c = &u[i] * &v[j];
                for k in 0..d {
                    let s = &self.bracket[(i * d + j) * d + k];
                    if !s.is_zero() {
                        out[k] = &out[k] + &(&c * s);
                    }
                }
            }
        }
        out
    }

    /// Informational check of the cyclic form
    /// `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0`; reported, not enforced.
    pub fn cyclic_jacobi_holds(&self) -> bool {
        let d = self.dim;
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let t1 = self.bracket_vec(&self.bracket_basis(x, y), &self.basis(z));
                    let t2 = self.bracket_vec(&self.bracket_basis(y, z), &self.basis(x));
                    let t3 = self.bracket_vec(&self.bracket_basis(z, x), &self.basis(y));
                    for k in 0..d {
                        if !(&(&t1[k] + &t2[k]) + &t3[k]).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The 2-dimensional solvable Lie algebra `[e1,e2]` = e2, `[e2,e1]` = -e2.
    pub fn solvable2(ring: Ring) -> LeibnizData {
        let mut bracket = vec![ring.zero(); 8];
        bracket[3] = ring.one(); // [e_0, e_1] = e_1
        bracket[5] = ring.from_i64(-1); // [e_1, e_0] = -e_1
        LeibnizData::new(ring, 2, bracket).expect("solvable 2-dim bracket is Leibniz")
    }

    pub fn abelian(ring: Ring, dim: usize) -> LeibnizData {
        LeibnizData::new(ring, dim, vec![ring.zero(); dim * dim * dim])
            .expect("zero bracket is Leibniz")
    }
}

/// The linear rack N = k (+) L of a Leibniz algebra: basis 0 is 1,
/// Delta(x) = x(x)1 + 1(x)x on L, x * y = `[x, y]`, x bar* y = -`[x, y]`,
/// with 1 * x = 0 and x * 1 = x. Returns the star and bar-star tensors
/// as two bialgebras sharing the coalgebra.
pub fn leibniz_rack(l: &LeibnizData) -> (StructureBialgebra, StructureBialgebra) {
    let ring = l.ring();
    let n = l.dim();
    let d = n + 1;
    let mut star = StructureBialgebra::new(ring, d);
    let mut bar = StructureBialgebra::new(ring, d);
    star.set_mu(0, 0, 0, ring.one());
    bar.set_mu(0, 0, 0, ring.one());
    star.set_m(0, 0, 0, ring.one()); // 1 * 1 = 1
    bar.set_m(0, 0, 0, ring.one());
    for i in 0..n {
        star.set_mu(i + 1, i + 1, 0, ring.one());
        star.set_mu(i + 1, 0, i + 1, ring.one());
        bar.set_mu(i + 1, i + 1, 0, ring.one());
        bar.set_mu(i + 1, 0, i + 1, ring.one());
        star.set_m(i + 1, 0, i + 1, ring.one()); // x * 1 = x
        bar.set_m(i + 1, 0, i + 1, ring.one());
        for j in 0..n {
            let br = l.bracket_basis(i, j);
            for k in 0..n {
                if !br[k].is_zero() {
                    star.set_m(i + 1, j + 1, k + 1, br[k].clone());
                    bar.set_m(i + 1, j + 1, k + 1, -&br[k]);
                }
            }
        }
    }
    let mut eps = vec![ring.zero(); d];
    eps[0] = ring.one();
    star.set_counit(eps.clone());
    bar.set_counit(eps);
    star.set_unit_index(0);
    bar.set_unit_index(0);
    (star, bar)
}

/// Adjoint multiplication h' * h = h^(1) h' S(h^(2)) of the group Hopf
/// algebra `k[G]`: on the group-like basis this is h' * h = h h' h^{-1}.
/// Coincides with the rack algebra of the conjugation quandle of G.
pub fn group_hopf_adjoint(g: &GroupTable, ring: Ring) -> StructureBialgebra {
    let n = g.order();
    let mut a = StructureBialgebra::new(ring, n);
    for i in 0..n {
        for j in 0..n {
            // first factor h' = g_i, second h = g_j
            let k = g.mul(g.mul(j, i), g.inverse(j));
            a.set_m(i, j, k, ring.one());
        }
        a.set_mu(i, i, i, ring.one());
    }
    a.set_counit(vec![ring.one(); n]);
    a.set_unit_index(g.identity());
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NovikovKind {
    A1,
    A2,
}

/// The two Novikov algebras used as self-distributivity examples:
/// A1 has e1 e2 = e2 and all other products zero; A2 has e1 e1 = e1,
/// e2 e1 = e2 and all other products zero. Multiplication only.
pub fn novikov_example(kind: NovikovKind, ring: Ring) -> StructureBialgebra {
    let mut a = StructureBialgebra::new(ring, 2);
    match kind {
        NovikovKind::A1 => {
            a.set_m(0, 1, 1, ring.one());
        }
        NovikovKind::A2 => {
            a.set_m(0, 0, 0, ring.one());
            a.set_m(1, 0, 1, ring.one());
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group;
    use crate::magma;

    fn ring() -> Ring {
        Ring::rational()
    }

    fn q(n: i64) -> Scalar {
        ring().from_i64(n)
    }

    #[test]
    fn rack_algebra_requires_rack() {
        let shelf = FiniteMagma::new(2, vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert!(rack_algebra(&shelf, ring()).is_err());
        assert!(rack_algebra(&FiniteMagma::trivial(1), Ring::gfp(2).unwrap()).is_ok());
    }

    #[test]
    fn rack_algebra_t2_shape() {
        let a = rack_algebra(&FiniteMagma::trivial(2), ring()).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(a.mul_basis(i, j), a.basis(i));
            }
        }
        assert_eq!(a.counit().unwrap(), &[q(1), q(1)]);
    }

    #[test]
    fn augmentation_ideal_vectors_are_killed_by_eps() {
        for (m, x0) in [(FiniteMagma::trivial(3), 0), (FiniteMagma::dihedral(3), 0)] {
            let basis = augmentation_ideal_basis(&m, ring(), x0);
            assert_eq!(basis.len(), m.size() - 1);
            for v in &basis {
                let eps: Scalar = v.iter().fold(ring().zero(), |acc, s| &acc + s);
                assert!(eps.is_zero());
            }
        }
        assert!(augmentation_ideal_basis(&FiniteMagma::trivial(1), ring(), 0).is_empty());
    }

    #[test]
    fn augmented_t1_passes_sd_bialgebra() {
        let a = augmented_rack_bialgebra(&FiniteMagma::trivial(1), ring()).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.check_sd_bialgebra().pass);
        assert!(a.check_coassoc().pass);
        assert!(a.check_compat().pass);
        assert!(a.validate_invariants().is_ok());
        // 1 * 1 = 0 breaks generalized idempotency at the unit
        let r = a.check_gen_idempotent();
        assert!(!r.pass);
        assert_eq!(r.witness, Some(vec![0]));
    }

    #[test]
    fn phi_map_examples() {
        // trivial quandle: phi(a, b) = b
        let t3 = FiniteMagma::trivial(3);
        let phi = phi_map(&t3, ring()).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let mut want = vec![q(0), q(0), q(0)];
                want[b] = q(1);
                assert_eq!(phi.on_basis(a, b), want);
            }
        }
        // dihedral: phi(e0, e1) = e2 because e2 * e0 = 1
        let r3 = FiniteMagma::dihedral(3);
        let phi = phi_map(&r3, ring()).unwrap();
        assert_eq!(phi.on_basis(0, 1), vec![q(0), q(0), q(1)]);
    }

    #[test]
    fn phi_identity_on_basis_and_linearized() {
        let r3 = FiniteMagma::dihedral(3);
        let alg = rack_algebra(&r3, ring()).unwrap();
        let phi = phi_map(&r3, ring()).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let got = phi_invax_apply(&alg, &phi, &alg.basis(a), &alg.basis(b));
                assert_eq!(got, alg.basis(b));
            }
        }
        // bilinear expansion: x = e0 + e1 has eps(x) = 2, so the value is 2 y
        let x: Vec<Scalar> = vec![q(1), q(1), q(0)];
        let y = alg.basis(2);
        let got = phi_invax_apply(&alg, &phi, &x, &y);
        assert_eq!(got, vec![q(0), q(0), q(2)]);
    }

    #[test]
    fn solver_examples() {
        let t2 = FiniteMagma::trivial(2);
        // a = 2 t0, b = t1  ->  x = t1 / 2
        let a = vec![q(2), q(0)];
        let b = vec![q(0), q(1)];
        let x = solve_right_mult(&t2, ring(), &a, &b).unwrap().unwrap();
        assert_eq!(x, vec![q(0), ring().from_ratio(1, 2).unwrap()]);
        // a in the augmentation ideal, b != 0 -> no solution
        let a = vec![q(-1), q(1)];
        assert_eq!(solve_right_mult(&t2, ring(), &a, &b).unwrap(), None);
        // b = 0 always solvable
        let z = vec![q(0), q(0)];
        assert_eq!(
            solve_right_mult(&t2, ring(), &a, &z).unwrap(),
            Some(z.clone())
        );
        let a0 = vec![q(1), q(0)];
        assert_eq!(solve_right_mult(&t2, ring(), &a0, &z).unwrap(), Some(z));
        // non-trivial quandle rejected
        assert!(solve_right_mult(&FiniteMagma::dihedral(3), ring(), &[q(1), q(0), q(0)], &[q(0), q(0), q(0)]).is_err());
    }

    #[test]
    fn leibniz_validation() {
        assert!(LeibnizData::solvable2(ring()).cyclic_jacobi_holds());
        let mut bad = vec![ring().zero(); 8];
        bad[0] = q(1); // [e_0, e_0] = e_0 is not Leibniz
        assert!(matches!(
            LeibnizData::new(ring(), 2, bad),
            Err(Error::NotLeibniz(_))
        ));
    }

    #[test]
    fn leibniz_rack_units_and_brackets() {
        let l = LeibnizData::solvable2(ring());
        let (star, bar) = leibniz_rack(&l);
        assert_eq!(star.dim(), 3);
        // 1 * x = 0, x * 1 = x
        assert_eq!(star.mul_basis(0, 1), star.zero_vec());
        assert_eq!(star.mul_basis(1, 0), star.basis(1));
        // x * y = [x, y] = e2 (index 2), bar-star negates
        assert_eq!(star.mul_basis(1, 2), star.basis(2));
        assert_eq!(bar.mul_basis(1, 2), vec![q(0), q(0), q(-1)]);
        let rep = star.check_linear_rack(Some(&bar)).unwrap();
        assert!(rep.self_distributive.pass);
        assert!(rep.inverse.unwrap().pass);
        // generalized idempotency also holds: Delta x = x(x)1 + 1(x)x gives
        // x*1 + 1*x = x, so the construction lands on the quandle rung
        assert!(rep.idempotent.pass);
    }

    #[test]
    fn leibniz_rack_abelian() {
        let l = LeibnizData::abelian(ring(), 2);
        let (star, bar) = leibniz_rack(&l);
        let rep = star.check_linear_rack(Some(&bar)).unwrap();
        assert!(rep.self_distributive.pass);
        assert!(rep.inverse.unwrap().pass);
        assert!(rep.idempotent.pass);
    }

    #[test]
    fn adjoint_equals_conjugation_rack_algebra() {
        for (name, g) in group::catalog() {
            let adj = group_hopf_adjoint(&g, ring());
            let conj = rack_algebra(&FiniteMagma::conjugation(&g), ring()).unwrap();
            for i in 0..g.order() {
                for j in 0..g.order() {
                    for k in 0..g.order() {
                        assert_eq!(adj.m(i, j, k), conj.m(i, j, k), "{name} ({i},{j},{k})");
                    }
                }
            }
            assert!(adj.check_sd_bialgebra().pass, "{name}");
            assert!(adj.find_counit().is_some(), "{name}");
        }
    }

    #[test]
    fn adjoint_z2_is_trivial_quandle_algebra() {
        let adj = group_hopf_adjoint(&group::cyclic(2), ring());
        let t2 = rack_algebra(&FiniteMagma::trivial(2), ring()).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(adj.mul_basis(i, j), t2.mul_basis(i, j));
            }
        }
    }

    #[test]
    fn groupoid_algebra_of_constant_shelf_is_linear_shelf_only() {
        let shelf = FiniteMagma::new(2, vec![vec![0, 0], vec![0, 0]]).unwrap();
        let a = groupoid_algebra(&shelf, ring());
        let rep = a.check_linear_rack(None).unwrap();
        assert!(rep.self_distributive.pass);
        assert!(rep.inverse.is_none());
        assert!(!rep.idempotent.pass);
        assert_eq!(rep.class, Some(crate::bialg::LinearClass::Shelf));
    }

    #[test]
    fn linear_rack_ladder_on_racks() {
        use crate::bialg::LinearClass;
        // non-quandle rack: linear rack but not quandle
        let m = FiniteMagma::new(2, vec![vec![1, 1], vec![0, 0]]).unwrap();
        let a = rack_algebra(&m, ring()).unwrap();
        let bar = rack_algebra(&m.left_divide().unwrap(), ring()).unwrap();
        let rep = a.check_linear_rack(Some(&bar)).unwrap();
        assert_eq!(rep.class, Some(LinearClass::Rack));
        // quandle: full ladder
        let r3 = FiniteMagma::dihedral(3);
        let a = rack_algebra(&r3, ring()).unwrap();
        let bar = rack_algebra(&r3.left_divide().unwrap(), ring()).unwrap();
        let rep = a.check_linear_rack(Some(&bar)).unwrap();
        assert_eq!(rep.class, Some(LinearClass::Quandle));
    }

    #[test]
    fn leibniz_axiom3_tracks_right_leibniz_identity() {
        // random-ish 3-dim brackets: axiom 3 of the linear-rack ladder holds
        // exactly when the right Leibniz identity does
        let mut seed = 0x5eed_cafe_u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 3) as i64 - 1
        };
        for _ in 0..10 {
            let bracket: Vec<Scalar> = (0..27).map(|_| q(next())).collect();
            let leib_ok = LeibnizData::new(ring(), 3, bracket.clone()).is_ok();
            // build the rack structure without validating to test equivalence
            let l = LeibnizData {
                ring: ring(),
                dim: 3,
                bracket,
            };
            let (star, _) = leibniz_rack(&l);
            assert_eq!(star.check_sd_bialgebra().pass, leib_ok);
        }
    }

    #[test]
    fn novikov_tables_match() {
        let a1 = novikov_example(NovikovKind::A1, ring());
        assert_eq!(a1.mul_basis(0, 1), a1.basis(1));
        assert_eq!(a1.mul_basis(0, 0), a1.zero_vec());
        let a2 = novikov_example(NovikovKind::A2, ring());
        assert_eq!(a2.mul_basis(0, 0), a2.basis(0));
        assert_eq!(a2.mul_basis(1, 0), a2.basis(1));
        assert_eq!(a2.mul_basis(0, 1), a2.zero_vec());
    }

    #[test]
    fn rack_algebras_are_linear_racks_with_left_division() {
        for n in 1..=4 {
            for m in magma::enumerate_racks(n) {
                let a = rack_algebra(&m, ring()).unwrap();
                let bar = rack_algebra(&m.left_divide().unwrap(), ring()).unwrap();
                let rep = a.check_linear_rack(Some(&bar)).unwrap();
                assert!(rep.self_distributive.pass);
                assert!(rep.inverse.unwrap().pass);
                assert_eq!(rep.idempotent.pass, m.check_axioms().q1);
            }
        }
    }
}
