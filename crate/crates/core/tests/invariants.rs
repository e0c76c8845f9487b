//! Cross-module invariants: Yang-Baxter operators of every small rack,
//! basis-change preservation of all axiom verdicts, and the set-level
//! consistency of rack R matrices.

use num_rational::BigRational;

use sdbialg::bialg::StructureBialgebra;
use sdbialg::classify::{self, ComultType, MultTable2};
use sdbialg::construct;
use sdbialg::linalg::Mat;
use sdbialg::magma::{enumerate_racks, FiniteMagma};
use sdbialg::scalar::{Ring, Scalar};
use sdbialg::ybe;

/// Set-level braid check for the induced map R(a,b) = (b, a*b), applying
/// R to factors (1,2) and (2,3) of triples.
fn set_braid_holds(m: &FiniteMagma) -> bool {
    let n = m.size();
    let r12 = |(x, y, z): (usize, usize, usize)| (y, m.op(x, y), z);
    let r23 = |(x, y, z): (usize, usize, usize)| (x, z, m.op(y, z));
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = r12(r23(r12((a, b, c))));
                let rhs = r23(r12(r23((a, b, c))));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Racks of size <= 4: the full matrix-level braid relation and exact
/// invertibility, plus agreement with the set-level reduction.
#[test]
fn ybe_matrix_level_all_racks_up_to_4() {
    let ring = Ring::rational();
    for n in 1..=4 {
        for m in enumerate_racks(n) {
            let alg = construct::rack_algebra(&m, ring).unwrap();
            let r = ybe::build_r(&alg).unwrap();
            assert!(ybe::check_braid(&r).pass, "matrix braid fails for {m:?}");
            assert!(set_braid_holds(&m), "set braid disagrees for {m:?}");
            let bar = construct::rack_algebra(&m.left_divide().unwrap(), ring).unwrap();
            let rinv = ybe::build_r_inverse(&alg, &bar).unwrap();
            assert!(ybe::check_inverse(&r, &rinv).pass, "inverse fails for {m:?}");
        }
    }
}

/// Racks of size 5: R is the permutation matrix of (a,b) -> (b, a*b), so
/// the braid relation and invertibility reduce to the set level (the
/// reduction itself is cross-validated at sizes <= 4 above). Also checks
/// the linear-rack ladder with bar-star from left division.
#[test]
fn ybe_and_linear_rack_all_racks_size_5() {
    let ring = Ring::rational();
    let racks = enumerate_racks(5);
    assert_eq!(racks.len(), 1708);
    for m in &racks {
        let alg = construct::rack_algebra(m, ring).unwrap();
        let r = ybe::build_r(&alg).unwrap();
        let perm = r.as_permutation().expect("rack R must be a permutation matrix");
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(perm[a * 5 + b], b * 5 + m.op(a, b));
            }
        }
        assert!(set_braid_holds(m), "set braid fails for {m:?}");
        // set-level invertibility: Rinv(a,b) = (b bar* a, a)
        let bar = m.left_divide().unwrap();
        for a in 0..5 {
            for b in 0..5 {
                let (c, d) = (b, m.op(a, b)); // R(a,b)
                assert_eq!((m_bar_inv(&bar, c, d), c), (a, b));
            }
        }
        let bar_alg = construct::rack_algebra(&bar, ring).unwrap();
        let rep = alg.check_linear_rack(Some(&bar_alg)).unwrap();
        assert!(rep.self_distributive.pass && rep.inverse.unwrap().pass);
        assert_eq!(rep.idempotent.pass, m.check_axioms().q1);
    }
}

fn m_bar_inv(bar: &FiniteMagma, a: usize, b: usize) -> usize {
    // Rinv(a,b) first component: b bar* a
    bar.op(b, a)
}

fn full_verdicts(a: &StructureBialgebra) -> Vec<bool> {
    vec![
        a.check_coassoc().pass,
        a.find_counit().is_some(),
        a.check_compat().pass,
        a.check_sd_bialgebra().pass,
        a.check_sd_plain().pass,
        a.check_cube_zero().pass,
        a.check_novikov().pass,
        a.check_gen_idempotent().pass,
        a.check_gen_jordan().pass,
        a.check_cocommutative().pass,
    ]
}

/// An invertible basis change must preserve the verdict of every
/// coordinate-free axiom; checked on five sample bialgebras over three
/// different rings.
#[test]
fn change_basis_preserves_all_verdicts() {
    let q = Ring::rational();
    let mut samples: Vec<StructureBialgebra> = Vec::new();
    samples.push(construct::rack_algebra(&FiniteMagma::dihedral(3), q).unwrap());
    samples.push(construct::augmented_rack_bialgebra(&FiniteMagma::trivial(1), q).unwrap());
    samples.push(construct::novikov_example(construct::NovikovKind::A1, q));
    // type-3 entry 1 over Q(sqrt 2)
    let res = classify::verify_type3(&BigRational::from_integer(2.into())).unwrap();
    samples.push(
        res.entry("1")
            .unwrap()
            .table
            .to_bialgebra(&ComultType::Type3 { a: res.a.clone() })
            .unwrap(),
    );
    // a type-2 family member over GF(3): x^2 = x, yx = 2y
    let f3 = Ring::gfp(3).unwrap();
    let t = MultTable2::new(
        f3,
        vec![
            f3.one(),
            f3.zero(),
            f3.zero(),
            f3.zero(),
            f3.zero(),
            f3.from_i64(2),
            f3.zero(),
            f3.zero(),
        ],
    )
    .unwrap();
    samples.push(t.to_bialgebra(&ComultType::Type2).unwrap());

    for (idx, alg) in samples.iter().enumerate() {
        let ring = alg.ring();
        let d = alg.dim();
        // unitriangular with an extra diagonal scaling: always invertible
        let mut p = Mat::identity(ring, d);
        for i in 0..d {
            for j in (i + 1)..d {
                p[(i, j)] = ring.from_i64(((i + j) % 3) as i64);
            }
        }
        p[(d - 1, d - 1)] = ring.from_i64(2);
        let before = full_verdicts(alg);
        let after = full_verdicts(&alg.change_basis(&p).unwrap());
        assert_eq!(before, after, "sample {idx} changed verdicts");
    }
}

/// Scaling canonicalization example from the type-2 symmetry: a d2 = 5
/// table normalizes to d2 = 1 and the map is idempotent.
#[test]
fn scale_canonicalization_is_idempotent_on_samples() {
    let q = Ring::rational();
    for coeffs in [
        [0i64, 0, 0, 0, 0, 0, 0, 5],
        [1, 0, 0, 2, 0, 3, 0, 0],
        [0, 2, 1, 0, 0, 0, 3, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
    ] {
        let t = MultTable2::from_i64s(q, coeffs);
        let c = classify::canonicalize(&t, classify::Symmetry::SwapAndScale);
        assert_eq!(
            classify::canonicalize(&c, classify::Symmetry::SwapAndScale),
            c,
            "not idempotent on {t}"
        );
    }
    // the documented normalization: d2 = 5 scales to 1
    let t = MultTable2::from_i64s(q, [1, 0, 0, 0, 0, 0, 0, 5]);
    let scaled = t.scale_y(&q.from_ratio(1, 5).unwrap());
    assert!(scaled.coeffs()[7].is_one());
}

/// Augmentation-ideal basis vectors multiply as the triangular rules say:
/// t0^2 = t0, tau_i t0 = tau_i, t0 tau_i = tau_i^2 = 0.
#[test]
fn augmentation_ideal_multiplication_rules() {
    let q = Ring::rational();
    let t3 = FiniteMagma::trivial(3);
    let alg = construct::rack_algebra(&t3, q).unwrap();
    let taus = construct::augmentation_ideal_basis(&t3, q, 0);
    let t0 = alg.basis(0);
    assert_eq!(alg.mul(&t0, &t0), t0);
    for tau in &taus {
        assert_eq!(alg.mul(tau, &t0), tau.clone());
        assert_eq!(alg.mul(&t0, tau), alg.zero_vec());
        for tau2 in &taus {
            assert_eq!(alg.mul(tau, tau2), alg.zero_vec());
        }
    }
}

/// The inverse-axiom map phi evaluated with scalars: eps-weighted identity
/// on random small combinations, across every rack of size <= 3.
#[test]
fn phi_identity_eps_weighted_all_small_racks() {
    let q = Ring::rational();
    let vals: Vec<Vec<Scalar>> = vec![
        vec![q.from_i64(1), q.from_i64(1), q.from_i64(0)],
        vec![q.from_i64(2), q.from_i64(-1), q.from_i64(3)],
        vec![q.from_i64(0), q.from_i64(0), q.from_i64(1)],
    ];
    for m in enumerate_racks(3) {
        let alg = construct::rack_algebra(&m, q).unwrap();
        let phi = construct::phi_map(&m, q).unwrap();
        for x in &vals {
            for y in &vals {
                let got = construct::phi_invax_apply(&alg, &phi, x, y);
                let eps_x = x.iter().fold(q.zero(), |acc, s| &acc + s);
                let want: Vec<Scalar> = y.iter().map(|s| &eps_x * s).collect();
                assert_eq!(got, want);
            }
        }
    }
}
