//! Property tests: exact field axioms on randomized samples, canonical
//! form uniqueness, and the polarization equivalence for plain
//! self-distributivity.

use proptest::prelude::*;

use sdbialg::bialg::StructureBialgebra;
use sdbialg::cli::sd_plain_sampled;
use sdbialg::scalar::{Ring, Scalar};

fn rational() -> impl Strategy<Value = Scalar> {
    (-40i64..40, 1i64..20).prop_map(|(n, d)| Ring::rational().from_ratio(n, d).unwrap())
}

fn gf7() -> impl Strategy<Value = Scalar> {
    (0i64..7).prop_map(|n| Ring::gfp(7).unwrap().from_i64(n))
}

fn quad2() -> impl Strategy<Value = Scalar> {
    ((-9i64..9, 1i64..5), (-9i64..9, 1i64..5)).prop_map(|((un, ud), (vn, vd))| {
        let r = Ring::quad(2).unwrap();
        let u = r.from_ratio(un, ud).unwrap();
        let v = &r.from_ratio(vn, vd).unwrap() * &r.radical().unwrap();
        &u + &v
    })
}

macro_rules! field_axioms {
    ($name:ident, $strategy:expr) => {
        proptest! {
            #[test]
            fn $name((a, b, c) in ($strategy, $strategy, $strategy)) {
                // associativity and commutativity, exact
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
                // distributivity
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                // inverses
                let ring = a.ring();
                prop_assert_eq!(&a - &a, ring.zero());
                if !a.is_zero() {
                    prop_assert!((&a * &a.inverse().unwrap()).is_one());
                }
                // canonical form is unique: equal values compare equal after
                // any detour
                let detour = &(&a + &b) - &b;
                prop_assert_eq!(detour, a);
            }
        }
    };
}

field_axioms!(field_axioms_rational, rational());
field_axioms!(field_axioms_gf7, gf7());
field_axioms!(field_axioms_quad2, quad2());

/// Builds a dim-2 algebra (multiplication only) from eight small integers.
fn table_algebra(coeffs: [i64; 8]) -> StructureBialgebra {
    let ring = Ring::rational();
    let mut a = StructureBialgebra::new(ring, 2);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                a.set_m(i, j, k, ring.from_i64(coeffs[(i * 2 + j) * 2 + k]));
            }
        }
    }
    a
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The polarized checker agrees with exact brute-force evaluation of
    /// (ab)c = (ac)(bc) on 200 seeded pseudo-random element triples.
    #[test]
    fn polarization_soundness(coeffs in proptest::array::uniform8(-1i64..=1), seed in any::<u64>()) {
        let a = table_algebra(coeffs);
        let polarized = a.check_sd_plain().pass;
        let sampled = sd_plain_sampled(&a, 200, seed);
        // polarized pass implies every sampled triple passes; a sampled
        // failure refutes the identity, so polarized must fail too
        if polarized {
            prop_assert!(sampled);
        }
        if !sampled {
            prop_assert!(!polarized);
        }
    }

    /// Failing reports always carry a reproducible witness.
    #[test]
    fn witnesses_are_reproducible(coeffs in proptest::array::uniform8(-2i64..=2)) {
        let a = table_algebra(coeffs);
        for report in [a.check_cube_zero(), a.check_novikov(), a.check_sd_plain()] {
            if !report.pass {
                prop_assert!(report.witness.is_some());
                prop_assert_ne!(&report.lhs, &report.rhs);
            }
        }
    }

    /// Random Cayley tables: the axiom report is internally consistent and
    /// its witness really violates the named axiom.
    #[test]
    fn magma_reports_are_consistent(entries in proptest::collection::vec(0usize..3, 9)) {
        use sdbialg::magma::{FiniteMagma, MagmaClass};
        let table: Vec<Vec<usize>> = entries.chunks(3).map(|c| c.to_vec()).collect();
        let m = FiniteMagma::new(3, table).unwrap();
        let r = m.check_axioms();
        prop_assert_eq!(r.witness.is_some(), !(r.q1 && r.q2 && r.q3));
        match r.class {
            Some(MagmaClass::Quandle) => prop_assert!(r.q1 && r.q2 && r.q3),
            Some(MagmaClass::Rack) => prop_assert!(!r.q1 && r.q2 && r.q3),
            Some(MagmaClass::Shelf) => prop_assert!(r.q3 && !(r.q1 && r.q2)),
            None => prop_assert!(!r.q3),
        }
        if !r.q3 {
            let [x, y, z] = r.witness.unwrap();
            prop_assert_ne!(m.op(m.op(x, y), z), m.op(m.op(x, z), m.op(y, z)));
        }
        if r.q2 {
            // division exists and satisfies both identities everywhere
            let bar = m.left_divide().unwrap();
            for a in 0..3 {
                for b in 0..3 {
                    prop_assert_eq!(m.op(bar.op(b, a), a), b);
                    prop_assert_eq!(bar.op(m.op(b, a), a), b);
                }
            }
        } else {
            prop_assert!(m.left_divide().is_err());
        }
    }
}
