//! Finite binary-operation structures: shelves, racks and quandles as
//! Cayley tables, with axiom checks, left division and the standard
//! constructions used throughout the crate.
//!
//! Indices are 0-based everywhere, including file formats. `table[x][y]`
//! is the product `x * y`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMagma", into = "RawMagma")]
pub struct FiniteMagma {
    n: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawMagma {
    size: usize,
    table: Vec<Vec<usize>>,
}

impl TryFrom<RawMagma> for FiniteMagma {
    type Error = Error;
    fn try_from(raw: RawMagma) -> Result<FiniteMagma> {
        FiniteMagma::new(raw.size, raw.table)
    }
}

impl From<FiniteMagma> for RawMagma {
    fn from(m: FiniteMagma) -> RawMagma {
        RawMagma {
            size: m.n,
            table: m.table,
        }
    }
}

/// How far up the shelf/rack/quandle ladder a magma gets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MagmaClass {
    Shelf,
    Rack,
    Quandle,
}

/// Axiom flags plus a concrete counterexample when something fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagmaReport {
    /// idempotency x*x = x
    pub q1: bool,
    /// right translations are bijections
    pub q2: bool,
    /// right self-distributivity
    pub q3: bool,
    /// Violating triple. For q3: (x,y,z) with (x*y)*z != (x*z)*(y*z).
    /// For q2: (z1,z2,y) with z1 != z2 but z1*y = z2*y. For q1: (x,x,x).
    pub witness: Option<[usize; 3]>,
    pub class: Option<MagmaClass>,
}

impl std::fmt::Display for MagmaReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "q1 (idempotent):        {}", pass(self.q1))?;
        writeln!(f, "q2 (right-invertible):  {}", pass(self.q2))?;
        writeln!(f, "q3 (self-distributive): {}", pass(self.q3))?;
        if let Some(w) = self.witness {
            writeln!(f, "witness: ({}, {}, {})", w[0], w[1], w[2])?;
        }
        let label = match self.class {
            Some(MagmaClass::Shelf) => "shelf",
            Some(MagmaClass::Rack) => "rack",
            Some(MagmaClass::Quandle) => "quandle",
            None => "none",
        };
        write!(f, "class: {label}")
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

impl FiniteMagma {
    pub fn new(n: usize, table: Vec<Vec<usize>>) -> Result<FiniteMagma> {
        if n == 0 || table.len() != n {
            return Err(Error::InvalidInput(format!(
                "table must have {n} rows, found {}",
                table.len()
            )));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&v| v >= n) {
                return Err(Error::InvalidInput(
                    "table entries must be indices in [0, n)".into(),
                ));
            }
        }
        Ok(FiniteMagma { n, table })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// x * y
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    /// The n-element trivial quandle T_n with x*y = x.
    pub fn trivial(n: usize) -> FiniteMagma {
        assert!(n >= 1);
        FiniteMagma {
            n,
            table: (0..n).map(|x| vec![x; n]).collect(),
        }
    }

    /// Dihedral quandle R_n on Z_n with x*y = 2y - x mod n.
    pub fn dihedral(n: usize) -> FiniteMagma {
        assert!(n >= 1);
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| (2 * y + n - x % n) % n)
                    .collect()
            })
            .collect();
        FiniteMagma { n, table }
    }

    /// Conjugation quandle of a finite group: x * y = y x y^{-1}.
    ///
    /// This convention makes the quandle algebra coincide with the adjoint
    /// multiplication h' * h = h h' S(h) of the group Hopf algebra.
    pub fn conjugation(g: &GroupTable) -> FiniteMagma {
        let n = g.order();
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| g.mul(g.mul(y, x), g.inverse(y)))
                    .collect()
            })
            .collect();
        FiniteMagma { n, table }
    }

    pub fn check_axioms(&self) -> MagmaReport {
        let n = self.n;
        let mut q1 = true;
        let mut q1_witness = None;
        for x in 0..n {
            if self.op(x, x) != x {
                q1 = false;
                q1_witness = Some([x, x, x]);
                break;
            }
        }

        let mut q2 = true;
        let mut q2_witness = None;
        'cols: for y in 0..n {
            let mut seen = vec![usize::MAX; n];
            for z in 0..n {
                let v = self.op(z, y);
                if seen[v] != usize::MAX {
                    q2 = false;
                    q2_witness = Some([seen[v], z, y]);
                    break 'cols;
                }
                seen[v] = z;
            }
        }

        let mut q3 = true;
        let mut q3_witness = None;
        'triples: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.op(self.op(x, y), z) != self.op(self.op(x, z), self.op(y, z)) {
                        q3 = false;
                        q3_witness = Some([x, y, z]);
                        break 'triples;
                    }
                }
            }
        }

        let class = match (q1, q2, q3) {
            (true, true, true) => Some(MagmaClass::Quandle),
            (_, true, true) => Some(MagmaClass::Rack),
            (_, _, true) => Some(MagmaClass::Shelf),
            _ => None,
        };
        let witness = q3_witness.or(q2_witness).or(q1_witness);
        MagmaReport {
            q1,
            q2,
            q3,
            witness,
            class,
        }
    }

    /// The left-division table b bar* a, defined when every right
    /// translation is a bijection (Q2). Satisfies both Q2' identities:
    /// (b bar* a) * a = b = (b * a) bar* a.
    pub fn left_divide(&self) -> Result<FiniteMagma> {
        let n = self.n;
        let mut table = vec![vec![0usize; n]; n];
        for a in 0..n {
            let mut seen = vec![false; n];
            for c in 0..n {
                let b = self.op(c, a);
                if seen[b] {
                    return Err(Error::NoDivision(a));
                }
                seen[b] = true;
                table[b][a] = c; // c * a = b  =>  b bar* a = c
            }
        }
        Ok(FiniteMagma { n, table })
    }

    /// Two-sided unit e with e*x = x*e = x for all x, if one exists.
    pub fn unit_check(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.op(e, x) == x && self.op(x, e) == x))
    }
}

/// All labeled racks on {0..n-1}, by backtracking over the right-translation
/// permutations with incremental Q3 pruning. Intended for n <= 5.
pub fn enumerate_racks(n: usize) -> Vec<FiniteMagma> {
    let perms = all_permutations(n);
    let mut cols: Vec<Option<usize>> = vec![None; n]; // indices into perms
    let mut out = Vec::new();
    rec(n, &perms, &mut cols, 0, &mut out);
    out
}

/// The quandles among [`enumerate_racks`].
pub fn enumerate_quandles(n: usize) -> Vec<FiniteMagma> {
    enumerate_racks(n)
        .into_iter()
        .filter(|m| m.check_axioms().q1)
        .collect()
}

fn rec(
    n: usize,
    perms: &[Vec<usize>],
    cols: &mut Vec<Option<usize>>,
    y: usize,
    out: &mut Vec<FiniteMagma>,
) {
    if y == n {
        let table = (0..n)
            .map(|x| (0..n).map(|c| perms[cols[c].unwrap()][x]).collect())
            .collect();
        out.push(FiniteMagma { n, table });
        return;
    }
    'next: for (pi, _) in perms.iter().enumerate() {
        cols[y] = Some(pi);
        // check every Q3 instance whose three columns are all assigned:
        // S_z(S_y(x)) = S_{S_z(y)}(S_z(x)) for all x
        for b in 0..=y {
            for z in 0..=y {
                if cols[b].is_none() || cols[z].is_none() {
                    continue;
                }
                let sb = &perms[cols[b].unwrap()];
                let sz = &perms[cols[z].unwrap()];
                let w = sz[b]; // b * z
                let Some(wi) = (w <= y).then(|| cols[w]).flatten() else {
                    continue;
                };
                let sw = &perms[wi];
                for x in 0..n {
                    if sz[sb[x]] != sw[sz[x]] {
                        continue 'next;
                    }
                }
            }
        }
        rec(n, perms, cols, y + 1, out);
    }
    cols[y] = None;
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    permute(&mut cur, 0, &mut out);
    out.sort();
    out
}

fn permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, out);
        cur.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group;

    #[test]
    fn trivial_is_quandle() {
        let r = FiniteMagma::trivial(3).check_axioms();
        assert_eq!(r.class, Some(MagmaClass::Quandle));
        assert!(r.witness.is_none());
    }

    #[test]
    fn dihedral_three_is_quandle() {
        let m = FiniteMagma::dihedral(3);
        // oracle: the defining formula on all 27 triples
        for x in 0..3usize {
            for y in 0..3 {
                assert_eq!(m.op(x, y), (2 * y + 3 - x) % 3);
            }
        }
        assert_eq!(m.check_axioms().class, Some(MagmaClass::Quandle));
    }

    #[test]
    fn addition_table_fails_q3_with_witness() {
        let table = (0..3).map(|x| (0..3).map(|y| (x + y) % 3).collect()).collect();
        let m = FiniteMagma::new(3, table).unwrap();
        let r = m.check_axioms();
        assert!(!r.q3);
        assert!(r.q2);
        assert_eq!(r.class, None);
        let [x, y, z] = r.witness.unwrap();
        assert_ne!(m.op(m.op(x, y), z), m.op(m.op(x, z), m.op(y, z)));
    }

    #[test]
    fn left_divide_trivial_and_dihedral() {
        let t = FiniteMagma::trivial(4);
        assert_eq!(t.left_divide().unwrap(), t);
        let r3 = FiniteMagma::dihedral(3);
        // dihedral translations are involutions, so bar* equals *
        assert_eq!(r3.left_divide().unwrap(), r3);
    }

    #[test]
    fn left_divide_round_trip() {
        for m in enumerate_racks(3) {
            let bar = m.left_divide().unwrap();
            for a in 0..3 {
                for b in 0..3 {
                    assert_eq!(m.op(bar.op(b, a), a), b);
                    assert_eq!(bar.op(m.op(b, a), a), b);
                }
            }
        }
    }

    #[test]
    fn left_divide_requires_q2() {
        let table = vec![vec![0, 0], vec![0, 0]];
        let m = FiniteMagma::new(2, table).unwrap();
        assert!(m.left_divide().is_err());
    }

    #[test]
    fn conjugation_of_abelian_group_is_trivial() {
        let z2 = group::cyclic(2);
        assert_eq!(FiniteMagma::conjugation(&z2), FiniteMagma::trivial(2));
    }

    #[test]
    fn conjugation_s3_is_quandle() {
        let m = FiniteMagma::conjugation(&group::s3());
        assert_eq!(m.check_axioms().class, Some(MagmaClass::Quandle));
        // spot check against the group: x*y = y x y^{-1}
        let g = group::s3();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(m.op(x, y), g.mul(g.mul(y, x), g.inverse(y)));
            }
        }
        // division solves c * a = b, so b bar* a = a^{-1} b a here
        let bar = m.left_divide().unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(bar.op(b, a), g.mul(g.mul(g.inverse(a), b), a));
                assert_eq!(m.op(bar.op(b, a), a), b);
            }
        }
    }

    #[test]
    fn unit_check_examples() {
        assert_eq!(FiniteMagma::trivial(1).unit_check(), Some(0));
        assert_eq!(FiniteMagma::trivial(2).unit_check(), None);
        assert_eq!(FiniteMagma::dihedral(3).unit_check(), None);
    }

    #[test]
    fn rack_counts_small() {
        // frozen from an independent brute-force enumeration
        assert_eq!(enumerate_racks(1).len(), 1);
        assert_eq!(enumerate_racks(2).len(), 2);
        assert_eq!(enumerate_racks(3).len(), 13);
        assert_eq!(enumerate_racks(4).len(), 114);
        assert_eq!(enumerate_quandles(3).len(), 5);
        assert_eq!(enumerate_quandles(4).len(), 36);
    }

    #[test]
    fn enumerated_racks_are_racks_and_translations_are_automorphisms() {
        for m in enumerate_racks(3) {
            let r = m.check_axioms();
            assert!(r.q2 && r.q3);
            // S_y is an endomorphism: S_y(x*z) = S_y(x) * S_y(z)
            for y in 0..3 {
                for x in 0..3 {
                    for z in 0..3 {
                        assert_eq!(m.op(m.op(x, z), y), m.op(m.op(x, y), m.op(z, y)));
                    }
                }
            }
        }
    }

    #[test]
    fn unit_lemma_small_racks() {
        // a rack with a two-sided unit is the 1-element trivial rack
        for n in 1..=4 {
            for m in enumerate_racks(n) {
                if m.unit_check().is_some() {
                    assert_eq!(m.size(), 1);
                }
            }
        }
    }

    #[test]
    fn magma_json_round_trip() {
        let m = FiniteMagma::dihedral(3);
        let s = serde_json::to_string(&m).unwrap();
        assert!(s.contains("\"size\":3"));
        let back: FiniteMagma = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        // invalid entries rejected
        let bad = r#"{"size":2,"table":[[0,2],[1,0]]}"#;
        assert!(serde_json::from_str::<FiniteMagma>(bad).is_err());
    }
}
