//! Finite groups as literal Cayley tables, just enough for conjugation
//! quandles and group Hopf-algebra adjoints. The catalog covers all the
//! groups the tests need; nothing here does group theory.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates the full group axioms (closure, associativity, identity,
    /// inverses) before accepting the table.
    pub fn new(table: Vec<Vec<usize>>) -> Result<GroupTable> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&v| v >= n) {
                return Err(Error::InvalidGroup("entries out of range".into()));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for x in 0..n {
            inverse[x] = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {x} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(GroupTable {
            n,
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

/// Cyclic group Z_n.
pub fn cyclic(n: usize) -> GroupTable {
    assert!(n >= 1);
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    GroupTable::new(table).expect("cyclic tables are groups")
}

/// Symmetric group S3; elements are the permutations of {0,1,2} in
/// lexicographic order, composition (p q)(i) = p(q(i)).
pub fn s3() -> GroupTable {
    GroupTable::new(vec![
        vec![0, 1, 2, 3, 4, 5],
        vec![1, 0, 4, 5, 2, 3],
        vec![2, 3, 0, 1, 5, 4],
        vec![3, 2, 5, 4, 0, 1],
        vec![4, 5, 1, 0, 3, 2],
        vec![5, 4, 3, 2, 1, 0],
    ])
    .expect("S3 literal table is a group")
}

/// Dihedral group of order 8; element a + 4b stands for r^a s^b.
pub fn d4() -> GroupTable {
    GroupTable::new(vec![
        vec![0, 1, 2, 3, 4, 5, 6, 7],
        vec![1, 2, 3, 0, 5, 6, 7, 4],
        vec![2, 3, 0, 1, 6, 7, 4, 5],
        vec![3, 0, 1, 2, 7, 4, 5, 6],
        vec![4, 7, 6, 5, 0, 3, 2, 1],
        vec![5, 4, 7, 6, 1, 0, 3, 2],
        vec![6, 5, 4, 7, 2, 1, 0, 3],
        vec![7, 6, 5, 4, 3, 2, 1, 0],
    ])
    .expect("D4 literal table is a group")
}

/// Quaternion group; elements in order 1, -1, i, -i, j, -j, k, -k.
pub fn q8() -> GroupTable {
    GroupTable::new(vec![
        vec![0, 1, 2, 3, 4, 5, 6, 7],
        vec![1, 0, 3, 2, 5, 4, 7, 6],
        vec![2, 3, 1, 0, 6, 7, 5, 4],
        vec![3, 2, 0, 1, 7, 6, 4, 5],
        vec![4, 5, 7, 6, 1, 0, 2, 3],
        vec![5, 4, 6, 7, 0, 1, 3, 2],
        vec![6, 7, 4, 5, 3, 2, 1, 0],
        vec![7, 6, 5, 4, 2, 3, 0, 1],
    ])
    .expect("Q8 literal table is a group")
}

/// Every group of order <= 8 the test-suite relies on, keyed by name.
pub fn catalog() -> Vec<(&'static str, GroupTable)> {
    vec![
        ("z2", cyclic(2)),
        ("z3", cyclic(3)),
        ("z4", cyclic(4)),
        ("z5", cyclic(5)),
        ("z6", cyclic(6)),
        ("s3", s3()),
        ("d4", d4()),
        ("q8", q8()),
    ]
}

/// Looks a catalog group up by name.
pub fn by_name(name: &str) -> Result<GroupTable> {
    catalog()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, g)| g)
        .ok_or_else(|| Error::InvalidInput(format!("unknown group {name:?}")))
}
