//! Tiny multivariate polynomial arithmetic over Q for the classification
//! reducer: eight variables, the structure constants of a 2-dimensional
//! multiplication table.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub const NVARS: usize = 8;
pub const VAR_NAMES: [&str; NVARS] = ["a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"];

pub type Monomial = [u8; NVARS];

/// Polynomial in the eight table coefficients, terms sorted by monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: BigRational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0; NVARS], c);
        }
        Poly { terms }
    }

    pub fn from_i64(n: i64) -> Poly {
        Poly::constant(BigRational::from_integer(n.into()))
    }

    pub fn var(v: usize) -> Poly {
        assert!(v < NVARS);
        let mut m = [0u8; NVARS];
        m[v] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(m, BigRational::one());
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Some(c) when the polynomial is the constant c (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&[0; NVARS]) {
                return Some(c.clone());
            }
        }
        None
    }

    #[cfg(test)]
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as u32).sum())
            .max()
            .unwrap_or(0)
    }

    fn insert(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(*m, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = *m1;
                for (e, e2) in m.iter_mut().zip(m2.iter()) {
                    *e += *e2;
                }
                out.insert(m, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        let mut out = Poly::zero();
        for (m, k) in &self.terms {
            out.insert(*m, k * c);
        }
        out
    }

    /// Replaces a variable by a polynomial.
    pub fn substitute(&self, v: usize, with: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m[v];
            let mut rest = *m;
            rest[v] = 0;
            let mut term = Poly {
                terms: BTreeMap::from([(rest, c.clone())]),
            };
            for _ in 0..e {
                term = term.mul(with);
            }
            out = out.add(&term);
        }
        out
    }

    /// A variable dividing every monomial, if any (smallest index wins).
    pub fn content_var(&self) -> Option<usize> {
        if self.terms.is_empty() {
            return None;
        }
        (0..NVARS).find(|&v| self.terms.keys().all(|m| m[v] >= 1))
    }

    /// Divides by a content variable once.
    pub fn divide_by_var(&self, v: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            assert!(m[v] >= 1);
            let mut m2 = *m;
            m2[v] -= 1;
            out.insert(m2, c.clone());
        }
        out
    }

    /// Decomposes an affine polynomial as (constant, per-variable linear
    /// coefficients); None when any term is nonlinear.
    pub fn as_affine(&self) -> Option<(BigRational, Vec<BigRational>)> {
        let mut constant = BigRational::zero();
        let mut coeffs = vec![BigRational::zero(); NVARS];
        for (m, c) in &self.terms {
            let deg: u32 = m.iter().map(|&e| e as u32).sum();
            match deg {
                0 => constant = c.clone(),
                1 => {
                    let v = m.iter().position(|&e| e == 1).unwrap();
                    coeffs[v] = c.clone();
                }
                _ => return None,
            }
        }
        Some((constant, coeffs))
    }

    pub fn eval(&self, point: &[BigRational; NVARS]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    term *= &point[v];
                }
            }
            acc += term;
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (v, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    write!(f, "*{}", VAR_NAMES[v])?;
                }
            }
        }
        Ok(())
    }
}
