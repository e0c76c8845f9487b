//! Exact scalar arithmetic over Q, GF(p) and quadratic extensions Q(sqrt d).
//!
//! Every scalar carries its ring descriptor, so mixing operands from
//! different rings is detected instead of silently producing garbage.
//! All representations are canonical: rationals are reduced with positive
//! denominator, residues lie in `[0, p)`, and quadratic elements are pairs
//! of canonical rationals. Equality of canonical forms is scalar equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Descriptor of the coefficient ring: Q, GF(p) or Q(sqrt d).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Rational,
    /// Prime field GF(p).
    GfP { p: u64 },
    /// Quadratic extension Q(sqrt d), d square-free and not a perfect square.
    Quad { d: i64 },
}

impl Ring {
    pub fn rational() -> Ring {
        Ring::Rational
    }

    pub fn gfp(p: u64) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(Ring::GfP { p })
    }

    pub fn quad(d: i64) -> Result<Ring> {
        if d == 0 || d == 1 || !is_square_free(d) {
            return Err(Error::InvalidRing(format!(
                "{d} is not a square-free non-square"
            )));
        }
        Ok(Ring::Quad { d })
    }

    /// 0 for Q and Q(sqrt d), p for GF(p).
    pub fn characteristic(&self) -> u64 {
        match self {
            Ring::Rational | Ring::Quad { .. } => 0,
            Ring::GfP { p } => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Ring::Rational => Scalar {
                ring: *self,
                repr: Repr::Rat(BigRational::zero()),
            },
            Ring::GfP { .. } => Scalar {
                ring: *self,
                repr: Repr::Mod(0),
            },
            Ring::Quad { .. } => Scalar {
                ring: *self,
                repr: Repr::Quad(BigRational::zero(), BigRational::zero()),
            },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Ring::Rational => Scalar {
                ring: *self,
                repr: Repr::Rat(BigRational::from_integer(BigInt::from(n))),
            },
            Ring::GfP { p } => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar {
                    ring: *self,
                    repr: Repr::Mod(r),
                }
            }
            Ring::Quad { .. } => Scalar {
                ring: *self,
                repr: Repr::Quad(
                    BigRational::from_integer(BigInt::from(n)),
                    BigRational::zero(),
                ),
            },
        }
    }

    /// num/den as an element of this ring; den must be invertible.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        match self {
            Ring::Rational | Ring::Quad { .. } => {
                let q = BigRational::new(BigInt::from(num), BigInt::from(den));
                Ok(self.from_rational(q))
            }
            Ring::GfP { .. } => {
                let d = self.from_i64(den).inverse()?;
                Ok(&self.from_i64(num) * &d)
            }
        }
    }

    /// Embeds an exact rational; panics for GF(p), where denominators need
    /// a modular inverse (use [`Ring::from_ratio`]).
    pub fn from_rational(&self, q: BigRational) -> Scalar {
        match self {
            Ring::Rational => Scalar {
                ring: *self,
                repr: Repr::Rat(q),
            },
            Ring::Quad { .. } => Scalar {
                ring: *self,
                repr: Repr::Quad(q, BigRational::zero()),
            },
            Ring::GfP { .. } => panic!("rational literal in GF(p) requires from_ratio"),
        }
    }

    /// The element sqrt(d) of a quadratic extension.
    pub fn radical(&self) -> Result<Scalar> {
        match self {
            Ring::Quad { .. } => Ok(Scalar {
                ring: *self,
                repr: Repr::Quad(BigRational::zero(), BigRational::one()),
            }),
            _ => Err(Error::InvalidRing("radical exists only in Q(sqrt d)".into())),
        }
    }

    /// Builds u + v*sqrt(d) in a quadratic extension.
    pub fn quad_element(&self, u: BigRational, v: BigRational) -> Result<Scalar> {
        match self {
            Ring::Quad { .. } => Ok(Scalar {
                ring: *self,
                repr: Repr::Quad(u, v),
            }),
            _ => Err(Error::InvalidRing("not a quadratic extension".into())),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rational => write!(f, "Q"),
            Ring::GfP { p } => write!(f, "GF({p})"),
            Ring::Quad { d } => write!(f, "Q(sqrt {d})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Rat(BigRational),
    Mod(u64),
    Quad(BigRational, BigRational),
}

/// Element of an exact ring; immutable value in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    ring: Ring,
    repr: Repr,
}

impl Scalar {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(q) => q.is_zero(),
            Repr::Mod(r) => *r == 0,
            Repr::Quad(u, v) => u.is_zero() && v.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rat(q) => q.is_one(),
            Repr::Mod(r) => *r == 1,
            Repr::Quad(u, v) => u.is_one() && v.is_zero(),
        }
    }

    /// Rational value if this scalar lies in Q (for quadratic elements,
    /// only when the radical part vanishes).
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rat(q) => Some(q),
            Repr::Quad(u, v) if v.is_zero() => Some(u),
            _ => None,
        }
    }

    /// Residue value for GF(p) scalars.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Mod(r) => Some(*r),
            _ => None,
        }
    }

    /// (u, v) parts of a quadratic element u + v*sqrt(d).
    pub fn as_quad_parts(&self) -> Option<(&BigRational, &BigRational)> {
        match &self.repr {
            Repr::Quad(u, v) => Some((u, v)),
            _ => None,
        }
    }

    fn same_ring(&self, other: &Scalar) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_ring(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.ring.characteristic() as u128;
                Repr::Mod(((*a as u128 + *b as u128) % p) as u64)
            }
            (Repr::Quad(u1, v1), Repr::Quad(u2, v2)) => Repr::Quad(u1 + u2, v1 + v2),
            _ => unreachable!("ring equality guarantees matching representations"),
        };
        Ok(Scalar {
            ring: self.ring,
            repr,
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_ring(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.ring.characteristic() as u128;
                Repr::Mod(((*a as u128 * *b as u128) % p) as u64)
            }
            (Repr::Quad(u1, v1), Repr::Quad(u2, v2)) => {
                let d = match self.ring {
                    Ring::Quad { d } => BigRational::from_integer(BigInt::from(d)),
                    _ => unreachable!(),
                };
                // (u1 + v1 r)(u2 + v2 r) = u1 u2 + d v1 v2 + (u1 v2 + v1 u2) r
                Repr::Quad(u1 * u2 + &d * v1 * v2, u1 * v2 + v1 * u2)
            }
            _ => unreachable!("ring equality guarantees matching representations"),
        };
        Ok(Scalar {
            ring: self.ring,
            repr,
        })
    }

    fn neg_ref(&self) -> Scalar {
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(-a),
            Repr::Mod(a) => {
                if *a == 0 {
                    Repr::Mod(0)
                } else {
                    Repr::Mod(self.ring.characteristic() - a)
                }
            }
            Repr::Quad(u, v) => Repr::Quad(-u, -v),
        };
        Scalar {
            ring: self.ring,
            repr,
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(a.recip()),
            Repr::Mod(a) => Repr::Mod(mod_inverse(*a, self.ring.characteristic())),
            Repr::Quad(u, v) => {
                let d = match self.ring {
                    Ring::Quad { d } => BigRational::from_integer(BigInt::from(d)),
                    _ => unreachable!(),
                };
                // 1/(u + v r) = (u - v r) / (u^2 - d v^2); the norm is nonzero
                // because d is not a square of a rational.
                let norm = u * u - &d * v * v;
                if norm.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Repr::Quad(u / &norm, -(v / &norm))
            }
        };
        Ok(Scalar {
            ring: self.ring,
            repr,
        })
    }
}

/// Runs one of the three ring operations with full descriptor checking.
pub fn arith(op: ArithOp, a: &Scalar, b: &Scalar) -> Result<Scalar> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs)
                    .expect("scalar operands from different rings")
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rat(q) => write!(f, "{}", fmt_rational(q)),
            Repr::Mod(r) => write!(f, "{r}"),
            Repr::Quad(u, v) => {
                let d = match self.ring {
                    Ring::Quad { d } => d,
                    _ => unreachable!(),
                };
                if v.is_zero() {
                    write!(f, "{}", fmt_rational(u))
                } else if u.is_zero() {
                    write!(f, "{}*sqrt({d})", fmt_rational(v))
                } else if v.is_negative() {
                    write!(f, "{}{}*sqrt({d})", fmt_rational(u), fmt_rational(v))
                } else {
                    write!(f, "{}+{}*sqrt({d})", fmt_rational(u), fmt_rational(v))
                }
            }
        }
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses "n" or "n/d" into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k.saturating_mul(k) <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

fn is_square_free(d: i64) -> bool {
    let mut m = d.unsigned_abs();
    let mut k = 2u64;
    while k.saturating_mul(k) <= m {
        if m.is_multiple_of(k) {
            m /= k;
            if m.is_multiple_of(k) {
                return false;
            }
        }
        k += 1;
    }
    true
}

/// Integer square-free decomposition a = s^2 * d with d square-free.
pub fn square_free_part(a: i64) -> (i64, i64) {
    assert!(a != 0);
    let sign = a.signum();
    let mut m = a.unsigned_abs();
    let mut s = 1i64;
    let mut d = 1i64;
    let mut k = 2u64;
    while k.saturating_mul(k) <= m {
        let mut e = 0;
        while m.is_multiple_of(k) {
            m /= k;
            e += 1;
        }
        s *= (k as i64).pow(e / 2);
        if e % 2 == 1 {
            d *= k as i64;
        }
        k += 1;
    }
    d *= m as i64;
    (s, sign * d)
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p), p prime, a != 0
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "not invertible mod p");
    s0.rem_euclid(p as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Ring::rational().from_ratio(n, d).unwrap()
    }

    #[test]
    fn rational_arith() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(&q(2, 3) * &q(3, 2), q(1, 1));
        assert_eq!(q(2, 3).inverse().unwrap(), q(3, 2));
        assert_eq!(arith(ArithOp::Add, &q(1, 2), &q(1, 3)).unwrap(), q(5, 6));
        assert_eq!(arith(ArithOp::Sub, &q(1, 2), &q(1, 3)).unwrap(), q(1, 6));
        assert_eq!(arith(ArithOp::Mul, &q(1, 2), &q(2, 3)).unwrap(), q(1, 3));
    }

    #[test]
    fn gf2_characteristic_two() {
        let f2 = Ring::gfp(2).unwrap();
        assert_eq!(&f2.one() + &f2.one(), f2.zero());
        assert_eq!(f2.characteristic(), 2);
    }

    #[test]
    fn gf5_inverse() {
        let f5 = Ring::gfp(5).unwrap();
        assert_eq!(f5.from_i64(3).inverse().unwrap(), f5.from_i64(2));
    }

    #[test]
    fn quad_norm_product() {
        let r2 = Ring::quad(2).unwrap();
        let sqrt2 = r2.radical().unwrap();
        let a = &r2.one() + &sqrt2;
        let b = &r2.one() - &sqrt2;
        assert_eq!(&a * &b, r2.from_i64(-1));
    }

    #[test]
    fn quad_radical_inverse() {
        // 1/sqrt(2) = sqrt(2)/2, solved by hand from (u + v sqrt2) sqrt2 = 1
        let r2 = Ring::quad(2).unwrap();
        let sqrt2 = r2.radical().unwrap();
        let inv = sqrt2.inverse().unwrap();
        let half = r2.from_ratio(1, 2).unwrap();
        assert_eq!(inv, &half * &sqrt2);
        assert!((&sqrt2 * &inv).is_one());
    }

    #[test]
    fn characteristic_values() {
        assert_eq!(Ring::rational().characteristic(), 0);
        assert_eq!(Ring::gfp(2).unwrap().characteristic(), 2);
        assert_eq!(Ring::quad(5).unwrap().characteristic(), 0);
    }

    #[test]
    fn descriptor_mismatch_is_an_error() {
        let a = Ring::rational().one();
        let b = Ring::gfp(3).unwrap().one();
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn invalid_descriptors_rejected() {
        assert!(Ring::gfp(4).is_err());
        assert!(Ring::gfp(1).is_err());
        assert!(Ring::quad(4).is_err());
        assert!(Ring::quad(12).is_err());
        assert!(Ring::quad(1).is_err());
        assert!(Ring::quad(-1).is_ok());
        assert!(Ring::quad(-4).is_err());
    }

    #[test]
    fn square_free_decomposition() {
        assert_eq!(square_free_part(4), (2, 1));
        assert_eq!(square_free_part(8), (2, 2));
        assert_eq!(square_free_part(2), (1, 2));
        assert_eq!(square_free_part(-12), (2, -3));
        assert_eq!(square_free_part(45), (3, 5));
    }

    #[test]
    fn zero_inverse_fails() {
        assert!(Ring::rational().zero().inverse().is_err());
        assert!(Ring::gfp(7).unwrap().zero().inverse().is_err());
        assert!(Ring::quad(3).unwrap().zero().inverse().is_err());
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3").unwrap(), parse_rational("6/2").unwrap());
        assert_eq!(
            parse_rational("-5/10").unwrap(),
            parse_rational("-1/2").unwrap()
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
