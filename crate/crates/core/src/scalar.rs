//! Exact field scalars: arbitrary-precision rationals and prime fields F_p.
//!
//! Every number in the engine is a `FieldScalar`. There is no floating point
//! anywhere; equality of scalars is exact equality. The two variants never
//! mix: combining scalars from different fields is a `FieldMismatch` error,
//! and the arithmetic operators panic on mismatch (callers validate fields
//! once at construction time).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::ScalarError;

/// A coefficient field: the rationals, or F_p for a prime p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    /// Prime field with the given modulus. Primality is checked by
    /// [`Field::prime`]; constructing the variant directly is possible but
    /// the CLI and all constructors go through the checked path.
    Prime(u64),
}

impl Field {
    /// F_p, verifying that `p` is prime.
    pub fn prime(p: u64) -> Result<Field, ScalarError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    pub fn zero(&self) -> FieldScalar {
        match self {
            Field::Rational => FieldScalar::Rational(BigRational::zero()),
            Field::Prime(p) => FieldScalar::Prime { residue: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> FieldScalar {
        match self {
            Field::Rational => FieldScalar::Rational(BigRational::one()),
            Field::Prime(p) => FieldScalar::Prime { residue: 1 % *p, modulus: *p },
        }
    }

    /// The integer `n` as an element of this field.
    pub fn from_i64(&self, n: i64) -> FieldScalar {
        match self {
            Field::Rational => FieldScalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                FieldScalar::Prime { residue: m, modulus: *p }
            }
        }
    }

    /// Parse `"a"` or `"a/b"`. Over F_p the denominator is inverted mod p.
    pub fn parse(&self, s: &str) -> Result<FieldScalar, ScalarError> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s, None),
        };
        let n: BigInt = num
            .parse()
            .map_err(|_| ScalarError::Parse(s.to_string()))?;
        let d: BigInt = match den {
            Some(b) => b.parse().map_err(|_| ScalarError::Parse(s.to_string()))?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(ScalarError::Parse(s.to_string()));
        }
        match self {
            Field::Rational => Ok(FieldScalar::Rational(BigRational::new(n, d))),
            Field::Prime(p) => {
                let pm = BigInt::from(*p);
                let nr = ((n % &pm) + &pm) % &pm;
                let dr = ((d % &pm) + &pm) % &pm;
                let nr: u64 = nr.try_into().unwrap();
                let dr: u64 = dr.try_into().unwrap();
                let num = FieldScalar::Prime { residue: nr, modulus: *p };
                let den = FieldScalar::Prime { residue: dr, modulus: *p };
                num.checked_div(&den)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An element of Q or of F_p.
///
/// Invariants: rationals are kept normalized by `BigRational` (positive
/// denominator, gcd 1); prime-field residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldScalar {
    Rational(BigRational),
    Prime { residue: u64, modulus: u64 },
}

impl FieldScalar {
    pub fn field(&self) -> Field {
        match self {
            FieldScalar::Rational(_) => Field::Rational,
            FieldScalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_zero(),
            FieldScalar::Prime { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_one(),
            FieldScalar::Prime { residue, modulus } => *residue == 1 % *modulus,
        }
    }

    fn same_field(&self, other: &FieldScalar) -> Result<(), ScalarError> {
        let (a, b) = (self.field(), other.field());
        if a == b {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(a, b))
        }
    }

    pub fn checked_add(&self, other: &FieldScalar) -> Result<FieldScalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a + b),
            (
                FieldScalar::Prime { residue: a, modulus: p },
                FieldScalar::Prime { residue: b, .. },
            ) => FieldScalar::Prime { residue: add_mod(*a, *b, *p), modulus: *p },
            _ => unreachable!(),
        })
    }

    pub fn checked_mul(&self, other: &FieldScalar) -> Result<FieldScalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a * b),
            (
                FieldScalar::Prime { residue: a, modulus: p },
                FieldScalar::Prime { residue: b, .. },
            ) => FieldScalar::Prime { residue: mul_mod(*a, *b, *p), modulus: *p },
            _ => unreachable!(),
        })
    }

    /// Multiplicative inverse; `DivisionByZero` on zero.
    pub fn inv(&self) -> Result<FieldScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(r.recip()),
            FieldScalar::Prime { residue, modulus } => FieldScalar::Prime {
                residue: inv_mod(*residue, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, other: &FieldScalar) -> Result<FieldScalar, ScalarError> {
        self.checked_mul(&other.inv()?)
    }

    /// `self^e` for a signed exponent; negative exponents invert first.
    pub fn pow_i64(&self, e: i64) -> Result<FieldScalar, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.field().one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&b)?;
            }
            b = b.clone().checked_mul(&b)?;
            k >>= 1;
        }
        Ok(acc)
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldScalar::Prime { residue, .. } => write!(f, "{residue}"),
        }
    }
}

macro_rules! op_impl {
    ($trait:ident, $fn:ident, $checked:ident) => {
        impl $trait for &FieldScalar {
            type Output = FieldScalar;
            fn $fn(self, rhs: &FieldScalar) -> FieldScalar {
                self.$checked(rhs).expect("field mismatch in scalar arithmetic")
            }
        }
        impl $trait for FieldScalar {
            type Output = FieldScalar;
            fn $fn(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$fn(&rhs)
            }
        }
    };
}

op_impl!(Add, add, checked_add);
op_impl!(Mul, mul, checked_mul);

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(-r),
            FieldScalar::Prime { residue, modulus } => FieldScalar::Prime {
                residue: if *residue == 0 { 0 } else { modulus - residue },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -&self
    }
}

impl Sub for &FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: &FieldScalar) -> FieldScalar {
        self + &(-rhs)
    }
}

impl Sub for FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: FieldScalar) -> FieldScalar {
        &self - &rhs
    }
}

impl AddAssign<&FieldScalar> for FieldScalar {
    fn add_assign(&mut self, rhs: &FieldScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldScalar> for FieldScalar {
    fn sub_assign(&mut self, rhs: &FieldScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&FieldScalar> for FieldScalar {
    fn mul_assign(&mut self, rhs: &FieldScalar) {
        *self = &*self * rhs;
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p); a is nonzero and p prime
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i128) as u64
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Multiplicative order of a nonzero element of F_p (or of a rational that is
/// a root of unity, i.e. ±1). `None` if the element has infinite order.
pub fn multiplicative_order(x: &FieldScalar) -> Option<u64> {
    if x.is_zero() {
        return None;
    }
    match x {
        FieldScalar::Rational(r) => {
            if r.is_one() {
                Some(1)
            } else if (-r).is_one() {
                Some(2)
            } else {
                None
            }
        }
        FieldScalar::Prime { modulus, .. } => {
            let mut acc = x.clone();
            for k in 1..*modulus {
                if acc.is_one() {
                    return Some(k);
                }
                acc = acc * x.clone();
            }
            Some(*modulus - 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction_rejects_composites() {
        assert!(Field::prime(5).is_ok());
        assert!(Field::prime(2).is_ok());
        assert!(matches!(Field::prime(6), Err(ScalarError::NotPrime(6))));
        assert!(matches!(Field::prime(1), Err(ScalarError::NotPrime(1))));
        assert!(matches!(Field::prime(91), Err(ScalarError::NotPrime(91)))); // 7 * 13
    }

    #[test]
    fn rational_arithmetic_is_normalized() {
        let f = Field::Rational;
        let half = f.parse("1/2").unwrap();
        let third = f.parse("1/3").unwrap();
        let sum = &half + &third;
        assert_eq!(sum, f.parse("5/6").unwrap());
        assert_eq!(&half * &f.from_i64(2), f.one());
        assert_eq!(f.parse("2/4").unwrap(), half);
        assert_eq!(f.parse("-3/-6").unwrap(), half);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        let two = f.from_i64(2);
        let three = f.from_i64(3);
        assert_eq!(&two * &three, f.one());
        assert_eq!(&two + &three, f.zero());
        assert_eq!(two.inv().unwrap(), three);
        assert_eq!(f.from_i64(-1), f.from_i64(4));
        assert_eq!(f.parse("1/2").unwrap(), three);
    }

    #[test]
    fn mixed_fields_error() {
        let a = Field::Rational.one();
        let b = Field::prime(5).unwrap().one();
        assert!(a.checked_add(&b).is_err());
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn signed_powers() {
        let f = Field::Rational;
        let two = f.from_i64(2);
        assert_eq!(two.pow_i64(10).unwrap(), f.from_i64(1024));
        assert_eq!(two.pow_i64(-2).unwrap(), f.parse("1/4").unwrap());
        assert_eq!(two.pow_i64(0).unwrap(), f.one());
        let g = Field::prime(5).unwrap();
        assert_eq!(g.from_i64(2).pow_i64(-1).unwrap(), g.from_i64(3));
    }

    #[test]
    fn orders() {
        let g = Field::prime(5).unwrap();
        assert_eq!(multiplicative_order(&g.from_i64(2)), Some(4));
        assert_eq!(multiplicative_order(&g.from_i64(4)), Some(2));
        assert_eq!(multiplicative_order(&g.from_i64(1)), Some(1));
        assert_eq!(multiplicative_order(&Field::Rational.from_i64(-1)), Some(2));
        assert_eq!(multiplicative_order(&Field::Rational.from_i64(2)), None);
    }
}
