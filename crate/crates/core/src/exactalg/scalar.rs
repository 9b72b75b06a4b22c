//! Exact field elements: arbitrary-precision rationals and odd prime fields.
//!
//! Every scalar carries a [`FieldTag`]; arithmetic between scalars of
//! different fields is a programming error and panics. Constructors that
//! take user input return [`Error`](crate::Error) instead.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Identifies the field a scalar, matrix or vector lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldTag {
    /// The rational numbers.
    Rational,
    /// The prime field with the given odd modulus p >= 5.
    Fp(u64),
}

impl FieldTag {
    /// Validated prime-field tag. Characteristics 2 and 3 are excluded:
    /// polarization of symmetric forms divides by 2 and several sign-heavy
    /// identities are only tested away from 3.
    pub fn fp(p: u64) -> Result<Self> {
        if p < 5 || !is_prime_u64(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(FieldTag::Fp(p))
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, FieldTag::Rational)
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            FieldTag::Rational => None,
            FieldTag::Fp(p) => Some(*p),
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "rational"),
            FieldTag::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

impl std::str::FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "rational" {
            return Ok(FieldTag::Rational);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p.parse().map_err(|_| Error::FieldParse(s.to_string()))?;
            return FieldTag::fp(p);
        }
        Err(Error::FieldParse(s.to_string()))
    }
}

/// An exact field element: a rational in lowest terms (positive denominator,
/// maintained by `BigRational`) or a reduced residue mod an odd prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(tag: FieldTag) -> Self {
        match tag {
            FieldTag::Rational => Scalar::Rational(BigRational::zero()),
            FieldTag::Fp(p) => Scalar::Fp {
                value: 0,
                modulus: p,
            },
        }
    }

    pub fn one(tag: FieldTag) -> Self {
        match tag {
            FieldTag::Rational => Scalar::Rational(BigRational::one()),
            FieldTag::Fp(p) => Scalar::Fp {
                value: 1,
                modulus: p,
            },
        }
    }

    pub fn from_i64(n: i64, tag: FieldTag) -> Self {
        match tag {
            FieldTag::Rational => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldTag::Fp(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp {
                    value: r,
                    modulus: p,
                }
            }
        }
    }

    pub fn from_u64(n: u64, tag: FieldTag) -> Self {
        match tag {
            FieldTag::Rational => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldTag::Fp(p) => Scalar::Fp {
                value: n % p,
                modulus: p,
            },
        }
    }

    pub fn from_ratio(num: BigInt, den: BigInt, tag: FieldTag) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match tag {
            FieldTag::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldTag::Fp(p) => {
                let n = bigint_mod(&num, p);
                let d = bigint_mod(&den, p);
                if d == 0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Fp {
                    value: mulmod(n, invmod(d, p)?, p),
                    modulus: p,
                })
            }
        }
    }

    pub fn tag(&self) -> FieldTag {
        match self {
            Scalar::Rational(_) => FieldTag::Rational,
            Scalar::Fp { modulus, .. } => FieldTag::Fp(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    /// True for rationals with denominator 1; prime-field elements always
    /// count as integers.
    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_integer(),
            Scalar::Fp { .. } => true,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Fp { value, modulus } => Ok(Scalar::Fp {
                value: invmod(*value, *modulus)?,
                modulus: *modulus,
            }),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.tag());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Residue as a nonnegative u64 for prime-field scalars.
    pub fn fp_value(&self) -> Option<u64> {
        match self {
            Scalar::Fp { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Fp { .. } => None,
        }
    }

    fn assert_same_tag(&self, other: &Scalar) {
        assert_eq!(
            self.tag(),
            other.tag(),
            "scalar arithmetic across different fields"
        );
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt, $fp:expr) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.assert_same_tag(rhs);
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a $op b),
                    (
                        Scalar::Fp { value: a, modulus: p },
                        Scalar::Fp { value: b, .. },
                    ) => Scalar::Fp { value: $fp(*a, *b, *p), modulus: *p },
                    _ => unreachable!(),
                }
            }
        }

        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, +, |a: u64, b: u64, p: u64| addmod(a, b, p));
scalar_binop!(Sub, sub, -, |a: u64, b: u64, p: u64| submod(a, b, p));
scalar_binop!(Mul, mul, *, |a: u64, b: u64, p: u64| mulmod(a, b, p));

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[inline]
pub(crate) fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn invmod(a: u64, p: u64) -> Result<u64> {
    if a.is_multiple_of(p) {
        return Err(Error::DivisionByZero);
    }
    Ok(powmod(a, p - 2, p))
}

pub(crate) fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    use num_traits::ToPrimitive;
    let m = n % BigInt::from(p);
    let m = if m.is_negative() {
        m + BigInt::from(p)
    } else {
        m
    };
    m.to_u64().expect("residue fits in u64")
}

/// Deterministic Miller–Rabin for u64 (the listed bases cover all of u64).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms() {
        let s = Scalar::from_ratio(BigInt::from(6), BigInt::from(-4), FieldTag::Rational).unwrap();
        match &s {
            Scalar::Rational(r) => {
                assert_eq!(r.numer(), &BigInt::from(-3));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => panic!("expected rational"),
        }
    }

    #[test]
    fn fp_field_axioms_smoke() {
        let tag = FieldTag::fp(7).unwrap();
        for a in 0..7u64 {
            for b in 0..7u64 {
                let x = Scalar::from_u64(a, tag);
                let y = Scalar::from_u64(b, tag);
                assert_eq!(&x + &y, &y + &x);
                assert_eq!(&x * &y, &y * &x);
                if b != 0 {
                    let q = &x * &y.inv().unwrap();
                    assert_eq!(&q * &y, x);
                }
            }
        }
    }

    #[test]
    fn small_characteristics_rejected() {
        assert!(FieldTag::fp(2).is_err());
        assert!(FieldTag::fp(3).is_err());
        assert!(FieldTag::fp(4).is_err());
        assert!(FieldTag::fp(5).is_ok());
        assert!(FieldTag::fp(10007).is_ok());
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime_u64(10007));
        assert!(!is_prime_u64(10001));
        assert!(is_prime_u64((1u64 << 61) - 1));
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixed_field_arithmetic_panics() {
        let a = Scalar::from_u64(1, FieldTag::fp(7).unwrap());
        let b = Scalar::from_u64(1, FieldTag::Rational);
        let _ = &a + &b;
    }

    #[test]
    fn field_tag_parsing() {
        assert_eq!("rational".parse::<FieldTag>().unwrap(), FieldTag::Rational);
        assert_eq!("fp:10007".parse::<FieldTag>().unwrap(), FieldTag::Fp(10007));
        assert!("fp:6".parse::<FieldTag>().is_err());
        assert!("real".parse::<FieldTag>().is_err());
    }
}
