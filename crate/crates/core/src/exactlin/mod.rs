//! Exact linear algebra over the rationals and prime fields.
//!
//! Every dimension computed elsewhere in the crate (hom spaces, Ext groups,
//! homology) goes through the routines here. There is no floating point:
//! rationals are arbitrary precision and always kept in lowest terms, prime
//! field elements are reduced representatives in `[0, p)`.

mod matrix;

pub use matrix::{Matrix, Rref, Vector};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default prime for the finite-field mode.
pub const DEFAULT_PRIME: u64 = 32003;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("matrix is singular")]
    Singular,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, LinalgError>;

/// The ground field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// A prime field; `p` must be prime and small enough that products of
    /// two residues fit in a `u64`.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= (1 << 32) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Fp {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Reduce a rational into this field. Fails in 𝔽_p when `p` divides the
    /// denominator.
    pub fn from_rational(self, q: &BigRational) -> Option<Scalar> {
        match self {
            Field::Rational => Some(Scalar::Q(q.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let num = mod_big(q.numer(), &pb);
                let den = mod_big(q.denom(), &pb);
                if den == 0 {
                    return None;
                }
                let v = (num as u128 * inv_mod(den, p) as u128 % p as u128) as u64;
                Some(Scalar::Fp { value: v, modulus: p })
            }
        }
    }

    /// Parse `"a"` or `"a/b"` into this field.
    pub fn parse(self, s: &str) -> Result<Scalar> {
        let q = parse_rational(s)?;
        self.from_rational(&q)
            .ok_or_else(|| LinalgError::Parse(s.to_string()))
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

impl FromStr for Field {
    type Err = LinalgError;

    /// Accepts `q`, `Q`, `p`, `p:<prime>` or `F_<prime>`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        match t {
            "q" | "Q" | "rational" => return Ok(Field::Rational),
            "p" | "P" => return Field::prime(DEFAULT_PRIME),
            _ => {}
        }
        let digits = t
            .strip_prefix("p:")
            .or_else(|| t.strip_prefix("F_"))
            .or_else(|| t.strip_prefix("f_"))
            .ok_or_else(|| LinalgError::Parse(s.to_string()))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| LinalgError::Parse(s.to_string()))?;
        Field::prime(p)
    }
}

/// An element of ℚ or 𝔽_p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// The value as an `i64` when it is an integer (ℚ) or a residue (𝔽_p),
    /// using the symmetric range for residues.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Q(_) => None,
            Scalar::Fp { value, modulus } => {
                let v = *value as i64;
                let p = *modulus as i64;
                Some(if v > p / 2 { v - p } else { v })
            }
        }
    }

    fn check(&self, other: &Scalar) {
        debug_assert_eq!(self.field(), other.field(), "mixed-field arithmetic");
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => write!(f, "{q}"),
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { value: a, modulus }, Scalar::Fp { value: b, .. }) => Scalar::Fp {
                value: (a + b) % modulus,
                modulus: *modulus,
            },
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { value: a, modulus }, Scalar::Fp { value: b, .. }) => Scalar::Fp {
                value: (a + modulus - b) % modulus,
                modulus: *modulus,
            },
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { value: a, modulus }, Scalar::Fp { value: b, .. }) => Scalar::Fp {
                value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let err = || LinalgError::Parse(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(num, den))
}

fn mod_big(v: &BigInt, p: &BigInt) -> u64 {
    let r = v % p;
    let r = if r.is_negative() { r + p } else { r };
    r.to_u64().expect("residue fits in u64")
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let mut result: u128 = 1;
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    result as u64
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = Field::Rational;
        let a = q.parse("6/-4").unwrap();
        match &a {
            Scalar::Q(r) => {
                assert_eq!(r.numer(), &BigInt::from(-3));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => unreachable!(),
        }
        assert_eq!(a.to_string(), "-3/2");
    }

    #[test]
    fn prime_field_residues() {
        let f = Field::prime(7).unwrap();
        let a = f.int(-1);
        assert_eq!(a, Scalar::Fp { value: 6, modulus: 7 });
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        assert_eq!(f.parse("1/2").unwrap(), f.int(4));
        assert!(f.parse("1/7").is_err());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("p".parse::<Field>().unwrap(), Field::Prime(DEFAULT_PRIME));
        assert_eq!("p:101".parse::<Field>().unwrap(), Field::Prime(101));
        assert!("p:100".parse::<Field>().is_err());
    }
}
