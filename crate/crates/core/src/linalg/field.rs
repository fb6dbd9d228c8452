//! Exact scalars over the rationals or a prime field.
//!
//! Rationals are kept as reduced fractions with a positive denominator
//! (`num_rational` normalizes on construction); prime-field elements as the
//! canonical residue in `0..p`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field every structure of one computation lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

/// Primes are bounded so products of residues fit in `u128` comfortably and
/// trial division stays instantaneous.
const MAX_PRIME: u64 = 1 << 31;

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_PRIME {
            return Err(Error::parse("field", format!("prime {p} exceeds supported bound {MAX_PRIME}")));
        }
        if !is_prime(p) {
            return Err(Error::parse("field", format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Embeds `num/den`; fails when `den` vanishes in this field.
    pub fn ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Invalid("zero denominator".into()));
        }
        match self {
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let reduce = |x: &BigInt| -> u64 {
                    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits u64")
                };
                let n = Scalar::Residue { value: reduce(num), modulus: p };
                let d = Scalar::Residue { value: reduce(den), modulus: p };
                let d_inv = d
                    .inv()
                    .ok_or_else(|| Error::Invalid(format!("denominator {den} vanishes in GF({p})")))?;
                Ok(&n * &d_inv)
            }
        }
    }

    /// Parses a scalar in canonical form: `"n"` or `"n/d"` with `d > 1` and
    /// `gcd(n, d) = 1` over the rationals, a decimal residue in `0..p` over GF(p).
    pub fn parse_canonical(self, s: &str) -> std::result::Result<Scalar, String> {
        match self {
            Field::Rationals => {
                let (num, den) = split_ratio(s)?;
                if den <= BigInt::zero() {
                    return Err(format!("'{s}': denominator must be positive"));
                }
                if den.is_one() && s.contains('/') {
                    return Err(format!("'{s}': denominator 1 must be omitted"));
                }
                if !num.gcd(&den).is_one() {
                    return Err(format!("'{s}': fraction is not reduced"));
                }
                if num.is_zero() && s.starts_with('-') {
                    return Err(format!("'{s}': negative zero"));
                }
                Ok(Scalar::Rational(BigRational::new_raw(num, den)))
            }
            Field::Prime(p) => {
                if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(format!("'{s}': expected a decimal residue"));
                }
                if s.len() > 1 && s.starts_with('0') {
                    return Err(format!("'{s}': leading zeros"));
                }
                let v: u64 = s.parse().map_err(|_| format!("'{s}': residue out of range"))?;
                if v >= p {
                    return Err(format!("'{s}': residue not in 0..{p}"));
                }
                Ok(Scalar::Residue { value: v, modulus: p })
            }
        }
    }

    /// Accepts any rational literal and maps it into this field.
    pub fn parse_lenient(self, s: &str) -> std::result::Result<Scalar, String> {
        let (num, den) = split_ratio(s)?;
        self.ratio(&num, &den).map_err(|e| format!("'{s}': {e}"))
    }
}

fn split_ratio(s: &str) -> std::result::Result<(BigInt, BigInt), String> {
    let parse_int = |t: &str| -> std::result::Result<BigInt, String> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("'{s}': not a rational literal"));
        }
        if digits.len() > 1 && digits.starts_with('0') {
            return Err(format!("'{s}': leading zeros"));
        }
        t.parse::<BigInt>().map_err(|e| format!("'{s}': {e}"))
    };
    match s.split_once('/') {
        None => Ok((parse_int(s)?, BigInt::one())),
        Some((n, d)) => Ok((parse_int(n)?, parse_int(d)?)),
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "Q" {
            return Ok(Field::Rationals);
        }
        if let Some(inner) = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
            let p: u64 = inner
                .parse()
                .map_err(|_| Error::parse("field", format!("bad characteristic in '{s}'")))?;
            return Field::prime(p);
        }
        Err(Error::parse("field", format!("expected \"Q\" or \"GF(p)\", found '{s}'")))
    }
}

/// One exact field element. Arithmetic between elements of different fields
/// is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Rational(q) => Some(Scalar::Rational(q.recip())),
            Scalar::Residue { value, modulus } => {
                // Fermat: a^(p-2)
                let p = *modulus as u128;
                let mut base = *value as u128;
                let mut exp = p - 2;
                let mut acc = 1u128;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Some(Scalar::Residue {
                    value: acc as u64,
                    modulus: *modulus,
                })
            }
        }
    }

    /// Canonical text encoding used by every file format.
    pub fn to_canonical(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("{}", Error::FieldMismatch(a.field().to_string(), b.field().to_string()))
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}
