//! Exact scalar fields: the rationals and prime fields GF(p).
//!
//! Elements are plain values; every operation goes through the field
//! object so that GF(p) residues do not need to carry their modulus.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Largest admissible prime modulus (exclusive).
pub const MAX_PRIME: u32 = 1 << 16;

/// Runtime description of a ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField(u32),
}

impl FieldDescriptor {
    /// Builds a prime-field descriptor, rejecting composite or out-of-range moduli.
    pub fn prime(p: u32) -> Result<Self, Error> {
        PrimeField::new(p).map(|f| FieldDescriptor::PrimeField(f.modulus()))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldDescriptor::PrimeField(_))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField(p) => *p,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Wire form: `"Q"` or `{"GFp": p}`.
impl Serialize for FieldDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Gfp {
            #[serde(rename = "GFp")]
            p: u32,
        }
        match self {
            FieldDescriptor::Rationals => s.serialize_str("Q"),
            FieldDescriptor::PrimeField(p) => Gfp { p: *p }.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for FieldDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Name(String),
            Prime {
                #[serde(rename = "GFp")]
                p: u32,
            },
        }
        match Wire::deserialize(d)? {
            Wire::Name(n) if n == "Q" => Ok(FieldDescriptor::Rationals),
            Wire::Name(n) => {
                Err(serde::de::Error::custom(format!("unsupported field {n:?}; expected \"Q\" or {{\"GFp\": p}}")))
            }
            Wire::Prime { p } => FieldDescriptor::prime(p).map_err(serde::de::Error::custom),
        }
    }
}

/// Exact field arithmetic.
///
/// Implementations must be exact: `add`, `mul` and friends never round.
pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn descriptor(&self) -> FieldDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;

    /// Parses `"n"`, `"-n"` or `"n/d"`.
    fn parse(&self, s: &str) -> Result<Self::Elem, Error>;
    /// Canonical string form: lowest-terms `"n"`/`"n/d"` or a residue.
    fn format(&self, a: &Self::Elem) -> String;

    /// Number of elements for finite fields.
    fn order(&self) -> Option<u64>;
    /// The `i`-th element in the canonical enumeration `0, 1, ..., order-1`.
    ///
    /// Panics for infinite fields.
    fn element(&self, i: u64) -> Self::Elem;

    /// A small random element: uniform for finite fields, small integers or
    /// halves for the rationals.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }
}

/// The field of rational numbers with arbitrary-precision numerator and denominator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add_assign(&self, a: &mut BigRational, b: &BigRational) {
        *a += b;
    }

    fn parse(&self, s: &str) -> Result<BigRational, Error> {
        let bad = || Error::Scalar(format!("{s:?} is not a rational number"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Scalar(format!("{s:?} has a zero denominator")));
        }
        Ok(BigRational::new(num, den))
    }

    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn order(&self) -> Option<u64> {
        None
    }

    fn element(&self, _i: u64) -> BigRational {
        panic!("the rationals are not enumerable by index")
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let num = rng.gen_range(-3i64..=3);
        if rng.gen_ratio(1, 6) {
            BigRational::new(num.into(), 2.into())
        } else {
            self.from_i64(num)
        }
    }
}

impl Rationals {
    /// True when the value is an integer of absolute value at most `bound`.
    pub fn is_small_integer(a: &BigRational, bound: i64) -> bool {
        a.is_integer() && a.numer().abs() <= BigInt::from(bound)
    }
}

/// The prime field GF(p), `2 <= p < 2^16`, with canonical residues `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, Error> {
        if !(2..MAX_PRIME).contains(&p) {
            return Err(Error::InvalidModulus { p, reason: "modulus must satisfy 2 <= p < 65536" });
        }
        if !is_prime(p) {
            return Err(Error::InvalidModulus { p, reason: "modulus is not prime" });
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn reduce_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    fn pow(&self, mut base: u32, mut exp: u32) -> u32 {
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::PrimeField(self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        a * b % self.p
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn from_i64(&self, v: i64) -> u32 {
        self.reduce_i64(v)
    }

    fn parse(&self, s: &str) -> Result<u32, Error> {
        let bad = || Error::Scalar(format!("{s:?} is not an element of GF({})", self.p));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s.trim(), None),
        };
        let reduce = |t: &str| -> Result<u32, Error> {
            let v: BigInt = t.parse().map_err(|_| bad())?;
            let r = ((v % self.p) + self.p) % self.p;
            Ok(u32::try_from(r).expect("residue fits in u32"))
        };
        let num = reduce(num)?;
        match den {
            None => Ok(num),
            Some(d) => {
                let d = self
                    .inv(&reduce(d)?)
                    .ok_or_else(|| Error::Scalar(format!("{s:?} has a denominator divisible by {}", self.p)))?;
                Ok(self.mul(&num, &d))
            }
        }
    }

    fn format(&self, a: &u32) -> String {
        a.to_string()
    }

    fn order(&self) -> Option<u64> {
        Some(self.p as u64)
    }

    fn element(&self, i: u64) -> u32 {
        assert!(i < self.p as u64, "element index {i} out of range for GF({})", self.p);
        i as u32
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_and_out_of_range_moduli() {
        for p in [0, 1, 4, 9, 15, 65535, 65536, 1 << 20] {
            assert!(PrimeField::new(p).is_err(), "{p} accepted");
        }
        for p in [2, 3, 5, 7, 65521] {
            assert!(PrimeField::new(p).is_ok(), "{p} rejected");
        }
    }

    #[test]
    fn prime_field_inverses() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), 1);
        }
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn rational_parse_is_lowest_terms() {
        let q = Rationals;
        let x = q.parse("6/-4").unwrap();
        assert_eq!(q.format(&x), "-3/2");
        assert_eq!(q.format(&q.parse("10/5").unwrap()), "2");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("abc").is_err());
    }

    #[test]
    fn prime_parse_reduces() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.parse("-1").unwrap(), 4);
        assert_eq!(f.parse("12").unwrap(), 2);
        assert_eq!(f.parse("1/2").unwrap(), 3);
        assert!(f.parse("1/5").is_err());
    }

    #[test]
    fn descriptor_wire_form() {
        let q = serde_json::to_string(&FieldDescriptor::Rationals).unwrap();
        assert_eq!(q, "\"Q\"");
        let g = serde_json::to_string(&FieldDescriptor::PrimeField(3)).unwrap();
        assert_eq!(g, "{\"GFp\":3}");
        let back: FieldDescriptor = serde_json::from_str(&g).unwrap();
        assert_eq!(back, FieldDescriptor::PrimeField(3));
        assert!(serde_json::from_str::<FieldDescriptor>("{\"GFp\":4}").is_err());
        assert!(serde_json::from_str::<FieldDescriptor>("\"R\"").is_err());
    }
}
