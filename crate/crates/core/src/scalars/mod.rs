//! Exact and floating ground fields.
//!
//! `Rat` is arbitrary-precision ℚ, [`Poly`] and [`RatFunc`] realize ℚ\[t\] and
//! ℚ(t) with the derivation d/dt, and [`Jet`] is a complex value carrying a
//! tangent so the numeric backend also has a nontrivial derivation.

mod complex;
mod coprime;
mod modp;
mod partial;
mod poly;
mod ratfunc;

pub use complex::{ensure_finite, Jet, CF};
pub use coprime::{coprime_basis, factor_over_basis, integer_coprime_basis, CoprimeBasis, Factor};
pub use partial::{dlog_fractions, partial_fractions, FracKey};
pub use poly::{rat_to_f64, Poly};
pub use ratfunc::RatFunc;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always reduced with positive denominator.
pub type Rat = BigRational;

/// Builds `n/d` from machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    let d: BigInt = d
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(n, d))
}

pub fn format_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Ring operations shared by every coordinate domain.
pub trait Scalar: Clone + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Whether the value is too close to zero to be used as a generic determinant.
    /// Exact domains only reject zero itself.
    fn near_zero(&self) -> bool {
        self.is_zero()
    }
}

/// A [`Scalar`] domain that is a field.
pub trait FieldScalar: Scalar {
    fn inv(&self) -> Result<Self>;

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    fn is_one(&self) -> bool;
}

impl Scalar for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        rat_int(v)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl FieldScalar for Rat {
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::ZeroValue("inverse of 0".into()));
        }
        Ok(self.recip())
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// Sign of a rational as -1, 0 or 1.
pub fn rat_signum(q: &Rat) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}
