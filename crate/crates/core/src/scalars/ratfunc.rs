use std::fmt;

use num_complex::Complex64;

use super::{parse_rat, FieldScalar, Poly, Rat, Scalar};
use crate::error::{Error, Result};

/// Element of ℚ(t) in canonical form: reduced fraction with monic denominator.
///
/// Because the form is canonical, derived equality and ordering are field
/// equality and a total order usable for map keys.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroValue("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::from_poly(Poly::zero()));
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        let lc = den.lc();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn t() -> Self {
        Self::from_poly(Poly::t())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.den.is_constant() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn one_minus(&self) -> RatFunc {
        RatFunc::one().sub(self)
    }

    /// d/dt by the quotient rule.
    pub fn derive(&self) -> RatFunc {
        if self.den.is_constant() {
            return Self::from_poly(self.num.derivative());
        }
        let top = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        RatFunc::new(top, self.den.mul(&self.den)).expect("nonzero denominator")
    }

    /// Logarithmic derivative D(a)/a.
    pub fn dlog(&self) -> Result<RatFunc> {
        self.derive().div(self)
    }

    pub fn eval_at(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_at_complex(&self, z: Complex64) -> Result<Complex64> {
        let d = self.den.eval_complex(z);
        if d.norm() == 0.0 {
            return Err(Error::PoleAtPoint);
        }
        super::ensure_finite(self.num.eval_complex(z) / d)
    }

    pub fn pow(&self, n: i64) -> Result<RatFunc> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let e = n.unsigned_abs() as u32;
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Serialization form `[c0,..]` or `[c0,..]/[d0,..]`.
    pub fn to_list(&self) -> String {
        if self.den == Poly::one() {
            self.num.to_list()
        } else {
            format!("{}/{}", self.num.to_list(), self.den.to_list())
        }
    }

    pub fn parse_list(s: &str) -> Result<RatFunc> {
        let s = s.trim();
        if !s.starts_with('[') {
            return Ok(Self::constant(parse_rat(s)?));
        }
        match s.split_once("]/[") {
            Some((n, d)) => RatFunc::new(
                Poly::parse_list(&format!("{n}]"))?,
                Poly::parse_list(&format!("[{d}"))?,
            ),
            None => Ok(Self::from_poly(Poly::parse_list(s)?)),
        }
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(super::rat_int(v))
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RatFunc::new(self.num.add(&other.num), self.den.clone()).expect("nonzero");
        }
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("nonzero")
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero")
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl FieldScalar for RatFunc {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroValue("inverse of 0 in Q(t)".into()));
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }
    fn is_one(&self) -> bool {
        self.num == self.den
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, rat_int};

    fn poly(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(poly(n), poly(d)).unwrap()
    }

    #[test]
    fn derive_examples() {
        assert_eq!(RatFunc::from_poly(poly(&[0, 0, 1])).derive(), rf(&[0, 2], &[1]));
        // 1/(1-t) -> 1/(1-t)^2
        let a = rf(&[1], &[1, -1]);
        let expected = rf(&[1], &[1, -2, 1]);
        assert_eq!(a.derive(), expected);
        assert!(RatFunc::from_i64(5).derive().is_zero());
    }

    #[test]
    fn derive_matches_difference_quotient() {
        let a = rf(&[1], &[1, -1]);
        let x = rat(1, 3);
        let h = rat(1, 1_000_000);
        let fd = (a.eval_at(&(&x + &h)).unwrap() - a.eval_at(&(&x - &h)).unwrap()) / (rat_int(2) * &h);
        let exact = a.derive().eval_at(&x).unwrap();
        let err = num_traits::Signed::abs(&(fd - exact));
        assert!(err < rat(1, 1_000_000));
    }

    #[test]
    fn canonical_form_reduces_and_makes_denominator_monic() {
        let a = rf(&[-2, 0, 2], &[-2, 2]); // 2(t^2-1) / 2(t-1) = t+1
        assert_eq!(a, rf(&[1, 1], &[1]));
        let b = rf(&[1], &[0, 2]);
        assert!(b.den().is_monic());
        assert_eq!(b.num(), &Poly::constant(rat(1, 2)));
    }

    #[test]
    fn eval_examples() {
        let a = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(a.eval_at(&rat_int(3)).unwrap(), rat_int(4));
        assert_eq!(RatFunc::t().eval_at(&rat(1, 2)).unwrap(), rat(1, 2));
        let inv_t = rf(&[1], &[0, 1]);
        assert_eq!(inv_t.eval_at(&rat_int(0)), Err(Error::PoleAtPoint));
    }

    #[test]
    fn list_round_trip() {
        let a = rf(&[1, 2], &[3, 0, 1]);
        assert_eq!(RatFunc::parse_list(&a.to_list()).unwrap(), a);
        assert_eq!(RatFunc::parse_list("-3/4").unwrap(), RatFunc::constant(rat(-3, 4)));
    }
}
