use num_complex::Complex64;

use super::{FieldScalar, Scalar};
use crate::error::{Error, Result};

/// Floating complex number used by the numeric backend.
pub type CF = Complex64;

/// Rejects NaN and infinite components.
pub fn ensure_finite(z: CF) -> Result<CF> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite)
    }
}

/// Determinants below this modulus count as degenerate for complex sampling.
pub const COMPLEX_DET_FLOOR: f64 = 1e-3;

impl Scalar for CF {
    fn zero() -> Self {
        CF::new(0.0, 0.0)
    }
    fn one() -> Self {
        CF::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        CF::new(v as f64, 0.0)
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
        self.norm() == 0.0
    }
    fn near_zero(&self) -> bool {
        self.norm() < COMPLEX_DET_FLOOR
    }
}

impl FieldScalar for CF {
    fn inv(&self) -> Result<Self> {
        if Scalar::is_zero(self) {
            return Err(Error::ZeroValue("complex inverse of 0".into()));
        }
        ensure_finite(self.inv())
    }
    fn is_one(&self) -> bool {
        (self - CF::new(1.0, 0.0)).norm() == 0.0
    }
}

/// First-order jet `val + ε·tan`: a point of a complex configuration family
/// together with its velocity, so that `D = d/dε` is a derivation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    pub val: CF,
    pub tan: CF,
}

impl Jet {
    pub fn new(val: CF, tan: CF) -> Self {
        Jet { val, tan }
    }

    pub fn constant(val: CF) -> Self {
        Jet {
            val,
            tan: CF::new(0.0, 0.0),
        }
    }

    /// D(a)/a evaluated at the base point.
    pub fn dlog(&self) -> Result<CF> {
        ensure_finite(self.tan / self.val)
    }
}

impl Scalar for Jet {
    fn zero() -> Self {
        Jet::constant(CF::new(0.0, 0.0))
    }
    fn one() -> Self {
        Jet::constant(CF::new(1.0, 0.0))
    }
    fn from_i64(v: i64) -> Self {
        Jet::constant(CF::new(v as f64, 0.0))
    }
    fn add(&self, o: &Self) -> Self {
        Jet::new(self.val + o.val, self.tan + o.tan)
    }
    fn sub(&self, o: &Self) -> Self {
        Jet::new(self.val - o.val, self.tan - o.tan)
    }
    fn mul(&self, o: &Self) -> Self {
        Jet::new(self.val * o.val, self.val * o.tan + self.tan * o.val)
    }
    fn neg(&self) -> Self {
        Jet::new(-self.val, -self.tan)
    }
    fn is_zero(&self) -> bool {
        self.val.norm() == 0.0
    }
    fn near_zero(&self) -> bool {
        self.val.norm() < COMPLEX_DET_FLOOR
    }
}

impl FieldScalar for Jet {
    fn inv(&self) -> Result<Self> {
        if Scalar::is_zero(self) {
            return Err(Error::ZeroValue("jet inverse of 0".into()));
        }
        let iv = self.val.inv();
        Ok(Jet::new(ensure_finite(iv)?, ensure_finite(-self.tan * iv * iv)?))
    }
    fn is_one(&self) -> bool {
        (self.val - CF::new(1.0, 0.0)).norm() == 0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jet_is_a_derivation() {
        let a = Jet::new(CF::new(0.3, 1.0), CF::new(2.0, -0.5));
        let b = Jet::new(CF::new(-1.2, 0.4), CF::new(0.1, 0.7));
        let ab = a.mul(&b);
        let leibniz = a.val * b.tan + b.val * a.tan;
        assert!((ab.tan - leibniz).norm() < 1e-15);
        let q = a.div(&b).unwrap();
        let back = q.mul(&b);
        assert!((back.val - a.val).norm() < 1e-14 && (back.tan - a.tan).norm() < 1e-14);
    }

    #[test]
    fn non_finite_is_rejected() {
        assert_eq!(ensure_finite(CF::new(f64::NAN, 0.0)), Err(Error::NonFinite));
        assert!(ensure_finite(CF::new(1.0, 2.0)).is_ok());
    }
}
