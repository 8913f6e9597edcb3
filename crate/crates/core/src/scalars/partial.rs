//! Partial fractions over a coprime basis: a canonical ℚ-basis for the part
//! of ℚ(t) whose denominators factor over the basis.

use std::fmt;

use num_traits::Zero;

use super::coprime::{CoprimeBasis, Factor};
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::Rat;
use crate::error::{Error, Result};

/// `t^degree` when `pole` is `None`, otherwise `t^degree / factor^power` with
/// `degree < deg factor` and the factor monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FracKey {
    pub pole: Option<(Factor, u32)>,
    pub degree: usize,
}

impl fmt::Display for FracKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = match self.degree {
            0 => "1".to_string(),
            1 => "t".to_string(),
            d => format!("t^{d}"),
        };
        match &self.pole {
            None => write!(f, "{mono}"),
            Some((p, 1)) => write!(f, "{mono}/{p}"),
            Some((p, k)) => write!(f, "{mono}/{p}^{k}"),
        }
    }
}

/// `s` with `s·a ≡ 1 (mod m)`.
fn inverse_mod(a: &Poly, m: &Poly) -> Result<Poly> {
    let (mut r0, mut r1) = (m.clone(), a.divrem(m)?.1);
    let (mut s0, mut s1) = (Poly::zero(), Poly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1)?;
        let s = s0.sub(&q.mul(&s1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
    }
    let g = r0.constant_value().filter(|c| !c.is_zero()).ok_or_else(|| Error::NotCovered("non-coprime factors".into()))?;
    Ok(s0.scale(&g.recip()).divrem(m)?.1)
}

fn push_coeffs(out: &mut Vec<(FracKey, Rat)>, p: &Poly, pole: Option<(Factor, u32)>) {
    for (j, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out.push((FracKey { pole: pole.clone(), degree: j }, c.clone()));
        }
    }
}

/// Coordinates of `v` in the partial-fraction basis over the nonconstant
/// elements of `basis` (made monic). Errors if the denominator of `v` does
/// not factor over the basis.
pub fn partial_fractions(v: &RatFunc, basis: &CoprimeBasis) -> Result<Vec<(FracKey, Rat)>> {
    let den = v.den();
    let (q, r) = v.num().divrem(den)?;
    let mut out = Vec::new();
    push_coeffs(&mut out, &q, None);
    if den.is_constant() {
        return Ok(out);
    }
    let exps = basis.exponents(&RatFunc::from_poly(den.clone()))?;
    let mut parts: Vec<(&Factor, u32, Poly)> = Vec::new();
    let mut covered = Poly::one();
    for (i, e) in exps {
        if basis.elements()[i].is_constant() {
            continue;
        }
        if e < 0 {
            return Err(Error::NotCovered(format!("{den}")));
        }
        let f = &basis.monic(i).0;
        let pe = f.poly.pow(e as u32);
        covered = covered.mul(&pe);
        parts.push((f, e as u32, pe));
    }
    if covered != den.monic() {
        return Err(Error::NotCovered(format!("{den}")));
    }
    for (f, e, pe) in &parts {
        let p: &Poly = &f.poly;
        let rest = covered.div_exact(pe).ok_or_else(|| Error::NotCovered(format!("{den}")))?;
        // numerator over p^e, reduced below deg p^e
        let mut n = r.mul(&inverse_mod(&rest, pe)?).divrem(pe)?.1;
        // n = Σ c_k p^k, so n/p^e = Σ c_k / p^(e−k)
        let mut k = 0u32;
        while !n.is_zero() {
            let (quot, c) = n.divrem(p)?;
            push_coeffs(&mut out, &c, Some(((*f).clone(), e - k)));
            n = quot;
            k += 1;
        }
    }
    Ok(out)
}

/// Coordinates of `Dlog v = v′/v`, read off the exponents of `v`:
/// `Σ eᵢ·pᵢ′/pᵢ` over the nonconstant basis elements.
pub fn dlog_fractions(v: &RatFunc, basis: &CoprimeBasis) -> Result<Vec<(FracKey, Rat)>> {
    let mut out = Vec::new();
    for (i, e) in basis.exponents(v)? {
        if basis.elements()[i].is_constant() {
            continue;
        }
        let (f, d) = basis.monic(i);
        push_coeffs(&mut out, &d.scale(&Rat::from_integer(e.into())), Some((f.clone(), 1)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat_int, FieldScalar, Scalar};

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_i64s(n), Poly::from_i64s(d)).unwrap()
    }

    fn rebuild(parts: &[(FracKey, Rat)]) -> RatFunc {
        let mut acc = RatFunc::constant(rat_int(0));
        for (k, c) in parts {
            let mono = RatFunc::from_poly(Poly::new(
                (0..=k.degree).map(|j| if j == k.degree { c.clone() } else { rat_int(0) }).collect(),
            ));
            let term = match &k.pole {
                None => mono,
                Some((p, e)) => FieldScalar::div(&mono, &RatFunc::from_poly(p.poly.pow(*e))).unwrap(),
            };
            acc = Scalar::add(&acc, &term);
        }
        acc
    }

    #[test]
    fn reconstructs_values() {
        let values = [rf(&[1, 2, 0, 3], &[0, 0, 1, -1]), rf(&[5], &[-1, 1]), rf(&[0, 1], &[1, 2, 1])];
        let basis = CoprimeBasis::from_values(values.iter().map(|v| RatFunc::from_poly(v.den().clone())).collect::<Vec<_>>().iter()).unwrap();
        for v in &values {
            let parts = partial_fractions(v, &basis).unwrap();
            assert_eq!(rebuild(&parts), *v, "{v}");
        }
    }

    #[test]
    fn simple_pole() {
        let basis = CoprimeBasis::from_values([rf(&[0, 1], &[1])].iter()).unwrap();
        let parts = partial_fractions(&rf(&[1, 1], &[0, 1]), &basis).unwrap();
        // (1+t)/t = 1 + 1/t
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|(_, c)| *c == rat_int(1)));
    }

    #[test]
    fn dlog_matches_partial_fractions() {
        let v = rf(&[2, -3, 1, 1], &[0, 5, 5]);
        let basis = CoprimeBasis::from_values([v.clone()].iter()).unwrap();
        let mut a = dlog_fractions(&v, &basis).unwrap();
        let mut b = partial_fractions(&v.dlog().unwrap(), &basis).unwrap();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn dlog_of_repeated_factor() {
        // (t−1)²(t+2) stays one basis element
        let v = rf(&[2, -3, 0, 1], &[0, 5, 5]);
        let basis = CoprimeBasis::from_values([v.clone()].iter()).unwrap();
        assert_eq!(rebuild(&dlog_fractions(&v, &basis).unwrap()), v.dlog().unwrap());
    }

    #[test]
    fn uncovered_denominator() {
        let basis = CoprimeBasis::from_values([rf(&[0, 1], &[1])].iter()).unwrap();
        assert!(partial_fractions(&rf(&[1], &[1, 1]), &basis).is_err());
    }
}
