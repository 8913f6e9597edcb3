//! Gcd-free (coprime) bases: a substitute for irreducible factorization that
//! is exact for multiplicative identities among a fixed finite set of values.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Poly, Rat, RatFunc};
use crate::error::{Error, Result};

trait Splittable: Clone + Ord {
    fn gcd_with(&self, other: &Self) -> Self;
    fn quo(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn normalized(&self) -> Self;
}

impl Splittable for BigInt {
    fn gcd_with(&self, other: &Self) -> Self {
        self.gcd(other)
    }
    fn quo(&self, other: &Self) -> Self {
        self / other
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn normalized(&self) -> Self {
        self.abs()
    }
}

impl Splittable for Poly {
    fn gcd_with(&self, other: &Self) -> Self {
        self.gcd(other)
    }
    fn quo(&self, other: &Self) -> Self {
        self.div_exact(other).expect("gcd divides")
    }
    fn is_unit(&self) -> bool {
        self.is_constant()
    }
    fn normalized(&self) -> Self {
        self.monic()
    }
}

/// Repeated gcd splitting. Each split lowers the total size of the working
/// set, so the loop terminates; inserted elements are coprime to everything
/// already accepted.
fn refine<T: Splittable>(inputs: impl IntoIterator<Item = T>) -> Vec<T> {
    let mut accepted: Vec<T> = Vec::new();
    let mut queue: Vec<T> = inputs.into_iter().map(|x| x.normalized()).collect();
    queue.sort();
    queue.dedup();
    queue.reverse();
    'next: while let Some(x) = queue.pop() {
        let x = x.normalized();
        if x.is_unit() || accepted.contains(&x) {
            continue;
        }
        for i in 0..accepted.len() {
            let g = x.gcd_with(&accepted[i]);
            if !g.is_unit() {
                let y = accepted.swap_remove(i);
                queue.push(y.quo(&g));
                queue.push(x.quo(&g));
                queue.push(g);
                continue 'next;
            }
        }
        accepted.push(x);
    }
    accepted.sort();
    accepted
}

/// Pairwise coprime integers `> 1` over which every input factors.
pub fn integer_coprime_basis(values: &[BigInt]) -> Vec<BigInt> {
    refine(values.iter().filter(|v| !v.is_zero()).cloned())
}

/// Pairwise coprime non-unit polynomials over which every input factors up to a
/// rational constant. Constant inputs contribute through an integer coprime
/// basis of their numerators and denominators (returned as degree-0 entries,
/// ordered before the monic nonconstant entries).
pub fn coprime_basis(values: &[Poly]) -> Result<Vec<Poly>> {
    let mut ints = Vec::new();
    let mut polys = Vec::new();
    for v in values {
        if v.is_zero() {
            return Err(Error::ZeroValue("coprime basis input".into()));
        }
        match v.constant_value() {
            Some(c) => {
                ints.push(c.numer().clone());
                ints.push(c.denom().clone());
            }
            None => polys.push(v.monic()),
        }
    }
    let mut out: Vec<Poly> = integer_coprime_basis(&ints)
        .into_iter()
        .map(|n| Poly::constant(Rat::from_integer(n)))
        .collect();
    out.extend(refine(polys));
    Ok(out)
}

fn strip_poly(p: &Poly, b: &Poly) -> (Poly, i64) {
    let mut p = p.clone();
    let mut e = 0;
    while p.degree() >= b.degree() {
        match p.div_exact(b) {
            Some(q) => {
                p = q;
                e += 1;
            }
            None => break,
        }
    }
    (p, e)
}

fn strip_int(n: &BigInt, m: &BigInt) -> (BigInt, i64) {
    let mut n = n.clone();
    let mut e = 0;
    while !n.is_zero() && (&n % m).is_zero() {
        n /= m;
        e += 1;
    }
    (n, e)
}

/// Writes `v = constant · Π basis[i]^e[i]`. Integer (degree-0) basis entries
/// absorb as much of the constant as they can; the remainder is returned.
pub fn factor_over_basis(v: &RatFunc, basis: &[Poly]) -> Result<(Rat, Vec<i64>)> {
    if v.num().is_zero() {
        return Err(Error::ZeroValue("factor_over_basis of 0".into()));
    }
    let mut num = v.num().clone();
    let mut den = v.den().clone();
    let mut exps = vec![0i64; basis.len()];
    for (i, b) in basis.iter().enumerate() {
        if b.is_constant() {
            continue;
        }
        let (n2, en) = strip_poly(&num, b);
        let (d2, ed) = strip_poly(&den, b);
        num = n2;
        den = d2;
        exps[i] = en - ed;
    }
    let (Some(nc), Some(dc)) = (num.constant_value(), den.constant_value()) else {
        return Err(Error::NotCovered(format!("{v}")));
    };
    let c = nc / dc;
    let mut top = c.numer().clone();
    let mut bottom = c.denom().clone();
    for (i, b) in basis.iter().enumerate() {
        let Some(m) = b.constant_value() else { continue };
        let m = m.to_integer();
        if m.abs() <= BigInt::one() {
            continue;
        }
        let (t2, et) = strip_int(&top, &m);
        let (b2, eb) = strip_int(&bottom, &m);
        top = t2;
        bottom = b2;
        exps[i] = et - eb;
    }
    Ok((Rat::new(top, bottom), exps))
}

/// A basis element, identified by its position in the basis it came from.
///
/// Comparison and hashing use the position only, so factors from different
/// bases must not be mixed.
#[derive(Clone, Debug)]
pub struct Factor {
    pub index: usize,
    pub poly: Arc<Poly>,
}

impl PartialEq for Factor {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index
    }
}
impl Eq for Factor {}
impl PartialOrd for Factor {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Factor {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index.cmp(&other.index)
    }
}
impl Hash for Factor {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.index.hash(state)
    }
}
impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_constant() {
            write!(f, "{}", self.poly)
        } else {
            write!(f, "({})", self.poly)
        }
    }
}

/// Coprime basis over all numerators, denominators and constant contents of a
/// set of rational functions, with the factorization of each value cached.
#[derive(Debug, Clone, Default)]
pub struct CoprimeBasis {
    elements: Vec<Poly>,
    factors: Vec<Factor>,
    /// Monic forms of the elements, with their derivatives.
    monic: Vec<(Factor, Poly)>,
    cache: HashMap<RatFunc, Vec<(usize, i64)>>,
}

impl CoprimeBasis {
    pub fn from_values<'a>(values: impl IntoIterator<Item = &'a RatFunc>) -> Result<Self> {
        let mut distinct: Vec<&RatFunc> = values.into_iter().collect();
        distinct.sort();
        distinct.dedup();
        let mut raw = Vec::with_capacity(distinct.len() * 3);
        for v in &distinct {
            if v.num().is_zero() {
                return Err(Error::ZeroValue("multiplicative slot holds 0".into()));
            }
            let c = v.num().lc() / v.den().lc();
            raw.push(Poly::constant(c));
            if !v.num().is_constant() {
                raw.push(v.num().clone());
            }
            if !v.den().is_constant() {
                raw.push(v.den().clone());
            }
        }
        let elements = coprime_basis(&raw)?;
        let factors = elements.iter().enumerate().map(|(index, p)| Factor { index, poly: Arc::new(p.clone()) }).collect();
        let monic = elements
            .iter()
            .enumerate()
            .map(|(index, p)| {
                let m = p.monic();
                let d = m.derivative();
                (Factor { index, poly: Arc::new(m) }, d)
            })
            .collect();
        let mut basis = CoprimeBasis {
            elements,
            factors,
            monic,
            cache: HashMap::new(),
        };
        for v in distinct {
            let f = basis.compute(v)?;
            basis.cache.insert(v.clone(), f);
        }
        Ok(basis)
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn factor(&self, i: usize) -> &Factor {
        &self.factors[i]
    }

    /// The monic form of element `i` and its derivative.
    pub fn monic(&self, i: usize) -> &(Factor, Poly) {
        &self.monic[i]
    }

    fn compute(&self, v: &RatFunc) -> Result<Vec<(usize, i64)>> {
        let (c, e) = factor_over_basis(v, &self.elements)?;
        if !(c.is_one() || (-c.clone()).is_one()) {
            return Err(Error::NotCovered(format!("constant {c} left over from {v}")));
        }
        Ok(e.into_iter()
            .enumerate()
            .filter(|(_, x)| *x != 0)
            .collect())
    }

    /// Sparse exponent vector of `v` modulo torsion (the sign is dropped).
    pub fn exponents(&self, v: &RatFunc) -> Result<Vec<(usize, i64)>> {
        match self.cache.get(v) {
            Some(f) => Ok(f.clone()),
            None => self.compute(v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat_int, Scalar};

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn integer_example() {
        let b = coprime_basis(&[p(&[6]), p(&[15])]).unwrap();
        assert_eq!(b, vec![p(&[2]), p(&[3]), p(&[5])]);
    }

    #[test]
    fn polynomial_example() {
        let b = coprime_basis(&[p(&[0, -1, 1]), p(&[0, 1])]).unwrap();
        assert_eq!(b, vec![p(&[-1, 1]), p(&[0, 1])]);
        assert_eq!(coprime_basis(&[p(&[0, 1])]).unwrap(), vec![p(&[0, 1])]);
    }

    #[test]
    fn zero_input_is_rejected() {
        assert!(matches!(coprime_basis(&[Poly::zero()]), Err(Error::ZeroValue(_))));
    }

    #[test]
    fn repeated_factor_is_split() {
        // t^2 and t^3 + t^2 share t^2; powers are allowed to stay unsplit
        let b = coprime_basis(&[p(&[0, 0, 1]), p(&[0, 0, 1, 1])]).unwrap();
        assert_eq!(b, vec![p(&[1, 1]), p(&[0, 0, 1])]);
    }

    #[test]
    fn factor_examples() {
        let basis = vec![p(&[0, 1]), p(&[-1, 1])];
        let v = RatFunc::from_poly(p(&[0, -1, 1]));
        assert_eq!(factor_over_basis(&v, &basis).unwrap(), (rat_int(1), vec![1, 1]));
        assert_eq!(
            factor_over_basis(&RatFunc::one(), &basis).unwrap(),
            (rat_int(1), vec![0, 0])
        );
        let w = RatFunc::from_poly(p(&[0, -2]));
        assert_eq!(
            factor_over_basis(&w, &[p(&[0, 1])]).unwrap(),
            (rat_int(-2), vec![1])
        );
        let uncovered = RatFunc::from_poly(p(&[1, 1]));
        assert!(matches!(
            factor_over_basis(&uncovered, &basis),
            Err(Error::NotCovered(_))
        ));
    }

    #[test]
    fn basis_from_values_drops_sign_only() {
        let a = RatFunc::new(p(&[0, -6]), p(&[5, 5])).unwrap(); // -6t / 5(t+1)
        let basis = CoprimeBasis::from_values([&a]).unwrap();
        let e = basis.exponents(&a).unwrap();
        let rebuilt = e.iter().fold(RatFunc::one(), |acc, (i, k)| {
            acc.mul(&RatFunc::from_poly(basis.elements()[*i].clone()).pow(*k).unwrap())
        });
        assert!(rebuilt == a || rebuilt == a.neg());
    }
}
