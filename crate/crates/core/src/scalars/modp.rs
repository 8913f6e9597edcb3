//! Reduction modulo the Mersenne prime 2^61 - 1, used as a fast coprimality filter.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Poly, Rat};

pub(crate) const P: u64 = (1 << 61) - 1;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn int_mod(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(P)).to_u64().expect("reduced below P")
}

/// `None` when the denominator vanishes mod P.
fn rat_mod(q: &Rat) -> Option<u64> {
    let d = int_mod(q.denom());
    if d == 0 {
        return None;
    }
    Some(mul(int_mod(q.numer()), inv(d)))
}

fn reduce(p: &Poly) -> Option<Vec<u64>> {
    let v: Option<Vec<u64>> = p.coeffs().iter().map(rat_mod).collect();
    let v = v?;
    // a vanishing leading coefficient would make the degree bound unsound
    if v.last().is_none_or(|c| *c == 0) {
        return None;
    }
    Some(v)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem(a: &mut Vec<u64>, b: &[u64]) {
    let lb = inv(*b.last().unwrap());
    while a.len() >= b.len() && !a.is_empty() {
        let shift = a.len() - b.len();
        let f = mul(*a.last().unwrap(), lb);
        for (i, bc) in b.iter().enumerate() {
            let t = mul(f, *bc);
            let x = &mut a[i + shift];
            *x = (*x + P - t) % P;
        }
        trim(a);
    }
}

/// Degree of gcd(a mod P, b mod P), an upper bound for the degree of the rational gcd.
/// `None` when the reduction is not usable.
pub(crate) fn gcd_degree_bound(a: &Poly, b: &Poly) -> Option<usize> {
    let mut x = reduce(a)?;
    let mut y = reduce(b)?;
    while !y.is_empty() {
        rem(&mut x, &y);
        std::mem::swap(&mut x, &mut y);
    }
    debug_assert!(!x.is_empty() || a.is_zero());
    Some(x.len().saturating_sub(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat_int;

    #[test]
    fn bound_detects_common_factor() {
        let t = Poly::t();
        let a = t.mul(&t.sub(&Poly::constant(rat_int(1))));
        let b = t.mul(&t.add(&Poly::constant(rat_int(3))));
        assert_eq!(gcd_degree_bound(&a, &b), Some(1));
        let c = t.add(&Poly::constant(rat_int(5)));
        assert_eq!(gcd_degree_bound(&a, &c), Some(0));
    }

    #[test]
    fn denominator_divisible_by_p_is_rejected() {
        let q = Rat::new(BigInt::from(1), BigInt::from(P));
        assert_eq!(rat_mod(&q), None);
        assert_eq!(rat_mod(&rat_int(3)), Some(3));
    }
}
