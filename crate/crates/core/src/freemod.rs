//! Formal linear combinations over ordered keys, plus the wedge, tensor and
//! alternation constructions every group in the engine is built from.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::Result;
use crate::scalars::{format_rat, Rat, RatFunc, Scalar};

/// Coefficient ring of a [`LinComb`]: ℚ for free abelian groups tensored with
/// ℚ, ℚ(t) for F-vector spaces.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rat(q: &Rat) -> Self;
    fn render(&self) -> String;
}

impl Coeff for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rat(q: &Rat) -> Self {
        q.clone()
    }
    fn render(&self) -> String {
        format_rat(self)
    }
}

impl Coeff for RatFunc {
    fn zero() -> Self {
        <RatFunc as Scalar>::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Scalar::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Scalar::mul(self, other)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn from_rat(q: &Rat) -> Self {
        RatFunc::constant(q.clone())
    }
    fn render(&self) -> String {
        format!("({self})")
    }
}

/// Finite formal combination `Σ c_k · k` with no zero coefficient stored.
/// Keys live in a `BTreeMap`, so equality is structural.
#[derive(Clone, PartialEq)]
pub struct LinComb<K: Ord, C = Rat> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord, C> Default for LinComb<K, C> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, C: Coeff> LinComb<K, C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: C) -> Self {
        let mut out = Self::new();
        out.add_term(k, c);
        out
    }

    pub fn add_term(&mut self, k: K, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &C) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.mul(s));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &C::from_rat(&crate::scalars::rat_int(-1)));
        out
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, s);
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&C::from_rat(&crate::scalars::rat_int(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Option<&C> {
        self.terms.get(k)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &C)> {
        self.terms.iter()
    }

    /// Applies a linear map given on keys.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2, C>) -> LinComb<K2, C> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }
}

impl<K: Ord + Clone, C: Coeff> FromIterator<(K, C)> for LinComb<K, C> {
    fn from_iter<I: IntoIterator<Item = (K, C)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + fmt::Display, C: Coeff> fmt::Display for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·{}", c.render(), k)?;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug, C: fmt::Debug> fmt::Debug for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Basis element `k_1 ∧ … ∧ k_r` with strictly increasing components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wedge<K>(Vec<K>);

impl<K: Ord + Clone> Wedge<K> {
    /// Sorts the components, returning the key and the permutation sign, or
    /// `None` when a component repeats (the wedge vanishes).
    pub fn canonical(mut parts: Vec<K>) -> Option<(Wedge<K>, i32)> {
        let mut sign = 1;
        // insertion sort, counting transpositions
        for i in 1..parts.len() {
            let mut j = i;
            while j > 0 && parts[j - 1] > parts[j] {
                parts.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if parts.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((Wedge(parts), sign))
    }

    pub fn parts(&self) -> &[K] {
        &self.0
    }
}

impl<K: fmt::Display> fmt::Display for Wedge<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "∧")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// Basis element `l ⊗ r` of a tensor product; slots may be of different kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tensor<L, R>(pub L, pub R);

impl<L: fmt::Display, R: fmt::Display> fmt::Display for Tensor<L, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.0, self.1)
    }
}

/// Multilinear expansion of `v_1 ∧ … ∧ v_r` where each slot is given by its
/// coordinates over a basis (an exponent vector, for multiplicative groups).
pub fn wedge_expand<K: Ord + Clone>(slots: &[Vec<(K, Rat)>]) -> LinComb<Wedge<K>, Rat> {
    let mut out = LinComb::new();
    let mut idx = vec![0usize; slots.len()];
    if slots.iter().any(|s| s.is_empty()) {
        return out;
    }
    loop {
        let parts: Vec<K> = idx.iter().zip(slots).map(|(&i, s)| s[i].0.clone()).collect();
        if let Some((key, sign)) = Wedge::canonical(parts) {
            let mut c = Rat::from_integer(sign.into());
            for (&i, s) in idx.iter().zip(slots) {
                c *= &s[i].1;
            }
            out.add_term(key, c);
        }
        // odometer increment
        let mut pos = slots.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < slots[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// `a ∧ b` for two multiplicative elements given as exponent vectors.
pub fn wedge2<K: Ord + Clone>(a: &[(K, Rat)], b: &[(K, Rat)]) -> LinComb<Wedge<K>, Rat> {
    wedge_expand(&[a.to_vec(), b.to_vec()])
}

pub fn wedge3<K: Ord + Clone>(a: &[(K, Rat)], b: &[(K, Rat)], c: &[(K, Rat)]) -> LinComb<Wedge<K>, Rat> {
    wedge_expand(&[a.to_vec(), b.to_vec(), c.to_vec()])
}

/// All permutations of `0..n` in lexicographic order, with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i32)>) {
        let n = used.len();
        if prefix.len() == n {
            out.push((prefix.clone(), permutation_sign(prefix)));
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

pub fn permutation_sign(p: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Unnormalized alternation `Σ_σ sgn(σ) f(σ·points)`; no 1/m! factor.
pub fn alt<T: Clone, K: Ord + Clone, C: Coeff>(
    points: &[T],
    mut f: impl FnMut(&[T]) -> Result<LinComb<K, C>>,
) -> Result<LinComb<K, C>> {
    assert!(points.len() <= 6, "alternation is limited to at most 6 points");
    let mut out = LinComb::new();
    for (perm, sign) in signed_permutations(points.len()) {
        let permuted: Vec<T> = perm.iter().map(|&i| points[i].clone()).collect();
        let term = f(&permuted)?;
        out.add_scaled(&term, &C::from_rat(&Rat::from_integer(sign.into())));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, rat_int};

    type L = LinComb<&'static str>;

    #[test]
    fn add_examples() {
        let x2 = L::single("x", rat_int(2));
        let xm2 = L::single("x", rat_int(-2));
        assert!(x2.add(&xm2).is_zero());
        let xy = L::single("x", rat_int(1)).add(&L::single("y", rat_int(1)));
        assert_eq!(xy.len(), 2);
        let third = L::single("x", rat(1, 3)).add(&L::single("x", rat(2, 3)));
        assert_eq!(third, L::single("x", rat_int(1)));
    }

    fn unit(k: &'static str) -> Vec<(&'static str, Rat)> {
        vec![(k, rat_int(1))]
    }

    #[test]
    fn wedge_examples() {
        assert!(wedge2(&unit("x"), &unit("x")).is_zero());
        // y < x is false for "x" < "y"; take z∧a with a < z
        let w = wedge2(&unit("z"), &unit("a"));
        let (key, _) = Wedge::canonical(vec!["a", "z"]).unwrap();
        assert_eq!(w, LinComb::single(key, rat_int(-1)));
        let xy = vec![("x", rat_int(1)), ("y", rat_int(1))];
        let lhs = wedge2(&xy, &unit("z"));
        let rhs = wedge2(&unit("x"), &unit("z")).add(&wedge2(&unit("y"), &unit("z")));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn alt_of_projection_and_symmetric_function() {
        let pts = ["x0", "x1"];
        let a = alt(&pts, |p| Ok(L::single(p[0], rat_int(1)))).unwrap();
        assert_eq!(a, L::single("x0", rat_int(1)).sub(&L::single("x1", rat_int(1))));
        let s = alt(&["a", "b", "c"], |p| {
            let mut k = [p[0], p[1]];
            k.sort();
            Ok(LinComb::<String>::single(format!("{}{}{}", k[0], k[1], p[2]), rat_int(1)))
        })
        .unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn signed_permutations_of_six() {
        let perms = signed_permutations(6);
        assert_eq!(perms.len(), 720);
        assert_eq!(perms.iter().map(|(_, s)| s).sum::<i32>(), 0);
        assert_eq!(perms[1], (vec![0, 1, 2, 3, 5, 4], -1));
    }
}
