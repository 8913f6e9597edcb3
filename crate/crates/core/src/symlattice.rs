//! Formal multiplicative lattice on determinant symbols.
//!
//! Determinants `Δ(i,j)` / `Δ(i,j,k)` of an unspecified configuration are
//! treated as free generators of F^× (modulo torsion). `1 − r` is available
//! for cross-ratio shaped `r` through the Plücker relation.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::configs::{random_generic, Config};
use crate::error::{Error, Result};
use crate::freemod::{permutation_sign, LinComb};
use crate::scalars::{rat_int, FieldScalar, Rat, Scalar};

/// `Δ(x_{i_1}, …, x_{i_n})` with strictly increasing indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DetSym(Vec<usize>);

impl DetSym {
    /// Sorts the indices and returns the permutation sign alongside.
    pub fn new(idx: &[usize]) -> Result<(DetSym, i32)> {
        let mut sorted = idx.to_vec();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::IndexError(format!("repeated point in Δ{idx:?}")));
        }
        let rank: Vec<usize> = idx.iter().map(|x| sorted.binary_search(x).unwrap()).collect();
        Ok((DetSym(sorted), permutation_sign(&rank)))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for DetSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "Δ({})", s.join(","))
    }
}

/// `± Π s^{e_s}` over determinant symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MulElt {
    sign: i8,
    exps: BTreeMap<DetSym, i64>,
}

/// Basis symbol of the additive group F: `Dlog Δ`, a field element used
/// additively (only the `(1−a)⊗[a]₂` convention needs it), or the opaque
/// bracket weight `w(a)` of `⟦a⟧ = w(a)·⟨a⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AddSym {
    Dlog(DetSym),
    Elem(MulElt),
    Weight(MulElt),
}

impl fmt::Display for AddSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AddSym::Dlog(s) => write!(f, "Dlog{s}"),
            AddSym::Elem(m) => write!(f, "⟨{m}⟩"),
            AddSym::Weight(m) => write!(f, "w({m})"),
        }
    }
}

/// Rational span of [`AddSym`] symbols.
pub type AddElt = LinComb<AddSym, Rat>;

impl MulElt {
    pub fn one() -> Self {
        MulElt {
            sign: 1,
            exps: BTreeMap::new(),
        }
    }

    /// The determinant of the given points, in the given row order.
    pub fn det(idx: &[usize]) -> Result<Self> {
        let (s, sign) = DetSym::new(idx)?;
        let mut exps = BTreeMap::new();
        exps.insert(s, 1);
        Ok(MulElt { sign: sign as i8, exps })
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn exponents(&self) -> &BTreeMap<DetSym, i64> {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.sign == 1 && self.exps.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (k, e) in &other.exps {
            let v = exps.entry(k.clone()).or_insert(0);
            *v += e;
            if *v == 0 {
                exps.remove(k);
            }
        }
        MulElt {
            sign: self.sign * other.sign,
            exps,
        }
    }

    pub fn inv(&self) -> Self {
        MulElt {
            sign: self.sign,
            exps: self.exps.iter().map(|(k, e)| (k.clone(), -e)).collect(),
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn negate(&self) -> Self {
        MulElt {
            sign: -self.sign,
            exps: self.exps.clone(),
        }
    }

    /// Exponent vector with rational entries, the torsion sign dropped.
    pub fn coords(&self) -> Vec<(DetSym, Rat)> {
        self.exps.iter().map(|(k, e)| (k.clone(), rat_int(*e))).collect()
    }

    /// Exact value on a concrete configuration.
    pub fn eval<S: crate::configs::Coordinate>(&self, c: &Config<S>) -> Result<S> {
        let mut v = S::from_i64(self.sign as i64);
        for (k, e) in &self.exps {
            let d = c.det(k.indices())?;
            let f = if *e >= 0 { d } else { d.inv()? };
            for _ in 0..e.unsigned_abs() {
                v = v.mul(&f);
            }
        }
        Ok(v)
    }

    /// `1 − self` for a cross-ratio shape `Δ(a,d)Δ(b,c)/(Δ(a,c)Δ(b,d))`,
    /// possibly with a common leading point in every symbol.
    pub fn one_minus(&self) -> Result<MulElt> {
        let shape_err = || Error::NotCrossRatioShape(self.to_string());
        if self.exps.len() != 4 {
            return Err(shape_err());
        }
        let pos: Vec<&DetSym> = self.exps.iter().filter(|(_, e)| **e == 1).map(|(k, _)| k).collect();
        let neg: Vec<&DetSym> = self.exps.iter().filter(|(_, e)| **e == -1).map(|(k, _)| k).collect();
        if pos.len() != 2 || neg.len() != 2 {
            return Err(shape_err());
        }
        let width = pos[0].0.len();
        if self.exps.keys().any(|k| k.0.len() != width) || !(2..=3).contains(&width) {
            return Err(shape_err());
        }
        let leads: Vec<Option<usize>> = if width == 2 {
            vec![None]
        } else {
            let mut common: Vec<usize> = pos[0].0.clone();
            for k in self.exps.keys() {
                common.retain(|x| k.0.contains(x));
            }
            common.into_iter().map(Some).collect()
        };
        for lead in leads {
            let strip = |k: &DetSym| -> Vec<usize> { k.0.iter().copied().filter(|x| Some(*x) != lead).collect() };
            let p: Vec<Vec<usize>> = pos.iter().map(|k| strip(k)).collect();
            let n: Vec<Vec<usize>> = neg.iter().map(|k| strip(k)).collect();
            if p.iter().chain(&n).any(|k| k.len() != 2) {
                continue;
            }
            let mut pts: Vec<usize> = p.iter().flatten().copied().collect();
            pts.sort();
            pts.dedup();
            if pts.len() != 4 || n.iter().flatten().any(|x| !pts.contains(x)) {
                continue;
            }
            let matchings = [
                [[pts[0], pts[1]], [pts[2], pts[3]]],
                [[pts[0], pts[2]], [pts[1], pts[3]]],
                [[pts[0], pts[3]], [pts[1], pts[2]]],
            ];
            let as_set = |v: &[Vec<usize>]| -> [[usize; 2]; 2] {
                let mut m = [[v[0][0], v[0][1]], [v[1][0], v[1][1]]];
                m.sort();
                m
            };
            let (ps, ns) = (as_set(&p), as_set(&n));
            if ps == ns || !matchings.contains(&ps) || !matchings.contains(&ns) {
                continue;
            }
            let third = matchings.iter().find(|m| **m != ps && **m != ns).unwrap();
            let lift = |pair: &[usize; 2]| -> Result<MulElt> {
                let mut idx: Vec<usize> = lead.into_iter().collect();
                idx.extend_from_slice(pair);
                let (s, _) = DetSym::new(&idx)?;
                let mut exps = BTreeMap::new();
                exps.insert(s, 1);
                Ok(MulElt { sign: 1, exps })
            };
            let mut cand = MulElt::one();
            for pair in third {
                cand = cand.mul(&lift(pair)?);
            }
            for pair in &ns {
                cand = cand.div(&lift(pair)?);
            }
            return fix_sign(self, cand, width);
        }
        Err(shape_err())
    }

    /// Deterministic text form such as `Δ(0,3)^1·Δ(1,2)^1·Δ(0,2)^-1·Δ(1,3)^-1`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for MulElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.sign < 0 {
            parts.push("(-1)".into());
        }
        let ordered = self
            .exps
            .iter()
            .filter(|(_, e)| **e > 0)
            .chain(self.exps.iter().filter(|(_, e)| **e < 0));
        for (k, e) in ordered {
            parts.push(format!("{k}^{e}"));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("·"))
        }
    }
}

/// Fixed generic rational configurations (8 points in the plane and in
/// 3-space) on which Plücker signs are read off.
fn spot_configs() -> &'static [Config<Rat>; 2] {
    static SPOT: OnceLock<[Config<Rat>; 2]> = OnceLock::new();
    SPOT.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5107);
        [
            random_generic(8, 2, &mut rng).expect("spot configuration"),
            random_generic(8, 3, &mut rng).expect("spot configuration"),
        ]
    })
}

fn fix_sign(m: &MulElt, cand: MulElt, width: usize) -> Result<MulElt> {
    let c = &spot_configs()[width - 2];
    let target = Rat::one().sub(&m.eval(c)?);
    let got = cand.eval(c)?;
    let ratio = target.div(&got)?;
    if ratio.is_one() {
        Ok(cand)
    } else if ratio.neg().is_one() {
        Ok(cand.negate())
    } else {
        Err(Error::NotCrossRatioShape(format!("Plücker check failed for {m}")))
    }
}

/// `Dlog(± Π s^e) = Σ e·Dlog s`; the sign is killed by the derivation.
pub fn dlog(m: &MulElt) -> AddElt {
    m.exps
        .iter()
        .map(|(k, e)| (AddSym::Dlog(k.clone()), rat_int(*e)))
        .collect()
}

/// A field element regarded as an element of the additive group.
pub fn additive(m: &MulElt) -> AddElt {
    LinComb::single(AddSym::Elem(m.clone()), rat_int(1))
}

/// Structural equality of canonical combinations.
pub fn lattice_equal<K: Ord + Clone>(a: &LinComb<K, Rat>, b: &LinComb<K, Rat>) -> bool {
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freemod::wedge2;

    fn cr(p: [usize; 4]) -> MulElt {
        let d = |i: usize, j: usize| MulElt::det(&[p[i], p[j]]).unwrap();
        d(0, 3).mul(&d(1, 2)).div(&d(0, 2).mul(&d(1, 3)))
    }

    #[test]
    fn det_symbols_normalize() {
        let a = MulElt::det(&[3, 0]).unwrap();
        assert_eq!(a.sign(), -1);
        assert_eq!(a.to_string(), "(-1)·Δ(0,3)^1");
        assert!(MulElt::det(&[1, 1]).is_err());
    }

    #[test]
    fn render_matches_report_form() {
        assert_eq!(cr([0, 1, 2, 3]).to_string(), "Δ(0,3)^1·Δ(1,2)^1·Δ(0,2)^-1·Δ(1,3)^-1");
    }

    #[test]
    fn dlog_examples() {
        assert!(dlog(&MulElt::one()).is_zero());
        let d = dlog(&cr([0, 1, 2, 3]));
        assert_eq!(d.len(), 4);
        let s = MulElt::det(&[1, 0]).unwrap();
        assert_eq!(dlog(&s), dlog(&s.negate()));
    }

    #[test]
    fn one_minus_of_cross_ratio() {
        let r = cr([0, 1, 2, 3]);
        let om = r.one_minus().unwrap();
        let expect = MulElt::det(&[0, 1])
            .unwrap()
            .mul(&MulElt::det(&[2, 3]).unwrap())
            .div(&MulElt::det(&[0, 2]).unwrap().mul(&MulElt::det(&[1, 3]).unwrap()));
        assert_eq!(om.exponents(), expect.exponents());
        for c in spot_configs().iter().take(1) {
            assert_eq!(om.eval(c).unwrap(), Rat::one().sub(&r.eval(c).unwrap()));
        }
        // involution on shapes
        assert_eq!(om.one_minus().unwrap(), r);
        assert!(matches!(MulElt::det(&[0, 1]).unwrap().one_minus(), Err(Error::NotCrossRatioShape(_))));
    }

    #[test]
    fn one_minus_with_leading_slot() {
        let d = |i, j| MulElt::det(&[4, i, j]).unwrap();
        let r = d(0, 3).mul(&d(1, 2)).div(&d(0, 2).mul(&d(1, 3)));
        let om = r.one_minus().unwrap();
        let c = &spot_configs()[1];
        assert_eq!(om.eval(c).unwrap(), Rat::one().sub(&r.eval(c).unwrap()));
    }

    #[test]
    fn wedge_of_symbols_is_alternating() {
        let x = MulElt::det(&[0, 1]).unwrap().coords();
        let y = MulElt::det(&[0, 2]).unwrap().coords();
        assert!(lattice_equal(&wedge2(&x, &y).add(&wedge2(&y, &x)), &LinComb::new()));
    }
}
