//! Configurations of m vectors in n-space, the Grassmannian differential,
//! projective invariants and seeded generic sampling.

use std::fmt;

use num_bigint::BigInt;
use rand::Rng;

use crate::error::{Error, Result};
use crate::freemod::{signed_permutations, LinComb};
use crate::scalars::{format_rat, parse_rat, FieldScalar, Jet, Poly, Rat, RatFunc, Scalar, CF};

/// Rejection-sampling budget for [`random_generic`].
pub const RETRY_BUDGET: usize = 100;

/// Ratios closer than this to 0 or 1 (at the spot point) are rejected.
const RATIO_FLOOR: f64 = 1e-6;

/// Coordinate domains a configuration can live over.
pub trait Coordinate: FieldScalar {
    /// A floating image used only for conservative genericity screening.
    fn approx(&self) -> CF;
    fn sample(rng: &mut impl Rng) -> Self;
    fn render(&self) -> String;
    fn parse(s: &str) -> Result<Self>;
}

impl Coordinate for Rat {
    fn approx(&self) -> CF {
        CF::new(crate::scalars::rat_to_f64(self), 0.0)
    }
    fn sample(rng: &mut impl Rng) -> Self {
        Rat::from_integer(BigInt::from(rng.gen_range(-9i64..=9)))
    }
    fn render(&self) -> String {
        format_rat(self)
    }
    fn parse(s: &str) -> Result<Self> {
        parse_rat(s)
    }
}

/// Spot point for screening ℚ(t) values: far from every small rational.
const SPOT: CF = CF::new(0.5772156649, std::f64::consts::FRAC_1_SQRT_2);

impl Coordinate for RatFunc {
    fn approx(&self) -> CF {
        self.eval_at_complex(SPOT)
            .unwrap_or(CF::new(f64::NAN, f64::NAN))
    }
    fn sample(rng: &mut impl Rng) -> Self {
        let c0 = rng.gen_range(-6i64..=6);
        let c1 = rng.gen_range(-6i64..=6);
        RatFunc::from_poly(Poly::from_i64s(&[c0, c1]))
    }
    fn render(&self) -> String {
        self.to_list()
    }
    fn parse(s: &str) -> Result<Self> {
        RatFunc::parse_list(s)
    }
}

impl Coordinate for Jet {
    fn approx(&self) -> CF {
        self.val
    }
    fn sample(rng: &mut impl Rng) -> Self {
        let mut c = || CF::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        Jet::new(c(), c())
    }
    fn render(&self) -> String {
        format!("{}:{}:{}:{}", self.val.re, self.val.im, self.tan.re, self.tan.im)
    }
    fn parse(s: &str) -> Result<Self> {
        let parts: Vec<f64> = s
            .split(':')
            .map(|p| p.parse::<f64>().map_err(|_| Error::Parse(format!("bad jet `{s}`"))))
            .collect::<Result<_>>()?;
        if parts.len() != 4 {
            return Err(Error::Parse(format!("bad jet `{s}`")));
        }
        Ok(Jet::new(CF::new(parts[0], parts[1]), CF::new(parts[2], parts[3])))
    }
}

/// Ordered tuple of m vectors in n-space.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Config<S> {
    points: Vec<Vec<S>>,
}

impl<S: Coordinate> Config<S> {
    pub fn new(points: Vec<Vec<S>>) -> Result<Self> {
        let n = points.first().map(|p| p.len()).unwrap_or(0);
        if points.iter().any(|p| p.len() != n) {
            return Err(Error::Parse("points of unequal dimension".into()));
        }
        Ok(Config { points })
    }

    pub fn from_i64s(points: &[&[i64]]) -> Self {
        Config {
            points: points
                .iter()
                .map(|p| p.iter().map(|&v| S::from_i64(v)).collect())
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points.first().map(|p| p.len()).unwrap_or(0)
    }

    pub fn points(&self) -> &[Vec<S>] {
        &self.points
    }

    /// Determinant of the selected points, rows in the given order.
    pub fn det(&self, idx: &[usize]) -> Result<S> {
        if idx.len() != self.dim() {
            return Err(Error::IndexError(format!(
                "{} indices for dimension {}",
                idx.len(),
                self.dim()
            )));
        }
        for (k, &i) in idx.iter().enumerate() {
            if i >= self.len() || idx[..k].contains(&i) {
                return Err(Error::IndexError(format!("{idx:?} in {}-point configuration", self.len())));
            }
        }
        let rows: Vec<&Vec<S>> = idx.iter().map(|&i| &self.points[i]).collect();
        Ok(det_rows(&rows))
    }

    pub fn select(&self, idx: &[usize]) -> Self {
        Config {
            points: idx.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    pub fn omit(&self, i: usize) -> Self {
        let mut points = self.points.clone();
        points.remove(i);
        Config { points }
    }

    /// Quotient by the line through point `i`: the remaining points, with
    /// 2-point determinants read as `det(x_i, a, b)`.
    pub fn project_from(&self, i: usize) -> Result<Projection<'_, S>> {
        if self.dim() != 3 || i >= self.len() {
            return Err(Error::IndexError(format!("projection from {i}")));
        }
        let rest = (0..self.len()).filter(|&j| j != i).collect();
        Ok(Projection { config: self, lead: i, rest })
    }

    /// Applies `x ↦ g·x` to every point.
    pub fn transform(&self, g: &[Vec<S>]) -> Self {
        let n = self.dim();
        let points = self
            .points
            .iter()
            .map(|x| {
                (0..n)
                    .map(|r| {
                        (0..n).fold(S::zero(), |acc, c| acc.add(&g[r][c].mul(&x[c])))
                    })
                    .collect()
            })
            .collect();
        Config { points }
    }

    /// One point per line, entries separated by spaces.
    pub fn to_text(&self) -> String {
        self.points
            .iter()
            .map(|p| p.iter().map(|v| v.render()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn from_text(s: &str) -> Result<Self> {
        let points = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_whitespace().map(S::parse).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Config::new(points)
    }
}

impl<S: Coordinate> fmt::Display for Config<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn det_rows<S: Scalar>(rows: &[&Vec<S>]) -> S {
    match rows.len() {
        1 => rows[0][0].clone(),
        2 => rows[0][0].mul(&rows[1][1]).sub(&rows[0][1].mul(&rows[1][0])),
        n => {
            // cofactor expansion along the first row
            let mut acc = S::zero();
            for c in 0..n {
                let minor: Vec<Vec<S>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, v)| v.clone()).collect())
                    .collect();
                let refs: Vec<&Vec<S>> = minor.iter().collect();
                let term = rows[0][c].mul(&det_rows(&refs));
                acc = if c % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// A 3-space configuration seen from one of its points.
pub struct Projection<'a, S> {
    config: &'a Config<S>,
    lead: usize,
    rest: Vec<usize>,
}

impl<S: Coordinate> Projection<'_, S> {
    pub fn len(&self) -> usize {
        self.rest.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rest.is_empty()
    }

    /// `Δ(x̂_lead | a, b)` with `a`, `b` indexing the remaining points.
    pub fn det(&self, a: usize, b: usize) -> Result<S> {
        let (ia, ib) = match (self.rest.get(a), self.rest.get(b)) {
            (Some(&ia), Some(&ib)) => (ia, ib),
            _ => return Err(Error::IndexError(format!("projected ({a},{b})"))),
        };
        self.config.det(&[self.lead, ia, ib])
    }
}

/// Cross-ratio `Δ(0,3)Δ(1,2) / (Δ(0,2)Δ(1,3))` from a 2-point determinant.
pub fn cross_ratio_with<S: Coordinate>(det: impl Fn(usize, usize) -> Result<S>) -> Result<S> {
    let d03 = det(0, 3)?;
    let d12 = det(1, 2)?;
    let d02 = det(0, 2)?;
    let d13 = det(1, 3)?;
    for d in [&d03, &d12, &d02, &d13] {
        if d.is_zero() {
            return Err(Error::DegenerateConfiguration("vanishing determinant in cross-ratio".into()));
        }
    }
    let r = d03.mul(&d12).div(&d02.mul(&d13))?;
    if r.is_zero() || r.is_one() {
        return Err(Error::ExceptionalValue("cross-ratio".into()));
    }
    Ok(r)
}

/// Cross-ratio of 4 points in the plane, or of 4 projected points when
/// `leading` names the projection centre of a 5-point configuration in 3-space.
pub fn cross_ratio<S: Coordinate>(c: &Config<S>, leading: Option<usize>) -> Result<S> {
    match leading {
        None => {
            if c.len() != 4 || c.dim() != 2 {
                return Err(Error::IndexError("cross-ratio needs 4 points in 2-space".into()));
            }
            cross_ratio_with(|i, j| c.det(&[i, j]))
        }
        Some(l) => {
            let p = c.project_from(l)?;
            if p.len() != 4 {
                return Err(Error::IndexError("projected cross-ratio needs 5 points".into()));
            }
            cross_ratio_with(|i, j| p.det(i, j))
        }
    }
}

/// Index pattern of the triple ratio: numerator triples, then denominator triples.
pub const TRIPLE_RATIO_NUM: [[usize; 3]; 3] = [[0, 1, 3], [1, 2, 4], [2, 0, 5]];
pub const TRIPLE_RATIO_DEN: [[usize; 3]; 3] = [[0, 1, 4], [1, 2, 5], [2, 0, 3]];

/// The triple ratio of 6 points in 3-space, before alternation.
pub fn triple_ratio_arg<S: Coordinate>(c: &Config<S>) -> Result<S> {
    if c.len() != 6 || c.dim() != 3 {
        return Err(Error::IndexError("triple ratio needs 6 points in 3-space".into()));
    }
    let mut num = S::one();
    let mut den = S::one();
    for (n, d) in TRIPLE_RATIO_NUM.iter().zip(&TRIPLE_RATIO_DEN) {
        let dn = c.det(n)?;
        let dd = c.det(d)?;
        if dn.is_zero() || dd.is_zero() {
            return Err(Error::DegenerateConfiguration("vanishing determinant in triple ratio".into()));
        }
        num = num.mul(&dn);
        den = den.mul(&dd);
    }
    num.div(&den)
}

/// Formal sum of configurations.
pub type ConfigChain<S> = LinComb<Config<S>, Rat>;

/// Sign convention of the Grassmannian differential: the omitted point at
/// 0-based position `i` gets sign `(-1)^(i + base)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexBase {
    Zero,
    One,
}

impl IndexBase {
    pub fn sign(self, i: usize) -> i64 {
        let k = i + if self == IndexBase::One { 1 } else { 0 };
        if k.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Terms `(sign, omitted position)` of `d` on an m-point configuration.
pub fn boundary_terms(m: usize, base: IndexBase) -> impl Iterator<Item = (i64, usize)> {
    (0..m).map(move |i| (base.sign(i), i))
}

pub fn boundary<S: Coordinate + Ord>(chain: &ConfigChain<S>, base: IndexBase) -> ConfigChain<S> {
    chain.map_keys(|c| {
        boundary_terms(c.len(), base)
            .map(|(s, i)| (c.omit(i), Rat::from_integer(s.into())))
            .collect()
    })
}

/// Every `k`-subset of `0..m` in lexicographic order.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

fn exceptional_approx(v: CF) -> bool {
    !(v.norm() > RATIO_FLOOR && (v - CF::new(1.0, 0.0)).norm() > RATIO_FLOOR)
}

/// Checks that every n-minor is nonzero and, in 3-space with at least 6
/// points, that every permuted triple ratio of every 6-subset avoids 0 and 1.
pub fn check_generic<S: Coordinate>(c: &Config<S>) -> Result<()> {
    let n = c.dim();
    let m = c.len();
    let mut approx = std::collections::HashMap::new();
    for s in subsets(m, n) {
        let d = c.det(&s)?;
        if d.near_zero() {
            return Err(Error::DegenerateConfiguration(format!("minor {s:?} vanishes")));
        }
        approx.insert(s, d.approx());
    }
    if n == 3 && m >= 6 {
        let det = |idx: [usize; 3]| -> CF {
            let mut s = idx;
            let sign = crate::freemod::permutation_sign(&rank(&idx));
            s.sort();
            approx[&s.to_vec()] * sign as f64
        };
        let perms = signed_permutations(6);
        for six in subsets(m, 6) {
            for (p, _) in &perms {
                let pt = |k: usize| six[p[k]];
                let mut v = CF::new(1.0, 0.0);
                for (a, b) in TRIPLE_RATIO_NUM.iter().zip(&TRIPLE_RATIO_DEN) {
                    v *= det([pt(a[0]), pt(a[1]), pt(a[2])]) / det([pt(b[0]), pt(b[1]), pt(b[2])]);
                }
                if exceptional_approx(v) {
                    return Err(Error::ExceptionalValue("triple ratio".into()));
                }
            }
        }
    }
    Ok(())
}

fn rank(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|x| idx.iter().filter(|y| *y < x).count()).collect()
}

/// Seeded random configuration in generic position.
pub fn random_generic<S: Coordinate>(m: usize, n: usize, rng: &mut impl Rng) -> Result<Config<S>> {
    if n < 2 || m < n {
        return Err(Error::IndexError(format!("C_{{{m},{n}}}")));
    }
    for _ in 0..RETRY_BUDGET {
        let points = (0..m).map(|_| (0..n).map(|_| S::sample(rng)).collect()).collect();
        let c = Config { points };
        match check_generic(&c) {
            Ok(()) => return Ok(c),
            Err(e) if e.is_degenerate() => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetryLimitExceeded(RETRY_BUDGET))
}

/// Random invertible n×n matrix with small integer entries.
pub fn random_gl<S: Coordinate>(n: usize, rng: &mut impl Rng) -> Vec<Vec<S>> {
    loop {
        let g: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-4i64..=4)).collect()).collect();
        let exact: Vec<Vec<Rat>> = g.iter().map(|r| r.iter().map(|&v| Rat::from_i64(v)).collect()).collect();
        let refs: Vec<&Vec<Rat>> = exact.iter().collect();
        if !det_rows(&refs).is_zero() {
            return g.iter().map(|r| r.iter().map(|&v| S::from_i64(v)).collect()).collect();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat_int;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn example() -> Config<Rat> {
        Config::from_i64s(&[&[1, 0], &[0, 1], &[1, 1], &[1, 2]])
    }

    #[test]
    fn det_examples() {
        let c = example();
        assert_eq!(c.det(&[0, 1]).unwrap(), rat_int(1));
        assert_eq!(c.det(&[0, 3]).unwrap(), rat_int(2));
        assert_eq!(c.det(&[3, 0]).unwrap(), rat_int(-2));
        assert!(matches!(c.det(&[0, 0]), Err(Error::IndexError(_))));
        assert!(matches!(c.det(&[0, 7]), Err(Error::IndexError(_))));
    }

    #[test]
    fn cross_ratio_example_and_plucker() {
        let c = example();
        assert_eq!(cross_ratio(&c, None).unwrap(), rat_int(2));
        let d = |i, j| c.det(&[i, j]).unwrap();
        assert_eq!(d(0, 1) * d(2, 3) - d(0, 2) * d(1, 3) + d(0, 3) * d(1, 2), rat_int(0));
    }

    #[test]
    fn two_point_boundary() {
        let c = Config::<Rat>::from_i64s(&[&[1, 0], &[0, 1]]);
        let chain = ConfigChain::single(c.clone(), rat_int(1));
        let b = boundary(&chain, IndexBase::Zero);
        let expected = ConfigChain::single(c.omit(0), rat_int(1)).sub(&ConfigChain::single(c.omit(1), rat_int(1)));
        assert_eq!(b, expected);
    }

    #[test]
    fn triple_ratio_is_cyclically_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let c: Config<Rat> = random_generic(6, 3, &mut rng).unwrap();
        let r = triple_ratio_arg(&c).unwrap();
        let cyc = c.select(&[1, 2, 0, 4, 5, 3]);
        assert_eq!(triple_ratio_arg(&cyc).unwrap(), r);
        let g = random_gl::<Rat>(3, &mut rng);
        assert_eq!(triple_ratio_arg(&c.transform(&g)).unwrap(), r);
    }

    #[test]
    fn random_generic_is_deterministic_and_nonconstant() {
        let a: Config<RatFunc> = random_generic(4, 2, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let b: Config<RatFunc> = random_generic(4, 2, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(a, b);
        assert!(subsets(4, 2).iter().any(|s| !a.det(s).unwrap().is_constant()));
    }

    #[test]
    fn text_round_trip() {
        let a: Config<RatFunc> = random_generic(5, 3, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        assert_eq!(Config::from_text(&a.to_text()).unwrap(), a);
        let j: Config<Jet> = random_generic(4, 2, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        assert_eq!(Config::from_text(&j.to_text()).unwrap(), j);
    }
}
