//! The three realizations every map is evaluated in.
//!
//! * [`Formal`]: determinant symbols in a free lattice, configuration-free.
//! * [`Exact`]: concrete configurations over ℚ(t) with `D = d/dt`.
//! * [`Numeric`]: complex configurations carrying a tangent vector, checked
//!   through polylogarithmic functionals.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::configs::{check_generic, random_generic, random_gl, Config, Coordinate};
use crate::error::{Error, Result};
use crate::freemod::{wedge_expand, LinComb, Wedge};
use crate::groups::{partial_3_fixed, GroupElt, GroupTag, Term};
use crate::oracles::{bloch_wigner, sv_l3, FunctionalValue};
use crate::scalars::{dlog_fractions, partial_fractions, CoprimeBasis, Factor, FieldScalar, FracKey, Jet, Poly, Rat, RatFunc, Scalar, CF};
use crate::symlattice::{self, AddElt, AddSym, DetSym, MulElt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BackendKind {
    Formal,
    Exact,
    Numeric,
}

impl fmt::Display for BackendKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BackendKind::Formal => "formal",
            BackendKind::Exact => "exact",
            BackendKind::Numeric => "numeric",
        };
        write!(f, "{s}")
    }
}

/// Field operations and configuration access shared by all backends.
pub trait Backend: Send + Sync {
    type Config: Clone + Send + Sync + fmt::Debug;
    /// An element of F^×.
    type Value: Clone + Send + Sync + fmt::Debug;
    /// An element of F regarded additively.
    type Additive: Clone + Send + Sync + fmt::Debug;

    fn kind(&self) -> BackendKind;
    fn npoints(&self, c: &Self::Config) -> usize;
    fn select(&self, c: &Self::Config, idx: &[usize]) -> Self::Config;
    /// Determinant of the given points; zero is a degeneracy error.
    fn det(&self, c: &Self::Config, idx: &[usize]) -> Result<Self::Value>;
    fn one(&self) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn one_minus(&self, a: &Self::Value) -> Result<Self::Value>;
    /// Rejects generator arguments 0 and 1.
    fn check_generator(&self, a: &Self::Value) -> Result<()>;
    fn dlog(&self, a: &Self::Value) -> Result<Self::Additive>;
    fn additive(&self, a: &Self::Value) -> Result<Self::Additive>;

    fn random_config(&self, m: usize, n: usize, rng: &mut dyn rand::RngCore) -> Result<Self::Config>;
    /// A random admissible generator argument.
    fn random_generator(&self, rng: &mut dyn rand::RngCore) -> Result<Self::Value>;
    /// A random element of F^×.
    fn random_unit(&self, rng: &mut dyn rand::RngCore) -> Result<Self::Value>;
    /// Applies a random invertible linear map to every point.
    fn gl_transform(&self, c: &Self::Config, rng: &mut dyn rand::RngCore) -> Self::Config;
    fn render_config(&self, c: &Self::Config) -> String;
    fn render_value(&self, a: &Self::Value) -> String;

    fn cross_ratio(&self, det: impl Fn(usize, usize) -> Result<Self::Value>) -> Result<Self::Value> {
        let num = self.mul(&det(0, 3)?, &det(1, 2)?);
        let den = self.mul(&det(0, 2)?, &det(1, 3)?);
        let r = self.div(&num, &den)?;
        self.check_generator(&r)?;
        Ok(r)
    }
}

/// Canonical basis keys of every group, parameterized by generator keys `G`,
/// multiplicative basis keys `M` and additive basis keys `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonKey<G, M, X> {
    Gen(G),
    /// `x·⟨g⟩` for an additive basis key `x`.
    Bracket(G, X),
    Wedge(Wedge<M>),
    AddMul(X, M),
    GenMul(G, M),
    BracketMul(G, X, M),
    AddGen(X, G),
    AddWedge(X, Wedge<M>),
    WedgeMul(Wedge<M>, M),
    AddMulMul(X, M, M),
}

impl<G: fmt::Display, M: fmt::Display, X: fmt::Display> fmt::Display for CanonKey<G, M, X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonKey::Gen(g) => write!(f, "[{g}]"),
            CanonKey::Bracket(g, x) => write!(f, "{x}·⟨{g}⟩"),
            CanonKey::Wedge(w) => write!(f, "{w}"),
            CanonKey::AddMul(x, m) => write!(f, "{x}⊗{m}"),
            CanonKey::GenMul(g, m) => write!(f, "[{g}]⊗{m}"),
            CanonKey::BracketMul(g, x, m) => write!(f, "{x}·⟨{g}⟩⊗{m}"),
            CanonKey::AddGen(x, g) => write!(f, "{x}⊗[{g}]"),
            CanonKey::AddWedge(x, w) => write!(f, "{x}⊗{w}"),
            CanonKey::WedgeMul(w, m) => write!(f, "{w}⊗{m}"),
            CanonKey::AddMulMul(x, m, n) => write!(f, "{x}⊗{m}⊗{n}"),
        }
    }
}

/// A backend whose group elements have an exact canonical form.
///
/// Every coefficient of a canonical form is rational: values in an additive
/// slot, and the weights carried by brackets, are expanded over a ℚ-basis of
/// additive keys.
pub trait ExactBackend: Backend<Value: PartialEq, Additive: PartialEq> {
    type GenKey: Ord + Clone + fmt::Debug + fmt::Display + Send + Sync;
    type MulKey: Ord + Clone + fmt::Debug + fmt::Display + Send + Sync;
    type AddKey: Ord + Clone + fmt::Debug + fmt::Display + Send + Sync;
    type Basis;

    /// Context covering every multiplicative value, additive value and
    /// bracket argument about to be canonicalized together.
    fn basis(&self, mul: &[&Self::Value], add: &[&Self::Additive], brackets: &[&Self::Value]) -> Result<Self::Basis>;
    fn gen_key(&self, a: &Self::Value) -> Self::GenKey;
    fn mul_coords(&self, basis: &Self::Basis, a: &Self::Value) -> Result<Vec<(Self::MulKey, Rat)>>;
    fn add_coords(&self, basis: &Self::Basis, x: &Self::Additive) -> Result<Vec<(Self::AddKey, Rat)>>;
    /// Coordinates of the weight `w(a)` in `⟦a⟧ = w(a)·⟨a⟩`.
    fn bracket_coords(&self, basis: &Self::Basis, a: &Self::Value) -> Result<Vec<(Self::AddKey, Rat)>>;
}

pub type Canon<B> =
    LinComb<CanonKey<<B as ExactBackend>::GenKey, <B as ExactBackend>::MulKey, <B as ExactBackend>::AddKey>, Rat>;

/// Canonical forms of several elements of one group, sharing one basis.
pub fn canonical<B: ExactBackend>(b: &B, elts: &[&GroupElt<B::Value, B::Additive>]) -> Result<Vec<Canon<B>>> {
    let (mut mul, mut add, mut brackets) = (Vec::new(), Vec::new(), Vec::new());
    for e in elts {
        for (_, t) in &e.terms {
            t.slots(&mut mul, &mut add, &mut brackets);
        }
    }
    let basis = b.basis(&mul, &add, &brackets)?;
    elts.iter().map(|e| canonical_one(b, &basis, e)).collect()
}

type MulComb<B> = LinComb<<B as ExactBackend>::MulKey, Rat>;

/// Multiplicative part of a term `x ⊗ (…)` with an additive first factor.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum AddPart<M: Ord> {
    Mul(M),
    Wedge(Wedge<M>),
    Pair(M, M),
}

/// Terms `c·x⊗m` collected per distinct additive factor `x`, so that each
/// `x` is expanded into coordinates once.
struct ByAdditive<'a, A, M: Ord> {
    groups: Vec<(&'a A, LinComb<AddPart<M>, Rat>)>,
}

impl<'a, A: PartialEq, M: Ord + Clone> ByAdditive<'a, A, M> {
    fn push(&mut self, x: &'a A, parts: impl IntoIterator<Item = (AddPart<M>, Rat)>, c: &Rat) {
        let i = match self.groups.iter().position(|(y, _)| *y == x) {
            Some(i) => i,
            None => {
                self.groups.push((x, LinComb::new()));
                self.groups.len() - 1
            }
        };
        for (p, k) in parts {
            self.groups[i].1.add_term(p, c * k);
        }
    }
}

fn canonical_one<B: ExactBackend>(b: &B, basis: &B::Basis, e: &GroupElt<B::Value, B::Additive>) -> Result<Canon<B>> {
    let mut out = Canon::<B>::new();
    let mut by_add = ByAdditive::<B::Additive, B::MulKey> { groups: Vec::new() };
    let mut by_bracket: Vec<(&B::Value, MulComb<B>)> = Vec::new();
    let coords = |v: &B::Value| b.mul_coords(basis, v);
    let adds = |x: &B::Additive| b.add_coords(basis, x);
    let wedge = |vs: &[&B::Value]| -> Result<LinComb<Wedge<B::MulKey>, Rat>> {
        let slots = vs.iter().map(|v| coords(v)).collect::<Result<Vec<_>>>()?;
        Ok(wedge_expand(&slots))
    };
    for (c, t) in &e.terms {
        match t {
            Term::Gen(a) => out.add_term(CanonKey::Gen(b.gen_key(a)), c.clone()),
            Term::Bracket(a) => {
                for (x, w) in b.bracket_coords(basis, a)? {
                    out.add_term(CanonKey::Bracket(b.gen_key(a), x), c * w);
                }
            }
            Term::Wedge2(x, y) => {
                for (w, k) in wedge(&[x, y])?.iter() {
                    out.add_term(CanonKey::Wedge(w.clone()), c * k);
                }
            }
            Term::Wedge3(x, y, z) => {
                for (w, k) in wedge(&[x, y, z])?.iter() {
                    out.add_term(CanonKey::Wedge(w.clone()), c * k);
                }
            }
            Term::AddMul(x, y) => {
                by_add.push(x, coords(y)?.into_iter().map(|(m, e)| (AddPart::Mul(m), e)), c);
            }
            Term::B2Mul(a, y) => {
                for (m, e) in coords(y)? {
                    out.add_term(CanonKey::GenMul(b.gen_key(a), m), c * e);
                }
            }
            Term::BetaMul(a, y) => {
                let i = match by_bracket.iter().position(|(v, _)| *v == a) {
                    Some(i) => i,
                    None => {
                        by_bracket.push((a, LinComb::new()));
                        by_bracket.len() - 1
                    }
                };
                for (m, e) in coords(y)? {
                    by_bracket[i].1.add_term(m, c * e);
                }
            }
            Term::AddB2(x, a) => {
                for (xk, xc) in adds(x)? {
                    out.add_term(CanonKey::AddGen(xk, b.gen_key(a)), c * xc);
                }
            }
            Term::AddWedge(x, y, z) => {
                by_add.push(x, wedge(&[y, z])?.iter().map(|(w, k)| (AddPart::Wedge(w.clone()), k.clone())), c);
            }
            Term::Wedge2Mul(x, y, z) => {
                let w = wedge(&[x, y])?;
                for (m, e) in coords(z)? {
                    for (wk, k) in w.iter() {
                        out.add_term(CanonKey::WedgeMul(wk.clone(), m.clone()), c * k * &e);
                    }
                }
            }
            Term::AddMulMul(x, y, z) => {
                let zs = coords(z)?;
                let pairs = coords(y)?
                    .into_iter()
                    .flat_map(|(m, e)| zs.iter().map(move |(n, f)| (AddPart::Pair(m.clone(), n.clone()), &e * f)))
                    .collect::<Vec<_>>();
                by_add.push(x, pairs, c);
            }
        }
    }
    for (a, ms) in by_bracket {
        for (x, w) in b.bracket_coords(basis, a)? {
            for (m, e) in ms.iter() {
                out.add_term(CanonKey::BracketMul(b.gen_key(a), x.clone(), m.clone()), &w * e);
            }
        }
    }
    for (x, parts) in by_add.groups {
        for (xk, xc) in adds(x)? {
            for (part, k) in parts.iter() {
                let key = match part {
                    AddPart::Mul(m) => CanonKey::AddMul(xk.clone(), m.clone()),
                    AddPart::Wedge(w) => CanonKey::AddWedge(xk.clone(), w.clone()),
                    AddPart::Pair(m, n) => CanonKey::AddMulMul(xk.clone(), m.clone(), n.clone()),
                };
                out.add_term(key, &xc * k);
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------- formal

/// Points of a symbolic configuration: labels into the formal symbol table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymConfig {
    pub labels: Vec<usize>,
    pub dim: usize,
}

/// Backend A: identities in the free lattice on determinant symbols.
#[derive(Clone, Copy, Debug, Default)]
pub struct Formal;

/// Labels available to formal generators; the Plücker spot check knows 8 points.
const FORMAL_LABELS: usize = 8;

impl Backend for Formal {
    type Config = SymConfig;
    type Value = MulElt;
    type Additive = AddElt;

    fn kind(&self) -> BackendKind {
        BackendKind::Formal
    }
    fn npoints(&self, c: &SymConfig) -> usize {
        c.labels.len()
    }
    fn select(&self, c: &SymConfig, idx: &[usize]) -> SymConfig {
        SymConfig {
            labels: idx.iter().map(|&i| c.labels[i]).collect(),
            dim: c.dim,
        }
    }
    fn det(&self, c: &SymConfig, idx: &[usize]) -> Result<MulElt> {
        if idx.len() != c.dim {
            return Err(Error::IndexError(format!("{idx:?} in dimension {}", c.dim)));
        }
        let labels: Vec<usize> = idx
            .iter()
            .map(|&i| c.labels.get(i).copied().ok_or_else(|| Error::IndexError(format!("{i}"))))
            .collect::<Result<_>>()?;
        MulElt::det(&labels)
    }
    fn one(&self) -> MulElt {
        MulElt::one()
    }
    fn mul(&self, a: &MulElt, b: &MulElt) -> MulElt {
        a.mul(b)
    }
    fn div(&self, a: &MulElt, b: &MulElt) -> Result<MulElt> {
        Ok(a.div(b))
    }
    fn one_minus(&self, a: &MulElt) -> Result<MulElt> {
        a.one_minus()
    }
    fn check_generator(&self, a: &MulElt) -> Result<()> {
        if a.is_one() {
            return Err(Error::ExceptionalValue("formal 1".into()));
        }
        Ok(())
    }
    fn dlog(&self, a: &MulElt) -> Result<AddElt> {
        Ok(symlattice::dlog(a))
    }
    fn additive(&self, a: &MulElt) -> Result<AddElt> {
        Ok(symlattice::additive(a))
    }
    fn random_config(&self, m: usize, n: usize, _rng: &mut dyn rand::RngCore) -> Result<SymConfig> {
        Ok(SymConfig {
            labels: (0..m).collect(),
            dim: n,
        })
    }
    fn random_generator(&self, rng: &mut dyn rand::RngCore) -> Result<MulElt> {
        let mut labels: Vec<usize> = (0..FORMAL_LABELS).collect();
        labels.shuffle(rng);
        let c = SymConfig {
            labels: labels[..4].to_vec(),
            dim: 2,
        };
        self.cross_ratio(|i, j| self.det(&c, &[i, j]))
    }
    fn random_unit(&self, rng: &mut dyn rand::RngCore) -> Result<MulElt> {
        let mut labels: Vec<usize> = (0..FORMAL_LABELS).collect();
        labels.shuffle(rng);
        MulElt::det(&labels[..2])
    }
    fn gl_transform(&self, c: &SymConfig, _rng: &mut dyn rand::RngCore) -> SymConfig {
        c.clone()
    }
    fn render_config(&self, c: &SymConfig) -> String {
        let l: Vec<String> = c.labels.iter().map(|i| format!("x{i}")).collect();
        format!("({}) in dimension {}", l.join(","), c.dim)
    }
    fn render_value(&self, a: &MulElt) -> String {
        a.render()
    }
}

impl ExactBackend for Formal {
    type GenKey = MulElt;
    type MulKey = DetSym;
    type AddKey = AddSym;
    type Basis = ();

    fn basis(&self, _mul: &[&MulElt], _add: &[&AddElt], _brackets: &[&MulElt]) -> Result<()> {
        Ok(())
    }
    fn gen_key(&self, a: &MulElt) -> MulElt {
        a.clone()
    }
    fn mul_coords(&self, _basis: &(), a: &MulElt) -> Result<Vec<(DetSym, Rat)>> {
        Ok(a.coords())
    }
    fn add_coords(&self, _basis: &(), x: &AddElt) -> Result<Vec<(AddSym, Rat)>> {
        Ok(x.iter().map(|(k, c)| (k.clone(), c.clone())).collect())
    }
    fn bracket_coords(&self, _basis: &(), a: &MulElt) -> Result<Vec<(AddSym, Rat)>> {
        Ok(vec![(AddSym::Weight(a.clone()), Rat::from_integer(1.into()))])
    }
}

// ----------------------------------------------------------------- exact

/// Backend B: F = ℚ(t), D = d/dt.
#[derive(Clone, Copy, Debug, Default)]
pub struct Exact;

/// An element of ℚ(t) in an additive slot, kept in the form it was built in
/// so that logarithmic derivatives expand without rational-function sums.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactAdditive {
    /// `Dlog v = v′/v`
    Dlog(RatFunc),
    Elem(RatFunc),
}

impl ExactAdditive {
    pub fn value(&self) -> Result<RatFunc> {
        match self {
            ExactAdditive::Dlog(v) => v.dlog(),
            ExactAdditive::Elem(v) => Ok(v.clone()),
        }
    }
}

impl Backend for Exact {
    type Config = Config<RatFunc>;
    type Value = RatFunc;
    type Additive = ExactAdditive;

    fn kind(&self) -> BackendKind {
        BackendKind::Exact
    }
    fn npoints(&self, c: &Self::Config) -> usize {
        c.len()
    }
    fn select(&self, c: &Self::Config, idx: &[usize]) -> Self::Config {
        c.select(idx)
    }
    fn det(&self, c: &Self::Config, idx: &[usize]) -> Result<RatFunc> {
        let d = c.det(idx)?;
        if Scalar::is_zero(&d) {
            return Err(Error::DegenerateConfiguration(format!("Δ{idx:?} = 0")));
        }
        Ok(d)
    }
    fn one(&self) -> RatFunc {
        <RatFunc as Scalar>::one()
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        Scalar::mul(a, b)
    }
    fn div(&self, a: &RatFunc, b: &RatFunc) -> Result<RatFunc> {
        FieldScalar::div(a, b)
    }
    fn one_minus(&self, a: &RatFunc) -> Result<RatFunc> {
        let v = a.one_minus();
        if Scalar::is_zero(&v) {
            return Err(Error::ExceptionalValue("1 − 1".into()));
        }
        Ok(v)
    }
    fn check_generator(&self, a: &RatFunc) -> Result<()> {
        if Scalar::is_zero(a) || a.is_one() {
            return Err(Error::ExceptionalValue(a.to_string()));
        }
        Ok(())
    }
    fn dlog(&self, a: &RatFunc) -> Result<ExactAdditive> {
        if Scalar::is_zero(a) {
            return Err(Error::ZeroValue("Dlog 0".into()));
        }
        Ok(ExactAdditive::Dlog(a.clone()))
    }
    fn additive(&self, a: &RatFunc) -> Result<ExactAdditive> {
        Ok(ExactAdditive::Elem(a.clone()))
    }
    fn random_config(&self, m: usize, n: usize, rng: &mut dyn rand::RngCore) -> Result<Self::Config> {
        random_generic(m, n, &mut &mut *rng)
    }
    fn random_generator(&self, rng: &mut dyn rand::RngCore) -> Result<RatFunc> {
        for _ in 0..crate::configs::RETRY_BUDGET {
            let mut poly = || {
                let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-5i64..=5)).collect();
                Poly::from_i64s(&c)
            };
            let (num, den) = (poly(), poly());
            if den.is_zero() || num.is_zero() {
                continue;
            }
            let a = RatFunc::new(num, den)?;
            if !a.is_constant() && self.check_generator(&a).is_ok() && !Scalar::is_zero(&a.one_minus()) {
                return Ok(a);
            }
        }
        Err(Error::RetryLimitExceeded(crate::configs::RETRY_BUDGET))
    }
    fn random_unit(&self, rng: &mut dyn rand::RngCore) -> Result<RatFunc> {
        self.random_generator(rng)
    }
    fn gl_transform(&self, c: &Self::Config, rng: &mut dyn rand::RngCore) -> Self::Config {
        let g = random_gl::<RatFunc>(c.dim(), &mut &mut *rng);
        c.transform(&g)
    }
    fn render_config(&self, c: &Self::Config) -> String {
        c.to_text()
    }
    fn render_value(&self, a: &RatFunc) -> String {
        a.to_list()
    }
}

impl ExactBackend for Exact {
    type GenKey = RatFunc;
    type MulKey = Factor;
    type AddKey = FracKey;
    type Basis = CoprimeBasis;

    fn basis(&self, mul: &[&RatFunc], add: &[&ExactAdditive], brackets: &[&RatFunc]) -> Result<CoprimeBasis> {
        let mut values: Vec<RatFunc> = mul.iter().map(|v| (*v).clone()).collect();
        for x in add {
            match x {
                ExactAdditive::Dlog(v) => values.push(v.clone()),
                ExactAdditive::Elem(v) if !Scalar::is_zero(v) => values.push(RatFunc::from_poly(v.den().clone())),
                ExactAdditive::Elem(_) => {}
            }
        }
        for a in brackets {
            values.push((*a).clone());
            values.push(a.one_minus());
        }
        CoprimeBasis::from_values(values.iter())
    }
    fn gen_key(&self, a: &RatFunc) -> RatFunc {
        a.clone()
    }
    fn mul_coords(&self, basis: &CoprimeBasis, a: &RatFunc) -> Result<Vec<(Factor, Rat)>> {
        Ok(basis
            .exponents(a)?
            .into_iter()
            .map(|(i, e)| (basis.factor(i).clone(), Rat::from_integer(e.into())))
            .collect())
    }
    fn add_coords(&self, basis: &CoprimeBasis, x: &ExactAdditive) -> Result<Vec<(FracKey, Rat)>> {
        match x {
            ExactAdditive::Dlog(v) => dlog_fractions(v, basis),
            ExactAdditive::Elem(v) => partial_fractions(v, basis),
        }
    }
    /// `w(a) = Dlog a − Dlog(1−a)`.
    fn bracket_coords(&self, basis: &CoprimeBasis, a: &RatFunc) -> Result<Vec<(FracKey, Rat)>> {
        let mut out = dlog_fractions(a, basis)?;
        out.extend(dlog_fractions(&a.one_minus(), basis)?.into_iter().map(|(k, c)| (k, -c)));
        Ok(out)
    }
}

/// `w(a) = D(a) / (a(1−a))`, so that `⟦a⟧ = w(a)·⟨a⟩`.
pub fn bracket_weight(a: &RatFunc) -> Result<RatFunc> {
    let den = Scalar::mul(a, &a.one_minus());
    FieldScalar::div(&a.derive(), &den)
}

// --------------------------------------------------------------- numeric

/// Backend C: complex configurations with a tangent direction.
#[derive(Clone, Copy, Debug, Default)]
pub struct Numeric;

const NUMERIC_VALUE_FLOOR: f64 = 1e-3;

impl Backend for Numeric {
    type Config = Config<Jet>;
    type Value = Jet;
    type Additive = CF;

    fn kind(&self) -> BackendKind {
        BackendKind::Numeric
    }
    fn npoints(&self, c: &Self::Config) -> usize {
        c.len()
    }
    fn select(&self, c: &Self::Config, idx: &[usize]) -> Self::Config {
        c.select(idx)
    }
    fn det(&self, c: &Self::Config, idx: &[usize]) -> Result<Jet> {
        let d = c.det(idx)?;
        if d.near_zero() {
            return Err(Error::DegenerateConfiguration(format!("|Δ{idx:?}| below floor")));
        }
        Ok(d)
    }
    fn one(&self) -> Jet {
        <Jet as Scalar>::one()
    }
    fn mul(&self, a: &Jet, b: &Jet) -> Jet {
        Scalar::mul(a, b)
    }
    fn div(&self, a: &Jet, b: &Jet) -> Result<Jet> {
        FieldScalar::div(a, b)
    }
    fn one_minus(&self, a: &Jet) -> Result<Jet> {
        let v = <Jet as Scalar>::one().sub(a);
        if Scalar::is_zero(&v) {
            return Err(Error::ExceptionalValue("1 − 1".into()));
        }
        Ok(v)
    }
    fn check_generator(&self, a: &Jet) -> Result<()> {
        if a.val.norm() == 0.0 || a.is_one() {
            return Err(Error::ExceptionalValue(format!("{}", a.val)));
        }
        Ok(())
    }
    fn dlog(&self, a: &Jet) -> Result<CF> {
        a.dlog()
    }
    fn additive(&self, a: &Jet) -> Result<CF> {
        Ok(a.val)
    }
    fn random_config(&self, m: usize, n: usize, rng: &mut dyn rand::RngCore) -> Result<Self::Config> {
        random_generic(m, n, &mut &mut *rng)
    }
    fn random_generator(&self, rng: &mut dyn rand::RngCore) -> Result<Jet> {
        loop {
            let a = Jet::sample(&mut &mut *rng);
            let om = CF::new(1.0, 0.0) - a.val;
            if a.val.norm() > NUMERIC_VALUE_FLOOR && om.norm() > NUMERIC_VALUE_FLOOR {
                return Ok(a);
            }
        }
    }
    fn random_unit(&self, rng: &mut dyn rand::RngCore) -> Result<Jet> {
        self.random_generator(rng)
    }
    fn gl_transform(&self, c: &Self::Config, rng: &mut dyn rand::RngCore) -> Self::Config {
        let g = random_gl::<Jet>(c.dim(), &mut &mut *rng);
        c.transform(&g)
    }
    fn render_config(&self, c: &Self::Config) -> String {
        c.to_text()
    }
    fn render_value(&self, a: &Jet) -> String {
        a.render()
    }
}

/// Homomorphisms F^× → ℝ available at a jet: `log|a|`, `Re Dlog a`, `Im Dlog a`.
fn homs(a: &Jet) -> Result<[f64; 3]> {
    let d = a.dlog()?;
    Ok([a.val.norm().ln(), d.re, d.im])
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// `Φ_k(a) = Dlog(1−a)·φ_k(a) − Dlog(a)·φ_k(1−a)`, the image of `⟦a⟧₂` under
/// `∂` followed by `x⊗y ↦ x·φ_k(y)`.
fn beta2_functionals(a: &Jet) -> Result<[CF; 3]> {
    let om = Numeric.one_minus(a)?;
    let (ha, hom) = (homs(a)?, homs(&om)?);
    let (da, dom) = (a.dlog()?, om.dlog()?);
    Ok([0, 1, 2].map(|k| dom * ha[k] - da * hom[k]))
}

impl Numeric {
    /// Values of the registered functionals on an element; each functional
    /// is well defined on the quotient group named by the element's tag.
    pub fn functionals(&self, e: &GroupElt<Jet, CF>) -> Result<Vec<FunctionalValue>> {
        let count = match e.tag {
            GroupTag::QF | GroupTag::B2 | GroupTag::B3 | GroupTag::Wedge3 => 1,
            GroupTag::Beta2 | GroupTag::Wedge2 | GroupTag::AddMul | GroupTag::B2Mul | GroupTag::AddWedge => 3,
            GroupTag::Beta3 | GroupTag::Mixed => 10,
            GroupTag::Wedge2Mul | GroupTag::MixedProjection => {
                return Err(Error::BackendInadmissible {
                    face: format!("{:?}", e.tag),
                    backend: "numeric".into(),
                    reason: "projection targets are exact-only".into(),
                })
            }
        };
        if e.tag == GroupTag::Beta3 {
            return self.functionals(&partial_3_fixed(self, e)?);
        }
        let mut out = vec![FunctionalValue::zero(); count];
        let real = |v: f64| CF::new(v, 0.0);
        for (c, t) in &e.terms {
            let c = crate::scalars::rat_to_f64(c);
            match t {
                Term::Gen(a) => {
                    let v = if e.tag == GroupTag::B3 { sv_l3(a.val)? } else { bloch_wigner(a.val)? };
                    out[0].push(real(c * v));
                }
                Term::Bracket(a) => {
                    for (k, v) in beta2_functionals(a)?.into_iter().enumerate() {
                        out[k].push(v * c);
                    }
                }
                Term::Wedge2(x, y) => {
                    let (hx, hy) = (homs(x)?, homs(y)?);
                    for (k, (i, j)) in PAIRS.iter().enumerate() {
                        out[k].push(real(c * (hx[*i] * hy[*j] - hx[*j] * hy[*i])));
                    }
                }
                Term::Wedge3(x, y, z) => {
                    let (hx, hy, hz) = (homs(x)?, homs(y)?, homs(z)?);
                    let det = hx[0] * (hy[1] * hz[2] - hy[2] * hz[1]) - hx[1] * (hy[0] * hz[2] - hy[2] * hz[0])
                        + hx[2] * (hy[0] * hz[1] - hy[1] * hz[0]);
                    out[0].push(real(c * det));
                }
                Term::AddMul(x, y) => {
                    for (k, h) in homs(y)?.into_iter().enumerate() {
                        out[k].push(x * (c * h));
                    }
                }
                Term::B2Mul(a, y) => {
                    let d = bloch_wigner(a.val)?;
                    for (k, h) in homs(y)?.into_iter().enumerate() {
                        out[k].push(real(c * d * h));
                    }
                }
                Term::BetaMul(a, y) => {
                    let f = beta2_functionals(a)?;
                    let h = homs(y)?;
                    for k in 0..3 {
                        for l in 0..3 {
                            out[3 * k + l].push(f[k] * (c * h[l]));
                        }
                    }
                }
                Term::AddB2(x, y) => out[9].push(x * (c * bloch_wigner(y.val)?)),
                Term::AddWedge(x, y, z) => {
                    let (hy, hz) = (homs(y)?, homs(z)?);
                    for (k, (i, j)) in PAIRS.iter().enumerate() {
                        out[k].push(x * (c * (hy[*i] * hz[*j] - hy[*j] * hz[*i])));
                    }
                }
                Term::Wedge2Mul(..) | Term::AddMulMul(..) => unreachable!("rejected above"),
            }
        }
        Ok(out)
    }
}

/// Largest relative functional residual between two elements of one group.
pub fn functional_residual(lhs: &[FunctionalValue], rhs: &[FunctionalValue]) -> f64 {
    lhs.iter()
        .zip(rhs)
        .map(|(l, r)| {
            let cond = l.condition + r.condition;
            if cond == 0.0 {
                0.0
            } else {
                (l.value - r.value).norm() / cond
            }
        })
        .fold(0.0, f64::max)
}

/// Screens a configuration for the numeric floor on every minor.
pub fn numeric_generic(c: &Config<Jet>) -> Result<()> {
    check_generic(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bracket_weight_of_t() {
        // w(t) = 1/(t(1−t))
        let t = RatFunc::t();
        let w = bracket_weight(&t).unwrap();
        let expect = FieldScalar::inv(&Scalar::mul(&t, &t.one_minus())).unwrap();
        assert_eq!(w, expect);
    }

    #[test]
    fn generators_are_admissible() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let a = Exact.random_generator(&mut rng).unwrap();
            assert!(Exact.check_generator(&a).is_ok());
            let f = Formal.random_generator(&mut rng).unwrap();
            assert!(f.one_minus().is_ok());
        }
    }
}
