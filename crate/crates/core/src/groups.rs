//! Group elements of the three complexes and the maps between them.
//!
//! Elements are formal sums of raw terms over a backend's field values; a
//! backend turns them into canonical forms (exact) or functional values
//! (numeric). Every map here is the linear extension of its generator formula.

use std::fmt;

use serde::Serialize;

use crate::backend::Backend;
use crate::conventions::{ConventionTable, Partial3Term};
use crate::error::{Error, Result};
use crate::freemod::signed_permutations;
use crate::scalars::{rat, rat_int, Rat};

/// Which group an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GroupTag {
    /// ℚ\[F\], the ambient group of B₂ and B₃ generators.
    QF,
    B2,
    B3,
    Beta2,
    Beta3,
    Wedge2,
    Wedge3,
    /// F ⊗ F^×
    AddMul,
    /// B₂ ⊗ F^×
    B2Mul,
    /// (β₂ ⊗ F^×) ⊕ (F ⊗ B₂)
    Mixed,
    /// F ⊗ ∧²F^×
    AddWedge,
    /// ∧²F^× ⊗ F^×, image of B₂⊗F^× under δ⊗id
    Wedge2Mul,
    /// (F⊗F^×⊗F^×) ⊕ (F⊗∧²F^×), image of the mixed group under (∂⊗id, id⊗δ)
    MixedProjection,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupTag::QF => "ℚ[F]",
            GroupTag::B2 => "B₂(F)",
            GroupTag::B3 => "B₃(F)",
            GroupTag::Beta2 => "β₂(F)",
            GroupTag::Beta3 => "β₃(F)",
            GroupTag::Wedge2 => "∧²F^×",
            GroupTag::Wedge3 => "∧³F^×",
            GroupTag::AddMul => "F⊗F^×",
            GroupTag::B2Mul => "B₂(F)⊗F^×",
            GroupTag::Mixed => "(β₂(F)⊗F^×)⊕(F⊗B₂(F))",
            GroupTag::AddWedge => "F⊗∧²F^×",
            GroupTag::Wedge2Mul => "∧²F^×⊗F^×",
            GroupTag::MixedProjection => "(F⊗F^×⊗F^×)⊕(F⊗∧²F^×)",
        };
        write!(f, "{s}")
    }
}

/// One generator of one of the groups; `V` is a multiplicative value, `A`
/// an additive one.
#[derive(Clone, Debug, PartialEq)]
pub enum Term<V, A> {
    /// `[a]`
    Gen(V),
    /// `⟦a⟧`
    Bracket(V),
    Wedge2(V, V),
    Wedge3(V, V, V),
    /// `x ⊗ y`
    AddMul(A, V),
    /// `[a]₂ ⊗ b`
    B2Mul(V, V),
    /// `⟦a⟧₂ ⊗ b`
    BetaMul(V, V),
    /// `x ⊗ [y]₂`
    AddB2(A, V),
    /// `x ⊗ y∧z`
    AddWedge(A, V, V),
    /// `x∧y ⊗ z`
    Wedge2Mul(V, V, V),
    /// `x ⊗ y ⊗ z`
    AddMulMul(A, V, V),
}

impl<V, A> Term<V, A> {
    /// Collects the values in multiplicative (F^×) slots, in additive (F)
    /// slots, and under brackets.
    pub fn slots<'a>(&'a self, mul: &mut Vec<&'a V>, add: &mut Vec<&'a A>, brackets: &mut Vec<&'a V>) {
        match self {
            Term::Gen(_) => {}
            Term::Bracket(a) => brackets.push(a),
            Term::AddB2(x, _) => add.push(x),
            Term::Wedge2(x, y) => mul.extend([x, y]),
            Term::AddWedge(x, y, z) | Term::AddMulMul(x, y, z) => {
                add.push(x);
                mul.extend([y, z]);
            }
            Term::Wedge3(x, y, z) | Term::Wedge2Mul(x, y, z) => mul.extend([x, y, z]),
            Term::AddMul(x, y) => {
                add.push(x);
                mul.push(y);
            }
            Term::B2Mul(_, y) => mul.push(y),
            Term::BetaMul(a, y) => {
                brackets.push(a);
                mul.push(y);
            }
        }
    }
}

/// Formal sum of terms in one group.
#[derive(Clone, Debug)]
pub struct GroupElt<V, A> {
    pub tag: GroupTag,
    pub terms: Vec<(Rat, Term<V, A>)>,
}

pub type Elt<B> = GroupElt<<B as Backend>::Value, <B as Backend>::Additive>;

impl<V: Clone, A: Clone> GroupElt<V, A> {
    pub fn new(tag: GroupTag) -> Self {
        GroupElt { tag, terms: Vec::new() }
    }

    pub fn single(tag: GroupTag, c: Rat, t: Term<V, A>) -> Self {
        GroupElt { tag, terms: vec![(c, t)] }
    }

    pub fn push(&mut self, c: Rat, t: Term<V, A>) {
        self.terms.push((c, t));
    }

    /// Appends `s · other`.
    pub fn extend_scaled(&mut self, other: &Self, s: &Rat) {
        self.terms.extend(other.terms.iter().map(|(c, t)| (c * s, t.clone())));
    }

    pub fn scaled(&self, s: &Rat) -> Self {
        let mut out = Self::new(self.tag);
        out.extend_scaled(self, s);
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self − other`, as a single raw sum.
    pub fn minus(&self, other: &Self) -> Result<Self> {
        if self.tag != other.tag {
            return Err(Error::KeyDomainMismatch(format!("{} vs {}", self.tag, other.tag)));
        }
        let mut out = self.clone();
        out.extend_scaled(other, &rat_int(-1));
        Ok(out)
    }
}

fn expect_tag<V, A>(e: &GroupElt<V, A>, tags: &[GroupTag], map: &str) -> Result<()> {
    if tags.contains(&e.tag) {
        Ok(())
    } else {
        Err(Error::KeyDomainMismatch(format!("{map} applied to an element of {}", e.tag)))
    }
}

fn bad_term(map: &str) -> Error {
    Error::KeyDomainMismatch(format!("unexpected term for {map}"))
}

fn sign(s: i8) -> Rat {
    rat_int(s as i64)
}

/// `δ([a]₂) = (1−a)∧a`.
pub fn delta_2<B: Backend>(b: &B, e: &Elt<B>) -> Result<Elt<B>> {
    expect_tag(e, &[GroupTag::B2, GroupTag::QF], "δ₂")?;
    let mut out = GroupElt::new(GroupTag::Wedge2);
    for (c, t) in &e.terms {
        let Term::Gen(a) = t else { return Err(bad_term("δ₂")) };
        b.check_generator(a)?;
        out.push(c.clone(), Term::Wedge2(b.one_minus(a)?, a.clone()));
    }
    Ok(out)
}

/// `δ([a]₃) = [a]₂⊗a`.
pub fn delta_3<B: Backend>(b: &B, e: &Elt<B>) -> Result<Elt<B>> {
    expect_tag(e, &[GroupTag::B3, GroupTag::QF], "δ₃")?;
    let mut out = GroupElt::new(GroupTag::B2Mul);
    for (c, t) in &e.terms {
        let Term::Gen(a) = t else { return Err(bad_term("δ₃")) };
        b.check_generator(a)?;
        out.push(c.clone(), Term::B2Mul(a.clone(), a.clone()));
    }
    Ok(out)
}

/// `δ([a]₂⊗b) = (1−a)∧a∧b`.
pub fn delta_32<B: Backend>(b: &B, e: &Elt<B>) -> Result<Elt<B>> {
    expect_tag(e, &[GroupTag::B2Mul], "δ₃₂")?;
    let mut out = GroupElt::new(GroupTag::Wedge3);
    for (c, t) in &e.terms {
        let Term::B2Mul(a, y) = t else { return Err(bad_term("δ₃₂")) };
        b.check_generator(a)?;
        out.push(c.clone(), Term::Wedge3(b.one_minus(a)?, a.clone(), y.clone()));
    }
    Ok(out)
}

/// `∂(⟦a⟧₂) = s₀·(−Dlog(1−a)⊗a) + s₁·(Dlog a⊗(1−a))`.
pub fn partial_2<B: Backend>(b: &B, e: &Elt<B>, table: &ConventionTable) -> Result<Elt<B>> {
    expect_tag(e, &[GroupTag::Beta2], "∂₂")?;
    let [s0, s1] = table.partial_2;
    let mut out = GroupElt::new(GroupTag::AddMul);
    for (c, t) in &e.terms {
        let Term::Bracket(a) = t else { return Err(bad_term("∂₂")) };
        b.check_generator(a)?;
        let om = b.one_minus(a)?;
        out.push(c * sign(-s0), Term::AddMul(b.dlog(&om)?, a.clone()));
        out.push(c * sign(s1), Term::AddMul(b.dlog(a)?, om));
    }
    Ok(out)
}

/// `∂(⟦a⟧₃) = ⟦a⟧₂⊗a + X⊗[a]₂` with `X` chosen by the table.
pub fn partial_3<B: Backend>(b: &B, e: &Elt<B>, table: &ConventionTable) -> Result<Elt<B>> {
    partial_3_with(b, e, table.partial3_second_term)
}

/// `∂(⟦a⟧₃)` in the `Dlog(a)⊗[a]₂` form, independent of any table.
pub fn partial_3_fixed<B: Backend>(b: &B, e: &Elt<B>) -> Result<Elt<B>> {
    partial_3_with(b, e, Partial3Term::DlogA)
}

fn partial_3_with<B: Backend>(b: &B, e: &Elt<B>, second: Partial3Term) -> Result<Elt<B>> {
    expect_tag(e, &[GroupTag::Beta3], "∂₃")?;
    let mut out = GroupElt::new(GroupTag::Mixed);
    for (c, t) in &e.terms {
        let Term::Bracket(a) = t else { return Err(bad_term("∂₃")) };
        b.check_generator(a)?;
        out.push(c.clone(), Term::BetaMul(a.clone(), a.clone()));
        let x = match second {
            Partial3Term::OneMinusA => b.additive(&b.one_minus(a)?)?,
            Partial3Term::DlogA => b.dlog(a)?,
        };
        out.push(c.clone(), Term::AddB2(x, a.clone()));
    }
    Ok(out)
}

/// `∂(⟦a⟧₂⊗b + x⊗[y]₂) = s₀·Dlog(1−a)⊗a∧b − s₁·Dlog(a)⊗(1−a)∧b + s₂·x⊗(1−y)∧y`.
pub fn partial_32<B: Backend>(b: &B, e: &Elt<B>, table: &ConventionTable) -> Result<Elt<B>> {
    expect_tag(e, &[GroupTag::Mixed], "∂₃₂")?;
    let [s0, s1, s2] = table.partial_32;
    let mut out = GroupElt::new(GroupTag::AddWedge);
    for (c, t) in &e.terms {
        match t {
            Term::BetaMul(a, y) => {
                b.check_generator(a)?;
                let om = b.one_minus(a)?;
                out.push(c * sign(s0), Term::AddWedge(b.dlog(&om)?, a.clone(), y.clone()));
                out.push(c * sign(-s1), Term::AddWedge(b.dlog(a)?, om, y.clone()));
            }
            Term::AddB2(x, y) => {
                b.check_generator(y)?;
                out.push(c * sign(s2), Term::AddWedge(x.clone(), b.one_minus(y)?, y.clone()));
            }
            _ => return Err(bad_term("∂₃₂")),
        }
    }
    Ok(out)
}

/// `[a] ↦ ⟦a⟧ = D(a)/(a(1−a))·[a]`: this is `f_D` on ℚ\[F\] and `τ_D` on
/// B₂, B₃ alike.
pub fn bracket<B: Backend>(b: &B, e: &Elt<B>) -> Result<Elt<B>> {
    let tag = match e.tag {
        GroupTag::B2 => GroupTag::Beta2,
        GroupTag::B3 => GroupTag::Beta3,
        other => return Err(Error::KeyDomainMismatch(format!("bracket on {other}"))),
    };
    let mut out = GroupElt::new(tag);
    for (c, t) in &e.terms {
        let Term::Gen(a) = t else { return Err(bad_term("τ_D")) };
        b.check_generator(a)?;
        out.push(c.clone(), Term::Bracket(a.clone()));
    }
    Ok(out)
}

pub fn f_d<B: Backend>(b: &B, e: &Elt<B>) -> Result<Elt<B>> {
    bracket(b, e)
}

pub fn tau_d2<B: Backend>(b: &B, e: &Elt<B>) -> Result<Elt<B>> {
    expect_tag(e, &[GroupTag::B2], "τ_D")?;
    bracket(b, e)
}

pub fn tau_d3<B: Backend>(b: &B, e: &Elt<B>) -> Result<Elt<B>> {
    expect_tag(e, &[GroupTag::B3], "τ_D")?;
    bracket(b, e)
}

/// `g(x∧y) = Dlog x⊗y − Dlog y⊗x`.
pub fn g_2d<B: Backend>(b: &B, e: &Elt<B>) -> Result<Elt<B>> {
    expect_tag(e, &[GroupTag::Wedge2], "g₂")?;
    let mut out = GroupElt::new(GroupTag::AddMul);
    for (c, t) in &e.terms {
        let Term::Wedge2(x, y) = t else { return Err(bad_term("g₂")) };
        out.push(c.clone(), Term::AddMul(b.dlog(x)?, y.clone()));
        out.push(-c, Term::AddMul(b.dlog(y)?, x.clone()));
    }
    Ok(out)
}

/// `g([a]₂⊗b) = ⟦a⟧₂⊗b + Dlog b⊗[a]₂`.
pub fn g_3d_mid<B: Backend>(b: &B, e: &Elt<B>) -> Result<Elt<B>> {
    expect_tag(e, &[GroupTag::B2Mul], "g₃")?;
    let mut out = GroupElt::new(GroupTag::Mixed);
    for (c, t) in &e.terms {
        let Term::B2Mul(a, y) = t else { return Err(bad_term("g₃")) };
        b.check_generator(a)?;
        out.push(c.clone(), Term::BetaMul(a.clone(), y.clone()));
        out.push(c.clone(), Term::AddB2(b.dlog(y)?, a.clone()));
    }
    Ok(out)
}

/// `g(x∧y∧z) = Dlog x⊗y∧z − Dlog y⊗x∧z + Dlog z⊗x∧y`.
pub fn g_3d_right<B: Backend>(b: &B, e: &Elt<B>) -> Result<Elt<B>> {
    expect_tag(e, &[GroupTag::Wedge3], "g₃")?;
    let mut out = GroupElt::new(GroupTag::AddWedge);
    for (c, t) in &e.terms {
        let Term::Wedge3(x, y, z) = t else { return Err(bad_term("g₃")) };
        out.push(c.clone(), Term::AddWedge(b.dlog(x)?, y.clone(), z.clone()));
        out.push(-c, Term::AddWedge(b.dlog(y)?, x.clone(), z.clone()));
        out.push(c.clone(), Term::AddWedge(b.dlog(z)?, x.clone(), y.clone()));
    }
    Ok(out)
}

/// `δ⊗id : B₂⊗F^× → ∧²F^×⊗F^×`.
pub fn project_b2_mul<B: Backend>(b: &B, e: &Elt<B>) -> Result<Elt<B>> {
    expect_tag(e, &[GroupTag::B2Mul], "δ⊗id")?;
    let mut out = GroupElt::new(GroupTag::Wedge2Mul);
    for (c, t) in &e.terms {
        let Term::B2Mul(a, y) = t else { return Err(bad_term("δ⊗id")) };
        out.push(c.clone(), Term::Wedge2Mul(b.one_minus(a)?, a.clone(), y.clone()));
    }
    Ok(out)
}

/// `(∂⊗id) ⊕ (id⊗δ)` on the mixed group, with `∂(⟦a⟧₂) = Dlog(1−a)⊗a − Dlog a⊗(1−a)`.
/// Both components are well defined on the quotients β₂ and B₂.
pub fn project_mixed<B: Backend>(b: &B, e: &Elt<B>) -> Result<Elt<B>> {
    expect_tag(e, &[GroupTag::Mixed], "(∂⊗id, id⊗δ)")?;
    let mut out = GroupElt::new(GroupTag::MixedProjection);
    for (c, t) in &e.terms {
        match t {
            Term::BetaMul(a, y) => {
                let om = b.one_minus(a)?;
                out.push(c.clone(), Term::AddMulMul(b.dlog(&om)?, a.clone(), y.clone()));
                out.push(-c, Term::AddMulMul(b.dlog(a)?, om, y.clone()));
            }
            Term::AddB2(x, y) => out.push(c.clone(), Term::AddWedge(x.clone(), b.one_minus(y)?, y.clone())),
            _ => return Err(bad_term("(∂⊗id, id⊗δ)")),
        }
    }
    Ok(out)
}

/// `Σ_{i=0}^4 (−1)^i [r(x_0,…,x̂_i,…,x_4)]₂` for 5 points in the plane.
pub fn five_term_r2<B: Backend>(b: &B, c: &B::Config) -> Result<Elt<B>> {
    if b.npoints(c) != 5 {
        return Err(Error::IndexError("five-term relation needs 5 points".into()));
    }
    let mut out = GroupElt::new(GroupTag::B2);
    for i in 0..5 {
        let idx: Vec<usize> = (0..5).filter(|&j| j != i).collect();
        let sub = b.select(c, &idx);
        let r = b.cross_ratio(|p, q| b.det(&sub, &[p, q]))?;
        out.push(rat_int(if i % 2 == 0 { 1 } else { -1 }), Term::Gen(r));
    }
    Ok(out)
}

/// `⟦a⟧ − ⟦b⟧ + ⟦b/a⟧ − ⟦(1−b)/(1−a)⟧ + ⟦(1−b⁻¹)/(1−a⁻¹)⟧`.
pub fn five_term_rho2d<B: Backend>(bk: &B, a: &B::Value, b: &B::Value) -> Result<Elt<B>> {
    bk.check_generator(a)?;
    bk.check_generator(b)?;
    let one = bk.one();
    let ba = bk.div(b, a)?;
    bk.check_generator(&ba).map_err(|_| Error::ExceptionalValue("a = b".into()))?;
    let third = bk.div(&bk.one_minus(b)?, &bk.one_minus(a)?)?;
    let ainv = bk.div(&one, a)?;
    let binv = bk.div(&one, b)?;
    let fourth = bk.div(&bk.one_minus(&binv)?, &bk.one_minus(&ainv)?)?;
    let args = [(1, a.clone()), (-1, b.clone()), (1, ba), (-1, third), (1, fourth)];
    let mut out = GroupElt::new(GroupTag::Beta2);
    for (s, v) in args {
        bk.check_generator(&v)?;
        out.push(rat_int(s), Term::Bracket(v));
    }
    Ok(out)
}

/// Triple ratio `Δ(013)Δ(124)Δ(205) / (Δ(014)Δ(125)Δ(203))` of 6 points in 3-space.
pub fn triple_ratio<B: Backend>(b: &B, c: &B::Config) -> Result<B::Value> {
    use crate::configs::{TRIPLE_RATIO_DEN, TRIPLE_RATIO_NUM};
    let mut num = b.one();
    let mut den = b.one();
    for (n, d) in TRIPLE_RATIO_NUM.iter().zip(&TRIPLE_RATIO_DEN) {
        num = b.mul(&num, &b.det(c, n)?);
        den = b.mul(&den, &b.det(c, d)?);
    }
    let r = b.div(&num, &den)?;
    b.check_generator(&r)?;
    Ok(r)
}

/// `Alt₆` of the triple ratio, unscaled, as generators of ℚ\[F\].
pub fn alt6_triple_ratio<B: Backend>(b: &B, c: &B::Config) -> Result<Vec<(Rat, B::Value)>> {
    signed_permutations(6)
        .into_iter()
        .map(|(p, s)| Ok((rat_int(s as i64), triple_ratio(b, &b.select(c, &p))?)))
        .collect()
}

/// `Σ_{i=0}^6 (−1)^i r₃(x_0,…,x̂_i,…,x_6)` with `r₃ = Alt₆[triple ratio]₃`.
pub fn seven_term_r3<B: Backend>(b: &B, c: &B::Config) -> Result<Elt<B>> {
    if b.npoints(c) != 7 {
        return Err(Error::IndexError("seven-term relation needs 7 points".into()));
    }
    let mut out = GroupElt::new(GroupTag::B3);
    for i in 0..7 {
        let idx: Vec<usize> = (0..7).filter(|&j| j != i).collect();
        let s = rat_int(if i % 2 == 0 { 1 } else { -1 });
        for (c6, v) in alt6_triple_ratio(b, &b.select(c, &idx))? {
            out.push(&s * c6, Term::Gen(v));
        }
    }
    Ok(out)
}

/// `−1/3`, the normalization in front of the five-point weight-3 maps.
pub fn minus_third() -> Rat {
    rat(-1, 3)
}
