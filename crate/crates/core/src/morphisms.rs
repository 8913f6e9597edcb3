//! The ten maps from the Grassmannian complex into the polylogarithmic and
//! infinitesimal complexes.
//!
//! Weight 2 consumes configurations in the plane, weight 3 configurations in
//! 3-space. Every function takes a single configuration; chains are handled by
//! [`on_boundary`].

use crate::backend::Backend;
use crate::configs::IndexBase;
use crate::conventions::ConventionTable;
use crate::error::{Error, Result};
use crate::freemod::signed_permutations;
use crate::groups::{triple_ratio, Elt, GroupElt, GroupTag, Term};
use crate::scalars::{rat, rat_int, Rat};

fn expect_shape<B: Backend>(b: &B, c: &B::Config, m: usize, map: &str) -> Result<()> {
    if b.npoints(c) != m {
        return Err(Error::IndexError(format!("{map} needs {m} points, got {}", b.npoints(c))));
    }
    Ok(())
}

fn alternating(i: usize) -> Rat {
    rat_int(if i.is_multiple_of(2) { 1 } else { -1 })
}

fn others(m: usize, skip: &[usize]) -> Vec<usize> {
    (0..m).filter(|j| !skip.contains(j)).collect()
}

/// `Σ_i ±F(x_0,…,x̂_i,…,x_m)`, i.e. `F∘d`.
pub fn on_boundary<B: Backend>(
    b: &B,
    c: &B::Config,
    base: IndexBase,
    map: impl Fn(&B::Config) -> Result<Elt<B>>,
) -> Result<Elt<B>> {
    let m = b.npoints(c);
    let mut out: Option<Elt<B>> = None;
    for i in 0..m {
        let face = map(&b.select(c, &others(m, &[i])))?;
        let acc = out.get_or_insert_with(|| GroupElt::new(face.tag));
        acc.extend_scaled(&face, &rat_int(base.sign(i)));
    }
    out.ok_or_else(|| Error::IndexError("boundary of an empty configuration".into()))
}

/// `Δ(x₀,x₁)∧Δ(x₀,x₂) − Δ(x₀,x₁)∧Δ(x₁,x₂) + Δ(x₀,x₂)∧Δ(x₁,x₂)`.
pub fn f2_0<B: Backend>(b: &B, c: &B::Config) -> Result<Elt<B>> {
    expect_shape(b, c, 3, "f²₀")?;
    let (d01, d02, d12) = (b.det(c, &[0, 1])?, b.det(c, &[0, 2])?, b.det(c, &[1, 2])?);
    let mut out = GroupElt::new(GroupTag::Wedge2);
    out.push(rat_int(1), Term::Wedge2(d01.clone(), d02.clone()));
    out.push(rat_int(-1), Term::Wedge2(d01, d12.clone()));
    out.push(rat_int(1), Term::Wedge2(d02, d12));
    Ok(out)
}

fn plane_cross_ratio<B: Backend>(b: &B, c: &B::Config) -> Result<B::Value> {
    b.cross_ratio(|i, j| b.det(c, &[i, j]))
}

/// `[r(x₀,…,x₃)]₂`.
pub fn f2_1<B: Backend>(b: &B, c: &B::Config) -> Result<Elt<B>> {
    expect_shape(b, c, 4, "f²₁")?;
    Ok(GroupElt::single(GroupTag::B2, rat_int(1), Term::Gen(plane_cross_ratio(b, c)?)))
}

/// `Σ_{i mod 3} DlogΔ(xᵢ,xᵢ₊₂)⊗Δ(xᵢ,xᵢ₊₁) − DlogΔ(xᵢ₊₁,xᵢ)⊗Δ(xᵢ,xᵢ₊₂)`.
pub fn tau2_0<B: Backend>(b: &B, c: &B::Config, table: &ConventionTable) -> Result<Elt<B>> {
    expect_shape(b, c, 3, "τ²₀")?;
    let [u0, u1] = table.tau2_0;
    let mut out = GroupElt::new(GroupTag::AddMul);
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let dik = b.det(c, &[i, k])?;
        out.push(rat_int(u0 as i64), Term::AddMul(b.dlog(&dik)?, b.det(c, &[i, j])?));
        out.push(rat_int(-u1 as i64), Term::AddMul(b.dlog(&b.det(c, &[j, i])?)?, dik));
    }
    Ok(out)
}

/// `⟦r(x₀,…,x₃)⟧₂`.
pub fn tau2_1<B: Backend>(b: &B, c: &B::Config) -> Result<Elt<B>> {
    expect_shape(b, c, 4, "τ²₁")?;
    Ok(GroupElt::single(GroupTag::Beta2, rat_int(1), Term::Bracket(plane_cross_ratio(b, c)?)))
}

/// `Δ̂_j = Δ(x₀,…,x̂_j,…,x₃)` for the four points of a 3-space configuration.
fn omission_dets<B: Backend>(b: &B, c: &B::Config) -> Result<Vec<B::Value>> {
    (0..4).map(|j| b.det(c, &others(4, &[j]))).collect()
}

/// `Σ_i (−1)^i ∧_{j≠i} Δ̂_j`.
pub fn f3_0<B: Backend>(b: &B, c: &B::Config) -> Result<Elt<B>> {
    expect_shape(b, c, 4, "f³₀")?;
    let d = omission_dets(b, c)?;
    let mut out = GroupElt::new(GroupTag::Wedge3);
    for i in 0..4 {
        let w: Vec<&B::Value> = (0..4).filter(|&j| j != i).map(|j| &d[j]).collect();
        out.push(alternating(i), Term::Wedge3(w[0].clone(), w[1].clone(), w[2].clone()));
    }
    Ok(out)
}

/// For each i, the projected cross-ratio `r(xᵢ|…)` and `Π_{j≠i} Δ(x̂ᵢ,x̂ⱼ)`.
fn five_point_data<B: Backend>(b: &B, c: &B::Config) -> Result<Vec<(B::Value, B::Value)>> {
    (0..5)
        .map(|i| {
            let rest = others(5, &[i]);
            let r = b.cross_ratio(|p, q| b.det(c, &[i, rest[p], rest[q]]))?;
            let mut prod = b.one();
            for &j in &rest {
                prod = b.mul(&prod, &b.det(c, &others(5, &[i, j]))?);
            }
            Ok((r, prod))
        })
        .collect()
}

/// `−1/3 Σ_i (−1)^i [r(xᵢ|…)]₂ ⊗ Π_{j≠i} Δ(x̂ᵢ,x̂ⱼ)`.
pub fn f3_1<B: Backend>(b: &B, c: &B::Config) -> Result<Elt<B>> {
    expect_shape(b, c, 5, "f³₁")?;
    let mut out = GroupElt::new(GroupTag::B2Mul);
    for (i, (r, p)) in five_point_data(b, c)?.into_iter().enumerate() {
        out.push(rat(-1, 3) * alternating(i), Term::B2Mul(r, p));
    }
    Ok(out)
}

fn alt6<B: Backend>(b: &B, c: &B::Config, table: &ConventionTable, bracket: bool) -> Result<Elt<B>> {
    let k = table.alt6()?;
    let tag = if bracket { GroupTag::Beta3 } else { GroupTag::B3 };
    let mut out = GroupElt::new(tag);
    for (p, s) in signed_permutations(6) {
        let r = triple_ratio(b, &b.select(c, &p))?;
        let t = if bracket { Term::Bracket(r) } else { Term::Gen(r) };
        out.push(&k * rat_int(s as i64), t);
    }
    Ok(out)
}

/// `k·Alt₆[triple ratio]₃` with `k` the table's coefficient.
pub fn f3_2<B: Backend>(b: &B, c: &B::Config, table: &ConventionTable) -> Result<Elt<B>> {
    expect_shape(b, c, 6, "f³₂")?;
    alt6(b, c, table, false)
}

/// `Σ_i (−1)^i DlogΔ̂ᵢ ⊗ (Δ̂ᵢ₊₁/Δ̂ᵢ₊₂)∧(Δ̂ᵢ₊₃/Δ̂ᵢ₊₂)`, indices mod 4.
pub fn tau3_0<B: Backend>(b: &B, c: &B::Config, table: &ConventionTable) -> Result<Elt<B>> {
    expect_shape(b, c, 4, "τ³₀")?;
    let d = omission_dets(b, c)?;
    let sign = rat_int(table.tau3_0[0] as i64);
    let mut out = GroupElt::new(GroupTag::AddWedge);
    for i in 0..4 {
        let y = b.div(&d[(i + 1) % 4], &d[(i + 2) % 4])?;
        let z = b.div(&d[(i + 3) % 4], &d[(i + 2) % 4])?;
        out.push(&sign * alternating(i), Term::AddWedge(b.dlog(&d[i])?, y, z));
    }
    Ok(out)
}

/// `−1/3 Σ_i (−1)^i (⟦r(xᵢ|…)⟧₂⊗Πᵢ + Dlog(Πᵢ)⊗[r(xᵢ|…)]₂)`.
pub fn tau3_1<B: Backend>(b: &B, c: &B::Config, table: &ConventionTable) -> Result<Elt<B>> {
    expect_shape(b, c, 5, "τ³₁")?;
    let sign = rat_int(table.tau3_1[0] as i64);
    let mut out = GroupElt::new(GroupTag::Mixed);
    for (i, (r, p)) in five_point_data(b, c)?.into_iter().enumerate() {
        let k = &sign * rat(-1, 3) * alternating(i);
        out.push(k.clone(), Term::AddB2(b.dlog(&p)?, r.clone()));
        out.push(k, Term::BetaMul(r, p));
    }
    Ok(out)
}

/// `k·Alt₆⟦triple ratio⟧₃`.
pub fn tau3_2<B: Backend>(b: &B, c: &B::Config, table: &ConventionTable) -> Result<Elt<B>> {
    expect_shape(b, c, 6, "τ³₂")?;
    alt6(b, c, table, true)
}
