//! Evaluation of both paths of a face in any backend, and their comparison.

use crate::backend::{canonical, Backend, Canon, ExactBackend, Numeric};
use crate::conventions::ConventionTable;
use crate::error::Result;
use crate::groups::{self as g, Elt, GroupElt, GroupTag, Term};
use crate::morphisms as m;
use crate::scalars::rat_int;

use super::registry::{Comparison, FaceId, FaceSpec, Sample};

/// One random input of a face.
#[derive(Clone, Debug)]
pub enum Input<B: Backend> {
    Config(B::Config),
    Generator(B::Value),
    GeneratorAndUnit(B::Value, B::Value),
}

impl<B: Backend> Input<B> {
    pub fn draw(b: &B, spec: &FaceSpec, gl: bool, rng: &mut dyn rand::RngCore) -> Result<Self> {
        Ok(match spec.sample {
            Sample::Config { points, dim } => {
                let c = b.random_config(points, dim, rng)?;
                Input::Config(if gl { b.gl_transform(&c, rng) } else { c })
            }
            Sample::Generator => Input::Generator(b.random_generator(rng)?),
            Sample::GeneratorAndUnit => Input::GeneratorAndUnit(b.random_generator(rng)?, b.random_unit(rng)?),
        })
    }

    pub fn render(&self, b: &B) -> String {
        match self {
            Input::Config(c) => b.render_config(c),
            Input::Generator(a) => format!("a = {}", b.render_value(a)),
            Input::GeneratorAndUnit(a, y) => format!("a = {}; b = {}", b.render_value(a), b.render_value(y)),
        }
    }
}

fn generator<B: Backend>(tag: GroupTag, a: &B::Value) -> Elt<B> {
    GroupElt::single(tag, rat_int(1), Term::Gen(a.clone()))
}

/// `(left, right)` of the face on one input.
pub fn sides<B: Backend>(b: &B, id: FaceId, input: &Input<B>, t: &ConventionTable) -> Result<(Elt<B>, Elt<B>)> {
    let base = t.index_base();
    match (id, input) {
        (FaceId::W2SqA, Input::Config(c)) => {
            Ok((m::on_boundary(b, c, base, |q| m::f2_0(b, q))?, g::delta_2(b, &m::f2_1(b, c)?)?))
        }
        (FaceId::W2SqB, Input::Config(c)) => Ok((
            m::on_boundary(b, c, base, |q| m::tau2_0(b, q, t))?,
            g::partial_2(b, &m::tau2_1(b, c)?, t)?,
        )),
        (FaceId::W2SqC, Input::Generator(a)) => {
            let x = generator::<B>(GroupTag::B2, a);
            Ok((g::partial_2(b, &g::f_d(b, &x)?, t)?, g::g_2d(b, &g::delta_2(b, &x)?)?))
        }
        (FaceId::W2Tri1, Input::Config(c)) => Ok((g::g_2d(b, &m::f2_0(b, c)?)?, m::tau2_0(b, c, t)?)),
        (FaceId::W2Tri2, Input::Config(c)) => Ok((g::tau_d2(b, &m::f2_1(b, c)?)?, m::tau2_1(b, c)?)),
        (FaceId::W3SqA1, Input::Config(c)) => {
            Ok((m::on_boundary(b, c, base, |q| m::f3_0(b, q))?, g::delta_32(b, &m::f3_1(b, c)?)?))
        }
        (FaceId::W3SqA2, Input::Config(c)) => {
            Ok((m::on_boundary(b, c, base, |q| m::f3_1(b, q))?, g::delta_3(b, &m::f3_2(b, c, t)?)?))
        }
        (FaceId::W3SqB1, Input::Config(c)) => Ok((
            m::on_boundary(b, c, base, |q| m::tau3_0(b, q, t))?,
            g::partial_32(b, &m::tau3_1(b, c, t)?, t)?,
        )),
        (FaceId::W3SqB2, Input::Config(c)) => Ok((
            m::on_boundary(b, c, base, |q| m::tau3_1(b, q, t))?,
            g::partial_3(b, &m::tau3_2(b, c, t)?, t)?,
        )),
        (FaceId::W3SqC, Input::Generator(a)) => {
            let x = generator::<B>(GroupTag::B3, a);
            Ok((g::partial_3(b, &g::f_d(b, &x)?, t)?, g::g_3d_mid(b, &g::delta_3(b, &x)?)?))
        }
        (FaceId::W3SqD, Input::GeneratorAndUnit(a, y)) => {
            let x = GroupElt::single(GroupTag::B2Mul, rat_int(1), Term::B2Mul(a.clone(), y.clone()));
            Ok((g::partial_32(b, &g::g_3d_mid(b, &x)?, t)?, g::g_3d_right(b, &g::delta_32(b, &x)?)?))
        }
        (FaceId::W3Tri1, Input::Config(c)) => Ok((g::g_3d_right(b, &m::f3_0(b, c)?)?, m::tau3_0(b, c, t)?)),
        (FaceId::W3Tri2, Input::Config(c)) => Ok((g::g_3d_mid(b, &m::f3_1(b, c)?)?, m::tau3_1(b, c, t)?)),
        (FaceId::W3Tri3, Input::Config(c)) => Ok((g::tau_d3(b, &m::f3_2(b, c, t)?)?, m::tau3_2(b, c, t)?)),
        (id, _) => Err(crate::Error::KeyDomainMismatch(format!("wrong input kind for {id}"))),
    }
}

/// Outcome of comparing the two sides once.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub equal: bool,
    /// Relative functional residual (numeric) or 0/1 (exact).
    pub residual: f64,
    /// Rendering of the surviving difference when unequal.
    pub difference: Option<String>,
}

fn render_difference<B: ExactBackend>(d: &Canon<B>) -> String {
    const SHOWN: usize = 4;
    let parts: Vec<String> = d.iter().take(SHOWN).map(|(k, c)| format!("({c})·{k}")).collect();
    let more = d.len().saturating_sub(SHOWN);
    if more > 0 {
        format!("{} terms survive: {} + …{more} more", d.len(), parts.join(" + "))
    } else {
        format!("{} terms survive: {}", d.len(), parts.join(" + "))
    }
}

fn structural<B: ExactBackend>(b: &B, l: &Elt<B>, r: &Elt<B>) -> Result<Outcome> {
    let forms = canonical(b, &[l, r])?;
    let d = forms[0].sub(&forms[1]);
    Ok(if d.is_empty() {
        Outcome { equal: true, residual: 0.0, difference: None }
    } else {
        Outcome { equal: false, residual: 1.0, difference: Some(render_difference::<B>(&d)) }
    })
}

/// Exact comparison, through the face's projection where one applies.
pub fn compare_exact<B: ExactBackend>(b: &B, how: Comparison, l: &Elt<B>, r: &Elt<B>) -> Result<Outcome> {
    match how {
        Comparison::Structural => structural(b, l, r),
        Comparison::ProjectB2Mul => structural(b, &g::project_b2_mul(b, l)?, &g::project_b2_mul(b, r)?),
        Comparison::ProjectMixed => {
            let direct = structural(b, l, r)?;
            if direct.equal {
                return Ok(direct);
            }
            structural(b, &g::project_mixed(b, l)?, &g::project_mixed(b, r)?)
        }
    }
}

/// Numeric comparison through every registered functional.
pub fn compare_numeric(l: &Elt<Numeric>, r: &Elt<Numeric>, tolerance: f64) -> Result<Outcome> {
    let (fl, fr) = (Numeric.functionals(l)?, Numeric.functionals(r)?);
    let residual = crate::backend::functional_residual(&fl, &fr);
    let equal = residual <= tolerance;
    let difference = (!equal).then(|| {
        let worst: Vec<String> = fl
            .iter()
            .zip(&fr)
            .map(|(a, b)| format!("{:.3e}", (a.value - b.value).norm()))
            .collect();
        format!("functional differences [{}]", worst.join(", "))
    });
    Ok(Outcome { equal, residual, difference })
}
