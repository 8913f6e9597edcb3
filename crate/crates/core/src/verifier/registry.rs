//! Every commutation claim of the two prisms, one [`FaceSpec`] each.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::GroupTag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FaceId {
    #[serde(rename = "W2-SQ-A")]
    W2SqA,
    #[serde(rename = "W2-SQ-B")]
    W2SqB,
    #[serde(rename = "W2-SQ-C")]
    W2SqC,
    #[serde(rename = "W2-TRI-1")]
    W2Tri1,
    #[serde(rename = "W2-TRI-2")]
    W2Tri2,
    #[serde(rename = "W3-SQ-A1")]
    W3SqA1,
    #[serde(rename = "W3-SQ-A2")]
    W3SqA2,
    #[serde(rename = "W3-SQ-B1")]
    W3SqB1,
    #[serde(rename = "W3-SQ-B2")]
    W3SqB2,
    #[serde(rename = "W3-SQ-C")]
    W3SqC,
    #[serde(rename = "W3-SQ-D")]
    W3SqD,
    #[serde(rename = "W3-TRI-1")]
    W3Tri1,
    #[serde(rename = "W3-TRI-2")]
    W3Tri2,
    #[serde(rename = "W3-TRI-3")]
    W3Tri3,
}

impl FaceId {
    pub const ALL: [FaceId; 14] = [
        FaceId::W2SqA,
        FaceId::W2SqB,
        FaceId::W2SqC,
        FaceId::W2Tri1,
        FaceId::W2Tri2,
        FaceId::W3SqA1,
        FaceId::W3SqA2,
        FaceId::W3SqB1,
        FaceId::W3SqB2,
        FaceId::W3SqC,
        FaceId::W3SqD,
        FaceId::W3Tri1,
        FaceId::W3Tri2,
        FaceId::W3Tri3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FaceId::W2SqA => "W2-SQ-A",
            FaceId::W2SqB => "W2-SQ-B",
            FaceId::W2SqC => "W2-SQ-C",
            FaceId::W2Tri1 => "W2-TRI-1",
            FaceId::W2Tri2 => "W2-TRI-2",
            FaceId::W3SqA1 => "W3-SQ-A1",
            FaceId::W3SqA2 => "W3-SQ-A2",
            FaceId::W3SqB1 => "W3-SQ-B1",
            FaceId::W3SqB2 => "W3-SQ-B2",
            FaceId::W3SqC => "W3-SQ-C",
            FaceId::W3SqD => "W3-SQ-D",
            FaceId::W3Tri1 => "W3-TRI-1",
            FaceId::W3Tri2 => "W3-TRI-2",
            FaceId::W3Tri3 => "W3-TRI-3",
        }
    }

    pub fn spec(self) -> FaceSpec {
        registry().into_iter().find(|s| s.id == self).expect("every id is registered")
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl FromStr for FaceId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        FaceId::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFace(s.to_string()))
    }
}

/// What a trial draws before evaluating both paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sample {
    /// A generic configuration of `points` vectors in `dim`-space.
    Config { points: usize, dim: usize },
    /// One generator argument `a`.
    Generator,
    /// A generator argument and a unit, for `[a]₂⊗b`.
    GeneratorAndUnit,
}

/// Convention entries a face's two paths depend on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Knob {
    Boundary,
    Partial2,
    Tau20,
    Partial32,
    Partial3,
    Tau30,
    Tau31,
    Alt6,
}

/// How the two sides are compared in an exact backend.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Comparison {
    /// Canonical forms in the free group on generators.
    Structural,
    /// Canonical forms after `δ⊗id` into `∧²F^×⊗F^×`.
    ProjectB2Mul,
    /// Structural first; otherwise canonical forms after `(∂⊗id, id⊗δ)`.
    ProjectMixed,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceSpec {
    pub id: FaceId,
    pub weight: u8,
    /// The composite map on one side, rightmost applied first.
    pub left: &'static str,
    pub right: &'static str,
    pub target: GroupTag,
    pub sample: Sample,
    pub comparison: Comparison,
    pub knobs: &'static [Knob],
    pub statement: &'static str,
}

pub fn registry() -> Vec<FaceSpec> {
    use Comparison::*;
    use Knob::*;
    let cfg = |points, dim| Sample::Config { points, dim };
    vec![
        FaceSpec {
            id: FaceId::W2SqA,
            weight: 2,
            left: "f²₀∘d",
            right: "δ∘f²₁",
            target: GroupTag::Wedge2,
            sample: cfg(4, 2),
            comparison: Structural,
            knobs: &[Boundary],
            statement: "Grassmannian to Bloch–Suslin square",
        },
        FaceSpec {
            id: FaceId::W2SqB,
            weight: 2,
            left: "τ²₀∘d",
            right: "∂∘τ²₁",
            target: GroupTag::AddMul,
            sample: cfg(4, 2),
            comparison: Structural,
            knobs: &[Boundary, Partial2, Tau20],
            statement: "Grassmannian to infinitesimal square",
        },
        FaceSpec {
            id: FaceId::W2SqC,
            weight: 2,
            left: "∂∘f_D",
            right: "g∘δ",
            target: GroupTag::AddMul,
            sample: Sample::Generator,
            comparison: Structural,
            knobs: &[Partial2],
            statement: "Bloch–Suslin to infinitesimal square (n = 2)",
        },
        FaceSpec {
            id: FaceId::W2Tri1,
            weight: 2,
            left: "g¹₂∘f²₀",
            right: "τ²₀",
            target: GroupTag::AddMul,
            sample: cfg(3, 2),
            comparison: Structural,
            knobs: &[Tau20],
            statement: "degree-0 triangle",
        },
        FaceSpec {
            id: FaceId::W2Tri2,
            weight: 2,
            left: "τ_D∘f²₁",
            right: "τ²₁",
            target: GroupTag::Beta2,
            sample: cfg(4, 2),
            comparison: Structural,
            knobs: &[],
            statement: "degree-1 triangle",
        },
        FaceSpec {
            id: FaceId::W3SqA1,
            weight: 3,
            left: "f³₀∘d",
            right: "δ∘f³₁",
            target: GroupTag::Wedge3,
            sample: cfg(5, 3),
            comparison: Structural,
            knobs: &[Boundary],
            statement: "Grassmannian to Goncharov square, degree 0",
        },
        FaceSpec {
            id: FaceId::W3SqA2,
            weight: 3,
            left: "f³₁∘d",
            right: "δ∘f³₂",
            target: GroupTag::B2Mul,
            sample: cfg(6, 3),
            comparison: ProjectB2Mul,
            knobs: &[Boundary, Alt6],
            statement: "Grassmannian to Goncharov square, degree 1 (modulo R₂)",
        },
        FaceSpec {
            id: FaceId::W3SqB1,
            weight: 3,
            left: "τ³₀∘d",
            right: "∂∘τ³₁",
            target: GroupTag::AddWedge,
            sample: cfg(5, 3),
            comparison: Structural,
            knobs: &[Boundary, Partial32, Tau30, Tau31],
            statement: "Grassmannian to infinitesimal square, degree 0",
        },
        FaceSpec {
            id: FaceId::W3SqB2,
            weight: 3,
            left: "τ³₁∘d",
            right: "∂∘τ³₂",
            target: GroupTag::Mixed,
            sample: cfg(6, 3),
            comparison: ProjectMixed,
            knobs: &[Boundary, Partial3, Tau31, Alt6],
            statement: "Grassmannian to infinitesimal square, degree 1 (modulo relations)",
        },
        FaceSpec {
            id: FaceId::W3SqC,
            weight: 3,
            left: "∂∘f_D",
            right: "g∘δ",
            target: GroupTag::Mixed,
            sample: Sample::Generator,
            comparison: ProjectMixed,
            knobs: &[Partial3],
            statement: "Goncharov to infinitesimal square (n = 3), degree 1",
        },
        FaceSpec {
            id: FaceId::W3SqD,
            weight: 3,
            left: "∂∘g²₃",
            right: "g¹₃∘δ",
            target: GroupTag::AddWedge,
            sample: Sample::GeneratorAndUnit,
            comparison: Structural,
            knobs: &[Partial32],
            statement: "Goncharov to infinitesimal square (n = 3), degree 0",
        },
        FaceSpec {
            id: FaceId::W3Tri1,
            weight: 3,
            left: "g¹₃∘f³₀",
            right: "τ³₀",
            target: GroupTag::AddWedge,
            sample: cfg(4, 3),
            comparison: Structural,
            knobs: &[Tau30],
            statement: "degree-0 triangle",
        },
        FaceSpec {
            id: FaceId::W3Tri2,
            weight: 3,
            left: "g²₃∘f³₁",
            right: "τ³₁",
            target: GroupTag::Mixed,
            sample: cfg(5, 3),
            comparison: ProjectMixed,
            knobs: &[Tau31],
            statement: "degree-1 triangle",
        },
        FaceSpec {
            id: FaceId::W3Tri3,
            weight: 3,
            left: "τ_D∘f³₂",
            right: "τ³₂",
            target: GroupTag::Beta3,
            sample: cfg(6, 3),
            comparison: Structural,
            knobs: &[Alt6],
            statement: "degree-2 triangle",
        },
    ]
}

/// Parses `all` or a comma-separated id list, keeping registry order.
pub fn parse_faces(s: &str) -> Result<Vec<FaceId>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(FaceId::ALL.to_vec());
    }
    let mut ids = s.split(',').filter(|p| !p.trim().is_empty()).map(FaceId::from_str).collect::<Result<Vec<_>>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}

pub fn faces_of_weight(weights: &[u8]) -> Vec<FaceId> {
    registry().into_iter().filter(|s| weights.contains(&s.weight)).map(|s| s.id).collect()
}
