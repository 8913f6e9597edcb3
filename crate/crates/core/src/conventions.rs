//! Sign and normalization conventions threaded through every map.
//!
//! Sign vectors multiply the terms of the corresponding formula as printed;
//! `[1, 1]` reproduces the printed formula.

use serde::{Deserialize, Serialize};

use crate::configs::IndexBase;
use crate::error::{Error, Result};
use crate::scalars::{format_rat, parse_rat, rat, Rat};

/// Second summand of `∂(⟦a⟧₃)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Partial3Term {
    /// `(1−a)⊗[a]₂`
    OneMinusA,
    /// `Dlog(a)⊗[a]₂`
    DlogA,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConventionTable {
    /// 0: `d = Σ (−1)^i` over 0-based positions; 1: over 1-based positions.
    pub boundary_index_base: u8,
    pub partial3_second_term: Partial3Term,
    /// Coefficient in front of `Alt₆` in the weight-3 maps on six points.
    pub alt6_coefficient: String,
    /// `∂(⟦a⟧₂) = s₀·(−Dlog(1−a)⊗a) + s₁·(Dlog a⊗(1−a))`.
    pub partial_2: [i8; 2],
    /// Signs of the two summands inside the cyclic sum defining `τ²₀`.
    pub tau2_0: [i8; 2],
    /// Signs of the three summands of `∂(⟦a⟧₂⊗b + x⊗[y]₂)`.
    pub partial_32: [i8; 3],
    pub tau3_0: [i8; 1],
    pub tau3_1: [i8; 1],
}

impl ConventionTable {
    /// The formulas exactly as printed, with 1-based boundary signs.
    pub fn literal() -> Self {
        ConventionTable {
            boundary_index_base: 1,
            partial3_second_term: Partial3Term::OneMinusA,
            alt6_coefficient: "2/45".into(),
            partial_2: [1, 1],
            tau2_0: [1, 1],
            partial_32: [1, 1, 1],
            tau3_0: [1],
            tau3_1: [1],
        }
    }

    /// The audited table under which every face commutes.
    pub fn shipped() -> Self {
        ConventionTable {
            boundary_index_base: 0,
            partial3_second_term: Partial3Term::DlogA,
            alt6_coefficient: "-1/90".into(),
            partial_2: [-1, -1],
            tau2_0: [-1, -1],
            partial_32: [1, 1, 1],
            tau3_0: [1],
            tau3_1: [1],
        }
    }

    pub fn index_base(&self) -> IndexBase {
        if self.boundary_index_base == 1 {
            IndexBase::One
        } else {
            IndexBase::Zero
        }
    }

    pub fn alt6(&self) -> Result<Rat> {
        parse_rat(&self.alt6_coefficient)
    }

    pub fn validate(&self) -> Result<()> {
        if self.boundary_index_base > 1 {
            return Err(Error::Parse("boundary_index_base must be 0 or 1".into()));
        }
        let signs = self
            .partial_2
            .iter()
            .chain(&self.tau2_0)
            .chain(&self.partial_32)
            .chain(&self.tau3_0)
            .chain(&self.tau3_1);
        for s in signs {
            if *s != 1 && *s != -1 {
                return Err(Error::Parse(format!("sign entries must be ±1, got {s}")));
            }
        }
        self.alt6().map(|_| ())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let t: ConventionTable = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        t.validate()?;
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("convention tables serialize")
    }

    /// The two candidate `Alt₆` coefficients the audit ranges over.
    pub fn alt6_candidates() -> [String; 2] {
        [format_rat(&rat(2, 45)), format_rat(&rat(-1, 90))]
    }
}

impl Default for ConventionTable {
    fn default() -> Self {
        Self::shipped()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        for t in [ConventionTable::literal(), ConventionTable::shipped()] {
            assert_eq!(ConventionTable::from_json(&t.to_json()).unwrap(), t);
        }
        assert!(ConventionTable::shipped().to_json().contains("\"dlog_a\""));
    }

    #[test]
    fn rejects_bad_signs() {
        let mut t = ConventionTable::shipped();
        t.partial_2 = [2, 1];
        assert!(ConventionTable::from_json(&t.to_json()).is_err());
    }
}
