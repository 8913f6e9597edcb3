//! Floating-point polylogarithms and the functionals built from them that
//! vanish on the relation subgroups R₂ and R₃.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::scalars::{ensure_finite, CF};

pub const ZETA3: f64 = 1.202_056_903_159_594_3;
pub const CATALAN: f64 = 0.915_965_594_177_219;
const ZETA2: f64 = PI * PI / 6.0;

const SERIES_EPS: f64 = 1e-17;

/// A functional value together with `Σ|terms|`, the scale residuals are
/// measured against.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FunctionalValue {
    pub value: CF,
    pub condition: f64,
}

impl FunctionalValue {
    pub fn zero() -> Self {
        FunctionalValue {
            value: CF::new(0.0, 0.0),
            condition: 0.0,
        }
    }

    pub fn push(&mut self, term: CF) {
        self.value += term;
        self.condition += term.norm();
    }

    /// `|value| / condition`, or 0 for an empty sum.
    pub fn relative(&self) -> f64 {
        if self.condition == 0.0 {
            0.0
        } else {
            self.value.norm() / self.condition
        }
    }
}

/// ζ(s) for integer s ≤ 3, as needed by the logarithmic expansion.
fn zeta_int(s: i64) -> f64 {
    match s {
        3 => ZETA3,
        2 => ZETA2,
        0 => -0.5,
        s if s < 0 && s % 2 == 0 => 0.0,
        s if s < 0 => {
            // ζ(1−2j) = (−1)^j · 2(2j−1)! ζ(2j) / (2π)^{2j}
            let j = (1 - s) / 2;
            let mut v = 2.0 * zeta_even(j) * if j % 2 == 0 { 1.0 } else { -1.0 };
            for i in 1..2 * j {
                v *= i as f64 / (2.0 * PI);
            }
            v / (2.0 * PI)
        }
        _ => unreachable!("ζ({s}) is not used"),
    }
}

fn zeta_even(j: i64) -> f64 {
    match j {
        1 => ZETA2,
        2 => PI.powi(4) / 90.0,
        3 => PI.powi(6) / 945.0,
        _ => (1..=60).map(|i| (i as f64).powi(-2 * j as i32)).sum(),
    }
}

fn li_series(z: CF, n: u32) -> CF {
    let mut acc = CF::new(0.0, 0.0);
    let mut zk = z;
    for k in 1..2000 {
        let term = zk / (k as f64).powi(n as i32);
        acc += term;
        if term.norm() < SERIES_EPS * acc.norm().max(1e-300) {
            break;
        }
        zk *= z;
    }
    acc
}

/// Expansion in μ = log z, convergent for |μ| < 2π.
fn li_log_series(z: CF, n: u32) -> CF {
    let mu = z.ln();
    let n = n as i64;
    let harmonic: f64 = (1..n).map(|k| 1.0 / k as f64).sum();
    let mut acc = CF::new(0.0, 0.0);
    let mut mu_k = CF::new(1.0, 0.0);
    for k in 0..80i64 {
        if k == n - 1 {
            acc += mu_k * (CF::new(harmonic, 0.0) - (-mu).ln());
        } else {
            acc += mu_k * zeta_int(n - k);
        }
        mu_k = mu_k * mu / ((k + 1) as f64);
    }
    acc
}

/// Principal branch of Li_n(z) for n ∈ {2, 3}.
pub fn li_n(z: CF, n: u32) -> Result<CF> {
    assert!(n == 2 || n == 3, "only Li_2 and Li_3 are provided");
    let z = ensure_finite(z)?;
    if z.im == 0.0 && z.re > 1.0 {
        return Err(Error::BranchCutInput);
    }
    if z.norm() == 0.0 {
        return Ok(z);
    }
    if z == CF::new(1.0, 0.0) {
        return Ok(CF::new(if n == 2 { ZETA2 } else { ZETA3 }, 0.0));
    }
    let r = z.norm();
    let v = if r <= 0.5 {
        li_series(z, n)
    } else if r >= 2.0 {
        let l = (-z).ln();
        let inv = li_series(z.inv(), n);
        if n == 2 {
            -inv - ZETA2 - 0.5 * l * l
        } else {
            inv - ZETA2 * l - l * l * l / 6.0
        }
    } else {
        li_log_series(z, n)
    };
    ensure_finite(v)
}

fn check_exceptional(z: CF) -> Result<CF> {
    let z = ensure_finite(z)?;
    if z.norm() == 0.0 || z == CF::new(1.0, 0.0) {
        return Err(Error::ExceptionalValue(format!("{z}")));
    }
    Ok(z)
}

/// Bloch–Wigner dilogarithm `Im Li₂(z) + arg(1−z)·log|z|`.
pub fn bloch_wigner(z: CF) -> Result<f64> {
    let z = check_exceptional(z)?;
    if z.im == 0.0 {
        return Ok(0.0);
    }
    if z.norm() > 1.0 {
        return Ok(-bloch_wigner(z.inv())?);
    }
    let one = CF::new(1.0, 0.0);
    Ok(li_n(z, 2)?.im + (one - z).arg() * z.norm().ln())
}

/// Single-valued trilogarithm `Re(Li₃(z) − log|z|·Li₂(z) − ⅓·log²|z|·log(1−z))`.
/// `sv_l3(1) = ζ(3)`.
pub fn sv_l3(z: CF) -> Result<f64> {
    let z = ensure_finite(z)?;
    if z.norm() == 0.0 {
        return Err(Error::ExceptionalValue("0".into()));
    }
    if z == CF::new(1.0, 0.0) {
        return Ok(ZETA3);
    }
    if z.norm() > 1.0 {
        return sv_l3(z.inv());
    }
    let l = z.norm().ln();
    let one = CF::new(1.0, 0.0);
    let v = li_n(z, 3)? - l * li_n(z, 2)? - (l * l / 3.0) * (one - z).ln();
    Ok(ensure_finite(v)?.re)
}

/// `Σ c·D₂(a)·log|b|` over terms `c·[a]₂⊗b`.
pub fn functional_b2_tensor(terms: &[(f64, CF, CF)]) -> Result<FunctionalValue> {
    let mut out = FunctionalValue::zero();
    for &(c, a, b) in terms {
        out.push(CF::new(c * bloch_wigner(a)? * ensure_finite(b)?.norm().ln(), 0.0));
    }
    Ok(out)
}

/// `Σ c·x·D₂(y)` over terms `c·x⊗[y]₂`.
pub fn functional_f_tensor_b2(terms: &[(f64, CF, CF)]) -> Result<FunctionalValue> {
    let mut out = FunctionalValue::zero();
    for &(c, x, y) in terms {
        out.push(x * (c * bloch_wigner(y)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    // (z, Li₂(z), Li₃(z), D₂(z), L₃(z)), 30-digit reference values rounded to f64
    #[allow(clippy::excessive_precision, clippy::type_complexity)]
    const REFERENCE: &[(f64, f64, f64, f64, f64, f64, f64, f64)] = &[
        (0.3, 0.2, 0.31045297562115706, 0.23586792101697522, 0.30567236952729767, 0.21689453383627301, 0.51976430145400818, 0.73248041069754545),
        (-0.45, 0.1, -0.40901109245125252, 0.082521983759426815, -0.4284261104971864, 0.090536397653350167, 0.1358449066467923, -0.8199175374500722),
        (0.8, 0.5, 0.81006628117385491, 0.81401155061213493, 0.82860261760791247, 0.63880630269699659, 0.88336606575593986, 0.87650311248597886),
        (-1.0, 0.0, -0.82246703342411322, 0.0, -0.90154267736969571, 0.0, 0.0, -0.90154267736969571),
        (0.5, 0.9, 0.25631609652539449, 1.0454542183650938, 0.39141731408253149, 0.99137610757195886, 1.0144639630224698, 0.38394144127536236),
        (1.5, -0.7, 1.2795385989634881, -1.7235733934543238, 1.571217551891748, -1.193389667873306, -0.61933240298006878, 0.93910354016861633),
        (-3.0, 0.5, -1.9481717916538477, 0.23050460321078514, -2.3564498737806638, 0.32286829362282249, 0.092183078401582342, -0.76439762581306128),
        (4.0, 2.0, 0.61129991846463953, 4.1225929126720289, 2.5507064733884389, 4.1029528102900484, 0.29765684950310575, 0.6759396960808124),
        (-0.9, 0.0, -0.75216317921726164, 0.0, -0.81863820154436386, 0.0, 0.0, -0.90026154069110747),
        (0.99, 0.01, 1.5844181626351653, 0.045211436422238449, 1.1856824783871067, 0.016032846585783879, 0.053064886540632984, 1.2016675217710003),
        (0.0, 1.0, -0.2056167583560283, 0.91596559417721902, -0.11269283467121196, 0.96894614625936938, 0.91596559417721902, -0.11269283467121196),
        (0.6, -1.2, 0.17217613915897461, -1.3468712985419141, 0.39769481158771435, -1.316720283792826, -0.97978507410788355, 0.34032743225277322),
    ];

    #[test]
    fn matches_reference_values() {
        for &(x, y, l2r, l2i, l3r, l3i, d2, l3) in REFERENCE {
            let z = CF::new(x, y);
            let a = li_n(z, 2).unwrap();
            let b = li_n(z, 3).unwrap();
            assert!((a - CF::new(l2r, l2i)).norm() < 1e-13, "Li2({z}) = {a}");
            assert!((b - CF::new(l3r, l3i)).norm() < 1e-13, "Li3({z}) = {b}");
            assert!((bloch_wigner(z).unwrap() - d2).abs() < 1e-13, "D2({z})");
            assert!((sv_l3(z).unwrap() - l3).abs() < 1e-13, "L3({z})");
        }
    }

    #[test]
    fn special_values() {
        assert_eq!(li_n(CF::new(0.0, 0.0), 2).unwrap(), CF::new(0.0, 0.0));
        assert!((li_n(CF::new(1.0, 0.0), 2).unwrap().re - PI * PI / 6.0).abs() < 1e-12);
        assert!((li_n(CF::new(-1.0, 0.0), 2).unwrap().re + PI * PI / 12.0).abs() < 1e-12);
        assert!((bloch_wigner(CF::new(0.0, 1.0)).unwrap() - CATALAN).abs() < 1e-10);
        assert!((sv_l3(CF::new(1.0, 0.0)).unwrap() - ZETA3).abs() < 1e-10);
        assert_eq!(li_n(CF::new(2.5, 0.0), 2), Err(Error::BranchCutInput));
        assert!(matches!(bloch_wigner(CF::new(1.0, 0.0)), Err(Error::ExceptionalValue(_))));
    }

    #[test]
    fn symmetries() {
        for &(x, y, ..) in REFERENCE {
            let z = CF::new(x, y);
            if z.im == 0.0 {
                assert!(bloch_wigner(z).unwrap().abs() < 1e-15);
                continue;
            }
            let d = bloch_wigner(z).unwrap();
            let one = CF::new(1.0, 0.0);
            assert!((d + bloch_wigner(z.inv()).unwrap()).abs() < 1e-12);
            assert!((d + bloch_wigner(z.conj()).unwrap()).abs() < 1e-12);
            assert!((d + bloch_wigner(one - z).unwrap()).abs() < 1e-12);
            assert!((d - bloch_wigner(one - z.inv()).unwrap()).abs() < 1e-12);
            assert!((sv_l3(z).unwrap() - sv_l3(z.inv()).unwrap()).abs() < 1e-10);
            assert!((sv_l3(z).unwrap() - sv_l3(z.conj()).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn tensor_functionals_trivial_cases() {
        let a = CF::new(0.3, 0.4);
        let b = CF::new(-1.5, 2.0);
        let one = CF::new(1.0, 0.0);
        assert_eq!(functional_b2_tensor(&[(1.0, a, one)]).unwrap().value.norm(), 0.0);
        let v = functional_b2_tensor(&[(1.0, a, b), (1.0, a, b.inv())]).unwrap();
        assert!(v.relative() < 1e-15);
        let w = functional_f_tensor_b2(&[(1.0, b, CF::new(0.4, 0.0))]).unwrap();
        assert_eq!(w.value.norm(), 0.0);
    }
}
