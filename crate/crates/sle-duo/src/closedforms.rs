//! Elementary solutions at κ = 2, 8/3, 4, the two κ = 8 branches, and the
//! deterministic κ = 0 pair of curves.

use crate::error::{Result, SleError};
use crate::kernel::{Kappa, KappaClass};
use crate::probabilities::{FieldPoint, ProbabilityTriple};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

/// Error attached to closed-form values.
const EXACT_ERR: f64 = 16.0 * f64::EPSILON;

fn triple(p_left: f64, p_middle: f64, p_right: f64) -> ProbabilityTriple {
    ProbabilityTriple { p_left, p_middle, p_right, abs_err: EXACT_ERR }
}

/// Exact triple for κ ∈ {2, 8/3, 4}.
pub fn exact_triple(kappa: Kappa, pt: FieldPoint) -> Result<ProbabilityTriple> {
    let t = pt.t;
    let a = pt.phi;
    let w = 1.0 + t * t;
    match kappa.class() {
        KappaClass::Two => {
            let pi2 = PI * PI;
            let poly = -16.0 - 9.0 * t * t + 9.0 * t.powi(4);
            let odd = 9.0 * PI * (t.powi(3) + t.powi(5));
            let den = 9.0 * pi2 * w.powi(3);
            let left = 0.25 + (poly - odd + 9.0 * w * a * (2.0 * t.powi(3) - PI * w * w + w * w * a)) / den;
            let right = 0.25 + (poly + odd + 9.0 * w * a * (2.0 * t.powi(3) + PI * w * w + w * w * a)) / den;
            let middle = 0.5 - 2.0 * (poly + 9.0 * w * a * (2.0 * t.powi(3) + w * w * a)) / den;
            Ok(triple(left, middle, right))
        }
        KappaClass::EightThirds => {
            let p = 1.0 + 6.0 * t * t + 5.0 * t.powi(4);
            let q = 2.0 * t * (13.0 + 15.0 * t * t);
            let den = 30.0 * PI * w * w;
            let left = (-q + 3.0 * PI * p - 6.0 * p * a) / den;
            let right = (q + 3.0 * PI * p + 6.0 * p * a) / den;
            Ok(triple(left, 4.0 / (5.0 * w), right))
        }
        KappaClass::Four => {
            let pi2 = PI * PI;
            let base = 0.25 - 1.0 / (pi2 * w) + a * a / pi2;
            let middle = 0.5 + 2.0 / (pi2 * w) - 2.0 * a * a / pi2;
            Ok(triple(base - a / PI, middle, base + a / PI))
        }
        _ => Err(SleError::Usage(format!(
            "no closed form at κ = {kappa}; supported values are 2, 8/3, 4"
        ))),
    }
}

/// The two inequivalent κ = 8 solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kappa8Branch {
    /// κ → 8 from below at fixed φ: the curves stay apart.
    LimitFromBelow,
    /// Equations solved at κ = 8: the curves coalesce into one κ = 4 curve.
    DirectAtEight,
}

pub fn exact_triple_kappa8(branch: Kappa8Branch, phi: f64) -> Result<ProbabilityTriple> {
    if !(phi > -FRAC_PI_2 && phi < FRAC_PI_2) {
        return Err(SleError::Domain(format!(
            "κ = 8 triple undefined at φ = {phi}: the limits κ → 8 and φ → ±π/2 do not commute"
        )));
    }
    Ok(match branch {
        Kappa8Branch::LimitFromBelow => triple(0.25 - phi / (2.0 * PI), 0.5, 0.25 + phi / (2.0 * PI)),
        Kappa8Branch::DirectAtEight => triple(0.5 - phi / PI, 0.0, 0.5 + phi / PI),
    })
}

/// Tip of one κ = 0 curve at a given Loewner time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KZeroSample {
    pub time: f64,
    pub tip: Complex64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KZeroTrace {
    pub delta: f64,
    pub samples: Vec<KZeroSample>,
}

impl KZeroTrace {
    /// (4a² − (4/3)b² − δ²)/δ² at a tip a + ib.
    pub fn hyperbola_residual(&self, tip: Complex64) -> f64 {
        let d2 = self.delta * self.delta;
        (4.0 * tip.re * tip.re - 4.0 / 3.0 * tip.im * tip.im - d2) / d2
    }

    /// |4ζ³ − 3ζ + f(t)| with ζ = tip/δ.
    pub fn cubic_residual(&self, s: &KZeroSample) -> f64 {
        let z = s.tip / self.delta;
        (4.0 * z * z * z - 3.0 * z + kzero_f(self.delta, s.time)).norm()
    }
}

fn kzero_f(delta: f64, t: f64) -> f64 {
    2.0 * (1.0 + 8.0 * t / (delta * delta)).powf(1.5) - 1.0
}

/// Tip of the right curve at time t for initial separation δ.
///
/// With f = cosh 3θ the roots of 4ζ³ − 3ζ + f are −cosh θ and
/// cosh θ/2 ± i(√3/2) sinh θ; the upper one starts at ζ = 1/2.
pub fn kzero_tip(delta: f64, t: f64) -> Result<Complex64> {
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(SleError::Domain(format!("κ = 0 separation δ must be positive, got {delta}")));
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(SleError::Domain(format!("κ = 0 time must be finite and ≥ 0, got {t}")));
    }
    let theta = kzero_f(delta, t).acosh() / 3.0;
    let tip = delta * Complex64::new(0.5 * theta.cosh(), 0.5 * 3f64.sqrt() * theta.sinh());
    if t > 0.0 && !(tip.im > 0.0) {
        return Err(SleError::Internal(format!("κ = 0 tip at t = {t} is not in the upper half-plane")));
    }
    Ok(tip)
}

/// Trace sampled at `n` equally spaced times in [0, t_max]; t_max = 0 gives one sample.
pub fn kzero_trace(delta: f64, t_max: f64, n: usize) -> Result<KZeroTrace> {
    if n < 2 {
        return Err(SleError::Usage(format!("κ = 0 trace needs at least 2 points, got {n}")));
    }
    if !(t_max >= 0.0 && t_max.is_finite()) {
        return Err(SleError::Usage(format!("t_max must be finite and ≥ 0, got {t_max}")));
    }
    let times: Vec<f64> = if t_max == 0.0 {
        vec![0.0]
    } else {
        (0..n).map(|i| t_max * i as f64 / (n - 1) as f64).collect()
    };
    let samples = times
        .into_iter()
        .map(|time| Ok(KZeroSample { time, tip: kzero_tip(delta, time)? }))
        .collect::<Result<_>>()?;
    Ok(KZeroTrace { delta, samples })
}
