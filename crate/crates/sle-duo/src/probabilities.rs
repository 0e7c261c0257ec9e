//! One-curve and two-curve side probabilities by quadrature.
//!
//! P_left(t) = (1/N) ∫_t^∞ S. The part with |t′| < 2 is integrated in
//! θ = arctan t′; the tails use a power-law substitution matched to the decay
//! of S on each side, so heavy tails near κ = 8 converge without deep bisection.

use crate::error::{Result, SleError};
use crate::kernel::{derive_params, Kappa, Kernel};
use crate::quad::{integrate, integrate_power_tail, Estimate, QuadTol};
use crate::specfn::{gamma_ratio, hyp2f1_nonpos, HypParams};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_2;

/// Split between the θ-integrated body and the power-law tails.
const BODY_EDGE: f64 = 2.0;
/// Beyond this |t| the leading asymptotic term is used when it is negligible.
const CLAMP_T: f64 = 1e6;
/// Largest asymptotic bound accepted as a clamped result.
const CLAMP_BOUND: f64 = 1e-12;

/// Field point in projective coordinate t, with φ = arctan t.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldPoint {
    pub t: f64,
    pub phi: f64,
}

impl FieldPoint {
    pub fn from_t(t: f64) -> Result<Self> {
        if t.is_nan() {
            return Err(SleError::Domain("field point t is NaN".into()));
        }
        Ok(FieldPoint { t, phi: t.atan() })
    }

    /// φ must lie strictly inside (−π/2, π/2).
    pub fn from_phi(phi: f64) -> Result<Self> {
        if !(phi > -FRAC_PI_2 && phi < FRAC_PI_2) {
            return Err(SleError::Domain(format!("φ = {phi} is outside (−π/2, π/2)")));
        }
        Ok(FieldPoint { t: phi.tan(), phi })
    }
}

/// (P_left, P_middle, P_right) with a shared absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityTriple {
    pub p_left: f64,
    pub p_middle: f64,
    pub p_right: f64,
    pub abs_err: f64,
}

impl ProbabilityTriple {
    /// Mirror image t → −t.
    pub fn mirrored(self) -> Self {
        ProbabilityTriple { p_left: self.p_right, p_right: self.p_left, ..self }
    }
}

/// P_left = ½ − [Γ(k)/(√π Γ(k−½))]·t·₂F₁(½, k; 3/2; −t²).
pub fn schramm_left(kappa: Kappa, pt: FieldPoint) -> Result<f64> {
    kappa.require_generic()?;
    let k = kappa.k();
    let t = pt.t;
    let coef = gamma_ratio(&[k], &[0.5, k - 0.5])?;
    if t.abs() <= 1.0 {
        let f = hyp2f1_nonpos(HypParams::new(0.5, k, 1.5)?, -t * t)?;
        return Ok(0.5 - coef * t * f);
    }
    // for |t| > 1 the ½ cancels exactly against the large-t expansion
    let u = t.abs();
    let f = hyp2f1_nonpos(HypParams::new(k, k - 0.5, k + 0.5)?, -1.0 / (u * u))?;
    let tail = coef / (2.0 * k - 1.0) * (-(2.0 * k - 1.0) * u.ln()).exp() * f;
    Ok(if t > 0.0 { tail } else { 1.0 - tail })
}

/// Two-curve evaluator holding the kernel and tolerances for one κ.
#[derive(Debug, Clone)]
pub struct TwoCurve {
    kernel: Kernel,
    tol: QuadTol,
}

impl TwoCurve {
    pub fn new(kappa: Kappa) -> Result<Self> {
        Ok(TwoCurve { kernel: Kernel::new(kappa)?, tol: QuadTol::default() })
    }

    pub fn with_tol(kappa: Kappa, tol: QuadTol) -> Result<Self> {
        Ok(TwoCurve { kernel: Kernel::new(kappa)?, tol })
    }

    pub fn from_kernel(kernel: Kernel, tol: QuadTol) -> Self {
        TwoCurve { kernel, tol }
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    fn body<F>(&self, f: F, lo: f64, hi: f64) -> Result<Estimate>
    where
        F: Fn(f64) -> Result<f64>,
    {
        let g = |th: f64| {
            let c = th.cos();
            Ok(f(th.tan())? / (c * c))
        };
        integrate(g, lo.atan(), hi.atan(), &self.tol)
    }

    /// ∫_lo^hi of a function decaying like c·u^(−2k) at large u.
    ///
    /// Near κ = 8 that decay is barely integrable, so the leading power is
    /// integrated exactly and only the remainder goes through quadrature.
    fn slow_tail<F>(&self, f: F, coef: Option<f64>, lo: f64, hi: f64) -> Result<Estimate>
    where
        F: Fn(f64) -> Result<f64>,
    {
        let kn = &self.kernel;
        let p = kn.left_decay();
        let Some(c) = coef else {
            return integrate_power_tail(f, lo, hi, p, &self.tol);
        };
        let rem = |u: f64| Ok(f(u)? - c * (-p * u.ln()).exp());
        let body = integrate_power_tail(rem, lo, hi, kn.left_correction_decay(), &self.tol)?;
        // ∫_lo^hi u^(−p) = lo^(1−p)·(1 − (hi/lo)^(1−p))/(p−1)
        let span = if hi.is_infinite() { 1.0 } else { -((1.0 - p) * (hi / lo).ln()).exp_m1() };
        let lead = c * ((1.0 - p) * lo.ln()).exp() * span / (p - 1.0);
        Ok(body + Estimate { value: lead, abs_err: 0.0 })
    }

    fn left_tail(&self, lo: f64, hi: f64) -> Result<Estimate> {
        let kn = &self.kernel;
        self.slow_tail(|u| kn.s(-u), kn.left_tail_coefficient(), lo, hi)
    }

    /// ∫_t^∞ S.
    pub fn upper_integral(&self, t: f64) -> Result<Estimate> {
        let kn = &self.kernel;
        let s = |u: f64| kn.s(u);
        let right = |lo: f64| integrate_power_tail(s, lo, f64::INFINITY, kn.right_decay(), &self.tol);
        if t >= BODY_EDGE {
            return right(t);
        }
        let mut total = self.body(s, t.max(-BODY_EDGE), BODY_EDGE)? + right(BODY_EDGE)?;
        if t < -BODY_EDGE {
            total = total + self.left_tail(BODY_EDGE, -t)?;
        }
        Ok(total)
    }

    /// ∫ S over the whole line.
    pub fn total_integral(&self) -> Result<Estimate> {
        Ok(self.left_tail(BODY_EDGE, f64::INFINITY)? + self.upper_integral(-BODY_EDGE)?)
    }

    fn clamped(&self, t: f64) -> Option<Estimate> {
        if t.abs() <= CLAMP_T {
            return None;
        }
        let kn = &self.kernel;
        let (coef, p) = if t > 0.0 {
            (kn.right_tail_coefficient()?, kn.right_decay())
        } else {
            (kn.left_tail_coefficient()?, kn.left_decay())
        };
        let bound = (coef.abs() * t.abs().powf(1.0 - p) / (p - 1.0) / kn.norm()).abs();
        (bound <= CLAMP_BOUND).then(|| Estimate {
            value: if t > 0.0 { 0.0 } else { 1.0 },
            abs_err: bound,
        })
    }

    /// P_left(t) with its error bound.
    pub fn left(&self, t: f64) -> Result<Estimate> {
        if let Some(e) = self.clamped(t) {
            return Ok(e);
        }
        let i = self.upper_integral(t)?;
        let n = self.kernel.norm();
        Ok(Estimate { value: i.value / n, abs_err: i.abs_err / n })
    }

    pub fn triple(&self, t: f64) -> Result<ProbabilityTriple> {
        let l = self.left(t)?;
        let r = self.left(-t)?;
        Ok(ProbabilityTriple {
            p_left: l.value,
            p_middle: 1.0 - l.value - r.value,
            p_right: r.value,
            abs_err: l.abs_err + r.abs_err,
        })
    }

    /// Triples on a list of t values, evaluated in parallel.
    pub fn triples(&self, ts: &[f64]) -> Result<Vec<ProbabilityTriple>> {
        ts.par_iter().map(|&t| self.triple(t)).collect()
    }

    /// ∫_a^∞ of the odd part, a ≥ 0.
    pub fn odd_upper_integral(&self, a: f64) -> Result<Estimate> {
        let kn = &self.kernel;
        let o = |u: f64| kn.odd(u);
        let tail = |lo: f64| self.slow_tail(o, kn.odd_tail_coefficient(), lo, f64::INFINITY);
        if a >= BODY_EDGE {
            tail(a)
        } else {
            Ok(self.body(o, a, BODY_EDGE)? + tail(BODY_EDGE)?)
        }
    }

    /// P_middle(t) = D·∫_{|t|}^∞ O / ∫_0^∞ O with D = 1 − 2·P_left(0).
    pub fn middle_direct(&self, t: f64) -> Result<Estimate> {
        let l0 = self.left(0.0)?;
        let d = 1.0 - 2.0 * l0.value;
        let j0 = self.odd_upper_integral(0.0)?;
        let j = self.odd_upper_integral(t.abs())?;
        let ratio = j.value / j0.value;
        let ratio_err = (j.abs_err + ratio.abs() * j0.abs_err) / j0.value.abs();
        Ok(Estimate { value: d * ratio, abs_err: 2.0 * l0.abs_err * ratio.abs() + d.abs() * ratio_err })
    }
}

pub fn two_curve_left(kappa: Kappa, pt: FieldPoint) -> Result<f64> {
    Ok(TwoCurve::new(kappa)?.left(pt.t)?.value)
}

pub fn two_curve_triple(kappa: Kappa, pt: FieldPoint) -> Result<ProbabilityTriple> {
    TwoCurve::new(kappa)?.triple(pt.t)
}

pub fn two_curve_middle_direct(kappa: Kappa, pt: FieldPoint) -> Result<f64> {
    Ok(TwoCurve::new(kappa)?.middle_direct(pt.t)?.value)
}

/// Minimum number of grid points for the 7-point stencils.
pub const MIN_ODE_GRID: usize = 7;

/// Max over the grid interior of
/// |λP‴ − (2μt/(t²+1))P″ + ((3−μ)t² − (1+μ))/(t²+1)²·P′|,
/// with derivatives from 7-point central differences on a uniform grid.
pub fn ode_residual<F>(kappa: Kappa, grid: &[f64], mut p: F) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    kappa.require_generic()?;
    if grid.len() < MIN_ODE_GRID {
        return Err(SleError::Usage(format!(
            "ODE residual needs at least {MIN_ODE_GRID} grid points, got {}",
            grid.len()
        )));
    }
    let h = (grid[grid.len() - 1] - grid[0]) / (grid.len() - 1) as f64;
    if !(h > 0.0) || grid.windows(2).any(|w| ((w[1] - w[0]) - h).abs() > 1e-9 * h.abs().max(1.0)) {
        return Err(SleError::Usage("ODE residual needs a uniform increasing grid".into()));
    }
    let cp = derive_params(kappa)?;
    let (mu, lambda) = (cp.mu, cp.lambda);
    let f: Vec<f64> = grid.iter().map(|&t| p(t)).collect::<Result<_>>()?;
    let worst = (3..grid.len() - 3)
        .map(|i| {
            let w = &f[i - 3..=i + 3];
            let d1 = (-w[0] + 9.0 * w[1] - 45.0 * w[2] + 45.0 * w[4] - 9.0 * w[5] + w[6]) / (60.0 * h);
            let d2 = (2.0 * w[0] - 27.0 * w[1] + 270.0 * w[2] - 490.0 * w[3] + 270.0 * w[4]
                - 27.0 * w[5]
                + 2.0 * w[6])
                / (180.0 * h * h);
            let d3 = (w[0] - 8.0 * w[1] + 13.0 * w[2] - 13.0 * w[4] + 8.0 * w[5] - w[6]) / (8.0 * h * h * h);
            let t = grid[i];
            let q = t * t + 1.0;
            (lambda * d3 - 2.0 * mu * t / q * d2 + ((3.0 - mu) * t * t - (1.0 + mu)) / (q * q) * d1).abs()
        })
        .fold(0.0, f64::max);
    Ok(worst)
}

/// Uniform grid of `n` points on [a, b].
pub fn uniform_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![a];
    }
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}
