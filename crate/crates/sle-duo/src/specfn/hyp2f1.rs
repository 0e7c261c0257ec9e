//! Gauss hypergeometric function ₂F₁(a, b; c; z) on the negative real axis.
//!
//! For moderate |z| the Pfaff transformation
//!
//!   ₂F₁(a,b;c;z) = (1−z)^(−a) ₂F₁(a, c−b; c; z/(z−1))
//!                = (1−z)^(−b) ₂F₁(c−a, b; c; z/(z−1))
//!
//! maps z ≤ 0 into w ∈ [0, 1) and the series is summed directly. Further out
//! the value and slope at z = −1 are carried along the axis by Taylor
//! re-expansion of the hypergeometric equation
//!
//!   z(1−z) y'' + [c − (a+b+1) z] y' − ab y = 0,
//!
//! each step staying within half the distance to the singular point z = 0.

use crate::error::{Result, SleError};
use serde::{Deserialize, Serialize};

/// Hard cap on Gauss series terms; reaching it is an error.
pub const MAX_SERIES_TERMS: usize = 10_000;
/// Stopping threshold on |term| / |partial sum|.
pub const SERIES_EPS: f64 = 1e-15;

/// Beyond this |z| the Pfaff series is replaced by ODE continuation.
const PFAFF_LIMIT: f64 = 4.0;
/// Continuation step as a fraction of the distance to z = 0.
const STEP_FRACTION: f64 = 0.5;
const MAX_TAYLOR_TERMS: usize = 2_000;

/// Parameters (a, b; c) of a ₂F₁.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HypParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Which Pfaff transform is used: the (1−z)^(−a) or the (1−z)^(−b) form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfaffArm {
    A,
    B,
}

fn nonpos_int(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

impl HypParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let p = HypParams { a, b, c };
        p.check()?;
        Ok(p)
    }

    fn check(&self) -> Result<()> {
        if !(self.a.is_finite() && self.b.is_finite() && self.c.is_finite()) {
            return Err(SleError::Domain(format!("non-finite ₂F₁ parameters {self:?}")));
        }
        if nonpos_int(self.c) {
            return Err(SleError::Domain(format!(
                "₂F₁ lower parameter c = {} is a pole",
                self.c
            )));
        }
        Ok(())
    }

    /// True when the series in z is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        nonpos_int(self.a) || nonpos_int(self.b)
    }

    fn arm_terminates(&self, arm: PfaffArm) -> bool {
        match arm {
            PfaffArm::A => nonpos_int(self.a) || nonpos_int(self.c - self.b),
            PfaffArm::B => nonpos_int(self.b) || nonpos_int(self.c - self.a),
        }
    }

    /// Arm with the faster-converging series: a terminating one if any,
    /// otherwise the one whose prefactor carries min(a, b).
    fn preferred_arm(&self) -> PfaffArm {
        if self.arm_terminates(PfaffArm::A) {
            PfaffArm::A
        } else if self.arm_terminates(PfaffArm::B) || self.b < self.a {
            PfaffArm::B
        } else {
            PfaffArm::A
        }
    }
}

/// Plain Gauss series Σ (a)_n (b)_n / ((c)_n n!) xⁿ for |x| < 1 (or any x if it terminates).
pub fn gauss_series(p: HypParams, x: f64) -> Result<f64> {
    p.check()?;
    let (a, b, c) = (p.a, p.b, p.c);
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..MAX_SERIES_TERMS {
        let nf = n as f64;
        let next = term * (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        sum += next;
        if next == 0.0 {
            return Ok(sum);
        }
        let ratio = (next / term).abs();
        term = next;
        if ratio < 1.0 && term.abs() <= SERIES_EPS * sum.abs() * (1.0 - ratio) {
            return Ok(sum);
        }
        if !sum.is_finite() {
            return Err(SleError::numerical("₂F₁ series overflowed", f64::INFINITY));
        }
    }
    Err(SleError::numerical(
        format!("₂F₁{p:?} series at x = {x} did not converge in {MAX_SERIES_TERMS} terms"),
        (term / sum).abs(),
    ))
}

/// ₂F₁(a,b;c;z) for z ≤ 0 through one explicit Pfaff arm.
pub fn hyp2f1_pfaff(p: HypParams, z: f64, arm: PfaffArm) -> Result<f64> {
    p.check()?;
    if z > 0.0 || z.is_nan() {
        return Err(SleError::Domain(format!("hyp2f1_nonpos needs z ≤ 0, got {z}")));
    }
    let w = z / (z - 1.0);
    let one_minus_z = 1.0 - z;
    match arm {
        PfaffArm::A => {
            let s = gauss_series(HypParams { a: p.a, b: p.c - p.b, c: p.c }, w)?;
            Ok(one_minus_z.powf(-p.a) * s)
        }
        PfaffArm::B => {
            let s = gauss_series(HypParams { a: p.c - p.a, b: p.b, c: p.c }, w)?;
            Ok(one_minus_z.powf(-p.b) * s)
        }
    }
}

/// ₂F₁(a,b;c;z) for z ∈ (−∞, 0].
pub fn hyp2f1_nonpos(p: HypParams, z: f64) -> Result<f64> {
    p.check()?;
    if z > 0.0 || z.is_nan() {
        return Err(SleError::Domain(format!("hyp2f1_nonpos needs z ≤ 0, got {z}")));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if z.is_infinite() {
        return Err(SleError::Domain("hyp2f1_nonpos at z = −∞".into()));
    }
    let arm = p.preferred_arm();
    if p.arm_terminates(arm) || z >= -PFAFF_LIMIT {
        return hyp2f1_pfaff(p, z, arm);
    }
    continue_along_axis(p, z)
}

fn continue_along_axis(p: HypParams, target: f64) -> Result<f64> {
    let (a, b, c) = (p.a, p.b, p.c);
    let mut z = -1.0;
    let mut y = hyp2f1_pfaff(p, z, p.preferred_arm())?;
    let dp = HypParams { a: a + 1.0, b: b + 1.0, c: c + 1.0 };
    let mut dy = a * b / c * hyp2f1_pfaff(dp, z, dp.preferred_arm())?;
    while z > target {
        let next = (z * (1.0 + STEP_FRACTION)).max(target);
        let (ny, ndy) = taylor_step(p, z, next - z, y, dy)?;
        y = ny;
        dy = ndy;
        z = next;
    }
    Ok(y)
}

/// Advances (y, y') of the hypergeometric equation from z0 to z0 + h.
fn taylor_step(p: HypParams, z0: f64, h: f64, y: f64, dy: f64) -> Result<(f64, f64)> {
    let ab = p.a * p.b;
    let s = p.a + p.b + 1.0;
    let p0 = z0 * (1.0 - z0);
    let p1 = 1.0 - 2.0 * z0;
    let q0 = p.c - s * z0;
    // e_n = y_n hⁿ, with y_n the Taylor coefficients about z0
    let mut e0 = y;
    let mut e1 = dy * h;
    let mut val = e0 + e1;
    let mut der = e1;
    let mut small = 0;
    for n in 0..MAX_TAYLOR_TERMS {
        let nf = n as f64;
        let e2 = -((p1 * nf + q0) * (nf + 1.0) * e1 * h
            + (-nf * (nf - 1.0) - s * nf - ab) * e0 * h * h)
            / (p0 * (nf + 2.0) * (nf + 1.0));
        val += e2;
        der += (nf + 2.0) * e2;
        let scale = val.abs().max(der.abs());
        if e2.abs() * (nf + 3.0) <= 1e-17 * scale {
            small += 1;
            if small >= 2 {
                return Ok((val, der / h));
            }
        } else {
            small = 0;
        }
        e0 = e1;
        e1 = e2;
    }
    Err(SleError::numerical(
        format!("₂F₁ continuation step from z = {z0} did not converge"),
        (e1 / val).abs(),
    ))
}
