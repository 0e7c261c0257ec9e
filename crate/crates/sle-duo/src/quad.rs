//! Globally adaptive 7/15-point Gauss–Kronrod quadrature.
//!
//! The interval with the largest error estimate is bisected until the summed
//! estimate meets max(abs, rel·|I|). Error estimates follow QUADPACK's qk15.

use crate::error::{Result, SleError};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Tolerances and refinement limits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadTol {
    pub abs: f64,
    pub rel: f64,
    /// Maximum bisection depth of any subinterval.
    pub max_depth: u32,
}

impl Default for QuadTol {
    fn default() -> Self {
        QuadTol { abs: 1e-10, rel: 1e-10, max_depth: 15 }
    }
}

impl QuadTol {
    pub fn new(abs: f64, rel: f64) -> Self {
        QuadTol { abs, rel, ..Default::default() }
    }
}

/// Integral value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub abs_err: f64,
}

impl std::ops::Add for Estimate {
    type Output = Estimate;
    fn add(self, o: Estimate) -> Estimate {
        Estimate { value: self.value + o.value, abs_err: self.abs_err + o.abs_err }
    }
}

impl std::ops::Neg for Estimate {
    type Output = Estimate;
    fn neg(self) -> Estimate {
        Estimate { value: -self.value, abs_err: self.abs_err }
    }
}

/// Upper bound on live plus retired subintervals.
const MAX_SEGMENTS: usize = 20_000;

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    depth: u32,
}

impl PartialEq for Segment {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Segment {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err)
    }
}

fn kronrod<F>(f: &mut F, a: f64, b: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center)?;
    let mut res_g = fc * WG[3];
    let mut res_k = fc * WGK[7];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx)?;
        let f2 = f(center + dx)?;
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        fv1[j] = f1;
        fv2[j] = f2;
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    if !value.is_finite() {
        return Err(SleError::numerical(
            format!("non-finite integrand on [{a}, {b}]"),
            f64::INFINITY,
        ));
    }
    Ok((value, err))
}

/// ∫ₐᵇ f with adaptive bisection.
pub fn integrate<F>(mut f: F, a: f64, b: f64, tol: &QuadTol) -> Result<Estimate>
where
    F: FnMut(f64) -> Result<f64>,
{
    if a == b {
        return Ok(Estimate { value: 0.0, abs_err: 0.0 });
    }
    let (value, err) = kronrod(&mut f, a, b)?;
    let mut heap = BinaryHeap::new();
    heap.push(Segment { a, b, value, err, depth: 0 });
    let mut frozen_value = 0.0;
    let mut frozen_err = 0.0;
    loop {
        let (total, total_err) = heap
            .iter()
            .fold((frozen_value, frozen_err), |(v, e), s| (v + s.value, e + s.err));
        let target = tol.abs.max(tol.rel * total.abs());
        if total_err <= target {
            return Ok(Estimate { value: total, abs_err: total_err });
        }
        let Some(worst) = heap.pop() else {
            return Err(SleError::numerical(
                format!("quadrature on [{a}, {b}] hit depth {} before tolerance", tol.max_depth),
                total_err,
            ));
        };
        if heap.len() >= MAX_SEGMENTS {
            return Err(SleError::numerical(
                format!("quadrature on [{a}, {b}] exceeded {MAX_SEGMENTS} subintervals"),
                total_err,
            ));
        }
        if worst.depth >= tol.max_depth {
            frozen_value += worst.value;
            frozen_err += worst.err;
            continue;
        }
        let mid = 0.5 * (worst.a + worst.b);
        let (v1, e1) = kronrod(&mut f, worst.a, mid)?;
        let (v2, e2) = kronrod(&mut f, mid, worst.b)?;
        heap.push(Segment { a: worst.a, b: mid, value: v1, err: e1, depth: worst.depth + 1 });
        heap.push(Segment { a: mid, b: worst.b, value: v2, err: e2, depth: worst.depth + 1 });
    }
}

/// ∫ from `lo` to `hi` (hi may be +∞) of an integrand decaying like u^(−p), p > 1.
///
/// Uses u = lo·s^(−γ) with γ = m/(p−1) and m the smallest integer giving γ ≥ 2.
/// The leading power law becomes s^(m−1) and corrections in u^(−2) carry at
/// least four more powers of s, so the integrand is smooth near s = 0.
/// Requires lo > 0.
pub fn integrate_power_tail<F>(
    mut f: F,
    lo: f64,
    hi: f64,
    p: f64,
    tol: &QuadTol,
) -> Result<Estimate>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(lo > 0.0 && p > 1.0 && hi >= lo) {
        return Err(SleError::Internal(format!(
            "power tail needs 0 < lo ≤ hi and p > 1 (lo {lo}, hi {hi}, p {p})"
        )));
    }
    let m = (2.0 * (p - 1.0)).ceil().max(1.0);
    let gamma = m / (p - 1.0);
    let s_min = if hi.is_infinite() { 0.0 } else { (hi / lo).powf(-1.0 / gamma) };
    let ln_lo = lo.ln();
    let g = |s: f64| -> Result<f64> {
        let ln_u = ln_lo - gamma * s.ln();
        let u = ln_u.exp();
        if !u.is_finite() {
            return Err(SleError::numerical(
                "power-tail substitution overflowed; decay too slow for f64",
                f64::INFINITY,
            ));
        }
        // du = γ u / s ds
        Ok(f(u)? * gamma * u / s)
    };
    integrate(g, s_min, 1.0, tol)
}
