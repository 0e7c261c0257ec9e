//! Consistency checks behind `sle-duo verify`.

use crate::args::Level;
use rayon::prelude::*;
use serde::Serialize;
use sle_duo::closedforms::{exact_triple, exact_triple_kappa8, kzero_tip, kzero_trace, Kappa8Branch};
use sle_duo::kernel::{constant_b, kernel_ode_residual, Kappa, Kernel};
use sle_duo::probabilities::{ode_residual, schramm_left, uniform_grid, FieldPoint, TwoCurve};
use sle_duo::qhall::{current_profile_with, ray_parameter, Normalization, StripGeometry};
use sle_duo::quad::QuadTol;
use sle_duo::simulator::{simulate_schramm, simulate_two_curve_left, SimConfig};
use sle_duo::specfn::{gamma, hyp2f1_nonpos, hyp2f1_pfaff, HypParams, PfaffArm};
use sle_duo::Result;
use std::f64::consts::PI;

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Where kernels come from; `tamper` flips the sign of B.
#[derive(Debug, Clone, Copy)]
pub struct Context {
    pub tamper: bool,
}

impl Context {
    fn kernel(&self, kappa: Kappa) -> Result<Kernel> {
        if self.tamper {
            Kernel::with_b(kappa, -constant_b(kappa)?)
        } else {
            Kernel::new(kappa)
        }
    }

    fn two_curve(&self, kv: f64, tol: QuadTol) -> Result<TwoCurve> {
        Ok(TwoCurve::from_kernel(self.kernel(kap(kv)?)?, tol))
    }
}

fn kap(v: f64) -> Result<Kappa> {
    Kappa::new(v)
}

type Check = fn(&Context) -> Result<(bool, String)>;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn specfn_identities(_: &Context) -> Result<(bool, String)> {
    let mut worst = 0.0f64;
    for x in [0.3, 1.7, 4.25, 11.5, -0.6, -2.5] {
        worst = worst.max(rel(gamma(x + 1.0)?, x * gamma(x)?));
    }
    for x in [0.1, 0.35, 0.8] {
        worst = worst.max(rel(gamma(x)? * gamma(1.0 - x)?, PI / (PI * x).sin()));
    }
    // ₂F₁(1,1;2;z) = ln(1−z)/(−z) and ₂F₁(a,b;b;z) = (1−z)^(−a)
    for z in [-0.5, -3.0, -40.0, -900.0] {
        worst = worst.max(rel(hyp2f1_nonpos(HypParams::new(1.0, 1.0, 2.0)?, z)?, (-z).ln_1p() / -z));
        worst = worst.max(rel(hyp2f1_nonpos(HypParams::new(0.7, 1.3, 1.3)?, z)?, (1.0 - z).powf(-0.7)));
    }
    for kv in [2.0, 8.0 / 3.0, 6.0, 7.5] {
        let k = 4.0 / kv;
        let p = HypParams::new(0.5 + k, 1.0 - k, 0.5)?;
        worst = worst.max(rel(hyp2f1_pfaff(p, -50.0, PfaffArm::A)?, hyp2f1_pfaff(p, -50.0, PfaffArm::B)?));
    }
    Ok((worst <= 1e-10, format!("max relative deviation {worst:.1e}")))
}

fn kernel_normalization(ctx: &Context) -> Result<(bool, String)> {
    let tol = QuadTol::new(0.0, 1e-12);
    let mut worst = 0.0f64;
    for kv in [2.0, 8.0 / 3.0, 4.0, 6.0, 7.5] {
        let tc = ctx.two_curve(kv, tol)?;
        worst = worst.max(rel(tc.total_integral()?.value, tc.kernel().norm()));
    }
    // the half-line mass is where the sign of B shows
    for kv in [2.0, 8.0 / 3.0, 4.0] {
        let tc = ctx.two_curve(kv, tol)?;
        let exact = exact_triple(kap(kv)?, FieldPoint::from_t(0.0)?)?.p_left;
        worst = worst.max((tc.upper_integral(0.0)?.value / tc.kernel().norm() - exact).abs());
    }
    Ok((worst <= 1e-8, format!("max deviation {worst:.1e}")))
}

fn kernel_ode(ctx: &Context) -> Result<(bool, String)> {
    let mut worst = 0.0f64;
    for kv in [2.0, 8.0 / 3.0, 4.0, 6.0, 7.5] {
        let kn = ctx.kernel(kap(kv)?)?;
        for t in [-6.0, -2.0, -0.5, 0.0, 0.7, 3.0, 9.0] {
            worst = worst.max(kernel_ode_residual(kap(kv)?, t, 1e-3, |x| kn.s(x))?);
        }
    }
    Ok((worst <= 1e-6, format!("max relative residual {worst:.1e}")))
}

fn probability_ode(ctx: &Context) -> Result<(bool, String)> {
    let grid = uniform_grid(-5.0, 5.0, 1001);
    let mut worst = 0.0f64;
    for kv in [8.0 / 3.0, 4.0, 6.0] {
        let tc = ctx.two_curve(kv, QuadTol::new(1e-14, 1e-13))?;
        let values: Vec<f64> = grid.par_iter().map(|&t| Ok(tc.left(t)?.value)).collect::<Result<_>>()?;
        let mut it = values.into_iter();
        worst = worst.max(ode_residual(kap(kv)?, &grid, |_| Ok(it.next().unwrap_or(f64::NAN)))?);
    }
    Ok((worst <= 1e-6, format!("max residual {worst:.1e} on [−5, 5], h = 0.01")))
}

fn closed_form_agreement(ctx: &Context) -> Result<(bool, String)> {
    let grid: Vec<f64> = (-50..=50).map(|i| 0.2 * i as f64).collect();
    let mut worst = 0.0f64;
    for kv in [2.0, 8.0 / 3.0, 4.0] {
        let tc = ctx.two_curve(kv, QuadTol::default())?;
        for (&t, q) in grid.iter().zip(tc.triples(&grid)?) {
            let e = exact_triple(kap(kv)?, FieldPoint::from_t(t)?)?;
            for d in [q.p_left - e.p_left, q.p_middle - e.p_middle, q.p_right - e.p_right] {
                worst = worst.max(d.abs());
            }
        }
    }
    Ok((worst <= 1e-8, format!("max deviation {worst:.1e} over 101 points")))
}

fn sum_and_reflection(ctx: &Context) -> Result<(bool, String)> {
    let grid: Vec<f64> = (-20..=20).map(|i| 0.5 * i as f64).collect();
    let (mut sum, mut refl) = (0.0f64, 0.0f64);
    for kv in 1..=7 {
        let tc = ctx.two_curve(kv as f64, QuadTol::default())?;
        let tr = tc.triples(&grid)?;
        for (i, a) in tr.iter().enumerate() {
            sum = sum.max((a.p_left + a.p_middle + a.p_right - 1.0).abs());
            refl = refl.max((a.p_right - tr[grid.len() - 1 - i].p_left).abs());
        }
    }
    Ok((sum <= 1e-8 && refl == 0.0, format!("sum {sum:.1e}, reflection {refl:.1e}")))
}

fn slope(f: impl Fn(f64) -> Result<f64>, a: f64, b: f64) -> Result<f64> {
    Ok(-(f(b)? / f(a)?).ln() / (b / a).ln())
}

fn tail_exponents(ctx: &Context) -> Result<(bool, String)> {
    let mut worst = 0.0f64;
    for kv in [4.0, 6.0] {
        let tc = ctx.two_curve(kv, QuadTol::new(0.0, 1e-12))?;
        let s = slope(|t| Ok(tc.left(t)?.value), 1e2, 1e3)?;
        worst = worst.max(rel(s, 24.0 / kv - 2.0));
    }
    let k6 = kap(6.0)?;
    let s = slope(|t| schramm_left(k6, FieldPoint::from_t(t)?), 1e2, 1e3)?;
    worst = worst.max(rel(s, 2.0 / 6.0));
    Ok((worst <= 0.02, format!("max relative exponent error {worst:.1e}")))
}

fn kappa8_branches(_: &Context) -> Result<(bool, String)> {
    let mut ok = true;
    for i in -15..=15 {
        let phi = 0.1 * i as f64;
        let l = exact_triple_kappa8(Kappa8Branch::LimitFromBelow, phi)?;
        let d = exact_triple_kappa8(Kappa8Branch::DirectAtEight, phi)?;
        ok &= l.p_middle == 0.5 && d.p_middle == 0.0 && (d.p_left - (0.5 - phi / PI)).abs() <= 1e-15;
    }
    let edge = exact_triple_kappa8(Kappa8Branch::LimitFromBelow, PI / 2.0).is_err();
    Ok((ok && edge, "limit middle ½, direct middle 0, direct left ½ − φ/π".into()))
}

fn kzero_hyperbola(_: &Context) -> Result<(bool, String)> {
    let tr = kzero_trace(1.0, 5.0, 100)?;
    let worst = tr.samples.iter().map(|s| tr.hyperbola_residual(s.tip).abs()).fold(0.0, f64::max);
    let angle = (kzero_tip(1e-4, 5.0)?.arg() - PI / 3.0).abs();
    Ok((worst <= 1e-8 && angle <= 1e-3, format!("residual {worst:.1e}, angle error {angle:.1e}")))
}

fn qhall_consistency(ctx: &Context) -> Result<(bool, String)> {
    let g = StripGeometry::new(1.0)?;
    let tc = ctx.two_curve(6.0, QuadTol::new(1e-15, 1e-13))?;
    let prof = current_profile_with(g, kap(6.0)?, 64, Normalization::Raw)?;
    let diff = |y: f64| -> Result<f64> {
        let tr = tc.triple(ray_parameter(g, y))?;
        Ok(tr.p_left - tr.p_right)
    };
    let h = 1e-3;
    let ratios: Vec<f64> = prof
        .y
        .par_iter()
        .zip(&prof.i)
        .map(|(&y, &i)| {
            let d = (diff(y - 2.0 * h)? - 8.0 * diff(y - h)? + 8.0 * diff(y + h)? - diff(y + 2.0 * h)?) / (12.0 * h);
            Ok(d / i)
        })
        .collect::<Result<_>>()?;
    let c = ratios[ratios.len() / 2];
    let dev = ratios.iter().map(|r| (r / c - 1.0).abs()).fold(0.0, f64::max);
    let sym = current_profile_with(g, kap(6.0)?, 200, Normalization::Raw)?.asymmetry();
    Ok((dev <= 1e-4 && sym <= 1e-9, format!("shape deviation {dev:.1e}, asymmetry {sym:.1e}")))
}

fn mc_two_curve(_: &Context) -> Result<(bool, String)> {
    let cases = [(6.0, 0.0, 1u64), (8.0 / 3.0, 1.0, 2), (4.0, 0.0, 3)];
    let mut ok = true;
    let mut parts = Vec::new();
    for (kv, t, seed) in cases {
        let k = kap(kv)?;
        let e = simulate_two_curve_left(&SimConfig::new(k, t, 100_000, seed))?;
        let want = TwoCurve::new(k)?.left(t)?.value;
        let dev = (e.p_hat - want).abs();
        ok &= dev <= (3.0 * e.stderr).max(0.01);
        parts.push(format!("κ={kv:.3},t={t}: {:.1}σ", dev / e.stderr));
    }
    Ok((ok, parts.join("; ")))
}

fn mc_schramm(_: &Context) -> Result<(bool, String)> {
    let e = simulate_schramm(&SimConfig::new(kap(4.0)?, 1.0, 100_000, 4))?;
    let dev = (e.p_hat - 0.25).abs() / e.stderr;
    Ok((dev <= 3.0, format!("κ=4,t=1: p̂ {:.5}, {dev:.1}σ from 1/4", e.p_hat)))
}

fn checks(level: Level) -> Vec<(&'static str, Check)> {
    let mut v: Vec<(&'static str, Check)> = vec![
        ("specfn identities", specfn_identities),
        ("kernel normalization", kernel_normalization),
        ("kernel ODE residual", kernel_ode),
        ("probability ODE residual", probability_ode),
        ("closed-form agreement", closed_form_agreement),
        ("sum rule and reflection", sum_and_reflection),
        ("tail exponents", tail_exponents),
        ("κ = 8 branches", kappa8_branches),
        ("κ = 0 hyperbola", kzero_hyperbola),
        ("qhall consistency", qhall_consistency),
    ];
    if level == Level::Full {
        v.push(("Monte Carlo two-curve", mc_two_curve));
        v.push(("Monte Carlo single curve", mc_schramm));
    }
    v
}

pub fn run(level: Level, ctx: Context) -> Vec<CheckResult> {
    checks(level)
        .into_iter()
        .map(|(name, f)| {
            let (passed, detail) = f(&ctx).unwrap_or_else(|e| (false, e.to_string()));
            CheckResult { name, passed, detail }
        })
        .collect()
}
