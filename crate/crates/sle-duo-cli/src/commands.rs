use crate::args::{Format, KzeroArgs, ProbArgs, QhallArgs, SchrammArgs, SimulateArgs};
use crate::error::{CliError, CliResult};
use crate::output;
use rayon::prelude::*;
use serde::Serialize;
use sle_duo::closedforms::{exact_triple, exact_triple_kappa8, kzero_trace};
use sle_duo::kernel::{Kappa, KappaClass};
use sle_duo::probabilities::{schramm_left, two_curve_triple, FieldPoint, ProbabilityTriple, TwoCurve};
use sle_duo::qhall::{current_profile_with, Normalization, StripGeometry};
use sle_duo::simulator::{simulate_triple, SimConfig, SimEstimate};
use std::path::PathBuf;

/// Files written by a command, and a disagreement to report after the manifest is out.
pub struct Outcome {
    pub outputs: Vec<PathBuf>,
    pub failure: Option<CliError>,
}

impl Outcome {
    fn ok(path: &std::path::Path) -> Self {
        Outcome { outputs: vec![path.to_path_buf()], failure: None }
    }
}

fn t_grid(t_min: f64, t_max: f64, points: usize) -> CliResult<Vec<f64>> {
    if points < 2 {
        return Err(CliError::Usage(format!("--points must be at least 2, got {points}")));
    }
    if !(t_min.is_finite() && t_max.is_finite() && t_min < t_max) {
        return Err(CliError::Usage(format!("need finite --t-min < --t-max, got {t_min} and {t_max}")));
    }
    let last = (points - 1) as f64;
    Ok((0..points).map(|i| t_min + (t_max - t_min) * i as f64 / last).collect())
}

pub fn prob(a: &ProbArgs) -> CliResult<Outcome> {
    let ts = t_grid(a.t_min, a.t_max, a.points)?;
    let triples: Vec<ProbabilityTriple> = match a.kappa.class() {
        KappaClass::Zero => {
            return Err(CliError::Usage("κ = 0 curves are deterministic; use the kzero command".into()))
        }
        KappaClass::Eight => ts
            .iter()
            .map(|&t| exact_triple_kappa8(a.branch.into(), t.atan()))
            .collect::<Result<_, _>>()?,
        _ => {
            let tc = TwoCurve::new(a.kappa)?;
            ts.par_iter().map(|&t| tc.triple(t)).collect::<Result<_, _>>()?
        }
    };
    let header = ["t", "phi", "p_left", "p_middle", "p_right", "abs_err"];
    let rows: Vec<Vec<f64>> = ts
        .iter()
        .zip(&triples)
        .map(|(&t, tr)| vec![t, t.atan(), tr.p_left, tr.p_middle, tr.p_right, tr.abs_err])
        .collect();
    let text = match a.format {
        Format::Csv => output::csv(&header, &rows),
        Format::Json => output::json_rows(&header, &rows)?,
    };
    output::write(&a.out, &text)?;
    Ok(Outcome::ok(&a.out))
}

pub fn schramm(a: &SchrammArgs) -> CliResult<Outcome> {
    let ts = t_grid(a.t_min, a.t_max, a.points)?;
    let rows: Vec<Vec<f64>> = ts
        .par_iter()
        .map(|&t| {
            let pt = FieldPoint::from_t(t)?;
            Ok(vec![t, pt.phi, schramm_left(a.kappa, pt)?])
        })
        .collect::<CliResult<_>>()?;
    output::write(&a.out, &output::csv(&["t", "phi", "p_left"], &rows))?;
    Ok(Outcome::ok(&a.out))
}

#[derive(Debug, Serialize)]
struct Comparison {
    source: &'static str,
    triple: ProbabilityTriple,
    /// |p̂_left − oracle| in units of the left run's stderr.
    deviation_sigma: f64,
    agrees: bool,
}

#[derive(Debug, Serialize)]
struct SimulationReport {
    config: SimConfig,
    left: SimEstimate,
    right: SimEstimate,
    triple: ProbabilityTriple,
    oracle: Comparison,
}

fn oracle(kappa: Kappa, t: f64) -> CliResult<(&'static str, ProbabilityTriple)> {
    let pt = FieldPoint::from_t(t)?;
    Ok(match kappa.class() {
        KappaClass::Two | KappaClass::EightThirds | KappaClass::Four => ("closed form", exact_triple(kappa, pt)?),
        _ => ("quadrature", two_curve_triple(kappa, pt)?),
    })
}

pub fn sim_config(a: &SimulateArgs) -> SimConfig {
    let mut c = SimConfig::new(a.kappa, a.t, a.samples, a.seed);
    if let Some(v) = a.dt_safety {
        c.dt_safety = v;
    }
    if let Some(v) = a.delta0 {
        c.delta0 = v;
    }
    if let Some(v) = a.x_escape {
        c.x_escape = v;
    }
    if let Some(v) = a.im_floor {
        c.im_floor = v;
    }
    if let Some(v) = a.max_steps {
        c.max_steps = v;
    }
    c
}

pub fn simulate(a: &SimulateArgs) -> CliResult<Outcome> {
    let cfg = sim_config(a);
    cfg.validate()?;
    let (source, exact) = oracle(a.kappa, a.t)?;
    let (left, right, triple) = simulate_triple(&cfg)?;
    let diff = (left.p_hat - exact.p_left).abs();
    let deviation_sigma = if left.stderr > 0.0 { diff / left.stderr } else if diff == 0.0 { 0.0 } else { f64::INFINITY };
    let agrees = deviation_sigma <= 3.0;
    let report = SimulationReport {
        config: cfg,
        left,
        right,
        triple,
        oracle: Comparison { source, triple: exact, deviation_sigma, agrees },
    };
    output::write(&a.json_out, &output::to_json(&report)?)?;
    println!(
        "p_left {:.6} ± {:.6}, p_middle {:.6}, p_right {:.6}; {source} p_left {:.6} ({deviation_sigma:.2}σ)",
        triple.p_left, left.stderr, triple.p_middle, triple.p_right, exact.p_left
    );
    let failure = (!agrees).then(|| {
        CliError::Disagreement(format!(
            "Monte Carlo p_left {:.6} differs from the {source} value {:.6} by {deviation_sigma:.2}σ",
            left.p_hat, exact.p_left
        ))
    });
    Ok(Outcome { outputs: vec![a.json_out.clone()], failure })
}

pub fn qhall(a: &QhallArgs) -> CliResult<Outcome> {
    let g = StripGeometry::new(a.width)?;
    let raw = current_profile_with(g, a.kappa, a.points, Normalization::Raw)?;
    let peak = raw.renormalized(Normalization::UnitPeak)?;
    let rows: Vec<Vec<f64>> =
        raw.y.iter().zip(&raw.i).zip(&peak.i).map(|((&y, &r), &p)| vec![y, r, p]).collect();
    output::write(&a.out, &output::csv(&["y", "I_raw", "I_unit_peak"], &rows))?;
    Ok(Outcome::ok(&a.out))
}

pub fn kzero(a: &KzeroArgs) -> CliResult<Outcome> {
    let trace = kzero_trace(a.delta, a.t_max, a.points)?;
    let rows: Vec<Vec<f64>> = trace
        .samples
        .iter()
        .map(|s| vec![s.time, s.tip.re, s.tip.im, trace.hyperbola_residual(s.tip)])
        .collect();
    output::write(&a.out, &output::csv(&["time", "re_tip", "im_tip", "hyperbola_residual"], &rows))?;
    Ok(Outcome::ok(&a.out))
}
