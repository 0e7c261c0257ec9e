//! Monte Carlo estimates of the side probabilities from the Loewner flow.
//!
//! With w = g_t(ξ) − a_t = x + iy and force point v = g_t(x₂) − a_t, the flow
//! is invariant under (w, v, t) → (λw, λv, λ²t). In X = x/y, V = v/y and the
//! time ds = dt/y² it becomes an autonomous SDE with additive noise,
//!
//!   dX = [4X/(1+X²) + ρ/V] ds − √κ dW,
//!   dV = [(2+ρ)/V + 2V/(1+X²)] ds − √κ dW,
//!
//! integrated with the stochastic Heun scheme. The step ds = dt_safety·min(1+X², V²)
//! is dt = dt_safety·min(|w|, v)² in the original time. A sample ends when X
//! leaves [−x_settle, x_settle]; X → −∞ means ξ lies left of the curve.
//!
//! For large |X| the process is close to a Bessel process of dimension
//! 1 + 8/κ, which returns from |X| to O(1) with probability about
//! |X|^(1−8/κ). That is not small at |X| = 10⁴ once κ > 4, so beyond
//! `x_escape` the flow continues in log coordinates with coarse steps up to
//! x_settle = RETURN_TOL^(−κ/(8−κ)), where a return is negligible.
//! Since y itself carries no information, `im_floor` bounds the scale-free
//! ratio Im w/|w| = (1+X²)^(−1/2) while X is integrated directly.

use crate::error::{Result, SleError};
use crate::kernel::Kappa;
use crate::probabilities::ProbabilityTriple;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Bisection depth allowed when a step would push the force point through zero.
const MAX_REJECTIONS: u32 = 8;
/// Minimum resolved fraction accepted by [`assemble_triple`].
const MIN_RESOLVED: f64 = 0.99;
/// Return probability accepted when a side is recorded.
const RETURN_TOL: f64 = 1e-5;
/// Largest settling threshold; reached only for κ close to 8.
const MAX_SETTLE: f64 = 1e100;
/// Gap below which the startup noise stream is used.
const STARTUP_GAP: f64 = 1e-3;
const STARTUP_WORD_POS: u128 = 1 << 67;
/// Step factor in the log-coordinate tail.
const TAIL_DT: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub kappa: Kappa,
    pub target_t: f64,
    pub samples: u64,
    pub seed: u64,
    /// Initial x₂ − x₁, in units of Im ξ.
    pub delta0: f64,
    pub x_escape: f64,
    /// Floor on Im w/|w|.
    pub im_floor: f64,
    pub dt_safety: f64,
    pub max_steps: u64,
    /// Force-point weight: 2 for the pair of curves, 0 for a lone SLE_κ.
    pub rho: f64,
}

impl SimConfig {
    pub fn new(kappa: Kappa, target_t: f64, samples: u64, seed: u64) -> Self {
        SimConfig {
            kappa,
            target_t,
            samples,
            seed,
            delta0: 1e-6,
            x_escape: 1e4,
            im_floor: 1e-9,
            dt_safety: 0.005,
            max_steps: 10_000_000,
            rho: 2.0,
        }
    }

    /// |X| at which a side is recorded.
    pub fn x_settle(&self) -> f64 {
        let k = self.kappa.value();
        RETURN_TOL.powf(-k / (8.0 - k)).clamp(10.0 * self.x_escape, MAX_SETTLE.max(10.0 * self.x_escape))
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.kappa.value();
        if !(k > 0.0 && k < 8.0) {
            return Err(SleError::Usage(format!("simulation needs 0 < κ < 8, got {k}")));
        }
        let checks = [
            (self.samples >= 1, "samples must be at least 1"),
            (self.delta0 > 0.0, "delta0 must be positive"),
            (self.x_escape >= 1e2, "x_escape must be at least 100"),
            (self.dt_safety > 0.0 && self.dt_safety <= 0.1, "dt_safety must lie in (0, 0.1]"),
            (self.im_floor > 0.0, "im_floor must be positive"),
            (self.max_steps >= 1, "max_steps must be at least 1"),
            (self.target_t.is_finite(), "target_t must be finite"),
            (self.rho.is_finite() && self.rho >= 0.0, "rho must be finite and non-negative"),
        ];
        match checks.iter().find(|(ok, _)| !ok) {
            Some((_, msg)) => Err(SleError::Usage((*msg).into())),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimEstimateCounts {
    pub n_left: u64,
    pub n_right: u64,
    pub n_unresolved: u64,
    pub wall_steps: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimEstimate {
    pub p_hat: f64,
    pub stderr: f64,
    pub n_left: u64,
    pub n_right: u64,
    pub n_unresolved: u64,
    pub wall_steps: u64,
}

impl SimEstimate {
    fn from_counts(c: SimEstimateCounts) -> Self {
        let samples = (c.n_left + c.n_right + c.n_unresolved) as f64;
        let resolved = (c.n_left + c.n_right) as f64;
        let p_hat = if resolved > 0.0 { c.n_left as f64 / resolved } else { f64::NAN };
        SimEstimate {
            p_hat,
            stderr: (p_hat * (1.0 - p_hat) / samples).sqrt(),
            n_left: c.n_left,
            n_right: c.n_right,
            n_unresolved: c.n_unresolved,
            wall_steps: c.wall_steps,
        }
    }

    pub fn samples(&self) -> u64 {
        self.n_left + self.n_right + self.n_unresolved
    }

    pub fn resolved_fraction(&self) -> f64 {
        (self.n_left + self.n_right) as f64 / self.samples() as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
    Unresolved,
}

#[derive(Debug, Clone, Copy)]
struct State {
    x: f64,
    /// V = v/y; `None` for the one-curve flow.
    v: Option<f64>,
}

struct Flow {
    sqrt_kappa: f64,
    rho: f64,
}

impl Flow {
    fn drift(&self, s: &State) -> (f64, Option<f64>) {
        let q = 1.0 / (1.0 + s.x * s.x);
        match s.v {
            None => (4.0 * s.x * q, None),
            Some(v) => (4.0 * s.x * q + self.rho / v, Some((2.0 + self.rho) / v + 2.0 * v * q)),
        }
    }

    /// Euler–Maruyama step of (ln|X|, ln V) over ds = TAIL_DT·min(X², V²).
    fn tail_step(&self, s: State, z: f64) -> State {
        let ax = s.x.abs();
        let scale = s.v.map_or(ax, |v| ax.min(v));
        let h = TAIL_DT * scale * scale;
        let dw = h.sqrt() * z;
        let k = self.sqrt_kappa * self.sqrt_kappa;
        let (a, b) = self.drift(&s);
        let sg = s.x.signum();
        let lx = (sg * a / ax - 0.5 * k / (ax * ax)) * h - sg * self.sqrt_kappa / ax * dw;
        State {
            x: s.x * lx.exp(),
            v: s.v.zip(b).map(|(v, b)| v * ((b / v - 0.5 * k / (v * v)) * h - self.sqrt_kappa / v * dw).exp()),
        }
    }

    fn shifted(s: &State, d: (f64, Option<f64>), h: f64, noise: f64) -> State {
        State { x: s.x + d.0 * h + noise, v: s.v.zip(d.1).map(|(v, dv)| v + dv * h + noise) }
    }

    /// Heun step over h with Brownian increment dw; `None` if V leaves (0, ∞).
    fn heun(&self, s: State, h: f64, dw: f64) -> Option<State> {
        let noise = -self.sqrt_kappa * dw;
        let d0 = self.drift(&s);
        let pred = Self::shifted(&s, d0, h, noise);
        if pred.v.is_some_and(|v| v <= 0.0) {
            return None;
        }
        let d1 = self.drift(&pred);
        let avg = (0.5 * (d0.0 + d1.0), d0.1.zip(d1.1).map(|(a, b)| 0.5 * (a + b)));
        let next = Self::shifted(&s, avg, h, noise);
        next.v.is_none_or(|v| v > 0.0).then_some(next)
    }

    /// Step that refines the Brownian path when V would cross zero: the step
    /// is redone as four quarters whose increments are drawn from the bridge
    /// pinned to dw.
    fn advance(&self, s: State, h: f64, dw: f64, depth: u32, rng: &mut ChaCha8Rng) -> Option<State> {
        if let Some(next) = self.heun(s, h, dw) {
            return Some(next);
        }
        if depth >= MAX_REJECTIONS {
            return None;
        }
        let q = 0.25 * h;
        let mut s = s;
        let mut left = dw;
        for j in 0..4 {
            let rest = h - j as f64 * q;
            let piece = if j == 3 {
                left
            } else {
                let z: f64 = rng.sample(StandardNormal);
                left * q / rest + (q * (rest - q) / rest).sqrt() * z
            };
            s = self.advance(s, q, piece, depth + 1, rng)?;
            left -= piece;
        }
        Some(s)
    }
}

fn run_sample(cfg: &SimConfig, two_curves: bool, index: u64) -> (Side, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index);
    // the gap's growth out of delta0 draws from a far block of the same stream,
    // so runs differing only in delta0 share their noise afterwards
    let mut startup = rng.clone();
    startup.set_word_pos(STARTUP_WORD_POS);
    let flow = Flow { sqrt_kappa: cfg.kappa.value().sqrt(), rho: cfg.rho };
    let floor = cfg.im_floor * cfg.im_floor;
    let settle = cfg.x_settle();
    // Im ξ = 1 and x₁ = −δ/2, x₂ = δ/2 around the common point
    let mut s = if two_curves {
        State { x: cfg.target_t + 0.5 * cfg.delta0, v: Some(cfg.delta0) }
    } else {
        State { x: cfg.target_t, v: None }
    };
    for step in 0..cfg.max_steps {
        if s.x <= -settle {
            return (Side::Left, step);
        }
        if s.x >= settle {
            return (Side::Right, step);
        }
        if s.x.abs() >= cfg.x_escape {
            s = flow.tail_step(s, rng.sample(StandardNormal));
            continue;
        }
        let scale = 1.0 + s.x * s.x;
        if scale * floor > 1.0 {
            return (Side::Unresolved, step);
        }
        let h = cfg.dt_safety * s.v.map_or(scale, |v| scale.min(v * v));
        let r = if s.v.is_some_and(|v| v < STARTUP_GAP) { &mut startup } else { &mut rng };
        let z: f64 = r.sample(StandardNormal);
        match flow.advance(s, h, h.sqrt() * z, 0, r) {
            Some(next) => s = next,
            None => return (Side::Unresolved, step + 1),
        }
    }
    (Side::Unresolved, cfg.max_steps)
}

fn simulate(cfg: &SimConfig, two_curves: bool) -> Result<SimEstimate> {
    cfg.validate()?;
    let zero = SimEstimateCounts { n_left: 0, n_right: 0, n_unresolved: 0, wall_steps: 0 };
    let counts = (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let (side, steps) = run_sample(cfg, two_curves, i);
            SimEstimateCounts {
                n_left: (side == Side::Left) as u64,
                n_right: (side == Side::Right) as u64,
                n_unresolved: (side == Side::Unresolved) as u64,
                wall_steps: steps,
            }
        })
        .reduce(
            || zero,
            |a, b| SimEstimateCounts {
                n_left: a.n_left + b.n_left,
                n_right: a.n_right + b.n_right,
                n_unresolved: a.n_unresolved + b.n_unresolved,
                wall_steps: a.wall_steps + b.wall_steps,
            },
        );
    Ok(SimEstimate::from_counts(counts))
}

/// P(ξ left of one chordal SLE_κ curve).
pub fn simulate_schramm(cfg: &SimConfig) -> Result<SimEstimate> {
    simulate(cfg, false)
}

/// P(ξ left of the left curve of the pair), through SLE(κ, ρ) with ρ = cfg.rho.
pub fn simulate_two_curve_left(cfg: &SimConfig) -> Result<SimEstimate> {
    simulate(cfg, true)
}

/// Combines a run at t (left) and a mirrored run at −t (right).
pub fn assemble_triple(left: &SimEstimate, right: &SimEstimate) -> Result<ProbabilityTriple> {
    for (name, e) in [("left", left), ("right", right)] {
        if !(e.resolved_fraction() >= MIN_RESOLVED) {
            return Err(SleError::Statistical(format!(
                "{name} run resolved only {:.2}% of samples",
                100.0 * e.resolved_fraction()
            )));
        }
    }
    Ok(ProbabilityTriple {
        p_left: left.p_hat,
        p_middle: 1.0 - left.p_hat - right.p_hat,
        p_right: right.p_hat,
        abs_err: left.stderr.hypot(right.stderr),
    })
}

/// Seed of the mirrored run, decorrelated from the direct one.
pub fn mirror_seed(seed: u64) -> u64 {
    seed ^ 0x9E37_79B9_7F4A_7C15
}

/// Two-curve run at t and the mirrored run at −t, assembled into a triple.
pub fn simulate_triple(cfg: &SimConfig) -> Result<(SimEstimate, SimEstimate, ProbabilityTriple)> {
    let left = simulate_two_curve_left(cfg)?;
    let mirrored = SimConfig { target_t: -cfg.target_t, seed: mirror_seed(cfg.seed), ..*cfg };
    let right = simulate_two_curve_left(&mirrored)?;
    let triple = assemble_triple(&left, &right)?;
    Ok((left, right, triple))
}
