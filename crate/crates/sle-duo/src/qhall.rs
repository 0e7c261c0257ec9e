//! Mean extra current density across a strip of width L, obtained by mapping
//! the half-plane with z ↦ (L/π) ln z. A ray at t = u/v lands at height
//! y = (L/π)·arccot t and the density is proportional to
//! d(P_left − P_right)/dy.

use crate::error::{Result, SleError};
use crate::kernel::{Kappa, Kernel};
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

/// Smallest accepted grid.
pub const MIN_GRID: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StripGeometry {
    width_l: f64,
}

impl StripGeometry {
    pub fn new(width_l: f64) -> Result<Self> {
        if !(width_l > 0.0 && width_l.is_finite()) {
            return Err(SleError::Usage(format!("strip width must be positive, got {width_l}")));
        }
        Ok(Self { width_l })
    }

    pub fn width(&self) -> f64 {
        self.width_l
    }
}

/// Height of the image of the ray t; t → +∞ is the bottom edge, t → −∞ the top.
pub fn strip_coordinate(g: StripGeometry, t: f64) -> f64 {
    g.width_l / PI * 1f64.atan2(t)
}

/// Inverse of [`strip_coordinate`]: t = cot(πy/L).
pub fn ray_parameter(g: StripGeometry, y: f64) -> f64 {
    -(PI * y / g.width_l - FRAC_PI_2).tan()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Normalization {
    /// π/(N·L) times the kernel combination, N the normalization constant.
    Raw,
    #[default]
    UnitPeak,
    /// Unit trapezoid integral over the sampled grid.
    UnitIntegral,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurrentProfile {
    pub y: Vec<f64>,
    pub i: Vec<f64>,
    pub normalization: Normalization,
    /// Raw values are `i * raw_scale`.
    pub raw_scale: f64,
}

impl CurrentProfile {
    pub fn raw(&self) -> Vec<f64> {
        self.i.iter().map(|v| v * self.raw_scale).collect()
    }

    pub fn renormalized(&self, normalization: Normalization) -> Result<Self> {
        let raw = self.raw();
        let scale = match normalization {
            Normalization::Raw => 1.0,
            Normalization::UnitPeak => raw.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            Normalization::UnitIntegral => trapezoid(&self.y, &raw),
        };
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(SleError::numerical("current profile normalization", scale));
        }
        Ok(Self {
            y: self.y.clone(),
            i: raw.iter().map(|v| v / scale).collect(),
            normalization,
            raw_scale: scale,
        })
    }

    /// Largest |I(y) − I(L − y)| over the grid, pairing mirrored indices.
    pub fn asymmetry(&self) -> f64 {
        self.i.iter().zip(self.i.iter().rev()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    pub fn integral(&self) -> f64 {
        trapezoid(&self.y, &self.i)
    }
}

fn trapezoid(x: &[f64], f: &[f64]) -> f64 {
    x.windows(2).zip(f.windows(2)).map(|(x, f)| 0.5 * (x[1] - x[0]) * (f[0] + f[1])).sum()
}

/// π/(N·L): the constant multiplying (1 + cot²)[S(cot) + S(−cot)].
pub fn raw_prefactor(g: StripGeometry, kappa: Kappa) -> Result<f64> {
    let kernel = Kernel::new(kappa)?;
    Ok(PI / (kernel.norm() * g.width_l))
}

/// Raw density at height y.
pub fn raw_current(kernel: &Kernel, g: StripGeometry, y: f64) -> Result<f64> {
    let t = ray_parameter(g, y);
    raw_at(kernel, g, t)
}

fn raw_at(kernel: &Kernel, g: StripGeometry, t: f64) -> Result<f64> {
    let pre = PI / (kernel.norm() * g.width_l);
    Ok(pre * (1.0 + t * t) * (kernel.s(t)? + kernel.s(-t)?))
}

/// Profile on `grid` points spanning [L/grid, L − L/grid], normalized to unit peak.
pub fn current_profile(g: StripGeometry, kappa: Kappa, grid: usize) -> Result<CurrentProfile> {
    current_profile_with(g, kappa, grid, Normalization::default())
}

pub fn current_profile_with(
    g: StripGeometry,
    kappa: Kappa,
    grid: usize,
    normalization: Normalization,
) -> Result<CurrentProfile> {
    if grid < MIN_GRID {
        return Err(SleError::Usage(format!("current profile needs at least {MIN_GRID} points, got {grid}")));
    }
    let kernel = Kernel::new(kappa)?;
    let l = g.width_l;
    let span = 1.0 - 2.0 / grid as f64;
    let last = (grid - 1) as f64;
    // u is exactly odd under i ↦ grid−1−i, so t is too and I is exactly even
    let (y, raw): (Vec<f64>, Vec<f64>) = (0..grid)
        .map(|i| {
            let u = (2 * i) as f64 - last;
            let x = FRAC_PI_2 * span * u / last;
            let t = -x.tan();
            Ok((l / 2.0 + l / PI * x, raw_at(&kernel, g, t)?))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .unzip();
    CurrentProfile { y, i: raw, normalization: Normalization::Raw, raw_scale: 1.0 }.renormalized(normalization)
}
