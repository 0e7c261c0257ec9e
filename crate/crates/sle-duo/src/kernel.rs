//! κ-derived constants and the kernels Q(t) and S(t).
//!
//! With k = 4/κ, every solution of the kernel equation is
//!
//!   Q(t) = [A·₂F₁(½+k, 1−k; ½; −t²) + B·t·₂F₁(1+k, 3/2−k; 3/2; −t²)] / (1+t²)^(2k−1)
//!
//! and S is the one with A = 1 and B fixed so that S decays fast as t → +∞.
//! For |t| ≥ 2 both parts are rebuilt from series in x = 1/(1+t²) (the
//! connection formulas at infinity), which keeps the fast-decaying side free
//! of cancellation. When 2k − ½ is close to an integer those coefficients
//! blow up and the direct form is used instead.

use crate::error::{Result, SleError};
use crate::specfn::{gamma_ratio, gauss_series, hyp2f1_nonpos, rgamma, HypParams};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// |t| from which the series at infinity are used for the even and odd parts.
const TAIL_SWITCH: f64 = 2.0;
/// |t| from which S itself is built from the series at infinity.
const S_TAIL_SWITCH: f64 = 1.0;
/// Minimum distance of 2k − ½ from an integer for the series at infinity.
const DEGENERATE_GAP: f64 = 1e-3;
/// Tolerance for recognising the special values of κ.
const KAPPA_MATCH: f64 = 1e-12;

/// SLE parameter κ ∈ [0, 8].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Kappa(f64);

/// Where a κ value sits among the special points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KappaClass {
    Zero,
    Two,
    EightThirds,
    Four,
    Six,
    Eight,
    Generic,
}

impl Kappa {
    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..=8.0).contains(&value) {
            return Err(SleError::Domain(format!("κ must lie in [0, 8], got {value}")));
        }
        Ok(Kappa(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// k = 4/κ.
    pub fn k(self) -> f64 {
        4.0 / self.0
    }

    pub fn class(self) -> KappaClass {
        let v = self.0;
        let near = |x: f64| (v - x).abs() <= KAPPA_MATCH;
        if v == 0.0 {
            KappaClass::Zero
        } else if near(2.0) {
            KappaClass::Two
        } else if near(8.0 / 3.0) {
            KappaClass::EightThirds
        } else if near(4.0) {
            KappaClass::Four
        } else if near(6.0) {
            KappaClass::Six
        } else if v == 8.0 {
            KappaClass::Eight
        } else {
            KappaClass::Generic
        }
    }

    /// Small κ: the kernels are sharply peaked and series need many terms.
    pub fn slow_convergence(self) -> bool {
        self.0 > 0.0 && self.0 <= 0.5
    }

    /// Errors unless 0 < κ < 8, the range of the generic formulas.
    pub fn require_generic(self) -> Result<()> {
        if self.0 > 0.0 && self.0 < 8.0 {
            Ok(())
        } else {
            Err(SleError::Domain(format!(
                "generic formulas need 0 < κ < 8, got {}; κ = 0 and κ = 8 have closed forms",
                self.0
            )))
        }
    }
}

impl TryFrom<f64> for Kappa {
    type Error = SleError;
    fn try_from(v: f64) -> Result<Self> {
        Kappa::new(v)
    }
}

impl From<Kappa> for f64 {
    fn from(k: Kappa) -> f64 {
        k.0
    }
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Accepts a decimal ("2.5") or a fraction literal ("8/3").
impl FromStr for Kappa {
    type Err = SleError;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || SleError::Usage(format!("cannot parse κ from {s:?}"));
        let value = match s.split_once('/') {
            Some((p, q)) => {
                let p: f64 = p.trim().parse().map_err(|_| bad())?;
                let q: f64 = q.trim().parse().map_err(|_| bad())?;
                if q == 0.0 {
                    return Err(bad());
                }
                p / q
            }
            None => s.parse().map_err(|_| bad())?,
        };
        if !value.is_finite() {
            return Err(bad());
        }
        Kappa::new(value)
    }
}

/// Marks parameter sets where μ, λ (and more) are undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Degeneracy {
    /// κ = 0: deterministic curves.
    Deterministic,
    /// κ = 8: h₃ = 0.
    SpaceFilling,
}

/// Conformal weights, exponents and equation coefficients for one κ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CftParams {
    pub h2: f64,
    pub h3: f64,
    pub mu: f64,
    pub lambda: f64,
    /// Central charge.
    pub c: f64,
    pub x2leg: f64,
    pub x4leg: f64,
    pub alpha1: f64,
    pub alpha3: f64,
    pub degenerate: Option<Degeneracy>,
}

pub fn derive_params(kappa: Kappa) -> Result<CftParams> {
    let v = kappa.value();
    if v == 0.0 {
        let nan = f64::NAN;
        return Ok(CftParams {
            h2: nan,
            h3: nan,
            mu: nan,
            lambda: nan,
            c: nan,
            x2leg: nan,
            x4leg: nan,
            alpha1: nan,
            alpha3: nan,
            degenerate: Some(Degeneracy::Deterministic),
        });
    }
    let h2 = (6.0 - v) / (2.0 * v);
    let h3 = (8.0 - v) / v;
    let c = (3.0 * v - 8.0) * (6.0 - v) / (2.0 * v);
    let (mu, lambda, degenerate) = if h3 == 0.0 {
        (f64::NAN, f64::NAN, Some(Degeneracy::SpaceFilling))
    } else {
        (-2.0 / h3, 1.0 / (h3 * (1.0 + h3)), None)
    };
    let p = CftParams {
        h2,
        h3,
        mu,
        lambda,
        c,
        x2leg: (8.0 - v) / v,
        x4leg: 24.0 / v - 2.0,
        alpha1: -(6.0 - v) / v,
        alpha3: 2.0 / v,
        degenerate,
    };
    let r = weight_quadratic_residual(p.h3, p.c);
    if r > 1e-10 {
        return Err(SleError::Internal(format!(
            "h₃ = {h3} is not a root of the weight quadratic at c = {c} (residual {r:e})"
        )));
    }
    Ok(p)
}

/// Relative residual of 3h² + h(c−7) + c + 2 = 0.
pub fn weight_quadratic_residual(h3: f64, c: f64) -> f64 {
    let terms = [3.0 * h3 * h3, h3 * (c - 7.0), c, 2.0];
    let scale = terms.iter().map(|x| x.abs()).sum::<f64>();
    terms.iter().sum::<f64>().abs() / scale
}

/// B = −2Γ(1+k)Γ(k) / (Γ(½+k)Γ(k−½)); zero at κ = 8.
pub fn constant_b(kappa: Kappa) -> Result<f64> {
    if kappa.value() == 0.0 {
        return Err(SleError::Domain("constant B is undefined at κ = 0".into()));
    }
    let k = kappa.k();
    Ok(-2.0 * gamma_ratio(&[1.0 + k, k], &[0.5 + k, k - 0.5])?)
}

/// ∫ S over the real line: 2^(2−2k) π Γ(3k−1) / (Γ(k)Γ(2k)).
pub fn norm_constant(kappa: Kappa) -> Result<f64> {
    kappa.require_generic()?;
    let k = kappa.k();
    Ok(2f64.powf(2.0 - 2.0 * k) * PI * gamma_ratio(&[3.0 * k - 1.0], &[k, 2.0 * k])?)
}

/// Coefficients of the series at infinity.
#[derive(Debug, Clone, Copy)]
struct TailForm {
    k: f64,
    c: [f64; 4],
    p: [HypParams; 4],
}

impl TailForm {
    fn new(k: f64) -> Result<Option<Self>> {
        let g = 2.0 * k - 0.5;
        if (g - g.round()).abs() < DEGENERATE_GAP {
            return Ok(None);
        }
        let sqrt_pi = PI.sqrt();
        let g_half = gamma_ratio(&[0.5 - 2.0 * k], &[])?;
        let c1 = sqrt_pi * g_half * rgamma(1.0 - k) * rgamma(-k);
        let c2 = sqrt_pi * gamma_ratio(&[2.0 * k - 0.5], &[0.5 + k, k - 0.5])?;
        let c3 = 0.5 * sqrt_pi * g_half * rgamma(1.5 - k) * rgamma(0.5 - k);
        let c4 = 0.5 * sqrt_pi * gamma_ratio(&[2.0 * k - 0.5], &[1.0 + k, k])?;
        let p = [
            HypParams::new(0.5 + k, k - 0.5, 2.0 * k + 0.5)?,
            HypParams::new(1.0 - k, -k, 1.5 - 2.0 * k)?,
            HypParams::new(1.0 + k, k, 2.0 * k + 0.5)?,
            HypParams::new(1.5 - k, 0.5 - k, 1.5 - 2.0 * k)?,
        ];
        Ok(Some(TailForm { k, c: [c1, c2, c3, c4], p }))
    }

    /// The four terms C_i·T_i(u) for u > 0.
    fn terms(&self, u: f64) -> Result<[f64; 4]> {
        let k = self.k;
        let x = 1.0 / (1.0 + u * u);
        let ln_x = -(u * u).ln_1p();
        let f = |i: usize| gauss_series(self.p[i], x);
        let t1 = (ln_x * (3.0 * k - 0.5)).exp() * f(0)?;
        let t2 = (ln_x * k).exp() * f(1)?;
        let t3 = u * (ln_x * 3.0 * k).exp() * f(2)?;
        let t4 = u * (ln_x * (k + 0.5)).exp() * f(3)?;
        let [c1, c2, c3, c4] = self.c;
        Ok([c1 * t1, c2 * t2, c3 * t3, c4 * t4])
    }
}

/// Precomputed kernel for one κ.
#[derive(Debug, Clone)]
pub struct Kernel {
    kappa: Kappa,
    k: f64,
    b: f64,
    exact_b: f64,
    b_is_exact: bool,
    norm: f64,
    f1: HypParams,
    f2: HypParams,
    tail: Option<TailForm>,
}

impl Kernel {
    pub fn new(kappa: Kappa) -> Result<Self> {
        kappa.require_generic()?;
        let b = constant_b(kappa)?;
        Self::build(kappa, b, b)
    }

    /// Kernel whose S uses a caller-supplied B (for mutation checks).
    pub fn with_b(kappa: Kappa, b: f64) -> Result<Self> {
        kappa.require_generic()?;
        let exact = constant_b(kappa)?;
        Self::build(kappa, b, exact)
    }

    fn build(kappa: Kappa, b: f64, exact_b: f64) -> Result<Self> {
        let k = kappa.k();
        Ok(Kernel {
            kappa,
            k,
            b,
            exact_b,
            b_is_exact: b == exact_b,
            norm: norm_constant(kappa)?,
            f1: HypParams::new(0.5 + k, 1.0 - k, 0.5)?,
            f2: HypParams::new(1.0 + k, 1.5 - k, 1.5)?,
            tail: TailForm::new(k)?,
        })
    }

    pub fn kappa(&self) -> Kappa {
        self.kappa
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// Decay exponent of S(t) as t → +∞ (S ~ t^(−p)).
    pub fn right_decay(&self) -> f64 {
        6.0 * self.k - 1.0
    }

    /// Decay exponent of S(−u) and of the odd part as u → +∞.
    pub fn left_decay(&self) -> f64 {
        2.0 * self.k
    }

    fn weight(&self, t: f64) -> f64 {
        (-(2.0 * self.k - 1.0) * (t * t).ln_1p()).exp()
    }

    fn checked_square(t: f64) -> Result<f64> {
        let z = t * t;
        if z.is_finite() {
            Ok(z)
        } else {
            Err(SleError::numerical(format!("kernel argument t = {t} out of range"), f64::INFINITY))
        }
    }

    /// c in S(t) ≈ c·t^(1−6k) as t → +∞, when the series at infinity apply.
    pub fn right_tail_coefficient(&self) -> Option<f64> {
        let tf = self.tail.as_ref().filter(|_| self.b_is_exact)?;
        Some(tf.c[0] + self.b * tf.c[2])
    }

    /// c in S(−u) ≈ c·u^(−2k) as u → +∞.
    pub fn left_tail_coefficient(&self) -> Option<f64> {
        let tf = self.tail.as_ref().filter(|_| self.b_is_exact)?;
        Some(2.0 * tf.c[1])
    }

    /// c in odd(u) ≈ c·u^(−2k) as u → +∞.
    pub fn odd_tail_coefficient(&self) -> Option<f64> {
        self.tail.as_ref().map(|tf| tf.c[3])
    }

    /// Exponent of the first correction to the u^(−2k) left tail.
    pub fn left_correction_decay(&self) -> f64 {
        (2.0 * self.k + 2.0).min(6.0 * self.k - 1.0)
    }

    /// Even part ₂F₁(½+k, 1−k; ½; −t²)/(1+t²)^(2k−1).
    pub fn even(&self, t: f64) -> Result<f64> {
        let u = t.abs();
        match &self.tail {
            Some(tf) if u >= TAIL_SWITCH => {
                let [a, b, _, _] = tf.terms(u)?;
                Ok(a + b)
            }
            _ => Ok(hyp2f1_nonpos(self.f1, -Self::checked_square(t)?)? * self.weight(t)),
        }
    }

    /// Odd part t·₂F₁(1+k, 3/2−k; 3/2; −t²)/(1+t²)^(2k−1).
    pub fn odd(&self, t: f64) -> Result<f64> {
        let u = t.abs();
        match &self.tail {
            Some(tf) if u >= TAIL_SWITCH => {
                let [_, _, c, d] = tf.terms(u)?;
                Ok(t.signum() * (c + d))
            }
            _ => Ok(t * hyp2f1_nonpos(self.f2, -Self::checked_square(t)?)? * self.weight(t)),
        }
    }

    /// General solution A·even + B·odd.
    pub fn q(&self, t: f64, a: f64, b: f64) -> Result<f64> {
        if a != 0.0 && b == a * self.exact_b {
            return Ok(a * self.exact_s(t)?);
        }
        let e = if a == 0.0 { 0.0 } else { a * self.even(t)? };
        let o = if b == 0.0 { 0.0 } else { b * self.odd(t)? };
        Ok(e + o)
    }

    /// S(t) = even + B·odd.
    pub fn s(&self, t: f64) -> Result<f64> {
        if self.b_is_exact {
            self.exact_s(t)
        } else {
            Ok(self.even(t)? + self.b * self.odd(t)?)
        }
    }

    fn exact_s(&self, t: f64) -> Result<f64> {
        match &self.tail {
            Some(tf) if t.abs() >= S_TAIL_SWITCH => {
                let [e1, e2, o3, _] = tf.terms(t.abs())?;
                if t > 0.0 {
                    // the slowly decaying pieces cancel exactly for this B
                    Ok(e1 + self.exact_b * o3)
                } else {
                    Ok(e1 - self.exact_b * o3 + 2.0 * e2)
                }
            }
            _ => Ok(self.even(t)? + self.exact_b * self.odd(t)?),
        }
    }
}

/// Residual at t, relative to the local size of Q and its derivatives, of
/// λQ'' − (2μt/(t²+1))Q' + ((3−μ)t² − (1+μ))/(t²+1)²·Q = 0,
/// with 5-point central differences of step h.
pub fn kernel_ode_residual<F>(kappa: Kappa, t: f64, h: f64, q: F) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let cp = derive_params(kappa)?;
    if cp.degenerate.is_some() {
        return Err(SleError::Domain(format!("kernel equation is degenerate at κ = {kappa}")));
    }
    let f = [q(t - 2.0 * h)?, q(t - h)?, q(t)?, q(t + h)?, q(t + 2.0 * h)?];
    let d1 = (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h);
    let d2 = (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h * h);
    let w = t * t + 1.0;
    let terms = [
        cp.lambda * d2,
        -2.0 * cp.mu * t / w * d1,
        ((3.0 - cp.mu) * t * t - (1.0 + cp.mu)) / (w * w) * f[2],
    ];
    // odd solutions vanish term by term at t = 0, so the scale also carries |Q'|
    let scale: f64 = terms.iter().map(|x| x.abs()).sum::<f64>()
        + cp.lambda.abs() * (d1.abs() + f[2].abs());
    Ok(terms.iter().sum::<f64>().abs() / scale)
}

pub fn kernel_s(kappa: Kappa, t: f64) -> Result<f64> {
    Kernel::new(kappa)?.s(t)
}

pub fn kernel_q(kappa: Kappa, t: f64, a: f64, b: f64) -> Result<f64> {
    Kernel::new(kappa)?.q(t, a, b)
}
