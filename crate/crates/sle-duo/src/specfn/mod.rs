//! Real special functions: Γ and ₂F₁ on z ≤ 0.

mod gamma;
mod hyp2f1;

pub use gamma::{gamma, gamma_ratio, gamma_sign, ln_gamma, rgamma, sin_pi};
pub use hyp2f1::{
    gauss_series, hyp2f1_nonpos, hyp2f1_pfaff, HypParams, PfaffArm, MAX_SERIES_TERMS,
    SERIES_EPS,
};
