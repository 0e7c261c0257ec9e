//! Probabilities that a point of the upper half-plane lies left of, between,
//! or right of two SLE curves grown from a common boundary point.

pub mod closedforms;
pub mod error;
pub mod kernel;
pub mod probabilities;
pub mod qhall;
pub mod quad;
pub mod simulator;
pub mod specfn;

pub use error::{Result, SleError};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
