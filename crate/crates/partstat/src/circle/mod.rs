//! The circle-method expansion: Kloosterman-like sums, the meromorphic
//! kernel Phi with exact pole bookkeeping, the principal-value kernel
//! integral, the five component series, and the assembled evaluator with
//! error reporting against the exact tables.

mod kernel;
mod kloosterman;
mod series;

pub use kernel::{kernel_phi, locate_pole, pv_kernel_integral, KernelPole};
pub use kloosterman::{
    euler_phi, kloosterman, kloosterman_k1, kloosterman_k2, kloosterman_k3, kloosterman_k4,
    kloosterman_k5, KloostermanKind,
};
pub use series::{component_series, expansion_eval, expansion_sweep, ComponentBreakdown};
