//! Statistics of partition parts in arithmetic progressions.
//!
//! Let T_{R,r}(n) be the total number of parts congruent to r (mod R) over
//! all partitions of n. This crate computes T_{R,r}(n) exactly (big-integer
//! tables, brute-force enumeration, hook-length sums) and numerically
//! realizes the analytic machinery that describes its growth:
//!
//! - the modular transformation of the weight-one non-modular Eisenstein
//!   series F_{R,r}(tau) = sum_{m = r (R)} q^m/(1-q^m) at a cusp h/k,
//!   including its indefinite-theta and Mordell-integral components
//!   ([`qseries`], [`transform`]),
//! - a five-part circle-method expansion of T_{R,r}(n) with Kloosterman-like
//!   sums, half-integer Bessel kernels and a principal-value kernel integral
//!   ([`circle`]),
//! - closed-form leading asymptotics: the log/digamma bracket, power-series
//!   coefficients a_{R,r,l}, the antisymmetric difference
//!   T_{R,r}(n) - T_{R,R-r}(n), and the part-probability ratio
//!   T_{R,r}(n)/T_{1,1}(n) ([`asymptotics`]).
//!
//! Everything is validated against the exact tables; see `tests/acceptance.rs`
//! for the end-to-end suite and the `examples/` directory for runnable tours
//! of each capability. The thin `partstat` binary exposes the same
//! functionality as batch subcommands ([`cli`]).

pub mod asymptotics;
pub mod circle;
pub mod cli;
pub mod error;
pub mod numerics;
pub mod params;
pub mod partitions;
pub mod qseries;
pub mod specfun;
pub mod transform;

pub use error::{Error, Result};
pub use params::TruncationParams;
