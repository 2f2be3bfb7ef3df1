//! Truncation and tolerance parameters controlling every infinite object.

use serde::{Deserialize, Serialize};

/// Knobs for q-series orders, lattice radii and quadrature resolution.
///
/// Defaults are tuned so that doubling any of them moves results by less
/// than `tol`; the test suite checks this two-truncation agreement.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TruncationParams {
    /// Drop q^n for n > q_order in q-series (Lambert series, eta products).
    pub q_order: usize,
    /// Restrict shifted-lattice sums to max(|n1|, |n2|) <= lattice_radius.
    pub lattice_radius: i64,
    /// Base panel count for composite Gauss-Legendre quadrature.
    pub quad_panels: usize,
    /// Half-width cap for symmetric principal-value windows.
    pub pv_window: f64,
    /// Target tolerance for truncation stability.
    pub tol: f64,
}

impl Default for TruncationParams {
    fn default() -> Self {
        TruncationParams {
            q_order: 400,
            lattice_radius: 60,
            quad_panels: 64,
            pv_window: 0.5,
            tol: 1e-9,
        }
    }
}

impl TruncationParams {
    /// Copy with every resolution knob doubled (for stability tests).
    pub fn doubled(&self) -> Self {
        TruncationParams {
            q_order: self.q_order * 2,
            lattice_radius: self.lattice_radius * 2,
            quad_panels: self.quad_panels * 2,
            pv_window: self.pv_window,
            tol: self.tol,
        }
    }

    #[must_use]
    pub fn with_lattice_radius(mut self, radius: i64) -> Self {
        self.lattice_radius = radius;
        self
    }

    #[must_use]
    pub fn with_q_order(mut self, order: usize) -> Self {
        self.q_order = order;
        self
    }

    #[must_use]
    pub fn with_panels(mut self, panels: usize) -> Self {
        self.quad_panels = panels;
        self
    }

    #[must_use]
    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }
}
