//! Log-scaled magnitudes: (log_scale, mantissa) pairs representing
//! mantissa * exp(log_scale) without overflow. The leading exponential of
//! every asymptotic prediction here is exp(pi*sqrt(2n/3)), which leaves the
//! f64 range near n ~ 7.6e4, so predictions are carried in this split form.

/// A real number stored as `mantissa * exp(log_scale)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogScaled {
    pub log_scale: f64,
    pub mantissa: f64,
}

impl LogScaled {
    pub fn new(log_scale: f64, mantissa: f64) -> Self {
        LogScaled {
            log_scale,
            mantissa,
        }
    }

    pub fn zero() -> Self {
        LogScaled {
            log_scale: 0.0,
            mantissa: 0.0,
        }
    }

    pub fn from_f64(v: f64) -> Self {
        if v == 0.0 {
            return Self::zero();
        }
        LogScaled {
            log_scale: v.abs().ln(),
            mantissa: v.signum(),
        }
    }

    /// Collapse to f64; may overflow to +/-inf for very large scales.
    pub fn to_f64(self) -> f64 {
        self.mantissa * self.log_scale.exp()
    }

    /// ln |value|, or -inf for zero.
    pub fn ln_abs(self) -> f64 {
        if self.mantissa == 0.0 {
            f64::NEG_INFINITY
        } else {
            self.log_scale + self.mantissa.abs().ln()
        }
    }

    pub fn scale_by(self, factor: f64) -> Self {
        LogScaled {
            log_scale: self.log_scale,
            mantissa: self.mantissa * factor,
        }
    }

    pub fn add(self, other: Self) -> Self {
        if self.mantissa == 0.0 {
            return other;
        }
        if other.mantissa == 0.0 {
            return self;
        }
        let ls = self.log_scale.max(other.log_scale);
        let m = self.mantissa * (self.log_scale - ls).exp()
            + other.mantissa * (other.log_scale - ls).exp();
        LogScaled {
            log_scale: ls,
            mantissa: m,
        }
    }

    pub fn sub(self, other: Self) -> Self {
        self.add(other.scale_by(-1.0))
    }

    /// self / other as f64 (scales subtract, no overflow for nearby scales).
    pub fn ratio(self, other: Self) -> f64 {
        (self.log_scale - other.log_scale).exp() * self.mantissa / other.mantissa
    }
}
