//! Tolerance settings shared by every construction.

use std::str::FromStr;

/// Numerical thresholds. All comparisons in the crate read from one of these.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Minimum |det| of an invertible affine linear part.
    pub det: f64,
    /// Tangency residual accepted as "tangent".
    pub tan: f64,
    /// Relative threshold for conic classification (rank and discriminant).
    pub class: f64,
    /// Cross product of unit edge directions below which sides are parallel.
    pub par: f64,
    /// Relative size of t_i + t_j below which a contact point is at infinity.
    pub pair: f64,
    /// Margin on the locus parameter u in (0, 1).
    pub interval: f64,
    /// Relative distance from the Newton line accepted as "on" it.
    pub on: f64,
    /// Relative center agreement.
    pub center: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            det: 1e-12,
            tan: 1e-8,
            class: 1e-10,
            par: 1e-9,
            pair: 1e-12,
            interval: 1e-9,
            on: 1e-9,
            center: 1e-9,
        }
    }
}

impl Tolerances {
    /// Name of the environment variable read by [`Tolerances::from_env`].
    pub const ENV_VAR: &'static str = "INCONIC_TOL";

    /// Defaults overridden by `INCONIC_TOL`, when set.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(Self::ENV_VAR) {
            Ok(overrides) if !overrides.trim().is_empty() => overrides.parse(),
            _ => Ok(Self::default()),
        }
    }

    /// Applies `key=value` overrides (comma separated) on top of `self`.
    pub fn with_overrides(mut self, overrides: &str) -> Result<Self, String> {
        for item in overrides
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
        {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got `{item}`"))?;
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| format!("invalid number in `{item}`"))?;
            if !(value.is_finite() && value > 0.0) {
                return Err(format!("tolerance `{item}` must be positive and finite"));
            }
            let slot = match key.trim() {
                "det" => &mut self.det,
                "tan" => &mut self.tan,
                "class" => &mut self.class,
                "par" => &mut self.par,
                "pair" => &mut self.pair,
                "interval" => &mut self.interval,
                "on" => &mut self.on,
                "center" => &mut self.center,
                other => return Err(format!("unknown tolerance key `{other}`")),
            };
            *slot = value;
        }
        Ok(self)
    }
}

impl FromStr for Tolerances {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tolerances::default().with_overrides(s)
    }
}
