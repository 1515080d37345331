//! Effective-mass correction for a spring with non-negligible mass.
//!
//! The fundamental frequency is `ω = √(k/(m + ξ·m₀))` with `ξ = 1/η² − r`,
//! `r = m/m₀`, and `η` the first root of `cot η = rη`.

use crate::error::{Error, Result};
use crate::trig::{first_root_cot_closed, TrigEquation};

/// `ξ` over `[1/3, 4/π²]` as `r` runs from `∞` down to `0`.
pub fn spring_xi(r: f64) -> Result<f64> {
    check_ratio(r)?;
    let eta = first_root_cot_closed(r)?.value;
    Ok(eta.powi(-2) - r)
}

/// [`spring_xi`] with the bisection root instead of the closed form.
pub fn spring_xi_oracle(r: f64) -> Result<f64> {
    check_ratio(r)?;
    let eta = TrigEquation::cot(r).root_oracle(0)?.value;
    Ok(eta.powi(-2) - r)
}

fn check_ratio(r: f64) -> Result<()> {
    if !(r.is_finite() && r >= 0.0) {
        return Err(Error::InvalidArgument(format!("mass ratio must be finite and >= 0, got {r}")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpringSystem {
    /// Hung mass.
    pub m: f64,
    /// Spring mass.
    pub m0: f64,
    /// Stiffness.
    pub k: f64,
}

impl SpringSystem {
    pub fn new(m: f64, m0: f64, k: f64) -> Result<Self> {
        let ok = |v: f64| v.is_finite() && v >= 0.0;
        if !(ok(m) && ok(m0) && k.is_finite() && k > 0.0) || m + m0 <= 0.0 {
            return Err(Error::InvalidArgument(
                "spring needs m, m0 >= 0 (not both zero) and k > 0".into(),
            ));
        }
        Ok(Self { m, m0, k })
    }

    /// `m/m₀`; infinite for a massless spring.
    pub fn ratio(&self) -> f64 {
        self.m / self.m0
    }
}

pub fn spring_frequency(s: &SpringSystem) -> Result<f64> {
    if s.m0 == 0.0 {
        return Ok((s.k / s.m).sqrt());
    }
    let xi = spring_xi(s.ratio())?;
    Ok((s.k / (s.m + xi * s.m0)).sqrt())
}
