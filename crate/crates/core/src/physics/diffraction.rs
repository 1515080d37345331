//! Fraunhofer single-slit pattern `I/I₀ = sin²u / u²`, `u = πb·sinθ/λ`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::trig::TrigEquation;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiffractionGeometry {
    pub slit_width: f64,
    pub wavelength: f64,
}

impl DiffractionGeometry {
    pub fn new(slit_width: f64, wavelength: f64) -> Result<Self> {
        if !(slit_width > 0.0 && wavelength > 0.0) {
            return Err(Error::InvalidArgument("slit width and wavelength must be positive".into()));
        }
        Ok(Self { slit_width, wavelength })
    }
}

pub fn angle_to_u(g: &DiffractionGeometry, theta: f64) -> f64 {
    PI * g.slit_width * theta.sin() / g.wavelength
}

/// `sin²u/u²` with the removable singularity filled in.
pub fn relative_intensity(u: f64) -> f64 {
    if u == 0.0 {
        1.0
    } else {
        let s = u.sin() / u;
        s * s
    }
}

pub fn diffraction_profile(u_grid: &[f64]) -> Vec<(f64, f64)> {
    u_grid.iter().map(|&u| (u, relative_intensity(u))).collect()
}

/// Closed-form relative intensity of secondary maximum `n ≥ 1`,
/// `½·(9/(3αₙ² − 2) − 1/αₙ²)` with `αₙ = (n + ½)π`.
pub fn secondary_maximum_ratio(n: usize) -> f64 {
    let a2 = ((n as f64 + 0.5) * PI).powi(2);
    0.5 * (9.0 / (3.0 * a2 - 2.0) - 1.0 / a2)
}

/// Position `uₙ` (from the Padé root of `tan u = u`) and `Iₙ/I₀`.
/// `n = 0` is the central maximum.
pub fn diffraction_maxima(n: usize) -> Result<(f64, f64)> {
    if n == 0 {
        return Ok((0.0, 1.0));
    }
    let u = TrigEquation::tan(1.0).root_closed_form(n)?.value;
    Ok((u, secondary_maximum_ratio(n)))
}
