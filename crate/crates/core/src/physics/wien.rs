//! Wien's displacement law from `(5 − x)e^x = 5`, i.e. `x₀ = 5 + W₀(−5e⁻⁵)`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lambert::{ExpLinearProblem, WBranch, WVariant};

/// Exact SI values (CODATA 2018).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhysicalConstants {
    /// Planck constant, J·s.
    pub h: f64,
    /// Speed of light, m/s.
    pub c: f64,
    /// Boltzmann constant, J/K.
    pub k_b: f64,
}

impl PhysicalConstants {
    pub const CODATA_2018: Self = Self { h: 6.626_070_15e-34, c: 299_792_458.0, k_b: 1.380_649e-23 };
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}

pub const DEFAULT_CONTOUR_NODES: usize = 64;
pub const MIN_CONTOUR_NODES: usize = 16;
const CONTOUR_IMAG_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WienMethod {
    LambertOracle,
    PadeII,
    PadeIIRounded,
    /// Trapezoid rule with `M` nodes on the unit circle.
    Contour(usize),
}

impl fmt::Display for WienMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WienMethod::LambertOracle => f.write_str("lambert"),
            WienMethod::PadeII => f.write_str("pade-ii"),
            WienMethod::PadeIIRounded => f.write_str("pade-ii-rounded"),
            WienMethod::Contour(m) => write!(f, "contour({m})"),
        }
    }
}

/// `e^{−x} = −(x − 5)/5`, the exp-linear form of the peak condition.
pub fn peak_problem() -> ExpLinearProblem<f64> {
    ExpLinearProblem { a: -0.2, b: 5.0, c: 1.0 }
}

/// `(5 − x)e^x − 5`.
pub fn peak_residual(x: f64) -> f64 {
    (5.0 - x) * x.exp() - 5.0
}

pub fn wien_x0(method: WienMethod) -> Result<f64> {
    let p = peak_problem();
    match method {
        WienMethod::LambertOracle => p.solve(WBranch::W0),
        WienMethod::PadeII => p.solve_with(WVariant::PadeII),
        WienMethod::PadeIIRounded => p.solve_with(WVariant::PadeIIRounded),
        WienMethod::Contour(m) => contour_x0(m),
    }
}

/// `5·∮w(θ)e^{3iθ}dθ / ∮w(θ)e^{2iθ}dθ`, `w(θ) = (1/5)/((1 − e^{iθ})e^{5e^{iθ}} − 1)`.
///
/// Both integrals use the same `m` uniform nodes on `[0, 2π)`, which is the
/// trapezoid rule for a 2π-periodic integrand.
pub fn contour_x0(m: usize) -> Result<f64> {
    if m < MIN_CONTOUR_NODES {
        return Err(Error::InvalidArgument(format!(
            "contour quadrature needs at least {MIN_CONTOUR_NODES} nodes, got {m}"
        )));
    }
    let one = Complex64::new(1.0, 0.0);
    let (mut upper, mut lower) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    for j in 0..m {
        let theta = 2.0 * PI * j as f64 / m as f64;
        let z = Complex64::from_polar(1.0, theta);
        let w = 0.2 / ((one - z) * (5.0 * z).exp() - one);
        let z2 = z * z;
        lower += w * z2;
        upper += w * z2 * z;
    }
    let ratio = 5.0 * upper / lower;
    if ratio.im.abs() >= CONTOUR_IMAG_TOL {
        return Err(Error::NoConvergence { what: "contour quadrature (increase --nodes)", iterations: m });
    }
    Ok(ratio.re)
}

/// `b = hc/(k_B·x₀)` in m·K.
pub fn wien_constant(consts: &PhysicalConstants) -> Result<f64> {
    let x0 = wien_x0(WienMethod::LambertOracle)?;
    Ok(consts.h * consts.c / (consts.k_b * x0))
}

/// Spectral energy density `8πhc/λ⁵ · 1/(e^{hc/λk_BT} − 1)` at each wavelength.
pub fn planck_profile(lambda_grid: &[f64], temperature: f64, consts: &PhysicalConstants) -> Result<Vec<(f64, f64)>> {
    if temperature.is_nan() || temperature <= 0.0 {
        return Err(Error::InvalidArgument("temperature must be positive".into()));
    }
    if let Some(bad) = lambda_grid.iter().find(|l| l.is_nan() || **l <= 0.0) {
        return Err(Error::InvalidArgument(format!("wavelength must be positive, got {bad}")));
    }
    let hc = consts.h * consts.c;
    Ok(lambda_grid
        .iter()
        .map(|&l| {
            let x = hc / (l * consts.k_b * temperature);
            (l, 8.0 * PI * hc / l.powi(5) / x.exp_m1())
        })
        .collect())
}
