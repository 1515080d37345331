//! Bound states with δ-function interactions (`ħ = m = 1`).

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::lambert::{w_eval, w_oracle, WBranch, WVariant};
use crate::trig::TrigEquation;

/// Critical strength `γ₀/a` (units `ħ²/ma²`) at which the even ground state has `E = 0`.
pub const CRITICAL_STRENGTH: f64 = -2.0;

fn unperturbed(n: usize) -> f64 {
    let nf = n as f64;
    nf * nf * PI * PI / 2.0
}

/// Even-parity level `n` (odd, ≥ 1) of the unit infinite well with a
/// central δ at the critical strength.
///
/// With `use_approximation` the closed form from the Padé tan-root is used;
/// otherwise `k` comes from the bisection root of `tan(k/2) = k/2` and
/// `E = k²/2`.
pub fn single_delta_even_energy(n: usize, use_approximation: bool) -> Result<f64> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(domain(format!(
            "level {n} is not an even-parity state (n must be odd); odd states do not feel the central delta"
        )));
    }
    if use_approximation {
        let shift = if n == 1 {
            PI * PI / 4.0
        } else {
            let npi = n as f64 * PI;
            2.0 * (1.0 + 2.0 / (3.0 * npi * npi))
        };
        Ok(unperturbed(n) + shift * CRITICAL_STRENGTH)
    } else {
        let half_k = single_delta_half_wavevector(n)?;
        Ok(2.0 * half_k * half_k)
    }
}

/// `ka/2` for even level `n`, the branch `(n−1)/2` root of `tan y = y`.
pub fn single_delta_half_wavevector(n: usize) -> Result<f64> {
    if n.is_multiple_of(2) {
        return Err(domain("even-parity levels have odd n"));
    }
    Ok(TrigEquation::tan(1.0).root_oracle((n - 1) / 2)?.value)
}

/// `sin y − y cos y`, the pole-free form of `tan y = y`.
pub fn single_delta_residual(half_k: f64) -> f64 {
    half_k.sin() - half_k * half_k.cos()
}

/// Energies in units `ħ²/ma²`; the odd state exists only for `a/b > 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DoubleDeltaEnergies {
    pub even: f64,
    pub odd: Option<f64>,
}

impl DoubleDeltaEnergies {
    /// Exchange energy `E⁺ − E⁻`, when both states are bound.
    pub fn exchange(&self) -> Option<f64> {
        self.odd.map(|o| self.even - o)
    }
}

/// `2ka = s + W(±s·e^{−s})`, `E = −(2ka)²/8` for `s = a/b`.
pub fn double_delta_energies(a_over_b: f64) -> Result<DoubleDeltaEnergies> {
    double_delta_with(a_over_b, |x| w_oracle(x, WBranch::W0))
}

/// [`double_delta_energies`] with `W₀` replaced by an approximant.
pub fn double_delta_energies_with(a_over_b: f64, variant: WVariant) -> Result<DoubleDeltaEnergies> {
    double_delta_with(a_over_b, |x| w_eval(x, variant))
}

fn double_delta_with(s: f64, w: impl Fn(f64) -> Result<f64>) -> Result<DoubleDeltaEnergies> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::InvalidArgument(format!("a/b must be positive, got {s}")));
    }
    let arg = s * (-s).exp();
    let energy = |y: f64| -y * y / 8.0;
    let even = energy(s + w(arg)?);
    let odd = if s > 1.0 { Some(energy(s + w(-arg)?)) } else { None };
    Ok(DoubleDeltaEnergies { even, odd })
}

/// Wavevector `k = √(−2E)` (a = 1) for a bound energy.
pub fn wavevector(energy: f64) -> f64 {
    (-2.0 * energy).sqrt()
}

/// `k − (s/2)(1 ± e^{−2k})` with `a = 1`, `b = 1/s`; `even` picks `+`.
pub fn double_delta_residual(a_over_b: f64, k: f64, even: bool) -> f64 {
    let sign = if even { 1.0 } else { -1.0 };
    k - a_over_b / 2.0 * (1.0 + sign * (-2.0 * k).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn critical_ground_state_is_zero() {
        assert_eq!(single_delta_even_energy(1, true).unwrap(), 0.0);
        assert_eq!(single_delta_even_energy(1, false).unwrap(), 0.0);
    }

    #[test]
    fn third_level() {
        let exact = single_delta_even_energy(3, false).unwrap();
        assert!((exact - 40.3814).abs() < 1e-4, "{exact}");
        let approx = single_delta_even_energy(3, true).unwrap();
        let literal = 4.5 * PI * PI - 4.0 * (1.0 + 2.0 / (27.0 * PI * PI));
        assert!((approx - literal).abs() < 1e-12);
        assert!((approx - exact).abs() <= 2e-3);
    }

    #[test]
    fn odd_levels_only() {
        assert!(single_delta_even_energy(2, true).is_err());
        assert!(single_delta_even_energy(0, false).is_err());
    }

    #[test]
    fn residuals_vanish() {
        for n in [1, 3, 5, 7, 9] {
            let y = single_delta_half_wavevector(n).unwrap();
            assert!(single_delta_residual(y).abs() < 1e-10);
        }
        for s in [0.5, 1.5, 2.0, 5.0] {
            let e = double_delta_energies(s).unwrap();
            assert!(double_delta_residual(s, wavevector(e.even), true).abs() < 1e-10);
            if let Some(o) = e.odd {
                assert!(double_delta_residual(s, wavevector(o), false).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn double_delta_reference_values() {
        let e = double_delta_energies(2.0).unwrap();
        assert!((e.even - -0.614782).abs() < 1e-6);
        assert!((e.odd.unwrap() - -0.317454).abs() < 1e-6);
        assert!(double_delta_energies(1.0).unwrap().odd.is_none());
        assert!(double_delta_energies(0.3).unwrap().odd.is_none());
        assert!(double_delta_energies(0.0).is_err());
    }

    #[test]
    fn isolated_well_limit() {
        let s = 40.0;
        let e = double_delta_energies(s).unwrap();
        let limit = -s * s / 8.0;
        assert!((e.even / limit - 1.0).abs() < 1e-15);
        assert!((e.odd.unwrap() / limit - 1.0).abs() < 1e-15);
    }
}
