//! Branch-indexed positive roots of `tan x = κx` and `cot x = κx`.
//!
//! Four estimators are available per branch: the Padé closed form built from
//! the reverted series, Frankel's arccot formulas (κ = 1 only), the raw
//! `x⁴`-truncated series, and a bisection oracle on a pole-free residual.

use std::fmt;

use num_traits::{Float, FloatConst, Zero};

use crate::error::{domain, Error, Result};
use crate::pade::PadeApproximant;
use crate::series::{lagrange_invert, TaylorSeries};
use crate::{Rational, RationalPade, RationalSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EquationKind {
    /// `tan x = κx`, branches near `αₙ = (n + ½)π`.
    Tan,
    /// `cot x = κx`, branches near `βₙ = nπ`.
    Cot,
}

impl fmt::Display for EquationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquationKind::Tan => "tan",
            EquationKind::Cot => "cot",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Pade,
    Frankel,
    Taylor,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Pade => "pade",
            Method::Frankel => "frankel",
            Method::Taylor => "taylor",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootEstimate<F = f64> {
    pub branch: usize,
    pub value: F,
    pub method: Method,
}

/// One row of a root/error table. Errors are signed, `approx − exact`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorTableRow<F = f64> {
    pub branch: usize,
    pub exact: F,
    /// `x/π` for tan, `x/(nπ)` for cot.
    pub ratio: F,
    pub err_pade: F,
    /// Frankel's formulas exist only for κ = 1.
    pub err_frankel: Option<F>,
    pub err_taylor: F,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrigEquation<F = f64> {
    pub kind: EquationKind,
    pub kappa: F,
}

/// Sign selector for the even series `φ±`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiSign {
    /// `φ₊`, used for the cot roots.
    Plus,
    /// `φ₋`, used for the tan roots.
    Minus,
}

fn c<F: Float>(v: f64) -> F {
    F::from(v).expect("constant fits the float type")
}

/// Guaranteed final bracket width of the f64 oracle, relative to `max(1, |x|)`.
pub const ORACLE_REL_WIDTH: f64 = 1e-15;

/// `z·cot z` through `order`.
fn z_cot_z(order: usize) -> RationalSeries {
    let sinc = RationalSeries::sin(order + 1)
        .div(&RationalSeries::identity(order + 1))
        .expect("sin z / z has valuation 0");
    RationalSeries::cos(order).div(&sinc).expect("sinc(0) = 1")
}

/// The even series `φ±(x)` with `x = 1/αₙ` (tan) or `x = 1/βₙ` (cot).
///
/// Built by reverting `w = z/f(z)` with `f(z) = z² + z·cot z/κ` (tan) or
/// `f(z) = z·cot z/κ − z²` (cot), then `φ∓(w) = 1 ∓ w·z(w)` for tan and
/// `φ₊(w) = 1 + w·z(w)` for cot, thanks to `x = 1/w ∓ z`.
pub fn phi_series(sign: PhiSign, kappa: &Rational, order: usize) -> Result<RationalSeries> {
    if kappa.is_zero() {
        return Err(domain("phi series needs kappa != 0"));
    }
    if order < 4 {
        return Err(Error::InvalidArgument("phi series order must be at least 4".into()));
    }
    let zc = z_cot_z(order).scale(&(Rational::from_integer(1.into()) / kappa));
    let mut z2 = vec![Rational::zero(); order + 1];
    z2[2] = Rational::from_integer(1.into());
    let z2 = TaylorSeries::new(z2);
    let f = match sign {
        PhiSign::Minus => &zc + &z2,
        PhiSign::Plus => &zc - &z2,
    };
    let z = lagrange_invert(&f, order - 1)?;
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::from_integer(1.into());
    for (k, a) in z.coeffs().iter().enumerate().skip(1) {
        coeffs[k + 1] = match sign {
            PhiSign::Minus => -a.clone(),
            PhiSign::Plus => a.clone(),
        };
    }
    Ok(TaylorSeries::new(coeffs))
}

/// `[2,2]` Padé of `φ±` in `x`, fitted as `[1,1]` in `x²`.
pub fn phi_pade(sign: PhiSign, kappa: &Rational) -> Result<RationalPade> {
    let phi = phi_series(sign, kappa, 4)?;
    Ok(PadeApproximant::fit(&phi.in_square_variable(), 1, 1)?.in_squared_argument())
}

impl<F: Float + FloatConst> TrigEquation<F> {
    pub fn new(kind: EquationKind, kappa: F) -> Self {
        Self { kind, kappa }
    }

    pub fn tan(kappa: F) -> Self {
        Self::new(EquationKind::Tan, kappa)
    }

    pub fn cot(kappa: F) -> Self {
        Self::new(EquationKind::Cot, kappa)
    }

    /// `sin x − κx cos x` (tan) or `cos x − κx sin x` (cot); finite everywhere.
    pub fn residual(&self, x: F) -> F {
        match self.kind {
            EquationKind::Tan => x.sin() - self.kappa * x * x.cos(),
            EquationKind::Cot => x.cos() - self.kappa * x * x.sin(),
        }
    }

    /// `αₙ` for tan, `βₙ` for cot.
    pub fn anchor(&self, n: usize) -> F {
        let n = c::<F>(n as f64);
        match self.kind {
            EquationKind::Tan => (n + c(0.5)) * F::PI(),
            EquationKind::Cot => n * F::PI(),
        }
    }

    fn check_kappa(&self) -> Result<()> {
        if !self.kappa.is_finite() {
            return Err(domain("kappa must be finite"));
        }
        Ok(())
    }

    fn require_positive_kappa(&self, what: &str) -> Result<()> {
        self.check_kappa()?;
        if self.kappa <= F::zero() {
            return Err(Error::Unsupported(format!(
                "{what} is only certified for kappa > 0; use the oracle"
            )));
        }
        Ok(())
    }

    /// Interval known to contain branch `n` (closed endpoints).
    ///
    /// `None` means the root is known exactly (κ = 0 and the trivial tan root).
    pub fn bracket(&self, n: usize) -> Result<Option<(F, F)>> {
        self.check_kappa()?;
        let pi = F::PI();
        let half = c::<F>(0.5);
        let nf = c::<F>(n as f64);
        let k = self.kappa;
        Ok(match (self.kind, n) {
            (EquationKind::Tan, 0) => None,
            (EquationKind::Cot, 0) if k > F::zero() => Some((F::zero(), half * pi)),
            (EquationKind::Cot, 0) if k.is_zero() => None,
            (EquationKind::Cot, 0) => {
                return Err(domain("cot x = kx has no root in (0, pi/2) for kappa < 0"))
            }
            (_, _) if k.is_zero() => None,
            (_, _) if k > F::zero() => Some((nf * pi, (nf + half) * pi)),
            (_, _) => Some(((nf - half) * pi, nf * pi)),
        })
    }

    /// Value of the branch when it is known exactly, see [`bracket`](Self::bracket).
    fn exact_root(&self, n: usize) -> F {
        let nf = c::<F>(n as f64);
        match self.kind {
            EquationKind::Tan if n == 0 => F::zero(),
            EquationKind::Tan => nf * F::PI(),
            EquationKind::Cot => (nf + c(0.5)) * F::PI(),
        }
    }

    /// Bisection on the pole-free residual over the branch bracket.
    pub fn root_oracle(&self, n: usize) -> Result<RootEstimate<F>> {
        let estimate = |value| RootEstimate { branch: n, value, method: Method::Oracle };
        let (mut lo, mut hi) = match self.bracket(n)? {
            None => return Ok(estimate(self.exact_root(n))),
            Some(b) => b,
        };
        let mut glo = self.residual(lo);
        let ghi = self.residual(hi);
        if glo.is_zero() {
            return Ok(estimate(lo));
        }
        if ghi.is_zero() {
            return Ok(estimate(hi));
        }
        if glo.signum() == ghi.signum() {
            return Err(Error::Bracket {
                lo: lo.to_f64().unwrap_or(f64::NAN),
                hi: hi.to_f64().unwrap_or(f64::NAN),
            });
        }
        // Runs to float resolution, which is finer than ORACLE_REL_WIDTH for
        // every f64 bracket in use.
        loop {
            let mid = lo + (hi - lo) * c(0.5);
            if mid <= lo || mid >= hi {
                break;
            }
            let gm = self.residual(mid);
            if gm.is_zero() {
                return Ok(estimate(mid));
            }
            if gm.signum() == glo.signum() {
                lo = mid;
                glo = gm;
            } else {
                hi = mid;
            }
        }
        let value = if self.residual(lo).abs() <= self.residual(hi).abs() { lo } else { hi };
        Ok(estimate(value))
    }

    /// Padé closed form: `αₙ·φ₋(1/αₙ)` or `βₙ·φ₊(1/βₙ)` with
    /// `φ±(x) ≈ ((6κ±1)x² ± 3κ²) / ((3κ±1)x² ± 3κ²)`.
    ///
    /// Cot branch 0 is delegated to [`first_root_cot_closed`].
    pub fn root_closed_form(&self, n: usize) -> Result<RootEstimate<F>> {
        if self.kind == EquationKind::Tan && n == 0 {
            return Ok(RootEstimate { branch: 0, value: F::zero(), method: Method::Pade });
        }
        self.require_positive_kappa("the Pade closed form")?;
        if n == 0 {
            return first_root_cot_closed(self.kappa);
        }
        let k = self.kappa;
        let a = self.anchor(n);
        let x2 = (a * a).recip();
        let s = match self.kind {
            EquationKind::Tan => -F::one(),
            EquationKind::Cot => F::one(),
        };
        let three = c::<F>(3.0);
        let num = (c::<F>(6.0) * k + s) * x2 + s * three * k * k;
        let den = (three * k + s) * x2 + s * three * k * k;
        Ok(RootEstimate { branch: n, value: a * num / den, method: Method::Pade })
    }

    /// Frankel's arccot formula (tan) and its cot counterpart; κ = 1 only.
    pub fn root_frankel(&self, n: usize) -> Result<RootEstimate<F>> {
        self.check_kappa()?;
        if self.kappa != F::one() {
            return Err(Error::Unsupported("Frankel's formulas hold for kappa = 1 only".into()));
        }
        if n == 0 {
            return Err(domain("Frankel's formulas need branch n >= 1"));
        }
        let a = self.anchor(n);
        let arccot = a.recip().atan();
        let value = match self.kind {
            EquationKind::Tan => a - (F::one() + (a * a).recip()) * arccot,
            EquationKind::Cot => {
                let a2 = a * a;
                a + (F::one() + a2) / (c::<F>(2.0) + a2) * arccot
            }
        };
        Ok(RootEstimate { branch: n, value, method: Method::Frankel })
    }

    /// Anchor times the `x⁴`-truncated `φ` series.
    pub fn root_taylor(&self, n: usize) -> Result<RootEstimate<F>> {
        self.require_positive_kappa("the truncated series")?;
        if n == 0 {
            return Err(domain("the truncated series needs branch n >= 1"));
        }
        let k = self.kappa;
        let a = self.anchor(n);
        let x2 = (a * a).recip();
        let three = c::<F>(3.0);
        let k3 = three * k * k * k;
        let phi = match self.kind {
            EquationKind::Tan => F::one() - x2 / k - (three * k - F::one()) / k3 * x2 * x2,
            EquationKind::Cot => F::one() + x2 / k - (three * k + F::one()) / k3 * x2 * x2,
        };
        Ok(RootEstimate { branch: n, value: a * phi, method: Method::Taylor })
    }

    pub fn root(&self, method: Method, n: usize) -> Result<RootEstimate<F>> {
        match method {
            Method::Pade => self.root_closed_form(n),
            Method::Frankel => self.root_frankel(n),
            Method::Taylor => self.root_taylor(n),
            Method::Oracle => self.root_oracle(n),
        }
    }

    /// Rows `n = 1 … n_max`.
    pub fn error_table(&self, n_max: usize) -> Result<Vec<ErrorTableRow<F>>> {
        if n_max == 0 {
            return Err(Error::InvalidArgument("a table needs at least one row".into()));
        }
        (1..=n_max)
            .map(|n| {
                let exact = self.root_oracle(n)?.value;
                let ratio = match self.kind {
                    EquationKind::Tan => exact / F::PI(),
                    EquationKind::Cot => exact / self.anchor(n),
                };
                let err_frankel = if self.kappa == F::one() {
                    Some(self.root_frankel(n)?.value - exact)
                } else {
                    None
                };
                Ok(ErrorTableRow {
                    branch: n,
                    exact,
                    ratio,
                    err_pade: self.root_closed_form(n)?.value - exact,
                    err_frankel,
                    err_taylor: self.root_taylor(n)?.value - exact,
                })
            })
            .collect()
    }
}

/// Large-κ `[2,2]` form for the first cot root, `κ^{−1/2}·(…)/(…)` in `1/κ`.
pub fn first_root_cot_large<F: Float>(kappa: F) -> F {
    let u = kappa.recip();
    let num = F::one() + c::<F>(1291.0 / 4044.0) * u + c::<F>(103.0 / 5593.0) * u * u;
    let den = F::one() + c::<F>(655.0 / 1348.0) * u + c::<F>(255.0 / 3704.0) * u * u;
    kappa.sqrt().recip() * num / den
}

/// Small-κ `[2,2]` form for the first cot root, `(π/2)·(…)/(…)` in `κ`.
pub fn first_root_cot_small<F: Float + FloatConst>(kappa: F) -> F {
    let p = F::PI() * F::PI() / c(12.0);
    let num = F::one() + c::<F>(2.0) * kappa + p * kappa * kappa;
    let den = F::one() + c::<F>(3.0) * kappa + (c::<F>(2.0) + p) * kappa * kappa;
    F::FRAC_PI_2() * num / den
}

/// First root of `cot x = κx` in `(0, π/2)` from whichever of the two `[2,2]`
/// forms has the smaller residual `|cos x − κx sin x|`.
pub fn first_root_cot_closed<F: Float + FloatConst>(kappa: F) -> Result<RootEstimate<F>> {
    if !kappa.is_finite() || kappa < F::zero() {
        return Err(Error::Unsupported("first cot root closed form needs finite kappa >= 0".into()));
    }
    let eq = TrigEquation::cot(kappa);
    let small = first_root_cot_small(kappa);
    let value = if kappa.is_zero() {
        small
    } else {
        let large = first_root_cot_large(kappa);
        if eq.residual(large).abs() < eq.residual(small).abs() {
            large
        } else {
            small
        }
    };
    Ok(RootEstimate { branch: 0, value, method: Method::Pade })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;
    use std::f64::consts::PI;

    fn r(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(n, d)| ratio(n, d)).collect()
    }

    #[test]
    fn phi_minus_kappa_one() {
        let s = phi_series(PhiSign::Minus, &ratio(1, 1), 4).unwrap();
        assert_eq!(s.coeffs(), &r(&[(1, 1), (0, 1), (-1, 1), (0, 1), (-2, 3)])[..]);
    }

    #[test]
    fn phi_plus_kappa_one() {
        let s = phi_series(PhiSign::Plus, &ratio(1, 1), 4).unwrap();
        assert_eq!(s.coeffs(), &r(&[(1, 1), (0, 1), (1, 1), (0, 1), (-4, 3)])[..]);
    }

    #[test]
    fn phi_plus_kappa_two_sixth_order() {
        // Frozen from an independent fixed-point reversion z = w·f(z) in sympy.
        let s = phi_series(PhiSign::Plus, &ratio(2, 1), 6).unwrap();
        assert_eq!(s.coeff(6), ratio(163, 480));
        assert_eq!(s.coeff(4), ratio(-7, 24));
    }

    #[test]
    fn phi_rejects_bad_input() {
        assert!(phi_series(PhiSign::Plus, &ratio(0, 1), 4).is_err());
        assert!(phi_series(PhiSign::Plus, &ratio(1, 1), 3).is_err());
    }

    #[test]
    fn phi_pade_matches_closed_coefficients() {
        // φ₊ at κ = 1: (3 + 7x²)/(3 + 4x²)
        let p = phi_pade(PhiSign::Plus, &ratio(1, 1)).unwrap().to_integer_form();
        assert_eq!(p.numerator(), &r(&[(3, 1), (0, 1), (7, 1)])[..]);
        assert_eq!(p.denominator(), &r(&[(3, 1), (0, 1), (4, 1)])[..]);
    }

    #[test]
    fn closed_form_table_row_one() {
        let t = TrigEquation::tan(1.0).root_closed_form(1).unwrap();
        assert!((t.value - 4.49361454).abs() < 5e-9);
        let e = TrigEquation::cot(1.0);
        let c = e.root_closed_form(1).unwrap();
        assert!((c.value - 3.42201844).abs() < 5e-9);
        let err = c.value - e.root_oracle(1).unwrap().value;
        assert!((err - -3.6000169e-3).abs() < 1e-10);
    }

    #[test]
    fn trivial_tan_root() {
        for k in [0.5, 1.0, 7.0] {
            assert_eq!(TrigEquation::tan(k).root_closed_form(0).unwrap().value, 0.0);
            assert_eq!(TrigEquation::tan(k).root_oracle(0).unwrap().value, 0.0);
        }
    }

    #[test]
    fn closed_form_rejects_nonpositive_kappa() {
        assert!(matches!(TrigEquation::tan(0.0).root_closed_form(1), Err(Error::Unsupported(_))));
        assert!(matches!(TrigEquation::cot(-1.0).root_taylor(2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn frankel_only_for_unit_kappa() {
        assert!(matches!(TrigEquation::tan(2.0).root_frankel(1), Err(Error::Unsupported(_))));
        let e = TrigEquation::cot(1.0);
        let d = e.root_frankel(10).unwrap().value - e.root_oracle(10).unwrap().value;
        assert!((d + 3.25e-8).abs() < 5e-11, "{d}");
    }

    #[test]
    fn taylor_rows() {
        let e = TrigEquation::tan(1.0);
        let d = e.root_taylor(2).unwrap().value - e.root_oracle(2).unwrap().value;
        assert!((d - 2.977709e-5).abs() < 1e-11);
    }

    #[test]
    fn oracle_exact_values() {
        assert!((TrigEquation::tan(1.0).root_oracle(1).unwrap().value - 4.49340946).abs() < 5e-9);
        assert!((TrigEquation::cot(1.0).root_oracle(1).unwrap().value - 3.42561846).abs() < 5e-9);
        assert_eq!(TrigEquation::tan(0.0).root_oracle(3).unwrap().value, 3.0 * PI);
        assert_eq!(TrigEquation::cot(0.0).root_oracle(0).unwrap().value, PI / 2.0);
    }

    #[test]
    fn oracle_negative_kappa_uses_shifted_bracket() {
        let e = TrigEquation::tan(-0.5);
        let x = e.root_oracle(1).unwrap().value;
        assert!(x > 0.5 * PI && x < PI);
        assert!(e.residual(x).abs() < 1e-12);
        let c = TrigEquation::cot(-2.0);
        let x = c.root_oracle(2).unwrap().value;
        assert!(x > 1.5 * PI && x < 2.0 * PI);
        assert!(c.root_oracle(0).is_err());
    }

    #[test]
    fn oracle_works_in_f32() {
        let x = TrigEquation::tan(1.0_f32).root_oracle(1).unwrap().value;
        assert!((x - 4.493_409_5).abs() < 1e-5);
    }

    #[test]
    fn first_cot_root() {
        let r = first_root_cot_closed(1.0).unwrap().value;
        let o = TrigEquation::cot(1.0).root_oracle(0).unwrap().value;
        assert!((o - 0.8603336).abs() < 1e-7);
        assert!((r - o).abs() < 1e-3);
        assert_eq!(first_root_cot_closed(0.0).unwrap().value, PI / 2.0);
        let k = 1e6;
        let big = first_root_cot_closed(k).unwrap().value;
        assert!((big / (k.powf(-0.5) * (1.0 - 1.0 / (6.0 * k))) - 1.0).abs() < 1e-10);
        assert!(first_root_cot_closed(-1.0).is_err());
    }

    #[test]
    fn table_prefix() {
        let rows = TrigEquation::tan(1.0).error_table(1).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].branch, 1);
        let rows = TrigEquation::tan(2.0).error_table(3).unwrap();
        assert!(rows.iter().all(|r| r.err_frankel.is_none()));
    }
}
