//! Real Lambert W: a Halley oracle on both real branches, the truncated
//! Taylor series of `W₀`, and the four `[2,2]` Padé variants derived from it.
//!
//! The Padé coefficients are not tabulated; they are produced once from the
//! exact series by [`pade_type_one`] / [`pade_type_two`] and cached as f64.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{Float, FloatConst, One};

use crate::error::{domain, Error, Result};
use crate::pade::{PadeApproximant, DEFAULT_MAX_SCALE};
use crate::series::lagrange_invert;
use crate::{ratio, Rational, RationalPade, RationalSeries};

const MAX_ITERATIONS: usize = 100;
const RESIDUAL_TOL: f64 = 1e-15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WBranch {
    /// Principal branch on `[−1/e, ∞)`.
    W0,
    /// Lower branch on `[−1/e, 0)`.
    Wm1,
}

impl fmt::Display for WBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WBranch::W0 => "0",
            WBranch::Wm1 => "-1",
        })
    }
}

/// How `W₀` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WVariant {
    /// First `N` terms of `Σ (−n)^{n−1} xⁿ / n!`.
    Taylor(usize),
    /// `x · [2,2]` Padé of `W₀(x)/x`.
    PadeI,
    PadeIRounded,
    /// `ln(1+x) · [2,2]` Padé of `W₀(x)/ln(1+x)`.
    PadeII,
    PadeIIRounded,
    Oracle,
}

impl fmt::Display for WVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WVariant::Taylor(n) => write!(f, "taylor:{n}"),
            WVariant::PadeI => f.write_str("pade-i"),
            WVariant::PadeIRounded => f.write_str("pade-i-rounded"),
            WVariant::PadeII => f.write_str("pade-ii"),
            WVariant::PadeIIRounded => f.write_str("pade-ii-rounded"),
            WVariant::Oracle => f.write_str("oracle"),
        }
    }
}

impl std::str::FromStr for WVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "pade-i" => WVariant::PadeI,
            "pade-i-rounded" => WVariant::PadeIRounded,
            "pade-ii" => WVariant::PadeII,
            "pade-ii-rounded" => WVariant::PadeIIRounded,
            "oracle" => WVariant::Oracle,
            _ => match s.strip_prefix("taylor:").map(str::parse::<usize>) {
                Some(Ok(n)) if n >= 1 => WVariant::Taylor(n),
                _ => return Err(Error::InvalidArgument(format!("unknown W variant '{s}'"))),
            },
        })
    }
}

fn c<F: Float>(v: f64) -> F {
    F::from(v).expect("constant fits the float type")
}

fn inv_e<F: Float>() -> F {
    F::one().exp().recip()
}

/// `W₀(x) = Σ_{n=1}^{order} aₙxⁿ` from reverting `w = z·e^{z}`, i.e. `f(z) = e^{−z}`.
pub fn series_coefficients(order: usize) -> Result<RationalSeries> {
    let f = RationalSeries::exp_scaled(-Rational::one(), order.saturating_sub(1));
    lagrange_invert(&f, order)
}

fn w_over_x(order: usize) -> RationalSeries {
    series_coefficients(order + 1)
        .and_then(|w| w.div(&RationalSeries::identity(order + 1)))
        .expect("W0 series has valuation 1")
}

/// `[2,2]` Padé of `W₀(x)/x`.
pub fn pade_type_one() -> RationalPade {
    PadeApproximant::fit(&w_over_x(4), 2, 2).expect("nondegenerate")
}

/// `[2,2]` Padé of `M(x) = W₀(x)/ln(1+x)`.
pub fn pade_type_two() -> RationalPade {
    auxiliary_series(4)
        .and_then(|m| PadeApproximant::fit(&m, 2, 2))
        .expect("nondegenerate")
}

/// `M(x) = W₀(x) / ln(1+x)` through `order`.
pub fn auxiliary_series(order: usize) -> Result<RationalSeries> {
    series_coefficients(order + 1)?.div(&RationalSeries::ln_1p(order + 1))
}

struct PadeSet {
    one: Pade,
    one_rounded: Pade,
    two: Pade,
    two_rounded: Pade,
}

/// f64 copy of a rational approximant.
#[derive(Clone, Debug)]
struct Pade {
    num: Vec<f64>,
    den: Vec<f64>,
}

impl Pade {
    fn from_rational(p: &RationalPade) -> Self {
        let conv = |v: &[Rational]| v.iter().map(crate::Scalar::to_float::<f64>).collect();
        Self { num: conv(p.numerator()), den: conv(p.denominator()) }
    }

    fn eval<F: Float>(&self, x: F) -> Result<F> {
        let horner = |c: &[f64]| c.iter().rev().fold(F::zero(), |acc, &a| acc * x + self::c::<F>(a));
        let d = horner(&self.den);
        if d.abs() <= c::<F>(crate::pade::POLE_TOLERANCE) {
            return Err(Error::Pole { x: x.to_f64().unwrap_or(f64::NAN), value: d.to_f64().unwrap_or(f64::NAN) });
        }
        Ok(horner(&self.num) / d)
    }
}

fn pades() -> &'static PadeSet {
    static SET: OnceLock<PadeSet> = OnceLock::new();
    SET.get_or_init(|| {
        let one = pade_type_one();
        let two = pade_type_two();
        PadeSet {
            one: Pade::from_rational(&one),
            one_rounded: Pade::from_rational(&one.round(DEFAULT_MAX_SCALE)),
            two: Pade::from_rational(&two),
            two_rounded: Pade::from_rational(&two.round(DEFAULT_MAX_SCALE)),
        }
    })
}

/// True outside `(−1/e, 1]`, where the approximants are not characterized.
pub fn is_extrapolated<F: Float>(x: F) -> bool {
    x <= -inv_e::<F>() || x > F::one()
}

/// A prepared `W₀` evaluator; builds coefficients once per variant.
#[derive(Clone, Debug)]
pub struct WApproximant {
    variant: WVariant,
    taylor: Vec<f64>,
}

impl WApproximant {
    pub fn new(variant: WVariant) -> Result<Self> {
        let taylor = match variant {
            WVariant::Taylor(0) => {
                return Err(Error::InvalidArgument("taylor variant needs N >= 1".into()))
            }
            WVariant::Taylor(n) => series_coefficients(n)?
                .coeffs()
                .iter()
                .map(crate::Scalar::to_float::<f64>)
                .collect(),
            _ => Vec::new(),
        };
        Ok(Self { variant, taylor })
    }

    pub fn variant(&self) -> WVariant {
        self.variant
    }

    pub fn eval<F: Float + FloatConst>(&self, x: F) -> Result<F> {
        let type_two = |p: &Pade| -> Result<F> {
            if x <= -F::one() {
                return Err(domain("type II variants need x > -1 (ln(1+x))"));
            }
            Ok(x.ln_1p() * p.eval(x)?)
        };
        match self.variant {
            WVariant::Taylor(_) => {
                Ok(self.taylor.iter().rev().fold(F::zero(), |acc, &a| acc * x + c::<F>(a)))
            }
            WVariant::PadeI => Ok(x * pades().one.eval(x)?),
            WVariant::PadeIRounded => Ok(x * pades().one_rounded.eval(x)?),
            WVariant::PadeII => type_two(&pades().two),
            WVariant::PadeIIRounded => type_two(&pades().two_rounded),
            WVariant::Oracle => w_oracle(x, WBranch::W0),
        }
    }
}

/// `W₀(x)` by the chosen variant.
pub fn w_eval<F: Float + FloatConst>(x: F, variant: WVariant) -> Result<F> {
    WApproximant::new(variant)?.eval(x)
}

fn initial_guess<F: Float + FloatConst>(x: F, branch: WBranch) -> F {
    let p = (c::<F>(2.0) * (F::E() * x + F::one())).max(F::zero()).sqrt();
    let near_branch_point = x < c(-0.25);
    let branch_series = |p: F| -F::one() + p - p * p / c(3.0) + c::<F>(11.0 / 72.0) * p * p * p;
    match branch {
        WBranch::W0 if near_branch_point => branch_series(p),
        WBranch::W0 if x <= c(3.0) => x.ln_1p(),
        WBranch::W0 => {
            let l1 = x.ln();
            let l2 = l1.ln();
            l1 - l2 + l2 / l1
        }
        WBranch::Wm1 if near_branch_point => branch_series(-p),
        WBranch::Wm1 => {
            let l1 = (-x).ln();
            let l2 = (-l1).ln();
            l1 - l2 + l2 / l1
        }
    }
}

/// Halley iteration on `w·e^w − x`.
///
/// Stops once the residual is within `1e−15·|x|` or the update is below a
/// few ulps of `w`.
pub fn w_oracle<F: Float + FloatConst>(x: F, branch: WBranch) -> Result<F> {
    if x.is_nan() {
        return Err(domain("W of NaN"));
    }
    let branch_point = -inv_e::<F>();
    let slack = c::<F>(4.0) * F::epsilon();
    if x < branch_point - slack {
        return Err(domain(format!(
            "W is not real below -1/e (x = {})",
            x.to_f64().unwrap_or(f64::NAN)
        )));
    }
    match branch {
        WBranch::W0 if x == F::zero() => return Ok(F::zero()),
        WBranch::W0 if x == F::infinity() => return Ok(x),
        WBranch::Wm1 if x >= F::zero() => {
            return Err(domain("W_-1 is defined on [-1/e, 0)"));
        }
        _ => {}
    }
    if x <= branch_point {
        return Ok(-F::one());
    }
    // Relative to |x| rather than max(1, |x|) so tiny arguments keep full precision.
    let tol = c::<F>(RESIDUAL_TOL).max(c::<F>(2.0) * F::epsilon()) * x.abs();
    let step_tol = c::<F>(4.0) * F::epsilon();
    let mut w = initial_guess(x, branch);
    for _ in 0..MAX_ITERATIONS {
        let ew = w.exp();
        let f = w * ew - x;
        if f.abs() <= tol {
            return Ok(w);
        }
        let wp1 = w + F::one();
        if wp1 == F::zero() {
            return Ok(w);
        }
        let denom = ew * wp1 - (w + c(2.0)) * f / (c::<F>(2.0) * wp1);
        let dw = f / denom;
        w = w - dw;
        if dw.abs() <= step_tol * F::one().max(w.abs()) {
            return Ok(w);
        }
    }
    Err(Error::NoConvergence { what: "Halley iteration for W", iterations: MAX_ITERATIONS })
}

/// `e^{−c·x} = a·(x − b)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpLinearProblem<F = f64> {
    pub a: F,
    pub b: F,
    pub c: F,
}

impl<F: Float + FloatConst> ExpLinearProblem<F> {
    pub fn new(a: F, b: F, c: F) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidArgument("exp-linear problem needs a != 0".into()));
        }
        Ok(Self { a, b, c })
    }

    /// `(c/a)·e^{−cb}`, the argument handed to W.
    pub fn w_argument(&self) -> F {
        self.c / self.a * (-self.c * self.b).exp()
    }

    pub fn residual(&self, x: F) -> F {
        (-self.c * x).exp() - self.a * (x - self.b)
    }

    /// `x = b + W(arg)/c`; `c = 0` degenerates to `x = b + 1/a`.
    pub fn solve(&self, branch: WBranch) -> Result<F> {
        if self.c.is_zero() {
            return Ok(self.b + self.a.recip());
        }
        let arg = self.w_argument();
        if arg < -inv_e::<F>() - c::<F>(4.0) * F::epsilon() {
            return Err(Error::NoRealSolution(arg.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(self.b + w_oracle(arg, branch)? / self.c)
    }

    /// Same as [`solve`](Self::solve) with `W₀` replaced by an approximant.
    pub fn solve_with(&self, variant: WVariant) -> Result<F> {
        if self.c.is_zero() {
            return Ok(self.b + self.a.recip());
        }
        let arg = self.w_argument();
        if arg < -inv_e::<F>() - c::<F>(4.0) * F::epsilon() {
            return Err(Error::NoRealSolution(arg.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(self.b + w_eval(arg, variant)? / self.c)
    }
}

pub fn solve_exp_linear<F: Float + FloatConst>(p: &ExpLinearProblem<F>, branch: WBranch) -> Result<F> {
    p.solve(branch)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveStatus {
    Ok,
    /// `x = 0`: both sides vanish, relative error undefined.
    ZeroArgument,
    /// Outside `(−1/e, 1]`.
    OutOfRange,
    /// The approximant itself failed (pole, logarithm domain).
    Undefined,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvePoint<F = f64> {
    pub x: F,
    /// `log₁₀ |(W_variant − W₀)/W₀|`; `−∞` where the two agree exactly.
    pub delta: Option<F>,
    pub status: CurveStatus,
}

/// Relative-error curve of a variant against the oracle.
pub fn error_curve<F: Float + FloatConst>(grid: &[F], variant: WVariant) -> Result<Vec<CurvePoint<F>>> {
    let approx = WApproximant::new(variant)?;
    Ok(grid
        .iter()
        .map(|&x| {
            let skip = |status| CurvePoint { x, delta: None, status };
            if x == F::zero() {
                return skip(CurveStatus::ZeroArgument);
            }
            if is_extrapolated(x) {
                return skip(CurveStatus::OutOfRange);
            }
            let (Ok(a), Ok(e)) = (approx.eval(x), w_oracle(x, WBranch::W0)) else {
                return skip(CurveStatus::Undefined);
            };
            let delta = ((a - e) / e).abs().log10();
            CurvePoint { x, delta: Some(delta), status: CurveStatus::Ok }
        })
        .collect())
}

/// Exact `(−n)^{n−1}/n!`, for cross-checking [`series_coefficients`].
pub fn series_coefficient_closed(n: u32) -> Rational {
    assert!(n >= 1);
    let mut fact = ratio(1, 1);
    for k in 1..=n {
        fact *= ratio(k as i64, 1);
    }
    let base = Rational::from_integer((-(n as i64)).into());
    num_traits::pow(base, (n - 1) as usize) / fact
}
