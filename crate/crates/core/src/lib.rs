//! Closed-form approximations to the roots of `tan x = κx`, `cot x = κx` and
//! the Lambert W equation `w·e^w = x`.
//!
//! The construction pipeline works in exact rational arithmetic: Taylor
//! series are reverted with the Lagrange–Bürmann formula and condensed into
//! `[p, q]` Padé approximants. Floating point only enters at evaluation
//! time, where every closed form is checked against an independent
//! bisection or Halley oracle.
//!
//! The physics applications (spring effective mass, single-slit maxima,
//! δ-potential bound states, Wien's displacement law) live in [`physics`].

pub mod error;
pub mod lambert;
pub mod linsolve;
pub mod pade;
pub mod physics;
pub mod scalar;
pub mod series;
pub mod trig;

pub use error::{Error, Result};
pub use lambert::{WBranch, WVariant};
pub use pade::PadeApproximant;
pub use scalar::Scalar;
pub use series::TaylorSeries;
pub use trig::{EquationKind, ErrorTableRow, Method, RootEstimate, TrigEquation};

/// Exact arbitrary-precision fraction; the coefficient type for all series work.
pub type Rational = num_rational::BigRational;
/// Taylor series with exact rational coefficients.
pub type RationalSeries = TaylorSeries<Rational>;
/// Padé approximant with exact rational coefficients.
pub type RationalPade = PadeApproximant<Rational>;
/// Taylor series with double-precision coefficients.
pub type Series64 = TaylorSeries<f64>;
/// Padé approximant with double-precision coefficients.
pub type Pade64 = PadeApproximant<f64>;

/// Builds an exact rational `num/den`.
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
