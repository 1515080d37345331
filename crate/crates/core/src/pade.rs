//! `[p, q]` Padé approximants: exact fitting, evaluation and integer rounding.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Float, One, Zero};

use crate::error::{Error, Result};
use crate::linsolve;
use crate::scalar::{lcm_of_denominators, Scalar};
use crate::series::TaylorSeries;
use crate::Rational;

/// Default upper bound on the common integer scale tried by [`PadeApproximant::round`].
pub const DEFAULT_MAX_SCALE: u32 = 16;

/// A scale is accepted once every scaled coefficient lies within this
/// distance of an integer.
pub fn default_rounding_tolerance<T: Scalar>() -> T {
    T::from_ratio(5, 16)
}

/// Denominators smaller than this are treated as poles by [`PadeApproximant::eval`].
pub const POLE_TOLERANCE: f64 = 1e-300;

/// `P(x) / Q(x)` with `P = Σ pₖxᵏ` of degree ≤ p and `Q = Σ qₖxᵏ` of degree ≤ q.
///
/// Fitted approximants are normalized (`q₀ = 1`). `match_order` is the
/// highest power through which the expansion of `P/Q` agrees with the source
/// series; for a plain fit it equals `p + q`.
#[derive(Clone, PartialEq, Debug)]
pub struct PadeApproximant<T> {
    num: Vec<T>,
    den: Vec<T>,
    match_order: usize,
}

/// Outcome of [`PadeApproximant::round_detailed`].
#[derive(Clone, PartialEq, Debug)]
pub struct Rounding<T> {
    pub approximant: PadeApproximant<T>,
    /// Common factor applied to both polynomials before rounding.
    pub scale: u32,
    /// Largest distance between a scaled coefficient and its rounded value.
    pub residual: T,
}

impl<T: Scalar> PadeApproximant<T> {
    /// Panics if either coefficient vector is empty or `q₀` is not positive.
    pub fn new(num: Vec<T>, den: Vec<T>, match_order: usize) -> Self {
        assert!(!num.is_empty() && !den.is_empty());
        assert!(den[0].is_positive(), "q0 must be positive");
        Self { num, den, match_order }
    }

    /// Solves `P − f·Q = O(x^{p+q+1})` with `q₀ = 1`.
    pub fn fit(f: &TaylorSeries<T>, p: usize, q: usize) -> Result<Self> {
        if f.order() < p + q {
            return Err(Error::InsufficientOrder { have: f.order(), need: p + q });
        }
        let c = |k: isize| -> T {
            if k < 0 {
                T::zero()
            } else {
                f.coeff(k as usize)
            }
        };
        // Rows k = p+1 … p+q:  Σ_{j=1}^{q} q_j c_{k−j} = −c_k.
        let mut den = vec![T::one()];
        if q > 0 {
            let rows: Vec<Vec<T>> = (p + 1..=p + q)
                .map(|k| (1..=q).map(|j| c(k as isize - j as isize)).collect())
                .collect();
            let rhs: Vec<T> = (p + 1..=p + q).map(|k| -c(k as isize)).collect();
            let sol = linsolve::solve(rows, rhs).map_err(|s| Error::DegeneratePade {
                p,
                q,
                deficient: s.column + 1,
            })?;
            den.extend(sol);
        }
        let num = (0..=p)
            .map(|k| {
                (0..=k.min(q)).fold(T::zero(), |acc, j| acc + den[j].clone() * c(k as isize - j as isize))
            })
            .collect();
        Ok(Self { num, den, match_order: p + q })
    }

    pub fn numerator(&self) -> &[T] {
        &self.num
    }

    pub fn denominator(&self) -> &[T] {
        &self.den
    }

    pub fn degrees(&self) -> (usize, usize) {
        (self.num.len() - 1, self.den.len() - 1)
    }

    pub fn match_order(&self) -> usize {
        self.match_order
    }

    /// Taylor expansion of `P/Q` through `order`.
    pub fn expand(&self, order: usize) -> TaylorSeries<T> {
        let p = TaylorSeries::new(self.num.clone()).truncate(order);
        let q = TaylorSeries::new(self.den.clone()).truncate(order);
        p.div(&q).expect("q0 is nonzero")
    }

    /// Horner evaluation of both polynomials in `F`.
    pub fn eval<F: Float>(&self, x: F) -> Result<F> {
        let horner = |c: &[T]| c.iter().rev().fold(F::zero(), |acc, a| acc * x + a.to_float::<F>());
        let n = horner(&self.num);
        let d = horner(&self.den);
        let tol = F::from(POLE_TOLERANCE).unwrap_or_else(F::zero);
        if d.abs() <= tol {
            return Err(Error::Pole {
                x: x.to_f64().unwrap_or(f64::NAN),
                value: d.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(n / d)
    }

    /// Divides both polynomials by `q₀`.
    pub fn normalized(&self) -> Self {
        let q0 = self.den[0].clone();
        Self {
            num: self.num.iter().map(|c| c.clone() / q0.clone()).collect(),
            den: self.den.iter().map(|c| c.clone() / q0.clone()).collect(),
            match_order: self.match_order,
        }
    }

    /// Replaces `x` by `x²` in both polynomials.
    pub fn in_squared_argument(&self) -> Self {
        let spread = |c: &[T]| {
            TaylorSeries::new(c.to_vec()).from_square_variable().into_coeffs()
        };
        Self {
            num: spread(&self.num),
            den: spread(&self.den),
            match_order: 2 * self.match_order + 1,
        }
    }

    /// Integer form with small coefficients, see [`round_detailed`](Self::round_detailed).
    pub fn round(&self, max_scale: u32) -> Self {
        self.round_detailed(max_scale, &default_rounding_tolerance()).approximant
    }

    /// Searches the common scales `D = 1 … max_scale`, multiplying both
    /// polynomials of the normalized form by `D` and rounding every
    /// coefficient to the nearest integer.
    ///
    /// The first `D` whose rounding residual (largest distance from a scaled
    /// coefficient to its integer) is within `tolerance` wins. If none
    /// qualifies, the `D` with the smallest residual is used, ties going to
    /// the smaller `D`. The result keeps integer coefficients and `q₀ = D`.
    pub fn round_detailed(&self, max_scale: u32, tolerance: &T) -> Rounding<T> {
        let base = self.normalized();
        let mut best: Option<Rounding<T>> = None;
        for d in 1..=max_scale.max(1) {
            let scale = T::from_int(d as i64);
            let mut residual = T::zero();
            let mut round = |c: &T| {
                let scaled = c.clone() * scale.clone();
                let r = scaled.round_nearest();
                let dev = (scaled - r.clone()).abs();
                if dev > residual {
                    residual = dev;
                }
                r
            };
            let num: Vec<T> = base.num.iter().map(&mut round).collect();
            let den: Vec<T> = base.den.iter().map(&mut round).collect();
            let candidate = Rounding {
                approximant: Self { num, den, match_order: self.match_order },
                scale: d,
                residual,
            };
            if candidate.residual <= *tolerance {
                return candidate;
            }
            if best.as_ref().is_none_or(|b| candidate.residual < b.residual) {
                best = Some(candidate);
            }
        }
        best.expect("at least one scale is tried")
    }

    /// Largest |difference| between the Taylor coefficients of `self` and
    /// `target` through `order`.
    pub fn taylor_deviation(&self, target: &TaylorSeries<T>, order: usize) -> T {
        let e = self.expand(order);
        (0..=order).fold(T::zero(), |m, k| {
            let d = (e.coeff(k) - target.coeff(k)).abs();
            if d > m {
                d
            } else {
                m
            }
        })
    }
}

impl PadeApproximant<Rational> {
    /// Scales both polynomials to coprime integers with a positive `q₀`.
    pub fn to_integer_form(&self) -> Self {
        let all: Vec<Rational> = self.num.iter().chain(self.den.iter()).cloned().collect();
        let lcm = Rational::from_integer(lcm_of_denominators(&all));
        let ints: Vec<BigInt> = all.iter().map(|c| (c * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
        let g = if g.is_zero() { BigInt::one() } else { g };
        let g = Rational::from_integer(g);
        let scaled = |c: &[Rational]| c.iter().map(|v| v * &lcm / &g).collect::<Vec<_>>();
        Self {
            num: scaled(&self.num),
            den: scaled(&self.den),
            match_order: self.match_order,
        }
    }
}

fn write_poly<T: Scalar>(f: &mut fmt::Formatter<'_>, c: &[T]) -> fmt::Result {
    f.write_str("(")?;
    let mut first = true;
    for (k, a) in c.iter().enumerate() {
        if a.is_zero() && !(first && k + 1 == c.len()) {
            continue;
        }
        if !first {
            f.write_str(if a.is_negative() { " - " } else { " + " })?;
        } else if a.is_negative() {
            f.write_str("-")?;
        }
        let mag = a.abs();
        match k {
            0 => write!(f, "{mag}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                f.write_str("x")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        first = false;
    }
    f.write_str(")")
}

impl<T: Scalar> fmt::Display for PadeApproximant<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.num)?;
        f.write_str("/")?;
        write_poly(f, &self.den)
    }
}
