//! Truncated power series about 0 and Lagrange–Bürmann reversion.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Float;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `c₀ + c₁x + … + c_N x^N + O(x^{N+1})`.
///
/// The order `N` is the highest retained power; the coefficient vector always
/// holds `N + 1` entries. Binary operations truncate to the smaller operand
/// order, so a result never claims more accuracy than its inputs carry.
#[derive(Clone, PartialEq, Debug)]
pub struct TaylorSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TaylorSeries<T> {
    /// Panics on an empty coefficient vector.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a Taylor series needs at least c0");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![T::zero(); order + 1])
    }

    pub fn constant(c: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series of the independent variable, `x`.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = T::one();
        }
        s
    }

    /// `e^{a·x}`.
    pub fn exp_scaled(a: T, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = T::one();
        coeffs.push(c.clone());
        for k in 1..=order {
            c = c * a.clone() / T::from_int(k as i64);
            coeffs.push(c.clone());
        }
        Self::new(coeffs)
    }

    /// `ln(1 + x) = Σ (−1)^{n+1} xⁿ / n`.
    pub fn ln_1p(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|n| match n {
                0 => T::zero(),
                n if n % 2 == 1 => T::from_ratio(1, n as i64),
                n => T::from_ratio(-1, n as i64),
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn cos(order: usize) -> Self {
        Self::trig(order, 0)
    }

    pub fn sin(order: usize) -> Self {
        Self::trig(order, 1)
    }

    fn trig(order: usize, parity: usize) -> Self {
        let mut coeffs = vec![T::zero(); order + 1];
        let mut fact = T::one();
        for k in 0..=order {
            if k > 0 {
                fact = fact * T::from_int(k as i64);
            }
            if k % 2 == parity {
                let sign = if (k / 2) % 2 == 0 { T::one() } else { -T::one() };
                coeffs[k] = sign / fact.clone();
            }
        }
        Self::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero past the retained order.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<T> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, T::zero());
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Cauchy product truncated to `min(order_a, order_b)`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    /// Quotient `q` with `q·b = a` through the retained order.
    ///
    /// Common leading zero powers are cancelled first, so `x² / x = x` works;
    /// each cancelled power costs one order of accuracy.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let vb = divisor.valuation().ok_or(Error::ZeroDivisor)?;
        let va = self.valuation().unwrap_or(usize::MAX);
        if va < vb {
            return Err(Error::ValuationMismatch { dividend: va, divisor: vb });
        }
        let order = self.order().min(divisor.order());
        let order = order - vb;
        let a: Vec<T> = (0..=order).map(|k| self.coeff(k + vb)).collect();
        let b: Vec<T> = (0..=order).map(|k| divisor.coeff(k + vb)).collect();
        let lead = b[0].clone();
        let mut q: Vec<T> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut s = a[k].clone();
            for j in 0..k {
                s = s - q[j].clone() * b[k - j].clone();
            }
            q.push(s / lead.clone());
        }
        Ok(Self::new(q))
    }

    /// `aⁿ` by repeated squaring; `n = 0` gives the constant 1.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::constant(T::one(), self.order());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// `self(inner(x))`; `inner` must have no constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::InvalidArgument(
                "composition needs an inner series with zero constant term".into(),
            ));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        // Horner in series arithmetic.
        let mut acc = Self::constant(self.coeff(order), order);
        for k in (0..order).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeff(k);
        }
        Ok(acc)
    }

    /// Rewrites an even series `Σ c_{2k} x^{2k}` as `Σ c_{2k} t^k` with `t = x²`.
    /// Odd coefficients are dropped.
    pub fn in_square_variable(&self) -> Self {
        Self::new(self.coeffs.iter().step_by(2).cloned().collect())
    }

    /// Inverse of [`in_square_variable`](Self::in_square_variable).
    pub fn from_square_variable(&self) -> Self {
        let mut coeffs = vec![T::zero(); 2 * self.order() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn eval<F: Float>(&self, x: F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x + c.to_float::<F>())
    }
}

impl<T: Scalar> Mul for &TaylorSeries<T> {
    type Output = TaylorSeries<T>;
    fn mul(self, rhs: Self) -> TaylorSeries<T> {
        TaylorSeries::mul(self, rhs)
    }
}

impl<T: Scalar> Add for &TaylorSeries<T> {
    type Output = TaylorSeries<T>;
    fn add(self, rhs: Self) -> TaylorSeries<T> {
        let order = self.order().min(rhs.order());
        TaylorSeries::new((0..=order).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &TaylorSeries<T> {
    type Output = TaylorSeries<T>;
    fn sub(self, rhs: Self) -> TaylorSeries<T> {
        let order = self.order().min(rhs.order());
        TaylorSeries::new((0..=order).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Neg for &TaylorSeries<T> {
    type Output = TaylorSeries<T>;
    fn neg(self) -> TaylorSeries<T> {
        TaylorSeries::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> fmt::Display for TaylorSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// Reverts `w = z / f(z)` into `z(w) = Σ_{n=1}^{n_max} aₙ wⁿ`.
///
/// Uses `aₙ = [z^{n−1}] f(z)ⁿ / n`, the coefficient form of the
/// Lagrange–Bürmann derivative formula. `f` must be known through order
/// `n_max − 1`. The result has order `n_max` and a zero constant term.
pub fn lagrange_invert<T: Scalar>(f: &TaylorSeries<T>, n_max: usize) -> Result<TaylorSeries<T>> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    if f.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if f.order() < n_max - 1 {
        return Err(Error::InsufficientOrder { have: f.order(), need: n_max - 1 });
    }
    let f = f.truncate(n_max - 1);
    let mut out = vec![T::zero(); n_max + 1];
    let mut power = TaylorSeries::constant(T::one(), n_max - 1);
    for n in 1..=n_max {
        power = power.mul(&f);
        out[n] = power.coeff(n - 1) / T::from_int(n as i64);
    }
    Ok(TaylorSeries::new(out))
}
