//! Dense Gaussian elimination over a [`Scalar`] field.
//!
//! With exact rationals the elimination is exact; pivoting on the largest
//! magnitude keeps the same routine usable for floats.

use crate::scalar::Scalar;

/// Column at which the elimination found no usable pivot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Singular {
    pub column: usize,
}

/// Solves `A·x = b` for square `A` given as rows.
pub fn solve<T: Scalar>(mut a: Vec<Vec<T>>, mut b: Vec<T>) -> Result<Vec<T>, Singular> {
    let n = b.len();
    assert_eq!(a.len(), n, "matrix and right-hand side disagree in size");
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .max_by(|&r, &s| {
                a[r][col]
                    .abs()
                    .partial_cmp(&a[s][col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .ok_or(Singular { column: col })?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() / a[col][col].clone();
            for c in col..n {
                let v = a[col][c].clone() * factor.clone();
                a[r][c] = a[r][c].clone() - v;
            }
            b[r] = b[r].clone() - b[col].clone() * factor;
        }
    }
    let mut x = vec![T::zero(); n];
    for r in (0..n).rev() {
        let mut s = b[r].clone();
        for c in r + 1..n {
            s = s - a[r][c].clone() * x[c].clone();
        }
        x[r] = s / a[r][r].clone();
    }
    Ok(x)
}
