//! Matrix exponential by scaling and squaring with a Taylor series.

use nalgebra::{ComplexField, DMatrix};

const MAX_TERMS: usize = 30;

/// `exp(m)` for a square matrix over `f64` or `Complex64`.
///
/// The matrix is scaled by `2^-s` until its Frobenius norm is below 1/2, the
/// series is summed until terms stop contributing, and the result is squared
/// `s` times.
pub fn expm<T>(m: &DMatrix<T>) -> DMatrix<T>
where
    T: ComplexField<RealField = f64> + Copy,
{
    assert!(m.is_square(), "expm needs a square matrix");
    let n = m.nrows();
    let norm = m.norm();
    let s = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
    let scale = T::from_real(0.5f64.powi(s));
    let a = m * scale;

    let mut sum = DMatrix::<T>::identity(n, n);
    let mut term = DMatrix::<T>::identity(n, n);
    for k in 1..=MAX_TERMS {
        term = (&term * &a) * T::from_real(1.0 / k as f64);
        sum += &term;
        if term.norm() <= f64::EPSILON * sum.norm() * 1e-2 {
            break;
        }
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

/// Largest absolute entry.
pub fn max_abs<T>(m: &DMatrix<T>) -> f64
where
    T: ComplexField<RealField = f64> + Copy,
{
    m.iter().map(|z| z.modulus()).fold(0.0, f64::max)
}
