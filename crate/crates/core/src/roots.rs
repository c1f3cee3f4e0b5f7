//! Cancellation-free quadratic solvers.

use num_complex::Complex64;

/// Roots of the monic `z² + b z + c`.
///
/// The square root of the discriminant is taken on the branch aligned with
/// `b`, so the larger root never comes from a difference of close numbers;
/// the smaller root follows from Vieta.
pub fn monic_complex_roots(b: Complex64, c: Complex64) -> (Complex64, Complex64) {
    let mut sq = (b * b - 4.0 * c).sqrt();
    if (b.conj() * sq).re < 0.0 {
        sq = -sq;
    }
    let q = -(b + sq) * 0.5;
    if q.norm() == 0.0 {
        return (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    }
    (q, c / q)
}

/// Real roots of `a x² + b x + c`, ascending. Falls back to the linear case
/// when `a` is zero.
pub fn real_quadratic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    if a == 0.0 {
        return if b == 0.0 { Vec::new() } else { vec![-c / b] };
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return Vec::new();
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    let mut roots = if q == 0.0 {
        vec![0.0, 0.0]
    } else {
        vec![q / a, c / q]
    };
    roots.sort_by(f64::total_cmp);
    roots
}
