//! Normalized associated Legendre functions.
//!
//! P̄_l^m is normalized so that ∫_{-1}^{1} P̄_l^m(x)^2 dx = 1 and carries the
//! Condon–Shortley phase. The orthonormal spherical harmonics are then
//! Y_l^m(θ, φ) = P̄_l^m(cos θ) e^{imφ} / √(2π).

/// Number of (l, m) pairs with 0 ≤ m ≤ l ≤ lmax.
pub fn coeff_count(lmax: usize) -> usize {
    (lmax + 1) * (lmax + 2) / 2
}

/// Flat index of (l, m) in m-major triangular storage.
///
/// All degrees for m = 0 come first, then m = 1, and so on; within a block
/// the degree l runs contiguously from m to lmax.
pub fn coeff_index(lmax: usize, l: usize, m: usize) -> usize {
    debug_assert!(m <= l && l <= lmax);
    m * (2 * lmax + 3 - m) / 2 + (l - m)
}

/// Tabulate P̄_l^m(x) for all 0 ≤ m ≤ l ≤ lmax into `out` (m-major layout).
///
/// Uses the standard stable recurrences in normalized form: the diagonal
/// term P̄_m^m, the first off-diagonal P̄_{m+1}^m, and a three-term
/// recurrence in l with coefficients that stay O(1) at high degree.
pub fn tabulate_normalized(lmax: usize, x: f64, out: &mut [f64]) {
    debug_assert_eq!(out.len(), coeff_count(lmax));
    let s = (1.0 - x * x).max(0.0).sqrt(); // sin θ
    // Diagonal: P̄_0^0 = √(1/2); P̄_m^m = -√((2m+1)/(2m)) sinθ P̄_{m-1}^{m-1}.
    let mut pmm = (0.5f64).sqrt();
    for m in 0..=lmax {
        if m > 0 {
            pmm *= -((2 * m + 1) as f64 / (2 * m) as f64).sqrt() * s;
        }
        let base = coeff_index(lmax, m, m);
        out[base] = pmm;
        if m < lmax {
            // P̄_{m+1}^m = √(2m+3) · x · P̄_m^m
            out[base + 1] = ((2 * m + 3) as f64).sqrt() * x * pmm;
        }
        for l in (m + 2)..=lmax {
            let lf = l as f64;
            let mf = m as f64;
            let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
            let b = (((2.0 * lf + 1.0) * ((lf - 1.0) * (lf - 1.0) - mf * mf))
                / ((2.0 * lf - 3.0) * (lf * lf - mf * mf)))
                .sqrt();
            out[base + (l - m)] = a * x * out[base + (l - 1 - m)] - b * out[base + (l - 2 - m)];
        }
    }
}
