//! Longitude Fourier helpers: direct DFT row sums and a radix-2 FFT.
//!
//! The transforms only need the m ≤ lmax harmonics of each latitude row.
//! The direct path evaluates those sums against precomputed trig tables and
//! is the correctness reference; the FFT path is an optional drop-in for
//! power-of-two row lengths.

use num_complex::Complex64;
use std::f64::consts::PI;

/// In-place iterative radix-2 Cooley–Tukey FFT.
///
/// `sign = -1` gives the forward transform Σ_j x_j e^{-2πi jk/N} (no
/// normalization); `sign = +1` the unnormalized inverse.
pub fn fft_in_place(x: &mut [Complex64], sign: f64) {
    let n = x.len();
    assert!(n.is_power_of_two(), "radix-2 FFT needs a power-of-two length");
    // bit reversal permutation
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            x.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let ang = sign * 2.0 * PI / len as f64;
        let wlen = Complex64::new(ang.cos(), ang.sin());
        let mut i = 0;
        while i < n {
            let mut w = Complex64::new(1.0, 0.0);
            for k in 0..len / 2 {
                let u = x[i + k];
                let v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wlen;
            }
            i += len;
        }
        len <<= 1;
    }
}

/// Forward row transform via FFT: out[m] = Σ_j row[j] e^{-2πi m j / n} for
/// m = 0..=mmax.
pub fn row_harmonics_fft(row: &[f64], mmax: usize, out: &mut [Complex64]) {
    let n = row.len();
    let mut buf: Vec<Complex64> = row.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft_in_place(&mut buf, -1.0);
    debug_assert!(mmax < n);
    out[..=mmax].copy_from_slice(&buf[..=mmax]);
}

/// Accumulate Re(Σ_{m=0..=mmax} h_m e^{+2πi m j / n}) into `row` via FFT.
pub fn row_synthesis_fft(h: &[Complex64], mmax: usize, row: &mut [f64]) {
    let n = row.len();
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    buf[..=mmax].copy_from_slice(&h[..=mmax]);
    fft_in_place(&mut buf, 1.0);
    for (r, b) in row.iter_mut().zip(&buf) {
        *r += b.re;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dft_reference(x: &[Complex64], sign: f64) -> Vec<Complex64> {
        let n = x.len();
        (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| {
                        let ang = sign * 2.0 * PI * (j * k) as f64 / n as f64;
                        x[j] * Complex64::new(ang.cos(), ang.sin())
                    })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn fft_matches_direct_dft() {
        let n = 64;
        let x: Vec<Complex64> = (0..n)
            .map(|i| Complex64::new((i as f64 * 0.7).sin(), (i as f64 * 1.3).cos()))
            .collect();
        for sign in [-1.0, 1.0] {
            let want = dft_reference(&x, sign);
            let mut got = x.clone();
            fft_in_place(&mut got, sign);
            for (a, b) in got.iter().zip(&want) {
                assert!((a - b).norm() < 1e-11);
            }
        }
    }

    #[test]
    fn fft_roundtrip_identity() {
        let n = 32;
        let x: Vec<Complex64> =
            (0..n).map(|i| Complex64::new(i as f64, -(i as f64) * 0.5)).collect();
        let mut y = x.clone();
        fft_in_place(&mut y, -1.0);
        fft_in_place(&mut y, 1.0);
        for (a, b) in y.iter().zip(&x) {
            assert!((a / n as f64 - b).norm() < 1e-12);
        }
    }
}
