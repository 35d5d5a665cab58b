//! Gaussian spherical grids and spherical harmonic transforms.
//!
//! Convention: orthonormal complex harmonics with the Condon–Shortley phase,
//! Y_l^m(θ, φ) = P̄_l^m(cos θ) e^{imφ} / √(2π), so that ∫ |Y_l^m|^2 dΩ = 1.
//! Real fields keep only m ≥ 0 with conjugate symmetry implied.

pub mod fourier;
pub mod gauss;
pub mod legendre;
pub mod sht;

use num_complex::Complex64;
use std::sync::Arc;

pub use legendre::{coeff_count, coeff_index};
pub use sht::{area_weighted_mean, roundtrip_filter, sht_forward, sht_forward_truncated, sht_inverse};

use std::f64::consts::PI;

#[derive(Debug, thiserror::Error)]
pub enum SphereError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid data: {0}")]
    InvalidData(String),
}

/// Longitude transform backend. Correctness is gated on the direct DFT;
/// the radix-2 FFT is an optional fast path for power-of-two `nlon`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LonTransform {
    Dft,
    Fft,
}

/// A Gaussian latitude–longitude grid with precomputed transform tables.
///
/// Latitudes are Gauss–Legendre nodes mapped to colatitudes in (0, π);
/// longitudes are `nlon = 2 nlat` equispaced points. The grid owns the
/// normalized associated Legendre table and the longitude trig tables used
/// by the transforms, so it is built once and shared via `Arc`.
#[derive(Debug)]
pub struct SphericalGrid {
    nlat: usize,
    nlon: usize,
    lmax: usize,
    colatitudes: Vec<f64>,
    quad_weights: Vec<f64>,
    area_weights: Vec<f64>,
    lon_transform: LonTransform,
    // P̄_l^m(cos θ_i), layout [i * ncoef + coeff_index(lmax, l, m)]
    plm: Vec<f64>,
    ncoef: usize,
    // cos/sin(m φ_j), layout [m * nlon + j]
    cos_lon: Vec<f64>,
    sin_lon: Vec<f64>,
    // quad_weights[i] * √(2π) / nlon (analysis latitude weights)
    w_forward: Vec<f64>,
    // (1 for m = 0, else 2) / √(2π) (synthesis m factors)
    m_fac_inv: Vec<f64>,
    ones_lat: Vec<f64>,
    ones_m: Vec<f64>,
}

/// Build a Gaussian grid with `nlon = 2 nlat` and `lmax = nlat - 1`.
pub fn build_grid(nlat: usize) -> Result<Arc<SphericalGrid>, SphereError> {
    SphericalGrid::build(nlat, LonTransform::Dft)
}

impl SphericalGrid {
    pub fn build(nlat: usize, lon_transform: LonTransform) -> Result<Arc<Self>, SphereError> {
        if nlat < 4 {
            return Err(SphereError::InvalidArgument(format!(
                "nlat must be at least 4, got {nlat}"
            )));
        }
        let nlon = 2 * nlat;
        let lmax = nlat - 1;
        let (nodes, quad_weights) = gauss::gauss_legendre(nlat);
        // Ascending x = cos θ means descending θ; store colatitudes ascending.
        let mut colatitudes: Vec<f64> = nodes.iter().rev().map(|&x| x.acos()).collect();
        let mut qw: Vec<f64> = quad_weights.iter().rev().copied().collect();
        // acos of symmetric nodes is monotone; keep the invariant explicit.
        debug_assert!(colatitudes.windows(2).all(|p| p[1] > p[0]));
        let area_weights: Vec<f64> = qw.iter().map(|&w| nlat as f64 * w / 2.0).collect();

        let ncoef = coeff_count(lmax);
        let mut plm = vec![0.0; nlat * ncoef];
        for (i, theta) in colatitudes.iter().enumerate() {
            legendre::tabulate_normalized(lmax, theta.cos(), &mut plm[i * ncoef..(i + 1) * ncoef]);
        }

        let mut cos_lon = vec![0.0; (lmax + 1) * nlon];
        let mut sin_lon = vec![0.0; (lmax + 1) * nlon];
        for m in 0..=lmax {
            for j in 0..nlon {
                let phi = 2.0 * PI * (m * j % nlon) as f64 / nlon as f64;
                cos_lon[m * nlon + j] = phi.cos();
                sin_lon[m * nlon + j] = phi.sin();
            }
        }

        let lon_scale = (2.0 * PI).sqrt() / nlon as f64;
        let w_forward: Vec<f64> = qw.iter().map(|&w| w * lon_scale).collect();
        let inv = 1.0 / (2.0 * PI).sqrt();
        let m_fac_inv: Vec<f64> =
            (0..=lmax).map(|m| if m == 0 { inv } else { 2.0 * inv }).collect();

        let grid = Self {
            nlat,
            nlon,
            lmax,
            colatitudes: std::mem::take(&mut colatitudes),
            quad_weights: std::mem::take(&mut qw),
            area_weights,
            lon_transform,
            plm,
            ncoef,
            cos_lon,
            sin_lon,
            w_forward,
            m_fac_inv,
            ones_lat: vec![1.0; nlat],
            ones_m: vec![1.0; lmax + 1],
        };
        Ok(Arc::new(grid))
    }

    pub fn nlat(&self) -> usize {
        self.nlat
    }
    pub fn nlon(&self) -> usize {
        self.nlon
    }
    pub fn lmax(&self) -> usize {
        self.lmax
    }
    pub fn colatitudes(&self) -> &[f64] {
        &self.colatitudes
    }
    pub fn quad_weights(&self) -> &[f64] {
        &self.quad_weights
    }
    /// Normalized area weights w(i) with (1/nlat) Σ_i w(i) = 1.
    pub fn area_weights(&self) -> &[f64] {
        &self.area_weights
    }
    pub fn lon_transform(&self) -> LonTransform {
        self.lon_transform
    }
    pub(crate) fn plm_row(&self, ilat: usize) -> &[f64] {
        &self.plm[ilat * self.ncoef..(ilat + 1) * self.ncoef]
    }
    pub(crate) fn ncoef(&self) -> usize {
        self.ncoef
    }
    pub(crate) fn trig_row(&self, m: usize) -> (&[f64], &[f64]) {
        (
            &self.cos_lon[m * self.nlon..(m + 1) * self.nlon],
            &self.sin_lon[m * self.nlon..(m + 1) * self.nlon],
        )
    }
    pub(crate) fn w_forward(&self) -> &[f64] {
        &self.w_forward
    }
    pub(crate) fn m_fac_inv(&self) -> &[f64] {
        &self.m_fac_inv
    }
    pub(crate) fn ones_lat(&self) -> &[f64] {
        &self.ones_lat
    }
    pub(crate) fn ones_m(&self) -> &[f64] {
        &self.ones_m
    }
}

/// Triangular array of complex spherical-harmonic coefficients, per channel.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralCoeffs {
    lmax: usize,
    channels: usize,
    data: Vec<Complex64>,
}

impl SpectralCoeffs {
    pub fn zeros(lmax: usize, channels: usize) -> Self {
        Self { lmax, channels, data: vec![Complex64::new(0.0, 0.0); channels * coeff_count(lmax)] }
    }

    pub fn lmax(&self) -> usize {
        self.lmax
    }
    pub fn channels(&self) -> usize {
        self.channels
    }
    /// Entries per channel: (lmax+1)(lmax+2)/2.
    pub fn len_per_channel(&self) -> usize {
        coeff_count(self.lmax)
    }

    pub fn get(&self, channel: usize, l: usize, m: usize) -> Complex64 {
        self.data[channel * self.len_per_channel() + coeff_index(self.lmax, l, m)]
    }

    pub fn set(&mut self, channel: usize, l: usize, m: usize, v: Complex64) {
        let n = self.len_per_channel();
        self.data[channel * n + coeff_index(self.lmax, l, m)] = v;
    }

    pub fn channel(&self, channel: usize) -> &[Complex64] {
        let n = self.len_per_channel();
        &self.data[channel * n..(channel + 1) * n]
    }

    pub fn channel_mut(&mut self, channel: usize) -> &mut [Complex64] {
        let n = self.len_per_channel();
        &mut self.data[channel * n..(channel + 1) * n]
    }

    /// Degree of the coefficient at flat index `idx` within a channel.
    pub fn degree_of(&self, idx: usize) -> usize {
        let mut m = 0;
        let mut off = 0;
        loop {
            let block = self.lmax + 1 - m;
            if idx < off + block {
                return m + (idx - off);
            }
            off += block;
            m += 1;
        }
    }
}

/// A multi-channel real field on a `SphericalGrid`, row-major
/// `[channel][lat][lon]`.
#[derive(Debug, Clone)]
pub struct GridField {
    grid: Arc<SphericalGrid>,
    channels: usize,
    data: Vec<f64>,
}

impl GridField {
    pub fn zeros(grid: Arc<SphericalGrid>, channels: usize) -> Self {
        let n = channels * grid.nlat() * grid.nlon();
        Self { grid, channels, data: vec![0.0; n] }
    }

    /// Wrap raw data, validating shape and finiteness.
    pub fn new(
        grid: Arc<SphericalGrid>,
        channels: usize,
        data: Vec<f64>,
    ) -> Result<Self, SphereError> {
        if data.len() != channels * grid.nlat() * grid.nlon() {
            return Err(SphereError::InvalidArgument(format!(
                "field data length {} does not match {} channels on a {}x{} grid",
                data.len(),
                channels,
                grid.nlat(),
                grid.nlon()
            )));
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(SphereError::InvalidData("non-finite value in field".into()));
        }
        Ok(Self { grid, channels, data })
    }

    pub fn from_fn(
        grid: Arc<SphericalGrid>,
        channels: usize,
        mut f: impl FnMut(usize, f64, f64) -> f64,
    ) -> Self {
        let (nlat, nlon) = (grid.nlat(), grid.nlon());
        let mut data = vec![0.0; channels * nlat * nlon];
        for c in 0..channels {
            for i in 0..nlat {
                let theta = grid.colatitudes()[i];
                for j in 0..nlon {
                    let phi = 2.0 * PI * j as f64 / nlon as f64;
                    data[(c * nlat + i) * nlon + j] = f(c, theta, phi);
                }
            }
        }
        Self { grid, channels, data }
    }

    pub fn grid(&self) -> &Arc<SphericalGrid> {
        &self.grid
    }
    pub fn channels(&self) -> usize {
        self.channels
    }
    pub fn data(&self) -> &[f64] {
        &self.data
    }
    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn channel(&self, c: usize) -> &[f64] {
        let n = self.grid.nlat() * self.grid.nlon();
        &self.data[c * n..(c + 1) * n]
    }

    pub fn channel_mut(&mut self, c: usize) -> &mut [f64] {
        let n = self.grid.nlat() * self.grid.nlon();
        &mut self.data[c * n..(c + 1) * n]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_grid_invariants() {
        let g = build_grid(32).unwrap();
        assert_eq!(g.nlon(), 64);
        let sum_q: f64 = g.quad_weights().iter().sum();
        assert!((sum_q - 2.0).abs() < 1e-13);
        let mean_w: f64 = g.area_weights().iter().sum::<f64>() / g.nlat() as f64;
        assert!((mean_w - 1.0).abs() < 1e-12);
        assert!(g.colatitudes().windows(2).all(|p| p[1] > p[0]));
        assert!(g.colatitudes()[0] > 0.0 && g.colatitudes()[31] < PI);
    }

    #[test]
    fn build_grid_rejects_tiny() {
        assert!(build_grid(3).is_err());
    }

    #[test]
    fn quadrature_of_cos2_theta() {
        // ∫_{-1}^{1} x^2 dx = 2/3
        let g = build_grid(32).unwrap();
        let q: f64 = g
            .colatitudes()
            .iter()
            .zip(g.quad_weights())
            .map(|(&t, &w)| w * t.cos().powi(2))
            .sum();
        assert!((q - 2.0 / 3.0).abs() < 1e-13);
    }

    #[test]
    fn grid_field_shape_and_finite_validation() {
        let g = build_grid(8).unwrap();
        assert!(GridField::new(g.clone(), 2, vec![0.0; 2 * 8 * 16]).is_ok());
        assert!(GridField::new(g.clone(), 2, vec![0.0; 17]).is_err());
        let mut bad = vec![0.0; 2 * 8 * 16];
        bad[5] = f64::NAN;
        assert!(GridField::new(g, 2, bad).is_err());
    }

    #[test]
    fn spectral_storage_count() {
        let c = SpectralCoeffs::zeros(7, 3);
        assert_eq!(c.len_per_channel(), 8 * 9 / 2);
        assert_eq!(c.degree_of(0), 0);
        assert_eq!(c.degree_of(7), 7);
        assert_eq!(c.degree_of(8), 1); // first m = 1 entry is l = 1
    }
}
