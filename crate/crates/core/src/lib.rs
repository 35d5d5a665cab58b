//! Desk-scale probabilistic climate emulation on the sphere.
//!
//! The crate is organized as a pipeline:
//!
//! * [`sphere`] — Gaussian grids, quadrature and spherical harmonic transforms.
//! * [`autodiff`] — a small reverse-mode tape covering the operator set of the
//!   model, plus losses and the AdamW/EMA/cosine training machinery.
//! * [`sfno`] — spherical Fourier neural operator blocks with time
//!   conditioning and inference stochasticity.
//! * [`dyffusion`] — two-stage training, cold-sampling inference, and
//!   autoregressive ensemble rollouts with NFE accounting.
//! * [`toy_climate`] — a synthetic spherical reference climate used to
//!   generate training and validation ensembles.
//! * [`metrics`] — area-weighted ensemble verification (bias, MAE, RMSE,
//!   ensemble-mean RMSE, spread, SSR, CRPS) and climate aggregations
//!   (time-means, noise floor, variability, zonal means).

pub mod autodiff;
pub mod dyffusion;
pub mod metrics;
pub mod rng;
pub mod sfno;
pub mod sphere;
pub mod toy_climate;

pub use sphere::{GridField, SphericalGrid, SpectralCoeffs};
