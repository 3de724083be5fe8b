//! Reproducing kernels, weighted Bergman projections and norm estimates on
//! the unit disc.
//!
//! # Measure convention
//!
//! Every integral uses the normalized area measure `dm = dA / pi`, so the disc
//! has mass one, and its weighted versions
//! `dm_alpha = (alpha + 1)(1 - |z|^2)^alpha dm` (also of mass one). With this
//! convention the Bergman kernel of the disc is `(1 - conj(w) z)^-2`, the
//! point-evaluation bound reads `|f(z)| <= (1 - |z|)^(-2/p) ||f||_p`, and the
//! kernel formula for the Riemann map derivative carries no factor of `pi`.
//! Kernels normalized for plain area measure differ by a factor `1 / pi`;
//! see [`kernel::area_measure_kernel`].

pub mod bounds;
pub mod disc;
pub mod error;
pub mod kernel;
pub mod poly;
pub mod projection;
pub mod quad;
pub mod report;

pub use disc::{DiscPoint, Exponent, Weight};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use poly::TaylorPoly;
pub use quad::{integrate, QuadRule, Resolution, Samplable, Smoothness};
pub use report::{CheckReport, Expected, Quantity};
