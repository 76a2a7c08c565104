//! Exact computer algebra for complex cobordism in the theta-divisor basis.
//!
//! The ring `Q[t1, t2, ...]` with `t_n` the class of a smooth theta divisor
//! of dimension `n` models `Omega_U ⊗ Q`. On top of it this crate builds the
//! Chern-Dold series `beta(z) = z + Σ t_n z^{n+1}/(n+1)!`, its compositional
//! inverse, the dual classes `v_n`, `w_n`, `[CP^n]`, Landweber-Novikov
//! operations, Hirzebruch genera, and the integrality (congruence) conditions
//! on Chern numbers they imply. A floating-point module evaluates the
//! Weierstrass functions used for real-analytic representatives.
//!
//! Polynomial and series code is generic over the coefficient scalar; the
//! aliases below fix the exact instantiations used throughout.

pub mod acceptance;
pub mod cobordism;
pub mod error;
pub mod exact;
pub mod genera;
pub mod graded;
pub mod ln;
pub mod scalar;
pub mod series;
pub mod symfun;
pub mod weierstrass;

pub use error::{Error, Result};
pub use exact::{Partition, Rat};
pub use graded::{parse_poly, GradedPoly};
pub use scalar::{CoeffRing, Scalar};
pub use series::{BiTruncSeries, TruncSeries};

/// Polynomials in the theta generators with exact rational coefficients.
pub type ThetaPoly = GradedPoly<Rat>;
/// Power series in `z` whose coefficients are theta polynomials.
pub type ThetaSeries = TruncSeries<ThetaPoly>;
/// Bivariate series with theta-polynomial coefficients.
pub type ThetaBiSeries = BiTruncSeries<ThetaPoly>;
/// Power series with plain rational coefficients.
pub type RatSeries = TruncSeries<Rat>;
/// Double-precision Weierstrass lattice.
pub type Lattice64 = weierstrass::ComplexLattice<f64>;

/// Default truncation weight.
pub const DEFAULT_MAX_WEIGHT: usize = 12;
