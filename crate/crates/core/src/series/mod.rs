//! Truncated power series in one and two variables.
//!
//! A [`TruncSeries`] of order `N` stores `f_0, ..., f_N` and never reads past
//! index `N`. Coefficients live in any [`CoeffRing`](crate::CoeffRing):
//! rationals for characteristic series of genera, theta polynomials for the
//! universal series.
//!
//! Two coefficient normalizations appear side by side and are only converted
//! through explicit helpers:
//!
//! * theta form, `Σ a_n z^{n+s} / (n+1)!` ([`TruncSeries::from_theta_egf`]),
//!   used by `beta` (`s = 1`) and `beta/z` (`s = 0`);
//! * Hurwitz form, `Σ a_n z^n / n!` ([`TruncSeries::from_hurwitz`]);
//! * plain form, `Σ a_n z^n`, used by characteristic series `Q(z)`.
//!
//! Series render as `z + 1/2*t1*z^2 + 1/6*t2*z^3 + O(z^4)`: ascending powers,
//! multi-term coefficients parenthesized.

mod bivariate;
mod fgl;
mod trunc;

pub use bivariate::BiTruncSeries;
pub use fgl::{exp_identity_residual, formal_group_law, FglCheck};
pub use trunc::TruncSeries;
