//! The weight-graded polynomial ring `Q[t1, t2, ...]` of theta-divisor classes.
//!
//! Monomials are keyed by [`Partition`](crate::Partition): the partition
//! `(i1, ..., ik)` stands for `t_{i1} ... t_{ik}`, with weight `i1 + ... + ik`.
//! The empty partition is the unit monomial, which is also how `t0` is read.
//!
//! # Text form
//!
//! Polynomials render as a signed sum of terms, highest weight first and,
//! within one weight, lexicographically decreasing partitions:
//!
//! ```text
//! -t2 + 3/2*t1^2
//! t3 - 4*t1*t2 + 3*t1^3
//! ```
//!
//! A term is `coeff*monomial` with the coefficient omitted when it is `1`
//! (a bare `-` when `-1`). Inside a monomial the generators appear with
//! increasing index, repeated factors as `t<k>^<e>`. The zero polynomial is `0`.
//! [`parse_poly`] reads this form back, together with parentheses, `^`, and
//! division by nonzero constants.

mod parse;
mod poly;

pub use parse::{parse_poly, parse_poly_in};
pub use poly::GradedPoly;
