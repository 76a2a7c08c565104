//! Weierstrass elliptic functions in floating point.
//!
//! The lattice `2 omega_1 Z + 2 omega_2 Z` is first brought to a reduced
//! basis (`|Re tau| <= 1/2`, `|tau| >= 1`), where the Jacobi theta series
//! converge fast. With `v = pi z/(2 w1)` in the reduced basis:
//!
//! ```text
//! sigma(z) = (2 w1/pi) exp(eta z^2/(2 w1)) theta_1(v)/theta_1'(0)
//! zeta(z)  = eta z/w1 + (pi/(2 w1)) theta_1'(v)/theta_1(v)
//! wp(z)    = e1 + (pi theta_3 theta_4/(2 w1))^2 (theta_2(v)/theta_1(v))^2
//! eta      = -pi^2 theta_1'''(0) / (12 w1 theta_1'(0))
//! ```
//!
//! Points within two cells of the origin are evaluated directly; farther
//! points are first moved back with the quasi-periodicity laws.

mod roots;
mod sections;
mod theta;
mod verify;

use std::fmt::Debug;

use num_complex::Complex;
use num_traits::{Float, FloatConst};

use crate::error::{Error, Result};

pub use roots::{xi_roots, RootSearch};
pub use sections::{phi_eps, sec2_eval, section_eval, SectionTable};
pub use verify::{verify, CheckLine, VerifyOptions, VerifyReport};

/// Floating-point scalars usable for elliptic-function evaluation.
pub trait Real: Float + FloatConst + Debug + Send + Sync + 'static {}

impl<T: Float + FloatConst + Debug + Send + Sync + 'static> Real for T {}

pub(crate) fn c<T: Real>(x: f64) -> T {
    T::from(x).expect("representable constant")
}

fn cx<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

/// A period lattice with half-periods `omega_1, omega_2`, `Im(omega_2/omega_1) > 0`.
#[derive(Clone, Debug)]
pub struct ComplexLattice<T: Real> {
    omega1: Complex<T>,
    omega2: Complex<T>,
    // reduced basis and its constants
    w1: Complex<T>,
    w2: Complex<T>,
    tau: Complex<T>,
    eta_w1: Complex<T>,
    eta_w2: Complex<T>,
    th1p0: Complex<T>,
    e1: Complex<T>,
    wp_scale: Complex<T>,
    // quantities of the given basis
    eta1: Complex<T>,
    eta2: Complex<T>,
    g2: Complex<T>,
    g3: Complex<T>,
    a: Complex<T>,
    b: Complex<T>,
}

impl<T: Real> ComplexLattice<T> {
    pub fn new(omega1: Complex<T>, omega2: Complex<T>) -> Result<Self> {
        if omega1.norm() == T::zero() || (omega2 / omega1).im <= T::zero() {
            return Err(Error::DegenerateLattice);
        }
        let (w1, w2) = reduce_basis(omega1, omega2)?;
        let tau = w2 / w1;
        let pi = T::PI();
        let zero = cx(T::zero(), T::zero());
        let (th1p0, th1ppp0) = theta::theta1_odd_derivatives(tau);
        let th3 = theta::theta34(zero, tau, false);
        let th4 = theta::theta34(zero, tau, true);
        let eta_w1 = -(th1ppp0 * pi * pi) / (w1 * th1p0 * c::<T>(12.0));
        // Legendre: eta_w1 w2 - eta_w2 w1 = pi i / 2
        let eta_w2 = (eta_w1 * w2 - cx(T::zero(), pi / c::<T>(2.0))) / w1;
        let e1 = (th3.powi(4) + th4.powi(4)) * (pi * pi) / (w1 * w1 * c::<T>(12.0));
        let wp_scale = (th3 * th4 * pi / (w1 * c::<T>(2.0))).powi(2);
        let (e4, e6) = theta::eisenstein_e4_e6(tau);
        let p1 = w1 * c::<T>(2.0);
        let g2 = e4 * (pi.powi(4) * c::<T>(4.0) / c::<T>(3.0)) / p1.powi(4);
        let g3 = e6 * (pi.powi(6) * c::<T>(8.0) / c::<T>(27.0)) / p1.powi(6);
        let mut l = ComplexLattice {
            omega1,
            omega2,
            w1,
            w2,
            tau,
            eta_w1,
            eta_w2,
            th1p0,
            e1,
            wp_scale,
            eta1: zero,
            eta2: zero,
            g2,
            g3,
            a: zero,
            b: zero,
        };
        l.eta1 = l.zeta(omega1)?;
        l.eta2 = l.zeta(omega2)?;
        let det = omega1 * omega2.conj() - omega2 * omega1.conj();
        l.a = -(l.eta1 * omega2.conj() - l.eta2 * omega1.conj()) / det;
        l.b = (l.eta1 * omega2 - l.eta2 * omega1) / det;
        if !(l.a.re.is_finite() && l.b.re.is_finite() && l.eta1.re.is_finite()) {
            return Err(Error::NonConvergence("lattice constants are not finite".into()));
        }
        Ok(l)
    }

    /// The square lattice `omega_1 = omega`, `omega_2 = i omega`.
    pub fn lemniscatic(omega: T) -> Result<Self> {
        Self::new(cx(omega, T::zero()), cx(T::zero(), omega))
    }

    pub fn omega1(&self) -> Complex<T> {
        self.omega1
    }

    pub fn omega2(&self) -> Complex<T> {
        self.omega2
    }

    /// `omega_1, omega_2, omega_1 + omega_2`.
    pub fn half_periods(&self) -> [Complex<T>; 3] {
        [self.omega1, self.omega2, self.omega1 + self.omega2]
    }

    pub fn eta1(&self) -> Complex<T> {
        self.eta1
    }

    pub fn eta2(&self) -> Complex<T> {
        self.eta2
    }

    pub fn g2(&self) -> Complex<T> {
        self.g2
    }

    pub fn g3(&self) -> Complex<T> {
        self.g3
    }

    /// Coefficients of `xi(z) = zeta(z) + a z + b conj(z)`.
    pub fn xi_coeffs(&self) -> (Complex<T>, Complex<T>) {
        (self.a, self.b)
    }

    /// `|eta_1 omega_2 - eta_2 omega_1 - pi i/2|`.
    pub fn legendre_residual(&self) -> T {
        (self.eta1 * self.omega2 - self.eta2 * self.omega1 - cx(T::zero(), T::PI() / c::<T>(2.0))).norm()
    }

    /// Largest residual of the two linear equations fixing `a, b`.
    pub fn lin_residual(&self) -> T {
        let r1 = self.a * self.omega1 + self.b * self.omega1.conj() + self.eta1;
        let r2 = self.a * self.omega2 + self.b * self.omega2.conj() + self.eta2;
        r1.norm().max(r2.norm())
    }

    /// Coordinates of `z` in the reduced real basis `(2 w1, 2 w2)`.
    pub fn cell_coords(&self, z: Complex<T>) -> (T, T) {
        let p = self.w1 * c::<T>(2.0);
        let q = self.w2 * c::<T>(2.0);
        let det = p.re * q.im - p.im * q.re;
        ((z.re * q.im - z.im * q.re) / det, (p.re * z.im - p.im * z.re) / det)
    }

    /// Coordinates in the given basis `(2 omega_1, 2 omega_2)`.
    pub fn given_coords(&self, z: Complex<T>) -> (T, T) {
        let p = self.omega1 * c::<T>(2.0);
        let q = self.omega2 * c::<T>(2.0);
        let det = p.re * q.im - p.im * q.re;
        ((z.re * q.im - z.im * q.re) / det, (p.re * z.im - p.im * z.re) / det)
    }

    /// Splits `z = r + 2 m w1 + 2 n w2`, moving only when `z` is over two cells out.
    fn split(&self, z: Complex<T>) -> (Complex<T>, i64, i64) {
        let (x, y) = self.cell_coords(z);
        let lim = c::<T>(2.0);
        if x.abs() <= lim && y.abs() <= lim {
            return (z, 0, 0);
        }
        let m = x.round();
        let n = y.round();
        let r = z - self.w1 * (m * c::<T>(2.0)) - self.w2 * (n * c::<T>(2.0));
        (r, m.to_i64().unwrap_or(0), n.to_i64().unwrap_or(0))
    }

    /// Distance from `z` to the nearest lattice point.
    pub fn pole_distance(&self, z: Complex<T>) -> T {
        let (x, y) = self.cell_coords(z);
        let (m, n) = (x.round(), y.round());
        let mut best = T::infinity();
        for dm in -1..=1 {
            for dn in -1..=1 {
                let p = self.w1 * ((m + c::<T>(dm as f64)) * c::<T>(2.0))
                    + self.w2 * ((n + c::<T>(dn as f64)) * c::<T>(2.0));
                best = best.min((z - p).norm());
            }
        }
        best
    }

    fn check_pole(&self, z: Complex<T>) -> Result<()> {
        let d = self.pole_distance(z);
        if d < c::<T>(1e-12) * self.w1.norm() {
            return Err(Error::Pole(d.to_f64().unwrap_or(0.0)));
        }
        Ok(())
    }

    fn v_of(&self, z: Complex<T>) -> Complex<T> {
        z * T::PI() / (self.w1 * c::<T>(2.0))
    }

    fn sigma_near(&self, z: Complex<T>) -> Complex<T> {
        let (th1, _) = theta::theta1_with_derivative(self.v_of(z), self.tau);
        let pre = self.w1 * c::<T>(2.0) / T::PI();
        pre * (self.eta_w1 * z * z / (self.w1 * c::<T>(2.0))).exp() * th1 / self.th1p0
    }

    fn zeta_near(&self, z: Complex<T>) -> Complex<T> {
        let (th1, th1p) = theta::theta1_with_derivative(self.v_of(z), self.tau);
        self.eta_w1 * z / self.w1 + th1p / th1 * T::PI() / (self.w1 * c::<T>(2.0))
    }

    fn wp_near(&self, z: Complex<T>) -> Complex<T> {
        let v = self.v_of(z);
        let (th1, _) = theta::theta1_with_derivative(v, self.tau);
        let th2 = theta::theta2(v, self.tau);
        self.e1 + self.wp_scale * (th2 / th1).powi(2)
    }

    /// Weierstrass sigma; entire, so no pole check.
    pub fn sigma(&self, z: Complex<T>) -> Complex<T> {
        let (r, m, n) = self.split(z);
        let s = self.sigma_near(r);
        if m == 0 && n == 0 {
            return s;
        }
        let two = c::<T>(2.0);
        let (mt, nt) = (c::<T>(m as f64), c::<T>(n as f64));
        let w = self.w1 * mt + self.w2 * nt;
        let eta = self.eta_w1 * mt + self.eta_w2 * nt;
        let sign = if (m + n + m * n).rem_euclid(2) == 0 { T::one() } else { -T::one() };
        s * (eta * two * (r + w)).exp() * sign
    }

    pub fn zeta(&self, z: Complex<T>) -> Result<Complex<T>> {
        self.check_pole(z)?;
        let (r, m, n) = self.split(z);
        let two = c::<T>(2.0);
        let shift = (self.eta_w1 * c::<T>(m as f64) + self.eta_w2 * c::<T>(n as f64)) * two;
        Ok(self.zeta_near(r) + shift)
    }

    pub fn wp(&self, z: Complex<T>) -> Result<Complex<T>> {
        self.check_pole(z)?;
        let (x, y) = self.cell_coords(z);
        let r = z - self.w1 * (x.round() * c::<T>(2.0)) - self.w2 * (y.round() * c::<T>(2.0));
        Ok(self.wp_near(r))
    }

    /// `wp'(z) = -sigma(2z)/sigma(z)^4`.
    pub fn wp_prime(&self, z: Complex<T>) -> Result<Complex<T>> {
        self.check_pole(z)?;
        let (x, y) = self.cell_coords(z);
        let r = z - self.w1 * (x.round() * c::<T>(2.0)) - self.w2 * (y.round() * c::<T>(2.0));
        Ok(-self.sigma(r * c::<T>(2.0)) / self.sigma(r).powi(4))
    }

    /// `xi(z) = zeta(z) + a z + b conj(z)`.
    pub fn xi(&self, z: Complex<T>) -> Result<Complex<T>> {
        Ok(self.zeta(z)? + self.a * z + self.b * z.conj())
    }

    /// Jacobian `|a - wp(z)|^2 - |b|^2` of `xi` viewed as a map of the plane.
    pub fn xi_jacobian(&self, z: Complex<T>) -> Result<T> {
        Ok((self.a - self.wp(z)?).norm_sqr() - self.b.norm_sqr())
    }

    /// Signs of the Jacobian at `omega_1, omega_2, omega_1 + omega_2`.
    pub fn xi_jacobian_signs(&self) -> Result<[i8; 3]> {
        let mut out = [0i8; 3];
        for (s, w) in out.iter_mut().zip(self.half_periods()) {
            let j = self.xi_jacobian(w)?;
            *s = if j > T::zero() { 1 } else if j < T::zero() { -1 } else { 0 };
        }
        Ok(out)
    }
}

fn reduce_basis<T: Real>(mut w1: Complex<T>, mut w2: Complex<T>) -> Result<(Complex<T>, Complex<T>)> {
    for _ in 0..200 {
        let tau = w2 / w1;
        let m = tau.re.round();
        w2 = w2 - w1 * m;
        let tau = w2 / w1;
        if tau.norm() < T::one() - c::<T>(1e-12) {
            // tau -> -1/tau keeps Im > 0
            let t = w1;
            w1 = w2;
            w2 = -t;
        } else {
            return Ok((w1, w2));
        }
    }
    Err(Error::NonConvergence("lattice basis reduction".into()))
}

pub fn wp<T: Real>(z: Complex<T>, l: &ComplexLattice<T>) -> Result<Complex<T>> {
    l.wp(z)
}

pub fn wp_prime<T: Real>(z: Complex<T>, l: &ComplexLattice<T>) -> Result<Complex<T>> {
    l.wp_prime(z)
}

pub fn zeta_w<T: Real>(z: Complex<T>, l: &ComplexLattice<T>) -> Result<Complex<T>> {
    l.zeta(z)
}

pub fn sigma_w<T: Real>(z: Complex<T>, l: &ComplexLattice<T>) -> Complex<T> {
    l.sigma(z)
}

pub fn xi<T: Real>(z: Complex<T>, l: &ComplexLattice<T>) -> Result<Complex<T>> {
    l.xi(z)
}
