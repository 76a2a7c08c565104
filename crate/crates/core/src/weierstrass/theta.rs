//! Jacobi theta functions `theta_j(v | tau)` with nome `q = exp(i pi tau)`.

use num_complex::Complex;

use super::Real;

const MAX_TERMS: usize = 200;

fn c<T: Real>(x: f64) -> T {
    T::from(x).expect("representable constant")
}

/// `q^x = exp(i pi tau x)`.
fn qpow<T: Real>(tau: Complex<T>, x: T) -> Complex<T> {
    (Complex::new(T::zero(), T::PI()) * tau * x).exp()
}

fn small<T: Real>(term: Complex<T>, sum: Complex<T>, n: usize) -> bool {
    n >= 2 && term.norm() <= T::epsilon() * c::<T>(1e-2) * (sum.norm() + T::min_positive_value())
}

/// `theta_1(v)` and its derivative `theta_1'(v)`.
pub fn theta1_with_derivative<T: Real>(v: Complex<T>, tau: Complex<T>) -> (Complex<T>, Complex<T>) {
    let mut s = Complex::new(T::zero(), T::zero());
    let mut d = s;
    for n in 0..MAX_TERMS {
        let k = c::<T>(2.0 * n as f64 + 1.0);
        let mut q = qpow(tau, c::<T>((n as f64 + 0.5).powi(2))) * c::<T>(2.0);
        if n % 2 == 1 {
            q = -q;
        }
        let arg = v * k;
        let ts = q * arg.sin();
        let td = q * arg.cos() * k;
        s = s + ts;
        d = d + td;
        if small(ts, s, n) && small(td, d, n) {
            break;
        }
    }
    (s, d)
}

pub fn theta2<T: Real>(v: Complex<T>, tau: Complex<T>) -> Complex<T> {
    let mut s = Complex::new(T::zero(), T::zero());
    for n in 0..MAX_TERMS {
        let k = c::<T>(2.0 * n as f64 + 1.0);
        let t = qpow(tau, c::<T>((n as f64 + 0.5).powi(2))) * (v * k).cos() * c::<T>(2.0);
        s = s + t;
        if small(t, s, n) {
            break;
        }
    }
    s
}

/// `theta_3`, or `theta_4` when `alternating`.
pub fn theta34<T: Real>(v: Complex<T>, tau: Complex<T>, alternating: bool) -> Complex<T> {
    let mut s = Complex::new(T::one(), T::zero());
    for n in 1..MAX_TERMS {
        let mut t = qpow(tau, c::<T>((n * n) as f64)) * (v * c::<T>(2.0 * n as f64)).cos() * c::<T>(2.0);
        if alternating && n % 2 == 1 {
            t = -t;
        }
        s = s + t;
        if small(t, s, n) {
            break;
        }
    }
    s
}

/// `theta_1'(0)` and `theta_1'''(0)`.
pub fn theta1_odd_derivatives<T: Real>(tau: Complex<T>) -> (Complex<T>, Complex<T>) {
    let mut d1 = Complex::new(T::zero(), T::zero());
    let mut d3 = d1;
    for n in 0..MAX_TERMS {
        let k = c::<T>(2.0 * n as f64 + 1.0);
        let mut q = qpow(tau, c::<T>((n as f64 + 0.5).powi(2))) * c::<T>(2.0);
        if n % 2 == 1 {
            q = -q;
        }
        let t1 = q * k;
        let t3 = -(q * k * k * k);
        d1 = d1 + t1;
        d3 = d3 + t3;
        if small(t3, d3, n) {
            break;
        }
    }
    (d1, d3)
}

/// `E_4` and `E_6` as `q`-series in `q2 = exp(2 pi i tau)`.
pub fn eisenstein_e4_e6<T: Real>(tau: Complex<T>) -> (Complex<T>, Complex<T>) {
    let q2 = qpow(tau, c::<T>(2.0));
    let mut e4 = Complex::new(T::one(), T::zero());
    let mut e6 = e4;
    let mut qn = Complex::new(T::one(), T::zero());
    for n in 1..MAX_TERMS {
        qn = qn * q2;
        let (mut s3, mut s5) = (0f64, 0f64);
        for d in 1..=n {
            if n % d == 0 {
                s3 += (d as f64).powi(3);
                s5 += (d as f64).powi(5);
            }
        }
        let t4 = qn * c::<T>(240.0 * s3);
        let t6 = qn * c::<T>(-504.0 * s5);
        e4 = e4 + t4;
        e6 = e6 + t6;
        if small(t6, e6 + Complex::new(T::one(), T::zero()), n) && small(t4, e4, n) {
            break;
        }
    }
    (e4, e6)
}
