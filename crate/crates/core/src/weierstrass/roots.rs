use num_complex::Complex;

use super::{c, ComplexLattice, Real};

/// Multi-start Newton search for solutions of `xi(z) = target` in one cell.
#[derive(Clone, Debug)]
pub struct RootSearch<T> {
    /// Starts on a `grid x grid` lattice of cell points.
    pub grid: usize,
    /// Roots closer than this modulo the lattice are merged.
    pub dedup: T,
    /// Convergence threshold on `|xi(z) - target|`.
    pub tol: T,
    pub max_iter: usize,
}

impl<T: Real> Default for RootSearch<T> {
    fn default() -> Self {
        RootSearch { grid: 12, dedup: c(1e-5), tol: c(1e-12), max_iter: 60 }
    }
}

/// Newton on the real system `xi(x + iy) = target`, using
/// `d xi/dz = a - wp(z)` and `d xi/d conj(z) = b`.
fn newton<T: Real>(l: &ComplexLattice<T>, target: Complex<T>, mut z: Complex<T>, opts: &RootSearch<T>) -> Option<Complex<T>> {
    let (a, b) = l.xi_coeffs();
    let step_cap = l.omega1().norm().min(l.omega2().norm()) * c::<T>(0.25);
    for _ in 0..opts.max_iter {
        let f = l.xi(z).ok()? - target;
        if f.norm() < opts.tol {
            return Some(z);
        }
        let fz = a - l.wp(z).ok()?;
        let fx = fz + b;
        let fy = (fz - b) * Complex::new(T::zero(), T::one());
        let det = fx.re * fy.im - fy.re * fx.im;
        if det.abs() < T::epsilon() {
            return None;
        }
        let dx = -(fy.im * f.re - fy.re * f.im) / det;
        let dy = -(-fx.im * f.re + fx.re * f.im) / det;
        let mut step = Complex::new(dx, dy);
        if step.norm() > step_cap {
            step = step * (step_cap / step.norm());
        }
        z = z + step;
    }
    let f = l.xi(z).ok()? - target;
    (f.norm() < opts.tol * c::<T>(1e3)).then_some(z)
}

/// Moves `z` into the half-open cell `[0,1)^2` of the given basis.
fn to_cell<T: Real>(l: &ComplexLattice<T>, z: Complex<T>) -> Complex<T> {
    let (x, y) = l.given_coords(z);
    let two = c::<T>(2.0);
    z - l.omega1() * (x.floor() * two) - l.omega2() * (y.floor() * two)
}

/// Distinct solutions of `xi(z) = target` in the fundamental cell, sorted by
/// their cell coordinates.
pub fn xi_roots<T: Real>(l: &ComplexLattice<T>, target: Complex<T>, opts: &RootSearch<T>) -> Vec<Complex<T>> {
    let mut roots: Vec<Complex<T>> = Vec::new();
    let g = c::<T>(opts.grid as f64);
    let two = c::<T>(2.0);
    for i in 0..opts.grid {
        for j in 0..opts.grid {
            let s = c::<T>(i as f64 + 0.5) / g;
            let t = c::<T>(j as f64 + 0.5) / g;
            let z0 = l.omega1() * (s * two) + l.omega2() * (t * two);
            if let Some(r) = newton(l, target, z0, opts) {
                let r = to_cell(l, r);
                if roots.iter().all(|q| l.pole_distance(r - *q) > opts.dedup) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort_by(|p, q| {
        let (px, py) = l.given_coords(*p);
        let (qx, qy) = l.given_coords(*q);
        (px, py).partial_cmp(&(qx, qy)).unwrap_or(std::cmp::Ordering::Equal)
    });
    roots
}
