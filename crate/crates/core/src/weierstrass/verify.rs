//! Residual report for a lattice, with extra closed-form checks on the
//! square lattice.

use std::f64::consts::PI;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;

use super::{phi_eps, xi_roots, ComplexLattice, RootSearch};

type C = Complex<f64>;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Replaces every per-check tolerance when set.
    pub tol: Option<f64>,
    pub points: usize,
    pub seed: u64,
    /// Adds the closed-form square-lattice checks; `omega_2 = i omega_1` with real `omega_1`.
    pub lemniscatic: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { tol: None, points: 50, seed: 7, lemniscatic: false }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub residual: f64,
    pub tol: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckLine>,
    /// `e - pi/(4 omega^2)` on the square lattice.
    pub lemniscatic_margin: Option<f64>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&CheckLine> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &str, residual: f64, tol: f64) {
        let pass = residual.is_finite() && residual < tol;
        self.checks.push(CheckLine { name: name.to_string(), residual, tol, pass });
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            out.push_str(&format!("{mark} {:<28} {:.3e} (tol {:.0e})\n", c.name, c.residual, c.tol));
        }
        if let Some(m) = self.lemniscatic_margin {
            out.push_str(&format!("lemniscatic margin e - pi/(4 omega^2) = {m:.6}\n"));
        }
        out
    }
}

/// Random points of the cell kept at least `0.05 |omega|` from lattice points.
fn sample_points(l: &ComplexLattice<f64>, n: usize, seed: u64) -> Vec<C> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let guard = 0.05 * l.omega1().norm().min(l.omega2().norm());
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let z = l.omega1() * (2.0 * rng.gen::<f64>()) + l.omega2() * (2.0 * rng.gen::<f64>());
        if l.pole_distance(z) > guard && l.pole_distance(z + l.omega1()) > guard && l.pole_distance(z + l.omega2()) > guard {
            out.push(z);
        }
    }
    out
}

fn rel(a: C, b: C) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

/// Γ(1/4)^4 / (32 pi omega^2), the value of wp at the real half-period.
pub(crate) fn lemniscatic_e(omega: f64) -> f64 {
    libm::tgamma(0.25).powi(4) / (32.0 * PI * omega * omega)
}

/// Runs every residual check on `l`.
pub fn verify(l: &ComplexLattice<f64>, opts: &VerifyOptions) -> Result<VerifyReport> {
    let t = |d: f64| opts.tol.unwrap_or(d);
    let mut r = VerifyReport::default();
    let pts = sample_points(l, opts.points, opts.seed);
    let periods = [(l.omega1(), l.eta1()), (l.omega2(), l.eta2())];

    r.push("legendre", l.legendre_residual(), t(1e-10));
    r.push("lin_system", l.lin_residual(), t(1e-10));

    let mut xi_half = 0f64;
    for w in l.half_periods() {
        xi_half = xi_half.max(l.xi(w)?.norm());
    }
    r.push("xi_half_periods", xi_half, t(1e-8));

    let (mut xi_per, mut xi_odd, mut zeta_per, mut sigma_per, mut phi_per) = (0f64, 0f64, 0f64, 0f64, 0f64);
    for &z in &pts {
        let xz = l.xi(z)?;
        xi_odd = xi_odd.max((l.xi(-z)? + xz).norm());
        for &(w, eta) in &periods {
            let shifted = z + w * 2.0;
            xi_per = xi_per.max((l.xi(shifted)? - xz).norm());
            zeta_per = zeta_per.max((l.zeta(shifted)? - l.zeta(z)? - eta * 2.0).norm());
            sigma_per = sigma_per.max(rel(l.sigma(shifted), -l.sigma(z) * (eta * 2.0 * (z + w)).exp()));
            let factor = (eta * 4.0 * (z + w)).exp();
            for eps in 0..2u8 {
                for half in [l.omega1(), l.omega2()] {
                    let lhs = phi_eps(shifted, eps, half, l)?;
                    let rhs = phi_eps(z, eps, half, l)? * factor;
                    phi_per = phi_per.max(rel(lhs, rhs));
                }
            }
        }
    }
    r.push("xi_periodicity", xi_per, t(1e-8));
    r.push("xi_odd", xi_odd, t(1e-8));
    r.push("zeta_quasi_periodicity", zeta_per, t(1e-8));
    r.push("sigma_quasi_periodicity", sigma_per, t(1e-8));
    r.push("phi_quasi_periodicity", phi_per, t(1e-8));

    let mut wpp = 0f64;
    let scale = l.omega1().norm().powi(3);
    for w in l.half_periods() {
        wpp = wpp.max(l.wp_prime(w)?.norm() * scale);
    }
    r.push("wp_prime_half_periods", wpp, t(1e-8));

    let curve = pts
        .iter()
        .map(|&z| {
            let p = l.wp(z)?;
            let d = l.wp_prime(z)?;
            Ok(rel(d * d, p * p * p * 4.0 - l.g2() * p - l.g3()))
        })
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0f64, f64::max);
    r.push("wp_differential_equation", curve, t(1e-8));

    if opts.lemniscatic {
        let omega = l.omega1().re;
        let (a, b) = l.xi_coeffs();
        let expect_b = -PI / (4.0 * omega * omega);
        r.push("eta1", (l.eta1() - C::new(PI / (4.0 * omega), 0.0)).norm(), t(1e-9));
        r.push("a", a.norm(), t(1e-9));
        r.push("b", (b - C::new(expect_b, 0.0)).norm(), t(1e-9));
        r.push("g3", l.g3().norm(), t(1e-9));
        let e = lemniscatic_e(omega);
        r.push("wp_half_period", (l.wp(l.omega1())? - C::new(e, 0.0)).norm(), t(1e-7));
        let signs = l.xi_jacobian_signs()?;
        r.push("jacobian_signs", if signs == [1, 1, -1] { 0.0 } else { 1.0 }, 0.5);
        let roots = xi_roots(l, C::new(0.0, 0.0), &RootSearch::default());
        let mut far = 0f64;
        for z in &roots {
            let d = l.half_periods().iter().map(|w| l.pole_distance(*z - *w)).fold(f64::INFINITY, f64::min);
            far = far.max(d);
        }
        r.push("xi_root_count", (roots.len() as f64 - 3.0).abs(), 0.5);
        r.push("xi_roots_at_half_periods", far, t(1e-6));
        r.lemniscatic_margin = Some(e + expect_b);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemniscatic_report_passes() {
        let l = ComplexLattice::<f64>::lemniscatic(1.0).unwrap();
        let rep = verify(&l, &VerifyOptions { lemniscatic: true, ..Default::default() }).unwrap();
        assert!(rep.pass(), "{}", rep.render());
        assert!(rep.lemniscatic_margin.unwrap() > 0.0);
    }

    #[test]
    fn skewed_lattice_passes() {
        let l = ComplexLattice::new(C::new(0.7, 0.2), C::new(-0.4, 1.3)).unwrap();
        let rep = verify(&l, &VerifyOptions::default()).unwrap();
        assert!(rep.pass(), "{}", rep.render());
    }
}
