//! Sections of line bundles on products of one elliptic curve.
//!
//! A [`SectionTable`] lists coefficients `a_{IJ}` for unordered pairs of
//! disjoint index sets (0-based, not both empty). Since `a_{IJ} = a_{JI}`
//! and the section sums over ordered pairs, each listed pair contributes
//! twice: `S(u, a) = S_0(u) (1 + Σ_{{I,J}} 2 a_{IJ} (xi_I(u) + xi_J(u)))`
//! with `S_0(u) = Π sigma(u_i)` and `xi_∅ = 0`.

use std::collections::BTreeSet;

use num_complex::Complex;

use crate::error::{Error, Result};

use super::{c, ComplexLattice, Real};

#[derive(Clone, Debug)]
pub struct SectionTable<T> {
    arity: usize,
    entries: Vec<(Vec<usize>, Vec<usize>, Complex<T>)>,
}

impl<T: Real> SectionTable<T> {
    /// Coefficients for `arity = n + 1` variables.
    pub fn new(arity: usize, entries: Vec<(Vec<usize>, Vec<usize>, Complex<T>)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (i, j, _) in &entries {
            let si: BTreeSet<usize> = i.iter().copied().collect();
            let sj: BTreeSet<usize> = j.iter().copied().collect();
            if si.len() != i.len() || sj.len() != j.len() {
                return Err(Error::MalformedTable("repeated index inside a subset".into()));
            }
            if si.is_empty() && sj.is_empty() {
                return Err(Error::MalformedTable("I and J both empty".into()));
            }
            if !si.is_disjoint(&sj) {
                return Err(Error::MalformedTable(format!("{i:?} and {j:?} intersect")));
            }
            if si.iter().chain(&sj).any(|&k| k >= arity) {
                return Err(Error::MalformedTable(format!("index out of range for {arity} variables")));
            }
            let key = if si <= sj { (si, sj) } else { (sj, si) };
            if !seen.insert(key) {
                return Err(Error::MalformedTable(format!("pair {i:?}, {j:?} listed twice")));
            }
        }
        Ok(SectionTable { arity, entries })
    }

    pub fn empty(arity: usize) -> Self {
        SectionTable { arity, entries: Vec::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }
}

/// `sigma(z) xi(z)`, continued across lattice points where `xi` has its poles.
fn sigma_xi<T: Real>(l: &ComplexLattice<T>, z: Complex<T>) -> Complex<T> {
    match l.xi(z) {
        Ok(x) => l.sigma(z) * x,
        Err(_) => {
            // near 2w: sigma(z) ~ sigma'(2w)(z - 2w) and xi ~ 1/(z - 2w)
            let (x, y) = l.given_coords(z);
            let (m, n) = (x.round(), y.round());
            let two = c::<T>(2.0);
            let w = l.omega1() * m + l.omega2() * n;
            let eta = l.eta1() * m + l.eta2() * n;
            let mi = m.to_i64().unwrap_or(0);
            let ni = n.to_i64().unwrap_or(0);
            let sign = if (mi + ni + mi * ni).rem_euclid(2) == 0 { T::one() } else { -T::one() };
            (eta * two * w).exp() * sign
        }
    }
}

/// Evaluates `S(u, a)` at a point `u` of `E^{n+1}`.
pub fn section_eval<T: Real>(u: &[Complex<T>], table: &SectionTable<T>, l: &ComplexLattice<T>) -> Result<Complex<T>> {
    if u.len() != table.arity {
        return Err(Error::InvalidParameter(format!("expected {} coordinates, got {}", table.arity, u.len())));
    }
    let sig: Vec<Complex<T>> = u.iter().map(|&z| l.sigma(z)).collect();
    let s0 = sig.iter().fold(Complex::new(T::one(), T::zero()), |a, &s| a * s);
    if table.entries.is_empty() {
        return Ok(s0);
    }
    let sx: Vec<Complex<T>> = u.iter().map(|&z| sigma_xi(l, z)).collect();
    // S_0 xi_I with the pole of xi absorbed into sigma
    let s0_xi = |set: &[usize]| -> Complex<T> {
        if set.is_empty() {
            return Complex::new(T::zero(), T::zero());
        }
        (0..u.len()).fold(Complex::new(T::one(), T::zero()), |a, k| a * if set.contains(&k) { sx[k] } else { sig[k] })
    };
    let mut acc = s0;
    for (i, j, a) in &table.entries {
        acc = acc + *a * c::<T>(2.0) * (s0_xi(i) + s0_xi(j));
    }
    Ok(acc)
}

fn check_half_period<T: Real>(l: &ComplexLattice<T>, omega: Complex<T>) -> Result<()> {
    let eps = c::<T>(1e-9) * l.omega1().norm();
    if l.pole_distance(omega * c::<T>(2.0)) > eps || l.pole_distance(omega) < eps {
        return Err(Error::InvalidParameter("omega must be a half-period".into()));
    }
    Ok(())
}

/// `phi_0(z) = sigma(z)^2`, `phi_1(z) = sigma(z + omega)^2 exp(-2 eta z)` with `eta = zeta(omega)`.
pub fn phi_eps<T: Real>(z: Complex<T>, eps: u8, omega: Complex<T>, l: &ComplexLattice<T>) -> Result<Complex<T>> {
    check_half_period(l, omega)?;
    match eps {
        0 => Ok(l.sigma(z).powi(2)),
        1 => {
            let eta = l.zeta(omega)?;
            Ok(l.sigma(z + omega).powi(2) * (-(eta * z * c::<T>(2.0))).exp())
        }
        _ => Err(Error::InvalidParameter(format!("epsilon must be 0 or 1, got {eps}"))),
    }
}

/// `Σ_eps c_eps Π_k phi_{eps_k}(u_k)`; `coeffs[mask]` belongs to the
/// `eps` whose bit `k` is `eps_k`.
pub fn sec2_eval<T: Real>(u: &[Complex<T>], coeffs: &[Complex<T>], omega: Complex<T>, l: &ComplexLattice<T>) -> Result<Complex<T>> {
    if coeffs.len() != 1 << u.len() {
        return Err(Error::MalformedTable(format!("need {} coefficients, got {}", 1usize << u.len(), coeffs.len())));
    }
    let phis: Vec<[Complex<T>; 2]> =
        u.iter().map(|&z| Ok([phi_eps(z, 0, omega, l)?, phi_eps(z, 1, omega, l)?])).collect::<Result<_>>()?;
    let mut acc = Complex::new(T::zero(), T::zero());
    for (mask, cm) in coeffs.iter().enumerate() {
        let term = phis.iter().enumerate().fold(*cm, |a, (k, p)| a * p[(mask >> k) & 1]);
        acc = acc + term;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    #[test]
    fn plain_product_vanishes_on_axes() {
        let l = ComplexLattice::<f64>::lemniscatic(1.0).unwrap();
        let t = SectionTable::empty(2);
        let v = section_eval(&[C::new(0.0, 0.0), C::new(0.3, 0.1)], &t, &l).unwrap();
        assert!(v.norm() < 1e-15);
        let t = SectionTable::new(2, vec![(vec![0], vec![1], C::new(0.5, 0.0))]).unwrap();
        let v = section_eval(&[C::new(0.0, 0.0), C::new(0.3, 0.1)], &t, &l).unwrap();
        // S_0 xi(u_1) term survives: 2 a sigma(u_2)
        assert!((v - l.sigma(C::new(0.3, 0.1))).norm() < 1e-12);
    }

    #[test]
    fn malformed_tables() {
        let one = C::new(1.0, 0.0);
        assert!(SectionTable::new(2, vec![(vec![], vec![], one)]).is_err());
        assert!(SectionTable::new(2, vec![(vec![0], vec![0], one)]).is_err());
        assert!(SectionTable::new(2, vec![(vec![2], vec![], one)]).is_err());
        assert!(SectionTable::new(2, vec![(vec![0], vec![1], one), (vec![1], vec![0], one)]).is_err());
    }

    #[test]
    fn phi_requires_half_period() {
        let l = ComplexLattice::<f64>::lemniscatic(1.0).unwrap();
        assert!(phi_eps(C::new(0.2, 0.1), 1, C::new(0.3, 0.0), &l).is_err());
        assert!(phi_eps(C::new(0.2, 0.1), 2, C::new(1.0, 0.0), &l).is_err());
        assert!(phi_eps(C::new(0.2, 0.1), 1, C::new(1.0, 1.0), &l).is_ok());
    }
}
