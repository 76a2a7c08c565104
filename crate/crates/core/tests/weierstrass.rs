use std::f64::consts::PI;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use theta_cobordism::weierstrass::{
    phi_eps, sec2_eval, section_eval, verify, xi_roots, ComplexLattice, RootSearch, SectionTable, VerifyOptions,
};
use theta_cobordism::Lattice64;

type C = Complex<f64>;

fn random_lattice(rng: &mut impl Rng) -> Lattice64 {
    loop {
        let r = rng.gen_range(0.5..2.0);
        let th = rng.gen_range(0.0..2.0 * PI);
        let w1 = C::from_polar(r, th);
        let tau = C::new(rng.gen_range(-3.0..3.0), rng.gen_range(0.2..3.0));
        if tau.norm() <= 3.0 {
            return ComplexLattice::new(w1, w1 * tau).unwrap();
        }
    }
}

fn cell_point(l: &Lattice64, rng: &mut impl Rng) -> C {
    loop {
        let z = l.omega1() * (2.0 * rng.gen::<f64>()) + l.omega2() * (2.0 * rng.gen::<f64>());
        if l.pole_distance(z) > 0.05 * l.omega1().norm().min(l.omega2().norm()) {
            return z;
        }
    }
}

#[test]
fn gamma_quarter() {
    let g = libm::tgamma(0.25);
    assert!((g - 3.6256099082).abs() < 1e-9);
    assert!(3.6 < g && g < 3.7);
}

#[test]
fn random_lattices_legendre_and_periodicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..20 {
        let l = random_lattice(&mut rng);
        assert!(l.legendre_residual() < 1e-10, "legendre {}", l.legendre_residual());
        assert!(l.lin_residual() < 1e-10);
        for _ in 0..100 {
            let z = cell_point(&l, &mut rng);
            let x = l.xi(z).unwrap();
            for w in [l.omega1(), l.omega2()] {
                let r = (l.xi(z + w * 2.0).unwrap() - x).norm();
                assert!(r < 1e-8, "xi periodicity {r:e}");
            }
        }
        for w in l.half_periods() {
            assert!(l.xi(w).unwrap().norm() < 1e-8);
        }
    }
}

#[test]
fn lemniscatic_closed_forms() {
    let l = Lattice64::lemniscatic(1.0).unwrap();
    let (a, b) = l.xi_coeffs();
    assert!(a.norm() < 1e-9);
    assert!((b - C::new(-PI / 4.0, 0.0)).norm() < 1e-9);
    assert!((l.eta1() - C::new(PI / 4.0, 0.0)).norm() < 1e-9);
    assert!(l.g3().norm() < 1e-9);
    let e = libm::tgamma(0.25).powi(4) / (32.0 * PI);
    assert!((l.wp(C::new(1.0, 0.0)).unwrap() - C::new(e, 0.0)).norm() < 1e-7);
    assert!(e > PI / 4.0);
    assert_eq!(l.xi_jacobian_signs().unwrap(), [1, 1, -1]);
    let scaled = Lattice64::lemniscatic(2.0).unwrap();
    assert!((scaled.eta1() - C::new(PI / 8.0, 0.0)).norm() < 1e-9);
}

#[test]
fn root_counts_inside_and_outside_the_caustic() {
    let l = Lattice64::lemniscatic(1.0).unwrap();
    let opts = RootSearch::default();
    let zeros = xi_roots(&l, C::new(0.0, 0.0), &opts);
    assert_eq!(zeros.len(), 3);
    for z in &zeros {
        assert!(l.half_periods().iter().any(|w| l.pole_distance(z - w) < 1e-6));
    }
    assert_eq!(xi_roots(&l, C::new(5.0, 0.0), &opts).len(), 1);
}

#[test]
fn section_factors_transform_correctly() {
    let l = Lattice64::new(C::new(1.0, 0.1), C::new(0.3, 1.2)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let z = cell_point(&l, &mut rng);
        for (k, w) in [l.omega1(), l.omega2()].into_iter().enumerate() {
            let eta = if k == 0 { l.eta1() } else { l.eta2() };
            let factor = (eta * 4.0 * (z + w)).exp();
            for eps in 0..2u8 {
                let lhs = phi_eps(z + w * 2.0, eps, l.omega1(), &l).unwrap();
                let rhs = phi_eps(z, eps, l.omega1(), &l).unwrap() * factor;
                assert!((lhs - rhs).norm() / lhs.norm().max(1e-300) < 1e-8);
            }
        }
    }
    let u = [C::new(0.2, 0.3), C::new(-0.4, 0.1)];
    let coeffs = [C::new(1.0, 0.0), C::new(0.0, 0.0), C::new(0.0, 0.0), C::new(0.0, 0.0)];
    let s = sec2_eval(&u, &coeffs, l.omega1(), &l).unwrap();
    let direct = l.sigma(u[0]).powi(2) * l.sigma(u[1]).powi(2);
    assert!((s - direct).norm() < 1e-12 * direct.norm());
    assert!(sec2_eval(&u, &coeffs[..3], l.omega1(), &l).is_err());
    let empty = SectionTable::empty(2);
    let plain = section_eval(&u, &empty, &l).unwrap();
    assert!((plain - l.sigma(u[0]) * l.sigma(u[1])).norm() < 1e-14);
}

#[test]
fn verify_reports() {
    let l = Lattice64::lemniscatic(1.0).unwrap();
    let rep = verify(&l, &VerifyOptions { lemniscatic: true, ..Default::default() }).unwrap();
    assert!(rep.pass(), "{}", rep.render());
    let strict = verify(&l, &VerifyOptions { tol: Some(1e-30), ..Default::default() }).unwrap();
    assert!(!strict.pass());
}

#[test]
fn single_precision_lattice() {
    let l = ComplexLattice::<f32>::lemniscatic(1.0).unwrap();
    let (_, b) = l.xi_coeffs();
    assert!((b.re + std::f32::consts::PI / 4.0).abs() < 1e-3);
    assert!(ComplexLattice::<f64>::new(C::new(1.0, 0.0), C::new(2.0, 0.0)).is_err());
}
