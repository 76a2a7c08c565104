use num_bigint::BigInt;
use theta_cobordism::acceptance::{classical_congruences, classical_lattice};
use theta_cobordism::cobordism::{cp_classes, decompose, product_normal_vector, theta_normal_vector, theta_tangent_vector, v_classes};
use theta_cobordism::exact::{bernoulli, factorial, rat, rat_int};
use theta_cobordism::genera::{
    check_chern_vector, congruence_system, genus_of_poly, genus_of_theta, theta_invariants, theta_signature,
    todd_of_poly, GenusSpec,
};
use theta_cobordism::symfun::{ChernBasis, ChernVector, Frame};
use theta_cobordism::{Partition, RatSeries, ThetaPoly};

#[test]
fn todd_of_decomposed_theta() {
    for n in 1..=10u32 {
        let x = decompose(&theta_normal_vector(n, 1));
        assert_eq!(todd_of_poly(&x), rat(if n % 2 == 0 { 1 } else { -1 }, 1));
    }
}

#[test]
fn signature_is_integral() {
    assert_eq!(theta_signature(2), rat(-2, 1));
    for n in (2..=20).step_by(2) {
        assert!(theta_signature(n).is_integer(), "n = {n}");
    }
}

#[test]
fn genus_definitions_agree() {
    let custom = GenusSpec::new(Some("custom".into()), RatSeries::new(vec![rat(1, 1), rat(2, 3), rat(-1, 5), rat(1, 7)], 9)).unwrap();
    for spec in [GenusSpec::todd(9), GenusSpec::l_genus(9), GenusSpec::euler(9), custom] {
        for n in 1..=8usize {
            let a = genus_of_theta(&spec, n).unwrap();
            let b = genus_of_poly(&spec, &ThetaPoly::generator(n as u32)).unwrap();
            assert_eq!(a, b, "{:?} on t{n}", spec.name);
        }
    }
}

#[test]
fn genera_of_dual_classes() {
    let euler = GenusSpec::euler(9);
    let v = v_classes(8).unwrap();
    assert_eq!(genus_of_poly(&euler, &v[1]).unwrap(), rat(-2, 1));
    for vn in &v[2..] {
        assert_eq!(genus_of_poly(&euler, vn).unwrap(), rat(0, 1));
    }
    assert_eq!(todd_of_poly(&v[2]), rat(1, 2));
    for (n, vn) in v.iter().enumerate().skip(1) {
        assert_eq!(todd_of_poly(vn), bernoulli(n as u32) * rat_int(n as u64 + 1));
    }
}

#[test]
fn l_genus_of_projective_spaces() {
    // tanh^{-1} reverts to a series with coefficients 1/(2k+1), which gives
    // L(CP^{2k}) = 1 and zero in odd dimensions
    let l = GenusSpec::l_genus(10);
    let cp = cp_classes(9).unwrap();
    for (n, c) in cp.iter().enumerate().skip(1) {
        let want = if n % 2 == 0 { rat(1, 1) } else { rat(0, 1) };
        assert_eq!(genus_of_poly(&l, c).unwrap(), want, "L(CP^{n})");
    }
}

#[test]
fn invariants_of_theta_divisors() {
    let inv = theta_invariants(2, 1).unwrap();
    assert_eq!(inv.betti[2], BigInt::from(16));
    assert_eq!(inv.signature, Some(rat(-2, 1)));
    let curve = theta_invariants(1, 1).unwrap();
    assert_eq!(curve.euler, BigInt::from(-2));
    let scaled = theta_invariants(2, 2).unwrap();
    assert_eq!(scaled.euler, BigInt::from(8 * 6));
    assert_eq!(scaled.signature, Some(rat(-16, 1)));
    assert!(theta_invariants(0, 1).is_err());
}

#[test]
fn theta_three_numbers_from_normal_bundle() {
    // c(T) = (1 + x)^{-1} with x^3 [Θ^3] = 24: every c_lambda is (-1)^3 24
    let t = theta_tangent_vector(3, 1);
    for c in t.values().values() {
        assert_eq!(*c, rat(-24, 1));
    }
    let sys = congruence_system(3);
    let v = check_chern_vector(&t, &sys).unwrap();
    assert!(v.pass && v.todd == rat(-1, 1));
}

#[test]
fn congruence_systems_match_classical_lists() {
    for n in 1..=4u32 {
        let sys = congruence_system(n);
        let classical = classical_lattice(n, &classical_congruences(n)).unwrap();
        assert!(sys.lattice.is_sublattice_of(&classical), "weight {n}");
        if n <= 3 {
            assert!(classical.is_sublattice_of(&sys.lattice), "weight {n}");
        }
    }
    let divisors = |n| congruence_system(n).lattice.elementary_divisors().to_vec();
    assert_eq!(divisors(1), vec![BigInt::from(2)]);
    assert_eq!(divisors(2), vec![BigInt::from(1), BigInt::from(12)]);
}

#[test]
fn congruence_verdicts() {
    let sys2 = congruence_system(2);
    let bad = ChernVector::from_list(2, Frame::Tangent, ChernBasis::ChernProduct, vec![rat(0, 1), rat(1, 1)]).unwrap();
    let v = check_chern_vector(&bad, &sys2).unwrap();
    assert!(!v.pass);
    assert!(v.failing.iter().any(|(mu, _)| mu.is_empty()));
    let theta4 = check_chern_vector(&theta_tangent_vector(4, 1), &congruence_system(4)).unwrap();
    assert!(theta4.pass);
    assert_eq!(theta4.todd, rat(1, 1));
    assert!(check_chern_vector(&theta_tangent_vector(3, 1), &sys2).is_err());
}

#[test]
fn products_of_theta_divisors_pass() {
    let pieces: Vec<Vec<u32>> = vec![vec![1, 1], vec![2, 1], vec![1, 1, 1], vec![2, 2], vec![3, 1], vec![2, 1, 1]];
    for lam in pieces {
        let lam = Partition::new(lam);
        let mut v = theta_normal_vector(lam.parts()[0], 1);
        for &p in &lam.parts()[1..] {
            v = product_normal_vector(&v, &theta_normal_vector(p, 1));
        }
        let sys = congruence_system(lam.weight());
        assert!(check_chern_vector(&v, &sys).unwrap().pass, "Θ^{lam}");
        let x = decompose(&v);
        let want = lam.parts().iter().fold(ThetaPoly::from_terms([(Partition::empty(), rat(1, 1))]), |acc, &p| {
            &acc * &ThetaPoly::generator(p)
        });
        assert_eq!(x, want);
    }
    let top = rat_int(factorial(5));
    assert_eq!(theta_normal_vector(4, 1).get(&Partition::single(4)), top);
}
