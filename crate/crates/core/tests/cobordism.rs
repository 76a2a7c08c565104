use num_traits::Zero;
use num_bigint::BigInt;
use theta_cobordism::cobordism::{
    adams_novikov, beta, cp_classes, cp_tangent_vector, decompose, decompose_tangent, hurwitz_y, product_normal_vector,
    psi_on_class, q_multiplier, theta_normal_vector, theta_tangent_vector, v_class_jacobi_trudi, v_classes, w_classes,
    DualClassTable,
};
use theta_cobordism::exact::{bernoulli, rat, rat_int};
use theta_cobordism::genera::todd_of_poly;
use theta_cobordism::{parse_poly, ThetaPoly};

fn pp(s: &str) -> ThetaPoly {
    parse_poly(s).unwrap()
}

#[test]
fn beta_coefficients() {
    let b = beta(6);
    assert_eq!(b.coeffs()[1], ThetaPoly::constant(rat(1, 1)));
    assert_eq!(b.coeffs()[2], pp("1/2*t1"));
    assert_eq!(b.coeffs()[4], pp("1/24*t3"));
    // Todd image of beta is 1 - e^{-z}
    for (m, c) in b.coeffs().iter().enumerate().skip(1) {
        let want = if m % 2 == 1 { rat(1, 1) } else { rat(-1, 1) } / rat_int(theta_cobordism::exact::factorial(m as u32));
        assert_eq!(todd_of_poly(c), want, "z^{m}");
    }
}

#[test]
fn dual_classes_printed_values() {
    let v = v_classes(5).unwrap();
    assert_eq!(v[2], pp("-t2 + 3/2*t1^2"));
    assert_eq!(v[4], pp("-t4 + 5*t1*t3 - 15*t1^2*t2 + 10/3*t2^2 + 15/2*t1^4"));
    assert_eq!(v[5], pp("t5 - 6*t1*t4 + 30*t1*t2^2 - 60*t1^3*t2 - 10*t2*t3 + 45/2*t1^2*t3 + 45/2*t1^5"));
}

#[test]
fn inversion_agrees_with_determinant() {
    let v = v_classes(8).unwrap();
    for (n, vn) in v.iter().enumerate() {
        assert_eq!(*vn, v_class_jacobi_trudi(n), "v{n}");
        assert!(vn.is_zero() || vn.is_homogeneous_of(n as u32));
    }
}

#[test]
fn cp_and_w_classes() {
    let cp = cp_classes(10).unwrap();
    assert_eq!(cp[1], pp("-t1"));
    assert_eq!(cp[2], pp("3/2*t1^2 - 1/2*t2"));
    for (n, c) in cp.iter().enumerate() {
        assert_eq!(todd_of_poly(c), rat(1, 1), "Td(CP^{n})");
    }
    let w = w_classes(4).unwrap();
    assert!(w[0].is_zero());
    assert_eq!(w[1], pp("1/2*t1"));
    assert_eq!(w[2], pp("1/3*t2 - 1/4*t1^2"));
}

#[test]
fn cp_numbers_decompose_to_cp_classes() {
    let cp = cp_classes(5).unwrap();
    for n in 1..=5u32 {
        let c = cp_tangent_vector(n);
        assert_eq!(decompose_tangent(&c).unwrap(), cp[n as usize], "CP^{n}");
        assert_eq!(decompose(&c), cp[n as usize], "CP^{n} via normal numbers");
    }
}

#[test]
fn decompositions_agree_on_products() {
    for n in 1..=5u32 {
        assert_eq!(decompose(&theta_normal_vector(n, 1)), ThetaPoly::generator(n));
        assert_eq!(decompose_tangent(&theta_tangent_vector(n, 1)).unwrap(), ThetaPoly::generator(n));
    }
    let t = |n| ThetaPoly::generator(n);
    let prod = product_normal_vector(&theta_normal_vector(2, 1), &theta_normal_vector(1, 1));
    assert_eq!(decompose(&prod), &t(2) * &t(1));
    let tangent = prod.normal_to_tangent().unwrap();
    assert_eq!(decompose_tangent(&tangent).unwrap(), &t(2) * &t(1));
    let cp1sq = product_normal_vector(&cp_tangent_vector(1), &cp_tangent_vector(1));
    assert_eq!(decompose(&cp1sq), pp("t1^2"));
}

#[test]
fn hurwitz_integrality() {
    let v = v_classes(10).unwrap();
    assert_eq!(hurwitz_y(&v[2], 2), pp("-t2 + 2*t1^2"));
    for (n, vn) in v.iter().enumerate().skip(1) {
        assert!(hurwitz_y(vn, n as u32).is_integral(), "y{n}");
    }
}

#[test]
fn q_multipliers() {
    let table = DualClassTable::build(8).unwrap();
    assert_eq!(q_multiplier(1), BigInt::from(1));
    assert_eq!(q_multiplier(2), BigInt::from(2));
    assert_eq!(q_multiplier(4), BigInt::from(6));
    for n in (3..=11).step_by(2) {
        assert_eq!(q_multiplier(n), BigInt::from(1));
    }
    for n in 1..=8u32 {
        let td = todd_of_poly(&table.v[n as usize]);
        assert_eq!(td, bernoulli(n) * rat_int(n + 1));
        let q = rat_int(q_multiplier(n));
        assert!((&td * &q).is_integer());
        for smaller in 1..q_multiplier(n).try_into().unwrap_or(1u32) {
            assert!(!(&td * rat_int(smaller)).is_integer());
        }
    }
}

#[test]
fn adams_novikov_operations() {
    let one = adams_novikov(1, 6).unwrap();
    assert_eq!(one.coeffs(), theta_cobordism::ThetaSeries::var(6).coeffs());
    let two = adams_novikov(2, 6).unwrap();
    assert_eq!(two.coeffs()[2], pp("1/2*t1"));
    assert!(adams_novikov(0, 4).is_err());
    for n in 1..=6u32 {
        for k in 1..=3i64 {
            let psi = psi_on_class(k, &ThetaPoly::generator(n)).unwrap();
            assert_eq!(psi, ThetaPoly::generator(n).scale(&rat_int(BigInt::from(k).pow(n))));
        }
    }
}
