use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use theta_cobordism::acceptance::random_poly;
use theta_cobordism::cobordism::{beta, q_v_series, v_classes, w_classes};
use theta_cobordism::exact::{factorial, partitions_of, partitions_up_to, rat, rat_int};
use theta_cobordism::ln::{
    dequantize, diff1_commutator, dual_pairing, ln_apply, ln_apply_series, normal_number, quantize,
    quantum_chern_dold, s_k_t_n, theta_intersection, Diff1Field, TensorElement,
};
use theta_cobordism::{parse_poly, Partition, ThetaPoly};

fn pp(s: &str) -> ThetaPoly {
    parse_poly(s).unwrap()
}

/// `(n+1)! [z^{n+1}] beta^{k+1}` straight from the series.
fn residue_oracle(k: u32, n: u32) -> ThetaPoly {
    let b = beta(n as usize + 1).pow(k as i64 + 1).unwrap();
    b.coeffs()[n as usize + 1].scale(&rat_int(factorial(n + 1)))
}

#[test]
fn generator_action_matches_residue() {
    for n in 1..=8u32 {
        for k in 1..=n {
            assert_eq!(s_k_t_n(k, n), residue_oracle(k, n), "S{k}(t{n})");
            assert!(s_k_t_n(k, n).is_positive_integral());
        }
        assert!(s_k_t_n(n + 1, n).is_zero());
    }
    assert_eq!(ln_apply(&Partition::single(1), &pp("t1")), pp("2"));
    assert_eq!(s_k_t_n(2, 3), pp("36*t1"));
    assert!(theta_intersection(2, 3).is_err());
}

#[test]
fn non_one_part_kills_generators() {
    let b = beta(8);
    let s = ln_apply_series(&Partition::new(vec![1, 1]), &b).unwrap();
    // S_(1,1) vanishes on each coefficient t_n and on 1
    assert!(s.coeffs().iter().all(|c| c.is_zero()));
}

#[test]
fn q_v_identity() {
    let b = beta(10);
    let q = q_v_series(10).unwrap();
    for k in 1..=5u32 {
        let lhs = ln_apply_series(&Partition::single(k), &q).unwrap();
        let rhs = b.pow(k as i64 - 1).unwrap().mul_z().neg();
        assert_eq!(lhs.coeffs(), rhs.coeffs(), "k = {k}");
    }
    let v = v_classes(4).unwrap();
    assert_eq!(ln_apply(&Partition::single(2), &v[4]), pp("-20*t2"));
}

#[test]
fn s1_on_w_classes() {
    let w = w_classes(8).unwrap();
    for (n, wn) in w.iter().enumerate().skip(2) {
        assert_eq!(ln_apply(&Partition::single(1), wn), ThetaPoly::generator(n as u32 - 1));
    }
}

#[test]
fn duality_matrix() {
    assert_eq!(dual_pairing(&Partition::new(vec![2, 1]), &Partition::new(vec![2, 1])), Ok(rat(1, 1)));
    assert_eq!(dual_pairing(&Partition::single(3), &Partition::new(vec![2, 1])), Ok(rat(0, 1)));
    assert_eq!(dual_pairing(&Partition::empty(), &Partition::empty()), Ok(rat(1, 1)));
    assert!(dual_pairing(&Partition::single(2), &Partition::single(1)).is_err());
    for n in 1..=6 {
        for l in partitions_of(n) {
            for m in partitions_of(n) {
                assert_eq!(dual_pairing(&l, &m).unwrap(), rat((l == m) as i64, 1));
            }
        }
    }
    assert_eq!(normal_number(&Partition::single(3), &ThetaPoly::generator(3)), rat(24, 1));
}

#[test]
fn quantize_examples() {
    let q = quantize(&ThetaPoly::generator(1));
    assert_eq!(q.render(), "t1⊗1 + 1⊗t'1");
    let x = pp("t2*t1");
    assert_eq!(dequantize(&quantize(&x)), x);
    assert_eq!(quantize(&pp("t1^2")), q.mul(&q));
    let bi = q.bihomogeneous_component(0, 1);
    assert_eq!(bi, TensorElement::pure(&ThetaPoly::one(), &ThetaPoly::generator(1)));
    let at_point = quantum_chern_dold(&ThetaPoly::generator(1), &TensorElement::one());
    assert_eq!(at_point, q);
}

#[test]
fn diff1_fields() {
    let s1 = Diff1Field::S1;
    let s2 = Diff1Field::S2;
    for k in 1..=6u32 {
        assert_eq!(s1.on_generator(k), ThetaPoly::generator(k - 1).scale(&rat(k as i64, 1)));
    }
    assert_eq!(s2.on_generator(1), ThetaPoly::zero());
    assert_eq!(s2.on_generator(4), ThetaPoly::generator(2).scale(&rat(3, 1)));
    // [S1, S2] a_j by composing the two derivations by hand
    let rep = diff1_commutator(6);
    for (j, image) in &rep.images {
        let a = ThetaPoly::generator(*j);
        let direct = &s1.apply(&s2.apply(&a)) - &s2.apply(&s1.apply(&a));
        assert_eq!(*image, direct, "a{j}");
    }
    assert!(rep.render().contains("[S1,S2](a3) = -1"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn operations_preserve_integrality(seed in any::<u64>(), li in 0usize..30) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut x = ThetaPoly::zero();
        for _ in 0..3 {
            let w = rng.gen_range(1..=8u32);
            let ps = partitions_of(w);
            x.add_term(ps[rng.gen_range(0..ps.len())].clone(), rat(rng.gen_range(-5..=5), 1));
        }
        let lams = partitions_up_to(6);
        let lam = &lams[li % lams.len()];
        let y = ln_apply(lam, &x);
        prop_assert!(y.is_integral());
    }

    #[test]
    fn quantize_round_trip(seed in any::<u64>()) {
        let x = random_poly(&mut ChaCha8Rng::seed_from_u64(seed), 6);
        prop_assert_eq!(dequantize(&quantize(&x)), x);
    }

    #[test]
    fn quantize_multiplicative(a in any::<u64>(), b in any::<u64>()) {
        let x = random_poly(&mut ChaCha8Rng::seed_from_u64(a), 3);
        let y = random_poly(&mut ChaCha8Rng::seed_from_u64(b), 3);
        prop_assert_eq!(quantize(&(&x * &y)), quantize(&x).mul(&quantize(&y)));
    }

    #[test]
    fn cartan_rule_on_products(a in any::<u64>(), b in any::<u64>()) {
        // S_(k) is a derivation-like family: S_(1)(xy) = S_(1)x y + x S_(1)y
        let x = random_poly(&mut ChaCha8Rng::seed_from_u64(a), 4);
        let y = random_poly(&mut ChaCha8Rng::seed_from_u64(b), 4);
        let s = Partition::single(1);
        let lhs = ln_apply(&s, &(&x * &y));
        let rhs = &(&ln_apply(&s, &x) * &y) + &(&x * &ln_apply(&s, &y));
        prop_assert_eq!(lhs, rhs);
    }
}
