use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use theta_cobordism::cobordism::{theta_normal_vector, theta_tangent_vector};
use theta_cobordism::exact::{factorial, partitions_of, rat, rat_int};
use theta_cobordism::symfun::{Basis, ChernBasis, ChernVector, Frame, SymFunExpr};
use theta_cobordism::Partition;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn random_expr(seed: u64, basis: Basis, weight: u32) -> SymFunExpr {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parts = partitions_of(weight);
    let terms: Vec<_> = (0..3)
        .map(|_| (parts[rng.gen_range(0..parts.len())].clone(), rat(rng.gen_range(-6..=6), rng.gen_range(1..=3))))
        .collect();
    let mut acc = SymFunExpr::zero(basis, weight);
    for (lam, c) in terms {
        acc = acc.add(&SymFunExpr::element(basis, lam).scale(&c)).unwrap();
    }
    acc
}

#[test]
fn textbook_expansions_in_monomials() {
    let m = |e: SymFunExpr| e.convert(Basis::Monomial);
    let e2 = m(SymFunExpr::element(Basis::Elementary, p(&[2])));
    assert_eq!(e2.coeff(&p(&[1, 1])), rat(1, 1));
    assert_eq!(e2.coeff(&p(&[2])), rat(0, 1));
    let h2 = m(SymFunExpr::element(Basis::Complete, p(&[2])));
    assert_eq!((h2.coeff(&p(&[2])), h2.coeff(&p(&[1, 1]))), (rat(1, 1), rat(1, 1)));
    let p11 = m(SymFunExpr::element(Basis::PowerSum, p(&[1, 1])));
    assert_eq!((p11.coeff(&p(&[2])), p11.coeff(&p(&[1, 1]))), (rat(1, 1), rat(2, 1)));
    // e_3 = (p_1^3 - 3 p_2 p_1 + 2 p_3)/6
    let e3 = SymFunExpr::element(Basis::Elementary, p(&[3])).convert(Basis::PowerSum);
    assert_eq!(e3.coeff(&p(&[1, 1, 1])), rat(1, 6));
    assert_eq!(e3.coeff(&p(&[2, 1])), rat(-1, 2));
    assert_eq!(e3.coeff(&p(&[3])), rat(1, 3));
}

#[test]
fn involution_swaps_e_and_h_up_to_sign() {
    for n in 1..=6u32 {
        let e = SymFunExpr::element(Basis::Elementary, p(&[n]));
        let h = SymFunExpr::element(Basis::Complete, p(&[n])).convert(Basis::Elementary);
        let s = if n % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
        assert_eq!(e.sign_involution().convert(Basis::Elementary), h.scale(&s));
    }
}

#[test]
fn theta_tangent_maps_to_normal() {
    for n in 1..=6u32 {
        let t = theta_tangent_vector(n, 1);
        let normal = t.tangent_to_normal().unwrap();
        let want = theta_normal_vector(n, 1);
        assert_eq!(normal.values(), want.values(), "n = {n}");
        assert_eq!(normal.get(&Partition::single(n)), rat_int(factorial(n + 1)));
        assert_eq!(normal.normal_to_tangent().unwrap().to_basis(ChernBasis::ChernProduct).values(), t.values());
    }
}

#[test]
fn chern_vector_validation() {
    assert!(ChernVector::from_list(2, Frame::Tangent, ChernBasis::ChernProduct, vec![rat(1, 1)]).is_err());
    let v = ChernVector::from_list(2, Frame::Tangent, ChernBasis::ChernProduct, vec![rat(6, 1), rat(6, 1)]).unwrap();
    let m = v.to_basis(ChernBasis::Monomial);
    assert_eq!(m.to_list(), vec![rat(-6, 1), rat(6, 1)]);
}

proptest! {
    #[test]
    fn conversions_commute_through_third_basis(seed in any::<u64>(), w in 1u32..=8, a in 0usize..4, b in 0usize..4, c in 0usize..4) {
        let (a, b, c) = (Basis::ALL[a], Basis::ALL[b], Basis::ALL[c]);
        let x = random_expr(seed, a, w);
        prop_assert_eq!(x.convert(b), x.convert(c).convert(b));
        prop_assert_eq!(x.convert(b).convert(a), x);
    }

    #[test]
    fn involution_is_ring_automorphism(s1 in any::<u64>(), s2 in any::<u64>(), w1 in 1u32..=4, w2 in 1u32..=4) {
        let x = random_expr(s1, Basis::Elementary, w1);
        let y = random_expr(s2, Basis::Elementary, w2);
        let lhs = x.mul(&y).sign_involution().convert(Basis::Elementary);
        let rhs = x.sign_involution().mul(&y.sign_involution()).convert(Basis::Elementary);
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(x.sign_involution().sign_involution().convert(Basis::Elementary), x);
    }

    #[test]
    fn tangent_normal_round_trip(seed in any::<u64>(), w in 1u32..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let list: Vec<_> = partitions_of(w).iter().map(|_| rat(rng.gen_range(-50..=50), 1)).collect();
        let v = ChernVector::from_list(w, Frame::Tangent, ChernBasis::Monomial, list).unwrap();
        let back = v.tangent_to_normal().unwrap().normal_to_tangent().unwrap();
        prop_assert_eq!(back.values(), v.values());
    }
}
