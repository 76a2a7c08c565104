use std::collections::HashMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use theta_cobordism::acceptance::random_poly;
use theta_cobordism::exact::rat;
use theta_cobordism::{parse_poly, Rat, ThetaPoly};

fn poly(seed: u64, w: u32) -> ThetaPoly {
    random_poly(&mut ChaCha8Rng::seed_from_u64(seed), w)
}

#[test]
fn parser_examples() {
    let p = parse_poly("(t1 + 1/2)^2 - t1*t1").unwrap();
    assert_eq!(p, parse_poly("t1 + 1/4").unwrap());
    assert_eq!(parse_poly("2 * t3 - t1 ^ 3").unwrap().render("t"), "2*t3 - t1^3");
    assert!(parse_poly("t0x").is_err());
    assert!(parse_poly("1/0").is_err());
    assert!(parse_poly("t1 +").is_err());
}

proptest! {
    #[test]
    fn mul_commutative_associative(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (x, y, z) = (poly(a, 4), poly(b, 4), poly(c, 4));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn aug_is_multiplicative(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (poly(a, 6), poly(b, 6));
        prop_assert_eq!((&x * &y).aug(), x.aug() * y.aug());
    }

    #[test]
    fn substitute_is_multiplicative(a in any::<u64>(), b in any::<u64>(), s in any::<u64>()) {
        let (x, y) = (poly(a, 6), poly(b, 6));
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let phi: HashMap<u32, Rat> = (1..=6).map(|g| (g, rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)))).collect();
        let ev = |p: &ThetaPoly| p.substitute(|g| phi.get(&g).cloned()).unwrap();
        prop_assert_eq!(ev(&(&x * &y)), ev(&x) * ev(&y));
        prop_assert_eq!(ev(&(&x + &y)), ev(&x) + ev(&y));
    }

    #[test]
    fn render_parse_round_trip(a in any::<u64>()) {
        let x = poly(a, 8);
        prop_assert_eq!(parse_poly(&x.render("t")).unwrap(), x);
    }
}
