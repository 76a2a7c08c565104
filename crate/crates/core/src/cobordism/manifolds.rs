use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, partition_factorial, partitions_of, rat_int, Partition, Rat};
use crate::symfun::{ChernBasis, ChernVector, Frame};
use crate::ThetaPoly;

use super::v_classes;

/// Tangent Chern-product numbers of `Θ^n(k)`: all equal `(-1)^n k^{n+1} (n+1)!`.
pub fn theta_tangent_vector(n: u32, k: u32) -> ChernVector {
    let mut v = rat_int(BigInt::from(k).pow(n + 1) * factorial(n + 1));
    if n % 2 == 1 {
        v = -v;
    }
    ChernVector::constant(n, Frame::Tangent, ChernBasis::ChernProduct, v)
}

/// Normal monomial numbers of `Θ^n(k)`: `k^{n+1} (n+1)!` on `(n)`, zero elsewhere.
pub fn theta_normal_vector(n: u32, k: u32) -> ChernVector {
    let top = rat_int(BigInt::from(k).pow(n + 1) * factorial(n + 1));
    let values = partitions_of(n)
        .into_iter()
        .map(|p| {
            let v = if p.one_part() == Some(n) { top.clone() } else { Rat::zero() };
            (p, v)
        })
        .collect();
    ChernVector::new(n, Frame::Normal, ChernBasis::Monomial, values).expect("complete by construction")
}

/// Tangent monomial numbers of `CP^n` from `c(T) = (1+x)^{n+1}`: `m_lambda`
/// evaluated on `n+1` equal roots counts the distinct placements of `lambda`.
pub fn cp_tangent_vector(n: u32) -> ChernVector {
    let values = partitions_of(n)
        .into_iter()
        .map(|lam| {
            let len = lam.len() as u32;
            let v = if len > n + 1 {
                Rat::zero()
            } else {
                let denom: BigInt = lam.multiplicities().iter().map(|&(_, m)| factorial(m)).product::<BigInt>()
                    * factorial(n + 1 - len);
                rat_int(factorial(n + 1)) / rat_int(denom)
            };
            (lam, v)
        })
        .collect();
    ChernVector::new(n, Frame::Tangent, ChernBasis::Monomial, values).expect("complete by construction")
}

/// Normal numbers of `M x N`: `m_omega` splits as `Σ m_lambda ⊗ m_mu` over
/// the ways of writing `omega` as a union of partitions of the two weights.
pub fn product_normal_vector(a: &ChernVector, b: &ChernVector) -> ChernVector {
    let a = a.normal_monomial();
    let b = b.normal_monomial();
    let n = a.weight() + b.weight();
    let mut values: BTreeMap<Partition, Rat> = partitions_of(n).into_iter().map(|p| (p, Rat::zero())).collect();
    for (la, va) in a.values() {
        for (lb, vb) in b.values() {
            if va.is_zero() || vb.is_zero() {
                continue;
            }
            *values.get_mut(&la.union(lb)).unwrap() += va * vb;
        }
    }
    ChernVector::new(n, Frame::Normal, ChernBasis::Monomial, values).expect("complete by construction")
}

fn monomial_power(family: &[ThetaPoly], lam: &Partition) -> ThetaPoly {
    lam.parts().iter().fold(ThetaPoly::one(), |acc, &k| &acc * &family[k as usize])
}

/// `Σ_lambda c^nu_lambda t^lambda / (lambda+1)!`; the vector is converted to
/// normal monomial numbers first.
pub fn decompose(c: &ChernVector) -> ThetaPoly {
    let c = c.normal_monomial();
    let mut out = ThetaPoly::zero();
    for (lam, v) in c.values() {
        if !v.is_zero() {
            out.add_term(lam.clone(), v / rat_int(partition_factorial(lam)));
        }
    }
    out
}

/// `Σ_lambda (-1)^{|lambda|} c_lambda v^lambda / (lambda+1)!` over tangent
/// monomial numbers.
pub fn decompose_tangent(c: &ChernVector) -> Result<ThetaPoly> {
    let c = c.tangent_monomial();
    let n = c.weight();
    let v = v_classes(n as usize)?;
    let sign = if n % 2 == 0 { Rat::one() } else { -Rat::one() };
    let mut out = ThetaPoly::zero();
    for (lam, val) in c.values() {
        if val.is_zero() {
            continue;
        }
        let coeff = &sign * val / rat_int(partition_factorial(lam));
        out += monomial_power(&v, lam).scale(&coeff);
    }
    if !out.is_homogeneous_of(n) && !out.is_zero() {
        return Err(Error::WeightMismatch { expected: n, found: out.max_weight().unwrap_or(0) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cobordism::cp_classes;

    #[test]
    fn theta_vectors_decompose_to_generators() {
        for n in 1..=5 {
            let t = ThetaPoly::generator(n);
            assert_eq!(decompose(&theta_normal_vector(n, 1)), t);
            assert_eq!(decompose(&theta_tangent_vector(n, 1)), t);
            assert_eq!(decompose_tangent(&theta_tangent_vector(n, 1)).unwrap(), t);
        }
    }

    #[test]
    fn projective_spaces() {
        let cp = cp_classes(4).unwrap();
        for n in 1..=4u32 {
            let c = cp_tangent_vector(n);
            assert_eq!(decompose_tangent(&c).unwrap(), cp[n as usize], "n = {n}");
            assert_eq!(decompose(&c), cp[n as usize]);
        }
        // c_1[CP^1] = 2, c_1^2[CP^2] = 9
        assert_eq!(cp_tangent_vector(1).get(&Partition::single(1)), rat_int(2));
        let c2 = cp_tangent_vector(2).to_basis(ChernBasis::ChernProduct);
        assert_eq!(c2.get(&"1,1".parse().unwrap()), rat_int(9));
    }

    #[test]
    fn zero_vector() {
        let z = ChernVector::constant(3, Frame::Normal, ChernBasis::Monomial, Rat::zero());
        assert!(decompose(&z).is_zero());
        assert!(decompose_tangent(&z).unwrap().is_zero());
    }
}
