//! Quantisation of the theta ring by the dual Landweber-Novikov algebra.
//!
//! A [`TensorElement`] is a polynomial in two families of generators: `t`
//! for the cobordism factor and `t'` for the dual algebra. The dual element
//! `S^lambda` is stored already evaluated, as `t'^lambda/(lambda+1)!`, so
//! the product on the `t'` side is ordinary polynomial multiplication and
//! dequantisation is `aug` on the `t` side followed by `t' -> t`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{format_rat, partition_factorial, partitions_up_to, rat_int, Partition, Rat};
use crate::ThetaPoly;

use super::ln_apply;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Partition, Partition), Rat>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut t = Self::zero();
        t.add_term(Partition::empty(), Partition::empty(), Rat::one());
        t
    }

    /// `a ⊗ b` with `b` a polynomial in the primed generators.
    pub fn pure(a: &ThetaPoly, b: &ThetaPoly) -> Self {
        let mut t = Self::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                t.add_term(ma.clone(), mb.clone(), ca * cb);
            }
        }
        t
    }

    pub fn add_term(&mut self, left: Partition, right: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let e = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Partition, &Rat)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Components of bi-weight `(i, j)`.
    pub fn bihomogeneous_component(&self, i: u32, j: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|((a, b), _)| a.weight() == i && b.weight() == j)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        TensorElement { terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.add_term(a1.union(a2), b1.union(b2), c1 * c2);
            }
        }
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, ((a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            out.push_str(match (i == 0, neg) {
                (true, true) => "-",
                (false, true) => " - ",
                (false, false) => " + ",
                _ => "",
            });
            if !mag.is_one() {
                out.push_str(&format_rat(&mag));
                out.push('*');
            }
            let left = ThetaPoly::monomial(a.clone(), Rat::one()).render("t");
            let right = ThetaPoly::monomial(b.clone(), Rat::one()).render("t'");
            out.push_str(&format!("{left}⊗{right}"));
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `q(x) = Σ_lambda S_lambda(x) ⊗ S^lambda`, with `S^∅ = 1`.
pub fn quantize(p: &ThetaPoly) -> TensorElement {
    let top = p.max_weight().unwrap_or(0);
    let mut out = TensorElement::zero();
    for lambda in partitions_up_to(top) {
        let s = ln_apply(&lambda, p);
        if s.is_zero() {
            continue;
        }
        let sigma = Rat::one() / rat_int(partition_factorial(&lambda));
        for (mono, c) in s.terms() {
            out.add_term(mono.clone(), lambda.clone(), c * &sigma);
        }
    }
    out
}

/// `aug ⊗ sigma`: keeps the constant part of the `t` factor, reads `t'` as `t`.
pub fn dequantize(t: &TensorElement) -> ThetaPoly {
    let mut out = ThetaPoly::zero();
    for (a, b, c) in t.terms() {
        if a.is_empty() {
            out.add_term(b.clone(), c.clone());
        }
    }
    out
}

/// Quantum Chern-Dold character at a point: `ch(x ⊗ s) = q(x) · s`.
pub fn quantum_chern_dold(x: &ThetaPoly, s: &TensorElement) -> TensorElement {
    quantize(x).mul(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_poly;

    #[test]
    fn quantize_t1() {
        let q = quantize(&ThetaPoly::generator(1));
        let want = TensorElement::pure(&ThetaPoly::generator(1), &ThetaPoly::one())
            .add(&TensorElement::pure(&ThetaPoly::one(), &ThetaPoly::generator(1)));
        assert_eq!(q, want);
        assert_eq!(q.render(), "t1⊗1 + 1⊗t'1");
    }

    #[test]
    fn roundtrip_and_product() {
        let p = parse_poly("t2*t1 - 3*t3 + 1/2").unwrap();
        assert_eq!(dequantize(&quantize(&p)), p);
        let t1 = ThetaPoly::generator(1);
        assert_eq!(quantize(&(&t1 * &t1)), quantize(&t1).mul(&quantize(&t1)));
        assert_eq!(quantum_chern_dold(&t1, &TensorElement::one()), quantize(&t1));
    }
}
