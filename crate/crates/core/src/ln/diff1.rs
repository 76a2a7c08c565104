//! The vector fields `S_(1)`, `S_(2)` on the group of formal diffeomorphisms
//! `x + Σ alpha_k x^{k+1}`, acting as derivations of `Q[alpha_1, alpha_2, ...]`.
//! Polynomials here use generator prefix `a`.

use num_traits::Zero;

use crate::exact::{rat_int, Partition, Rat};
use crate::ThetaPoly;

/// `S_(1) = d/da1 + Σ_{k≥2} k a_{k-1} d/da_k` or
/// `S_(2) = d/da2 + Σ_{k≥3} (k-1) a_{k-2} d/da_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Diff1Field {
    pub k: u32,
}

impl Diff1Field {
    pub const S1: Diff1Field = Diff1Field { k: 1 };
    pub const S2: Diff1Field = Diff1Field { k: 2 };

    /// Image of the coordinate `a_j`; `a_0` reads as `1`.
    pub fn on_generator(&self, j: u32) -> ThetaPoly {
        if j < self.k {
            return ThetaPoly::zero();
        }
        let c = if self.k == 1 { j } else { j - 1 };
        ThetaPoly::generator(j - self.k).scale(&rat_int(c))
    }

    /// Leibniz extension to polynomials.
    pub fn apply(&self, p: &ThetaPoly) -> ThetaPoly {
        let mut out = ThetaPoly::zero();
        for (mono, c) in p.terms() {
            for (g, mult) in mono.multiplicities() {
                let rest = mono.without(g).expect("part present");
                let d = &ThetaPoly::monomial(rest, c * rat_int(mult)) * &self.on_generator(g);
                out += d;
            }
        }
        out
    }
}

/// `[S_(1), S_(2)]` on each coordinate `a_1 .. a_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Diff1Report {
    pub images: Vec<(u32, ThetaPoly)>,
}

impl Diff1Report {
    pub fn render(&self) -> String {
        self.images
            .iter()
            .map(|(j, p)| format!("[S1,S2](a{j}) = {}", p.render("a")))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Coefficient pattern: `[S1,S2](a_j) = c_j a_{j-3}`.
    pub fn coefficients(&self) -> Vec<(u32, Rat)> {
        self.images
            .iter()
            .map(|(j, p)| {
                let mono = if *j >= 3 { Partition::new(vec![j - 3]) } else { Partition::empty() };
                (*j, p.coeff(&mono))
            })
            .collect()
    }
}

pub fn diff1_commutator(n: u32) -> Diff1Report {
    let (s1, s2) = (Diff1Field::S1, Diff1Field::S2);
    let images = (1..=n)
        .map(|j| {
            let a = ThetaPoly::generator(j);
            let v = s1.apply(&s2.apply(&a)) - s2.apply(&s1.apply(&a));
            (j, v)
        })
        .collect();
    Diff1Report { images }
}
