//! Symmetric functions of fixed weight in the monomial, elementary, complete
//! and power-sum bases.
//!
//! Every conversion passes through power sums, where the sign involution
//! `p_k -> -p_k` is diagonal. Transition matrices are built once per weight
//! and cached for the life of the process.
//!
//! [`ChernVector`] stores the characteristic numbers of a stably complex
//! manifold as a linear functional on weight-`n` symmetric functions:
//! the monomial basis gives `c_lambda` (the class `m_lambda` of the Chern
//! roots), the chern-product basis gives `c_{i1} ... c_{ik}` (the class
//! `e_lambda`). Tangent and normal numbers differ by the sign involution.

mod chern;
mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_rat, Partition, Rat};

pub use chern::{ChernBasis, ChernVector, Frame};
pub(crate) use tables::invert;

/// A basis of the weight-`n` symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial = 0,
    Elementary = 1,
    Complete = 2,
    PowerSum = 3,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::Monomial, Basis::Elementary, Basis::Complete, Basis::PowerSum];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::Complete => "h",
            Basis::PowerSum => "p",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.symbol() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown basis {s:?}")))
    }
}

/// A homogeneous symmetric function of weight `n` in a fixed basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunExpr {
    basis: Basis,
    weight: u32,
    terms: BTreeMap<Partition, Rat>,
}

impl SymFunExpr {
    pub fn zero(basis: Basis, weight: u32) -> Self {
        SymFunExpr { basis, weight, terms: BTreeMap::new() }
    }

    /// The basis element `b_lambda`.
    pub fn element(basis: Basis, lambda: Partition) -> Self {
        let weight = lambda.weight();
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Rat::one());
        SymFunExpr { basis, weight, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Rat)>>(basis: Basis, weight: u32, terms: I) -> Result<Self> {
        let mut out = Self::zero(basis, weight);
        for (lam, c) in terms {
            if lam.weight() != weight {
                return Err(Error::WeightMismatch { expected: weight, found: lam.weight() });
            }
            out.add_term(lam, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, lam: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(lam.clone()).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&lam);
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rat> {
        &self.terms
    }

    pub fn coeff(&self, lam: &Partition) -> Rat {
        self.terms.get(lam).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn coords(&self) -> Vec<Rat> {
        let t = tables::table(self.weight);
        let mut v = vec![Rat::zero(); t.parts.len()];
        for (lam, c) in &self.terms {
            v[t.index[lam]] = c.clone();
        }
        v
    }

    fn from_coords(basis: Basis, weight: u32, v: Vec<Rat>) -> Self {
        let t = tables::table(weight);
        let terms = t.parts.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()).collect();
        SymFunExpr { basis, weight, terms }
    }

    fn power_sum_coords(&self) -> Vec<Rat> {
        let t = tables::table(self.weight);
        tables::vec_mul(&self.coords(), t.to_p(self.basis))
    }

    /// Re-expresses the same symmetric function in `target`.
    pub fn convert(&self, target: Basis) -> SymFunExpr {
        if target == self.basis {
            return self.clone();
        }
        let t = tables::table(self.weight);
        let v = tables::vec_mul(&self.power_sum_coords(), t.from_p(target));
        Self::from_coords(target, self.weight, v)
    }

    /// The ring involution `p_k -> -p_k`, result in the same basis.
    pub fn sign_involution(&self) -> SymFunExpr {
        let t = tables::table(self.weight);
        let mut v = self.power_sum_coords();
        for (c, mu) in v.iter_mut().zip(&t.parts) {
            if mu.len() % 2 == 1 {
                *c = -c.clone();
            }
        }
        Self::from_coords(Basis::PowerSum, self.weight, v).convert(self.basis)
    }

    pub fn add(&self, other: &SymFunExpr) -> Result<SymFunExpr> {
        if other.weight != self.weight {
            return Err(Error::WeightMismatch { expected: self.weight, found: other.weight });
        }
        let mut out = self.clone();
        for (lam, c) in &other.convert(self.basis).terms {
            out.add_term(lam.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rat) -> SymFunExpr {
        let terms = self.terms.iter().map(|(l, c)| (l.clone(), c * s)).filter(|(_, c)| !c.is_zero()).collect();
        SymFunExpr { basis: self.basis, weight: self.weight, terms }
    }

    /// Product, returned in the basis of `self`.
    pub fn mul(&self, other: &SymFunExpr) -> SymFunExpr {
        let a = self.convert(Basis::PowerSum);
        let b = other.convert(Basis::PowerSum);
        let mut out = SymFunExpr::zero(Basis::PowerSum, self.weight + other.weight);
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                out.add_term(la.union(lb), ca * cb);
            }
        }
        out.convert(self.basis)
    }
}

impl fmt::Display for SymFunExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (lam, c) in self.terms.iter().rev() {
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                _ => {}
            }
            if !mag.is_one() {
                write!(f, "{}*", format_rat(&mag))?;
            }
            write!(f, "{}[{}]", self.basis, lam)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_conversions() {
        let e2 = SymFunExpr::element(Basis::Elementary, p("2"));
        assert_eq!(e2.convert(Basis::Monomial), SymFunExpr::element(Basis::Monomial, p("1,1")));

        let h2 = SymFunExpr::element(Basis::Complete, p("2")).convert(Basis::Elementary);
        let want = SymFunExpr::from_terms(Basis::Elementary, 2, [(p("1,1"), rat(1, 1)), (p("2"), rat(-1, 1))]).unwrap();
        assert_eq!(h2, want);

        let p2 = SymFunExpr::element(Basis::PowerSum, p("2")).convert(Basis::Elementary);
        let want = SymFunExpr::from_terms(Basis::Elementary, 2, [(p("1,1"), rat(1, 1)), (p("2"), rat(-2, 1))]).unwrap();
        assert_eq!(p2, want);
    }

    #[test]
    fn involution_examples() {
        let p1 = SymFunExpr::element(Basis::PowerSum, p("1"));
        assert_eq!(p1.sign_involution(), p1.scale(&rat(-1, 1)));
        let e1 = SymFunExpr::element(Basis::Elementary, p("1"));
        assert_eq!(e1.sign_involution(), e1.scale(&rat(-1, 1)));
        let e2 = SymFunExpr::element(Basis::Elementary, p("2"));
        assert_eq!(e2.sign_involution(), SymFunExpr::element(Basis::Complete, p("2")).convert(Basis::Elementary));
    }

    #[test]
    fn display() {
        let x = SymFunExpr::element(Basis::Complete, p("2")).convert(Basis::Elementary);
        assert_eq!(x.to_string(), "-e[2] + e[1,1]");
        assert_eq!("h".parse::<Basis>().unwrap(), Basis::Complete);
    }
}
