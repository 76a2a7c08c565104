use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Partition, Rat};
use crate::scalar::{CoeffRing, Scalar};

/// Sparse polynomial in the weight-graded generators `t1, t2, ...`.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GradedPoly<K> {
    terms: BTreeMap<Partition, K>,
}

fn merge(a: &[u32], b: &[u32]) -> Partition {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] >= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Partition::new(out)
}

impl<K: Scalar> GradedPoly<K> {
    pub fn new() -> Self {
        GradedPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(Partition::empty(), c)
    }

    pub fn monomial(mono: Partition, c: K) -> Self {
        let mut p = Self::new();
        p.add_term(mono, c);
        p
    }

    /// The generator `t_n`; `t_0` is the unit.
    pub fn generator(n: u32) -> Self {
        Self::monomial(Partition::new(vec![n]), K::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, K)>>(terms: I) -> Self {
        let mut p = Self::new();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, mono: Partition, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Partition) -> K {
        self.terms.get(mono).cloned().unwrap_or_else(K::zero)
    }

    /// Highest weight present, `None` for zero.
    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Partition::weight)
    }

    /// Largest generator index present (0 if only constants).
    pub fn max_generator(&self) -> u32 {
        self.terms.keys().filter_map(|m| m.parts().first().copied()).max().unwrap_or(0)
    }

    pub fn homogeneous_component(&self, w: u32) -> Self {
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == w)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when every term has weight `w` (the zero polynomial is homogeneous
    /// of every weight).
    pub fn is_homogeneous_of(&self, w: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    /// Augmentation: the coefficient of the unit monomial.
    pub fn aug(&self) -> K {
        self.coeff(&Partition::empty())
    }

    pub fn scale(&self, s: &K) -> Self {
        if s.is_zero() {
            return Self::new();
        }
        GradedPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.clone() * s.clone())).collect(),
        }
    }

    /// Image under the ring homomorphism `t_n -> phi(n)`.
    pub fn substitute<F>(&self, mut phi: F) -> Result<K>
    where
        F: FnMut(u32) -> Option<K>,
    {
        let mut cache: BTreeMap<u32, K> = BTreeMap::new();
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &g in m.parts() {
                let v = match cache.get(&g) {
                    Some(v) => v.clone(),
                    None => {
                        let v = phi(g).ok_or(Error::MissingAssignment(g))?;
                        cache.insert(g, v.clone());
                        v
                    }
                };
                term = term * v;
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Image under the ring endomorphism `t_n -> image(n)`.
    pub fn map_generators<F>(&self, mut image: F) -> Self
    where
        F: FnMut(u32) -> GradedPoly<K>,
    {
        let mut cache: BTreeMap<u32, GradedPoly<K>> = BTreeMap::new();
        let mut acc = Self::new();
        for (m, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for &g in m.parts() {
                let img = cache.entry(g).or_insert_with(|| image(g));
                term = &term * &*img;
            }
            acc += term;
        }
        acc
    }

    /// Multiplies the weight-`w` component by `factor(w)`.
    pub fn scale_by_weight<F>(&self, mut factor: F) -> Self
    where
        F: FnMut(u32) -> K,
    {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.clone() * factor(m.weight()))))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Renders with generator name `var` (`"t"` gives the canonical form).
    pub fn render(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = *c < K::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(m, var);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

pub(crate) fn render_monomial(m: &Partition, var: &str) -> String {
    let mut mults = m.multiplicities();
    mults.reverse();
    mults
        .iter()
        .map(|&(g, e)| if e == 1 { format!("{var}{g}") } else { format!("{var}{g}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

impl GradedPoly<Rat> {
    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// Least common multiple of the coefficient denominators (1 for zero).
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// True when all coefficients are positive integers.
    pub fn is_positive_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one() && *c > Rat::zero())
    }
}

impl<K: Scalar> Zero for GradedPoly<K> {
    fn zero() -> Self {
        Self::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: Scalar> One for GradedPoly<K> {
    fn one() -> Self {
        Self::constant(K::one())
    }
}

impl<K: Scalar> AddAssign for GradedPoly<K> {
    fn add_assign(&mut self, rhs: Self) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<'a, K: Scalar> AddAssign<&'a GradedPoly<K>> for GradedPoly<K> {
    fn add_assign(&mut self, rhs: &'a GradedPoly<K>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<K: Scalar> Add for GradedPoly<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<'a, K: Scalar> Add<&'a GradedPoly<K>> for &'a GradedPoly<K> {
    type Output = GradedPoly<K>;
    fn add(self, rhs: &'a GradedPoly<K>) -> GradedPoly<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Scalar> Neg for GradedPoly<K> {
    type Output = Self;
    fn neg(self) -> Self {
        GradedPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<K: Scalar> Sub for GradedPoly<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<'a, K: Scalar> Sub<&'a GradedPoly<K>> for &'a GradedPoly<K> {
    type Output = GradedPoly<K>;
    fn sub(self, rhs: &'a GradedPoly<K>) -> GradedPoly<K> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, K: Scalar> Mul<&'a GradedPoly<K>> for &'a GradedPoly<K> {
    type Output = GradedPoly<K>;
    fn mul(self, rhs: &'a GradedPoly<K>) -> GradedPoly<K> {
        let mut out = GradedPoly::new();
        if self.terms.is_empty() || rhs.terms.is_empty() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(merge(ma.parts(), mb.parts()), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<K: Scalar> Mul for GradedPoly<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<K: Scalar> CoeffRing for GradedPoly<K> {
    type Scalar = K;

    fn from_scalar(s: K) -> Self {
        Self::constant(s)
    }

    fn scale(&self, s: &K) -> Self {
        GradedPoly::scale(self, s)
    }

    fn constant_inverse(&self) -> Option<Self> {
        let c = self.as_constant()?;
        if c.is_zero() {
            None
        } else {
            Some(Self::constant(K::one() / c))
        }
    }

    fn as_constant(&self) -> Option<K> {
        match self.terms.len() {
            0 => Some(K::zero()),
            1 => self.terms.get(&Partition::empty()).cloned(),
            _ => None,
        }
    }

    fn is_homogeneous(&self, w: i64) -> bool {
        if w < 0 {
            self.terms.is_empty()
        } else {
            self.is_homogeneous_of(w as u32)
        }
    }
}

impl<K: Scalar> fmt::Display for GradedPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl<K: Scalar> fmt::Debug for GradedPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::graded::parse_poly;

    type P = GradedPoly<Rat>;

    fn t(n: u32) -> P {
        P::generator(n)
    }

    #[test]
    fn ring_examples() {
        let sq = &t(1) * &t(1);
        assert_eq!(sq.to_string(), "t1^2");
        assert!(sq.is_homogeneous_of(2));
        assert!((&(&t(1) + &t(2)) * &P::zero()).is_zero());
        let v2 = &(-t(2)) + &(&t(1) * &t(1)).scale(&rat(3, 2));
        assert_eq!((&v2 + &t(2)).to_string(), "3/2*t1^2");
    }

    #[test]
    fn rendering() {
        let v3 = parse_poly("t3 - 4*t1*t2 + 3*t1^3").unwrap();
        assert_eq!(v3.to_string(), "t3 - 4*t1*t2 + 3*t1^3");
        let v2 = parse_poly("3/2*t1^2 - t2").unwrap();
        assert_eq!(v2.to_string(), "-t2 + 3/2*t1^2");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(parse_poly("5 + 3*t1").unwrap().to_string(), "3*t1 + 5");
        assert_eq!(t(0), P::one());
    }

    #[test]
    fn substitution() {
        let todd = |n: u32| Some(if n % 2 == 0 { rat(1, 1) } else { rat(-1, 1) });
        assert_eq!(t(2).substitute(todd).unwrap(), rat(1, 1));
        let cp2 = parse_poly("3/2*t1^2 - 1/2*t2").unwrap();
        assert_eq!(cp2.substitute(todd).unwrap(), rat(1, 1));
        assert_eq!(P::one().substitute(|_| None).unwrap(), rat(1, 1));
        let err = t(3).substitute(|n| if n < 3 { Some(rat(1, 1)) } else { None });
        assert_eq!(err, Err(Error::MissingAssignment(3)));
    }

    #[test]
    fn augmentation_and_integrality() {
        assert_eq!(parse_poly("5 + 3*t1").unwrap().aug(), rat(5, 1));
        assert_eq!(parse_poly("t3*t1").unwrap().aug(), rat(0, 1));
        assert_eq!(P::zero().aug(), rat(0, 1));
        assert!(parse_poly("6*t1").unwrap().is_integral());
        assert!(!parse_poly("3/2*t1^2").unwrap().is_integral());
        assert!(P::zero().is_integral());
        assert_eq!(parse_poly("1/6*t2 + 1/4*t1^2").unwrap().denominator_lcm(), BigInt::from(12));
    }

    #[test]
    fn components() {
        let p = parse_poly("t2 + t1^2 + 7*t1 + 2").unwrap();
        assert_eq!(p.homogeneous_component(2).to_string(), "t2 + t1^2");
        assert_eq!(p.max_weight(), Some(2));
        assert!(!p.is_homogeneous_of(2));
        let scaled = p.scale_by_weight(|w| rat(2i64.pow(w), 1));
        assert_eq!(scaled.to_string(), "4*t2 + 4*t1^2 + 14*t1 + 2");
    }

    #[test]
    fn float_coefficients_work_too() {
        let p = GradedPoly::<f64>::generator(1) + GradedPoly::constant(0.5);
        let v = p.substitute(|_| Some(2.0)).unwrap();
        assert!((v - 2.5).abs() < 1e-15);
    }
}
