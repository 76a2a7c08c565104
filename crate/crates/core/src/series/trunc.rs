use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::factorial;
use crate::scalar::{scalar_from_i64, CoeffRing, Scalar};

/// Power series `Σ_{m=0}^{N} f_m z^m` truncated at order `N`.
///
/// When `grade_shift` is `Some(s)` every `f_m` is asserted to be homogeneous
/// of weight `m - s`; see [`TruncSeries::check_grading`].
#[derive(Clone, PartialEq)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
    grade_shift: Option<i64>,
}

fn inv_factorial<K: Scalar>(n: u32) -> K {
    K::one() / K::from_bigint(&factorial(n))
}

impl<C: CoeffRing> TruncSeries<C> {
    /// Builds a series of order `order`, padding with zeros or dropping the
    /// tail of `coeffs` as needed.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncSeries { coeffs, grade_shift: None }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The series `z`.
    pub fn var(order: usize) -> Self {
        let mut s = Self::new(vec![C::zero(), C::one()], order);
        s.grade_shift = Some(1);
        s
    }

    /// `Σ_{n≥0} a_n z^{n+shift} / (n+1)!`.
    pub fn from_theta_egf(a: &[C], shift: usize, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        for (n, an) in a.iter().enumerate() {
            let m = n + shift;
            if m > order {
                break;
            }
            coeffs[m] = an.scale(&inv_factorial::<C::Scalar>(n as u32 + 1));
        }
        TruncSeries { coeffs, grade_shift: None }
    }

    /// Inverse of [`from_theta_egf`](Self::from_theta_egf): `a_n = (n+1)! [z^{n+shift}] f`.
    pub fn theta_egf_coeffs(&self, shift: usize) -> Vec<C> {
        (shift..=self.order())
            .map(|m| {
                let n = (m - shift) as u32;
                self.coeffs[m].scale(&C::Scalar::from_bigint(&factorial(n + 1)))
            })
            .collect()
    }

    /// `Σ a_n z^n / n!`.
    pub fn from_hurwitz(a: &[C], order: usize) -> Self {
        let coeffs = a
            .iter()
            .take(order + 1)
            .enumerate()
            .map(|(n, an)| an.scale(&inv_factorial::<C::Scalar>(n as u32)))
            .collect();
        Self::new(coeffs, order)
    }

    /// `a_n = n! [z^n] f`.
    pub fn hurwitz_coeffs(&self) -> Vec<C> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&C::Scalar::from_bigint(&factorial(n as u32))))
            .collect()
    }

    pub fn with_grade_shift(mut self, shift: Option<i64>) -> Self {
        self.grade_shift = shift;
        self
    }

    pub fn grade_shift(&self) -> Option<i64> {
        self.grade_shift
    }

    /// True unless a grade shift is set and some coefficient violates it.
    pub fn check_grading(&self) -> bool {
        match self.grade_shift {
            None => true,
            Some(s) => self.coeffs.iter().enumerate().all(|(m, c)| c.is_homogeneous(m as i64 - s)),
        }
    }

    fn graded(self) -> Self {
        debug_assert!(self.check_grading(), "grade shift {:?} violated", self.grade_shift);
        self
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `z^m`.
    pub fn coefficient(&self, m: usize) -> Result<&C> {
        self.coeffs.get(m).ok_or(Error::Truncation { needed: m, available: self.order() })
    }

    /// Same series at a lower (or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncSeries { coeffs: self.coeffs[..=order].to_vec(), grade_shift: self.grade_shift }
    }

    pub fn map_coeffs<D: CoeffRing, F: FnMut(&C) -> D>(&self, f: F) -> TruncSeries<D> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect(), grade_shift: None }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|m| self.coeffs[m].clone() + other.coeffs[m].clone()).collect();
        let shift = if self.grade_shift == other.grade_shift { self.grade_shift } else { None };
        TruncSeries { coeffs, grade_shift: shift }.graded()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            grade_shift: self.grade_shift,
        }
    }

    pub fn scale(&self, s: &C::Scalar) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect(),
            grade_shift: self.grade_shift,
        }
    }

    /// Multiplies every coefficient by a ring element.
    pub fn mul_coeff(&self, c: &C) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
            grade_shift: None,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = std::mem::replace(&mut coeffs[i + j], C::zero()) + a.clone() * b.clone();
            }
        }
        let shift = match (self.grade_shift, other.grade_shift) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        TruncSeries { coeffs, grade_shift: shift }.graded()
    }

    /// `f(z) * z`, keeping the order (the top coefficient falls off).
    pub fn mul_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(C::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        TruncSeries { coeffs, grade_shift: self.grade_shift.map(|s| s + 1) }
    }

    /// `f(z) / z` for `f_0 = 0`; the result has order `N - 1`.
    pub fn div_z(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidParameter("division by z needs zero constant term".into()));
        }
        if self.order() == 0 {
            return Err(Error::Truncation { needed: 1, available: 0 });
        }
        Ok(TruncSeries { coeffs: self.coeffs[1..].to_vec(), grade_shift: self.grade_shift.map(|s| s - 1) })
    }

    /// Multiplicative inverse; needs a nonzero scalar constant term.
    pub fn inv(&self) -> Result<Self> {
        let c = self.coeffs[0].constant_inverse().ok_or(Error::NonInvertibleSeries)?;
        let n = self.order();
        let mut g: Vec<C> = Vec::with_capacity(n + 1);
        g.push(c.clone());
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() && !g[m - k].is_zero() {
                    acc = acc + self.coeffs[k].clone() * g[m - k].clone();
                }
            }
            g.push(-(c.clone() * acc));
        }
        let shift = self.grade_shift.filter(|&s| s == 0);
        Ok(TruncSeries { coeffs: g, grade_shift: shift }.graded())
    }

    /// `f^k`; negative `k` goes through [`inv`](Self::inv).
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.order());
        if base.grade_shift.is_some() {
            acc.grade_shift = Some(0);
        }
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// `f(g(z))`; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::CompositionDomain);
        }
        let n = self.order().min(g.order());
        let g = g.truncate(n);
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for m in (0..n).rev() {
            acc = acc.mul(&g);
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[m].clone();
        }
        acc.grade_shift = match g.grade_shift {
            Some(1) => self.grade_shift,
            _ => None,
        };
        Ok(acc.graded())
    }

    /// Compositional inverse of a series `z + f_2 z^2 + ...`, solved order by
    /// order: `g_m` is the only unknown entering `[z^m] f(g)` linearly.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() < 1 || !self.coeffs[1].is_one() {
            return Err(Error::NotNormalized);
        }
        let n = self.order();
        // powers[k][m] = [z^m] g^k for the part of g known so far
        let mut g = vec![C::zero(); n + 1];
        g[1] = C::one();
        let mut powers: Vec<Vec<C>> = vec![vec![C::zero(); n + 1]; n + 1];
        for k in 1..=n {
            powers[k][k] = C::one();
        }
        for m in 2..=n {
            for k in 2..=m {
                // [z^m] g^k = Σ_j g_j [z^{m-j}] g^{k-1}, all with m-j < m
                let mut acc = C::zero();
                for j in 1..=(m - k + 1) {
                    if !g[j].is_zero() && !powers[k - 1][m - j].is_zero() {
                        acc = acc + g[j].clone() * powers[k - 1][m - j].clone();
                    }
                }
                powers[k][m] = acc;
            }
            let mut acc = C::zero();
            for k in 2..=m {
                if !self.coeffs[k].is_zero() && !powers[k][m].is_zero() {
                    acc = acc + self.coeffs[k].clone() * powers[k][m].clone();
                }
            }
            g[m] = -acc;
            powers[1][m] = g[m].clone();
        }
        Ok(TruncSeries { coeffs: g, grade_shift: self.grade_shift }.graded())
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ExpLogDomain);
        }
        let n = self.order();
        let mut g = vec![C::zero(); n + 1];
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..m {
                if !g[k].is_zero() && !self.coeffs[m - k].is_zero() {
                    acc = acc + g[k].scale(&scalar_from_i64(k as i64)) * self.coeffs[m - k].clone();
                }
            }
            let inv_m = C::Scalar::one() / scalar_from_i64::<C::Scalar>(m as i64);
            g[m] = self.coeffs[m].clone() - acc.scale(&inv_m);
        }
        Ok(TruncSeries { coeffs: g, grade_shift: self.grade_shift }.graded())
    }

    /// Formal exponential of a series with constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpLogDomain);
        }
        let n = self.order();
        let mut e = vec![C::zero(); n + 1];
        e[0] = C::one();
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() && !e[m - k].is_zero() {
                    acc = acc + self.coeffs[k].scale(&scalar_from_i64(k as i64)) * e[m - k].clone();
                }
            }
            e[m] = acc.scale(&(C::Scalar::one() / scalar_from_i64::<C::Scalar>(m as i64)));
        }
        Ok(TruncSeries { coeffs: e, grade_shift: self.grade_shift }.graded())
    }

    /// `(n+1)! [z^{n+1}] f^{k+1}`: the residue pairing of `f^{k+1}` against
    /// `dz / z^{n+2}`, scaled by `(n+1)!`.
    pub fn residue_extract(&self, n: usize, k: usize) -> Result<C> {
        if n + 1 > self.order() {
            return Err(Error::Truncation { needed: n + 1, available: self.order() });
        }
        if k > n {
            return Err(Error::InvalidParameter(format!("need k <= n, got k={k}, n={n}")));
        }
        let p = self.pow(k as i64 + 1)?;
        Ok(p.coeffs[n + 1].scale(&C::Scalar::from_bigint(&factorial(n as u32 + 1))))
    }

    pub fn render(&self) -> String
    where
        C: fmt::Display,
    {
        let mut out = String::new();
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let zpow = match m {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{m}"),
            };
            let multi = s.trim_start_matches('-').contains(' ');
            let (neg, body) = if !multi && s.starts_with('-') { (true, &s[1..]) } else { (false, s.as_str()) };
            let term = if zpow.is_empty() {
                if multi { format!("({body})") } else { body.to_string() }
            } else if body == "1" {
                zpow
            } else if multi {
                format!("({body})*{zpow}")
            } else {
                format!("{body}*{zpow}")
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        let tail = format!("O(z^{})", self.order() + 1);
        if out.is_empty() {
            tail
        } else {
            format!("{out} + {tail}")
        }
    }
}

impl<C: CoeffRing + fmt::Display> fmt::Display for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<C: CoeffRing + fmt::Debug> fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncSeries")
            .field("coeffs", &self.coeffs)
            .field("grade_shift", &self.grade_shift)
            .finish()
    }
}
