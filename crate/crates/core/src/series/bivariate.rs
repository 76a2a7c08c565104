use num_traits::Zero;

use super::TruncSeries;
use crate::scalar::{CoeffRing, Scalar};

/// Bivariate series `Σ f_{i,j} u^i v^j` truncated by total degree `i + j <= N`.
///
/// Stored triangularly: row `i` holds `f_{i,0}, ..., f_{i,N-i}`.
#[derive(Clone, PartialEq, Debug)]
pub struct BiTruncSeries<C> {
    rows: Vec<Vec<C>>,
}

impl<C: CoeffRing> BiTruncSeries<C> {
    pub fn zero(order: usize) -> Self {
        BiTruncSeries { rows: (0..=order).map(|i| vec![C::zero(); order + 1 - i]).collect() }
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// `f_{i,j}`, zero beyond the truncation.
    pub fn coeff(&self, i: usize, j: usize) -> C {
        self.rows.get(i).and_then(|r| r.get(j)).cloned().unwrap_or_else(C::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, c: C) {
        if i + j <= self.order() {
            self.rows[i][j] = c;
        }
    }

    /// `f(u)` viewed as a bivariate series.
    pub fn from_u(f: &TruncSeries<C>, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (i, c) in f.coeffs().iter().enumerate().take(order + 1) {
            out.rows[i][0] = c.clone();
        }
        out
    }

    /// `f(v)` viewed as a bivariate series.
    pub fn from_v(f: &TruncSeries<C>, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (j, c) in f.coeffs().iter().enumerate().take(order + 1) {
            out.rows[0][j] = c.clone();
        }
        out
    }

    /// `f(u + v)`.
    pub fn from_sum(f: &TruncSeries<C>, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (m, c) in f.coeffs().iter().enumerate().take(order + 1) {
            if c.is_zero() {
                continue;
            }
            for i in 0..=m {
                let b = crate::exact::binomial(m as u32, i as u32);
                out.rows[i][m - i] = c.scale(&C::Scalar::from_bigint(&b));
            }
        }
        out
    }

    /// Nonzero coefficients `((i, j), f_{i,j})` in row-major order.
    pub fn nonzero_terms(&self) -> Vec<((usize, usize), C)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push(((i, j), c.clone()));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    /// `f(v, u)`.
    pub fn swap(&self) -> Self {
        let mut out = Self::zero(self.order());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                out.rows[j][i] = c.clone();
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swap()
    }

    /// The `v = 0` slice `f(u, 0)`.
    pub fn at_v_zero(&self) -> TruncSeries<C> {
        TruncSeries::new(self.rows.iter().map(|r| r[0].clone()).collect(), self.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Self::zero(n);
        for i in 0..=n {
            for j in 0..=(n - i) {
                out.rows[i][j] = self.rows[i][j].clone() + other.rows[i][j].clone();
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Self::zero(n);
        for i in 0..=n {
            for j in 0..=(n - i) {
                out.rows[i][j] = self.rows[i][j].clone() - other.rows[i][j].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Self::zero(n);
        for i1 in 0..=n {
            for j1 in 0..=(n - i1) {
                let a = &self.rows[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=(n - i1 - j1) {
                    for j2 in 0..=(n - i1 - j1 - i2) {
                        let b = &other.rows[i2][j2];
                        if b.is_zero() {
                            continue;
                        }
                        let slot = &mut out.rows[i1 + i2][j1 + j2];
                        *slot = std::mem::replace(slot, C::zero()) + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    /// `f(g(u, v))` for univariate `f` and `g` with zero constant term.
    pub fn compose_outer(f: &TruncSeries<C>, g: &Self) -> crate::Result<Self> {
        if !g.rows[0][0].is_zero() {
            return Err(crate::Error::CompositionDomain);
        }
        let n = f.order().min(g.order());
        let mut acc = Self::zero(n);
        acc.rows[0][0] = f.coeffs()[n].clone();
        for m in (0..n).rev() {
            acc = acc.mul(g);
            acc.rows[0][0] = acc.rows[0][0].clone() + f.coeffs()[m].clone();
        }
        Ok(acc)
    }

    /// `F(x, y)` for bivariate `x`, `y` with zero constant terms.
    pub fn substitute(&self, x: &Self, y: &Self) -> crate::Result<Self> {
        if !x.rows[0][0].is_zero() || !y.rows[0][0].is_zero() {
            return Err(crate::Error::CompositionDomain);
        }
        let n = self.order().min(x.order()).min(y.order());
        let mut one = Self::zero(n);
        one.rows[0][0] = C::one();
        let mut xp = vec![one.clone()];
        let mut yp = vec![one];
        for k in 1..=n {
            xp.push(xp[k - 1].mul(x));
            yp.push(yp[k - 1].mul(y));
        }
        let mut acc = Self::zero(n);
        for i in 0..=n {
            for j in 0..=(n - i) {
                let c = &self.rows[i][j];
                if c.is_zero() {
                    continue;
                }
                let term = xp[i].mul(&yp[j]);
                for (a, row) in term.rows.iter().enumerate() {
                    for (b, t) in row.iter().enumerate() {
                        if !t.is_zero() {
                            let slot = &mut acc.rows[a][b];
                            *slot = std::mem::replace(slot, C::zero()) + c.clone() * t.clone();
                        }
                    }
                }
            }
        }
        Ok(acc)
    }
}
