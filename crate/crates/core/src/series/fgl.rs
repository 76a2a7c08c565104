
use super::{BiTruncSeries, TruncSeries};
use crate::error::Result;
use crate::scalar::CoeffRing;

/// `F(u, v) = e(l(u) + l(v))` where `l` is the compositional inverse of the
/// exponential `e = z + O(z^2)`.
pub fn formal_group_law<C: CoeffRing>(exp: &TruncSeries<C>, order: usize) -> Result<BiTruncSeries<C>> {
    let exp = exp.truncate(order);
    let log = exp.revert()?;
    let arg = BiTruncSeries::from_u(&log, order).add(&BiTruncSeries::from_v(&log, order));
    BiTruncSeries::compose_outer(&exp, &arg)
}

/// `F(e(z), e(w)) - e(z + w)`; identically zero when `F` is the group law of `e`.
pub fn exp_identity_residual<C: CoeffRing>(
    fgl: &BiTruncSeries<C>,
    exp: &TruncSeries<C>,
    order: usize,
) -> Result<BiTruncSeries<C>> {
    let ez = BiTruncSeries::from_u(exp, order);
    let ew = BiTruncSeries::from_v(exp, order);
    let lhs = fgl.substitute(&ez, &ew)?;
    Ok(lhs.sub(&BiTruncSeries::from_sum(exp, order)))
}

/// Number of nonzero residual coefficients per formal-group axiom.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct FglCheck {
    pub order: usize,
    pub unit: usize,
    pub symmetry: usize,
    pub associativity: usize,
    pub exp_identity: usize,
}

impl FglCheck {
    pub fn run<C: CoeffRing>(exp: &TruncSeries<C>, order: usize) -> Result<Self> {
        let f = formal_group_law(exp, order)?;
        let mut x = TruncSeries::zero(order);
        x = x.add(&TruncSeries::var(order));
        let unit = f.at_v_zero().sub(&x).coeffs().iter().filter(|c| !c.is_zero()).count();
        let symmetry = f.sub(&f.swap()).nonzero_terms().len();
        let associativity = associativity_residual(&f).len();
        let exp_identity = exp_identity_residual(&f, exp, order)?.nonzero_terms().len();
        Ok(FglCheck { order, unit, symmetry, associativity, exp_identity })
    }

    pub fn all_zero(&self) -> bool {
        self.unit == 0 && self.symmetry == 0 && self.associativity == 0 && self.exp_identity == 0
    }
}

/// Dense trivariate series truncated by total degree, only used to state
/// associativity.
struct Tri<C> {
    n: usize,
    c: Vec<C>,
}

impl<C: CoeffRing> Tri<C> {
    fn idx(n: usize, i: usize, j: usize, k: usize) -> usize {
        (i * (n + 1) + j) * (n + 1) + k
    }

    fn zero(n: usize) -> Self {
        Tri { n, c: vec![C::zero(); (n + 1).pow(3)] }
    }

    fn one(n: usize) -> Self {
        let mut t = Self::zero(n);
        t.c[0] = C::one();
        t
    }

    fn get(&self, i: usize, j: usize, k: usize) -> &C {
        &self.c[Self::idx(self.n, i, j, k)]
    }

    fn add_at(&mut self, i: usize, j: usize, k: usize, v: C) {
        let at = Self::idx(self.n, i, j, k);
        self.c[at] = std::mem::replace(&mut self.c[at], C::zero()) + v;
    }

    fn terms(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..=n {
            for j in 0..=(n - i) {
                for k in 0..=(n - i - j) {
                    out.push((i, j, k));
                }
            }
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        let terms = self.terms();
        for &(i1, j1, k1) in &terms {
            let a = self.get(i1, j1, k1);
            if a.is_zero() {
                continue;
            }
            for &(i2, j2, k2) in &terms {
                if i1 + j1 + k1 + i2 + j2 + k2 > n {
                    continue;
                }
                let b = other.get(i2, j2, k2);
                if !b.is_zero() {
                    out.add_at(i1 + i2, j1 + j2, k1 + k2, a.clone() * b.clone());
                }
            }
        }
        out
    }

    /// Embeds a bivariate series in two of the three slots.
    fn embed(f: &BiTruncSeries<C>, slots: (usize, usize), n: usize) -> Self {
        let mut out = Self::zero(n);
        for ((a, b), c) in f.nonzero_terms() {
            let mut e = [0usize; 3];
            e[slots.0] += a;
            e[slots.1] += b;
            if e.iter().sum::<usize>() <= n {
                out.add_at(e[0], e[1], e[2], c);
            }
        }
        out
    }

    fn substitute(f: &BiTruncSeries<C>, x: &Self, y: &Self) -> Self {
        let n = x.n;
        let mut xp = vec![Self::one(n)];
        let mut yp = vec![Self::one(n)];
        for k in 1..=n {
            xp.push(xp[k - 1].mul(x));
            yp.push(yp[k - 1].mul(y));
        }
        let mut acc = Self::zero(n);
        for ((i, j), c) in f.nonzero_terms() {
            if i + j > n {
                continue;
            }
            let term = xp[i].mul(&yp[j]);
            for (a, b, d) in term.terms() {
                let t = term.get(a, b, d);
                if !t.is_zero() {
                    acc.add_at(a, b, d, c.clone() * t.clone());
                }
            }
        }
        acc
    }
}

/// Nonzero coefficients `((i, j, k), r)` of `F(F(u,v),w) - F(u,F(v,w))`.
pub(crate) fn associativity_residual<C: CoeffRing>(f: &BiTruncSeries<C>) -> Vec<((usize, usize, usize), C)> {
    let n = f.order();
    let uv = Tri::embed(f, (0, 1), n);
    let vw = Tri::embed(f, (1, 2), n);
    let mut u = Tri::zero(n);
    let mut v = Tri::zero(n);
    let mut w = Tri::zero(n);
    if n >= 1 {
        u.add_at(1, 0, 0, C::one());
        v.add_at(0, 1, 0, C::one());
        w.add_at(0, 0, 1, C::one());
    }
    let _ = v;
    let left = Tri::substitute(f, &uv, &w);
    let right = Tri::substitute(f, &u, &vw);
    let mut out = Vec::new();
    for (i, j, k) in left.terms() {
        let r = left.get(i, j, k).clone() - right.get(i, j, k).clone();
        if !r.is_zero() {
            out.push(((i, j, k), r));
        }
    }
    out
}
