//! Landweber-Novikov operations on the theta ring.
//!
//! On generators `S_(k)(t_n) = (n+1)! [z^{n+1}] beta(z)^{k+1}` (zero for
//! `k > n`) and `S_lambda(t_n) = 0` for partitions with two or more parts.
//! Products follow the Cartan rule
//! `S_lambda(xy) = Σ_{lambda' ∪ lambda'' = lambda} S_lambda'(x) S_lambda''(y)`,
//! each ordered pair of sub-multisets counted once.

mod diff1;
mod quantum;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::cobordism::beta;
use crate::error::{Error, Result};
use crate::exact::{factorial, partition_factorial, rat_int, Partition, Rat};
use crate::{ThetaPoly, ThetaSeries, DEFAULT_MAX_WEIGHT};

pub use diff1::{diff1_commutator, Diff1Field, Diff1Report};
pub use quantum::{dequantize, quantize, quantum_chern_dold, TensorElement};

static TABLE: OnceLock<RwLock<Vec<Vec<ThetaPoly>>>> = OnceLock::new();

fn build_table(w: usize) -> Vec<Vec<ThetaPoly>> {
    let b = beta(w + 1);
    let mut pw = b.clone();
    let mut cols: Vec<Vec<ThetaPoly>> = (0..=w).map(|_| Vec::new()).collect();
    for k in 0..=w {
        if k > 0 {
            pw = pw.mul(&b);
        }
        for (n, col) in cols.iter_mut().enumerate().skip(k) {
            let f = rat_int(factorial(n as u32 + 1));
            col.push(pw.coeffs()[n + 1].scale(&f));
        }
    }
    cols
}

/// `S_(k)(t_n)`, the class of the intersection `Θ_k^{n-k}`.
pub fn s_k_t_n(k: u32, n: u32) -> ThetaPoly {
    if k > n {
        return ThetaPoly::zero();
    }
    let lock = TABLE.get_or_init(|| RwLock::new(Vec::new()));
    {
        let t = lock.read().unwrap();
        if (n as usize) < t.len() {
            return t[n as usize][k as usize].clone();
        }
    }
    let fresh = build_table((n as usize).max(DEFAULT_MAX_WEIGHT));
    let mut t = lock.write().unwrap();
    if t.len() < fresh.len() {
        *t = fresh;
    }
    t[n as usize][k as usize].clone()
}

/// `[Θ_k^{n-k}]` straight from the residue formula, without the shared table.
pub fn theta_intersection(n: u32, k: u32) -> Result<ThetaPoly> {
    if k > n {
        return Err(Error::InvalidParameter(format!("need k <= n, got k={k}, n={n}")));
    }
    beta(n as usize + 1).residue_extract(n as usize, k as usize)
}

/// `S_lambda` applied to a single monomial `t^mu`.
fn apply_monomial(lambda: &Partition, mu: &Partition) -> ThetaPoly {
    if lambda.is_empty() {
        return ThetaPoly::monomial(mu.clone(), Rat::one());
    }
    if lambda.weight() > mu.weight() || lambda.len() > mu.len() {
        return ThetaPoly::zero();
    }
    // Each factor t_{mu_i} takes either nothing or a single part of lambda.
    fn go(
        factors: &[u32],
        rest: &mut Vec<(u32, u32)>,
        left: usize,
        memo: &mut HashMap<(usize, Vec<(u32, u32)>), ThetaPoly>,
    ) -> ThetaPoly {
        if factors.is_empty() {
            return if left == 0 { ThetaPoly::one() } else { ThetaPoly::zero() };
        }
        if left > factors.len() {
            return ThetaPoly::zero();
        }
        let key = (factors.len(), rest.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let m = factors[0];
        let tail = &factors[1..];
        let mut acc = &ThetaPoly::generator(m) * &go(tail, rest, left, memo);
        for i in 0..rest.len() {
            let (part, mult) = rest[i];
            if mult == 0 || part > m {
                continue;
            }
            rest[i].1 -= 1;
            let sub = go(tail, rest, left - 1, memo);
            rest[i].1 += 1;
            if !sub.is_zero() {
                acc += &s_k_t_n(part, m) * &sub;
            }
        }
        memo.insert(key, acc.clone());
        acc
    }
    let mut rest = lambda.multiplicities();
    go(mu.parts(), &mut rest, lambda.len(), &mut HashMap::new())
}

/// `S_lambda(p)`, extended linearly over the terms of `p`.
pub fn ln_apply(lambda: &Partition, p: &ThetaPoly) -> ThetaPoly {
    let mut out = ThetaPoly::zero();
    for (mu, c) in p.terms() {
        out += apply_monomial(lambda, mu).scale(c);
    }
    out
}

/// Coefficientwise `S_lambda` on a series in `z` with theta coefficients.
///
/// Only graded series (every coefficient homogeneous, as for `beta`, its
/// powers, `Q_v` and the logarithms) are accepted.
pub fn ln_apply_series(lambda: &Partition, f: &ThetaSeries) -> Result<ThetaSeries> {
    for (m, c) in f.coeffs().iter().enumerate() {
        if let Some(w) = c.max_weight() {
            if !c.is_homogeneous_of(w) {
                return Err(Error::UnsupportedSeries(format!("coefficient of z^{m} is not homogeneous")));
            }
        }
    }
    Ok(ThetaSeries::new(f.coeffs().iter().map(|c| ln_apply(lambda, c)).collect(), f.order()))
}

/// `aug(S_lambda(t^mu)) / (mu+1)!`; the Kronecker delta of the dual bases.
pub fn dual_pairing(lambda: &Partition, mu: &Partition) -> Result<Rat> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch { expected: lambda.weight(), found: mu.weight() });
    }
    Ok(apply_monomial(lambda, mu).aug() / rat_int(partition_factorial(mu)))
}

/// Normal Chern number `c^nu_lambda(x) = aug(S_lambda(x))` for `|lambda| = weight(x)`.
pub fn normal_number(lambda: &Partition, p: &ThetaPoly) -> Rat {
    ln_apply(lambda, p).aug()
}
