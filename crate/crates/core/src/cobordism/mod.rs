//! The universal series of the theta basis and the class families read off
//! from them.
//!
//! `beta(z) = z + Σ t_n z^{n+1}/(n+1)!` is the exponential of the universal
//! formal group. Its inverse has coefficients `[CP^n]/(n+1)`, the reciprocal
//! of `beta(z)/z` carries `v_n`, and the logarithm of `beta(z)/z` carries `w_n`.

mod manifolds;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{bernoulli, factorial, rat_int, Partition, Rat};
use crate::{ThetaPoly, ThetaSeries};

pub use manifolds::{
    cp_tangent_vector, decompose, decompose_tangent, product_normal_vector, theta_normal_vector,
    theta_tangent_vector,
};

fn fact(n: u32) -> Rat {
    rat_int(factorial(n))
}

/// `beta` to order `order` (the coefficient of `z^order` is `t_{order-1}/order!`).
pub fn beta(order: usize) -> ThetaSeries {
    let a: Vec<ThetaPoly> = (0..order as u32).map(ThetaPoly::generator).collect();
    ThetaSeries::from_theta_egf(&a, 1, order).with_grade_shift(Some(1))
}

/// `beta(z)/z = Σ t_n z^n/(n+1)!` to order `order`.
pub fn beta_over_z(order: usize) -> ThetaSeries {
    let a: Vec<ThetaPoly> = (0..=order as u32).map(ThetaPoly::generator).collect();
    ThetaSeries::from_theta_egf(&a, 0, order).with_grade_shift(Some(0))
}

/// The Mischenko series `beta^{-1}(u) = u + Σ [CP^n] u^{n+1}/(n+1)`.
pub fn mischenko_log(order: usize) -> Result<ThetaSeries> {
    beta(order).revert()
}

/// `[CP^0], ..., [CP^n_max]`.
pub fn cp_classes(n_max: usize) -> Result<Vec<ThetaPoly>> {
    let log = mischenko_log(n_max + 1)?;
    Ok((0..=n_max).map(|n| log.coeffs()[n + 1].scale(&rat_int(n as u64 + 1))).collect())
}

/// `Q_v(z) = (beta(z)/z)^{-1} = 1 + Σ (-1)^n v_n z^n/(n+1)!`.
pub fn q_v_series(order: usize) -> Result<ThetaSeries> {
    beta_over_z(order).inv()
}

/// `v_0 = 1, v_1, ..., v_n_max` by series inversion.
pub fn v_classes(n_max: usize) -> Result<Vec<ThetaPoly>> {
    let q = q_v_series(n_max)?;
    Ok((0..=n_max)
        .map(|n| {
            let s = if n % 2 == 0 { fact(n as u32 + 1) } else { -fact(n as u32 + 1) };
            q.coeffs()[n].scale(&s)
        })
        .collect())
}

/// `v_n = (n+1)! det(e_{1-i+j})` with `e_k = t_k/(k+1)!`: the Jacobi-Trudi
/// expression of `h_n` through the elementary functions.
pub fn v_class_jacobi_trudi(n: usize) -> ThetaPoly {
    let e: Vec<ThetaPoly> = (0..=n as u32).map(|k| ThetaPoly::generator(k).scale(&(Rat::one() / fact(k + 1)))).collect();
    let entry = |i: usize, j: usize| -> Option<&ThetaPoly> {
        let k = 1 + j as i64 - i as i64;
        if k < 0 {
            None
        } else {
            Some(&e[k as usize])
        }
    };
    // Laplace expansion along successive rows, memoized on the unused columns.
    fn det<'a>(
        n: usize,
        cols: u32,
        entry: &dyn Fn(usize, usize) -> Option<&'a ThetaPoly>,
        memo: &mut HashMap<u32, ThetaPoly>,
    ) -> ThetaPoly {
        if cols == 0 {
            return ThetaPoly::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let row = n - cols.count_ones() as usize;
        let mut acc = ThetaPoly::zero();
        let mut sign = true;
        for j in 0..n {
            if cols & (1 << j) == 0 {
                continue;
            }
            if let Some(a) = entry(row, j) {
                let minor = det(n, cols & !(1 << j), entry, memo);
                let term = a * &minor;
                acc = if sign { acc + term } else { acc - term };
            }
            sign = !sign;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    det(n, full, &entry, &mut HashMap::new()).scale(&fact(n as u32 + 1))
}

/// `w_0 = 0, w_1, ..., w_n_max` from `beta(z) = z exp(Σ w_n z^n/n!)`.
pub fn w_classes(n_max: usize) -> Result<Vec<ThetaPoly>> {
    let l = beta_over_z(n_max).log()?;
    Ok(l.hurwitz_coeffs())
}

/// Smallest `q > 0` with `q (n+1) B_n` integral.
pub fn q_multiplier(n: u32) -> BigInt {
    (bernoulli(n) * rat_int(n + 1)).denom().clone()
}

/// Adams-Novikov operation `Psi^k(u) = beta(k beta^{-1}(u)) / k`.
pub fn adams_novikov(k: i64, order: usize) -> Result<ThetaSeries> {
    if k == 0 {
        return Err(Error::InvalidParameter("Adams-Novikov operation needs k != 0".into()));
    }
    let kr = rat_int(k);
    let inner = mischenko_log(order)?.scale(&kr);
    Ok(beta(order).compose(&inner)?.scale(&(Rat::one() / kr)))
}

/// `Psi^k` on classes: multiplies the weight-`w` part by `k^w`.
pub fn psi_on_class(k: i64, p: &ThetaPoly) -> Result<ThetaPoly> {
    if k == 0 {
        return Err(Error::InvalidParameter("Adams-Novikov operation needs k != 0".into()));
    }
    Ok(p.scale_by_weight(|w| rat_int(BigInt::from(k).pow(w))))
}

/// `y_n = v_n/(n+1)` rewritten in `x_k = t_k/(k+1)`, as a polynomial in `x`.
pub fn hurwitz_y(v_n: &ThetaPoly, n: u32) -> ThetaPoly {
    let scale = |mono: &Partition| -> Rat {
        let prod: BigInt = mono.parts().iter().map(|&k| BigInt::from(k + 1)).product();
        rat_int(prod) / rat_int(n + 1)
    };
    ThetaPoly::from_terms(v_n.terms().map(|(m, c)| (m.clone(), c * scale(m))))
}

/// Least common multiple of the coefficient denominators.
pub fn clearing_multiplier(p: &ThetaPoly) -> BigInt {
    p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()))
}

/// The dual class families up to weight `n_max`, with integrality multipliers.
#[derive(Clone, Debug)]
pub struct DualClassTable {
    pub v: Vec<ThetaPoly>,
    pub w: Vec<ThetaPoly>,
    pub cp: Vec<ThetaPoly>,
    /// Minimal multiplier making `Td(q_n v_n)` integral.
    pub qn: Vec<BigInt>,
    /// Denominator-clearing multiplier of `w_n` (no minimality claim).
    pub w_multiplier: Vec<BigInt>,
}

impl DualClassTable {
    pub fn build(n_max: usize) -> Result<Self> {
        let v = v_classes(n_max)?;
        let w = w_classes(n_max)?;
        let cp = cp_classes(n_max)?;
        let qn = (0..=n_max as u32).map(q_multiplier).collect();
        let w_multiplier = w.iter().map(|p| clearing_multiplier(p).abs()).collect();
        Ok(DualClassTable { v, w, cp, qn, w_multiplier })
    }
}
