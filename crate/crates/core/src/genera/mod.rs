//! Hirzebruch genera in the theta basis.
//!
//! A genus with characteristic series `Q(z)` sends `t_n` to
//! `(n+1)! [z^{n+1}] z/Q(z)`, so the whole ring map is read off from `1/Q`.
//! Topological invariants of theta divisors and the Chern-number
//! congruences obtained from the Todd genus live here as well.

mod congruence;
mod lattice;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Deserialize;

use crate::cobordism::{theta_normal_vector, theta_tangent_vector};
use crate::error::{Error, Result};
use crate::exact::{bernoulli, binomial, catalan, factorial, parse_rat, rat_int, Rat};
use crate::symfun::ChernVector;
use crate::{RatSeries, ThetaPoly};

pub use congruence::{check_chern_vector, congruence_system, CongruenceSystem, Verdict};
pub use lattice::{hermite_normal_form, smith_diagonal, IntLattice};

/// A genus given by its characteristic power series `Q(z)` with `Q(0) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenusSpec {
    pub name: Option<String>,
    q: RatSeries,
    /// `q` is a polynomial, exact at every order.
    polynomial: bool,
}

#[derive(Deserialize)]
struct QFile {
    coeffs: Vec<String>,
}

impl GenusSpec {
    pub fn new(name: Option<String>, q: RatSeries) -> Result<Self> {
        if !q.coeffs()[0].is_one() {
            return Err(Error::InvalidParameter("characteristic series must start with 1".into()));
        }
        Ok(GenusSpec { name, q, polynomial: false })
    }

    /// Todd genus, `Q = z/(1 - e^{-z}) = Σ (-1)^n B_n z^n/n!`.
    pub fn todd(order: usize) -> Self {
        let c = (0..=order as u32)
            .map(|n| {
                let b = bernoulli(n) / rat_int(factorial(n));
                if n % 2 == 1 {
                    -b
                } else {
                    b
                }
            })
            .collect();
        GenusSpec { name: Some("todd".into()), q: RatSeries::new(c, order), polynomial: false }
    }

    /// Signature, `Q = z/tanh z = Σ 2^{2k} B_{2k} z^{2k}/(2k)!`.
    pub fn l_genus(order: usize) -> Self {
        let c = (0..=order as u32)
            .map(|n| {
                if n % 2 == 1 {
                    Rat::zero()
                } else {
                    rat_int(BigInt::from(2).pow(n)) * bernoulli(n) / rat_int(factorial(n))
                }
            })
            .collect();
        GenusSpec { name: Some("l".into()), q: RatSeries::new(c, order), polynomial: false }
    }

    /// Euler characteristic, `Q = 1 + z`.
    pub fn euler(order: usize) -> Self {
        GenusSpec {
            name: Some("euler".into()),
            q: RatSeries::new(vec![Rat::one(), Rat::one()], order.max(1)),
            polynomial: true,
        }
    }

    pub fn by_name(name: &str, order: usize) -> Result<Self> {
        match name {
            "todd" => Ok(Self::todd(order)),
            "l" | "l_genus" | "signature" => Ok(Self::l_genus(order)),
            "euler" => Ok(Self::euler(order)),
            _ => Err(Error::InvalidParameter(format!("unknown genus {name:?}"))),
        }
    }

    /// Reads `{"coeffs": ["1", "-1/2", ...]}` meaning the polynomial `Q = Σ coeffs[n] z^n`.
    pub fn from_json(src: &str) -> Result<Self> {
        let f: QFile = serde_json::from_str(src).map_err(|e| Error::InvalidParameter(format!("Q file: {e}")))?;
        if f.coeffs.is_empty() {
            return Err(Error::InvalidParameter("Q file has no coefficients".into()));
        }
        let c = f.coeffs.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?;
        let order = c.len() - 1;
        let mut spec = Self::new(Some("custom".into()), RatSeries::new(c, order))?;
        spec.polynomial = true;
        Ok(spec)
    }

    pub fn q(&self) -> &RatSeries {
        &self.q
    }

    /// Images of `t_0 = 1, t_1, ..., t_n_max`.
    pub fn theta_images(&self, n_max: usize) -> Result<Vec<Rat>> {
        let q = if n_max <= self.q.order() {
            self.q.truncate(n_max)
        } else if self.polynomial {
            RatSeries::new(self.q.coeffs().to_vec(), n_max)
        } else {
            return Err(Error::Truncation { needed: n_max, available: self.q.order() });
        };
        let inv = q.inv()?;
        Ok((0..=n_max).map(|n| &inv.coeffs()[n] * rat_int(factorial(n as u32 + 1))).collect())
    }
}

/// `Φ(Θ^n) = (n+1)! [z^{n+1}] z/Q(z)`.
pub fn genus_of_theta(spec: &GenusSpec, n: usize) -> Result<Rat> {
    Ok(spec.theta_images(n)?.pop().expect("nonempty"))
}

/// Image of a theta polynomial under the genus.
pub fn genus_of_poly(spec: &GenusSpec, p: &ThetaPoly) -> Result<Rat> {
    let n = p.max_generator() as usize;
    let images = spec.theta_images(n)?;
    p.substitute(|g| images.get(g as usize).cloned())
}

/// Todd image on generators, `t_j -> (-1)^j`.
pub fn todd_of_poly(p: &ThetaPoly) -> Rat {
    p.substitute(|g| Some(if g % 2 == 0 { Rat::one() } else { -Rat::one() })).expect("total assignment")
}

/// Topological record of the theta divisor `Θ^n(k)` of the polarisation of type `k`.
#[derive(Clone, Debug)]
pub struct ThetaInvariants {
    pub n: u32,
    pub k: u32,
    pub betti: Vec<BigInt>,
    pub euler: BigInt,
    pub signature: Option<Rat>,
    pub tangent: ChernVector,
    pub normal: ChernVector,
}

/// `2^{n+2}(2^{n+2}-1) B_{n+2}/(n+2)`, the signature of `Θ^n` for even `n`.
pub fn theta_signature(n: u32) -> Rat {
    let p = BigInt::from(2).pow(n + 2);
    rat_int(&p * (&p - 1)) * bernoulli(n + 2) / rat_int(n + 2)
}

pub fn theta_invariants(n: u32, k: u32) -> Result<ThetaInvariants> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParameter("need n >= 1 and k >= 1".into()));
    }
    let kp = BigInt::from(k).pow(n + 1);
    let top = &kp * factorial(n + 1);
    let mut betti: Vec<BigInt> = (0..=2 * n).map(|j| binomial(2 * n + 2, j.min(2 * n - j))).collect();
    betti[n as usize] = &top + BigInt::from(n) * catalan(n + 1);
    let euler = if n % 2 == 0 { top.clone() } else { -top.clone() };
    let signature = (n % 2 == 0).then(|| theta_signature(n) * rat_int(kp.clone()));
    Ok(ThetaInvariants {
        n,
        k,
        betti,
        euler,
        signature,
        tangent: theta_tangent_vector(n, k),
        normal: theta_normal_vector(n, k),
    })
}
