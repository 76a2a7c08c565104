use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{format_rat, partition_factorial, partitions_of, partitions_up_to, rat_int, Partition, Rat};
use crate::ln::ln_apply;
use crate::symfun::ChernVector;
use crate::ThetaPoly;

use super::lattice::IntLattice;
use super::todd_of_poly;

/// The integrality conditions `Td(S_mu(x)) ∈ Z` on normal monomial Chern
/// numbers of weight `n`, where `x = Σ c^nu_lambda t^lambda/(lambda+1)!`.
#[derive(Clone, Debug)]
pub struct CongruenceSystem {
    pub weight: u32,
    /// Row labels: every `mu` with `|mu| <= n`, the empty partition first.
    pub mus: Vec<Partition>,
    /// Column labels: the partitions of `n`.
    pub lambdas: Vec<Partition>,
    pub functionals: Vec<Vec<Rat>>,
    pub lattice: IntLattice,
}

pub fn congruence_system(n: u32) -> CongruenceSystem {
    let lambdas = partitions_of(n);
    let mus = partitions_up_to(n);
    let functionals: Vec<Vec<Rat>> = mus
        .iter()
        .map(|mu| {
            lambdas
                .iter()
                .map(|lam| {
                    let mono = ThetaPoly::monomial(lam.clone(), rat_int(1));
                    todd_of_poly(&ln_apply(mu, &mono)) / rat_int(partition_factorial(lam))
                })
                .collect()
        })
        .collect();
    let lattice = IntLattice::from_functionals(lambdas.len(), functionals.clone());
    CongruenceSystem { weight: n, mus, lambdas, functionals, lattice }
}

impl CongruenceSystem {
    /// Evaluates every functional on normal monomial numbers.
    pub fn evaluate(&self, x: &[Rat]) -> Vec<Rat> {
        self.functionals.iter().map(|f| f.iter().zip(x).fold(Rat::zero(), |a, (c, v)| a + c * v)).collect()
    }

    pub fn to_json(&self) -> Value {
        let functionals: Vec<Value> = self
            .mus
            .iter()
            .zip(&self.functionals)
            .map(|(mu, row)| {
                let coeffs: serde_json::Map<String, Value> = self
                    .lambdas
                    .iter()
                    .zip(row)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(l, c)| (l.to_string(), Value::String(format_rat(c))))
                    .collect();
                json!({ "mu": mu.to_string(), "coeffs": coeffs })
            })
            .collect();
        let divisors: Vec<String> = self.lattice.elementary_divisors().iter().map(|d| d.to_string()).collect();
        json!({
            "weight": self.weight,
            "functionals": functionals,
            "elementary_divisors": divisors,
        })
    }
}

/// Outcome of checking a Chern vector against a congruence system.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub pass: bool,
    /// Todd genus of the class with these numbers.
    pub todd: Rat,
    /// `(mu, value)` for every functional with a non-integral value.
    pub failing: Vec<(Partition, Rat)>,
    /// Numbers that are not integers themselves, by partition.
    pub non_integral: Vec<Partition>,
}

/// Any frame or basis is accepted and converted to normal monomial numbers.
pub fn check_chern_vector(c: &ChernVector, sys: &CongruenceSystem) -> Result<Verdict> {
    if c.weight() != sys.weight {
        return Err(Error::WeightMismatch { expected: sys.weight, found: c.weight() });
    }
    let x = c.normal_monomial().to_list();
    let values = sys.evaluate(&x);
    let failing: Vec<(Partition, Rat)> = sys
        .mus
        .iter()
        .zip(&values)
        .filter(|(_, v)| !v.is_integer())
        .map(|(m, v)| (m.clone(), v.clone()))
        .collect();
    let non_integral: Vec<Partition> =
        c.values().iter().filter(|(_, v)| !v.is_integer()).map(|(p, _)| p.clone()).collect();
    let todd = values[0].clone();
    Ok(Verdict { pass: failing.is_empty() && non_integral.is_empty(), todd, failing, non_integral })
}
