use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Partition, Rat};

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u32) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// `(λ+1)! = Π (i_j + 1)!`.
pub fn partition_factorial(p: &Partition) -> BigInt {
    p.parts().iter().map(|&i| factorial(i + 1)).product()
}

static BERNOULLI: Mutex<Vec<Rat>> = Mutex::new(Vec::new());

/// Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: u32) -> Rat {
    let mut table = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    let n = n as usize;
    if table.len() <= n {
        *table = akiyama_tanigawa(n.max(2 * table.len()).max(24));
    }
    table[n].clone()
}

/// Bernoulli numbers `B_0..=B_n` by the Akiyama–Tanigawa transform, which
/// yields `B_1 = +1/2`; the sign is flipped afterwards.
fn akiyama_tanigawa(n: usize) -> Vec<Rat> {
    let mut row: Vec<Rat> = Vec::with_capacity(n + 1);
    let mut out = Vec::with_capacity(n + 1);
    for m in 0..=n {
        row.push(Rat::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = row[j - 1].clone() - row[j].clone();
            row[j - 1] = diff * Rat::from_integer(BigInt::from(j));
        }
        out.push(row[0].clone());
    }
    if n >= 1 {
        out[1] = -out[1].clone();
    }
    out
}
