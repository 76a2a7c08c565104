use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::exact::{factorial, partitions_of, rat_int, Partition, Rat};
use crate::graded::GradedPoly;

use super::Basis;

pub(crate) type Matrix = Vec<Vec<Rat>>;

/// Transition matrices for one weight. Row `i` of `to_p[b]` is the basis
/// element `b_{parts[i]}` written in power sums; `from_p[b]` is its inverse.
pub(crate) struct WeightTable {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    to_p: [Matrix; 4],
    from_p: [Matrix; 4],
}

impl WeightTable {
    pub fn to_p(&self, b: Basis) -> &Matrix {
        &self.to_p[b as usize]
    }

    pub fn from_p(&self, b: Basis) -> &Matrix {
        &self.from_p[b as usize]
    }
}

static CACHE: OnceLock<Mutex<HashMap<u32, Arc<WeightTable>>>> = OnceLock::new();

pub(crate) fn table(n: u32) -> Arc<WeightTable> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(build(n));
    cache.lock().unwrap().entry(n).or_insert(t).clone()
}

fn build(n: u32) -> WeightTable {
    let parts = partitions_of(n);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let dim = parts.len();

    let ident = identity(dim);
    let p_to_m: Matrix = parts.iter().map(|mu| parts.iter().map(|lam| rat_int(count_fillings(mu, lam))).collect()).collect();
    let m_to_p = invert(&p_to_m).expect("p-to-m transition is unitriangular");

    let e_gen = |k: u32| generator_in_p(k, true);
    let h_gen = |k: u32| generator_in_p(k, false);
    let e_to_p = product_rows(&parts, &index, e_gen);
    let h_to_p = product_rows(&parts, &index, h_gen);
    let p_to_e = invert(&e_to_p).expect("e basis");
    let p_to_h = invert(&h_to_p).expect("h basis");

    WeightTable {
        parts,
        index,
        to_p: [m_to_p, e_to_p, h_to_p, ident.clone()],
        from_p: [p_to_m, p_to_e, p_to_h, ident],
    }
}

/// `z_mu = prod i^{m_i} m_i!`.
pub(crate) fn z_factor(mu: &Partition) -> Rat {
    let mut z = num_bigint::BigInt::one();
    for (part, mult) in mu.multiplicities() {
        z *= num_bigint::BigInt::from(part).pow(mult) * factorial(mult);
    }
    rat_int(z)
}

/// `e_k` (signed) or `h_k` as a polynomial in the power sums `p_i`.
fn generator_in_p(k: u32, signed: bool) -> GradedPoly<Rat> {
    let mut out = GradedPoly::new();
    for mu in partitions_of(k) {
        let mut c = Rat::one() / z_factor(&mu);
        if signed && (k as usize - mu.len()) % 2 == 1 {
            c = -c;
        }
        out.add_term(mu, c);
    }
    out
}

fn product_rows<F: Fn(u32) -> GradedPoly<Rat>>(parts: &[Partition], index: &HashMap<Partition, usize>, gen: F) -> Matrix {
    let gens: Vec<GradedPoly<Rat>> = (0..=parts.first().map_or(0, |p| p.weight())).map(&gen).collect();
    parts
        .iter()
        .map(|lam| {
            let mut prod = GradedPoly::one();
            for &k in lam.parts() {
                prod = &prod * &gens[k as usize];
            }
            let mut row = vec![Rat::zero(); parts.len()];
            for (mu, c) in prod.terms() {
                row[index[mu]] = c.clone();
            }
            row
        })
        .collect()
}

/// Coefficient of `x^lam` in `p_mu`: the number of ways to send each part of
/// `mu` to a position so that position `j` collects exactly `lam_j`.
fn count_fillings(mu: &Partition, lam: &Partition) -> u64 {
    fn go(parts: &[u32], i: usize, rest: &mut Vec<u32>, memo: &mut HashMap<(usize, Vec<u32>), u64>) -> u64 {
        if i == parts.len() {
            return rest.iter().all(|&r| r == 0) as u64;
        }
        let mut key = rest.clone();
        key.sort_unstable();
        if let Some(&v) = memo.get(&(i, key.clone())) {
            return v;
        }
        let mut total = 0;
        for j in 0..rest.len() {
            if rest[j] >= parts[i] {
                rest[j] -= parts[i];
                total += go(parts, i + 1, rest, memo);
                rest[j] += parts[i];
            }
        }
        memo.insert((i, key), total);
        total
    }
    go(mu.parts(), 0, &mut lam.parts().to_vec(), &mut HashMap::new())
}

pub(crate) fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect()).collect()
}

/// Gauss-Jordan inverse over the rationals.
pub(crate) fn invert(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let s = Rat::one() / &m[col][col];
        for j in 0..n {
            m[col][j] = &m[col][j] * &s;
            inv[col][j] = &inv[col][j] * &s;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..n {
                    let d = &f * &m[col][j];
                    m[r][j] -= d;
                    let d = &f * &inv[col][j];
                    inv[r][j] -= d;
                }
            }
        }
    }
    Some(inv)
}

/// Row vector times matrix.
pub(crate) fn vec_mul(x: &[Rat], a: &Matrix) -> Vec<Rat> {
    let n = a.first().map_or(0, |r| r.len());
    let mut out = vec![Rat::zero(); n];
    for (xi, row) in x.iter().zip(a) {
        if xi.is_zero() {
            continue;
        }
        for (o, aij) in out.iter_mut().zip(row) {
            *o += xi * aij;
        }
    }
    out
}

/// Matrix times column vector.
pub(crate) fn mat_mul_vec(a: &Matrix, x: &[Rat]) -> Vec<Rat> {
    a.iter().map(|row| row.iter().zip(x).fold(Rat::zero(), |acc, (r, v)| acc + r * v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fillings_small() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        // p1^2 = m2 + 2 m11
        assert_eq!(count_fillings(&p("1,1"), &p("2")), 1);
        assert_eq!(count_fillings(&p("1,1"), &p("1,1")), 2);
        assert_eq!(count_fillings(&p("2"), &p("1,1")), 0);
        assert_eq!(count_fillings(&p("2,1,1"), &p("2,2")), 2);
    }

    #[test]
    fn inverse_roundtrip() {
        let t = table(5);
        for b in Basis::ALL {
            let prod: Matrix = t.to_p(b).iter().map(|row| vec_mul(row, t.from_p(b))).collect();
            assert_eq!(prod, identity(t.parts.len()));
        }
    }
}
