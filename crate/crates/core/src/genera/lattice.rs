//! Integer lattices cut out by rational functionals, with Hermite and Smith
//! normal forms over `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::Rat;
use crate::symfun::invert;

/// Row-style Hermite normal form: a basis of the row lattice, upper
/// triangular with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        loop {
            let piv = (r..m.len())
                .filter(|&i| !m[i][col].is_zero())
                .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
            let Some(piv) = piv else { break };
            m.swap(r, piv);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][col].is_zero() {
                    continue;
                }
                let q = m[i][col].div_floor(&m[r][col]);
                let pr = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pr) {
                    *x -= &q * p;
                }
                if !m[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r >= m.len() || m[r][col].is_zero() {
            continue;
        }
        if m[r][col].is_negative() {
            for x in m[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let q = m[i][col].div_floor(&m[r][col]);
            if q.is_zero() {
                continue;
            }
            let pr = m[r].clone();
            for (x, p) in m[i].iter_mut().zip(&pr) {
                *x -= &q * p;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    m.retain(|row| row.iter().any(|x| !x.is_zero()));
    m
}

/// Diagonal of the Smith normal form, each entry dividing the next.
pub fn smith_diagonal(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // bring the smallest nonzero entry of the trailing block to (t, t)
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !m[i][j].is_zero() && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return finish(diag, rows.min(cols));
            };
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t].div_floor(&m[t][t]);
                if !q.is_zero() {
                    let pr = m[t].clone();
                    for (x, p) in m[i].iter_mut().zip(&pr) {
                        *x -= &q * p;
                    }
                }
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j].div_floor(&m[t][t]);
                if !q.is_zero() {
                    for row in m.iter_mut() {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                }
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // enforce divisibility of the remaining block
            let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| !(&m[i][j] % &m[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    let ri = m[i].clone();
                    for (x, y) in m[t].iter_mut().zip(&ri) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
    }
    finish(diag, rows.min(cols))
}

fn finish(mut diag: Vec<BigInt>, len: usize) -> Vec<BigInt> {
    diag.resize(len, BigInt::zero());
    diag
}

fn lcm_denominators<'a, I: IntoIterator<Item = &'a Rat>>(it: I) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// `{x ∈ Z^dim : f(x) ∈ Z for every defining functional f}`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntLattice {
    dim: usize,
    functionals: Vec<Vec<Rat>>,
    basis: Vec<Vec<BigInt>>,
    elementary_divisors: Vec<BigInt>,
}

impl IntLattice {
    pub fn from_functionals(dim: usize, functionals: Vec<Vec<Rat>>) -> Self {
        let d = lcm_denominators(functionals.iter().flatten());
        let dr = Rat::from_integer(d.clone());
        // functionals together with the coordinate functionals span F ⊇ Z^dim
        let mut rows: Vec<Vec<BigInt>> = functionals
            .iter()
            .map(|f| f.iter().map(|x| (x * &dr).to_integer()).collect())
            .collect();
        for i in 0..dim {
            rows.push((0..dim).map(|j| if i == j { d.clone() } else { BigInt::zero() }).collect());
        }
        let h = hermite_normal_form(&rows);
        let b: Vec<Vec<Rat>> = h.iter().map(|r| r.iter().map(|x| Rat::new(x.clone(), d.clone())).collect()).collect();
        let binv = invert(&b).expect("functional lattice has full rank");
        // lattice basis: the columns of B^{-1}
        let cols: Vec<Vec<BigInt>> = (0..dim)
            .map(|j| {
                (0..dim)
                    .map(|i| {
                        assert!(binv[i][j].is_integer(), "dual basis must be integral");
                        binv[i][j].to_integer()
                    })
                    .collect()
            })
            .collect();
        let basis = hermite_normal_form(&cols);
        let elementary_divisors = smith_diagonal(&basis);
        IntLattice { dim, functionals, basis, elementary_divisors }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Hermite basis; two lattices are equal iff their bases are.
    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// Invariant factors of `Z^dim / L`.
    pub fn elementary_divisors(&self) -> &[BigInt] {
        &self.elementary_divisors
    }

    /// Index `[Z^dim : L]`.
    pub fn index(&self) -> BigInt {
        self.elementary_divisors.iter().product()
    }

    pub fn functionals(&self) -> &[Vec<Rat>] {
        &self.functionals
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        x.len() == self.dim
            && x.iter().all(|v| v.is_integer())
            && self.functionals.iter().all(|f| f.iter().zip(x).fold(Rat::zero(), |a, (c, v)| a + c * v).is_integer())
    }

    pub fn is_sublattice_of(&self, other: &IntLattice) -> bool {
        self.basis.iter().all(|b| other.contains(&b.iter().map(|x| Rat::from_integer(x.clone())).collect::<Vec<_>>()))
    }
}
