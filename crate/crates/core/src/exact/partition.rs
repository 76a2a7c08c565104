use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing tuple of positive integers.
///
/// Ordering is graded reverse-lexicographic: first by weight, then by the
/// parts compared lexicographically, so `(2) > (1,1)` and `(3) > (2,1) > (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts in any order. Zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn single(k: u32) -> Self {
        Self::new(vec![k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Some(k)` if this is the one-part partition `(k)`.
    pub fn one_part(&self) -> Option<u32> {
        match self.0.as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Multiplicities `(part, count)` in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Removes one copy of `part`; `None` if absent.
    pub fn without(&self, part: u32) -> Option<Partition> {
        let i = self.0.iter().position(|&p| p == part)?;
        let mut parts = self.0.clone();
        parts.remove(i);
        Some(Partition(parts))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Comma-separated parts, `"2,1"`; the empty partition renders as `""`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for (i, tok) in s.split(',').enumerate() {
            let p: u32 = tok.trim().parse().map_err(|_| Error::Parse {
                pos: i,
                msg: format!("bad partition part {tok:?}"),
            })?;
            if p == 0 {
                return Err(Error::Parse { pos: i, msg: "partition parts must be positive".into() });
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

/// All partitions of `n`, lexicographically decreasing:
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Partitions of every weight `0..=n`, weight-ascending, each weight block in
/// the order of [`partitions_of`].
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let p4: Vec<String> = partitions_of(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn ordering_is_graded() {
        let a: Partition = "2".parse().unwrap();
        let b: Partition = "1,1".parse().unwrap();
        let c: Partition = "3".parse().unwrap();
        assert!(a > b);
        assert!(c > a);
        assert!(Partition::empty() < b);
    }

    #[test]
    fn parse_and_display() {
        let p: Partition = "1, 3,1".parse().unwrap();
        assert_eq!(p.parts(), &[3, 1, 1]);
        assert_eq!(p.to_string(), "3,1,1");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert_eq!(p.multiplicities(), vec![(3, 1), (1, 2)]);
        assert_eq!(p.without(1).unwrap().parts(), &[3, 1]);
        assert!(p.without(2).is_none());
    }

    #[test]
    fn generated_lists_are_canonical_and_distinct() {
        for n in 0..=12 {
            let ps = partitions_of(n);
            for w in ps.windows(2) {
                assert!(w[0].parts() > w[1].parts(), "order at n={n}");
            }
            for p in &ps {
                assert_eq!(p.weight(), n);
                assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }
}
