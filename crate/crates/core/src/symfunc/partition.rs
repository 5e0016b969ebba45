use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::parse_int_list;

/// A non-increasing sequence of positive integers. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Accepts trailing zeros, which are dropped. Rejects negative or increasing parts.
    pub fn new(parts: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(parts.len());
        let mut prev = i64::MAX;
        for &p in parts {
            if p < 0 || p > prev {
                return Err(Error::InvalidPartition(parts.to_vec()));
            }
            prev = p;
            if p > 0 {
                out.push(p as u32);
            }
        }
        Ok(Self(out))
    }

    /// Like [`new`](Self::new) but returns `None` for non-partitions, which is how
    /// signed compositions with a negative or out-of-order part are discarded.
    pub fn from_composition(parts: &[i64]) -> Option<Self> {
        Self::new(parts).ok()
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn sorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        Self((1..=first).map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32).collect())
    }

    /// The first three parts, zero padded. Callers check `len() <= 3` where it matters.
    pub fn padded3(&self) -> [i64; 3] {
        [self.part(0) as i64, self.part(1) as i64, self.part(2) as i64]
    }

    /// Exponent vector of length `nvars`, zero padded.
    pub fn exponent(&self, nvars: usize) -> Option<Vec<u8>> {
        if self.len() > nvars {
            return None;
        }
        let mut v: Vec<u8> = self.0.iter().map(|&p| p as u8).collect();
        v.resize(nvars, 0);
        Some(v)
    }
}

/// Partitions of `n` in decreasing lexicographic order, so `(n)` comes first.
pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_max_len(n, usize::MAX)
}

/// Partitions of `n` with at most `max_len` parts, decreasing lexicographic order.
pub fn partitions_max_len(n: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=rem.min(max_part)).rev() {
            cur.push(p);
            rec(rem - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    rec(n, n, max_len, &mut cur, &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
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
        Self::new(&parse_int_list(s)?)
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(&v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
    }

    #[test]
    fn validation() {
        assert_eq!(p(&[3, 1, 0]), p(&[3, 1]));
        assert!(Partition::new(&[1, 2]).is_err());
        assert!(Partition::new(&[2, -1]).is_err());
        assert!(Partition::new(&[2, 0, 1]).is_err());
    }

    #[test]
    fn listing() {
        let four: Vec<String> = partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(partitions_max_len(6, 3).len(), 7);
        assert_eq!(partitions(0), vec![p(&[])]);
    }
}
