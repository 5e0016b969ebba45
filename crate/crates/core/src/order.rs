//! Hessenberg functions, the natural unit interval order they induce, and
//! their Dyck and bounce paths.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::parse_int_list;

/// Largest supported `n`. Relation rows are stored as `u64` bitmasks indexed by label.
pub const MAX_N: usize = 63;

/// A non-decreasing map `f: [n] -> [n]` with `i <= f(i)`.
///
/// Labels are 1-based. The strict order `i ≺ j` holds iff `f(i) < j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct HessenbergFunction {
    values: Vec<u8>,
    // succ[i]: bit j set iff i ≺ j. pred[j]: bit i set iff i ≺ j. Index 0 unused.
    succ: Vec<u64>,
    pred: Vec<u64>,
}

impl HessenbergFunction {
    pub fn new(values: &[usize]) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        if n > MAX_N {
            return Err(Error::TooLarge(n, MAX_N));
        }
        for (idx, &v) in values.iter().enumerate() {
            let i = idx + 1;
            if idx > 0 && v < values[idx - 1] {
                return Err(Error::NotNonDecreasing(i));
            }
            if v < i {
                return Err(Error::BelowDiagonal(i, v));
            }
            if v > n {
                return Err(Error::OutOfRange(i, v, n));
            }
        }
        let all: u64 = if n == 63 { !1 } else { ((1u64 << (n + 1)) - 1) & !1 };
        let mut succ = vec![0u64; n + 1];
        let mut pred = vec![0u64; n + 1];
        for i in 1..=n {
            let fi = values[i - 1];
            // j with j > f(i)
            let above = if fi >= 63 { 0 } else { all & !((1u64 << (fi + 1)) - 1) };
            succ[i] = above;
            for j in fi + 1..=n {
                pred[j] |= 1u64 << i;
            }
        }
        Ok(Self {
            values: values.iter().map(|&v| v as u8).collect(),
            succ,
            pred,
        })
    }

    pub fn from_i64(values: &[i64]) -> Result<Self> {
        let n = values.len();
        let mut v = Vec::with_capacity(n);
        for (idx, &x) in values.iter().enumerate() {
            if x < 1 {
                return Err(Error::BelowDiagonal(idx + 1, 0));
            }
            v.push(x as usize);
        }
        Self::new(&v)
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `f(i)` for a 1-based label.
    pub fn value(&self, i: usize) -> usize {
        self.values[i - 1] as usize
    }

    pub fn values(&self) -> Vec<usize> {
        self.values.iter().map(|&v| v as usize).collect()
    }

    /// Bitmask of all labels `1..=n`.
    pub fn label_mask(&self) -> u64 {
        let n = self.n();
        if n == 63 {
            !1
        } else {
            ((1u64 << (n + 1)) - 1) & !1
        }
    }

    /// Unchecked `a ≺ b`. Both labels must lie in `1..=n`.
    #[inline]
    pub fn prec(&self, a: u8, b: u8) -> bool {
        (self.succ[a as usize] >> b) & 1 == 1
    }

    #[inline]
    pub fn succ_mask(&self, a: u8) -> u64 {
        self.succ[a as usize]
    }

    #[inline]
    pub fn pred_mask(&self, b: u8) -> u64 {
        self.pred[b as usize]
    }

    fn check_label(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            Err(Error::LabelOutOfRange(i, self.n()))
        } else {
            Ok(())
        }
    }

    /// Checked version of [`prec`](Self::prec).
    pub fn precedes(&self, i: usize, j: usize) -> Result<bool> {
        self.check_label(i)?;
        self.check_label(j)?;
        Ok(self.prec(i as u8, j as u8))
    }

    /// Whether the `(i, j)` square lies below the Dyck path, i.e. `{i, j}` is an edge.
    pub fn square_below_path(&self, i: usize, j: usize) -> Result<bool> {
        self.check_label(i)?;
        self.check_label(j)?;
        if i >= j {
            return Err(Error::NotIncreasing(i, j));
        }
        Ok(self.value(i) >= j)
    }

    /// Edges `{i, j}`, `i < j`, of the incomparability graph, in lexicographic order.
    pub fn graph_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=self.value(i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (1..=self.n()).map(|i| self.value(i) - i).sum()
    }

    pub fn bounce_data(&self) -> BounceData {
        let n = self.n();
        let mut points = Vec::new();
        let mut x = self.value(1);
        points.push(x);
        while x < n {
            x = self.value(x + 1);
            points.push(x);
        }
        let mut parts = Vec::with_capacity(points.len());
        let mut start = 1;
        for &p in &points {
            parts.push((start, p));
            start = p + 1;
        }
        BounceData { points, parts }
    }

    pub fn bounce_number(&self) -> usize {
        self.bounce_data().bounce_number()
    }

    /// N/E step string: for each `i`, rise to height `f(i)` then step east.
    pub fn dyck_path(&self) -> String {
        let mut s = String::with_capacity(2 * self.n());
        let mut h = 0;
        for &v in &self.values {
            for _ in h..v as usize {
                s.push('N');
            }
            h = v as usize;
            s.push('E');
        }
        s
    }

    /// The complete graph `f = (n, ..., n)`.
    pub fn complete(n: usize) -> Result<Self> {
        Self::new(&vec![n; n])
    }

    /// The edgeless graph `f(i) = i`.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new(&(1..=n).collect::<Vec<_>>())
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f({self})")
    }
}

impl FromStr for HessenbergFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = parse_int_list(s)?;
        Self::from_i64(&v)
    }
}

impl TryFrom<Vec<usize>> for HessenbergFunction {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(&v)
    }
}

impl From<HessenbergFunction> for Vec<usize> {
    fn from(f: HessenbergFunction) -> Self {
        f.values()
    }
}

/// Bounce path of a Hessenberg function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BounceData {
    /// `x_1 < x_2 < ... < x_b = n`.
    pub points: Vec<usize>,
    /// `P_l = {x_{l-1}+1, ..., x_l}` as inclusive intervals.
    pub parts: Vec<(usize, usize)>,
}

impl BounceData {
    pub fn bounce_number(&self) -> usize {
        self.points.len()
    }

    /// 1-based index of the part containing `label`.
    pub fn part_of(&self, label: usize) -> usize {
        self.parts
            .iter()
            .position(|&(a, b)| a <= label && label <= b)
            .map(|p| p + 1)
            .expect("label outside [n]")
    }
}

/// All Hessenberg functions of size `n` in lexicographic order, optionally
/// restricted to a bounce number.
pub fn enumerate_hessenberg(n: usize, bounce_filter: Option<usize>) -> Vec<HessenbergFunction> {
    let mut out = Vec::new();
    if n == 0 || n > MAX_N {
        return out;
    }
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len() + 1;
        if i > n {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(1).max(i);
        for v in lo..=n {
            cur.push(v);
            rec(n, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(n, &mut cur, &mut raw);
    for v in raw {
        let f = HessenbergFunction::new(&v).expect("generated values are valid");
        if bounce_filter.map_or(true, |b| f.bounce_number() == b) {
            out.push(f);
        }
    }
    out
}
