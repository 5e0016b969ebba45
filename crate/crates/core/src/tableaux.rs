//! f-tableaux: validity, enumeration, the raw σ moves and rectangle splitting.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::HessenbergFunction;
use crate::symfunc::{partitions_max_len, Basis, Partition, SymExpansion};
use crate::text::parse_int_list_at;

/// Rows of distinct positive labels with weakly decreasing lengths. Whether it is
/// an f-tableau for a given `f` is decided by [`is_f_tableau`].
///
/// Trailing empty rows are never stored, so `rows().len()` is the number of
/// nonempty rows. Ordering is lexicographic on rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct FTableau {
    rows: Vec<Vec<u8>>,
}

impl FTableau {
    pub fn new(mut rows: Vec<Vec<u8>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        for w in rows.windows(2) {
            if w[1].len() > w[0].len() {
                let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
                return Err(Error::ShapeMismatch(format!("row lengths {shape:?} are not weakly decreasing")));
            }
        }
        let mut seen = 0u64;
        for &x in rows.iter().flatten() {
            if x == 0 || x as usize > crate::order::MAX_N {
                return Err(Error::LabelOutOfRange(x as usize, crate::order::MAX_N));
            }
            if seen >> x & 1 == 1 {
                return Err(Error::ShapeMismatch(format!("label {x} appears twice")));
            }
            seen |= 1 << x;
        }
        Ok(Self { rows })
    }

    /// Single row, convenient in tests.
    pub fn row_of(labels: &[u8]) -> Result<Self> {
        Self::new(vec![labels.to_vec()])
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Row `i` (0-based), empty past the last row.
    pub fn row(&self, i: usize) -> &[u8] {
        self.rows.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn into_rows(self) -> Vec<Vec<u8>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::sorted(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Bitmask of the labels present, bit `x` for label `x`.
    pub fn label_mask(&self) -> u64 {
        self.rows.iter().flatten().fold(0, |m, &x| m | 1 << x)
    }

    /// Column `c` read top to bottom.
    pub fn column(&self, c: usize) -> Vec<u8> {
        self.rows.iter().filter_map(|r| r.get(c).copied()).collect()
    }
}

impl fmt::Display for FTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for FTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut offset = 0;
        for piece in s.split(';') {
            let parsed = parse_int_list_at(piece, offset)?;
            let mut row = Vec::with_capacity(parsed.len());
            for v in parsed {
                if !(1..=crate::order::MAX_N as i64).contains(&v) {
                    return Err(Error::Parse { pos: offset + 1, msg: format!("label {v} out of range") });
                }
                row.push(v as u8);
            }
            rows.push(row);
            offset += piece.len() + 1;
        }
        Self::new(rows)
    }
}

/// Columns are ≺-chains read downwards, and no entry is ≺-below its left neighbour.
pub fn is_f_tableau(f: &HessenbergFunction, t: &FTableau) -> bool {
    if t.label_mask() & !f.label_mask() != 0 {
        return false;
    }
    for (r, row) in t.rows.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            if r > 0 && !f.prec(t.rows[r - 1][c], x) {
                return false;
            }
            if c > 0 && f.prec(x, row[c - 1]) {
                return false;
            }
        }
    }
    true
}

/// Drives a column-major fill of `shape` with exactly the labels in `mask`,
/// calling `visit` on every completed filling.
fn fill(f: &HessenbergFunction, shape: &Partition, mask: u64, visit: &mut dyn FnMut(&[Vec<u8>])) {
    if mask.count_ones() != shape.weight() {
        return;
    }
    let rows: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let cols: Vec<usize> = shape.conjugate().parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> =
        cols.iter().enumerate().flat_map(|(c, &h)| (0..h).map(move |r| (r, c))).collect();
    let mut grid: Vec<Vec<u8>> = rows.iter().map(|&l| vec![0; l]).collect();

    fn rec(
        f: &HessenbergFunction,
        cells: &[(usize, usize)],
        k: usize,
        avail: u64,
        grid: &mut Vec<Vec<u8>>,
        visit: &mut dyn FnMut(&[Vec<u8>]),
    ) {
        if k == cells.len() {
            visit(grid);
            return;
        }
        let (r, c) = cells[k];
        let mut cand = avail;
        if r > 0 {
            cand &= f.succ_mask(grid[r - 1][c]);
        }
        if c > 0 {
            cand &= !f.pred_mask(grid[r][c - 1]);
        }
        while cand != 0 {
            let x = cand.trailing_zeros() as u8;
            cand &= cand - 1;
            grid[r][c] = x;
            rec(f, cells, k + 1, avail & !(1 << x), grid, visit);
        }
        grid[r][c] = 0;
    }
    rec(f, &cells, 0, mask, &mut grid, visit);
}

/// All f-tableaux of `shape` using exactly the labels in `mask`, sorted.
pub fn enumerate_tableaux_on(f: &HessenbergFunction, shape: &Partition, mask: u64) -> Vec<FTableau> {
    let mut out = Vec::new();
    fill(f, shape, mask, &mut |g| out.push(FTableau { rows: g.to_vec() }));
    out.sort_unstable();
    out
}

/// All f-tableaux of a shape given as a composition. Non-partitions, and shapes
/// whose weight is not `n`, have none.
pub fn enumerate_tableaux(f: &HessenbergFunction, shape: &[i64]) -> Vec<FTableau> {
    match Partition::from_composition(shape) {
        Some(p) if p.weight() as usize == f.n() => enumerate_tableaux_on(f, &p, f.label_mask()),
        _ => Vec::new(),
    }
}

/// `d_λ(f)` without materializing the tableaux.
pub fn count_d(f: &HessenbergFunction, shape: &[i64]) -> u64 {
    match Partition::from_composition(shape) {
        Some(p) if p.weight() as usize == f.n() => count_on(f, &p, f.label_mask()),
        _ => 0,
    }
}

pub fn count_on(f: &HessenbergFunction, shape: &Partition, mask: u64) -> u64 {
    let mut n = 0u64;
    fill(f, shape, mask, &mut |_| n += 1);
    n
}

/// `ωX_G = Σ d_λ s_λ` over partitions with at most `b(f)` parts.
pub fn gasharov_expansion(f: &HessenbergFunction) -> SymExpansion<BigInt> {
    let mut out = SymExpansion::new(Basis::S);
    for lambda in partitions_max_len(f.n() as u32, f.bounce_number()) {
        let d = count_on(f, &lambda, f.label_mask());
        out.add_term(lambda, BigInt::from(d)).expect("homogeneous");
    }
    out
}

/// Moves the rightmost `width` entries of row `j` to the end of row `i`
/// (1-based rows, `i < j`), keeping their order. The result is not checked
/// against any `f`; a non-partition shape is an error.
pub fn sigma_move(t: &FTableau, j: usize, i: usize, width: usize) -> Result<FTableau> {
    if i == 0 || i >= j {
        return Err(Error::NotIncreasing(i, j));
    }
    if !(1..=2).contains(&width) || t.row(j - 1).len() < width {
        return Err(Error::MoveUnavailable { row: j, width });
    }
    let mut rows = t.rows.clone();
    let src = &mut rows[j - 1];
    let moved = src.split_off(src.len() - width);
    rows[i - 1].extend(moved);
    FTableau::new(rows)
}

/// Places `s` to the right of `r`, row by row. Every row of `r` facing a
/// nonempty row of `s` must have the full width of `r`.
pub fn concat(r: &FTableau, s: &FTableau) -> Result<FTableau> {
    let m = r.row(0).len();
    let height = r.rows.len().max(s.rows.len());
    let mut rows = Vec::with_capacity(height);
    for l in 0..height {
        if !s.row(l).is_empty() && r.row(l).len() != m {
            return Err(Error::ShapeMismatch(format!(
                "row {} of the left block has {} entries, expected {m}",
                l + 1,
                r.row(l).len()
            )));
        }
        let mut row = r.row(l).to_vec();
        row.extend_from_slice(s.row(l));
        rows.push(row);
    }
    FTableau::new(rows)
}

/// Splits off the first `m` columns. Both pieces are partition-shaped.
pub fn split_left(t: &FTableau, m: usize) -> (FTableau, FTableau) {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for row in &t.rows {
        let cut = m.min(row.len());
        left.push(row[..cut].to_vec());
        right.push(row[cut..].to_vec());
    }
    (
        FTableau::new(left).expect("prefix of a tableau"),
        FTableau::new(right).expect("suffix of a tableau"),
    )
}
