//! The signed sets coming from the 3×3 Jacobi–Trudi determinant and the
//! coefficient `c_μ` of `h_μ` in `ωX_G` when `b(f) <= 3`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::HessenbergFunction;
use crate::symfunc::{partitions_max_len, Basis, Partition, SymExpansion};
use crate::tableaux::count_on;

/// Three integer parts, possibly zero or negative.
pub type Comp3 = [i64; 3];

/// `a >= b >= c >= 0`.
pub fn is_partition3(a: Comp3) -> bool {
    a[0] >= a[1] && a[1] >= a[2] && a[2] >= 0
}

fn to_partition(a: Comp3) -> Option<Partition> {
    if is_partition3(a) {
        Partition::from_composition(&a)
    } else {
        None
    }
}

fn pad3(mu: &Partition) -> Result<Comp3> {
    if mu.len() > 3 {
        return Err(Error::PreconditionViolated(format!("{mu:?} has more than three parts")));
    }
    Ok(mu.padded3())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedComposition {
    pub parts: Comp3,
    pub sign: i8,
    /// The partition whose signed set produced this element.
    pub source: Option<Partition>,
}

// offsets of S(λ) relative to λ, with signs
const S_OFFSETS: [(Comp3, i8); 6] = [
    ([0, 0, 0], 1),
    ([0, 1, -1], -1),
    ([1, -1, 0], -1),
    ([1, 1, -2], 1),
    ([2, -1, -1], 1),
    ([2, 0, -2], -1),
];

fn add(a: Comp3, b: Comp3) -> Comp3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn sub(a: Comp3, b: Comp3) -> Comp3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// The six signed terms `h_α` of `s_λ` for `ℓ(λ) <= 3`.
pub fn signed_set_s(lambda: &Partition) -> Result<Vec<SignedComposition>> {
    let l = pad3(lambda)?;
    Ok(S_OFFSETS
        .iter()
        .map(|&(d, sign)| SignedComposition { parts: add(l, d), sign, source: Some(lambda.clone()) })
        .collect())
}

/// The six candidates `λ` with `α ∈ S(λ)`, each with `sgn(α, λ)`. The order is
/// the fixed one used by the case diagrams.
pub fn t_set(alpha: Comp3) -> [(Comp3, i8); 6] {
    let mut out = [([0; 3], 0); 6];
    for (slot, &(d, sign)) in out.iter_mut().zip(S_OFFSETS.iter().rev()) {
        *slot = (sub(alpha, d), sign);
    }
    out
}

/// Partitions `λ` of `n` with at most three parts and `α ∈ S(λ)`, with signs.
pub fn k_set(alpha: Comp3, n: u32) -> Vec<(Partition, i8)> {
    t_set(alpha)
        .into_iter()
        .filter_map(|(c, s)| to_partition(c).filter(|p| p.weight() == n).map(|p| (p, s)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::I => "I",
            CaseTag::II => "II",
            CaseTag::III => "III",
            CaseTag::IV => "IV",
        })
    }
}

fn case_of3(m: Comp3) -> CaseTag {
    match (m[0] == m[1] + 1, m[1] == m[2] + 1) {
        (false, false) => CaseTag::I,
        (true, false) => CaseTag::II,
        (false, true) => CaseTag::III,
        (true, true) => CaseTag::IV,
    }
}

/// Case of `μ` padded to three parts.
pub fn case_of(mu: &Partition) -> Result<CaseTag> {
    Ok(case_of3(pad3(mu)?))
}

/// Which rearrangement of `μ` a member of `C_μ` is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Alpha,
    Beta,
    Gamma,
}

impl Role {
    fn apply(self, m: Comp3) -> Comp3 {
        match self {
            Role::Alpha => m,
            Role::Beta => [m[1], m[0], m[2]],
            Role::Gamma => [m[0], m[2], m[1]],
        }
    }
}

fn roles(case: CaseTag) -> &'static [Role] {
    match case {
        CaseTag::I => &[Role::Alpha],
        CaseTag::II => &[Role::Alpha, Role::Beta],
        CaseTag::III => &[Role::Alpha, Role::Gamma],
        CaseTag::IV => &[Role::Alpha, Role::Beta, Role::Gamma],
    }
}

/// Compositions `α ∈ S` that rearrange to `μ`.
pub fn c_set(mu: &Partition) -> Result<Vec<Comp3>> {
    let m = pad3(mu)?;
    Ok(roles(case_of3(m)).iter().map(|r| r.apply(m)).collect())
}

/// `c_μ` from a `d_λ` lookup.
pub fn coefficient_c_with(mu: &Partition, mut d: impl FnMut(&Partition) -> u64) -> Result<BigInt> {
    let n = mu.weight();
    let mut c = BigInt::from(0);
    for alpha in c_set(mu)? {
        for (lambda, sign) in k_set(alpha, n) {
            c += BigInt::from(sign) * BigInt::from(d(&lambda));
        }
    }
    Ok(c)
}

/// `c_μ = Σ_{α ∈ C_μ} Σ_{λ ∈ K_α} sgn(α, λ) d_λ(f)`.
pub fn coefficient_c(f: &HessenbergFunction, mu: &Partition) -> Result<BigInt> {
    let b = f.bounce_number();
    if b > 3 {
        return Err(Error::BounceTooLarge(b));
    }
    if mu.weight() as usize != f.n() {
        return Err(Error::PreconditionViolated(format!("{mu:?} is not a partition of {}", f.n())));
    }
    coefficient_c_with(mu, |l| count_on(f, l, f.label_mask()))
}

/// `Σ_μ c_μ h_μ` over partitions of `n` with at most three parts.
pub fn signed_h_expansion(f: &HessenbergFunction) -> Result<SymExpansion<BigInt>> {
    let b = f.bounce_number();
    if b > 3 {
        return Err(Error::BounceTooLarge(b));
    }
    let mut memo: HashMap<Partition, u64> = HashMap::new();
    let mut out = SymExpansion::new(Basis::H);
    for mu in partitions_max_len(f.n() as u32, 3) {
        let c = coefficient_c_with(&mu, |l| *memo.entry(l.clone()).or_insert_with(|| count_on(f, l, f.label_mask())))?;
        out.add_term(mu, c)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramNode {
    pub parts: Comp3,
    pub sign: i8,
    pub role: Role,
    /// Position in `T(α)`, 0..6.
    pub slot: usize,
    /// Not a partition for this `μ`; contributes nothing.
    pub obsolete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    /// Part losing `k` boxes (1-based).
    pub j: usize,
    /// Part gaining them (1-based).
    pub i: usize,
    pub k: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseDiagram {
    pub mu: Comp3,
    pub case: CaseTag,
    pub nodes: Vec<DiagramNode>,
    pub arrows: Vec<Arrow>,
}

// A T(α) slot belongs to a case's diagram if it is a partition for at least
// one μ of that case. Slots that never are stay out of the picture.
fn slot_possible(case: CaseTag, role: Role, slot: usize) -> bool {
    for a in 0..=12i64 {
        for b in 0..=a {
            for c in 0..=b {
                let m = [a, b, c];
                if case_of3(m) == case && is_partition3(t_set(role.apply(m))[slot].0) {
                    return true;
                }
            }
        }
    }
    false
}

/// Signed family `∪_{α ∈ C_μ} K_α` with its σ arrows.
pub fn case_diagram(mu: &Partition) -> Result<CaseDiagram> {
    let m = pad3(mu)?;
    let case = case_of3(m);
    let mut nodes = Vec::new();
    for &role in roles(case) {
        for (slot, (parts, sign)) in t_set(role.apply(m)).into_iter().enumerate() {
            if slot_possible(case, role, slot) {
                nodes.push(DiagramNode { parts, sign, role, slot, obsolete: !is_partition3(parts) });
            }
        }
    }
    let mut arrows = Vec::new();
    for (x, a) in nodes.iter().enumerate() {
        for (y, b) in nodes.iter().enumerate() {
            let d = sub(b.parts, a.parts);
            for i in 0..3 {
                for j in i + 1..3 {
                    let k = d[i];
                    let other = 3 - i - j;
                    if (1..=2).contains(&k) && d[j] == -k && d[other] == 0 {
                        arrows.push(Arrow { from: x, to: y, j: j + 1, i: i + 1, k });
                    }
                }
            }
        }
    }
    Ok(CaseDiagram { mu: m, case, nodes, arrows })
}

impl CaseDiagram {
    /// `c_μ` read off the live nodes.
    pub fn signed_total(&self, mut d: impl FnMut(&Partition) -> u64) -> BigInt {
        let mut c = BigInt::from(0);
        for node in self.nodes.iter().filter(|x| !x.obsolete) {
            let p = to_partition(node.parts).expect("live node");
            c += BigInt::from(node.sign) * BigInt::from(d(&p));
        }
        c
    }
}
