use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use super::coeff::{Coefficient, JsonCoeff, TPoly};
use super::partition::Partition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    E,
    H,
    S,
    M,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::S => 's',
            Basis::M => 'm',
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "s" => Ok(Basis::S),
            "m" => Ok(Basis::M),
            other => Err(Error::Parse { pos: 1, msg: format!("unknown basis '{other}'") }),
        }
    }
}

/// Sparse homogeneous expansion in one of the bases e, h, s, m.
#[derive(Clone, PartialEq)]
pub struct SymExpansion<C> {
    basis: Basis,
    weight: Option<u32>,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coefficient> SymExpansion<C> {
    pub fn new(basis: Basis) -> Self {
        Self { basis, weight: None, terms: BTreeMap::new() }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn weight(&self) -> Option<u32> {
        self.weight
    }

    /// Adds `coeff` to the coefficient of `lambda`, dropping the term if it cancels.
    pub fn add_term(&mut self, lambda: Partition, coeff: C) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        let w = lambda.weight();
        match self.weight {
            Some(e) if e != w => return Err(Error::NotHomogeneous { expected: e, found: w }),
            _ => self.weight = Some(w),
        }
        let slot = self.terms.entry(lambda);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in reverse-lexicographic order of partitions, `(n)` first.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter().rev()
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::new(self.basis);
        for (l, v) in self.terms() {
            out.add_term(l.clone(), v.clone() * c.clone()).expect("same weight");
        }
        out
    }

    /// Same coefficients, different basis label.
    pub fn relabel(&self, basis: Basis) -> Self {
        Self { basis, weight: self.weight, terms: self.terms.clone() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::WrongBasis { expected: self.basis.letter(), found: other.basis.letter() });
        }
        let mut out = self.clone();
        for (l, v) in other.terms() {
            out.add_term(l.clone(), v.clone())?;
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> SymExpansion<D> {
        let mut out = SymExpansion::new(self.basis);
        for (l, v) in self.terms() {
            out.add_term(l.clone(), f(v)).expect("same weight");
        }
        out
    }

    fn require(&self, b: Basis) -> Result<()> {
        if self.basis == b {
            Ok(())
        } else {
            Err(Error::WrongBasis { expected: b.letter(), found: self.basis.letter() })
        }
    }
}

/// Signed h-expansion of `s_lambda` from the Jacobi–Trudi determinant
/// `det(h_{lambda_i - i + j})`, with `h_0 = 1` and negative subscripts zero.
pub fn jacobi_trudi_h<C: Coefficient>(lambda: &Partition) -> SymExpansion<C> {
    let mut out = SymExpansion::new(Basis::H);
    if lambda.is_empty() {
        out.add_term(Partition::default(), C::one()).expect("empty");
        return out;
    }
    for (parts, sign) in determinant_terms(lambda.parts()) {
        out.add_term(Partition::sorted(parts), C::from(sign)).expect("homogeneous");
    }
    out
}

/// Signed e-expansion of `s_lambda` from `det(e_{lambda'_i - i + j})`.
pub fn jacobi_trudi_e<C: Coefficient>(lambda: &Partition) -> SymExpansion<C> {
    jacobi_trudi_h::<C>(&lambda.conjugate()).relabel(Basis::E)
}

// Expands det(x_{a_i - i + j}) over permutations, skipping entries with negative
// subscript. Each nonzero term is returned as its list of subscripts with a sign.
fn determinant_terms(a: &[u32]) -> Vec<(Vec<u32>, i64)> {
    let l = a.len();
    let mut out = Vec::new();
    let mut used = vec![false; l];
    let mut cur = Vec::with_capacity(l);
    fn rec(
        a: &[u32],
        row: usize,
        used: &mut [bool],
        cur: &mut Vec<u32>,
        inversions: usize,
        out: &mut Vec<(Vec<u32>, i64)>,
    ) {
        let l = a.len();
        if row == l {
            out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for col in 0..l {
            if used[col] {
                continue;
            }
            let sub = a[row] as i64 - row as i64 + col as i64;
            if sub < 0 {
                continue;
            }
            // columns already used that are larger than col each form an inversion
            let inv = used[col + 1..].iter().filter(|&&u| u).count();
            used[col] = true;
            cur.push(sub as u32);
            rec(a, row + 1, used, cur, inversions + inv, out);
            cur.pop();
            used[col] = false;
        }
    }
    rec(a, 0, &mut used, &mut cur, 0, &mut out);
    out
}

/// `ω(s_lambda) = s_{lambda'}` termwise.
pub fn omega_on_s<C: Coefficient>(x: &SymExpansion<C>) -> Result<SymExpansion<C>> {
    x.require(Basis::S)?;
    let mut out = SymExpansion::new(Basis::S);
    for (l, c) in x.terms() {
        out.add_term(l.conjugate(), c.clone())?;
    }
    Ok(out)
}

/// `ω` on the e and h bases swaps the basis label.
pub fn omega_on_eh<C: Coefficient>(x: &SymExpansion<C>) -> Result<SymExpansion<C>> {
    match x.basis {
        Basis::E => Ok(x.relabel(Basis::H)),
        Basis::H => Ok(x.relabel(Basis::E)),
        _ => Err(Error::WrongBasis { expected: 'h', found: x.basis.letter() }),
    }
}

/// Linear extension of [`jacobi_trudi_h`].
pub fn s_to_h<C: Coefficient>(x: &SymExpansion<C>) -> Result<SymExpansion<C>> {
    x.require(Basis::S)?;
    let mut out = SymExpansion::new(Basis::H);
    for (l, c) in x.terms() {
        let jt = jacobi_trudi_h::<C>(l);
        for (mu, s) in jt.terms() {
            out.add_term(mu.clone(), c.clone() * s.clone())?;
        }
    }
    Ok(out)
}

impl<C: Coefficient + JsonCoeff> SymExpansion<C> {
    /// `{basis, terms: [{partition, coeff | coeff_t}]}`, partitions reverse-lexicographic.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(l, c)| {
                let mut m = serde_json::Map::new();
                m.insert("partition".into(), json!(l.parts()));
                m.insert(C::KEY.into(), c.to_json());
                Value::Object(m)
            })
            .collect();
        json!({ "basis": self.basis.letter().to_string(), "terms": terms })
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, basis: Basis, l: &Partition) -> fmt::Result {
    write!(f, "{}[{}]", basis.letter(), l)
}

impl fmt::Display for SymExpansion<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (k, (l, c)) in self.terms().enumerate() {
            if k == 0 {
                write!(f, "{c} ")?;
            } else if c.is_negative() {
                write!(f, " - {} ", c.abs())?;
            } else {
                write!(f, " + {c} ")?;
            }
            write_term(f, self.basis, l)?;
        }
        Ok(())
    }
}

impl fmt::Display for SymExpansion<TPoly> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (k, (l, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) ")?;
            write_term(f, self.basis, l)?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for SymExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms().map(|(l, c)| (format!("{}{:?}", self.basis, l), c)))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v).unwrap()
    }

    fn exp(basis: Basis, terms: &[(&[i64], i64)]) -> SymExpansion<BigInt> {
        let mut x = SymExpansion::new(basis);
        for (l, c) in terms {
            x.add_term(p(l), BigInt::from(*c)).unwrap();
        }
        x
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(jacobi_trudi_h::<BigInt>(&p(&[2, 2])), exp(Basis::H, &[(&[2, 2], 1), (&[3, 1], -1)]));
        assert_eq!(jacobi_trudi_h::<BigInt>(&p(&[5])), exp(Basis::H, &[(&[5], 1)]));
        assert_eq!(
            jacobi_trudi_h::<BigInt>(&p(&[1, 1, 1])),
            exp(Basis::H, &[(&[1, 1, 1], 1), (&[2, 1], -2), (&[3], 1)])
        );
    }

    #[test]
    fn omega_examples() {
        let x = exp(Basis::S, &[(&[4], 8), (&[3, 1], 4), (&[2, 2], 2)]);
        assert_eq!(
            omega_on_s(&x).unwrap(),
            exp(Basis::S, &[(&[1, 1, 1, 1], 8), (&[2, 1, 1], 4), (&[2, 2], 2)])
        );
        assert_eq!(omega_on_s(&exp(Basis::S, &[(&[3, 1], 1)])).unwrap(), exp(Basis::S, &[(&[2, 1, 1], 1)]));
        assert!(omega_on_s(&exp(Basis::H, &[(&[3, 1], 1)])).is_err());
    }

    #[test]
    fn s_to_h_examples() {
        let x = exp(Basis::S, &[(&[4], 8), (&[3, 1], 4), (&[2, 2], 2)]);
        assert_eq!(s_to_h(&x).unwrap(), exp(Basis::H, &[(&[4], 4), (&[3, 1], 2), (&[2, 2], 2)]));
        assert_eq!(s_to_h(&exp(Basis::S, &[(&[6], 1)])).unwrap(), exp(Basis::H, &[(&[6], 1)]));
        assert!(s_to_h(&exp(Basis::H, &[(&[6], 1)])).is_err());
    }

    #[test]
    fn display_and_json() {
        let x = exp(Basis::S, &[(&[2, 2], 2), (&[4], 8), (&[3, 1], 4)]);
        assert_eq!(x.to_string(), "8 s[4] + 4 s[3,1] + 2 s[2,2]");
        let y = exp(Basis::H, &[(&[3, 1], -1), (&[2, 2], 1)]);
        assert_eq!(y.to_string(), "-1 h[3,1] + 1 h[2,2]");
        assert_eq!(SymExpansion::<BigInt>::new(Basis::E).to_string(), "0");
        assert_eq!(
            x.to_json(),
            json!({"basis": "s", "terms": [
                {"partition": [4], "coeff": 8},
                {"partition": [3, 1], "coeff": 4},
                {"partition": [2, 2], "coeff": 2}]})
        );
    }

    #[test]
    fn homogeneity_and_cancellation() {
        let mut x = exp(Basis::H, &[(&[2], 1)]);
        assert!(x.add_term(p(&[3]), BigInt::from(1)).is_err());
        x.add_term(p(&[2]), BigInt::from(-1)).unwrap();
        assert!(x.is_empty());
    }
}
