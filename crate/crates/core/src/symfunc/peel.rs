//! Reading a symmetric function off its monomial coefficients.

use std::collections::{BTreeMap, HashMap};

use super::coeff::Coefficient;
use super::expansion::{jacobi_trudi_h, Basis, SymExpansion};
use super::partition::{partitions, Partition};
use super::poly::MultiPoly;
use crate::error::{Error, Result};

/// Number of matrices with row sums `rows` and column sums `cols`, entries in
/// `{0, 1}` when `binary`, otherwise any non-negative integer.
fn count_matrices(rows: &[u32], cols: &mut Vec<u32>, binary: bool, memo: &mut HashMap<(usize, Vec<u32>), i64>) -> i64 {
    if rows.is_empty() {
        return i64::from(cols.iter().all(|&c| c == 0));
    }
    let key = (rows.len(), cols.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0i64;
    fill_row(rows, 0, rows[0], cols, binary, memo, &mut total);
    memo.insert(key, total);
    total
}

fn fill_row(
    rows: &[u32],
    col: usize,
    rem: u32,
    cols: &mut Vec<u32>,
    binary: bool,
    memo: &mut HashMap<(usize, Vec<u32>), i64>,
    total: &mut i64,
) {
    if col == cols.len() {
        if rem == 0 {
            let mut next = cols.clone();
            *total += count_matrices(&rows[1..], &mut next, binary, memo);
        }
        return;
    }
    let cap = if binary { cols[col].min(1) } else { cols[col] };
    for a in 0..=cap.min(rem) {
        cols[col] -= a;
        fill_row(rows, col + 1, rem - a, cols, binary, memo, total);
        cols[col] += a;
    }
}

/// Coefficient of `x^nu` in the basis element `b_lambda`.
pub fn monomial_coefficient(basis: Basis, lambda: &Partition, nu: &Partition) -> i64 {
    if lambda.weight() != nu.weight() {
        return 0;
    }
    let mut memo = HashMap::new();
    match basis {
        Basis::E => count_matrices(lambda.parts(), &mut nu.parts().to_vec(), true, &mut memo),
        Basis::H => count_matrices(lambda.parts(), &mut nu.parts().to_vec(), false, &mut memo),
        Basis::M => i64::from(lambda == nu),
        Basis::S => jacobi_trudi_h::<i64>(lambda)
            .terms()
            .map(|(mu, c)| c * monomial_coefficient(Basis::H, mu, nu))
            .sum(),
    }
}

/// Solves `sum_nu a_nu m_nu = sum_lambda c_lambda b_lambda` for `b` in e, s or m.
/// Both are triangular in lexicographic order: the leading monomial of `e_mu`
/// is `x^{mu'}` and that of `s_lambda` is `x^lambda`.
pub fn peel<C: Coefficient>(a: &BTreeMap<Partition, C>, n: u32, basis: Basis) -> Result<SymExpansion<C>> {
    if basis == Basis::H {
        return Err(Error::WrongBasis { expected: 'e', found: 'h' });
    }
    let parts = partitions(n);
    let mut rem: Vec<C> = parts.iter().map(|p| a.get(p).cloned().unwrap_or_else(C::zero)).collect();
    for (p, _) in a {
        if p.weight() != n {
            return Err(Error::NotHomogeneous { expected: n, found: p.weight() });
        }
    }
    let mut out = SymExpansion::new(basis);
    for i in 0..parts.len() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        let lead = match basis {
            Basis::E => parts[i].conjugate(),
            _ => parts[i].clone(),
        };
        for j in i..parts.len() {
            let m = monomial_coefficient(basis, &lead, &parts[j]);
            if m != 0 {
                rem[j] = rem[j].clone() - c.clone() * C::from(m);
            }
        }
        out.add_term(lead, c)?;
    }
    Ok(out)
}

/// Expands a symmetric polynomial of degree `n` in at least `n` variables.
pub fn symmetric_to_basis<C: Coefficient>(p: &MultiPoly<C>, n: u32, basis: Basis) -> Result<SymExpansion<C>> {
    if p.nvars() < n as usize {
        return Err(Error::PreconditionViolated(format!(
            "{} variables cannot determine a degree-{n} symmetric function",
            p.nvars()
        )));
    }
    if !p.is_homogeneous(n as usize) || !p.is_symmetric() {
        return Err(Error::PreconditionViolated("polynomial is not symmetric and homogeneous".into()));
    }
    peel(&p.partition_coefficients(), n, basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::poly::expansion_to_polynomial;
    use num_bigint::BigInt;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn matrix_counts() {
        assert_eq!(monomial_coefficient(Basis::E, &p(&[2, 1]), &p(&[1, 1, 1])), 3);
        assert_eq!(monomial_coefficient(Basis::H, &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(monomial_coefficient(Basis::S, &p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(monomial_coefficient(Basis::S, &p(&[2, 1]), &p(&[3])), 0);
    }

    #[test]
    fn roundtrip_through_polynomials() {
        for basis in [Basis::E, Basis::S, Basis::M] {
            for lambda in partitions(5) {
                let mut x = SymExpansion::<BigInt>::new(basis);
                x.add_term(lambda.clone(), BigInt::from(3)).unwrap();
                x.add_term(p(&[2, 2, 1]), BigInt::from(-2)).unwrap();
                let poly = expansion_to_polynomial(&x, 5);
                assert_eq!(symmetric_to_basis(&poly, 5, basis).unwrap(), x, "{basis} {lambda:?}");
            }
        }
    }
}
