use num_bigint::BigInt;
use proptest::prelude::*;

use csf_core::coefficients::{k_set, signed_set_s, t_set};
use csf_core::symfunc::{
    jacobi_trudi_e, jacobi_trudi_h, monomial_coefficient, omega_on_eh, omega_on_s, partitions, partitions_max_len,
    peel, s_to_h, symmetric_to_basis, IntPolyCache, SymExpansion,
};
use csf_core::{Basis, Partition};

/// Coefficient of `m_ν` in an e- or h-expansion.
fn m_coeff(x: &SymExpansion<BigInt>, nu: &Partition) -> BigInt {
    x.terms().map(|(l, c)| c * BigInt::from(monomial_coefficient(x.basis(), l, nu))).sum()
}

#[test]
fn jacobi_trudi_forms_agree() {
    for n in 1..=8u32 {
        let all = partitions(n);
        for lambda in &all {
            let h = jacobi_trudi_h::<BigInt>(lambda);
            let e = jacobi_trudi_e::<BigInt>(lambda);
            for nu in &all {
                assert_eq!(m_coeff(&h, nu), m_coeff(&e, nu), "{lambda:?} at m{nu:?}");
            }
        }
    }
}

#[test]
fn schur_monomial_leading_terms() {
    for n in 1..=7u32 {
        for lambda in partitions(n) {
            assert_eq!(monomial_coefficient(Basis::S, &lambda, &lambda), 1);
            for nu in partitions(n).into_iter().filter(|nu| nu > &lambda) {
                assert_eq!(monomial_coefficient(Basis::S, &lambda, &nu), 0, "{lambda:?} {nu:?}");
            }
        }
    }
}

#[test]
fn signed_sets_and_k_sets_are_inverse() {
    for n in 0..=12u32 {
        for lambda in partitions_max_len(n, 3) {
            for x in signed_set_s(&lambda).unwrap() {
                let back = k_set(x.parts, n);
                assert!(back.contains(&(lambda.clone(), x.sign)), "{lambda:?} {:?}", x.parts);
            }
        }
    }
    for a in -2i64..=8 {
        for b in -2i64..=8 {
            for c in -2i64..=8 {
                for (l, sign) in t_set([a, b, c]) {
                    let n = l.iter().sum::<i64>();
                    let Ok(lambda) = Partition::new(&l) else { continue };
                    if n < 0 || l.iter().any(|&x| x < 0) || l[0] < l[1] || l[1] < l[2] {
                        continue;
                    }
                    let s = signed_set_s(&lambda).unwrap();
                    assert!(s.iter().any(|x| x.parts == [a, b, c] && x.sign == sign));
                }
            }
        }
    }
}

fn expansion(basis: Basis) -> impl Strategy<Value = SymExpansion<BigInt>> {
    (1u32..=6).prop_flat_map(move |n| {
        let parts = partitions(n);
        let k = parts.len();
        proptest::collection::vec(-5i64..=5, k).prop_map(move |cs| {
            let mut x = SymExpansion::new(basis);
            for (l, c) in parts.iter().zip(cs) {
                x.add_term(l.clone(), BigInt::from(c)).unwrap();
            }
            x
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn omega_is_an_involution(x in expansion(Basis::S), y in expansion(Basis::E)) {
        prop_assert_eq!(omega_on_s(&omega_on_s(&x).unwrap()).unwrap(), x);
        prop_assert_eq!(omega_on_eh(&omega_on_eh(&y).unwrap()).unwrap(), y);
    }

    #[test]
    fn peel_inverts_polynomial_expansion(x in expansion(Basis::S)) {
        let Some(n) = x.weight() else { return Ok(()) };
        let poly = IntPolyCache::new(n as usize).eval(&x);
        prop_assert_eq!(symmetric_to_basis(&poly, n, Basis::S).unwrap(), x);
    }

    #[test]
    fn s_to_h_agrees_with_monomials(x in expansion(Basis::S)) {
        let Some(n) = x.weight() else { return Ok(()) };
        let h = s_to_h(&x).unwrap();
        // h-expansion of x is the image under omega of the e-expansion of omega(x)
        let wx = omega_on_s(&x).unwrap();
        let m: std::collections::BTreeMap<Partition, BigInt> = partitions(n)
            .into_iter()
            .map(|nu| {
                let v: BigInt = wx.terms().map(|(l, c)| c * BigInt::from(monomial_coefficient(Basis::S, l, &nu))).sum();
                (nu, v)
            })
            .filter(|(_, v)| v != &BigInt::from(0))
            .collect();
        let via_e = peel(&m, n, Basis::E).unwrap();
        prop_assert_eq!(omega_on_eh(&via_e).unwrap(), h);
    }
}
