use std::collections::{HashMap, HashSet};

use csf_core::injections::{
    certify, phi_case2, phi_case3, phi_case4, sigma21_tilde, sigma32_tilde, tilde_set, Phi1Tag,
};
use csf_core::symfunc::partitions_max_len;
use csf_core::tableaux::{enumerate_tableaux, is_f_tableau};
use csf_core::{enumerate_hessenberg, Error, FTableau, HessenbergFunction, Partition};

fn hf(v: &[usize]) -> HessenbergFunction {
    HessenbergFunction::new(v).unwrap()
}

fn t(s: &str) -> FTableau {
    s.parse().unwrap()
}

// f from the worked example with parts {1,2}, {3,4,5}, {6,7,8}
fn example_f() -> HessenbergFunction {
    hf(&[2, 3, 5, 6, 7, 8, 8, 8])
}

#[test]
fn first_map_sweep() {
    let f = example_f();
    let domain = tilde_set(&f, [5, 3, 0], -1, [4, 3, 1], 1);
    let codomain = tilde_set(&f, [6, 2, 0], 1, [4, 2, 2], 2);
    let codomain: HashSet<FTableau> = codomain.members.into_iter().collect();
    let mut seen = HashMap::new();
    for s in &domain.members {
        let (tag, out) = sigma21_tilde(&f, s, 3, 2).unwrap();
        assert!(is_f_tableau(&f, &out));
        assert!(codomain.contains(&out), "{s} -> {out}");
        assert!(seen.insert(out, tag).is_none());
    }
    assert!(seen.values().any(|t| *t == Phi1Tag::Plus1));
    // everything outside the domain is rejected
    for s in enumerate_tableaux(&f, &[5, 3]) {
        if !domain.members.contains(&s) {
            assert!(matches!(sigma21_tilde(&f, &s, 3, 2), Err(Error::PreconditionViolated(_))));
        }
    }
}

#[test]
fn first_map_examples() {
    let f = hf(&[2, 4, 5, 6, 6, 6]);
    assert_eq!(sigma21_tilde(&f, &t("1,2,3;4,5,6"), 3, 0).unwrap(), (Phi1Tag::Plus1, t("1,2,3,6;4,5")));
}

#[test]
fn second_map_sweep() {
    let f = example_f();
    let domain = tilde_set(&f, [5, 2, 1], -1, [4, 2, 2], 1);
    let mut seen = HashSet::new();
    for s in &domain.members {
        let (_, out) = sigma32_tilde(&f, s, 4, 0).unwrap();
        assert_eq!(out.shape(), Partition::new(&[5, 3]).unwrap());
        assert!(is_f_tableau(&f, &out), "{s} -> {out}");
        assert!(seen.insert(out));
    }
}

#[test]
fn case_two_and_three_examples() {
    let (label, out) = phi_case2(&hf(&[2, 3, 4, 5, 5]), &t("1,2,4;3;5"), 1).unwrap();
    assert_eq!((label, out), ("(1-1)", t("1,2,4;3,5")));
    let (label, out) = phi_case3(&hf(&[1, 3, 4, 4]), &t("1,2;3,4"), 0).unwrap();
    assert_eq!((label, out), ("<1-1>", t("1,2,4;3")));
    let (a, b) = phi_case4(&hf(&[1, 2, 3]), &t("1;2;3")).unwrap();
    assert_eq!((a, b), (t("1,2;3"), t("1,3;2")));
}

#[test]
fn case_four_inequality() {
    for n in 3..=8 {
        for f in enumerate_hessenberg(n, Some(3)) {
            for mu in partitions_max_len(n as u32, 3) {
                let m = mu.padded3();
                if m[0] == m[1] + 1 && m[1] == m[2] + 1 {
                    let neg = enumerate_tableaux(&f, &[m[1], m[1], m[1]]).len();
                    let pos = enumerate_tableaux(&f, &m).len();
                    assert!(2 * neg <= pos, "{f} {mu:?}");
                }
            }
        }
    }
}

#[test]
fn traces_are_deterministic() {
    let f = example_f();
    for mu in partitions_max_len(8, 3) {
        let a = serde_json::to_string(&certify(&f, &mu, true).unwrap()).unwrap();
        let b = serde_json::to_string(&certify(&f, &mu, true).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
