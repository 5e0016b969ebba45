//! The sign-reversing maps on reduced tableaux.
//!
//! Reduced tableaux are what is left after stripping the leading full-height
//! rectangle. Positions below are 0-based indices into rows `r1`, `r2`, `r3`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::HessenbergFunction;
use crate::tableaux::{is_f_tableau, sigma_move, FTableau};

/// Whether `t` is the image of a valid tableau under the move of the last
/// `width` entries of row 3 to the end of row 1. Decided by undoing the move.
pub fn in_sigma31_image(f: &HessenbergFunction, t: &FTableau, width: usize) -> bool {
    let mut rows = t.rows().to_vec();
    if rows.is_empty() || rows[0].len() < width {
        return false;
    }
    let r1 = &mut rows[0];
    let moved = r1.split_off(r1.len() - width);
    while rows.len() < 3 {
        rows.push(Vec::new());
    }
    rows[2].extend(moved);
    match FTableau::new(rows) {
        Ok(src) => is_f_tableau(f, &src),
        Err(_) => false,
    }
}

fn expect_shape(s: &FTableau, shape: &[i64], what: &str) -> Result<Vec<Vec<u8>>> {
    let got: Vec<i64> = s.rows().iter().map(|r| r.len() as i64).collect();
    let want: Vec<i64> = shape.iter().copied().filter(|&x| x > 0).collect();
    if got != want {
        return Err(Error::PreconditionViolated(format!("{what}: expected shape {want:?}, got {got:?}")));
    }
    Ok(s.rows().to_vec())
}

fn require_domain(f: &HessenbergFunction, s: &FTableau, what: &str) -> Result<()> {
    if !is_f_tableau(f, s) {
        return Err(Error::PreconditionViolated(format!("{what}: {s} is not an f-tableau")));
    }
    if in_sigma31_image(f, s, 1) {
        return Err(Error::PreconditionViolated(format!("{what}: {s} lies in the cancelled image")));
    }
    Ok(())
}

fn build(rows: Vec<Vec<u8>>) -> FTableau {
    FTableau::new(rows).expect("maps permute entries of a valid shape")
}

/// Which branch of the first map produced an image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Phi1Tag {
    Plus1,
    Plus2(usize),
    Plus2Inf,
}

impl fmt::Display for Phi1Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phi1Tag::Plus1 => f.write_str("<1>"),
            Phi1Tag::Plus2(i) => write!(f, "<2-{i}>"),
            Phi1Tag::Plus2Inf => f.write_str("<2-inf>"),
        }
    }
}

/// Row-2-to-row-1 map on shape `(m+k, m)`, landing in `(m+k+1, m-1)`.
pub fn sigma21_tilde(f: &HessenbergFunction, s: &FTableau, m: usize, k: usize) -> Result<(Phi1Tag, FTableau)> {
    let mut r = expect_shape(s, &[(m + k) as i64, m as i64], "sigma21")?;
    require_domain(f, s, "sigma21")?;
    let p = |a: u8, b: u8| f.prec(a, b);
    let d = |j: usize| m + k - 1 - j;
    let c2 = r[1][m - 1];
    let move_c2 = |r: &mut Vec<Vec<u8>>| {
        let x = r[1].pop().expect("c2");
        r[0].push(x);
    };
    if !p(c2, r[0][d(0)]) {
        move_c2(&mut r);
        return Ok((Phi1Tag::Plus1, build(r)));
    }
    if m < 2 {
        return Err(Error::PreconditionViolated("sigma21: width 1 must fall in the first branch".into()));
    }
    let b2 = |j: usize| m - 2 - j;
    let top = if k == 0 { None } else { Some((k - 1).min(m - 2)) };
    let hit = top.and_then(|t| (0..=t).find(|&i| !p(r[1][b2(i)], r[0][d(i + 1)])));
    match hit {
        Some(i) => {
            for j in 0..=i {
                let (x, y) = (r[0][d(j)], r[1][b2(j)]);
                r[0][d(j)] = y;
                r[1][b2(j)] = x;
            }
            move_c2(&mut r);
            Ok((Phi1Tag::Plus2(i), build(r)))
        }
        None if k >= 1 && m - 2 < k - 1 => {
            for j in 0..=m - 2 {
                let (x, y) = (r[0][d(j)], r[1][b2(j)]);
                r[0][d(j)] = y;
                r[1][b2(j)] = x;
            }
            let (x, y) = (r[0][k], r[1][m - 2]);
            r[0][k] = y;
            r[1][m - 2] = x;
            move_c2(&mut r);
            Ok((Phi1Tag::Plus2Inf, build(r)))
        }
        None => Err(Error::PreconditionViolated(format!("sigma21: no branch applies to {s}"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sigma32Case {
    One,
    Two,
    ThreeOne,
    ThreeTwo(i64),
}

impl fmt::Display for Sigma32Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sigma32Case::One => f.write_str("(1)"),
            Sigma32Case::Two => f.write_str("(2)"),
            Sigma32Case::ThreeOne => f.write_str("(3-1)"),
            Sigma32Case::ThreeTwo(i) => write!(f, "(3-2) i={i}"),
        }
    }
}

/// Row-3-to-row-2 map on shape `(m+k+1, m-2, 1)`, landing in `(m+k+1, m-1)`.
/// `k = -2` is the degenerate shape `(m-1, m-2, 1)` with no entries past `b_1`.
pub fn sigma32_tilde(f: &HessenbergFunction, s: &FTableau, m: usize, k: i64) -> Result<(Sigma32Case, FTableau)> {
    if m < 3 || (k < 0 && k != -2) {
        return Err(Error::PreconditionViolated(format!("sigma32: unsupported m={m}, k={k}")));
    }
    let w1 = m as i64 + k + 1;
    let mut r = expect_shape(s, &[w1, m as i64 - 2, 1], "sigma32")?;
    require_domain(f, s, "sigma32")?;
    let p = |a: u8, b: u8| f.prec(a, b);
    let b1 = r[0][m - 2];
    let a2 = r[1][0];
    let a3 = r[2][0];
    // b2^{(m-3)} sits under b1^{(m-3)}; absent when m = 3
    let b2_last = r[1].get(1).copied();
    let case = if p(b1, a3) {
        Sigma32Case::One
    } else if !b2_last.is_some_and(|x| p(x, b1)) {
        r[0][m - 2] = a2;
        r[1][0] = b1;
        Sigma32Case::Two
    } else {
        if k < 0 {
            return Err(Error::PreconditionViolated("sigma32: third branch needs entries past b1".into()));
        }
        let k = k as usize;
        let e = m + k;
        let e1 = r[0][e];
        let d1 = r[0][e - 1];
        if !p(e1, a3) || p(a2, d1) {
            r[0][m - 2] = a2;
            r[0][e] = b1;
            r[1][0] = e1;
            Sigma32Case::ThreeOne
        } else {
            // d1^{(i)} at r1[m+k-1-i] (i >= -1), b1^{(j)} at r1[m-2-j]
            let dpos = |i: i64| (m as i64 + k as i64 - 1 - i) as usize;
            let bpos = |j: i64| (m as i64 - 2 - j) as usize;
            let hi = (k as i64).min(m as i64 - 4);
            let i = (-1..=hi).find(|&i| !p(r[0][dpos(i)], r[0][bpos(i + 2)])).ok_or_else(|| {
                Error::PreconditionViolated(format!("sigma32: no stopping index in {s}"))
            })?;
            for j in -1..=i {
                r[0].swap(dpos(j), bpos(j + 1));
            }
            Sigma32Case::ThreeTwo(i)
        }
    };
    let x = r.pop().expect("row 3")[0];
    r[1].push(x);
    Ok((case, build(r)))
}

/// Outcome of the modified row-3-to-row-2 map.
#[derive(Debug, Clone)]
pub struct Phi2Outcome {
    pub subcase: String,
    pub output: FTableau,
    /// Every tableau the construction declares to be an f-tableau, by name.
    pub intermediates: Vec<(&'static str, FTableau)>,
    /// Violated claims about membership in the first map's image.
    pub violations: Vec<String>,
}

fn swap_rows(r: &mut [Vec<u8>], a: (usize, usize), b: (usize, usize)) {
    let x = r[a.0][a.1];
    r[a.0][a.1] = r[b.0][b.1];
    r[b.0][b.1] = x;
}

/// Second map of the reduced first case. `tag` reports whether a reduced
/// tableau of shape `(m+k+1, m-1)` is an image of [`sigma21_tilde`] and of which branch.
pub fn phi2(
    f: &HessenbergFunction,
    s: &FTableau,
    m: usize,
    k: i64,
    tag: &dyn Fn(&FTableau) -> Option<Phi1Tag>,
) -> Result<Phi2Outcome> {
    let (case, base) = sigma32_tilde(f, s, m, k)?;
    let mut inter = vec![];
    let mut violations = vec![];
    let out = |subcase: String, output: FTableau, inter, violations| Phi2Outcome { subcase, output, intermediates: inter, violations };
    match case {
        Sigma32Case::One => {
            inter.push(("R0", base.clone()));
            let t0 = tag(&base);
            if matches!(t0, Some(Phi1Tag::Plus2(_) | Phi1Tag::Plus2Inf)) {
                violations.push(format!("R0 {base} carries tag {}", t0.unwrap()));
            }
            if t0 != Some(Phi1Tag::Plus1) {
                return Ok(out("R0".into(), base, inter, violations));
            }
            let ku = k as usize;
            let mut r1 = base.rows().to_vec();
            swap_rows(&mut r1, (0, m + ku), (1, 0));
            let r1t = build(r1.clone());
            inter.push(("R1", r1t.clone()));
            let t1 = tag(&r1t);
            let (label, result) = match t1 {
                None => ("R1".to_string(), r1t),
                Some(Phi1Tag::Plus1) => {
                    violations.push(format!("R1 {r1t} is a first-branch image"));
                    ("R1".to_string(), r1t)
                }
                Some(Phi1Tag::Plus2(i)) => {
                    let mut r = base.rows().to_vec();
                    let last = if i < m - 2 { i } else { m - 3 };
                    for j in 0..=last {
                        swap_rows(&mut r, (0, m + ku - 1 - j), (1, m - 2 - j));
                    }
                    let label = if i == 0 {
                        "R2 2(0)"
                    } else if i < m - 2 {
                        "R2 2(i)"
                    } else {
                        r[0].swap(ku + 1, m + ku);
                        "R2 2(m-2)"
                    };
                    (label.to_string(), build(r))
                }
                Some(Phi1Tag::Plus2Inf) => {
                    let mut r = base.rows().to_vec();
                    for j in 0..=m - 3 {
                        swap_rows(&mut r, (0, m + ku - 1 - j), (1, m - 2 - j));
                    }
                    r[0].swap(ku + 1, m + ku);
                    r[0].swap(ku, ku + m - 1);
                    ("R2 2(inf)".to_string(), build(r))
                }
            };
            if label.starts_with("R2") {
                inter.push(("R2", result.clone()));
                if tag(&result).is_some() {
                    violations.push(format!("R2 {result} is a first-map image"));
                }
            }
            Ok(out(label, result, inter, violations))
        }
        Sigma32Case::Two => {
            inter.push(("Q0", base.clone()));
            let t0 = tag(&base);
            match t0 {
                Some(Phi1Tag::Plus1) => {
                    let mut r = base.rows().to_vec();
                    swap_rows(&mut r, (0, (m as i64 + k) as usize), (1, 0));
                    let q1 = build(r);
                    inter.push(("Q1", q1.clone()));
                    if tag(&q1).is_some() {
                        violations.push(format!("Q1 {q1} is a first-map image"));
                    }
                    Ok(out("Q1".into(), q1, inter, violations))
                }
                Some(t) => {
                    violations.push(format!("Q0 {base} carries tag {t}"));
                    Ok(out("Q0".into(), base, inter, violations))
                }
                None => Ok(out("Q0".into(), base, inter, violations)),
            }
        }
        Sigma32Case::ThreeOne | Sigma32Case::ThreeTwo(_) => {
            if let Some(t) = tag(&base) {
                violations.push(format!("third-branch image {base} carries tag {t}"));
            }
            let label = if case == Sigma32Case::ThreeOne { "(3-1)" } else { "(3-2)" };
            Ok(out(label.into(), base, inter, violations))
        }
    }
}

/// Case II map on shape `(m+2, m, 1)`, landing in `(m+2, m+1)`.
pub fn phi_case2(f: &HessenbergFunction, s: &FTableau, m: usize) -> Result<(&'static str, FTableau)> {
    let mut r = expect_shape(s, &[m as i64 + 2, m as i64, 1], "case II")?;
    require_domain(f, s, "case II")?;
    let p = |a: u8, b: u8| f.prec(a, b);
    let (a1, d1, e1) = (r[0][0], r[0][m], r[0][m + 1]);
    let a2 = r[1][0];
    let b2 = r[1].get(1).copied();
    let a3 = r.pop().expect("row 3")[0];
    let label = if p(d1, a3) {
        if !p(a2, e1) {
            "(1-1)"
        } else {
            r[0][m + 1] = a2;
            r[1][0] = e1;
            "(1-2)"
        }
    } else if !b2.is_some_and(|b| p(b, d1)) {
        if !p(d1, e1) {
            r[0][m] = a2;
            r[1][0] = d1;
            "(2-1)"
        } else {
            r[0][m] = a2;
            r[0][m + 1] = d1;
            r[1][0] = e1;
            "(2-2)"
        }
    } else if p(a1, e1) {
        r[0][m] = a2;
        r[0][m + 1] = d1;
        r[1][0] = e1;
        "(3-1)"
    } else {
        r[0][m] = e1;
        r[0][m + 1] = d1;
        "(3-2)"
    };
    r[1].push(a3);
    Ok((label, build(r)))
}

/// Case III map on shape `(2+k, 2)`, landing in `(3+k, 1)`.
pub fn phi_case3(f: &HessenbergFunction, t: &FTableau, k: usize) -> Result<(&'static str, FTableau)> {
    let mut r = expect_shape(t, &[k as i64 + 2, 2], "case III")?;
    require_domain(f, t, "case III")?;
    let p = |a: u8, b: u8| f.prec(a, b);
    let (a1, b1, d1) = (r[0][0], r[0][1], r[0][k + 1]);
    let c1 = r[0].get(2).copied();
    let (a2, b2) = (r[1][0], r[1][1]);
    let label = if !p(b2, d1) {
        if !p(a2, b2) {
            r[0].push(b2);
            r[1] = vec![a2];
            "<1-1>"
        } else {
            r[0].push(a2);
            r[1] = vec![b2];
            "<1-2>"
        }
    } else if !p(a1, b2) {
        if !c1.is_some_and(|c| p(c, a1)) {
            r[0][0] = b1;
            r[0][1] = a1;
            r[0].push(a2);
            r[1] = vec![b2];
            "<2-1>"
        } else {
            r[0][k + 1] = a2;
            r[0].push(b2);
            r[1] = vec![d1];
            "<2-2>"
        }
    } else {
        r[0].push(a2);
        r[1] = vec![b2];
        "<2-3>"
    };
    Ok((label, build(r)))
}

/// The two Case IV maps on shape `(q, q, q)`: the last column `c1 ≺ c2 ≺ c3`
/// becomes `[c1 c2 / c3]` or `[c1 c3 / c2]`.
pub fn phi_case4(f: &HessenbergFunction, t: &FTableau) -> Result<(FTableau, FTableau)> {
    let shape: Vec<usize> = t.rows().iter().map(Vec::len).collect();
    if shape.len() != 3 || shape[0] != shape[1] || shape[1] != shape[2] {
        return Err(Error::PreconditionViolated(format!("case IV: {t} is not a 3-row rectangle")));
    }
    if !is_f_tableau(f, t) {
        return Err(Error::PreconditionViolated(format!("case IV: {t} is not an f-tableau")));
    }
    let mut r = t.rows().to_vec();
    let c3 = r[2].pop().expect("c3");
    let c2 = r[1].pop().expect("c2");
    let mut r2 = r.clone();
    r[0].push(c2);
    r[1].push(c3);
    r2[0].push(c3);
    r2[1].push(c2);
    Ok((build(r), build(r2)))
}

/// Bounce-two map: the last entry of row 2 moves to the end of row 1.
pub fn phi_bounce2(f: &HessenbergFunction, t: &FTableau) -> Result<FTableau> {
    let b = f.bounce_number();
    if b > 2 {
        return Err(Error::BounceMismatch { expected: "at most 2".into(), found: b });
    }
    if !is_f_tableau(f, t) {
        return Err(Error::PreconditionViolated(format!("{t} is not an f-tableau")));
    }
    sigma_move(t, 2, 1, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(v: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(v).unwrap()
    }

    fn t(s: &str) -> FTableau {
        s.parse().unwrap()
    }

    #[test]
    fn sigma21_first_branch() {
        let f = hf(&[2, 4, 5, 6, 6, 6]);
        let (tag, out) = sigma21_tilde(&f, &t("1,2,3;4,5,6"), 3, 0).unwrap();
        assert_eq!(tag, Phi1Tag::Plus1);
        assert_eq!(out, t("1,2,3,6;4,5"));
        assert!(is_f_tableau(&f, &out));
    }

    #[test]
    fn case2_example() {
        let f = hf(&[2, 3, 4, 5, 5]);
        let (label, out) = phi_case2(&f, &t("1,2,4;3;5"), 1).unwrap();
        assert_eq!(label, "(1-1)");
        assert_eq!(out, t("1,2,4;3,5"));
    }

    #[test]
    fn case3_example() {
        let f = hf(&[1, 3, 4, 4]);
        let (label, out) = phi_case3(&f, &t("1,2;3,4"), 0).unwrap();
        assert_eq!(label, "<1-1>");
        assert_eq!(out, t("1,2,4;3"));
    }

    #[test]
    fn case4_example() {
        let f = hf(&[1, 2, 3]);
        let (a, b) = phi_case4(&f, &t("1;2;3")).unwrap();
        assert_eq!(a, t("1,2;3"));
        assert_eq!(b, t("1,3;2"));
    }

    #[test]
    fn bounce2_example() {
        let f = hf(&[2, 3, 4, 4]);
        assert_eq!(phi_bounce2(&f, &t("1,2;3,4")).unwrap(), t("1,2,4;3"));
        assert!(matches!(phi_bounce2(&hf(&[1, 2, 3]), &t("1;2;3")), Err(Error::BounceMismatch { .. })));
    }

    #[test]
    fn domain_is_enforced() {
        let f = hf(&[1, 3, 4, 4]);
        // 2 ≺ 4 would let the last row-1 entry sit under a2 = 3? no: 3 ⊀ 4, but a bad shape fails
        assert!(phi_case3(&f, &t("1,2,4;3"), 0).is_err());
    }
}
