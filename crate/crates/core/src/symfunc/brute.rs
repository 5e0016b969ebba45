//! Coloring-based oracles for the chromatic quasisymmetric function
//! `X_G(x, t) = sum over proper colorings k of t^asc(k) x_k`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::coeff::TPoly;
use super::partition::{partitions, Partition};
use super::poly::MultiPoly;
use crate::error::{Error, Result};
use crate::order::HessenbergFunction;

/// Default cap on `N^n` for [`brute_chromatic`].
pub const DEFAULT_BRUTE_BUDGET: u128 = 200_000_000;

/// Enumerates every proper coloring `[n] -> [N]`. With `with_t` off every
/// coefficient is a constant.
pub fn brute_chromatic(f: &HessenbergFunction, nvars: usize, with_t: bool) -> Result<MultiPoly<TPoly>> {
    brute_chromatic_with_budget(f, nvars, with_t, DEFAULT_BRUTE_BUDGET)
}

pub fn brute_chromatic_with_budget(
    f: &HessenbergFunction,
    nvars: usize,
    with_t: bool,
    budget: u128,
) -> Result<MultiPoly<TPoly>> {
    let n = f.n();
    if nvars == 0 {
        return Err(Error::PreconditionViolated("need at least one variable".into()));
    }
    let space = (nvars as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if space > budget {
        return Err(Error::Budget(format!("{nvars}^{n} colorings exceeds {budget}")));
    }
    let base = (n + 1) as u64;
    if (base as f64).powi(nvars as i32) > u64::MAX as f64 / 2.0 {
        return Err(Error::Budget(format!("{nvars} variables do not fit the packed key")));
    }
    let weights: Vec<u64> = (0..nvars).map(|c| base.pow(c as u32)).collect();
    // earlier neighbours of each vertex: j < i with f(j) >= i
    let back: Vec<Vec<usize>> = (0..=n)
        .map(|i| if i == 0 { vec![] } else { (1..i).filter(|&j| f.value(j) >= i).collect() })
        .collect();

    let mut acc: HashMap<(u64, u32), u64> = HashMap::new();
    let mut colors = vec![0usize; n + 1];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        n: usize,
        nvars: usize,
        key: u64,
        asc: u32,
        with_t: bool,
        colors: &mut [usize],
        back: &[Vec<usize>],
        weights: &[u64],
        acc: &mut HashMap<(u64, u32), u64>,
    ) {
        if i > n {
            *acc.entry((key, if with_t { asc } else { 0 })).or_insert(0) += 1;
            return;
        }
        'c: for c in 0..nvars {
            let mut a = asc;
            for &j in &back[i] {
                let cj = colors[j];
                if cj == c {
                    continue 'c;
                }
                if cj < c {
                    a += 1;
                }
            }
            colors[i] = c;
            rec(i + 1, n, nvars, key + weights[c], a, with_t, colors, back, weights, acc);
        }
    }
    rec(1, n, nvars, 0, 0, with_t, &mut colors, &back, &weights, &mut acc);

    let mut by_exp: BTreeMap<Vec<u8>, Vec<(u32, u64)>> = BTreeMap::new();
    for ((key, asc), cnt) in acc {
        let mut e = vec![0u8; nvars];
        let mut k = key;
        for slot in e.iter_mut() {
            *slot = (k % base) as u8;
            k /= base;
        }
        by_exp.entry(e).or_default().push((asc, cnt));
    }
    let mut out = MultiPoly::zero(nvars);
    for (e, list) in by_exp {
        let deg = list.iter().map(|&(a, _)| a as usize).max().unwrap_or(0);
        let mut c = vec![BigInt::zero(); deg + 1];
        for (a, cnt) in list {
            c[a as usize] += BigInt::from(cnt);
        }
        out.add_term(e, TPoly::from_coeffs(c));
    }
    Ok(out)
}

/// Integer version of [`brute_chromatic`] (t = 1).
pub fn brute_chromatic_x(f: &HessenbergFunction, nvars: usize) -> Result<MultiPoly<BigInt>> {
    Ok(brute_chromatic(f, nvars, false)?.map_coeffs(|c| c.eval_one()))
}

fn independent_sets_by_size(f: &HessenbergFunction) -> Vec<Vec<u64>> {
    let n = f.n();
    let mut by_size = vec![Vec::new(); n + 1];
    // vertex v occupies bit v-1 here
    let adj: Vec<u64> = (1..=n)
        .map(|v| {
            let mut m = 0u64;
            for u in 1..=n {
                if u != v && !f.prec(u as u8, v as u8) && !f.prec(v as u8, u as u8) {
                    m |= 1 << (u - 1);
                }
            }
            m
        })
        .collect();
    for s in 0u64..(1u64 << n) {
        let mut ok = true;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if adj[v] & s != 0 {
                ok = false;
                break;
            }
            rest &= rest - 1;
        }
        if ok {
            by_size[s.count_ones() as usize].push(s);
        }
    }
    by_size
}

fn edge_masks(f: &HessenbergFunction) -> Vec<u64> {
    // later[u]: vertices v > u adjacent to u, as bit v-1
    let n = f.n();
    (1..=n)
        .map(|u| {
            let mut m = 0u64;
            for v in u + 1..=f.value(u) {
                m |= 1 << (v - 1);
            }
            m
        })
        .collect()
}

/// Coefficients of `x^nu` in `X_G(x, t)` for every partition `nu` of `n`, by
/// dynamic programming over ordered color classes. Colors are assigned in
/// increasing order, so an edge `u < v` is an ascent exactly when `u` was
/// colored first.
pub fn chromatic_m_coefficients_t(f: &HessenbergFunction) -> Result<BTreeMap<Partition, TPoly>> {
    let n = f.n();
    if n > 20 {
        return Err(Error::Budget(format!("subset dynamic programming needs n <= 20, got {n}")));
    }
    let indep = independent_sets_by_size(f);
    let later = edge_masks(f);
    let full = (1u64 << n) - 1;
    let mut out = BTreeMap::new();
    for nu in partitions(n as u32) {
        let mut layer: HashMap<u64, Vec<u64>> = HashMap::new();
        layer.insert(0, vec![1]);
        for &size in nu.parts() {
            let mut next: HashMap<u64, Vec<u64>> = HashMap::new();
            for (mask, poly) in &layer {
                for &s in &indep[size as usize] {
                    if s & mask != 0 {
                        continue;
                    }
                    let mut asc = 0usize;
                    let mut rest = *mask;
                    while rest != 0 {
                        let u = rest.trailing_zeros() as usize;
                        asc += (later[u] & s).count_ones() as usize;
                        rest &= rest - 1;
                    }
                    let slot = next.entry(mask | s).or_default();
                    if slot.len() < poly.len() + asc {
                        slot.resize(poly.len() + asc, 0);
                    }
                    for (k, &c) in poly.iter().enumerate() {
                        slot[k + asc] += c;
                    }
                }
            }
            layer = next;
        }
        let poly = layer.remove(&full).unwrap_or_default();
        let tp = TPoly::from_coeffs(poly.into_iter().map(BigInt::from));
        if !num_traits::Zero::is_zero(&tp) {
            out.insert(nu, tp);
        }
    }
    Ok(out)
}

/// `t = 1` specialization of [`chromatic_m_coefficients_t`].
pub fn chromatic_m_coefficients(f: &HessenbergFunction) -> Result<BTreeMap<Partition, BigInt>> {
    Ok(chromatic_m_coefficients_t(f)?.into_iter().map(|(k, v)| (k, v.eval_one())).collect())
}
