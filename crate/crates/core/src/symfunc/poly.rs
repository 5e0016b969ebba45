use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use super::coeff::Coefficient;
use super::expansion::{jacobi_trudi_h, Basis, SymExpansion};
use super::partition::Partition;

/// Sparse polynomial in `x_1..x_N` keyed by exponent vectors of length `N`.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<C> {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, C>,
}

impl<C: Coefficient> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], C::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exp: Vec<u8>, c: C) {
        assert_eq!(exp.len(), self.nvars, "exponent length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn coeff(&self, exp: &[u8]) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in self.terms() {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let e: Vec<u8> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in self.terms() {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Invariant under permuting variables.
    pub fn is_symmetric(&self) -> bool {
        // adjacent transpositions generate the symmetric group
        self.terms().all(|(e, c)| {
            (1..e.len()).all(|i| {
                let mut s = e.clone();
                s.swap(i - 1, i);
                self.coeff(&s) == *c
            })
        })
    }

    /// All terms have total degree `d`.
    pub fn is_homogeneous(&self, d: usize) -> bool {
        self.terms().all(|(e, _)| e.iter().map(|&x| x as usize).sum::<usize>() == d)
    }

    /// Coefficients of `x^lambda` for every partition exponent present. For a
    /// symmetric polynomial these are its monomial-basis coefficients.
    pub fn partition_coefficients(&self) -> BTreeMap<Partition, C> {
        let mut out = BTreeMap::new();
        for (e, c) in self.terms() {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                out.insert(Partition::sorted(e.iter().map(|&x| x as u32).collect()), c.clone());
            }
        }
        out
    }
}

/// `h_k(x_1..x_N)`: all exponent vectors of weight `k`.
pub fn h_poly<C: Coefficient>(k: u32, nvars: usize) -> MultiPoly<C> {
    let mut out = MultiPoly::zero(nvars);
    let mut cur = vec![0u8; nvars];
    fn rec<C: Coefficient>(i: usize, rem: u32, cur: &mut Vec<u8>, out: &mut MultiPoly<C>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = rem as u8;
            out.add_term(cur.clone(), C::one());
            cur[i] = 0;
            return;
        }
        for a in 0..=rem {
            cur[i] = a as u8;
            rec(i + 1, rem - a, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        return if k == 0 { MultiPoly::one(0) } else { out };
    }
    rec(0, k, &mut cur, &mut out);
    out
}

/// `e_k(x_1..x_N)`: all 0/1 exponent vectors with `k` ones.
pub fn e_poly<C: Coefficient>(k: u32, nvars: usize) -> MultiPoly<C> {
    let mut out = MultiPoly::zero(nvars);
    if k as usize > nvars {
        return out;
    }
    for mask in 0u64..(1u64 << nvars) {
        if mask.count_ones() == k {
            let e = (0..nvars).map(|i| ((mask >> i) & 1) as u8).collect();
            out.add_term(e, C::one());
        }
    }
    out
}

/// `m_lambda(x_1..x_N)`: the distinct rearrangements of `lambda`.
pub fn m_poly<C: Coefficient>(lambda: &Partition, nvars: usize) -> MultiPoly<C> {
    let mut out = MultiPoly::zero(nvars);
    let Some(mut e) = lambda.exponent(nvars) else { return out };
    e.sort_unstable();
    loop {
        out.add_term(e.clone(), C::one());
        if !next_permutation(&mut e) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Memoizes `h_mu`, `e_mu`, `s_lambda` and `m_lambda` as polynomials in a fixed
/// number of variables.
pub struct PolyCache<C> {
    nvars: usize,
    single: HashMap<(Basis, u32), MultiPoly<C>>,
    products: HashMap<(Basis, Partition), MultiPoly<C>>,
}

impl<C: Coefficient> PolyCache<C> {
    pub fn new(nvars: usize) -> Self {
        Self { nvars, single: HashMap::new(), products: HashMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    fn single(&mut self, basis: Basis, k: u32) -> MultiPoly<C> {
        let nvars = self.nvars;
        self.single
            .entry((basis, k))
            .or_insert_with(|| match basis {
                Basis::E => e_poly(k, nvars),
                _ => h_poly(k, nvars),
            })
            .clone()
    }

    /// Polynomial of a single basis element.
    pub fn basis_poly(&mut self, basis: Basis, lambda: &Partition) -> MultiPoly<C> {
        if let Some(p) = self.products.get(&(basis, lambda.clone())) {
            return p.clone();
        }
        let p = match basis {
            Basis::E | Basis::H => {
                let mut acc = MultiPoly::one(self.nvars);
                for &k in lambda.parts() {
                    acc = acc.mul(&self.single(basis, k));
                }
                acc
            }
            Basis::S => {
                let jt = jacobi_trudi_h::<C>(lambda);
                let mut acc = MultiPoly::zero(self.nvars);
                for (mu, c) in jt.terms() {
                    acc = acc.add(&self.basis_poly(Basis::H, mu).scale(c));
                }
                acc
            }
            Basis::M => m_poly(lambda, self.nvars),
        };
        self.products.insert((basis, lambda.clone()), p.clone());
        p
    }

    pub fn eval(&mut self, x: &SymExpansion<C>) -> MultiPoly<C> {
        let mut acc = MultiPoly::zero(self.nvars);
        for (l, c) in x.terms() {
            acc = acc.add(&self.basis_poly(x.basis(), l).scale(c));
        }
        acc
    }
}

/// Exact expansion of `x` into monomials in `x_1..x_N`.
pub fn expansion_to_polynomial<C: Coefficient>(x: &SymExpansion<C>, nvars: usize) -> MultiPoly<C> {
    PolyCache::new(nvars).eval(x)
}

/// Integer polynomial cache, the common case.
pub type IntPolyCache = PolyCache<BigInt>;
