//! Exhaustive certification of the h-coefficients `c_μ`.
//!
//! Each `c_μ` is computed three ways: the signed sum over the case diagram,
//! the e-coefficient of `X_G` read off proper-coloring counts, and the number
//! of positive tableaux left unmatched by the injections.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::coefficients::coefficient_c_with;
use crate::error::{Error, Result};
use crate::injections::{certify, Checks, Counterexample};
use crate::order::{enumerate_hessenberg, HessenbergFunction};
use crate::symfunc::{
    brute_chromatic_x, coefficients_in_e_oracle, omega_on_s, partitions_max_len, s_to_h, Basis, IntPolyCache,
    Partition,
};
use crate::tableaux::{count_on, gasharov_expansion};

pub const SCHEMA: &str = "csf-cert/1";

/// Largest `n` verified unless the caller raises it.
pub const DEFAULT_BUDGET: usize = 8;

fn ser_bigint<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MuRecord {
    pub mu: Vec<u32>,
    pub case: String,
    #[serde(serialize_with = "ser_bigint")]
    pub c_signed: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub c_oracle: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub c_matching: BigInt,
    pub set_sizes: BTreeMap<String, usize>,
    pub checks: Checks,
    pub counterexamples: Vec<Counterexample>,
    pub subcases: BTreeMap<String, u64>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub schema: &'static str,
    pub f: String,
    pub n: usize,
    pub bounce: usize,
    /// `"full"`, or `"oracle-only"` when `b(f) > 3` and only the
    /// Gasharov expansion is compared with the coloring oracle.
    pub scope: &'static str,
    pub records: Vec<MuRecord>,
    pub failures: Vec<String>,
    pub passed: bool,
}

impl Certificate {
    /// `μ ↦ c_μ` for the records whose value is nonzero.
    pub fn nonzero(&self) -> BTreeMap<Vec<u32>, BigInt> {
        self.records
            .iter()
            .filter(|r| !r.c_signed.is_zero())
            .map(|r| (r.mu.clone(), r.c_signed.clone()))
            .collect()
    }
}

/// Certifies every `c_μ` of `f`. Failed checks are recorded in the
/// certificate, never returned as errors.
pub fn verify_function(f: &HessenbergFunction) -> Result<Certificate> {
    let b = f.bounce_number();
    if b > 3 {
        return Err(Error::BounceTooLarge(b));
    }
    let n = f.n();
    let mut failures = vec![];
    let oracle = coefficients_in_e_oracle(f)?;
    for (lambda, c) in oracle.terms() {
        if lambda.len() > 3 && !c.is_zero() {
            failures.push(format!("oracle has e{:?} with more than three parts", lambda.parts()));
        }
    }
    let mut memo: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut records = vec![];
    for mu in partitions_max_len(n as u32, 3) {
        let c_signed =
            coefficient_c_with(&mu, |l| *memo.entry(l.clone()).or_insert_with(|| count_on(f, l, f.label_mask())))?;
        let c_oracle = oracle.coeff(&mu);
        let rec = certify(f, &mu, false)?;
        let c_matching = BigInt::from(rec.c_matching);
        let mut set_sizes = BTreeMap::new();
        for node in &rec.nodes {
            set_sizes.insert(format!("{} {:?}", node.label, node.parts), node.size);
        }
        let mut passed = rec.checks.all() && rec.counterexamples.is_empty();
        if c_signed != c_oracle || c_signed != c_matching {
            passed = false;
            failures.push(format!(
                "mu {:?}: signed {c_signed}, oracle {c_oracle}, matching {c_matching}",
                mu.parts()
            ));
        }
        if c_signed.is_negative() {
            passed = false;
            failures.push(format!("mu {:?}: negative coefficient {c_signed}", mu.parts()));
        }
        if !rec.checks.all() {
            failures.push(format!("mu {:?}: injection checks failed {:?}", mu.parts(), rec.checks));
        }
        records.push(MuRecord {
            mu: mu.parts().to_vec(),
            case: rec.case,
            c_signed,
            c_oracle,
            c_matching,
            set_sizes,
            checks: rec.checks,
            counterexamples: rec.counterexamples,
            subcases: rec.histogram,
            passed,
        });
    }
    let passed = failures.is_empty();
    Ok(Certificate { schema: SCHEMA, f: f.to_string(), n, bounce: b, scope: "full", records, failures, passed })
}

/// Certificate for `b(f) > 3`: the h-expansion from Gasharov must equal the
/// e-expansion from colorings. Nothing is claimed about signs.
fn verify_oracle_only(f: &HessenbergFunction) -> Result<Certificate> {
    let via_tableaux = s_to_h(&gasharov_expansion(f))?.relabel(Basis::E);
    let oracle = coefficients_in_e_oracle(f)?;
    let mut failures = vec![];
    if via_tableaux != oracle {
        failures.push(format!("tableau route {via_tableaux} differs from coloring route {oracle}"));
    }
    Ok(Certificate {
        schema: SCHEMA,
        f: f.to_string(),
        n: f.n(),
        bounce: f.bounce_number(),
        scope: "oracle-only",
        records: vec![],
        passed: failures.is_empty(),
        failures,
    })
}

/// Full certificate when `b(f) <= 3`, otherwise the oracle-only one.
pub fn verify_any(f: &HessenbergFunction) -> Result<Certificate> {
    if f.bounce_number() > 3 {
        verify_oracle_only(f)
    } else {
        verify_function(f)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub schema: &'static str,
    pub n_max: usize,
    pub bounce_filter: Option<usize>,
    pub functions: usize,
    pub failures: usize,
    pub failed: Vec<String>,
    pub certificates: Vec<Certificate>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Certifies every Hessenberg function with `1 <= n <= n_max`, optionally
/// only those with the given bounce number. Work is spread over threads and
/// certificates come back in enumeration order.
pub fn verify_range(n_max: usize, bounce_filter: Option<usize>, budget: usize) -> Result<Summary> {
    if n_max > budget {
        return Err(Error::Budget(format!("n = {n_max} exceeds the budget {budget}")));
    }
    let start = Instant::now();
    let fs: Vec<HessenbergFunction> = (1..=n_max).flat_map(|n| enumerate_hessenberg(n, bounce_filter)).collect();
    let certificates = fs.par_iter().map(verify_any).collect::<Result<Vec<_>>>()?;
    let failed: Vec<String> = certificates.iter().filter(|c| !c.passed).map(|c| c.f.clone()).collect();
    Ok(Summary {
        schema: SCHEMA,
        n_max,
        bounce_filter,
        functions: certificates.len(),
        failures: failed.len(),
        failed,
        certificates,
        elapsed: start.elapsed(),
    })
}

/// Compares, as polynomials in `n` variables, the signed h-expansion, the
/// Gasharov expansion and a direct count of proper colorings.
pub fn oracle_crosscheck(f: &HessenbergFunction) -> bool {
    let n = f.n();
    let Ok(signed) = crate::coefficients::signed_h_expansion(f) else { return false };
    let Ok(brute) = brute_chromatic_x(f, n) else { return false };
    let Ok(omega_s) = omega_on_s(&gasharov_expansion(f)) else { return false };
    let mut cache = IntPolyCache::new(n);
    // ωX_G = Σ c_μ h_μ, so X_G = Σ c_μ e_μ
    let from_signed = cache.eval(&signed.relabel(Basis::E));
    let from_tableaux = cache.eval(&omega_s);
    from_signed == brute && from_tableaux == brute
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(v: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(v).unwrap()
    }

    fn nz(c: &Certificate) -> Vec<(Vec<u32>, i64)> {
        c.nonzero().into_iter().map(|(k, v)| (k, v.to_i64().unwrap())).collect()
    }

    #[test]
    fn examples() {
        let c = verify_function(&hf(&[1, 3, 4, 4])).unwrap();
        assert!(c.passed, "{:?}", c.failures);
        assert_eq!(nz(&c), vec![(vec![2, 1, 1], 1), (vec![3, 1], 3)]);
        let c = verify_function(&hf(&[3, 3, 3])).unwrap();
        assert_eq!(nz(&c), vec![(vec![3], 6)]);
        let c = verify_function(&hf(&[1, 2, 3])).unwrap();
        assert_eq!(nz(&c), vec![(vec![1, 1, 1], 1)]);
        assert!(matches!(verify_function(&hf(&[1, 2, 3, 4])), Err(Error::BounceTooLarge(4))));
    }

    #[test]
    fn ranges() {
        let s = verify_range(4, None, DEFAULT_BUDGET).unwrap();
        assert_eq!((s.functions, s.failures), (22, 0));
        let s = verify_range(3, Some(3), DEFAULT_BUDGET).unwrap();
        assert_eq!((s.functions, s.failures), (1, 0));
        let s = verify_range(1, None, DEFAULT_BUDGET).unwrap();
        assert_eq!((s.functions, s.failures), (1, 0));
        assert!(matches!(verify_range(9, None, DEFAULT_BUDGET), Err(Error::Budget(_))));
    }

    #[test]
    fn crosscheck() {
        for v in [&[2, 3, 4, 4][..], &[1, 3, 4, 4], &[4, 4, 4, 4]] {
            assert!(oracle_crosscheck(&hf(v)));
        }
    }

    #[test]
    fn deterministic_json() {
        let a = serde_json::to_string(&verify_function(&hf(&[2, 3, 4, 5, 5])).unwrap()).unwrap();
        let b = serde_json::to_string(&verify_function(&hf(&[2, 3, 4, 5, 5])).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
