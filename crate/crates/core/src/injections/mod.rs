//! Sign-reversing injections on the case diagrams, with set-level checks.
//!
//! [`certify`] builds every tableau set of the diagram of `μ`, applies all maps,
//! and checks the resulting matching. Nothing is trusted: tilde sets are literal
//! set differences, and every entry-wise claim about them is checked against
//! the sets.

pub mod maps;

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

pub use maps::{
    in_sigma31_image, phi2, phi_bounce2, phi_case2, phi_case3, phi_case4, sigma21_tilde, sigma32_tilde, Phi1Tag,
    Phi2Outcome, Sigma32Case,
};

use crate::coefficients::{case_of, is_partition3, CaseTag, Comp3};
use crate::error::{Error, Result};
use crate::order::HessenbergFunction;
use crate::symfunc::Partition;
use crate::tableaux::{concat, enumerate_tableaux, is_f_tableau, sigma_move, split_left, FTableau};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapTrace {
    pub map: String,
    pub subcase: String,
    pub input: FTableau,
    pub output: FTableau,
}

/// A tableau set with a σ_{3→1} image removed.
#[derive(Debug, Clone, Serialize)]
pub struct TildeSet {
    pub shape: Comp3,
    pub sign: i8,
    pub members: Vec<FTableau>,
    pub removed_via: String,
}

/// `T(target) − σ_{3→1}(T(removed_source))`, moving `width` boxes. A source that
/// is not a partition removes nothing.
pub fn tilde_set(f: &HessenbergFunction, target: Comp3, sign: i8, removed_source: Comp3, width: usize) -> TildeSet {
    let removed: HashSet<FTableau> = enumerate_tableaux(f, &removed_source)
        .iter()
        .filter_map(|t| sigma_move(t, 3, 1, width).ok())
        .collect();
    let members = enumerate_tableaux(f, &target).into_iter().filter(|t| !removed.contains(t)).collect();
    TildeSet { shape: target, sign, members, removed_via: format!("sigma31 x{width} from {removed_source:?}") }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub well_defined: bool,
    pub injective: bool,
    pub disjoint: bool,
    pub codomain_ok: bool,
    /// Every negative tableau is matched.
    pub complete: bool,
    /// Entry-wise claims and intermediate validity.
    pub assertions_ok: bool,
}

impl Checks {
    fn new() -> Self {
        Self { well_defined: true, injective: true, disjoint: true, codomain_ok: true, complete: true, assertions_ok: true }
    }

    pub fn all(&self) -> bool {
        self.well_defined && self.injective && self.disjoint && self.codomain_ok && self.complete && self.assertions_ok
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    WellDefined,
    Injective,
    Disjoint,
    CodomainOk,
    Complete,
    AssertionsOk,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub check: Check,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<MapTrace>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NodeSummary {
    pub label: &'static str,
    pub parts: Comp3,
    pub sign: i8,
    pub size: usize,
}

/// Outcome of running the injections for one `(f, μ)`.
#[derive(Debug, Clone, Serialize)]
pub struct InjectionRecord {
    pub f: Vec<usize>,
    pub mu: Vec<u32>,
    /// `"I"`..`"IV"`, or `"bounce2"` when `b(f) <= 2`.
    pub case: String,
    pub nodes: Vec<NodeSummary>,
    pub pairings: Vec<MapTrace>,
    pub residual_positive: Vec<FTableau>,
    pub c_matching: i64,
    pub unmatched_negative: usize,
    pub checks: Checks,
    pub counterexamples: Vec<Counterexample>,
    pub histogram: BTreeMap<String, u64>,
}

const MAX_COUNTEREXAMPLES: usize = 32;

struct Node {
    label: &'static str,
    parts: Comp3,
    sign: i8,
    members: Vec<FTableau>,
    index: HashSet<FTableau>,
}

struct Pairing {
    from: usize,
    to: usize,
    trace: MapTrace,
}

struct Run<'a> {
    f: &'a HessenbergFunction,
    nodes: Vec<Node>,
    pairings: Vec<Pairing>,
    checks: Checks,
    counterexamples: Vec<Counterexample>,
    histogram: BTreeMap<String, u64>,
}

fn prec_last(f: &HessenbergFunction, below: Option<u8>, row: &[u8]) -> bool {
    match (below, row.last()) {
        (Some(x), Some(&y)) => f.prec(x, y),
        _ => false,
    }
}

impl<'a> Run<'a> {
    fn new(f: &'a HessenbergFunction) -> Self {
        Self {
            f,
            nodes: vec![],
            pairings: vec![],
            checks: Checks::new(),
            counterexamples: vec![],
            histogram: BTreeMap::new(),
        }
    }

    fn node(&mut self, label: &'static str, parts: Comp3, sign: i8) -> usize {
        let members = if is_partition3(parts) { enumerate_tableaux(self.f, &parts) } else { vec![] };
        let index = members.iter().cloned().collect();
        self.nodes.push(Node { label, parts, sign, members, index });
        self.nodes.len() - 1
    }

    fn fail(&mut self, check: Check, message: String, trace: Option<MapTrace>) {
        let flag = match check {
            Check::WellDefined => &mut self.checks.well_defined,
            Check::Injective => &mut self.checks.injective,
            Check::Disjoint => &mut self.checks.disjoint,
            Check::CodomainOk => &mut self.checks.codomain_ok,
            Check::Complete => &mut self.checks.complete,
            Check::AssertionsOk => &mut self.checks.assertions_ok,
        };
        *flag = false;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample { check, message, trace });
        }
    }

    fn record(&mut self, from: usize, to: usize, trace: MapTrace, excluded: Option<&HashSet<FTableau>>) {
        if !is_f_tableau(self.f, &trace.output) {
            self.fail(Check::WellDefined, "output is not an f-tableau".into(), Some(trace));
            return;
        }
        if !self.nodes[to].index.contains(&trace.output) {
            self.fail(Check::CodomainOk, format!("output not in T{:?}", self.nodes[to].parts), Some(trace));
            return;
        }
        if excluded.is_some_and(|x| x.contains(&trace.output)) {
            self.fail(Check::CodomainOk, "output lies in the cancelled image".into(), Some(trace));
            return;
        }
        *self.histogram.entry(format!("{} {}", trace.map, trace.subcase)).or_default() += 1;
        self.pairings.push(Pairing { from, to, trace });
    }

    /// Applies σ_{3→1} to all of `from`, returning the image.
    fn sigma31(&mut self, from: usize, to: usize, width: usize) -> HashSet<FTableau> {
        let name = format!("sigma31 {}->{}", self.nodes[from].label, self.nodes[to].label);
        let mut image = HashSet::new();
        for t in self.nodes[from].members.clone() {
            match sigma_move(&t, 3, 1, width) {
                Ok(out) => {
                    image.insert(out.clone());
                    let trace = MapTrace { map: name.clone(), subcase: format!("x{width}"), input: t, output: out };
                    self.record(from, to, trace, None);
                }
                Err(e) => self.fail(Check::WellDefined, format!("{name} on {t}: {e}"), None),
            }
        }
        image
    }

    fn tilde(&self, node: usize, removed: &HashSet<FTableau>) -> Vec<FTableau> {
        self.nodes[node].members.iter().filter(|t| !removed.contains(t)).cloned().collect()
    }

    /// Full-level tilde membership, the reduced test by undoing the move, and
    /// an entry-wise criterion must all agree.
    fn check_tilde_reduction(
        &mut self,
        node: usize,
        removed: &HashSet<FTableau>,
        strip: usize,
        criterion: impl Fn(&FTableau) -> bool,
    ) {
        for t in self.nodes[node].members.clone() {
            let full = !removed.contains(&t);
            let (_, s) = split_left(&t, strip);
            let reduced = !in_sigma31_image(self.f, &s, 1);
            let entrywise = criterion(&s);
            if full != reduced || full != entrywise {
                self.fail(
                    Check::AssertionsOk,
                    format!(
                        "tilde membership of {t} in T{:?}: full {full}, reduced {reduced}, entry-wise {entrywise}",
                        self.nodes[node].parts
                    ),
                    None,
                );
            }
        }
    }

    /// Checks a fingerprint predicate on the images of named subcases.
    fn fingerprint(
        &mut self,
        images: &[(&'static str, FTableau)],
        name: &str,
        pred: impl Fn(&FTableau) -> bool,
        yes: &[&str],
        no: &[&str],
    ) {
        for (label, out) in images {
            let want = if yes.contains(label) {
                true
            } else if no.contains(label) {
                false
            } else {
                continue;
            };
            if pred(out) != want {
                self.fail(Check::Disjoint, format!("fingerprint {name} is {} on {label} image {out}", !want), None);
            }
        }
    }

    fn finish(mut self, mu: &Partition, case: String, keep_traces: bool) -> InjectionRecord {
        let mut targets: HashMap<(usize, &FTableau), &str> = HashMap::new();
        let mut used: HashMap<(usize, &FTableau), usize> = HashMap::new();
        let mut problems = vec![];
        for p in &self.pairings {
            if self.nodes[p.from].sign == self.nodes[p.to].sign {
                problems.push((Check::AssertionsOk, "pairing does not reverse sign".to_string(), p.trace.clone()));
            }
            if let Some(prev) = targets.insert((p.to, &p.trace.output), &p.trace.map) {
                let check = if prev == p.trace.map { Check::Injective } else { Check::Disjoint };
                problems.push((check, format!("output also produced by {prev}"), p.trace.clone()));
            }
            *used.entry((p.from, &p.trace.input)).or_default() += 1;
            *used.entry((p.to, &p.trace.output)).or_default() += 1;
        }
        for ((node, t), count) in &used {
            if *count > 1 && !problems.iter().any(|(_, _, tr)| &tr.output == *t) {
                problems.push((
                    Check::Disjoint,
                    format!("{t} in T{:?} is matched {count} times", self.nodes[*node].parts),
                    MapTrace { map: String::new(), subcase: String::new(), input: (*t).clone(), output: (*t).clone() },
                ));
            }
        }
        let mut residual = vec![];
        let mut unmatched_negative = 0;
        for (i, node) in self.nodes.iter().enumerate() {
            for t in &node.members {
                let hit = used.contains_key(&(i, t));
                if !hit && node.sign > 0 {
                    residual.push(t.clone());
                } else if !hit {
                    unmatched_negative += 1;
                }
            }
        }
        drop(targets);
        drop(used);
        for (check, msg, trace) in problems {
            self.fail(check, msg, Some(trace));
        }
        if unmatched_negative > 0 {
            self.fail(Check::Complete, format!("{unmatched_negative} negative tableaux are unmatched"), None);
        }
        let nodes = self
            .nodes
            .iter()
            .map(|n| NodeSummary { label: n.label, parts: n.parts, sign: n.sign, size: n.members.len() })
            .collect();
        let c_matching = residual.len() as i64;
        InjectionRecord {
            f: self.f.values(),
            mu: mu.parts().to_vec(),
            case,
            nodes,
            pairings: if keep_traces { self.pairings.into_iter().map(|p| p.trace).collect() } else { vec![] },
            residual_positive: if keep_traces { residual } else { vec![] },
            c_matching,
            unmatched_negative,
            checks: self.checks,
            counterexamples: self.counterexamples,
            histogram: self.histogram,
        }
    }
}

fn reduced_failure(run: &mut Run, map: &str, t: &FTableau, e: Error) {
    run.fail(Check::WellDefined, format!("{map} on {t}: {e}"), None);
}

fn reattach(run: &mut Run, map: &str, r: &FTableau, out: &FTableau) -> Option<FTableau> {
    match concat(r, out) {
        Ok(full) => Some(full),
        Err(e) => {
            run.fail(Check::WellDefined, format!("{map}: reattaching {out} to {r}: {e}"), None);
            None
        }
    }
}

fn case1(run: &mut Run, m: Comp3) {
    let [m1, m2, m3] = m;
    let a = run.node("A", [m1 - 2, m2, m3 + 2], -1);
    let b = run.node("B", [m1 - 2, m2 + 1, m3 + 1], 1);
    let c = run.node("C", [m1 - 1, m2 - 1, m3 + 2], 1);
    let d = run.node("D", [m1 - 1, m2 + 1, m3], -1);
    let e = run.node("E", [m1, m2 - 1, m3 + 1], -1);
    let top = run.node("F", m, 1);
    let img_a = run.sigma31(a, top, 2);
    let img_c = run.sigma31(c, e, 1);
    let img_b = run.sigma31(b, d, 1);
    let f = run.f;
    let strip = m3 as usize;
    run.check_tilde_reduction(d, &img_b, strip, |s| !prec_last(f, s.row(1).first().copied(), s.row(0)));
    run.check_tilde_reduction(e, &img_c, strip, |s| !prec_last(f, s.row(1).get(1).copied(), s.row(0)));

    let width = m2 - m3 + 1;
    let k = m1 - m2 - 2;
    let mut tags: HashMap<FTableau, Phi1Tag> = HashMap::new();
    for t in run.tilde(d, &img_b) {
        let (r, s) = split_left(&t, strip);
        match sigma21_tilde(f, &s, width as usize, k as usize) {
            Ok((tag, out)) => {
                let Some(full) = reattach(run, "phi1", &r, &out) else { continue };
                tags.insert(full.clone(), tag);
                let trace = MapTrace { map: "phi1".into(), subcase: tag.to_string(), input: t, output: full };
                run.record(d, top, trace, Some(&img_a));
            }
            Err(err) => reduced_failure(run, "phi1", &t, err),
        }
    }
    for t in run.tilde(e, &img_c) {
        let (r, s) = split_left(&t, strip);
        let lookup = |u: &FTableau| concat(&r, u).ok().and_then(|full| tags.get(&full).copied());
        match phi2(f, &s, width as usize, k, &lookup) {
            Ok(outcome) => {
                for (name, x) in &outcome.intermediates {
                    if !is_f_tableau(f, x) {
                        run.fail(Check::AssertionsOk, format!("phi2 on {t}: {name} = {x} is not an f-tableau"), None);
                    }
                }
                for v in outcome.violations {
                    run.fail(Check::AssertionsOk, format!("phi2 on {t}: {v}"), None);
                }
                let Some(full) = reattach(run, "phi2", &r, &outcome.output) else { continue };
                let trace = MapTrace { map: "phi2".into(), subcase: outcome.subcase, input: t, output: full };
                run.record(e, top, trace, Some(&img_a));
            }
            Err(err) => reduced_failure(run, "phi2", &t, err),
        }
    }
}

fn case2(run: &mut Run, m: Comp3) {
    let [m1, m2, m3] = m;
    let p1 = run.node("P1", [m1 - 1, m2 - 1, m3 + 2], 1);
    let n1 = run.node("N1", [m1 - 1, m2, m3 + 1], -1);
    let n2 = run.node("N2", [m1, m2 - 1, m3 + 1], -1);
    let top = run.node("F", m, 1);
    let img_n1 = run.sigma31(n1, top, 1);
    let img_p1 = run.sigma31(p1, n2, 1);
    let f = run.f;
    let strip = m3 as usize;
    run.check_tilde_reduction(n2, &img_p1, strip, |s| !prec_last(f, s.row(1).get(1).copied(), s.row(0)));
    let width = (m2 - 1 - m3) as usize;
    let mut images = vec![];
    for t in run.tilde(n2, &img_p1) {
        let (r, s) = split_left(&t, strip);
        match phi_case2(f, &s, width) {
            Ok((label, out)) => {
                let Some(full) = reattach(run, "case2", &r, &out) else { continue };
                images.push((label, out));
                let trace = MapTrace { map: "case2".into(), subcase: label.into(), input: t, output: full };
                run.record(n2, top, trace, Some(&img_n1));
            }
            Err(err) => reduced_failure(run, "case2", &t, err),
        }
    }
    let p = |a: u8, b: u8| f.prec(a, b);
    let w = width;
    run.fingerprint(
        &images,
        "b2<e1",
        |o| o.row(1).get(1).is_some_and(|&b| p(b, o.row(0)[w + 1])),
        &["(3-1)", "(3-2)"],
        &["(1-1)", "(1-2)", "(2-1)", "(2-2)"],
    );
    run.fingerprint(&images, "a1<d1", |o| p(o.row(0)[0], o.row(0)[w]), &["(3-1)"], &["(3-2)"]);
    run.fingerprint(&images, "a2<d2", |o| p(o.row(1)[0], o.row(1)[w]), &["(1-1)"], &["(1-2)", "(2-1)", "(2-2)"]);
    run.fingerprint(&images, "e1<a2", |o| p(o.row(0)[w + 1], o.row(1)[0]), &["(1-2)", "(2-2)"], &["(2-1)"]);
    run.fingerprint(&images, "e1<d2", |o| p(o.row(0)[w + 1], o.row(1)[w]), &["(1-2)"], &["(2-2)"]);
}

fn case3(run: &mut Run, m: Comp3) {
    let [m1, m2, m3] = m;
    let p1 = run.node("P1", [m1 - 2, m2 + 1, m3 + 1], 1);
    let n1 = run.node("N1", [m1 - 1, m2, m3 + 1], -1);
    let d = run.node("D", [m1 - 1, m2 + 1, m3], -1);
    let top = run.node("F", m, 1);
    let img_p1 = run.sigma31(p1, d, 1);
    let img_n1 = run.sigma31(n1, top, 1);
    let f = run.f;
    let strip = m3 as usize;
    run.check_tilde_reduction(d, &img_p1, strip, |s| !prec_last(f, s.row(1).first().copied(), s.row(0)));
    let k = (m1 - m3 - 3).max(0) as usize;
    let mut images = vec![];
    for t in run.tilde(d, &img_p1) {
        let (r, s) = split_left(&t, strip);
        match phi_case3(f, &s, k) {
            Ok((label, out)) => {
                let Some(full) = reattach(run, "case3", &r, &out) else { continue };
                images.push((label, out));
                let trace = MapTrace { map: "case3".into(), subcase: label.into(), input: t, output: full };
                run.record(d, top, trace, Some(&img_n1));
            }
            Err(err) => reduced_failure(run, "case3", &t, err),
        }
    }
    let p = |a: u8, b: u8| f.prec(a, b);
    run.fingerprint(
        &images,
        "a2<d1",
        |o| p(o.row(1)[0], o.row(0)[k + 1]),
        &["<2-1>", "<2-3>"],
        &["<1-1>", "<1-2>", "<2-2>"],
    );
    run.fingerprint(&images, "e1<a2", |o| p(o.row(0)[k + 2], o.row(1)[0]), &["<1-2>", "<2-2>"], &["<1-1>"]);
    run.fingerprint(&images, "a1<e1", |o| p(o.row(0)[0], o.row(0)[k + 2]), &["<1-2>"], &["<2-2>"]);
    run.fingerprint(&images, "b1<a2", |o| p(o.row(0)[1], o.row(1)[0]), &["<2-3>"], &["<2-1>"]);
}

fn case4(run: &mut Run, m: Comp3) {
    let q = m[1];
    let nb = run.node("N_beta", [q, q, q], -1);
    let ng = run.node("N_gamma", [q, q, q], -1);
    let top = run.node("F", m, 1);
    let f = run.f;
    for t in run.nodes[nb].members.clone() {
        match phi_case4(f, &t) {
            Ok((x, y)) => {
                let t1 = MapTrace { map: "case4 phi1".into(), subcase: "column".into(), input: t.clone(), output: x };
                run.record(nb, top, t1, None);
                let t2 = MapTrace { map: "case4 phi2".into(), subcase: "column".into(), input: t, output: y };
                run.record(ng, top, t2, None);
            }
            Err(err) => reduced_failure(run, "case4", &t, err),
        }
    }
}

fn bounce2(run: &mut Run, m: Comp3) {
    let neg = run.node("N", [m[0] - 1, m[1] + 1, m[2]], -1);
    let top = run.node("F", m, 1);
    let f = run.f;
    for t in run.nodes[neg].members.clone() {
        match phi_bounce2(f, &t) {
            Ok(out) => {
                let trace = MapTrace { map: "bounce2".into(), subcase: "sigma21".into(), input: t, output: out };
                run.record(neg, top, trace, None);
            }
            Err(err) => reduced_failure(run, "bounce2", &t, err),
        }
    }
}

fn check_mu(f: &HessenbergFunction, mu: &Partition) -> Result<Comp3> {
    if mu.weight() as usize != f.n() || mu.len() > 3 {
        return Err(Error::PreconditionViolated(format!(
            "{:?} is not a partition of {} with at most three parts",
            mu.parts(),
            f.n()
        )));
    }
    Ok(mu.padded3())
}

/// Runs every injection of the diagram of `μ` and checks the matching. For
/// `b(f) <= 2` the single bounce-two map is used.
pub fn certify(f: &HessenbergFunction, mu: &Partition, keep_traces: bool) -> Result<InjectionRecord> {
    let b = f.bounce_number();
    if b > 3 {
        return Err(Error::BounceTooLarge(b));
    }
    let m = check_mu(f, mu)?;
    let mut run = Run::new(f);
    if b <= 2 {
        bounce2(&mut run, m);
        return Ok(run.finish(mu, "bounce2".into(), keep_traces));
    }
    let case = case_of(mu)?;
    match case {
        CaseTag::I => case1(&mut run, m),
        CaseTag::II => case2(&mut run, m),
        CaseTag::III => case3(&mut run, m),
        CaseTag::IV => case4(&mut run, m),
    }
    Ok(run.finish(mu, case.to_string(), keep_traces))
}

/// Like [`certify`] for `b(f) = 3`, insisting on the given case.
pub fn certify_case(f: &HessenbergFunction, mu: &Partition, expected: CaseTag) -> Result<InjectionRecord> {
    let found = case_of(mu)?;
    if found != expected {
        return Err(Error::CaseMismatch { mu: mu.parts().to_vec(), expected: expected.to_string(), found: found.to_string() });
    }
    let b = f.bounce_number();
    if b != 3 {
        return Err(Error::BounceMismatch { expected: "3".into(), found: b });
    }
    certify(f, mu, true)
}

/// Whether `u` is a first-map image for `(f, μ)` in Case I, and of which branch.
pub fn classify_t_plus(images: &HashMap<FTableau, Phi1Tag>, u: &FTableau) -> Option<Phi1Tag> {
    images.get(u).copied()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::coefficient_c;
    use num_bigint::BigInt;

    fn hf(v: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(v).unwrap()
    }

    fn p(v: &[i64]) -> Partition {
        Partition::new(v).unwrap()
    }

    fn t(s: &str) -> FTableau {
        s.parse().unwrap()
    }

    #[test]
    fn tilde_examples() {
        let f = hf(&[2, 4, 5, 6, 6, 6]);
        let full = enumerate_tableaux(&f, &[3, 3, 0]);
        assert_eq!(tilde_set(&f, [3, 3, 0], -1, [2, 3, 1], 1).members, full);
        let f = hf(&[1, 3, 4, 4]);
        let x = tilde_set(&f, [3, 1, 0], 1, [2, 1, 1], 1);
        assert_eq!(x.members.len(), enumerate_tableaux(&f, &[3, 1]).len() - 1);
    }

    #[test]
    fn worked_instances() {
        let f = hf(&[1, 3, 4, 4]);
        let rec = certify_case(&f, &p(&[3, 1]), CaseTag::III).unwrap();
        assert!(rec.checks.all(), "{:?}", rec.counterexamples);
        assert_eq!(rec.c_matching, 3);
        assert!(rec.pairings.iter().any(|x| x.input == t("1,2;3,4") && x.output == t("1,2,4;3")));

        let rec = certify(&hf(&[1, 2, 3]), &p(&[2, 1]), true).unwrap();
        assert_eq!(rec.case, "IV");
        assert!(rec.checks.all());
        assert_eq!(rec.c_matching, 0);

        let rec = certify(&hf(&[2, 4, 5, 6, 6, 6]), &p(&[4, 2]), true).unwrap();
        assert!(rec.checks.all(), "{:?}", rec.counterexamples);
        assert!(rec.pairings.iter().any(|x| x.map == "phi1" && x.input == t("1,2,3;4,5,6")));

        let rec = certify(&hf(&[2, 3, 4, 4]), &p(&[2, 2]), true).unwrap();
        assert_eq!(rec.case, "bounce2");
        assert_eq!(rec.c_matching, 2);

        assert!(matches!(certify_case(&f, &p(&[4]), CaseTag::II), Err(Error::CaseMismatch { .. })));
    }

    #[test]
    fn residual_matches_signed_sum_n6() {
        for f in crate::order::enumerate_hessenberg(6, Some(3)) {
            for mu in crate::symfunc::partitions_max_len(6, 3) {
                let rec = certify(&f, &mu, false).unwrap();
                assert!(rec.checks.all(), "{f} {mu:?} {:?}", rec.counterexamples);
                assert_eq!(BigInt::from(rec.c_matching), coefficient_c(&f, &mu).unwrap(), "{f} {mu:?}");
            }
        }
    }
}
