//! Machine checks of the structural claims about `J_m` and the background
//! facts on toughness of regular graphs.
//!
//! Each check produces a [`ClaimReport`]. A failing report carries a
//! [`Counterexample`] that can be re-checked against the graph with
//! elementary operations, without going through the solvers again.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::generators::{
    build_jm, complete, complete_bipartite, cycle_power, line_graph, petersen, GenError,
    JmLabeling, LabeledGraph,
};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{
    claw_centers, connectivity, cutsets_of_size, independence_number, induced_stars, toughness,
    Separator, Toughness,
};
use crate::rational::{ExtRational, Rational};

/// Default largest `m` for claims that need the toughness solver.
pub const TOUGHNESS_CEILING: usize = 7;
/// Default largest `m` for every other claim.
pub const STRUCTURE_CEILING: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[allow(non_camel_case_types)]
pub enum ClaimId {
    LEMMA_A,
    LEMMA_B,
    LEMMA_C,
    LEMMA_C_TRIANGLES,
    THEOREM,
    CLAW_CENTERS,
    NO_K14_AT_X,
    CYCLE_POWER_TOUGH,
    ALPHA_BOUND,
    MS_CONSISTENCY,
}

impl ClaimId {
    pub const ALL: [ClaimId; 10] = [
        ClaimId::LEMMA_A,
        ClaimId::LEMMA_B,
        ClaimId::LEMMA_C,
        ClaimId::LEMMA_C_TRIANGLES,
        ClaimId::THEOREM,
        ClaimId::CLAW_CENTERS,
        ClaimId::NO_K14_AT_X,
        ClaimId::CYCLE_POWER_TOUGH,
        ClaimId::ALPHA_BOUND,
        ClaimId::MS_CONSISTENCY,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::LEMMA_A => "LEMMA_A",
            ClaimId::LEMMA_B => "LEMMA_B",
            ClaimId::LEMMA_C => "LEMMA_C",
            ClaimId::LEMMA_C_TRIANGLES => "LEMMA_C_TRIANGLES",
            ClaimId::THEOREM => "THEOREM",
            ClaimId::CLAW_CENTERS => "CLAW_CENTERS",
            ClaimId::NO_K14_AT_X => "NO_K14_AT_X",
            ClaimId::CYCLE_POWER_TOUGH => "CYCLE_POWER_TOUGH",
            ClaimId::ALPHA_BOUND => "ALPHA_BOUND",
            ClaimId::MS_CONSISTENCY => "MS_CONSISTENCY",
        }
    }

    /// Claims about background graphs rather than a single `J_m`.
    pub fn is_background(self) -> bool {
        matches!(
            self,
            ClaimId::CYCLE_POWER_TOUGH | ClaimId::ALPHA_BOUND | ClaimId::MS_CONSISTENCY
        )
    }

    fn needs_toughness(self) -> bool {
        matches!(self, ClaimId::THEOREM | ClaimId::ALPHA_BOUND)
    }

    /// Hypothesis on `m` under which the claim is stated.
    fn admits(self, m: usize) -> Result<(), &'static str> {
        let ok = match self {
            ClaimId::LEMMA_A => m >= 3,
            ClaimId::LEMMA_B => m >= 5,
            ClaimId::LEMMA_C | ClaimId::LEMMA_C_TRIANGLES | ClaimId::THEOREM => {
                m >= 3 && m % 2 == 1
            }
            ClaimId::CLAW_CENTERS | ClaimId::NO_K14_AT_X => m >= 4,
            ClaimId::ALPHA_BOUND => m >= 3 && m % 2 == 1,
            ClaimId::CYCLE_POWER_TOUGH | ClaimId::MS_CONSISTENCY => true,
        };
        if ok {
            return Ok(());
        }
        Err(match self {
            ClaimId::LEMMA_A => "m >= 3",
            ClaimId::LEMMA_B => "m >= 5",
            ClaimId::CLAW_CENTERS | ClaimId::NO_K14_AT_X => "m >= 4",
            _ => "m >= 3 and odd",
        })
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name() == wanted)
            .ok_or_else(|| format!("unknown claim {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// Evidence against a claim, checkable with elementary graph operations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    /// A vertex set leaving `components` components.
    Cut {
        cut: VertexSet,
        components: usize,
    },
    /// The graph is complete, so no cut exists.
    Complete,
    IndependentSet {
        set: VertexSet,
    },
    /// An induced star.
    Star {
        center: usize,
        leaves: VertexSet,
    },
    /// A vertex expected to center a claw that does not.
    NoClaw {
        vertex: usize,
    },
    /// A triangle family that fails to partition `V ∖ exempt`.
    Triangles {
        triangles: Vec<[usize; 3]>,
        exempt: VertexSet,
    },
}

impl Counterexample {
    /// Re-validates the stated facts directly against `g`.
    pub fn recheck(&self, g: &Graph) -> bool {
        let n = g.order();
        match self {
            Counterexample::Cut { cut, components } => {
                cut.is_subset(g.vertices())
                    && *components >= 2
                    && count_components(g, *cut) == *components
            }
            Counterexample::Complete => g.is_complete(),
            Counterexample::IndependentSet { set } => {
                set.is_subset(g.vertices())
                    && set
                        .iter()
                        .all(|u| set.iter().all(|v| u == v || !g.has_edge(u, v)))
            }
            Counterexample::Star { center, leaves } => {
                *center < n
                    && !leaves.contains(*center)
                    && leaves.iter().all(|l| l < n && g.has_edge(*center, l))
                    && leaves
                        .iter()
                        .all(|u| leaves.iter().all(|v| u == v || !g.has_edge(u, v)))
            }
            Counterexample::NoClaw { vertex } => {
                if *vertex >= n {
                    return false;
                }
                let nb: Vec<usize> = (0..n).filter(|&u| g.has_edge(*vertex, u)).collect();
                !nb.iter().enumerate().any(|(i, &x)| {
                    nb[i + 1..].iter().enumerate().any(|(j, &y)| {
                        !g.has_edge(x, y)
                            && nb[i + j + 2..]
                                .iter()
                                .any(|&z| !g.has_edge(x, z) && !g.has_edge(y, z))
                    })
                })
            }
            Counterexample::Triangles { triangles, exempt } => {
                !spanning_triangles_ok(g, triangles, *exempt)
            }
        }
    }
}

/// Components of `g − cut` by a plain depth-first walk.
fn count_components(g: &Graph, cut: VertexSet) -> usize {
    let n = g.order();
    let mut seen: Vec<bool> = (0..n).map(|v| cut.contains(v)).collect();
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for (w, done) in seen.iter_mut().enumerate() {
                if !*done && g.has_edge(u, w) {
                    *done = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

fn spanning_triangles_ok(g: &Graph, triangles: &[[usize; 3]], exempt: VertexSet) -> bool {
    let n = g.order();
    let mut covered = VertexSet::EMPTY;
    for &[x, y, z] in triangles {
        if x >= n || y >= n || z >= n {
            return false;
        }
        if !(g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z)) {
            return false;
        }
        for v in [x, y, z] {
            if covered.contains(v) {
                return false;
            }
            covered.insert(v);
        }
    }
    covered.intersection(exempt).is_empty() && covered.union(exempt) == g.vertices()
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub subject: String,
    pub m: Option<usize>,
    pub verdict: Verdict,
    /// Outside the stated hypothesis; never part of the default ledger.
    pub exploratory: bool,
    pub payload: Value,
    pub counterexample: Option<Counterexample>,
}

impl ClaimReport {
    fn new(claim: ClaimId, subject: String, m: Option<usize>, payload: Value) -> Self {
        ClaimReport {
            claim,
            subject,
            m,
            verdict: Verdict::Pass,
            exploratory: false,
            payload,
            counterexample: None,
        }
    }

    fn fail(mut self, cx: Counterexample) -> Self {
        self.verdict = Verdict::Fail;
        self.counterexample = Some(cx);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{claim} is stated for {requirement}, got m={m}")]
    Hypothesis {
        claim: ClaimId,
        m: usize,
        requirement: &'static str,
    },
    #[error("{claim} has no parameter in the requested range")]
    EmptyRange { claim: ClaimId },
    #[error(transparent)]
    Generator(#[from] GenError),
}

fn admit(claim: ClaimId, m: usize) -> Result<(), VerifyError> {
    claim
        .admits(m)
        .map_err(|requirement| VerifyError::Hypothesis {
            claim,
            m,
            requirement,
        })
}

fn subject(m: usize) -> String {
    format!("J_{m}")
}

fn names(l: &JmLabeling, s: VertexSet) -> Vec<String> {
    s.iter().map(|v| l.name(v)).collect()
}

fn jm_report(claim: ClaimId, l: &JmLabeling, payload: Value) -> ClaimReport {
    ClaimReport::new(claim, subject(l.m()), Some(l.m()), payload)
}

/// `κ(J_m) = 4`.
pub fn check_lemma_a(lg: &LabeledGraph) -> ClaimReport {
    let (g, l) = (&lg.graph, &lg.labeling);
    let cert = connectivity(g);
    let sep = match cert.witness {
        Separator::Cut(s) => s,
        Separator::Complete => VertexSet::EMPTY,
    };
    let report = jm_report(
        ClaimId::LEMMA_A,
        l,
        json!({
            "connectivity": cert.kappa,
            "expected": 4,
            "separator": names(l, sep),
        }),
    );
    if cert.kappa == 4 {
        return report;
    }
    match cert.witness {
        Separator::Cut(s) => report.fail(Counterexample::Cut {
            cut: s,
            components: g.component_count(s),
        }),
        Separator::Complete => report.fail(Counterexample::Complete),
    }
}

/// Every 4-vertex cut-set isolates a vertex of `A ∪ B` or is
/// `{a_i, a_j, b_i, b_j}`.
pub fn check_lemma_b(lg: &LabeledGraph) -> ClaimReport {
    let (g, l) = (&lg.graph, &lg.labeling);
    let m = l.m();
    let ab = l.a_set().union(l.b_set());
    let mut isolating = 0usize;
    let mut paired = 0usize;
    let mut bad = Vec::new();
    let cutsets = cutsets_of_size(g, 4);
    for &s in &cutsets {
        let isolates = ab.difference(s).iter().any(|v| g.neighbors(v).is_subset(s));
        let pair = (1..=m).any(|i| {
            (i + 1..=m).any(|j| s == [l.a(i), l.a(j), l.b(i), l.b(j)].into_iter().collect())
        });
        isolating += isolates as usize;
        paired += pair as usize;
        if !isolates && !pair {
            bad.push(s);
        }
    }
    let violating: Vec<Value> = bad
        .iter()
        .map(|&s| {
            json!({
                "cut": names(l, s),
                "components": g
                    .components(s)
                    .into_iter()
                    .map(|c| names(l, c))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    let report = jm_report(
        ClaimId::LEMMA_B,
        l,
        json!({
            "cutsets": cutsets.len(),
            "isolating": isolating,
            "paired": paired,
            "violating": violating,
        }),
    );
    match bad.first() {
        None => report,
        Some(&s) => report.fail(Counterexample::Cut {
            cut: s,
            components: g.component_count(s),
        }),
    }
}

/// Triangles `{c_i, b_i, b_{i+1}}` for odd `i` and `{c_i, a_i, a_{i+1}}` for
/// even `i`, `1 ≤ i ≤ m−1`.
pub fn lemma_c_triangles(l: &JmLabeling) -> Vec<[usize; 3]> {
    (1..l.m())
        .map(|i| {
            if i % 2 == 1 {
                [l.c(i), l.b(i), l.b(i + 1)]
            } else {
                [l.c(i), l.a(i), l.a(i + 1)]
            }
        })
        .collect()
}

/// The triangles partition `V ∖ {a_1, b_m}`.
pub fn check_lemma_c_triangles(lg: &LabeledGraph) -> ClaimReport {
    let (g, l) = (&lg.graph, &lg.labeling);
    let triangles = lemma_c_triangles(l);
    let exempt: VertexSet = [l.a(1), l.b(l.m())].into_iter().collect();
    let report = jm_report(
        ClaimId::LEMMA_C_TRIANGLES,
        l,
        json!({
            "triangles": triangles
                .iter()
                .map(|t| t.iter().map(|&v| l.name(v)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "uncovered": names(l, exempt),
        }),
    );
    if spanning_triangles_ok(g, &triangles, exempt) {
        report
    } else {
        report.fail(Counterexample::Triangles { triangles, exempt })
    }
}

/// `α(J_m) = m − 1`, together with the spanning-triangle argument.
pub fn check_lemma_c(lg: &LabeledGraph) -> ClaimReport {
    let (g, l) = (&lg.graph, &lg.labeling);
    let cert = independence_number(g);
    let triangles = check_lemma_c_triangles(lg);
    let report = jm_report(
        ClaimId::LEMMA_C,
        l,
        json!({
            "alpha": cert.alpha,
            "expected": l.m() - 1,
            "independent_set": names(l, cert.witness),
            "triangles_span": triangles.passed(),
        }),
    );
    if cert.alpha != l.m() - 1 {
        report.fail(Counterexample::IndependentSet { set: cert.witness })
    } else if let Some(cx) = triangles.counterexample {
        report.fail(cx)
    } else {
        report
    }
}

fn toughness_counterexample(g: &Graph, t: &Toughness) -> Counterexample {
    match t.certificate() {
        Some(c) => Counterexample::Cut {
            cut: c.witness_cut,
            components: c.component_count,
        },
        None => {
            debug_assert!(g.is_complete());
            Counterexample::Complete
        }
    }
}

fn toughness_payload(t: &Toughness, label: impl Fn(VertexSet) -> Value) -> Value {
    let mut v = t.to_json();
    if let Some(c) = t.certificate() {
        v["witness_names"] = label(c.witness_cut);
    }
    v
}

/// `τ(J_m) = 2`.
pub fn check_theorem(lg: &LabeledGraph) -> ClaimReport {
    let (g, l) = (&lg.graph, &lg.labeling);
    let t = toughness(g);
    let report = jm_report(
        ClaimId::THEOREM,
        l,
        json!({
            "toughness": toughness_payload(&t, |s| json!(names(l, s))),
            "expected": Rational::integer(2),
        }),
    );
    if t.value() == ExtRational::Finite(Rational::integer(2)) {
        report
    } else {
        report.fail(toughness_counterexample(g, &t))
    }
}

/// Claw centers of `J_m` are exactly `X = {a_1, a_m, b_1, b_m}`, and no
/// induced `K_{1,4}` is centered in `X`.
pub fn check_claw_structure(lg: &LabeledGraph) -> ClaimReport {
    let (g, l) = (&lg.graph, &lg.labeling);
    let x = l.x_set();
    let centers = claw_centers(g);
    let k14 = no_k14_at_x(lg);
    let report = jm_report(
        ClaimId::CLAW_CENTERS,
        l,
        json!({
            "claw_centers": names(l, centers),
            "expected": names(l, x),
            "k14_at_x": k14.payload["k14_at_x"].clone(),
        }),
    );
    if let Some(v) = centers.difference(x).first() {
        let leaves = induced_stars(g, 3)
            .into_iter()
            .find(|s| s.center == v)
            .expect("claw center has a claw")
            .leaves;
        return report.fail(Counterexample::Star { center: v, leaves });
    }
    if let Some(v) = x.difference(centers).first() {
        return report.fail(Counterexample::NoClaw { vertex: v });
    }
    match k14.counterexample {
        Some(cx) => report.fail(cx),
        None => report,
    }
}

fn no_k14_at_x(lg: &LabeledGraph) -> ClaimReport {
    let (g, l) = (&lg.graph, &lg.labeling);
    let x = l.x_set();
    let stars: Vec<_> = induced_stars(g, 4)
        .into_iter()
        .filter(|s| x.contains(s.center))
        .collect();
    let report = jm_report(
        ClaimId::NO_K14_AT_X,
        l,
        json!({
            "k14_at_x": stars.iter().map(|s| l.name(s.center)).collect::<Vec<_>>(),
        }),
    );
    match stars.first() {
        None => report,
        Some(s) => report.fail(Counterexample::Star {
            center: s.center,
            leaves: s.leaves,
        }),
    }
}

/// No induced `K_{1,4}` centered in `X`.
pub fn check_no_k14_at_x(lg: &LabeledGraph) -> ClaimReport {
    no_k14_at_x(lg)
}

pub fn verify_lemma_a(m: usize) -> Result<ClaimReport, VerifyError> {
    admit(ClaimId::LEMMA_A, m)?;
    Ok(check_lemma_a(&build_jm(m)?))
}

pub fn verify_lemma_b(m: usize) -> Result<ClaimReport, VerifyError> {
    admit(ClaimId::LEMMA_B, m)?;
    Ok(check_lemma_b(&build_jm(m)?))
}

/// Runs the cut-set check for any `m ≥ 3`, marking reports outside the
/// stated hypothesis as exploratory.
pub fn verify_lemma_b_exploratory(m: usize) -> Result<ClaimReport, VerifyError> {
    let mut report = check_lemma_b(&build_jm(m)?);
    report.exploratory = ClaimId::LEMMA_B.admits(m).is_err();
    Ok(report)
}

pub fn verify_lemma_c(m: usize) -> Result<ClaimReport, VerifyError> {
    admit(ClaimId::LEMMA_C, m)?;
    Ok(check_lemma_c(&build_jm(m)?))
}

pub fn verify_lemma_c_triangles(m: usize) -> Result<ClaimReport, VerifyError> {
    admit(ClaimId::LEMMA_C_TRIANGLES, m)?;
    Ok(check_lemma_c_triangles(&build_jm(m)?))
}

pub fn verify_theorem(m: usize) -> Result<ClaimReport, VerifyError> {
    admit(ClaimId::THEOREM, m)?;
    Ok(check_theorem(&build_jm(m)?))
}

pub fn verify_claw_structure(m: usize) -> Result<ClaimReport, VerifyError> {
    admit(ClaimId::CLAW_CENTERS, m)?;
    Ok(check_claw_structure(&build_jm(m)?))
}

pub fn verify_no_k14_at_x(m: usize) -> Result<ClaimReport, VerifyError> {
    admit(ClaimId::NO_K14_AT_X, m)?;
    Ok(check_no_k14_at_x(&build_jm(m)?))
}

/// Claw-free graphs have toughness exactly `κ/2`.
pub fn check_ms_consistency(g: &Graph, subject: &str) -> ClaimReport {
    let claws = induced_stars(g, 3);
    let cert = connectivity(g);
    let t = toughness(g);
    let half_kappa = Rational::new(cert.kappa as u64, 2);
    let report = ClaimReport::new(
        ClaimId::MS_CONSISTENCY,
        subject.to_string(),
        None,
        json!({
            "claw_free": claws.is_empty(),
            "connectivity": cert.kappa,
            "toughness": t.to_json(),
            "half_connectivity": half_kappa,
        }),
    );
    if let Some(s) = claws.first() {
        return report.fail(Counterexample::Star {
            center: s.center,
            leaves: s.leaves,
        });
    }
    if t.value() == ExtRational::Finite(half_kappa) {
        report
    } else {
        report.fail(toughness_counterexample(g, &t))
    }
}

/// `C_n^k` is `k`-tough.
pub fn check_cycle_power(n: usize, k: usize) -> Result<ClaimReport, VerifyError> {
    let g = cycle_power(n, k)?;
    let t = toughness(&g);
    let report = ClaimReport::new(
        ClaimId::CYCLE_POWER_TOUGH,
        format!("C_{n}^{k}"),
        None,
        json!({
            "toughness": t.to_json(),
            "expected": Rational::integer(k as u64),
        }),
    );
    Ok(
        if t.value() == ExtRational::Finite(Rational::integer(k as u64)) {
            report
        } else {
            report.fail(toughness_counterexample(&g, &t))
        },
    )
}

/// `α ≤ 2n/(r+2)` for a supertough `r`-regular graph; `None` when `g` is not
/// regular or not supertough.
pub fn check_alpha_bound(g: &Graph, subject: &str, m: Option<usize>) -> Option<ClaimReport> {
    let n = g.order();
    let r = g.degree(0);
    if !g.is_regular(r) {
        return None;
    }
    if toughness(g).value() != ExtRational::Finite(Rational::new(r as u64, 2)) {
        return None;
    }
    let cert = independence_number(g);
    let bound = Rational::new(2 * n as u64, r as u64 + 2);
    let report = ClaimReport::new(
        ClaimId::ALPHA_BOUND,
        subject.to_string(),
        m,
        json!({
            "alpha": cert.alpha,
            "n": n,
            "r": r,
            "bound": bound,
            "independent_set": cert.witness,
        }),
    );
    Some(if cert.alpha * (r + 2) <= 2 * n {
        report
    } else {
        report.fail(Counterexample::IndependentSet { set: cert.witness })
    })
}

fn background_graphs() -> Vec<(String, Graph)> {
    let lk4 = line_graph(&complete(4).expect("K_4")).expect("line graph");
    let lk33 = line_graph(&complete_bipartite(3, 3).expect("K_3,3")).expect("line graph");
    let lp = line_graph(&petersen()).expect("line graph");
    vec![
        ("J_3".to_string(), build_jm(3).expect("J_3").graph),
        ("L(K_4)".to_string(), lk4),
        ("L(K_3,3)".to_string(), lk33),
        ("L(Petersen)".to_string(), lp),
        ("C_8^2".to_string(), cycle_power(8, 2).expect("C_8^2")),
        ("C_10^2".to_string(), cycle_power(10, 2).expect("C_10^2")),
    ]
}

const CYCLE_POWERS: [(usize, usize); 2] = [(8, 2), (10, 2)];

/// Claw-free consistency on `J_3`, small line graphs and cycle powers,
/// toughness of `C_8^2` and `C_10^2`, and the independence bound on every
/// supertough graph among them.
pub fn verify_background() -> Vec<ClaimReport> {
    background_reports(&ClaimId::ALL)
}

fn background_reports(claims: &[ClaimId]) -> Vec<ClaimReport> {
    let graphs = background_graphs();
    let mut jobs: Vec<Box<dyn Fn() -> Vec<ClaimReport> + Sync + '_>> = Vec::new();
    if claims.contains(&ClaimId::MS_CONSISTENCY) {
        for (name, g) in &graphs {
            jobs.push(Box::new(move || vec![check_ms_consistency(g, name)]));
        }
    }
    if claims.contains(&ClaimId::CYCLE_POWER_TOUGH) {
        for (n, k) in CYCLE_POWERS {
            jobs.push(Box::new(move || {
                vec![check_cycle_power(n, k).expect("valid cycle power")]
            }));
        }
    }
    if claims.contains(&ClaimId::ALPHA_BOUND) {
        for (name, g) in &graphs {
            jobs.push(Box::new(move || {
                check_alpha_bound(g, name, None).into_iter().collect()
            }));
        }
    }
    jobs.par_iter().flat_map(|job| job()).collect()
}

/// Which claims to run over which `m`.
#[derive(Debug, Clone)]
pub struct LedgerConfig {
    pub m_range: (usize, usize),
    /// Empty means every claim.
    pub claims: Vec<ClaimId>,
    pub odd_only: bool,
    /// Also run claims outside their stated hypothesis, and past the
    /// ceilings.
    pub exploratory: bool,
    pub toughness_ceiling: usize,
    pub structure_ceiling: usize,
}

impl LedgerConfig {
    pub fn new(lo: usize, hi: usize) -> Self {
        LedgerConfig {
            m_range: (lo, hi),
            claims: Vec::new(),
            odd_only: false,
            exploratory: false,
            toughness_ceiling: TOUGHNESS_CEILING,
            structure_ceiling: STRUCTURE_CEILING,
        }
    }

    fn selected(&self) -> Vec<ClaimId> {
        if self.claims.is_empty() {
            ClaimId::ALL.to_vec()
        } else {
            let mut c = self.claims.clone();
            c.sort();
            c.dedup();
            c
        }
    }

    fn ms(&self) -> impl Iterator<Item = usize> + '_ {
        let (lo, hi) = self.m_range;
        (lo..=hi).filter(move |m| !self.odd_only || m % 2 == 1)
    }
}

fn run_claim(
    claim: ClaimId,
    m: usize,
    exploratory: bool,
) -> Result<Option<ClaimReport>, VerifyError> {
    let lg = build_jm(m)?;
    let mut report = match claim {
        ClaimId::LEMMA_A => check_lemma_a(&lg),
        ClaimId::LEMMA_B => check_lemma_b(&lg),
        ClaimId::LEMMA_C => check_lemma_c(&lg),
        ClaimId::LEMMA_C_TRIANGLES => check_lemma_c_triangles(&lg),
        ClaimId::THEOREM => check_theorem(&lg),
        ClaimId::CLAW_CENTERS => check_claw_structure(&lg),
        ClaimId::NO_K14_AT_X => check_no_k14_at_x(&lg),
        ClaimId::ALPHA_BOUND => match check_alpha_bound(&lg.graph, &subject(m), Some(m)) {
            Some(r) => r,
            None => return Ok(None),
        },
        ClaimId::CYCLE_POWER_TOUGH | ClaimId::MS_CONSISTENCY => return Ok(None),
    };
    report.exploratory = exploratory;
    Ok(Some(report))
}

/// Builds the ledger: one report per admissible `(claim, m)` pair, then the
/// background reports, sorted by claim, `m` and subject.
///
/// An explicitly requested claim with no admissible `m` in range is an
/// error; otherwise inadmissible pairs are skipped.
pub fn build_ledger(cfg: &LedgerConfig) -> Result<Vec<ClaimReport>, VerifyError> {
    let selected = cfg.selected();
    let mut jobs: Vec<(ClaimId, usize, bool)> = Vec::new();
    for &claim in selected
        .iter()
        .filter(|c| !c.is_background() || **c == ClaimId::ALPHA_BOUND)
    {
        let ceiling = if claim.needs_toughness() {
            cfg.toughness_ceiling
        } else {
            cfg.structure_ceiling
        };
        let mut first_rejection = None;
        let before = jobs.len();
        for m in cfg.ms() {
            match admit(claim, m) {
                Ok(()) if m <= ceiling || cfg.exploratory => jobs.push((claim, m, m > ceiling)),
                Ok(()) => {}
                Err(_) if cfg.exploratory && m >= 3 => jobs.push((claim, m, true)),
                Err(e) => {
                    first_rejection.get_or_insert(e);
                }
            }
        }
        if !cfg.claims.is_empty() && jobs.len() == before && claim != ClaimId::ALPHA_BOUND {
            return Err(first_rejection.unwrap_or(VerifyError::EmptyRange { claim }));
        }
    }
    let mut reports: Vec<ClaimReport> = jobs
        .par_iter()
        .map(|&(claim, m, exploratory)| run_claim(claim, m, exploratory))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    // J_3 is also a background subject; keep its per-m report only
    let per_m: Vec<(ClaimId, String)> = reports
        .iter()
        .map(|r| (r.claim, r.subject.clone()))
        .collect();
    reports.extend(
        background_reports(&selected)
            .into_iter()
            .filter(|r| !per_m.contains(&(r.claim, r.subject.clone()))),
    );
    reports.sort_by(|a, b| {
        (a.claim, a.m, &a.subject, a.exploratory).cmp(&(b.claim, b.m, &b.subject, b.exploratory))
    });
    Ok(reports)
}

/// The ledger as a JSON array.
pub fn ledger_json(reports: &[ClaimReport]) -> Value {
    Value::Array(reports.iter().map(ClaimReport::to_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tampered(
        m: usize,
        f: impl FnOnce(&JmLabeling) -> Vec<(usize, usize)>,
        add: bool,
    ) -> LabeledGraph {
        let lg = build_jm(m).unwrap();
        let edits = f(&lg.labeling);
        let mut edges = lg.graph.edges();
        for (u, v) in edits {
            let e = (u.min(v), u.max(v));
            if add {
                edges.push(e);
            } else {
                edges.retain(|&x| x != e);
            }
        }
        LabeledGraph {
            graph: Graph::from_edges(lg.graph.order(), edges).unwrap(),
            labeling: lg.labeling,
        }
    }

    #[test]
    fn lemma_a_holds_for_small_m() {
        for m in 3..=9 {
            let r = verify_lemma_a(m).unwrap();
            assert!(r.passed(), "m={m}");
            assert_eq!(r.payload["connectivity"], 4);
        }
        assert!(verify_lemma_a(2).is_err());
    }

    #[test]
    fn lemma_a_fails_when_an_edge_is_removed() {
        let lg = tampered(5, |l| vec![(l.a(1), l.b(1))], false);
        let r = check_lemma_a(&lg);
        assert_eq!(r.verdict, Verdict::Fail);
        let cx = r.counterexample.unwrap();
        assert!(cx.recheck(&lg.graph));
        assert!(!cx.recheck(&build_jm(5).unwrap().graph));
    }

    #[test]
    fn lemma_b_fails_on_twisted_cuts() {
        // the 4-cuts {a_1, a_j, b_j, b_m} and {a_j, a_m, b_1, b_j}, 1 < j < m,
        // have neither stated shape; for j = 2 and j = m−1 they cut off an
        // edge such as a_1 c_1 rather than a single vertex
        for m in 5..=9 {
            let lg = build_jm(m).unwrap();
            let (g, l) = (&lg.graph, &lg.labeling);
            let r = verify_lemma_b(m).unwrap();
            assert_eq!(r.verdict, Verdict::Fail, "m={m}");
            assert!(r.counterexample.as_ref().unwrap().recheck(g));
            let mut expected: Vec<Vec<String>> = (2..m)
                .flat_map(|j| {
                    [
                        [l.a(1), l.a(j), l.b(j), l.b(m)],
                        [l.a(j), l.a(m), l.b(1), l.b(j)],
                    ]
                })
                .map(|cut| {
                    let cut: VertexSet = cut.into_iter().collect();
                    assert!(g.components(cut).len() >= 2);
                    names(l, cut)
                })
                .collect();
            let end: VertexSet = [l.a(1), l.c(1)].into_iter().collect();
            assert!(g
                .components(g.neighborhood(end).difference(end))
                .contains(&end));
            expected.sort();
            let mut got: Vec<Vec<String>> = r.payload["violating"]
                .as_array()
                .unwrap()
                .iter()
                .map(|v| serde_json::from_value(v["cut"].clone()).unwrap())
                .collect();
            got.sort();
            assert_eq!(got, expected, "m={m}");
        }
    }

    #[test]
    fn lemma_b_rejects_small_m() {
        assert!(matches!(
            verify_lemma_b(4),
            Err(VerifyError::Hypothesis { m: 4, .. })
        ));
        assert!(verify_lemma_b_exploratory(4).unwrap().exploratory);
        assert!(!verify_lemma_b_exploratory(5).unwrap().exploratory);
    }

    #[test]
    fn lemma_b_counterexample_rechecks() {
        // c_2 drops to degree 3, so N(c_2) plus any far vertex cuts off a
        // hub vertex
        let lg = tampered(6, |l| vec![(l.c(2), l.b(3))], false);
        let r = check_lemma_b(&lg);
        assert_eq!(r.verdict, Verdict::Fail);
        let cx = r.counterexample.unwrap();
        assert!(cx.recheck(&lg.graph));
        match cx {
            Counterexample::Cut { cut, .. } => assert_eq!(cut.len(), 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lemma_c_values_and_triangles() {
        for m in [3, 5, 7, 9] {
            let r = verify_lemma_c(m).unwrap();
            assert!(r.passed(), "m={m}");
            assert_eq!(r.payload["alpha"], m - 1);
            assert!(verify_lemma_c_triangles(m).unwrap().passed());
        }
        let r = verify_lemma_c_triangles(5).unwrap();
        assert_eq!(
            r.payload["triangles"],
            json!([
                ["c1", "b1", "b2"],
                ["c2", "a2", "a3"],
                ["c3", "b3", "b4"],
                ["c4", "a4", "a5"]
            ])
        );
        assert!(verify_lemma_c(4).is_err());
    }

    #[test]
    fn broken_triangle_is_reported() {
        let lg = tampered(5, |l| vec![(l.c(2), l.a(3))], false);
        let r = check_lemma_c_triangles(&lg);
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.counterexample.unwrap().recheck(&lg.graph));
    }

    #[test]
    fn alpha_counterexample_is_independent() {
        let lg = tampered(5, |l| vec![(l.c(1), l.a(1)), (l.c(1), l.b(1))], false);
        let r = check_lemma_c(&lg);
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.counterexample.unwrap().recheck(&lg.graph));
    }

    #[test]
    fn theorem_for_odd_m() {
        for m in [3, 5, 7] {
            let r = verify_theorem(m).unwrap();
            assert!(r.passed(), "m={m}");
            assert_eq!(r.payload["toughness"]["value"], json!({"num": 2, "den": 1}));
        }
        assert!(matches!(
            verify_theorem(4),
            Err(VerifyError::Hypothesis { m: 4, .. })
        ));
    }

    #[test]
    fn theorem_fails_on_tampered_graph() {
        let lg = tampered(5, |l| vec![(l.a(1), l.b(1)), (l.a(5), l.b(5))], false);
        let r = check_theorem(&lg);
        assert_eq!(r.verdict, Verdict::Fail);
        let cx = r.counterexample.unwrap();
        assert!(cx.recheck(&lg.graph));
        if let Counterexample::Cut { cut, components } = cx {
            assert!(cut.len() < 2 * components);
        }
    }

    #[test]
    fn claw_structure_for_m_at_least_four() {
        for m in 4..=9 {
            assert!(verify_claw_structure(m).unwrap().passed(), "m={m}");
            assert!(verify_no_k14_at_x(m).unwrap().passed(), "m={m}");
        }
        assert!(verify_claw_structure(3).is_err());
    }

    #[test]
    fn extra_claw_is_caught() {
        // without a2 a3, c2 centers the claw a2, a3, b2
        let lg = tampered(6, |l| vec![(l.a(2), l.a(3))], false);
        let r = check_claw_structure(&lg);
        assert_eq!(r.verdict, Verdict::Fail);
        let cx = r.counterexample.unwrap();
        assert!(cx.recheck(&lg.graph));
        assert!(!cx.recheck(&build_jm(6).unwrap().graph));
    }

    #[test]
    fn missing_claw_is_caught() {
        // a_1's only claw has leaves a_2, a_5, b_1
        let lg = tampered(5, |l| vec![(l.a(2), l.b(1))], true);
        let r = check_claw_structure(&lg);
        let a1 = lg.labeling.a(1);
        assert_eq!(
            r.counterexample,
            Some(Counterexample::NoClaw { vertex: a1 })
        );
        assert!(Counterexample::NoClaw { vertex: a1 }.recheck(&lg.graph));
        assert!(!Counterexample::NoClaw { vertex: a1 }.recheck(&build_jm(5).unwrap().graph));
    }

    #[test]
    fn background_passes() {
        let reports = verify_background();
        assert!(reports.iter().all(ClaimReport::passed));
        let subjects = |c: ClaimId| -> Vec<String> {
            reports
                .iter()
                .filter(|r| r.claim == c)
                .map(|r| r.subject.clone())
                .collect()
        };
        assert_eq!(subjects(ClaimId::CYCLE_POWER_TOUGH), ["C_8^2", "C_10^2"]);
        assert!(subjects(ClaimId::MS_CONSISTENCY).contains(&"J_3".to_string()));
        assert!(subjects(ClaimId::ALPHA_BOUND).contains(&"C_8^2".to_string()));
        let c8 = reports
            .iter()
            .find(|r| r.claim == ClaimId::ALPHA_BOUND && r.subject == "C_8^2")
            .unwrap();
        // brute force: C_8^2 has no independent triple
        let g = cycle_power(8, 2).unwrap();
        let alpha = (0u64..256)
            .filter(|&s| g.is_independent(VertexSet::from_bits(s)))
            .map(|s| s.count_ones())
            .max()
            .unwrap();
        assert_eq!(alpha, 2);
        assert_eq!(c8.payload["alpha"], 2);
    }

    #[test]
    fn ms_consistency_rejects_claws() {
        let r = check_ms_consistency(&build_jm(5).unwrap().graph, "J_5");
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(matches!(
            r.counterexample,
            Some(Counterexample::Star { .. })
        ));
    }

    #[test]
    fn ledger_is_sorted_and_complete() {
        let ledger = build_ledger(&LedgerConfig::new(3, 7)).unwrap();
        assert!(ledger.iter().all(|r| !r.exploratory));
        assert!(ledger
            .iter()
            .all(|r| r.passed() == (r.claim != ClaimId::LEMMA_B)));
        let rows = |c: ClaimId| ledger.iter().filter(|r| r.claim == c).count();
        assert_eq!(rows(ClaimId::LEMMA_A), 5);
        assert_eq!(rows(ClaimId::LEMMA_B), 3);
        assert_eq!(rows(ClaimId::LEMMA_C), 3);
        assert_eq!(rows(ClaimId::THEOREM), 3);
        assert_eq!(rows(ClaimId::CLAW_CENTERS), 4);
        let keys: Vec<_> = ledger.iter().map(|r| (r.claim, r.m)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn explicit_claim_outside_hypothesis_is_rejected() {
        let mut cfg = LedgerConfig::new(4, 4);
        cfg.claims = vec![ClaimId::THEOREM];
        assert!(matches!(
            build_ledger(&cfg),
            Err(VerifyError::Hypothesis { .. })
        ));
        cfg.exploratory = true;
        let rows = build_ledger(&cfg).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].exploratory);
    }

    #[test]
    fn claim_names_parse() {
        for c in ClaimId::ALL {
            assert_eq!(c.name().parse::<ClaimId>().unwrap(), c);
        }
        assert_eq!("lemma-b".parse::<ClaimId>().unwrap(), ClaimId::LEMMA_B);
        assert!("LEMMA_D".parse::<ClaimId>().is_err());
    }
}
