//! Census of regular graphs filtered by connectivity, claws and
//! supertoughness (toughness equal to half the degree).

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::canon::{canonical_graph, CANON_MAX_ORDER};
use super::enumerate::enumerate_regular;
use super::SearchError;
use crate::format::{parse_graph6, to_graph6};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{
    claw_centers, connectivity, independence_number, is_t_tough, toughness,
    ConnectivityCertificate, IndependenceCertificate, Toughness,
};
use crate::rational::{ExtRational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Predicate {
    Connected,
    HasClaw,
    ClawFree,
    Supertough,
}

impl Predicate {
    pub const ALL: [Predicate; 4] = [
        Predicate::Connected,
        Predicate::HasClaw,
        Predicate::ClawFree,
        Predicate::Supertough,
    ];

    /// Relative evaluation cost; cheaper filters run first.
    fn cost(self) -> u8 {
        match self {
            Predicate::Connected => 0,
            Predicate::HasClaw | Predicate::ClawFree => 1,
            Predicate::Supertough => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Connected => "connected",
            Predicate::HasClaw => "has_claw",
            Predicate::ClawFree => "claw_free",
            Predicate::Supertough => "supertough",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s.replace('-', "_"))
            .ok_or_else(|| format!("unknown predicate {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Built-in orderly enumeration of connected regular graphs.
    Builtin,
    /// graph6 text, one graph per line.
    Graph6(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub n: usize,
    pub r: usize,
    pub source: Source,
    pub predicates: Vec<Predicate>,
}

impl SearchSpec {
    pub fn builtin(n: usize, r: usize, predicates: &[Predicate]) -> Self {
        SearchSpec {
            n,
            r,
            source: Source::Builtin,
            predicates: predicates.to_vec(),
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        let (n, r) = (self.n, self.r);
        if n == 0 || r >= n {
            return Err(SearchError::InvalidSpec(format!(
                "need 0 <= r < n, got n={n}, r={r}"
            )));
        }
        if (n * r) % 2 == 1 {
            return Err(SearchError::Parity { n, r });
        }
        if n > CANON_MAX_ORDER {
            return Err(SearchError::Envelope { n, r });
        }
        Ok(())
    }
}

/// A graph that passed every predicate, in canonical labeling, with its
/// certificates.
#[derive(Debug, Clone)]
pub struct Survivor {
    pub graph: Graph,
    pub graph6: String,
    /// Input line for stream sources.
    pub line: Option<usize>,
    pub toughness: Toughness,
    pub supertough: bool,
    pub connectivity: ConnectivityCertificate,
    pub independence: IndependenceCertificate,
    /// `α ≤ 2n/(r+2)`, checked for supertough survivors only.
    pub alpha_bound_holds: Option<bool>,
    pub claw_centers: VertexSet,
}

impl Survivor {
    fn to_json(&self) -> Value {
        json!({
            "graph6": self.graph6,
            "line": self.line,
            "toughness": self.toughness.to_json(),
            "supertough": self.supertough,
            "connectivity": self.connectivity.to_json(&self.graph),
            "independence": self.independence.to_json(),
            "alpha_bound_holds": self.alpha_bound_holds,
            "claw_centers": self.claw_centers,
            "has_claw": !self.claw_centers.is_empty(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StageCount {
    pub predicate: Predicate,
    pub evaluated: usize,
    pub passed: usize,
}

#[derive(Debug, Clone)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct CensusResult {
    pub n: usize,
    pub r: usize,
    pub examined: usize,
    /// Complete graphs reaching the supertough filter; their toughness is
    /// infinite, so they never qualify.
    pub complete_excluded: usize,
    pub stages: Vec<StageCount>,
    pub survivors: Vec<Survivor>,
    pub errors: Vec<LineError>,
}

impl CensusResult {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "r": self.r,
            "examined": self.examined,
            "complete_excluded": self.complete_excluded,
            "stages": self.stages.iter().map(|s| json!({
                "predicate": s.predicate.name(),
                "evaluated": s.evaluated,
                "passed": s.passed,
            })).collect::<Vec<_>>(),
            "survivor_count": self.survivors.len(),
            "survivors": self.survivors.iter().map(Survivor::to_json).collect::<Vec<_>>(),
            "errors": self.errors.iter().map(|e| json!({
                "line": e.line,
                "message": e.message,
            })).collect::<Vec<_>>(),
        })
    }

    /// Survivors as graph6 lines.
    pub fn survivors_graph6(&self) -> String {
        self.survivors
            .iter()
            .map(|s| s.graph6.clone() + "\n")
            .collect()
    }
}

struct Outcome {
    /// Number of leading predicates passed.
    passed: usize,
    complete: bool,
    survivor: Option<Survivor>,
}

fn check(g: &Graph, r: usize, p: Predicate) -> (bool, bool) {
    match p {
        Predicate::Connected => (g.is_connected(), false),
        Predicate::HasClaw => (!claw_centers(g).is_empty(), false),
        Predicate::ClawFree => (claw_centers(g).is_empty(), false),
        Predicate::Supertough => {
            if g.is_complete() {
                (false, true)
            } else {
                (is_t_tough(g, Rational::new(r as u64, 2)).is_tough(), false)
            }
        }
    }
}

fn certify(g: &Graph, r: usize, line: Option<usize>) -> Survivor {
    let graph = canonical_graph(g).expect("order checked against envelope");
    let t = toughness(&graph);
    let half = Rational::new(r as u64, 2);
    let supertough = t.value() == ExtRational::Finite(half);
    let independence = independence_number(&graph);
    let alpha_bound_holds = supertough.then(|| independence.alpha * (r + 2) <= 2 * graph.order());
    Survivor {
        graph6: to_graph6(&graph),
        line,
        toughness: t,
        supertough,
        connectivity: connectivity(&graph),
        independence,
        alpha_bound_holds,
        claw_centers: claw_centers(&graph),
        graph,
    }
}

fn evaluate(g: &Graph, r: usize, line: Option<usize>, order: &[Predicate]) -> Outcome {
    let mut complete = false;
    for (i, &p) in order.iter().enumerate() {
        let (ok, was_complete) = check(g, r, p);
        complete |= was_complete;
        if !ok {
            return Outcome {
                passed: i,
                complete,
                survivor: None,
            };
        }
    }
    Outcome {
        passed: order.len(),
        complete,
        survivor: Some(certify(g, r, line)),
    }
}

/// Runs the census with predicates evaluated cheapest first.
pub fn run_census(spec: &SearchSpec) -> Result<CensusResult, SearchError> {
    let mut order = spec.predicates.clone();
    order.sort_by_key(|p| p.cost());
    order.dedup();
    census_in_order(spec, &order)
}

pub(crate) fn census_in_order(
    spec: &SearchSpec,
    order: &[Predicate],
) -> Result<CensusResult, SearchError> {
    spec.validate()?;
    let (n, r) = (spec.n, spec.r);
    let mut errors = Vec::new();
    let inputs: Vec<(Option<usize>, Graph)> = match &spec.source {
        Source::Builtin => enumerate_regular(n, r)?
            .into_iter()
            .map(|g| (None, g))
            .collect(),
        Source::Graph6(text) => {
            let mut inputs = Vec::new();
            for (i, raw) in text.lines().enumerate() {
                let line = i + 1;
                if raw.trim().is_empty() {
                    continue;
                }
                match parse_graph6(raw) {
                    Err(e) => errors.push(LineError {
                        line,
                        message: e.to_string(),
                    }),
                    Ok(g) if g.order() != n || !g.is_regular(r) => errors.push(LineError {
                        line,
                        message: format!("not a {r}-regular graph on {n} vertices"),
                    }),
                    Ok(g) => inputs.push((Some(line), g)),
                }
            }
            inputs
        }
    };

    let outcomes: Vec<Outcome> = inputs
        .par_iter()
        .map(|(line, g)| evaluate(g, r, *line, order))
        .collect();

    let stages = order
        .iter()
        .enumerate()
        .map(|(i, &predicate)| StageCount {
            predicate,
            evaluated: outcomes.iter().filter(|o| o.passed >= i).count(),
            passed: outcomes.iter().filter(|o| o.passed > i).count(),
        })
        .collect();
    let complete_excluded = outcomes.iter().filter(|o| o.complete).count();
    let mut survivors: Vec<Survivor> = outcomes.into_iter().filter_map(|o| o.survivor).collect();
    survivors.sort_by(|a, b| a.graph6.cmp(&b.graph6).then(a.line.cmp(&b.line)));

    Ok(CensusResult {
        n,
        r,
        examined: inputs.len(),
        complete_excluded,
        stages,
        survivors,
        errors,
    })
}
