//! Toughness: the minimum of `|S| / k(G − S)` over all cut-sets `S`.
//!
//! The optimized solver is a depth-first search over membership decisions,
//! highest vertex first with "not in S" explored before "in S", so complete
//! assignments are visited in increasing bitset order. A node is discarded
//! when no completion can reach the best ratio found so far:
//!
//! * `|S| ≥ max(|S_fixed|, κ)` for every completion,
//! * every component of `G − S` either meets a component of the vertices
//!   already kept, or lies inside the undecided vertices that have no kept
//!   neighbor, whose independence number is bounded by a clique cover.
//!
//! Ties are resolved towards the numerically smallest cut-set, which makes
//! the witness independent of how the search is split across threads.

use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use super::{clique_cover_bound, connectivity, Separator};
use crate::graph::{Graph, VertexSet};
use crate::rational::{ExtRational, Rational};

/// Largest order the optimized solver is offered by the CLI.
pub const TOUGHNESS_MAX_ORDER: usize = 32;
/// Largest order accepted by the brute-force oracle.
pub const ORACLE_MAX_ORDER: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle sweep limited to {ORACLE_MAX_ORDER} vertices, got {0}")]
    TooLarge(usize),
}

/// A minimizing cut-set and the number of components it leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ToughnessCertificate {
    pub value: Rational,
    pub witness_cut: VertexSet,
    pub component_count: usize,
}

impl ToughnessCertificate {
    fn new(cut: u64, k: usize) -> Self {
        ToughnessCertificate {
            value: Rational::new(cut.count_ones() as u64, k as u64),
            witness_cut: VertexSet::from_bits(cut),
            component_count: k,
        }
    }

    /// Recomputes the component count and ratio from the graph.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let k = g.component_count(self.witness_cut);
        self.witness_cut.is_subset(g.vertices())
            && k >= 2
            && k == self.component_count
            && self.value == Rational::new(self.witness_cut.len() as u64, k as u64)
    }
}

/// Toughness of a graph; complete graphs have no cut-set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Toughness {
    Finite(ToughnessCertificate),
    Infinite,
}

impl Toughness {
    pub fn value(&self) -> ExtRational {
        match self {
            Toughness::Finite(c) => ExtRational::Finite(c.value),
            Toughness::Infinite => ExtRational::Infinite,
        }
    }

    pub fn certificate(&self) -> Option<&ToughnessCertificate> {
        match self {
            Toughness::Finite(c) => Some(c),
            Toughness::Infinite => None,
        }
    }

    /// `{"invariant", "value", "witness", "components"}`.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Toughness::Finite(c) => json!({
                "invariant": "toughness",
                "value": c.value,
                "witness": c.witness_cut,
                "components": c.component_count,
            }),
            Toughness::Infinite => json!({
                "invariant": "toughness",
                "value": "infinite",
                "witness": [],
                "components": 1,
            }),
        }
    }
}

/// Outcome of a `t`-toughness decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TToughness {
    Tough,
    /// A cut-set with `|S| < t · k(G − S)`.
    Violated {
        cut: VertexSet,
        component_count: usize,
    },
}

impl TToughness {
    pub fn is_tough(&self) -> bool {
        matches!(self, TToughness::Tough)
    }
}

/// Best (value, cut) pair, minimized over the whole search.
#[derive(Clone, Copy)]
struct Best {
    value: Rational,
    cut: u64,
    k: usize,
}

/// Ratio shared between workers, packed as `num << 32 | den`.
struct SharedBound(AtomicU64);

impl SharedBound {
    fn new(r: Rational) -> Self {
        SharedBound(AtomicU64::new(r.num() << 32 | r.den()))
    }

    fn get(&self) -> Rational {
        let p = self.0.load(AtomicOrdering::Relaxed);
        Rational::new(p >> 32, p & 0xffff_ffff)
    }

    fn lower_to(&self, r: Rational) {
        let packed = r.num() << 32 | r.den();
        let mut cur = self.0.load(AtomicOrdering::Relaxed);
        loop {
            let cur_r = Rational::new(cur >> 32, cur & 0xffff_ffff);
            if r >= cur_r {
                return;
            }
            match self.0.compare_exchange_weak(
                cur,
                packed,
                AtomicOrdering::Relaxed,
                AtomicOrdering::Relaxed,
            ) {
                Ok(_) => return,
                Err(actual) => cur = actual,
            }
        }
    }
}

/// Upper bound on `k(G − S)` over completions of a partial assignment, or
/// `None` if fewer than two components are possible.
#[inline]
fn component_upper_bound(g: &Graph, out: u64, undecided: u64) -> Option<u64> {
    let kept = g.count_components_within(out);
    let mut touched = 0u64;
    let mut o = out;
    while o != 0 {
        touched |= g.row(o.trailing_zeros() as usize);
        o &= o - 1;
    }
    let free = undecided & !touched;
    let k = kept + clique_cover_bound(g, free);
    (k >= 2).then_some(k as u64)
}

struct MinSearch<'a> {
    g: &'a Graph,
    min_cut: u64,
    best: Best,
    /// A leaf tying `best` has been visited, so later (larger) ties lose.
    tie_locked: bool,
    shared: &'a SharedBound,
}

impl MinSearch<'_> {
    #[inline]
    fn pruned(&self, s_lo: u64, k_hi: u64) -> bool {
        match self.best.value.cmp_ratio(s_lo, k_hi) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Equal if self.tie_locked => true,
            _ => self.shared.get().cmp_ratio(s_lo, k_hi).is_gt(),
        }
    }

    fn leaf(&mut self, cut: u64, out: u64) {
        let k = self.g.count_components_within(out);
        if k < 2 {
            return;
        }
        let s = cut.count_ones() as u64;
        match self.best.value.cmp_ratio(s, k as u64) {
            std::cmp::Ordering::Less => {
                self.best = Best {
                    value: Rational::new(s, k as u64),
                    cut,
                    k,
                };
                self.tie_locked = true;
                self.shared.lower_to(self.best.value);
            }
            std::cmp::Ordering::Equal if !self.tie_locked => {
                if cut < self.best.cut {
                    self.best.cut = cut;
                    self.best.k = k;
                }
                self.tie_locked = true;
            }
            _ => {}
        }
    }

    /// Decides vertices `next, next−1, …, 0`; `next < 0` means a leaf.
    fn dfs(&mut self, next: i32, cut: u64, out: u64) {
        if next < 0 {
            self.leaf(cut, out);
            return;
        }
        let undecided = (2u64 << next) - 1;
        let Some(k_hi) = component_upper_bound(self.g, out, undecided) else {
            return;
        };
        let s_lo = (cut.count_ones() as u64).max(self.min_cut);
        if self.pruned(s_lo, k_hi) {
            return;
        }
        let bit = 1u64 << next;
        self.dfs(next - 1, cut, out | bit);
        self.dfs(next - 1, cut | bit, out);
    }
}

/// Number of top vertices fixed per parallel work item.
fn split_depth(n: usize) -> usize {
    let workers = rayon::current_num_threads().max(1);
    let bits = usize::BITS - (workers - 1).leading_zeros();
    // a few extra levels smooth out uneven subtrees
    ((bits as usize) + 4).min(n.saturating_sub(1))
}

/// Exact toughness with the lexicographically smallest (by bitset value)
/// minimizing cut-set as witness.
///
/// Disconnected graphs have toughness 0 (witness `∅`); complete graphs
/// have infinite toughness.
pub fn toughness(g: &Graph) -> Toughness {
    let n = g.order();
    if g.is_complete() {
        return Toughness::Infinite;
    }
    let whole = g.vertices().bits();
    let k0 = g.count_components_within(whole);
    if k0 >= 2 {
        return Toughness::Finite(ToughnessCertificate::new(0, k0));
    }
    let conn = connectivity(g);
    let Separator::Cut(sep) = conn.witness else {
        unreachable!("non-complete graph has a separator");
    };
    let initial = Best {
        value: Rational::new(sep.len() as u64, g.component_count(sep) as u64),
        cut: sep.bits(),
        k: g.component_count(sep),
    };
    let shared = SharedBound::new(initial.value);
    let depth = split_depth(n);
    let top = n - depth;

    let results: Vec<Best> = (0..1u64 << depth)
        .into_par_iter()
        .filter_map(|prefix| {
            let cut = prefix << top;
            let out = !cut & whole & !((1u64 << top) - 1);
            let mut search = MinSearch {
                g,
                min_cut: conn.kappa as u64,
                best: initial,
                tie_locked: false,
                shared: &shared,
            };
            search.dfs(top as i32 - 1, cut, out);
            Some(search.best)
        })
        .collect();

    let best = results
        .into_iter()
        .min_by(|a, b| a.value.cmp(&b.value).then(a.cut.cmp(&b.cut)))
        .expect("at least one work item");
    Toughness::Finite(ToughnessCertificate::new(best.cut, best.k))
}

struct DecideSearch<'a> {
    g: &'a Graph,
    min_cut: u64,
    t: Rational,
}

impl DecideSearch<'_> {
    fn dfs(&self, next: i32, cut: u64, out: u64) -> Option<(u64, usize)> {
        if next < 0 {
            let k = self.g.count_components_within(out);
            let s = cut.count_ones() as u64;
            return (k >= 2 && self.t.exceeds_ratio(s, k as u64)).then_some((cut, k));
        }
        let undecided = (2u64 << next) - 1;
        let k_hi = component_upper_bound(self.g, out, undecided)?;
        let s_lo = (cut.count_ones() as u64).max(self.min_cut);
        if !self.t.exceeds_ratio(s_lo, k_hi) {
            return None;
        }
        let bit = 1u64 << next;
        self.dfs(next - 1, cut, out | bit)
            .or_else(|| self.dfs(next - 1, cut | bit, out))
    }
}

/// Whether every cut-set `S` satisfies `|S| ≥ t · k(G − S)`.
///
/// Stops at the first violation. A minimum vertex separator is tried before
/// the search, so the returned violator is not necessarily minimizing.
pub fn is_t_tough(g: &Graph, t: Rational) -> TToughness {
    let n = g.order();
    if t == Rational::ZERO || g.is_complete() {
        return TToughness::Tough;
    }
    let whole = g.vertices().bits();
    let k0 = g.count_components_within(whole);
    if k0 >= 2 {
        return TToughness::Violated {
            cut: VertexSet::EMPTY,
            component_count: k0,
        };
    }
    let conn = connectivity(g);
    if let Separator::Cut(sep) = conn.witness {
        let k = g.component_count(sep);
        if t.exceeds_ratio(sep.len() as u64, k as u64) {
            return TToughness::Violated {
                cut: sep,
                component_count: k,
            };
        }
    }
    let search = DecideSearch {
        g,
        min_cut: conn.kappa as u64,
        t,
    };
    let depth = split_depth(n);
    let top = n - depth;
    let found = (0..1u64 << depth).into_par_iter().find_map_first(|prefix| {
        let cut = prefix << top;
        let out = !cut & whole & !((1u64 << top) - 1);
        search.dfs(top as i32 - 1, cut, out)
    });
    match found {
        None => TToughness::Tough,
        Some((cut, k)) => TToughness::Violated {
            cut: VertexSet::from_bits(cut),
            component_count: k,
        },
    }
}

/// Unpruned sweep over all `2^n` vertex subsets. Same contract and
/// tie-breaking as [`toughness`]; exists to validate it.
pub fn toughness_oracle(g: &Graph) -> Result<Toughness, OracleError> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(OracleError::TooLarge(n));
    }
    let whole = g.vertices().bits();
    let chunk_bits = n.min(10);
    let chunks = 1u64 << (n - chunk_bits);
    let best = (0..chunks)
        .into_par_iter()
        .filter_map(|c| {
            let mut best: Option<(Rational, u64, usize)> = None;
            for low in 0..1u64 << chunk_bits {
                let cut = c << chunk_bits | low;
                let k = g.count_components_within(whole & !cut);
                if k < 2 {
                    continue;
                }
                let v = Rational::new(cut.count_ones() as u64, k as u64);
                if best.is_none_or(|(b, _, _)| v < b) {
                    best = Some((v, cut, k));
                }
            }
            best
        })
        .min_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(match best {
        None => Toughness::Infinite,
        Some((_, cut, k)) => Toughness::Finite(ToughnessCertificate::new(cut, k)),
    })
}
