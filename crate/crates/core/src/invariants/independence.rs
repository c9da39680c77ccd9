//! Maximum independent set by branch and bound.

use serde_json::json;

use super::clique_cover_bound;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndependenceCertificate {
    pub alpha: usize,
    pub witness: VertexSet,
}

impl IndependenceCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "invariant": "independence",
            "value": {"num": self.alpha, "den": 1},
            "witness": self.witness,
        })
    }
}

struct Mis<'a> {
    g: &'a Graph,
    best: u64,
}

impl Mis<'_> {
    fn expand(&mut self, cand: u64, chosen: u64) {
        if cand == 0 {
            if chosen.count_ones() > self.best.count_ones() {
                self.best = chosen;
            }
            return;
        }
        let bound = chosen.count_ones() as usize + clique_cover_bound(self.g, cand);
        if bound <= self.best.count_ones() as usize {
            return;
        }
        // branch on a vertex of minimum degree inside the candidates
        let mut v = 0;
        let mut min_deg = u32::MAX;
        let mut c = cand;
        while c != 0 {
            let u = c.trailing_zeros() as usize;
            let d = (self.g.row(u) & cand).count_ones();
            if d < min_deg {
                min_deg = d;
                v = u;
            }
            c &= c - 1;
        }
        let bit = 1u64 << v;
        self.expand(cand & !bit & !self.g.row(v), chosen | bit);
        // with at most one candidate neighbor, some maximum set contains v
        if min_deg >= 2 {
            self.expand(cand & !bit, chosen);
        }
    }
}

/// `α(G)` with a maximum independent set as witness.
pub fn independence_number(g: &Graph) -> IndependenceCertificate {
    let mut search = Mis { g, best: 0 };
    search.expand(g.vertices().bits(), 0);
    IndependenceCertificate {
        alpha: search.best.count_ones() as usize,
        witness: VertexSet::from_bits(search.best),
    }
}
