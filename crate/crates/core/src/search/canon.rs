//! Canonical labeling by maximal graph6 code.
//!
//! The code of a labeled graph is its upper-triangle bit string in graph6
//! order, read as one column word per vertex (`column p` holds the bits
//! `(0,p), …, (p−1,p)`, earliest row most significant). The canonical form
//! is the lexicographically largest code over all relabelings, which is also
//! the largest graph6 string.
//!
//! The search places vertices one position at a time. Once a prefix is
//! fixed, only vertices whose column word is maximal can start an optimal
//! extension, so the tree only branches on ties; among tied candidates, one
//! representative per twin class is enough since swapping twins is an
//! automorphism fixing everything placed so far.

use std::cmp::Ordering;

use thiserror::Error;

use crate::format::to_graph6;
use crate::graph::Graph;

/// Largest order accepted by the canonical labeling search.
pub const CANON_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("canonical labeling limited to {CANON_MAX_ORDER} vertices, got {0}")]
pub struct CanonError(pub usize);

#[inline]
fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.row(u) & !(1u64 << v) == g.row(v) & !(1u64 << u)
}

/// Keeps the first vertex of each twin class among `cands`.
fn twin_representatives(g: &Graph, cands: u64) -> Vec<usize> {
    let mut reps: Vec<usize> = Vec::new();
    let mut c = cands;
    while c != 0 {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        if !reps.iter().any(|&u| are_twins(g, u, v)) {
            reps.push(v);
        }
    }
    reps
}

/// Column words of every unplaced vertex after `v` is appended.
#[inline]
fn advance(g: &Graph, words: &[u64; 64], unplaced: u64, v: usize) -> [u64; 64] {
    let mut next = *words;
    let mut u = unplaced;
    while u != 0 {
        let w = u.trailing_zeros() as usize;
        u &= u - 1;
        next[w] = words[w] << 1 | g.has_edge(v, w) as u64;
    }
    next
}

struct CanonSearch<'a> {
    g: &'a Graph,
    best: Vec<u64>,
    best_perm: Vec<usize>,
    cur: Vec<u64>,
    perm: Vec<usize>,
}

impl CanonSearch<'_> {
    fn search(&mut self, unplaced: u64, words: [u64; 64]) {
        let p = self.perm.len();
        let n = self.g.order();
        if p == n {
            if self.best.is_empty() || self.cur > self.best {
                self.best = self.cur.clone();
                self.best_perm = self.perm.clone();
            }
            return;
        }
        let mut maxw = 0;
        let mut u = unplaced;
        while u != 0 {
            maxw = maxw.max(words[u.trailing_zeros() as usize]);
            u &= u - 1;
        }
        if !self.best.is_empty() {
            let prefix = self.cur.as_slice().cmp(&self.best[..p]);
            if prefix == Ordering::Equal && maxw < self.best[p] {
                return;
            }
            if prefix == Ordering::Less {
                return;
            }
        }
        let mut cands = 0u64;
        let mut u = unplaced;
        while u != 0 {
            let w = u.trailing_zeros() as usize;
            u &= u - 1;
            if words[w] == maxw {
                cands |= 1 << w;
            }
        }
        for v in twin_representatives(self.g, cands) {
            let next = advance(self.g, &words, unplaced & !(1 << v), v);
            self.perm.push(v);
            self.cur.push(maxw);
            self.search(unplaced & !(1 << v), next);
            self.perm.pop();
            self.cur.pop();
        }
    }
}

/// A relabeling `perm` (position → original vertex) attaining the maximal
/// code.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, CanonError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(CanonError(n));
    }
    let mut s = CanonSearch {
        g,
        best: Vec::new(),
        best_perm: Vec::new(),
        cur: Vec::with_capacity(n),
        perm: Vec::with_capacity(n),
    };
    s.search(g.vertices().bits(), [0u64; 64]);
    Ok(s.best_perm)
}

/// The graph relabeled into canonical position order.
pub fn canonical_graph(g: &Graph) -> Result<Graph, CanonError> {
    let perm = canonical_labeling(g)?;
    let mut new_label = vec![0; g.order()];
    for (pos, &v) in perm.iter().enumerate() {
        new_label[v] = pos;
    }
    Ok(g.relabel(&new_label))
}

/// graph6 of the canonical relabeling; equal for two graphs exactly when
/// they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<String, CanonError> {
    canonical_graph(g).map(|c| to_graph6(&c))
}

/// Whether the identity labeling already has the maximal code.
pub fn is_canonical(g: &Graph) -> bool {
    let n = g.order();
    let id: Vec<u64> = (0..n)
        .map(|p| (0..p).fold(0, |w, i| w << 1 | g.has_edge(i, p) as u64))
        .collect();
    !beats(g, &id, 0, g.vertices().bits(), [0u64; 64])
}

/// Whether some extension of the current prefix (equal to `id` so far)
/// yields a code larger than `id`.
fn beats(g: &Graph, id: &[u64], p: usize, unplaced: u64, words: [u64; 64]) -> bool {
    if unplaced == 0 {
        return false;
    }
    let target = id[p];
    let mut cands = 0u64;
    let mut u = unplaced;
    while u != 0 {
        let w = u.trailing_zeros() as usize;
        u &= u - 1;
        match words[w].cmp(&target) {
            Ordering::Greater => return true,
            Ordering::Equal => cands |= 1 << w,
            Ordering::Less => {}
        }
    }
    twin_representatives(g, cands).into_iter().any(|v| {
        let rest = unplaced & !(1 << v);
        beats(g, id, p + 1, rest, advance(g, &words, rest, v))
    })
}
