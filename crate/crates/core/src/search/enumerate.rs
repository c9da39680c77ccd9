//! Orderly generation of connected regular graphs.
//!
//! Graphs grow one vertex at a time: vertex `j` is attached to a subset of
//! `0..j`. An extension survives only when the graph on `0..=j` has the
//! maximal code among its relabelings. The code of `G[0..j]` is a prefix of
//! the code of `G`, so every prefix of a canonical graph is canonical and
//! each isomorphism class is produced exactly once, already in canonical
//! labeling.

use rayon::prelude::*;

use super::canon::is_canonical;
use super::SearchError;
use crate::graph::Graph;

/// Largest order the built-in enumerator accepts.
pub const ENUM_MAX_ORDER: usize = 12;
/// Largest degree the built-in enumerator accepts.
pub const ENUM_MAX_DEGREE: usize = 4;

/// Depth at which the search tree is split into parallel work items.
const SPLIT_AT: usize = 6;

#[derive(Clone)]
struct Partial {
    rows: Vec<u64>,
    deg: Vec<usize>,
}

struct Orderly {
    n: usize,
    r: usize,
}

impl Orderly {
    /// Saturated component among `0..=j` while vertices remain: the final
    /// graph would be disconnected.
    fn closes_early(&self, p: &Partial, j: usize) -> bool {
        if j + 1 == self.n {
            return false;
        }
        let alive = (2u64 << j) - 1;
        let mut rest = alive;
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    next |= p.rows[f.trailing_zeros() as usize];
                    f &= f - 1;
                }
                frontier = next & alive & !comp;
                comp |= frontier;
            }
            rest &= !comp;
            let mut c = comp;
            let mut saturated = true;
            while c != 0 {
                if p.deg[c.trailing_zeros() as usize] < self.r {
                    saturated = false;
                    break;
                }
                c &= c - 1;
            }
            if saturated {
                return true;
            }
        }
        false
    }

    /// Canonical children obtained by adding vertex `j`.
    fn children(&self, p: &Partial, j: usize) -> Vec<Partial> {
        let (n, r) = (self.n, self.r);
        let later = n - 1 - j;
        let mut open = 0u64;
        let mut forced = 0u64;
        for i in 0..j {
            if p.deg[i] < r {
                open |= 1 << i;
                if p.deg[i] + later < r {
                    if p.deg[i] + 1 + later < r {
                        return Vec::new();
                    }
                    forced |= 1 << i;
                }
            }
        }
        let optional = open & !forced;
        let min_size = r.saturating_sub(later);
        let mut out = Vec::new();
        // walk all subsets of `optional` in increasing order
        let mut sub = 0u64;
        loop {
            let chosen = forced | sub;
            let size = chosen.count_ones() as usize;
            if size >= min_size && size <= r {
                let mut child = p.clone();
                child.rows[j] = chosen;
                child.deg[j] = size;
                let mut c = chosen;
                while c != 0 {
                    let i = c.trailing_zeros() as usize;
                    child.rows[i] |= 1 << j;
                    child.deg[i] += 1;
                    c &= c - 1;
                }
                if !self.closes_early(&child, j) && is_canonical(&prefix_graph(&child, j + 1)) {
                    out.push(child);
                }
            }
            if sub == optional {
                break;
            }
            sub = (sub.wrapping_sub(optional)) & optional;
        }
        out
    }

    fn grow(&self, p: Partial, j: usize, out: &mut Vec<Graph>) {
        if j == self.n {
            let g = prefix_graph(&p, self.n);
            if g.is_regular(self.r) && g.is_connected() {
                out.push(g);
            }
            return;
        }
        for child in self.children(&p, j) {
            self.grow(child, j + 1, out);
        }
    }
}

fn prefix_graph(p: &Partial, k: usize) -> Graph {
    let mask = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    Graph::from_rows(p.rows[..k].iter().map(|r| r & mask).collect()).expect("symmetric rows")
}

/// One canonical representative of every connected `r`-regular graph on
/// `n` vertices, in a fixed generation order.
pub fn enumerate_regular(n: usize, r: usize) -> Result<Vec<Graph>, SearchError> {
    if n == 0 || r >= n {
        return Err(SearchError::InvalidSpec(format!(
            "need 0 <= r < n, got n={n}, r={r}"
        )));
    }
    if (n * r) % 2 == 1 {
        return Err(SearchError::Parity { n, r });
    }
    if n > ENUM_MAX_ORDER || r > ENUM_MAX_DEGREE {
        return Err(SearchError::Envelope { n, r });
    }
    let gen = Orderly { n, r };
    let root = Partial {
        rows: vec![0; n],
        deg: vec![0; n],
    };
    // expand breadth-first to the split depth, then hand subtrees to workers
    let split = SPLIT_AT.min(n);
    let mut frontier = vec![root];
    for j in 1..split {
        frontier = frontier.iter().flat_map(|p| gen.children(p, j)).collect();
    }
    let parts: Vec<Vec<Graph>> = frontier
        .into_par_iter()
        .map(|p| {
            let mut out = Vec::new();
            gen.grow(p, split, &mut out);
            out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}
