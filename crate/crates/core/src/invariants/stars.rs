//! Induced stars `K_{1,k}` and claw centers.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// A center with `k` pairwise non-adjacent neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StarInstance {
    pub center: usize,
    pub leaves: VertexSet,
}

impl StarInstance {
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        self.leaves.is_subset(g.neighbors(self.center)) && g.is_independent(self.leaves)
    }
}

/// Calls `f` for each independent `k`-subset of `pool`, in increasing
/// lexicographic order of sorted members. Stops early if `f` returns false.
fn independent_subsets(
    g: &Graph,
    pool: u64,
    k: usize,
    chosen: u64,
    f: &mut dyn FnMut(u64) -> bool,
) -> bool {
    if k == 0 {
        return f(chosen);
    }
    if (pool.count_ones() as usize) < k {
        return true;
    }
    let mut rest = pool;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if !independent_subsets(g, rest & !g.row(v), k - 1, chosen | 1 << v, f) {
            return false;
        }
    }
    true
}

/// Every induced `K_{1,k}`, ordered by center then by leaf set.
pub fn induced_stars(g: &Graph, k: usize) -> Vec<StarInstance> {
    assert!(k >= 2, "induced stars need k >= 2");
    let mut out = Vec::new();
    for center in 0..g.order() {
        independent_subsets(g, g.row(center), k, 0, &mut |leaves| {
            out.push(StarInstance {
                center,
                leaves: VertexSet::from_bits(leaves),
            });
            true
        });
    }
    out
}

/// Vertices that center at least one induced claw `K_{1,3}`.
pub fn claw_centers(g: &Graph) -> VertexSet {
    (0..g.order())
        .filter(|&v| !independent_subsets(g, g.row(v), 3, 0, &mut |_| false))
        .collect()
}
