use crate::graph::{Graph, VertexSet};

/// Every `S` with `|S| = size` whose removal leaves at least two
/// components, in increasing bitset order.
pub fn cutsets_of_size(g: &Graph, size: usize) -> Vec<VertexSet> {
    let n = g.order();
    if size == 0 || size > n {
        return Vec::new();
    }
    let whole = g.vertices().bits();
    let mut out = Vec::new();
    // Gosper's hack walks all `size`-subsets of 0..n in increasing order
    let mut s: u64 = if size == 64 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    };
    loop {
        if g.count_components_within(whole & !s) >= 2 {
            out.push(VertexSet::from_bits(s));
        }
        let c = s & s.wrapping_neg();
        let (r, overflow) = s.overflowing_add(c);
        if overflow || c == 0 {
            break;
        }
        let next = (((r ^ s) >> 2) / c) | r;
        if next & !whole != 0 {
            break;
        }
        s = next;
    }
    out
}

/// Whether every edge has an endpoint in `s`.
pub fn is_vertex_cover(g: &Graph, s: VertexSet) -> bool {
    g.is_independent(g.vertices().difference(s))
}
