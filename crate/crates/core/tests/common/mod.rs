#![allow(dead_code)]

use std::collections::BTreeSet;

use graph_toughness::search::canonical_form;
use graph_toughness::Graph;

/// Every labeled `r`-regular graph on `n` vertices, by plain edge-set
/// backtracking: the lowest vertex with spare degree picks its remaining
/// neighbors among higher vertices.
pub fn labeled_regular(n: usize, r: usize) -> Vec<Graph> {
    fn go(
        n: usize,
        r: usize,
        v: usize,
        deg: &mut Vec<usize>,
        edges: &mut Vec<(usize, usize)>,
        out: &mut Vec<Graph>,
    ) {
        if v == n {
            out.push(Graph::from_edges(n, edges.iter().copied()).unwrap());
            return;
        }
        let need = r - deg[v];
        let free: Vec<usize> = (v + 1..n).filter(|&w| deg[w] < r).collect();
        choose(&free, need, 0, &mut Vec::new(), &mut |picked| {
            for &w in picked {
                deg[w] += 1;
                edges.push((v, w));
            }
            deg[v] = r;
            go(n, r, v + 1, deg, edges, out);
            deg[v] = r - need;
            for &w in picked {
                deg[w] -= 1;
                edges.pop();
            }
        });
    }

    fn choose(
        pool: &[usize],
        k: usize,
        start: usize,
        acc: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for i in start..pool.len() {
            acc.push(pool[i]);
            choose(pool, k, i + 1, acc, f);
            acc.pop();
        }
    }

    let mut out = Vec::new();
    go(n, r, 0, &mut vec![0; n], &mut Vec::new(), &mut out);
    out
}

/// Canonical forms of the connected `r`-regular graphs on `n` vertices, up
/// to isomorphism.
pub fn connected_regular_classes(n: usize, r: usize) -> BTreeSet<String> {
    labeled_regular(n, r)
        .iter()
        .filter(|g| g.is_connected())
        .map(|g| canonical_form(g).unwrap())
        .collect()
}

/// Smallest fraction `p/q` strictly above `num/den` with `q <= max_den` and
/// `p <= max_den`.
pub fn next_fraction(num: u64, den: u64, max_den: u64) -> Option<(u64, u64)> {
    let mut best: Option<(u64, u64)> = None;
    for q in 1..=max_den {
        let p = num * q / den + 1;
        if p > max_den {
            continue;
        }
        if best.is_none_or(|(bp, bq)| p * bq < bp * q) {
            best = Some((p, q));
        }
    }
    best
}
