//! Graph constructors: the `J_m` family with its vertex roles, cycle powers,
//! and the usual small fixtures.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(msg: impl Into<String>) -> GenError {
    GenError::InvalidParameter(msg.into())
}

/// The role of a vertex of `J_m`, with 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    A(usize),
    B(usize),
    C(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::A(i) => write!(f, "a{i}"),
            Role::B(i) => write!(f, "b{i}"),
            Role::C(i) => write!(f, "c{i}"),
        }
    }
}

/// Role map of `J_m`.
///
/// The vertex ids are fixed: `a_i ↦ i−1`, `b_i ↦ m+i−1`, `c_i ↦ 2m+i−1`, so
/// callers can address any vertex by role without a lookup table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JmLabeling {
    m: usize,
}

impl JmLabeling {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        3 * self.m - 1
    }

    /// Vertex id of `a_i`, `1 ≤ i ≤ m`.
    pub fn a(&self, i: usize) -> usize {
        assert!((1..=self.m).contains(&i), "a_{i} out of range");
        i - 1
    }

    pub fn b(&self, i: usize) -> usize {
        assert!((1..=self.m).contains(&i), "b_{i} out of range");
        self.m + i - 1
    }

    /// Vertex id of `c_i`, `1 ≤ i ≤ m−1`.
    pub fn c(&self, i: usize) -> usize {
        assert!((1..self.m).contains(&i), "c_{i} out of range");
        2 * self.m + i - 1
    }

    pub fn vertex(&self, role: Role) -> usize {
        match role {
            Role::A(i) => self.a(i),
            Role::B(i) => self.b(i),
            Role::C(i) => self.c(i),
        }
    }

    pub fn role(&self, v: usize) -> Role {
        let m = self.m;
        match v {
            _ if v < m => Role::A(v + 1),
            _ if v < 2 * m => Role::B(v - m + 1),
            _ if v < 3 * m - 1 => Role::C(v - 2 * m + 1),
            _ => panic!("vertex {v} not in J_{m}"),
        }
    }

    pub fn name(&self, v: usize) -> String {
        self.role(v).to_string()
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.order()).map(|v| self.name(v)).collect()
    }

    pub fn a_set(&self) -> VertexSet {
        (0..self.m).collect()
    }

    pub fn b_set(&self) -> VertexSet {
        (self.m..2 * self.m).collect()
    }

    pub fn c_set(&self) -> VertexSet {
        (2 * self.m..3 * self.m - 1).collect()
    }

    /// `{a_1, a_m, b_1, b_m}`: the only possible claw centers.
    pub fn x_set(&self) -> VertexSet {
        [self.a(1), self.a(self.m), self.b(1), self.b(self.m)]
            .into_iter()
            .collect()
    }
}

/// A graph together with the role map it was built from.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labeling: JmLabeling,
}

/// Builds `J_m`: two `m`-cycles `a` and `b`, hubs `c_i` joined to
/// `a_i, a_{i+1}, b_i, b_{i+1}`, plus the edges `a_1 b_1` and `a_m b_m`.
pub fn build_jm(m: usize) -> Result<LabeledGraph, GenError> {
    if m < 3 {
        return Err(invalid(format!("J_m needs m >= 3, got {m}")));
    }
    let lab = JmLabeling { m };
    let mut edges = Vec::with_capacity(6 * m - 2);
    for i in 1..=m {
        let next = i % m + 1;
        edges.push((lab.a(i), lab.a(next)));
        edges.push((lab.b(i), lab.b(next)));
    }
    for i in 1..m {
        let c = lab.c(i);
        edges.extend([lab.a(i), lab.a(i + 1), lab.b(i), lab.b(i + 1)].map(|v| (c, v)));
    }
    edges.push((lab.a(1), lab.b(1)));
    edges.push((lab.a(m), lab.b(m)));
    let graph = Graph::from_edges(lab.order(), edges)?;
    Ok(LabeledGraph {
        graph,
        labeling: lab,
    })
}

/// `C_n^k`: vertex `i` adjacent to `i ± 1, …, i ± k (mod n)`.
pub fn cycle_power(n: usize, k: usize) -> Result<Graph, GenError> {
    if k == 0 {
        return Err(invalid("cycle power needs k >= 1"));
    }
    if n <= 2 * k {
        return Err(invalid(format!("C_n^k needs n >= 2k+1, got n={n}, k={k}")));
    }
    let edges = (0..n).flat_map(|i| (1..=k).map(move |d| (i, (i + d) % n)));
    Ok(Graph::from_edges(n, edges)?)
}

pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    cycle_power(n, 1)
}

pub fn path(n: usize) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(invalid("path needs n >= 1"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?)
}

pub fn complete(n: usize) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    Ok(Graph::from_edges(
        n,
        (0..n).flat_map(|j| (0..j).map(move |i| (i, j))),
    )?)
}

/// `K_{1,k}` with center 0 and leaves `1..=k`.
pub fn star(k: usize) -> Result<Graph, GenError> {
    if k == 0 {
        return Err(invalid("star needs k >= 1"));
    }
    Ok(Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))?)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i — i+5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edges(10, outer.chain(inner).chain(spokes)).expect("valid construction")
}

/// Line graph; vertex `e` is the `e`-th edge of `g.edges()`.
pub fn line_graph(g: &Graph) -> Result<Graph, GenError> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(invalid("line graph of an edgeless graph is empty"));
    }
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(edges.len(), out)?)
}

/// Complete bipartite `K_{p,q}`; the first part is `0..p`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph, GenError> {
    if p == 0 || q == 0 {
        return Err(invalid(
            "complete bipartite graph needs two non-empty parts",
        ));
    }
    Ok(Graph::from_edges(
        p + q,
        (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j))),
    )?)
}

/// A connected graph on `n` vertices: a random spanning tree plus every
/// other pair independently with probability `p`. Reproducible per seed.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(invalid("random graph needs n >= 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::new();
    for k in 1..n {
        let parent = order[rng.gen_range(0..k)];
        edges.push((parent, order[k]));
    }
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// `count` random connected graphs with orders in `min_n..=max_n` and edge
/// densities spread over `[0.05, 0.95]`, fully determined by `seed`.
pub fn random_corpus(
    count: usize,
    min_n: usize,
    max_n: usize,
    seed: u64,
) -> Result<Vec<Graph>, GenError> {
    if min_n == 0 || min_n > max_n || max_n > crate::graph::MAX_VERTICES {
        return Err(invalid(format!(
            "corpus orders need 1 <= min <= max <= 64, got {min_n}..{max_n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            let p = rng.gen_range(0.05..=0.95);
            random_connected(n, p, rng.gen())
        })
        .collect()
}
