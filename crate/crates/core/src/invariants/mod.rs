//! Exact solvers for the invariants the rest of the crate reasons about.
//!
//! Every solver returns a certificate that can be re-checked against the
//! graph without trusting the solver: a cut-set with its component count, an
//! independent set, a star.

mod connectivity;
mod cutsets;
mod independence;
mod stars;
mod toughness;

pub use connectivity::{connectivity, ConnectivityCertificate, Separator};
pub use cutsets::{cutsets_of_size, is_vertex_cover};
pub use independence::{independence_number, IndependenceCertificate};
pub use stars::{claw_centers, induced_stars, StarInstance};
pub use toughness::{
    is_t_tough, toughness, toughness_oracle, OracleError, TToughness, Toughness,
    ToughnessCertificate, ORACLE_MAX_ORDER, TOUGHNESS_MAX_ORDER,
};

use crate::graph::Graph;

/// Number of cliques in a greedy clique partition of `set`; an upper bound
/// on the independence number of the induced subgraph.
#[inline]
pub(crate) fn clique_cover_bound(g: &Graph, set: u64) -> usize {
    let mut rest = set;
    let mut count = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let mut clique = 1u64 << v;
        let mut cand = rest & g.row(v);
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            clique |= 1 << w;
            cand &= g.row(w);
        }
        rest &= !clique;
        count += 1;
    }
    count
}
