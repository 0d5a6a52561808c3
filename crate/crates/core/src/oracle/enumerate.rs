//! Exhaustive graph enumerations used as references for the fast
//! primitives. Exponential; meant for graphs with a dozen edges or fewer.

use crate::ext::Ext;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::scalar::Scalar;

/// Every simple s-t path as its edge sequence.
pub fn simple_st_paths(g: &Graph) -> Vec<Vec<EdgeId>> {
    fn walk(g: &Graph, u: VertexId, on_path: &mut [bool], edges: &mut Vec<EdgeId>, out: &mut Vec<Vec<EdgeId>>) {
        if u == g.sink() {
            out.push(edges.clone());
            return;
        }
        for &(e, w) in g.out_arcs(u) {
            if !on_path[w] {
                on_path[w] = true;
                edges.push(e);
                walk(g, w, on_path, edges, out);
                edges.pop();
                on_path[w] = false;
            }
        }
    }
    let mut on_path = vec![false; g.vertex_count()];
    on_path[g.source()] = true;
    let mut out = Vec::new();
    walk(g, g.source(), &mut on_path, &mut Vec::new(), &mut out);
    out
}

/// Internal vertices visited by an s-t edge sequence, in order.
pub fn path_internal_vertices(g: &Graph, path: &[EdgeId]) -> Vec<VertexId> {
    let mut at = g.source();
    let mut out = Vec::new();
    for &e in path {
        at = g.edge(e).other(at);
        if at != g.sink() {
            out.push(at);
        }
    }
    out
}

fn subsets(n: usize) -> impl Iterator<Item = u64> {
    assert!(n < 24, "exhaustive enumeration over {n} items");
    0..(1u64 << n)
}

/// Minimum weight over all edge subsets whose removal disconnects s from t.
pub fn min_edge_cut_weight<T: Scalar>(g: &Graph, weights: &[Ext<T>]) -> Ext<T> {
    subsets(g.edge_count())
        .filter(|&mask| !g.connects(|e| mask >> e & 1 == 0, |_| true))
        .map(|mask| (0..g.edge_count()).filter(|e| mask >> e & 1 == 1).map(|e| &weights[e]).sum())
        .min()
        .expect("removing every edge disconnects")
}

/// Minimum weight over internal-vertex subsets whose removal disconnects s
/// from t; `None` when a direct s-t edge makes that impossible.
pub fn min_vertex_cut_weight<T: Scalar>(g: &Graph, vertex_weights: &[Ext<T>]) -> Option<Ext<T>> {
    let internal: Vec<VertexId> = g.internal_vertices().collect();
    subsets(internal.len())
        .filter(|&mask| {
            let removed = |v: VertexId| internal.iter().position(|&x| x == v).is_some_and(|i| mask >> i & 1 == 1);
            !g.connects(|_| true, |v| !removed(v))
        })
        .map(|mask| (0..internal.len()).filter(|i| mask >> i & 1 == 1).map(|i| &vertex_weights[internal[i]]).sum())
        .min()
}

/// All minimum-cardinality s-t edge cuts, each as an ascending edge list.
pub fn minimum_edge_cuts(g: &Graph) -> Vec<Vec<EdgeId>> {
    let cuts: Vec<u64> =
        subsets(g.edge_count()).filter(|&mask| !g.connects(|e| mask >> e & 1 == 0, |_| true)).collect();
    let best = cuts.iter().map(|m| m.count_ones()).min().unwrap_or(0);
    cuts.into_iter()
        .filter(|m| m.count_ones() == best)
        .map(|m| (0..g.edge_count()).filter(|e| m >> e & 1 == 1).collect())
        .collect()
}

/// Minimum cardinality of an s-t edge cut.
pub fn edge_connectivity(g: &Graph) -> usize {
    minimum_edge_cuts(g).first().map_or(0, Vec::len)
}

/// Minimum cardinality of an s-t vertex cut; `None` with a direct s-t edge.
pub fn vertex_connectivity(g: &Graph) -> Option<usize> {
    let ones: Vec<Ext<num_rational::BigRational>> = vec![Ext::one(); g.vertex_count()];
    min_vertex_cut_weight(g, &ones).map(|w| {
        let w = w.into_finite().expect("unit weights");
        num_traits::ToPrimitive::to_usize(&w.to_integer()).unwrap()
    })
}
