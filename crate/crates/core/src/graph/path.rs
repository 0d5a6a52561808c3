//! Dijkstra over exact weights.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::flow::split_with_arc_weight;
use super::{EdgeId, Graph, VertexId};
use crate::ext::Ext;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path<T> {
    /// Edges from source to sink.
    pub edges: Vec<EdgeId>,
    pub weight: T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPath<T> {
    /// Internal vertices in order from source to sink.
    pub vertices: Vec<VertexId>,
    pub weight: T,
}

/// Minimum-weight simple s-t path; `None` when the sink cannot be reached
/// through finite-weight edges.
///
/// Arcs are relaxed in ascending edge id and, among equal tentative
/// distances, the lexicographically smaller `(predecessor, edge)` wins, so
/// ties resolve identically on every run.
pub fn shortest_path<T: Scalar>(g: &Graph, weights: &[Ext<T>]) -> Option<Path<T>> {
    assert_eq!(weights.len(), g.edge_count(), "one weight per edge");
    debug_assert!(weights.iter().all(|w| *w >= Ext::zero()), "weights must be nonnegative");

    let n = g.vertex_count();
    let mut dist: Vec<Option<T>> = vec![None; n];
    let mut pred: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
    let mut settled = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[g.source()] = Some(T::zero());
    heap.push(Reverse((T::zero(), g.source())));

    while let Some(Reverse((d, u))) = heap.pop() {
        if settled[u] {
            continue;
        }
        settled[u] = true;
        if u == g.sink() {
            break;
        }
        for &(e, v) in g.out_arcs(u) {
            let Ext::Finite(w) = &weights[e] else { continue };
            if settled[v] {
                continue;
            }
            let cand = d.clone() + w.clone();
            let better = match &dist[v] {
                None => true,
                Some(cur) if cand < *cur => true,
                Some(cur) => cand == *cur && pred[v].is_none_or(|p| (u, e) < p),
            };
            if better {
                if dist[v].as_ref() != Some(&cand) {
                    heap.push(Reverse((cand.clone(), v)));
                }
                dist[v] = Some(cand);
                pred[v] = Some((u, e));
            }
        }
    }

    let weight = dist[g.sink()].clone()?;
    let mut edges = Vec::new();
    let mut v = g.sink();
    while let Some((u, e)) = pred[v] {
        edges.push(e);
        v = u;
    }
    edges.reverse();
    Some(Path { edges, weight })
}

/// Minimum total internal-vertex weight over simple s-t paths.
///
/// `vertex_weights` is indexed by vertex id; the entries for source and sink
/// are ignored. Runs [`shortest_path`] on the split graph whose internal
/// edges carry the vertex weights and whose original arcs cost nothing.
pub fn shortest_vertex_path<T: Scalar>(g: &Graph, vertex_weights: &[Ext<T>]) -> Option<VertexPath<T>> {
    let split = split_with_arc_weight(g, vertex_weights, Ext::zero());
    let path = shortest_path(&split.graph, &split.weights)?;
    let vertices = path.edges.iter().filter_map(|&e| split.internal_vertex(e)).collect();
    Some(VertexPath { vertices, weight: path.weight })
}
