//! Seeded random instances for property tests, the acceptance suite and
//! benchmarking.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::sp::SpTree;
use crate::graph::{Graph, VertexId};
use crate::scalar::Scalar;

/// A random rational `k/d` in `[0, 1]` with `d ≤ max_den`.
pub fn rational_unit<T: Scalar, R: Rng + ?Sized>(rng: &mut R, max_den: i64) -> T {
    let den = rng.gen_range(1..=max_den);
    T::ratio(rng.gen_range(0..=den), den)
}

/// A random rational in `(0, 1]`.
pub fn probability<T: Scalar, R: Rng + ?Sized>(rng: &mut R, max_den: i64) -> T {
    let den = rng.gen_range(1..=max_den);
    T::ratio(rng.gen_range(1..=den), den)
}

/// Random graph on `vertices` vertices (source 0, sink `vertices − 1`) with
/// `edges` edges, containing an s-t path. Parallel edges are allowed.
///
/// A random s-t path is laid down first, then a random spanning structure
/// connects every vertex (undirected) and the remaining edges are uniform
/// non-loop pairs.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, directed: bool, vertices: usize, edges: usize) -> Graph {
    assert!(vertices >= 2);
    let (s, t) = (0, vertices - 1);
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();

    let mut middle: Vec<VertexId> = (1..t).collect();
    middle.shuffle(rng);
    let hops = rng.gen_range(0..=middle.len().min(edges.saturating_sub(1)));
    let mut route = vec![s];
    route.extend(&middle[..hops]);
    route.push(t);
    for w in route.windows(2) {
        pairs.push((w[0], w[1]));
    }

    if !directed {
        // attach every vertex not on the route
        let mut attached: Vec<VertexId> = route.clone();
        for &v in &middle[hops..] {
            if pairs.len() >= edges {
                break;
            }
            let u = *attached.choose(rng).unwrap();
            pairs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
            attached.push(v);
        }
    }

    while pairs.len() < edges {
        let u = rng.gen_range(0..vertices);
        let v = rng.gen_range(0..vertices);
        if u != v {
            pairs.push((u, v));
        }
    }
    pairs.shuffle(rng);
    Graph::new(directed, vertices, s, t, pairs).expect("generated graph is valid")
}

/// Random two-terminal series-parallel graph with exactly `leaves` edges,
/// built by expanding a random decomposition tree. Source is 0, sink 1.
pub fn random_sp_graph<R: Rng + ?Sized>(rng: &mut R, leaves: usize) -> Graph {
    let (tree, vertex_count) = random_sp_tree(rng, leaves);
    let mut edges = tree.expand();
    edges.sort();
    let pairs: Vec<_> = edges.into_iter().map(|(_, u, v)| if rng.gen_bool(0.5) { (u, v) } else { (v, u) }).collect();
    Graph::new(false, vertex_count, 0, 1, pairs).expect("expanded tree is valid")
}

/// Random decomposition tree over edge ids `0..leaves` with terminals 0 and
/// 1, and the number of vertices it spans.
pub fn random_sp_tree<R: Rng + ?Sized>(rng: &mut R, leaves: usize) -> (SpTree, usize) {
    assert!(leaves >= 1);
    let mut ids: Vec<usize> = (0..leaves).collect();
    ids.shuffle(rng);
    let mut next_vertex = 2;
    let tree = build(rng, &ids, 0, 1, &mut next_vertex);
    (tree, next_vertex)
}

fn build<R: Rng + ?Sized>(rng: &mut R, ids: &[usize], s: VertexId, t: VertexId, next: &mut VertexId) -> SpTree {
    if ids.len() == 1 {
        return SpTree::leaf(ids[0], s, t);
    }
    let split = rng.gen_range(1..ids.len());
    let (left, right) = ids.split_at(split);
    if rng.gen_bool(0.5) {
        let mid = *next;
        *next += 1;
        let a = build(rng, left, s, mid, next);
        let b = build(rng, right, mid, t, next);
        SpTree::series(a, b)
    } else {
        let a = build(rng, left, s, t, next);
        let b = build(rng, right, s, t, next);
        SpTree::parallel(a, b)
    }
}
