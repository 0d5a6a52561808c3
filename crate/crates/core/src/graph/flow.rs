//! Maximum flow, minimum edge and vertex cuts, and vertex splitting.
//!
//! Max flow is Edmonds–Karp (breadth-first augmenting paths), which
//! terminates on any exact capacities. Undirected edges become a pair of
//! antiparallel arcs sharing one capacity.

use std::collections::VecDeque;

use super::{Edge, EdgeId, Graph, VertexId};
use crate::ext::Ext;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut<T> {
    /// Cut edges, ascending. Empty when the cut weight is infinite.
    pub edges: Vec<EdgeId>,
    pub weight: Ext<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCut<T> {
    /// Cut vertices (original ids), ascending. Empty when the weight is infinite.
    pub vertices: Vec<VertexId>,
    pub weight: Ext<T>,
}

/// Result of [`split_vertices`]: a directed graph in which every internal
/// vertex `v` is replaced by `v_in → v_out`.
#[derive(Clone, Debug)]
pub struct SplitGraph<T> {
    pub graph: Graph,
    pub weights: Vec<Ext<T>>,
    /// Internal edge standing for each original vertex (`None` for s and t).
    pub internal_edge: Vec<Option<EdgeId>>,
    /// Original edge each non-internal arc was derived from.
    pub original_edge: Vec<Option<EdgeId>>,
    internal_of: Vec<Option<VertexId>>,
}

impl<T> SplitGraph<T> {
    /// Original vertex whose internal edge is `e`, if any.
    pub fn internal_vertex(&self, e: EdgeId) -> Option<VertexId> {
        self.internal_of[e]
    }
}

/// Splits every internal vertex; internal edges carry `vertex_weights`
/// (indexed by original vertex id) and every original arc weighs `+∞`.
pub fn split_vertices<T: Scalar>(g: &Graph, vertex_weights: &[Ext<T>]) -> SplitGraph<T> {
    split_with_arc_weight(g, vertex_weights, Ext::Infinity)
}

pub(crate) fn split_with_arc_weight<T: Scalar>(
    g: &Graph,
    vertex_weights: &[Ext<T>],
    arc_weight: Ext<T>,
) -> SplitGraph<T> {
    assert_eq!(vertex_weights.len(), g.vertex_count(), "one weight per vertex");

    let mut names = Vec::new();
    let mut in_id = vec![0; g.vertex_count()];
    let mut out_id = vec![0; g.vertex_count()];
    for v in 0..g.vertex_count() {
        if g.is_terminal(v) {
            in_id[v] = names.len();
            out_id[v] = names.len();
            names.push(g.vertex_name(v).to_string());
        } else {
            in_id[v] = names.len();
            out_id[v] = names.len() + 1;
            names.push(format!("{}_in", g.vertex_name(v)));
            names.push(format!("{}_out", g.vertex_name(v)));
        }
    }

    let mut edges = Vec::new();
    let mut edge_names = Vec::new();
    let mut weights = Vec::new();
    let mut internal_edge = vec![None; g.vertex_count()];
    let mut internal_of = Vec::new();
    let mut original_edge = Vec::new();

    for v in g.internal_vertices() {
        internal_edge[v] = Some(edges.len());
        internal_of.push(Some(v));
        original_edge.push(None);
        edges.push(Edge { tail: in_id[v], head: out_id[v] });
        edge_names.push(g.vertex_name(v).to_string());
        weights.push(vertex_weights[v].clone());
    }
    for (id, e) in g.edges().iter().enumerate() {
        let mut arcs = vec![(e.tail, e.head)];
        if !g.is_directed() {
            arcs.push((e.head, e.tail));
        }
        for (u, w) in arcs {
            internal_of.push(None);
            original_edge.push(Some(id));
            edges.push(Edge { tail: out_id[u], head: in_id[w] });
            edge_names.push(g.edge_name(id).to_string());
            weights.push(arc_weight.clone());
        }
    }

    let graph = Graph::with_names(true, names, out_id[g.source()], in_id[g.sink()], edges, edge_names)
        .expect("splitting preserves validity");
    SplitGraph { graph, weights, internal_edge, original_edge, internal_of }
}

struct Residual<T> {
    // arc 2e runs tail→head, arc 2e+1 head→tail
    head: Vec<VertexId>,
    cap: Vec<Ext<T>>,
    adj: Vec<Vec<usize>>,
}

impl<T: Scalar> Residual<T> {
    fn new(g: &Graph, weights: &[Ext<T>]) -> Self {
        let mut head = Vec::with_capacity(2 * g.edge_count());
        let mut cap = Vec::with_capacity(2 * g.edge_count());
        let mut adj = vec![Vec::new(); g.vertex_count()];
        for (id, e) in g.edges().iter().enumerate() {
            head.push(e.head);
            cap.push(weights[id].clone());
            adj[e.tail].push(2 * id);
            head.push(e.tail);
            cap.push(if g.is_directed() { Ext::zero() } else { weights[id].clone() });
            adj[e.head].push(2 * id + 1);
        }
        Residual { head, cap, adj }
    }

    fn bfs(&self, source: VertexId) -> Vec<Option<usize>> {
        // parent arc per vertex; the source marks itself with usize::MAX
        let mut parent = vec![None; self.adj.len()];
        parent[source] = Some(usize::MAX);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let v = self.head[a];
                if parent[v].is_none() && self.cap[a] > Ext::zero() {
                    parent[v] = Some(a);
                    queue.push_back(v);
                }
            }
        }
        parent
    }
}

enum FlowOutcome<T> {
    Finite { value: T, source_side: Vec<bool> },
    Unbounded,
}

fn run_max_flow<T: Scalar>(g: &Graph, weights: &[Ext<T>]) -> FlowOutcome<T> {
    assert_eq!(weights.len(), g.edge_count(), "one weight per edge");
    let mut res = Residual::new(g, weights);
    let mut value = T::zero();
    loop {
        let parent = res.bfs(g.source());
        if parent[g.sink()].is_none() {
            let source_side = parent.iter().map(Option::is_some).collect();
            return FlowOutcome::Finite { value, source_side };
        }
        let mut path = Vec::new();
        let mut v = g.sink();
        while v != g.source() {
            let a = parent[v].unwrap();
            path.push(a);
            v = res.head[a ^ 1];
        }
        let bottleneck = path.iter().map(|&a| res.cap[a].clone()).min().unwrap();
        let Ext::Finite(delta) = bottleneck else {
            return FlowOutcome::Unbounded;
        };
        for a in path {
            res.cap[a] = res.cap[a].sub_finite(&delta);
            res.cap[a ^ 1] = &res.cap[a ^ 1] + &Ext::Finite(delta.clone());
        }
        value = value + delta;
    }
}

/// Value of a maximum s-t flow under capacities `weights`.
pub fn max_flow<T: Scalar>(g: &Graph, weights: &[Ext<T>]) -> Ext<T> {
    match run_max_flow(g, weights) {
        FlowOutcome::Finite { value, .. } => Ext::Finite(value),
        FlowOutcome::Unbounded => Ext::Infinity,
    }
}

/// Minimum-weight set of edges whose removal disconnects sink from source.
///
/// The returned cut is the set of edges leaving the vertices reachable from
/// the source in the final residual network. Without any s-t path the cut is
/// empty with weight zero; when every cut has infinite weight the edge list
/// is empty and the weight is `+∞`.
pub fn min_edge_cut<T: Scalar>(g: &Graph, weights: &[Ext<T>]) -> EdgeCut<T> {
    match run_max_flow(g, weights) {
        FlowOutcome::Unbounded => EdgeCut { edges: Vec::new(), weight: Ext::Infinity },
        FlowOutcome::Finite { source_side, .. } => {
            let edges: Vec<EdgeId> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, e)| {
                    let (a, b) = (source_side[e.tail], source_side[e.head]);
                    if g.is_directed() {
                        a && !b
                    } else {
                        a != b
                    }
                })
                .map(|(id, _)| id)
                .collect();
            let weight = edges.iter().map(|&e| &weights[e]).sum();
            EdgeCut { edges, weight }
        }
    }
}

/// Minimum-weight set of internal vertices separating source from sink;
/// `None` if the graph has a direct source-sink edge.
pub fn min_vertex_cut<T: Scalar>(g: &Graph, vertex_weights: &[Ext<T>]) -> Option<VertexCut<T>> {
    if g.st_edge().is_some() {
        return None;
    }
    let split = split_vertices(g, vertex_weights);
    let cut = min_edge_cut(&split.graph, &split.weights);
    let vertices = cut.edges.iter().map(|&e| split.internal_vertex(e).expect("original arcs are uncuttable")).collect();
    Some(VertexCut { vertices, weight: cut.weight })
}
