//! Two-terminal multigraphs and the combinatorial primitives the game
//! oracles are built on.

pub mod flow;
pub mod path;
pub mod sp;

pub use flow::{max_flow, min_edge_cut, min_vertex_cut, split_vertices, EdgeCut, SplitGraph, VertexCut};
pub use path::{shortest_path, shortest_vertex_path, Path, VertexPath};
pub use sp::{sp_decompose, Remnant, SpNode, SpTree};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Edge {
    /// The endpoint opposite `v`.
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }
}

/// A directed or undirected multigraph with distinguished source and sink.
///
/// Edge ids are positions in the edge list and never change. Parallel edges
/// are allowed, self-loops are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    directed: bool,
    source: VertexId,
    sink: VertexId,
    edges: Vec<Edge>,
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    // (edge, neighbour) per vertex, ascending edge id; both directions for
    // undirected graphs.
    out_arcs: Vec<Vec<(EdgeId, VertexId)>>,
}

impl Graph {
    pub fn new(
        directed: bool,
        vertex_count: usize,
        source: VertexId,
        sink: VertexId,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let edges: Vec<Edge> = edges.into_iter().map(|(tail, head)| Edge { tail, head }).collect();
        let vertex_names = (0..vertex_count)
            .map(|v| match v {
                _ if v == source => "s".to_string(),
                _ if v == sink => "t".to_string(),
                _ => format!("v{v}"),
            })
            .collect();
        let edge_names = (0..edges.len()).map(|e| format!("e{e}")).collect();
        Self::with_names(directed, vertex_names, source, sink, edges, edge_names)
    }

    pub fn with_names(
        directed: bool,
        vertex_names: Vec<String>,
        source: VertexId,
        sink: VertexId,
        edges: Vec<Edge>,
        edge_names: Vec<String>,
    ) -> Result<Self> {
        let n = vertex_names.len();
        for v in [source, sink] {
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
        }
        if source == sink {
            return Err(Error::SourceIsSink);
        }
        assert_eq!(edges.len(), edge_names.len(), "one name per edge");
        let mut out_arcs = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            for v in [e.tail, e.head] {
                if v >= n {
                    return Err(Error::UnknownVertex(v));
                }
            }
            if e.tail == e.head {
                return Err(Error::SelfLoop(id));
            }
            out_arcs[e.tail].push((id, e.head));
            if !directed {
                out_arcs[e.head].push((id, e.tail));
            }
        }
        Ok(Graph { directed, source, sink, edges, vertex_names, edge_names, out_arcs })
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn sink(&self) -> VertexId {
        self.sink
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edge_names[e]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn edge_names(&self) -> &[String] {
        &self.edge_names
    }

    pub fn is_terminal(&self, v: VertexId) -> bool {
        v == self.source || v == self.sink
    }

    /// Every vertex other than the source and sink, ascending.
    pub fn internal_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).filter(move |&v| !self.is_terminal(v))
    }

    /// Arcs usable when leaving `v`, as `(edge, neighbour)` in ascending edge order.
    pub fn out_arcs(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        &self.out_arcs[v]
    }

    /// Lowest-id edge joining the source directly to the sink.
    pub fn st_edge(&self) -> Option<EdgeId> {
        self.out_arcs[self.source].iter().find(|&&(_, w)| w == self.sink).map(|&(e, _)| e)
    }

    /// Whether the sink is reachable from the source using only edges and
    /// internal vertices accepted by the filters.
    pub fn connects(&self, edge_ok: impl Fn(EdgeId) -> bool, vertex_ok: impl Fn(VertexId) -> bool) -> bool {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![self.source];
        seen[self.source] = true;
        while let Some(u) = stack.pop() {
            if u == self.sink {
                return true;
            }
            for &(e, w) in &self.out_arcs[u] {
                if !seen[w] && edge_ok(e) && (self.is_terminal(w) || vertex_ok(w)) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    pub fn has_st_path(&self) -> bool {
        self.connects(|_| true, |_| true)
    }
}
