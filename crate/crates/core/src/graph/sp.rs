//! Two-terminal series-parallel recognition by repeated parallel and
//! series reductions.

use std::collections::HashMap;

use super::{EdgeId, Graph, VertexId};

/// A decomposition tree; every subtree knows its own terminal pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpTree {
    pub source: VertexId,
    pub sink: VertexId,
    pub node: SpNode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpNode {
    Leaf(EdgeId),
    /// `left.sink == right.source`.
    Series(Box<SpTree>, Box<SpTree>),
    /// Both children span the same terminals as the parent.
    Parallel(Box<SpTree>, Box<SpTree>),
}

impl SpTree {
    pub fn leaf(edge: EdgeId, source: VertexId, sink: VertexId) -> Self {
        SpTree { source, sink, node: SpNode::Leaf(edge) }
    }

    pub fn series(left: SpTree, right: SpTree) -> Self {
        assert_eq!(left.sink, right.source, "series children must share a vertex");
        SpTree { source: left.source, sink: right.sink, node: SpNode::Series(Box::new(left), Box::new(right)) }
    }

    pub fn parallel(a: SpTree, b: SpTree) -> Self {
        assert_eq!((a.source, a.sink), (b.source, b.sink), "parallel children must share terminals");
        SpTree { source: a.source, sink: a.sink, node: SpNode::Parallel(Box::new(a), Box::new(b)) }
    }

    /// The same subgraph with source and sink exchanged.
    pub fn reversed(self) -> Self {
        let node = match self.node {
            SpNode::Leaf(e) => SpNode::Leaf(e),
            SpNode::Series(l, r) => SpNode::Series(Box::new(r.reversed()), Box::new(l.reversed())),
            SpNode::Parallel(a, b) => SpNode::Parallel(Box::new(a.reversed()), Box::new(b.reversed())),
        };
        SpTree { source: self.sink, sink: self.source, node }
    }

    /// Leaf edges in left-to-right order.
    pub fn leaves(&self) -> Vec<EdgeId> {
        let mut out = Vec::new();
        self.visit_leaves(&mut |e, _, _| out.push(e));
        out
    }

    /// `(edge, endpoint, endpoint)` for every leaf: the graph the tree rebuilds.
    pub fn expand(&self) -> Vec<(EdgeId, VertexId, VertexId)> {
        let mut out = Vec::new();
        self.visit_leaves(&mut |e, u, v| out.push((e, u, v)));
        out
    }

    fn visit_leaves(&self, f: &mut impl FnMut(EdgeId, VertexId, VertexId)) {
        match &self.node {
            SpNode::Leaf(e) => f(*e, self.source, self.sink),
            SpNode::Series(a, b) | SpNode::Parallel(a, b) => {
                a.visit_leaves(f);
                b.visit_leaves(f);
            }
        }
    }
}

/// What was left when no reduction applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Remnant {
    /// Endpoints of the surviving (possibly composite) edges.
    pub edges: Vec<(VertexId, VertexId)>,
}

impl std::fmt::Display for Remnant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pairs: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "{}", pairs.join(", "))
    }
}

/// Decomposes an undirected two-terminal graph.
///
/// Direction flags are ignored. Fails with the irreducible remnant when the
/// graph does not reduce to a single source-sink edge; in particular,
/// dangling parts off every s-t path are not pruned here (see
/// [`st_relevant_edges`]).
pub fn sp_decompose(g: &Graph) -> Result<SpTree, Remnant> {
    let mut slots: Vec<Option<SpTree>> =
        g.edges().iter().enumerate().map(|(id, e)| Some(SpTree::leaf(id, e.tail, e.head))).collect();
    let (s, t) = (g.source(), g.sink());

    loop {
        let mut changed = false;

        // parallel merges, lowest slot absorbs
        let mut first: HashMap<(VertexId, VertexId), usize> = HashMap::new();
        for i in 0..slots.len() {
            let Some(tree) = &slots[i] else { continue };
            let key = ordered(tree.source, tree.sink);
            match first.get(&key) {
                None => {
                    first.insert(key, i);
                }
                Some(&j) => {
                    let b = slots[i].take().unwrap();
                    let a = slots[j].take().unwrap();
                    let b = if b.source == a.source { b } else { b.reversed() };
                    slots[j] = Some(SpTree::parallel(a, b));
                    changed = true;
                }
            }
        }

        // series merge at the lowest-id eligible vertex
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
        for (i, slot) in slots.iter().enumerate() {
            if let Some(tree) = slot {
                incident[tree.source].push(i);
                incident[tree.sink].push(i);
            }
        }
        if let Some(v) = (0..g.vertex_count()).find(|&v| v != s && v != t && incident[v].len() == 2) {
            let (i, j) = (incident[v][0], incident[v][1]);
            let a = slots[i].take().unwrap();
            let b = slots[j].take().unwrap();
            let a = if a.sink == v { a } else { a.reversed() };
            let b = if b.source == v { b } else { b.reversed() };
            slots[i] = Some(SpTree::series(a, b));
            changed = true;
        }

        if !changed {
            break;
        }
    }

    let alive: Vec<SpTree> = slots.into_iter().flatten().collect();
    match alive.as_slice() {
        [tree] if ordered(tree.source, tree.sink) == ordered(s, t) => {
            let tree = alive.into_iter().next().unwrap();
            Ok(if tree.source == s { tree } else { tree.reversed() })
        }
        _ => Err(Remnant { edges: alive.iter().map(|tree| (tree.source, tree.sink)).collect() }),
    }
}

fn ordered(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    (a.min(b), a.max(b))
}

/// Per edge: does it lie on some simple s-t path of the undirected graph?
///
/// An edge lies on a simple s-t path exactly when it shares a biconnected
/// component with a virtual s-t edge.
pub fn st_relevant_edges(g: &Graph) -> Vec<bool> {
    let mut edges: Vec<(VertexId, VertexId)> = g.edges().iter().map(|e| (e.tail, e.head)).collect();
    let virtual_edge = edges.len();
    edges.push((g.source(), g.sink()));
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((id, v));
        adj[v].push((id, u));
    }

    struct Tarjan<'a> {
        adj: &'a [Vec<(EdgeId, VertexId)>],
        disc: Vec<Option<usize>>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<EdgeId>,
        relevant: Vec<bool>,
        virtual_edge: EdgeId,
    }

    impl Tarjan<'_> {
        fn dfs(&mut self, u: VertexId, via: Option<EdgeId>) {
            self.disc[u] = Some(self.time);
            self.low[u] = self.time;
            self.time += 1;
            for &(e, w) in &self.adj[u] {
                if Some(e) == via {
                    continue;
                }
                match self.disc[w] {
                    None => {
                        self.stack.push(e);
                        self.dfs(w, Some(e));
                        self.low[u] = self.low[u].min(self.low[w]);
                        if self.low[w] >= self.disc[u].unwrap() {
                            let mut block = Vec::new();
                            while let Some(f) = self.stack.pop() {
                                block.push(f);
                                if f == e {
                                    break;
                                }
                            }
                            if block.contains(&self.virtual_edge) {
                                for f in block {
                                    self.relevant[f] = true;
                                }
                            }
                        }
                    }
                    Some(d) if d < self.disc[u].unwrap() => {
                        self.stack.push(e);
                        self.low[u] = self.low[u].min(d);
                    }
                    Some(_) => {}
                }
            }
        }
    }

    let mut tarjan = Tarjan {
        adj: &adj,
        disc: vec![None; g.vertex_count()],
        low: vec![0; g.vertex_count()],
        time: 0,
        stack: Vec::new(),
        relevant: vec![false; edges.len()],
        virtual_edge,
    };
    tarjan.dfs(g.source(), None);
    tarjan.relevant.truncate(virtual_edge);
    tarjan.relevant
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::oracle::enumerate::simple_st_paths;
    use proptest::prelude::*;

    fn leaf(e: EdgeId, u: VertexId, v: VertexId) -> SpTree {
        SpTree::leaf(e, u, v)
    }

    #[test]
    fn parallel_pair() {
        let tree = sp_decompose(&crate::graph::fixtures::parallel_pair()).unwrap();
        assert_eq!(tree, SpTree::parallel(leaf(0, 0, 1), leaf(1, 0, 1)));
    }

    #[test]
    fn diamond() {
        let tree = sp_decompose(&crate::graph::fixtures::diamond(false)).unwrap();
        let upper = SpTree::series(leaf(0, 0, 1), leaf(1, 1, 3));
        let lower = SpTree::series(leaf(2, 0, 2), leaf(3, 2, 3));
        assert_eq!(tree, SpTree::parallel(upper, lower));
    }

    #[test]
    fn wheatstone_bridge_is_rejected() {
        let g = Graph::new(false, 4, 0, 3, [(0, 1), (1, 3), (0, 2), (2, 3), (1, 2)]).unwrap();
        let remnant = sp_decompose(&g).unwrap_err();
        assert_eq!(remnant.edges.len(), 5);
    }

    #[test]
    fn exhaustive_reduction_orders_never_reduce_bridge() {
        // Apply the two rules in every possible order on the bridge; no
        // order reaches a single s-t edge.
        fn reducible(edges: Vec<(usize, usize)>, s: usize, t: usize) -> bool {
            if edges.len() == 1 {
                let (a, b) = edges[0];
                return (a, b) == (s, t) || (b, a) == (s, t);
            }
            for i in 0..edges.len() {
                for j in i + 1..edges.len() {
                    if ordered(edges[i].0, edges[i].1) == ordered(edges[j].0, edges[j].1) {
                        let mut next = edges.clone();
                        next.remove(j);
                        if reducible(next, s, t) {
                            return true;
                        }
                    }
                }
            }
            let max_v = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap();
            for v in 0..=max_v {
                if v == s || v == t {
                    continue;
                }
                let inc: Vec<usize> = (0..edges.len()).filter(|&i| edges[i].0 == v || edges[i].1 == v).collect();
                if inc.len() == 2 {
                    let other = |i: usize| if edges[i].0 == v { edges[i].1 } else { edges[i].0 };
                    let (a, b) = (other(inc[0]), other(inc[1]));
                    if a == b {
                        continue;
                    }
                    let mut next: Vec<_> =
                        edges.iter().enumerate().filter(|(k, _)| !inc.contains(k)).map(|(_, &e)| e).collect();
                    next.push((a, b));
                    if reducible(next, s, t) {
                        return true;
                    }
                }
            }
            false
        }
        assert!(!reducible(vec![(0, 1), (1, 3), (0, 2), (2, 3), (1, 2)], 0, 3));
        assert!(reducible(vec![(0, 1), (1, 3), (0, 2), (2, 3)], 0, 3));
    }

    #[test]
    fn dangling_edges_block_decomposition_but_are_irrelevant() {
        // s-a-t plus pendant a-b
        let g = Graph::new(false, 4, 0, 2, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(sp_decompose(&g).is_err());
        assert_eq!(st_relevant_edges(&g), vec![true, true, false]);
    }

    #[test]
    fn relevance_on_hanging_cycle() {
        // s-t edge plus triangle hanging off t
        let g = Graph::new(false, 4, 0, 1, [(0, 1), (1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(st_relevant_edges(&g), vec![true, false, false, false]);
        assert_eq!(st_relevant_edges(&line(3)), vec![true; 3]);
    }

    proptest! {
        #[test]
        fn round_trip_on_generated_sp_graphs(shape in crate::oracle::strategies::sp_graph(10)) {
            let g = shape;
            let tree = sp_decompose(&g).unwrap();
            prop_assert_eq!((tree.source, tree.sink), (g.source(), g.sink()));
            let mut rebuilt = tree.expand();
            rebuilt.sort();
            prop_assert_eq!(rebuilt.len(), g.edge_count());
            for (e, u, v) in rebuilt {
                let orig = g.edge(e);
                prop_assert_eq!(ordered(u, v), ordered(orig.tail, orig.head));
            }
            check_terminals(&tree)?;
            prop_assert_eq!(Ok(tree), sp_decompose(&g));
        }

        #[test]
        fn relevance_matches_path_enumeration((g, _) in crate::oracle::strategies::graph_with_edge_weights(6, 9)) {
            let mut g = g;
            if g.is_directed() {
                g = Graph::new(false, g.vertex_count(), g.source(), g.sink(), g.edges().iter().map(|e| (e.tail, e.head))).unwrap();
            }
            let mut on_path = vec![false; g.edge_count()];
            for p in simple_st_paths(&g) {
                for e in p {
                    on_path[e] = true;
                }
            }
            prop_assert_eq!(st_relevant_edges(&g), on_path);
        }
    }

    fn check_terminals(tree: &SpTree) -> Result<(), TestCaseError> {
        match &tree.node {
            SpNode::Leaf(_) => {}
            SpNode::Series(a, b) => {
                prop_assert_eq!(a.sink, b.source);
                prop_assert_eq!((a.source, b.sink), (tree.source, tree.sink));
                check_terminals(a)?;
                check_terminals(b)?;
            }
            SpNode::Parallel(a, b) => {
                prop_assert_eq!((a.source, a.sink), (tree.source, tree.sink));
                prop_assert_eq!((b.source, b.sink), (tree.source, tree.sink));
                check_terminals(a)?;
                check_terminals(b)?;
            }
        }
        Ok(())
    }
}
