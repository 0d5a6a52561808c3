//! Nucleolus of the simple edge path game on undirected series-parallel
//! graphs, computed bottom-up over a decomposition tree.

use crate::error::{Error, Result};
use crate::ext::Ext;
use crate::graph::sp::{sp_decompose, st_relevant_edges, SpNode, SpTree};
use crate::graph::{min_edge_cut, EdgeId, Graph, VertexId};
use crate::scalar::Scalar;
use crate::solve::PayoffVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Composition {
    Leaf,
    /// Series composition where one side has a strictly smaller cut.
    SeriesUnequal,
    SeriesEqual,
    Parallel,
}

/// One recursion step, in post-order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep<T> {
    pub composition: Composition,
    pub source: VertexId,
    pub sink: VertexId,
    /// Minimum cut size of the component.
    pub cut: usize,
    /// Weight given to the first child's vector, when the step mixes two.
    pub alpha: Option<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NucleolusResult<T> {
    pub payoff: PayoffVector<T>,
    pub trace: Vec<TraceStep<T>>,
}

struct Component<T> {
    payoff: Vec<(EdgeId, T)>,
    cut: usize,
    /// Smallest nonzero payoff.
    floor: T,
}

/// Nucleolus of the costless edge path game on an undirected graph.
///
/// Edges on no simple s-t path get zero and are dropped before decomposing;
/// what remains must be two-terminal series-parallel between s and t, or
/// [`Error::NotSeriesParallel`] carries the irreducible remainder.
pub fn nucleolus_sp<T: Scalar>(g: &Graph) -> Result<NucleolusResult<T>> {
    if g.is_directed() {
        return Err(Error::DirectedGraph);
    }
    if !g.has_st_path() {
        return Err(Error::NoPath);
    }
    let relevant = st_relevant_edges(g);
    let kept: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| relevant[e]).collect();
    let pruned = Graph::new(
        false,
        g.vertex_count(),
        g.source(),
        g.sink(),
        kept.iter().map(|&e| {
            let edge = g.edge(e);
            (edge.tail, edge.head)
        }),
    )?;
    let tree = sp_decompose(&pruned).map_err(Error::NotSeriesParallel)?;

    let mut trace = Vec::new();
    let root = solve(&tree, &mut trace);
    let mut payoff = vec![T::zero(); g.edge_count()];
    for (e, v) in root.payoff {
        payoff[kept[e]] = v;
    }
    Ok(NucleolusResult { payoff: PayoffVector(payoff), trace })
}

fn solve<T: Scalar>(tree: &SpTree, trace: &mut Vec<TraceStep<T>>) -> Component<T> {
    let step = |composition, cut, alpha| TraceStep { composition, source: tree.source, sink: tree.sink, cut, alpha };
    match &tree.node {
        SpNode::Leaf(e) => {
            trace.push(step(Composition::Leaf, 1, None));
            Component { payoff: vec![(*e, T::one())], cut: 1, floor: T::one() }
        }
        SpNode::Series(a, b) => {
            let a = solve(a, trace);
            let b = solve(b, trace);
            if a.cut != b.cut {
                let (keep, zero) = if a.cut < b.cut { (a, b) } else { (b, a) };
                trace.push(step(Composition::SeriesUnequal, keep.cut, None));
                let mut payoff = keep.payoff;
                payoff.extend(zero.payoff.into_iter().map(|(e, _)| (e, T::zero())));
                Component { payoff, cut: keep.cut, floor: keep.floor }
            } else {
                let alpha = b.floor.clone() / (a.floor.clone() + b.floor.clone());
                trace.push(step(Composition::SeriesEqual, a.cut, Some(alpha.clone())));
                mix(a, b, alpha, |c, _| c)
            }
        }
        SpNode::Parallel(a, b) => {
            let a = solve(a, trace);
            let b = solve(b, trace);
            let cut = a.cut + b.cut;
            let alpha = T::from_usize_exact(a.cut) / T::from_usize_exact(cut);
            trace.push(step(Composition::Parallel, cut, Some(alpha.clone())));
            mix(a, b, alpha, |_, _| cut)
        }
    }
}

/// `α·x' ⊕ (1 − α)·x''`.
fn mix<T: Scalar>(a: Component<T>, b: Component<T>, alpha: T, cut: impl Fn(usize, usize) -> usize) -> Component<T> {
    let beta = T::one() - alpha.clone();
    let cut = cut(a.cut, b.cut);
    let mut payoff: Vec<(EdgeId, T)> = a.payoff.into_iter().map(|(e, v)| (e, v * alpha.clone())).collect();
    payoff.extend(b.payoff.into_iter().map(|(e, v)| (e, v * beta.clone())));
    let floor = payoff
        .iter()
        .map(|(_, v)| v)
        .filter(|v| !v.is_zero())
        .min()
        .cloned()
        .expect("a component always pays some edge");
    Component { payoff, cut, floor }
}

/// Whether each edge lies on some minimum-cardinality s-t cut.
///
/// Edge `e` is re-weighted to `1 − 1/(2|E|)` with all others at 1; `e` is on a
/// minimum cut exactly when the minimum cut weight drops below the edge
/// connectivity, since the discount is smaller than any gap between cut sizes.
pub fn min_cut_membership<T: Scalar>(g: &Graph) -> Vec<bool> {
    let m = g.edge_count();
    let ones: Vec<Ext<T>> = vec![Ext::one(); m];
    let c = min_edge_cut(g, &ones).weight;
    let discounted = Ext::Finite(T::one() - T::from_usize_exact(2 * m).recip_exact());
    (0..m)
        .map(|e| {
            let mut w = ones.clone();
            w[e] = discounted.clone();
            min_edge_cut(g, &w).weight < c
        })
        .collect()
}
