//! Proptest strategies over seeded generators.

use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ext::Ext;
use crate::generate;
use crate::graph::Graph;

type E = Ext<BigRational>;

fn weight(rng: &mut ChaCha8Rng) -> E {
    if rng.gen_ratio(1, 10) {
        Ext::Infinity
    } else {
        Ext::Finite(generate::rational_unit(rng, 6))
    }
}

fn graph(rng: &mut ChaCha8Rng, max_vertices: usize, max_edges: usize) -> Graph {
    let directed = rng.gen_bool(0.5);
    let v = rng.gen_range(2..=max_vertices);
    let e = rng.gen_range(1..=max_edges);
    generate::random_graph(rng, directed, v, e)
}

pub fn graph_with_edge_weights(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = (Graph, Vec<E>)> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = graph(&mut rng, max_vertices, max_edges);
        let w = (0..g.edge_count()).map(|_| weight(&mut rng)).collect();
        (g, w)
    })
}

pub fn graph_with_vertex_weights(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = (Graph, Vec<E>)> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = graph(&mut rng, max_vertices, max_edges);
        let w = (0..g.vertex_count()).map(|_| weight(&mut rng)).collect();
        (g, w)
    })
}

pub fn sp_graph(max_leaves: usize) -> impl Strategy<Value = Graph> {
    (any::<u64>(), 1..=max_leaves).prop_map(|(seed, leaves)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        generate::random_sp_graph(&mut rng, leaves)
    })
}
