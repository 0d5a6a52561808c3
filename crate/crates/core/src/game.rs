//! Path coalitional games: the four families, coalition values and the
//! minimum-weight winning coalition oracle.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ext::Ext;
use crate::graph::{self, Graph, VertexId};
use crate::scalar::{format_exact, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Edges are players; a coalition wins if its edges contain an s-t path.
    Epcg,
    /// Internal vertices are players; a coalition wins if it, together with
    /// s and t, induces an s-t path.
    Vpcg,
    /// Dual of [`Family::Epcg`]: a coalition wins if it contains an s-t edge cut.
    EpcgDual,
    /// Dual of [`Family::Vpcg`]: a coalition wins if it contains an s-t vertex cut.
    VpcgDual,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Epcg, Family::Vpcg, Family::EpcgDual, Family::VpcgDual];

    pub fn dual(self) -> Family {
        match self {
            Family::Epcg => Family::EpcgDual,
            Family::EpcgDual => Family::Epcg,
            Family::Vpcg => Family::VpcgDual,
            Family::VpcgDual => Family::Vpcg,
        }
    }

    pub fn is_dual(self) -> bool {
        matches!(self, Family::EpcgDual | Family::VpcgDual)
    }

    pub fn vertex_players(self) -> bool {
        matches!(self, Family::Vpcg | Family::VpcgDual)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Epcg => "epcg",
            Family::Vpcg => "vpcg",
            Family::EpcgDual => "epcg-dual",
            Family::VpcgDual => "vpcg-dual",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| format!("unknown game family `{s}`"))
    }
}

/// A set of player indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coalition {
    players: usize,
    words: Vec<u64>,
}

impl Coalition {
    pub fn empty(players: usize) -> Self {
        Coalition { players, words: vec![0; players.div_ceil(64)] }
    }

    pub fn full(players: usize) -> Self {
        Self::empty(players).complement()
    }

    pub fn from_members(players: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut c = Self::empty(players);
        for i in members {
            c.insert(i);
        }
        c
    }

    /// Bit `i` of `mask` is player `i`.
    pub fn from_mask(players: usize, mask: u64) -> Self {
        assert!(players <= 64 && (players == 64 || mask >> players == 0), "mask exceeds player count");
        let mut c = Self::empty(players);
        if players > 0 {
            c.words[0] = mask;
        }
        c
    }

    pub fn to_mask(&self) -> Option<u64> {
        match self.words.as_slice() {
            [] => Some(0),
            [w] => Some(*w),
            _ => None,
        }
    }

    /// Size of the player set this coalition lives in.
    pub fn universe(&self) -> usize {
        self.players
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.players && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.players, "player {i} out of range");
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.players, "player {i} out of range");
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.players).filter(move |&i| self.contains(i))
    }

    pub fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        if !self.players.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (self.players % 64)) - 1;
            }
        }
        Coalition { players: self.players, words }
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.players, other.players);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        Coalition { players: self.players, words }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// `∑ values[i]` over members.
    pub fn total<T: Scalar>(&self, values: &[T]) -> T {
        self.members().fold(T::zero(), |acc, i| acc + values[i].clone())
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

/// A cost-based path coalitional game.
///
/// With all costs zero and reward one this is exactly the underlying simple
/// game. Players are edge ids for the edge families and internal vertices
/// (ascending id) for the vertex families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameSpec<T> {
    family: Family,
    graph: Graph,
    players: Vec<usize>,
    player_of_vertex: Vec<Option<usize>>,
    costs: Vec<T>,
    reward: T,
    grand_value: T,
}

impl<T: Scalar> GameSpec<T> {
    pub fn new(family: Family, graph: Graph, costs: Vec<T>, reward: T) -> Result<Self> {
        let players: Vec<usize> = if family.vertex_players() {
            graph.internal_vertices().collect()
        } else {
            (0..graph.edge_count()).collect()
        };
        let mut player_of_vertex = vec![None; graph.vertex_count()];
        if family.vertex_players() {
            for (i, &v) in players.iter().enumerate() {
                player_of_vertex[v] = Some(i);
            }
        }
        if costs.len() != players.len() {
            return Err(Error::WeightCount { expected: players.len(), got: costs.len() });
        }
        if let Some(i) = costs.iter().position(|c| c.is_negative()) {
            return Err(Error::NegativeCost(i));
        }
        if reward.is_negative() {
            return Err(Error::InvalidReward);
        }
        if !graph.has_st_path() {
            return Err(Error::NoPath);
        }
        if family.vertex_players() {
            if let Some(e) = graph.st_edge() {
                return Err(Error::VpcgDirectEdge(e));
            }
        }

        let mut spec = GameSpec { family, graph, players, player_of_vertex, costs, reward, grand_value: T::zero() };
        let weights: Vec<Ext<T>> = spec.costs.iter().cloned().map(Ext::Finite).collect();
        let (_, cheapest) = spec.min_weight_winning_coalition(&weights).expect("grand coalition wins");
        let grand = spec.reward.clone() - cheapest;
        if grand.is_negative() {
            return Err(Error::NegativeGrandValue(format_exact(&grand)));
        }
        spec.grand_value = grand;
        Ok(spec)
    }

    /// The simple game: zero costs, reward one.
    pub fn simple(family: Family, graph: Graph) -> Result<Self> {
        let n = if family.vertex_players() { graph.internal_vertices().count() } else { graph.edge_count() };
        Self::new(family, graph, vec![T::zero(); n], T::one())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn player_count(&self) -> usize {
        self.players.len()
    }

    /// Edge or vertex id of each player.
    pub fn players(&self) -> &[usize] {
        &self.players
    }

    pub fn player_name(&self, i: usize) -> &str {
        if self.family.vertex_players() {
            self.graph.vertex_name(self.players[i])
        } else {
            self.graph.edge_name(self.players[i])
        }
    }

    pub fn player_by_name(&self, name: &str) -> Option<usize> {
        (0..self.player_count()).find(|&i| self.player_name(i) == name)
    }

    /// Player index of a vertex, for the vertex families.
    pub fn player_of_vertex(&self, v: VertexId) -> Option<usize> {
        self.player_of_vertex[v]
    }

    pub fn costs(&self) -> &[T] {
        &self.costs
    }

    pub fn reward(&self) -> &T {
        &self.reward
    }

    pub fn is_costless(&self) -> bool {
        self.reward.is_one() && self.costs.iter().all(|c| c.is_zero())
    }

    /// `v(N)`: reward minus the cheapest winning coalition's cost.
    pub fn grand_value(&self) -> &T {
        &self.grand_value
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition::full(self.player_count())
    }

    /// The same graph, costs and reward under the dual family.
    pub fn dual_family(&self) -> Self {
        Self::new(self.family.dual(), self.graph.clone(), self.costs.clone(), self.reward.clone())
            .expect("dual of a valid game is valid")
    }

    /// The underlying simple game (costs dropped, reward one).
    pub fn simple_game(&self) -> Self {
        Self::simple(self.family, self.graph.clone()).expect("simple game of a valid game is valid")
    }

    /// Value of `coalition` in the underlying simple game. Duals are
    /// evaluated as `v(N) − v(N∖S)` of the primal family.
    pub fn simple_value(&self, coalition: &Coalition) -> bool {
        debug_assert_eq!(coalition.universe(), self.player_count());
        if self.family.is_dual() {
            !self.primal_connects(&coalition.complement())
        } else {
            self.primal_connects(coalition)
        }
    }

    fn primal_connects(&self, coalition: &Coalition) -> bool {
        if self.family.vertex_players() {
            self.graph.connects(|_| true, |v| self.player_of_vertex[v].is_some_and(|i| coalition.contains(i)))
        } else {
            self.graph.connects(|e| coalition.contains(e), |_| true)
        }
    }

    /// `v^c(S)`: zero for losing coalitions, otherwise the reward minus the
    /// cheapest winning sub-coalition. Can be negative.
    pub fn cost_value(&self, coalition: &Coalition) -> T {
        let weights: Vec<Ext<T>> = (0..self.player_count())
            .map(|i| if coalition.contains(i) { Ext::Finite(self.costs[i].clone()) } else { Ext::Infinity })
            .collect();
        match self.min_weight_winning_coalition(&weights) {
            Some((_, cheapest)) => self.reward.clone() - cheapest,
            None => T::zero(),
        }
    }

    /// A winning coalition of minimum total weight, or `None` when every
    /// winning coalition has a member of infinite weight.
    ///
    /// Dispatches to shortest path, shortest vertex path, minimum edge cut or
    /// minimum vertex cut according to the family.
    pub fn min_weight_winning_coalition(&self, weights: &[Ext<T>]) -> Option<(Coalition, T)> {
        assert_eq!(weights.len(), self.player_count(), "one weight per player");
        let n = self.player_count();
        let vertex_weights = || {
            let mut vw = vec![Ext::zero(); self.graph.vertex_count()];
            for (i, &v) in self.players.iter().enumerate() {
                vw[v] = weights[i].clone();
            }
            vw
        };
        match self.family {
            Family::Epcg => {
                let path = graph::shortest_path(&self.graph, weights)?;
                Some((Coalition::from_members(n, path.edges), path.weight))
            }
            Family::Vpcg => {
                let path = graph::shortest_vertex_path(&self.graph, &vertex_weights())?;
                let members = path.vertices.iter().map(|&v| self.player_of_vertex[v].unwrap());
                Some((Coalition::from_members(n, members), path.weight))
            }
            Family::EpcgDual => {
                let cut = graph::min_edge_cut(&self.graph, weights);
                let weight = cut.weight.into_finite()?;
                Some((Coalition::from_members(n, cut.edges), weight))
            }
            Family::VpcgDual => {
                let cut = graph::min_vertex_cut(&self.graph, &vertex_weights()).expect("validated: no direct s-t edge");
                let weight = cut.weight.into_finite()?;
                let members = cut.vertices.iter().map(|&v| self.player_of_vertex[v].unwrap());
                Some((Coalition::from_members(n, members), weight))
            }
        }
    }
}
