use num_traits::{One, Zero};
use pathgame::generate::{probability, random_graph, rational_unit};
use pathgame::oracle::{self, enumerate};
use pathgame::solve::{self, InterceptMode, Separation};
use pathgame::{Family, GameSpec, Graph, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = Rational;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn graph(rng: &mut ChaCha8Rng, vertex_family: bool, max_edges: usize) -> Graph {
    let directed = rng.gen_bool(0.5);
    loop {
        let v = rng.gen_range(if vertex_family { 3..=8 } else { 2..=7 });
        let e = rng.gen_range((v - 1).max(1)..=max_edges);
        let g = random_graph(rng, directed, v, e);
        if !vertex_family || g.st_edge().is_none() {
            return g;
        }
    }
}

fn costly(seed: u64, family: Family) -> GameSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = graph(&mut rng, family.vertex_players(), 10);
    let n = if family.vertex_players() { g.internal_vertices().count() } else { g.edge_count() };
    let costs: Vec<Q> = (0..n).map(|_| rational_unit(&mut rng, 6)).collect();
    let free = GameSpec::new(family, g.clone(), costs.clone(), q(100, 1)).unwrap();
    let reward = q(100, 1) - free.grand_value().clone() + rational_unit::<Q, _>(&mut rng, 4);
    GameSpec::new(family, g, costs, reward).unwrap()
}

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

#[test]
fn separation_and_least_core_examples() {
    let pair = Graph::new(false, 2, 0, 1, [(0, 1), (0, 1)]).unwrap();
    let simple = GameSpec::simple(Family::Epcg, pair.clone()).unwrap();
    assert!(matches!(
        solve::separation_oracle(&simple, &[Q::one(), Q::zero()], &Q::zero()),
        Separation::Violated { excess, .. } if excess == q(-1, 1)
    ));
    let lc = solve::least_core(&simple);
    assert_eq!((lc.epsilon1, lc.payoff.0), (q(1, 2), vec![q(1, 2), q(1, 2)]));

    let priced = GameSpec::new(Family::Epcg, pair, vec![q(1, 4), q(1, 2)], Q::one()).unwrap();
    let lc = solve::least_core(&priced);
    assert_eq!((lc.epsilon1.clone(), lc.payoff.0.clone()), (q(1, 4), vec![q(1, 2), q(1, 4)]));
    assert_eq!(solve::in_epsilon_core(&priced, lc.payoff.values(), &q(1, 4)), Ok(true));
    assert_eq!(solve::in_epsilon_core(&priced, lc.payoff.values(), &q(249, 1000)), Ok(false));
}

#[test]
fn duals_of_costless_games_solve_by_constraint_generation() {
    // diamond: the dual edge game has minimal winning coalitions = 2-edge cuts
    let diamond = Graph::new(false, 4, 0, 3, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
    let g = GameSpec::simple(Family::EpcgDual, diamond.clone()).unwrap();
    let lc = solve::least_core(&g);
    let table = oracle::enumerate_values(&g, 16).unwrap();
    assert_eq!(lc.epsilon1, oracle::brute_force_least_core(&table).epsilon1);
    assert_eq!(lc.epsilon1, q(1, 2));
    // a and b are both adjacent to s and t: veto players exist, ε₁ = 0
    let g = GameSpec::simple(Family::VpcgDual, diamond).unwrap();
    assert!(solve::least_core(&g).epsilon1.is_zero());
}

#[test]
fn maxmin_examples() {
    let pair = Graph::new(false, 2, 0, 1, [(0, 1), (0, 1)]).unwrap();
    let r = solve::maxmin_intercept(&pair, InterceptMode::Edge, &[q(1, 2), q(1, 3)]).unwrap();
    assert_eq!((r.value, r.strategy), (q(1, 5), vec![q(2, 5), q(3, 5)]));
    let single = Graph::new(true, 2, 0, 1, [(0, 1)]).unwrap();
    let r = solve::maxmin_intercept(&single, InterceptMode::Edge, &[q(1, 2)]).unwrap();
    assert_eq!((r.value, r.strategy), (q(1, 2), vec![Q::one()]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn constraint_generation_matches_brute_force(seed in any::<u64>(), family in family()) {
        let g = costly(seed, family);
        let lc = solve::least_core(&g);
        let table = oracle::enumerate_values(&g, 16).unwrap();
        let brute = oracle::brute_force_least_core(&table);
        prop_assert_eq!(&lc.epsilon1, &brute.epsilon1);
        prop_assert!(table.in_epsilon_core(lc.payoff.values(), &brute.epsilon1));
        prop_assert_eq!(solve::in_epsilon_core(&g, brute.payoff.values(), &lc.epsilon1), Ok(true));
        prop_assert!(lc.epsilon1 >= Q::zero());
        prop_assert_eq!(lc.payoff.sum(), g.grand_value().clone());
        prop_assert!(lc.payoff.values().iter().all(|v| *v >= Q::zero()));
        // at most one master solve per coalition
        prop_assert!(lc.iterations <= 1 << g.player_count());
        for s in &lc.tight_coalitions {
            prop_assert_eq!(table.excess(lc.payoff.values(), s.to_mask().unwrap()), -lc.epsilon1.clone());
        }
    }

    #[test]
    fn closed_form_matches_constraint_generation(seed in any::<u64>(), vertex in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = graph(&mut rng, vertex, 12);
        let c = if vertex { enumerate::vertex_connectivity(&g).unwrap() } else { enumerate::edge_connectivity(&g) };
        let family = if vertex { Family::Vpcg } else { Family::Epcg };
        let spec = GameSpec::simple(family, g).unwrap();
        let cf = solve::combinatorial_least_core(&spec).unwrap();
        let cg = solve::least_core(&spec);
        let expected = Q::one() - Q::from_integer(c.into()).recip();
        prop_assert_eq!(&cf.epsilon1, &expected);
        prop_assert_eq!(&cg.epsilon1, &expected);
        prop_assert_eq!(solve::in_epsilon_core(&spec, cf.payoff.values(), &expected), Ok(true));
    }

    #[test]
    fn core_is_nonempty_exactly_when_least_core_is_zero(seed in any::<u64>(), family in family()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = GameSpec::simple(family, graph(&mut rng, family.vertex_players(), 10)).unwrap();
        let test = solve::core_nonempty(&spec);
        prop_assert_eq!(test.nonempty, solve::least_core(&spec).epsilon1.is_zero());
        if let Some(w) = test.witness {
            let mut others = spec.grand_coalition();
            others.remove(w);
            prop_assert!(!spec.simple_value(&others));
        }
    }

    #[test]
    fn interceptor_guarantee_holds_on_every_path(seed in any::<u64>(), vertex in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = graph(&mut rng, vertex, 10);
        let (mode, players): (_, Vec<usize>) = if vertex {
            (InterceptMode::Vertex, g.internal_vertices().collect())
        } else {
            (InterceptMode::Edge, (0..g.edge_count()).collect())
        };
        let p: Vec<Q> = players.iter().map(|_| probability(&mut rng, 5)).collect();
        let r = solve::maxmin_intercept(&g, mode, &p).unwrap();
        prop_assert_eq!(r.strategy.iter().fold(Q::zero(), |a, v| a + v.clone()), Q::one());
        prop_assert!(r.strategy.iter().all(|v| *v >= Q::zero()));
        for path in enumerate::simple_st_paths(&g) {
            let items = if vertex { enumerate::path_internal_vertices(&g, &path) } else { path };
            let caught = items
                .iter()
                .map(|it| players.binary_search(it).unwrap())
                .fold(Q::zero(), |a, i| a + r.strategy[i].clone() * p[i].clone());
            prop_assert!(caught >= r.value);
        }

        let family = if vertex { Family::Vpcg } else { Family::Epcg };
        let unit = solve::maxmin_intercept(&g, mode, &vec![Q::one(); players.len()]).unwrap();
        let lc = solve::least_core(&GameSpec::simple(family, g).unwrap());
        prop_assert_eq!(unit.value, Q::one() - lc.epsilon1);
    }
}
