mod common;

use common::{conjunctive_product, disjunctive_product, peeling_remoteness, random_dag, random_game, sg_by_topology};
use impartial::engine::Solver;
use impartial::explicit::{ExplicitGraph, GraphSpec, NimPile};
use impartial::hypergraph::{HgPiles, Hypergraph, HypergraphNim};
use impartial::{conjunctive_remoteness, disjunctive_sg, Conjunctive, Disjunctive, Error, Game, Outcome, Remoteness, SgValue};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn graph(adj: Vec<Vec<usize>>) -> ExplicitGraph {
    ExplicitGraph::from_adjacency(adj, 0).unwrap()
}

/// Every node's remoteness and SG value from one solver seeded at each node.
fn solve_all(g: &ExplicitGraph) -> (Vec<u64>, Vec<u64>) {
    let mut s = Solver::new(g);
    let r = (0..g.len()).map(|v| s.remoteness(&v).unwrap().0).collect();
    let sg = (0..g.len()).map(|v| s.sg(&v).unwrap().0).collect();
    (r, sg)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn engine_matches_peeling(seed in any::<u64>(), n in 1usize..40, density in 0.02f64..0.6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let adj = random_dag(&mut rng, n, density);
        let g = graph(adj.clone());
        let (r, sg) = solve_all(&g);
        prop_assert_eq!(&r, &peeling_remoteness(&adj));
        prop_assert_eq!(&sg, &sg_by_topology(&adj));
    }

    #[test]
    fn local_laws(seed in any::<u64>(), n in 1usize..40, density in 0.02f64..0.6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let adj = random_dag(&mut rng, n, density);
        let g = graph(adj.clone());
        let (r, sg) = solve_all(&g);
        let mut s = Solver::new(&g);
        for v in 0..n {
            // parity law
            prop_assert_eq!(r[v] % 2 == 0, sg[v] == 0);
            // (I): no move keeps the SG value
            prop_assert!(adj[v].iter().all(|&w| sg[w] != sg[v]));
            // (A): every smaller value is reachable
            for l in 0..sg[v] {
                prop_assert!(adj[v].iter().any(|&w| sg[w] == l));
            }
            // remoteness recursion
            let even: Vec<u64> = adj[v].iter().map(|&w| r[w]).filter(|x| x % 2 == 0).collect();
            let expect = if adj[v].is_empty() {
                0
            } else if let Some(m) = even.iter().min() {
                1 + m
            } else {
                1 + adj[v].iter().map(|&w| r[w]).max().unwrap()
            };
            prop_assert_eq!(r[v], expect);
            // optimal move: first successor with R - 1
            let mv = s.optimal_move(&v).unwrap();
            prop_assert_eq!(mv, adj[v].iter().copied().find(|&w| r[w] + 1 == r[v]));
            let class = s.classify(&v).unwrap();
            prop_assert_eq!(class, if r[v] % 2 == 0 { Outcome::P } else { Outcome::N });
        }
    }

    #[test]
    fn compounds_match_product_graphs(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_game(&mut rng, 30);
        let b = random_game(&mut rng, 30);
        let (ra, sa) = solve_all(&a);
        let (rb, sb) = solve_all(&b);
        let n2 = b.len();

        let conj = peeling_remoteness(&conjunctive_product(a.adjacency(), b.adjacency()));
        let disj = sg_by_topology(&disjunctive_product(a.adjacency(), b.adjacency()));
        for u in 0..a.len() {
            for v in 0..n2 {
                let min = conjunctive_remoteness([Remoteness(ra[u]), Remoteness(rb[v])]).unwrap();
                prop_assert_eq!(min.0, conj[u * n2 + v]);
                let xor = disjunctive_sg([SgValue(sa[u]), SgValue(sb[v])]);
                prop_assert_eq!(xor.0, disj[u * n2 + v]);
            }
        }

        // the library's compound adapters agree at the start positions
        let start = vec![a.start(), b.start()];
        let cg = Conjunctive::new(vec![a.clone(), b.clone()]);
        let dg = Disjunctive::new(vec![a.clone(), b.clone()]);
        prop_assert_eq!(Solver::new(&cg).remoteness(&start).unwrap().0, conj[a.start() * n2 + b.start()]);
        prop_assert_eq!(Solver::new(&dg).sg(&start).unwrap().0, disj[a.start() * n2 + b.start()]);
    }
}

#[test]
fn four_node_path() {
    let spec: GraphSpec = serde_json::from_str(
        r#"{"nodes":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"]],"start":"a"}"#,
    )
    .unwrap();
    let g = ExplicitGraph::from_spec(&spec).unwrap();
    let (r, _) = solve_all(&g);
    assert_eq!(r, vec![3, 2, 1, 0]);
    let mut s = Solver::new(&g);
    assert_eq!(s.optimal_move(&1).unwrap(), Some(2));
    assert_eq!(s.optimal_move(&3).unwrap(), None);
    assert_eq!(s.optimal_play(&0).unwrap(), vec![0, 1, 2, 3]);
    assert_eq!(g.to_spec(), spec);
}

#[test]
fn cycles_are_reported() {
    let g = graph(vec![vec![1], vec![2], vec![0]]);
    assert!(matches!(Solver::new(&g).remoteness(&0), Err(Error::Cycle)));
    let g = graph(vec![vec![1, 2], vec![], vec![2]]);
    assert!(matches!(Solver::new(&g).sg(&0), Err(Error::Cycle)));
}

#[test]
fn sg_decreasing_examples() {
    for s in 0..=10u64 {
        let mut solver = Solver::new(&NimPile);
        assert!(solver.is_sg_decreasing(&s).unwrap());
        assert_eq!(solver.sg(&s).unwrap().0, s);
    }
    let nim2 = HypergraphNim {
        hypergraph: Hypergraph::new(2, &[vec![1], vec![2]]).unwrap(),
    };
    let start: HgPiles = [1, 1].into_iter().collect();
    let mut solver = Solver::new(&nim2);
    assert!(!solver.is_sg_decreasing(&start).unwrap());
    assert_eq!(solver.sg(&start).unwrap().0, 0);
    assert!(nim2.successors(&start).len() == 2);
}

#[test]
fn compound_adapters_on_nim() {
    let dg = Disjunctive::new(vec![NimPile, NimPile]);
    assert_eq!(Solver::new(&dg).sg(&vec![3, 5]).unwrap(), SgValue(6));
    let cg = Conjunctive::new(vec![NimPile, NimPile]);
    assert_eq!(Solver::new(&cg).remoteness(&vec![3, 5]).unwrap(), Remoteness(1));
    let single = Conjunctive::new(vec![NimPile]);
    assert_eq!(single.successors(&vec![3]), vec![vec![0], vec![1], vec![2]]);
    assert!(conjunctive_remoteness(Vec::<Remoteness>::new()).is_err());
    assert_eq!(disjunctive_sg(Vec::<SgValue>::new()), SgValue(0));
    assert_eq!(conjunctive_remoteness([Remoteness(4), Remoteness(6), Remoteness(5)]).unwrap(), Remoteness(4));
}

#[test]
fn long_chain_does_not_overflow_the_stack() {
    let n = 200_000;
    let adj: Vec<Vec<usize>> = (0..n).map(|v| if v + 1 < n { vec![v + 1] } else { vec![] }).collect();
    let g = graph(adj);
    assert_eq!(Solver::new(&g).remoteness(&0).unwrap().0, (n - 1) as u64);
}

#[test]
fn capacity_limit() {
    let mut s = Solver::new(&NimPile).with_max_nodes(10);
    assert!(matches!(s.remoteness(&100), Err(Error::Capacity { .. })));
    assert_eq!(s.remoteness(&5).unwrap(), Remoteness(1));
}
