use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

use mrf_toric::fiberwalk::{enumerate_fiber, margins, mcmc_walk, WalkOptions};
use mrf_toric::graphs::{glue, GlueSpec, StateGraph};
use mrf_toric::ideal::{buchberger, markov_basis, Binomial, MarkovOptions, Monomial, MonomialOrder};
use mrf_toric::model::model_matrix;
use mrf_toric::scalar::hadamard;
use mrf_toric::tfp::{binomials_hadamard_stable, ideal_equal_grouped, tfp_ideal, GroupedIdeal};
use mrf_toric::{Budget, Rational};

fn graph_strategy(max_nodes: usize) -> impl Strategy<Value = StateGraph> {
    (1..=max_nodes).prop_flat_map(|n| {
        (
            prop::collection::vec(1u32..=3, n),
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
        )
            .prop_map(move |(states, bits)| {
                let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
                let nodes: Vec<(&str, u32)> = labels.iter().map(String::as_str).zip(states).collect();
                let mut edges = Vec::new();
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if bits[k] {
                            edges.push((labels[i].as_str(), labels[j].as_str()));
                        }
                        k += 1;
                    }
                }
                StateGraph::new(&nodes, &edges).unwrap()
            })
    })
}

fn brute_force_cliques(g: &StateGraph) -> Vec<Vec<usize>> {
    let n = g.len();
    let is_clique = |mask: u32| {
        (0..n).all(|i| (0..n).all(|j| i == j || mask & (1 << i) == 0 || mask & (1 << j) == 0 || g.has_edge(i, j)))
    };
    let cliques: Vec<u32> = (1..1u32 << n).filter(|&m| is_clique(m)).collect();
    let mut maximal: Vec<Vec<usize>> = cliques
        .iter()
        .filter(|&&m| !cliques.iter().any(|&o| o != m && o & m == m))
        .map(|&m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect();
    maximal.sort();
    maximal
}

proptest! {
    #[test]
    fn cliques_match_brute_force(g in graph_strategy(7)) {
        prop_assert_eq!(g.maximal_cliques(), brute_force_cliques(&g));
    }

    #[test]
    fn glued_node_count(g in graph_strategy(5), shared_bits in prop::collection::vec(any::<bool>(), 5), copies in prop::collection::vec(0usize..3, 1..3)) {
        let shared: Vec<String> = g.nodes().iter().zip(&shared_bits).filter(|(_, &b)| b).map(|(n, _)| n.clone()).collect();
        prop_assume!(copies.iter().any(|&a| a > 0));
        let spec = GlueSpec::new(shared.clone(), copies.iter().map(|&a| (g.clone(), a)).collect());
        let glued = glue(&spec).unwrap();
        let free = g.len() - shared.len();
        prop_assert_eq!(glued.len(), shared.len() + copies.iter().sum::<usize>() * free);
        // shared nodes keep their induced subgraph
        let h = glued.induced_subgraph(&shared).unwrap();
        prop_assert_eq!(h.edge_labels(), g.induced_subgraph(&shared).unwrap().edge_labels());
    }

    #[test]
    fn model_columns_have_one_entry_per_clique(g in graph_strategy(4)) {
        let m = model_matrix(&g).unwrap();
        for c in 0..m.ncols() {
            prop_assert_eq!(m.entries.iter().map(|r| r[c]).sum::<u32>() as usize, m.cliques.len());
        }
    }

    #[test]
    fn orders_are_multiplicative(a in prop::collection::vec(0u32..4, 5), b in prop::collection::vec(0u32..4, 5), c in prop::collection::vec(0u32..4, 5), block in 0usize..=5) {
        let orders = [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::elimination(block)];
        let ac: Vec<u32> = a.iter().zip(&c).map(|(x, y)| x + y).collect();
        let bc: Vec<u32> = b.iter().zip(&c).map(|(x, y)| x + y).collect();
        for o in &orders {
            prop_assert_eq!(o.cmp_exps(&a, &b), o.cmp_exps(&ac, &bc));
            prop_assert_eq!(o.cmp_exps(&a, &b), o.cmp_exps(&b, &a).reverse());
            prop_assert!(o.cmp_exps(&ac, &a).is_ge());
        }
    }

    #[test]
    fn groebner_basis_contains_generators(raw in prop::collection::vec((prop::collection::vec(0u32..3, 4), prop::collection::vec(0u32..3, 4)), 1..4)) {
        let gens: Vec<Binomial> = raw.into_iter().map(|(p, q)| Binomial::new(Monomial::new(p), Monomial::new(q))).collect();
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let gb = buchberger(4, &gens, &order, &Budget::unlimited()).unwrap();
            for g in &gens {
                prop_assert!(gb.contains(g));
            }
            for (i, e) in gb.elements().iter().enumerate() {
                for (j, f) in gb.elements().iter().enumerate() {
                    if i != j {
                        // reduced: no leading term divides another term
                        prop_assert!(!f.lead().divides(e.lead()));
                        prop_assert!(!f.lead().divides(e.trail()));
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The parameterized set is closed under Hadamard products and its
    /// Markov basis vanishes on it.
    #[test]
    fn parameterization_is_hadamard_closed(g in graph_strategy(3), seeds in prop::collection::vec((1i64..6, 1i64..6), 40)) {
        let m = model_matrix(&g).unwrap();
        prop_assume!(m.ncols() <= 12);
        let q = |k: usize| Rational::new(BigInt::from(seeds[k % 40].0), BigInt::from(seeds[k % 40].1));
        let t1: Vec<Rational> = (0..m.nrows()).map(q).collect();
        let t2: Vec<Rational> = (0..m.nrows()).map(|r| q(r + 17)).collect();
        let (p1, p2) = (m.evaluate(&t1), m.evaluate(&t2));
        prop_assert_eq!(hadamard(&p1, &p2), m.evaluate(&hadamard(&t1, &t2)));
        prop_assert!(m.evaluate(&vec![Rational::one(); m.nrows()]).iter().all(One::is_one));
        let mb = markov_basis(&m.entries, m.ncols(), &MarkovOptions::default(), &Budget::unlimited()).unwrap();
        prop_assert!(binomials_hadamard_stable(&mb.gens).stable);
        for b in &mb.gens {
            let (lhs, rhs) = b.evaluate(&p1);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn walks_conserve_margins(seed in any::<u64>(), start in prop::collection::vec(0i64..3, 4)) {
        let a = vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1], vec![1, 0, 1, 0], vec![0, 1, 0, 1]];
        let moves = [Binomial::from_move(&[1, -1, -1, 1])];
        let walk = mcmc_walk(&a, &start, &moves, &WalkOptions { steps: 200, seed, thin: 1 }).unwrap();
        let b = margins(&a, &start);
        let fiber: BTreeSet<Vec<i64>> = enumerate_fiber(&a, &b, 10_000).unwrap().into_iter().collect();
        for w in walk.windows(2) {
            prop_assert_eq!(margins(&a, &w[1]), b.clone());
            prop_assert!(fiber.contains(&w[1]));
            // symmetric proposal: the reverse step is one of the moves with the other sign
            let d: Vec<i64> = w[1].iter().zip(&w[0]).map(|(x, y)| x - y).collect();
            let v = moves[0].exponent_difference();
            let neg: Vec<i64> = v.iter().map(|x| -x).collect();
            prop_assert!(d.iter().all(|&x| x == 0) || d == v || d == neg);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn tfp_is_symmetric(dx in prop::collection::vec(1usize..=3, 1..=2), dy_seed in prop::collection::vec(1usize..=3, 2), segre in any::<bool>()) {
        let dy: Vec<usize> = dy_seed[..dx.len()].to_vec();
        let x = GroupedIdeal::full_space(dx.clone());
        let y = if segre {
            // y itself a product, so the factors are unequal in general
            tfp_ideal(&GroupedIdeal::full_space(dy.clone()), &GroupedIdeal::full_space(dy.clone()), &Budget::unlimited()).unwrap().ideal
        } else {
            GroupedIdeal::full_space(dy.clone())
        };
        let budget = Budget::unlimited();
        let xy = tfp_ideal(&x, &y, &budget).unwrap().ideal;
        let yx = tfp_ideal(&y, &x, &budget).unwrap().ideal;
        let nf = xy.factor_count();
        // [x, y...] -> [y..., x]
        let order: Vec<usize> = (1..nf).chain(std::iter::once(0)).collect();
        prop_assert!(ideal_equal_grouped(&xy.reorder_factors(&order).unwrap(), &yx, &budget).unwrap());
    }
}
