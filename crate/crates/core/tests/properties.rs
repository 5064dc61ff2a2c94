//! Property tests for the structural invariants the library promises.

use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use sombor_core::construct::{bouquet, chain, circuit, link, RootedUnit};
use sombor_core::edgelist::{format_edge_list, parse_edge_list};
use sombor_core::graph::{disjoint_union, Graph};
use sombor_core::index::{deletion_bound, monomer_sum_bound, sombor_index, Verdict};
use sombor_core::radical::{cmp_numeric, default_margin, NumericOrdering, RadicalSum};
use sombor_core::verify::default_unit_pool;

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// Arbitrary simple graph on 1..=max_n vertices.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, keep)| **keep)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).expect("pairs are distinct and loop-free")
        })
    })
}

/// Arbitrary radical sum with small rational coefficients.
fn arb_radical() -> impl Strategy<Value = RadicalSum> {
    proptest::collection::vec((1u64..=60, -20i64..=20, 1i64..=9), 0..6).prop_map(|parts| {
        let mut sum = RadicalSum::zero();
        for (n, p, q) in parts {
            sum += &RadicalSum::multiple_of_sqrt(ratio(p, q), n).expect("n >= 1");
        }
        sum
    })
}

/// Rooted units drawn from the campaign's monomer pool.
fn arb_units(needs_out: bool, min: usize, max: usize) -> impl Strategy<Value = Vec<RootedUnit>> {
    let pool = default_unit_pool();
    proptest::collection::vec((0..pool.len(), any::<usize>(), any::<usize>()), min..=max)
        .prop_map(move |draws| {
            draws
                .into_iter()
                .map(|(i, xr, yr)| {
                    let graph = pool[i].1.clone();
                    let v = graph.vertex_count();
                    let x = xr % v;
                    let y = if needs_out {
                        let mut y = yr % (v - 1);
                        if y >= x {
                            y += 1;
                        }
                        Some(y)
                    } else {
                        None
                    };
                    RootedUnit::new(graph, x, y).expect("pool units are connected")
                })
                .collect()
        })
}

fn relabeled(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.vertex_count(), &edges).expect("a permutation preserves simplicity")
}

proptest! {
    #[test]
    fn handshake_and_census_totals(g in arb_graph(10)) {
        let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        prop_assert_eq!(g.edge_census().total(), g.edge_count() as u64);
    }

    #[test]
    fn index_and_census_are_label_invariant(g in arb_graph(9), seed in any::<u64>()) {
        // A cheap deterministic permutation from the seed.
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let h = relabeled(&g, &perm);
        prop_assert_eq!(sombor_index(&g), sombor_index(&h));
        prop_assert_eq!(g.edge_census(), h.edge_census());
    }

    #[test]
    fn disjoint_union_is_additive(g in arb_graph(8), h in arb_graph(8)) {
        let (u, maps) = disjoint_union(&[g.clone(), h.clone()]);
        prop_assert_eq!(u.vertex_count(), g.vertex_count() + h.vertex_count());
        prop_assert_eq!(u.edge_count(), g.edge_count() + h.edge_count());
        prop_assert_eq!(sombor_index(&u), sombor_index(&g) + sombor_index(&h));
        let mut census = g.edge_census();
        let h_census = h.edge_census();
        for ((a, b), count) in h_census.pairs() {
            census.add_count(a, b, count);
        }
        prop_assert_eq!(u.edge_census(), census);
        prop_assert_eq!(maps.len(), 2);
        prop_assert_eq!(maps[1].apply(0), g.vertex_count());
    }

    #[test]
    fn identifying_across_components_adds_degrees(
        g in arb_graph(7),
        h in arb_graph(7),
        pick in any::<(usize, usize)>(),
    ) {
        let (u, maps) = disjoint_union(&[g.clone(), h.clone()]);
        let a = maps[0].apply(pick.0 % g.vertex_count());
        let b = maps[1].apply(pick.1 % h.vertex_count());
        let da = u.degree(a);
        let db = u.degree(b);
        let (merged, delta) = u.identify(a, b).expect("separate components never conflict");
        prop_assert_eq!(merged.vertex_count(), u.vertex_count() - 1);
        prop_assert_eq!(merged.edge_count(), u.edge_count());
        prop_assert_eq!(merged.degree(delta.apply(a)), da + db);
        prop_assert_eq!(delta.apply(a), delta.apply(b));
    }

    #[test]
    fn edge_list_round_trips(g in arb_graph(12)) {
        let text = format_edge_list(&g);
        let parsed = parse_edge_list(&text).expect("formatter output is valid");
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn deletion_bound_is_a_theorem(g in arb_graph(9), pick in any::<usize>()) {
        prop_assume!(g.edge_count() > 0);
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let (u, v) = edges[pick % edges.len()];
        let check = deletion_bound(&g, u, v).expect("edge exists");
        prop_assert_eq!(check.verdict, Verdict::Holds);
    }

    #[test]
    fn radical_sums_form_a_commutative_group(
        a in arb_radical(),
        b in arb_radical(),
        c in arb_radical(),
    ) {
        prop_assert_eq!(&(&(&a + &b) + &c), &(&a + &(&b + &c)));
        prop_assert_eq!(&(&a + &b), &(&b + &a));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&(&a + &RadicalSum::zero()), &a);
        // Float evaluation respects addition up to roundoff.
        let lhs = (&a + &b).eval_f64();
        let rhs = a.eval_f64() + b.eval_f64();
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs().max(rhs.abs())));
    }

    #[test]
    fn scaling_distributes(a in arb_radical(), b in arb_radical(), p in -9i64..=9, q in 1i64..=9) {
        let f = ratio(p, q);
        prop_assert_eq!((&a + &b).scale(&f), a.scale(&f) + b.scale(&f));
        if f.is_zero() {
            prop_assert!(a.scale(&f).is_zero());
        }
    }

    #[test]
    fn square_factors_canonicalize(k in 1u64..=12, n in 1u64..=80) {
        prop_assert_eq!(
            RadicalSum::sqrt_of(k * k * n).unwrap(),
            RadicalSum::sqrt_of(n).unwrap().scale_int(k as i64)
        );
    }

    #[test]
    fn exact_comparison_matches_equality(a in arb_radical(), b in arb_radical()) {
        let ord = cmp_numeric(&a, &b, default_margin(&a, &b));
        if a == b {
            prop_assert_eq!(ord, NumericOrdering::Equal);
        } else {
            prop_assert_ne!(ord, NumericOrdering::Equal);
        }
    }

    #[test]
    fn link_postconditions(units in arb_units(true, 2, 5)) {
        let total_v: usize = units.iter().map(|u| u.graph().vertex_count()).sum();
        let total_e: usize = units.iter().map(|u| u.graph().edge_count()).sum();
        let asm = link(&units).unwrap();
        prop_assert_eq!(asm.graph.vertex_count(), total_v);
        prop_assert_eq!(asm.graph.edge_count(), total_e + units.len() - 1);
        prop_assert!(asm.graph.is_connected());
        let monomers: Vec<Graph> = units.iter().map(|u| u.graph().clone()).collect();
        prop_assert_eq!(monomer_sum_bound(&asm.graph, &monomers).verdict, Verdict::Holds);
    }

    #[test]
    fn chain_postconditions(units in arb_units(true, 2, 5)) {
        let total_v: usize = units.iter().map(|u| u.graph().vertex_count()).sum();
        let total_e: usize = units.iter().map(|u| u.graph().edge_count()).sum();
        let asm = chain(&units).unwrap();
        prop_assert_eq!(asm.graph.vertex_count(), total_v - (units.len() - 1));
        prop_assert_eq!(asm.graph.edge_count(), total_e);
        prop_assert!(asm.graph.is_connected());
        prop_assert_eq!(asm.contact_ids.len(), units.len() + 1);
    }

    #[test]
    fn circuit_postconditions(units in arb_units(false, 3, 6)) {
        let total_v: usize = units.iter().map(|u| u.graph().vertex_count()).sum();
        let total_e: usize = units.iter().map(|u| u.graph().edge_count()).sum();
        let asm = circuit(&units).unwrap();
        prop_assert_eq!(asm.graph.vertex_count(), total_v);
        prop_assert_eq!(asm.graph.edge_count(), total_e + units.len());
        prop_assert!(asm.graph.is_connected());
    }

    #[test]
    fn bouquet_postconditions(units in arb_units(false, 2, 5)) {
        let total_v: usize = units.iter().map(|u| u.graph().vertex_count()).sum();
        let total_e: usize = units.iter().map(|u| u.graph().edge_count()).sum();
        let asm = bouquet(&units).unwrap();
        prop_assert_eq!(asm.graph.vertex_count(), total_v - (units.len() - 1));
        prop_assert_eq!(asm.graph.edge_count(), total_e);
        prop_assert!(asm.graph.is_connected());
        let hub = asm.contact_ids[0];
        let local_sum: usize = units.iter().map(|u| u.graph().degree(u.x())).sum();
        prop_assert_eq!(asm.graph.degree(hub), local_sum);
    }
}
