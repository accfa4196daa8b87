use ledlab::family::{self, antichain, chain, m_poset, n_poset, random_poset, random_two_dimensional, substitute_module};
use ledlab::linext::{
    brute_force_led, conjecture1, diametral_les, diametral_pairs, distance, enumerate, is_diametrally_reversing,
    is_reversing, le_graph, max_reversals_between, max_reversals_constrained, weighted_distance, IncPairIndex,
    LinearExtension, DEFAULT_CAP,
};
use ledlab::{Poset, WeightedPoset64};
use proptest::prelude::*;

fn led(p: &Poset) -> u64 {
    brute_force_led(&WeightedPoset64::unit(p.clone()), DEFAULT_CAP).unwrap().value
}

fn labels_to_masks(p: &Poset, labels: &[&str]) -> Vec<usize> {
    labels.iter().map(|l| p.index_of(l).unwrap()).collect()
}

#[test]
fn antichain_diameters() {
    for n in 1..=6 {
        assert_eq!(led(&antichain(n)), (n * (n - 1) / 2) as u64);
    }
}

#[test]
fn chains_have_one_extension_and_diameter_zero() {
    for k in 1..=6 {
        let p = chain(k);
        assert_eq!(enumerate(&p, DEFAULT_CAP).unwrap().len(), 1);
        assert_eq!(led(&p), 0);
        let g = le_graph(&p, DEFAULT_CAP).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }
}

#[test]
fn n_poset_values() {
    let p = n_poset();
    assert_eq!(led(&p), 3);
    let g = le_graph(&p, DEFAULT_CAP).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count(), g.diameter()), (5, 5, 3));
}

#[test]
fn m_poset_graph_and_reversal() {
    let m = m_poset();
    let g = le_graph(&m, DEFAULT_CAP).unwrap();
    assert_eq!(g.vertex_count(), 16);
    assert!(is_diametrally_reversing(&m, DEFAULT_CAP).unwrap());
    assert!(conjecture1(&m, DEFAULT_CAP).unwrap().holds);
}

#[test]
fn red_core_is_two_dimensional_with_diameter_thirty() {
    let red = family::red_core();
    assert_eq!(red.inc_count(), 30);
    let d = brute_force_led(&WeightedPoset64::unit(red.clone()), DEFAULT_CAP).unwrap();
    assert_eq!(d.value, 30);
    let (a, b) = &d.witness;
    assert_eq!(distance(&red, a, b).unwrap(), 30);
}

#[test]
fn boolean_three_reversing_extension() {
    let b3 = family::boolean_lattice(3).unwrap();
    let l = LinearExtension::parse(&b3, "∅ 2 3 23 1 12 13 123").unwrap();
    assert!(is_reversing(&b3, &l).unwrap());
    let plain = LinearExtension::parse(&b3, "∅ 1 2 3 12 13 23 123").unwrap();
    assert!(!is_reversing(&b3, &plain).unwrap());
}

#[test]
fn exhibited_boolean_four_pair_has_weighted_distance_190() {
    let wp = family::b4_star_weighted(3).unwrap();
    let p = wp.poset();
    let l1 = LinearExtension::parse(p, "∅ 1 2 12 3 13 23 123 4 14 24 124 34 134 234 1234").unwrap();
    let l2 = LinearExtension::parse(p, "∅ 4 3 34 2 24 1 14 23 234 13 134 12 124 123 1234").unwrap();
    let w = 3u64;
    assert_eq!(weighted_distance(&wp, &l1, &l2).unwrap(), 15 * w * w + 14 * w + 13);
    assert_eq!(weighted_distance(&wp, &l1, &l2).unwrap(), 190);
}

#[test]
fn constrained_double_reversals() {
    let doubles = ["12", "13", "14", "23", "24", "34"];
    let b4 = family::boolean_lattice(4).unwrap();
    let d = labels_to_masks(&b4, &doubles);
    let p = b4.induced(&d);
    let idx = |l: &str| p.index_of(l).unwrap();
    let forced1: Vec<(usize, usize)> = ["23", "24", "34"]
        .iter()
        .flat_map(|&lo| ["12", "13", "14"].map(|hi| (idx(lo), idx(hi))))
        .collect();
    let mut best = 0;
    for j in 1..=4u32 {
        let digit = char::from_digit(j, 10).unwrap();
        let (with, without): (Vec<&str>, Vec<&str>) = doubles.iter().partition(|s| s.contains(digit));
        let forced2: Vec<(usize, usize)> = without.iter().flat_map(|&lo| with.iter().map(move |&hi| (idx(lo), idx(hi)))).collect();
        let m = max_reversals_between(&p, &forced1, &forced2, DEFAULT_CAP).unwrap();
        best = best.max(m);
    }
    assert_eq!(best, 14);
    assert_eq!(max_reversals_constrained(&p, &forced1, DEFAULT_CAP).unwrap(), 15);
}

#[test]
fn constrained_red_core() {
    let red = family::red_core();
    let idx = |l: &str| red.index_of(l).unwrap();
    let forced: Vec<(usize, usize)> = ["12", "34", "1235", "1345"]
        .iter()
        .flat_map(|&lo| ["56", "1246", "2346", "1356", "2456"].map(|hi| (idx(lo), idx(hi))))
        .collect();
    assert_eq!(max_reversals_constrained(&red, &forced, DEFAULT_CAP).unwrap(), 28);
}

#[test]
fn antichain_three_diametral_sets() {
    let p = antichain(3);
    assert_eq!(diametral_les(&p, DEFAULT_CAP).unwrap().len(), 6);
    let pairs = diametral_pairs(&p, DEFAULT_CAP).unwrap();
    for (a, b) in &pairs {
        let rev: Vec<usize> = a.order().iter().rev().copied().collect();
        assert_eq!(b.order(), rev.as_slice());
    }
}

fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n, 0.0f64..0.6, any::<u64>()).prop_map(|(n, prob, seed)| random_poset(n, prob, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn metric_axioms(p in arb_poset(7)) {
        let les = enumerate(&p, DEFAULT_CAP).unwrap();
        let les: Vec<_> = les.into_iter().take(40).collect();
        let idx = IncPairIndex::new(&p);
        for a in &les {
            for b in &les {
                let d = distance(&p, a, b).unwrap();
                prop_assert_eq!(d, distance(&p, b, a).unwrap());
                prop_assert_eq!(d == 0, a == b);
                prop_assert_eq!(d, idx.orientation(a).hamming(&idx.orientation(b)));
                for c in les.iter().step_by(5) {
                    prop_assert!(d <= distance(&p, a, c).unwrap() + distance(&p, c, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn graph_distance_equals_reversal_distance(p in arb_poset(7)) {
        let g = le_graph(&p, 2000);
        prop_assume!(g.is_ok());
        let g = g.unwrap();
        for v in 0..g.vertex_count() {
            let dist = g.distances_from(v);
            for u in 0..g.vertex_count() {
                prop_assert_eq!(dist[u] as u64, distance(&p, &g.vertices[v], &g.vertices[u]).unwrap());
            }
        }
        prop_assert_eq!(g.diameter() as u64, led(&p));
    }

    #[test]
    fn diameter_bounded_by_incomparable_pairs(p in arb_poset(8)) {
        prop_assert!(led(&p) <= p.inc_count() as u64);
    }

    #[test]
    fn two_dimensional_posets_reach_inc(n in 1usize..=8, seed in any::<u64>()) {
        let p = random_two_dimensional(n, seed);
        prop_assert_eq!(led(&p), p.inc_count() as u64);
    }

    #[test]
    fn reversing_diametral_poset_satisfies_conjecture(p in arb_poset(7)) {
        if is_diametrally_reversing(&p, DEFAULT_CAP).unwrap() {
            prop_assert!(conjecture1(&p, DEFAULT_CAP).unwrap().holds);
        }
    }

    #[test]
    fn diametral_pairs_are_diametral(p in arb_poset(6)) {
        let value = led(&p);
        let pairs = diametral_pairs(&p, DEFAULT_CAP).unwrap();
        prop_assert!(!pairs.is_empty());
        let les = diametral_les(&p, DEFAULT_CAP).unwrap();
        for (a, b) in &pairs {
            prop_assert_eq!(distance(&p, a, b).unwrap(), value);
            prop_assert!(les.contains(a) && les.contains(b));
        }
    }

    #[test]
    fn reversing_module_makes_poset_reversing(
        outer_n in 1usize..=4,
        inner_n in 2usize..=4,
        seed in any::<u64>(),
    ) {
        let outer = random_poset(outer_n, 0.4, seed);
        let inner = random_poset(inner_n, 0.3, seed ^ 7);
        let (p, module) = substitute_module(&outer, seed as usize % outer_n, &inner).unwrap();
        if is_diametrally_reversing(&p.induced(&module), DEFAULT_CAP).unwrap() {
            prop_assert!(is_diametrally_reversing(&p, DEFAULT_CAP).unwrap());
        }
    }
}
