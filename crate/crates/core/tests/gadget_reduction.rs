use ledlab::gadget::{
    balanced_independent_set, base_distance, base_distance_corrected, build_gadget, build_gadget_with_lengths, preprocess,
    two_disjoint_balanced_independent_sets, verify_reduction_micro, BipartiteGraph,
};
use ledlab::linext::{brute_force_led, exact_weighted_led, DEFAULT_CAP};
use ledlab::WeightedPoset64;
use num_bigint::BigInt;

#[test]
fn preprocessing_preserves_the_answer() {
    for a in 1..=3 {
        for b in 1..=3 {
            for g in BipartiteGraph::all_with_sides(a, b) {
                let gp = preprocess(&g);
                for k in 0..=a.min(b) + 1 {
                    assert_eq!(
                        balanced_independent_set(&g, k).unwrap(),
                        two_disjoint_balanced_independent_sets(&gp, k).unwrap(),
                        "{a}+{b} {:?} k={k}",
                        g.edges().collect::<Vec<_>>()
                    );
                }
            }
        }
    }
}

#[test]
fn green_chains_are_modules_after_expansion() {
    let inst = build_gadget_with_lengths(&BipartiteGraph::complete(2, 2), 1, 3, 2).unwrap();
    let s = inst.expanded().unwrap();
    for x in 0..inst.poset().len() {
        let block: Vec<usize> = (0..s.poset.len()).filter(|&y| s.provenance[y].0 == x).collect();
        let expect = if !inst.is_green(x) {
            1
        } else if x == inst.c() || x == inst.d() {
            2
        } else {
            3
        };
        assert_eq!(block.len(), expect);
        assert!(s.poset.is_module(&block));
        assert!(s.poset.is_chain() || block.len() == 1 || s.poset.induced(&block).is_chain());
    }
}

#[test]
fn weighted_gadget_matches_its_expansion() {
    let graphs = [
        BipartiteGraph::complete(2, 2),
        preprocess(&BipartiteGraph::new(1, 1, []).unwrap()),
        BipartiteGraph::new(2, 2, [(0, 0)]).unwrap(),
    ];
    for g in &graphs {
        let inst = build_gadget_with_lengths(g, 1, 2, 1).unwrap();
        let weighted = exact_weighted_led(&inst.weighted, u64::MAX).unwrap().value;
        let brute = brute_force_led(&inst.weighted, DEFAULT_CAP).unwrap().value;
        let expanded = inst.expanded().unwrap().poset;
        let unit = exact_weighted_led(&WeightedPoset64::unit(expanded), u64::MAX).unwrap().value;
        assert_eq!(weighted, brute);
        assert_eq!(weighted, unit);
    }
}

#[test]
fn threshold_matches_independent_set_with_corrected_base() {
    for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        for g in BipartiteGraph::all_with_sides(a, b) {
            let r = verify_reduction_micro(&g, 1, u64::MAX).unwrap();
            assert!(r.holds, "{a}+{b} {:?}: {r:?}", g.edges().collect::<Vec<_>>());
            assert_eq!(r.oracle, r.doubled_oracle);
            if !r.oracle {
                assert_eq!(r.led, Some(r.base_corrected as u128));
            }
        }
    }
}

#[test]
fn displayed_base_rejects_every_no_instance() {
    let mut no_instances = 0;
    for (a, b) in [(1, 1), (1, 2), (2, 2)] {
        for g in BipartiteGraph::all_with_sides(a, b) {
            let r = verify_reduction_micro(&g, 1, u64::MAX).unwrap();
            if !r.oracle {
                no_instances += 1;
                assert!(!r.holds_displayed);
            } else {
                assert!(r.holds_displayed);
            }
        }
    }
    assert!(no_instances > 0);
}

#[test]
fn corrected_base_is_the_complete_graph_diameter() {
    for (r, s, k) in [(2, 2, 1), (2, 4, 1), (4, 4, 1), (4, 4, 2)] {
        let inst = build_gadget(&BipartiteGraph::complete(r, s), k).unwrap();
        let led = exact_weighted_led(&inst.weighted, u64::MAX).unwrap().value;
        let n = (r + s) as u64;
        assert_eq!(led as i128, base_distance_corrected::<i128>(r as u64, s as u64, k as u64, n));
    }
}

#[test]
fn displayed_base_undercounts_by_eight_k_n4() {
    for (r, s, k) in [(2u64, 2u64, 1u64), (4, 4, 2), (6, 8, 3), (40, 60, 20)] {
        let n = r + s;
        let diff = base_distance_corrected::<i128>(r, s, k, n) - base_distance::<i128>(r, s, k, n);
        assert_eq!(diff, 8 * k as i128 * (n as i128).pow(4));
        let big: BigInt = base_distance_corrected::<BigInt>(r, s, k, n) - base_distance::<BigInt>(r, s, k, n);
        assert_eq!(big, BigInt::from(diff));
    }
    assert_eq!(base_distance::<i128>(2, 2, 1, 4), 525314);
    assert_eq!(base_distance_corrected::<i128>(2, 2, 1, 4), 527362);
}

#[test]
fn gadget_shape() {
    let g = preprocess(&BipartiteGraph::new(2, 2, [(0, 1)]).unwrap());
    let inst = build_gadget(&g, 2).unwrap();
    let p = inst.poset();
    assert_eq!(p.len(), 2 * (inst.r + inst.s) + 2);
    for i in 0..inst.r {
        let a = inst.black_a(i);
        assert!(p.incomparable(a, inst.c()));
        assert!(p.lt(inst.green_a(i), a));
        assert!(p.lt(a, inst.d()));
        for j in (0..inst.r).filter(|&j| j != i) {
            assert!(p.incomparable(a, inst.green_a(j)));
        }
    }
    for i in 0..inst.r {
        for j in 0..inst.s {
            assert_eq!(p.lt(inst.black_a(i), inst.black_b(j)), g.has_edge(i, j));
            assert!(!p.lt(inst.black_b(j), inst.black_a(i)));
            assert!(p.lt(inst.green_a(i), inst.green_b(j)));
        }
    }
    assert!(inst.weight_priority_holds());
}

#[test]
fn green_subposet_reaches_inc() {
    let inst = build_gadget(&BipartiteGraph::complete(4, 4), 2).unwrap();
    let green = inst.poset().induced(&inst.green_elements());
    let d = brute_force_led(&WeightedPoset64::unit(green.clone()), DEFAULT_CAP).unwrap();
    assert_eq!(d.value, green.inc_count() as u64);
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(build_gadget(&BipartiteGraph::complete(2, 2), 0).is_err());
    assert!(build_gadget(&BipartiteGraph::complete(2, 2), 2).is_err());
    assert!(build_gadget_with_lengths(&BipartiteGraph::complete(2, 2), 1, 0, 1).is_err());
}
