use ledlab::family::{self, random_chain_cover};
use ledlab::linext::{brute_force_led, DEFAULT_CAP};
use ledlab::width3::{dp_led_width3, enumerate_downsets, solve_width3, DownsetTriple};
use ledlab::{Error, Poset, WeightedPoset64};
use proptest::prelude::*;

fn brute(p: &Poset) -> u64 {
    brute_force_led(&WeightedPoset64::unit(p.clone()), DEFAULT_CAP).unwrap().value
}

#[test]
fn named_posets() {
    assert_eq!(dp_led_width3(&family::n_poset()).unwrap(), 3);
    assert_eq!(dp_led_width3(&family::antichain(3)).unwrap(), 3);
    assert_eq!(dp_led_width3(&family::chain(7)).unwrap(), 0);
    assert_eq!(dp_led_width3(&family::m_poset()).unwrap(), brute(&family::m_poset()));
}

#[test]
fn wide_posets_are_refused() {
    assert!(matches!(dp_led_width3(&family::antichain(4)), Err(Error::WidthExceeded { width: 4, max: 3 })));
}

#[test]
fn downsets_of_an_antichain_of_three() {
    let p = family::antichain(3);
    assert_eq!(enumerate_downsets(&p, &p.decompose()).unwrap().len(), 8);
}

#[test]
fn larger_instance_against_lattice_count() {
    let p = random_chain_cover(30, 3, 0.08, 7).unwrap();
    let r = solve_width3(&p, false).unwrap();
    assert!(r.stats.populated_keys as u128 <= r.stats.key_bound);
    assert!(r.value <= p.inc_count() as u64);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dp_matches_brute_force(n in 1usize..=10, k in 1usize..=3, prob in 0.0f64..0.5, seed in any::<u64>()) {
        let p = random_chain_cover(n, k, prob, seed).unwrap();
        prop_assert!(p.width() <= 3);
        prop_assert_eq!(dp_led_width3(&p).unwrap(), brute(&p));
    }

    #[test]
    fn downset_values_are_monotone(n in 1usize..=9, prob in 0.0f64..0.5, seed in any::<u64>()) {
        let p = random_chain_cover(n, 3, prob, seed).unwrap();
        let r = solve_width3(&p, true).unwrap();
        let table = r.table.as_ref().unwrap();
        let ds: Vec<DownsetTriple> = table.downsets().copied().collect();
        prop_assert_eq!(ds.len(), enumerate_downsets(&p, &p.decompose()).unwrap().len());
        for d in &ds {
            let value = table.downset_max(d).unwrap();
            prop_assert_eq!(value, brute(&p.induced(&d.elements(&r.chains))));
            for c in 0..3 {
                let mut up = *d;
                up.counts[c] += 1;
                if let Some(v) = table.downset_max(&up) {
                    prop_assert!(value <= v);
                }
            }
        }
        prop_assert!(r.stats.populated_keys as u128 <= r.stats.key_bound);
        prop_assert_eq!(r.stats.downsets, ds.len());
    }
}
