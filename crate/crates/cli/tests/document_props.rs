use ledlab::family::random_poset;
use ledlab::WeightedPoset64;
use ledlab_cli::document::PosetDocument;
use proptest::prelude::*;

proptest! {
    #[test]
    fn emit_parse_round_trip(
        n in 0usize..12,
        prob in 0.0f64..0.8,
        seed in any::<u64>(),
        weights in proptest::collection::vec(1u64..1000, 12),
        weighted in any::<bool>(),
        note in proptest::option::of("[a-z0-9=. ]{0,20}"),
    ) {
        let p = random_poset(n, prob, seed);
        let doc = if weighted && n > 0 {
            PosetDocument::from_weighted(&WeightedPoset64::new(p.clone(), weights[..n].to_vec()).unwrap(), note)
        } else {
            PosetDocument::from_poset(&p, note)
        };
        let text = doc.emit();
        let back = PosetDocument::parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.emit(), text);
        let q = back.to_poset().unwrap();
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(p.lt(x, y), q.lt(x, y));
            }
        }
    }
}
