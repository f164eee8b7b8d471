use proptest::prelude::*;
use twistcox::{DefiningGraph, Gen, Label};
use twistcox_cli::format::{parse_catalog, parse_instance, serialize_instance};

fn graph() -> impl Strategy<Value = DefiningGraph> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(prop::option::of(2u32..=8), n * (n - 1) / 2).prop_map(move |labels| {
            let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
            let mut g = DefiningGraph::new(&names).unwrap();
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            for ((i, j), m) in pairs.zip(labels) {
                if let Some(m) = m {
                    g.set_label(Gen(i as u8), Gen(j as u8), Label::Finite(m))
                        .unwrap();
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn instances_round_trip(g in graph()) {
        let text = serialize_instance(&g);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(serialize_instance(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn catalogs_round_trip(gs in prop::collection::vec(graph(), 0..5)) {
        let text: String = gs.iter().map(serialize_instance).collect::<Vec<_>>().join("\n# next\n");
        prop_assert_eq!(parse_catalog(&text).unwrap(), gs);
    }
}
