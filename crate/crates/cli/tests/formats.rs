use dircat::exactlin::FieldSpec;
use dircat::presentation::{LinearOrder, PathWord, Presentation, Quiver};
use dircat_cli::bundled::EXAMPLES;
use dircat_cli::quiver_format::{parse_presentation, serialize_presentation};
use proptest::prelude::*;

/// A random presentation: arrows between up to four vertices, relations built from
/// composable words of length two or three sharing endpoints.
fn presentation() -> impl Strategy<Value = Presentation> {
    (
        1usize..=4,
        prop::collection::vec((0usize..4, 0usize..4), 0..6),
        prop::collection::vec((prop::collection::vec(0usize..6, 2..=3), -3i64..=3, any::<bool>()), 0..4),
        prop::sample::select(vec![FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(7)]),
        any::<Option<prop::sample::Index>>(),
    )
        .prop_map(|(n, arrows, rels, field, order)| {
            let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let arrows: Vec<(String, String, String)> = arrows
                .iter()
                .enumerate()
                .map(|(k, &(s, t))| (format!("a{k}"), names[s % n].clone(), names[t % n].clone()))
                .collect();
            let q = Quiver::new(&names, &arrows).unwrap();
            let mut relations = Vec::new();
            for (word, c, pair) in rels {
                if q.arrows().is_empty() {
                    break;
                }
                let word: Vec<usize> = word.iter().map(|i| i % q.arrows().len()).collect();
                let Some(w) = PathWord::new(&q, word) else { continue };
                let mut terms = vec![(if c == 0 { 1 } else { c }, w.clone())];
                if pair {
                    terms.push((-1, w));
                }
                relations.push(terms);
            }
            let order = order.map(|i| {
                let all = LinearOrder::all(n);
                all[i.index(all.len())].clone()
            });
            Presentation::new(field, q, relations, order).unwrap()
        })
}

proptest! {
    #[test]
    fn presentations_round_trip(p in presentation()) {
        let text = serialize_presentation(&p);
        let back = parse_presentation(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(serialize_presentation(&back), text);
    }
}

#[test]
fn bundled_files_are_canonical() {
    for (name, text) in EXAMPLES {
        let p = parse_presentation(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(&serialize_presentation(&p), text, "{name}");
    }
}

#[test]
fn whitespace_and_comments_do_not_matter() {
    let loose = "# loop at x\n  field   Q\nvertex x\n\nvertex y\narrow  d :x->x\narrow a: x -> y   # to y\nrel   a*d\nrel d*d\n";
    let p = parse_presentation(loose).unwrap();
    let tight = parse_presentation(dircat_cli::bundled::example("e3_2").unwrap()).unwrap();
    assert_eq!(p.quiver(), tight.quiver());
    assert_eq!(p.relations(), tight.relations());
}
