use poscodeg_core::embed::is_free;
use poscodeg_core::exec::Sequential;
use poscodeg_core::search::{copex_exact, ff_classification_check, SearchConfig};
use poscodeg_core::verify::{lower_bound_construction, reference_bounds};
use poscodeg_core::{canon, catalog, constructions};

#[test]
fn witnesses_are_free_and_extremal() {
    for g in catalog::all() {
        let mut previous: Option<usize> = None;
        for n in 3..=6 {
            let r = copex_exact(g.name, &g.graph, n, &SearchConfig::default(), &Sequential).unwrap();
            assert!(r.exhaustive);
            assert!(!r.witnesses.is_empty());
            for w in &r.witnesses {
                let h = w.graph();
                assert!(is_free(&g.graph, &h).unwrap(), "{} n={n}", g.name);
                assert_eq!(h.min_positive_codegree().unwrap(), r.exact_value);
            }
            let (lo, hi) = reference_bounds(g.name, n).unwrap();
            assert!(lo <= r.exact_value && r.exact_value <= hi, "{} n={n}: {} not in [{lo},{hi}]", g.name, r.exact_value);
            if let Some((_, c)) = lower_bound_construction(g.name, n).unwrap() {
                if c.has_edges() && is_free(&g.graph, &c).unwrap() {
                    assert!(r.exact_value >= c.min_positive_codegree().unwrap());
                }
            }
            if let Some(p) = previous {
                assert!(p <= r.exact_value && r.exact_value <= p + 1, "{} n={n}", g.name);
            }
            previous = Some(r.exact_value);
        }
    }
}

#[test]
fn classification_at_six() {
    let r = ff_classification_check(6, &Sequential).unwrap();
    assert_eq!(r.unclassified(), 0);
    let h6 = canon::canonical_form(&catalog::get("H6").unwrap().graph).unwrap();
    let k222 = canon::canonical_form(&catalog::get("K222").unwrap().graph).unwrap();
    let found = |f| r.classes.iter().find(|c| c.form == f).cloned();
    assert!(found(h6).unwrap().h6_blow_up);
    let k = found(k222).unwrap();
    assert!(k.circle);
    // three tight clusters of two points, 120° apart
    let angles: Vec<_> = [0.0, 1.0, 120.0, 121.0, 240.0, 241.0]
        .into_iter()
        .map(constructions::Angle::from_degrees)
        .collect();
    let hexagon = constructions::circle_construction(&angles).unwrap();
    assert_eq!(canon::canonical_form(&hexagon).unwrap(), k222);
}

#[test]
fn classification_small_orders() {
    for n in 0..=5 {
        let r = ff_classification_check(n, &Sequential).unwrap();
        assert_eq!(r.unclassified(), 0, "n={n}");
    }
}
