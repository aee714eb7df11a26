use poscodeg::io::{parse_graph, parse_hg, parse_json, read_graph, write_hg, write_json, FormatError};
use poscodeg_core::{catalog, constructions};

#[test]
fn catalog_round_trips_through_both_formats() {
    for g in catalog::all() {
        let h = g.graph;
        assert_eq!(parse_hg(&write_hg(&h)).unwrap(), h, "{}", g.name);
        assert_eq!(parse_json(&write_json(&h)).unwrap(), h, "{}", g.name);
        assert_eq!(parse_graph(&write_json(&h)).unwrap(), h);
        assert_eq!(parse_graph(&write_hg(&h)).unwrap(), h);
    }
}

#[test]
fn files_are_read_by_content() {
    let dir = tempfile::tempdir().unwrap();
    let h = constructions::balanced_complete_k_partite(9, 3).unwrap();
    let hg = dir.path().join("g.txt");
    let json = dir.path().join("g.data");
    std::fs::write(&hg, write_hg(&h)).unwrap();
    std::fs::write(&json, write_json(&h)).unwrap();
    assert_eq!(read_graph(&hg).unwrap(), h);
    assert_eq!(read_graph(&json).unwrap(), h);
    assert!(matches!(read_graph(&dir.path().join("missing")), Err(FormatError::Io { .. })));
}

#[test]
fn malformed_input_is_rejected() {
    for bad in ["", "3 1", "3 1 3\n0 1", "3 1 3\n0 1 3", "3 2 3\n0 1 2", "x y z", "4 1 3\n0 0 1"] {
        assert!(parse_hg(bad).is_err(), "{bad:?}");
    }
    assert!(parse_json(r#"{"n": 3, "r": 3, "edges": [[0, 1, 5]]}"#).is_err());
    assert!(parse_json("{").is_err());
}
