//! Runs each fuzz target body over its checked-in corpus.

use std::fs;
use std::path::Path;

use quandlekit::format::fuzz;

fn each_seed(target: &str, run: fn(&str)) -> usize {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut seen = 0;
    for entry in fs::read_dir(&dir).unwrap() {
        let text = fs::read_to_string(entry.unwrap().path()).unwrap();
        run(&text);
        seen += 1;
    }
    seen
}

#[test]
fn corpora_run_clean() {
    assert!(each_seed("parse_bundle", fuzz::bundle) > 0);
    assert!(each_seed("parse_rmaps", fuzz::rmaps) > 0);
    assert!(each_seed("parse_mesh", fuzz::mesh) > 0);
}
