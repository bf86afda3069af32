//! Replays the checked-in fuzz corpus through the same checks as the fuzz
//! targets, so regressions surface under `cargo test`.

use std::fs;
use std::path::PathBuf;

use arthom::homology::DimValue;
use arthom::pathalg::parse_algebra_with_cap;
use arthom::repmod::resolve_module;

const PATH_CAP: usize = 10;

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, Vec<u8>)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "empty corpus for {target}");
    out
}

/// Returns whether the input parsed.
fn parse_algebra_body(data: &[u8]) -> bool {
    let Ok(text) = std::str::from_utf8(data) else { return false };
    let Ok(file) = parse_algebra_with_cap(text, PATH_CAP) else { return false };
    let again = parse_algebra_with_cap(&file.algebra.to_text(), PATH_CAP).expect("printed form reparses");
    assert!(again.algebra.same(&file.algebra));
    true
}

fn resolve_module_body(data: &[u8]) -> bool {
    let Ok(text) = std::str::from_utf8(data) else { return false };
    let (name, body) = text.split_once('\n').unwrap_or((text, ""));
    let Ok(file) = parse_algebra_with_cap(body, PATH_CAP) else { return false };
    match resolve_module(&file, name) {
        Ok(m) => {
            assert_eq!(m.dims().len(), file.algebra.num_vertices());
            true
        }
        Err(_) => false,
    }
}

fn dim_value_body(data: &[u8]) -> bool {
    let Ok(d) = serde_json::from_slice::<DimValue>(data) else { return false };
    let back: DimValue = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
    assert_eq!(back, d);
    true
}

fn replay(target: &str, body: fn(&[u8]) -> bool, rejected: &[&str]) {
    for (name, data) in seeds(target) {
        let stem = name.split('.').next().unwrap();
        assert_eq!(body(&data), !rejected.contains(&stem), "{target}/{name}");
    }
}

#[test]
fn parse_algebra_corpus() {
    replay("parse_algebra", parse_algebra_body, &["bad_arrow"]);
}

#[test]
fn resolve_module_corpus() {
    replay("resolve_module", resolve_module_body, &["missing", "bad_vertex"]);
}

#[test]
fn dim_value_corpus() {
    replay("dim_value", dim_value_body, &["negative", "wrong_key"]);
}
