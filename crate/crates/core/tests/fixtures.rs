//! Frozen outputs: a seeded random graph and a small sweep report.
//! Run with `COVERREG_BLESS=1` to rewrite the fixtures after an intended
//! change.

use std::path::PathBuf;

use coverreg::verify::{sweep, write_csv, write_json, CheckKind, FamilySpec, SweepConfig};
use coverreg::{parse_edge_list, random_graph, write_edge_list, EdgeProbability, FieldTag, Graph};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn compare_or_bless(name: &str, actual: &str) {
    let path = fixture(name);
    if std::env::var("COVERREG_BLESS").is_ok_and(|v| v == "1") {
        std::fs::write(&path, actual).unwrap();
    }
    let expected =
        std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "{name} drifted");
}

#[test]
fn seeded_random_graph_is_frozen() {
    let p: EdgeProbability = "1/2".parse().unwrap();
    let g = random_graph(6, p, 42).unwrap();
    let text = write_edge_list(&g);
    compare_or_bless("random_n6_p1-2_seed42.txt", &text);
    assert_eq!(parse_edge_list(&text).unwrap(), g);
}

fn small_report() -> coverreg::verify::SweepOutcome {
    let mut config = SweepConfig::new(2, FieldTag::Gf2);
    config.checks = vec![
        CheckKind::Bounds,
        CheckKind::HalfCover,
        CheckKind::Sharpness,
    ];
    let family = FamilySpec::Graphs(vec![
        Graph::named("P3").unwrap(),
        Graph::named("C5").unwrap(),
        Graph::named("G3,3").unwrap(),
    ]);
    sweep(&family, &config).unwrap()
}

#[test]
fn json_report_is_frozen() {
    let out = small_report();
    let mut buf = Vec::new();
    write_json(&out.records, &mut buf).unwrap();
    compare_or_bless("sweep_small.json", &String::from_utf8(buf).unwrap());
}

#[test]
fn csv_report_is_frozen() {
    let out = small_report();
    let mut buf = Vec::new();
    write_csv(&out.records, &mut buf).unwrap();
    compare_or_bless("sweep_small.csv", &String::from_utf8(buf).unwrap());
}

#[test]
fn json_and_csv_carry_the_same_rows() {
    let out = small_report();
    let (mut json, mut csv) = (Vec::new(), Vec::new());
    write_json(&out.records, &mut json).unwrap();
    write_csv(&out.records, &mut csv).unwrap();
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&json).unwrap();
    let mut reader = csv::Reader::from_reader(csv.as_slice());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    let csv_rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), csv_rows.len());
    for (json_row, csv_row) in rows.iter().zip(&csv_rows) {
        let obj = json_row.as_object().unwrap();
        assert_eq!(obj.keys().len(), header.len());
        for (column, cell) in header.iter().zip(csv_row.iter()) {
            let expected = match &obj[column] {
                serde_json::Value::Null => String::new(),
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            assert_eq!(cell, expected, "column {column}");
        }
    }
}
