//! Byte-for-byte regression against checked-in tables. Regenerate with
//! `chevalley gen --type T --out crates/core/tests/golden/T.json` after an
//! intentional format change.

use chevalley::cli::run;
use chevalley::io::TableDocument;
use chevalley::{build_cartan, build_inductive, default_epsilon, generate_roots};

fn generated(ty: &str) -> String {
    let mut out = Vec::new();
    let code = run(["chevalley", "gen", "--type", ty], &mut out, &mut Vec::new());
    assert_eq!(code, 0);
    String::from_utf8(out).unwrap()
}

#[test]
fn golden_tables() {
    for ty in ["A2", "D4", "G2"] {
        let path = format!("{}/tests/golden/{ty}.json", env!("CARGO_MANIFEST_DIR"));
        let golden = std::fs::read_to_string(&path).unwrap();
        assert_eq!(generated(ty), golden, "{ty}");

        // The stored constants are also the inductive ones.
        let stored = TableDocument::from_json(&golden).unwrap().to_table().unwrap();
        let cm = build_cartan(ty.parse().unwrap());
        let direct = build_inductive(&generate_roots(&cm), &default_epsilon(&cm)).unwrap();
        assert_eq!(stored.constants(), direct.constants(), "{ty}");
    }
}
