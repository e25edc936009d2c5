use chevalley_web::{fold_summary_json, root_system_json, structure_constant_json};
use serde_json::Value;

fn parse(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.unwrap()).unwrap()
}

#[test]
fn root_system() {
    let v = parse(root_system_json("G2", false));
    assert_eq!(v["roots"].as_array().unwrap().len(), 12);
    assert_eq!(v["positive_count"], 6);
    assert_eq!(v["epsilon"], serde_json::json!([-1, 1]));
    assert_eq!(v["compact"][0], "10");
    assert!(root_system_json("B1", false).is_err());
    assert!(root_system_json("A40", false).is_err());
}

#[test]
fn structure_constant() {
    let v = parse(structure_constant_json("D4", false, "1110", "-0110"));
    assert_eq!(v["sum"], "1000");
    assert_eq!(v["N"], 1);
    assert_eq!(v["closed"], 1);

    let v = parse(structure_constant_json("D4", true, "1110", "-0110"));
    assert_eq!(v["N"], -1);

    for (a, b) in [("10", "01"), ("01", "11"), ("01", "12"), ("10", "13")] {
        let v = parse(structure_constant_json("G2", false, a, b));
        assert_eq!(v["N"], v["folded"], "{a} {b}");
        assert_eq!(v["parent"], "D4");
    }
    let v = parse(structure_constant_json("G2", false, "01", "11"));
    assert_eq!(v["N"].as_i64().unwrap().abs(), 2);

    let v = parse(structure_constant_json("A2", false, "10", "-10"));
    assert_eq!(v["coroot"], serde_json::json!([1, 0]));
    assert!(structure_constant_json("A2", false, "20", "01").is_err());
}

#[test]
fn fold_summary() {
    let v = parse(fold_summary_json("G2"));
    assert_eq!(v["parent"], "D4");
    assert_eq!(v["order"], 3);
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);
    assert_eq!(v["rows"][5]["text"], "{1121}  3a~1+2a~3");
    assert!(fold_summary_json("E6").is_err());
}
