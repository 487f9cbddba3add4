use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    root.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gradalg")).args(args).output().expect("binary runs");
    let text = String::from_utf8(out.stdout).expect("utf-8");
    let v: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("bad json ({e}): {text}"));
    (out.status.code().expect("exit code"), v, text)
}

fn failing_checks(v: &Value) -> Vec<String> {
    v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] != "pass")
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn universal_group_of_fxf_is_trivial() {
    let (code, v, _) = run(&["universal-group", &fixture("fxf.json")]);
    assert_eq!(code, 0);
    let g = &v["result"]["universal_group"]["group"];
    assert_eq!(g["free_rank"], 0);
    assert_eq!(g["torsion"].as_array().unwrap().len(), 0);
    assert_eq!(v["result"]["group_grading"], false);
}

#[test]
fn universal_group_of_zero_line_is_z() {
    let (code, v, _) = run(&["universal-group", &fixture("zero_line.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["universal_group"]["group"]["structure"], "Z");
    let (_, v, _) = run(&["universal-group", &fixture("ground_field.json")]);
    assert_eq!(v["result"]["universal_group"]["group"]["structure"], "1");
}

#[test]
fn catalog_non_group_entry() {
    let (code, v, _) = run(&["catalog", "run", "non-group-sl2xsl2"]);
    assert_eq!(code, 0, "{:?}", failing_checks(&v));
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.iter().any(|n| n.contains("Z x Z/2")));
    assert!(names.iter().any(|n| n.contains("four displayed components")));
}

#[test]
fn induce_non_group_grading_has_four_components() {
    let (code, v, _) = run(&["induce", &fixture("non_group_sl2xsl2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["induced"].as_array().unwrap().len(), 4);
    assert_eq!(v["result"]["group"]["structure"], "Z x Z/2");
}

#[test]
fn loop_split_z4z2_gives_the_product_table() {
    let (code, v, _) = run(&["loop", "split", &fixture("sl2_z4z2.json")]);
    assert_eq!(code, 0, "{:?}", failing_checks(&v));
    let comps = v["result"]["components"].as_array().unwrap();
    assert_eq!(comps.len(), 6);
    let at = |d: [i64; 2]| {
        comps.iter().find(|c| c["degree"] == serde_json::json!(d)).unwrap_or_else(|| panic!("no component at {d:?}"))
    };
    // F(H, iH) at (1,0)
    let c = at([1, 0]);
    let basis = c["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 1);
    let v0 = basis[0].as_array().unwrap();
    let coeffs =
        |x: &Value| x["coeffs"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect::<Vec<_>>();
    assert_eq!(coeffs(&v0[2]), vec!["1", "0"]);
    assert_eq!(coeffs(&v0[5]), vec!["0", "1"]);
    for i in [0, 1, 3, 4] {
        assert_eq!(coeffs(&v0[i]), vec!["0", "0"]);
    }
    // H, E + F and E - F each appear in the two degrees over their image in (Z/2)^2
    let mut degs: Vec<Value> = comps.iter().map(|c| c["degree"].clone()).collect();
    degs.sort_by_key(|d| d.to_string());
    let want = serde_json::json!([[0, 1], [1, 0], [1, 1], [2, 1], [3, 0], [3, 1]]);
    assert_eq!(Value::Array(degs), want);
}

#[test]
fn loop_commands_pass_on_fixtures() {
    for args in [vec!["loop", "build"], vec!["loop", "verify"], vec!["loop", "split"], vec!["loop", "recover"]] {
        let mut a = args.clone();
        let f = fixture("sl2_gamma1_loop.json");
        a.push(&f);
        let (code, v, _) = run(&a);
        assert_eq!(code, 0, "{args:?}: {:?} {}", failing_checks(&v), v["error"]);
    }
    let (code, v, _) = run(&["loop", "recover", &fixture("sl2_z4z2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["centroid_dim"], 2);
}

#[test]
fn witness_in_characteristic_two() {
    let (code, v, _) = run(&["loop", "witness", &fixture("sl2_gamma1_loop_f2.json")]);
    assert_eq!(code, 0, "{:?}", failing_checks(&v));
    let (code, v, _) = run(&["loop", "witness", &fixture("sl2_gamma1_loop.json")]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["name"], "CharCoprime");
}

#[test]
fn decompositions_and_centroids() {
    let (code, v, _) = run(&["decompose", "simple", &fixture("sl2xsl2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["ideals"].as_array().unwrap().len(), 2);
    let (code, v, _) = run(&["decompose", "graded", &fixture("trivial_fine_square.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["factors"].as_array().unwrap().len(), 2);
    let (code, v, _) = run(&["decompose", "simple", &fixture("zero_line.json")]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["name"], "NotSemisimple");
    let (code, v, _) = run(&["centroid", &fixture("sl2xsl2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dim"], 2);
    let (_, v, _) = run(&["centroid", &fixture("sl2_z4z2.json")]);
    assert_eq!(v["result"]["pieces"].as_array().unwrap().len(), 2);
}

#[test]
fn products() {
    let (code, v, _) = run(&["product", "free", &fixture("free_gamma1_gamma2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["group"]["structure"], "Z x Z/2 x Z/2");
    assert_eq!(v["result"]["components"].as_array().unwrap().len(), 6);
    let (code, _, _) = run(&["product", "grading", &fixture("free_gamma1_gamma2.json")]);
    assert_eq!(code, 0);
    let (code, v, _) = run(&["product", "g", &fixture("product_g_gamma1.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["product"]["degrees"].as_array().unwrap().len(), 3);
    let (code, v, _) = run(&["product", "g", &fixture("free_gamma1_gamma2.json")]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["name"], "GroupMismatch");
}

#[test]
fn equivalence_extension() {
    let (code, v, _) = run(&["equivalence", "extend", &fixture("jordan_no_extension.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["extends"], false);
    let (code, v, _) = run(&["equivalence", "extend", &fixture("sl2_gamma1_chevalley.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["extends"], true);
    assert!(v["result"]["psi"].is_array());
}

#[test]
fn catalog_all_passes_and_is_deterministic() {
    let (code, v, a) = run(&["catalog", "run", "all", "--seed", "3"]);
    assert_eq!(code, 0, "{:?}", failing_checks(&v));
    assert_eq!(v["result"]["entries"].as_array().unwrap().len(), 10);
    let (_, _, b) = run(&["catalog", "run", "all", "--seed", "3"]);
    assert_eq!(a, b);
}

#[test]
fn field_override() {
    let (code, v, _) = run(&["catalog", "run", "free-products", "--field", "F_7"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["entries"][0]["field"], "F_7");
    let (code, v, _) = run(&["catalog", "run", "sl2", "--field", "F_2"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["name"], "UnsupportedField");
    let (code, _, _) = run(&["catalog", "run", "sl2", "--field", "F_4"]);
    assert_eq!(code, 2);
    // the characters in the file live in Q(i)
    let (code, _, _) = run(&["loop", "split", &fixture("sl2_z4z2.json"), "--field", "Q"]);
    assert_eq!(code, 2);
    // without them, splitting over Q needs a primitive 4th root of unity
    let mut d: Value = serde_json::from_str(&std::fs::read_to_string(fixture("sl2_z4z2.json")).unwrap()).unwrap();
    d.as_object_mut().unwrap().remove("characters");
    let p = std::env::temp_dir().join(format!("gradalg-nochar-{}.json", std::process::id()));
    std::fs::write(&p, d.to_string()).unwrap();
    let (code, v, _) = run(&["loop", "split", p.to_str().unwrap(), "--field", "Q"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["name"], "NoSuchRoot");
    let (code, _, _) = run(&["loop", "split", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    std::fs::remove_file(&p).ok();
}

#[test]
fn schema_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("gradalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        ("not_json.json", "{"),
        (
            "bad_version.json",
            r#"{"version": 7, "algebra": {"field": "Q", "dim": 1, "table": [[]]}, "components": [[["1"]]]}"#,
        ),
        ("short_table.json", r#"{"algebra": {"field": "Q", "dim": 2, "table": [[]]}, "components": []}"#),
        ("bad_scalar.json", r#"{"algebra": {"field": "Q", "dim": 1, "table": [[[0, "x"]]]}, "components": [[["1"]]]}"#),
        (
            "bad_degrees.json",
            r#"{"algebra": {"field": "Q", "dim": 1, "table": [[]]}, "components": [[["1"]]], "group": {"free_rank": 1}, "degrees": [[1, 2]]}"#,
        ),
    ];
    for (name, text) in cases {
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        let (code, v, _) = run(&["validate", p.to_str().unwrap()]);
        assert_eq!(code, 2, "{name}: {v}");
        assert_eq!(v["error"]["kind"], "schema");
    }
    // a well-formed file whose subspaces do not form a grading
    let p = dir.join("not_a_grading.json");
    std::fs::write(
        &p,
        r#"{"algebra": {"field": "Q", "dim": 2, "table": [[[0, "1"]], [], [], [[1, "1"]]]}, "components": [[["1", "1"]], [["1", "-1"]], [["1", "0"]]]}"#,
    )
    .unwrap();
    let (code, v, _) = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(code, 1, "{v}");
    assert_eq!(v["status"], "fail");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn out_writes_the_report() {
    let p = std::env::temp_dir().join(format!("gradalg-out-{}.json", std::process::id()));
    let (_, _, text) = run(&["validate", &fixture("fxf.json"), "--out", p.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&p).unwrap(), text);
    std::fs::remove_file(&p).ok();
}
