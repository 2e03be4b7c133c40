use std::path::PathBuf;

use hecke_cli::{run, EXIT_CAP, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn go(args: &[&str]) -> (i32, String) {
    run(std::iter::once("hecke").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out) = go(&full);
    let v: Value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}"));
    assert_eq!(code == EXIT_OK, v["status"] == "ok", "{out}");
    v
}

/// `# expect: key=value` header lines.
fn expectations(path: &str) -> Vec<(String, String)> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter_map(|l| l.strip_prefix("# expect: "))
        .map(|kv| {
            let (k, v) = kv.split_once('=').unwrap();
            (k.trim().to_string(), v.trim().to_string())
        })
        .collect()
}

#[test]
fn every_example_diagram_matches_its_header() {
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data"].iter().collect();
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "diag"))
        .collect();
    files.sort();
    assert!(files.len() >= 8);
    for f in files {
        let f = f.to_string_lossy().into_owned();
        let exp = expectations(&f);
        assert_eq!(exp.len(), 3, "{f}");
        let collapse = json(&["collapse", &f]);
        let dim = json(&["dimension", &f]);
        for (k, v) in exp {
            let got = match k.as_str() {
                "collapsed" => collapse["value"]["collapsed"].as_array().unwrap().len().to_string(),
                "components" => collapse["value"]["components"].to_string(),
                "dimension" => match &dim["value"] {
                    Value::String(s) => s.clone(),
                    other => other["dimension"].as_str().unwrap().to_string(),
                },
                _ => panic!("unknown key {k}"),
            };
            assert_eq!(got, v, "{f}: {k}");
        }
    }
}

#[test]
fn worked_examples() {
    assert_eq!(go(&["dimension", &data("collapse80.diag")]), (EXIT_OK, "80\n".into()));
    assert_eq!(go(&["g0", "product", "132", "41"]), (EXIT_OK, "13241 + 1361\n".into()));
    let (code, out) = go(&["bratteli", "4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("level 0: ∅\nlevel 1: 1\nlevel 2: 11 2\nlevel 3: 12 21 3\nlevel 4: 121 13 22 31 4\n"));
    assert_eq!(out.lines().filter(|l| l.starts_with("edge ")).count(), 11);
    assert!(go(&["bratteli", "4", "--dot"]).1.starts_with("graph bratteli {"));
}

#[test]
fn output_is_deterministic() {
    let cases: Vec<Vec<String>> = vec![
        vec!["--json".into(), "basis".into(), data("a5_alternating.diag")],
        vec!["idempotents".into(), data("c5.graph")],
        vec!["g0".into(), "coproduct".into(), "2312".into()],
        vec!["scan-conjecture".into(), data("d4_commutative.diag")],
    ];
    for c in cases {
        let args: Vec<&str> = c.iter().map(String::as_str).collect();
        assert_eq!(go(&args), go(&args));
    }
}

#[test]
fn commutative_algebra_commands() {
    let g = data("p3_nil.graph");
    assert_eq!(json(&["basis", &g])["value"], 5);
    assert_eq!(json(&["cartan", &g])["value"], "5");
    assert_eq!(json(&["radical", &g])["items"], serde_json::json!(["X{2}"]));
    assert_eq!(go(&["idempotents", &g]).1.lines().next(), Some("E{} = 1 - X{1} - X{3} + X{1,3}"));
    let c5 = data("c5.graph");
    assert_eq!(json(&["basis", &c5])["value"], 11);
    assert_eq!(go(&["restrict", &c5, "--sub", "1,2", "--simple", "1,3"]).1, "C{1}\n");
    assert_eq!(go(&["induce", &c5, "--sub", "1,2", "--simple", "1"]).1, "C{1} ⊕ C{1,3} ⊕ C{1,4}\n");
    let v = json(&["induce", &g, "--sub", "1", "--simple", "1"]);
    assert_eq!(v["error_code"], "nilpotents_present");
    assert_eq!(go(&["induce", &g, "--sub", "1", "--projective", "1"]).1, "P{1} ⊕ P{1,3}\n");
    assert_eq!(json(&["cartan", &data("d4_commutative.diag")])["value"], "9");
    assert_eq!(json(&["cartan", &data("a5_alternating.diag")])["value"], "13");
    assert_eq!(json(&["cartan", &data("b3_lusztig.diag")])["error_code"], "not_commutative");
}

#[test]
fn check_command() {
    let v = json(&["check", &data("d4_commutative.diag")]);
    assert_eq!(v["value"]["collapse_free"], true);
    assert_eq!(v["value"]["commutative"], true);
    let v = json(&["check", &data("collapse80.diag"), "--admissible", "z1"]);
    assert_eq!(v["value"]["collapse_free"], false);
    assert_eq!(v["value"]["admissible"], true);
    let v = json(&["check", &data("a5_alternating.diag"), "--admissible", "s1,s2"]);
    assert_eq!(v["value"]["admissible"], true);
}

#[test]
fn grothendieck_commands() {
    assert_eq!(go(&["g0", "product", "2", "2", "--projective"]).1, "22 + 4\n");
    // S(3) = −111, which σ sends to zero since 111 is not proper
    assert_eq!(go(&["g0", "antipode", "3"]).1, "0\n");
    assert_eq!(go(&["g0", "antipode", "3", "--projective"]).1, "-111\n");
    assert_eq!(json(&["g0", "bialgebra", "11", "1"])["value"]["compatible"], false);
    assert_eq!(go(&["g0", "pairing", "13241+1361", "1361"]).1, "1\n");
    assert_eq!(json(&["g0", "coproduct", "213"])["error_code"], "improper_composition");
    let v = json(&["fibdecomp", "5", "--nil", "2,4"]);
    assert_eq!(v["value"], "13");
    let mults: Vec<&str> = v["items"].as_array().unwrap().iter().map(|i| i["multiplicity"].as_str().unwrap()).collect();
    let mut sorted = mults.clone();
    sorted.sort_by(|a, b| b.parse::<u32>().unwrap().cmp(&a.parse().unwrap()));
    assert_eq!(sorted, ["4", "2", "2", "1", "1", "1", "1", "1"]);
}

#[test]
fn scans_and_verification() {
    let v = json(&["scan-min-dim", "5"]);
    assert_eq!(v["value"], "13");
    assert_eq!(v["items"], serde_json::json!(["01010", "10101"]));
    assert_eq!(json(&["scan-conjecture", &data("d4_commutative.diag")])["value"]["counterexample"], false);
    assert_eq!(json(&["verify", "relations", &data("a5_alternating.diag")])["value"]["checked"], 1);
    assert_eq!(json(&["verify", "relations", &data("dihedral7.diag")])["value"]["checked"], 1);
    assert_eq!(json(&["verify", "antipode", "5"])["status"], "ok");
    assert_eq!(json(&["verify", "moebius", &data("vee.poset")])["value"]["ideals"], 5);
    assert_eq!(json(&["verify", "moebius", &data("vee.poset"), "--field", "fp:2"])["error_code"], "characteristic_2");
}

#[test]
fn exit_codes() {
    assert_eq!(go(&["dimension", "/nonexistent.diag"]).0, EXIT_USAGE);
    assert_eq!(go(&["g0", "product", "1x", "2"]).0, EXIT_DOMAIN);
    assert_eq!(go(&["basis", &data("a5_alternating.diag"), "--cap", "5"]).0, EXIT_CAP);
    assert_eq!(go(&["scan-min-dim", "10"]).0, EXIT_CAP);
    assert_eq!(go(&["verify", "moebius", &data("c5.graph")]).0, EXIT_DOMAIN);
    let v = json(&["basis", &data("affine_a2.diag")]);
    assert_eq!(v["error_code"], "not_finite");
}
