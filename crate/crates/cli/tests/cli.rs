use std::fs;
use std::path::{Path, PathBuf};

use tempfile::TempDir;
use wreath_reflect::corpus::corpus;
use wreath_reflect::io::{module_from_json, module_to_json, quiver_from_json, quiver_to_json};
use wreath_reflect::quiver::affine_a1;

const A1: &str = r#"{"vertices":["0","1"],"edges":[{"name":"a","tail":"0","head":"1"},{"name":"b","tail":"0","head":"1"}]}"#;

fn s1(lambda: (&str, &str)) -> String {
    format!(
        r#"{{"params":{{"n":1,"lambda":{{"0":"{}","1":"{}"}},"nu":"0"}},"support":[{{"tuple":["1"],"dim":1}}]}}"#,
        lambda.0, lambda.1
    )
}

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["wreath"];
    full.extend_from_slice(args);
    let code = wreath_cli::run(full, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        let d = Dir(TempDir::new().unwrap());
        d.put("a1.json", A1);
        d
    }

    fn put(&self, name: &str, text: &str) -> String {
        let p = self.0.path().join(name);
        fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    fn quiver(&self) -> String {
        self.path("a1.json").to_str().unwrap().to_string()
    }
}

fn read(p: &Path) -> String {
    fs::read_to_string(p).unwrap()
}

#[test]
fn verify_passes_on_simple() {
    let d = Dir::new();
    let m = d.put("s1.json", &s1(("1", "0")));
    let r = run(&["--quiver", &d.quiver(), "verify", &m]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out, "PASS: all relations hold on 1 tuple(s)\n");
}

#[test]
fn verify_names_failing_relation() {
    let d = Dir::new();
    let m = d.put("s1.json", &s1(("1", "1")));
    let r = run(&["--quiver", &d.quiver(), "verify", &m]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("relation (i) fails at tuple (1)"), "{}", r.out);
    assert!(r.out.ends_with("FAIL: 1 relation(s) violated\n"));
}

#[test]
fn verify_rejects_bad_shape() {
    let d = Dir::new();
    let m = d.put(
        "bad.json",
        r#"{"params":{"n":1,"lambda":{"0":"1","1":"0"},"nu":"0"},
            "support":[{"tuple":["0"],"dim":2},{"tuple":["1"],"dim":1}],
            "edge_actions":[{"edge":"a","position":1,"source_tuple":["0"],"matrix":[["1"]]}]}"#,
    );
    let r = run(&["--quiver", &d.quiver(), "verify", &m]);
    assert_eq!(r.code, 2);
    assert!(r.err.starts_with("error:"));
}

#[test]
fn unparsable_input_and_usage_exit_two() {
    let d = Dir::new();
    let m = d.put("junk.json", "{not json");
    assert_eq!(run(&["--quiver", &d.quiver(), "verify", &m]).code, 2);
    assert_eq!(run(&["verify"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["verify", &m]).code, 2);
}

#[test]
fn reflect_simple_at_zero() {
    let d = Dir::new();
    let m = d.put("s1.json", &s1(("1", "0")));
    let out = d.path("f0.json");
    let r = run(&["--quiver", &d.quiver(), "--out", out.to_str().unwrap(), "reflect", &m, "--vertex", "0"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("step 1: F_0 -> (0)↦2, (1)↦1"), "{}", r.out);
    assert!(r.out.contains("lambda: 0=-1, 1=2"));
    let q = quiver_from_json(A1).unwrap();
    let v = module_from_json(&q, &read(&out)).unwrap();
    assert_eq!(v.params.lambda, vec![(-1).into(), 2.into()]);
    assert_eq!(v.dim(&[0]), 2);
    assert_eq!(v.dim(&[1]), 1);
    let again = run(&["--quiver", &d.quiver(), "verify", out.to_str().unwrap()]);
    assert_eq!(again.code, 0);
}

#[test]
fn empty_word_is_canonical_copy() {
    let d = Dir::new();
    let q = affine_a1();
    let v = corpus().unwrap().into_iter().find(|e| e.name == "(1,1) module").unwrap().module;
    let text = module_to_json(&v) + "\n";
    let m = d.put("v.json", &text);
    let r = run(&["--quiver", &d.quiver(), "reflect", &m, "--word", ""]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out, text);
    assert_eq!(module_to_json(&module_from_json(&q, &r.out).unwrap()) + "\n", text);
}

#[test]
fn word_zero_zero_returns_dims() {
    let d = Dir::new();
    let m = d.put("s1.json", &s1(("1", "0")));
    let r = run(&["--quiver", &d.quiver(), "reflect", &m, "--word", "0 0"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.err.contains("step 2: F_0 -> (1)↦1"), "{}", r.err);
    let v = module_from_json(&affine_a1(), &r.out).unwrap();
    assert_eq!(v.support().len(), 1);
    assert_eq!(v.dim(&[1]), 1);
}

fn tensor_square(d: &Dir) -> String {
    let v = corpus().unwrap().into_iter().find(|e| e.name == "S1xS1 triv").unwrap().module;
    d.put("sq.json", &module_to_json(&v))
}

#[test]
fn cohomology_of_tensor_square() {
    let d = Dir::new();
    let m = tensor_square(&d);
    let r = run(&["--quiver", &d.quiver(), "cohomology", &m, "--vertex", "0"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("total H^0 = 9\n"), "{}", r.out);
    assert!(r.out.contains("total H^>0 = 0\n"));
    let j = run(&["--quiver", &d.quiver(), "cohomology", &m, "--vertex", "0", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&j.out).unwrap();
    assert_eq!(doc["total_h0"], 9);
    assert_eq!(doc["total_higher"], 0);
}

#[test]
fn euler_of_tensor_square() {
    let d = Dir::new();
    let m = tensor_square(&d);
    let r = run(&["--quiver", &d.quiver(), "euler", &m, "--vertex", "0"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("total: 9\n"));
    assert!(r.out.contains("class [1,1]: 9\n"), "{}", r.out);
}

#[test]
fn zero_module_reports_nothing() {
    let d = Dir::new();
    let m = d.put("z.json", r#"{"params":{"n":1,"lambda":{"0":"1","1":"0"},"nu":"0"},"support":[]}"#);
    let r = run(&["--quiver", &d.quiver(), "cohomology", &m, "--vertex", "0"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "total H^0 = 0\ntotal H^>0 = 0\n");
}

#[test]
fn generic_reports_first_failure() {
    let d = Dir::new();
    let p = d.put("p.json", r#"{"n":3,"lambda":{"0":"2","1":"0"},"nu":"1"}"#);
    let r = run(&["--quiver", &d.quiver(), "--params", &p, "generic", "--vertex", "0", "--oracle"]);
    assert_eq!(r.code, 1);
    assert!(r.out.starts_with("fails at p=2 (minus branch)\n"), "{}", r.out);
    assert!(r.out.contains("oracle: agrees"));
    let p = d.put("q.json", r#"{"n":3,"lambda":{"0":"1/2","1":"0"},"nu":"1"}"#);
    let r = run(&["--quiver", &d.quiver(), "--params", &p, "generic", "--vertex", "0"]);
    assert_eq!(r.code, 0);
}

#[test]
fn translate_z2() {
    let d = Dir::new();
    let g = d.put("g.json", r#"{"type":"cyclic","m":2}"#);
    let s = d.put("s.json", r#"{"t":"1","k":"1/2","c":{"g1":"1"}}"#);
    let r = run(&["translate", "--gamma", &g, "--sra", &s]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out, "lambda: 0=2, 1=0\nnu: 1/2\n");
}

#[test]
fn induce_then_verify() {
    let d = Dir::new();
    let p = d.put("p.json", r#"{"n":2,"lambda":{"0":"0","1":"-1"},"nu":"1"}"#);
    let out = d.path("ind.json");
    let r = run(&["--quiver", &d.quiver(), "--params", &p, "--out", out.to_str().unwrap(), "induce", "--block", "2@1"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(run(&["--quiver", &d.quiver(), "verify", out.to_str().unwrap()]).code, 0);
    let p = d.put("p2.json", r#"{"n":2,"lambda":{"0":"0","1":"1"},"nu":"1"}"#);
    let r = run(&["--quiver", &d.quiver(), "--params", &p, "--out", out.to_str().unwrap(), "induce", "--block", "2@1"]);
    assert_eq!(r.code, 0);
    assert_eq!(run(&["--quiver", &d.quiver(), "verify", out.to_str().unwrap()]).code, 1);
    let r = run(&["--quiver", &d.quiver(), "--params", &p, "induce", "--block", "3@1"]);
    assert_eq!(r.code, 2);
}

fn request(lambda1: &str) -> String {
    format!(
        r#"{{"lambda0":{{"0":"1","1":"0"}},"lambda":{{"0":"0","1":"{lambda1}"}},"nu":"1/2",
            "word":[],"blocks":[{{"diagram":[2],"alpha":{{"1":1}}}}]}}"#
    )
}

#[test]
fn conditions_follow_weight() {
    let d = Dir::new();
    let ok = d.put("ok.json", &request("-1/2"));
    let r = run(&["--quiver", &d.quiver(), "conditions", "--request", &ok]);
    assert_eq!(r.code, 0, "{}{}", r.out, r.err);
    assert!(r.out.contains("condition (iii): PASS"));
    assert!(r.out.ends_with("overall: PASS\n"));
    let bad = d.put("bad.json", &request("1/2"));
    let r = run(&["--quiver", &d.quiver(), "conditions", "--request", &bad]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("condition (iii): FAIL"));
    assert!(r.out.contains("required (a-b)ν = -1/2"), "{}", r.out);
}

#[test]
fn word_validate_pivots() {
    let d = Dir::new();
    let p = d.put("p.json", r#"{"n":1,"lambda":{"0":"1","1":"0"},"nu":"0"}"#);
    let r = run(&["--quiver", &d.quiver(), "--params", &p, "word-validate", "--word", "0"]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert!(r.out.ends_with("PASS: final weight 0=-1, 1=2\n"), "{}", r.out);
    let r = run(&["--quiver", &d.quiver(), "--params", &p, "word-validate", "--word", "1"]);
    assert_eq!(r.code, 1);
    assert!(r.out.ends_with("FAIL at step 1\n"));
}

#[test]
fn loop_vertex_is_domain_failure() {
    let d = Dir::new();
    let q = d.put("loop.json", r#"{"vertices":["0"],"edges":[{"name":"x","tail":"0","head":"0"}]}"#);
    let m = d.put("m.json", r#"{"params":{"n":1,"lambda":{"0":"0"},"nu":"0"},"support":[{"tuple":["0"],"dim":1}]}"#);
    let r = run(&["--quiver", &q, "reflect", &m, "--vertex", "0"]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("loop"), "{}", r.err);
}

#[test]
fn reports_are_deterministic() {
    let d = Dir::new();
    let m = tensor_square(&d);
    let args = ["--quiver", &d.quiver(), "reflect", &m, "--word", "0 1 0"];
    let first = run(&args);
    assert_eq!(first.code, 0, "{}", first.err);
    for _ in 0..3 {
        let again = run(&args);
        assert_eq!(again.out, first.out);
        assert_eq!(again.err, first.err);
    }
}

#[test]
fn quiver_file_round_trip() {
    let q = quiver_from_json(A1).unwrap();
    assert_eq!(quiver_from_json(&quiver_to_json(&q)).unwrap(), q);
}
