use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use leibniz_cli::format::AlgebraFile;
use leibniz_core::builders::{build_example1, build_sl2};
use leibniz_core::linalg::{int, vector_from_i64};
use leibniz_core::AlgebraTable;
use serde_json::Value;
use tempfile::TempDir;

fn leibniz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
        .args(args)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn machine(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--output", "machine"]);
    let o = leibniz(&all);
    (code(&o), serde_json::from_str(&stdout(&o)).unwrap())
}

fn build_to(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(format!("{name}.json"));
    let mut all = vec!["build"];
    all.extend(args);
    all.extend(["--out", path.to_str().unwrap()]);
    let o = leibniz(&all);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

/// sl2 over the Gaussian rationals, written over Q in basis (u, i·u).
fn gaussian_sl2() -> AlgebraTable {
    let sl2 = build_sl2();
    let mut t = AlgebraTable::abelian(6);
    for (a, b, re, im) in [(0, 0, 1, 0), (0, 1, 0, 1), (1, 0, 0, 1), (1, 1, -1, 0)] {
        for u in 0..3 {
            for v in 0..3 {
                let prod = sl2.product(u, v);
                let mut out = vec![int(0); 6];
                for w in 0..3 {
                    out[w] = &prod[w] * int(re);
                    out[3 + w] = &prod[w] * int(im);
                }
                t = t.with_product(3 * a + u, 3 * b + v, &out).unwrap();
            }
        }
    }
    t
}

#[test]
fn built_files_are_byte_stable() {
    let dir = TempDir::new().unwrap();
    let cases: &[(&str, &[&str])] = &[
        ("sl2", &["sl2"]),
        ("simple0", &["simple", "--m", "0"]),
        ("simple3", &["simple", "--m", "3"]),
        ("lie", &["lie-simple", "--t", "1,2,2"]),
        ("ex1", &["example1", "--n", "3"]),
        ("ex2", &["example2", "--t", "1,2,1,3"]),
        ("ex3", &["example3"]),
    ];
    for (name, args) in cases {
        let path = build_to(&dir, name, args);
        let text = fs::read_to_string(&path).unwrap();
        let rendered = AlgebraFile::parse(&text).unwrap().render();
        assert_eq!(rendered, text, "{name}");
        let mut stdout_args = vec!["build"];
        stdout_args.extend(args.iter());
        assert_eq!(stdout(&leibniz(&stdout_args)), text, "{name}");
    }
}

#[test]
fn build_shapes() {
    let dir = TempDir::new().unwrap();
    let sl2 =
        AlgebraFile::parse(&fs::read_to_string(build_to(&dir, "sl2", &["sl2"])).unwrap()).unwrap();
    assert_eq!((sl2.dim, sl2.brackets.len()), (3, 6));
    let s0 = AlgebraFile::parse(
        &fs::read_to_string(build_to(&dir, "s0", &["simple", "--m", "0"])).unwrap(),
    )
    .unwrap();
    assert_eq!(s0.dim, 4);
    let e3 = AlgebraFile::parse(&fs::read_to_string(build_to(&dir, "e3", &["example3"])).unwrap())
        .unwrap();
    assert_eq!(e3.dim, 10);
    assert_eq!(e3.layout.unwrap().ideal, vec![6, 7, 8, 9]);
}

#[test]
fn build_from_spec_file() {
    let dir = TempDir::new().unwrap();
    let spec = write(
        &dir,
        "spec.json",
        r#"{"components": [{"label": "a", "kind": "sl2"}, {"label": "b", "kind": "sl2"}],
            "modules": [{"tensor": {"weights": {"a": 1, "b": 1}}}]}"#,
    );
    let path = build_to(&dir, "spec", &["spec-file", "--spec", p(&spec)]);
    let (c, r) = machine(&["decompose", p(&path)]);
    assert_eq!(c, 1);
    assert_eq!(r["witnesses"]["intersection"]["dim"], 4);
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = build_to(&dir, "good", &["simple", "--m", "2"]);
    assert_eq!(code(&leibniz(&["verify", p(&good)])), 0);

    let broken = build_sl2()
        .with_product(0, 2, &vector_from_i64(&[1, 0, 0]))
        .unwrap();
    let bad = write(&dir, "bad.json", &AlgebraFile::from_table(&broken).render());
    let (c, r) = machine(&["verify", p(&bad)]);
    assert_eq!(c, 1);
    assert_eq!(r["verdicts"]["leibniz"], false);
    assert_eq!(
        r["witnesses"]["leibniz_violation"]["indices"]
            .as_array()
            .unwrap()
            .len(),
        3
    );

    let garbage = write(&dir, "garbage.json", "{\"format_version\": \"1\"");
    assert_eq!(code(&leibniz(&["verify", p(&garbage)])), 2);
    let out_of_range = write(
        &dir,
        "range.json",
        r#"{"format_version": "1", "dim": 1, "basis": ["a"], "brackets": {"0,0": {"3": "1"}}}"#,
    );
    assert_eq!(code(&leibniz(&["verify", p(&out_of_range)])), 2);
    assert_eq!(code(&leibniz(&["verify", "/nonexistent/file.json"])), 2);
    assert_eq!(code(&leibniz(&["frobnicate"])), 2);
    assert_eq!(code(&leibniz(&["build", "simple"])), 2);
}

#[test]
fn classify_reports() {
    let dir = TempDir::new().unwrap();
    let s2 = build_to(&dir, "s2", &["simple", "--m", "2"]);
    let o = leibniz(&["classify", p(&s2)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("simple: yes\n"));

    let lie = build_to(&dir, "lie", &["lie-simple", "--t", "1,1"]);
    let (c, r) = machine(&["classify", p(&lie)]);
    assert_eq!(c, 0);
    assert_eq!(r["verdicts"]["lie_simple"], true);
    assert_eq!(r["verdicts"]["simple"], false);

    // Without the declared attribute irreducibility over sl3 is undecidable.
    let mut f = AlgebraFile::from_built(&build_example1(3).unwrap()).unwrap();
    let declared = write(&dir, "ex1.json", &f.render());
    let (c, r) = machine(&["classify", p(&declared)]);
    assert_eq!((c, &r["verdicts"]["simple"]), (0, &Value::Bool(true)));
    f.attributes = None;
    let bare = write(&dir, "ex1_bare.json", &f.render());
    let (c, r) = machine(&["classify", p(&bare)]);
    assert_eq!(c, 3);
    assert!(r["witnesses"]["notes"][0]
        .as_str()
        .unwrap()
        .starts_with("UndecidableIrreducibility"));

    let gaussian = write(
        &dir,
        "gauss.json",
        &AlgebraFile::from_table(&gaussian_sl2()).render(),
    );
    let (c, r) = machine(&["classify", p(&gaussian)]);
    assert_eq!(c, 3);
    assert!(r["witnesses"]["notes"][0]
        .as_str()
        .unwrap()
        .starts_with("NonSplitUnsupported"));
}

#[test]
fn info_report() {
    let dir = TempDir::new().unwrap();
    let path = build_to(&dir, "s3", &["simple", "--m", "3"]);
    let (c, r) = machine(&["info", p(&path)]);
    assert_eq!(c, 0);
    let v = &r["verdicts"];
    assert_eq!(v["dim"], 7);
    assert_eq!(v["lie"], false);
    assert_eq!(v["squares_ideal_dim"], 4);
    assert_eq!(v["derived_series_dims"], serde_json::json!([7]));
    assert_eq!(v["right_annihilator_dim"], 4);
    let bytes = fs::read(&path).unwrap();
    assert_eq!(r["input_digest"], leibniz_cli::report::digest(&bytes));
}

#[test]
fn decompose_contract() {
    let dir = TempDir::new().unwrap();
    let e3 = build_to(&dir, "e3", &["example3"]);
    let (c, r) = machine(&["decompose", p(&e3)]);
    assert_eq!(c, 1);
    assert_eq!(r["verdicts"]["status"], "not-decomposable");
    assert_eq!(r["witnesses"]["intersection"]["dim"], 4);

    let e2 = build_to(&dir, "e2", &["example2", "--t", "1,2,1,2"]);
    let (c, r) = machine(&["decompose", p(&e2)]);
    assert_eq!(c, 0);
    assert_eq!(r["verdicts"]["summands"], 2);
    for s in r["witnesses"]["summands"].as_array().unwrap() {
        assert_eq!(s["class"], "lie-simple");
    }

    let sl2 = build_to(&dir, "sl2", &["sl2"]);
    assert_eq!(code(&leibniz(&["decompose", p(&sl2)])), 2);

    let s0 = build_to(&dir, "s0", &["simple", "--m", "0"]);
    // The layout ideal differs from the squares ideal.
    let o = leibniz(&["decompose", p(&s0)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("layout"));
}

#[test]
fn module_decompose_reports_chains() {
    let dir = TempDir::new().unwrap();
    let e3 = build_to(&dir, "e3", &["example3"]);
    for label in ["sl2_1", "sl2_2"] {
        let (c, r) = machine(&["module-decompose", p(&e3), "--component", label]);
        assert_eq!(c, 0);
        assert_eq!(r["verdicts"]["chain_dims"], serde_json::json!([2, 2]));
        assert_eq!(
            r["verdicts"]["weight_multiplicities"],
            serde_json::json!({"1": 2, "-1": 2})
        );
    }
    assert_eq!(
        code(&leibniz(&[
            "module-decompose",
            p(&e3),
            "--component",
            "nope"
        ])),
        2
    );
    let e1 = build_to(&dir, "e1", &["example1", "--n", "3"]);
    assert_eq!(
        code(&leibniz(&[
            "module-decompose",
            p(&e1),
            "--component",
            "sl3"
        ])),
        3
    );
}

#[test]
fn report_can_go_to_a_file() {
    let dir = TempDir::new().unwrap();
    let s1 = build_to(&dir, "s1", &["simple", "--m", "1"]);
    let report = dir.path().join("report.json");
    let o = leibniz(&["info", p(&s1), "--output", "machine", "--out", p(&report)]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let r: Value = serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(r["command"], "info");
}
