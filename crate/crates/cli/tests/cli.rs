use std::process::{Command, Output};

use hopftab::linear::{LinComb, TensorComb};
use hopftab::perm::Permutation;
use hopftab::tableau::StandardTableau;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopftab"))
        .args(args)
        .output()
        .unwrap()
}

fn out(args: &[&str]) -> String {
    let o = run(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["rsk", "1223"]), 1);
    assert_eq!(code(&["product", "--box", "--triangle", "1", "1"]), 1);
    assert_eq!(code(&["mobius", "3", "12", "21"]), 1);
    assert_eq!(code(&["verify", "nonsense", "--nmax", "2"]), 1);
    assert_eq!(code(&["poset", "8"]), 3);
    assert_eq!(code(&["count-indec", "11"]), 3);
    assert_eq!(code(&["verify", "all", "--nmax", "8"]), 3);
    assert_eq!(code(&["count-indec", "3", "--force"]), 0);
    assert_eq!(code(&["verify", "lemma1", "--nmax", "3"]), 0);
}

#[test]
fn printed_values_reparse() {
    let star: LinComb<Permutation> = out(&["product", "12", "21"]).trim().parse().unwrap();
    assert_eq!(star.len(), 6);

    let shuffle: LinComb<StandardTableau> = out(&["product", "--shuffle", "1", "1", "--tableaux"])
        .trim()
        .parse()
        .unwrap();
    assert_eq!(shuffle.to_string(), "1*12 + 1*1/2");

    for tensor in [
        out(&["coproduct", "3124"]),
        out(&["coproduct", "3124", "--ascii"]),
    ] {
        let d: TensorComb<Permutation> = tensor.trim().parse().unwrap();
        assert_eq!(d.len(), 5);
    }
    let dt: TensorComb<StandardTableau> = out(&["coproduct", "13/25/4"]).trim().parse().unwrap();
    assert_eq!(dt.len(), 6);

    let m: LinComb<StandardTableau> = out(&["mbasis", "P(123)"]).trim().parse().unwrap();
    assert_eq!(m.to_string(), "1*123 - 1*12/3 - 1*13/2 + 1*1/2/3");

    let class: Vec<Permutation> = out(&["class", "13/2"])
        .lines()
        .map(|l| l.parse().unwrap())
        .collect();
    assert_eq!(class.len(), 2);

    let prims: Vec<StandardTableau> = out(&["primitives", "4"])
        .lines()
        .map(|l| l.parse().unwrap())
        .collect();
    assert_eq!(prims.len(), 3);
}

#[test]
fn json_output() {
    let j: serde_json::Value = serde_json::from_str(&out(&["rsk", "45231", "--json"])).unwrap();
    assert_eq!(j["P"], serde_json::json!([[1, 3], [2, 5], [4]]));
    let p: StandardTableau = serde_json::from_value(j["Q"].clone()).unwrap();
    assert_eq!(p.to_string(), "12/34/5");

    let d: TensorComb<Permutation> =
        serde_json::from_str(&out(&["coproduct", "3124", "--json"])).unwrap();
    assert_eq!(d.len(), 5);

    let first = out(&["product", "P(21)", "P(12)", "--json"]);
    assert_eq!(first, out(&["product", "P(21)", "P(12)", "--json"]));
    let x: LinComb<StandardTableau> = serde_json::from_str(&first).unwrap();
    assert!(!x.is_zero());

    let counts: Vec<usize> = serde_json::from_str(&out(&["count-indec", "7", "--json"])).unwrap();
    assert_eq!(counts, [1, 1, 1, 3, 7, 23, 71]);

    let rows: serde_json::Value = serde_json::from_str(&out(&["saliola", "--json"])).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 14);
    assert_eq!(rows[13]["key"], "P(543126)");
}

#[test]
fn rendering_conventions() {
    let english = out(&["rsk", "45231"]);
    let french = out(&["rsk", "45231", "--french"]);
    assert!(english.starts_with("P = 13/25/4\nQ = 12/34/5\n"));
    assert!(english.contains("P:\n1 3\n2 5\n4\n"));
    assert!(french.contains("P:\n4\n2 5\n1 3\n"));
}

#[test]
fn products_and_mobius() {
    assert_eq!(
        out(&["product", "--box", "13/2", "14/2/3"]).trim(),
        "1347/25/6"
    );
    assert_eq!(
        out(&["product", "--triangle", "12", "13/2"]).trim(),
        "13/25/4"
    );
    assert_eq!(out(&["mobius", "3", "123", "321"]).trim(), "1");
    assert_eq!(out(&["mobius", "3", "123", "231"]).trim(), "0");
    assert_eq!(
        out(&["mobius", "3", "--tableaux", "123", "1/2/3"]).trim(),
        "1"
    );
}

#[test]
fn poset_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.txt");
    let msg = out(&["poset", "3", "--export", path.to_str().unwrap()]);
    assert!(msg.starts_with("6 cover relations on 6 elements"));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 6);
    for line in text.lines() {
        let (a, b) = line.split_once(" < ").unwrap();
        let (a, b): (Permutation, Permutation) = (a.parse().unwrap(), b.parse().unwrap());
        assert!(a.leq_weak(&b).unwrap());
    }

    let tpath = dir.path().join("t4.txt");
    out(&[
        "poset",
        "4",
        "--tableaux",
        "--export",
        tpath.to_str().unwrap(),
    ]);
    let ttext = std::fs::read_to_string(&tpath).unwrap();
    for line in ttext.lines() {
        let (a, b) = line.split_once(" < ").unwrap();
        let _: (StandardTableau, StandardTableau) = (a.parse().unwrap(), b.parse().unwrap());
    }
    assert_eq!(ttext, out(&["poset", "4", "--tableaux"]));
}

#[test]
fn verify_reports_every_suite() {
    let text = out(&["verify", "all", "--nmax", "3"]);
    assert_eq!(text.lines().count(), hopftab::verify::SUITES.len());
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}
