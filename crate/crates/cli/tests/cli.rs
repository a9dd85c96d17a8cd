use std::path::PathBuf;

use assert_cmd::Command;
use mdhom::bdiagram::FramedDiagram;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn mdhom() -> Command {
    Command::cargo_bin("mdhom").unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = mdhom().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn path(name: &str) -> String {
    data(name).display().to_string()
}

#[test]
fn compare_reducible_curves() {
    let (c, d) = (path("C.json"), path("D.json"));
    assert_eq!(stdout_of(&["compare", &c, &d]), "NotDistinguished\n");
    assert_eq!(stdout_of(&["compare", &c, &d, "--framed"]), "framed: false\n");
    assert_eq!(stdout_of(&["compare", &c, &c, "--framed"]), "framed: true\n");
    let e = path("eggers_example.json");
    assert_eq!(stdout_of(&["compare", &c, &e]), "Distinguished\n");
}

#[test]
fn jumps_of_eggers_example() {
    assert_eq!(
        stdout_of(&["jumps", &path("eggers_example.json")]),
        "1\n3/2\n5/2\n11/4\n37/12\n"
    );
}

#[test]
fn compute_at_level() {
    let out = stdout_of(&["compute", &path("C.json"), "--at", "3"]);
    assert!(out.starts_with("b = 3\nrank0 = 5\nrank1 = 5\n"), "{out}");
    assert!(out.contains("h1(inf -> 3):\n[1 0 0 0 0]"), "{out}");
    assert!(out.contains("h1(3 -> 1):\n[2 1 0 0 0]\n[0 0 1 1 1]\n"), "{out}");
    let below = stdout_of(&["compute", &path("cusp.json"), "--at", "1/2"]);
    assert!(below.starts_with("b = 1/2\nrank0 = 1\nrank1 = 0\n"), "{below}");
    assert!(!below.contains("-> 1)"));
}

#[test]
fn compute_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("framed.json");
    let table = stdout_of(&[
        "compute",
        &path("eggers_example.json"),
        "--json",
        &out.display().to_string(),
    ]);
    assert!(table.starts_with("interval"));
    let f = FramedDiagram::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(f.inf_basis(), ["C1", "C2", "C3", "C4"]);
    assert_eq!(f.deg0().ranks(), [1, 1, 2, 3, 3, 4]);
}

#[test]
fn tree_formats() {
    let dot = stdout_of(&["tree", &path("cusp.json")]);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot, stdout_of(&["tree", &path("cusp.json"), "--dot"]));
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&["tree", &path("cusp.json"), "--json"])).unwrap();
    assert_eq!(json["leaves"]["2"], "C1");
    mdhom()
        .args(["tree", &path("cusp.json"), "--dot", "--json"])
        .assert()
        .code(1);
}

#[test]
fn multiplicities_table_and_json() {
    assert_eq!(
        stdout_of(&["multiplicities", &path("C.json")]),
        "T1  y = 1*x  total 3  C1:2 C2:1\nT2  y = 2*x  total 3  C3:1 C4:1 C5:1\n"
    );
    let v: serde_json::Value =
        serde_json::from_str(&stdout_of(&["multiplicities", &path("cusp.json"), "--json"])).unwrap();
    assert_eq!(v["totals"]["T1"], 2);
}

#[test]
fn oracle_passes() {
    let out = stdout_of(&["oracle", &path("eggers_example.json")]);
    assert!(out.ends_with("1 curves, 0 failed\n"), "{out}");
    let out = stdout_of(&["oracle", "--random", "5", "--seed", "9"]);
    assert!(out.ends_with("5 curves, 0 failed\n"));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&["oracle", &path("D.json"), "--json"])).unwrap();
    assert_eq!(v[0]["passed"], true);
    mdhom().arg("oracle").assert().code(1);
}

#[test]
fn cone_closed_forms() {
    assert_eq!(
        stdout_of(&["cone", &path("circle.json"), "--b", "3/2"]),
        "b = 3/2\ndegree  below  at_b  inf\n     0      1     1    1\n     1      0     1    1\n"
    );
    let rel = stdout_of(&["cone", &path("circle_rel_vertex.json"), "--b", "2"]);
    assert!(rel.contains("     0      0     0    0\n"), "{rel}");
    mdhom()
        .args(["cone", &path("circle.json"), "--b", "1/2"])
        .assert()
        .code(1);
    mdhom()
        .args(["cone", &path("circle.json"), "--b", "x"])
        .assert()
        .code(1);
}

#[test]
fn input_errors_exit_one() {
    mdhom().args(["jumps", "/nonexistent/curve.json"]).assert().code(1);
    mdhom().arg("frobnicate").assert().code(1);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"branches":[{"id":"A","series":"x^(1/2)"}]}"#).unwrap();
    let out = mdhom().args(["jumps", &bad.display().to_string()]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    mdhom()
        .args(["compute", &path("C.json"), "--at", "zero"])
        .assert()
        .code(1);
    mdhom().arg("--help").assert().code(0);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["compute".to_string(), path("eggers_example.json")],
        vec!["tree".to_string(), path("C.json"), "--json".to_string()],
        vec![
            "oracle".to_string(),
            "--random".to_string(),
            "3".to_string(),
            "--json".to_string(),
        ],
    ] {
        let a = mdhom().args(&args).output().unwrap().stdout;
        let b = mdhom().args(&args).output().unwrap().stdout;
        assert_eq!(a, b, "{args:?}");
    }
}
