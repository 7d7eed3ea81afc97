use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::Arc;

use pqgroups::format::{parse_group, read_group_file, write_group_file};
use pqgroups::morphisms::Iso;
use pqgroups::products::cyclic_semidirect;
use pqgroups::{cyclic_group, symmetric_group, FiniteGroup};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pqgroups")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

struct Files {
    dir: tempfile::TempDir,
}

impl Files {
    fn new() -> Self {
        let f = Files { dir: tempfile::tempdir().unwrap() };
        write_group_file(f.path("s3"), &symmetric_group(3).unwrap()).unwrap();
        write_group_file(f.path("c6"), &cyclic_group(6).unwrap()).unwrap();
        f
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(format!("{name}.cayley"))
    }

    fn arg(&self, name: &str) -> String {
        self.path(name).display().to_string()
    }
}

fn map_line(text: &str) -> Vec<usize> {
    let line = text.lines().find_map(|l| l.strip_prefix("map: ")).unwrap();
    line.split(' ').map(|x| x.parse().unwrap()).collect()
}

#[test]
fn iso_reports_reason() {
    let f = Files::new();
    let o = run(&["iso", &f.arg("c6"), &f.arg("s3")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not isomorphic: element-order multisets differ\n");

    let o = run(&["iso", &f.arg("s3"), &f.arg("s3")]);
    assert_eq!(o.status.code(), Some(0));
    let s3 = Arc::new(symmetric_group(3).unwrap());
    Iso::from_bijection(s3.clone(), s3, map_line(&stdout(&o))).unwrap();
}

#[test]
fn classify_s3() {
    let f = Files::new();
    let o = run(&["classify", &f.arg("s3")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in ["tag: SemidirectQP", "p: 2", "q: 3", "k: 2"] {
        assert!(text.lines().any(|l| l == line), "{text}");
    }
    let s3 = Arc::new(symmetric_group(3).unwrap());
    let rep = cyclic_semidirect(3, 2, 2).unwrap().group;
    Iso::from_bijection(s3, rep, map_line(&text)).unwrap();

    let o = run(&["classify", &f.arg("s3"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["tag"], "SemidirectQP");
    assert_eq!(v["k"], 2);

    let o = run(&["classify", &f.arg("c6")]);
    assert!(stdout(&o).starts_with("tag: Cyclic\n"));
}

#[test]
fn classify_unsupported_is_negative() {
    let f = Files::new();
    write_group_file(f.path("c8"), &cyclic_group(8).unwrap()).unwrap();
    let o = run(&["classify", &f.arg("c8")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("neither p^2 nor pq"));
}

#[test]
fn construct_round_trips() {
    let f = Files::new();
    let cases: Vec<(Vec<String>, FiniteGroup)> = vec![
        (vec!["cyclic".into(), "12".into()], cyclic_group(12).unwrap()),
        (vec!["symmetric".into(), "4".into()], symmetric_group(4).unwrap()),
        (vec!["quaternion".into()], pqgroups::quaternion_group()),
        (
            vec!["sdp".into(), "7".into(), "3".into(), "--k".into(), "2".into()],
            (*cyclic_semidirect(7, 3, 2).unwrap().group).clone(),
        ),
        (
            vec!["direct".into(), f.arg("c6"), f.arg("s3")],
            (*pqgroups::products::direct_product(
                &Arc::new(cyclic_group(6).unwrap()),
                &Arc::new(symmetric_group(3).unwrap()),
            )
            .unwrap()
            .group)
                .clone(),
        ),
    ];
    for (i, (args, expected)) in cases.into_iter().enumerate() {
        let mut full = vec!["construct".to_string()];
        full.extend(args.clone());
        let refs: Vec<&str> = full.iter().map(String::as_str).collect();
        let o = run(&refs);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(parse_group(&stdout(&o)).unwrap(), expected, "{args:?}");

        let out = f.path(&format!("built{i}"));
        let mut with_out = refs.clone();
        let out_arg = out.display().to_string();
        with_out.extend(["--out", &out_arg]);
        assert_eq!(run(&with_out).status.code(), Some(0));
        assert_eq!(read_group_file(&out).unwrap(), expected);
    }
}

#[test]
fn recognize() {
    let f = Files::new();
    let o = run(&["recognize", &f.arg("s3"), "--n", "3", "--h", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("action: nontrivial\n"));

    let o = run(&["recognize", &f.arg("c6"), "--n", "2", "--h", "3", "--direct"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("action: trivial\n"));

    let o = run(&["recognize", &f.arg("s3"), "--n", "1", "--h", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not recognised: N is not normal\n");

    let o = run(&["recognize", &f.arg("s3"), "--n", "3,4", "--h", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn aut_and_enumerate() {
    let f = Files::new();
    let out = f.path("auts3");
    let o = run(&["aut", &f.arg("s3"), "--out", &out.display().to_string()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("order: 6\ncyclic: no\n"));
    assert_eq!(read_group_file(&out).unwrap().order(), 6);

    let dir = f.dir.path().join("order8");
    let o = run(&["enumerate", "8", "--out", &dir.display().to_string()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("order: 8\ncount: 5\n"));
    for k in 1..=5 {
        assert_eq!(read_group_file(dir.join(format!("order8_class{k}.cayley"))).unwrap().order(), 8);
    }
    assert!(!dir.join("order8_class6.cayley").exists());

    assert_eq!(run(&["enumerate", "21"]).status.code(), Some(2));
    let o = run(&["enumerate", "21", "--extended", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 2);
}

#[test]
fn verify_small() {
    let o = run(&["verify", "--max", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.ends_with("all orders pass\n"));
    assert_eq!(text.lines().count(), 1 + 4 + 1);
    let o = run(&["verify", "--max", "10", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
}

#[test]
fn usage_and_input_errors() {
    let f = Files::new();
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "cyclic"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "cyclic", "x"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "symmetric", "9"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "sdp", "7", "3", "--k", "3"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));

    let bad = f.path("bad");
    std::fs::write(&bad, "3\n0 1 2\n1 2 0\n2 0 0\n").unwrap();
    let o = run(&["classify", &bad.display().to_string()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "));
    let missing = Path::new("/nonexistent/x.cayley").display().to_string();
    assert_eq!(run(&["iso", &missing, &f.arg("s3")]).status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let f = Files::new();
    for args in [vec!["classify", &f.arg("s3") as &str], vec!["aut", &f.arg("s3")], vec!["enumerate", "12"]] {
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}
