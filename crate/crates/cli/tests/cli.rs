use std::path::Path;
use std::process::{Command, Output};

use nubrick::export::{export_realization, RealizationBundle};
use nubrick::grid::FerrersRegion;

fn nubrick(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nubrick")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn tree_count(path: &str) -> usize {
    let out = nubrick(&["trees", path]);
    assert!(out.status.success());
    stdout(&out).lines().filter(|l| l.starts_with('T')).count()
}

#[test]
fn exit_codes() {
    assert_eq!(nubrick(&["trees", "ENX"]).status.code(), Some(1));
    assert_eq!(nubrick(&["project", "NENNE"]).status.code(), Some(1));
    assert_eq!(nubrick(&["project", "ENEEN"]).status.code(), Some(1));
    assert_eq!(nubrick(&["check", "EEEENNNN", "--max-size", "12"]).status.code(), Some(1));
    assert_eq!(nubrick(&["check", "ENEEN"]).status.code(), Some(0));
    let err = String::from_utf8(nubrick(&["trees", "ENX"]).stderr).unwrap();
    assert!(err.starts_with("error: "), "{err}");
}

#[test]
fn counts() {
    assert_eq!(tree_count("ENEEN"), 7);
    assert_eq!(tree_count("N"), 1);
    assert_eq!(tree_count("EEN"), 3);
}

#[test]
fn dot_output() {
    let out = stdout(&nubrick(&["lattice", "ENEEN", "--dot"]));
    assert!(out.starts_with("digraph"));
    let edges = out.lines().filter(|l| l.contains("->")).count();
    let nodes = out.lines().filter(|l| l.trim_start().starts_with('T') && !l.contains("->")).count();
    assert_eq!(nodes, 7);
    let table = stdout(&nubrick(&["lattice", "ENEEN"]));
    assert_eq!(edges, table.lines().filter(|l| l.contains("->")).count());
    let chain = stdout(&nubrick(&["lattice", "EEN", "--dot"]));
    assert_eq!(chain.lines().filter(|l| l.contains("->")).count(), 2);
}

#[test]
fn trivial_paths() {
    let out = stdout(&nubrick(&["brick", "N"]));
    assert!(out.lines().next().unwrap().starts_with("T0: "));
    assert_eq!(out.lines().filter(|l| l.starts_with('T')).count(), 1);
    let check = nubrick(&["check", "E"]);
    assert!(check.status.success(), "{}", stdout(&check));
}

#[test]
fn normalized_projection() {
    let out = nubrick(&["--normalize", "project", "ENEEN"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with('T')).count(), 7);
    assert!(text.lines().any(|l| l.ends_with("y = (0,0)")));
}

#[test]
fn mesh_export() {
    let dir = tempfile::tempdir().unwrap();
    let off = dir.path().join("r.off");
    let out = nubrick(&["project", "NENENEENE", "--off", off.to_str().unwrap()]);
    assert!(out.status.success());
    let mesh = std::fs::read_to_string(&off).unwrap();
    let mut lines = mesh.lines();
    assert_eq!(lines.next(), Some("OFF"));
    let counts: Vec<usize> = lines.next().unwrap().split_whitespace().map(|s| s.parse().unwrap()).collect();
    assert_eq!(counts[0], 19);
    assert!(mesh.lines().skip(2).take(19).all(|l| l.split_whitespace().count() == 3));
}

fn file_bytes(args: &[&str], target: &Path) -> Vec<u8> {
    assert!(nubrick(args).status.success());
    std::fs::read(target).unwrap()
}

#[test]
fn deterministic_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let off = dir.path().join("r.off");
    let dot = dir.path().join("r.dot");
    let (j, o, d) = (json.to_str().unwrap(), off.to_str().unwrap(), dot.to_str().unwrap());
    let runs = [
        (vec!["project", "NENEENE", "--json", j], &json),
        (vec!["project", "NENEENE", "--off", o], &off),
        (vec!["lattice", "NENEENE", "--dot", d], &dot),
    ];
    for (args, target) in runs {
        let a = file_bytes(&args, target);
        let b = file_bytes(&args, target);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn json_round_trip() {
    let out = nubrick(&["--format", "json", "project", "NENEENE"]);
    assert!(out.status.success());
    let bundle: RealizationBundle = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(bundle, export_realization(&FerrersRegion::new(&"NENEENE".parse().unwrap())));
}

#[test]
fn unprojected_fallback() {
    let out = nubrick(&["project", "ENEEN", "--unprojected"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("unprojected"));
    assert!(text.lines().any(|l| l == "T4: b = -(10,8,5,7,1,0)"));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("warning: "));
}
