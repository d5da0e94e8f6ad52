//! Drives the `monophonic` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

use monophonic_cli::format::parse_graph;
use monophonic_core::generators::kneser;

fn monophonic(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_monophonic"));
    cmd.args(args).env_remove("MONOPHONIC_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("MONOPHONIC_CACHE_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

const GOOD: &str = r#"
[[claim]]
id = "petersen"
statement = "m(K(5,2)) = 3"
graph = "kneser:5,2"
op = "monophonic_number"
expect = 3

[[claim]]
id = "k3k2"
statement = "K_3 x K_2 is strongly 2-monophonic"
graph = "hamming:3,2"
op = "strongly_2_monophonic"
expect = true

[[claim]]
id = "johnson"
statement = "J(5,2) witnesses"
graph = "johnson:5,2"
op = "johnson_witness_sweep"
expect = true

[[claim]]
id = "oracle"
statement = "oracle agreement on 4-vertex graphs"
op = "oracle_equivalence"
args = { all_n = 4, random = 10, seed = 3 }
expect = true
"#;

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

/// The machine report with every `runtime_ms` line removed.
fn without_runtimes(report: &str) -> String {
    report.lines().filter(|l| !l.contains("\"runtime_ms\"")).collect::<Vec<_>>().join("\n")
}

#[test]
fn generated_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("petersen.txt");
    let o = monophonic(&["generate", "kneser", "5", "2", "--out", file.to_str().unwrap()], None);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&file).unwrap();
    assert_eq!(parse_graph(&text).unwrap(), kneser(5, 2).unwrap());
    let flags = monophonic(&["generate", "--family", "kneser", "--n", "5", "--r", "2"], None);
    assert_eq!(stdout(&flags), text);
    let o = monophonic(&["mono-number", "--file", file.to_str().unwrap()], None);
    assert_eq!(stdout(&o).lines().next(), Some("3"));
}

#[test]
fn query_commands() {
    let o = monophonic(&["s2m-check", "--family", "kneser", "--n", "7", "--r", "3", "--expect", "true"], None);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "true"));
    let o = monophonic(&["mono-number", "--family", "kneser", "--n", "6", "--r", "2"], None);
    assert_eq!(stdout(&o).lines().next(), Some("3"));
    let o = monophonic(&["mono-number", "--graph", "kneser:6,2", "--expect", "4"], None);
    assert_eq!(code(&o), 1);
    let o = monophonic(&["s2m-check", "--graph", "product:path:3*complete:2", "--format", "machine"], None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["strongly_2_monophonic"], false);
    assert!(v["counterexample"].is_array());
    let o = monophonic(&["interval", "--graph", "kneser:5,2", "--x", "1,2", "--y", "1,3", "--format", "machine"], None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let members: Vec<&str> = v["members"].as_array().unwrap().iter().map(|m| m["vertex"].as_str().unwrap()).collect();
    assert!(!members.contains(&"{2,3}"));
    let o = monophonic(&["analyze", "--family", "cycle", "--n", "6"], None);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("chordal false"));
}

#[test]
fn path_builders() {
    let o = monophonic(
        &["path", "kneser", "--x", "1,2,3", "--y", "1,4,5", "--via", "2,4,6", "--r", "3", "--format", "machine"],
        None,
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["induced"], true);
    assert_eq!(v["fallback"], false);
    let path: Vec<&str> = v["path"].as_array().unwrap().iter().map(|p| p.as_str().unwrap()).collect();
    assert_eq!((path[0], *path.last().unwrap()), ("{1,2,3}", "{1,4,5}"));
    assert!(path.contains(&"{2,4,6}"));

    let runs: [&[&str]; 3] = [
        &["path", "johnson", "--n", "6", "--r", "3", "--x", "1,2,3", "--y", "4,5,6", "--via", "1,4,5"],
        &["path", "product", "--left", "cycle:5", "--right", "complete:2", "--x", "0,0", "--y", "2,1", "--via", "4,0"],
        &["path", "lift", "--n", "5", "--r", "2", "--set", "1,2", "--set", "1,3", "--set", "2,3", "--via", "4,6"],
    ];
    for args in runs {
        let o = monophonic(&[args, &["--format", "machine"]].concat(), None);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["induced"], true, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.toml", GOOD);
    assert_eq!(code(&monophonic(&["verify-claims", &good], None)), 0);

    let bad = write(dir.path(), "bad.toml", &GOOD.replace("expect = 3", "expect = 4"));
    let o = monophonic(&["verify-claims", &bad], None);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("fails"));

    let unknown = write(dir.path(), "unknown.toml", &GOOD.replace("op = \"monophonic_number\"", "op = \"colouring\""));
    assert_eq!(code(&monophonic(&["verify-claims", &unknown], None)), 2);

    let broken = write(dir.path(), "broken.txt", "3 1\n0 3\n");
    let o = monophonic(&["analyze", "--file", &broken], None);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    assert_eq!(code(&monophonic(&["no-such-command"], None)), 2);
    assert_eq!(code(&monophonic(&["s2m-check", "--family", "kneser", "--n", "7"], None)), 2);
    assert_eq!(code(&monophonic(&["s2m-check", "--graph", "kneser:7,3", "--budget", "1"], None)), 1);
}

#[test]
fn reports_do_not_depend_on_the_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.toml", GOOD);
    let run = |jobs: &str| {
        let o = monophonic(&["verify-claims", &m, "--jobs", jobs, "--format", "machine"], None);
        assert_eq!(code(&o), 0);
        without_runtimes(&stdout(&o))
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    assert_eq!(one, run("3"));
}

#[test]
fn cached_and_fresh_reports_agree() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let m = write(dir.path(), "m.toml", GOOD);
    let out = dir.path().join("report.json");
    let run = |cache: Option<&Path>| {
        let o = monophonic(&["verify-claims", &m, "--out", out.to_str().unwrap()], cache);
        assert_eq!(code(&o), 0);
        without_runtimes(&std::fs::read_to_string(&out).unwrap())
    };
    let fresh = run(Some(&cache));
    let lines = std::fs::read_to_string(cache.join("results.jsonl")).unwrap().lines().count();
    assert_eq!(lines, 4);
    let cached = run(Some(&cache));
    assert_eq!(std::fs::read_to_string(cache.join("results.jsonl")).unwrap().lines().count(), lines);
    assert_eq!(fresh, cached);
    std::fs::remove_dir_all(&cache).unwrap();
    assert_eq!(run(Some(&cache)), fresh);
    assert_eq!(run(None), fresh);
}
