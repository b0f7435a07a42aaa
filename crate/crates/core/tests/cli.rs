use std::path::Path;
use std::process::{Command, Output};

fn balance(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_balance"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn delta_and_oracle_on_small_poset() {
    let dir = tempfile::tempdir().unwrap();
    let e = write(dir.path(), "e.txt", "# a < b, c free\nposet 3\nrel 0 1\n");
    for method in ["grid", "oracle", "both"] {
        let out = balance(&["delta", &e, "--method", method]);
        assert_eq!(out.status.code(), Some(0), "{method}");
        assert!(stdout(&out).starts_with("delta = 1/3"), "{}", stdout(&out));
    }
    let out = balance(&["oracle", &e]);
    assert_eq!(stdout(&out).trim(), "extensions = 3");

    let out = balance(&["--json", "delta", &e]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["delta"], "1/3");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cyclic = write(dir.path(), "bad.txt", "poset 2\nrel 0 1\nrel 1 0\n");
    assert_eq!(balance(&["delta", &cyclic]).status.code(), Some(1));
    assert_eq!(balance(&["delta", "/no/such/file"]).status.code(), Some(1));
    assert_eq!(balance(&["no-such-command"]).status.code(), Some(1));
    let wide = write(dir.path(), "wide.txt", "poset 3\n");
    assert_eq!(balance(&["delta", &wide]).status.code(), Some(1));
    assert_eq!(
        balance(&["delta", &wide, "--method", "oracle"])
            .status
            .code(),
        Some(0)
    );

    // A cache line contradicting the recomputation is bad input, not falsified math.
    let key = {
        let out = balance(&["search", "--max-size", "3"]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        let line = text
            .lines()
            .find(|l| l.ends_with("\t1"))
            .expect("an Aigner poset")
            .to_string();
        line.split('\t').next().unwrap().to_string()
    };
    let cache = write(dir.path(), "cache.tsv", &format!("{key}\t1/3\t0\n"));
    let out = balance(&["search", "--max-size", "3", "--cache", &cache]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cached Aigner flag"));
}

#[test]
fn search_output_independent_of_jobs() {
    let one = balance(&["search", "--max-size", "7", "--jobs", "1"]);
    let four = balance(&["search", "--max-size", "7", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert!(stdout(&one).contains("# posets 343\n"));
}

#[test]
fn cached_search_matches_fresh() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.tsv");
    let cache = cache.to_str().unwrap();
    let fresh = balance(&["search", "--max-size", "6"]);
    let first = balance(&["search", "--max-size", "6", "--cache", cache]);
    let second = balance(&["search", "--max-size", "6", "--cache", cache]);
    let strip = |o: &Output| {
        stdout(o)
            .lines()
            .filter(|l| !l.contains("cache"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&fresh), strip(&first));
    assert_eq!(strip(&fresh), strip(&second));
}

#[test]
fn tn_and_cases() {
    let out = balance(&["tn", "--n", "2", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("delta > beta: PASS"));
    let out = balance(&["verify-appendix", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().all(|l| !l.contains("FAIL")));
    let out = balance(&["verify-cases"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out)
            .lines()
            .filter(|l| l.starts_with("CASE") && l.ends_with("PASS"))
            .count(),
        9
    );
}
