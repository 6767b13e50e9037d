use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use caring_core::colorings::{
    binary_four_color_rounds, encode_rounds_to_ternary, hamiltonian_decomposition_coloring,
    paired_one_factorization_coloring,
};
use caring_core::designs::{kts_coloring, kts_power_of_three};
use caring_core::io::{read_coloring, read_kts, read_rounds};

fn caring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_caring"))
        .args(args)
        .env_remove("CARING_BUDGET_SECONDS")
        .output()
        .expect("binary runs")
}

fn caring_with_stdin(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_caring"))
        .args(args)
        .env_remove("CARING_BUDGET_SECONDS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn constructed_kts_pipes_into_verify() {
    let built = caring(&["construct", "kts", "--t", "3"]);
    assert!(built.status.success());
    let checked = caring_with_stdin(&["verify", "--pattern", "P4", "--caring"], &built.stdout);
    assert_eq!(checked.status.code(), Some(0), "{}", String::from_utf8_lossy(&checked.stderr));
    let report = json(&checked);
    assert_eq!(report["report"]["passed"], true);
    assert_eq!(report["report"]["n"], 27);
    assert_eq!(report["report"]["subsets_checked"], 17550);
    assert_eq!(report["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn missing_input_is_a_usage_error() {
    let o = caring(&["verify", "--pattern", "P4", "--rounds-in", "garbage.path"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    let file = data("grotzsch28.cert");
    for args in [
        vec!["verify", "--caring", "--mono", "--input", &file],
        vec!["verify", "--input", &file],
        vec!["construct", "ham", "--n", "8"],
        vec!["construct", "kts"],
        vec!["search", "b", "--n", "7..4"],
        vec!["search", "b", "--n", "9", "--pattern", "K3"],
        vec!["capacity", "--graph", "Q5", "--power", "2"],
        vec!["capacity", "--graph", "C5", "--power", "2", "--certificate", &file],
        vec!["capacity", "bound", "--graph", "grotzsch", "--power", "5"],
        vec!["frobnicate"],
    ] {
        assert_eq!(caring(&args).status.code(), Some(2), "{args:?}");
    }
    let parse = caring_with_stdin(&["verify", "caring"], b"4 1 2\n0 1 0 1 0 7\n");
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("line 2"));
}

#[test]
fn bad_kirkman_system_fails_with_witness() {
    let mut fixture = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    fixture.push("../core/tests/data/kts15_pg32.kts");
    let f = fixture.to_string_lossy().into_owned();
    let good = caring(&["verify", "kts-good", "--input", &f]);
    assert_eq!(good.status.code(), Some(1));
    assert_eq!(json(&good)["report"]["witness"], serde_json::json!([0, 3, 8, 14]));
    let rainbow = caring(&["verify", "--rainbow", "--pattern", "P4", "--input", &f]);
    assert_eq!(rainbow.status.code(), Some(1));
    assert_eq!(json(&rainbow)["report"]["witness"]["subset"], serde_json::json!([0, 3, 8, 14]));
    let mono = caring(&["verify", "mono", "--pattern", "P4", "--input", &f]);
    assert_eq!(mono.status.code(), Some(0));
}

#[test]
fn identical_runs_give_identical_bytes() {
    let runs: [&[&str]; 4] = [
        &["search", "b", "--n", "4..6", "--pattern", "K13", "--reproducible"],
        &["search", "ramsey", "--n", "3..6", "--k", "2", "--reproducible"],
        &["capacity", "clique", "--graph", "C5", "--power", "3"],
        &["verify", "rounds-p4", "--input", "-"],
    ];
    let rounds = caring(&["construct", "rounds", "--n", "16"]).stdout;
    for args in runs {
        let one = caring_with_stdin(args, &rounds);
        let mut with_workers = vec!["--workers", "1"];
        with_workers.extend_from_slice(args);
        let two = caring_with_stdin(&with_workers, &rounds);
        assert_eq!(one.status.code(), Some(0), "{args:?}");
        assert_eq!(one.stdout, two.stdout, "{args:?}");
        assert!(!one.stdout.is_empty());
    }
}

#[test]
fn constructions_round_trip() {
    let kts = caring(&["construct", "kts", "--t", "2"]);
    assert_eq!(read_kts(&stdout(&kts)).unwrap(), kts_power_of_three(2).unwrap());
    let kc = caring(&["construct", "kts", "--t", "2", "--coloring"]);
    assert_eq!(
        read_coloring(&stdout(&kc)).unwrap(),
        kts_coloring(&kts_power_of_three(2).unwrap()).unwrap()
    );
    let ham = caring(&["construct", "ham", "--n", "11"]);
    assert_eq!(read_coloring(&stdout(&ham)).unwrap(), hamiltonian_decomposition_coloring(11).unwrap());
    let one = caring(&["construct", "onefact", "--n", "10"]);
    assert_eq!(read_coloring(&stdout(&one)).unwrap(), paired_one_factorization_coloring(10).unwrap());
    let four = binary_four_color_rounds(13).unwrap();
    let r4 = caring(&["construct", "rounds", "--n", "13"]);
    assert_eq!(read_rounds(&stdout(&r4)).unwrap(), four);
    let r3 = caring(&["construct", "rounds", "--n", "13", "--encoding", "ternary"]);
    assert_eq!(read_rounds(&stdout(&r3)).unwrap(), encode_rounds_to_ternary(&four).unwrap());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.txt");
    let p = path.to_string_lossy();
    let written = caring(&["construct", "rounds", "--n", "8", "--rounds-out", &p]);
    assert!(written.status.success() && written.stdout.is_empty());
    let verified = caring(&["verify", "--rounds-p4", "--rounds-in", &p]);
    assert_eq!(verified.status.code(), Some(0));
    assert!(json(&verified)["report"]["min_rainbow_witnesses"].as_u64().unwrap() >= 4);
    let ternary = caring(&["construct", "rounds", "--n", "8", "--encoding", "ternary"]);
    let tri = caring_with_stdin(&["verify", "rounds-triangle", "--required", "3"], &ternary.stdout);
    assert_eq!(tri.status.code(), Some(0));
}

#[test]
fn three_color_labels_fail_on_the_cube() {
    let o = caring(&["construct", "rounds", "--n", "8", "--encoding", "three"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn certificate_gives_the_grotzsch_bound() {
    let cert = data("grotzsch28.cert");
    let o = caring(&["capacity", "--graph", "grotzsch", "--power", "4", "--certificate", &cert]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("\"bound\": 2.3003"), "{text}");
    let r = json(&o);
    assert_eq!(r["report"]["clique_size"], 28);
    assert_eq!(r["report"]["verified_pairs"], 378);
    assert_eq!(r["report"]["exact"], false);

    let bad = caring_with_stdin(&["capacity", "certify", "--certificate", "-"], b"C5^2\n00\n22\n");
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("not adjacent"));
}

#[test]
fn solver_clique_certificate_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.cert");
    let p = path.to_string_lossy();
    let o = caring(&["capacity", "clique", "--graph", "C5", "--power", "2", "--out", &p]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["report"]["clique"], serde_json::json!(["00", "12", "24", "31", "43"]));
    let again = caring(&["capacity", "certify", "--certificate", &p]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(json(&again)["report"]["clique_size"], 5);
}

#[test]
fn exhausted_budgets_exit_3() {
    let o = caring(&["search", "ramsey", "--n", "16", "--k", "3", "--budget-seconds", "0.05"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("parameter,n,kind,value,nodes,seconds"));
    let env = Command::new(env!("CARGO_BIN_EXE_caring"))
        .args(["search", "ramsey", "--n", "16", "--k", "3"])
        .env("CARING_BUDGET_SECONDS", "0.05")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));
    let clique = caring(&["capacity", "bound", "--graph", "C5", "--power", "4", "--node-cap", "10"]);
    assert_eq!(clique.status.code(), Some(3));
    assert_eq!(json(&clique)["report"]["exact"], false);
}

#[test]
fn search_writes_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_string_lossy();
    let o = caring(&["search", "g", "--n", "5", "--pattern", "P4", "--witness-dir", &d]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("g,5,P4,4,"));
    let w = std::fs::read_to_string(dir.path().join("g_P4_n5.txt")).unwrap();
    let check = caring_with_stdin(&["verify", "caring", "--pattern", "P4"], w.as_bytes());
    assert_eq!(check.status.code(), Some(0));
    let f = caring(&["search", "f", "--n", "4..5", "--q", "6", "--reproducible"]);
    let rows: Vec<String> = stdout(&f).lines().map(str::to_string).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[1].starts_with("f,4,p4q6,6,") && rows[1].ends_with(','));
    assert!(rows[2].starts_with("f,5,p4q6,10,"));
}
