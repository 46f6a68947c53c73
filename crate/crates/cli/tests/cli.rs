use std::process::{Command, Output};

use curvelab_cli::ExperimentSpec;

fn curvelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvelab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(text.as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

/// Report without the timing block.
fn stable(o: &Output) -> serde_json::Value {
    let mut v = json(o);
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn np_chain_for_genus_two() {
    let o = curvelab(&["np", "chain", "--g", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows[0], ["g", "from", "to", "length"]);
    assert_eq!(rows[1][3], "2");
}

#[test]
fn malformed_arguments_exit_2() {
    for args in [
        &["np", "chain"][..],
        &["prank", "--p", "5", "--f", "x^5 +* 1"],
        &["prank", "--p", "4", "--f", "x^5+1"],
        &["np", "chain", "--g", "2", "--budget", "0"],
        &["triples", "--p-range", "20..7", "--predicate", "ordinary"],
        &[
            "pagot", "family", "--p", "3", "--n", "3", "--params", "1,2,g",
        ],
        &["frobnicate"],
    ] {
        let o = curvelab(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn budget_exhaustion_exits_3_with_marker() {
    let o = curvelab(&[
        "pagot", "search", "--p", "3", "--m", "5", "--ext", "2", "--budget", "10",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).lines().any(|l| l.starts_with("# EXHAUSTED:")));
    let o = curvelab(&[
        "pagot", "search", "--p", "3", "--m", "5", "--ext", "2", "--budget", "10", "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(json(&o)["status"]["budget-exhausted"]["reason"].is_string());
}

#[test]
fn exhausted_search_is_not_a_budget_failure() {
    let o = curvelab(&["pagot", "search", "--p", "3", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    let verdict = rows[0].iter().position(|c| c == "verdict").unwrap();
    assert_eq!(rows[1][verdict], "EXHAUSTED");
    assert!(!stdout(&o).contains("# EXHAUSTED:"));
}

#[test]
fn json_results_are_reproducible_across_worker_counts() {
    for args in [
        &["pagot", "search", "--p", "3", "--m", "5", "--ext", "2"][..],
        &[
            "nielsen",
            "--group",
            "A5",
            "--classes",
            "3cyc^4",
            "--orbits",
        ],
        &["witness-table", "--p", "3", "--g", "3", "--seed", "7"],
    ] {
        let run = |workers: &str| {
            let mut a = args.to_vec();
            a.extend(["--format", "json", "--workers", workers]);
            let o = curvelab(&a);
            assert_eq!(o.status.code(), Some(0), "{args:?}");
            let mut v = stable(&o);
            v["spec"]["global"]["workers"] = serde_json::Value::Null;
            serde_json::to_string(&v).unwrap()
        };
        let one = run("1");
        assert_eq!(one, run("1"), "{args:?}");
        assert_eq!(one, run("4"), "{args:?}");
    }
}

#[test]
fn spec_round_trips_and_rejects_unknown_fields() {
    let o = curvelab(&["prank", "--p", "5", "--f", "x^5+x+1", "--format", "json"]);
    let v = json(&o);
    let spec = serde_json::to_string(&v["spec"]).unwrap();
    let parsed = ExperimentSpec::from_json(&spec).unwrap();
    let report = curvelab_cli::run(&parsed).unwrap();
    assert_eq!(serde_json::to_value(&report.results).unwrap(), v["results"]);

    let mut extra = v["spec"].clone();
    extra["command"]["args"]["q"] = 3.into();
    assert!(ExperimentSpec::from_json(&extra.to_string()).is_err());
    let mut extra = v["spec"].clone();
    extra["seed"] = 3.into();
    assert!(ExperimentSpec::from_json(&extra.to_string()).is_err());
}

#[test]
fn prank_reports_matrix_and_invariants() {
    let o = curvelab(&[
        "prank",
        "--p",
        "5",
        "--f",
        "x^5+x+1",
        "--matrices",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let cols = v["results"]["columns"].as_array().unwrap();
    assert_eq!(cols[3], "p_rank");
    assert_eq!(v["results"]["rows"][0][2], "2");
    assert_eq!(
        v["results"]["detail"]["cartier_manin"]
            .as_array()
            .unwrap()
            .len(),
        2
    );
    assert!(v["provenance"]["fields"][0]
        .as_str()
        .unwrap()
        .starts_with("GF(5^1)"));
}

#[test]
fn triples_rows_carry_timings() {
    let o = curvelab(&["triples", "--p-range", "7..20", "--predicate", "ordinary"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows[0], ["p", "count", "witness", "wall_ms"]);
    let primes: Vec<&str> = rows[1..].iter().map(|r| r[0].as_str()).collect();
    assert_eq!(primes, ["7", "11", "13", "17", "19"]);
}

#[test]
fn ss_lambdas_count() {
    let o = curvelab(&["ss-lambdas", "--p", "13"]);
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows[1][2], "6");
    assert_eq!(rows[1][2], rows[1][3]);
    assert_eq!(rows[1][4], "true");
}

#[test]
fn pagot_verify_reads_forms_file() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    std::fs::write(
        &good,
        r#"{"p":3,"k":1,"poles":["0","1","2"],"residues":[1,1,1]}"#,
    )
    .unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"[{"p":3,"k":1,"poles":["0","1","2"],"residues":[1,1,2]}]"#,
    )
    .unwrap();
    let verdict = |path: &std::path::Path| {
        let o = curvelab(&["pagot", "verify", "--file", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        csv_rows(&stdout(&o))[1][2].clone()
    };
    assert_eq!(verdict(&good), "PASS");
    assert_eq!(verdict(&bad), "FAIL");
    let missing = dir.path().join("missing.json");
    let o = curvelab(&["pagot", "verify", "--file", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn np_enum_writes_dot_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g3.dot");
    let out = dir.path().join("g3.csv");
    let o = curvelab(&[
        "np",
        "enum",
        "--g",
        "3",
        "--dot",
        dot.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let graph = std::fs::read_to_string(&dot).unwrap();
    assert!(graph.starts_with("digraph"));
    let rows = csv_rows(&std::fs::read_to_string(&out).unwrap());
    // five symmetric polygons in genus 3
    assert_eq!(rows.len(), 1 + 5);
    assert_eq!(graph.matches("->").count(), 4);
}

#[test]
fn nielsen_orbits_for_a5() {
    let o = curvelab(&[
        "nielsen",
        "--group",
        "A5",
        "--classes",
        "3cyc^5",
        "--orbits",
        "--genus",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    let col = |name: &str| rows[0].iter().position(|c| c == name).unwrap();
    assert_eq!(rows[1][col("tuples")], "41040");
    assert_eq!(rows[1][col("genus")], "1");
    let sizes: usize = rows[1][col("orbit_sizes")]
        .split(' ')
        .map(|s| s.parse::<usize>().unwrap())
        .sum();
    assert_eq!(sizes, 41040 / 60);
}

#[test]
fn nielsen_accepts_generators() {
    let o = curvelab(&["nielsen", "--group", "(1,2,3);(1,2)", "--classes", "2cyc^4"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows[1][1], "6");
}

#[test]
fn dm_sum_and_preset() {
    let o = curvelab(&["dm", "--sum", "M,Zp+mup"]);
    let rows = csv_rows(&stdout(&o));
    assert_eq!(&rows[1][1..4], ["4", "1", "1"]);
    let o = curvelab(&["dm", "--preset", "Q"]);
    assert_eq!(o.status.code(), Some(0));
    let o = curvelab(&["dm", "--preset", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn as_aut_quadratic_case() {
    let o = curvelab(&["as-aut", "--p", "3", "--f", "x^4", "--ext", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    let col = |name: &str| rows[0].iter().position(|c| c == name).unwrap();
    assert_eq!(rows[1][col("genus")], "3");
}

#[test]
fn klein_reports_three_quotients() {
    let o = curvelab(&["klein", "--p", "5", "--f1", "x^3+x+1", "--f2", "x^3+2"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    assert!(rows.len() >= 4);
}

#[test]
fn zeta_agrees_with_prank() {
    let z = curvelab(&["zeta", "--p", "7", "--f", "x^5+3*x^2+1"]);
    let p = curvelab(&["prank", "--p", "7", "--f", "x^5+3*x^2+1"]);
    let zr = csv_rows(&stdout(&z));
    let pr = csv_rows(&stdout(&p));
    let zc = zr[0].iter().position(|c| c == "p_rank").unwrap();
    assert_eq!(zr[1][zc], pr[1][3]);
}

#[test]
fn accept_exit_codes() {
    let o = curvelab(&["accept", "--only", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
    let o = curvelab(&["accept", "--only", "1", "--inject-fault", "hasse"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}
