use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_polysys"));
    c.env_remove("POLYSYS_RESIDUE_TABLE").env_remove("RUST_LOG");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json_ok(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        code(&out),
        0,
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .expect("array")
        .iter()
        .map(|x| x.as_str().expect("string").to_string())
        .collect()
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn generate_quad_lists_three_tuples_from_the_seed() {
    let v = json_ok(&["generate-quad", "--a", "1", "--t", "0..2"]);
    let tuples = v["tuples"].as_array().unwrap();
    assert_eq!(tuples.len(), 3);
    assert_eq!(
        strings(&tuples[0]["tuple"]),
        ["8", "5", "6", "36", "35", "2", "3"]
    );
    assert_eq!(tuples[0]["common_value"], "72");
    assert!(tuples.iter().all(|t| t["verified"] == true));
}

#[test]
fn generate_param_finds_both_residues() {
    let v = json_ok(&["generate-param", "--a", "2", "--m", "1", "--n", "4"]);
    assert_eq!(v["modulus"], "1156");
    assert_eq!(strings(&v["residues"]), ["416", "448"]);
    let fams = v["families"].as_array().unwrap();
    assert_eq!(fams.len(), 2);
    for f in fams {
        assert_eq!(f["family"]["variable"], "T");
        for e in f["family"]["entries"].as_object().unwrap().values() {
            assert_eq!(strings(&e["den"]), ["1"]);
        }
    }
}

#[test]
fn verify_reports_the_common_value() {
    let v = json_ok(&["verify", "--form", "quad:1", "--tuple", "8,5,6,36,35,2,3"]);
    assert_eq!(v["common_value"], "72");
    assert_eq!(v["verdict"], true);
    assert_eq!(v["quotient"], Value::Null);

    let out = run(&["verify", "--form", "quad:1", "--tuple", "8,5,6,36,35,2,4"]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["product"], false);
    assert_eq!(v["sum"], true);
}

#[test]
fn verify_accepts_negative_and_fractional_entries() {
    let v = json_ok(&[
        "verify",
        "--form",
        "quad:1",
        "--tuple",
        "8,5,-7,36,35,2,3,-143/287,-286/287",
    ]);
    assert_eq!(v["quotient"], true);
    assert_eq!(v["verdict"], true);
}

#[test]
fn classes_listings() {
    let v = json_ok(&["classes", "5"]);
    assert_eq!(strings(&v["residues"]), ["0", "1", "4"]);
    let v = json_ok(&["classes", "145"]);
    assert_eq!(v["count"], 28);
    let expected: Vec<String> = polysys_core::pell::COVERED_MOD_145
        .iter()
        .map(|c| c.to_string())
        .collect();
    assert_eq!(strings(&v["residues"]), expected);
    let v = json_ok(&["classes", "58"]);
    assert_eq!(v["count"], 28);
    for v in [json_ok(&["classes", "5"]), json_ok(&["classes", "58"])] {
        assert!(v["source"].as_str().unwrap().starts_with("level-"));
    }
    assert_eq!(code(&run(&["classes", "7"])), 2);
}

fn round_trip(args: &[&str], name: &str) -> usize {
    let out = run(args);
    assert_eq!(
        code(&out),
        0,
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let path = scratch(name);
    fs::write(&path, &out.stdout).unwrap();
    let v = json_ok(&["verify", "--input", path.to_str().unwrap()]);
    assert_eq!(v["verdict"], true, "{args:?}");
    let n = v["checked"].as_u64().unwrap() as usize;
    assert!(n > 0);
    // each emitted tuple also passes through the literal flags
    for rep in v["reports"].as_array().unwrap() {
        let tuple = strings(&rep["tuple"]).join(",");
        let form = rep["form"].as_str().unwrap();
        let again = json_ok(&["verify", "--form", form, "--tuple", &tuple]);
        assert_eq!(again["verdict"], true);
        assert_eq!(again["common_value"], rep["common_value"]);
    }
    n
}

#[test]
fn verify_accepts_every_generated_quad_tuple() {
    for a in ["1", "-1", "2", "4", "5", "6", "9", "10", "-3", "58", "60"] {
        let probe = json_ok(&["generate-quad", "--a", a]);
        let rules = probe["rule_count"].as_u64().unwrap();
        for r in 0..rules {
            let r = r.to_string();
            let p = json_ok(&["generate-quad", "--a", a, "--rule", &r]);
            let offsets = p["rule"]["c_offsets"].as_array().unwrap().len();
            for o in 0..offsets {
                let o = o.to_string();
                let n = round_trip(
                    &[
                        "generate-quad",
                        "--a",
                        a,
                        "--t",
                        "-2..2",
                        "--rule",
                        &r,
                        "--offset",
                        &o,
                    ],
                    &format!("quad_{a}_{r}_{o}.json"),
                );
                assert_eq!(n, 5);
            }
        }
    }
}

#[test]
fn verify_accepts_every_generated_param_tuple() {
    for (a, m, n, count) in [("1", "1", "2", 2), ("2", "1", "4", 2), ("3", "1", "5", 8)] {
        let checked = round_trip(
            &[
                "generate-param",
                "--a",
                a,
                "--m",
                m,
                "--n",
                n,
                "--at",
                "-1..1",
            ],
            &format!("param_{a}_{m}_{n}.json"),
        );
        assert_eq!(checked, 3 * count);
    }
    let checked = round_trip(
        &[
            "generate-param",
            "--a",
            "1",
            "--m",
            "1",
            "--n",
            "2",
            "--k",
            "122",
        ],
        "param_k.json",
    );
    assert_eq!(checked, 1);
}

#[test]
fn verify_accepts_every_generated_rational_tuple() {
    let cases = [
        ["1", "-3", "4/5", "1/4", "3", "2"],
        ["1", "2", "2", "3", "1", "2"],
        ["-1", "5/2", "-3", "2/7", "4", "-1/3"],
        ["3/2", "1", "1/3", "5", "-2", "7"],
        ["2", "-1/2", "3", "-1", "1/5", "3/4"],
    ];
    for (i, c) in cases.iter().enumerate() {
        let n = round_trip(
            &[
                "generate-rational",
                "--a",
                c[0],
                "--k",
                c[1],
                "--t",
                c[2],
                "--w",
                c[3],
                "--q",
                c[4],
                "--m",
                c[5],
            ],
            &format!("rational_{i}.json"),
        );
        assert_eq!(n, 1);
    }
}

#[test]
fn verify_accepts_every_generated_cubic_tuple() {
    for (a, b) in [("1", "3"), ("2", "5"), ("1", "-2")] {
        let n = round_trip(
            &[
                "generate-cubic",
                "--a",
                a,
                "--b",
                b,
                "--specialize",
                "q=1",
                "--specialize",
                "q=2",
                "--specialize",
                "q=-4",
                "--specialize",
                "q=1/2",
            ],
            &format!("cubic_{a}_{b}.json"),
        );
        assert_eq!(n, 4);
    }
    let v = json_ok(&["generate-cubic", "--a", "1", "--b", "3"]);
    assert_eq!(v["family"]["variable"], "q");
    assert_eq!(v["family"]["entries"].as_object().unwrap().len(), 9);
    assert!(v["equations"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["holds"] == true));
}

#[test]
fn verify_accepts_every_search_tuple() {
    for a in ["1", "2", "-3"] {
        let n = round_trip(
            &["search", "--a", a, "--bound", "60", "--jobs", "3"],
            &format!("search_{a}.json"),
        );
        assert!(n > 0);
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let cases: [&[&str]; 4] = [
        &["generate-quad", "--a", "4", "--t", "-3..3"],
        &["generate-param", "--a", "3", "--m", "1", "--n", "5"],
        &[
            "generate-cubic",
            "--a",
            "2",
            "--b",
            "5",
            "--specialize",
            "q=3",
        ],
        &["classes", "145", "--output", "table"],
    ];
    for args in cases {
        let (x, y) = (run(args), run(args));
        assert_eq!(code(&x), 0);
        assert_eq!(x.stdout, y.stdout, "{args:?}");
    }
}

#[test]
fn search_output_does_not_depend_on_jobs() {
    let one = run(&["search", "--a", "1", "--bound", "150"]);
    for jobs in ["2", "5", "64"] {
        let many = run(&["search", "--a", "1", "--bound", "150", "--jobs", jobs]);
        assert_eq!(one.stdout, many.stdout, "jobs = {jobs}");
    }
    let v: Value = serde_json::from_slice(&one.stdout).unwrap();
    assert!(v["tuples"]
        .as_array()
        .unwrap()
        .iter()
        .any(|t| strings(&t["tuple"]) == ["8", "5", "6", "36", "35", "2", "3"]));
}

#[test]
fn exit_codes() {
    // usage errors
    for args in [
        &["generate-quad"][..],
        &["generate-quad", "--a", "x"],
        &["generate-quad", "--a", "1", "--t", "3..1"],
        &["generate-quad", "--a", "1", "--rule", "5"],
        &["generate-quad", "--a", "1", "--offset", "2"],
        &["generate-cubic", "--a", "1", "--b", "3", "--m", "1"],
        &["verify", "--form", "quad:1"],
        &["verify", "--form", "quad:0", "--tuple", "1,2,3,4,5,6,7"],
        &["verify", "--form", "quad:1", "--tuple", "1,2,3"],
        &["verify", "--input", "/nonexistent/file.json"],
        &["polygonal", "value", "--n", "12"],
        &["frobnicate"],
    ] {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
    // domain errors
    for args in [
        &["generate-quad", "--a", "0"][..],
        &["generate-quad", "--a", "7"],
        &[
            "generate-param",
            "--a",
            "1",
            "--m",
            "1",
            "--n",
            "2",
            "--k",
            "23",
        ],
        &["generate-param", "--a", "1", "--m", "2", "--n", "1"],
        &[
            "generate-rational",
            "--a",
            "1",
            "--k",
            "2",
            "--t",
            "-1",
            "--w",
            "3",
            "--q",
            "1",
            "--m",
            "2",
        ],
        &["generate-cubic", "--a", "2", "--b", "2"],
        &["polygonal", "value", "--n", "2", "--k", "5"],
    ] {
        let out = run(args);
        assert_eq!(code(&out), 3, "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    }
    // verification failures
    assert_eq!(
        code(&run(&[
            "polygonal",
            "check",
            "--n",
            "12",
            "--k",
            "6568",
            "--l",
            "14687"
        ])),
        1
    );
    assert_eq!(
        code(&run(&[
            "polygonal",
            "check",
            "--n",
            "12",
            "--k",
            "6568",
            "--l",
            "14686"
        ])),
        0
    );
    assert_eq!(code(&run(&["polygonal", "display"])), 0);
}

#[test]
fn residue_table_override() {
    let good = scratch("table_good.txt");
    fs::write(&good, polysys_core::pell::BUILTIN_TABLE).unwrap();
    let with = |path: &PathBuf, args: &[&str]| {
        bin()
            .env("POLYSYS_RESIDUE_TABLE", path)
            .args(args)
            .output()
            .unwrap()
    };
    let args = ["generate-quad", "--a", "2", "--t", "0..1"];
    assert_eq!(with(&good, &args).stdout, run(&args).stdout);

    // a c class that does not solve the congruences
    let bad = scratch("table_bad.txt");
    let text = polysys_core::pell::BUILTIN_TABLE.replace("2;1,14;46,54", "2;1,14;46,56");
    assert_ne!(text, polysys_core::pell::BUILTIN_TABLE);
    fs::write(&bad, text).unwrap();
    let out = with(&bad, &args);
    assert_eq!(code(&out), 3);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("residue table row 4"), "{err}");
    assert_eq!(code(&with(&bad, &["classes", "58"])), 3);
    // the level-1 rules do not read the table file, but loading still validates it
    assert_eq!(code(&with(&bad, &["generate-quad", "--a", "1"])), 3);

    let malformed = scratch("table_malformed.txt");
    fs::write(&malformed, "2;1,14\n").unwrap();
    assert_eq!(code(&with(&malformed, &args)), 3);

    // dropping the row for a ≡ 2 leaves a = 2 uncovered
    let partial = scratch("table_partial.txt");
    fs::write(
        &partial,
        polysys_core::pell::BUILTIN_TABLE.replace("2;1,14;46,54\n", ""),
    )
    .unwrap();
    assert_eq!(code(&with(&partial, &args)), 3);
    let v: Value = serde_json::from_slice(&with(&partial, &["classes", "58"]).stdout).unwrap();
    assert_eq!(v["count"], 27);

    assert_eq!(code(&with(&scratch("missing.txt"), &args)), 2);
}

#[test]
fn table_output_renders_records() {
    let out = run(&[
        "generate-quad",
        "--a",
        "1",
        "--t",
        "0..2",
        "--output",
        "table",
    ]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("8, 5, 6, 36, 35, 2, 3"));
    assert!(text.lines().any(|l| l.trim_start().starts_with("t=2")));
}
