use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_guillotine"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = run(args, stdin);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str], stdin: &str) -> i32 {
    run(args, stdin).status.code().unwrap()
}

#[test]
fn count_examples() {
    assert_eq!(
        ok(
            &["count", "--family", "boundary", "--d", "2", "--n", "4", "--method", "gf"],
            ""
        ),
        "64\n"
    );
    assert_eq!(
        ok(
            &["count", "--family", "guillotine", "--q", "2", "--n", "0"],
            ""
        ),
        "1\n"
    );
    let all = ok(
        &[
            "count",
            "--family",
            "separable",
            "--d",
            "3",
            "--n",
            "3",
            "--all-methods",
        ],
        "",
    );
    assert_eq!(all, "gf 28\nrecursive 28\nexplicit 28\nbrute 28\nMATCH\n");
}

#[test]
fn all_methods_agree_across_families() {
    for args in [
        &["--family", "guillotine", "--q", "3", "--n", "0..5"][..],
        &["--family", "boundary", "--d", "2", "--n", "0..6"],
        &[
            "--family",
            "alternating",
            "--d",
            "3",
            "--m",
            "3",
            "--n",
            "1..5",
        ],
        &["--family", "window", "--d", "3", "--n", "1..5"],
        &["--family", "wincc", "--n", "0..5"],
    ] {
        let mut full = vec!["count", "--all-methods"];
        full.extend_from_slice(args);
        let out = ok(&full, "");
        assert!(!out.contains("MISMATCH"), "{out}");
    }
}

#[test]
fn csv_and_json_carry_the_same_numbers() {
    let csv = ok(
        &["table", "--family", "window", "--d", "2..3", "--n", "0..6"],
        "",
    );
    let json = ok(
        &[
            "table", "--family", "window", "--d", "2..3", "--n", "0..6", "--format", "json",
        ],
        "",
    );
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let cols = doc["columns"].as_array().unwrap();
    for (i, line) in csv.lines().skip(1).enumerate() {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells[0], i.to_string());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(cells[j + 1], col["counts"][i].as_str().unwrap());
        }
    }
}

#[test]
fn boundary_table_cells() {
    let table = ok(
        &[
            "table", "--family", "boundary", "--d", "2..5", "--n", "0..15",
        ],
        "",
    );
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines[0], "n,d=2,d=3,d=4,d=5");
    assert_eq!(lines.len(), 17);
    assert_eq!(lines[8], "7,1570,80943,1119172,7770085");
    assert_eq!(
        lines[16],
        "15,2695170,18683733663,9264356481220,945738292868325"
    );
    let ones = ok(
        &[
            "table", "--family", "boundary", "--d", "2..3", "--n", "0..0",
        ],
        "",
    );
    assert_eq!(ones, "n,d=2,d=3\n0,1,1\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        code(
            &["count", "--family", "wincc", "--n", "3", "--method", "explicit"],
            ""
        ),
        2
    );
    assert_eq!(code(&["count", "--family", "boundary", "--n", "3"], ""), 2);
    assert_eq!(
        code(
            &["count", "--family", "boundary", "--d", "3", "--n", "3", "--method", "explicit"],
            ""
        ),
        2
    );
    assert_eq!(
        code(
            &["count", "--family", "alternating", "--d", "2", "--n", "3"],
            ""
        ),
        2
    );
    assert_eq!(code(&["count", "--n", "3"], ""), 2);
    assert_eq!(
        code(
            &["bijection", "--direction", "path-to-tree", "--d", "2"],
            "U1 L"
        ),
        2
    );
}

#[test]
fn resource_guard() {
    let out = run(
        &[
            "count",
            "--family",
            "separable",
            "--d",
            "3",
            "--n",
            "7",
            "--method",
            "brute",
            "--max-work",
            "1000",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource limit"));
}

#[test]
fn bijection_examples() {
    assert_eq!(
        ok(
            &["bijection", "--direction", "tree-to-dperm", "--d", "2"],
            "null\n"
        ),
        "{\"d\":2,\"n\":1,\"rows\":[[1],[1]]}\n"
    );
    assert_eq!(
        ok(
            &["bijection", "--direction", "path-to-tree", "--d", "2"],
            "L\n"
        ),
        "{\"color\":1,\"left\":null,\"right\":null}\n"
    );
    assert_eq!(
        ok(
            &[
                "--zero-based",
                "bijection",
                "--direction",
                "path-to-tree",
                "--d",
                "2"
            ],
            "L\n"
        ),
        "{\"color\":0,\"left\":null,\"right\":null}\n"
    );
    assert_eq!(
        ok(
            &["bijection", "--direction", "tree-to-path", "--d", "3"],
            "{\"color\":3}\n"
        ),
        "U2 D\n"
    );
}

#[test]
fn non_separable_input_names_the_obstruction() {
    let out = run(
        &["bijection", "--direction", "dperm-to-tree"],
        "{\"d\":2,\"n\":4,\"rows\":[[1,2,3,4],[2,4,1,3]]}",
    );
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("pi1"));
    let out = run(
        &["bijection", "--direction", "dperm-to-tree"],
        "{\"d\":3,\"n\":3,\"rows\":[[1,2,3],[1,3,2],[2,1,3]]}",
    );
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("pi2"));
}

#[test]
fn enumerate_pipes_into_round_trips() {
    let trees = ok(
        &[
            "enumerate",
            "--family",
            "guillotine",
            "--q",
            "3",
            "--n",
            "3",
        ],
        "",
    );
    assert_eq!(trees.lines().count(), 93);
    let paths = ok(
        &[
            "bijection",
            "--direction",
            "tree-to-path",
            "--d",
            "3",
            "--roundtrip",
        ],
        &trees,
    );
    assert_eq!(paths.lines().count(), 93);
    let back = ok(
        &["bijection", "--direction", "path-to-tree", "--d", "3"],
        &paths,
    );
    assert_eq!(back, trees);

    let trees = ok(
        &[
            "enumerate",
            "--family",
            "guillotine",
            "--q",
            "4",
            "--n",
            "3",
        ],
        "",
    );
    let perms = ok(
        &[
            "bijection",
            "--direction",
            "tree-to-dperm",
            "--d",
            "3",
            "--roundtrip",
        ],
        &trees,
    );
    let back = ok(
        &["bijection", "--direction", "dperm-to-tree", "--roundtrip"],
        &perms,
    );
    assert_eq!(back, trees);
}

#[test]
fn enumeration_matches_counts() {
    for args in [
        &["--family", "boundary", "--d", "2", "--n", "4"][..],
        &["--family", "separable", "--d", "3", "--n", "4"],
        &["--family", "wincc", "--n", "4"],
    ] {
        let mut e = vec!["enumerate"];
        e.extend_from_slice(args);
        let mut c = vec!["count"];
        c.extend_from_slice(args);
        let listed = ok(&e, "").lines().count();
        assert_eq!(ok(&c, "").trim(), listed.to_string(), "{args:?}");
    }
}

#[test]
fn render_counts_parts() {
    let svg = ok(&["render"], "null");
    assert_eq!(svg.matches("<rect").count(), 1);
    let svg = ok(
        &[
            "render",
            "--tree",
            "{\"color\":2,\"left\":{\"color\":1},\"right\":{\"color\":1}}",
        ],
        "",
    );
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("<rect").count(), 4);
    assert_eq!(code(&["render", "--tree", "{\"color\":3}"], ""), 2);
}

#[test]
fn verify_suites() {
    for suite in [
        "table1",
        "sequences",
        "bijections",
        "characterization",
        "formulas",
    ] {
        let out = ok(&["verify", suite], "");
        assert!(out.starts_with("PASS"), "{out}");
        assert!(!out.contains("FAIL"));
    }
    assert!(ok(&["verify", "table1"], "").contains("64 cells"));
}

#[test]
fn injected_fault_is_caught() {
    let out = run(&["verify", "characterization", "--inject-fault"], "");
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"));
    assert!(text.contains("\"d\":3"), "{text}");
    assert_eq!(code(&["verify", "table1", "--inject-fault"], ""), 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--family", "window", "--d", "3", "--n", "3"];
    assert_eq!(ok(&args, ""), ok(&args, ""));
}
