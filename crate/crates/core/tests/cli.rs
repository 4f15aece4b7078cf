use std::process::Command;

use gfrust::cli;
use gfrust::entanglement::eof_from_delta;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gfrust").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gfrust"))
}

fn records(csv_text: &str) -> Vec<csv::StringRecord> {
    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            assert_eq!(r.len(), headers.len());
            r
        })
        .collect()
}

fn column(csv_text: &str, name: &str) -> usize {
    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    reader
        .headers()
        .unwrap()
        .iter()
        .position(|h| h == name)
        .unwrap()
}

#[test]
fn ring_three_record() {
    let (code, out, err) = run(&["emax", "--graph", "ring", "--n", "3"]);
    assert_eq!(code, 0, "{err}");
    let rows = records(&out);
    assert_eq!(rows.len(), 1);
    let e0: f64 = rows[0][column(&out, "e0")].parse().unwrap();
    assert_eq!(format!("{e0:.12}"), "0.577350269190");
    assert_eq!(&rows[0][column(&out, "graph")], "ring(3)");
}

#[test]
fn meanfield_three_matches_triangle() {
    let (_, ring, _) = run(&["emax", "--graph", "ring", "--n", "3"]);
    let (code, mf, _) = run(&["emax", "--graph", "meanfield", "--n", "3"]);
    assert_eq!(code, 0);
    let c = column(&mf, "e0");
    assert_eq!(records(&ring)[0][c], records(&mf)[0][c]);
}

#[test]
fn octahedron_record() {
    let (code, out, _) = run(&["emax", "--graph", "platonic:octahedron", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rec = &v["records"][0];
    assert!((rec["e0"].as_f64().unwrap() - (3.0 + 3f64.sqrt()) / 6.0).abs() < 1e-11);
    assert!((100.0 * rec["e_max_ebits"].as_f64().unwrap() - 10.75).abs() < 0.005);
}

#[test]
fn csv_round_trip_reproduces_emax() {
    let invocations: [&[&str]; 4] = [
        &["emax", "--graph", "ring", "--n", "3..60"],
        &["emax", "--graph", "complete", "--n", "3..30"],
        &["emax", "--graph", "torus", "--n", "3..6", "--dim", "3"],
        &["emax", "--graph", "honeycomb", "--size", "3..5"],
    ];
    let mut checked = 0;
    for args in invocations {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        let (ce, cm) = (column(&out, "e0"), column(&out, "e_max_ebits"));
        for r in records(&out) {
            let e0: f64 = r[ce].parse().unwrap();
            let e_max: f64 = r[cm].parse().unwrap();
            let again = eof_from_delta(e0).unwrap();
            assert!(
                (again - e_max).abs() <= 1e-12,
                "{}: {again} vs {e_max}",
                &r[0]
            );
            checked += 1;
        }
    }
    for solid in [
        "tetrahedron",
        "cube",
        "octahedron",
        "icosahedron",
        "dodecahedron",
    ] {
        let arg = format!("platonic:{solid}");
        let (_, out, _) = run(&["emax", "--graph", &arg]);
        let r = &records(&out)[0];
        let e0: f64 = r[column(&out, "e0")].parse().unwrap();
        let e_max: f64 = r[column(&out, "e_max_ebits")].parse().unwrap();
        assert!(
            (eof_from_delta(e0).unwrap() - e_max).abs() <= 1e-12,
            "{solid}"
        );
        checked += 1;
    }
    assert!(checked >= 98);
}

fn without_column(csv_text: &str, name: &str) -> Vec<Vec<String>> {
    let skip = column(csv_text, name);
    records(csv_text)
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, f)| f.to_string())
                .collect()
        })
        .collect()
}

#[test]
fn repeated_invocations_agree_byte_for_byte() {
    let emax = [
        "emax",
        "--graph",
        "torus",
        "--n",
        "3,4,5",
        "--epsilon",
        "1e-4",
    ];
    let (a, b) = (run(&emax).1, run(&emax).1);
    assert_eq!(
        without_column(&a, "runtime_ms"),
        without_column(&b, "runtime_ms")
    );
    assert_eq!(a.lines().next(), b.lines().next());

    for args in [
        &["table", "platonic", "--format", "csv"][..],
        &["table", "lattice", "--format", "json"],
        &["scan", "ring", "--min", "3", "--max", "40", "--envelopes"],
    ] {
        assert_eq!(run(args).1, run(args).1, "{args:?}");
    }
}

#[test]
fn csv_uses_lf_and_a_header() {
    let (_, out, _) = run(&["scan", "ring", "--min", "3", "--max", "5"]);
    assert!(!out.contains('\r'));
    assert_eq!(out.lines().next(), Some("n,e0,e_max_ebits,parity"));
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn platonic_table_rounded_column() {
    let (code, out, _) = run(&["table", "platonic", "--format", "csv"]);
    assert_eq!(code, 0);
    let c = column(&out, "e_max_1e-2_ebits");
    let got: Vec<String> = records(&out).iter().map(|r| r[c].to_string()).collect();
    assert_eq!(got, ["19.74", "19.74", "11.12", "10.75", "5.37"]);
}

#[test]
fn lattice_table_is_resolution_independent_after_rounding() {
    let rounded = |r: &str| {
        let (code, out, _) = run(&["table", "lattice", "--resolution", r, "--format", "csv"]);
        assert_eq!(code, 0);
        let c = column(&out, "e_max_1e-2_ebits");
        records(&out)
            .iter()
            .map(|rec| rec[c].to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(rounded("64"), rounded("256"));
}

#[test]
fn scan_envelopes_bracket_the_ring() {
    let (code, out, _) = run(&["scan", "ring", "--min", "3", "--max", "50", "--envelopes"]);
    assert_eq!(code, 0);
    let (n, e, even, odd) = (
        column(&out, "n"),
        column(&out, "e_max_ebits"),
        column(&out, "envelope_even_e_max"),
        column(&out, "envelope_odd_e_max"),
    );
    for r in records(&out) {
        let size: usize = r[n].parse().unwrap();
        let own = if size.is_multiple_of(2) {
            &r[even]
        } else {
            &r[odd]
        };
        assert_eq!(&r[e], own, "N={size}");
    }
}

#[test]
fn invalid_specs_exit_two() {
    for args in [
        &["emax", "--graph", "ring", "--n", "2"][..],
        &["emax", "--graph", "ring"],
        &["emax", "--graph", "moebius", "--n", "5"],
        &["emax", "--graph", "platonic:hypercube"],
        &["emax", "--graph", "torus", "--n", "4", "--dim", "0"],
        &["emax", "--graph", "file:/nonexistent/graph.txt"],
        &["scan", "ring", "--min", "9", "--max", "4"],
        &["table", "lattice", "--resolution", "4"],
        &["frobnicate"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn file_graph_import() {
    let dir = std::env::temp_dir().join(format!("gfrust-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("square.txt");
    std::fs::write(
        &good,
        "n 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\ng 1 2 3 0\ng 1 0 3 2\n",
    )
    .unwrap();
    let arg = format!("file:{}", good.display());
    let (code, out, err) = run(&["emax", "--graph", &arg]);
    assert_eq!(code, 0, "{err}");
    let e0: f64 = records(&out)[0][column(&out, "e0")].parse().unwrap();
    assert!((e0 - 0.5).abs() < 1e-12);

    let path = dir.join("path.txt");
    std::fs::write(&path, "n 3\ne 0 1\ne 1 2\ng 2 1 0\n").unwrap();
    let arg = format!("file:{}", path.display());
    assert_eq!(run(&["emax", "--graph", &arg]).0, 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_tables_passes() {
    let (code, out, err) = run(&["verify", "--suite", "tables"]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    for check in v["checks"].as_array().unwrap() {
        assert!(check["tolerance"].is_number());
        assert!(check["residual"].is_number() || check["residual"].is_null());
    }
}

#[test]
fn verify_block_suite_reports_zero_argmin() {
    let (code, out, _) = run(&["verify", "--suite", "appendix"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let argmins: Vec<_> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["name"].as_str().unwrap().ends_with("theta-argmin"))
        .collect();
    assert_eq!(argmins.len(), 10);
    assert!(argmins
        .iter()
        .all(|c| c["passed"] == true && c["value"] == 0.0));
}

#[test]
fn injected_sign_fault_is_caught() {
    let (code, out, err) = run(&[
        "verify",
        "--suite",
        "oracle",
        "--quick",
        "--inject-fault",
        "h-minus-sign",
    ]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["fault"], "h-minus-sign");
    assert!(err.lines().any(|l| l.contains("bruteforce")));
}

#[test]
fn fault_flag_is_hidden_from_help() {
    let (code, out, _) = run(&["verify", "--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("--suite"));
    assert!(!out.contains("inject"));
}

#[test]
fn binary_exit_codes_and_group_cap() {
    let ok = binary()
        .args(["emax", "--graph", "ring", "--n", "4"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("0.500000000000000"));

    let bad = binary()
        .args(["emax", "--graph", "ring", "--n", "1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());

    let cap = binary()
        .args(["verify", "--suite", "tables", "--quick"])
        .env(cli::GROUP_CAP_ENV, "lots")
        .output()
        .unwrap();
    assert_eq!(cap.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&cap.stderr).contains(cli::GROUP_CAP_ENV));

    let small = binary()
        .args(["verify", "--suite", "invariants", "--quick"])
        .env(cli::GROUP_CAP_ENV, "4")
        .output()
        .unwrap();
    assert_eq!(small.status.code(), Some(1));
}
