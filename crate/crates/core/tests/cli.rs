use std::process::{Command, Output};

fn qpbasis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpbasis"))
        .args(args)
        .env_remove("QPBASIS_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_reports_equality() {
    let o = qpbasis(&["verify", "--qmax", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "equal: true"));
}

#[test]
fn product_character_golden() {
    let o = qpbasis(&[
        "char", "--module", "N", "--qmax", "1", "--method", "product",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim_end(), "1 + q(y1 + y2 + y1*y2 + y1*y2^2)");
}

#[test]
fn lowest_level_basis_is_the_vacuum() {
    let o = qpbasis(&["basis", "--module", "L", "--level", "1", "--qmax", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim_end(), "color2: [] | color1: []");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["char", "--module", "L", "--qmax", "3"][..],
        &[
            "char", "--module", "L", "--level", "1", "--qmax", "3", "--method", "product",
        ],
        &["verify", "--qmax", "3", "--format", "csv"],
        &["char", "--module", "N", "--qmax", "200"],
        &["frobnicate"],
    ] {
        let o = qpbasis(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn methods_agree() {
    for (module, level) in [
        ("N", None),
        ("L", Some("1")),
        ("L", Some("2")),
        ("L", Some("3")),
    ] {
        for qmax in ["0", "3", "6"] {
            let mut outputs = Vec::new();
            for method in ["fermionic", "product", "enumerate"] {
                if module == "L" && method == "product" {
                    continue;
                }
                let mut args = vec![
                    "char", "--module", module, "--qmax", qmax, "--method", method,
                ];
                if let Some(k) = level {
                    args.extend(["--level", k]);
                }
                let o = qpbasis(&args);
                assert_eq!(o.status.code(), Some(0), "{args:?}");
                outputs.push(o.stdout);
            }
            assert!(
                outputs.windows(2).all(|w| w[0] == w[1]),
                "{module} {level:?} {qmax}"
            );
        }
    }
}

#[test]
fn output_independent_of_thread_count() {
    for args in [
        &["basis", "--module", "N", "--qmax", "5", "--format", "json"][..],
        &[
            "char",
            "--module",
            "L",
            "--level",
            "2",
            "--qmax",
            "8",
            "--method",
            "enumerate",
        ],
        &["oracle", "--qmax", "6", "--format", "csv"],
    ] {
        let base = qpbasis(args).stdout;
        for threads in ["1", "3"] {
            let mut with = args.to_vec();
            with.extend(["--threads", threads]);
            assert_eq!(qpbasis(&with).stdout, base, "{args:?} --threads {threads}");
        }
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("char.json");
    let o = qpbasis(&[
        "char",
        "--module",
        "N",
        "--qmax",
        "2",
        "--format",
        "json",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let terms = json.as_array().expect("array of terms");
    assert_eq!(
        terms[0],
        serde_json::json!({"m": 0, "r1": 0, "r2": 0, "coeff": "1"})
    );
}

#[test]
fn format_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qpbasis"))
        .args(["oracle", "--qmax", "1"])
        .env("QPBASIS_FORMAT", "csv")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("m,r1,r2,dim\n0,0,0,1\n"));
}

#[test]
fn lemma_check_passes() {
    let o = qpbasis(&["lemma-check", "--rmax", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failures"], serde_json::json!([]));
}
