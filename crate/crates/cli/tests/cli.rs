use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn pcdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcdual"))
        .args(args)
        .output()
        .unwrap()
}

fn pcdual_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pcdual"))
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
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn report_value<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix(": "))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
}

#[test]
fn dual_report() {
    let o = pcdual(&["dual", "x1^2*x2 - 1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "dual: 27*x^3 - 4*y^3 - 54*x^2 + 27*x\nsource_degree: 3\ndual_degree: 3\npsi_power: 6\n"
    );
}

#[test]
fn dual_exit_codes() {
    assert_eq!(code(&pcdual(&["dual", "x1 + x2"])), 4);
    assert_eq!(code(&pcdual(&["dual", "0"])), 4);
    assert_eq!(code(&pcdual(&["dual", "x1^2 - x2^2"])), 3);
    let bad = pcdual(&["dual", "x1^^2"]);
    assert_eq!(code(&bad), 2);
    assert!(bad.stdout.is_empty());
    assert!(String::from_utf8_lossy(&bad.stderr).contains("parse error"));
    assert_eq!(code(&pcdual(&["dual", "x1^2 + y"])), 2);
    assert_eq!(code(&pcdual(&["dual", "x1^2 + x2", "--det", "gauss"])), 2);
}

#[test]
fn strategies_agree() {
    let reference = stdout(&pcdual(&["dual", "x1^2 + 3*x1*x2 - x2 + 2"]));
    for args in [
        ["--det", "bareiss"],
        ["--det", "cofactor"],
        ["--method", "conic"],
    ] {
        let mut full = vec!["dual", "x1^2 + 3*x1*x2 - x2 + 2"];
        full.extend(args);
        assert_eq!(stdout(&pcdual(&full)), reference, "{args:?}");
    }
}

#[test]
fn stdin_input() {
    let o = pcdual_stdin(&["dual", "-"], "x1^2 + x2^2 - 1\n");
    assert_eq!(code(&o), 0);
    assert_eq!(report_value(&stdout(&o), "dual"), "2*x^2 - y^2 - 2*x + 1");
}

#[test]
fn conic_dual_command() {
    let o = pcdual(&["conic-dual", "1", "1", "-1", "0", "0", "0"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let a: Vec<&str> = (1..=6)
        .map(|i| report_value(&out, &format!("a{i}")))
        .collect();
    assert_eq!(a, ["-2", "1", "-1", "0", "1", "0"]);
    assert_eq!(
        code(&pcdual(&["conic-dual", "0", "0", "1", "0", "1", "1"])),
        2
    );
    assert_eq!(
        code(&pcdual(&["conic-dual", "1", "1", "-1", "0", "0", "1/0"])),
        2
    );
    assert_eq!(code(&pcdual(&["conic-dual", "1", "1", "-1"])), 2);
}

#[test]
fn conic_dual_matches_dual_command() {
    // 2x^2 + 2*(1/2)xy + 2*(-3/2)x + 3y^2 + 2*(1)y - 5
    let closed = stdout(&pcdual(&["conic-dual", "2", "3", "-5", "1/2", "-1.5", "1"]));
    let general = stdout(&pcdual(&[
        "dual",
        "2*x1^2 + x1*x2 - 3*x1 + 3*x2^2 + 2*x2 - 5",
    ]));
    let g = report_value(&general, "dual");
    let c = report_value(&closed, "dual");
    // proportional: g(p) c(q) = c(p) g(q) for every pair of points
    let value = |poly: &str, x: &str, y: &str| {
        report_value(
            &stdout(&pcdual(&[
                "eval",
                poly,
                &format!("x={x}"),
                &format!("y={y}"),
            ])),
            "value",
        )
        .to_string()
    };
    let values: Vec<(String, String)> = [("0", "0"), ("1/3", "2"), ("-2", "5/7"), ("3", "-1")]
        .iter()
        .map(|(x, y)| (value(g, x, y), value(c, x, y)))
        .collect();
    let cross = |a: &(String, String), b: &(String, String)| {
        value(
            &format!("({})*({}) - ({})*({})", a.0, b.1, a.1, b.0),
            "0",
            "0",
        )
    };
    for pair in values.windows(2) {
        assert_eq!(cross(&pair[0], &pair[1]), "0");
    }
}

#[test]
fn verify_command() {
    let o = pcdual(&[
        "verify",
        "x1^2 + x2^2 - 1",
        "--window",
        "-2,2,-2,2",
        "--samples",
        "100",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(report_value(&out, "max_residual").parse::<f64>().unwrap() < 1e-6);
    assert_eq!(report_value(&out, "tested"), "100");

    assert_eq!(code(&pcdual(&["verify", "x1^2 + x2^2 + 1"])), 5);

    let node = pcdual(&["verify", "x1^3 + x2^2 - 3*x1*x2"]);
    assert_eq!(code(&node), 0);
    assert!(report_value(&stdout(&node), "skipped")
        .parse::<usize>()
        .is_ok());

    assert_eq!(
        code(&pcdual(&["verify", "x1^2 + x2^2 - 1", "--window", "1,2,3"])),
        2
    );
}

#[test]
fn eval_command() {
    let o = pcdual(&["eval", "x^2 + y", "x=1/2", "y=-0.25"]);
    assert_eq!(stdout(&o), "value: 0\n");
    assert_eq!(code(&pcdual(&["eval", "x^2 + y", "x=1"])), 2);
    assert_eq!(code(&pcdual(&["eval", "x^2", "x"])), 2);
    assert_eq!(code(&pcdual(&["eval", "x^2", "z=1"])), 2);
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

#[test]
fn circle_plot_golden() {
    let args = ["plot", "x1^2 + x2^2 - 1", "--grid", "64", "--samples", "12"];
    let first = pcdual(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, pcdual(&args).stdout);
    let path = fixture("circle_plot.svg");
    if std::env::var_os("UPDATE_GOLDENS").is_some() {
        std::fs::write(&path, &first.stdout).unwrap();
    }
    assert!(
        std::fs::read(&path).unwrap() == first.stdout,
        "circle plot differs from fixture"
    );
    let svg = stdout(&first);
    assert_eq!(svg.matches("<path").count(), 4);
    assert!(svg.contains("width=\"800\""));
}

#[test]
fn plot_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pair.svg");
    let o = pcdual(&[
        "plot",
        "x1^2*x2 - 1",
        "--grid",
        "64",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&out).unwrap().starts_with("<?xml"));

    let blocked = dir.path().join("missing").join("pair.svg");
    let o = pcdual(&[
        "plot",
        "x1^2 + x2^2 - 1",
        "--out",
        blocked.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 6);
    assert_eq!(code(&pcdual(&["plot", "x1 + x2"])), 4);
}

#[test]
fn envelope_line_count() {
    let o = pcdual(&[
        "plot-envelope",
        "x1^2 + 4*x2^2 - 4",
        "--samples",
        "300",
        "--grid",
        "64",
    ]);
    assert_eq!(code(&o), 0);
    let svg = stdout(&o);
    let envelope = svg
        .lines()
        .find(|l| l.starts_with("<path class=\"envelope\""))
        .unwrap();
    assert_eq!(envelope.matches('M').count(), 300);
    assert_eq!(envelope.matches('L').count(), 300);
    assert_eq!(svg.matches("<path class=\"dual\"").count(), 1);
}

#[test]
fn spacing_moves_second_axis() {
    let o = pcdual(&[
        "plot-envelope",
        "x1^2 + x2^2 - 1",
        "--samples",
        "4",
        "--spacing",
        "2",
    ]);
    assert_eq!(code(&o), 0);
    // window [-3,3] over 400 px: x = 2 sits at 333.333
    assert!(stdout(&o).contains("x1=\"333.333\""));
    assert_eq!(
        code(&pcdual(&[
            "plot-envelope",
            "x1^2 + x2^2 - 1",
            "--spacing",
            "0"
        ])),
        2
    );
}
