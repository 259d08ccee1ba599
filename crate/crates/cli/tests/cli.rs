use std::io::Write;
use std::process::{Command, Output, Stdio};

fn latnorm(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_latnorm"))
        .args(args)
        .env_remove("LATNORM_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let o = latnorm(&full, "");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn pompom_normalizes_to_almost4() {
    let pts = gen(&["--kind", "pompom", "--k", "2"]);
    assert_eq!(pts, "-1 3\n0 0\n0 1\n1 0\n");
    let o = latnorm(&["normalize", "-"], &pts);
    assert!(o.status.success());
    let json = stdout(&o);
    assert!(json.contains("\"classification\": \"almost4\""));
    assert!(json.contains("\"fallback_used\": false"));
    assert!(o.stderr.is_empty());
}

#[test]
fn rows_check() {
    let o = latnorm(&["check", "-"], &gen(&["--kind", "rows", "--n", "5"]));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "digital convex; 4-connected\n");
}

#[test]
fn non_convex_check_exits_2() {
    let o = latnorm(&["check", "-"], "0 0\n2 0\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("not digital convex"));
    let o = latnorm(&["normalize", "-"], "0 0\n2 0\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn parse_error_names_the_line() {
    let o = latnorm(&["check", "-"], "0 0\nx y\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(latnorm(&["check"], "").status.code(), Some(1));
    assert_eq!(latnorm(&["frobnicate"], "").status.code(), Some(1));
    assert_eq!(latnorm(&["bench", "--sizes", "1.5e3"], "").status.code(), Some(1));
    assert_eq!(latnorm(&["check", "/nonexistent/points.txt"], "").status.code(), Some(1));
}

#[test]
fn brute_diameter_on_disc() {
    let o = latnorm(&["diameter", "--brute", "-"], &gen(&["--kind", "disc", "--radius", "20"]));
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("k 41\n"));
    assert!(text.contains("brute_k 41\n"));
}

#[test]
fn hull_of_square() {
    let o = latnorm(&["hull", "-"], "0 0\n1 0\n0 1\n1 1\n");
    assert_eq!(stdout(&o), "0 0\n1 0\n1 1\n0 1\n");
}

#[test]
fn normalize_writes_file_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("slab.txt");
    std::fs::write(&input, gen(&["--kind", "thin_slab", "--seed", "9", "--length", "80"])).unwrap();
    let mut outputs = Vec::new();
    for name in ["a.json", "b.json"] {
        let out = dir.path().join(name);
        let o = latnorm(&["normalize", input.to_str().unwrap(), "-o", out.to_str().unwrap()], "");
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        assert!(o.stdout.is_empty());
        outputs.push(std::fs::read(out).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    assert!(outputs[0].ends_with(b"}\n"));
}

#[test]
fn seed_env_overrides_default() {
    let args = ["gen", "--kind", "random_hull", "--samples", "6", "--half-width", "20"];
    let run = |seed: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_latnorm"));
        cmd.args(args).env_remove("LATNORM_SEED");
        if let Some(s) = seed {
            cmd.env("LATNORM_SEED", s);
        }
        String::from_utf8(cmd.output().unwrap().stdout).unwrap()
    };
    assert_eq!(run(Some("1")), run(None));
    assert_ne!(run(Some("2")), run(None));
    let explicit = latnorm(&["gen", "--kind", "random_hull", "--samples", "6", "--half-width", "20", "--seed", "2"], "");
    assert_eq!(stdout(&explicit), run(Some("2")));
}

#[test]
fn render_ascii_marks_witness() {
    let o = latnorm(&["render", "-"], "0 0\n1 1\n0 1\n-1 2\n");
    assert_eq!(stdout(&o), "○··\n·●●\n·●·\n");
    let o = latnorm(&["render", "--svg", "-"], "0 0\n1 0\n");
    assert!(stdout(&o).starts_with("<svg"));
}

#[test]
fn bench_csv_header() {
    let o = latnorm(&["bench", "--sizes", "1e3,2e3", "--warmups", "0", "--reps", "1"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,h,k,diameter_ms,normalize_ms,rows_scanned");
    assert_eq!(lines.len(), 3);
}

#[test]
fn selftest_passes() {
    let o = latnorm(&["selftest"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("ok")).count(), 11);
}
