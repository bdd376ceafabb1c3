use std::io::Write;
use std::process::{Command, Output};

fn tjurina(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tjurina"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn line<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find(|l| l.starts_with(key))
        .unwrap_or_else(|| panic!("no `{key}` line in\n{text}"))
}

#[test]
fn report_table() {
    let o = tjurina(&["report", "x0^5 + x1^4*x2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(line(&s, "n, d").ends_with("2, 5"));
    assert!(line(&s, "mdr ").ends_with(" 1"));
    assert!(line(&s, "mder ").ends_with(" 1"));
    assert!(line(&s, "tau ").ends_with(" 12"));
    assert!(line(&s, "bounds").contains("12 <= tau <= 13"));
    assert!(line(&s, "bounds").contains("lower attained"));
    assert!(line(&s, "T-smooth").contains("yes"));
    assert!(line(&s, "free curve").contains("no"));
}

#[test]
fn witness_subcommand() {
    let o = tjurina(&["witness", "x0^5+x1^4*x2", "--a", "1", "--point", "0,0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(line(&s, "rho(p)").ends_with("(0, 0, -4)"));
    assert!(line(&s, "verdict").ends_with("topologically 1-versal"));
}

#[test]
fn json_output_is_reproducible() {
    let args = ["report", "x0*x1*x2", "--format", "json", "--node", "1,0,0", "--node", "0,1,0", "--node", "0,0,1"];
    let a = tjurina(&args);
    let b = tjurina(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys.len(), 6);
    assert_eq!(v["invariants"]["tau"], 3);
    assert_eq!(v["verdicts"]["free_curve"]["holds"], true);
    assert_eq!(v["verdicts"]["defect_duality"]["holds"], true);
    assert!(v["timings"].is_null());
    let text = stdout(&a);
    let order: Vec<usize> = ["\"input\"", "\"invariants\"", "\"tables\"", "\"bounds\"", "\"verdicts\"", "\"timings\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(order.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| tjurina(args).status.code();
    assert_eq!(code(&["report", "x0^2 + "]), Some(10));
    assert_eq!(code(&["report", "x0^2 + x1"]), Some(11));
    assert_eq!(code(&["report", "x0^2 + 2*x0*x1 + x1^2 + x2^2"]), Some(12));
    assert_eq!(code(&["report", "x0^2*x1^2 + x0^3*x2"]), Some(13));
    assert_eq!(code(&["free", "x0^3 + x1^3 + x2^3 + x3^3"]), Some(15));
    assert_eq!(code(&["torelli", "x0*x1*x2"]), Some(15));
    assert_eq!(code(&["witness", "x0^5 + x1^4*x2", "--a", "1", "--point", "1,1,-1"]), Some(15));
    assert_eq!(code(&["report", "--file", "/nonexistent/poly.txt"]), Some(16));
    assert_eq!(code(&["nonsense"]), Some(2));
}

#[test]
fn errors_explain_themselves() {
    let o = tjurina(&["report", "x0^2 + x1"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("x0^2 (degree 2)"), "{err}");
    assert!(err.contains("x1 (degree 1)"), "{err}");
}

#[test]
fn polynomial_from_file() {
    let path = std::env::temp_dir().join(format!("tjurina-cli-test-{}.txt", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "x0^3 + x1^3 + x0*x1*x2").unwrap();
    let o = tjurina(&["bounds", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(0));
    assert!(line(&stdout(&o), "tau ").ends_with(" 1"));
}

#[test]
fn other_subcommands() {
    let o = tjurina(&["versality", "x0^5 + x1^4*x2", "--a", "1"]);
    assert!(line(&stdout(&o), "versality a=1").contains("non-versal"));
    let o = tjurina(&["stability", "x0*x1*x2 + x3^3"]);
    assert!(line(&stdout(&o), "stability").contains("holds"));
    let o = tjurina(&["torelli", "x0^6 + x1^6 + x0*x1*x2^4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["holds"], true);
    let o = tjurina(&["dims", "x0*x1*x2", "--cap", "4"]);
    assert_eq!(stdout(&o).lines().filter(|l| l.trim_start().starts_with(char::is_numeric)).count(), 5);
    let o = tjurina(&["report", "x0^4 + x1^4 + x2^4", "--field", "fast"]);
    assert!(line(&stdout(&o), "field").ends_with("fast"));
}

#[test]
fn corpus_commands() {
    let list = stdout(&tjurina(&["corpus", "list"]));
    for name in ["exB-d5", "triangle", "triangle-susp3"] {
        assert!(list.lines().any(|l| l.starts_with(name)), "{name} missing");
    }
    let o = tjurina(&["corpus", "run", "exB-d5", "triangle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2 instances, 0 failed"));
    assert_eq!(tjurina(&["corpus", "run", "no-such"]).status.code(), Some(15));
}
