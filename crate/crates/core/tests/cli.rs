use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_craig-refute"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const X: &str = "[D.p..Ns., D.q..r., D.Np..Nq., D.Nr..s.]";
const Y: &str = "[C.p..Nr., C.Np..q., C.p..Nq.]";

#[test]
fn interpolate_worked_example_with_trace() {
    let o = run(&[
        "interpolate",
        "--x",
        X,
        "--y",
        Y,
        "--strategy",
        "scripted:p,q,r,q,q",
        "--trace",
        "--simplify",
        "--verify",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("strategy: scripted:p,q,r,q,q\n"), "{out}");
    assert!(
        out.contains(&format!("X:  {X} Y:  {Y}  eliminate p (standard)")),
        "{out}"
    );
    assert!(out.contains("eliminations: 5\n"), "{out}");
    assert!(
        out.contains("simplified: ((p ∨ q) ∧ (¬p ∨ ((r ∨ (q ∧ ¬q)) ∧ (¬r ∨ ¬q))))\n"),
        "{out}"
    );
    assert!(out.ends_with("verified: yes\n"), "{out}");
}

#[test]
fn interpolate_reports_countermodels_and_edge_cases() {
    let o = run(&["interpolate", "--x", "[D.p.]", "--y", "[C.q.]"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("p=1, q=0"), "{}", stderr(&o));

    let o = run(&["interpolate", "--x", "[]", "--y", "[.1.]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("infix: ⊤\n"), "{}", stdout(&o));

    let o = run(&["interpolate", "--x", "[]", "--y", "[]"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&[
        "interpolate",
        "--x",
        "[D.p.]",
        "--y",
        "[C.p.]",
        "--strategy",
        "scripted:q",
    ]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["interpolate", "--infix", "--x", "p ∧ (p → q)", "--y", "q", "--simplify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn check_and_refute() {
    let o = run(&["check", "--x", X, "--y", Y]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "VALID\n"));

    let o = run(&["check", "--x", "[D.p..q.]", "--y", "[C.p.]"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "INVALID\nfalsified by: p=0, q=1\n");

    let o = run(&["refute", "--z", "[D.p.]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Z:  [D.p.]  axiom"), "{}", stdout(&o));

    let o = run(&["refute", "--x", X, "--y", Y]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "VALID\n"));

    assert_eq!(run(&["refute"]).status.code(), Some(2));
}

#[test]
fn generated_pairs_check_valid() {
    let o = run(&[
        "gen",
        "--c",
        "2",
        "--d",
        "2",
        "--max-vars",
        "2",
        "--count",
        "3",
        "--seed",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(
        text,
        stdout(&run(&[
            "gen",
            "--c",
            "2",
            "--d",
            "2",
            "--max-vars",
            "2",
            "--count",
            "3",
            "--seed",
            "7"
        ]))
    );
    for line in lines {
        let (x, y) = line.split_once('\t').unwrap();
        let o = run(&["check", "--x", x, "--y", y]);
        assert_eq!(stdout(&o), "VALID\n", "{line}");
    }
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("runs.csv");
    let o = run(&[
        "bench",
        "--c",
        "4",
        "--d",
        "4",
        "--up-to",
        "-n",
        "20",
        "--verify",
        "--jobs",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("published reference:"));
    let rows = craig_refute::bench::read_csv_file(&path).unwrap();
    assert_eq!(rows.len(), 20);

    // without --out the CSV alone goes to stdout
    let o = run(&["bench", "--c", "3", "--d", "3", "-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = craig_refute::bench::read_csv(stdout(&o).as_bytes()).unwrap();
    assert_eq!(rows.len(), 5);
    assert!(stderr(&o).contains("mean time"));
}

#[test]
fn usage_errors() {
    assert_eq!(
        run(&["interpolate", "--x", "[D.p.", "--y", "[C.p.]"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["gen", "--max-vars", "0"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    let mut child = bin()
        .arg("--help")
        .stdout(Stdio::piped())
        .stdin(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    for sub in ["interpolate", "check", "refute", "gen", "bench"] {
        assert!(stdout(&o).contains(sub), "{sub}");
    }
}
