use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

const C6: &str = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
const P4: &str = "# path on four vertices\n4 3\n0 1\n1 2\n2 3\n";

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    run_stdin(args, "")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_contraction"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn exit_codes_follow_the_answer() {
    let g = file(C6);
    let no = run(&["solve-path", path(&g), "--k", "3"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout(&no), "no\n");

    let yes = run(&["solve-path", path(&g), "--k", "4"]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).starts_with("yes\nshape path\nlength 2\ncost 4\n"));

    let cycle = run(&["solve-cycle", path(&g), "--k", "0"]);
    assert_eq!(cycle.status.code(), Some(0));
    assert!(stdout(&cycle).contains("length 6"));
}

#[test]
fn reads_stdin_and_skips_comments() {
    let o = run_stdin(&["solve-path", "-", "--k", "0"], P4);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cost 0"));
}

#[test]
fn parse_errors_exit_two_with_line() {
    let o = run_stdin(&["solve-path", "-", "--k", "1"], "3 1\n0 5\n");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");

    let missing = run(&["solve-path", "/nonexistent/graph.txt", "--k", "1"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn pcce_respects_end_sets() {
    let g = file(P4);
    let o = run(&["solve-pcce", path(&g), "--k", "0", "--x", "0", "--y", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["solve-pcce", path(&g), "--k", "1", "--x", "1", "--y", "0"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["solve-pcce", path(&g), "--k", "1", "--x", "1", "--y", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn solver_output_verifies() {
    let g = file(C6);
    let solved = run(&["solve-cycle", path(&g), "--k", "2"]);
    assert_eq!(solved.status.code(), Some(0));
    let w = file(&stdout(&solved));
    let ok = run(&["verify", path(&g), path(&w), "--k", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("valid cycle"));
    let over = run(&["verify", path(&g), path(&w), "--k", "1"]);
    assert_eq!(over.status.code(), Some(1));

    let bad = file("shape path\n1: 0 2\n2: 1 3 4 5\n");
    let o = run(&["verify", path(&g), path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid"));
}

#[test]
fn cyclicity_reports_length() {
    let g = file(C6);
    let o = run(&["cyclicity", path(&g)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("cyclicity 6\n"));
    let tree = file(P4);
    let o = run(&["cyclicity", path(&tree)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "none\n");
}

#[test]
fn enumerate_counts() {
    let g = file(C6);
    // Connected pairs on C6 are its 6 edges, each with 2 boundary vertices.
    let o = run(&["enumerate", path(&g), "--kind", "ab", "--alpha", "2", "--beta", "2", "--count"]);
    assert_eq!(stdout(&o), "6\n");
    let o = run(&["enumerate", path(&g), "--kind", "ab", "--alpha", "2", "--beta", "2"]);
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn gen_is_deterministic_per_seed() {
    let args = ["gen", "--kind", "gnp", "--n", "12", "--p", "0.3"];
    let a = run(&[&args[..], &["--seed", "5"]].concat());
    let b = run(&[&args[..], &["--seed", "5"]].concat());
    let c = run(&[&args[..], &["--seed", "6"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_ne!(stdout(&a), stdout(&c));
    assert!(stdout(&a).starts_with("12 "));
}

#[test]
fn generated_graph_feeds_the_solver() {
    let grid = run(&["gen", "--kind", "grid", "--rows", "2", "--cols", "3"]);
    // Collapsing the three columns is the cheapest path.
    let o = run_stdin(&["solve-path", "-", "--k", "3"], &stdout(&grid));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("length 3"));
    let o = run_stdin(&["solve-path", "-", "--k", "2"], &stdout(&grid));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn reduce_ov_reports_pair_and_graph() {
    let ov = file("2 2\n1 0\n0 1\n1 1\n0 1\n");
    let o = run(&["reduce-ov", path(&ov), "--solve"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("# orthogonal pair x1 y2"), "{text}");
    assert!(text.contains("# path contraction: yes"), "{text}");

    let none = file("1 2\n1 1\n1 0\n");
    let o = run(&["reduce-ov", path(&none), "--solve"]);
    let text = stdout(&o);
    assert!(text.contains("# no orthogonal pair"), "{text}");
    assert!(text.contains("# path contraction: no"), "{text}");
}

#[test]
fn sweeps_report_no_disagreements() {
    for kind in ["path", "pcce", "cycle", "cyclicity", "planar"] {
        let o = run(&["sweep", "--kind", kind, "--n-max", "4", "--jobs", "2"]);
        assert_eq!(o.status.code(), Some(0), "{kind}: {}", stdout(&o));
        assert!(stdout(&o).contains("disagreements 0"), "{kind}: {}", stdout(&o));
    }
}

#[test]
fn bench_prints_tsv() {
    let o = run(&["bench", "--target", "cycle", "--k-min", "2", "--k-max", "3", "--reps", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("k\tn\treps"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 3);
}
