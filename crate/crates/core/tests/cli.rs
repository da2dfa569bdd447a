use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_robust-apa")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn summarize_is_deterministic() {
    let p2 = corpus("p2.imp");
    let a = run(&["summarize", &p2]);
    let b = run(&["summarize", &p2]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("6: x' = 5 & y' <= 20"), "{}", stdout(&a));
}

#[test]
fn empty_program_has_identity_summary() {
    let o = run(&["summarize", &corpus("empty.imp")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1: x' = x\n");
}

#[test]
fn summarize_prints_the_order() {
    let o = run(&["summarize", "--order", &corpus("p1.graph")]);
    let text = stdout(&o);
    let first = text.lines().next().unwrap();
    assert!(first.starts_with("order: "));
    // Every vertex but the root.
    assert_eq!(first.split_whitespace().count(), 4);
    assert!(text.contains("D: i' = 5"));
}

#[test]
fn star_of_false_is_the_identity() {
    for d in ["pga", "lra", "combined"] {
        let o = run(&["star", "--domain", d, &corpus("zero.tf")]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "x' = x\n", "{d}");
    }
    let o = run(&["star", "--domain", "pga", &corpus("g1.tf")]);
    assert_eq!(stdout(&o), "i' = i | i <= 4 & i' <= 5\n");
}

#[test]
fn irreducible_graphs_need_force() {
    let g = corpus("irreducible.graph");
    let o = run(&["summarize", &g]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("dominating header"));
    let o = run(&["summarize", "--force", &g]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("WARNING: tangle is not reducible"));
    assert!(text.contains("no robustness guarantee"));
}

#[test]
fn check_sim_verdicts() {
    let (g, h) = (corpus("p2.graph"), corpus("p1.graph"));
    let o = run(&["check-sim", &g, &h, &corpus("overview.map")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("stuttering simulation: yes"));
    assert!(text.contains("loop-preserving: yes"));
    assert!(text.contains("robustness: verified (combined)"));

    let o = run(&["check-sim", "--loop-preserving", &g, &h, &corpus("overview.map")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("robustness"));

    let o = run(&["check-sim", &g, &h, &corpus("overview_broken.map")]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("stuttering simulation: no"));
    assert!(text.contains("counterexample: x=0, y=0, x'=1, y'=0"), "{text}");

    let o = run(&["check-sim", &corpus("collapsed.graph"), &corpus("single.graph"), &corpus("collapsed.map")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("loop-preserving: no"));
}

#[test]
fn laws_subcommand() {
    let o = run(&["laws", "--samples", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for d in ["pga", "lra", "combined"] {
        assert!(text.contains(&format!("{d}: 1 of 1 samples satisfy every law")), "{text}");
    }
    let o = run(&["laws", "--samples", "5", "--domain", "lra", "--tamper"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("extensivity"));
}

#[test]
fn eliminate_prints_a_graph() {
    let o = run(&["eliminate", &corpus("p1.graph"), "C"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("graph "));
    assert!(text.contains("B -> B"));
    assert!(text.contains("B -> C"));
    assert!(!text.contains("C -> "));
    let o = run(&["eliminate", &corpus("p1.graph"), "Q"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        vec!["summarize"],
        vec!["frobnicate"],
        vec!["laws", "--samples", "0"],
        vec!["laws", "--vars", "4"],
        vec!["star", "--domain", "octagon", "x.tf"],
        vec!["summarize", "/nonexistent/p.imp"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let dir = std::env::temp_dir().join(format!("robust-apa-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.imp");
    std::fs::write(&bad, "vars x;\nx = x * x;\n").unwrap();
    let o = run(&["summarize", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bad.imp:2:"), "{}", stderr(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}
