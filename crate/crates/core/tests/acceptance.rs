//! Acceptance gate. Runs as a plain binary so that every criterion prints
//! its own line, whether or not output capture is on.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::suites::{law_suite, robustness_suite};
use common::{corpus, corpus_graph, oracles};
use robust_apa::flowgraph::FlowGraph;
use robust_apa::frontend::{parse_formula, parse_map, var_list};
use robust_apa::iterate::{alpha_lra, Domain, LossyTranslation};
use robust_apa::polyhedra::{Constraint, Polyhedron};
use robust_apa::ratlin::{state_env, subst_of, transition_env, AffineTerm, Relation, VarId};
use robust_apa::simcheck::{check_stutter_sim, verify_robustness, RobustnessOutcome, SimOutcome};
use robust_apa::transition::{delta_var, is_simulation, TransitionFormula};
use robust_apa::Error;

/// Every comparison below is exact: mutual entailment, set equality or an
/// equal count. Only running time has a budget.
const TOLERANCE: &str = "exact";

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Duration,
    run: fn() -> Result<String, String>,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn f(text: &str, vars: &str) -> TransitionFormula {
    parse_formula(text, &var_list(vars)).unwrap()
}

/// `∃k. text` over `vars`, with `k` ranging over the rationals. A guard
/// `k ≥ 1 ⇒ P` is meant over the naturals, so it is written `k = 0 ∨ (k ≥ 1 ∧ P)`.
fn exists_k(text: &str, vars: &str) -> TransitionFormula {
    let mut with_k = var_list(vars);
    with_k.push("k".into());
    parse_formula(text, &with_k).unwrap().project_vars(&var_list(vars)).unwrap()
}

fn same(label: &str, got: &TransitionFormula, want: &TransitionFormula) -> Result<(), String> {
    if got.equivalent(want).map_err(|e| e.to_string())? {
        Ok(())
    } else {
        Err(format!("{label}: got {got}, expected {want}"))
    }
}

/// A state polyhedron as a transition formula that leaves the other copy free.
fn lift_state(vars: &[String], p: &Polyhedron) -> TransitionFormula {
    let env = transition_env(vars);
    TransitionFormula::from_polyhedron(vars, p.embed(env).unwrap()).unwrap()
}

/// The loop body at `header`: eliminate the other members of its loop and
/// read off the self-loop.
fn loop_body(g: &FlowGraph, header: &str) -> TransitionFormula {
    let h = g.vertex(header).unwrap();
    let mut g = g.clone();
    let body: Vec<_> = g.local_cycles(h).into_iter().filter(|&v| v != h).collect();
    for v in body.into_iter().rev() {
        g = g.eliminate(v, Domain::Combined).unwrap();
    }
    g.edge(h, h).cloned().unwrap()
}

struct Row {
    program: &'static str,
    header: &'static str,
    vars: &'static str,
    body: &'static str,
    delta: &'static str,
    recurrences: &'static str,
    pre: &'static str,
    post: &'static str,
    summary: &'static str,
    /// The common short form, which leaves `y' = y` out of the `k = 0` case.
    short: &'static str,
}

const ROWS: [Row; 2] = [
    Row {
        program: "p1.imp",
        header: "2",
        vars: "i",
        body: "i < 5 & i' = i + 1",
        delta: "-i <= -1 & i <= 1",
        recurrences: "i' = i + 1",
        pre: "i < 5",
        post: "i' <= 5",
        summary: "k >= 0 & i' = i + k & (k = 0 | k >= 1 & i < 5 & i' <= 5)",
        short: "k >= 0 & i' = i + k & (k = 0 | k >= 1 & i < 5 & i' <= 5)",
    },
    Row {
        program: "p2.imp",
        header: "3",
        vars: "x y",
        body: "x < 5 & x' = x + 1 & y' = y + x + 1",
        delta: "-x <= -1 & x <= 1 & y <= 5",
        recurrences: "x' = x + 1 & y' <= y + 5",
        pre: "x < 5",
        post: "x' <= 5",
        summary: "k >= 0 & x' = x + k & y' <= y + 5*k & (k = 0 & y' = y | k >= 1 & x < 5 & x' <= 5)",
        short: "k >= 0 & x' = x + k & y' <= y + 5*k & (k = 0 | k >= 1 & x < 5 & x' <= 5)",
    },
];

fn loop_summary_steps() -> Result<String, String> {
    for r in &ROWS {
        let vars = var_list(r.vars);
        let g = corpus_graph(r.program);
        let body = loop_body(&g, r.header);
        same("body", &body, &f(r.body, r.vars))?;

        // conv(Δ) is compared by renaming δx back to x.
        let want = f(r.delta, r.vars).disjuncts()[0].project(&state_env(&vars)).unwrap();
        let deltas = vars.iter().map(|x| delta_var(x)).collect();
        let got = body.delta().map_err(|e| e.to_string())?;
        if !got.same_set(&want.rename(deltas)) {
            return Err(format!("{}: conv(delta) is {got}", r.program));
        }

        let a = alpha_lra(&body).map_err(|e| e.to_string())?;
        let LossyTranslation::Recurrences(recs) = &a.formula else {
            return Err(format!("{}: no recurrences", r.program));
        };
        let mut recurrence = TransitionFormula::top(&vars);
        for (y, b) in recs {
            let t = a.eta.get(y).ok_or("recurrence without a term")?;
            // y' <= y + b, read through y := t.
            let c = t.clone() + AffineTerm::constant(b.clone()) - t.primed();
            let env = transition_env(&vars);
            let row = Constraint::from_term(&c, Relation::GeqZero, &env).map_err(|e| e.to_string())?;
            let one = TransitionFormula::from_polyhedron(&vars, Polyhedron::new(env, [row])).map_err(|e| e.to_string())?;
            recurrence = recurrence.meet(&one).map_err(|e| e.to_string())?;
        }
        same("recurrences", &recurrence, &f(r.recurrences, r.vars))?;

        same("pre", &lift_state(&vars, &body.pre().unwrap().hull()), &f(r.pre, r.vars))?;
        same("post", &lift_state(&vars, &body.post().unwrap().hull()), &f(r.post, r.vars))?;
        let s = Domain::Combined.star(&body).map_err(|e| e.to_string())?;
        same("summary", &s, &exists_k(r.summary, r.vars))?;
        if !s.entails(&exists_k(r.short, r.vars)).unwrap() {
            return Err(format!("{}: summary does not entail the short form", r.program));
        }
    }
    Ok("both programs, all seven rows".into())
}

fn overview_robustness() -> Result<String, String> {
    let s1 = Domain::Combined.star(&f(ROWS[0].body, "i")).unwrap();
    let s2 = Domain::Combined.star(&f(ROWS[1].body, "x y")).unwrap();
    let sigma = subst_of(&["x", "y"], &[("i", AffineTerm::var(VarId::unprimed("x")))]).unwrap();
    if !is_simulation(&sigma, &s2, &s1).unwrap() {
        return Err("[i := x] does not simulate the summaries".into());
    }
    let projected = s2.project_vars(&var_list("x")).unwrap().rename_vars(&var_list("i")).unwrap();
    same("projected summary", &projected, &s1)?;
    Ok("simulation holds; projection equals the smaller summary".into())
}

fn order_invariance() -> Result<String, String> {
    let mut report = Vec::new();
    for name in ["p2.imp", "nested.imp", "sequential.imp"] {
        let g = corpus_graph(name);
        let orders = g.all_admissible_orders(100_000).ok_or("too many orders")?;
        let first = g.summarize_in_order(&orders[0], Domain::Combined).unwrap();
        for o in &orders[1..] {
            let s = g.summarize_in_order(o, Domain::Combined).unwrap();
            if !s.equivalent(&first).unwrap() {
                return Err(format!("{name}: order {o:?} differs"));
            }
        }
        report.push(format!("{name} {}", orders.len()));
    }
    Ok(format!("orders checked: {}", report.join(", ")))
}

fn corpus_pairs() -> Result<String, String> {
    for (gn, hn, mn) in [
        ("p2.graph", "p1.graph", "overview.map"),
        ("phase_split.graph", "phase_orig.graph", "phase.map"),
        ("unroll.graph", "unroll_orig.graph", "unroll.map"),
    ] {
        let g = corpus_graph(gn);
        let h = corpus_graph(hn);
        let m = parse_map(&corpus(mn), &g, &h).unwrap();
        match verify_robustness(&g, &h, &m, Domain::Combined).map_err(|e| e.to_string())? {
            RobustnessOutcome::Verified => {}
            RobustnessOutcome::Refuted(r) => return Err(format!("{mn}: refuted at vertex {}", r.vertex)),
        }
    }
    Ok("overview, loop splitting, unrolling verified".into())
}

fn law_samples() -> Result<String, String> {
    for d in Domain::ALL {
        let bad = law_suite(&|a: &TransitionFormula| d.star(a), 200, 0).map_err(|e| e.to_string())?;
        if let Some((i, v)) = bad.first() {
            return Err(format!("{d} sample {i}: {v} ({} failures)", bad.len()));
        }
    }
    Ok("200 samples x 3 operators, 0 failures".into())
}

fn lifting_instances() -> Result<String, String> {
    for d in Domain::ALL {
        let bad = robustness_suite(&|a: &TransitionFormula| d.star(a), 100, 1).map_err(|e| e.to_string())?;
        if let Some((i, v)) = bad.first() {
            return Err(format!("{d} instance {i}: {v} ({} failures)", bad.len()));
        }
    }
    Ok("100 instances x 3 operators, 0 failures".into())
}

fn oracle_agreement() -> Result<String, String> {
    let p = oracles::projection(101, 40)?;
    let c = oracles::composition(102, 60)?;
    let v = oracles::coverage(103, 30)?;
    Ok(format!("grid points compared: projection {p}, composition {c}, coverage {v}"))
}

fn negative_controls() -> Result<String, String> {
    let g = corpus_graph("irreducible.graph");
    match g.summarize(Domain::Combined) {
        Err(Error::Irreducible(_)) => {}
        other => return Err(format!("irreducible graph accepted: {:?}", other.map(|s| s.to_string()))),
    }
    let path = format!("{}/corpus/irreducible.graph", env!("CARGO_MANIFEST_DIR"));
    let code = Command::new(env!("CARGO_BIN_EXE_robust-apa"))
        .args(["summarize", &path])
        .output()
        .map_err(|e| e.to_string())?
        .status
        .code();
    if code != Some(2) {
        return Err(format!("summarize exited with {code:?}"));
    }

    let g = corpus_graph("p2.graph");
    let h = corpus_graph("p1.graph");
    let m = parse_map(&corpus("overview_broken.map"), &g, &h).unwrap();
    let SimOutcome::No(e) = check_stutter_sim(&g, &h, &m).unwrap() else {
        return Err("broken map accepted".into());
    };
    let w = g.edge(e.edge.0, e.edge.1).unwrap();
    let c = e.clauses.first().ok_or("refutation without a point")?;
    if !w.relates(&c.pre, &c.post) || c.target.relates(&c.pre, &c.post) {
        return Err("reported point does not separate the edge from its image".into());
    }
    Ok("irreducible input rejected; broken map refuted at a checked point".into())
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "loop summaries of the overview bodies", budget: secs(5), run: loop_summary_steps },
        Criterion { id: 2, name: "overview summaries are related", budget: secs(5), run: overview_robustness },
        Criterion { id: 3, name: "all admissible orders agree", budget: secs(60), run: order_invariance },
        Criterion { id: 4, name: "corpus pairs verify", budget: secs(30), run: corpus_pairs },
        Criterion { id: 5, name: "iteration laws", budget: secs(600), run: law_samples },
        Criterion { id: 6, name: "lifted operators are robust", budget: secs(600), run: lifting_instances },
        Criterion { id: 7, name: "grid oracles agree", budget: secs(600), run: oracle_agreement },
        Criterion { id: 8, name: "negative controls", budget: secs(5), run: negative_controls },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > c.budget => Err(format!("over budget ({took:.2?} > {:?})", c.budget)),
            o => o,
        };
        let (verdict, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {}: {verdict} {} [{TOLERANCE}, {took:.2?} of {:?}] {detail}",
            c.id, c.name, c.budget
        );
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
