//! The `robust-apa` command line.
//!
//! Exit status: `0` when every check passes, `1` when a check is refuted,
//! `2` for unreadable or malformed input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::flowgraph::FlowGraph;
use crate::frontend::{
    gen_formula_with, gen_robustness_instance, parse_formula_file, parse_graph, parse_map, parse_program,
    program_to_flowgraph, RandomFormulaSpec,
};
use crate::iterate::{laws, Domain};
use crate::ratlin::Rational;
use crate::simcheck::{
    check_loop_preserving, check_stutter_sim, verify_robustness, LoopOutcome, RobustnessOutcome, SimOutcome,
};
use crate::transition::TransitionFormula;

#[derive(Parser, Debug)]
#[command(name = "robust-apa", version, about = "Loop summaries and robustness checks for linear programs")]
struct Cli {
    /// Print intermediate results.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct DomainArg {
    /// Iteration operator: pga, lra or combined.
    #[arg(long, default_value_t = Domain::Combined)]
    domain: Domain,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Summarize every vertex of a program (.imp) or graph file.
    Summarize {
        path: PathBuf,
        /// Also print the elimination order.
        #[arg(long)]
        order: bool,
        /// Summarize irreducible graphs anyway, eliminating in reverse postorder.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        domain: DomainArg,
    },
    /// Apply an iteration operator to a formula file.
    Star {
        path: PathBuf,
        #[command(flatten)]
        domain: DomainArg,
    },
    /// Check that a map is a stuttering simulation from G to H, that it
    /// preserves loops, and that the summaries are related.
    CheckSim {
        g: PathBuf,
        h: PathBuf,
        map: PathBuf,
        /// Stop after the loop-preservation stage.
        #[arg(long)]
        loop_preserving: bool,
        /// Run every stage (the default when no stage flag is given).
        #[arg(long)]
        robustness: bool,
        #[command(flatten)]
        domain: DomainArg,
    },
    /// Check iteration-operator laws on seeded random formulas.
    Laws {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of program variables (1 to 3).
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=3))]
        vars: u8,
        /// pga, lra, combined or all.
        #[arg(long, default_value = "all")]
        domain: String,
        /// Replace the operator by the constant 1, as a control.
        #[arg(long, hide = true)]
        tamper: bool,
    },
    /// Eliminate vertices one at a time and print the resulting graph.
    Eliminate {
        path: PathBuf,
        vertices: Vec<String>,
        #[command(flatten)]
        domain: DomainArg,
    },
}

/// Runs the command line on `args` (including the program name), writing
/// to the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match dispatch(&cli, out) {
        Ok(Verdict::Pass) => 0,
        Ok(Verdict::Refuted) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

enum Verdict {
    Pass,
    Refuted,
}

/// Wraps I/O failures on output as input errors; there is nothing better to do.
fn io(e: std::io::Error) -> Error {
    Error::Input(format!("write failed: {e}"))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn located(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, column, message } => Error::Input(format!("{}:{line}:{column}: {message}", path.display())),
        other => other,
    }
}

/// A program (`.imp`) or graph file.
fn load_graph(path: &Path) -> Result<FlowGraph> {
    let text = read(path)?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("program");
    let g = if path.extension().is_some_and(|e| e == "imp") {
        parse_program(&text).and_then(|p| program_to_flowgraph(&p, stem))
    } else {
        parse_graph(&text)
    };
    g.map_err(|e| located(path, e))
}

fn point(names: &[String], pre: &[Rational], post: &[Rational]) -> String {
    let pre = names.iter().zip(pre).map(|(n, q)| format!("{n}={q}"));
    let post = names.iter().zip(post).map(|(n, q)| format!("{n}'={q}"));
    pre.chain(post).collect::<Vec<_>>().join(", ")
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<Verdict> {
    match &cli.command {
        Command::Summarize {
            path,
            order,
            force,
            domain,
        } => summarize(path, *order, *force, domain.domain, out),
        Command::Star { path, domain } => {
            let f = parse_formula_file(&read(path)?).map_err(|e| located(path, e))?;
            writeln!(out, "{}", domain.domain.star(&f)?).map_err(io)?;
            Ok(Verdict::Pass)
        }
        Command::CheckSim {
            g,
            h,
            map,
            loop_preserving,
            robustness,
            domain,
        } => {
            let all = *robustness || !*loop_preserving;
            check_sim(g, h, map, all, domain.domain, cli.verbose > 0, out)
        }
        Command::Laws {
            samples,
            seed,
            vars,
            domain,
            tamper,
        } => {
            let domains = match domain.as_str() {
                "all" => Domain::ALL.to_vec(),
                d => vec![d.parse::<Domain>()?],
            };
            run_laws(*samples, *seed, *vars as usize, &domains, *tamper, cli.verbose > 0, out)
        }
        Command::Eliminate { path, vertices, domain } => {
            let mut g = load_graph(path)?;
            for name in vertices {
                let v = g
                    .vertex(name)
                    .ok_or_else(|| Error::Input(format!("{} has no vertex '{name}'", g.name())))?;
                g = g.eliminate(v, domain.domain)?;
            }
            write!(out, "{g}").map_err(io)?;
            Ok(Verdict::Pass)
        }
    }
}

fn summarize(path: &Path, order: bool, force: bool, domain: Domain, out: &mut dyn Write) -> Result<Verdict> {
    let g = load_graph(path)?;
    let forced = force && !g.is_reducible();
    let summaries = if forced {
        writeln!(
            out,
            "WARNING: {} is not reducible; eliminating in reverse postorder.\n\
             WARNING: the result depends on that order and carries no robustness guarantee.",
            g.name()
        )
        .map_err(io)?;
        if order {
            let names: Vec<&str> = g
                .reverse_postorder()
                .into_iter()
                .filter(|&v| v != g.root())
                .map(|v| g.vertex_name(v))
                .collect();
            writeln!(out, "order: {}", names.join(" ")).map_err(io)?;
        }
        g.summarize_forced(domain)?
    } else {
        let elim = g.admissible_order()?;
        if order {
            let names: Vec<&str> = elim.iter().map(|&v| g.vertex_name(v)).collect();
            writeln!(out, "order: {}", names.join(" ")).map_err(io)?;
        }
        g.summarize_in_order(&elim, domain)?
    };
    write!(out, "{summaries}").map_err(io)?;
    Ok(Verdict::Pass)
}

fn check_sim(
    gp: &Path,
    hp: &Path,
    mp: &Path,
    all: bool,
    domain: Domain,
    verbose: bool,
    out: &mut dyn Write,
) -> Result<Verdict> {
    let g = load_graph(gp)?;
    let h = load_graph(hp)?;
    let m = parse_map(&read(mp)?, &g, &h).map_err(|e| located(mp, e))?;
    let name = |v| g.vertex_name(v);

    let tags = match check_stutter_sim(&g, &h, &m)? {
        SimOutcome::Yes(tags) => {
            writeln!(out, "stuttering simulation: yes").map_err(io)?;
            if verbose {
                for ((u, v), t) in &tags {
                    writeln!(out, "  {} -> {}: {t}", name(*u), name(*v)).map_err(io)?;
                }
            }
            tags
        }
        SimOutcome::No(e) => {
            let (u, v) = e.edge;
            writeln!(out, "stuttering simulation: no").map_err(io)?;
            writeln!(out, "  edge {} -> {} : {}", name(u), name(v), e.weight).map_err(io)?;
            if e.clauses.is_empty() {
                writeln!(
                    out,
                    "  images {} and {} differ and are not joined by an edge",
                    h.vertex_name(m.h(u)),
                    h.vertex_name(m.h(v))
                )
                .map_err(io)?;
            }
            for c in &e.clauses {
                writeln!(out, "  not simulated by {} ({})", c.target, c.clause).map_err(io)?;
                writeln!(out, "  counterexample: {}", point(g.vars(), &c.pre, &c.post)).map_err(io)?;
            }
            return Ok(Verdict::Refuted);
        }
    };

    match check_loop_preserving(&g, &h, &m, &tags) {
        LoopOutcome::Yes(w) => {
            let n: Vec<String> = w.unrolling.iter().map(|(v, n)| format!("{}:{n}", name(*v))).collect();
            writeln!(out, "loop-preserving: yes (unrolling {})", n.join(" ")).map_err(io)?;
        }
        LoopOutcome::No(why) => {
            writeln!(out, "loop-preserving: no ({})", why.describe(&g)).map_err(io)?;
            return Ok(Verdict::Refuted);
        }
    }
    if !all {
        return Ok(Verdict::Pass);
    }

    match verify_robustness(&g, &h, &m, domain)? {
        RobustnessOutcome::Verified => {
            writeln!(out, "robustness: verified ({domain})").map_err(io)?;
            Ok(Verdict::Pass)
        }
        RobustnessOutcome::Refuted(f) => {
            writeln!(out, "robustness: refuted at {} ({domain})", name(f.vertex)).map_err(io)?;
            writeln!(out, "  summary of {}: {}", name(f.vertex), f.g_summary).map_err(io)?;
            writeln!(out, "  summary of {}: {}", h.vertex_name(f.image), f.h_summary).map_err(io)?;
            writeln!(out, "  counterexample: {}", point(g.vars(), &f.pre, &f.post)).map_err(io)?;
            Ok(Verdict::Refuted)
        }
    }
}

fn run_laws(
    samples: u64,
    seed: u64,
    vars: usize,
    domains: &[Domain],
    tamper: bool,
    verbose: bool,
    out: &mut dyn Write,
) -> Result<Verdict> {
    let spec = RandomFormulaSpec {
        vars,
        seed,
        ..Default::default()
    };
    let mut failures = 0usize;
    for &d in domains {
        let star = |f: &TransitionFormula| {
            if tamper {
                Ok(TransitionFormula::one(f.vars()))
            } else {
                d.star(f)
            }
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failed_here = 0;
        for i in 0..samples {
            let a = gen_formula_with(&mut rng, &spec)?;
            let extra = gen_formula_with(&mut rng, &spec)?;
            let inst = gen_robustness_instance(&mut rng, &spec)?;
            let found = match laws::check_pka_laws(&star, &a, &extra)? {
                Some(v) => Some(v),
                None => laws::robustness(&star, &inst.sigma, &inst.f, &inst.g)?,
            };
            if verbose {
                writeln!(out, "  [{d} #{i}] {a}").map_err(io)?;
            }
            if let Some(v) = found {
                writeln!(out, "{d}: sample {i}: {v}").map_err(io)?;
                failed_here += 1;
            }
        }
        writeln!(
            out,
            "{d}: {} of {samples} samples satisfy every law",
            samples - failed_here as u64
        )
        .map_err(io)?;
        failures += failed_here;
    }
    Ok(if failures == 0 { Verdict::Pass } else { Verdict::Refuted })
}
