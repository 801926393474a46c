use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use factorcrit::emit_graph6;
use factorcrit::harness::{
    analyze, exit_code, generate, oracle_check, parse_input, parse_seed, parse_vertex_set, verify_lemma,
    verify_theorem, AnalyzeOptions, CorpusSource, LemmaId, LemmaOptions, DEFAULT_SEED, EXIT_PASS, EXIT_VIOLATION,
};
use factorcrit::Error;

#[derive(Parser)]
#[command(name = "factorcrit", version, about = "Matching and connectivity invariants of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every invariant of one graph, given as a family spec or graph6 string.
    Analyze {
        input: String,
        /// Run the automorphism search even when the family supplies a certificate.
        #[arg(long)]
        verify_symmetry: bool,
        /// Emit JSON instead of `key: value` lines.
        #[arg(long)]
        json: bool,
        /// Include per-stage wall-clock times (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
        /// Re-evaluate a vertex set, e.g. a witness from an earlier report: `0,1,3`.
        #[arg(long, value_parser = parse_set)]
        witness: Option<factorcrit::VertexSet>,
    },
    /// Sweep connected vertex-transitive odd graphs: 3-factor-critical iff not a cycle.
    VerifyTheorem {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        timings: bool,
    },
    /// Run one property suite over the family corpus.
    VerifyLemma {
        #[arg(long, value_parser = parse_lemma)]
        id: LemmaId,
        #[arg(long, default_value_t = 15)]
        max_order: usize,
        #[arg(long, value_parser = parse_seed_arg, default_value = "0xC0FFEE")]
        seed: u64,
        /// Random graphs, or random vertex sets per graph, depending on the suite.
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Cross-check matchings and cut values against exhaustive oracles.
    OracleCheck {
        /// Comma-separated sources: `families`, `random`.
        #[arg(long, default_value = "families,random")]
        corpus: String,
        #[arg(long, value_parser = parse_seed_arg, default_value = "0xC0FFEE")]
        seed: u64,
        #[arg(long, default_value_t = 300)]
        samples: usize,
    },
    /// Print a family graph; `circulants:N` prints every circulant class of order N.
    Generate {
        spec: String,
        #[arg(long, value_enum, default_value_t = Emit::Graph6)]
        emit: Emit,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    Edges,
}

fn parse_set(s: &str) -> Result<factorcrit::VertexSet, String> {
    parse_vertex_set(s).map_err(|e| e.to_string())
}

fn parse_lemma(s: &str) -> Result<LemmaId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_seed_arg(s: &str) -> Result<u64, String> {
    parse_seed(s).map_err(|e| e.to_string())
}

/// Writes all output at once; a closed pipe downstream is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json<T: Serialize>(value: &T) {
    emit(&(serde_json::to_string_pretty(value).expect("reports serialise") + "\n"));
}

fn print_lines(value: &serde_json::Value) {
    let mut out = String::new();
    if let serde_json::Value::Object(map) = value {
        for (k, v) in map {
            let _ = writeln!(out, "{k}: {v}");
        }
    }
    emit(&out);
}

fn verdict(passed: bool) -> i32 {
    if passed {
        EXIT_PASS
    } else {
        EXIT_VIOLATION
    }
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Analyze { input, verify_symmetry, json, timings, witness } => {
            let fg = parse_input(&input)?;
            let opts = AnalyzeOptions { verify_symmetry, timings, witness, seed: Some(DEFAULT_SEED) };
            let report = analyze(&fg, &opts)?;
            if json {
                print_json(&report);
            } else {
                print_lines(&serde_json::to_value(&report).expect("reports serialise"));
            }
            Ok(EXIT_PASS)
        }
        Command::VerifyTheorem { max_order, threads, timings } => {
            let summary = verify_theorem(max_order, threads, timings)?;
            print_json(&summary);
            for v in &summary.violations {
                eprintln!("violation: {} ({}) witness {:?}", v.family, v.graph6, v.witness.map(|w| w.to_string()));
            }
            Ok(verdict(summary.passed))
        }
        Command::VerifyLemma { id, max_order, seed, samples } => {
            let summary = verify_lemma(id, LemmaOptions { max_order, seed, samples })?;
            print_json(&summary);
            for v in &summary.violations {
                eprintln!("violation: {} ({}): {}", v.graph, v.graph6, v.detail);
            }
            Ok(verdict(summary.passed))
        }
        Command::OracleCheck { corpus, seed, samples } => {
            let sources = CorpusSource::parse_list(&corpus)?;
            let summary = oracle_check(&sources, seed, samples)?;
            print_json(&summary);
            Ok(verdict(summary.passed))
        }
        Command::Generate { spec, emit: format } => {
            let mut out = String::new();
            for fg in generate(&spec)? {
                match format {
                    Emit::Graph6 => {
                        let _ = writeln!(out, "{}", emit_graph6(&fg.graph));
                    }
                    Emit::Edges => {
                        let _ = writeln!(out, "# {} n={} m={}", fg.spec, fg.graph.n(), fg.graph.edge_count());
                        for (u, v) in fg.graph.edges() {
                            let _ = writeln!(out, "{u} {v}");
                        }
                    }
                }
            }
            emit(&out);
            Ok(EXIT_PASS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli.command).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        exit_code(&e)
    });
    ExitCode::from(code as u8)
}
