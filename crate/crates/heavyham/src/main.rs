//! `heavyham`: command-line front end for the heavy-subgraph
//! Hamiltonicity toolkit.
//!
//! Exit codes: 0 for a clean run, 1 when a survey or search reports a
//! counterexample, 2 for usage or input errors. JSON output is the
//! stable machine surface; text output is human-oriented and unstable.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use heavyham::composed::{
    find_good_pair, merge_via_good_pairs, recognize_composed, CanonicalSequence, ExtensionStep,
};
use heavyham::constructions::{build_f, build_g_prime, FamilyInstance};
use heavyham::cycles::{find_hamiltonian_cycle, HamiltonianVerdict, DEFAULT_BUDGET};
use heavyham::graph::Graph;
use heavyham::graph6;
use heavyham::harness::{search_problem2, survey, ImplicationSpec, Source, SurveyReport};
use heavyham::ore::{self, OreSequence};
use heavyham::patterns::{first_non_heavy_embedding, is_free, PatternId};
use heavyham::{CycleSeq, PathSeq};

#[derive(Parser)]
#[command(
    name = "heavyham",
    version,
    about = "Heavy-subgraph Hamiltonicity toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Edgelist,
    G6,
}

#[derive(Subcommand)]
enum Command {
    /// Report order, size, connectivity, pattern verdicts and (optionally)
    /// Hamiltonicity for one graph.
    Check {
        /// Path to an edge-list or .g6 file, or `construct:F(5)` /
        /// `construct:Gprime(15)`.
        input: String,
        /// Comma-separated pattern names, e.g. `K1,3,P6,W`.
        #[arg(long)]
        patterns: Option<String>,
        /// Also run the exact Hamiltonicity search.
        #[arg(long)]
        hamiltonian: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Test an implication specification over a stream of graphs.
    Survey {
        /// Patterns the graphs must be heavy for.
        #[arg(long)]
        heavy: Option<String>,
        /// Patterns the graphs must be free of.
        #[arg(long)]
        free: Option<String>,
        /// Exhaustive over all labeled graphs up to this order.
        #[arg(long)]
        exhaustive: Option<usize>,
        /// Number of random 2-connected samples.
        #[arg(long)]
        random: Option<u64>,
        /// Smallest sampled order.
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Largest sampled order (defaults to --n).
        #[arg(long)]
        n_max: Option<usize>,
        /// Edge probability for sampling.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Ingest a graph6 stream instead of generating.
        #[arg(long)]
        from: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Worker count for stream sharding (0 = default pool).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Skip non-canonical labelings in exhaustive mode.
        #[arg(long)]
        dedup: bool,
        /// Drop the 2-connectivity hypothesis.
        #[arg(long)]
        no_two_connected: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Emit a member of the built-in witness families.
    Construct {
        /// `F` or `Gprime`.
        family: String,
        r: usize,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Repair a cyclic Ore-sequence into a genuine cycle.
    Repair {
        input: String,
        /// Cyclic vertex sequence, e.g. `0,1,2,3`.
        #[arg(long)]
        sequence: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Search for a canonical sequence showing the graph is composed.
    Compose {
        input: String,
        /// The role triple `u,v,w`.
        #[arg(long)]
        triple: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run a scripted good-pair merge instance from a fixture file.
    Merge {
        fixture: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Randomized search on the open claw+Z3-heavy question (n >= 10).
    SearchProblem2 {
        #[arg(long, default_value_t = 10)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Check {
            input,
            patterns,
            hamiltonian,
            budget,
            format,
        } => cmd_check(&input, patterns.as_deref(), hamiltonian, budget, format),
        Command::Survey {
            heavy,
            free,
            exhaustive,
            random,
            n,
            n_max,
            p,
            seed,
            from,
            budget,
            jobs,
            dedup,
            no_two_connected,
            format,
        } => {
            let spec = ImplicationSpec {
                heavy_patterns: parse_pattern_list(heavy.as_deref().unwrap_or(""))?,
                free_patterns: parse_pattern_list(free.as_deref().unwrap_or(""))?,
                require_two_connected: !no_two_connected,
                conclusion: Default::default(),
            };
            let picked = [exhaustive.is_some(), random.is_some(), from.is_some()]
                .iter()
                .filter(|&&b| b)
                .count();
            if picked != 1 {
                return Err(CliError(
                    "exactly one of --exhaustive, --random, --from is required".into(),
                ));
            }
            let source = if let Some(n_max_ex) = exhaustive {
                Source::Exhaustive {
                    n_max: n_max_ex,
                    dedup_isomorphic: dedup,
                }
            } else if let Some(count) = random {
                Source::Random {
                    count,
                    n_min: n,
                    n_max: n_max.unwrap_or(n),
                    edge_prob: p,
                    seed,
                }
            } else {
                let text = std::fs::read_to_string(from.unwrap())?;
                Source::Ingest(graph6::decode_lines(&text)?)
            };
            let report = survey(&spec, &source, budget, jobs)?;
            emit_report(&report, format)
        }
        Command::Construct { family, r, format } => cmd_construct(&family, r, format),
        Command::Repair {
            input,
            sequence,
            format,
        } => cmd_repair(&input, &sequence, format),
        Command::Compose {
            input,
            triple,
            format,
        } => cmd_compose(&input, &triple, format),
        Command::Merge { fixture, format } => cmd_merge(&fixture, format),
        Command::SearchProblem2 {
            n_min,
            n_max,
            samples,
            seed,
            budget,
            jobs,
            format,
        } => {
            let report = search_problem2(n_min..=n_max, samples, seed, budget, jobs)?;
            emit_report(&report, format)
        }
    }
}

fn emit_report(report: &SurveyReport, format: Format) -> Result<ExitCode, CliError> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report)?),
        _ => {
            println!(
                "tested {} graphs, {} matched the hypotheses, {} inconclusive, {} counterexamples",
                report.graphs_tested,
                report.hypothesis_matches,
                report.budget_exceeded,
                report.counterexamples.len()
            );
            for c in &report.counterexamples {
                println!(
                    "counterexample at stream index {}: edges {:?}",
                    c.index, c.edges
                );
            }
        }
    }
    Ok(if report.counterexamples.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
struct PatternVerdict {
    pattern: String,
    free: bool,
    heavy: bool,
    /// A vertex set inducing a non-heavy copy, present when heaviness
    /// fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct CheckReport {
    n: usize,
    m: usize,
    two_connected: bool,
    patterns: Vec<PatternVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hamiltonian: Option<HamReport>,
}

#[derive(Serialize)]
struct HamReport {
    verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle: Option<Vec<usize>>,
    budget: u64,
}

fn cmd_check(
    input: &str,
    patterns: Option<&str>,
    hamiltonian: bool,
    budget: u64,
    format: Format,
) -> Result<ExitCode, CliError> {
    let g = load_graph(input)?;
    let mut verdicts = Vec::new();
    for id in parse_pattern_list(patterns.unwrap_or(""))? {
        let h = id.build()?;
        let witness = first_non_heavy_embedding(&g, &h);
        verdicts.push(PatternVerdict {
            pattern: id.to_string(),
            free: is_free(&g, &h),
            heavy: witness.is_none(),
            witness: witness.map(|e| e.subset.iter().collect()),
        });
    }
    let ham = if hamiltonian {
        Some(match find_hamiltonian_cycle(&g, budget)? {
            HamiltonianVerdict::Found(c) => HamReport {
                verdict: "hamiltonian".into(),
                cycle: Some(c.vertices),
                budget,
            },
            HamiltonianVerdict::NotHamiltonian => HamReport {
                verdict: "not_hamiltonian".into(),
                cycle: None,
                budget,
            },
            HamiltonianVerdict::BudgetExceeded => HamReport {
                verdict: "budget_exceeded".into(),
                cycle: None,
                budget,
            },
        })
    } else {
        None
    };
    let report = CheckReport {
        n: g.n(),
        m: g.edge_count(),
        two_connected: g.is_two_connected(),
        patterns: verdicts,
        hamiltonian: ham,
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        _ => {
            println!(
                "n = {}, m = {}, 2-connected: {}",
                report.n, report.m, report.two_connected
            );
            for v in &report.patterns {
                print!("{}: free={} heavy={}", v.pattern, v.free, v.heavy);
                match &v.witness {
                    Some(w) => println!(" (non-heavy copy on {w:?})"),
                    None => println!(),
                }
            }
            if let Some(h) = &report.hamiltonian {
                match &h.cycle {
                    Some(c) => println!("hamiltonian: yes, cycle {c:?}"),
                    None => println!("hamiltonian: {}", h.verdict),
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_construct(family: &str, r: usize, format: Format) -> Result<ExitCode, CliError> {
    let inst = build_family(family, r)?;
    match format {
        Format::G6 => println!("{}", graph6::encode(&inst.graph)),
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                n: usize,
                edges: Vec<(usize, usize)>,
                labels: std::collections::BTreeMap<String, usize>,
            }
            let out = Out {
                n: inst.graph.n(),
                edges: inst.graph.edges(),
                labels: inst.labels.clone(),
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        _ => print!("{}", inst.graph.to_edge_list_string()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_repair(input: &str, sequence: &str, format: Format) -> Result<ExitCode, CliError> {
    let g = load_graph(input)?;
    let vertices = parse_vertex_list(sequence)?;
    let seq = OreSequence::cyclic(vertices);
    let (cycle, trace) = ore::repair_with_trace(&g, &seq)?;
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                cycle: Vec<usize>,
                deficits: Vec<usize>,
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&Out {
                    cycle: cycle.vertices,
                    deficits: trace,
                })?
            );
        }
        _ => println!(
            "repaired cycle: {:?} (deficit trace {:?})",
            cycle.vertices, trace
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_compose(input: &str, triple: &str, format: Format) -> Result<ExitCode, CliError> {
    let g = load_graph(input)?;
    let roles = parse_vertex_list(triple)?;
    let [u, v, w] = roles[..] else {
        return Err(CliError("--triple needs exactly three vertices".into()));
    };
    match recognize_composed(&g, u, v, w)? {
        None => {
            match format {
                Format::Json => println!("{{\n  \"composed\": false\n}}"),
                _ => println!("not composed for roles ({u}, {v}, {w})"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Some(seq) => {
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Out<'a> {
                        composed: bool,
                        sequence: &'a CanonicalSequence,
                    }
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&Out {
                            composed: true,
                            sequence: &seq,
                        })?
                    );
                }
                _ => {
                    println!("composed with k = {}, l = {}", seq.k, seq.l);
                    println!("ordering (offset -> vertex):");
                    for (i, &x) in seq.vertex_of.iter().enumerate() {
                        println!("  {:>3} -> {x}", i as i64 - seq.k as i64);
                    }
                    println!("steps:");
                    for step in &seq.steps {
                        match step {
                            ExtensionStep::One { end, attach } => {
                                println!("  1-extension {end:?} attach offset {attach}")
                            }
                            ExtensionStep::Two => println!("  2-extension"),
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(serde::Deserialize)]
struct MergeFixture {
    n: usize,
    edges: Vec<(usize, usize)>,
    cycle: Vec<usize>,
    ear: Vec<usize>,
    x_flanks: (usize, usize),
    y_flanks: (usize, usize),
}

fn cmd_merge(fixture: &PathBuf, format: Format) -> Result<ExitCode, CliError> {
    let text = std::fs::read_to_string(fixture)?;
    let fx: MergeFixture = serde_json::from_str(&text)?;
    let g = Graph::new(fx.n, &fx.edges)?;
    let cycle = CycleSeq { vertices: fx.cycle };
    let ear = PathSeq {
        vertices: fx.ear.clone(),
    };
    let x = *fx.ear.first().ok_or_else(|| CliError("empty ear".into()))?;
    let y = *fx.ear.last().unwrap();
    let wx = find_good_pair(&g, &cycle, x, fx.x_flanks.0, fx.x_flanks.1)?
        .ok_or_else(|| CliError("no good pair for the ear origin".into()))?;
    let wy = find_good_pair(&g, &cycle, y, fx.y_flanks.0, fx.y_flanks.1)?
        .ok_or_else(|| CliError("no good pair for the ear terminus".into()))?;
    let merged = merge_via_good_pairs(&g, &cycle, &ear, &wx, &wy)?;
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                covered: usize,
                cycle: Vec<usize>,
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&Out {
                    covered: merged.vertices.len(),
                    cycle: merged.vertices,
                })?
            );
        }
        _ => println!(
            "merged cycle ({} vertices): {:?}",
            merged.vertices.len(),
            merged.vertices
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn build_family(family: &str, r: usize) -> Result<FamilyInstance, CliError> {
    match family.to_ascii_lowercase().as_str() {
        "f" => Ok(build_f(r)?),
        "gprime" | "g'" => Ok(build_g_prime(r)?),
        other => Err(CliError(format!(
            "unknown family {other:?}: expected F or Gprime"
        ))),
    }
}

/// Loads a graph from a file path (edge list, or graph6 when the
/// extension is .g6/.graph6) or a `construct:NAME(R)` pseudo-path.
fn load_graph(input: &str) -> Result<Graph, CliError> {
    if let Some(rest) = input.strip_prefix("construct:") {
        let (name, arg) = rest
            .split_once('(')
            .and_then(|(name, tail)| tail.strip_suffix(')').map(|a| (name, a)))
            .ok_or_else(|| {
                CliError(format!(
                    "malformed construction {input:?}; use construct:F(5)"
                ))
            })?;
        let r: usize = arg
            .parse()
            .map_err(|_| CliError(format!("bad construction parameter {arg:?}")))?;
        return Ok(build_family(name, r)?.graph);
    }
    let text = std::fs::read_to_string(input)?;
    let is_g6 = std::path::Path::new(input)
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("g6") || e.eq_ignore_ascii_case("graph6"));
    if is_g6 {
        let graphs = graph6::decode_lines(&text)?;
        match graphs.len() {
            1 => Ok(graphs.into_iter().next().unwrap()),
            k => Err(CliError(format!("expected one graph6 record, found {k}"))),
        }
    } else {
        Ok(Graph::parse_edge_list(&text)?)
    }
}

/// Parses a comma-separated pattern list. Names containing commas
/// (`K1,3`, `N1,1,2`, `H1,1`) are reassembled greedily.
fn parse_pattern_list(list: &str) -> Result<Vec<PatternId>, CliError> {
    let tokens: Vec<&str> = list
        .split([',', ' '])
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let mut candidate = tokens[i].to_string();
        let mut consumed = 1;
        loop {
            if let Ok(id) = candidate.parse::<PatternId>() {
                out.push(id);
                break;
            }
            match tokens.get(i + consumed) {
                Some(t) if t.chars().all(|c| c.is_ascii_digit()) && consumed < 3 => {
                    candidate.push(',');
                    candidate.push_str(t);
                    consumed += 1;
                }
                _ => {
                    return Err(CliError(format!(
                        "unknown pattern {:?} (accepted: {})",
                        tokens[i],
                        PatternId::CLI_NAMES.join(" ")
                    )))
                }
            }
        }
        i += consumed;
    }
    Ok(out)
}

fn parse_vertex_list(list: &str) -> Result<Vec<usize>, CliError> {
    list.split([',', ' '])
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| CliError(format!("bad vertex id {t:?}")))
        })
        .collect()
}
