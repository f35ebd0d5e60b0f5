//! Survey harness: streams graphs from exhaustive enumeration, seeded
//! random generation, or ingestion, tests implication specifications
//! against them, and reports certified counterexamples.
//!
//! Hypotheses run cheapest-first (2-connectivity, then patterns ascending
//! by size); Hamiltonicity runs last and only when every hypothesis
//! holds. A counterexample is reported only on an exact exhausted search,
//! never on a spent budget, and every certificate re-verifies from
//! scratch. Streams are sharded across workers when the `parallel`
//! feature is enabled; the fold is deterministic either way.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::{find_hamiltonian_cycle, HamiltonianVerdict};
use crate::graph::Graph;
use crate::patterns::{is_free, is_h_heavy, PatternId};

/// Full labeled enumeration is capped here; larger orders come from
/// graph6 ingestion of externally generated streams.
pub const MAX_EXHAUSTIVE_N: usize = 7;

const MAX_REJECTIONS: u32 = 10_000;

#[derive(Debug, Error, PartialEq)]
pub enum HarnessError {
    #[error("exhaustive enumeration is capped at n = {max}; ingest a graph6 stream for n = {n}")]
    ExhaustiveTooLarge { n: usize, max: usize },
    #[error("no 2-connected sample after {attempts} rejections at n = {n}, p = {p}; raise the edge probability")]
    GenerationFailed { n: usize, p: f64, attempts: u32 },
    #[error("2-connected sampling needs n >= 3, got {0}")]
    OrderTooSmall(usize),
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("the open-problem search is posed for n >= 10, got {0}")]
    BelowProblemFloor(usize),
}

/// Conclusion of every implication specification.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    #[default]
    Hamiltonian,
}

/// Hypotheses to test: the graph is heavy for every pattern in
/// `heavy_patterns`, free of every pattern in `free_patterns`, and
/// 2-connected when required; the conclusion is Hamiltonicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationSpec {
    pub heavy_patterns: Vec<PatternId>,
    pub free_patterns: Vec<PatternId>,
    pub require_two_connected: bool,
    #[serde(default)]
    pub conclusion: Conclusion,
}

impl ImplicationSpec {
    pub fn heavy(patterns: &[PatternId]) -> Self {
        ImplicationSpec {
            heavy_patterns: patterns.to_vec(),
            free_patterns: Vec::new(),
            require_two_connected: true,
            conclusion: Conclusion::Hamiltonian,
        }
    }

    pub fn with_free(mut self, patterns: &[PatternId]) -> Self {
        self.free_patterns = patterns.to_vec();
        self
    }
}

/// Pattern graphs built once; hypothesis checks ordered by pattern size.
struct CompiledSpec {
    require_two_connected: bool,
    /// `(pattern, graph, must_be_free)`, ascending by vertex count.
    checks: Vec<(PatternId, Graph, bool)>,
}

impl CompiledSpec {
    fn new(spec: &ImplicationSpec) -> Self {
        let mut checks: Vec<(PatternId, Graph, bool)> = Vec::new();
        for &p in &spec.heavy_patterns {
            checks.push((p, p.build().expect("spec patterns are valid"), false));
        }
        for &p in &spec.free_patterns {
            checks.push((p, p.build().expect("spec patterns are valid"), true));
        }
        checks.sort_by_key(|(_, g, _)| g.n());
        CompiledSpec {
            require_two_connected: spec.require_two_connected,
            checks,
        }
    }

    fn hypotheses_hold(&self, g: &Graph) -> bool {
        if self.require_two_connected && !g.is_two_connected() {
            return false;
        }
        self.checks.iter().all(|(_, h, must_be_free)| {
            if *must_be_free {
                is_free(g, h)
            } else {
                is_h_heavy(g, h)
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImplicationOutcome {
    /// Hypotheses hold and a Hamilton cycle was found.
    Pass,
    /// Some hypothesis fails; the implication says nothing.
    HypothesisFailed,
    /// Hypotheses hold and the graph is exactly not Hamiltonian.
    Counterexample(Certificate),
    /// Hypotheses hold but the search budget ran out.
    Inconclusive,
}

/// Re-checkable evidence for a reported counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub two_connected: bool,
    /// Heavy verdicts per pattern, all true for a valid counterexample.
    pub heavy: Vec<(PatternId, bool)>,
    pub free: Vec<(PatternId, bool)>,
    /// Always an exhausted exact search, never a budget artifact.
    pub hamiltonicity: String,
}

pub fn test_implication(g: &Graph, spec: &ImplicationSpec, budget: u64) -> ImplicationOutcome {
    test_compiled(g, &CompiledSpec::new(spec), spec, budget)
}

fn test_compiled(
    g: &Graph,
    compiled: &CompiledSpec,
    spec: &ImplicationSpec,
    budget: u64,
) -> ImplicationOutcome {
    if !compiled.hypotheses_hold(g) {
        return ImplicationOutcome::HypothesisFailed;
    }
    if g.n() < 3 {
        // degenerate orders cannot carry a cycle; with hypotheses holding
        // they are counterexamples only in the vacuous sense, which the
        // 2-connectivity hypothesis excludes in every surveyed spec
        return ImplicationOutcome::HypothesisFailed;
    }
    match find_hamiltonian_cycle(g, budget).expect("n >= 3 checked") {
        HamiltonianVerdict::Found(_) => ImplicationOutcome::Pass,
        HamiltonianVerdict::BudgetExceeded => ImplicationOutcome::Inconclusive,
        HamiltonianVerdict::NotHamiltonian => {
            let cert = Certificate {
                n: g.n(),
                two_connected: g.is_two_connected(),
                heavy: spec
                    .heavy_patterns
                    .iter()
                    .map(|&p| (p, is_h_heavy(g, &p.build().unwrap())))
                    .collect(),
                free: spec
                    .free_patterns
                    .iter()
                    .map(|&p| (p, is_free(g, &p.build().unwrap())))
                    .collect(),
                hamiltonicity: "not_hamiltonian_exhaustive".to_string(),
            };
            ImplicationOutcome::Counterexample(cert)
        }
    }
}

/// All labeled graphs on `n` vertices in edge-mask order.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(HarnessError::ExhaustiveTooLarge {
            n,
            max: MAX_EXHAUSTIVE_N,
        });
    }
    let total = 1u64 << (n * (n - 1) / 2);
    Ok((0..total).map(move |mask| Graph::from_edge_mask(n, mask)))
}

/// Rejection-samples a 2-connected graph from the binomial model,
/// deterministically per `(n, p, seed)`.
pub fn random_two_connected(n: usize, p: f64, seed: u64) -> Result<Graph, HarnessError> {
    if n < 3 {
        return Err(HarnessError::OrderTooSmall(n));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(HarnessError::BadProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_two_connected(&mut rng, n, p)
}

fn sample_two_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Result<Graph, HarnessError> {
    for _ in 0..MAX_REJECTIONS {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge_unchecked(u, v);
                }
            }
        }
        if g.is_two_connected() {
            return Ok(g);
        }
    }
    Err(HarnessError::GenerationFailed {
        n,
        p,
        attempts: MAX_REJECTIONS,
    })
}

fn mix_seed(seed: u64, index: u64) -> u64 {
    // splitmix64 over the pair, so shards can generate independently
    let mut z = seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Where a survey's graphs come from.
pub enum Source {
    /// Every labeled graph on each order `1..=n_max`.
    Exhaustive {
        n_max: usize,
        /// Keep only lexicographically canonical adjacency masks; cuts
        /// isomorphic duplicates at permutation-scan cost.
        dedup_isomorphic: bool,
    },
    /// Seeded 2-connected samples, orders cycling over `n_min..=n_max`.
    Random {
        count: u64,
        n_min: usize,
        n_max: usize,
        edge_prob: f64,
        seed: u64,
    },
    /// Externally supplied graphs (e.g. a decoded graph6 stream).
    Ingest(Vec<Graph>),
}

/// Serializable description of a source for reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SourceDescription {
    Exhaustive {
        n_max: usize,
        dedup_isomorphic: bool,
    },
    Random {
        count: u64,
        n_min: usize,
        n_max: usize,
        edge_prob: f64,
        seed: u64,
    },
    Ingest {
        count: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    /// Position in the stream where the graph was produced.
    pub index: u64,
    pub edges: Vec<(usize, usize)>,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub spec: ImplicationSpec,
    pub source: SourceDescription,
    pub graphs_tested: u64,
    pub hypothesis_matches: u64,
    pub counterexamples: Vec<CounterexampleRecord>,
    pub budget_exceeded: u64,
    pub generation_failures: u64,
    pub seed: Option<u64>,
}

impl SurveyReport {
    pub fn clean(&self) -> bool {
        self.counterexamples.is_empty() && self.budget_exceeded == 0
    }
}

#[derive(Default)]
struct Tally {
    tested: u64,
    matches: u64,
    budget_exceeded: u64,
    generation_failures: u64,
    counterexamples: Vec<CounterexampleRecord>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.tested += other.tested;
        self.matches += other.matches;
        self.budget_exceeded += other.budget_exceeded;
        self.generation_failures += other.generation_failures;
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

struct Workload<'a> {
    compiled: CompiledSpec,
    spec: &'a ImplicationSpec,
    source: &'a Source,
    exhaustive_offsets: Vec<(usize, u64)>, // (n, first index)
    budget: u64,
}

impl Workload<'_> {
    fn len(&self) -> u64 {
        match self.source {
            Source::Exhaustive { n_max, .. } => {
                (1..=*n_max).map(|n| 1u64 << (n * (n - 1) / 2)).sum()
            }
            Source::Random { count, .. } => *count,
            Source::Ingest(graphs) => graphs.len() as u64,
        }
    }

    fn graph_at(&self, index: u64) -> Option<Graph> {
        match self.source {
            Source::Exhaustive {
                dedup_isomorphic, ..
            } => {
                let &(n, first) = self
                    .exhaustive_offsets
                    .iter()
                    .rev()
                    .find(|&&(_, first)| index >= first)
                    .expect("index within offsets");
                let mask = index - first;
                let g = Graph::from_edge_mask(n, mask);
                if *dedup_isomorphic && !is_canonical_mask(&g) {
                    return None;
                }
                Some(g)
            }
            Source::Random {
                n_min,
                n_max,
                edge_prob,
                seed,
                ..
            } => {
                let span = (*n_max - *n_min + 1) as u64;
                let n = *n_min + (index % span) as usize;
                let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(*seed, index));
                sample_two_connected(&mut rng, n, *edge_prob).ok()
            }
            Source::Ingest(graphs) => Some(graphs[index as usize].clone()),
        }
    }

    fn process(&self, index: u64) -> Tally {
        let mut t = Tally::default();
        let g = match self.graph_at(index) {
            Some(g) => g,
            None => {
                if matches!(self.source, Source::Random { .. }) {
                    t.generation_failures = 1;
                }
                return t;
            }
        };
        t.tested = 1;
        match test_compiled(&g, &self.compiled, self.spec, self.budget) {
            ImplicationOutcome::HypothesisFailed => {}
            ImplicationOutcome::Pass => t.matches = 1,
            ImplicationOutcome::Inconclusive => {
                t.matches = 1;
                t.budget_exceeded = 1;
            }
            ImplicationOutcome::Counterexample(certificate) => {
                t.matches = 1;
                t.counterexamples.push(CounterexampleRecord {
                    index,
                    edges: g.edges(),
                    certificate,
                });
            }
        }
        t
    }
}

/// Tests `spec` against every graph of `source`. `jobs` controls worker
/// count under the `parallel` feature (0 means the rayon default); the
/// sequential build ignores it. The report is identical either way.
pub fn survey(
    spec: &ImplicationSpec,
    source: &Source,
    budget: u64,
    jobs: usize,
) -> Result<SurveyReport, HarnessError> {
    if let Source::Exhaustive { n_max, .. } = source {
        if *n_max > MAX_EXHAUSTIVE_N {
            return Err(HarnessError::ExhaustiveTooLarge {
                n: *n_max,
                max: MAX_EXHAUSTIVE_N,
            });
        }
    }
    if let Source::Random {
        n_min,
        n_max,
        edge_prob,
        ..
    } = source
    {
        if *n_min < 3 {
            return Err(HarnessError::OrderTooSmall(*n_min));
        }
        if n_min > n_max {
            return Err(HarnessError::OrderTooSmall(*n_max));
        }
        if !(0.0..=1.0).contains(edge_prob) {
            return Err(HarnessError::BadProbability(*edge_prob));
        }
    }

    let mut exhaustive_offsets = Vec::new();
    if let Source::Exhaustive { n_max, .. } = source {
        let mut first = 0u64;
        for n in 1..=*n_max {
            exhaustive_offsets.push((n, first));
            first += 1u64 << (n * (n - 1) / 2);
        }
    }
    let workload = Workload {
        compiled: CompiledSpec::new(spec),
        spec,
        source,
        exhaustive_offsets,
        budget,
    };

    let mut tally = run_workload(&workload, jobs);
    tally.counterexamples.sort_by_key(|c| c.index);

    let (source_desc, seed) = match source {
        Source::Exhaustive {
            n_max,
            dedup_isomorphic,
        } => (
            SourceDescription::Exhaustive {
                n_max: *n_max,
                dedup_isomorphic: *dedup_isomorphic,
            },
            None,
        ),
        Source::Random {
            count,
            n_min,
            n_max,
            edge_prob,
            seed,
        } => (
            SourceDescription::Random {
                count: *count,
                n_min: *n_min,
                n_max: *n_max,
                edge_prob: *edge_prob,
                seed: *seed,
            },
            Some(*seed),
        ),
        Source::Ingest(graphs) => (
            SourceDescription::Ingest {
                count: graphs.len() as u64,
            },
            None,
        ),
    };
    Ok(SurveyReport {
        spec: spec.clone(),
        source: source_desc,
        graphs_tested: tally.tested,
        hypothesis_matches: tally.matches,
        counterexamples: tally.counterexamples,
        budget_exceeded: tally.budget_exceeded,
        generation_failures: tally.generation_failures,
        seed,
    })
}

#[cfg(feature = "parallel")]
fn run_workload(workload: &Workload<'_>, jobs: usize) -> Tally {
    use rayon::prelude::*;
    let body = || {
        (0..workload.len())
            .into_par_iter()
            .fold(Tally::default, |acc, i| acc.merge(workload.process(i)))
            .reduce(Tally::default, Tally::merge)
    };
    if jobs == 1 {
        run_sequential(workload)
    } else if jobs == 0 {
        body()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool")
            .install(body)
    }
}

#[cfg(not(feature = "parallel"))]
fn run_workload(workload: &Workload<'_>, _jobs: usize) -> Tally {
    run_sequential(workload)
}

fn run_sequential(workload: &Workload<'_>) -> Tally {
    (0..workload.len()).fold(Tally::default(), |acc, i| acc.merge(workload.process(i)))
}

/// Is this graph's edge mask lexicographically minimal over all vertex
/// relabelings? Backtracking over partial permutations with prefix
/// comparison; used as the optional exhaustive-mode isomorphism filter.
fn is_canonical_mask(g: &Graph) -> bool {
    let n = g.n();
    let orig: Vec<bool> = {
        let mut bits = Vec::with_capacity(n * (n - 1) / 2);
        for v in 1..n {
            for u in 0..v {
                bits.push(g.adjacent(u, v));
            }
        }
        bits
    };
    // perm[pos] = original vertex placed at new position pos
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];

    // returns true if some completion produces a strictly smaller mask
    fn smaller_exists(g: &Graph, orig: &[bool], perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let pos = perm.len();
        if pos == g.n() {
            return false; // equal prefix all the way: not smaller
        }
        for cand in 0..g.n() {
            if used[cand] {
                continue;
            }
            // compare the new column (pairs (i, pos) for i < pos)
            let mut verdict = std::cmp::Ordering::Equal;
            for i in 0..pos {
                let bit = g.adjacent(perm[i], cand);
                let obit = orig[pos * (pos - 1) / 2 + i];
                if bit != obit {
                    verdict = if obit && !bit {
                        std::cmp::Ordering::Less // candidate mask smaller
                    } else {
                        std::cmp::Ordering::Greater
                    };
                    break;
                }
            }
            match verdict {
                std::cmp::Ordering::Less => return true,
                std::cmp::Ordering::Greater => continue,
                std::cmp::Ordering::Equal => {
                    perm.push(cand);
                    used[cand] = true;
                    let found = smaller_exists(g, orig, perm, used);
                    perm.pop();
                    used[cand] = false;
                    if found {
                        return true;
                    }
                }
            }
        }
        false
    }
    !smaller_exists(g, &orig, &mut perm, &mut used)
}

/// Randomized search for the open-problem specification: 2-connected
/// claw- and Z3-heavy graphs on `n >= 10` that fail to be Hamiltonian.
/// Any hit is re-verified from its certificate before being reported.
pub fn search_problem2(
    n_range: std::ops::RangeInclusive<usize>,
    sample_count: u64,
    seed: u64,
    budget: u64,
    jobs: usize,
) -> Result<SurveyReport, HarnessError> {
    let spec = ImplicationSpec::heavy(&[PatternId::K13, PatternId::Z(3)]);
    if n_range.is_empty() {
        return Ok(SurveyReport {
            spec,
            source: SourceDescription::Random {
                count: 0,
                n_min: 0,
                n_max: 0,
                edge_prob: 0.0,
                seed,
            },
            graphs_tested: 0,
            hypothesis_matches: 0,
            counterexamples: Vec::new(),
            budget_exceeded: 0,
            generation_failures: 0,
            seed: Some(seed),
        });
    }
    let (lo, hi) = (*n_range.start(), *n_range.end());
    if lo < 10 {
        return Err(HarnessError::BelowProblemFloor(lo));
    }
    let source = Source::Random {
        count: sample_count,
        n_min: lo,
        n_max: hi,
        edge_prob: 0.5,
        seed,
    };
    let report = survey(&spec, &source, budget, jobs)?;
    for hit in &report.counterexamples {
        let g = Graph::new(hit.certificate.n, &hit.edges).expect("certificate edges are valid");
        let reverified = matches!(
            test_implication(&g, &spec, budget),
            ImplicationOutcome::Counterexample(_)
        ) && g.is_two_connected()
            && matches!(
                find_hamiltonian_cycle(&g, budget).expect("n >= 10"),
                HamiltonianVerdict::NotHamiltonian
            );
        assert!(
            reverified,
            "open-problem hit failed re-verification; refusing to report it"
        );
    }
    Ok(report)
}

/// Re-runs every check behind a counterexample record.
pub fn reverify_counterexample(
    spec: &ImplicationSpec,
    rec: &CounterexampleRecord,
    budget: u64,
) -> bool {
    let g = match Graph::new(rec.certificate.n, &rec.edges) {
        Ok(g) => g,
        Err(_) => return false,
    };
    matches!(
        test_implication(&g, spec, budget),
        ImplicationOutcome::Counterexample(_)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_f;
    use crate::cycles::DEFAULT_BUDGET;

    #[test]
    fn enumerates_exact_counts() {
        assert_eq!(enumerate_labeled(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled(4).unwrap().count(), 64);
        assert!(matches!(
            enumerate_labeled(8),
            Err(HarnessError::ExhaustiveTooLarge { .. })
        ));
    }

    #[test]
    fn random_generator_is_deterministic() {
        let a = random_two_connected(10, 0.4, 1).unwrap();
        let b = random_two_connected(10, 0.4, 1).unwrap();
        assert_eq!(a, b);
        assert!(a.is_two_connected());
        let c3 = random_two_connected(3, 1.0, 99).unwrap();
        assert_eq!(c3.edge_count(), 3);
    }

    #[test]
    fn random_generator_reports_hopeless_parameters() {
        assert!(matches!(
            random_two_connected(12, 0.0, 7),
            Err(HarnessError::GenerationFailed { .. })
        ));
        assert!(matches!(
            random_two_connected(2, 0.5, 7),
            Err(HarnessError::OrderTooSmall(2))
        ));
    }

    #[test]
    fn implication_outcomes_on_the_family() {
        let f5 = build_f(5).unwrap();
        let heavy_p6 = ImplicationSpec::heavy(&[PatternId::K13, PatternId::P(6)]);
        match test_implication(&f5.graph, &heavy_p6, DEFAULT_BUDGET) {
            ImplicationOutcome::Counterexample(cert) => {
                assert!(cert.two_connected);
                assert!(cert.heavy.iter().all(|&(_, h)| h));
            }
            other => panic!("expected counterexample, got {other:?}"),
        }
        // the wounded-pattern spec must reject the family on hypotheses,
        // anything else would contradict the heavy-pair sufficiency
        let heavy_w = ImplicationSpec::heavy(&[PatternId::K13, PatternId::W]);
        assert_eq!(
            test_implication(&f5.graph, &heavy_w, DEFAULT_BUDGET),
            ImplicationOutcome::HypothesisFailed
        );
        let c5 = Graph::cycle(5);
        assert_eq!(
            test_implication(&c5, &heavy_w, DEFAULT_BUDGET),
            ImplicationOutcome::Pass
        );
    }

    #[test]
    fn exhaustive_small_survey_is_clean() {
        let spec = ImplicationSpec::heavy(&[PatternId::K13, PatternId::N]);
        let source = Source::Exhaustive {
            n_max: 5,
            dedup_isomorphic: false,
        };
        let report = survey(&spec, &source, DEFAULT_BUDGET, 1).unwrap();
        assert_eq!(report.graphs_tested, 1 + 2 + 8 + 64 + 1024);
        assert!(report.clean());
        assert!(report.hypothesis_matches > 0);
    }

    #[test]
    fn parallel_and_sequential_reports_agree() {
        let spec = ImplicationSpec::heavy(&[PatternId::K13, PatternId::W]);
        let source = Source::Exhaustive {
            n_max: 5,
            dedup_isomorphic: false,
        };
        let seq = survey(&spec, &source, DEFAULT_BUDGET, 1).unwrap();
        let par = survey(&spec, &source, DEFAULT_BUDGET, 0).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn ingesting_the_family_finds_the_counterexample() {
        let f5 = build_f(5).unwrap();
        let spec = ImplicationSpec::heavy(&[PatternId::K13, PatternId::P(6)]);
        let source = Source::Ingest(vec![Graph::cycle(6), f5.graph.clone()]);
        let report = survey(&spec, &source, DEFAULT_BUDGET, 1).unwrap();
        assert_eq!(report.counterexamples.len(), 1);
        assert_eq!(report.counterexamples[0].index, 1);
        assert!(reverify_counterexample(
            &spec,
            &report.counterexamples[0],
            DEFAULT_BUDGET
        ));
    }

    #[test]
    fn dedup_filter_keeps_canonical_forms_only() {
        // n = 4: 64 labeled graphs fall into 11 isomorphism classes
        let spec = ImplicationSpec {
            heavy_patterns: vec![],
            free_patterns: vec![],
            require_two_connected: false,
            conclusion: Conclusion::Hamiltonian,
        };
        let source = Source::Exhaustive {
            n_max: 4,
            dedup_isomorphic: true,
        };
        let report = survey(&spec, &source, DEFAULT_BUDGET, 1).unwrap();
        // isomorphism class counts for n = 1..=4 are 1, 2, 4, 11
        assert_eq!(report.graphs_tested, 1 + 2 + 4 + 11);
    }

    #[test]
    fn random_survey_reports_are_reproducible() {
        let spec = ImplicationSpec::heavy(&[PatternId::K13, PatternId::W]);
        let source = Source::Random {
            count: 500,
            n_min: 8,
            n_max: 10,
            edge_prob: 0.5,
            seed: 42,
        };
        let a = survey(&spec, &source, DEFAULT_BUDGET, 1).unwrap();
        let b = survey(&spec, &source, DEFAULT_BUDGET, 0).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.graphs_tested, 500);
        assert!(a.clean());
        let json_a = serde_json::to_string(&a).unwrap();
        let json_b = serde_json::to_string(&b).unwrap();
        assert_eq!(json_a, json_b);
    }

    #[test]
    fn problem_search_rejects_small_orders_and_handles_empty_ranges() {
        assert!(matches!(
            search_problem2(8..=12, 10, 1, DEFAULT_BUDGET, 1),
            Err(HarnessError::BelowProblemFloor(8))
        ));
        #[allow(clippy::reversed_empty_ranges)]
        let empty = search_problem2(12..=10, 10, 1, DEFAULT_BUDGET, 1).unwrap();
        assert_eq!(empty.graphs_tested, 0);
        let run = search_problem2(10..=11, 50, 7, DEFAULT_BUDGET, 1).unwrap();
        assert_eq!(run.graphs_tested + run.generation_failures, 50);
        let again = search_problem2(10..=11, 50, 7, DEFAULT_BUDGET, 1).unwrap();
        assert_eq!(run, again);
    }
}
