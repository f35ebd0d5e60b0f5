//! Exact Hamiltonian-cycle and longest-cycle search for desk-scale graphs.
//!
//! The Hamiltonicity solver backtracks over partial paths with three
//! sound prunes recomputed at every node:
//!
//! * a degree/forcing closure on the unvisited remainder: any vertex with
//!   exactly as many usable edges as its quota forces them, forced edges
//!   delete competing ones, and contradictions (starved vertices, three
//!   forced edges, premature forced cycles) cut the branch;
//! * connectivity of the unvisited set under the surviving edges;
//! * canonical branching over twin vertices: among unvisited vertices with
//!   identical (open or closed) neighborhoods only the smallest id is
//!   tried, since any Hamilton cycle maps to one using it first;
//! * memoization of failed remainder states: whether a partial path can
//!   complete depends only on its unvisited set and endpoint, with
//!   closed-twin classes compressed to visited counts. Without the last
//!   two, families built around large cliques exhaust any node budget.
//!
//! `NotHamiltonian` is only reported when the restricted search space is
//! exhausted; a spent budget is a distinct, inconclusive outcome.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bits, count_bits, Graph};

/// Search-tree node-expansion allowance used when callers do not pick one.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("hamiltonicity is only defined for graphs on at least 3 vertices, got {0}")]
    TooSmall(usize),
}

/// A cyclic vertex sequence; certified against a graph by [`verify_cycle`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSeq {
    pub vertices: Vec<usize>,
}

impl From<Vec<usize>> for CycleSeq {
    fn from(vertices: Vec<usize>) -> Self {
        CycleSeq { vertices }
    }
}

/// A linear vertex sequence with distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSeq {
    pub vertices: Vec<usize>,
}

impl From<Vec<usize>> for PathSeq {
    fn from(vertices: Vec<usize>) -> Self {
        PathSeq { vertices }
    }
}

fn all_distinct_in_range(vertices: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    vertices.iter().all(|&v| {
        if v >= n || seen[v] {
            false
        } else {
            seen[v] = true;
            true
        }
    })
}

/// All vertices distinct and in range, length at least 3, every cyclically
/// consecutive pair adjacent.
pub fn verify_cycle(g: &Graph, c: &CycleSeq) -> bool {
    let vs = &c.vertices;
    if vs.len() < 3 || !all_distinct_in_range(vs, g.n()) {
        return false;
    }
    (0..vs.len()).all(|i| g.adjacent(vs[i], vs[(i + 1) % vs.len()]))
}

/// All vertices distinct and in range, consecutive pairs adjacent. A
/// single vertex is a valid path.
pub fn verify_path(g: &Graph, p: &PathSeq) -> bool {
    let vs = &p.vertices;
    if vs.is_empty() || !all_distinct_in_range(vs, g.n()) {
        return false;
    }
    vs.windows(2).all(|w| g.adjacent(w[0], w[1]))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonianVerdict {
    Found(CycleSeq),
    NotHamiltonian,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LongestCycleVerdict {
    Cycle(CycleSeq),
    Acyclic,
    BudgetExceeded,
}

/// Vertex classes with identical closed or open neighborhoods.
///
/// Swapping two such vertices maps Hamilton cycles to Hamilton cycles, so
/// the solver only ever branches on the smallest unvisited member.
/// Closed-twin classes (pairwise adjacent, equal closed neighborhoods)
/// additionally support state compression: permuting a class is a graph
/// automorphism, so remainder states that agree up to class membership
/// counts are interchangeable.
struct TwinClasses {
    /// `classes[c]` lists members ascending; a vertex appears in up to two
    /// classes (one closed-twin, one open-twin).
    classes: Vec<Vec<usize>>,
    of_vertex: Vec<Vec<usize>>,
    /// Closed-twin classes of size > 1 (a partition of their members).
    closed_classes: Vec<Vec<usize>>,
    /// Closed class id per vertex, or `usize::MAX` for singletons.
    closed_of: Vec<usize>,
}

impl TwinClasses {
    fn group_by_neighborhood(g: &Graph, closed: bool) -> Vec<Vec<usize>> {
        let mut by_key: std::collections::HashMap<Vec<u64>, Vec<usize>> =
            std::collections::HashMap::new();
        for v in 0..g.n() {
            let mut key = g.row(v).to_vec();
            if closed {
                key[v / 64] |= 1 << (v % 64);
            }
            by_key.entry(key).or_default().push(v);
        }
        let mut groups: Vec<Vec<usize>> = by_key.into_values().filter(|c| c.len() > 1).collect();
        groups.sort();
        groups
    }

    fn build(g: &Graph) -> Self {
        let n = g.n();
        let open = Self::group_by_neighborhood(g, false);
        let closed = Self::group_by_neighborhood(g, true);
        let mut classes = open;
        classes.extend(closed.iter().cloned());
        let mut of_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (ci, members) in classes.iter().enumerate() {
            for &v in members {
                of_vertex[v].push(ci);
            }
        }
        let mut closed_of = vec![usize::MAX; n];
        for (ci, members) in closed.iter().enumerate() {
            for &v in members {
                closed_of[v] = ci;
            }
        }
        TwinClasses {
            classes,
            of_vertex,
            closed_classes: closed,
            closed_of,
        }
    }

    /// Is some unvisited twin of `v` smaller than `v`?
    fn shadowed(&self, v: usize, visited: &[u64]) -> bool {
        self.of_vertex[v].iter().any(|&ci| {
            self.classes[ci]
                .iter()
                .take_while(|&&u| u < v)
                .any(|&u| visited[u / 64] >> (u % 64) & 1 == 0)
        })
    }
}

/// Failed remainder states kept at most this many; past the cap the
/// search stays correct, just re-explores.
const MEMO_CAP: usize = 1 << 20;

struct HamSearch<'g> {
    g: &'g Graph,
    n: usize,
    w: usize,
    start: usize,
    visited: Vec<u64>,
    path: Vec<usize>,
    twins: TwinClasses,
    /// Vertices belonging to some multi-member closed-twin class.
    classed_mask: Vec<u64>,
    budget: u64,
    expansions: u64,
    /// Remainder states proven not to complete. Whether a node can finish
    /// depends only on the unvisited set and the endpoint (the path's
    /// internal order is irrelevant), and closed-twin classes enter the
    /// key as visited counts because permuting a class is an
    /// automorphism.
    failed: std::collections::HashSet<Vec<u32>>,
    /// Per-depth scratch for the closure: `n` availability rows and `n`
    /// forced rows per depth level.
    avail: Vec<u64>,
    forced: Vec<u64>,
}

enum Step {
    Pruned,
    Candidates(Vec<usize>),
}

impl<'g> HamSearch<'g> {
    fn new(g: &'g Graph, budget: u64) -> Self {
        let n = g.n();
        let w = g.words_per_row();
        let twins = TwinClasses::build(g);
        let mut classed_mask = vec![0u64; w];
        for class in &twins.closed_classes {
            for &v in class {
                classed_mask[v / 64] |= 1 << (v % 64);
            }
        }
        HamSearch {
            g,
            n,
            w,
            start: 0,
            visited: vec![0; w],
            path: Vec::with_capacity(n),
            twins,
            classed_mask,
            budget,
            expansions: 0,
            failed: std::collections::HashSet::new(),
            avail: vec![0; (n + 1) * n * w],
            forced: vec![0; (n + 1) * n * w],
        }
    }

    /// Canonical remainder-state key: the endpoint (by closed-twin class
    /// when it has one), per-class visited counts, and the exact visited
    /// bits of class-free vertices.
    fn state_key(&self, endpoint: usize) -> Vec<u32> {
        let mut key = Vec::with_capacity(1 + self.twins.closed_classes.len() + 2 * self.w);
        let class = self.twins.closed_of[endpoint];
        key.push(if class == usize::MAX {
            endpoint as u32
        } else {
            0x8000_0000 | class as u32
        });
        for members in &self.twins.closed_classes {
            let count = members
                .iter()
                .filter(|&&v| Self::has(&self.visited, v))
                .count();
            key.push(count as u32);
        }
        for (vw, cm) in self.visited.iter().zip(&self.classed_mask) {
            let unclassed = vw & !cm;
            key.push(unclassed as u32);
            key.push((unclassed >> 32) as u32);
        }
        key
    }

    fn mark(words: &mut [u64], v: usize) {
        words[v / 64] |= 1 << (v % 64);
    }

    fn clear(words: &mut [u64], v: usize) {
        words[v / 64] &= !(1 << (v % 64));
    }

    fn has(words: &[u64], v: usize) -> bool {
        words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Quota of remaining cycle edges for a vertex of the completion
    /// problem: interior vertices need 2, the two path endpoints need 1.
    /// At the root the endpoint *is* the start and still needs both of its
    /// cycle edges.
    fn need(&self, v: usize, endpoint: usize) -> usize {
        if endpoint != self.start && (v == endpoint || v == self.start) {
            1
        } else {
            2
        }
    }

    /// Runs the forcing closure on the remainder graph at `depth` and
    /// returns the candidate successors of `endpoint`, or a prune.
    fn closure(&mut self, depth: usize, endpoint: usize) -> Step {
        let (n, w) = (self.n, self.w);
        let base = depth * n * w;
        let start = self.start;

        // active = unvisited + endpoint + start
        let mut active: Vec<u64> = self.visited.iter().map(|v| !v).collect();
        // mask off bits >= n
        if n % 64 != 0 {
            active[w - 1] &= (1u64 << (n % 64)) - 1;
        }
        Self::mark(&mut active, endpoint);
        Self::mark(&mut active, start);

        let active_vertices: Vec<usize> = bits(&active).collect();
        {
            let avail = &mut self.avail[base..base + n * w];
            let forced = &mut self.forced[base..base + n * w];
            avail.fill(0);
            forced.fill(0);
            for &v in &active_vertices {
                let row = self.g.row(v);
                for ((dst, r), a) in avail[v * w..(v + 1) * w].iter_mut().zip(row).zip(&active) {
                    *dst = r & a;
                }
            }
            // the endpoint-start edge is a closing edge, not a step
            avail[endpoint * w + start / 64] &= !(1 << (start % 64));
            avail[start * w + endpoint / 64] &= !(1 << (endpoint % 64));
        }

        loop {
            let mut changed = false;
            for &v in &active_vertices {
                let need = self.need(v, endpoint);
                let a = count_bits(&self.avail[base + v * w..base + (v + 1) * w]);
                if a < need {
                    return Step::Pruned;
                }
                if a == need {
                    // all remaining edges of v are forced
                    let row: Vec<u64> = self.avail[base + v * w..base + (v + 1) * w].to_vec();
                    for (i, &row_word) in row.iter().enumerate() {
                        let newly = row_word & !self.forced[base + v * w + i];
                        if newly != 0 {
                            changed = true;
                            self.forced[base + v * w + i] |= newly;
                            let mut m = newly;
                            while m != 0 {
                                let u = i * 64 + m.trailing_zeros() as usize;
                                m &= m - 1;
                                Self::mark(&mut self.forced[base + u * w..base + (u + 1) * w], v);
                            }
                        }
                    }
                }
                let f = count_bits(&self.forced[base + v * w..base + (v + 1) * w]);
                if f > need {
                    return Step::Pruned;
                }
                if f == need {
                    // v is saturated: drop its unforced availability
                    let mut dropped: Vec<usize> = Vec::new();
                    for i in 0..w {
                        let drop = self.avail[base + v * w + i] & !self.forced[base + v * w + i];
                        if drop != 0 {
                            changed = true;
                            self.avail[base + v * w + i] &= self.forced[base + v * w + i];
                            let mut m = drop;
                            while m != 0 {
                                dropped.push(i * 64 + m.trailing_zeros() as usize);
                                m &= m - 1;
                            }
                        }
                    }
                    for u in dropped {
                        Self::clear(&mut self.avail[base + u * w..base + (u + 1) * w], v);
                    }
                }
            }
            if !changed {
                break;
            }
        }

        // a forced cycle can never sit inside the path completion
        if self.forced_cycle(depth, &active_vertices, endpoint) {
            return Step::Pruned;
        }

        // the interior of any completion is the unvisited set, so it must
        // be connected under the surviving edges
        if !self.unvisited_connected(depth, &active, endpoint) {
            return Step::Pruned;
        }

        let forced_e = &self.forced[base + endpoint * w..base + (endpoint + 1) * w];
        if count_bits(forced_e) == 1 {
            return Step::Candidates(vec![bits(forced_e).next().unwrap()]);
        }
        let avail_e = &self.avail[base + endpoint * w..base + (endpoint + 1) * w];
        let cands = bits(avail_e)
            .filter(|&v| !self.twins.shadowed(v, &self.visited))
            .collect();
        Step::Candidates(cands)
    }

    fn forced_cycle(&self, depth: usize, active: &[usize], endpoint: usize) -> bool {
        let (n, w) = (self.n, self.w);
        let base = depth * n * w;
        let mut walked = vec![0u64; w];
        for &v in active {
            if v == endpoint || v == self.start || Self::has(&walked, v) {
                continue;
            }
            if count_bits(&self.forced[base + v * w..base + (v + 1) * w]) != 2 {
                continue;
            }
            // walk the forced chain through v in one direction
            let mut prev = v;
            let mut cur = bits(&self.forced[base + v * w..base + (v + 1) * w])
                .next()
                .unwrap();
            Self::mark(&mut walked, v);
            let mut len = 1usize;
            loop {
                if cur == v {
                    // a forced cycle is fatal unless it is the full
                    // Hamilton cycle itself (possible only at the root)
                    if len < self.n {
                        return true;
                    }
                    break;
                }
                Self::mark(&mut walked, cur);
                len += 1;
                let row = &self.forced[base + cur * w..base + (cur + 1) * w];
                match bits(row).find(|&x| x != prev) {
                    Some(next) if count_bits(row) == 2 => {
                        prev = cur;
                        cur = next;
                    }
                    _ => break, // chain ends
                }
            }
        }
        false
    }

    fn unvisited_connected(&self, depth: usize, active: &[u64], endpoint: usize) -> bool {
        let (n, w) = (self.n, self.w);
        let base = depth * n * w;
        let mut interior = active.to_vec();
        Self::clear(&mut interior, endpoint);
        Self::clear(&mut interior, self.start);
        let total = count_bits(&interior);
        if total <= 1 {
            return true;
        }
        let first = bits(&interior).next().unwrap();
        let mut seen = vec![0u64; w];
        Self::mark(&mut seen, first);
        let mut stack = vec![first];
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for i in 0..w {
                let row = self.avail[base + x * w + i] & interior[i];
                let mut fresh = row & !seen[i];
                seen[i] |= row & interior[i];
                while fresh != 0 {
                    let y = i * 64 + fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        reached == total
    }

    fn dfs(&mut self, depth: usize) -> HamiltonianVerdict {
        let endpoint = self.path[depth];
        if depth == self.n - 1 {
            return if self.g.adjacent(endpoint, self.start) {
                HamiltonianVerdict::Found(CycleSeq {
                    vertices: self.path.clone(),
                })
            } else {
                HamiltonianVerdict::NotHamiltonian
            };
        }
        let key = self.state_key(endpoint);
        if self.failed.contains(&key) {
            return HamiltonianVerdict::NotHamiltonian;
        }
        let cands = match self.closure(depth, endpoint) {
            Step::Pruned => return HamiltonianVerdict::NotHamiltonian,
            Step::Candidates(c) => c,
        };
        for v in cands {
            self.expansions += 1;
            if self.expansions > self.budget {
                return HamiltonianVerdict::BudgetExceeded;
            }
            Self::mark(&mut self.visited, v);
            self.path.push(v);
            let verdict = self.dfs(depth + 1);
            self.path.pop();
            Self::clear(&mut self.visited, v);
            match verdict {
                HamiltonianVerdict::NotHamiltonian => {}
                done => return done,
            }
        }
        if self.failed.len() < MEMO_CAP {
            self.failed.insert(key);
        }
        HamiltonianVerdict::NotHamiltonian
    }
}

/// Exact Hamiltonian cycle search. `Found` certifies a cycle,
/// `NotHamiltonian` certifies exhaustion, `BudgetExceeded` is inconclusive.
/// Deterministic: the path is rooted at vertex 0 and candidates are tried
/// in ascending id order.
pub fn find_hamiltonian_cycle(g: &Graph, budget: u64) -> Result<HamiltonianVerdict, CycleError> {
    let n = g.n();
    if n < 3 {
        return Err(CycleError::TooSmall(n));
    }
    if !g.is_connected() || (0..n).any(|v| g.degree(v) < 2) {
        return Ok(HamiltonianVerdict::NotHamiltonian);
    }
    let mut search = HamSearch::new(g, budget);
    HamSearch::mark(&mut search.visited, 0);
    search.path.push(0);
    Ok(search.dfs(0))
}

/// Exact longest cycle by anchored enumeration: each cycle is discovered
/// from its minimum vertex, and branches whose reachable extension cannot
/// beat the incumbent are cut.
pub fn longest_cycle(g: &Graph, budget: u64) -> LongestCycleVerdict {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    let mut expansions: u64 = 0;

    let mut path: Vec<usize> = Vec::with_capacity(n);
    let mut visited = vec![false; n];

    struct Ctx<'g> {
        g: &'g Graph,
        budget: u64,
    }

    fn reach_count(g: &Graph, from: usize, anchor: usize, visited: &[bool]) -> usize {
        // vertices > anchor, unvisited, reachable from `from`
        let mut seen = vec![false; g.n()];
        seen[from] = true;
        let mut stack = vec![from];
        let mut count = 0;
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x) {
                if y > anchor && !visited[y] && !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    fn rec(
        ctx: &Ctx,
        anchor: usize,
        path: &mut Vec<usize>,
        visited: &mut [bool],
        best: &mut Option<Vec<usize>>,
        expansions: &mut u64,
    ) -> bool {
        let last = *path.last().unwrap();
        if path.len() >= 3
            && ctx.g.adjacent(last, anchor)
            && best.as_ref().is_none_or(|b| path.len() > b.len())
        {
            *best = Some(path.clone());
        }
        let best_len = best.as_ref().map_or(0, |b| b.len());
        if path.len() + reach_count(ctx.g, last, anchor, visited) <= best_len {
            return true;
        }
        for v in ctx.g.neighbors(last) {
            if v > anchor && !visited[v] {
                *expansions += 1;
                if *expansions > ctx.budget {
                    return false;
                }
                visited[v] = true;
                path.push(v);
                let ok = rec(ctx, anchor, path, visited, best, expansions);
                path.pop();
                visited[v] = false;
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    let ctx = Ctx { g, budget };
    for a in 0..n {
        if best.as_ref().is_some_and(|b| b.len() == n) {
            break;
        }
        path.clear();
        path.push(a);
        visited.fill(false);
        visited[a] = true;
        if !rec(&ctx, a, &mut path, &mut visited, &mut best, &mut expansions) {
            return LongestCycleVerdict::BudgetExceeded;
        }
    }
    match best {
        Some(vertices) => LongestCycleVerdict::Cycle(CycleSeq { vertices }),
        None => LongestCycleVerdict::Acyclic,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;

    #[test]
    fn verifies_c5() {
        let c5 = Graph::cycle(5);
        assert!(verify_cycle(&c5, &vec![0, 1, 2, 3, 4].into()));
        assert!(!verify_cycle(&c5, &vec![0, 2, 1, 3, 4].into()));
        assert!(!verify_cycle(&c5, &vec![0, 1, 2, 1, 4].into()));
        assert!(!verify_cycle(&c5, &vec![0, 1].into()));
    }

    #[test]
    fn finds_cycle_in_c5_and_k4() {
        let found = find_hamiltonian_cycle(&Graph::cycle(5), DEFAULT_BUDGET).unwrap();
        match found {
            HamiltonianVerdict::Found(c) => {
                assert_eq!(c.vertices, vec![0, 1, 2, 3, 4]);
            }
            other => panic!("expected Found, got {other:?}"),
        }
        match find_hamiltonian_cycle(&Graph::complete(4), DEFAULT_BUDGET).unwrap() {
            HamiltonianVerdict::Found(c) => assert!(verify_cycle(&Graph::complete(4), &c)),
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn rejects_tiny_graphs() {
        assert_eq!(
            find_hamiltonian_cycle(&Graph::new(2, &[(0, 1)]).unwrap(), 1000),
            Err(CycleError::TooSmall(2))
        );
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // a graph the solver certainly cannot finish in 1 expansion
        let g = Graph::complete(8);
        assert_eq!(
            find_hamiltonian_cycle(&g, 1).unwrap(),
            HamiltonianVerdict::BudgetExceeded
        );
    }

    #[test]
    fn agrees_with_permutation_oracle_on_small_graphs() {
        for n in 3..=6usize {
            let edge_bits = n * (n - 1) / 2;
            let step = if n == 6 { 11 } else { 1 }; // sample n=6, full below
            let mut mask = 0u64;
            while mask < (1 << edge_bits) {
                let g = Graph::from_edge_mask(n, mask);
                let fast = find_hamiltonian_cycle(&g, DEFAULT_BUDGET).unwrap();
                let slow = brute::hamiltonian_cycle(&g);
                match (fast, slow) {
                    (HamiltonianVerdict::Found(c), Some(_)) => {
                        assert!(verify_cycle(&g, &c), "mask {mask} n {n}")
                    }
                    (HamiltonianVerdict::NotHamiltonian, None) => {}
                    (f, s) => panic!("disagreement at n={n} mask={mask}: {f:?} vs {s:?}"),
                }
                mask += step;
            }
        }
    }

    #[test]
    fn dirac_graphs_are_hamiltonian() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xd12ac);
        let mut tested = 0;
        while tested < 200 {
            let n = rng.gen_range(3..=11);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.6) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            if (0..n).any(|v| 2 * g.degree(v) < n) {
                continue;
            }
            tested += 1;
            match find_hamiltonian_cycle(&g, DEFAULT_BUDGET).unwrap() {
                HamiltonianVerdict::Found(c) => assert!(verify_cycle(&g, &c)),
                other => panic!("min degree >= n/2 graph must be hamiltonian, got {other:?}"),
            }
        }
    }

    #[test]
    fn longest_cycle_on_trees_and_cycles() {
        assert_eq!(
            longest_cycle(&Graph::path(6), DEFAULT_BUDGET),
            LongestCycleVerdict::Acyclic
        );
        match longest_cycle(&Graph::cycle(5), DEFAULT_BUDGET) {
            LongestCycleVerdict::Cycle(c) => assert_eq!(c.vertices.len(), 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn longest_cycle_matches_cycle_enumeration_oracle() {
        for n in 3..=5usize {
            let edge_bits = n * (n - 1) / 2;
            for mask in 0..(1u64 << edge_bits) {
                let g = Graph::from_edge_mask(n, mask);
                let fast = longest_cycle(&g, DEFAULT_BUDGET);
                let slow = brute::longest_cycle_len(&g);
                match (fast, slow) {
                    (LongestCycleVerdict::Cycle(c), Some(len)) => {
                        assert_eq!(c.vertices.len(), len, "n={n} mask={mask}");
                        assert!(verify_cycle(&g, &c));
                    }
                    (LongestCycleVerdict::Acyclic, None) => {}
                    (f, s) => panic!("disagreement n={n} mask={mask}: {f:?} vs {s:?}"),
                }
            }
        }
    }

    #[test]
    fn circumference_iff_hamiltonian() {
        for mask in (0..(1u64 << 15)).step_by(7) {
            let g = Graph::from_edge_mask(6, mask);
            let ham = matches!(
                find_hamiltonian_cycle(&g, DEFAULT_BUDGET).unwrap(),
                HamiltonianVerdict::Found(_)
            );
            let full = matches!(
                longest_cycle(&g, DEFAULT_BUDGET),
                LongestCycleVerdict::Cycle(ref c) if c.vertices.len() == 6
            );
            assert_eq!(ham, full, "mask {mask}");
        }
    }
}
