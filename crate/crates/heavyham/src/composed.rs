//! Composed graphs: the extension calculus of carriers, canonical
//! sequences, constructive Hamilton paths and spanning pairs, good-pair
//! discovery on cycles, and the cycle merge built from two good pairs.
//!
//! A carrier grows from a triangle on offsets `{-1, 0, 1}` by
//! 1-extensions (a new degree-2 vertex at the left or right extreme,
//! attached to the extreme and one other window vertex) and 2-extensions
//! (a new adjacent pendant pair at both extremes). A graph is
//! `(u, v, w)`-composed when some carrier spans it with `u, v, w` at
//! offsets `-k, 0, l`. Offsets are the API currency throughout; a single
//! `vertex_of` table translates to host ids.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::{verify_cycle, CycleSeq, PathSeq};
use crate::graph::Graph;
use crate::ore::{self, OreSequence};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComposedError {
    #[error("attach offset {attach} invalid for window [{lo}, {hi}] extending {end:?}")]
    BadAttach {
        attach: i32,
        lo: i32,
        hi: i32,
        end: End,
    },
    #[error("declared extents (k={k}, l={l}) do not match the steps (k={actual_k}, l={actual_l})")]
    ExtentMismatch {
        k: usize,
        l: usize,
        actual_k: usize,
        actual_l: usize,
    },
    #[error("vertex table has {got} entries, window needs {want}")]
    BadVertexTable { got: usize, want: usize },
    #[error("vertex table repeats host vertex {0}")]
    RepeatedVertex(usize),
    #[error("u, v, w must be three distinct vertices")]
    NotDistinct,
    #[error("offset {0} out of range for spanning pair")]
    BadPairOffset(i32),
    #[error("{0} is not strictly inside the arc between the flanking pair")]
    NotInsideArc(usize),
    #[error("vertex {0} does not lie on the cycle")]
    NotOnCycle(usize),
    #[error("invalid merge input: {0}")]
    MergeInput(String),
    #[error("good-pair witness failed re-verification: {0}")]
    BadWitness(String),
    #[error("no covering path with usable endpoints could be assembled")]
    MergeFailed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum End {
    Left,
    Right,
}

/// One growth step of a carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtensionStep {
    /// New degree-2 vertex at `end`, adjacent to the current extreme there
    /// and to the window vertex at offset `attach` (any offset in the
    /// window other than that extreme).
    One { end: End, attach: i32 },
    /// New pendant pair: a vertex beyond each extreme, each adjacent to
    /// its extreme, plus the edge between the two new vertices.
    Two,
}

/// The build recipe of a carrier: extents, steps, and the table sending
/// offset `o` (as index `o + k`) to a host vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalSequence {
    pub k: usize,
    pub l: usize,
    pub steps: Vec<ExtensionStep>,
    pub vertex_of: Vec<usize>,
}

impl CanonicalSequence {
    /// A sequence over its own offset indexing (host vertex `o + k`).
    pub fn from_steps(steps: Vec<ExtensionStep>) -> Result<Self, ComposedError> {
        let (mut k, mut l) = (1usize, 1usize);
        for step in &steps {
            match step {
                ExtensionStep::One { end: End::Left, .. } => k += 1,
                ExtensionStep::One {
                    end: End::Right, ..
                } => l += 1,
                ExtensionStep::Two => {
                    k += 1;
                    l += 1;
                }
            }
        }
        let seq = CanonicalSequence {
            k,
            l,
            steps,
            vertex_of: (0..k + l + 1).collect(),
        };
        seq.replay().map(|_| seq)
    }

    pub fn window_size(&self) -> usize {
        self.k + self.l + 1
    }

    pub fn host_vertex(&self, offset: i32) -> usize {
        self.vertex_of[(offset + self.k as i32) as usize]
    }

    /// Replays the steps from the initial triangle, validating every
    /// attach against its window, and returns the carrier.
    pub fn replay(&self) -> Result<Carrier, ComposedError> {
        let want = self.window_size();
        if self.vertex_of.len() != want {
            return Err(ComposedError::BadVertexTable {
                got: self.vertex_of.len(),
                want,
            });
        }
        let mut seen = HashSet::new();
        for &v in &self.vertex_of {
            if !seen.insert(v) {
                return Err(ComposedError::RepeatedVertex(v));
            }
        }
        let k = self.k as i32;
        let idx = |o: i32| (o + k) as usize;
        let mut g = Graph::empty(want);
        let (mut lo, mut hi) = (-1i32, 1i32);
        g.add_edge_unchecked(idx(-1), idx(0));
        g.add_edge_unchecked(idx(0), idx(1));
        g.add_edge_unchecked(idx(-1), idx(1));
        for step in &self.steps {
            match *step {
                ExtensionStep::One { end, attach } => {
                    let extreme = if end == End::Left { lo } else { hi };
                    if attach < lo || attach > hi || attach == extreme {
                        return Err(ComposedError::BadAttach {
                            attach,
                            lo,
                            hi,
                            end,
                        });
                    }
                    let new = if end == End::Left { lo - 1 } else { hi + 1 };
                    if new < -k || new > self.l as i32 {
                        return Err(ComposedError::ExtentMismatch {
                            k: self.k,
                            l: self.l,
                            actual_k: (-new.min(-k)) as usize,
                            actual_l: new.max(self.l as i32) as usize,
                        });
                    }
                    g.add_edge_unchecked(idx(new), idx(extreme));
                    g.add_edge_unchecked(idx(new), idx(attach));
                    if end == End::Left {
                        lo -= 1;
                    } else {
                        hi += 1;
                    }
                }
                ExtensionStep::Two => {
                    if lo - 1 < -k || hi + 1 > self.l as i32 {
                        return Err(ComposedError::ExtentMismatch {
                            k: self.k,
                            l: self.l,
                            actual_k: (1 - lo) as usize,
                            actual_l: (hi + 1) as usize,
                        });
                    }
                    g.add_edge_unchecked(idx(lo - 1), idx(lo));
                    g.add_edge_unchecked(idx(hi + 1), idx(hi));
                    g.add_edge_unchecked(idx(lo - 1), idx(hi + 1));
                    lo -= 1;
                    hi += 1;
                }
            }
        }
        if lo != -k || hi != self.l as i32 {
            return Err(ComposedError::ExtentMismatch {
                k: self.k,
                l: self.l,
                actual_k: (-lo) as usize,
                actual_l: hi as usize,
            });
        }
        Ok(Carrier {
            graph: g,
            k: self.k,
            l: self.l,
        })
    }

    /// Left-right reflection: offsets negate, left and right steps swap.
    fn mirror(&self) -> CanonicalSequence {
        let steps = self
            .steps
            .iter()
            .map(|s| match *s {
                ExtensionStep::One { end, attach } => ExtensionStep::One {
                    end: if end == End::Left {
                        End::Right
                    } else {
                        End::Left
                    },
                    attach: -attach,
                },
                ExtensionStep::Two => ExtensionStep::Two,
            })
            .collect();
        let mut vertex_of = self.vertex_of.clone();
        vertex_of.reverse();
        CanonicalSequence {
            k: self.l,
            l: self.k,
            steps,
            vertex_of,
        }
    }
}

/// A replayed carrier: its graph (vertex `o + k` plays offset `o`) and
/// extents.
#[derive(Debug, Clone)]
pub struct Carrier {
    pub graph: Graph,
    pub k: usize,
    pub l: usize,
}

impl Carrier {
    pub fn index(&self, offset: i32) -> usize {
        (offset + self.k as i32) as usize
    }

    pub fn adjacent(&self, a: i32, b: i32) -> bool {
        self.graph.adjacent(self.index(a), self.index(b))
    }

    pub fn offsets(&self) -> impl Iterator<Item = i32> {
        -(self.k as i32)..=self.l as i32
    }
}

/// Per-prefix tables driving the constructive path recursions.
struct StepTables {
    /// window `(k_t, l_t)` after `t` steps; index 0 is the triangle.
    windows: Vec<(i32, i32)>,
    steps: Vec<ExtensionStep>,
}

impl StepTables {
    fn build(seq: &CanonicalSequence) -> Self {
        let mut windows = vec![(1i32, 1i32)];
        let (mut k, mut l) = (1i32, 1i32);
        for s in &seq.steps {
            match s {
                ExtensionStep::One { end: End::Left, .. } => k += 1,
                ExtensionStep::One {
                    end: End::Right, ..
                } => l += 1,
                ExtensionStep::Two => {
                    k += 1;
                    l += 1;
                }
            }
            windows.push((k, l));
        }
        StepTables {
            windows,
            steps: seq.steps.clone(),
        }
    }

    /// Smallest prefix whose window contains `offset` (nonzero).
    fn birth(&self, offset: i32) -> usize {
        self.windows
            .iter()
            .position(|&(k, l)| -k <= offset && offset <= l)
            .expect("offset inside the final window")
    }
}

/// Both orientations of the step tables; the path constructions for one
/// orientation recurse into the other.
struct LemmaSolver {
    tables: [StepTables; 2],
}

impl LemmaSolver {
    fn new(seq: &CanonicalSequence) -> Self {
        LemmaSolver {
            tables: [StepTables::build(seq), StepTables::build(&seq.mirror())],
        }
    }

    /// Hamilton path of the prefix carrier `t` (in orientation `side`)
    /// from offset 0 to the left extreme `-k_t`.
    fn path_to_left(&self, side: usize, t: usize) -> Vec<i32> {
        let tab = &self.tables[side];
        if t == 0 {
            return vec![0, 1, -1];
        }
        let (k_t, l_t) = tab.windows[t];
        let last = tab.steps[t - 1];
        match last {
            ExtensionStep::One { end: End::Left, .. } => {
                // grow the previous left path by the new left vertex
                let mut p = self.path_to_left(side, t - 1);
                p.push(-k_t);
                p
            }
            _ => {
                // the right extreme is new; s is its second neighbor
                let s = match last {
                    ExtensionStep::One {
                        end: End::Right,
                        attach,
                    } => attach,
                    ExtensionStep::Two => -k_t,
                    ExtensionStep::One { end: End::Left, .. } => unreachable!(),
                };
                if s <= -2 {
                    // detour through the prefix that first saw s+1
                    let tp = tab.birth(s + 1);
                    let rp = tab.windows[tp].1;
                    let mut p = self.path_to_right(side, tp);
                    p.extend(rp + 1..=l_t);
                    p.extend((-k_t..=s).rev());
                    p
                } else if s == -1 {
                    let mut p: Vec<i32> = (0..=l_t).collect();
                    p.extend((-k_t..=-1).rev());
                    p
                } else {
                    // s in [0, l_t - 2]: the prefix path through s+1 is
                    // guaranteed to use the seam edge (s, s+1); reroute
                    // around it over the top
                    let tp = tab.birth(s + 1);
                    let kp = tab.windows[tp].0;
                    let p = self.path_to_left(side, tp);
                    let seam = p
                        .windows(2)
                        .position(|w| (w[0] == s && w[1] == s + 1) || (w[0] == s + 1 && w[1] == s))
                        .expect("degree-2 birth vertex keeps its seam edge on the path");
                    let (a, b) = p.split_at(seam + 1);
                    let mut out: Vec<i32> = a.to_vec();
                    if *a.last().unwrap() == s + 1 {
                        out.extend(s + 2..=l_t);
                        out.push(s);
                        out.extend(b[1..].iter().copied());
                    } else {
                        out.push(l_t);
                        out.extend((s + 1..l_t).rev());
                        out.extend(b[1..].iter().copied());
                    }
                    out.extend((-k_t..-kp).rev());
                    out
                }
            }
        }
    }

    /// Hamilton path of prefix `t` from offset 0 to the right extreme.
    fn path_to_right(&self, side: usize, t: usize) -> Vec<i32> {
        self.path_to_left(1 - side, t).iter().map(|o| -o).collect()
    }
}

/// Hamilton path of the carrier from offset 0 to the left extreme `-k`,
/// as a sequence of offsets.
pub fn hamilton_path_left(seq: &CanonicalSequence) -> Result<Vec<i32>, ComposedError> {
    seq.replay()?;
    let solver = LemmaSolver::new(seq);
    Ok(solver.path_to_left(0, seq.steps.len()))
}

/// Two disjoint paths covering the carrier, with origins `{0, l}` and
/// termini `{s, -k}`; the first returned path starts at 0, the second at
/// `l`. `s` may be any offset other than `-k`.
pub fn spanning_pair(
    seq: &CanonicalSequence,
    s: i32,
) -> Result<(Vec<i32>, Vec<i32>), ComposedError> {
    seq.replay()?;
    let (k, l) = (seq.k as i32, seq.l as i32);
    if s <= -k || s > l {
        return Err(ComposedError::BadPairOffset(s));
    }
    let solver = LemmaSolver::new(seq);
    let tab = &solver.tables[0];

    let (mut comp_a, mut comp_b): (Vec<i32>, Vec<i32>);
    if s <= 0 {
        // remove the seam (s-1, s) from the path through the prefix that
        // first saw s-1, then stretch both loose ends to the extremes
        let tp = tab.birth(s - 1);
        let rp = tab.windows[tp].1;
        let p = solver.path_to_right(0, tp);
        let seam = p
            .windows(2)
            .position(|w| (w[0] == s - 1 && w[1] == s) || (w[0] == s && w[1] == s - 1))
            .expect("degree-2 birth vertex keeps its seam edge on the path");
        let (a, b) = p.split_at(seam + 1);
        comp_a = a.to_vec();
        comp_b = b.to_vec();
        attach_run(&mut comp_a, &mut comp_b, rp, (rp + 1..=l).collect());
        attach_run(
            &mut comp_a,
            &mut comp_b,
            s - 1,
            (-k..=s - 2).rev().collect(),
        );
    } else if s == 1 {
        comp_a = (-k..=0).collect();
        comp_b = (1..=l).collect();
    } else {
        let tp = tab.birth(s - 1);
        let kp = tab.windows[tp].0;
        comp_a = solver.path_to_left(0, tp);
        comp_a.extend((-k..-kp).rev());
        comp_b = (s..=l).collect();
    }

    // orient: component containing 0 starts at 0, the other starts at l
    if comp_b.contains(&0) {
        std::mem::swap(&mut comp_a, &mut comp_b);
    }
    if *comp_a.first().unwrap() != 0 {
        comp_a.reverse();
    }
    if *comp_b.first().unwrap() != l {
        comp_b.reverse();
    }
    Ok((comp_a, comp_b))
}

/// Appends `run` to whichever component has `at` as an end (reversing the
/// component first when `at` is its head).
fn attach_run(a: &mut Vec<i32>, b: &mut Vec<i32>, at: i32, run: Vec<i32>) {
    if run.is_empty() {
        return;
    }
    for comp in [a, b] {
        if *comp.last().unwrap() == at {
            comp.extend(run);
            return;
        }
        if *comp.first().unwrap() == at {
            comp.reverse();
            comp.extend(run);
            return;
        }
    }
    unreachable!("run attachment point {at} is an end of neither component");
}

/// Postcondition checker for [`hamilton_path_left`].
pub fn verify_hamilton_path_left(carrier: &Carrier, path: &[i32]) -> bool {
    let n = carrier.graph.n();
    if path.len() != n {
        return false;
    }
    let mut seen = HashSet::new();
    if !path
        .iter()
        .all(|&o| o >= -(carrier.k as i32) && o <= carrier.l as i32 && seen.insert(o))
    {
        return false;
    }
    path[0] == 0
        && *path.last().unwrap() == -(carrier.k as i32)
        && path.windows(2).all(|w| carrier.adjacent(w[0], w[1]))
}

/// Postcondition checker for [`spanning_pair`].
pub fn verify_spanning_pair(carrier: &Carrier, pair: &(Vec<i32>, Vec<i32>), s: i32) -> bool {
    let (a, b) = pair;
    if a.is_empty() || b.is_empty() {
        return false;
    }
    let mut seen = HashSet::new();
    for comp in [a, b] {
        if !comp.iter().all(|&o| seen.insert(o)) {
            return false;
        }
        if !comp.windows(2).all(|w| carrier.adjacent(w[0], w[1])) {
            return false;
        }
    }
    if seen.len() != carrier.graph.n() {
        return false;
    }
    let l = carrier.l as i32;
    let neg_k = -(carrier.k as i32);
    let ends = |comp: &[i32]| (*comp.first().unwrap(), *comp.last().unwrap());
    let (a0, a1) = ends(a);
    let (b0, b1) = ends(b);
    // one component joins an origin {0, l} to a terminus {s, -k}, the
    // other joins the remaining origin to the remaining terminus
    [
        (a0, a1, b0, b1),
        (a0, a1, b1, b0),
        (a1, a0, b0, b1),
        (a1, a0, b1, b0),
    ]
    .iter()
    .any(|&(oa, ta, ob, tb)| {
        (oa == 0 && ob == l || oa == l && ob == 0)
            && (ta == s && tb == neg_k || ta == neg_k && tb == s)
    })
}

/// Searches for a canonical sequence demonstrating that `g` is
/// `(u, v, w)`-composed: a carrier spanning `g` with `u, v, w` at offsets
/// `-k, 0, l`. Returns the first sequence found in a fixed step order
/// (left, right, double; new vertices ascending); `None` is definitive.
pub fn recognize_composed(
    g: &Graph,
    u: usize,
    v: usize,
    w: usize,
) -> Result<Option<CanonicalSequence>, ComposedError> {
    if u == v || v == w || u == w {
        return Err(ComposedError::NotDistinct);
    }
    let n = g.n();
    if n < 3 || u >= n || v >= n || w >= n {
        return Ok(None);
    }

    struct Search<'a> {
        g: &'a Graph,
        u: usize,
        w: usize,
        n: usize,
        used: Vec<bool>,
        used_count: usize,
        offset_of: Vec<i32>,
        steps: Vec<ExtensionStep>,
        failed: HashSet<(Vec<u64>, usize, usize)>,
    }

    impl Search<'_> {
        fn state_key(&self, a: usize, b: usize) -> (Vec<u64>, usize, usize) {
            let mut words = vec![0u64; self.n.div_ceil(64)];
            for (v, &u) in self.used.iter().enumerate() {
                if u {
                    words[v / 64] |= 1 << (v % 64);
                }
            }
            (words, a, b)
        }

        /// `a`, `b` are the current extremes (host ids); `lo`, `hi` their
        /// offsets. Returns true when a full sequence has been built.
        fn dfs(&mut self, a: usize, b: usize, lo: i32, hi: i32) -> bool {
            if self.used_count == self.n {
                return a == self.u && b == self.w;
            }
            if (self.used[self.u] && a != self.u) || (self.used[self.w] && b != self.w) {
                return false;
            }
            let key = self.state_key(a, b);
            if self.failed.contains(&key) {
                return false;
            }

            let attach_for = |s: &Self, fresh: usize, extreme: usize| -> Option<i32> {
                s.g.neighbors(fresh)
                    .filter(|&z| s.used[z] && z != extreme)
                    .map(|z| s.offset_of[z])
                    .min()
            };

            if a != self.u {
                for y in 0..self.n {
                    if self.used[y] || !self.g.adjacent(y, a) {
                        continue;
                    }
                    if let Some(attach) = attach_for(self, y, a) {
                        self.place(y, lo - 1);
                        self.steps.push(ExtensionStep::One {
                            end: End::Left,
                            attach,
                        });
                        if self.dfs(y, b, lo - 1, hi) {
                            return true;
                        }
                        self.steps.pop();
                        self.unplace(y);
                    }
                }
            }
            if b != self.w {
                for y in 0..self.n {
                    if self.used[y] || !self.g.adjacent(y, b) {
                        continue;
                    }
                    if let Some(attach) = attach_for(self, y, b) {
                        self.place(y, hi + 1);
                        self.steps.push(ExtensionStep::One {
                            end: End::Right,
                            attach,
                        });
                        if self.dfs(a, y, lo, hi + 1) {
                            return true;
                        }
                        self.steps.pop();
                        self.unplace(y);
                    }
                }
            }
            if a != self.u && b != self.w {
                for y1 in 0..self.n {
                    if self.used[y1] || !self.g.adjacent(y1, a) {
                        continue;
                    }
                    for y2 in 0..self.n {
                        if y2 == y1 || self.used[y2] {
                            continue;
                        }
                        if !self.g.adjacent(y2, b) || !self.g.adjacent(y1, y2) {
                            continue;
                        }
                        self.place(y1, lo - 1);
                        self.place(y2, hi + 1);
                        self.steps.push(ExtensionStep::Two);
                        if self.dfs(y1, y2, lo - 1, hi + 1) {
                            return true;
                        }
                        self.steps.pop();
                        self.unplace(y2);
                        self.unplace(y1);
                    }
                }
            }
            self.failed.insert(key);
            false
        }

        fn place(&mut self, v: usize, offset: i32) {
            self.used[v] = true;
            self.used_count += 1;
            self.offset_of[v] = offset;
        }

        fn unplace(&mut self, v: usize) {
            self.used[v] = false;
            self.used_count -= 1;
        }
    }

    let mut search = Search {
        g,
        u,
        w,
        n,
        used: vec![false; n],
        used_count: 0,
        offset_of: vec![0; n],
        steps: Vec::new(),
        failed: HashSet::new(),
    };

    // every triangle of g through v, oriented both ways
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    for &p in &nbrs {
        for &q in &nbrs {
            if p == q || !g.adjacent(p, q) {
                continue;
            }
            // p plays offset -1, q plays +1
            if p == w || q == u {
                continue;
            }
            search.used_count = 0;
            search.used.fill(false);
            search.steps.clear();
            for (vertex, off) in [(v, 0), (p, -1), (q, 1)] {
                search.place(vertex, off);
            }
            if search.dfs(p, q, -1, 1) {
                let k = -search
                    .offset_of
                    .iter()
                    .zip(&search.used)
                    .filter(|&(_, &u)| u)
                    .map(|(&o, _)| o)
                    .min()
                    .unwrap();
                let size = search.used_count;
                let mut vertex_of = vec![0usize; size];
                for x in 0..n {
                    if search.used[x] {
                        vertex_of[(search.offset_of[x] + k) as usize] = x;
                    }
                }
                let seq = CanonicalSequence {
                    k: k as usize,
                    l: size - 1 - k as usize,
                    steps: search.steps.clone(),
                    vertex_of,
                };
                debug_assert!(seq.replay().is_ok());
                return Ok(Some(seq));
            }
        }
    }
    Ok(None)
}

/// Checks that `seq` replays to a spanning subgraph of `g` with `u, v, w`
/// at offsets `-k, 0, l`.
pub fn verify_recognition(
    g: &Graph,
    seq: &CanonicalSequence,
    u: usize,
    v: usize,
    w: usize,
) -> bool {
    let carrier = match seq.replay() {
        Ok(c) => c,
        Err(_) => return false,
    };
    if seq.vertex_of.len() != g.n() {
        return false;
    }
    if seq.host_vertex(-(seq.k as i32)) != u
        || seq.host_vertex(0) != v
        || seq.host_vertex(seq.l as i32) != w
    {
        return false;
    }
    let mut present = vec![false; g.n()];
    for &x in &seq.vertex_of {
        if x >= g.n() || present[x] {
            return false;
        }
        present[x] = true;
    }
    for a in carrier.offsets() {
        for b in carrier.offsets() {
            if a < b
                && carrier.adjacent(a, b)
                && !g.adjacent(seq.host_vertex(a), seq.host_vertex(b))
            {
                return false;
            }
        }
    }
    true
}

/// Witness that a flanking pair is good for its center on a cycle: a path
/// covering the arc minus one flank, a disjoint pair covering the whole
/// arc, and a heavy partner for that flank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodPairWitness {
    /// Center vertex the pair flanks.
    pub center: usize,
    /// The flanking pair `(x1, x2)` on the cycle.
    pub flanks: (usize, usize),
    /// Which flank is the heavy one: 1 or 2.
    pub j: u8,
    /// Partner with `d(flank_j) + d(x_prime) >= n`.
    pub x_prime: usize,
    /// Path from the center to the other flank covering the arc minus
    /// `flank_j`.
    pub path: PathSeq,
    /// Disjoint pair covering the arc: origins `{center, other flank}`,
    /// termini `{x_prime, flank_j}`.
    pub pair: (PathSeq, PathSeq),
}

/// The arc of `c` from `x1` to `x2` that passes through `x`, as a vertex
/// list (inclusive of both flanks). Errors when `x` is a flank, off the
/// cycle, or on the other arc.
fn arc_through(c: &CycleSeq, x: usize, x1: usize, x2: usize) -> Result<Vec<usize>, ComposedError> {
    let pos = |v: usize| {
        c.vertices
            .iter()
            .position(|&u| u == v)
            .ok_or(ComposedError::NotOnCycle(v))
    };
    let (p1, p2) = (pos(x1)?, pos(x2)?);
    pos(x)?;
    if x == x1 || x == x2 || x1 == x2 {
        return Err(ComposedError::NotInsideArc(x));
    }
    let len = c.vertices.len();
    let forward: Vec<usize> = (0..=(p2 + len - p1) % len)
        .map(|i| c.vertices[(p1 + i) % len])
        .collect();
    if forward.contains(&x) {
        return Ok(forward);
    }
    let backward: Vec<usize> = (0..=(p1 + len - p2) % len)
        .map(|i| c.vertices[(p2 + i) % len])
        .collect();
    if backward.contains(&x) {
        return Ok(backward);
    }
    Err(ComposedError::NotInsideArc(x))
}

/// Hamilton path search inside an allowed vertex set of the host graph.
fn hamilton_path_in(g: &Graph, allowed: &[bool], from: usize, to: usize) -> Option<Vec<usize>> {
    let want: usize = allowed.iter().filter(|&&a| a).count();
    if from == to {
        return (want == 1).then(|| vec![from]);
    }
    let mut path = vec![from];
    let mut used = vec![false; g.n()];
    used[from] = true;
    fn rec(
        g: &Graph,
        allowed: &[bool],
        to: usize,
        want: usize,
        path: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let last = *path.last().unwrap();
        if path.len() == want {
            return last == to;
        }
        for v in g.neighbors(last) {
            if allowed[v] && !used[v] && (v != to || path.len() == want - 1) {
                used[v] = true;
                path.push(v);
                if rec(g, allowed, to, want, path, used) {
                    return true;
                }
                path.pop();
                used[v] = false;
            }
        }
        false
    }
    rec(g, allowed, to, want, &mut path, &mut used).then_some(path)
}

/// First spanning disjoint path pair inside `arc`: one path from `o1`,
/// one from `o2`, termini `{t1, t2}` in either assignment.
fn spanning_pair_in(
    g: &Graph,
    arc: &[usize],
    (o1, o2): (usize, usize),
    (t1, t2): (usize, usize),
) -> Option<(Vec<usize>, Vec<usize>)> {
    let m = arc.len();
    for (ta, tb) in [(t1, t2), (t2, t1)] {
        for mask in 0u64..(1 << m) {
            let mut side = vec![false; g.n()];
            let mut other = vec![false; g.n()];
            let mut any = false;
            for (i, &v) in arc.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    side[v] = true;
                    any = true;
                } else {
                    other[v] = true;
                }
            }
            if !any || !side[o1] || !side[ta] || !other[o2] || !other[tb] {
                continue;
            }
            if let Some(p1) = hamilton_path_in(g, &side, o1, ta) {
                if let Some(p2) = hamilton_path_in(g, &other, o2, tb) {
                    return Some((p1, p2));
                }
            }
        }
    }
    None
}

/// Searches both flank roles and all partner choices for a witness that
/// `(x1, x2)` is good for `x` on `c`, exhaustively within the arc.
pub fn find_good_pair(
    g: &Graph,
    c: &CycleSeq,
    x: usize,
    x1: usize,
    x2: usize,
) -> Result<Option<GoodPairWitness>, ComposedError> {
    let arc = arc_through(c, x, x1, x2)?;
    let n = g.n();
    for j in [1u8, 2u8] {
        let (flank_j, other) = if j == 1 { (x1, x2) } else { (x2, x1) };
        // condition (1): path over the arc minus the heavy flank
        let mut allowed = vec![false; n];
        for &v in &arc {
            allowed[v] = true;
        }
        allowed[flank_j] = false;
        let path = match hamilton_path_in(g, &allowed, x, other) {
            Some(p) => p,
            None => continue,
        };
        for &x_prime in &arc {
            if x_prime == flank_j || g.degree(flank_j) + g.degree(x_prime) < n {
                continue;
            }
            // condition (2): spanning pair over the whole arc
            if let Some(pair) = spanning_pair_in(g, &arc, (x, other), (x_prime, flank_j)) {
                return Ok(Some(GoodPairWitness {
                    center: x,
                    flanks: (x1, x2),
                    j,
                    x_prime,
                    path: path.into(),
                    pair: (pair.0.into(), pair.1.into()),
                }));
            }
        }
    }
    Ok(None)
}

/// Re-derives every condition of a good-pair witness from scratch.
pub fn verify_good_pair(g: &Graph, c: &CycleSeq, wit: &GoodPairWitness) -> bool {
    let (x1, x2) = wit.flanks;
    let arc = match arc_through(c, wit.center, x1, x2) {
        Ok(a) => a,
        Err(_) => return false,
    };
    let arc_set: HashSet<usize> = arc.iter().copied().collect();
    let flank_j = if wit.j == 1 { x1 } else { x2 };
    let other = if wit.j == 1 { x2 } else { x1 };
    if wit.x_prime == flank_j || !arc_set.contains(&wit.x_prime) {
        return false;
    }
    if g.degree(flank_j) + g.degree(wit.x_prime) < g.n() {
        return false;
    }
    // (1)
    let p = &wit.path.vertices;
    let p_set: HashSet<usize> = p.iter().copied().collect();
    if !crate::cycles::verify_path(g, &wit.path)
        || p.first() != Some(&wit.center)
        || p.last() != Some(&other)
        || p_set.len() != p.len()
        || p_set.len() != arc.len() - 1
        || !p_set.is_subset(&arc_set)
        || p_set.contains(&flank_j)
    {
        return false;
    }
    // (2)
    let (d1, d2) = (&wit.pair.0, &wit.pair.1);
    let mut covered: HashSet<usize> = HashSet::new();
    for d in [d1, d2] {
        if !crate::cycles::verify_path(g, d) {
            return false;
        }
        for &v in &d.vertices {
            if !covered.insert(v) {
                return false;
            }
        }
    }
    if covered != arc_set {
        return false;
    }
    let ends = |p: &PathSeq| (p.vertices[0], *p.vertices.last().unwrap());
    let (a0, a1) = ends(d1);
    let (b0, b1) = ends(d2);
    let origins = [wit.center, other];
    let termini = [wit.x_prime, flank_j];
    [
        (a0, a1, b0, b1),
        (a0, a1, b1, b0),
        (a1, a0, b0, b1),
        (a1, a0, b1, b0),
    ]
    .iter()
    .any(|&(oa, ta, ob, tb)| {
        origins.contains(&oa)
            && origins.contains(&ob)
            && oa != ob
            && termini.contains(&ta)
            && termini.contains(&tb)
            && ta != tb
    })
}

/// Stitches edge-disjoint segments into a single simple path, returning
/// the vertex sequence when they form one.
fn stitch_path(segments: &[&[usize]], n: usize) -> Option<Vec<usize>> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut verts: HashSet<usize> = HashSet::new();
    for seg in segments {
        for &v in *seg {
            verts.insert(v);
        }
        for w in seg.windows(2) {
            if adj[w[0]].contains(&w[1]) {
                return None; // duplicated edge
            }
            adj[w[0]].push(w[1]);
            adj[w[1]].push(w[0]);
        }
    }
    let start = verts.iter().copied().filter(|&v| adj[v].len() == 1).min()?;
    if verts.iter().any(|&v| adj[v].len() > 2) {
        return None;
    }
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
        prev = cur;
        cur = next;
        path.push(cur);
        if path.len() > verts.len() {
            return None;
        }
    }
    (path.len() == verts.len()).then_some(path)
}

/// Merges a cycle with an internally disjoint ear using two good-pair
/// witnesses: assembles the covering paths the witnesses make possible,
/// picks one whose endpoints lie in the closure relation, closes it into
/// an o-cycle, and repairs that into a genuine cycle covering
/// `V(c) ∪ V(r)`.
///
/// Preconditions re-checked here: `r` runs from `wx.center` to
/// `wy.center`, is internally disjoint from `c`, the six anchor vertices
/// appear along `c` in the order `x2, x, x1, y1, y, y2` (with `x1 = y1`
/// or `x2 = y2` allowed), and both witnesses re-verify.
pub fn merge_via_good_pairs(
    g: &Graph,
    c: &CycleSeq,
    r: &PathSeq,
    wx: &GoodPairWitness,
    wy: &GoodPairWitness,
) -> Result<CycleSeq, ComposedError> {
    if !verify_cycle(g, c) {
        return Err(ComposedError::MergeInput("not a valid cycle".into()));
    }
    if !crate::cycles::verify_path(g, r) || r.vertices.len() < 2 {
        return Err(ComposedError::MergeInput("ear is not a valid path".into()));
    }
    let x = r.vertices[0];
    let y = *r.vertices.last().unwrap();
    if wx.center != x || wy.center != y {
        return Err(ComposedError::MergeInput(
            "witness centers must be the ear endpoints".into(),
        ));
    }
    let on_cycle: HashSet<usize> = c.vertices.iter().copied().collect();
    if !on_cycle.contains(&x) || !on_cycle.contains(&y) {
        return Err(ComposedError::MergeInput(
            "ear endpoints must lie on the cycle".into(),
        ));
    }
    if r.vertices[1..r.vertices.len() - 1]
        .iter()
        .any(|v| on_cycle.contains(v))
    {
        return Err(ComposedError::MergeInput(
            "ear interior touches the cycle".into(),
        ));
    }
    let (x1, x2) = wx.flanks;
    let (y1, y2) = wy.flanks;
    check_anchor_order(c, x2, x, x1, y1, y, y2)?;
    if !verify_good_pair(g, c, wx) {
        return Err(ComposedError::BadWitness("first witness".into()));
    }
    if !verify_good_pair(g, c, wy) {
        return Err(ComposedError::BadWitness("second witness".into()));
    }

    let q1 = arc_forward(c, x1, y1);
    let q2 = arc_forward(c, y2, x2);
    let target: HashSet<usize> = c.vertices.iter().chain(&r.vertices).copied().collect();

    let assemblies: [Vec<&[usize]>; 4] = [
        vec![
            &q1,
            &q2,
            &r.vertices,
            &wx.path.vertices,
            &wy.pair.0.vertices,
            &wy.pair.1.vertices,
        ],
        vec![
            &q1,
            &q2,
            &r.vertices,
            &wy.path.vertices,
            &wx.pair.0.vertices,
            &wx.pair.1.vertices,
        ],
        vec![&q1, &q2, &r.vertices, &wx.path.vertices, &wy.path.vertices],
        vec![
            &q1,
            &q2,
            &r.vertices,
            &wx.pair.0.vertices,
            &wx.pair.1.vertices,
            &wy.pair.0.vertices,
            &wy.pair.1.vertices,
        ],
    ];

    for segments in &assemblies {
        let segs: Vec<&[usize]> = segments.to_vec();
        if let Some(path) = stitch_path(&segs, g.n()) {
            if path.len() != target.len() || !path.iter().all(|v| target.contains(v)) {
                continue;
            }
            let (a, b) = (path[0], *path.last().unwrap());
            if !g.in_closure(a, b) {
                continue;
            }
            let ocycle = OreSequence::cyclic(path);
            let repaired = ore::repair(g, &ocycle).map_err(|e| {
                ComposedError::MergeInput(format!("assembled o-cycle invalid: {e}"))
            })?;
            debug_assert!(verify_cycle(g, &repaired));
            return Ok(repaired);
        }
    }
    Err(ComposedError::MergeFailed)
}

/// The arc of `c` from `a` forward to `b` in cycle orientation, inclusive.
fn arc_forward(c: &CycleSeq, a: usize, b: usize) -> Vec<usize> {
    let len = c.vertices.len();
    let pa = c.vertices.iter().position(|&v| v == a).unwrap();
    let pb = c.vertices.iter().position(|&v| v == b).unwrap();
    (0..=(pb + len - pa) % len)
        .map(|i| c.vertices[(pa + i) % len])
        .collect()
}

fn check_anchor_order(
    c: &CycleSeq,
    x2: usize,
    x: usize,
    x1: usize,
    y1: usize,
    y: usize,
    y2: usize,
) -> Result<(), ComposedError> {
    let len = c.vertices.len();
    let pos = |v: usize| {
        c.vertices
            .iter()
            .position(|&u| u == v)
            .ok_or(ComposedError::NotOnCycle(v))
    };
    let base = pos(x2)?;
    let rel = |v: usize| -> Result<usize, ComposedError> { Ok((pos(v)? + len - base) % len) };
    let (px, p1, q1, py, q2) = (rel(x)?, rel(x1)?, rel(y1)?, rel(y)?, rel(y2)?);
    // positions on the cycle are unique, so equalities below can only
    // come from equal vertices (x1 = y1 or x2 = y2 are the allowed ones)
    let ordered = 0 < px && px < p1 && p1 <= q1 && q1 < py && (y2 == x2 || py < q2);
    if ordered {
        Ok(())
    } else {
        Err(ComposedError::MergeInput(
            "anchors are not in cyclic order x2, x, x1, y1, y, y2".into(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;

    fn triangle_seq() -> CanonicalSequence {
        CanonicalSequence::from_steps(vec![]).unwrap()
    }

    #[test]
    fn replay_of_empty_steps_is_a_triangle() {
        let carrier = triangle_seq().replay().unwrap();
        assert_eq!(carrier.graph.n(), 3);
        assert_eq!(carrier.graph.edge_count(), 3);
        assert!(carrier.adjacent(-1, 0) && carrier.adjacent(0, 1) && carrier.adjacent(-1, 1));
    }

    #[test]
    fn replay_one_left_extension() {
        let seq = CanonicalSequence::from_steps(vec![ExtensionStep::One {
            end: End::Left,
            attach: 0,
        }])
        .unwrap();
        let carrier = seq.replay().unwrap();
        assert_eq!(carrier.graph.n(), 4);
        assert!(carrier.adjacent(-2, -1));
        assert!(carrier.adjacent(-2, 0));
        assert!(!carrier.adjacent(-2, 1));
    }

    #[test]
    fn replay_two_extension_links_the_new_pair() {
        let seq = CanonicalSequence::from_steps(vec![ExtensionStep::Two]).unwrap();
        let carrier = seq.replay().unwrap();
        assert_eq!(carrier.graph.n(), 5);
        assert!(carrier.adjacent(-2, -1));
        assert!(carrier.adjacent(2, 1));
        assert!(carrier.adjacent(-2, 2));
    }

    #[test]
    fn replay_rejects_bad_attach() {
        let seq = CanonicalSequence {
            k: 2,
            l: 1,
            steps: vec![ExtensionStep::One {
                end: End::Left,
                attach: -1,
            }],
            vertex_of: (0..4).collect(),
        };
        assert!(matches!(seq.replay(), Err(ComposedError::BadAttach { .. })));
    }

    #[test]
    fn triangle_hamilton_path() {
        assert_eq!(hamilton_path_left(&triangle_seq()).unwrap(), vec![0, 1, -1]);
    }

    #[test]
    fn one_left_extension_hamilton_path() {
        let seq = CanonicalSequence::from_steps(vec![ExtensionStep::One {
            end: End::Left,
            attach: 0,
        }])
        .unwrap();
        let carrier = seq.replay().unwrap();
        let p = hamilton_path_left(&seq).unwrap();
        assert!(verify_hamilton_path_left(&carrier, &p));
        assert_eq!(p, vec![0, 1, -1, -2]);
        // membership in the brute-force set of all such paths of the carrier
        let all =
            brute::hamilton_paths_between(&carrier.graph, carrier.index(0), carrier.index(-2));
        let as_idx: Vec<usize> = p.iter().map(|&o| carrier.index(o)).collect();
        assert!(all.contains(&as_idx));
    }

    #[test]
    fn triangle_spanning_pair_cases() {
        let seq = triangle_seq();
        let carrier = seq.replay().unwrap();
        let (a, b) = spanning_pair(&seq, 1).unwrap();
        assert!(verify_spanning_pair(&carrier, &(a.clone(), b.clone()), 1));
        assert_eq!(a, vec![0, -1]);
        assert_eq!(b, vec![1]);
        let pair0 = spanning_pair(&seq, 0).unwrap();
        assert!(verify_spanning_pair(&carrier, &pair0, 0));
        assert!(spanning_pair(&seq, -1).is_err());
        assert!(spanning_pair(&seq, 2).is_err());
    }

    fn random_sequence(rng: &mut impl rand::Rng, max_extra: usize) -> CanonicalSequence {
        let extra = rng.gen_range(0..=max_extra);
        let mut steps = Vec::new();
        let (mut k, mut l) = (1i32, 1i32);
        for _ in 0..extra {
            match rng.gen_range(0..3) {
                0 => {
                    let attach = rng.gen_range(-k + 1..=l);
                    steps.push(ExtensionStep::One {
                        end: End::Left,
                        attach,
                    });
                    k += 1;
                }
                1 => {
                    let attach = rng.gen_range(-k..=l - 1);
                    steps.push(ExtensionStep::One {
                        end: End::Right,
                        attach,
                    });
                    l += 1;
                }
                _ => {
                    steps.push(ExtensionStep::Two);
                    k += 1;
                    l += 1;
                }
            }
        }
        CanonicalSequence::from_steps(steps).unwrap()
    }

    #[test]
    fn random_sequences_satisfy_lemma_postconditions() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1e44a1);
        for _ in 0..200 {
            let seq = random_sequence(&mut rng, 15);
            let carrier = seq.replay().unwrap();
            // carriers are always 2-connected and the offset order is a
            // Hamilton path
            assert!(carrier.graph.is_two_connected());
            for o in carrier.offsets().skip(1) {
                assert!(carrier.adjacent(o - 1, o));
            }
            let p = hamilton_path_left(&seq).unwrap();
            assert!(verify_hamilton_path_left(&carrier, &p), "seq {seq:?}");
            let s = {
                use rand::Rng;
                rng.gen_range(-(seq.k as i32) + 1..=seq.l as i32)
            };
            let pair = spanning_pair(&seq, s).unwrap();
            assert!(
                verify_spanning_pair(&carrier, &pair, s),
                "seq {seq:?} s {s}"
            );
        }
    }

    #[test]
    fn small_sequences_match_brute_force_path_sets() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xb40c);
        for _ in 0..60 {
            let seq = random_sequence(&mut rng, 5);
            let carrier = seq.replay().unwrap();
            let p = hamilton_path_left(&seq).unwrap();
            let as_idx: Vec<usize> = p.iter().map(|&o| carrier.index(o)).collect();
            let all = brute::hamilton_paths_between(
                &carrier.graph,
                carrier.index(0),
                carrier.index(-(seq.k as i32)),
            );
            assert!(all.contains(&as_idx), "seq {seq:?}");

            let s = {
                use rand::Rng;
                rng.gen_range(-(seq.k as i32) + 1..=seq.l as i32)
            };
            let (pa, pb) = spanning_pair(&seq, s).unwrap();
            let pair_idx = (
                pa.iter().map(|&o| carrier.index(o)).collect::<Vec<_>>(),
                pb.iter().map(|&o| carrier.index(o)).collect::<Vec<_>>(),
            );
            let all_pairs = brute::spanning_pairs(
                &carrier.graph,
                (carrier.index(0), carrier.index(seq.l as i32)),
                (carrier.index(s), carrier.index(-(seq.k as i32))),
            );
            let matches = all_pairs.iter().any(|(a, b)| {
                let fwd = (a.clone(), b.clone());
                let mut rev_a = a.clone();
                let mut rev_b = b.clone();
                rev_a.reverse();
                rev_b.reverse();
                fwd == pair_idx
                    || (rev_a.clone(), b.clone()) == pair_idx
                    || (a.clone(), rev_b.clone()) == pair_idx
                    || (rev_a, rev_b) == pair_idx
            });
            assert!(matches, "seq {seq:?} s {s}");
        }
    }

    #[test]
    fn recognizes_triangles_and_k4_but_not_c4() {
        let c3 = Graph::cycle(3);
        for (u, v, w) in [(0, 1, 2), (2, 0, 1), (1, 2, 0)] {
            let seq = recognize_composed(&c3, u, v, w).unwrap().unwrap();
            assert!(verify_recognition(&c3, &seq, u, v, w));
        }
        let c4 = Graph::cycle(4);
        assert_eq!(recognize_composed(&c4, 0, 1, 2).unwrap(), None);
        let k4 = Graph::complete(4);
        let seq = recognize_composed(&k4, 0, 1, 2).unwrap().unwrap();
        assert!(verify_recognition(&k4, &seq, 0, 1, 2));
    }

    #[test]
    fn recognition_rejects_non_distinct_triples() {
        let c3 = Graph::cycle(3);
        assert_eq!(
            recognize_composed(&c3, 0, 0, 1),
            Err(ComposedError::NotDistinct)
        );
    }

    #[test]
    fn recognition_agrees_with_ordering_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xc0de);
        for _ in 0..400 {
            let n = rng.gen_range(3..=6);
            let bits = n * (n - 1) / 2;
            let mask = rng.gen_range(0..(1u64 << bits));
            let g = Graph::from_edge_mask(n, mask);
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n);
            while v == u {
                v = rng.gen_range(0..n);
            }
            let mut w = rng.gen_range(0..n);
            while w == u || w == v {
                w = rng.gen_range(0..n);
            }
            let fast = recognize_composed(&g, u, v, w).unwrap();
            let slow = brute::is_composed(&g, u, v, w);
            match fast {
                Some(seq) => {
                    assert!(
                        slow,
                        "recognizer found sequence oracle rejects: n={n} mask={mask}"
                    );
                    assert!(verify_recognition(&g, &seq, u, v, w));
                }
                None => assert!(
                    !slow,
                    "oracle composed but recognizer failed: n={n} mask={mask} ({u},{v},{w})"
                ),
            }
        }
    }

    #[test]
    fn good_pair_on_c4() {
        let c4 = Graph::cycle(4);
        let cyc: CycleSeq = vec![0, 1, 2, 3].into();
        let wit = find_good_pair(&c4, &cyc, 1, 2, 0).unwrap().unwrap();
        assert!(verify_good_pair(&c4, &cyc, &wit));
        // the arc through 1 is {0, 1, 2}
        let arc = arc_through(&cyc, 1, 2, 0).unwrap();
        let arc_set: std::collections::HashSet<_> = arc.into_iter().collect();
        assert_eq!(arc_set, [0, 1, 2].into_iter().collect());
    }

    #[test]
    fn good_pair_requires_center_inside_arc() {
        let c5 = Graph::cycle(5);
        let cyc: CycleSeq = vec![0, 1, 2, 3, 4].into();
        assert!(find_good_pair(&c5, &cyc, 2, 2, 0).is_err());
    }

    #[test]
    fn no_good_pair_without_heavy_vertices() {
        // a long cycle has tiny degrees, so condition (3) can never hold
        let c8 = Graph::cycle(8);
        let cyc: CycleSeq = (0..8).collect::<Vec<_>>().into();
        assert_eq!(find_good_pair(&c8, &cyc, 1, 2, 0).unwrap(), None);
    }

    #[test]
    fn good_pair_matching_single_vertex_component() {
        // dense host: triangle-rich neighborhood around offset pattern
        // resembling the degenerate pair with a singleton component
        let g = Graph::new(
            5,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 2),
                (1, 3),
                (2, 4),
            ],
        )
        .unwrap();
        let cyc: CycleSeq = vec![0, 1, 2, 3, 4].into();
        let wit = find_good_pair(&g, &cyc, 1, 2, 0).unwrap().unwrap();
        assert!(verify_good_pair(&g, &cyc, &wit));
    }

    #[test]
    fn stitcher_assembles_and_rejects() {
        // segments forming 0-1-2-3
        let segs: Vec<&[usize]> = vec![&[0, 1], &[1, 2, 3]];
        assert_eq!(stitch_path(&segs, 4), Some(vec![0, 1, 2, 3]));
        // a branch is rejected
        let segs: Vec<&[usize]> = vec![&[0, 1], &[1, 2], &[1, 3]];
        assert_eq!(stitch_path(&segs, 4), None);
        // a cycle is rejected
        let segs: Vec<&[usize]> = vec![&[0, 1, 2], &[2, 0]];
        assert_eq!(stitch_path(&segs, 3), None);
    }
}
