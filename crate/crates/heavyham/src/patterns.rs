//! The named pattern graphs, induced-embedding enumeration, and the
//! free / heavy predicates.
//!
//! An induced copy of a pattern is *heavy* when it contains two nonadjacent
//! vertices whose degree sum **in the host graph** is at least `n`. A graph
//! is `H`-heavy when every induced copy of `H` is heavy; in particular an
//! `H`-free graph is vacuously `H`-heavy.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("path and triangle-tail patterns need a parameter of at least 1, got {0}")]
    BadParameter(u32),
    #[error("unknown pattern name {0:?}")]
    UnknownName(String),
}

/// Identifier for the pattern zoo.
///
/// Fixed labeling convention, used by every builder so witnesses are
/// reproducible: vertices `0,1,2` form the base triangle where one exists,
/// and pendant structure is appended in increasing id order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternId {
    /// The claw: center 0, end vertices 1..=3.
    K13,
    /// Path on `i` vertices: 0-1-...-(i-1).
    P(u32),
    /// Triangle.
    C3,
    /// Triangle 0,1,2 with a pendant path of `i` edges at vertex 2.
    Z(u32),
    /// Bull: triangle 0,1,2 with pendants 3 at 0 and 4 at 1.
    B,
    /// Net: triangle 0,1,2 with pendants 3,4,5 at 0,1,2.
    N,
    /// Wounded: triangle 0,1,2, pendant 3 at 0, pendant 2-path 1-4-5.
    W,
    /// Deer: triangle 0,1,2 with pendant 2-paths 0-3-4 and 1-5-6.
    D,
    /// Hourglass: triangles 0,1,2 and 2,3,4 sharing vertex 2.
    H,
    /// Triangle 0,1,2 with pendant paths of lengths 1,1,2: pendants 3 at 0,
    /// 4 at 1, and the 2-path 2-5-6.
    N112,
    /// Hourglass with pendants 5 and 6 at the degree-2 vertices 0 and 1 of
    /// its first triangle.
    H11,
}

impl PatternId {
    /// Every pattern name the CLI accepts, in canonical spelling.
    pub const CLI_NAMES: &'static [&'static str] = &[
        "K1,3", "P4", "P5", "P6", "P7", "C3", "Z1", "Z2", "Z3", "B", "N", "W", "D", "H", "N112",
        "H11",
    ];

    pub fn build(self) -> Result<Graph, PatternError> {
        let edges: Vec<(usize, usize)> = match self {
            PatternId::K13 => vec![(0, 1), (0, 2), (0, 3)],
            PatternId::P(i) => {
                if i < 1 {
                    return Err(PatternError::BadParameter(i));
                }
                (1..i as usize).map(|v| (v - 1, v)).collect()
            }
            PatternId::C3 => vec![(0, 1), (0, 2), (1, 2)],
            PatternId::Z(i) => {
                if i < 1 {
                    return Err(PatternError::BadParameter(i));
                }
                let mut e = vec![(0, 1), (0, 2), (1, 2)];
                e.extend((0..i as usize).map(|j| (2 + j, 3 + j)));
                e
            }
            PatternId::B => vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)],
            PatternId::N => vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)],
            PatternId::W => vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (4, 5)],
            PatternId::D => vec![(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (1, 5), (5, 6)],
            PatternId::H => vec![(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)],
            PatternId::N112 => {
                vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5), (5, 6)]
            }
            PatternId::H11 => {
                vec![
                    (0, 1),
                    (0, 2),
                    (1, 2),
                    (2, 3),
                    (2, 4),
                    (3, 4),
                    (0, 5),
                    (1, 6),
                ]
            }
        };
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(1);
        Ok(Graph::new(n, &edges).expect("pattern builders emit valid edge lists"))
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternId::K13 => write!(f, "K1,3"),
            PatternId::P(i) => write!(f, "P{i}"),
            PatternId::C3 => write!(f, "C3"),
            PatternId::Z(i) => write!(f, "Z{i}"),
            PatternId::B => write!(f, "B"),
            PatternId::N => write!(f, "N"),
            PatternId::W => write!(f, "W"),
            PatternId::D => write!(f, "D"),
            PatternId::H => write!(f, "H"),
            PatternId::N112 => write!(f, "N112"),
            PatternId::H11 => write!(f, "H11"),
        }
    }
}

impl FromStr for PatternId {
    type Err = PatternError;

    /// Case-insensitive. `K1,3` and `K13` both name the claw; `N1,1,2` and
    /// `H1,1` are accepted alongside `N112` and `H11`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s
            .trim()
            .chars()
            .filter(|c| *c != ',')
            .collect::<String>()
            .to_ascii_uppercase();
        let id = match t.as_str() {
            "K13" => PatternId::K13,
            "C3" => PatternId::C3,
            "B" => PatternId::B,
            "N" => PatternId::N,
            "W" => PatternId::W,
            "D" => PatternId::D,
            "H" => PatternId::H,
            "N112" => PatternId::N112,
            "H11" => PatternId::H11,
            _ => {
                let (head, digits) = t.split_at(1);
                let param: u32 = digits
                    .parse()
                    .map_err(|_| PatternError::UnknownName(s.to_string()))?;
                match head {
                    "P" => PatternId::P(param),
                    "Z" => PatternId::Z(param),
                    _ => return Err(PatternError::UnknownName(s.to_string())),
                }
            }
        };
        if let PatternId::P(0) | PatternId::Z(0) = id {
            return Err(PatternError::BadParameter(0));
        }
        Ok(id)
    }
}

impl Serialize for PatternId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PatternId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// A located induced copy of a pattern inside a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    /// The host vertices covered by the copy.
    pub subset: VertexSet,
    /// `witness[p]` is the host vertex playing pattern vertex `p`.
    pub witness: Vec<usize>,
}

/// Backtracking search for induced embeddings of `h` in `g`.
///
/// Pattern vertices are matched in a connected order (each one adjacent to
/// some earlier one whenever the pattern is connected), with candidates
/// filtered by degree and exact adjacency against all earlier assignments.
/// The visitor receives one witness per subset; duplicate subsets reached
/// through pattern automorphisms are suppressed.
fn for_each_embedding<F>(g: &Graph, h: &Graph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let np = h.n();
    if np > g.n() {
        return ControlFlow::Continue(());
    }

    // connected search order, highest degree first
    let mut order: Vec<usize> = Vec::with_capacity(np);
    let mut placed = vec![false; np];
    while order.len() < np {
        let next = (0..np)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let attached = order.iter().filter(|&&q| h.adjacent(p, q)).count();
                (attached, h.degree(p), std::cmp::Reverse(p))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let h_deg: Vec<usize> = order.iter().map(|&p| h.degree(p)).collect();
    // adjacency of order[i] to each earlier order[j]
    let earlier_adj: Vec<Vec<bool>> = (0..np)
        .map(|i| (0..i).map(|j| h.adjacent(order[i], order[j])).collect())
        .collect();

    let mut assigned = vec![usize::MAX; np]; // by position in `order`
    let mut used = vec![false; g.n()];
    let mut seen_subsets = std::collections::HashSet::new();

    #[allow(clippy::too_many_arguments)]
    fn rec<F>(
        g: &Graph,
        np: usize,
        depth: usize,
        h_deg: &[usize],
        earlier_adj: &[Vec<bool>],
        assigned: &mut [usize],
        used: &mut [bool],
        order: &[usize],
        seen: &mut std::collections::HashSet<Vec<usize>>,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == np {
            let mut subset: Vec<usize> = assigned.to_vec();
            subset.sort_unstable();
            if seen.insert(subset) {
                let mut witness = vec![0usize; np];
                for (pos, &p) in order.iter().enumerate() {
                    witness[p] = assigned[pos];
                }
                return visit(&witness);
            }
            return ControlFlow::Continue(());
        }
        'cand: for v in 0..g.n() {
            if used[v] || g.degree(v) < h_deg[depth] {
                continue;
            }
            for j in 0..depth {
                if g.adjacent(v, assigned[j]) != earlier_adj[depth][j] {
                    continue 'cand;
                }
            }
            assigned[depth] = v;
            used[v] = true;
            let flow = rec(
                g,
                np,
                depth + 1,
                h_deg,
                earlier_adj,
                assigned,
                used,
                order,
                seen,
                visit,
            );
            used[v] = false;
            assigned[depth] = usize::MAX;
            flow?;
        }
        ControlFlow::Continue(())
    }

    rec(
        g,
        np,
        0,
        &h_deg,
        &earlier_adj,
        &mut assigned,
        &mut used,
        &order,
        &mut seen_subsets,
        &mut visit,
    )
}

/// Every induced copy of `h` in `g`, one witness per vertex subset, in
/// ascending order of the sorted subset.
pub fn enumerate_induced(g: &Graph, h: &Graph) -> Vec<Embedding> {
    let mut found: Vec<Embedding> = Vec::new();
    let _ = for_each_embedding(g, h, |witness| {
        let subset = VertexSet::from_iter(g.n(), witness.iter().copied());
        found.push(Embedding {
            subset,
            witness: witness.to_vec(),
        });
        ControlFlow::Continue(())
    });
    found.sort_by_cached_key(|e| e.subset.iter().collect::<Vec<_>>());
    found
}

pub fn is_free(g: &Graph, h: &Graph) -> bool {
    for_each_embedding(g, h, |_| ControlFlow::Break(())).is_continue()
}

/// Whether the induced copy located by `e` contains two nonadjacent
/// vertices with host-degree sum at least `n`.
pub fn is_heavy_embedding(g: &Graph, e: &Embedding) -> bool {
    let verts: Vec<usize> = e.subset.iter().collect();
    subset_has_heavy_pair(g, &verts)
}

fn subset_has_heavy_pair(g: &Graph, verts: &[usize]) -> bool {
    let n = g.n();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if !g.adjacent(u, v) && g.degree(u) + g.degree(v) >= n {
                return true;
            }
        }
    }
    false
}

/// The first non-heavy induced copy of `h` in search order, when
/// heaviness fails; `None` means `g` is `h`-heavy.
pub fn first_non_heavy_embedding(g: &Graph, h: &Graph) -> Option<Embedding> {
    let mut hit = None;
    let _ = for_each_embedding(g, h, |witness| {
        if subset_has_heavy_pair(g, witness) {
            ControlFlow::Continue(())
        } else {
            hit = Some(Embedding {
                subset: VertexSet::from_iter(g.n(), witness.iter().copied()),
                witness: witness.to_vec(),
            });
            ControlFlow::Break(())
        }
    });
    hit
}

/// Every induced copy of `h` is heavy; vacuously true when `g` is `h`-free.
pub fn is_h_heavy(g: &Graph, h: &Graph) -> bool {
    for_each_embedding(g, h, |witness| {
        if subset_has_heavy_pair(g, witness) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    })
    .is_continue()
}

pub fn is_family_heavy(g: &Graph, hs: &[Graph]) -> bool {
    hs.iter().all(|h| is_h_heavy(g, h))
}
