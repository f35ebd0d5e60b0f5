//! The two non-Hamiltonian witness families.
//!
//! `build_f(r)`: a clique block `W` on `r` vertices, three connector
//! vertices `x1..x3` each adjacent to all of `W`, satellite triangles
//! `{xi, yi, zi}`, and the triangle `{z1, z2, z3}`. For `r >= 5` this is
//! 2-connected, claw-heavy and P6-heavy yet has no Hamilton cycle.
//!
//! `build_g_prime(r)`: the same graph with `W` split into three equal
//! parts and the edges from each `xi` into its own part deleted, which
//! kills every claw; for `r >= 15` (divisible by 3) the connector pairs
//! stay heavy, so the graph is claw-free, P6-heavy and non-Hamiltonian.
//!
//! Vertex layout is stable for fixtures: `W = 0..r`, then
//! `x1, y1, z1, x2, y2, z2, x3, y3, z3`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("family needs a clique on at least 3 vertices, got r = {0}")]
    BlockTooSmall(usize),
    #[error("the partitioned variant needs r divisible by 3, got r = {0}")]
    NotDivisible(usize),
}

/// A built family member with its labeling: `w1..wr` for the clique
/// block and `x1..z3` for the satellites.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub graph: Graph,
    pub labels: BTreeMap<String, usize>,
}

impl FamilyInstance {
    pub fn vertex(&self, label: &str) -> usize {
        self.labels[label]
    }

    pub fn block_size(&self) -> usize {
        self.graph.n() - 9
    }
}

fn family_edges(r: usize) -> (Vec<(usize, usize)>, BTreeMap<String, usize>) {
    let x = |i: usize| r + 3 * i; // i in 0..3
    let y = |i: usize| r + 3 * i + 1;
    let z = |i: usize| r + 3 * i + 2;
    let mut edges = Vec::new();
    for u in 0..r {
        for v in u + 1..r {
            edges.push((u, v));
        }
    }
    for i in 0..3 {
        for w in 0..r {
            edges.push((x(i), w));
        }
        edges.push((x(i), y(i)));
        edges.push((x(i), z(i)));
        edges.push((y(i), z(i)));
    }
    edges.push((z(0), z(1)));
    edges.push((z(1), z(2)));
    edges.push((z(0), z(2)));

    let mut labels = BTreeMap::new();
    for w in 0..r {
        labels.insert(format!("w{}", w + 1), w);
    }
    for i in 0..3 {
        labels.insert(format!("x{}", i + 1), x(i));
        labels.insert(format!("y{}", i + 1), y(i));
        labels.insert(format!("z{}", i + 1), z(i));
    }
    (edges, labels)
}

/// The clique-block family member on `r + 9` vertices.
pub fn build_f(r: usize) -> Result<FamilyInstance, ConstructionError> {
    if r < 3 {
        return Err(ConstructionError::BlockTooSmall(r));
    }
    let (edges, labels) = family_edges(r);
    let graph = Graph::new(r + 9, &edges).expect("family edges are valid");
    Ok(FamilyInstance { graph, labels })
}

/// The claw-free variant: `W` is split into three equal parts by id
/// (`V1` the first `r/3` vertices and so on) and each `xi` loses its
/// edges into `Vi`.
pub fn build_g_prime(r: usize) -> Result<FamilyInstance, ConstructionError> {
    if r < 3 {
        return Err(ConstructionError::BlockTooSmall(r));
    }
    if !r.is_multiple_of(3) {
        return Err(ConstructionError::NotDivisible(r));
    }
    let (edges, labels) = family_edges(r);
    let part = r / 3;
    let kept: Vec<(usize, usize)> = edges
        .into_iter()
        .filter(|&(u, v)| {
            let (lo, hi) = (u.min(v), u.max(v));
            if lo < r && hi >= r && (hi - r).is_multiple_of(3) {
                let i = (hi - r) / 3; // hi is x_{i+1}
                let in_part = lo / part == i;
                !in_part
            } else {
                true
            }
        })
        .collect();
    let graph = Graph::new(r + 9, &kept).expect("family edges are valid");
    Ok(FamilyInstance { graph, labels })
}

/// Structural non-Hamiltonicity certificate for both families, checked
/// directly on the emitted graph rather than trusting the constructor:
/// each `yi` has degree 2, so any Hamilton cycle would contain the paths
/// `xi-yi-zi`; a `zi-xi` edge would close a 3-cycle, so each satellite
/// needs one of the three `z`-triangle edges as its exit, and no two of
/// those edges may share an endpoint — three exits cannot be served.
pub fn has_satellite_obstruction(inst: &FamilyInstance) -> bool {
    let g = &inst.graph;
    let n = g.n();
    if n <= 3 {
        return false;
    }
    for i in 1..=3 {
        let x = inst.vertex(&format!("x{i}"));
        let y = inst.vertex(&format!("y{i}"));
        let z = inst.vertex(&format!("z{i}"));
        // the forced degree-2 structure at y
        if g.degree(y) != 2 || !g.adjacent(y, x) || !g.adjacent(y, z) {
            return false;
        }
        // z reaches only its satellite and the other two z vertices
        let allowed: Vec<usize> = (1..=3)
            .filter(|&j| j != i)
            .map(|j| inst.vertex(&format!("z{j}")))
            .chain([x, y])
            .collect();
        if !g.neighbors(z).all(|u| allowed.contains(&u)) {
            return false;
        }
    }
    // the three z-exits would need >= 2 z-triangle edges, but any two of
    // those share an endpoint, giving that z three cycle edges
    true
}
