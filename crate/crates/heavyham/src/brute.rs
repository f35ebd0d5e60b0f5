//! Reference implementations by exhaustive search.
//!
//! Everything in here is deliberately naive: subset scans, permutation
//! scans, and ordering enumerations with no shared machinery from the fast
//! paths. The test and acceptance suites compare the real implementations
//! against these on small graphs.

use crate::graph::{Graph, VertexSet};

/// All `k`-subsets of `0..n` in ascending lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items = items.to_vec();
    fn rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, out);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, &mut out);
    out
}

/// Does `subset` of `g` induce a graph isomorphic to `h`? Tries every
/// bijection.
pub fn is_induced_copy(g: &Graph, subset: &[usize], h: &Graph) -> bool {
    if subset.len() != h.n() {
        return false;
    }
    'perm: for perm in permutations(subset) {
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if g.adjacent(perm[i], perm[j]) != h.adjacent(i, j) {
                    continue 'perm;
                }
            }
        }
        return true;
    }
    false
}

/// All vertex subsets of `g` inducing a copy of `h`, ascending.
pub fn induced_subsets(g: &Graph, h: &Graph) -> Vec<Vec<usize>> {
    if h.n() > g.n() {
        return Vec::new();
    }
    subsets(g.n(), h.n())
        .into_iter()
        .filter(|s| is_induced_copy(g, s, h))
        .collect()
}

/// Delete-one-vertex connectivity oracle for 2-connectedness.
pub fn two_connected(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || !g.is_connected() {
        return false;
    }
    for cut in 0..n {
        let rest = VertexSet::from_iter(n, (0..n).filter(|&v| v != cut));
        let (sub, _) = g.induced_subgraph(&rest).expect("nonempty");
        if !sub.is_connected() {
            return false;
        }
    }
    true
}

/// Permutation-scan Hamiltonian cycle oracle: fixes vertex 0 and extends
/// by ascending next vertex, keeping only adjacency to the previous vertex.
pub fn hamiltonian_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    let mut path = vec![0usize];
    let mut used = vec![false; n];
    used[0] = true;
    fn rec(g: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if path.len() == g.n() {
            return g.adjacent(*path.last().unwrap(), path[0]);
        }
        let last = *path.last().unwrap();
        for v in 0..g.n() {
            if !used[v] && g.adjacent(last, v) {
                used[v] = true;
                path.push(v);
                if rec(g, path, used) {
                    return true;
                }
                path.pop();
                used[v] = false;
            }
        }
        false
    }
    if rec(g, &mut path, &mut used) {
        Some(path)
    } else {
        None
    }
}

/// Length of a longest cycle by enumerating every simple cycle, anchored
/// at its minimum vertex. `None` when the graph is acyclic.
pub fn longest_cycle_len(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut path = Vec::new();
    let mut used = vec![false; n];
    fn rec(
        g: &Graph,
        anchor: usize,
        path: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut Option<usize>,
    ) {
        let last = *path.last().unwrap();
        if path.len() >= 3 && g.adjacent(last, anchor) {
            let len = path.len();
            if best.is_none_or(|b| len > b) {
                *best = Some(len);
            }
        }
        for v in anchor + 1..g.n() {
            if !used[v] && g.adjacent(last, v) {
                used[v] = true;
                path.push(v);
                rec(g, anchor, path, used, best);
                path.pop();
                used[v] = false;
            }
        }
    }
    for a in 0..n {
        path.clear();
        path.push(a);
        used.fill(false);
        used[a] = true;
        rec(g, a, &mut path, &mut used, &mut best);
    }
    best
}

/// All Hamilton `(a, b)`-paths of `g`, as sequences from `a` to `b`.
pub fn hamilton_paths_between(g: &Graph, a: usize, b: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    if a == b {
        if n == 1 {
            out.push(vec![a]);
        }
        return out;
    }
    let mut path = vec![a];
    let mut used = vec![false; n];
    used[a] = true;
    fn rec(
        g: &Graph,
        b: usize,
        path: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for v in 0..g.n() {
            if !used[v] && v != b && g.adjacent(last, v) {
                used[v] = true;
                path.push(v);
                rec(g, b, path, used, out);
                path.pop();
                used[v] = false;
            }
        }
        // b may only be taken as the final vertex
        if path.len() == g.n() - 1 && g.adjacent(last, b) {
            path.push(b);
            out.push(path.clone());
            path.pop();
        }
    }
    rec(g, b, &mut path, &mut used, &mut out);
    out
}

/// All spanning disjoint path pairs of `g` from origins `(o1, o2)` to
/// termini `{t1, t2}`: two vertex-disjoint paths covering `V(g)`, one from
/// `o1`, one from `o2`, whose termini are `t1` and `t2` in either
/// assignment. Each pair is returned as `(path from o1, path from o2)`.
pub fn spanning_pairs(
    g: &Graph,
    (o1, o2): (usize, usize),
    (t1, t2): (usize, usize),
) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (ta, tb) in [(t1, t2), (t2, t1)] {
        for mask in 0u64..(1 << n) {
            if mask & (1 << o1) == 0 || mask & (1 << ta) == 0 {
                continue;
            }
            if mask & (1 << o2) != 0 || mask & (1 << tb) != 0 {
                continue;
            }
            let side_a: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let side_b: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            let (ga, map_a) = g
                .induced_subgraph(&VertexSet::from_iter(n, side_a.iter().copied()))
                .expect("nonempty");
            let (gb, map_b) = g
                .induced_subgraph(&VertexSet::from_iter(n, side_b.iter().copied()))
                .expect("nonempty");
            let la = map_a.iter().position(|&v| v == o1).unwrap();
            let lta = map_a.iter().position(|&v| v == ta).unwrap();
            let lb = map_b.iter().position(|&v| v == o2).unwrap();
            let ltb = map_b.iter().position(|&v| v == tb).unwrap();
            for pa in hamilton_paths_between(&ga, la, lta) {
                for pb in hamilton_paths_between(&gb, lb, ltb) {
                    let pair = (
                        pa.iter().map(|&i| map_a[i]).collect::<Vec<_>>(),
                        pb.iter().map(|&i| map_b[i]).collect::<Vec<_>>(),
                    );
                    if seen.insert(pair.clone()) {
                        out.push(pair);
                    }
                }
            }
        }
    }
    out
}

/// Ordering-enumeration oracle for composed-graph recognition.
///
/// Tries every placement of the vertices into offsets `-k..=l` with
/// `u, v, w` at `-k, 0, l`, and checks by grid dynamic programming whether
/// some interleaving of left, right and double extensions realizes the
/// ordering using only edges of `g`.
pub fn is_composed(g: &Graph, u: usize, v: usize, w: usize) -> bool {
    let n = g.n();
    if n < 3 || u == v || v == w || u == w {
        return false;
    }
    let rest: Vec<usize> = (0..n).filter(|&x| x != u && x != v && x != w).collect();
    for k in 1..=n - 2 {
        let l = n - 1 - k;
        if l < 1 {
            continue;
        }
        // offsets -k..=l; index i maps offset i-k; slots for `rest` are all
        // offsets except -k, 0, l
        for perm in permutations(&rest) {
            let mut by_offset = vec![usize::MAX; n];
            by_offset[0] = u; // offset -k
            by_offset[k] = v; // offset 0
            by_offset[n - 1] = w; // offset l
            let mut it = perm.iter();
            for slot in by_offset.iter_mut() {
                if *slot == usize::MAX {
                    *slot = *it.next().unwrap();
                }
            }
            if ordering_realizable(g, &by_offset, k) {
                return true;
            }
        }
    }
    false
}

fn ordering_realizable(g: &Graph, by_offset: &[usize], k: usize) -> bool {
    let n = by_offset.len();
    let l = n - 1 - k;
    let at = |off: isize| by_offset[(off + k as isize) as usize];
    // initial triangle on offsets -1, 0, 1
    if !(g.adjacent(at(-1), at(0)) && g.adjacent(at(0), at(1)) && g.adjacent(at(-1), at(1))) {
        return false;
    }
    // reach[i][j]: window [-i, j] buildable
    let mut reach = vec![vec![false; l + 1]; k + 1];
    reach[1][1] = true;
    for i in 1..=k {
        for j in 1..=l {
            if !reach[i][j] {
                continue;
            }
            let window_has_other_nbr = |y: usize, not: usize| {
                (-(i as isize)..=j as isize).any(|o| {
                    let z = at(o);
                    z != not && g.adjacent(y, z)
                })
            };
            if i < k {
                let y = at(-(i as isize) - 1);
                if g.adjacent(y, at(-(i as isize))) && window_has_other_nbr(y, at(-(i as isize))) {
                    reach[i + 1][j] = true;
                }
            }
            if j < l {
                let y = at(j as isize + 1);
                if g.adjacent(y, at(j as isize)) && window_has_other_nbr(y, at(j as isize)) {
                    reach[i][j + 1] = true;
                }
            }
            if i < k && j < l {
                let y1 = at(-(i as isize) - 1);
                let y2 = at(j as isize + 1);
                if g.adjacent(y1, at(-(i as isize)))
                    && g.adjacent(y2, at(j as isize))
                    && g.adjacent(y1, y2)
                {
                    reach[i + 1][j + 1] = true;
                }
            }
        }
    }
    reach[k][l]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration_is_lexicographic() {
        let s = subsets(4, 2);
        assert_eq!(
            s,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn brute_hamiltonicity_small_cases() {
        assert!(hamiltonian_cycle(&Graph::cycle(5)).is_some());
        assert!(hamiltonian_cycle(&Graph::path(4)).is_none());
        assert!(hamiltonian_cycle(&Graph::complete(4)).is_some());
    }

    #[test]
    fn brute_longest_cycle_small_cases() {
        assert_eq!(longest_cycle_len(&Graph::path(5)), None);
        assert_eq!(longest_cycle_len(&Graph::cycle(5)), Some(5));
        assert_eq!(longest_cycle_len(&Graph::complete(5)), Some(5));
        // two triangles sharing a vertex: circumference 3
        let bowtie = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(longest_cycle_len(&bowtie), Some(3));
    }

    #[test]
    fn brute_hamilton_paths_of_triangle() {
        let c3 = Graph::cycle(3);
        let paths = hamilton_paths_between(&c3, 0, 2);
        assert_eq!(paths, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn triangle_is_composed_for_any_roles() {
        let c3 = Graph::cycle(3);
        assert!(is_composed(&c3, 0, 1, 2));
        assert!(is_composed(&c3, 2, 0, 1));
    }

    #[test]
    fn c4_is_not_composed() {
        let c4 = Graph::cycle(4);
        assert!(!is_composed(&c4, 0, 1, 2));
        assert!(!is_composed(&c4, 3, 0, 1));
    }

    #[test]
    fn k4_is_composed() {
        assert!(is_composed(&Graph::complete(4), 0, 1, 2));
    }
}
