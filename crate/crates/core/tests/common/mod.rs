//! Brute-force oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;

use endograph::graph::{
    girth, has_hamiltonian_cycle, has_single_point_basis, is_bipartite, is_planar,
    is_strongly_connected, is_tree, maximal_cliques, minimum_point_basis, digraphs_isomorphic,
    find_digraph_isomorphism, strongly_connected_components, Digraph, Girth, SimpleGraph,
};
use endograph::group::Group;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

// ---------------------------------------------------------------- strategies

pub fn arb_simple_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max_n, prop::sample::select(vec![0.15, 0.35, 0.55, 0.8])).prop_flat_map(|(n, p)| {
        prop::collection::vec(prop::bool::weighted(p), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n).unwrap();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        g.add_edge(a, b).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

pub fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (0..=max_n, prop::sample::select(vec![0.1, 0.25, 0.5, 0.8])).prop_flat_map(|(n, p)| {
        prop::collection::vec(prop::bool::weighted(p), n * n).prop_map(move |bits| {
            let mut d = Digraph::new(n).unwrap();
            for a in 0..n {
                for b in 0..n {
                    if a != b && bits[a * n + b] {
                        d.add_arc(a, b).unwrap();
                    }
                }
            }
            d
        })
    })
}

/// A digraph together with a vertex permutation.
pub fn arb_digraph_and_perm(max_n: usize) -> impl Strategy<Value = (Digraph, Vec<usize>)> {
    arb_digraph(max_n).prop_flat_map(|d| {
        let n = d.vertex_count();
        (Just(d), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

pub fn permuted(d: &Digraph, perm: &[usize]) -> Digraph {
    Digraph::from_arcs(d.vertex_count(), d.arcs().into_iter().map(|(a, b)| (perm[a], perm[b]))).unwrap()
}

// ------------------------------------------------------------- graph oracles

fn adj(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0..n).map(|a| (0..n).map(|b| g.has_edge(a, b)).collect()).collect()
}

fn bfs_dist(a: &[Vec<bool>], src: usize, skip: (usize, usize)) -> Vec<Option<usize>> {
    let n = a.len();
    let mut dist = vec![None; n];
    dist[src] = Some(0);
    let mut q = VecDeque::from([src]);
    while let Some(u) = q.pop_front() {
        for v in 0..n {
            let removed = (u, v) == skip || (v, u) == skip;
            if a[u][v] && !removed && dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                q.push_back(v);
            }
        }
    }
    dist
}

/// Shortest cycle through an edge `uv` = 1 + distance from `u` to `v` without `uv`.
pub fn naive_girth(g: &SimpleGraph) -> Option<usize> {
    let a = adj(g);
    g.edges()
        .into_iter()
        .filter_map(|(u, v)| bfs_dist(&a, u, (u, v))[v].map(|d| d + 1))
        .min()
}

pub fn naive_bipartite(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let edges = g.edges();
    (0u32..1 << n).any(|mask| edges.iter().all(|&(a, b)| (mask >> a & 1) != (mask >> b & 1)))
}

/// Union-find: connected and acyclic.
pub fn naive_tree(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] == x {
            x
        } else {
            let r = find(p, p[x]);
            p[x] = r;
            r
        }
    }
    let mut merges = 0;
    for (a, b) in g.edges() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
        merges += 1;
    }
    merges == n - 1
}

/// Every clique that no vertex extends, by scanning all vertex subsets.
pub fn naive_maximal_cliques(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let a = adj(g);
    let is_clique = |m: u32| {
        (0..n).all(|x| m >> x & 1 == 0 || (x + 1..n).all(|y| m >> y & 1 == 0 || a[x][y]))
    };
    let mut out = Vec::new();
    for m in 0u32..1 << n {
        if n > 0 && m == 0 {
            continue;
        }
        if n == 0 {
            break;
        }
        if is_clique(m) && (0..n).all(|v| m >> v & 1 == 1 || !is_clique(m | 1 << v)) {
            out.push((0..n).filter(|&v| m >> v & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Tries every cyclic order starting at vertex 0.
pub fn naive_hamiltonian(d: &Digraph) -> bool {
    let n = d.vertex_count();
    if n < 2 {
        return false;
    }
    let mut rest: Vec<usize> = (1..n).collect();
    loop {
        let mut cycle = vec![0];
        cycle.extend(&rest);
        if (0..n).all(|i| d.has_arc(cycle[i], cycle[(i + 1) % n])) {
            return true;
        }
        if !next_permutation(&mut rest) {
            return false;
        }
    }
}

pub fn naive_isomorphic(d1: &Digraph, d2: &Digraph) -> bool {
    let n = d1.vertex_count();
    if n != d2.vertex_count() {
        return false;
    }
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        let ok = (0..n).all(|a| (0..n).all(|b| d1.has_arc(a, b) == d2.has_arc(p[a], p[b])));
        if ok {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

/// Reachability closure by Floyd-Warshall.
pub fn reach_matrix(d: &Digraph) -> Vec<Vec<bool>> {
    let n = d.vertex_count();
    let mut r: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a == b || d.has_arc(a, b)).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

/// Mutual-reachability classes, each sorted, ordered by least vertex.
pub fn naive_sccs(d: &Digraph) -> Vec<Vec<usize>> {
    let r = reach_matrix(d);
    let n = d.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n {
        if !seen[v] {
            let class: Vec<usize> = (0..n).filter(|&w| r[v][w] && r[w][v]).collect();
            for &w in &class {
                seen[w] = true;
            }
            out.push(class);
        }
    }
    out
}

/// Size of a smallest vertex set reaching everything, by subset search.
pub fn naive_point_basis_size(d: &Digraph) -> usize {
    let n = d.vertex_count();
    let r = reach_matrix(d);
    (0u32..1 << n)
        .filter(|&m| (0..n).all(|w| (0..n).any(|v| m >> v & 1 == 1 && r[v][w])))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Searches for `k` disjoint connected branch sets whose contraction
/// pattern satisfies `accept`.
fn has_minor(a: &[Vec<bool>], k: usize, accept: &dyn Fn(&dyn Fn(usize, usize) -> bool) -> bool) -> bool {
    fn connected(a: &[Vec<bool>], set: &[usize]) -> bool {
        let mut seen = vec![set[0]];
        let mut i = 0;
        while i < seen.len() {
            let u = seen[i];
            for &v in set {
                if a[u][v] && !seen.contains(&v) {
                    seen.push(v);
                }
            }
            i += 1;
        }
        seen.len() == set.len()
    }
    fn go(
        a: &[Vec<bool>],
        k: usize,
        v: usize,
        blocks: &mut Vec<Vec<usize>>,
        accept: &dyn Fn(&dyn Fn(usize, usize) -> bool) -> bool,
    ) -> bool {
        let n = a.len();
        if blocks.len() + (n - v) < k {
            return false;
        }
        if v == n {
            if blocks.len() != k || !blocks.iter().all(|b| connected(a, b)) {
                return false;
            }
            let touch = |i: usize, j: usize| blocks[i].iter().any(|&x| blocks[j].iter().any(|&y| a[x][y]));
            return accept(&touch);
        }
        if go(a, k, v + 1, blocks, accept) {
            return true;
        }
        for i in 0..blocks.len() {
            blocks[i].push(v);
            let found = go(a, k, v + 1, blocks, accept);
            blocks[i].pop();
            if found {
                return true;
            }
        }
        if blocks.len() < k {
            blocks.push(vec![v]);
            let found = go(a, k, v + 1, blocks, accept);
            blocks.pop();
            if found {
                return true;
            }
        }
        false
    }
    go(a, k, 0, &mut Vec::new(), accept)
}

/// Wagner: planar iff neither K5 nor K3,3 is a minor. Exponential; use on
/// at most 8 vertices.
pub fn naive_planar(g: &SimpleGraph) -> bool {
    let a = adj(g);
    let k5 = |t: &dyn Fn(usize, usize) -> bool| (0..5).all(|i| (i + 1..5).all(|j| t(i, j)));
    let k33 = |t: &dyn Fn(usize, usize) -> bool| {
        // block 0 on the left; choose two more left blocks
        (1..6).any(|x| {
            (x + 1..6).any(|y| {
                let left = [0, x, y];
                let right: Vec<usize> = (1..6).filter(|z| !left.contains(z)).collect();
                left.iter().all(|&l| right.iter().all(|&r| t(l, r)))
            })
        })
    };
    !has_minor(&a, 5, &k5) && !has_minor(&a, 6, &k33)
}

// ------------------------------------------------------- property checkers

pub const PLANARITY_ORACLE_LIMIT: usize = 8;
pub const HAMILTONIAN_ORACLE_LIMIT: usize = 8;
pub const ISOMORPHISM_ORACLE_LIMIT: usize = 7;

pub fn check_simple_graph(g: &SimpleGraph) -> Result<(), TestCaseError> {
    let n = g.vertex_count();
    let expected_girth = naive_girth(g).map_or(Girth::Infinite, Girth::Finite);
    prop_assert_eq!(girth(g), expected_girth);
    prop_assert_eq!(is_bipartite(g), naive_bipartite(g));
    prop_assert_eq!(is_tree(g), naive_tree(g));
    prop_assert_eq!(maximal_cliques(g, 100_000).unwrap(), naive_maximal_cliques(g));
    let comps = naive_sccs(&g.to_digraph());
    prop_assert_eq!(g.components(), comps);
    if n <= PLANARITY_ORACLE_LIMIT {
        prop_assert_eq!(is_planar(g), naive_planar(g), "planarity of {:?}", g.edges());
    }
    if n <= HAMILTONIAN_ORACLE_LIMIT {
        let d = g.to_digraph();
        prop_assert_eq!(has_hamiltonian_cycle(&d).unwrap(), naive_hamiltonian(&d));
    }
    Ok(())
}

pub fn check_digraph(d: &Digraph) -> Result<(), TestCaseError> {
    let n = d.vertex_count();
    prop_assert_eq!(strongly_connected_components(d), naive_sccs(d));
    prop_assert_eq!(is_strongly_connected(d), naive_sccs(d).len() <= 1);
    let basis = minimum_point_basis(d);
    let r = reach_matrix(d);
    prop_assert!((0..n).all(|w| basis.iter().any(|&v| r[v][w])));
    prop_assert_eq!(basis.len(), naive_point_basis_size(d));
    prop_assert_eq!(has_single_point_basis(d), naive_point_basis_size(d) == 1);
    if n <= HAMILTONIAN_ORACLE_LIMIT {
        prop_assert_eq!(has_hamiltonian_cycle(d).unwrap(), naive_hamiltonian(d));
    }
    Ok(())
}

pub fn check_isomorphism(d: &Digraph, perm: &[usize]) -> Result<(), TestCaseError> {
    let image = permuted(d, perm);
    let map = find_digraph_isomorphism(d, &image).unwrap();
    prop_assert!(map.is_some());
    let map = map.unwrap();
    for a in 0..d.vertex_count() {
        for b in 0..d.vertex_count() {
            prop_assert_eq!(d.has_arc(a, b), image.has_arc(map[a], map[b]));
        }
    }
    Ok(())
}

pub fn check_isomorphism_pair(d1: &Digraph, d2: &Digraph) -> Result<(), TestCaseError> {
    prop_assert_eq!(digraphs_isomorphic(d1, d2).unwrap(), naive_isomorphic(d1, d2));
    Ok(())
}

// ------------------------------------------------------------- group oracles

/// Elements generated by `gens`, by closure under multiplication.
fn span(g: &Group, gens: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for &s in gens {
            let y = g.op(x, s);
            if !inside[y] {
                inside[y] = true;
                stack.push(y);
            }
        }
    }
    inside
}

/// Generating set by scanning elements in id order.
pub fn naive_generators(g: &Group) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut inside = span(g, &gens);
    for x in g.elements() {
        if !inside[x] {
            gens.push(x);
            inside = span(g, &gens);
        }
    }
    gens
}

/// Every endomorphism as an image array: all tuples of generator images,
/// extended along words and checked against the full Cayley table.
pub fn brute_endomorphisms(g: &Group) -> Vec<Vec<usize>> {
    let n = g.order();
    let gens = naive_generators(g);
    let k = gens.len();
    let mut out = Vec::new();
    let total = n.pow(k as u32);
    for code in 0..total {
        let images: Vec<usize> = (0..k).map(|i| code / n.pow(i as u32) % n).collect();
        let mut map = vec![usize::MAX; n];
        map[0] = 0;
        let mut queue = VecDeque::from([0]);
        let mut consistent = true;
        while let Some(x) = queue.pop_front() {
            for (i, &s) in gens.iter().enumerate() {
                let y = g.op(x, s);
                let fy = g.op(map[x], images[i]);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    consistent = false;
                }
            }
        }
        if consistent && (0..n).all(|a| (0..n).all(|b| map[g.op(a, b)] == g.op(map[a], map[b]))) {
            out.push(map);
        }
    }
    out.sort();
    out
}

/// `arcs[a][b]`: some endomorphism maps `a` to `b`.
pub fn brute_arcs(g: &Group) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut arcs = vec![vec![false; n]; n];
    for f in brute_endomorphisms(g) {
        for a in 0..n {
            arcs[a][f[a]] = true;
        }
    }
    arcs
}
