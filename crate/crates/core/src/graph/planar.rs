//! Planarity by path addition (Demoucron, Malgrange and Pertuiset) on each
//! biconnected block.
//!
//! A block is embedded starting from one cycle. At each step every
//! fragment (a chord between embedded vertices, or a component of the
//! unembedded vertices with its attachment edges) must fit in some face
//! that contains all of its contact vertices. Fragments with a single
//! admissible face are placed first; a path through the chosen fragment
//! then splits that face in two.

use super::{bits, Row, SimpleGraph};

pub fn is_planar(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n <= 4 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    biconnected_blocks(g)
        .iter()
        .all(|block| block_is_planar(n, block))
}

/// Edge sets of the biconnected blocks.
fn biconnected_blocks(g: &SimpleGraph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a SimpleGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        edges: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    fn visit(s: &mut State<'_>, u: usize, parent: usize) {
        s.disc[u] = s.time;
        s.low[u] = s.time;
        s.time += 1;
        for v in s.g.neighbors(u) {
            if s.disc[v] == usize::MAX {
                s.edges.push((u, v));
                visit(s, v, u);
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.edges.pop() {
                        block.push(e);
                        if e == (u, v) {
                            break;
                        }
                    }
                    s.blocks.push(block);
                }
            } else if v != parent && s.disc[v] < s.disc[u] {
                s.edges.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }
    let n = g.vertex_count();
    let mut s = State {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        edges: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == usize::MAX {
            visit(&mut s, v, usize::MAX);
        }
    }
    s.blocks
}

enum Fragment {
    Chord(usize, usize),
    Component { vertices: Row, contacts: Row },
}

impl Fragment {
    fn contacts(&self) -> Row {
        match *self {
            Fragment::Chord(a, b) => 1 << a | 1 << b,
            Fragment::Component { contacts, .. } => contacts,
        }
    }
}

fn block_is_planar(n: usize, block: &[(usize, usize)]) -> bool {
    let mut adj: Vec<Row> = vec![0; n];
    for &(a, b) in block {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let vertices: Row = block.iter().fold(0, |acc, &(a, b)| acc | 1 << a | 1 << b);
    let vcount = vertices.count_ones() as usize;
    if block.len() < 9 || vcount < 5 {
        return true;
    }
    if block.len() > 3 * vcount - 6 {
        return false;
    }

    // initial cycle through the first edge
    let (u0, v0) = block[0];
    let Some(back) = bfs_path(&adj, v0, |w| w == u0, 1 << v0, !(0 as Row), Some((v0, u0))) else {
        return true;
    };
    let mut cycle = vec![u0];
    cycle.extend(back.iter().copied().take(back.len() - 1));
    let mut embedded_vertices: Row = cycle.iter().fold(0, |acc, &v| acc | 1 << v);
    let mut embedded: Vec<Row> = vec![0; n];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded[a] |= 1 << b;
        embedded[b] |= 1 << a;
    }
    let mut embedded_edges = cycle.len();
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.into_iter().rev().collect()];

    while embedded_edges < block.len() {
        let fragments = fragments(&adj, &embedded, vertices, embedded_vertices);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let contacts = frag.contacts();
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| {
                    let fv: Row = f.iter().fold(0, |acc, &v| acc | 1 << v);
                    contacts & !fv == 0
                })
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_index) = choice.expect("an unembedded edge forms a fragment");
        let path = fragment_path(&adj, &fragments[fi]);
        for w in path.windows(2) {
            embedded[w[0]] |= 1 << w[1];
            embedded[w[1]] |= 1 << w[0];
        }
        embedded_edges += path.len() - 1;
        for &v in &path {
            embedded_vertices |= 1 << v;
        }
        let face = faces.swap_remove(face_index);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    true
}

fn fragments(adj: &[Row], embedded: &[Row], vertices: Row, embedded_vertices: Row) -> Vec<Fragment> {
    let mut out = Vec::new();
    for a in bits(embedded_vertices) {
        for b in bits(adj[a] & !embedded[a] & embedded_vertices) {
            if a < b {
                out.push(Fragment::Chord(a, b));
            }
        }
    }
    let mut left = vertices & !embedded_vertices;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut comp: Row = 1 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |acc, v| acc | adj[v]) & left & !comp;
            comp |= next;
            frontier = next;
        }
        left &= !comp;
        let contacts = bits(comp).fold(0, |acc, v| acc | adj[v]) & embedded_vertices;
        out.push(Fragment::Component { vertices: comp, contacts });
    }
    out
}

/// Path between two distinct contact vertices through the fragment.
fn fragment_path(adj: &[Row], frag: &Fragment) -> Vec<usize> {
    match *frag {
        Fragment::Chord(a, b) => vec![a, b],
        Fragment::Component { vertices, contacts } => {
            let u = contacts.trailing_zeros() as usize;
            let x = (adj[u] & vertices).trailing_zeros() as usize;
            let others = contacts & !(1 << u);
            let inner = bfs_path(adj, x, |w| adj[w] & others != 0, 1 << x, vertices, None)
                .expect("a block fragment has two contacts");
            let y = *inner.last().expect("non-empty path");
            let v = (adj[y] & others).trailing_zeros() as usize;
            let mut path = vec![u];
            path.extend(inner);
            path.push(v);
            path
        }
    }
}

/// Breadth-first path from `start` to the first vertex satisfying `goal`,
/// moving only inside `allowed` and never along `skip`.
fn bfs_path(
    adj: &[Row],
    start: usize,
    goal: impl Fn(usize) -> bool,
    mut seen: Row,
    allowed: Row,
    skip: Option<(usize, usize)>,
) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; adj.len()];
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        if goal(v) {
            let mut path = vec![v];
            let mut cur = v;
            while cur != start {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in bits(adj[v] & allowed & !seen) {
            if skip == Some((v, w)) {
                continue;
            }
            seen |= 1 << w;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    None
}

/// Splits a face boundary along a path whose endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (u, v) = (path[0], path[path.len() - 1]);
    let k = face.len();
    let i = face.iter().position(|&x| x == u).expect("path starts on the face");
    let j = face.iter().position(|&x| x == v).expect("path ends on the face");
    let walk = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut p = from;
        loop {
            out.push(face[p]);
            if p == to {
                break;
            }
            p = (p + 1) % k;
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    let mut f1 = walk(i, j);
    f1.extend(interior.iter().rev());
    let mut f2 = walk(j, i);
    f2.extend(interior.iter());
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        SimpleGraph::from_edges(10, edges).unwrap()
    }

    #[test]
    fn kuratowski_base_cases() {
        assert!(is_planar(&SimpleGraph::complete(4).unwrap()));
        assert!(!is_planar(&SimpleGraph::complete(5).unwrap()));
        assert!(!is_planar(&SimpleGraph::complete_bipartite(3, 3).unwrap()));
        let mut k5e = SimpleGraph::complete(5).unwrap();
        k5e.remove_edge(0, 1);
        assert!(is_planar(&k5e));
        let mut k33e = SimpleGraph::complete_bipartite(3, 3).unwrap();
        k33e.remove_edge(0, 3);
        assert!(is_planar(&k33e));
        assert!(!is_planar(&petersen()));
    }

    #[test]
    fn planar_families() {
        // grid 6x6
        let mut edges = Vec::new();
        for r in 0..6 {
            for c in 0..6 {
                let v = r * 6 + c;
                if c < 5 {
                    edges.push((v, v + 1));
                }
                if r < 5 {
                    edges.push((v, v + 6));
                }
            }
        }
        assert!(is_planar(&SimpleGraph::from_edges(36, edges.clone()).unwrap()));
        // grid plus one long diagonal across the middle is still planar
        edges.push((0, 35));
        assert!(is_planar(&SimpleGraph::from_edges(36, edges).unwrap()));
        // wheel
        let mut wheel = SimpleGraph::cycle(12).unwrap();
        let mut w = SimpleGraph::new(13).unwrap();
        for (a, b) in wheel.edges() {
            w.add_edge(a, b).unwrap();
        }
        for i in 0..12 {
            w.add_edge(i, 12).unwrap();
        }
        wheel = w;
        assert!(is_planar(&wheel));
        // K_{2,n}
        assert!(is_planar(&SimpleGraph::complete_bipartite(2, 20).unwrap()));
    }

    #[test]
    fn subdivided_and_joined_obstructions() {
        // K_{3,3} with every edge subdivided once
        let mut g = SimpleGraph::new(15).unwrap();
        let mut next = 6;
        for a in 0..3 {
            for b in 3..6 {
                g.add_edge(a, next).unwrap();
                g.add_edge(next, b).unwrap();
                next += 1;
            }
        }
        assert!(!is_planar(&g));
        // K5 hanging off a cycle by a cut vertex
        let mut h = SimpleGraph::cycle(8).unwrap();
        let mut big = SimpleGraph::new(12).unwrap();
        for (a, b) in h.edges() {
            big.add_edge(a, b).unwrap();
        }
        for a in [0, 8, 9, 10, 11] {
            for b in [0, 8, 9, 10, 11] {
                if a < b {
                    big.add_edge(a, b).unwrap();
                }
            }
        }
        h = big;
        assert!(!is_planar(&h));
    }
}
