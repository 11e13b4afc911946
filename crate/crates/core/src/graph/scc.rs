use super::{bits, Digraph};

/// Strongly connected components (Tarjan), each sorted, ordered by least vertex.
pub fn strongly_connected_components(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.vertex_count();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut components = Vec::new();

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        // explicit call stack of (vertex, remaining successors)
        let mut calls: Vec<(usize, Vec<usize>)> = Vec::new();
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        calls.push((root, d.out_neighbors(root).collect()));
        while let Some((v, succ)) = calls.last_mut() {
            let v = *v;
            if let Some(w) = succ.pop() {
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    calls.push((w, d.out_neighbors(w).collect()));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            calls.pop();
            if let Some((parent, _)) = calls.last() {
                low[*parent] = low[*parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }
    components.sort();
    components
}

/// Quotient digraph on the components of [`strongly_connected_components`]
/// (vertex `i` is component `i`); always acyclic.
pub fn condensation(d: &Digraph) -> Digraph {
    let comps = strongly_connected_components(d);
    let mut which = vec![0; d.vertex_count()];
    for (c, comp) in comps.iter().enumerate() {
        for &v in comp {
            which[v] = c;
        }
    }
    let mut q = Digraph::new(comps.len()).expect("no more components than vertices");
    for (a, b) in d.arcs() {
        if which[a] != which[b] {
            q.add_arc(which[a], which[b]).expect("distinct components");
        }
    }
    q
}

/// Least vertex of every source component of the condensation, ascending.
pub fn minimum_point_basis(d: &Digraph) -> Vec<usize> {
    let comps = strongly_connected_components(d);
    let q = condensation(d);
    let inn = q.in_rows();
    comps
        .iter()
        .enumerate()
        .filter(|&(c, _)| inn[c] == 0)
        .map(|(_, comp)| comp[0])
        .collect()
}

/// Exactly one source component, i.e. some vertex reaches every other.
pub fn has_single_point_basis(d: &Digraph) -> bool {
    minimum_point_basis(d).len() == 1
}

/// Every vertex reaches every other; true for zero or one vertex.
pub fn is_strongly_connected(d: &Digraph) -> bool {
    strongly_connected_components(d).len() <= 1
}

/// Vertices reachable from `sources` (including them), ascending.
pub fn reachable(d: &Digraph, sources: &[usize]) -> Vec<usize> {
    let mut seen: u128 = sources.iter().fold(0, |acc, &s| acc | 1 << s);
    let mut frontier = seen;
    while frontier != 0 {
        let next = bits(frontier).fold(0, |acc, v| acc | d.out_row(v)) & !seen;
        seen |= next;
        frontier = next;
    }
    bits(seen).collect()
}
