use super::{ElementId, Group, IDENTITY};

/// Elements of the subgroup generated by `gens`, ascending.
pub fn generated_subgroup(g: &Group, gens: &[ElementId]) -> Vec<ElementId> {
    let mut inside = vec![false; g.order()];
    inside[IDENTITY] = true;
    let mut queue = vec![IDENTITY];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in gens {
            let y = g.op(x, s);
            if !inside[y] {
                inside[y] = true;
                queue.push(y);
            }
        }
    }
    queue.sort_unstable();
    queue
}

/// Greedy generating set that starts with `prefix`.
///
/// Repeatedly adds the element that enlarges the generated subgroup the
/// most, breaking ties by the lowest index. Identity entries in `prefix`
/// are dropped.
pub fn greedy_generating_set(g: &Group, prefix: &[ElementId]) -> Vec<ElementId> {
    let mut gens: Vec<ElementId> = prefix.iter().copied().filter(|&x| x != IDENTITY).collect();
    let mut size = generated_subgroup(g, &gens).len();
    while size < g.order() {
        let mut best = (size, IDENTITY);
        let mut trial = gens.clone();
        trial.push(IDENTITY);
        for x in g.elements().skip(1) {
            *trial.last_mut().expect("pushed") = x;
            let s = generated_subgroup(g, &trial).len();
            if s > best.0 {
                best = (s, x);
            }
        }
        gens.push(best.1);
        size = best.0;
    }
    gens
}

/// Extends `gens[i] -> images[i]` to a homomorphism on the subgroup generated
/// by `gens`.
///
/// Returns the partial map (`None` outside the subgroup), or `None` if the
/// assignment is inconsistent, or not injective when `injective` is set.
/// Checking `f(x s) = f(x) f(s)` for every reached `x` and generator `s` makes
/// the result a homomorphism on the generated subgroup.
pub fn extend_from_generators(
    src: &Group,
    dst: &Group,
    gens: &[ElementId],
    images: &[ElementId],
    injective: bool,
) -> Option<Vec<Option<ElementId>>> {
    debug_assert_eq!(gens.len(), images.len());
    let mut map = vec![None; src.order()];
    let mut used = vec![false; dst.order()];
    map[IDENTITY] = Some(IDENTITY);
    used[IDENTITY] = true;
    let mut queue = vec![IDENTITY];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let fx = map[x].expect("queued elements are mapped");
        for (&s, &fs) in gens.iter().zip(images) {
            let y = src.op(x, s);
            let fy = dst.op(fx, fs);
            match map[y] {
                Some(existing) if existing != fy => return None,
                Some(_) => {}
                None => {
                    if injective && used[fy] {
                        return None;
                    }
                    used[fy] = true;
                    map[y] = Some(fy);
                    queue.push(y);
                }
            }
        }
    }
    Some(map)
}

/// An isomorphism `src -> dst` as an image array, if one exists.
pub fn find_isomorphism(src: &Group, dst: &Group) -> Option<Vec<ElementId>> {
    if src.order() != dst.order() || src.order_census() != dst.order_census() {
        return None;
    }
    let gens = greedy_generating_set(src, &[]);
    let candidates: Vec<Vec<ElementId>> = gens
        .iter()
        .map(|&s| {
            dst.elements()
                .filter(|&y| dst.elem_order(y) == src.elem_order(s))
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search_iso(src, dst, &gens, &candidates, &mut images)
}

fn search_iso(
    src: &Group,
    dst: &Group,
    gens: &[ElementId],
    candidates: &[Vec<ElementId>],
    images: &mut Vec<ElementId>,
) -> Option<Vec<ElementId>> {
    let depth = images.len();
    if depth == gens.len() {
        let map = extend_from_generators(src, dst, gens, images, true)?;
        return map.into_iter().collect();
    }
    for &y in &candidates[depth] {
        images.push(y);
        if extend_from_generators(src, dst, &gens[..=depth], images, true).is_some() {
            if let Some(found) = search_iso(src, dst, gens, candidates, images) {
                return Some(found);
            }
        }
        images.pop();
    }
    None
}

pub fn are_isomorphic_groups(g1: &Group, g2: &Group) -> bool {
    find_isomorphism(g1, g2).is_some()
}
