//! Planarity of the underlying simple graph.
//!
//! Each biconnected block is tested with the Demoucron–Malgrange–Pertuiset
//! face-embedding procedure: embed a cycle, then repeatedly embed a path of a
//! fragment into one of its admissible faces, always preferring a fragment
//! with a single admissible face. A fragment with none certifies
//! non-planarity.

use crate::graph::{Multigraph, VertexSet};

pub fn is_planar(g: &Multigraph) -> bool {
    let s = g.underlying_simple();
    let n = s.n();
    let m = s.simple_edge_count();
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    blocks(&s).into_iter().all(|edges| block_planar(n, &edges))
}

/// Whether `g` has a planar embedding with `order` on one face in that cyclic
/// order. Implemented by adding a hub joined to the listed vertices plus the
/// cycle through them, then testing planarity.
pub fn outer_face_cyclic(g: &Multigraph, order: &[usize]) -> bool {
    let k = order.len();
    if k <= 1 {
        return is_planar(g);
    }
    let base = g.underlying_simple();
    let mut h = base.add_vertex().expect("one extra vertex fits");
    let hub = g.n();
    for i in 0..k {
        h.set(hub, order[i], 1);
        let (a, b) = (order[i], order[(i + 1) % k]);
        if a != b {
            h.set(a, b, 1);
        }
    }
    is_planar(&h)
}

/// Edge sets of the biconnected blocks with at least three vertices.
fn blocks(g: &Multigraph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    // iterative DFS: frames of (vertex, parent, next neighbour to inspect)
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (u, parent, ref mut next)) = frames.last_mut() {
            if *next < n {
                let v = *next;
                *next += 1;
                if g.mult(u, v) == 0 || v == parent {
                    continue;
                }
                if disc[v] == usize::MAX {
                    edge_stack.push((u, v));
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    frames.push((v, u, 0));
                } else if disc[v] < disc[u] {
                    edge_stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _, _)) = frames.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, u) {
                                break;
                            }
                        }
                        if block.len() >= 3 {
                            out.push(block);
                        }
                    }
                }
            }
        }
    }
    out
}

fn block_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![0u32; n];
    let mut verts = VertexSet::EMPTY;
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        verts = verts.insert(u).insert(v);
    }
    let nv = verts.len();
    if nv <= 4 || edges.len() <= nv + 2 {
        // every graph on ≤ 4 vertices is planar, and a block with cyclomatic
        // number ≤ 3 cannot contain a K5 or K3,3 subdivision
        return true;
    }
    if edges.len() > 3 * nv - 6 {
        return false;
    }

    let cycle = find_cycle(&adj, verts.min().unwrap());
    let mut embedded_v = VertexSet::from_slice(&cycle);
    let mut embedded_e = vec![0u32; n];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded_e[a] |= 1 << b;
        embedded_e[b] |= 1 << a;
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces: Vec<Vec<usize>> = vec![cycle, rev];
    let mut placed = cycle_len_edges(&embedded_e);

    while placed < edges.len() {
        let fragments = fragments(&adj, verts, embedded_v, &embedded_e);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.contacts.iter().all(|c| f.contains(c)))
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
        let (fi, face_idx) = choice.expect("unembedded edges leave a fragment");
        let path = fragment_path(&adj, &fragments[fi], embedded_v);
        for w in path.windows(2) {
            embedded_e[w[0]] |= 1 << w[1];
            embedded_e[w[1]] |= 1 << w[0];
        }
        for &v in &path {
            embedded_v = embedded_v.insert(v);
        }
        placed += path.len() - 1;
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let walk = |from: usize, to: usize| -> Vec<usize> {
            let mut out = vec![face[from]];
            let mut k = from;
            while k != to {
                k = (k + 1) % face.len();
                out.push(face[k]);
            }
            out
        };
        let interior = &path[1..path.len() - 1];
        let mut f1 = walk(i, j);
        f1.extend(interior.iter().rev());
        let mut f2 = walk(j, i);
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
    }
    true
}

fn cycle_len_edges(e: &[u32]) -> usize {
    e.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
}

/// A cycle through `start` and its least neighbour; exists in a biconnected block.
fn find_cycle(adj: &[u32], start: usize) -> Vec<usize> {
    let v = adj[start].trailing_zeros() as usize;
    shortest_path_avoiding_edge(adj, start, v)
}

fn shortest_path_avoiding_edge(adj: &[u32], a: usize, b: usize) -> Vec<usize> {
    let n = adj.len();
    let mut prev = vec![usize::MAX; n];
    let mut seen = 1u32 << a;
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            if adj[u] & (1 << v) == 0 || seen & (1 << v) != 0 || (u == a && v == b) {
                continue;
            }
            seen |= 1 << v;
            prev[v] = u;
            queue.push_back(v);
        }
    }
    let mut path = vec![b];
    let mut x = b;
    while x != a {
        x = prev[x];
        path.push(x);
    }
    path
}

struct Fragment {
    /// Interior vertices (empty for a single chord).
    inner: VertexSet,
    contacts: Vec<usize>,
    chord: Option<(usize, usize)>,
}

fn fragments(adj: &[u32], verts: VertexSet, embedded_v: VertexSet, embedded_e: &[u32]) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in embedded_v.iter() {
        for v in embedded_v.iter() {
            if u < v && adj[u] & (1 << v) != 0 && embedded_e[u] & (1 << v) == 0 {
                out.push(Fragment { inner: VertexSet::EMPTY, contacts: vec![u, v], chord: Some((u, v)) });
            }
        }
    }
    let mut rest = VertexSet(verts.0 & !embedded_v.0);
    while let Some(s) = rest.min() {
        let mut comp = VertexSet::singleton(s);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if adj[x] & (1 << y) != 0 && rest.contains(y) && !comp.contains(y) {
                    comp = comp.insert(y);
                    stack.push(y);
                }
            }
        }
        rest = VertexSet(rest.0 & !comp.0);
        let mut contacts = VertexSet::EMPTY;
        for x in comp.iter() {
            contacts = contacts.union(VertexSet(adj[x] & embedded_v.0));
        }
        out.push(Fragment { inner: comp, contacts: contacts.to_vec(), chord: None });
    }
    out
}

fn fragment_path(adj: &[u32], frag: &Fragment, embedded_v: VertexSet) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let n = adj.len();
    let a = frag.contacts[0];
    let b = frag.contacts[1];
    // BFS from a through the fragment interior to b
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    let mut seen = frag.inner.complement(n).0 | (1 << a);
    for x in frag.inner.iter() {
        if adj[a] & (1 << x) != 0 {
            prev[x] = a;
            seen |= 1 << x;
            queue.push_back(x);
        }
    }
    let _ = embedded_v;
    while let Some(x) = queue.pop_front() {
        if adj[x] & (1 << b) != 0 {
            let mut path = vec![b, x];
            let mut y = x;
            while prev[y] != a {
                y = prev[y];
                path.push(y);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for y in 0..n {
            if adj[x] & (1 << y) != 0 && seen & (1 << y) == 0 {
                seen |= 1 << y;
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a biconnected block has a path between two contacts")
}
