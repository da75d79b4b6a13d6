//! Planarity testing with embedding extraction.
//!
//! Blocks are embedded one at a time by the path-addition method of
//! Demoucron, Malgrange and Pertuiset; block rotations are concatenated at
//! cut vertices. Quadratic, which is plenty for the graph sizes used here.

use std::collections::VecDeque;

/// A rotation system: for each vertex, its neighbours in cyclic order.
pub type Rotation = Vec<Vec<usize>>;

/// Returns an embedding of the simple graph `(n, edges)` if it is planar.
pub fn embed(n: usize, edges: &[(usize, usize)]) -> Option<Rotation> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        debug_assert_ne!(u, v);
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut rot: Rotation = vec![Vec::new(); n];
    for block in blocks(&adj) {
        let r = embed_block(&block)?;
        for (v, nbrs) in r {
            rot[v].extend(nbrs);
        }
    }
    Some(rot)
}

pub fn is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    embed(n, edges).is_some()
}

/// `V - E + F` of a rotation system, or `None` if some rotation is not a
/// permutation of the vertex's neighbours.
pub fn euler_characteristic(n: usize, edges: &[(usize, usize)], rot: &Rotation) -> Option<i64> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    if rot.len() != n {
        return None;
    }
    for v in 0..n {
        let mut a = adj[v].clone();
        let mut b = rot[v].clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }
    // Darts are (v, position in rot[v]).
    let pos = |v: usize, w: usize| rot[v].iter().position(|&x| x == w).expect("neighbour");
    let mut seen: Vec<Vec<bool>> = rot.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = 0i64;
    for v in 0..n {
        for p in 0..rot[v].len() {
            if seen[v][p] {
                continue;
            }
            faces += 1;
            let (mut x, mut q) = (v, p);
            while !seen[x][q] {
                seen[x][q] = true;
                let y = rot[x][q];
                let back = pos(y, x);
                let next = (back + 1) % rot[y].len();
                x = y;
                q = next;
            }
        }
    }
    Some(n as i64 - edges.len() as i64 + faces)
}

/// Whether `rot` is a plane embedding of the graph.
pub fn is_plane_embedding(n: usize, edges: &[(usize, usize)], rot: &Rotation) -> bool {
    let Some(chi) = euler_characteristic(n, edges, rot) else {
        return false;
    };
    // Each component contributes 2, an isolated vertex 1.
    let mut seen = vec![false; n];
    let mut expect = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        expect += if rot[s].is_empty() { 1 } else { 2 };
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &rot[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    chi == expect
}

/// Edge sets of the biconnected components.
fn blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // Iterative DFS: (vertex, parent, next neighbour index).
        let mut dfs: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = dfs.last_mut() {
            if *idx < adj[v].len() {
                let w = adj[v][*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    dfs.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                dfs.pop();
                if let Some(&(u, _, _)) = dfs.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Embeds one biconnected block. Returns rotations of its vertices.
fn embed_block(block: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    if block.len() == 1 {
        let (u, v) = block[0];
        return Some(vec![(u, vec![v]), (v, vec![u])]);
    }
    let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let n = verts.len();
    if block.len() > 3 * n - 6 {
        return None;
    }
    let local = |x: usize| verts.binary_search(&x).expect("block vertex");
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in block {
        let (a, b) = (local(u), local(v));
        adj[a].push(b);
        adj[b].push(a);
    }
    let faces = dmp(&adj)?;

    // In face `.., u, v, w, ..` the rotation at `v` sends `u` to `w`.
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for f in &faces {
        let k = f.len();
        for p in 0..k {
            let (u, v, w) = (f[p], f[(p + 1) % k], f[(p + 2) % k]);
            succ[v].push((u, w));
        }
    }
    let mut out = Vec::with_capacity(n);
    for v in 0..n {
        let start = adj[v][0];
        let mut r = vec![verts[start]];
        let mut x = start;
        loop {
            let &(_, w) = succ[v].iter().find(|&&(u, _)| u == x)?;
            if w == start {
                break;
            }
            r.push(verts[w]);
            x = w;
            if r.len() > adj[v].len() {
                return None;
            }
        }
        if r.len() != adj[v].len() {
            return None;
        }
        out.push((verts[v], r));
    }
    Some(out)
}

/// Faces of a plane embedding of a biconnected graph, each traversed with
/// the same orientation, or `None` if the graph is not planar.
fn dmp(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let total_edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let mut in_h = vec![false; n];
    let mut h_edge = vec![vec![false; n]; n];
    let mut h_edges = 0;

    let cycle = find_cycle(adj);
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect::<Vec<_>>()];
    for (p, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        let w = cycle[(p + 1) % cycle.len()];
        h_edge[v][w] = true;
        h_edge[w][v] = true;
        h_edges += 1;
    }

    while h_edges < total_edges {
        let frags = fragments(adj, &in_h, &h_edge);
        let mut chosen: Option<(usize, usize)> = None;
        for (fi, frag) in frags.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attach.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, f) = chosen.expect("a fragment remains");
        let path = fragment_path(adj, &in_h, &frags[fi]);
        for w in path.windows(2) {
            h_edge[w[0]][w[1]] = true;
            h_edge[w[1]][w[0]] = true;
            h_edges += 1;
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = std::mem::take(&mut faces[f]);
        let (a, b) = (path[0], *path.last().expect("path"));
        let ia = face.iter().position(|&x| x == a).expect("attachment on face");
        let rotated: Vec<usize> = face[ia..].iter().chain(&face[..ia]).copied().collect();
        let ib = rotated.iter().position(|&x| x == b).expect("attachment on face");
        let inner = &path[1..path.len() - 1];
        let mut f1: Vec<usize> = rotated[..=ib].to_vec();
        f1.extend(inner.iter().rev());
        let mut f2: Vec<usize> = rotated[ib..].to_vec();
        f2.push(a);
        f2.extend(inner);
        faces[f] = f1;
        faces.push(f2);
    }
    Some(faces)
}

struct Fragment {
    /// Vertices outside H, empty for a single chord.
    inner: Vec<usize>,
    attach: Vec<usize>,
    chord: Option<(usize, usize)>,
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edge: &[Vec<bool>]) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !h_edge[u][v] {
                out.push(Fragment { inner: Vec::new(), attach: vec![u, v], chord: Some((u, v)) });
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if in_h[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut inner = vec![s];
        let mut attach = Vec::new();
        comp[s] = id;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in &adj[v] {
                if in_h[w] {
                    if !attach.contains(&w) {
                        attach.push(w);
                    }
                } else if comp[w] == usize::MAX {
                    comp[w] = id;
                    inner.push(w);
                    q.push_back(w);
                }
            }
        }
        attach.sort_unstable();
        out.push(Fragment { inner, attach, chord: None });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let start = frag.attach[0];
    let n = adj.len();
    let mut prev = vec![usize::MAX; n];
    let mut q = VecDeque::new();
    for &w in &adj[start] {
        if !in_h[w] && frag.inner.contains(&w) && prev[w] == usize::MAX {
            prev[w] = start;
            q.push_back(w);
        }
    }
    while let Some(v) = q.pop_front() {
        for &w in &adj[v] {
            if in_h[w] {
                if w != start {
                    let mut path = vec![w, v];
                    let mut x = v;
                    while prev[x] != start {
                        x = prev[x];
                        path.push(x);
                    }
                    path.push(start);
                    path.reverse();
                    return path;
                }
            } else if prev[w] == usize::MAX {
                prev[w] = v;
                q.push_back(w);
            }
        }
    }
    unreachable!("fragment of a biconnected graph has two attachments")
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    depth[0] = 0;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push(w);
            } else if w != parent[v] && parent[w] != v {
                // `w` may not be an ancestor; walk both up to the meeting point.
                let (mut a, mut b) = if depth[v] >= depth[w] { (v, w) } else { (w, v) };
                let mut left = vec![];
                let mut right = vec![];
                while depth[a] > depth[b] {
                    left.push(a);
                    a = parent[a];
                }
                debug_assert_eq!(depth[a], depth[b]);
                while a != b {
                    left.push(a);
                    right.push(b);
                    a = parent[a];
                    b = parent[b];
                }
                left.push(a);
                left.extend(right.into_iter().rev());
                return left;
            }
        }
    }
    unreachable!("biconnected block with at least two edges has a cycle")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(k: usize) -> Vec<(usize, usize)> {
        (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect()
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(is_planar(4, &complete(4)));
        assert!(!is_planar(5, &complete(5)));
        let k33: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        assert!(!is_planar(6, &k33));
        let mut k5e = complete(5);
        k5e.pop();
        let rot = embed(5, &k5e).unwrap();
        assert!(is_plane_embedding(5, &k5e, &rot));
    }

    #[test]
    fn cut_vertices_glue() {
        // Two triangles sharing vertex 0, plus a pendant edge.
        let e = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (4, 5)];
        let rot = embed(6, &e).unwrap();
        assert!(is_plane_embedding(6, &e, &rot));
    }
}
