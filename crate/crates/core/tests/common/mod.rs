//! Independent reference implementations used as test oracles.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use planesquare::plane_graph::{PlaneGraph, VertexId};
use planesquare::reducibility::ConfigId;
use planesquare::square::{Adjacency, SimpleGraph};

// ---------------------------------------------------------------- graphs

pub fn edge_list(g: &impl Adjacency) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u) {
            if u < v {
                out.push((u, v));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Relabels `v` as `perm[v]`, keeping each rotation (and so the embedding).
pub fn relabel(g: &PlaneGraph, perm: &[VertexId]) -> PlaneGraph {
    let mut rot = vec![Vec::new(); g.vertex_count()];
    for v in 0..g.vertex_count() {
        rot[perm[v]] = g.rotation(v).iter().map(|&w| perm[w]).collect();
    }
    PlaneGraph::from_rotation(rot).unwrap()
}

/// The mirror embedding: every rotation reversed.
pub fn mirror(g: &PlaneGraph) -> PlaneGraph {
    let rot = (0..g.vertex_count())
        .map(|v| g.rotation(v).iter().rev().copied().collect())
        .collect();
    PlaneGraph::from_rotation(rot).unwrap()
}

pub fn distances_from(g: &impl Adjacency, s: VertexId) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(dist[u].unwrap() + 1);
                q.push_back(w);
            }
        }
    }
    dist
}

pub fn connected(g: &impl Adjacency) -> bool {
    g.vertex_count() == 0 || distances_from(g, 0).iter().all(Option::is_some)
}

/// Square by BFS distances.
pub fn square_by_bfs(g: &impl Adjacency) -> SimpleGraph {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for u in 0..n {
        let d = distances_from(g, u);
        for (v, dv) in d.iter().enumerate().skip(u + 1) {
            if matches!(dv, Some(1) | Some(2)) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, edges)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Lexicographically least relabeled edge list over all permutations.
pub fn brute_canonical(g: &SimpleGraph) -> Vec<(VertexId, VertexId)> {
    let edges = edge_list(g);
    permutations(g.vertex_count())
        .into_iter()
        .map(|p| {
            let mut e: Vec<_> = edges
                .iter()
                .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap()
}

fn has_k_cycle(g: &SimpleGraph, k: usize) -> bool {
    // all simple paths of k vertices starting at their least vertex
    fn go(g: &SimpleGraph, path: &mut Vec<usize>, k: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == k {
            return g.has_edge(last, path[0]);
        }
        for &w in g.neighbors(last) {
            if w > path[0] && !path.contains(&w) {
                path.push(w);
                if go(g, path, k) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..g.vertex_count()).any(|s| go(g, &mut vec![s], k))
}

/// Planarity by trying every rotation system.
pub fn planar_by_rotations(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let choices: Vec<Vec<Vec<VertexId>>> = (0..n)
        .map(|v| {
            let nb = g.neighbors(v).to_vec();
            if nb.len() <= 2 {
                return vec![nb];
            }
            // fix the first neighbor, permute the rest
            permutations(nb.len() - 1)
                .into_iter()
                .map(|p| {
                    let mut r = vec![nb[0]];
                    r.extend(p.iter().map(|&i| nb[i + 1]));
                    r
                })
                .collect()
        })
        .collect();
    let mut idx = vec![0usize; n];
    loop {
        let rot = (0..n).map(|v| choices[v][idx[v]].clone()).collect();
        if PlaneGraph::from_rotation(rot).unwrap().euler_ok() {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Canonical edge lists of all connected class members on exactly `n`
/// vertices, by filtering every labeled graph.
pub fn naive_class(n: usize) -> BTreeSet<Vec<(VertexId, VertexId)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        // connected graphs have at least n - 1 edges; planar ones at most 3n - 6
        if edges.len() + 1 < n || (n >= 3 && edges.len() > 3 * n - 6) {
            continue;
        }
        let g = SimpleGraph::from_edges(n, edges);
        if !connected(&g) || (0..n).any(|v| g.degree(v) > 4) || has_k_cycle(&g, 5) {
            continue;
        }
        let key = brute_canonical(&g);
        if !out.contains(&key) && planar_by_rotations(&g) {
            out.insert(key);
        }
    }
    out
}

// ---------------------------------------------------------- choosability

fn combinations(pool: &[u32], k: usize) -> Vec<BTreeSet<u32>> {
    if k == 0 {
        return vec![BTreeSet::new()];
    }
    if pool.len() < k {
        return vec![];
    }
    let mut with: Vec<BTreeSet<u32>> = combinations(&pool[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(pool[0]);
            s
        })
        .collect();
    with.extend(combinations(&pool[1..], k));
    with
}

/// Proper coloring from lists, by trying every choice.
pub fn naive_colorable(g: &SimpleGraph, lists: &[BTreeSet<u32>]) -> bool {
    fn go(g: &SimpleGraph, lists: &[BTreeSet<u32>], col: &mut Vec<u32>) -> bool {
        let v = col.len();
        if v == lists.len() {
            return true;
        }
        for &c in &lists[v] {
            if (0..v).all(|u| !g.has_edge(u, v) || col[u] != c) {
                col.push(c);
                if go(g, lists, col) {
                    return true;
                }
                col.pop();
            }
        }
        false
    }
    go(g, lists, &mut Vec::new())
}

/// `f`-choosability by trying every assignment over a palette of
/// `sum f` colors, which is always enough to realize every assignment.
pub fn naive_f_choosable(g: &SimpleGraph, f: &[u32]) -> bool {
    let palette: Vec<u32> = (0..f.iter().sum::<u32>()).collect();
    let options: Vec<Vec<BTreeSet<u32>>> = f
        .iter()
        .map(|&k| combinations(&palette, k as usize))
        .collect();
    let n = f.len();
    let mut idx = vec![0usize; n];
    loop {
        let lists: Vec<_> = (0..n).map(|v| options[v][idx[v]].clone()).collect();
        if !naive_colorable(g, &lists) {
            return false;
        }
        let mut i = 0;
        loop {
            if i == n {
                return true;
            }
            idx[i] += 1;
            if idx[i] < options[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

// --------------------------------------------------------------- matcher

struct Faces<'a> {
    g: &'a PlaneGraph,
    /// Origins along each face walk.
    walks: Vec<Vec<VertexId>>,
}

impl<'a> Faces<'a> {
    fn new(g: &'a PlaneGraph) -> Self {
        let walks = g
            .faces()
            .iter()
            .map(|f| f.walk.iter().map(|&h| g.half_edge(h).origin).collect())
            .collect();
        Faces { g, walks }
    }

    fn len(&self, f: usize) -> usize {
        self.walks[f].len()
    }

    /// Faces of the given length, one entry per visit of `v`.
    fn visits(&self, v: VertexId, len: usize) -> usize {
        (0..self.walks.len())
            .filter(|&f| self.len(f) == len)
            .map(|f| self.walks[f].iter().filter(|&&x| x == v).count())
            .sum()
    }

    fn triangles_with(&self, vs: &[VertexId]) -> Vec<usize> {
        (0..self.walks.len())
            .filter(|&f| self.len(f) == 3 && vs.iter().all(|v| self.walks[f].contains(v)))
            .collect()
    }

    /// The two faces whose walks traverse edge `ab`, one per direction.
    fn sides(&self, a: VertexId, b: VertexId) -> Vec<usize> {
        let mut out = Vec::new();
        for (f, w) in self.walks.iter().enumerate() {
            for i in 0..w.len() {
                let (x, y) = (w[i], w[(i + 1) % w.len()]);
                if (x, y) == (a, b) || (x, y) == (b, a) {
                    out.push(f);
                }
            }
        }
        out
    }

    /// Faces across the edges of face `f`.
    fn across(&self, f: usize) -> Vec<usize> {
        let w = &self.walks[f];
        (0..w.len())
            .map(|i| {
                let (x, y) = (w[i], w[(i + 1) % w.len()]);
                let mut s = self.sides(x, y);
                let pos = s.iter().position(|&z| z == f).unwrap();
                s.remove(pos);
                s[0]
            })
            .collect()
    }

    fn double_triangle_edge(&self, a: VertexId, b: VertexId) -> bool {
        let s = self.sides(a, b);
        s.len() == 2 && s.iter().all(|&f| self.len(f) == 3)
    }
}

fn role_count(id: ConfigId) -> usize {
    use ConfigId::*;
    match id {
        Conn => 0,
        No1v | No2v3f | No2v4f | No3vTwo3f | No3vTwo4f => 1,
        No22v | No23v | No33v | No2vAdj3f | No3v3fVertex3f => 2,
        No2vNearShared3f => 4,
        _ => 3,
    }
}

fn oracle_predicate(g: &PlaneGraph, fc: &Faces, id: ConfigId, t: &[VertexId]) -> bool {
    use ConfigId::*;
    let d = |v: VertexId| g.rotation(v).len();
    let adj = |a: VertexId, b: VertexId| g.rotation(a).contains(&b);
    match id {
        Conn => !connected(g),
        No1v => d(t[0]) == 1,
        No2v3f => d(t[0]) == 2 && fc.visits(t[0], 3) > 0,
        No2v4f => d(t[0]) == 2 && fc.visits(t[0], 4) > 0,
        No22v => t[0] < t[1] && d(t[0]) == 2 && d(t[1]) == 2 && adj(t[0], t[1]),
        No23v => d(t[0]) == 2 && d(t[1]) == 3 && adj(t[0], t[1]),
        No33v => t[0] < t[1] && d(t[0]) == 3 && d(t[1]) == 3 && adj(t[0], t[1]),
        No242v | No243v => {
            let (u, v, w) = (t[0], t[1], t[2]);
            let dw = if id == No242v { 2 } else { 3 };
            (id == No243v || u < w)
                && d(u) == 2
                && d(w) == dw
                && adj(u, v)
                && adj(v, w)
                && !adj(u, w)
        }
        No2vAdj3f => {
            let (u, v) = (t[0], t[1]);
            d(u) == 2
                && adj(u, v)
                && fc
                    .triangles_with(&[v])
                    .iter()
                    .any(|&f| !fc.walks[f].contains(&u))
        }
        No3vTwo3f => d(t[0]) == 3 && fc.visits(t[0], 3) >= 2,
        No3vTwo4f => d(t[0]) == 3 && fc.visits(t[0], 4) >= 2,
        No333f | No34f => {
            let (need, len) = if id == No333f { (2, 3) } else { (1, 4) };
            t[0] < t[1]
                && t[1] < t[2]
                && fc
                    .triangles_with(t)
                    .iter()
                    .any(|&f| fc.across(f).iter().filter(|&&x| fc.len(x) == len).count() >= need)
        }
        No3v3fEdge3f => {
            let (v, u, w) = (t[0], t[1], t[2]);
            if u > w || d(v) != 3 || fc.triangles_with(&[v, u, w]).is_empty() {
                return false;
            }
            fc.double_triangle_edge(u, w)
        }
        No3v3fVertex3f => {
            let (v, u) = (t[0], t[1]);
            d(v) == 3
                && adj(v, u)
                && !fc.triangles_with(&[v, u]).is_empty()
                && fc
                    .triangles_with(&[u])
                    .iter()
                    .any(|&f| !fc.walks[f].contains(&v))
        }
        No3vNear3f3v => {
            let (v, u, w) = (t[0], t[1], t[2]);
            d(v) == 3
                && d(u) == 4
                && d(w) == 3
                && adj(v, u)
                && !fc.triangles_with(&[u, w]).is_empty()
        }
        No3vNearShared3f => {
            let (v, u, w) = (t[0], t[1], t[2]);
            d(v) <= 3 && adj(v, u) && adj(u, w) && fc.double_triangle_edge(u, w)
        }
        No2vNearShared3f => {
            let (v, u, w, x) = (t[0], t[1], t[2], t[3]);
            d(v) == 2
                && adj(v, u)
                && adj(u, w)
                && !adj(v, w)
                && adj(w, x)
                && fc.double_triangle_edge(w, x)
        }
    }
}

/// Every injective role tuple satisfying the configuration, with
/// interchangeable roles listed once (in increasing order).
pub fn brute_force_matches(g: &PlaneGraph, id: ConfigId) -> BTreeSet<Vec<VertexId>> {
    let fc = Faces::new(g);
    let k = role_count(id);
    let n = g.vertex_count();
    let mut out = BTreeSet::new();
    let mut tuple = Vec::with_capacity(k);
    fn go(
        g: &PlaneGraph,
        fc: &Faces,
        id: ConfigId,
        n: usize,
        k: usize,
        tuple: &mut Vec<VertexId>,
        out: &mut BTreeSet<Vec<VertexId>>,
    ) {
        if tuple.len() == k {
            if oracle_predicate(g, fc, id, tuple) {
                out.insert(tuple.clone());
            }
            return;
        }
        for v in 0..n {
            if !tuple.contains(&v) {
                tuple.push(v);
                go(g, fc, id, n, k, tuple, out);
                tuple.pop();
            }
        }
    }
    go(g, &fc, id, n, k, &mut tuple, &mut out);
    out
}
