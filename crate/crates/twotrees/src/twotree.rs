//! 2-tree recognition, enumeration, the named families T(k) and F(k), ear
//! structure, and the reduction machinery that takes a 2-tree down three
//! vertices at a time.

use crate::graph::{self, canonical_key, SimpleGraph};
use crate::{Error, Result};
use std::collections::HashSet;
use std::sync::{Arc, OnceLock, RwLock};

/// Build recipe for a 2-tree: a base edge, the (implicit) third vertex of
/// the base triangle, and one ear attachment per remaining vertex, in the
/// order the graph can be grown. Replaying it reconstructs the graph
/// exactly; every attachment edge exists at attachment time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTreeCertificate {
    /// Base edge (u, v) with u < v.
    pub base: (usize, usize),
    /// (new_vertex, edge it attaches to), one per vertex beyond the base
    /// triangle's third vertex. The third vertex is the unique vertex
    /// appearing in neither `base` nor `attachments`.
    pub attachments: Vec<(usize, (usize, usize))>,
}

impl TwoTreeCertificate {
    /// Number of vertices of the certified graph.
    pub fn n(&self) -> usize {
        self.attachments.len() + 3
    }

    /// The base triangle's third vertex.
    pub fn third_vertex(&self) -> usize {
        let mut used = vec![false; self.n()];
        used[self.base.0] = true;
        used[self.base.1] = true;
        for &(v, _) in &self.attachments {
            used[v] = true;
        }
        used.iter().position(|&u| !u).expect("exactly one uncovered vertex")
    }

    /// Rebuilds the graph: the base triangle, then each attachment in order.
    pub fn replay(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n());
        let t = self.third_vertex();
        g.add_edge(self.base.0, self.base.1);
        g.add_edge(self.base.0, t);
        g.add_edge(self.base.1, t);
        for &(v, (a, b)) in &self.attachments {
            debug_assert!(g.has_edge(a, b), "attachment edge must already exist");
            g.add_edge(v, a);
            g.add_edge(v, b);
        }
        g
    }
}

/// The ears of a 2-tree and the edges they attach to: B(G) and
/// C(G) = { e(u) | u ∈ B(G) }.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EarStructure {
    /// Every degree-2 vertex whose neighbors are adjacent, ascending.
    pub ears: Vec<usize>,
    /// Deduplicated attach edges, sorted, each (a, b) with a < b.
    pub attach_edges: Vec<(usize, usize)>,
}

/// Is `v` currently an ear: degree exactly 2 with adjacent neighbors?
fn ear_edge(g: &SimpleGraph, v: usize, alive: &[bool]) -> Option<(usize, usize)> {
    let nbrs: Vec<usize> = g.neighbors(v).into_iter().filter(|&u| alive[u]).collect();
    match nbrs.as_slice() {
        &[a, b] if g.has_edge(a, b) => Some((a.min(b), a.max(b))),
        _ => None,
    }
}

/// Certifies that `g` is a 2-tree, or returns `None`. Peels the
/// lowest-index ear repeatedly until a triangle remains; the removals in
/// reverse become the attachment list. Any peeling order succeeds on a
/// 2-tree, so the fixed order only makes certificates deterministic.
pub fn two_tree_certificate(g: &SimpleGraph) -> Option<TwoTreeCertificate> {
    let n = g.n();
    if n < 3 || g.edge_count() != 2 * n - 3 {
        return None;
    }
    let mut alive = vec![true; n];
    let mut removed = Vec::new();
    for _ in 0..n - 3 {
        let found = (0..n)
            .filter(|&v| alive[v])
            .find_map(|v| ear_edge(g, v, &alive).map(|e| (v, e)))?;
        alive[found.0] = false;
        removed.push(found);
    }
    let rest: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let &[a, b, c] = rest.as_slice() else { return None };
    if !(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) {
        return None;
    }
    removed.reverse();
    Some(TwoTreeCertificate {
        base: (a, b),
        attachments: removed,
    })
}

pub fn is_two_tree(g: &SimpleGraph) -> bool {
    two_tree_certificate(g).is_some()
}

/// Searches for a peeling order that never touches an endpoint of `e`,
/// yielding a certificate whose base is exactly `e`. Every edge of a
/// 2-tree admits one; `None` otherwise.
pub fn certificate_with_base(g: &SimpleGraph, e: (usize, usize)) -> Option<TwoTreeCertificate> {
    let n = g.n();
    let (p, q) = (e.0.min(e.1), e.0.max(e.1));
    if !is_two_tree(g) || !g.has_edge(p, q) {
        return None;
    }
    fn dfs(
        g: &SimpleGraph,
        alive: &mut Vec<bool>,
        left: usize,
        keep: (usize, usize),
        removed: &mut Vec<(usize, (usize, usize))>,
        seen: &mut HashSet<Vec<bool>>,
    ) -> bool {
        if left == 3 {
            return true;
        }
        if !seen.insert(alive.clone()) {
            return false;
        }
        for v in 0..g.n() {
            if !alive[v] || v == keep.0 || v == keep.1 {
                continue;
            }
            if let Some(edge) = ear_edge(g, v, alive) {
                alive[v] = false;
                removed.push((v, edge));
                if dfs(g, alive, left - 1, keep, removed, seen) {
                    return true;
                }
                removed.pop();
                alive[v] = true;
            }
        }
        false
    }
    let mut alive = vec![true; n];
    let mut removed = Vec::new();
    if !dfs(g, &mut alive, n, (p, q), &mut removed, &mut HashSet::new()) {
        return None;
    }
    removed.reverse();
    Some(TwoTreeCertificate {
        base: (p, q),
        attachments: removed,
    })
}

/// B(G) and C(G) for a 2-tree; errors otherwise.
pub fn ear_structure(g: &SimpleGraph) -> Result<EarStructure> {
    if !is_two_tree(g) {
        return Err(Error::NotTwoTree(format!("{g:?}")));
    }
    let alive = vec![true; g.n()];
    let mut ears = Vec::new();
    let mut attach: Vec<(usize, usize)> = Vec::new();
    for v in 0..g.n() {
        if let Some(e) = ear_edge(g, v, &alive) {
            ears.push(v);
            if !attach.contains(&e) {
                attach.push(e);
            }
        }
    }
    attach.sort_unstable();
    Ok(EarStructure {
        ears,
        attach_edges: attach,
    })
}

/// T(k) = K2 ∨ K̄_{k−2}: all k−2 ears on one edge. Vertices 0, 1 are the
/// join pair.
pub fn make_t(k: usize) -> Result<SimpleGraph> {
    if k < 3 {
        return Err(Error::Range(format!("T(k) needs k ≥ 3, got {k}")));
    }
    Ok(graph::complete(2).join(&SimpleGraph::new(k - 2)))
}

/// F(k), the path-like family: a triangle x1x2x3, then each new x_j
/// attached to the edge x_{j−2}x_{j−1}. Vertex i is x_{i+1}.
pub fn make_f(k: usize) -> Result<SimpleGraph> {
    if k < 3 {
        return Err(Error::Range(format!("F(k) needs k ≥ 3, got {k}")));
    }
    let mut g = graph::complete(3).expand(k - 3);
    for j in 3..k {
        g.add_edge(j, j - 2);
        g.add_edge(j, j - 1);
    }
    Ok(g)
}

/// Hard ceiling on enumeration order unless overridden.
pub const TWO_TREE_CAP: usize = 10;

/// All non-isomorphic 2-trees on `k` vertices, sorted by canonical key.
/// Grown level by level: attach a fresh ear to every edge of every
/// (k−1)-vertex 2-tree, deduplicate by exact canonical key. Results are
/// memoized process-wide.
pub fn enumerate_two_trees(k: usize) -> Result<Arc<Vec<SimpleGraph>>> {
    enumerate_two_trees_capped(k, TWO_TREE_CAP)
}

pub fn enumerate_two_trees_capped(k: usize, cap: usize) -> Result<Arc<Vec<SimpleGraph>>> {
    if k < 3 {
        return Err(Error::Range(format!("2-trees need k ≥ 3, got {k}")));
    }
    if k > cap {
        return Err(Error::Range(format!(
            "2-tree enumeration at k = {k} exceeds cap {cap}"
        )));
    }
    static CACHE: OnceLock<RwLock<Vec<Option<Arc<Vec<SimpleGraph>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(Vec::new()));
    if let Some(Some(hit)) = cache.read().unwrap().get(k) {
        return Ok(hit.clone());
    }
    let level = if k == 3 {
        vec![graph::complete(3)]
    } else {
        let prev = enumerate_two_trees_capped(k - 1, cap)?;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in prev.iter() {
            for (a, b) in g.edges() {
                let mut h = g.expand(1);
                h.add_edge(k - 1, a);
                h.add_edge(k - 1, b);
                if seen.insert(canonical_key(&h)) {
                    out.push(h);
                }
            }
        }
        out.sort_by_key(canonical_key);
        out
    };
    let arc = Arc::new(level);
    let mut w = cache.write().unwrap();
    if w.len() <= k {
        w.resize(k + 1, None);
    }
    w[k] = Some(arc.clone());
    Ok(arc)
}

/// One catalog record per 2-tree, as a JSON line.
pub fn catalog_line(g: &SimpleGraph) -> Result<String> {
    let es = ear_structure(g)?;
    let key: String = canonical_key(g).iter().map(|b| format!("{b:02x}")).collect();
    let edges: Vec<Vec<usize>> = g.edges().iter().map(|&(a, b)| vec![a, b]).collect();
    let attach: Vec<Vec<usize>> = es.attach_edges.iter().map(|&(a, b)| vec![a, b]).collect();
    let line = serde_json::json!({
        "k": g.n(),
        "canonical_key": key,
        "edges": edges,
        "degree_sequence": g.degree_sequence().terms(),
        "ears": es.ears,
        "attach_edges": attach,
    });
    Ok(line.to_string())
}

/// Removes an attach edge xy together with one ear z sitting on it. The
/// result on k−3 vertices always fits inside some 2-tree on k−3 vertices
/// as a spanning subgraph.
pub fn reduce_by_ear_triple(
    g: &SimpleGraph,
    x: usize,
    y: usize,
    z: usize,
) -> Result<SimpleGraph> {
    if !is_two_tree(g) {
        return Err(Error::NotTwoTree(format!("{g:?}")));
    }
    if g.n() < 6 {
        return Err(Error::Range(format!(
            "ear-triple reduction needs at least 6 vertices, got {}",
            g.n()
        )));
    }
    let alive = vec![true; g.n()];
    let (a, b) = (x.min(y), x.max(y));
    match ear_edge(g, z, &alive) {
        Some(e) if e == (a, b) => Ok(g.remove_vertices(&[x, y, z])),
        _ => Err(Error::Range(format!(
            "vertex {z} is not an ear attached to edge ({x},{y})"
        ))),
    }
}

/// Finds a 2-tree on `h.n()` vertices containing `h` as a spanning
/// subgraph, skipping T(m) when `forbid_t`. Scans the catalog in key
/// order, so the result is deterministic; `None` when nothing fits.
///
/// With `forbid_t` set the search can come up empty even for an
/// ear-triple reduction of a 2-tree: the reduction can be exactly T(m),
/// and T(m)'s two universal vertices fit no other 2-tree on m vertices.
/// Every 2-tree on k ≥ 8 vertices owns *some* ear triple whose reduction
/// avoids T(k−3), but not every triple does (three trees per order k =
/// 8, 9, 10 each carry exactly one non-avoiding triple).
pub fn embed_in_two_tree(h: &SimpleGraph, forbid_t: bool) -> Result<Option<SimpleGraph>> {
    let m = h.n();
    if m < 3 {
        return Err(Error::Range(format!(
            "spanning 2-tree supergraphs need m ≥ 3, got {m}"
        )));
    }
    let t_key = canonical_key(&make_t(m)?);
    for cand in enumerate_two_trees(m)?.iter() {
        if forbid_t && canonical_key(cand) == t_key {
            continue;
        }
        if graph::spanning_embedding(cand, h)?.is_some() {
            return Ok(Some(cand.clone()));
        }
    }
    Ok(None)
}

/// The three reduction witnesses for a 7-vertex 2-tree G: a pair (x, y)
/// with G − {x,y} ⊆ P5, a pair (u, v) with G − {u,v} ⊆ K3 ∪ K2, and —
/// whenever G is not T(7) — a vertex w with G − w ⊆ F(6).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionWitnesses {
    pub path_pair: (usize, usize),
    pub small_pair: (usize, usize),
    pub single: Option<usize>,
}

pub fn reduction_witnesses(t: &SimpleGraph) -> Result<ReductionWitnesses> {
    if t.n() != 7 || !is_two_tree(t) {
        return Err(Error::NotTwoTree(format!(
            "witness search needs a 7-vertex 2-tree, got {t:?}"
        )));
    }
    let p5 = graph::make_named("P5")?;
    let k3k2 = graph::make_named("K3∪K2")?;
    let f6 = make_f(6)?;
    let find_pair = |target: &SimpleGraph| -> Option<(usize, usize)> {
        for x in 0..7 {
            for y in x + 1..7 {
                if graph::subgraph_contains(target, &t.remove_vertices(&[x, y])) {
                    return Some((x, y));
                }
            }
        }
        None
    };
    let path_pair = find_pair(&p5).ok_or_else(|| {
        Error::Falsification(format!("no pair takes {t:?} into P5"))
    })?;
    let small_pair = find_pair(&k3k2).ok_or_else(|| {
        Error::Falsification(format!("no pair takes {t:?} into K3 ∪ K2"))
    })?;
    let single = (0..7).find(|&w| graph::subgraph_contains(&f6, &t.remove_vertices(&[w])));
    Ok(ReductionWitnesses {
        path_pair,
        small_pair,
        single,
    })
}
