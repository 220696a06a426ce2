//! Labeled simple graphs with exact canonical forms, subgraph embedding,
//! named small graphs, and 2-switch realization-space search.

use crate::degseq::DegreeSequence;
use crate::{Error, Result};
use std::collections::{HashSet, VecDeque};
use std::fmt;

const WORD: usize = 64;

/// A simple undirected graph on vertices `0..n`, stored as a bitset
/// adjacency matrix. No loops, no parallel edges.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

/// Witness that a pattern occurs in a host: `map[p]` is the host vertex
/// carrying pattern vertex `p`. Injective; every pattern edge lands on a
/// host edge (not necessarily induced).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        SimpleGraph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds from an edge list, rejecting loops and out-of-range endpoints;
    /// duplicate edges collapse silently.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Range(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Range(format!("edge ({u},{v}) outside 0..{n}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.bits[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.bits[v * self.words + u / WORD] &= !(1 << (u % WORD));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v));
        for (wi, &w) in self.row(v).iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * WORD + b);
                w &= w - 1;
            }
        }
        out
    }

    /// Edges as sorted `(i, j)` pairs with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.neighbors(i) {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Sorted non-increasing degree sequence. Requires `n ≥ 1`.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let degs: Vec<u32> = (0..self.n).map(|v| self.degree(v) as u32).collect();
        DegreeSequence::from_unsorted(degs).expect("simple graph degrees are always valid")
    }

    /// Subgraph induced by `verts`, relabeled `0..verts.len()` in the order
    /// given. Duplicates are a caller bug.
    pub fn induced(&self, verts: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(verts.len());
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Removes the listed vertices; the rest keep their relative order.
    pub fn remove_vertices(&self, drop: &[usize]) -> SimpleGraph {
        let keep: Vec<usize> = (0..self.n).filter(|v| !drop.contains(v)).collect();
        self.induced(&keep)
    }

    /// Relabels vertices: `perm[old] = new` (a bijection on `0..n`).
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Same graph with `extra` fresh isolated vertices appended.
    pub fn expand(&self, extra: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n + extra);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// True iff connected, at least 3 vertices, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        (0..self.n).all(|v| {
            let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
            self.induced(&keep).is_connected()
        })
    }

    /// True iff the graph is *not* chordal, i.e. some cycle of length ≥ 4
    /// has no chord. Tested by greedy perfect-elimination ordering: a graph
    /// is chordal iff simplicial vertices can be peeled down to nothing.
    pub fn has_chordless_cycle_ge4(&self) -> bool {
        let mut alive: Vec<bool> = vec![true; self.n];
        let mut remaining = self.n;
        while remaining > 0 {
            let mut found = None;
            'scan: for v in 0..self.n {
                if !alive[v] {
                    continue;
                }
                let nbrs: Vec<usize> =
                    self.neighbors(v).into_iter().filter(|&u| alive[u]).collect();
                for (a, &x) in nbrs.iter().enumerate() {
                    for &y in &nbrs[a + 1..] {
                        if !self.has_edge(x, y) {
                            continue 'scan;
                        }
                    }
                }
                found = Some(v);
                break;
            }
            match found {
                Some(v) => {
                    alive[v] = false;
                    remaining -= 1;
                }
                None => return true,
            }
        }
        false
    }

    /// Disjoint union: vertices of `other` are shifted by `self.n`.
    pub fn union_disjoint(&self, other: &SimpleGraph) -> SimpleGraph {
        let mut g = self.expand(other.n);
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Join: disjoint union plus all edges between the two sides.
    pub fn join(&self, other: &SimpleGraph) -> SimpleGraph {
        let mut g = self.union_disjoint(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    /// DOT text: one `i -- j;` line per edge in sorted order; isolated
    /// vertices appear as bare node statements so the graph round-trips.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            if self.degree(v) == 0 {
                s.push_str(&format!("  {v};\n"));
            }
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }

    /// Adjacency JSON: `{"n": int, "edges": [[i,j],...]}` with `i < j`, sorted.
    pub fn to_adjacency_json(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{{\"n\":{},\"edges\":[", self.n);
        for (idx, (u, v)) in edges.iter().enumerate() {
            if idx > 0 {
                s.push(',');
            }
            s.push_str(&format!("[{u},{v}]"));
        }
        s.push_str("]}");
        s
    }

    pub fn from_adjacency_json(text: &str) -> Result<SimpleGraph> {
        #[derive(serde::Deserialize)]
        struct Adj {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let adj: Adj =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad adjacency JSON: {e}")))?;
        SimpleGraph::from_edges(adj.n, &adj.edges)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

// ---------------------------------------------------------------------------
// Canonical labeling
// ---------------------------------------------------------------------------

/// Exact canonical form: equal keys iff isomorphic. Refinement plus
/// backtracking individualization; branches on interchangeable (twin)
/// vertices are collapsed, and subtrees whose forced key prefix already
/// exceeds the best known key are cut.
pub fn canonical_key(g: &SimpleGraph) -> Vec<u8> {
    let n = g.n;
    if n == 0 {
        return vec![0, 0, 0, 0];
    }
    let mut best: Option<Vec<u8>> = None; // bit-per-entry, not packed
    let cells = refine(g, vec![(0..n).collect()]);
    search(g, cells, &mut best);
    let bits = best.expect("canonical search always reaches a leaf");
    let mut key = (n as u32).to_be_bytes().to_vec();
    let mut acc = 0u8;
    let mut fill = 0;
    for b in bits {
        acc = acc << 1 | b;
        fill += 1;
        if fill == 8 {
            key.push(acc);
            acc = 0;
            fill = 0;
        }
    }
    if fill > 0 {
        key.push(acc << (8 - fill));
    }
    key
}

pub fn is_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.n == b.n && a.edge_count() == b.edge_count() && canonical_key(a) == canonical_key(b)
}

/// Equitable refinement: repeatedly split cells by the vector of neighbor
/// counts into every cell, ordering new subcells by that vector. The
/// ordering depends only on graph structure, never on labels.
fn refine(g: &SimpleGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<Vec<u64>> = cells
            .iter()
            .map(|cell| {
                let mut m = vec![0u64; g.words];
                for &v in cell {
                    m[v / WORD] |= 1 << (v % WORD);
                }
                m
            })
            .collect();
        let sig = |v: usize| -> Vec<usize> {
            masks
                .iter()
                .map(|m| {
                    g.row(v)
                        .iter()
                        .zip(m)
                        .map(|(a, b)| (a & b).count_ones() as usize)
                        .sum()
                })
                .collect()
        };
        let mut split_at = None;
        for (ci, cell) in cells.iter().enumerate() {
            if cell.len() <= 1 {
                continue;
            }
            let sigs: Vec<Vec<usize>> = cell.iter().map(|&v| sig(v)).collect();
            if sigs.windows(2).any(|w| w[0] != w[1]) {
                split_at = Some((ci, sigs));
                break;
            }
        }
        let Some((ci, sigs)) = split_at else {
            return cells;
        };
        // Group cell members by signature; subcells ordered by signature
        // descending (any fixed structural order works).
        let cell = cells[ci].clone();
        let mut keys: Vec<Vec<usize>> = sigs.clone();
        keys.sort_unstable();
        keys.dedup();
        keys.reverse();
        let groups: Vec<Vec<usize>> = keys
            .iter()
            .map(|key| {
                cell.iter()
                    .zip(&sigs)
                    .filter(|(_, s)| *s == key)
                    .map(|(&v, _)| v)
                    .collect()
            })
            .collect();
        cells.splice(ci..=ci, groups);
    }
}

/// Key bits in "column-major triangle" order: pair (i,j), i<j, appears at
/// position C(j,2)+i. Under this layout the first p cells of a partition,
/// when all singletons, determine an exact key prefix of C(p,2) bits.
fn partial_bits(g: &SimpleGraph, prefix: &[usize]) -> Vec<u8> {
    let mut bits = Vec::with_capacity(prefix.len() * (prefix.len().saturating_sub(1)) / 2);
    for j in 1..prefix.len() {
        for i in 0..j {
            bits.push(g.has_edge(prefix[i], prefix[j]) as u8);
        }
    }
    bits
}

fn search(g: &SimpleGraph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u8>>) {
    // Longest all-singleton prefix pins a key prefix; prune if it already
    // loses to the incumbent.
    let mut prefix = Vec::new();
    for cell in &cells {
        if cell.len() == 1 {
            prefix.push(cell[0]);
        } else {
            break;
        }
    }
    let partial = partial_bits(g, &prefix);
    if let Some(b) = best {
        if partial.as_slice() > &b[..partial.len()] {
            return;
        }
    }
    if prefix.len() == cells.len() {
        // Discrete partition: `partial` is the full candidate key.
        if best.as_ref().is_none_or(|b| partial < *b) {
            *best = Some(partial);
        }
        return;
    }
    let ci = cells.iter().position(|c| c.len() > 1).unwrap();
    // One branch per twin class: if swapping u and v is an automorphism,
    // their subtrees are mirror images and one suffices.
    let mut reps: Vec<usize> = Vec::new();
    'cand: for &v in &cells[ci] {
        for &u in &reps {
            if twins(g, u, v) {
                continue 'cand;
            }
        }
        reps.push(v);
    }
    for v in reps {
        let mut next = cells.clone();
        let rest: Vec<usize> = cells[ci].iter().cloned().filter(|&u| u != v).collect();
        next.splice(ci..=ci, [vec![v], rest]);
        search(g, refine(g, next), best);
    }
}

/// True iff the transposition (u v) is an automorphism: identical rows once
/// the bits at u and v themselves are cleared.
fn twins(g: &SimpleGraph, u: usize, v: usize) -> bool {
    let clear = |row: &[u64], a: usize, b: usize| -> Vec<u64> {
        let mut r = row.to_vec();
        r[a / WORD] &= !(1 << (a % WORD));
        r[b / WORD] &= !(1 << (b % WORD));
        r
    };
    clear(g.row(u), u, v) == clear(g.row(v), u, v)
}

// ---------------------------------------------------------------------------
// Subgraph embedding
// ---------------------------------------------------------------------------

/// Finds a (not necessarily induced) subgraph embedding of `pattern` in
/// `host`, or `None`. Backtracking over a connectivity-first vertex order
/// with degree pruning; the search order is deterministic, so the returned
/// embedding is stable across runs.
pub fn subgraph_embedding(host: &SimpleGraph, pattern: &SimpleGraph) -> Option<Embedding> {
    if pattern.n > host.n {
        return None;
    }
    if pattern.n == 0 {
        return Some(Embedding { map: vec![] });
    }
    // Order pattern vertices: start at max degree, then always extend by the
    // vertex with most already-placed neighbors (ties: degree, then index).
    let pn = pattern.n;
    let pdeg: Vec<usize> = (0..pn).map(|v| pattern.degree(v)).collect();
    let mut order = Vec::with_capacity(pn);
    let mut placed = vec![false; pn];
    for _ in 0..pn {
        let mut pick = None;
        for v in 0..pn {
            if placed[v] {
                continue;
            }
            let anchors = pattern
                .neighbors(v)
                .into_iter()
                .filter(|&u| placed[u])
                .count();
            let score = (anchors, pdeg[v]);
            if pick.is_none_or(|(s, _)| score > s) {
                pick = Some((score, v));
            }
        }
        let (_, v) = pick.unwrap();
        placed[v] = true;
        order.push(v);
    }
    let mut map = vec![usize::MAX; pn];
    let mut used = vec![false; host.n];
    fn rec(
        host: &SimpleGraph,
        pattern: &SimpleGraph,
        order: &[usize],
        depth: usize,
        pdeg: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let p = order[depth];
        let anchors: Vec<usize> = pattern
            .neighbors(p)
            .into_iter()
            .filter(|&u| map[u] != usize::MAX)
            .map(|u| map[u])
            .collect();
        'host: for h in 0..host.n {
            if used[h] || host.degree(h) < pdeg[p] {
                continue;
            }
            for &a in &anchors {
                if !host.has_edge(h, a) {
                    continue 'host;
                }
            }
            map[p] = h;
            used[h] = true;
            if rec(host, pattern, order, depth + 1, pdeg, map, used) {
                return true;
            }
            map[p] = usize::MAX;
            used[h] = false;
        }
        false
    }
    if rec(host, pattern, &order, 0, &pdeg, &mut map, &mut used) {
        Some(Embedding { map })
    } else {
        None
    }
}

pub fn subgraph_contains(host: &SimpleGraph, pattern: &SimpleGraph) -> bool {
    subgraph_embedding(host, pattern).is_some()
}

/// Embedding that must use every host vertex (pattern and host have equal
/// order); errors on a size mismatch.
pub fn spanning_embedding(host: &SimpleGraph, pattern: &SimpleGraph) -> Result<Option<Embedding>> {
    if host.n != pattern.n {
        return Err(Error::Range(format!(
            "spanning embedding needs equal orders, got {} and {}",
            pattern.n, host.n
        )));
    }
    Ok(subgraph_embedding(host, pattern))
}

// ---------------------------------------------------------------------------
// Named graphs
// ---------------------------------------------------------------------------

/// Builds a graph from its conventional name. Recognized (case-sensitive,
/// spaces and underscores ignored): `K5`, `Kbar5` (or `K̄5`), `K3,2`, `P4`,
/// `C5`, `K4-e`, `K5-E(P3)`, `K5-E(P4)`, `K3∪K2`, and the two recursive
/// combinators `join(A,B)` / `union(A,B)`. Vertex labels are fixed so the
/// degree vector is non-increasing.
pub fn make_named(name: &str) -> Result<SimpleGraph> {
    let s: String = name.chars().filter(|&c| c != ' ' && c != '_').collect();
    parse_named(&s)
}

fn parse_named(s: &str) -> Result<SimpleGraph> {
    let err = || Error::Parse(format!("unknown graph name {s:?}"));
    match s {
        "K4-e" => {
            let mut g = complete(4);
            g.remove_edge(2, 3);
            return Ok(g);
        }
        "K5-E(P3)" => {
            let mut g = complete(5);
            g.remove_edge(2, 4);
            g.remove_edge(3, 4);
            return Ok(g);
        }
        "K5-E(P4)" => {
            let mut g = complete(5);
            g.remove_edge(1, 3);
            g.remove_edge(3, 4);
            g.remove_edge(2, 4);
            return Ok(g);
        }
        "K3∪K2" => return Ok(complete(3).union_disjoint(&complete(2))),
        _ => {}
    }
    for (comb, is_join) in [("join(", true), ("union(", false)] {
        if let Some(rest) = s.strip_prefix(comb) {
            let inner = rest.strip_suffix(')').ok_or_else(err)?;
            let mut depth = 0;
            let mut split = None;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    ',' if depth == 0 => {
                        split = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let i = split.ok_or_else(err)?;
            let a = parse_named(&inner[..i])?;
            let b = parse_named(&inner[i + 1..])?;
            return Ok(if is_join { a.join(&b) } else { a.union_disjoint(&b) });
        }
    }
    let num = |t: &str| -> Result<usize> {
        t.parse::<usize>().map_err(|_| err())
    };
    if let Some(rest) = s.strip_prefix("Kbar").or_else(|| s.strip_prefix("K̄")) {
        let m = num(rest)?;
        if m == 0 {
            return Err(err());
        }
        return Ok(SimpleGraph::new(m));
    }
    if let Some(rest) = s.strip_prefix('K') {
        if let Some((a, b)) = rest.split_once(',') {
            let (m, n) = (num(a)?, num(b)?);
            if m == 0 || n == 0 {
                return Err(err());
            }
            return Ok(SimpleGraph::new(m).join(&SimpleGraph::new(n)));
        }
        let m = num(rest)?;
        if m == 0 {
            return Err(err());
        }
        return Ok(complete(m));
    }
    if let Some(rest) = s.strip_prefix('P') {
        let k = num(rest)?;
        if k == 0 {
            return Err(err());
        }
        let mut g = SimpleGraph::new(k);
        for i in 1..k {
            g.add_edge(i - 1, i);
        }
        return Ok(g);
    }
    if let Some(rest) = s.strip_prefix('C') {
        let k = num(rest)?;
        if k < 3 {
            return Err(err());
        }
        let mut g = SimpleGraph::new(k);
        for i in 1..k {
            g.add_edge(i - 1, i);
        }
        g.add_edge(k - 1, 0);
        return Ok(g);
    }
    Err(err())
}

pub fn complete(m: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(m);
    for i in 0..m {
        for j in i + 1..m {
            g.add_edge(i, j);
        }
    }
    g
}

// ---------------------------------------------------------------------------
// Realization space
// ---------------------------------------------------------------------------

/// Default vertex-count cap for realization-space exhaustion.
pub const REALIZATION_CAP: usize = 12;

/// Streams, exactly once each, every labeled graph in which vertex `i` has
/// degree `d_i` exactly: breadth-first closure of the 2-switch move starting
/// from the deterministic realization. Since 2-switches preserve per-vertex
/// degrees and connect all graphs sharing a degree function, this hits every
/// isomorphism class of the sequence (sort any realization's vertices by
/// degree to see why). A non-graphic sequence yields nothing.
pub struct Realizations {
    queue: VecDeque<SimpleGraph>,
    seen: HashSet<SimpleGraph>,
}

impl Iterator for Realizations {
    type Item = SimpleGraph;

    fn next(&mut self) -> Option<SimpleGraph> {
        let g = self.queue.pop_front()?;
        for h in two_switch_neighbors(&g) {
            if !self.seen.contains(&h) {
                self.seen.insert(h.clone());
                self.queue.push_back(h);
            }
        }
        Some(g)
    }
}

/// All 2-switch rewirings of `g`: for disjoint edges {a,b},{c,d}, replace
/// them by {a,c},{b,d} or {a,d},{b,c} when the new pair is absent.
fn two_switch_neighbors(g: &SimpleGraph) -> Vec<SimpleGraph> {
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            for (x, y, z, w) in [(a, c, b, d), (a, d, b, c)] {
                if !g.has_edge(x, y) && !g.has_edge(z, w) {
                    let mut h = g.clone();
                    h.remove_edge(a, b);
                    h.remove_edge(c, d);
                    h.add_edge(x, y);
                    h.add_edge(z, w);
                    out.push(h);
                }
            }
        }
    }
    out
}

pub fn all_realizations(seq: &DegreeSequence) -> Result<Realizations> {
    all_realizations_capped(seq, REALIZATION_CAP)
}

pub fn all_realizations_capped(seq: &DegreeSequence, cap: usize) -> Result<Realizations> {
    if seq.n() > cap {
        return Err(Error::Range(format!(
            "realization space for n = {} exceeds cap {cap}",
            seq.n()
        )));
    }
    let mut queue = VecDeque::new();
    let mut seen = HashSet::new();
    if let Ok(g) = seq.realize() {
        seen.insert(g.clone());
        queue.push_back(g);
    }
    Ok(Realizations { queue, seen })
}

/// Unlabeled (canonical-dedup) realizations, sorted by canonical key.
pub fn unlabeled_realizations(seq: &DegreeSequence, cap: usize) -> Result<Vec<SimpleGraph>> {
    let mut reps: Vec<(Vec<u8>, SimpleGraph)> = Vec::new();
    for g in all_realizations_capped(seq, cap)? {
        let key = canonical_key(&g);
        if !reps.iter().any(|(k, _)| *k == key) {
            reps.push((key, g));
        }
    }
    reps.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(reps.into_iter().map(|(_, g)| g).collect())
}

// ---------------------------------------------------------------------------
// Exhaustive unlabeled enumeration (oracle duty)
// ---------------------------------------------------------------------------

/// Every unlabeled graph on `n` vertices with at most `max_edges` edges, by
/// vertex-by-vertex augmentation with canonical-form rejection. Exhaustive;
/// meant for small-n oracle work, not bulk generation.
pub fn enumerate_graphs(n: usize, max_edges: usize) -> Vec<SimpleGraph> {
    let mut level: Vec<SimpleGraph> = vec![SimpleGraph::new(1)];
    for m in 2..=n.max(1) {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let base = g.expand(1);
            for mask in 0u64..(1 << (m - 1)) {
                if (mask.count_ones() as usize) + g.edge_count() > max_edges {
                    continue;
                }
                let mut h = base.clone();
                for v in 0..m - 1 {
                    if mask >> v & 1 == 1 {
                        h.add_edge(v, m - 1);
                    }
                }
                if seen.insert(canonical_key(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    if n == 0 {
        return vec![];
    }
    level.sort_by_key(|g| (g.edge_count(), canonical_key(g)));
    level
}
