//! Universal host graphs: fixed k-vertex graphs containing every 2-tree on
//! k vertices, one family per residue of k mod 3, plus the special 7-vertex
//! hosts G(7) and M.

use crate::graph::{self, is_isomorphic, Embedding, SimpleGraph};
use crate::twotree::enumerate_two_trees;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HostFamily {
    G7,
    G3t,
    G3t1,
    G3t2,
    M,
}

impl std::fmt::Display for HostFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            HostFamily::G7 => "G7",
            HostFamily::G3t => "G3t",
            HostFamily::G3t1 => "G3t+1",
            HostFamily::G3t2 => "G3t+2",
            HostFamily::M => "M",
        };
        f.write_str(s)
    }
}

/// A host graph with its construction bookkeeping: the clique vertices v_i
/// and the attached vertices x_i, in index order.
#[derive(Clone, Debug)]
pub struct HostGraph {
    pub graph: SimpleGraph,
    pub k: usize,
    pub family: HostFamily,
    pub clique_part: Vec<usize>,
    pub attach_part: Vec<usize>,
}

impl HostGraph {
    pub fn to_json(&self) -> String {
        let edges: Vec<Vec<usize>> = self.graph.edges().iter().map(|&(a, b)| vec![a, b]).collect();
        serde_json::json!({
            "k": self.k,
            "family": self.family.to_string(),
            "clique_part": self.clique_part,
            "attach_part": self.attach_part,
            "graph": { "n": self.graph.n(), "edges": edges },
        })
        .to_string()
    }
}

/// Shared clique-plus-attachments builder: a clique on `c` vertices
/// (optionally minus one edge), then x_i adjacent to v_1..v_{2i} for
/// i = 1..t.
fn clique_with_attachments(
    c: usize,
    t: usize,
    deleted: Option<(usize, usize)>,
    family: HostFamily,
) -> HostGraph {
    let mut g = graph::complete(c).expand(t);
    if let Some((a, b)) = deleted {
        g.remove_edge(a, b);
    }
    for i in 1..=t {
        for v in 0..2 * i {
            g.add_edge(c + i - 1, v);
        }
    }
    HostGraph {
        graph: g,
        k: c + t,
        family,
        clique_part: (0..c).collect(),
        attach_part: (c..c + t).collect(),
    }
}

/// The universal host for k-vertex 2-trees. Families: G(7) for k = 7;
/// G(3t) = K_2t plus x_1..x_t for k ≡ 0 (mod 3), k ≥ 6;
/// G(3t+1) = (K_{2t+1} − v_{2t−2}v_{2t}) plus x's for k ≡ 1, k ≥ 10;
/// G(3t+2) = (K_{2t+2} − v_{2t}v_{2t+2}) plus x's for k ≡ 2, k ≥ 8.
pub fn make_host(k: usize) -> Result<HostGraph> {
    if k == 7 {
        // K4 on v1..v4; x1 ~ v1,v2; x2 ~ v1,v2,v3; x3 ~ v1..v4; plus x1x2.
        // The attachment sizes grow by one here (2, 3, 4), unlike the
        // general families where x_i reaches v_1..v_{2i}.
        let mut g = graph::complete(4).expand(3);
        for (xi, reach) in [(4usize, 2usize), (5, 3), (6, 4)] {
            for v in 0..reach {
                g.add_edge(xi, v);
            }
        }
        g.add_edge(4, 5);
        return Ok(HostGraph {
            graph: g,
            k: 7,
            family: HostFamily::G7,
            clique_part: (0..4).collect(),
            attach_part: (4..7).collect(),
        });
    }
    let t = k / 3;
    match k % 3 {
        0 if k >= 6 => Ok(clique_with_attachments(2 * t, t, None, HostFamily::G3t)),
        1 if k >= 10 => Ok(clique_with_attachments(
            2 * t + 1,
            t,
            Some((2 * t - 3, 2 * t - 1)),
            HostFamily::G3t1,
        )),
        2 if k >= 8 => Ok(clique_with_attachments(
            2 * t + 2,
            t,
            Some((2 * t - 1, 2 * t + 1)),
            HostFamily::G3t2,
        )),
        _ => Err(Error::Range(format!(
            "no host family for k = {k} (need k = 7, k ≡ 0 mod 3 with k ≥ 6, k ≡ 1 with k ≥ 10, or k ≡ 2 with k ≥ 8)"
        ))),
    }
}

/// The auxiliary 7-vertex graph M: it contains every 7-vertex 2-tree
/// except T(7). With only one vertex of degree 6 it cannot hold T(7)'s
/// two adjacent dominating vertices.
pub fn make_m() -> HostGraph {
    let edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (0, 5),
        (0, 6),
        (1, 2),
        (1, 4),
        (1, 5),
        (1, 6),
        (2, 3),
        (2, 5),
        (2, 6),
        (3, 5),
        (3, 6),
    ];
    let graph = SimpleGraph::from_edges(7, &edges).expect("fixed edge list is valid");
    debug_assert_eq!(graph.degree_sequence().terms(), &[6, 5, 5, 4, 4, 4, 2]);
    HostGraph {
        graph,
        k: 7,
        family: HostFamily::M,
        clique_part: vec![],
        attach_part: vec![],
    }
}

/// The graph every k-vertex 2-tree must embed into. The families start at
/// k = 6; below that a single small graph covers the whole catalog.
pub fn universal_host_graph(k: usize) -> Result<SimpleGraph> {
    match k {
        3 => graph::make_named("K3"),
        4 => graph::make_named("K4-e"),
        5 => graph::make_named("K5-E(P3)"),
        _ => Ok(make_host(k)?.graph),
    }
}

/// Outcome of checking one host against the full catalog for its k.
#[derive(Clone, Debug)]
pub struct UniversalityReport {
    pub k: usize,
    pub pattern_count: usize,
    /// Embedding per catalog entry, in catalog (canonical key) order.
    pub embeddings: Vec<Option<Embedding>>,
    /// Catalog indices with no embedding; must stay empty.
    pub missing: Vec<usize>,
}

impl UniversalityReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Embeds every 2-tree on k vertices into the host for k and reports the
/// witnesses; a missing embedding is a falsification the caller must treat
/// as fatal.
pub fn verify_universal(k: usize) -> Result<UniversalityReport> {
    let host = universal_host_graph(k)?;
    let patterns = enumerate_two_trees(k)?;
    let mut embeddings = Vec::with_capacity(patterns.len());
    let mut missing = Vec::new();
    for (i, p) in patterns.iter().enumerate() {
        let e = graph::subgraph_embedding(&host, p);
        if e.is_none() {
            missing.push(i);
        }
        embeddings.push(e);
    }
    Ok(UniversalityReport {
        k,
        pattern_count: patterns.len(),
        embeddings,
        missing,
    })
}

/// The hosts shrink onto each other: deleting {v1, v2, x1} from the host
/// for k gives the host for k−3 — except at k = 10, where the result is M
/// rather than G(7).
pub fn host_recursion_check(k: usize) -> Result<bool> {
    if k < 9 {
        return Err(Error::Range(format!(
            "host recursion starts at k = 9, got {k}"
        )));
    }
    let h = make_host(k)?;
    let drop = [h.clique_part[0], h.clique_part[1], h.attach_part[0]];
    let reduced = h.graph.remove_vertices(&drop);
    let target = if k == 10 {
        make_m().graph
    } else {
        make_host(k - 3)?.graph
    };
    Ok(is_isomorphic(&reduced, &target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_key, make_named, subgraph_contains};
    use crate::twotree::make_t;

    #[test]
    fn host_shapes() {
        let g7 = make_host(7).unwrap();
        assert_eq!(g7.family, HostFamily::G7);
        assert_eq!(g7.graph.degree_sequence().terms(), &[6, 6, 5, 4, 4, 4, 3]);
        assert_eq!(g7.graph.edge_count(), 16);

        let g6 = make_host(6).unwrap();
        assert_eq!(g6.family, HostFamily::G3t);
        assert_eq!(g6.graph.degree_sequence().terms(), &[5, 5, 4, 4, 4, 2]);
        assert_eq!(g6.graph.edge_count(), 12);

        let g8 = make_host(8).unwrap();
        assert_eq!(g8.family, HostFamily::G3t2);
        let reduced = g8
            .graph
            .remove_vertices(&[g8.clique_part[0], g8.clique_part[1], g8.attach_part[0]]);
        assert!(is_isomorphic(&reduced, &make_named("K5-E(P4)").unwrap()));

        assert_eq!(make_host(10).unwrap().family, HostFamily::G3t1);
        assert!(make_host(5).is_err());
        assert!(make_host(4).is_err());
    }

    #[test]
    fn host_degrees_meet_the_chain_floors_for_k7() {
        let d = make_host(7).unwrap().graph.degree_sequence();
        assert!(d.get(2) >= 6);
        assert!(d.get(3) >= 5);
        assert!(d.get(6) >= 4);
        assert!(d.get(7) >= 3);
    }

    #[test]
    fn m_pins_the_figure() {
        let m = make_m();
        assert_eq!(m.graph.n(), 7);
        assert_eq!(m.graph.edge_count(), 15);
        // Every 7-vertex 2-tree embeds except T(7).
        let t7 = make_t(7).unwrap();
        let t7_key = canonical_key(&t7);
        assert!(!subgraph_contains(&m.graph, &t7));
        for p in enumerate_two_trees(7).unwrap().iter() {
            let expected = canonical_key(p) != t7_key;
            assert_eq!(subgraph_contains(&m.graph, p), expected, "{p:?}");
        }
        // M is exactly the three-vertex reduction of the k = 10 host.
        let g10 = make_host(10).unwrap();
        let reduced = g10
            .graph
            .remove_vertices(&[g10.clique_part[0], g10.clique_part[1], g10.attach_part[0]]);
        assert!(is_isomorphic(&reduced, &m.graph));
    }

    #[test]
    fn universality_small() {
        for k in 3..=7 {
            let r = verify_universal(k).unwrap();
            assert!(r.passed(), "k = {k}, missing {:?}", r.missing);
            assert_eq!(r.embeddings.len(), r.pattern_count);
        }
    }

    #[test]
    fn recursion_small() {
        for k in [9, 10, 11] {
            assert!(host_recursion_check(k).unwrap(), "k = {k}");
        }
        assert!(host_recursion_check(8).is_err());
    }

    #[test]
    fn export_round_trip() {
        let h = make_host(6).unwrap();
        let v: serde_json::Value = serde_json::from_str(&h.to_json()).unwrap();
        assert_eq!(v["k"], 6);
        assert_eq!(v["family"], "G3t");
        assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 12);
        assert!(h.graph.to_dot().starts_with("graph G {"));
    }
}
