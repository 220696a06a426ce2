//! Acceptance gate: one test per criterion, each printing a single
//! `[PASS]`/`[FAIL]` line with its wall time (visible under
//! `cargo test --test acceptance -- --nocapture`). The tests serialize on a
//! shared lock so the per-criterion timings and budgets are meaningful.

use std::collections::{HashMap, HashSet};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twotrees::degseq::{enumerate_sequences, thresholds, DegreeSequence};
use twotrees::graph::{
    all_realizations, canonical_key, is_isomorphic, subgraph_contains, SimpleGraph,
};
use twotrees::hosts::{host_recursion_check, make_m, verify_universal};
use twotrees::potential::{
    classify_case, extremal_example, potential_check, rho, sample_case_sequence,
    tail_preservation_check, verify_theorem, CaseLabel, CheckMode, VerifyMode,
};
use twotrees::twotree::{
    ear_structure, embed_in_two_tree, enumerate_two_trees, is_two_tree, make_t,
    reduce_by_ear_triple,
};

static GATE: Mutex<()> = Mutex::new(());

/// Runs one criterion body under the serial lock, prints its line, enforces
/// the wall-time budget when one is specified, and panics on failure so the
/// harness records it.
fn criterion(
    number: usize,
    title: &str,
    budget: Option<Duration>,
    body: impl FnOnce() -> Result<String, String>,
) {
    let _serial = GATE.lock().unwrap_or_else(|poison| poison.into_inner());
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    match outcome {
        Ok(detail) => {
            if let Some(limit) = budget {
                if elapsed > limit {
                    let line = format!(
                        "[FAIL] criterion {number}: {title} — checks passed but took \
                         {elapsed:.2?}, over the {limit:?} budget"
                    );
                    println!("{line}");
                    panic!("{line}");
                }
            }
            println!("[PASS] criterion {number}: {title} — {detail} ({elapsed:.2?})");
        }
        Err(why) => {
            let line = format!("[FAIL] criterion {number}: {title} — {why} ({elapsed:.2?})");
            println!("{line}");
            panic!("{line}");
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn lib<T>(r: twotrees::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("library error: {e}"))
}

fn is_clique(g: &SimpleGraph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Independent census oracle. Every connected chordal graph arises by
/// repeatedly attaching a new vertex to a nonempty clique: deleting a
/// simplicial vertex keeps a connected chordal graph connected (its
/// neighborhood is a clique, so paths reroute around it) and chordal, so the
/// growth, run to exhaustion, reaches every one. Grow all of them up to `k`
/// vertices under the 2k−3 edge budget (each future vertex adds at least one
/// edge), dedup by canonical form per level, then count the classes with
/// exactly 2k−3 edges that the 2-tree recognizer accepts.
fn chordal_filter_census(k: usize) -> usize {
    let mut level: Vec<SimpleGraph> = vec![SimpleGraph::new(1)];
    for m in 1..k {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut next: Vec<SimpleGraph> = Vec::new();
        for g in &level {
            for mask in 1u64..(1u64 << m) {
                let verts: Vec<usize> = (0..m).filter(|&v| mask >> v & 1 == 1).collect();
                if g.edge_count() + verts.len() + (k - m - 1) > 2 * k - 3 {
                    continue;
                }
                if !is_clique(g, &verts) {
                    continue;
                }
                let mut h = g.expand(1);
                for &v in &verts {
                    h.add_edge(m, v);
                }
                if seen.insert(canonical_key(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
        .iter()
        .filter(|g| g.edge_count() == 2 * k - 3 && is_two_tree(g))
        .count()
}

#[test]
fn criterion_1_two_tree_census() {
    criterion(
        1,
        "2-tree census 1, 1, 2, 5, 12 for k = 3..7, cross-checked at k = 6 and 8",
        Some(Duration::from_secs(10)),
        || {
            let mut counts = Vec::new();
            for k in 3..=8usize {
                counts.push(lib(enumerate_two_trees(k))?.len());
            }
            ensure!(
                counts[..5] == [1, 1, 2, 5, 12],
                "census through k = 7 is {:?}, expected [1, 1, 2, 5, 12]",
                &counts[..5]
            );
            ensure!(
                counts[2] == 2 && counts[4] == 12,
                "pinned counts violated: k = 5 gave {}, k = 7 gave {}",
                counts[2],
                counts[4]
            );
            let oracle6 = chordal_filter_census(6);
            ensure!(
                oracle6 == counts[3],
                "k = 6: chordal-filter oracle found {oracle6}, enumeration found {}",
                counts[3]
            );
            let oracle8 = chordal_filter_census(8);
            ensure!(
                oracle8 == counts[5],
                "k = 8: chordal-filter oracle found {oracle8}, enumeration found {}",
                counts[5]
            );
            Ok(format!(
                "census k = 3..8 is {counts:?}; independent chordal-growth oracle agrees at \
                 k = 6 ({oracle6}) and k = 8 ({oracle8})"
            ))
        },
    );
}

#[test]
fn criterion_2_structure_suite() {
    criterion(
        2,
        "every 2-tree through k = 9 has 2k−3 edges, is 2-connected and chordal, with sound ears",
        Some(Duration::from_secs(60)),
        || {
            let mut graphs = 0usize;
            for k in 3..=9usize {
                for g in lib(enumerate_two_trees(k))?.iter() {
                    ensure!(
                        g.edge_count() == 2 * k - 3,
                        "a {k}-vertex 2-tree has {} edges, expected {}",
                        g.edge_count(),
                        2 * k - 3
                    );
                    ensure!(g.is_two_connected(), "a {k}-vertex 2-tree is not 2-connected");
                    ensure!(
                        !g.has_chordless_cycle_ge4(),
                        "a {k}-vertex 2-tree has a chordless cycle of length ≥ 4"
                    );
                    let es = lib(ear_structure(g))?;
                    ensure!(
                        es.ears.len() >= 2,
                        "a {k}-vertex 2-tree has only {} ears",
                        es.ears.len()
                    );
                    for v in 0..g.n() {
                        if g.degree(v) == 2 {
                            ensure!(
                                es.ears.contains(&v),
                                "degree-2 vertex {v} of a {k}-vertex 2-tree is not an ear"
                            );
                        }
                    }
                    if k > 3 {
                        for (i, &u) in es.ears.iter().enumerate() {
                            for &v in &es.ears[i + 1..] {
                                ensure!(
                                    !g.has_edge(u, v),
                                    "adjacent ears {u} and {v} in a {k}-vertex 2-tree"
                                );
                            }
                        }
                    }
                    graphs += 1;
                }
            }
            Ok(format!(
                "{graphs} graphs through k = 9; edge count, 2-connectivity, chordality, ear \
                 count ≥ 2, degree-2 ⇒ ear, and ear non-adjacency all hold"
            ))
        },
    );
}

#[test]
fn criterion_3_host_universality() {
    criterion(
        3,
        "hosts contain every 2-tree for k = 6..10; host recursion holds for k = 9..13",
        Some(Duration::from_secs(300)),
        || {
            let mut patterns_total = 0usize;
            for k in 6..=10usize {
                let rep = lib(verify_universal(k))?;
                ensure!(
                    rep.passed(),
                    "the {k}-vertex host misses {} of {} patterns",
                    rep.missing.len(),
                    rep.pattern_count
                );
                patterns_total += rep.pattern_count;
            }
            for k in 9..=13usize {
                ensure!(
                    lib(host_recursion_check(k))?,
                    "deleting the designated 3 vertices from the {k}-vertex host does not \
                     give the expected smaller host"
                );
            }
            Ok(format!(
                "{patterns_total} patterns embedded across k = 6..10; recursion verified for \
                 k = 9..13"
            ))
        },
    );
}

#[test]
fn criterion_4_auxiliary_host_m() {
    criterion(
        4,
        "the 15-edge auxiliary host contains every 7-vertex 2-tree except exactly T(7)",
        None,
        || {
            let m = make_m().graph;
            let t7 = lib(make_t(7))?;
            let mut embedded = 0usize;
            let mut excluded = 0usize;
            for g in lib(enumerate_two_trees(7))?.iter() {
                if is_isomorphic(g, &t7) {
                    ensure!(
                        !subgraph_contains(&m, g),
                        "the auxiliary host contains T(7), which it must exclude"
                    );
                    excluded += 1;
                } else {
                    ensure!(
                        subgraph_contains(&m, g),
                        "the auxiliary host misses a 7-vertex 2-tree other than T(7)"
                    );
                    embedded += 1;
                }
            }
            ensure!(
                embedded == 11 && excluded == 1,
                "expected 11 embedded patterns and 1 excluded, got {embedded} and {excluded}"
            );
            Ok("11 of the 12 patterns embed; T(7) alone is excluded".to_string())
        },
    );
}

#[test]
fn criterion_5_oracle_equivalence() {
    criterion(
        5,
        "graphicality, laying off, and realization streams match direct enumeration for n ≤ 7",
        None,
        || {
            let mut seq_total = 0usize;
            let mut graphic_total = 0usize;
            let mut realization_total = 0u64;
            for n in 1..=7usize {
                // One sweep over all 2^C(n,2) labeled graphs: which sorted
                // degree vectors are realizable at all, and how many labeled
                // graphs realize each non-increasing degree function exactly.
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .collect();
                let mut realizable: HashSet<Vec<u32>> = HashSet::new();
                let mut exact_counts: HashMap<Vec<u32>, u64> = HashMap::new();
                for mask in 0u64..(1u64 << pairs.len()) {
                    let mut deg = vec![0u32; n];
                    for (b, &(i, j)) in pairs.iter().enumerate() {
                        if mask >> b & 1 == 1 {
                            deg[i] += 1;
                            deg[j] += 1;
                        }
                    }
                    if deg.windows(2).all(|w| w[0] >= w[1]) {
                        *exact_counts.entry(deg.clone()).or_insert(0) += 1;
                    }
                    deg.sort_unstable_by(|a, b| b.cmp(a));
                    realizable.insert(deg);
                }
                for s in enumerate_sequences(n, false) {
                    seq_total += 1;
                    let brute = realizable.contains(s.terms());
                    ensure!(
                        s.is_graphic() == brute,
                        "graphicality mismatch at {s}: is_graphic says {}, brute force says \
                         {brute}",
                        s.is_graphic()
                    );
                    if n == 1 {
                        ensure!(
                            s.layoff(1).is_err(),
                            "laying off the only term must be undefined, but succeeded at {s}"
                        );
                    } else {
                        for k in 1..=n {
                            match s.layoff(k) {
                                Ok(r) => ensure!(
                                    r.is_graphic() == s.is_graphic(),
                                    "laying-off equivalence broken at {s}, position {k}: \
                                     residual {r}"
                                ),
                                Err(_) => ensure!(
                                    !s.is_graphic(),
                                    "laying off refused position {k} of the graphic sequence {s}"
                                ),
                            }
                        }
                    }
                    let want = exact_counts.get(s.terms()).copied().unwrap_or(0);
                    let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
                    let mut count = 0u64;
                    for g in lib(all_realizations(&s))? {
                        for (i, &d) in s.terms().iter().enumerate() {
                            ensure!(
                                g.degree(i) as u32 == d,
                                "realization stream broke slot-exactness at {s}: vertex {i} \
                                 has degree {}",
                                g.degree(i)
                            );
                        }
                        ensure!(
                            seen.insert(g.edges()),
                            "realization stream repeated a graph at {s}"
                        );
                        count += 1;
                    }
                    ensure!(
                        count == want,
                        "realization count mismatch at {s}: stream gave {count}, direct \
                         enumeration gave {want}"
                    );
                    if brute {
                        graphic_total += 1;
                    }
                    realization_total += count;
                }
            }
            Ok(format!(
                "{seq_total} sequences through n = 7 ({graphic_total} graphic); \
                 {realization_total} labeled realizations re-derived exactly"
            ))
        },
    );
}

#[test]
fn criterion_6_small_n_theorem_checks() {
    criterion(
        6,
        "exhaustive verification at (3,6), (3,7), (4,7); the degree-sum bound is sharp at (4,7)",
        Some(Duration::from_secs(30 * 60)),
        || {
            let mut runs = Vec::new();
            for (k, n) in [(3usize, 6usize), (3, 7), (4, 7)] {
                let rep = lib(verify_theorem(k, n, VerifyMode::Exhaustive, 0, 0))?;
                ensure!(rep.checked > 0, "exhaustive sweep at (k = {k}, n = {n}) was empty");
                if !rep.ok() {
                    let first = rep
                        .entries
                        .iter()
                        .find(|e| !e.result)
                        .expect("a non-ok report has a failing entry");
                    return Err(format!(
                        "(k = {k}, n = {n}): {} of {} sequences failed; first: {} [{}]",
                        rep.checked - rep.passed,
                        rep.checked,
                        first.sequence,
                        first.falsification.clone().unwrap_or_default()
                    ));
                }
                runs.push(format!("(k = {k}, n = {n}): {} sequences", rep.checked));
            }
            let ex = lib(extremal_example(4, 7))?;
            ensure!(
                ex.seq.terms() == [6, 2, 2, 2, 2, 2, 2],
                "boundary example at (4, 7) is {}, expected 6,2,2,2,2,2,2",
                ex.seq
            );
            ensure!(
                ex.sigma == 18 && ex.sigma == 3 * 6 && !ex.adjusted,
                "boundary degree sum is {} (adjusted: {}), expected exactly (k−1)(n−1) = 18",
                ex.sigma,
                ex.adjusted
            );
            ensure!(
                !lib(potential_check(&ex.seq, 4, CheckMode::Strong))?,
                "the boundary sequence passed the strong containment check"
            );
            ensure!(
                !lib(potential_check(&ex.seq, 4, CheckMode::Weak))?,
                "the boundary sequence passed the weak containment check"
            );
            Ok(format!(
                "{}; boundary sequence 6,2^6 with σ = 18 fails both check modes",
                runs.join(", ")
            ))
        },
    );
}

#[test]
fn criterion_7_constructive_pipeline_at_scale() {
    criterion(
        7,
        "200/200 seeded constructions at (6,78), (7,93), (8,154), witnesses re-verified",
        Some(Duration::from_secs(30 * 60)),
        || {
            let mut details = Vec::new();
            for (k, n) in [(6usize, 78usize), (7, 93), (8, 154)] {
                let rep = lib(verify_theorem(k, n, VerifyMode::Sampled, 200, 0))?;
                ensure!(
                    rep.checked == 200,
                    "(k = {k}, n = {n}) checked {} samples, expected 200",
                    rep.checked
                );
                if !rep.ok() {
                    let first = rep
                        .entries
                        .iter()
                        .find(|e| !e.result)
                        .expect("a non-ok report has a failing entry");
                    return Err(format!(
                        "(k = {k}, n = {n}): {} of {} samples passed; first failure: {} [{}]",
                        rep.passed,
                        rep.checked,
                        first.sequence,
                        first.falsification.clone().unwrap_or_default()
                    ));
                }
                // Independent re-verification from the reported witnesses: the
                // induced subgraph on the k highest-degree slots must contain
                // every 2-tree on k vertices.
                let effective = lib(thresholds(k as u32, n as u64))?.effective;
                let patterns = lib(enumerate_two_trees(k))?;
                for e in &rep.entries {
                    ensure!(
                        e.threshold == effective,
                        "(k = {k}, n = {n}) entry carries threshold {}, expected {effective}",
                        e.threshold
                    );
                    let s = lib(DegreeSequence::parse(&e.sequence))?;
                    ensure!(
                        s.n() == n && s.is_graphic(),
                        "(k = {k}, n = {n}) sampled sequence is not graphic on {n} terms: {s}"
                    );
                    ensure!(
                        s.sigma() == e.sigma && (s.sigma() as i64) > effective,
                        "(k = {k}, n = {n}) sample misses the degree-sum hypothesis: σ = {}",
                        s.sigma()
                    );
                    let edges = e
                        .witness_edges
                        .clone()
                        .ok_or_else(|| format!("(k = {k}, n = {n}) entry has no witness"))?;
                    let head = lib(SimpleGraph::from_edges(k, &edges))?;
                    for p in patterns.iter() {
                        ensure!(
                            subgraph_contains(&head, p),
                            "(k = {k}, n = {n}) witness head misses a {k}-vertex 2-tree for {s}"
                        );
                    }
                }
                details.push(format!(
                    "(k = {k}, n = {n}): 200/200, heads re-checked against {} patterns",
                    patterns.len()
                ));
            }
            Ok(details.join("; "))
        },
    );
}

#[test]
fn criterion_8_reduction_identities() {
    criterion(
        8,
        "1,000 seeded ρ-shift instances and 1,000 tail-preservation instances, zero violations",
        None,
        || {
            const TARGET: usize = 1000;
            const CAP: u64 = 60_000;
            let combos = [(6usize, 78usize), (7, 93), (8, 154), (9, 177)];

            // Double layoff: the residual must agree with the input shifted by
            // two positions and lowered by two, across the whole head block.
            let rho_labels = [CaseLabel::A, CaseLabel::B, CaseLabel::C];
            let mut rho_done = 0usize;
            let mut rho_tally: HashMap<char, usize> = HashMap::new();
            let mut attempts = 0u64;
            while rho_done < TARGET {
                ensure!(
                    attempts < CAP,
                    "sampler shortfall on the ρ route: {rho_done}/{TARGET} after {attempts} \
                     attempts"
                );
                let (k, n) = combos[(attempts as usize) % combos.len()];
                let label = rho_labels[(attempts as usize / combos.len()) % rho_labels.len()];
                let mut rng = ChaCha8Rng::seed_from_u64(0xA000_0000 + attempts);
                attempts += 1;
                let Some(s) = sample_case_sequence(k, n, label, &mut rng) else {
                    continue;
                };
                let cls = lib(classify_case(&s, k))?;
                if !cls.label.is_rho_case() {
                    continue;
                }
                let r = lib(rho(&s))?;
                for i in 1..=(k - 2) {
                    let got = r.get(i) as i64;
                    let want = s.get(i + 2) as i64 - 2;
                    ensure!(
                        got == want,
                        "ρ-shift violated at (k = {k}, n = {n}) case {}: position {i} is \
                         {got}, expected {want}; input {s}",
                        cls.label
                    );
                }
                *rho_tally.entry(cls.label.as_char()).or_insert(0) += 1;
                rho_done += 1;
            }

            // Chain route: beyond the near-flat prefix of the final sequence,
            // every term must equal its reference value (the untouched
            // original tail, or the tail after the first step).
            let chain_labels = [CaseLabel::D, CaseLabel::E, CaseLabel::F, CaseLabel::G];
            let mut chain_done = 0usize;
            let mut chain_tally: HashMap<char, usize> = HashMap::new();
            let mut attempts = 0u64;
            while chain_done < TARGET {
                ensure!(
                    attempts < CAP,
                    "sampler shortfall on the chain route: {chain_done}/{TARGET} after \
                     {attempts} attempts"
                );
                let (k, n) = combos[(attempts as usize) % combos.len()];
                let label = chain_labels[(attempts as usize / combos.len()) % chain_labels.len()];
                let mut rng = ChaCha8Rng::seed_from_u64(0xB000_0000 + attempts);
                attempts += 1;
                let Some(s) = sample_case_sequence(k, n, label, &mut rng) else {
                    continue;
                };
                let cls = lib(classify_case(&s, k))?;
                if cls.label.is_rho_case() {
                    continue;
                }
                let tp = lib(tail_preservation_check(&s, k))?;
                ensure!(
                    !tp.vacuous,
                    "tail check came back vacuous on a chain-route instance at (k = {k}, \
                     n = {n}) case {}: {s}",
                    cls.label
                );
                ensure!(
                    tp.holds,
                    "tail preservation violated at (k = {k}, n = {n}) case {} with near-flat \
                     prefix length {:?}: {s}",
                    cls.label,
                    tp.s
                );
                *chain_tally.entry(cls.label.as_char()).or_insert(0) += 1;
                chain_done += 1;
            }

            let fmt = |t: &HashMap<char, usize>| {
                let mut pairs: Vec<_> = t.iter().collect();
                pairs.sort();
                pairs
                    .iter()
                    .map(|(c, n)| format!("{c}:{n}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            Ok(format!(
                "ρ-shift {TARGET}/{TARGET} ({}); tail preservation {TARGET}/{TARGET} ({})",
                fmt(&rho_tally),
                fmt(&chain_tally)
            ))
        },
    );
}

#[test]
fn criterion_9_ear_triple_reduction_closure() {
    criterion(
        9,
        "every ear-triple reduction of a 2-tree on k = 6..9 vertices re-embeds spanningly, \
         avoiding T(k−3) for k ≥ 8",
        Some(Duration::from_secs(10 * 60)),
        || {
            let mut triples = 0usize;
            // The claim splits in two. Every reduction fits some 2-tree on
            // k−3 vertices — that half must never miss. For k ≥ 8 the claim
            // further asks that a host other than T(k−3) always exists; that
            // half is checked exactly as stated and its misses are collected.
            let mut misses: Vec<usize> = Vec::new();
            let mut first_detail: Option<String> = None;
            for k in 6..=9usize {
                let t_small = lib(make_t(k - 3))?;
                for g in lib(enumerate_two_trees(k))?.iter() {
                    let es = lib(ear_structure(g))?;
                    let mut has_avoiding = false;
                    let mut missed_here = 0usize;
                    for &z in &es.ears {
                        let nb = g.neighbors(z);
                        ensure!(
                            nb.len() == 2,
                            "ear {z} of a {k}-vertex 2-tree does not have degree 2"
                        );
                        let h = lib(reduce_by_ear_triple(g, nb[0], nb[1], z))?;
                        ensure!(
                            h.n() == k - 3,
                            "reduction left {} vertices, expected {}",
                            h.n(),
                            k - 3
                        );
                        ensure!(
                            lib(embed_in_two_tree(&h, false))?.is_some(),
                            "no spanning 2-tree on {} vertices at all accepts the reduction \
                             of a {k}-vertex 2-tree at ear {z}",
                            k - 3
                        );
                        triples += 1;
                        if k < 8 {
                            continue;
                        }
                        if lib(embed_in_two_tree(&h, true))?.is_some() {
                            has_avoiding = true;
                        } else {
                            // A miss is only explainable one way: the
                            // reduction IS T(k−3), whose two universal
                            // vertices fit no other 2-tree on k−3 vertices.
                            // Anything else would be an embedding-engine
                            // fault, reported as such.
                            ensure!(
                                is_isomorphic(&h, &t_small),
                                "a reduction of a {k}-vertex 2-tree fits no T({})-avoiding \
                                 host yet is not T({}) itself — embedding fault at ear {z}",
                                k - 3,
                                k - 3
                            );
                            missed_here += 1;
                            if first_detail.is_none() {
                                first_detail = Some(format!(
                                    "a {k}-vertex 2-tree with edges {:?}: removing attach \
                                     edge ({}, {}) with its ear {z} leaves exactly T({}) = \
                                     K2 ∨ K̄{}, whose two universal vertices fit no other \
                                     2-tree on {} vertices",
                                    g.edges(),
                                    nb[0],
                                    nb[1],
                                    k - 3,
                                    k - 5,
                                    k - 3
                                ));
                            }
                        }
                    }
                    if missed_here > 0 {
                        ensure!(
                            has_avoiding,
                            "a {k}-vertex 2-tree has no avoiding ear triple at all — even \
                             the choose-your-triple variant fails"
                        );
                        misses.extend(std::iter::repeat(k).take(missed_here));
                    }
                }
            }
            if !misses.is_empty() {
                let by_k: Vec<String> = [8usize, 9]
                    .iter()
                    .map(|&kk| {
                        format!("{} at k = {kk}", misses.iter().filter(|&&m| m == kk).count())
                    })
                    .collect();
                return Err(format!(
                    "the T(k−3)-avoidance half of the claim is false as stated: {} of \
                     {triples} reductions admit no avoiding host ({}). First counterexample: \
                     {}. Every affected 2-tree still owns another ear triple that avoids \
                     T(k−3) — only the universal quantification over triples fails, and the \
                     host-universality results this closure feeds are verified exhaustively \
                     under criterion 3",
                    misses.len(),
                    by_k.join(", "),
                    first_detail.unwrap_or_default()
                ));
            }
            Ok(format!(
                "{triples} ear-triple reductions across k = 6..9, all re-embedded \
                 (T(k−3) avoided for k ≥ 8)"
            ))
        },
    );
}
