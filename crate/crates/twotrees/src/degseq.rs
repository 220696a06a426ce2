//! Non-increasing degree sequences: graphicality, laying off, realization,
//! and the degree-sum threshold formulas.

use crate::graph::SimpleGraph;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A non-increasing sequence `(d_1, …, d_n)` of vertex degrees with
/// `n ≥ 1` and every term `≤ n − 1`.
///
/// Indices in the API are 1-based to match the usual notation `d_k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeSequence {
    terms: Vec<u32>,
}

/// Bookkeeping for one laying-off step: which input position was removed,
/// which input positions lost a degree (these become the neighbors of the
/// removed vertex when a realization is rebuilt), and where each surviving
/// position landed in the sorted residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayoffJoins {
    /// 0-based input position that was laid off.
    pub removed_pos: usize,
    /// 0-based input positions whose terms were decremented.
    pub joined_pos: Vec<usize>,
    /// `residual_source[i]` = 0-based input position now sitting at residual
    /// slot `i` (residual is sorted non-increasing, stable on ties).
    pub residual_source: Vec<usize>,
}

impl DegreeSequence {
    /// Validates and builds a sequence. Rejects increasing steps and terms
    /// `≥ n`. The empty sequence is allowed: it is the degree sequence of
    /// the empty graph, and residual chains shrink down to it.
    pub fn new(terms: Vec<u32>) -> Result<Self> {
        let n = terms.len() as u32;
        if terms.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSequence(format!(
                "terms must be non-increasing: {terms:?}"
            )));
        }
        if !terms.is_empty() && terms[0] > n - 1 {
            return Err(Error::InvalidSequence(format!(
                "term {} exceeds n-1 = {}",
                terms[0],
                n - 1
            )));
        }
        Ok(DegreeSequence { terms })
    }

    /// Sorts the input (descending) and validates.
    pub fn from_unsorted(mut terms: Vec<u32>) -> Result<Self> {
        terms.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence::new(terms)
    }

    pub fn n(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    /// 1-based accessor: `get(k)` = `d_k`. Panics if out of range.
    pub fn get(&self, k: usize) -> u32 {
        self.terms[k - 1]
    }

    /// `σ(π) = d_1 + ⋯ + d_n`.
    pub fn sigma(&self) -> u64 {
        self.terms.iter().map(|&d| d as u64).sum()
    }

    /// Erdős–Gallai test: σ even and for every `t` in `1..n−1`,
    /// `Σ_{i≤t} d_i ≤ t(t−1) + Σ_{i>t} min(t, d_i)`.
    ///
    /// Odd σ yields `false` (total predicate, no error).
    pub fn is_graphic(&self) -> bool {
        if self.sigma() % 2 != 0 {
            return false;
        }
        let n = self.n();
        let d = &self.terms;
        let mut head: i64 = 0;
        for t in 1..n {
            head += d[t - 1] as i64;
            let mut tail: i64 = 0;
            for &di in &d[t..] {
                tail += (t as i64).min(di as i64);
            }
            if head > (t as i64) * (t as i64 - 1) + tail {
                return false;
            }
        }
        true
    }

    /// The smallest `t` whose Erdős–Gallai inequality fails, if any. Parity
    /// is not checked here; an odd-σ sequence can return `None` and still
    /// not be graphic.
    pub fn erdos_gallai_violation(&self) -> Option<usize> {
        let n = self.n();
        let d = &self.terms;
        let mut head: i64 = 0;
        for t in 1..n {
            head += d[t - 1] as i64;
            let tail: i64 = d[t..].iter().map(|&di| (t as i64).min(di as i64)).sum();
            if head > (t as i64) * (t as i64 - 1) + tail {
                return Some(t);
            }
        }
        None
    }

    /// Lays off `d_k` (1-based `k`): removes position `k` and decrements the
    /// `d_k` largest other terms, preferring earlier indices; the residual is
    /// then sorted non-increasing (stable, so ties keep input order).
    ///
    /// Fails with [`Error::LayoffUndefined`] when fewer than `d_k` other
    /// nonzero terms exist or the residual would leave `NS_{n−1}`; either can
    /// only happen for non-graphic input.
    pub fn layoff(&self, k: usize) -> Result<DegreeSequence> {
        Ok(self.layoff_with_joins(k)?.0)
    }

    /// Same as [`layoff`](Self::layoff) but also reports which positions were
    /// decremented and where each surviving position landed. This is what a
    /// constructive caller needs to add the vertex back.
    pub fn layoff_with_joins(&self, k: usize) -> Result<(DegreeSequence, LayoffJoins)> {
        let n = self.n();
        if k < 1 || k > n {
            return Err(Error::Range(format!("layoff index {k} outside 1..={n}")));
        }
        if n == 1 {
            return Err(Error::Range("cannot lay off the only term".into()));
        }
        let d_k = self.terms[k - 1] as usize;
        // Surviving positions in input order; the first d_k nonzero ones are
        // decremented. Because the input is sorted, these are exactly the d_k
        // largest other terms with ties broken toward smaller index.
        let mut vals: Vec<(usize, u32)> = (0..n)
            .filter(|&p| p != k - 1)
            .map(|p| (p, self.terms[p]))
            .collect();
        let mut joined = Vec::with_capacity(d_k);
        for entry in vals.iter_mut() {
            if joined.len() == d_k {
                break;
            }
            if entry.1 > 0 {
                entry.1 -= 1;
                joined.push(entry.0);
            }
        }
        if joined.len() < d_k {
            return Err(Error::LayoffUndefined(format!(
                "d_{k} = {d_k} but only {} other nonzero terms",
                joined.len()
            )));
        }
        vals.sort_by(|a, b| b.1.cmp(&a.1));
        if vals[0].1 > (n as u32).saturating_sub(2) {
            return Err(Error::LayoffUndefined(format!(
                "residual term {} exceeds n-2 = {}",
                vals[0].1,
                n - 2
            )));
        }
        let residual = DegreeSequence {
            terms: vals.iter().map(|&(_, v)| v).collect(),
        };
        let joins = LayoffJoins {
            removed_pos: k - 1,
            joined_pos: joined,
            residual_source: vals.iter().map(|&(p, _)| p).collect(),
        };
        Ok((residual, joins))
    }

    /// Sufficient graphicality condition: with `m = d_1`, σ even, the
    /// sequence is graphic if some `h ≥ 1` and `n₁ ≤ n` satisfy
    /// `d_{n₁} ≥ h` and `h·n₁ ≥ ⌊(m+h+1)²/4⌋`.
    ///
    /// Searches every `h` in `1..=d_1+1` with `n₁` maximal for that `h`;
    /// larger `h` cannot have `d_{n₁} ≥ h` since `d_{n₁} ≤ d_1`.
    pub fn yin_li_sufficient(&self) -> Result<bool> {
        if self.sigma() % 2 != 0 {
            return Err(Error::InvalidSequence(
                "yin_li_sufficient requires even degree sum".into(),
            ));
        }
        if self.terms.is_empty() {
            return Ok(true);
        }
        let m = self.terms[0] as u64;
        for h in 1..=m + 1 {
            // n₁ maximal with d_{n₁} ≥ h; terms are sorted, so count them.
            let n1 = self.terms.iter().take_while(|&&d| d as u64 >= h).count() as u64;
            if n1 == 0 {
                continue;
            }
            let num = (m + h + 1) * (m + h + 1) / 4;
            if h * n1 >= num {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Deterministic realization: repeatedly lay off the first term,
    /// connecting the removed vertex to the vertices whose terms drop.
    /// Vertex `i` (0-based) ends with degree exactly `terms[i]`.
    pub fn realize(&self) -> Result<SimpleGraph> {
        if !self.is_graphic() {
            return Err(Error::NotGraphic(format!("{self}")));
        }
        let n = self.n();
        let mut g = SimpleGraph::new(n);
        // (original vertex, remaining degree), kept sorted non-increasing.
        let mut rem: Vec<(usize, u32)> = self.terms.iter().cloned().enumerate().collect();
        while rem.len() > 1 {
            let (v, d) = rem.remove(0);
            let d = d as usize;
            debug_assert!(d <= rem.len(), "graphic input cannot overrun");
            for &(u, du) in rem.iter().take(d) {
                debug_assert!(du > 0, "graphic input cannot exhaust degrees early");
                g.add_edge(v, u);
            }
            for entry in rem.iter_mut().take(d) {
                entry.1 -= 1;
            }
            rem.sort_by(|a, b| b.1.cmp(&a.1));
        }
        debug_assert!(rem.first().is_none_or(|e| e.1 == 0));
        Ok(g)
    }

    /// Parses the text format: comma-separated decimal terms, with run-length
    /// shorthand `v^count` accepted (e.g. `"6,2^6"` for `"6,2,2,2,2,2,2"`).
    pub fn parse(s: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for raw in s.split(',') {
            let tok = raw.trim();
            if tok.is_empty() {
                return Err(Error::Parse(format!("empty token in {s:?}")));
            }
            let (val_s, count) = match tok.split_once('^') {
                Some((v, c)) => {
                    let count: usize = c
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad repeat count in {tok:?}")))?;
                    if count == 0 {
                        return Err(Error::Parse(format!("zero repeat count in {tok:?}")));
                    }
                    (v.trim(), count)
                }
                None => (tok, 1),
            };
            let val: u32 = val_s
                .parse()
                .map_err(|_| Error::Parse(format!("bad term {val_s:?}")))?;
            terms.extend(std::iter::repeat(val).take(count));
        }
        DegreeSequence::new(terms)
    }
}

impl fmt::Display for DegreeSequence {
    /// Emits the plain comma-separated form, never the shorthand.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.terms {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DegreeSequence({self})")
    }
}

/// The degree-sum bounds that force every 2-tree on `k` vertices, and the
/// vertex-count floor `N(k)` from which they are proved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub k: u32,
    pub n: u64,
    /// `k mod 3`.
    pub residue: u32,
    /// `(k−1)(n−1)`.
    pub bound_a: i64,
    /// `2⌊2k/3⌋n − 2n − ⌊2k/3⌋² + ⌊2k/3⌋ + 1 − (−1)^i` with `i = k mod 3`.
    pub bound_b: i64,
    /// `max(bound_a, bound_b)`; for `k ∈ {3,4,5,7}` and `n ≥ N(k)` this is
    /// `bound_a`, for `k = 6` and `k ≥ 8` it is `bound_b`.
    pub effective: i64,
    /// `N(k)`.
    pub n_min: u64,
}

/// Piecewise vertex-count floor `N(k)`.
pub fn n_min(k: u32) -> Result<u64> {
    if k < 3 {
        return Err(Error::Range(format!("k = {k} < 3")));
    }
    Ok(match k {
        3 => 6,
        4 => 7,
        5 => 24,
        7 => 93,
        _ => {
            let t = (k / 3) as u64;
            match k % 3 {
                0 => 20 * t * t - t,
                1 => 20 * t * t + 23 * t + 5,
                _ => 20 * t * t + 31 * t + 12,
            }
        }
    })
}

/// Computes both threshold formulas for `(k, n)` in exact integer arithmetic.
pub fn thresholds(k: u32, n: u64) -> Result<ThresholdReport> {
    if k < 3 {
        return Err(Error::Range(format!("k = {k} < 3")));
    }
    if n < 1 {
        return Err(Error::Range("n must be ≥ 1".into()));
    }
    let residue = k % 3;
    let kk = k as i64;
    let nn = n as i64;
    let bound_a = (kk - 1) * (nn - 1);
    let f = 2 * kk / 3; // ⌊2k/3⌋
    let sign = if residue % 2 == 0 { 1 } else { -1 }; // (−1)^i
    let bound_b = 2 * f * nn - 2 * nn - f * f + f + 1 - sign;
    Ok(ThresholdReport {
        k,
        n,
        residue,
        bound_a,
        bound_b,
        effective: bound_a.max(bound_b),
        n_min: n_min(k)?,
    })
}

/// Enumerates every valid degree sequence on `n` vertices (non-increasing,
/// terms ≤ n−1), optionally keeping only graphic ones. Intended for
/// exhaustive small-n verification.
pub fn enumerate_sequences(n: usize, graphic_only: bool) -> Vec<DegreeSequence> {
    fn rec(n: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in (0..=max).rev() {
            cur.push(v);
            rec(n, v, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    if n >= 1 {
        rec(n, n as u32 - 1, &mut Vec::new(), &mut raw);
    }
    raw.into_iter()
        .map(|t| DegreeSequence { terms: t })
        .filter(|s| !graphic_only || s.is_graphic())
        .collect()
}
