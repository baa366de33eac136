//! Exhaustive search for regular `F`-free graphs on small vertex sets.
//!
//! The search is independent of [`crate::pattern`]: it keeps its own adjacency masks and
//! tests only copies of `F` through each newly added edge. Edges are chosen row by row:
//! for vertex `u` in increasing order, pick the missing neighbors among later vertices.
//! Vertex 0 is adjacent to `1..=d` and vertex 1's new neighbors form prefixes of
//! `2..=d` and `d+1..n`; both cuts only fix labels.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::formulas::{andrasfai_degree_cap, turan_degree_cap, RexSource, RexStatus, RexValue};
use crate::graph::{Graph, Vertex};
use crate::pattern::{find_pattern, CoreShape, ForbiddenPattern};

/// Largest order the search handles (one `u64` row per vertex).
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no {d}-regular graph on {n} vertices: n*d is odd")]
    OddDegreeSum { n: usize, d: usize },
    #[error("degree {d} needs more than {n} vertices")]
    DegreeTooLarge { n: usize, d: usize },
    #[error("search supports at most {MAX_ORDER} vertices, got {0}")]
    TooLarge(usize),
}

/// Limits for one degree attempt; `rex_exact` resets them for each degree.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchBudget {
    /// Edge insertions tried before giving up.
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    /// Extra upper bound on the degree, trusted as given.
    pub degree_cap_override: Option<usize>,
    /// Skip degrees above `floor(2n/(g+2))` on odd `n` for `K3` and odd `C_g`.
    pub odd_girth_cap: bool,
    /// Explore the top-level branches on the rayon pool (needs the `parallel` feature).
    pub parallel: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: Some(2_000_000_000),
            max_time: Some(Duration::from_secs(600)),
            degree_cap_override: None,
            odd_girth_cap: false,
            parallel: cfg!(feature = "parallel"),
        }
    }
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget {
            max_nodes: None,
            max_time: None,
            ..Self::default()
        }
    }

    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(Graph),
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeResult {
    Found,
    Exhausted,
    Budget,
    /// Excluded by a degree cap without searching.
    Capped,
}

impl std::fmt::Display for DegreeResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DegreeResult::Found => "found",
            DegreeResult::Exhausted => "exhausted",
            DegreeResult::Budget => "budget",
            DegreeResult::Capped => "capped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOutcome {
    pub rex: RexValue,
    /// Degrees in the order tried, highest first.
    pub degrees_tried: Vec<(usize, DegreeResult)>,
    pub nodes_expanded: u64,
}

/// Incremental test for a copy of `F` through a just-added edge.
#[derive(Debug, Clone)]
enum Check {
    Clique(usize),
    K4MinusEdge,
    Cycle(usize),
    Custom(Vec<Anchored>),
}

/// An embedding order for a custom pattern that starts at one edge: position `i` must be
/// adjacent to the images of `back[i]`.
#[derive(Debug, Clone)]
struct Anchored {
    back: Vec<Vec<usize>>,
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

impl Check {
    fn new(f: &ForbiddenPattern) -> Check {
        match f {
            ForbiddenPattern::Clique(s) => Check::Clique(*s),
            ForbiddenPattern::Cycle(3) => Check::Clique(3),
            ForbiddenPattern::K4MinusEdge => Check::K4MinusEdge,
            ForbiddenPattern::Cycle(l) => Check::Cycle(*l),
            ForbiddenPattern::Custom(c) => {
                let k = c.order();
                let mut adj = vec![0u64; k];
                for &(a, b) in c.edges() {
                    adj[a] |= bit(b);
                    adj[b] |= bit(a);
                }
                let mut anchors = Vec::new();
                for &(a, b) in c.edges() {
                    for (x, y) in [(a, b), (b, a)] {
                        let mut order = vec![x, y];
                        let mut placed = bit(x) | bit(y);
                        while order.len() < k {
                            let next = (0..k)
                                .filter(|&v| placed & bit(v) == 0)
                                .max_by_key(|&v| ((adj[v] & placed).count_ones(), std::cmp::Reverse(v)))
                                .expect("unplaced vertex");
                            order.push(next);
                            placed |= bit(next);
                        }
                        let back = order
                            .iter()
                            .enumerate()
                            .map(|(i, &v)| (0..i).filter(|&j| adj[v] & bit(order[j]) != 0).collect())
                            .collect();
                        anchors.push(Anchored { back });
                    }
                }
                Check::Custom(anchors)
            }
        }
    }

    /// Whether the edge `uv`, already present in `adj`, lies on a copy of the pattern.
    fn hits(&self, adj: &[u64], u: usize, v: usize) -> bool {
        match self {
            Check::Clique(s) => has_clique(adj, adj[u] & adj[v], s - 2),
            Check::K4MinusEdge => {
                let common = adj[u] & adj[v];
                common.count_ones() >= 2
                    || bits(common).any(|b| {
                        (adj[u] & adj[b] & !bit(v)) != 0 || (adj[v] & adj[b] & !bit(u)) != 0
                    })
            }
            Check::Cycle(l) => path_of_length(adj, v, u, l - 1, bit(u) | bit(v)),
            Check::Custom(anchors) => anchors.iter().any(|a| {
                let mut image = vec![u, v];
                extend(adj, a, &mut image, bit(u) | bit(v))
            }),
        }
    }
}

fn has_clique(adj: &[u64], cand: u64, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < k {
        return false;
    }
    bits(cand).any(|x| has_clique(adj, cand & adj[x] & !((bit(x) << 1) - 1), k - 1))
}

/// A path from `cur` to `target` with exactly `steps` edges whose inner vertices avoid
/// `used`.
fn path_of_length(adj: &[u64], cur: usize, target: usize, steps: usize, used: u64) -> bool {
    if steps == 1 {
        return adj[cur] & bit(target) != 0;
    }
    bits(adj[cur] & !used).any(|x| path_of_length(adj, x, target, steps - 1, used | bit(x)))
}

fn extend(adj: &[u64], a: &Anchored, image: &mut Vec<usize>, used: u64) -> bool {
    let i = image.len();
    if i == a.back.len() {
        return true;
    }
    let mut cand = !used;
    for &j in &a.back[i] {
        cand &= adj[image[j]];
    }
    for x in bits(cand) {
        image.push(x);
        if extend(adj, a, image, used | bit(x)) {
            return true;
        }
        image.pop();
    }
    false
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    max_nodes: u64,
    deadline: Option<Instant>,
}

const FLUSH: u64 = 1024;

#[derive(Clone)]
struct Worker<'a> {
    n: usize,
    d: usize,
    check: &'a Check,
    shared: &'a Shared,
    adj: Vec<u64>,
    deg: Vec<usize>,
    local: u64,
}

impl Worker<'_> {
    fn tick(&mut self) -> bool {
        self.local += 1;
        if self.local >= FLUSH {
            self.flush();
        }
        !self.shared.stop.load(Ordering::Relaxed)
    }

    fn flush(&mut self) {
        let total = self.shared.nodes.fetch_add(self.local, Ordering::Relaxed) + self.local;
        self.local = 0;
        let late = self.shared.deadline.is_some_and(|t| Instant::now() >= t);
        if total > self.shared.max_nodes || late {
            self.shared.stop.store(true, Ordering::Relaxed);
        }
    }

    fn add(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        self.deg[u] += 1;
        self.deg[v] += 1;
    }

    fn remove(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        self.deg[u] -= 1;
        self.deg[v] -= 1;
    }

    /// Adds `uv` unless it completes a copy of the pattern.
    fn try_add(&mut self, u: usize, v: usize) -> bool {
        self.add(u, v);
        if self.check.hits(&self.adj, u, v) {
            self.remove(u, v);
            return false;
        }
        true
    }

    /// After row `u` is complete: every later vertex must still reach degree `d` using
    /// later vertices it is not yet joined to.
    fn completable(&self, u: usize) -> bool {
        let open: u64 = (u + 1..self.n)
            .filter(|&w| self.deg[w] < self.d)
            .fold(0, |m, w| m | bit(w));
        bits(open).all(|w| self.d - self.deg[w] <= (open & !self.adj[w] & !bit(w)).count_ones() as usize)
    }

    fn row(&mut self, u: usize) -> bool {
        if u == self.n {
            return true;
        }
        let need = self.d - self.deg[u];
        let cands: Vec<usize> = (u + 1..self.n).filter(|&w| self.deg[w] < self.d).collect();
        if cands.len() < need {
            return false;
        }
        self.choose(u, &cands, 0, need)
    }

    fn choose(&mut self, u: usize, cands: &[usize], from: usize, need: usize) -> bool {
        if need == 0 {
            return self.completable(u) && self.row(u + 1);
        }
        for j in from..=cands.len() - need {
            if !self.tick() {
                return false;
            }
            let w = cands[j];
            if !self.try_add(u, w) {
                continue;
            }
            if self.choose(u, cands, j + 1, need - 1) {
                return true;
            }
            self.remove(u, w);
        }
        false
    }

    fn graph(&self) -> Graph {
        let edges = (0..self.n).flat_map(|u| bits(self.adj[u] & !((bit(u) << 1) - 1)).map(move |v| (u, v)));
        Graph::from_edges(self.n, edges).expect("valid edges")
    }

    /// Fixes vertex 1's neighbors to `a` vertices of `2..=d` and the rest from `d+1..`,
    /// then runs the remaining rows.
    fn branch(mut self, a: usize) -> Option<Graph> {
        let b = self.d - 1 - a;
        let picks: Vec<usize> = (2..2 + a).chain(self.d + 1..self.d + 1 + b).collect();
        for &w in &picks {
            if !self.tick() || !self.try_add(1, w) {
                self.flush();
                return None;
            }
        }
        let found = self.completable(1) && self.row(2);
        self.flush();
        found.then(|| self.graph())
    }
}

fn run_branches(root: &Worker<'_>, splits: Vec<usize>, parallel: bool) -> Option<Graph> {
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return splits.into_par_iter().find_map_first(|a| root.clone().branch(a));
    }
    let _ = parallel;
    splits.into_iter().find_map(|a| root.clone().branch(a))
}

/// Searches for a `d`-regular `F`-free graph on `n` labeled vertices.
///
/// The witness returned is the first one in the search order, so it does not depend on
/// the thread count when the budget is not reached.
pub fn exists_regular_free(
    n: usize,
    d: usize,
    f: &ForbiddenPattern,
    budget: &SearchBudget,
) -> Result<Search, OracleError> {
    search(n, d, &Check::new(f), budget).map(|(s, _)| s)
}

fn search(n: usize, d: usize, check: &Check, budget: &SearchBudget) -> Result<(Search, u64), OracleError> {
    if n > MAX_ORDER {
        return Err(OracleError::TooLarge(n));
    }
    if (n * d) % 2 == 1 {
        return Err(OracleError::OddDegreeSum { n, d });
    }
    if d >= n.max(1) {
        return Err(OracleError::DegreeTooLarge { n, d });
    }
    if d == 0 {
        return Ok((Search::Found(Graph::empty(n)), 0));
    }
    let shared = Shared {
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        max_nodes: budget.max_nodes.unwrap_or(u64::MAX),
        deadline: budget.max_time.map(|t| Instant::now() + t),
    };
    let mut root = Worker {
        n,
        d,
        check,
        shared: &shared,
        adj: vec![0; n],
        deg: vec![0; n],
        local: 0,
    };
    let star_ok = (1..=d).all(|w| root.try_add(0, w));
    let found = if star_ok {
        let in_first = d - 1;
        let later = n - 1 - d;
        // vertex 1 takes `a` neighbors from 2..=d and `d-1-a` from d+1..n
        let splits: Vec<usize> = (0..=in_first.min(d - 1))
            .rev()
            .filter(|&a| d - 1 - a <= later)
            .collect();
        run_branches(&root, splits, budget.parallel)
    } else {
        None
    };
    let nodes = shared.nodes.load(Ordering::Relaxed) + root.local;
    let outcome = match found {
        Some(g) => Search::Found(g),
        None if shared.stop.load(Ordering::Relaxed) => Search::BudgetExceeded,
        None => Search::Exhausted,
    };
    Ok((outcome, nodes))
}

/// Pattern to search for at degree `d`: when `d >= |V(F)| - 1`, leaves of `F` can
/// always be embedded greedily, so a regular graph of that degree avoids `F` exactly
/// when it avoids the core of `F`.
fn effective_pattern(f: &ForbiddenPattern, d: usize) -> ForbiddenPattern {
    let core = f.core();
    if core.pendants == 0 || d + 1 < f.order() {
        return f.clone();
    }
    match core.shape {
        CoreShape::Triangle => ForbiddenPattern::Clique(3),
        CoreShape::Clique(s) => ForbiddenPattern::Clique(s),
        CoreShape::K4MinusEdge => ForbiddenPattern::K4MinusEdge,
        CoreShape::Cycle(l) => ForbiddenPattern::Cycle(l),
        CoreShape::Tree | CoreShape::Other => f.clone(),
    }
}

/// Degree caps that hold for every regular graph avoiding `f` at degree `d`.
fn capped(n: usize, d: usize, f: &ForbiddenPattern, budget: &SearchBudget) -> bool {
    if budget.degree_cap_override.is_some_and(|c| d > c) {
        return true;
    }
    let clique = match f {
        ForbiddenPattern::Clique(s) => Some(*s),
        ForbiddenPattern::Cycle(3) => Some(3),
        _ => None,
    };
    if clique.is_some_and(|s| d > turan_degree_cap(n, s - 1)) {
        return true;
    }
    if budget.odd_girth_cap && n % 2 == 1 {
        let g = match f {
            ForbiddenPattern::Clique(3) => Some(3),
            ForbiddenPattern::Cycle(l) if l % 2 == 1 => Some(*l + 2),
            _ => None,
        };
        if let Some(k) = g {
            return d > andrasfai_degree_cap(n, k).expect("odd bound");
        }
    }
    false
}

/// `rex(n, F)` by trying degrees from `n - 1` downward.
///
/// The first degree with a witness gives the value; it is exact only when every higher
/// degree was exhausted or excluded by a valid cap.
pub fn rex_exact(n: usize, f: &ForbiddenPattern, budget: &SearchBudget) -> Result<OracleOutcome, OracleError> {
    if n > MAX_ORDER {
        return Err(OracleError::TooLarge(n));
    }
    let mut tried = Vec::new();
    let mut nodes = 0;
    let mut clean = true;
    let mut witness = None;
    for d in (0..n.max(1)).rev() {
        if (n * d) % 2 == 1 {
            continue;
        }
        let g = effective_pattern(f, d);
        if capped(n, d, &g, budget) {
            tried.push((d, DegreeResult::Capped));
            continue;
        }
        let (res, used) = search(n, d, &Check::new(&g), budget)?;
        nodes += used;
        match res {
            Search::Found(w) => {
                tried.push((d, DegreeResult::Found));
                witness = Some(w);
                break;
            }
            Search::Exhausted => tried.push((d, DegreeResult::Exhausted)),
            Search::BudgetExceeded => {
                tried.push((d, DegreeResult::Budget));
                clean = false;
            }
        }
    }
    let status = match (&witness, clean) {
        (Some(_), true) => RexStatus::Exact,
        (Some(_), false) => RexStatus::LowerBound,
        (None, _) => RexStatus::Inconclusive,
    };
    let rex = RexValue {
        n,
        pattern: f.clone(),
        value: witness.as_ref().map(Graph::edge_count),
        status,
        source: RexSource::Oracle,
        threshold_assumed: false,
        conjectured: None,
        witness,
    };
    Ok(OracleOutcome {
        rex,
        degrees_tried: tried,
        nodes_expanded: nodes,
    })
}

/// Result of checking a claimed `d`-regular `F`-free graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub order: usize,
    pub claimed_degree: usize,
    /// Degrees that differ from the claim, as `(vertex, degree)`.
    pub degree_violations: Vec<(Vertex, usize)>,
    /// A copy of `F` (images of its vertices in order), if one exists.
    pub pattern_witness: Option<Vec<Vertex>>,
    pub edge_count: usize,
    pub expected_edges: Option<usize>,
}

impl CertificateReport {
    pub fn regular(&self) -> bool {
        self.degree_violations.is_empty()
    }

    pub fn pattern_free(&self) -> bool {
        self.pattern_witness.is_none()
    }

    pub fn edge_count_ok(&self) -> bool {
        self.expected_edges == Some(self.edge_count)
    }

    pub fn passed(&self) -> bool {
        self.regular() && self.pattern_free() && self.edge_count_ok()
    }
}

impl std::fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
        write!(f, "regular({}): {}", self.claimed_degree, mark(self.regular()))?;
        if let Some(&(v, d)) = self.degree_violations.first() {
            write!(f, " (vertex {v} has degree {d})")?;
        }
        write!(f, "; pattern-free: {}", mark(self.pattern_free()))?;
        if let Some(w) = &self.pattern_witness {
            write!(f, " (copy on {w:?})")?;
        }
        write!(f, "; edges {}: {}", self.edge_count, mark(self.edge_count_ok()))
    }
}

/// Checks regularity, `F`-freeness and the edge count `d * n / 2` of `g`.
pub fn verify_claim(g: &Graph, f: &ForbiddenPattern, claimed_d: usize) -> CertificateReport {
    let n = g.order();
    let degree_violations = (0..n)
        .map(|v| (v, g.degree(v)))
        .filter(|&(_, d)| d != claimed_d)
        .collect();
    let pattern_witness = find_pattern(g, f).expect("patterns are validated to a searchable size");
    let product = n * claimed_d;
    CertificateReport {
        order: n,
        claimed_degree: claimed_d,
        degree_violations,
        pattern_witness,
        edge_count: g.edge_count(),
        expected_edges: (product % 2 == 0).then_some(product / 2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::c7_blowup_extremal;

    fn k(s: usize) -> ForbiddenPattern {
        ForbiddenPattern::clique(s).unwrap()
    }

    fn budget() -> SearchBudget {
        SearchBudget::unlimited()
    }

    #[test]
    fn existence_examples() {
        match exists_regular_free(5, 2, &k(3), &budget()).unwrap() {
            Search::Found(g) => {
                assert_eq!(g.is_regular(), Some(2));
                assert!(verify_claim(&g, &k(3), 2).passed());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(exists_regular_free(7, 4, &k(3), &budget()).unwrap(), Search::Exhausted);
        assert!(matches!(exists_regular_free(7, 4, &k(4), &budget()).unwrap(), Search::Found(_)));
        assert_eq!(
            exists_regular_free(7, 3, &k(3), &budget()),
            Err(OracleError::OddDegreeSum { n: 7, d: 3 })
        );
        assert!(exists_regular_free(4, 4, &k(3), &budget()).is_err());
    }

    #[test]
    fn rex_examples() {
        let v = |n, f: &ForbiddenPattern| {
            let o = rex_exact(n, f, &budget()).unwrap();
            assert_eq!(o.rex.status, RexStatus::Exact);
            o.rex.value.unwrap()
        };
        assert_eq!(v(5, &k(3)), 5);
        assert_eq!(v(6, &k(3)), 9);
        assert_eq!(v(7, &k(4)), 14);
        // the complement of C3 + C5 is 5-regular and K4-free
        assert_eq!(v(8, &k(4)), 20);
        assert_eq!(v(9, &ForbiddenPattern::cycle(5).unwrap()), 9);
        assert_eq!(v(3, &k(4)), 3);
        assert_eq!(v(1, &k(3)), 0);
    }

    #[test]
    fn found_graphs_pass_verification() {
        let patterns = [k(3), k(4), ForbiddenPattern::K4MinusEdge, ForbiddenPattern::cycle(4).unwrap(), ForbiddenPattern::triangle_with_pendant()];
        for f in &patterns {
            for n in 2..=8 {
                let o = rex_exact(n, f, &budget()).unwrap();
                let g = o.rex.witness.as_ref().unwrap();
                let d = o.rex.degree().unwrap();
                assert!(verify_claim(g, f, d).passed(), "n={n} {f}");
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        for f in [k(3), k(4), ForbiddenPattern::cycle(5).unwrap()] {
            for n in 5..=8 {
                let a = rex_exact(n, &f, &budget()).unwrap();
                let b = rex_exact(n, &f, &budget().sequential()).unwrap();
                assert_eq!(a.rex, b.rex, "n={n} {f}");
                assert_eq!(a.degrees_tried, b.degrees_tried);
            }
        }
    }

    #[test]
    fn budget_downgrades_status() {
        let tight = SearchBudget {
            max_nodes: Some(1),
            ..SearchBudget::unlimited()
        };
        let o = rex_exact(9, &ForbiddenPattern::cycle(5).unwrap(), &tight).unwrap();
        assert!(o.degrees_tried.iter().any(|&(_, r)| r == DegreeResult::Budget));
        assert_ne!(o.rex.status, RexStatus::Exact);
    }

    #[test]
    fn caps_are_reported() {
        let o = rex_exact(7, &k(3), &budget()).unwrap();
        assert_eq!(o.degrees_tried, vec![(6, DegreeResult::Capped), (4, DegreeResult::Capped), (2, DegreeResult::Found)]);
        let c5 = ForbiddenPattern::cycle(5).unwrap();
        let o = rex_exact(9, &c5, &budget()).unwrap();
        assert_eq!(o.degrees_tried[1], (6, DegreeResult::Exhausted));
        let capped = SearchBudget {
            odd_girth_cap: true,
            ..budget()
        };
        let o = rex_exact(9, &c5, &capped).unwrap();
        assert_eq!(o.degrees_tried[1], (6, DegreeResult::Capped));
        assert_eq!(o.degrees_tried[2], (4, DegreeResult::Capped));
        assert_eq!(o.rex.value, Some(9));
    }

    #[test]
    fn verify_examples() {
        assert!(verify_claim(&Graph::cycle(5), &k(3), 2).passed());
        let r = verify_claim(&Graph::complete(4), &k(3), 3);
        assert!(r.regular() && r.edge_count_ok());
        assert_eq!(r.pattern_witness.as_ref().map(Vec::len), Some(3));
        assert!(!r.passed());
        let g = c7_blowup_extremal(17).unwrap().graph;
        assert!(verify_claim(&g, &ForbiddenPattern::cycle(5).unwrap(), 4).passed());
        let r = verify_claim(&Graph::path(3), &k(3), 2);
        assert!(!r.regular());
        assert!(r.to_string().contains("FAIL"));
    }
}
