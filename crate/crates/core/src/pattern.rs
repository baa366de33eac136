//! Forbidden patterns and (non-induced) subgraph containment.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Edge, Graph, GraphBuilder, Vertex};

/// Largest custom pattern accepted by the embedding search.
pub const MAX_PATTERN_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("unrecognized pattern `{0}` (expected K<r>, K4-e, C<g>, or custom:<a>-<b>,...)")]
    Unrecognized(String),
    #[error("clique size must be at least 3, got {0}")]
    CliqueTooSmall(usize),
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("custom pattern has no edges")]
    NoEdges,
    #[error("custom pattern has a self-loop at {0}")]
    SelfLoop(usize),
    #[error("custom pattern lists edge {0}-{1} twice")]
    DuplicateEdge(usize, usize),
    #[error("custom pattern vertex {0} is isolated")]
    Isolated(usize),
    #[error("custom pattern is not connected")]
    Disconnected,
    #[error("pattern has {0} vertices; the embedding search supports at most {MAX_PATTERN_VERTICES}")]
    TooLarge(usize),
}

/// A connected edge list on labels `0..order`, each label incident to some edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CustomPattern {
    order: usize,
    edges: Vec<Edge>,
}

impl CustomPattern {
    pub fn new(edges: Vec<Edge>) -> Result<Self, PatternError> {
        if edges.is_empty() {
            return Err(PatternError::NoEdges);
        }
        let mut seen = std::collections::HashSet::new();
        let mut order = 0;
        for &(a, b) in &edges {
            if a == b {
                return Err(PatternError::SelfLoop(a));
            }
            let e = crate::graph::ordered(a, b);
            if !seen.insert(e) {
                return Err(PatternError::DuplicateEdge(e.0, e.1));
            }
            order = order.max(a + 1).max(b + 1);
        }
        if order > MAX_PATTERN_VERTICES {
            return Err(PatternError::TooLarge(order));
        }
        let graph = Graph::from_edges(order, edges.iter().copied()).expect("labels in range");
        if let Some(v) = (0..order).find(|&v| graph.degree(v) == 0) {
            return Err(PatternError::Isolated(v));
        }
        if !is_connected(&graph) {
            return Err(PatternError::Disconnected);
        }
        Ok(CustomPattern { order, edges })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ForbiddenPattern {
    /// `K_size`, `size >= 3`.
    Clique(usize),
    K4MinusEdge,
    /// `C_len`, `len >= 3`.
    Cycle(usize),
    Custom(CustomPattern),
}

impl ForbiddenPattern {
    pub fn clique(size: usize) -> Result<Self, PatternError> {
        if size < 3 {
            return Err(PatternError::CliqueTooSmall(size));
        }
        Ok(ForbiddenPattern::Clique(size))
    }

    pub fn cycle(len: usize) -> Result<Self, PatternError> {
        if len < 3 {
            return Err(PatternError::CycleTooShort(len));
        }
        Ok(ForbiddenPattern::Cycle(len))
    }

    pub fn custom(edges: Vec<Edge>) -> Result<Self, PatternError> {
        CustomPattern::new(edges).map(ForbiddenPattern::Custom)
    }

    /// Triangle with one pendant vertex attached.
    pub fn triangle_with_pendant() -> Self {
        Self::custom(vec![(0, 1), (1, 2), (2, 0), (0, 3)]).expect("valid pattern")
    }

    pub fn order(&self) -> usize {
        match self {
            ForbiddenPattern::Clique(s) => *s,
            ForbiddenPattern::K4MinusEdge => 4,
            ForbiddenPattern::Cycle(l) => *l,
            ForbiddenPattern::Custom(c) => c.order,
        }
    }

    /// The pattern as a graph on `0..order`.
    pub fn to_graph(&self) -> Graph {
        match self {
            ForbiddenPattern::Clique(s) => Graph::complete(*s),
            ForbiddenPattern::K4MinusEdge => Graph::complete(4)
                .delete_edges(&[(2, 3)])
                .expect("edge present"),
            ForbiddenPattern::Cycle(l) => Graph::cycle(*l),
            ForbiddenPattern::Custom(c) => {
                Graph::from_edges(c.order, c.edges.iter().copied()).expect("validated")
            }
        }
    }

    /// Length of a shortest odd cycle, or `None` if the pattern is bipartite.
    pub fn odd_girth(&self) -> Option<usize> {
        match self {
            ForbiddenPattern::Clique(_) | ForbiddenPattern::K4MinusEdge => Some(3),
            ForbiddenPattern::Cycle(l) => (l % 2 == 1).then_some(*l),
            ForbiddenPattern::Custom(_) => odd_girth(&self.to_graph()),
        }
    }

    pub fn chromatic_number(&self) -> usize {
        match self {
            ForbiddenPattern::Clique(s) => *s,
            ForbiddenPattern::K4MinusEdge => 3,
            ForbiddenPattern::Cycle(l) => 2 + l % 2,
            ForbiddenPattern::Custom(_) => chromatic_number(&self.to_graph()),
        }
    }

    /// Strips pendant vertices repeatedly and names what remains.
    pub fn core(&self) -> PatternCore {
        match self {
            ForbiddenPattern::Clique(3) => PatternCore::new(CoreShape::Triangle, 0),
            ForbiddenPattern::Clique(s) => PatternCore::new(CoreShape::Clique(*s), 0),
            ForbiddenPattern::K4MinusEdge => PatternCore::new(CoreShape::K4MinusEdge, 0),
            ForbiddenPattern::Cycle(3) => PatternCore::new(CoreShape::Triangle, 0),
            ForbiddenPattern::Cycle(l) => PatternCore::new(CoreShape::Cycle(*l), 0),
            ForbiddenPattern::Custom(c) => custom_core(c),
        }
    }
}

/// The 2-core of a connected pattern, classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreShape {
    Triangle,
    /// Clique on at least four vertices.
    Clique(usize),
    K4MinusEdge,
    /// Cycle of length at least four.
    Cycle(usize),
    /// A tree: nothing remains after stripping leaves.
    Tree,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternCore {
    pub shape: CoreShape,
    /// Vertices removed while stripping leaves.
    pub pendants: usize,
}

impl PatternCore {
    fn new(shape: CoreShape, pendants: usize) -> Self {
        PatternCore { shape, pendants }
    }
}

fn custom_core(c: &CustomPattern) -> PatternCore {
    let g = Graph::from_edges(c.order, c.edges.iter().copied()).expect("validated");
    let mut alive = vec![true; c.order];
    let mut degree = g.degree_sequence();
    let mut stack: Vec<_> = (0..c.order).filter(|&v| degree[v] <= 1).collect();
    let mut removed = 0;
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        removed += 1;
        for u in g.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    stack.push(u);
                }
            }
        }
    }
    let rest: Vec<_> = (0..c.order).filter(|&v| alive[v]).collect();
    let core = g.induced(&rest);
    let m = core.order();
    let e = core.edge_count();
    let shape = if m == 0 {
        CoreShape::Tree
    } else if e == m * (m - 1) / 2 {
        if m == 3 {
            CoreShape::Triangle
        } else {
            CoreShape::Clique(m)
        }
    } else if m == 4 && e == 5 {
        CoreShape::K4MinusEdge
    } else if core.is_regular() == Some(2) && is_connected(&core) {
        CoreShape::Cycle(m)
    } else {
        CoreShape::Other
    };
    PatternCore::new(shape, removed)
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenPattern::Clique(s) => write!(f, "K{s}"),
            ForbiddenPattern::K4MinusEdge => write!(f, "K4-e"),
            ForbiddenPattern::Cycle(l) => write!(f, "C{l}"),
            ForbiddenPattern::Custom(c) => {
                write!(f, "custom:")?;
                for (i, (a, b)) in c.edges.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}-{b}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for ForbiddenPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || PatternError::Unrecognized(s.to_string());
        if let Some(list) = s.strip_prefix("custom:") {
            let mut edges = Vec::new();
            for item in list.split(',') {
                let (a, b) = item.trim().split_once('-').ok_or_else(bad)?;
                let a = a.trim().parse().map_err(|_| bad())?;
                let b = b.trim().parse().map_err(|_| bad())?;
                edges.push((a, b));
            }
            return ForbiddenPattern::custom(edges);
        }
        if s.eq_ignore_ascii_case("K4-e") {
            return Ok(ForbiddenPattern::K4MinusEdge);
        }
        let (head, tail) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let size: usize = tail.parse().map_err(|_| bad())?;
        match head {
            "K" | "k" => ForbiddenPattern::clique(size),
            "C" | "c" => ForbiddenPattern::cycle(size),
            _ => Err(bad()),
        }
    }
}

fn is_connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == n
}

fn and_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
    }
}

fn count(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

fn clear_through(bits: &mut [u64], v: Vertex) {
    // drops every vertex <= v
    for (i, w) in bits.iter_mut().enumerate() {
        let lo = i * 64;
        if v >= lo + 63 {
            *w = 0;
        } else if v >= lo {
            *w &= !((1u64 << (v - lo + 1)) - 1);
        }
    }
}

/// A complete subgraph on `size` vertices, listed in increasing order.
pub fn find_clique(g: &Graph, size: usize) -> Option<Vec<Vertex>> {
    if size == 0 {
        return Some(Vec::new());
    }
    let all: Vec<u64> = {
        let mut b = vec![!0u64; crate::graph::words_for(g.order())];
        if let Some(last) = b.last_mut() {
            let r = g.order() % 64;
            if r != 0 {
                *last = (1u64 << r) - 1;
            }
        }
        b
    };
    let mut chosen = Vec::with_capacity(size);
    clique_rec(g, &all, size, &mut chosen).then_some(chosen)
}

fn clique_rec(g: &Graph, candidates: &[u64], need: usize, chosen: &mut Vec<Vertex>) -> bool {
    if need == 0 {
        return true;
    }
    if count(candidates) < need {
        return false;
    }
    for v in crate::graph::BitIter::new(candidates) {
        let mut next = candidates.to_vec();
        and_into(&mut next, g.row(v));
        clear_through(&mut next, v);
        chosen.push(v);
        if clique_rec(g, &next, need - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn contains_clique(g: &Graph, size: usize) -> bool {
    find_clique(g, size).is_some()
}

/// Vertices `[a, b, c, d]` with `ab` the shared edge and `c`, `d` both adjacent to `a`
/// and `b`.
pub fn find_k4_minus_e(g: &Graph) -> Option<[Vertex; 4]> {
    for (a, b) in g.edges() {
        let mut common = g.row(a).to_vec();
        and_into(&mut common, g.row(b));
        let mut it = crate::graph::BitIter::new(&common);
        if let (Some(c), Some(d)) = (it.next(), it.next()) {
            return Some([a, b, c, d]);
        }
    }
    None
}

pub fn contains_k4_minus_e(g: &Graph) -> bool {
    find_k4_minus_e(g).is_some()
}

/// A cycle on exactly `len` distinct vertices, in traversal order starting from its
/// smallest vertex.
pub fn find_cycle(g: &Graph, len: usize) -> Option<Vec<Vertex>> {
    if len < 3 || len > g.order() {
        return None;
    }
    let mut path = Vec::with_capacity(len);
    let mut used = vec![false; g.order()];
    for start in 0..g.order() {
        path.push(start);
        used[start] = true;
        if cycle_rec(g, len, &mut path, &mut used) {
            return Some(path);
        }
        used[start] = false;
        path.pop();
    }
    None
}

fn cycle_rec(g: &Graph, len: usize, path: &mut Vec<Vertex>, used: &mut [bool]) -> bool {
    let start = path[0];
    let last = *path.last().expect("non-empty path");
    if path.len() == len {
        // fixed orientation: second vertex smaller than the closing vertex
        return g.has_edge(last, start) && path[1] < last;
    }
    for v in g.neighbors(last) {
        if v <= start || used[v] {
            continue;
        }
        used[v] = true;
        path.push(v);
        if cycle_rec(g, len, path, used) {
            return true;
        }
        path.pop();
        used[v] = false;
    }
    false
}

pub fn contains_cycle_of_length(g: &Graph, len: usize) -> bool {
    find_cycle(g, len).is_some()
}

/// Static matching order: highest degree first, then repeatedly the vertex with the most
/// already-placed neighbors (ties to higher degree, then lower label).
fn matching_order(p: &Graph) -> Vec<Vertex> {
    let m = p.order();
    let mut placed = vec![false; m];
    let mut order = Vec::with_capacity(m);
    while order.len() < m {
        let next = (0..m)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = p.neighbors(v).filter(|&u| placed[u]).count();
                (back, p.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    order
}

/// An injective edge-preserving map from `pattern` into `g` (non-induced), indexed by
/// pattern vertex.
pub fn find_embedding(g: &Graph, pattern: &Graph) -> Result<Option<Vec<Vertex>>, PatternError> {
    if pattern.order() > MAX_PATTERN_VERTICES {
        return Err(PatternError::TooLarge(pattern.order()));
    }
    if pattern.order() > g.order() || pattern.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let order = matching_order(pattern);
    let mut image = vec![usize::MAX; pattern.order()];
    let mut used = vec![false; g.order()];
    let gdeg = g.degree_sequence();
    Ok(embed_rec(g, pattern, &order, 0, &gdeg, &mut image, &mut used).then_some(image))
}

fn embed_rec(
    g: &Graph,
    p: &Graph,
    order: &[Vertex],
    depth: usize,
    gdeg: &[usize],
    image: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    let Some(&pv) = order.get(depth) else {
        return true;
    };
    let need = p.degree(pv);
    let anchors: Vec<Vertex> = p
        .neighbors(pv)
        .filter(|&u| image[u] != usize::MAX)
        .map(|u| image[u])
        .collect();
    let candidates: Vec<Vertex> = match anchors.split_first() {
        Some((&first, rest)) => g
            .neighbors(first)
            .filter(|&v| rest.iter().all(|&a| g.has_edge(a, v)))
            .collect(),
        None => (0..g.order()).collect(),
    };
    for v in candidates {
        if used[v] || gdeg[v] < need {
            continue;
        }
        image[pv] = v;
        used[v] = true;
        if embed_rec(g, p, order, depth + 1, gdeg, image, used) {
            return true;
        }
        used[v] = false;
        image[pv] = usize::MAX;
    }
    false
}

/// Locates a copy of `f` in `g`. The witness lists graph vertices: the clique, the
/// cycle in order, or the image of each pattern vertex.
pub fn find_pattern(g: &Graph, f: &ForbiddenPattern) -> Result<Option<Vec<Vertex>>, PatternError> {
    Ok(match f {
        ForbiddenPattern::Clique(s) => find_clique(g, *s),
        ForbiddenPattern::K4MinusEdge => find_k4_minus_e(g).map(|w| w.to_vec()),
        ForbiddenPattern::Cycle(l) => find_cycle(g, *l),
        ForbiddenPattern::Custom(_) => find_embedding(g, &f.to_graph())?,
    })
}

pub fn contains_subgraph(g: &Graph, f: &ForbiddenPattern) -> Result<bool, PatternError> {
    find_pattern(g, f).map(|w| w.is_some())
}

/// Shortest odd cycle length of `g`, via BFS on the bipartite double cover.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; 2 * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[2 * s] = 0;
        queue.clear();
        queue.push_back(2 * s);
        while let Some(x) = queue.pop_front() {
            let (v, side) = (x / 2, x % 2);
            if best.is_some_and(|b| dist[x] + 1 >= b) {
                break;
            }
            for u in g.neighbors(v) {
                let y = 2 * u + (1 - side);
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[2 * s + 1] != usize::MAX {
            let d = dist[2 * s + 1];
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    best
}

/// Exact chromatic number by backtracking; intended for small pattern graphs.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let order = matching_order(g);
    let mut colors = vec![usize::MAX; n];
    (1..=n)
        .find(|&k| color_rec(g, &order, 0, k, &mut colors))
        .expect("n colors always suffice")
}

fn color_rec(g: &Graph, order: &[Vertex], depth: usize, k: usize, colors: &mut [usize]) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    // symmetry: never open more than one new color at a time
    let open = order[..depth].iter().map(|&u| colors[u] + 1).max().unwrap_or(0);
    for c in 0..k.min(open + 1) {
        if g.neighbors(v).any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if color_rec(g, order, depth + 1, k, colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Builds a graph from `pattern` edges with an extra pendant vertex on `at`.
pub fn with_pendant(pattern: &Graph, at: Vertex) -> Graph {
    let mut b = GraphBuilder::new(pattern.order() + 1);
    for (u, v) in pattern.edges() {
        b.add_edge(u, v).expect("in range");
    }
    b.add_edge(at, pattern.order()).expect("in range");
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> ForbiddenPattern {
        s.parse().unwrap()
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(p("K3"), ForbiddenPattern::Clique(3));
        assert_eq!(p("K5"), ForbiddenPattern::Clique(5));
        assert_eq!(p("K4-e"), ForbiddenPattern::K4MinusEdge);
        assert_eq!(p("C7"), ForbiddenPattern::Cycle(7));
        let c = p("custom:0-1,1-2,2-0,2-3");
        assert_eq!(c.order(), 4);
        assert_eq!(c.to_string(), "custom:0-1,1-2,2-0,2-3");
        assert_eq!(p("K4-e").to_string(), "K4-e");
        assert!("K2".parse::<ForbiddenPattern>().is_err());
        assert!("C2".parse::<ForbiddenPattern>().is_err());
        assert!("X5".parse::<ForbiddenPattern>().is_err());
        assert!("K".parse::<ForbiddenPattern>().is_err());
        assert!("".parse::<ForbiddenPattern>().is_err());
    }

    #[test]
    fn custom_validation() {
        assert_eq!(ForbiddenPattern::custom(vec![]), Err(PatternError::NoEdges));
        assert_eq!(ForbiddenPattern::custom(vec![(1, 1)]), Err(PatternError::SelfLoop(1)));
        assert_eq!(
            ForbiddenPattern::custom(vec![(0, 1), (1, 0)]),
            Err(PatternError::DuplicateEdge(0, 1))
        );
        assert_eq!(ForbiddenPattern::custom(vec![(0, 2)]), Err(PatternError::Isolated(1)));
        assert_eq!(
            ForbiddenPattern::custom(vec![(0, 1), (2, 3)]),
            Err(PatternError::Disconnected)
        );
        assert_eq!(ForbiddenPattern::custom(vec![(0, 12)]), Err(PatternError::TooLarge(13)));
    }

    #[test]
    fn clique_examples() {
        assert!(!contains_clique(&Graph::cycle(5), 3));
        let t63 = Graph::complete_multipartite(&[2, 2, 2]);
        assert!(!contains_clique(&t63, 4));
        assert!(contains_clique(&t63, 3));
        let k6_minus_pm = Graph::complete(6).delete_edges(&[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(!contains_clique(&k6_minus_pm, 4));
        assert_eq!(find_clique(&Graph::complete(5), 5), Some(vec![0, 1, 2, 3, 4]));
        assert!(contains_clique(&Graph::empty(3), 1));
        assert!(!contains_clique(&Graph::empty(3), 2));
    }

    #[test]
    fn k4_minus_e_examples() {
        assert!(contains_k4_minus_e(&Graph::complete(4)));
        assert!(!contains_k4_minus_e(&Graph::cycle_blowup(&[2; 5])));
        let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(contains_k4_minus_e(&diamond));
        assert!(!contains_k4_minus_e(&Graph::complete(3)));
    }

    #[test]
    fn cycle_examples() {
        assert!(!contains_cycle_of_length(&Graph::cycle(7), 5));
        assert!(contains_cycle_of_length(&Graph::cycle(7), 7));
        assert!(contains_cycle_of_length(&Graph::petersen(), 5));
        assert!(!contains_cycle_of_length(&Graph::petersen(), 3));
        assert!(!contains_cycle_of_length(&Graph::petersen(), 4));
        let k33 = Graph::complete_multipartite(&[3, 3]);
        assert!(!contains_cycle_of_length(&k33, 5));
        assert!(contains_cycle_of_length(&k33, 6));
        assert!(!contains_cycle_of_length(&k33, 7));
        let c = find_cycle(&Graph::petersen(), 5).unwrap();
        assert_eq!(c.len(), 5);
        for i in 0..5 {
            assert!(Graph::petersen().has_edge(c[i], c[(i + 1) % 5]));
        }
    }

    #[test]
    fn subgraph_examples() {
        let tp = ForbiddenPattern::triangle_with_pendant();
        assert!(!contains_subgraph(&Graph::cycle_blowup(&[2; 5]), &tp).unwrap());
        assert!(contains_subgraph(&Graph::complete(4), &tp).unwrap());
        // triangle plus an isolated vertex: nowhere to hang the pendant
        let big = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!contains_subgraph(&big, &tp).unwrap());
        let too_big = Graph::complete(13);
        assert_eq!(
            find_embedding(&Graph::complete(20), &too_big),
            Err(PatternError::TooLarge(13))
        );
    }

    #[test]
    fn girth_and_chromatic() {
        assert_eq!(p("K4").odd_girth(), Some(3));
        assert_eq!(p("K4").chromatic_number(), 4);
        assert_eq!(p("C7").odd_girth(), Some(7));
        assert_eq!(p("C7").chromatic_number(), 3);
        assert_eq!(p("K4-e").odd_girth(), Some(3));
        assert_eq!(p("K4-e").chromatic_number(), 3);
        assert_eq!(p("C6").odd_girth(), None);
        assert_eq!(p("C6").chromatic_number(), 2);
        // analytic answers agree with the generic routines
        for s in ["K3", "K4", "K5", "K4-e", "C3", "C4", "C5", "C7", "C8"] {
            let f = p(s);
            assert_eq!(f.odd_girth(), odd_girth(&f.to_graph()), "{s}");
            assert_eq!(f.chromatic_number(), chromatic_number(&f.to_graph()), "{s}");
        }
        let c5p = p("custom:0-1,1-2,2-3,3-4,4-0,0-5");
        assert_eq!(c5p.odd_girth(), Some(5));
        assert_eq!(c5p.chromatic_number(), 3);
        assert_eq!(p("custom:0-1,1-2").odd_girth(), None);
        assert_eq!(chromatic_number(&Graph::petersen()), 3);
        assert_eq!(odd_girth(&Graph::petersen()), Some(5));
    }

    #[test]
    fn cores() {
        let core = |s: &str| p(s).core();
        assert_eq!(core("K3").shape, CoreShape::Triangle);
        assert_eq!(core("C3").shape, CoreShape::Triangle);
        assert_eq!(core("custom:0-1,1-2,2-0").shape, CoreShape::Triangle);
        let tp = core("custom:0-1,1-2,2-0,0-3");
        assert_eq!((tp.shape, tp.pendants), (CoreShape::Triangle, 1));
        let c5p = core("custom:0-1,1-2,2-3,3-4,4-0,0-5,5-6");
        assert_eq!((c5p.shape, c5p.pendants), (CoreShape::Cycle(5), 2));
        assert_eq!(core("custom:0-1,0-2,1-2,1-3,2-3,3-4").shape, CoreShape::K4MinusEdge);
        assert_eq!(core("custom:0-1,1-2,2-3").shape, CoreShape::Tree);
        assert_eq!(core("K5").shape, CoreShape::Clique(5));
        assert_eq!(core("custom:0-1,1-2,2-0,2-3,3-4,4-2").shape, CoreShape::Other);
    }

    #[test]
    fn pendant_helper() {
        let g = with_pendant(&Graph::complete(3), 0);
        assert_eq!(g.order(), 4);
        assert_eq!(g.degree_sequence(), vec![3, 2, 2, 1]);
    }
}
