//! Explicit spanning structures inside complete multipartite graphs.
//!
//! Each function takes the parts as vertex lists and returns the chosen edges. The parts
//! are assumed pairwise completely joined; callers guarantee that.

use crate::graph::{Edge, Vertex};

use super::ConstructionError;

fn balanced(parts: &[Vec<Vertex>]) -> bool {
    let total: usize = parts.iter().map(Vec::len).sum();
    parts.iter().all(|p| 2 * p.len() <= total)
}

/// Hamiltonian cycle visiting the parts round-robin: always take the next unused vertex
/// of a largest remaining part other than the previous one, preferring the starting
/// part on ties so the cycle closes.
///
/// Exists whenever there are at least 3 vertices and no part holds more than half.
pub fn hamiltonian_cycle(parts: &[Vec<Vertex>], what: &str) -> Result<Vec<Vertex>, ConstructionError> {
    let total: usize = parts.iter().map(Vec::len).sum();
    if total < 3 || !balanced(parts) {
        return Err(ConstructionError::NoFactor {
            what: what.to_string(),
            sizes: parts.iter().map(Vec::len).collect(),
        });
    }
    let mut next = vec![0usize; parts.len()];
    let remaining = |next: &[usize], i: usize| parts[i].len() - next[i];
    let first = (0..parts.len())
        .max_by_key(|&i| (parts[i].len(), std::cmp::Reverse(i)))
        .expect("non-empty");
    let mut order = Vec::with_capacity(total);
    let mut prev = first;
    order.push(parts[first][0]);
    next[first] = 1;
    for _ in 1..total {
        let pick = (0..parts.len())
            .filter(|&i| i != prev && remaining(&next, i) > 0)
            .max_by_key(|&i| (remaining(&next, i), i == first, std::cmp::Reverse(i)))
            .ok_or_else(|| ConstructionError::NoFactor {
                what: what.to_string(),
                sizes: parts.iter().map(Vec::len).collect(),
            })?;
        order.push(parts[pick][next[pick]]);
        next[pick] += 1;
        prev = pick;
    }
    if prev == first {
        return Err(ConstructionError::NoFactor {
            what: what.to_string(),
            sizes: parts.iter().map(Vec::len).collect(),
        });
    }
    Ok(order)
}

pub fn cycle_edges(order: &[Vertex]) -> Vec<Edge> {
    (0..order.len())
        .map(|i| (order[i], order[(i + 1) % order.len()]))
        .collect()
}

/// Perfect matching across parts: list the parts largest first and pair position `i`
/// with position `i + total/2`. No part spans more than half the list, so every pair
/// crosses parts.
pub fn perfect_matching(parts: &[Vec<Vertex>], what: &str) -> Result<Vec<Edge>, ConstructionError> {
    let total: usize = parts.iter().map(Vec::len).sum();
    if total % 2 == 1 || !balanced(parts) {
        return Err(ConstructionError::NoFactor {
            what: what.to_string(),
            sizes: parts.iter().map(Vec::len).collect(),
        });
    }
    let mut idx: Vec<usize> = (0..parts.len()).collect();
    idx.sort_by_key(|&i| (std::cmp::Reverse(parts[i].len()), i));
    let list: Vec<Vertex> = idx.iter().flat_map(|&i| parts[i].iter().copied()).collect();
    let half = total / 2;
    Ok((0..half).map(|i| (list[i], list[i + half])).collect())
}

/// Pairs `left[i]` with `right[i]` for `i < size`.
pub fn straight_matching(left: &[Vertex], right: &[Vertex], size: usize) -> Vec<Edge> {
    assert!(size <= left.len() && size <= right.len());
    (0..size).map(|i| (left[i], right[i])).collect()
}

/// Bipartite graph where `left[i]` is joined to `right[(i*degree + shift + t) mod |right|]`
/// for `t < degree`. Right-side degrees then differ by at most one.
pub fn circulant(left: &[Vertex], right: &[Vertex], degree: usize, shift: usize) -> Vec<Edge> {
    assert!(degree <= right.len());
    let m = right.len();
    let mut edges = Vec::with_capacity(left.len() * degree);
    for (i, &u) in left.iter().enumerate() {
        for t in 0..degree {
            edges.push((u, right[(i * degree + shift + t) % m]));
        }
    }
    edges
}

/// `degree`-regular bipartite graph on two equal sides; `right[j]` joins `left[i]` when
/// `(j - i - shift) mod m < degree`. With `shift = 1` the pairs `left[i]right[i]` are
/// avoided as long as `degree < m`.
pub fn regular_bipartite(left: &[Vertex], right: &[Vertex], degree: usize, shift: usize) -> Vec<Edge> {
    assert_eq!(left.len(), right.len());
    let m = left.len();
    assert!(degree + shift.min(1) <= m || degree == 0);
    let mut edges = Vec::with_capacity(m * degree);
    for (i, &u) in left.iter().enumerate() {
        for t in 0..degree {
            edges.push((u, right[(i + shift + t) % m]));
        }
    }
    edges
}

/// Deals `count` vertices from the parts in round-robin order (part index order,
/// skipping exhausted parts), taking each part's vertices front to back.
pub fn round_robin(parts: &[Vec<Vertex>], count: usize) -> Option<Vec<Vertex>> {
    let mut next = vec![0usize; parts.len()];
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut progressed = false;
        for (i, p) in parts.iter().enumerate() {
            if out.len() == count {
                break;
            }
            if next[i] < p.len() {
                out.push(p[next[i]]);
                next[i] += 1;
                progressed = true;
            }
        }
        if !progressed {
            return None;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::blocks;

    fn parts_of(sizes: &[usize]) -> Vec<Vec<Vertex>> {
        blocks(sizes).into_iter().map(|r| r.collect()).collect()
    }

    fn part_index(sizes: &[usize]) -> Vec<usize> {
        sizes.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat_n(i, s)).collect()
    }

    /// Every multiset of up to 5 part sizes in 1..=6 with a balanced total.
    fn size_lists() -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        fn rec(cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            if cur.len() == 5 {
                return;
            }
            let max = cur.last().copied().unwrap_or(6);
            for s in 1..=max {
                cur.push(s);
                rec(cur, out);
                cur.pop();
            }
        }
        rec(&mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn hamiltonian_cycles_exist_when_balanced() {
        for sizes in size_lists() {
            let total: usize = sizes.iter().sum();
            let ok = total >= 3 && sizes.iter().all(|&s| 2 * s <= total);
            // also try the reversed listing so the largest part is not always first
            for sizes in [sizes.clone(), sizes.iter().rev().copied().collect()] {
                let parts = parts_of(&sizes);
                let res = hamiltonian_cycle(&parts, "test");
                assert_eq!(res.is_ok(), ok, "{sizes:?}");
                if let Ok(order) = res {
                    let class = part_index(&sizes);
                    let mut seen = order.clone();
                    seen.sort_unstable();
                    assert_eq!(seen, (0..total).collect::<Vec<_>>());
                    for (u, v) in cycle_edges(&order) {
                        assert_ne!(class[u], class[v], "{sizes:?} {order:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn perfect_matchings_exist_when_balanced_and_even() {
        for sizes in size_lists() {
            let total: usize = sizes.iter().sum();
            let ok = total % 2 == 0 && sizes.iter().all(|&s| 2 * s <= total);
            let parts = parts_of(&sizes);
            let res = perfect_matching(&parts, "test");
            assert_eq!(res.is_ok(), ok, "{sizes:?}");
            if let Ok(m) = res {
                let class = part_index(&sizes);
                let mut covered: Vec<_> = m.iter().flat_map(|&(a, b)| [a, b]).collect();
                covered.sort_unstable();
                assert_eq!(covered, (0..total).collect::<Vec<_>>());
                assert!(m.iter().all(|&(a, b)| class[a] != class[b]));
            }
        }
    }

    #[test]
    fn circulant_degree_split() {
        for a in 1..8 {
            for b in 0..10 {
                let left: Vec<_> = (0..a).collect();
                let right: Vec<_> = (100..100 + a + b).collect();
                let edges = circulant(&left, &right, b, 0);
                let mut deg = vec![0; a + b];
                for &(u, v) in &edges {
                    deg[v - 100] += 1;
                    assert!(u < a);
                }
                let lo = a * b / (a + b);
                let hi = (a * b).div_ceil(a + b);
                assert!(deg.iter().all(|&d| d == lo || d == hi), "a={a} b={b} {deg:?}");
                let mut dedup = edges.clone();
                dedup.sort_unstable();
                dedup.dedup();
                assert_eq!(dedup.len(), edges.len());
            }
        }
    }

    #[test]
    fn regular_bipartite_avoids_diagonal() {
        let left: Vec<_> = (0..5).collect();
        let right: Vec<_> = (5..10).collect();
        let edges = regular_bipartite(&left, &right, 3, 1);
        assert_eq!(edges.len(), 15);
        assert!(edges.iter().all(|&(u, v)| v - 5 != u));
        let mut deg = [0; 10];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        assert!(deg.iter().all(|&d| d == 3));
    }

    #[test]
    fn round_robin_deals_evenly() {
        let parts = parts_of(&[3, 3, 3]);
        assert_eq!(round_robin(&parts, 4), Some(vec![0, 3, 6, 1]));
        assert_eq!(round_robin(&parts_of(&[1, 3]), 4), Some(vec![0, 1, 2, 3]));
        assert_eq!(round_robin(&parts_of(&[1, 1]), 3), None);
    }
}
