//! Regularized blow-ups of odd cycles.
//!
//! Class `Ai` (1-based in plan text) is an independent set joined completely to its two
//! cyclic neighbors. Each builder picks class sizes for the residue of `n` and deletes
//! matchings or factors so that every vertex ends with the same degree.

use crate::graph::Vertex;

use super::factors::{self, circulant, cycle_edges, regular_bipartite, straight_matching};
use super::{ConstructionError, ConstructionPlan, ConstructionResult, DeletionStep, HostKind, StepKind};

fn plan(family: &str, sizes: Vec<usize>, degree: usize, lower_bound_only: bool) -> ConstructionPlan {
    ConstructionPlan {
        family: family.into(),
        host: HostKind::CycleBlowup,
        class_sizes: sizes,
        deletions: Vec::new(),
        target_degree: degree,
        lower_bound_only,
    }
}

fn push(plan: &mut ConstructionPlan, kind: StepKind, scope: &str, edges: Vec<(Vertex, Vertex)>) {
    plan.deletions.push(DeletionStep::new(kind, scope, edges));
}

/// The `a`, `b` with `n = (g+2)a + 2b`, `0 <= b <= g+1`, `a >= 1` and `a` as large as
/// possible.
pub fn odd_girth_parameters(n: usize, g: usize) -> Option<(usize, usize)> {
    let m = g + 2;
    let top = n / m;
    let a = if (n - m * top) % 2 == 0 { top } else { top.checked_sub(1)? };
    if a == 0 {
        return None;
    }
    let rest = n - m * a;
    (rest <= 2 * (g + 1)).then_some((a, rest / 2))
}

/// A `2a`-regular blow-up of `C_{g+2}` on `n` vertices; its odd girth is at least
/// `g + 2`, so it contains no odd cycle of length `g` or less.
///
/// Classes `A1`, `A2` have `a + b` vertices and the rest `a`. Between `A_{g+2}` and
/// `A1`, and between `A3` and `A2`, a bipartite graph is removed in which the size-`a`
/// side has degree `b`; the remaining surplus inside `A1 ∪ A2` is removed as a perfect
/// matching on the less-hit vertices (when `a + b` does not divide `ab`) followed by a
/// regular bipartite graph.
pub fn odd_girth_blowup(n: usize, g: usize) -> Result<ConstructionResult, ConstructionError> {
    if g < 3 || g % 2 == 0 {
        return Err(ConstructionError::InvalidParameters(format!(
            "odd girth bound must be odd and at least 3, got {g}"
        )));
    }
    let (a, b) = odd_girth_parameters(n, g).ok_or_else(|| {
        ConstructionError::InvalidParameters(format!(
            "no decomposition n = {}a + 2b with a >= 1, 0 <= b <= {} for n = {n}",
            g + 2,
            g + 1
        ))
    })?;
    let m = g + 2;
    let mut sizes = vec![a; m];
    sizes[0] = a + b;
    sizes[1] = a + b;
    let mut p = plan("odd-girth-blowup", sizes, 2 * a, true);
    if b == 0 {
        return ConstructionResult::from_plan(p);
    }
    let c = p.classes();
    let h1 = circulant(&c[m - 1], &c[0], b, 0);
    let h2 = circulant(&c[2], &c[1], b, 0);
    let mut hits = vec![0usize; a + b];
    for &(_, v) in &h1 {
        hits[v - c[0][0]] += 1;
    }
    push(&mut p, StepKind::Biregular { left_degree: b }, &format!("A{m} | A1"), h1);
    push(&mut p, StepKind::Biregular { left_degree: b }, "A3 | A2", h2);

    let ab = a * b;
    if ab % (a + b) == 0 {
        let d = b * b / (a + b);
        let edges = regular_bipartite(&c[0], &c[1], d, 0);
        push(&mut p, StepKind::RegularBipartite(d), "A1 | A2", edges);
    } else {
        let floor = ab / (a + b);
        let less_hit: Vec<usize> = (0..a + b).filter(|&j| hits[j] == floor).collect();
        let matching = less_hit.iter().map(|&j| (c[0][j], c[1][j])).collect();
        push(&mut p, StepKind::PerfectMatching, "less-hit vertices of A1 | A2", matching);
        let d = b - ab.div_ceil(a + b);
        if d > 0 {
            let edges = regular_bipartite(&c[0], &c[1], d, 1);
            push(&mut p, StepKind::RegularBipartite(d), "A1 | A2", edges);
        }
    }
    ConstructionResult::from_plan(p)
}

/// Reuses the generic schedule when the tabulated one degenerates at `k = 1`.
fn generic(n: usize, g: usize, family: &str) -> Result<ConstructionResult, ConstructionError> {
    let mut p = odd_girth_blowup(n, g)?.plan;
    p.family = family.into();
    p.lower_bound_only = false;
    ConstructionResult::from_plan(p)
}

fn four_cycle(x: &[Vertex], y: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    cycle_edges(&[x[0], y[0], x[1], y[1]])
}

/// The `2k`-regular triangle-free graph on odd `n = 5k + s`, `n >= 5`, with `kn` edges.
pub fn c5_blowup_extremal(n: usize) -> Result<ConstructionResult, ConstructionError> {
    if n < 5 || n % 2 == 0 {
        return Err(ConstructionError::InvalidParameters(format!(
            "C5 blow-up needs odd n >= 5, got {n} (even orders are covered by K(n/2,n/2))"
        )));
    }
    let (k, s) = (n / 5, n % 5);
    if s == 4 && k == 1 {
        return generic(n, 3, "c5-blowup");
    }
    let sizes = match s {
        0 => vec![k, k, k, k, k],
        1 => vec![k + 1, k + 1, k, k - 1, k],
        2 => vec![k + 1, k + 1, k, k, k],
        3 => vec![k + 1, k + 1, k + 1, k, k],
        _ => vec![k + 2, k + 2, k, k, k],
    };
    let mut p = plan("c5-blowup", sizes, 2 * k, false);
    let a = p.classes();
    match s {
        0 => {}
        1 => push(&mut p, StepKind::PerfectMatching, "A1 | A2", straight_matching(&a[0], &a[1], k + 1)),
        2 => {
            push(&mut p, StepKind::Matching(k), "A1 | A5", straight_matching(&a[4], &a[0], k));
            push(&mut p, StepKind::Matching(k), "A2 | A3", straight_matching(&a[2], &a[1], k));
            push(&mut p, StepKind::ExplicitEdges, "unmatched vertices of A1, A2", vec![(a[0][k], a[1][k])]);
        }
        3 => {
            push(&mut p, StepKind::PerfectMatching, "A1 | A2", straight_matching(&a[0], &a[1], k + 1));
            push(&mut p, StepKind::PerfectMatching, "A2 | A3", straight_matching(&a[1], &a[2], k + 1));
            push(&mut p, StepKind::PerfectMatching, "A4 | A5", straight_matching(&a[3], &a[4], k));
        }
        _ => {
            // the two highest-indexed vertices of A1 and of A2 are the marked ones
            let (a1, m1) = a[0].split_at(k);
            let (a2, m2) = a[1].split_at(k);
            push(&mut p, StepKind::HamiltonianCycle, "marked a1' a2' a1'' a2''", four_cycle(m1, m2));
            let f1 = factors::hamiltonian_cycle(&[a1.to_vec(), a[4].clone()], "2-factor on A1' + A5")?;
            push(&mut p, StepKind::TwoFactor, "A1' + A5", cycle_edges(&f1));
            let f2 = factors::hamiltonian_cycle(&[a2.to_vec(), a[2].clone()], "2-factor on A2' + A3")?;
            push(&mut p, StepKind::TwoFactor, "A2' + A3", cycle_edges(&f2));
        }
    }
    ConstructionResult::from_plan(p)
}

/// The `2k`-regular graph of odd girth at least 7 on odd `n = 7k + s`, `n >= 7`, with
/// `kn` edges.
pub fn c7_blowup_extremal(n: usize) -> Result<ConstructionResult, ConstructionError> {
    if n < 7 || n % 2 == 0 {
        return Err(ConstructionError::InvalidParameters(format!(
            "C7 blow-up needs odd n >= 7, got {n}"
        )));
    }
    let (k, s) = (n / 7, n % 7);
    if k == 1 && (s == 4 || s == 6) {
        return generic(n, 5, "c7-blowup");
    }
    let sizes = match s {
        0 => vec![k; 7],
        1 => vec![k + 1, k, k, k + 1, k, k - 1, k],
        2 => vec![k + 1, k + 1, k, k, k, k, k],
        3 => vec![k + 1, k + 1, k, k, k + 1, k, k],
        4 => vec![k + 2, k + 2, k, k, k, k, k],
        5 => vec![k + 2, k + 2, k, k, k + 1, k, k],
        _ => vec![k + 2, k + 2, k, k, k + 2, k, k],
    };
    let mut p = plan("c7-blowup", sizes, 2 * k, false);
    let a = p.classes();
    match s {
        0 => {}
        1 => push(&mut p, StepKind::PerfectMatching, "A2 | A3", straight_matching(&a[1], &a[2], k)),
        2 => {
            push(&mut p, StepKind::Matching(k), "A1 | A7", straight_matching(&a[6], &a[0], k));
            push(&mut p, StepKind::Matching(k), "A2 | A3", straight_matching(&a[2], &a[1], k));
            push(&mut p, StepKind::ExplicitEdges, "unmatched vertices of A1, A2", vec![(a[0][k], a[1][k])]);
        }
        3 => {
            push(&mut p, StepKind::PerfectMatching, "A1 | A2", straight_matching(&a[0], &a[1], k + 1));
            push(&mut p, StepKind::PerfectMatching, "A3 | A4", straight_matching(&a[2], &a[3], k));
            push(&mut p, StepKind::PerfectMatching, "A6 | A7", straight_matching(&a[5], &a[6], k));
        }
        4 | 5 => {
            let (a1, m1) = a[0].split_at(k);
            let (a2, m2) = a[1].split_at(k);
            push(&mut p, StepKind::HamiltonianCycle, "marked a1' a2' a1'' a2''", four_cycle(m1, m2));
            if s == 4 {
                let f1 = factors::hamiltonian_cycle(&[a1.to_vec(), a[6].clone()], "2-factor on A1' + A7")?;
                push(&mut p, StepKind::TwoFactor, "A1' + A7", cycle_edges(&f1));
                let f2 = factors::hamiltonian_cycle(&[a2.to_vec(), a[2].clone()], "2-factor on A2' + A3")?;
                push(&mut p, StepKind::TwoFactor, "A2' + A3", cycle_edges(&f2));
            } else {
                push(&mut p, StepKind::Matching(k), "A1' | A2'", straight_matching(a1, a2, k));
                push(&mut p, StepKind::Matching(k), "A2' | A3", straight_matching(a2, &a[2], k));
                push(&mut p, StepKind::Matching(k), "A3 | A4", straight_matching(&a[2], &a[3], k));
                push(&mut p, StepKind::Matching(k), "A6 | A7", straight_matching(&a[5], &a[6], k));
                push(&mut p, StepKind::Matching(k), "A7 | A1'", straight_matching(&a[6], a1, k));
            }
        }
        _ => {
            for (x, y) in [(0, 1), (2, 3), (5, 6)] {
                let scope = format!("A{} + A{}", x + 1, y + 1);
                let f = factors::hamiltonian_cycle(&[a[x].clone(), a[y].clone()], &format!("2-factor on {scope}"))?;
                push(&mut p, StepKind::TwoFactor, &scope, cycle_edges(&f));
            }
        }
    }
    ConstructionResult::from_plan(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::pattern::{contains_clique, contains_cycle_of_length, odd_girth};

    #[test]
    fn c5_examples() {
        let r = c5_blowup_extremal(5).unwrap();
        assert_eq!(r.graph, Graph::cycle(5));
        let r = c5_blowup_extremal(11).unwrap();
        assert_eq!(r.plan.class_sizes, vec![3, 3, 2, 1, 2]);
        assert_eq!(r.plan.deletions.len(), 1);
        assert_eq!(r.plan.deletions[0].kind, StepKind::PerfectMatching);
        assert_eq!((r.claimed_degree, r.claimed_edges), (4, 22));
        let r = c5_blowup_extremal(9).unwrap();
        assert_eq!(r.plan.class_sizes, vec![3, 3, 1, 1, 1]);
        assert_eq!((r.claimed_degree, r.claimed_edges), (2, 9));
        assert!(c5_blowup_extremal(10).is_err());
        assert!(c5_blowup_extremal(3).is_err());
    }

    #[test]
    fn c5_family_is_triangle_free() {
        for n in (5..=61).step_by(2) {
            let r = c5_blowup_extremal(n).unwrap();
            assert_eq!(r.claimed_edges, n * (n / 5), "n={n}");
            assert!(!contains_clique(&r.graph, 3), "n={n}");
        }
    }

    #[test]
    fn c7_examples() {
        assert_eq!(c7_blowup_extremal(7).unwrap().graph, Graph::cycle(7));
        let r = c7_blowup_extremal(9).unwrap();
        assert_eq!(r.plan.class_sizes, vec![2, 2, 1, 1, 1, 1, 1]);
        assert_eq!(r.plan.deletions.len(), 3);
        assert_eq!(r.claimed_edges, 9);
        let r = c7_blowup_extremal(17).unwrap();
        assert_eq!(r.plan.class_sizes, vec![3, 3, 2, 2, 3, 2, 2]);
        assert_eq!((r.claimed_degree, r.claimed_edges), (4, 34));
        assert!(c7_blowup_extremal(8).is_err());
        assert!(c7_blowup_extremal(5).is_err());
    }

    #[test]
    fn c7_family_has_odd_girth_seven() {
        for n in (7..=71).step_by(2) {
            let r = c7_blowup_extremal(n).unwrap();
            assert_eq!(r.claimed_edges, n * (n / 7), "n={n}");
            assert!(!contains_cycle_of_length(&r.graph, 5), "n={n}");
            assert!(odd_girth(&r.graph).is_none_or(|g| g >= 7), "n={n}");
        }
    }

    #[test]
    fn odd_girth_parameter_rule() {
        assert_eq!(odd_girth_parameters(5, 3), Some((1, 0)));
        assert_eq!(odd_girth_parameters(13, 3), Some((1, 4)));
        assert_eq!(odd_girth_parameters(11, 5), Some((1, 2)));
        assert_eq!(odd_girth_parameters(25, 3), Some((5, 0)));
        assert_eq!(odd_girth_parameters(6, 3), None);
        assert_eq!(odd_girth_parameters(3, 3), None);
    }

    #[test]
    fn odd_girth_examples() {
        let r = odd_girth_blowup(5, 3).unwrap();
        assert_eq!(r.graph, Graph::cycle(5));
        let r = odd_girth_blowup(13, 3).unwrap();
        assert_eq!((r.claimed_degree, r.claimed_edges), (2, 13));
        assert!(!contains_clique(&r.graph, 3));
        let r = odd_girth_blowup(11, 5).unwrap();
        assert_eq!(r.plan.class_sizes, vec![3, 3, 1, 1, 1, 1, 1]);
        assert_eq!(r.claimed_edges, c7_blowup_extremal(11).unwrap().claimed_edges);
        assert!(odd_girth_blowup(11, 4).is_err());
        assert!(odd_girth_blowup(6, 3).is_err());
    }

    #[test]
    fn odd_girth_sweep() {
        for g in [3, 5, 7, 9] {
            for n in g + 2..=80 {
                let Some((a, _)) = odd_girth_parameters(n, g) else { continue };
                let r = odd_girth_blowup(n, g).unwrap_or_else(|e| panic!("n={n} g={g}: {e}"));
                assert_eq!(r.claimed_degree, 2 * a);
                if let Some(og) = odd_girth(&r.graph) {
                    assert!(og >= g + 2, "n={n} g={g} odd girth {og}");
                }
            }
        }
    }
}
