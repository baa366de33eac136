//! Turán graphs and their regularizations.

use crate::graph::{Graph, Vertex};

use super::factors::{self, cycle_edges, round_robin, straight_matching};
use super::{ConstructionError, ConstructionPlan, ConstructionResult, DeletionStep, HostKind, StepKind};

/// Class sizes of `T(n, r)`: the `n mod r` classes of size `ceil(n/r)` first.
pub fn turan_sizes(n: usize, r: usize) -> Vec<usize> {
    let (q, s) = (n / r, n % r);
    (0..r).map(|i| if i < s { q + 1 } else { q }).collect()
}

/// The complete `r`-partite graph on `n` vertices with classes as equal as possible.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph, ConstructionError> {
    if r < 1 || r > n {
        return Err(ConstructionError::InvalidParameters(format!(
            "Turán graph needs 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    Ok(Graph::complete_multipartite(&turan_sizes(n, r)))
}

/// `K_{n/2,n/2}` for even `n`.
pub fn balanced_bipartite(n: usize) -> Result<ConstructionResult, ConstructionError> {
    if n % 2 == 1 || n == 0 {
        return Err(ConstructionError::InvalidParameters(format!(
            "balanced complete bipartite graph needs positive even order, got {n}"
        )));
    }
    ConstructionResult::from_plan(ConstructionPlan {
        family: "complete-bipartite".into(),
        host: HostKind::CompleteMultipartite,
        class_sizes: vec![n / 2, n / 2],
        deletions: vec![],
        target_degree: n / 2,
        lower_bound_only: false,
    })
}

fn names(first: usize, count: usize) -> String {
    (first..first + count)
        .map(|i| format!("A{}", i + 1))
        .collect::<Vec<_>>()
        .join("+")
}

/// Splits `vertices` by the class containing them, dropping empty groups.
fn group_by_class(vertices: &[Vertex], classes: &[Vec<Vertex>]) -> Vec<Vec<Vertex>> {
    classes
        .iter()
        .map(|c| vertices.iter().copied().filter(|v| c.contains(v)).collect::<Vec<_>>())
        .filter(|g: &Vec<Vertex>| !g.is_empty())
        .collect()
}

fn minus(classes: &[Vec<Vertex>], removed: &[Vertex]) -> Vec<Vec<Vertex>> {
    classes
        .iter()
        .map(|c| c.iter().copied().filter(|v| !removed.contains(v)).collect::<Vec<_>>())
        .filter(|g: &Vec<Vertex>| !g.is_empty())
        .collect()
}

/// A regular `K_{r+1}`-free subgraph of `T(n, r)` obtained by deleting `O(n)` edges.
///
/// With `n = qr + s`: for `s = 0` the Turán graph itself; for `1 <= s <= r-2` with
/// `(r-s)q` even, a 1-factor is removed from the union of the `r-s` small classes and
/// the result has the largest possible regular degree `n - q - 1`. The remaining
/// residues use schedules reaching degree `n - q - 2` (or `n - q - 3` when `s = r-1`
/// and `q` is even); those results are flagged as lower bounds.
pub fn regularized_turan(n: usize, r: usize) -> Result<ConstructionResult, ConstructionError> {
    if r < 3 {
        return Err(ConstructionError::InvalidParameters(format!(
            "regularized Turán construction needs r >= 3, got {r}"
        )));
    }
    if n < r {
        return Err(ConstructionError::InvalidParameters(format!(
            "regularized Turán construction needs n >= r, got n={n}, r={r}"
        )));
    }
    let (q, s) = (n / r, n % r);
    let sizes = turan_sizes(n, r);
    let mut plan = ConstructionPlan {
        family: "regularized-turan".into(),
        host: HostKind::CompleteMultipartite,
        class_sizes: sizes,
        deletions: Vec::new(),
        target_degree: n - q,
        lower_bound_only: false,
    };
    let classes = plan.classes();
    let (large, small) = classes.split_at(s);

    if s == 0 {
        return ConstructionResult::from_plan(plan);
    }
    if s <= r - 2 && (r - s) * q % 2 == 0 {
        let m = factors::perfect_matching(small, "1-factor on the small classes")?;
        plan.deletions
            .push(DeletionStep::new(StepKind::OneFactor, names(s, r - s), m));
        plan.target_degree = n - q - 1;
        return ConstructionResult::from_plan(plan);
    }

    if r == 3 {
        // s = 2: three deletions per high-degree vertex would need 3q distinct
        // low-degree ends among 2(q+1), so use the three-partite schedule instead
        let mut res = k4_extremal(n)?;
        res.plan.lower_bound_only = n % 2 == 0;
        return Ok(res);
    }
    plan.lower_bound_only = true;
    if s == 1 {
        // q and r-1 odd: the single large class has even size q+1
        let low = &large[0];
        let ends = round_robin(small, q + 1).ok_or_else(|| {
            ConstructionError::InvalidParameters("not enough small-class vertices".into())
        })?;
        let spread: Vec<_> = low.iter().copied().zip(ends.iter().copied()).collect();
        plan.deletions.push(DeletionStep::new(
            StepKind::Matching(q + 1),
            format!("A1 | {}", names(1, r - 1)),
            spread,
        ));
        let grouped = group_by_class(&ends, small);
        let m = factors::perfect_matching(&grouped, "1-factor on the matched ends")?;
        plan.deletions
            .push(DeletionStep::new(StepKind::OneFactor, "matched ends", m));
        let rest = minus(small, &ends);
        let cycle = factors::hamiltonian_cycle(&rest, "Hamiltonian cycle on the unmatched small-class vertices")?;
        plan.deletions.push(DeletionStep::new(
            StepKind::HamiltonianCycle,
            format!("{} minus matched ends", names(1, r - 1)),
            cycle_edges(&cycle),
        ));
        plan.target_degree = n - q - 2;
    } else if s == r - 1 {
        // one small class of high degree n-q; every other vertex has degree n-q-1
        let high = &small[0];
        let per = if q % 2 == 0 { 3 } else { 2 };
        let stream = round_robin(large, per * q).ok_or_else(|| {
            ConstructionError::NoFactor {
                what: format!("set of {} distinct low-degree neighbors", per * q),
                sizes: large.iter().map(Vec::len).collect(),
            }
        })?;
        let star: Vec<_> = high
            .iter()
            .enumerate()
            .flat_map(|(i, &h)| stream[per * i..per * (i + 1)].iter().map(move |&v| (h, v)))
            .collect();
        plan.deletions.push(DeletionStep::new(
            StepKind::Biregular { left_degree: per },
            format!("A{} | {}", r, names(0, r - 1)),
            star,
        ));
        let rest = minus(large, &stream);
        if per == 3 {
            let grouped = group_by_class(&stream, large);
            let m = factors::perfect_matching(&grouped, "1-factor on the chosen neighbors")?;
            plan.deletions
                .push(DeletionStep::new(StepKind::OneFactor, "chosen neighbors", m));
            if !rest.is_empty() {
                let cycle = factors::hamiltonian_cycle(&rest, "Hamiltonian cycle on the remaining low-degree vertices")?;
                plan.deletions.push(DeletionStep::new(
                    StepKind::HamiltonianCycle,
                    format!("{} minus chosen neighbors", names(0, r - 1)),
                    cycle_edges(&cycle),
                ));
            }
            plan.target_degree = n - q - 3;
        } else {
            if !rest.is_empty() {
                let m = factors::perfect_matching(&rest, "1-factor on the remaining low-degree vertices")?;
                plan.deletions.push(DeletionStep::new(
                    StepKind::OneFactor,
                    format!("{} minus chosen neighbors", names(0, r - 1)),
                    m,
                ));
            }
            plan.target_degree = n - q - 2;
        }
    } else {
        // 2 <= s <= r-2 with q and r-s odd: the large classes carry the odd degree
        let m = factors::perfect_matching(large, "1-factor on the large classes")?;
        plan.deletions
            .push(DeletionStep::new(StepKind::OneFactor, names(0, s), m));
        let cycle = factors::hamiltonian_cycle(small, "Hamiltonian cycle on the small classes")?;
        plan.deletions.push(DeletionStep::new(
            StepKind::HamiltonianCycle,
            names(s, r - s),
            cycle_edges(&cycle),
        ));
        plan.target_degree = n - q - 2;
    }
    ConstructionResult::from_plan(plan)
}

/// The `2*floor(n/3)`-regular `K_4`-free graph on `n >= 3` vertices.
///
/// Classes are listed small first: `(k,k,k)`, `(k,k,k+1)` or `(k,k+1,k+1)`.
pub fn k4_extremal(n: usize) -> Result<ConstructionResult, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::InvalidParameters(format!(
            "K4 construction needs n >= 3, got {n}"
        )));
    }
    let (k, s) = (n / 3, n % 3);
    let sizes = match s {
        0 => vec![k, k, k],
        1 => vec![k, k, k + 1],
        _ => vec![k, k + 1, k + 1],
    };
    let mut plan = ConstructionPlan {
        family: "k4-three-partite".into(),
        host: HostKind::CompleteMultipartite,
        class_sizes: sizes,
        deletions: Vec::new(),
        target_degree: 2 * k,
        lower_bound_only: false,
    };
    let a = plan.classes();
    match s {
        0 => {}
        1 => plan.deletions.push(DeletionStep::new(
            StepKind::PerfectMatching,
            "A1 | A2",
            straight_matching(&a[0], &a[1], k),
        )),
        _ => {
            plan.deletions.push(DeletionStep::new(
                StepKind::Matching(k),
                "A1 | A2",
                straight_matching(&a[0], &a[1], k),
            ));
            plan.deletions.push(DeletionStep::new(
                StepKind::Matching(k),
                "A1 | A3",
                straight_matching(&a[0], &a[2], k),
            ));
            // the last vertex of each size-(k+1) class is the one left untouched
            plan.deletions.push(DeletionStep::new(
                StepKind::ExplicitEdges,
                "unmatched vertices of A2, A3",
                vec![(a[1][k], a[2][k])],
            ));
        }
    }
    ConstructionResult::from_plan(plan)
}
