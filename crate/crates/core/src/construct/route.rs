//! Picks a construction for a forbidden pattern.

use thiserror::Error;

use crate::pattern::{CoreShape, ForbiddenPattern};

use super::{
    balanced_bipartite, c5_blowup_extremal, c7_blowup_extremal, complete, edgeless, k4_extremal,
    odd_girth_blowup, odd_girth_parameters, regularized_turan, ConstructionError, ConstructionResult,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RouteError {
    #[error("no construction for {pattern}: supported families are cliques, K4-e, odd cycles and patterns obtained from them by adding pendant vertices")]
    Unroutable { pattern: String },
    #[error("no C7 blow-up for {pattern} on even n = {n}; on even n the bipartite K(n/2,n/2) has no odd cycles and gives n^2/4 edges")]
    EvenOrder { pattern: String, n: usize },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

fn triangle_free(n: usize) -> Result<ConstructionResult, ConstructionError> {
    if n % 2 == 0 {
        balanced_bipartite(n)
    } else if n >= 5 {
        c5_blowup_extremal(n)
    } else {
        Ok(edgeless(n))
    }
}

/// Returns a verified regular `F`-free graph on `n` vertices.
///
/// Below `|V(F)|` this is `K_n`. A pattern with pendant vertices is routed by its core,
/// since avoiding the core also avoids the pattern.
pub fn construct_for(n: usize, f: &ForbiddenPattern) -> Result<ConstructionResult, RouteError> {
    if n < f.order() {
        return Ok(complete(n));
    }
    let core = f.core();
    let result = match core.shape {
        CoreShape::Triangle | CoreShape::K4MinusEdge => triangle_free(n)?,
        CoreShape::Clique(4) => k4_extremal(n)?,
        CoreShape::Clique(s) => match regularized_turan(n, s - 1) {
            Ok(r) => r,
            Err(ConstructionError::NoFactor { .. }) => {
                let mut r = k4_extremal(n)?;
                r.plan.lower_bound_only = true;
                r
            }
            Err(e) => return Err(e.into()),
        },
        CoreShape::Cycle(5) if n % 2 == 0 => {
            return Err(RouteError::EvenOrder { pattern: f.to_string(), n })
        }
        CoreShape::Cycle(5) if n >= 7 => c7_blowup_extremal(n)?,
        CoreShape::Cycle(5) => edgeless(n),
        CoreShape::Cycle(g) if g % 2 == 1 => match odd_girth_parameters(n, g) {
            Some(_) => odd_girth_blowup(n, g)?,
            None => edgeless(n),
        },
        CoreShape::Cycle(_) | CoreShape::Tree | CoreShape::Other => {
            return Err(RouteError::Unroutable { pattern: f.to_string() })
        }
    };
    Ok(result)
}
