//! Explains every vertex that ends below `4 − 1/c` by a forbidden
//! configuration within distance two.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::predicates::{violations_with_delta, Predicate};
use super::{run_discharging, ChargeLedger, Thresholds};
use crate::density::{check_mad_bound, PotentialParams};
use crate::error::DischargeError;
use crate::graph::{Graph, Vertex};
use crate::ratio::{self, Rational};

/// Vertices within this distance of a deficient vertex are searched.
pub const AUDIT_RADIUS: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Explanation {
    pub predicate: Predicate,
    /// Vertex at which the predicate is violated.
    pub witness: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub c: i64,
    pub delta: usize,
    #[serde(with = "ratio::serde_pq")]
    pub threshold: Rational,
    pub deficient: Vec<Vertex>,
    pub explanations: BTreeMap<Vertex, Vec<Explanation>>,
    pub unexplained: Vec<Vertex>,
}

impl AuditReport {
    pub fn is_complete(&self) -> bool {
        self.unexplained.is_empty()
    }
}

/// Audit without checking the density and degree hypotheses. Outside them
/// the report is still well defined but carries no guarantee.
pub fn audit_unchecked(g: &Graph, c: i64) -> Result<(AuditReport, ChargeLedger), DischargeError> {
    let t = Thresholds::new(c)?;
    let ledger = run_discharging(g, c)?;
    let threshold = t.target();
    let delta = g.max_degree();
    let deficient = ledger.vertices_below(&threshold);

    let mut explanations = BTreeMap::new();
    let mut unexplained = Vec::new();
    for &v in &deficient {
        let found: Vec<Explanation> = g
            .ball(v, AUDIT_RADIUS)
            .into_iter()
            .flat_map(|w| {
                violations_with_delta(g, t, delta, w)
                    .into_iter()
                    .map(move |predicate| Explanation {
                        predicate,
                        witness: w,
                    })
            })
            .collect();
        if found.is_empty() {
            unexplained.push(v);
        } else {
            explanations.insert(v, found);
        }
    }
    Ok((
        AuditReport {
            c,
            delta,
            threshold,
            deficient,
            explanations,
            unexplained,
        },
        ledger,
    ))
}

/// Audit of a graph with `mad < 4 − 1/c` and `Δ ≥ 14c − 7`. Both hypotheses
/// are checked first and reported as [`DischargeError::Precondition`].
pub fn audit(g: &Graph, c: i64) -> Result<AuditReport, DischargeError> {
    let t = Thresholds::new(c)?;
    let delta = g.max_degree();
    if delta < t.min_delta() {
        return Err(DischargeError::Precondition(format!(
            "maximum degree {delta} is below 14c - 7 = {}",
            t.min_delta()
        )));
    }
    let params = PotentialParams::mad4_minus(c);
    let cert = check_mad_bound(g, params)
        .map_err(|e| DischargeError::Precondition(format!("density check failed: {e}")))?;
    if !cert.holds {
        return Err(DischargeError::Precondition(format!(
            "mad = {} is not below 4 - 1/c = {}",
            ratio::to_pq(&cert.mad),
            ratio::to_pq(&params.mad_bound())
        )));
    }
    Ok(audit_unchecked(g, c)?.0)
}
