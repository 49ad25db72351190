//! Local configurations that cannot occur in a smallest graph whose square
//! needs more than `2Δ` colours from lists.
//!
//! A predicate is *violated* at `v` when `v` meets its hypothesis but not its
//! conclusion. All of them depend only on degrees within distance one of `v`,
//! `Δ(G)` and `c`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::Thresholds;
use crate::error::DischargeError;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Predicate {
    /// A vertex with a 2-neighbour has neighbour-degree sum at least `2Δ`.
    #[serde(rename = "P_L32")]
    L32,
    /// With a 2-neighbour and `d ≤ 2Δ/3`: at least one 4⁺-neighbour.
    #[serde(rename = "P_C33i")]
    C33i,
    /// With a 2-neighbour and `d ≤ Δ/3`: at least two 4⁺-neighbours.
    #[serde(rename = "P_C33ii")]
    C33ii,
    /// No two 2-vertices are adjacent.
    #[serde(rename = "P_C33iii")]
    C33iii,
    /// Every 3-vertex has a neighbour of degree at least `4c`.
    #[serde(rename = "P_L34")]
    L34,
    /// No vertex has degree at most one.
    #[serde(rename = "P_MINDEG")]
    MinDeg,
}

impl Predicate {
    pub const ALL: [Predicate; 6] = [
        Predicate::L32,
        Predicate::C33i,
        Predicate::C33ii,
        Predicate::C33iii,
        Predicate::L34,
        Predicate::MinDeg,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Predicate::L32 => "P_L32",
            Predicate::C33i => "P_C33i",
            Predicate::C33ii => "P_C33ii",
            Predicate::C33iii => "P_C33iii",
            Predicate::L34 => "P_L34",
            Predicate::MinDeg => "P_MINDEG",
        }
    }
}

/// Violations at `v`, using `delta` as `Δ(G)`.
pub(crate) fn violations_with_delta(
    g: &Graph,
    t: Thresholds,
    delta: usize,
    v: Vertex,
) -> BTreeSet<Predicate> {
    let mut out = BTreeSet::new();
    let d = g.degree(v);
    let nbrs = g.neighbors(v);
    let has_two = nbrs.iter().any(|&w| g.degree(w) == 2);
    let four_plus = nbrs.iter().filter(|&&w| g.degree(w) >= 4).count();

    if d <= 1 {
        out.insert(Predicate::MinDeg);
    }
    if has_two {
        let sum: usize = nbrs.iter().map(|&w| g.degree(w)).sum();
        if sum < 2 * delta {
            out.insert(Predicate::L32);
        }
        if 3 * d <= 2 * delta && four_plus < 1 {
            out.insert(Predicate::C33i);
        }
        if 3 * d <= delta && four_plus < 2 {
            out.insert(Predicate::C33ii);
        }
        if d == 2 {
            out.insert(Predicate::C33iii);
        }
    }
    if d == 3 && nbrs.iter().all(|&w| g.degree(w) < t.big()) {
        out.insert(Predicate::L34);
    }
    out
}

/// Every predicate violated at `v`.
pub fn predicate_violations(
    g: &Graph,
    c: i64,
    v: Vertex,
) -> Result<BTreeSet<Predicate>, DischargeError> {
    let t = Thresholds::new(c)?;
    g.check_vertex(v)?;
    Ok(violations_with_delta(g, t, g.max_degree(), v))
}
