//! Potential functions `ρ(A) = a|A| − b‖A‖` and maximum average degree.
//!
//! Two independent routes are provided:
//!
//! * exhaustive enumeration of all nonempty vertex subsets (Gray-code order,
//!   incremental edge counts), capped at [`EXHAUSTIVE_CAP`] vertices;
//! * a max-flow route: binary search over the finite set of achievable
//!   densities `e/q` with a closure (edge-gadget) network as the feasibility
//!   test.
//!
//! `mad(G) = 2 · max_{A ≠ ∅} ‖A‖/|A|`. Because `ρ(A) ≥ 1 ⟺ b‖A‖ < a|A|` for
//! integers, "min potential ≥ 1 over nonempty sets" is the same statement as
//! `mad(G) < 2a/b`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::DensityError;
use crate::flow::{Dinic, INF};
use crate::graph::{edges_within, normalize_set, Graph, Vertex};
use crate::ratio::{self, Rational};

/// Largest graph the exhaustive routes accept.
pub const EXHAUSTIVE_CAP: usize = 26;

/// Graphs up to this size get an exhaustive cross-check in [`check_mad_bound`].
pub const CROSS_CHECK_CAP: usize = 20;

/// Coefficients of `ρ(A) = a|A| − b‖A‖`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PotentialParams {
    pub a: i64,
    pub b: i64,
}

impl PotentialParams {
    /// `2|A| − ‖A‖`, certifying `mad < 4`.
    pub const MAD4: PotentialParams = PotentialParams { a: 2, b: 1 };

    pub fn new(a: i64, b: i64) -> Result<Self, DensityError> {
        if a < 1 || b < 1 {
            return Err(DensityError::InvalidParams { a, b });
        }
        Ok(PotentialParams { a, b })
    }

    /// `(4c − 1)|A| − 2c‖A‖`, certifying `mad < 4 − 1/c`.
    pub fn mad4_minus(c: i64) -> Self {
        PotentialParams {
            a: 4 * c - 1,
            b: 2 * c,
        }
    }

    /// `k|A| − ‖A‖`, certifying `mad < 2k`.
    pub fn mad2k(k: i64) -> Self {
        PotentialParams { a: k, b: 1 }
    }

    /// The bound `2a/b` on `mad` that these parameters certify.
    pub fn mad_bound(&self) -> Rational {
        ratio::frac(2 * self.a, self.b)
    }

    /// The equivalent bound `a/b` on `‖A‖/|A|`.
    pub fn density_bound(&self) -> Rational {
        ratio::frac(self.a, self.b)
    }

    #[inline]
    pub fn eval(&self, size: usize, edges: usize) -> i64 {
        self.a * size as i64 - self.b * edges as i64
    }
}

/// `ρ(A)`. Integer valued; duplicate entries of `set` are ignored.
pub fn potential(g: &Graph, set: &[Vertex], p: PotentialParams) -> Result<i64, DensityError> {
    let set = normalize_set(g, set)?;
    let inner = edges_within(g, &set)?;
    Ok(p.eval(set.len(), inner))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinPotential {
    pub value: i64,
    pub witness: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityResult {
    /// `max ‖A‖/|A|` over nonempty `A`
    #[serde(with = "ratio::serde_pq")]
    pub density: Rational,
    pub witness: Vec<Vertex>,
    /// `2 · density`
    #[serde(with = "ratio::serde_pq")]
    pub mad: Rational,
}

impl DensityResult {
    fn new(density: Rational, witness: Vec<Vertex>) -> Self {
        let mad = &density * Rational::from_integer(2.into());
        DensityResult {
            density,
            witness,
            mad,
        }
    }
}

fn mask_to_vec(mask: u32) -> Vec<Vertex> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Lexicographic order on the sorted member lists of two vertex sets.
fn lex_cmp(a: u32, b: u32) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let d = (a ^ b).trailing_zeros();
    let above = |m: u32| d < 31 && (m >> (d + 1)) != 0;
    if a >> d & 1 == 1 {
        // a continues with d; b continues with something larger or ends
        if above(b) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if above(a) {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

fn adjacency_masks(g: &Graph) -> Result<Vec<u32>, DensityError> {
    let n = g.vertex_count();
    if n > EXHAUSTIVE_CAP {
        return Err(DensityError::TooLarge {
            n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    Ok(g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect())
}

/// Calls `visit(mask, |A|, ‖A‖)` for every nonempty subset, in Gray-code order.
fn for_each_subset(adj: &[u32], mut visit: impl FnMut(u32, usize, usize)) {
    let n = adj.len();
    let mut mask = 0u32;
    let mut size = 0usize;
    let mut edges = 0usize;
    for k in 1u64..(1u64 << n) {
        let v = k.trailing_zeros() as usize;
        let bit = 1u32 << v;
        if mask & bit == 0 {
            edges += (adj[v] & mask).count_ones() as usize;
            mask |= bit;
            size += 1;
        } else {
            mask &= !bit;
            edges -= (adj[v] & mask).count_ones() as usize;
            size -= 1;
        }
        visit(mask, size, edges);
    }
}

/// Exact `min ρ(A)` over nonempty `A` by enumerating all `2^n − 1` subsets.
/// Ties go to the lexicographically smallest vertex set.
pub fn min_potential_exhaustive(
    g: &Graph,
    p: PotentialParams,
) -> Result<MinPotential, DensityError> {
    let adj = adjacency_masks(g)?;
    if adj.is_empty() {
        return Err(DensityError::EmptyGraph);
    }
    let mut best = i64::MAX;
    let mut best_mask = 0u32;
    for_each_subset(&adj, |mask, size, edges| {
        let value = p.eval(size, edges);
        if value < best || (value == best && lex_cmp(mask, best_mask) == Ordering::Less) {
            best = value;
            best_mask = mask;
        }
    });
    Ok(MinPotential {
        value: best,
        witness: mask_to_vec(best_mask),
    })
}

/// Exact maximum density by enumeration. Ties go to the lexicographically
/// smallest vertex set.
pub fn max_density_exhaustive(g: &Graph) -> Result<DensityResult, DensityError> {
    let adj = adjacency_masks(g)?;
    if adj.is_empty() {
        return Err(DensityError::EmptyGraph);
    }
    let (mut best_e, mut best_s, mut best_mask) = (0u64, 1u64, 0u32);
    for_each_subset(&adj, |mask, size, edges| {
        let lhs = edges as u64 * best_s;
        let rhs = best_e * size as u64;
        if lhs > rhs
            || (lhs == rhs && (best_mask == 0 || lex_cmp(mask, best_mask) == Ordering::Less))
        {
            best_e = edges as u64;
            best_s = size as u64;
            best_mask = mask;
        }
    });
    Ok(DensityResult::new(
        ratio::frac(best_e as i64, best_s as i64),
        mask_to_vec(best_mask),
    ))
}

/// Minimum of `weight_v·|A| − weight_e·‖A‖` over sets `A ⊇ forced`
/// (the empty set included when nothing is forced), solved as a
/// maximum-weight closure: source → edge node (cap `weight_e`), edge node →
/// both endpoints (infinite), vertex → sink (cap `weight_v`), forced vertices
/// tied to the source. Returns the value and the inclusion-minimal optimum.
fn min_closure_potential(
    g: &Graph,
    weight_v: i64,
    weight_e: i64,
    forced: &[Vertex],
) -> (i64, Vec<Vertex>) {
    let n = g.vertex_count();
    let m = g.edge_count();
    let source = n + m;
    let sink = source + 1;
    let mut net = Dinic::new(n + m + 2);
    for (idx, (u, v)) in g.edges().enumerate() {
        let e = n + idx;
        net.add_edge(source, e, weight_e);
        net.add_edge(e, u, INF);
        net.add_edge(e, v, INF);
    }
    for v in 0..n {
        net.add_edge(v, sink, weight_v);
    }
    for &v in forced {
        net.add_edge(source, v, INF);
    }
    let cut = net.max_flow(source, sink);
    let side = net.source_side(source);
    let set: Vec<Vertex> = (0..n).filter(|&v| side[v]).collect();
    (cut - weight_e * m as i64, set)
}

/// Exact `min ρ(A)` over all `A ⊇ forced` via one min cut.
///
/// With `forced = {u, v}` for an edge `uv`, this is the smallest potential of
/// any set that contains the edge, which is all that can change when `uv` is
/// inserted into a graph whose potentials were already positive.
pub fn min_potential_containing(
    g: &Graph,
    p: PotentialParams,
    forced: &[Vertex],
) -> Result<MinPotential, DensityError> {
    let forced = normalize_set(g, forced)?;
    let (value, witness) = min_closure_potential(g, p.a, p.b, &forced);
    Ok(MinPotential { value, witness })
}

/// Is there a nonempty `A` with `‖A‖/|A| > num/den`? Returns such a set.
fn denser_than(g: &Graph, num: i64, den: i64) -> Option<Vec<Vertex>> {
    // max over A of den·‖A‖ − num·|A| is positive exactly when some set beats num/den
    let (value, set) = min_closure_potential(g, num, den, &[]);
    (value < 0).then_some(set)
}

/// All densities `e/q` a vertex set can have, sorted and deduplicated.
fn candidate_densities(n: usize, m: usize) -> Vec<(i64, i64)> {
    let mut cands: Vec<(i64, i64)> = Vec::new();
    for q in 1..=n {
        let max_e = m.min(q * (q - 1) / 2);
        for e in 0..=max_e {
            cands.push((e as i64, q as i64));
        }
    }
    cands.sort_by(|&(p1, q1), &(p2, q2)| (p1 as i128 * q2 as i128).cmp(&(p2 as i128 * q1 as i128)));
    cands.dedup_by(|&mut (p1, q1), &mut (p2, q2)| {
        p1 as i128 * q2 as i128 == p2 as i128 * q1 as i128
    });
    cands
}

/// Exact maximum-density subgraph via binary search over candidate
/// densities with a max-flow feasibility test.
///
/// The witness is the inclusion-minimal optimal set of the last feasible
/// cut; its density equals the returned density exactly.
pub fn max_density_subgraph(g: &Graph) -> Result<DensityResult, DensityError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(DensityError::EmptyGraph);
    }
    if g.edge_count() == 0 {
        return Ok(DensityResult::new(ratio::int(0), vec![0]));
    }
    let cands = candidate_densities(n, g.edge_count());
    // invariant: density > cands[lo], density <= cands[hi]
    let (mut lo, mut hi) = (0usize, cands.len() - 1);
    let mut witness =
        denser_than(g, cands[0].0, cands[0].1).expect("a graph with an edge has positive density");
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        match denser_than(g, cands[mid].0, cands[mid].1) {
            Some(set) => {
                lo = mid;
                witness = set;
            }
            None => hi = mid,
        }
    }
    let inner = edges_within(g, &witness)?;
    let density = ratio::frac(inner as i64, witness.len() as i64);
    debug_assert_eq!(density, ratio::frac(cands[hi].0, cands[hi].1));
    Ok(DensityResult::new(density, witness))
}

/// Outcome of [`check_mad_bound`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MadBoundCertificate {
    pub params: PotentialParams,
    /// `mad(g) < 2a/b`, i.e. every nonempty set has potential at least 1.
    pub holds: bool,
    /// A set with `ρ(A) ≤ 0` when the bound fails.
    pub witness: Option<Vec<Vertex>>,
    #[serde(with = "ratio::serde_pq")]
    pub mad: Rational,
    /// Agreement of the exhaustive route, when the graph is small enough to run it.
    pub exhaustive_agrees: Option<bool>,
}

/// Decides `mad(g) < 2a/b` by the flow route and, for graphs with at most
/// [`CROSS_CHECK_CAP`] vertices, re-derives the answer by enumeration.
pub fn check_mad_bound(g: &Graph, p: PotentialParams) -> Result<MadBoundCertificate, DensityError> {
    let dens = max_density_subgraph(g)?;
    let holds = dens.density < p.density_bound();
    let witness = if holds {
        None
    } else {
        debug_assert!(potential(g, &dens.witness, p)? <= 0);
        Some(dens.witness.clone())
    };
    let exhaustive_agrees = if g.vertex_count() <= CROSS_CHECK_CAP {
        let min = min_potential_exhaustive(g, p)?;
        Some((min.value >= 1) == holds)
    } else {
        None
    };
    Ok(MadBoundCertificate {
        params: p,
        holds,
        witness,
        mad: dens.mad,
        exhaustive_agrees,
    })
}
