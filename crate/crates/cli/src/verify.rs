//! Reproduces every desk-scale claim about the graph families, the density
//! bounds and the discharging argument, and collects the outcomes in one
//! report.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use madsq_core::coloring::{
    chromatic_number, greedy_dsatur, is_clique_in_square, is_k_choosable_exhaustive, max_clique,
    Budget, SolveStatus,
};
use madsq_core::constructions::{
    build_counterexample_mad2k, build_counterexample_mad4, build_tight_mad4_minus, latin_square,
    Mad2kLayout,
};
use madsq_core::density::{
    check_mad_bound, max_density_exhaustive, max_density_subgraph, min_potential_exhaustive,
    PotentialParams,
};
use madsq_core::discharging::{
    audit, case_sweep, lemma34_surgery, run_discharging, CaseId, SweepConfig,
};
use madsq_core::error::{ConstructionError, DensityError, DischargeError, GraphError, SolveError};
use madsq_core::ratio::{frac, to_pq};
use madsq_core::{square, Graph, GraphBuilder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::sampler::{sample_sparse_graph, SampleError, SamplerConfig};

/// Every claim, in report order.
pub const CLAIM_IDS: [&str; 13] = [
    "mad4-counts",
    "mad4-family",
    "mad4-clique",
    "tight-family",
    "mad2k-family",
    "clique-2k",
    "density-oracle",
    "discharge-conservation",
    "case-sweep",
    "audit-completeness",
    "square-coloring",
    "lemma34-surgery",
    "choosability",
];

/// Graphs drawn for the audit and square-colouring claims.
pub const BOUND_SAMPLES: usize = 100;
pub const SURGERY_SAMPLES: usize = 50;
pub const ORACLE_SAMPLES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Timeout,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub params: Value,
    pub expected: Value,
    pub computed: Value,
    pub status: ClaimStatus,
    pub runtime_ms: u64,
    /// What went wrong, present exactly when the status is not `pass`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub seed: u64,
    pub claims: Vec<ClaimResult>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.status == ClaimStatus::Pass)
    }

    /// 0 when everything passes, 1 on any failure, otherwise 3 for timeouts.
    pub fn exit_code(&self) -> u8 {
        if self.claims.iter().any(|c| c.status == ClaimStatus::Fail) {
            1
        } else if self.claims.iter().any(|c| c.status == ClaimStatus::Timeout) {
            3
        } else {
            0
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Per-solver wall-clock limit for the exact searches.
    pub timeout: Option<Duration>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 1,
            timeout: None,
        }
    }
}

impl VerifyConfig {
    fn budget(&self) -> Budget {
        Budget::from_option(self.timeout)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown claim id '{0}'")]
    UnknownClaim(String),
}

/// Why a claim stopped early.
#[derive(Debug)]
enum Abort {
    Timeout,
    Error(String),
}

macro_rules! abort_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Abort {
            fn from(e: $t) -> Self {
                Abort::Error(e.to_string())
            }
        }
    )*};
}
abort_from!(
    ConstructionError,
    DensityError,
    DischargeError,
    GraphError,
    SampleError
);

impl From<SolveError> for Abort {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Timeout => Abort::Timeout,
            other => Abort::Error(other.to_string()),
        }
    }
}

/// A claim's data; it passes when `failures` is empty.
struct Outcome {
    params: Value,
    expected: Value,
    computed: Value,
    failures: Vec<Value>,
}

impl Outcome {
    fn new(params: Value) -> Self {
        Outcome {
            params,
            expected: json!({}),
            computed: json!({}),
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> Value) {
        if !ok {
            self.failures.push(what());
        }
    }
}

type ClaimFn = fn(&VerifyConfig) -> Result<Outcome, Abort>;

fn claim_fn(id: &str) -> Option<ClaimFn> {
    Some(match id {
        "mad4-counts" => mad4_counts,
        "mad4-family" => mad4_family,
        "mad4-clique" => mad4_clique,
        "tight-family" => tight_family,
        "mad2k-family" => mad2k_family,
        "clique-2k" => clique_2k,
        "density-oracle" => density_oracle,
        "discharge-conservation" => discharge_conservation,
        "case-sweep" => case_sweep_claim,
        "audit-completeness" => audit_completeness,
        "square-coloring" => square_coloring,
        "lemma34-surgery" => lemma34_surgery_claim,
        "choosability" => choosability,
        _ => return None,
    })
}

pub fn run_claim(id: &str, cfg: &VerifyConfig) -> Result<ClaimResult, VerifyError> {
    let f = claim_fn(id).ok_or_else(|| VerifyError::UnknownClaim(id.to_string()))?;
    let start = Instant::now();
    let outcome = f(cfg);
    let runtime_ms = start.elapsed().as_millis() as u64;
    let result = match outcome {
        Ok(o) => {
            let pass = o.failures.is_empty();
            ClaimResult {
                claim_id: id.to_string(),
                params: o.params,
                expected: o.expected,
                computed: o.computed,
                status: if pass {
                    ClaimStatus::Pass
                } else {
                    ClaimStatus::Fail
                },
                runtime_ms,
                witness: (!pass).then_some(Value::Array(o.failures)),
            }
        }
        Err(abort) => {
            let (status, witness) = match abort {
                Abort::Timeout => (
                    ClaimStatus::Timeout,
                    json!({"timeout_s": cfg.timeout.map(|t| t.as_secs_f64())}),
                ),
                Abort::Error(msg) => (ClaimStatus::Fail, json!({ "error": msg })),
            };
            ClaimResult {
                claim_id: id.to_string(),
                params: Value::Null,
                expected: Value::Null,
                computed: Value::Null,
                status,
                runtime_ms,
                witness: Some(witness),
            }
        }
    };
    Ok(result)
}

/// Runs the selected claims once each, in [`CLAIM_IDS`] order.
pub fn verify_paper<S: AsRef<str>>(
    scope: &[S],
    cfg: &VerifyConfig,
) -> Result<VerificationReport, VerifyError> {
    let wanted: BTreeSet<&str> = scope.iter().map(AsRef::as_ref).collect();
    if let Some(bad) = wanted.iter().find(|id| !CLAIM_IDS.contains(id)) {
        return Err(VerifyError::UnknownClaim(bad.to_string()));
    }
    let claims = CLAIM_IDS
        .iter()
        .filter(|id| wanted.contains(*id))
        .map(|id| run_claim(id, cfg))
        .collect::<Result<_, _>>()?;
    Ok(VerificationReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed: cfg.seed,
        claims,
    })
}

fn x_name(i: usize, j: usize) -> String {
    format!("x_{{{i},{j}}}")
}

fn vertex(g: &Graph, label: &str) -> Result<usize, Abort> {
    g.find_label(label)
        .ok_or_else(|| Abort::Error(format!("missing vertex {label}")))
}

/// Tabulated degree of `x_{i,j}` in `G_n`.
fn mad4_table_degree(n: usize, i: usize, j: usize) -> usize {
    let wrap = |j: usize| (j - 1) % n + 1;
    if i == 1 && (j == 1 || j == 2) {
        n + 1
    } else if i >= 2 && (0..2).any(|r| wrap(i + r) == j) {
        3
    } else {
        2
    }
}

fn mad4_counts(_: &VerifyConfig) -> Result<Outcome, Abort> {
    let ns: Vec<usize> = (2..=8).collect();
    let mut o = Outcome::new(json!({ "n": ns }));
    let mut expected = Vec::new();
    let mut computed = Vec::new();
    for &n in &ns {
        let g = build_counterexample_mad4(n)?.graph;
        let want = json!({"n": n, "vertices": n * n + 2 * n + 2, "edges": 2 * n * n + 4 * n - 1, "max_degree": n + 1});
        let got = json!({"n": n, "vertices": g.vertex_count(), "edges": g.edge_count(), "max_degree": g.max_degree()});
        o.check(want == got, || json!({"n": n, "counts": got.clone()}));
        expected.push(want);
        computed.push(got);

        let mut rows = vec![("u".to_string(), n + 1), ("v".to_string(), n + 1)];
        for i in 1..=n {
            rows.push((format!("u_{i}"), n + 1));
            rows.push((format!("v_{i}"), n + 1));
            for j in 1..=n {
                rows.push((x_name(i, j), mad4_table_degree(n, i, j)));
            }
        }
        for (label, want) in rows {
            let got = g.degree(vertex(&g, &label)?);
            o.check(
                got == want,
                || json!({"n": n, "vertex": label, "table": want, "degree": got}),
            );
        }
    }
    o.expected = Value::Array(expected);
    o.computed = Value::Array(computed);
    Ok(o)
}

fn mad4_family(_: &VerifyConfig) -> Result<Outcome, Abort> {
    let ns: Vec<usize> = (2..=6).collect();
    let mut o = Outcome::new(json!({ "n": ns, "params": [2, 1] }));
    let mut expected = Vec::new();
    let mut computed = Vec::new();
    for &n in &ns {
        let g = build_counterexample_mad4(n)?.graph;
        let v = (n * n + 2 * n + 2) as i64;
        let want = frac(4 * v - 10, v);
        let dens = max_density_subgraph(&g)?;
        let cert = check_mad_bound(&g, PotentialParams::MAD4)?;
        o.check(
            dens.mad == want,
            || json!({"n": n, "mad": to_pq(&dens.mad), "witness": dens.witness}),
        );
        o.check(
            cert.holds,
            || json!({"n": n, "bound_witness": cert.witness}),
        );
        let mut got = json!({"n": n, "mad": to_pq(&dens.mad), "bound_holds": cert.holds});
        if n == 2 {
            let exh = max_density_exhaustive(&g)?;
            let minp = min_potential_exhaustive(&g, PotentialParams::MAD4)?;
            o.check(
                exh.mad == want,
                || json!({"n": n, "exhaustive_mad": to_pq(&exh.mad)}),
            );
            o.check(
                minp.value >= 1,
                || json!({"n": n, "min_potential": minp.value, "set": minp.witness}),
            );
            got["exhaustive_mad"] = json!(to_pq(&exh.mad));
            got["min_potential"] = json!(minp.value);
        }
        expected.push(json!({"n": n, "mad": to_pq(&want), "bound_holds": true}));
        computed.push(got);
    }
    o.expected = Value::Array(expected);
    o.computed = Value::Array(computed);
    Ok(o)
}

fn mad4_clique(cfg: &VerifyConfig) -> Result<Outcome, Abort> {
    let mut o = Outcome::new(json!({"clique_n": [2, 3, 4, 5, 6], "exact_n": [2, 3]}));
    let mut expected = Vec::new();
    let mut computed = Vec::new();
    for n in 2..=6 {
        let cert = build_counterexample_mad4(n)?;
        let g = &cert.graph;
        let target = 2 * g.max_degree() + 2;
        let check = is_clique_in_square(g, &cert.claimed_clique)?;
        o.check(check.is_clique && cert.claimed_clique.len() == target, || {
            json!({"n": n, "size": cert.claimed_clique.len(), "failing_pair": check.failing_pair})
        });
        let mut got = json!({"n": n, "claimed_size": cert.claimed_clique.len(), "is_clique": check.is_clique});
        if n <= 3 {
            let sq = square(g);
            let omega = max_clique(&sq, cfg.budget())?.len();
            let chi = chromatic_number(&sq, None, cfg.budget())?;
            o.check(omega == target, || json!({"n": n, "omega": omega}));
            o.check(
                chi.chi >= target && chi.status == SolveStatus::Exact,
                || json!({"n": n, "chi": chi.chi, "status": chi.status}),
            );
            got["omega"] = json!(omega);
            got["chi"] = json!(chi.chi);
        }
        expected.push(json!({"n": n, "clique_size": target}));
        computed.push(got);
    }
    o.expected = Value::Array(expected);
    o.computed = Value::Array(computed);
    Ok(o)
}

fn tight_family(_: &VerifyConfig) -> Result<Outcome, Abort> {
    let mut o = Outcome::new(json!({"c": [2, 3]}));
    let mut expected = Vec::new();
    let mut computed = Vec::new();
    for c in 2..=3usize {
        let cert = build_tight_mad4_minus(c)?;
        let g = &cert.graph;
        let params = PotentialParams::mad4_minus(c as i64);
        let bound = check_mad_bound(g, params)?;
        let clique = is_clique_in_square(g, &cert.claimed_clique)?;
        let want = json!({"c": c, "vertices": 4 * c * c + 4 * c + 2, "edges": 8 * c * c + 6 * c,
                          "bound_holds": true, "clique_size": 2 * (2 * c + 1) + 1, "is_clique": true});
        let got = json!({"c": c, "vertices": g.vertex_count(), "edges": g.edge_count(),
                         "bound_holds": bound.holds, "clique_size": cert.claimed_clique.len(),
                         "is_clique": clique.is_clique, "mad": to_pq(&bound.mad)});
        let mut cmp = got.clone();
        cmp.as_object_mut().unwrap().remove("mad");
        o.check(cmp == want && g.max_degree() == 2 * c + 1, || {
            json!({"c": c, "computed": got.clone(), "max_degree": g.max_degree(),
                   "bound_witness": bound.witness, "failing_pair": clique.failing_pair})
        });
        expected.push(want);
        computed.push(got);
    }
    o.expected = Value::Array(expected);
    o.computed = Value::Array(computed);
    Ok(o)
}

/// Tabulated degree of `x_{i,j}` in `G_{k,n}`.
fn mad2k_table_degree(k: usize, n: usize, i: usize, j: usize) -> usize {
    let offset = (j + n - i) % n;
    if i == 1 {
        2 * k - 1
    } else if offset < k * k - k {
        k + 1
    } else {
        k
    }
}

fn mad2k_family(_: &VerifyConfig) -> Result<Outcome, Abort> {
    let cases = [(3usize, 7usize), (3, 11)];
    let mut o = Outcome::new(json!({"k_n": cases}));
    let mut expected = Vec::new();
    let mut computed = Vec::new();
    for (k, n) in cases {
        let cert = build_counterexample_mad2k(k, n)?;
        let g = &cert.graph;
        let layout = Mad2kLayout { k, n };
        let delta = n + k - 1;
        o.check(
            g.max_degree() == delta,
            || json!({"k": k, "n": n, "max_degree": g.max_degree()}),
        );

        let mut table_misses = Vec::new();
        for i in 1..=k {
            let got = g.degree(layout.hub(i));
            if got != n + k - 1 {
                table_misses
                    .push(json!({"vertex": format!("u_{i}"), "table": n + k - 1, "degree": got}));
            }
            for j in 1..=n {
                let got = g.degree(layout.leaf(i, j));
                if got != n + 1 {
                    table_misses.push(
                        json!({"vertex": format!("u_{{{i},{j}}}"), "table": n + 1, "degree": got}),
                    );
                }
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                let (want, got) = (mad2k_table_degree(k, n, i, j), g.degree(layout.x(i, j)));
                if want != got {
                    table_misses
                        .push(json!({"vertex": x_name(i, j), "table": want, "degree": got}));
                }
            }
        }
        let misses = table_misses.len();
        o.check(
            misses == 0,
            || json!({"k": k, "n": n, "degree_table_mismatches": table_misses}),
        );

        let clique = is_clique_in_square(g, &cert.claimed_clique)?;
        o.check(clique.is_clique && cert.claimed_clique.len() == k * delta + k, || {
            json!({"k": k, "n": n, "clique_size": cert.claimed_clique.len(), "failing_pair": clique.failing_pair})
        });

        let squares = (1..=k - 2)
            .map(|ell| latin_square(n, ell))
            .collect::<Result<Vec<_>, _>>()?;
        let latin = squares.iter().all(|l| l.is_latin());
        let orthogonal = squares
            .iter()
            .enumerate()
            .all(|(a, la)| squares[a + 1..].iter().all(|lb| la.is_orthogonal_to(lb)));
        o.check(
            latin && orthogonal,
            || json!({"k": k, "n": n, "latin": latin, "orthogonal": orthogonal}),
        );

        let bound = check_mad_bound(g, PotentialParams::mad2k(k as i64))?;
        o.check(
            bound.holds,
            || json!({"k": k, "n": n, "bound_witness": bound.witness}),
        );

        expected.push(json!({"k": k, "n": n, "max_degree": delta, "degree_table_mismatches": 0,
                             "clique_size": k * delta + k, "latin": true, "orthogonal": true, "bound_holds": true}));
        computed.push(json!({"k": k, "n": n, "max_degree": g.max_degree(), "degree_table_mismatches": misses,
                             "clique_size": cert.claimed_clique.len(), "is_clique": clique.is_clique,
                             "latin": latin, "orthogonal": orthogonal, "bound_holds": bound.holds,
                             "mad": to_pq(&bound.mad)}));
    }
    o.expected = Value::Array(expected);
    o.computed = Value::Array(computed);
    Ok(o)
}

fn clique_2k(_: &VerifyConfig) -> Result<Outcome, Abort> {
    let (k, n) = (3, 7);
    let cert = build_counterexample_mad2k(k, n)?;
    let check = is_clique_in_square(&cert.graph, &cert.claimed_clique)?;
    let size = cert.claimed_clique.len();
    let target = k * cert.graph.max_degree() + k;
    let mut o = Outcome::new(json!({"k": k, "n": n}));
    o.expected = json!({"clique_size": 30, "is_clique": true});
    o.computed =
        json!({"clique_size": size, "is_clique": check.is_clique, "k_delta_plus_k": target});
    o.check(
        check.is_clique && size == 30 && target == 30,
        || json!({"failing_pair": check.failing_pair, "size": size}),
    );
    Ok(o)
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p: f64 = rng.gen_range(0.1..0.6);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    b.build()
}

fn density_oracle(cfg: &VerifyConfig) -> Result<Outcome, Abort> {
    let params = [(2, 1), (7, 4), (3, 1)];
    let mut o =
        Outcome::new(json!({"graphs": ORACLE_SAMPLES, "max_vertices": 16, "params": params}));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut agreements = 0;
    let mut equivalences = 0;
    for idx in 0..ORACLE_SAMPLES {
        let g = random_graph(&mut rng, 16);
        let flow = max_density_subgraph(&g)?;
        let exh = max_density_exhaustive(&g)?;
        if flow.density == exh.density {
            agreements += 1;
        } else {
            o.failures.push(json!({"graph": idx, "edges": g.edges().collect::<Vec<_>>(),
                                   "flow": to_pq(&flow.density), "exhaustive": to_pq(&exh.density)}));
        }
        for (a, b) in params {
            let p = PotentialParams::new(a, b)?;
            let minp = min_potential_exhaustive(&g, p)?;
            let below = flow.mad < p.mad_bound();
            if (minp.value >= 1) == below {
                equivalences += 1;
            } else {
                o.failures.push(
                    json!({"graph": idx, "params": [a, b], "min_potential": minp.value,
                                       "mad": to_pq(&flow.mad)}),
                );
            }
        }
    }
    o.expected = json!({"density_agreements": ORACLE_SAMPLES, "equivalences": ORACLE_SAMPLES * params.len()});
    o.computed = json!({"density_agreements": agreements, "equivalences": equivalences});
    Ok(o)
}

/// `n` vertices on a cycle, each joined to the `half` nearest on either side.
fn circulant(n: usize, half: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for v in 0..n {
        for s in 1..=half {
            b.add_edge(v, (v + s) % n).expect("distinct offsets");
        }
    }
    b.build()
}

fn bound_sample(cfg: &VerifyConfig, idx: usize) -> Result<Graph, Abort> {
    let sc = SamplerConfig::new(
        40,
        PotentialParams::mad4_minus(2),
        21,
        cfg.seed.wrapping_add(idx as u64),
    );
    Ok(sample_sparse_graph(&sc)?)
}

fn discharge_conservation(cfg: &VerifyConfig) -> Result<Outcome, Abort> {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for n in 2..=6 {
        graphs.push((format!("mad4 n={n}"), build_counterexample_mad4(n)?.graph));
    }
    for c in 2..=3 {
        graphs.push((format!("tight c={c}"), build_tight_mad4_minus(c)?.graph));
    }
    graphs.push((
        "mad2k k=3 n=7".into(),
        build_counterexample_mad2k(3, 7)?.graph,
    ));
    for idx in 0..10 {
        graphs.push((format!("sample {idx}"), bound_sample(cfg, idx)?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for idx in 0..20 {
        graphs.push((format!("random {idx}"), random_graph(&mut rng, 30)));
    }
    let regular = [
        ("K15", Graph::complete(15), 2),
        ("K23", Graph::complete(23), 3),
        ("circulant 40/7", circulant(40, 7), 2),
        ("circulant 60/11", circulant(60, 11), 3),
    ];

    let mut o = Outcome::new(
        json!({"graphs": graphs.len(), "regular": regular.iter().map(|r| r.0).collect::<Vec<_>>(), "c": [2, 3, 4]}),
    );
    let mut runs = 0;
    for (name, g) in &graphs {
        for c in 2..=4 {
            let ledger = run_discharging(g, c)?;
            runs += 1;
            let total = ledger.total_final();
            let want = frac(2 * g.edge_count() as i64, 1);
            o.check(total == want && ledger.is_consistent(), || {
                json!({"graph": name, "c": c, "total_final": to_pq(&total), "two_m": to_pq(&want)})
            });
        }
    }
    for (name, g, c) in &regular {
        let ledger = run_discharging(g, *c)?;
        let unchanged = ledger.final_charge == ledger.initial;
        o.check(unchanged, || json!({"graph": name, "c": c, "final": ledger.final_charge.iter().map(to_pq).collect::<Vec<_>>()}));
    }
    o.expected = json!({"conserving_runs": runs, "regular_unchanged": regular.len()});
    o.computed = json!({"conserving_runs": runs - o.failures.len().min(runs), "regular_checked": regular.len()});
    Ok(o)
}

fn case_sweep_claim(_: &VerifyConfig) -> Result<Outcome, Abort> {
    let report = case_sweep(SweepConfig::new(2, 10))?;
    let mut o = Outcome::new(json!({"c_min": 2, "c_max": 10, "delta": "14c-7"}));
    o.check(report.total_violations == 0, || {
        let first: Vec<Value> = report
            .runs
            .iter()
            .flat_map(|r| {
                r.cases.iter().filter_map(move |s| {
                    s.first_violation
                        .map(|p| json!({"c": r.c, "case": s.case, "profile": p}))
                })
            })
            .take(10)
            .collect();
        json!({"violations": report.total_violations, "first": first})
    });
    o.check(report.total_uncovered == 0, || {
        json!({"uncovered": report.total_uncovered,
               "first": report.runs.iter().filter_map(|r| r.first_uncovered).take(10).collect::<Vec<_>>()})
    });
    let c2 = report
        .runs
        .iter()
        .find(|r| r.c == 2)
        .expect("c = 2 is swept");
    let case7 = c2.case(CaseId::C7).map(|s| s.min_charge.clone());
    o.check(
        case7 == Some(frac(7, 2)),
        || json!({"case7_c2": case7.as_ref().map(to_pq)}),
    );
    let mut case1_mismatches = Vec::new();
    for r in &report.runs {
        if let Some(s) = r.case(CaseId::C1) {
            for dm in &s.min_by_degree {
                if dm.min_charge != frac(dm.degree as i64, 2 * r.c) {
                    case1_mismatches
                        .push(json!({"c": r.c, "degree": dm.degree, "min": to_pq(&dm.min_charge)}));
                }
            }
        } else {
            case1_mismatches.push(json!({"c": r.c, "missing": "case 1"}));
        }
    }
    let case1_ok = case1_mismatches.is_empty();
    o.check(case1_ok, || json!({"case1": case1_mismatches}));

    let minima: Vec<Value> = report
        .runs
        .iter()
        .map(|r| {
            let min = r.cases.iter().map(|s| &s.min_charge).min().expect("cases are nonempty");
            json!({"c": r.c, "delta": r.delta, "threshold": to_pq(&r.threshold), "min_charge": to_pq(min),
                   "cases": r.cases.len(), "profiles": r.enumerated, "excluded": r.excluded})
        })
        .collect();
    o.expected = json!({"violations": 0, "uncovered": 0, "case7_c2": "7/2", "case1": "d/(2c)"});
    o.computed = json!({"violations": report.total_violations, "uncovered": report.total_uncovered,
                        "case7_c2": case7.as_ref().map(to_pq), "case1_matches": case1_ok, "runs": minima});
    Ok(o)
}

fn audit_completeness(cfg: &VerifyConfig) -> Result<Outcome, Abort> {
    let mut o =
        Outcome::new(json!({"samples": BOUND_SAMPLES, "vertices": 40, "c": 2, "delta_min": 21}));
    let mut complete = 0;
    let mut deficient = 0;
    for idx in 0..BOUND_SAMPLES {
        let g = bound_sample(cfg, idx)?;
        let report = audit(&g, 2)?;
        deficient += report.deficient.len();
        if report.is_complete() {
            complete += 1;
        } else {
            o.failures.push(json!({"sample": idx, "edges": g.edges().collect::<Vec<_>>(), "unexplained": report.unexplained}));
        }
    }
    o.expected = json!({"complete": BOUND_SAMPLES});
    o.computed = json!({"complete": complete, "deficient_vertices": deficient});
    Ok(o)
}

fn square_coloring(cfg: &VerifyConfig) -> Result<Outcome, Abort> {
    let mut o =
        Outcome::new(json!({"samples": BOUND_SAMPLES, "vertices": 40, "c": 2, "delta_min": 21}));
    let mut colored = 0;
    let mut escalated = 0;
    let mut max_used = 0;
    for idx in 0..BOUND_SAMPLES {
        let g = bound_sample(cfg, idx)?;
        let limit = 2 * g.max_degree();
        let sq = square(&g);
        let mut coloring = greedy_dsatur(&sq);
        if coloring.colors_used() > limit {
            escalated += 1;
            coloring = chromatic_number(&sq, Some(limit), cfg.budget())?.witness;
        }
        let used = coloring.colors_used();
        max_used = max_used.max(used);
        if used <= limit && coloring.is_proper(&sq) {
            colored += 1;
        } else {
            o.failures
                .push(json!({"sample": idx, "colors": used, "limit": limit}));
        }
    }
    o.expected = json!({"colored": BOUND_SAMPLES});
    o.computed = json!({"colored": colored, "escalated": escalated, "max_colors_used": max_used});
    Ok(o)
}

fn lemma34_surgery_claim(cfg: &VerifyConfig) -> Result<Outcome, Abort> {
    let c = 2;
    let p = PotentialParams::mad4_minus(c);
    let mut o =
        Outcome::new(json!({"samples": SURGERY_SAMPLES, "max_vertices": 12, "params": [p.a, p.b]}));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut done = 0;
    let mut tried = 0;
    while done < SURGERY_SAMPLES && tried < 100 * SURGERY_SAMPLES {
        tried += 1;
        let n = rng.gen_range(6..=12);
        let sc = SamplerConfig {
            vertex_count: n,
            target_params: p,
            delta_min: 3,
            seed: rng.gen(),
            max_attempts: rng.gen_range(n..=4 * n),
        };
        let Ok(g) = sample_sparse_graph(&sc) else {
            continue;
        };
        if min_potential_exhaustive(&g, p)?.value < 1 {
            o.failures
                .push(json!({"sampler_violation": g.edges().collect::<Vec<_>>()}));
            continue;
        }
        let eligible = g.vertices().find(|&u| {
            g.degree(u) == 3 && g.neighbors(u).iter().all(|&x| g.degree(x) < 4 * c as usize)
        });
        let Some(u) = eligible else { continue };
        let s = lemma34_surgery(&g, u)?;
        let after = min_potential_exhaustive(&s.graph, p)?;
        done += 1;
        o.check(after.value >= 1, || {
            json!({"edges": g.edges().collect::<Vec<_>>(), "vertex": u, "min_potential": after.value, "set": after.witness})
        });
    }
    o.check(
        done == SURGERY_SAMPLES,
        || json!({"eligible_samples_found": done}),
    );
    o.expected = json!({"surgeries": SURGERY_SAMPLES, "failures": 0});
    o.computed = json!({"surgeries": done, "graphs_drawn": tried});
    Ok(o)
}

fn choosability(cfg: &VerifyConfig) -> Result<Outcome, Abort> {
    let cases = [
        ("C4", Graph::cycle(4), 2, true),
        ("K4", Graph::complete(4), 3, false),
        ("K3", Graph::complete(3), 3, true),
    ];
    let mut o = Outcome::new(json!(cases
        .iter()
        .map(|(name, _, k, _)| json!({"graph": name, "k": k}))
        .collect::<Vec<_>>()));
    let mut expected = Vec::new();
    let mut computed = Vec::new();
    for (name, g, k, want) in cases {
        let got = is_k_choosable_exhaustive(&g, k, cfg.budget())?;
        o.check(
            got.choosable == want,
            || json!({"graph": name, "k": k, "counterexample": got.counterexample}),
        );
        expected.push(json!({"graph": name, "k": k, "choosable": want}));
        computed.push(json!({"graph": name, "k": k, "choosable": got.choosable}));
    }
    o.expected = Value::Array(expected);
    o.computed = Value::Array(computed);
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_scope_is_an_empty_passing_report() {
        let r = verify_paper::<&str>(&[], &VerifyConfig::default()).unwrap();
        assert!(r.claims.is_empty());
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn unknown_claims_are_rejected() {
        let err = verify_paper(&["nope"], &VerifyConfig::default()).unwrap_err();
        assert_eq!(err, VerifyError::UnknownClaim("nope".into()));
    }

    #[test]
    fn claims_run_once_in_canonical_order() {
        let r = verify_paper(
            &["choosability", "clique-2k", "choosability"],
            &VerifyConfig::default(),
        )
        .unwrap();
        let ids: Vec<&str> = r.claims.iter().map(|c| c.claim_id.as_str()).collect();
        assert_eq!(ids, ["clique-2k", "choosability"]);
        assert!(r.all_pass());
    }

    #[test]
    fn failures_carry_a_witness() {
        let r = run_claim("mad2k-family", &VerifyConfig::default()).unwrap();
        assert_eq!(r.status, ClaimStatus::Fail);
        let text = r.witness.unwrap().to_string();
        assert!(text.contains("degree_table_mismatches"), "{text}");
    }

    #[test]
    fn tables_at_small_order() {
        assert_eq!(mad4_table_degree(2, 2, 1), 3);
        assert_eq!(mad4_table_degree(3, 3, 1), 3);
        assert_eq!(mad4_table_degree(3, 2, 1), 2);
        assert_eq!(mad2k_table_degree(3, 7, 1, 4), 5);
        assert_eq!(mad2k_table_degree(3, 7, 2, 1), 3);
        assert_eq!(mad2k_table_degree(3, 7, 2, 7), 4);
    }
}
