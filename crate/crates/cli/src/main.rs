use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use madsq_cli::sampler::{sample_sparse_graph, SamplerConfig};
use madsq_cli::verify::{verify_paper, ClaimStatus, VerifyConfig, CLAIM_IDS};
use madsq_core::coloring::{
    chromatic_number, greedy_dsatur, is_k_choosable_exhaustive, max_clique, Budget, SolveStatus,
};
use madsq_core::constructions::{build, CertificateJson, Family};
use madsq_core::density::{
    check_mad_bound, max_density_exhaustive, max_density_subgraph, DensityResult, PotentialParams,
};
use madsq_core::discharging::{audit, audit_unchecked, case_sweep, run_discharging, SweepConfig};
use madsq_core::error::SolveError;
use madsq_core::io::{read_graph, to_dimacs};
use madsq_core::ratio::to_pq;
use madsq_core::{square, Graph};
use serde_json::{json, Value};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "madsq",
    version,
    about = "Squares of sparse graphs: constructions, density, colouring and discharging"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Wall-clock limit for exact solvers.
    #[arg(long, global = true, value_name = "SECONDS")]
    timeout: Option<f64>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Output file. Graph-producing commands write DIMACS here.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Mad4,
    Tight,
    Mad2k,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Flow,
    Exhaustive,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the graph families and its certificate sidecar.
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Square of a graph.
    Square { file: PathBuf },
    /// Maximum average degree, optionally against a potential bound.
    Mad {
        file: PathBuf,
        /// Potential parameters `a,b`; the bound is `mad < 2a/b`.
        #[arg(long, value_parser = parse_params)]
        params: Option<PotentialParams>,
        #[arg(long, value_enum, default_value = "flow")]
        mode: Mode,
    },
    /// Chromatic number.
    Chi {
        file: PathBuf,
        #[arg(long)]
        square: bool,
        #[arg(long, conflicts_with = "heuristic")]
        exact: bool,
        #[arg(long)]
        heuristic: bool,
    },
    /// Maximum clique.
    Clique {
        file: PathBuf,
        #[arg(long)]
        square: bool,
    },
    /// Exhaustive k-choosability for tiny graphs.
    Choosable {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// One round of discharging; prints the charge ledger.
    Discharge {
        file: PathBuf,
        #[arg(long)]
        c: i64,
    },
    /// Explain every vertex that ends below target.
    Audit {
        file: PathBuf,
        #[arg(long)]
        c: i64,
        /// Skip the degree and density hypotheses.
        #[arg(long)]
        unchecked: bool,
    },
    /// Symbolic sweep of the per-degree charge cases.
    CaseSweep {
        #[arg(long, default_value_t = 2)]
        c_min: i64,
        #[arg(long, default_value_t = 10)]
        c_max: i64,
        #[arg(long, default_value_t = 0)]
        delta_extra: usize,
    },
    /// Random graph with positive potential everywhere and a degree floor.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_params, default_value = "7,4")]
        params: PotentialParams,
        #[arg(long)]
        delta_min: usize,
        /// Defaults to 20 attempts per vertex.
        #[arg(long)]
        max_attempts: Option<usize>,
    },
    /// Re-derive the desk-scale claims and report them.
    VerifyPaper {
        #[arg(long, conflicts_with = "claims")]
        all: bool,
        #[arg(long = "claim", value_name = "ID")]
        claims: Vec<String>,
    },
}

fn parse_params(s: &str) -> Result<PotentialParams, String> {
    let (a, b) = s.split_once(',').ok_or("expected a,b")?;
    let a = a.trim().parse().map_err(|_| format!("bad a in '{s}'"))?;
    let b = b.trim().parse().map_err(|_| format!("bad b in '{s}'"))?;
    PotentialParams::new(a, b).map_err(|e| e.to_string())
}

/// Result of a subcommand: what to print and the exit code.
struct Report {
    json: Value,
    text: String,
    code: u8,
    /// `--out` already received a graph.
    wrote_graph: bool,
}

impl Report {
    fn ok(json: Value, text: impl Into<String>) -> Self {
        Report {
            json,
            text: text.into(),
            code: 0,
            wrote_graph: false,
        }
    }

    fn with_code(json: Value, text: impl Into<String>, code: u8) -> Self {
        Report {
            code,
            ..Report::ok(json, text)
        }
    }

    fn graph_written(mut self, written: bool) -> Self {
        self.wrote_graph = written;
        self
    }
}

fn load(path: &Path) -> Result<Graph> {
    read_graph(path).with_context(|| format!("reading {}", path.display()))
}

fn maybe_square(g: Graph, sq: bool) -> Graph {
    if sq {
        square(&g)
    } else {
        g
    }
}

fn density_json(d: &DensityResult) -> Value {
    json!({"mad": to_pq(&d.mad), "density": to_pq(&d.density), "witness": d.witness})
}

fn write_graph_output(out: Option<&Path>, g: &Graph) -> Result<Option<String>> {
    match out {
        Some(path) => {
            fs::write(path, to_dimacs(g)).with_context(|| format!("writing {}", path.display()))?;
            Ok(Some(path.display().to_string()))
        }
        None => Ok(None),
    }
}

fn run(cli: &Cli) -> Result<Report> {
    let timeout = cli.timeout.map(Duration::from_secs_f64);
    let budget = Budget::from_option(timeout);
    let out = cli.out.as_deref();
    Ok(match &cli.command {
        Command::Construct { family, n, c, k } => {
            let need = |v: Option<usize>, flag: &str| {
                v.with_context(|| format!("--{flag} is required for this family"))
            };
            let family = match family {
                FamilyArg::Mad4 => Family::Mad4 { n: need(*n, "n")? },
                FamilyArg::Tight => Family::Tight { c: need(*c, "c")? },
                FamilyArg::Mad2k => Family::Mad2k {
                    k: need(*k, "k")?,
                    n: need(*n, "n")?,
                },
            };
            let path = out.context("construct needs --out FILE")?;
            let cert = build(family)?;
            write_graph_output(Some(path), &cert.graph)?;
            let sidecar = PathBuf::from(format!("{}.cert.json", path.display()));
            let cj = CertificateJson::from(&cert);
            fs::write(&sidecar, serde_json::to_string_pretty(&cj)?)?;
            let text = format!(
                "{}: {} vertices, {} edges, max degree {}, claimed clique of size {}\nwrote {} and {}",
                family.name(),
                cert.graph.vertex_count(),
                cert.graph.edge_count(),
                cert.graph.max_degree(),
                cert.claimed_clique.len(),
                path.display(),
                sidecar.display()
            );
            Report::ok(serde_json::to_value(&cj)?, text).graph_written(true)
        }
        Command::Square { file } => {
            let sq = square(&load(file)?);
            let written = write_graph_output(out, &sq)?;
            let text = match &written {
                Some(p) => format!(
                    "square: {} vertices, {} edges, wrote {p}",
                    sq.vertex_count(),
                    sq.edge_count()
                ),
                None => to_dimacs(&sq),
            };
            let json =
                json!({"vertices": sq.vertex_count(), "edges": sq.edges().collect::<Vec<_>>()});
            Report::ok(json, text).graph_written(written.is_some())
        }
        Command::Mad { file, params, mode } => {
            let g = load(file)?;
            let flow = (*mode != Mode::Exhaustive)
                .then(|| max_density_subgraph(&g))
                .transpose()?;
            let exh = (*mode != Mode::Flow)
                .then(|| max_density_exhaustive(&g))
                .transpose()?;
            if let (Some(f), Some(e)) = (&flow, &exh) {
                if f.density != e.density {
                    bail!(
                        "flow and exhaustive densities disagree: {} vs {}",
                        to_pq(&f.density),
                        to_pq(&e.density)
                    );
                }
            }
            let d = flow
                .as_ref()
                .or(exh.as_ref())
                .expect("at least one route ran");
            let mut json = density_json(d);
            let mut text = format!(
                "mad = {} (density {}), witness {:?}",
                to_pq(&d.mad),
                to_pq(&d.density),
                d.witness
            );
            let mut code = 0;
            if let Some(p) = params {
                let holds = d.density < p.density_bound();
                json["bound_holds"] = json!(holds);
                json["bound"] = json!(to_pq(&p.mad_bound()));
                if !holds {
                    json["bound_witness"] = json!(check_mad_bound(&g, *p)?.witness);
                    code = EXIT_FAIL;
                }
                text += &format!("\nmad < {}: {holds}", to_pq(&p.mad_bound()));
            }
            Report::with_code(json, text, code)
        }
        Command::Chi {
            file,
            square: sq,
            exact: _,
            heuristic,
        } => {
            let g = maybe_square(load(file)?, *sq);
            if *heuristic {
                let c = greedy_dsatur(&g);
                let json =
                    json!({"chi": c.colors_used(), "witness": c.assignment, "status": "bound"});
                Report::ok(json, format!("chi <= {} (DSATUR)", c.colors_used()))
            } else {
                match chromatic_number(&g, None, budget) {
                    Ok(r) => {
                        let text = format!(
                            "chi = {} ({:?}, clique bound {})",
                            r.chi, r.status, r.clique_lower_bound
                        );
                        Report::ok(serde_json::to_value(&r)?, text)
                    }
                    Err(SolveError::Timeout) => {
                        let c = greedy_dsatur(&g);
                        Report::with_code(
                            json!({"chi": c.colors_used(), "witness": c.assignment, "status": "timeout"}),
                            format!("timeout; chi <= {} (DSATUR)", c.colors_used()),
                            EXIT_TIMEOUT,
                        )
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
        Command::Clique { file, square: sq } => {
            let g = maybe_square(load(file)?, *sq);
            match max_clique(&g, budget) {
                Ok(c) => Report::ok(
                    json!({"omega": c.len(), "witness": c, "status": SolveStatus::Exact}),
                    format!("omega = {}, clique {:?}", c.len(), c),
                ),
                Err(SolveError::Timeout) => Report::with_code(
                    json!({"omega": null, "witness": null, "status": "timeout"}),
                    "timeout",
                    EXIT_TIMEOUT,
                ),
                Err(e) => return Err(e.into()),
            }
        }
        Command::Choosable { file, k } => {
            let g = load(file)?;
            match is_k_choosable_exhaustive(&g, *k, budget) {
                Ok(r) => {
                    let text = format!("{k}-choosable: {}", r.choosable);
                    Report::ok(serde_json::to_value(&r)?, text)
                }
                Err(SolveError::Timeout) => Report::with_code(
                    json!({"k": k, "choosable": null, "status": "timeout"}),
                    "timeout",
                    EXIT_TIMEOUT,
                ),
                Err(e) => return Err(e.into()),
            }
        }
        Command::Discharge { file, c } => {
            let g = load(file)?;
            let l = run_discharging(&g, *c)?;
            let text = format!(
                "{} transfers; total charge {} -> {}; consistent: {}",
                l.transfers.len(),
                to_pq(&l.total_initial()),
                to_pq(&l.total_final()),
                l.is_consistent()
            );
            Report::ok(serde_json::to_value(&l)?, text)
        }
        Command::Audit { file, c, unchecked } => {
            let g = load(file)?;
            let report = if *unchecked {
                audit_unchecked(&g, *c)?.0
            } else {
                audit(&g, *c)?
            };
            let text = format!(
                "{} deficient, {} unexplained (threshold {}, delta {})",
                report.deficient.len(),
                report.unexplained.len(),
                to_pq(&report.threshold),
                report.delta
            );
            let code = if report.is_complete() { 0 } else { EXIT_FAIL };
            Report::with_code(serde_json::to_value(&report)?, text, code)
        }
        Command::CaseSweep {
            c_min,
            c_max,
            delta_extra,
        } => {
            let report = case_sweep(SweepConfig {
                c_min: *c_min,
                c_max: *c_max,
                delta_extra: *delta_extra,
            })?;
            let mut text = String::new();
            for r in &report.runs {
                let min = r
                    .cases
                    .iter()
                    .map(|s| &s.min_charge)
                    .min()
                    .expect("cases are nonempty");
                text += &format!(
                    "c = {:>2}  delta = {:>3}  profiles = {:>9}  min d* = {:>7}  target = {}  violations = {}\n",
                    r.c,
                    r.delta,
                    r.enumerated,
                    to_pq(min),
                    to_pq(&r.threshold),
                    r.violations()
                );
            }
            text += &format!(
                "total violations {}, uncovered {}",
                report.total_violations, report.total_uncovered
            );
            let code = if report.total_violations == 0 && report.total_uncovered == 0 {
                0
            } else {
                EXIT_FAIL
            };
            Report::with_code(serde_json::to_value(&report)?, text, code)
        }
        Command::Sample {
            n,
            params,
            delta_min,
            max_attempts,
        } => {
            let mut cfg = SamplerConfig::new(*n, *params, *delta_min, cli.seed);
            if let Some(m) = max_attempts {
                cfg.max_attempts = *m;
            }
            let g = sample_sparse_graph(&cfg)?;
            let written = write_graph_output(out, &g)?;
            let text = match &written {
                Some(p) => format!(
                    "{} vertices, {} edges, max degree {}, wrote {p}",
                    g.vertex_count(),
                    g.edge_count(),
                    g.max_degree()
                ),
                None => to_dimacs(&g),
            };
            Report::ok(madsq_core::io::to_json(&g), text).graph_written(written.is_some())
        }
        Command::VerifyPaper { all, claims } => {
            let scope: Vec<&str> = if *all {
                CLAIM_IDS.to_vec()
            } else {
                claims.iter().map(String::as_str).collect()
            };
            let cfg = VerifyConfig {
                seed: cli.seed,
                timeout,
            };
            let report = verify_paper(&scope, &cfg)?;
            let text = report
                .claims
                .iter()
                .map(|c| {
                    let s = match c.status {
                        ClaimStatus::Pass => "PASS",
                        ClaimStatus::Fail => "FAIL",
                        ClaimStatus::Timeout => "TIMEOUT",
                    };
                    format!("{s:<7} {:<24} {:>8} ms", c.claim_id, c.runtime_ms)
                })
                .collect::<Vec<_>>()
                .join("\n");
            Report::with_code(serde_json::to_value(&report)?, text, report.exit_code())
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&r.json).expect("values serialize")
            } else {
                r.text
            };
            match cli.out.as_deref() {
                Some(path) if !r.wrote_graph => {
                    if let Err(e) = fs::write(path, body + "\n") {
                        eprintln!("error: writing {}: {e}", path.display());
                        return ExitCode::from(EXIT_USAGE);
                    }
                }
                _ => println!("{body}"),
            }
            ExitCode::from(r.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = match e.downcast_ref::<SolveError>() {
                Some(SolveError::Timeout) => EXIT_TIMEOUT,
                _ => EXIT_USAGE,
            };
            ExitCode::from(code)
        }
    }
}
