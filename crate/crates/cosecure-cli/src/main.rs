//! Command-line surface for the cosecure domination toolkit.
//!
//! Exit codes: 0 success, 2 parse/input error, 3 size guard exceeded,
//! 4 property failure (invalid set, non-chain input, equivalence violation,
//! failed class check).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use cosecure::chain;
use cosecure::classcheck;
use cosecure::domsets::certify_cosecure;
use cosecure::gadgets::{self, ReductionKind, XcheckInstances};
use cosecure::gen;
use cosecure::graph::{Graph, VertexSet};
use cosecure::oracle::{
    min_cosecure_with, min_dominating_with, OracleError, OracleOptions, SetCoverInstance,
};

#[derive(Parser)]
#[command(
    name = "cosecure",
    version,
    about = "Exact cosecure domination toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the domination and cosecure domination numbers of a graph.
    Solve {
        /// Edge-list file.
        input: PathBuf,
        /// Also print the optimal sets and the replacement map.
        #[arg(long)]
        witness: bool,
        /// Lift the oracle size guard (up to 63 vertices).
        #[arg(long)]
        force: bool,
        /// Report each connected component separately plus the totals.
        #[arg(long)]
        per_component: bool,
        #[arg(long)]
        json: bool,
    },
    /// Verify a vertex set: emit a cosecure certificate or a failure witness.
    Verify {
        input: PathBuf,
        /// Comma-separated vertex ids, e.g. `--set 1,2`.
        #[arg(long)]
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Chain-graph analysis: partition, value, witness and recursion trace.
    Chain {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build a reduction gadget and write `<out>.edges` + `<out>.meta.json`.
    Reduce {
        /// pendant-path | star-convex | comb-convex | set-cover | gy4
        kind: ReductionKind,
        /// Edge-list file (or set-cover file for kind `set-cover`).
        input: PathBuf,
        /// Output path prefix.
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Empirically validate a reduction's cardinality offset with the oracle.
    Xcheck {
        kind: ReductionKind,
        /// Exhaustive bound for pendant-path / gy4 (all connected bases).
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Trial count for the seeded kinds.
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        max_x: usize,
        #[arg(long, default_value_t = 3)]
        max_y: usize,
        #[arg(long, default_value_t = 4)]
        max_p: usize,
        #[arg(long, default_value_t = 4)]
        max_q: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Lift the oracle size guard.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
    },
    /// Generate an instance file.
    Gen(GenArgs),
    /// Structural class checks with JSON verdicts.
    CheckClass {
        /// chordal-bipartite | dpeo | tree-convex | star | comb
        check: String,
        /// Edge-list file (graph checks only).
        input: Option<PathBuf>,
        /// Vertex order for `dpeo`, e.g. `--order 0,1,2`.
        #[arg(long)]
        order: Option<String>,
        /// Tree edges, e.g. `--tree 0-1,0-2`.
        #[arg(long)]
        tree: Option<String>,
        /// Tree vertex set for `star` / `comb`.
        #[arg(long)]
        vertices: Option<String>,
        #[arg(long)]
        backbone: Option<String>,
        #[arg(long)]
        teeth: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct GenArgs {
    /// chain | complete-bipartite | random | set-cover
    family: String,
    /// X-side size for complete-bipartite.
    #[arg(long, default_value_t = 2)]
    p: usize,
    /// Y-side size for complete-bipartite.
    #[arg(long, default_value_t = 3)]
    q: usize,
    /// Explicit chain class sizes, e.g. `--classes 1,1/1,1`.
    #[arg(long)]
    classes: Option<String>,
    /// Vertex bound for random chain generation.
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    /// Vertex count for the random family.
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 0.35)]
    edge_prob: f64,
    /// Force connectivity for the random family.
    #[arg(long)]
    connected: bool,
    #[arg(long, default_value_t = 4)]
    max_p: usize,
    #[arg(long, default_value_t = 4)]
    max_q: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file (stdout when omitted).
    #[arg(short, long)]
    out: Option<PathBuf>,
}

enum CliError {
    Input(String),
    Guard(String),
    Property(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Property(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Guard(m) | CliError::Property(m) => m,
        }
    }
}

fn from_oracle(err: OracleError) -> CliError {
    match err {
        OracleError::GuardExceeded { .. } => CliError::Guard(err.to_string()),
        _ => CliError::Property(err.to_string()),
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Graph::parse_edge_list(&text).map_err(|e| CliError::Input(e.to_string()))
}

fn parse_ids(s: &str) -> Result<Vec<usize>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Input(format!("invalid vertex id {t:?}")))
        })
        .collect()
}

fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let mut it = tok.trim().split('-');
            let a = it.next().and_then(|t| t.parse::<usize>().ok());
            let b = it.next().and_then(|t| t.parse::<usize>().ok());
            match (a, b, it.next()) {
                (Some(a), Some(b), None) => Ok((a, b)),
                _ => Err(CliError::Input(format!("invalid edge token {tok:?}"))),
            }
        })
        .collect()
}

fn oracle_opts(force: bool) -> OracleOptions {
    if force {
        OracleOptions::with_max_n(cosecure::oracle::HARD_CAP)
    } else {
        OracleOptions::default()
    }
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_solve(
    input: PathBuf,
    witness: bool,
    force: bool,
    per_component: bool,
    json: bool,
) -> Result<(), CliError> {
    let g = read_graph(&input)?;
    let opts = oracle_opts(force);
    let dom = min_dominating_with(&g, &opts).map_err(from_oracle)?;
    let cos = min_cosecure_with(&g, &opts).map_err(from_oracle)?;

    let mut component_rows = Vec::new();
    if per_component {
        for (i, comp) in g.components().iter().enumerate() {
            let (sub, map) = g.induced(comp.as_slice());
            let d = min_dominating_with(&sub, &opts).map_err(from_oracle)?;
            let c = min_cosecure_with(&sub, &opts).map_err(from_oracle)?;
            let remap = |s: &VertexSet| -> VertexSet { s.iter().map(|v| map[v]).collect() };
            component_rows.push((i, remap(&d.witness), d.value, remap(&c.witness), c.value));
        }
    }

    if json {
        let mut obj = json!({
            "gamma": dom.value,
            "gamma_cs": cos.value,
        });
        if witness {
            obj["dominating_witness"] = serde_json::to_value(&dom.witness).unwrap();
            obj["certificate"] = serde_json::to_value(&cos.certificate).unwrap();
        }
        if per_component {
            obj["components"] = component_rows
                .iter()
                .map(|(i, dw, dv, cw, cv)| {
                    json!({"index": i, "gamma": dv, "gamma_cs": cv,
                           "dominating_witness": dw, "cosecure_witness": cw})
                })
                .collect();
        }
        println!("{}", serde_json::to_string_pretty(&obj).unwrap());
    } else {
        println!("gamma={} gamma_cs={}", dom.value, cos.value);
        if witness {
            println!("dominating={}", dom.witness);
            let cert = cos.certificate.as_ref().expect("cosecure result certified");
            println!("cosecure={}", cert.set);
            let pairs: Vec<String> = cert
                .replacement
                .iter()
                .map(|(v, u)| format!("{v}->{u}"))
                .collect();
            println!("replacement={}", pairs.join(" "));
        }
        for (i, dw, dv, cw, cv) in &component_rows {
            println!("component {i}: gamma={dv} gamma_cs={cv} dominating={dw} cosecure={cw}");
        }
    }
    Ok(())
}

fn cmd_verify(input: PathBuf, set: String, json: bool) -> Result<(), CliError> {
    let g = read_graph(&input)?;
    let ids = parse_ids(&set)?;
    if let Some(&v) = ids.iter().find(|&&v| v >= g.n()) {
        return Err(CliError::Input(format!(
            "vertex {v} out of range (n = {})",
            g.n()
        )));
    }
    let set = VertexSet::new(ids);
    match certify_cosecure(&g, &set) {
        Ok(cert) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&cert).unwrap());
            } else {
                let pairs: Vec<String> = cert
                    .replacement
                    .iter()
                    .map(|(v, u)| format!("{v}->{u}"))
                    .collect();
                println!("valid set={} replacement={}", cert.set, pairs.join(" "));
            }
            Ok(())
        }
        Err(fail) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&fail).unwrap());
            } else {
                println!("invalid: {fail:?}");
            }
            Err(CliError::Property("set is not cosecure dominating".into()))
        }
    }
}

fn chain_report_text(report: &chain::ChainReport, offset_note: &str) {
    println!(
        "{offset_note}k={} gamma_cs={} witness={}",
        report.k, report.gamma_cs, report.witness.set
    );
    for (i, (xc, yc)) in report
        .x_classes
        .iter()
        .zip(report.y_classes.iter())
        .enumerate()
    {
        println!("{offset_note}  class {}: X={:?} Y={:?}", i + 1, xc, yc);
    }
    for step in &report.trace {
        println!(
            "{offset_note}  step: {:?} (+{})",
            step.case, step.contribution
        );
    }
}

fn cmd_chain(input: PathBuf, json: bool) -> Result<(), CliError> {
    let g = read_graph(&input)?;
    let comps = g.components();
    let mut reports = Vec::new();
    for comp in &comps {
        let (sub, map) = g.induced(comp.as_slice());
        let rep = chain::analyze(&sub).map_err(|e| match &e {
            chain::ChainError::NotChain { u, v } => CliError::Property(format!(
                "not a chain graph: vertices {} and {} have incomparable neighborhoods",
                map[*u], map[*v]
            )),
            _ => CliError::Property(e.to_string()),
        })?;
        reports.push((map, rep));
    }
    let total: usize = reports.iter().map(|(_, r)| r.gamma_cs).sum();
    if json {
        let items: Vec<serde_json::Value> = reports
            .iter()
            .map(|(map, r)| {
                let remap_classes = |cls: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
                    cls.iter()
                        .map(|c| c.iter().map(|&v| map[v]).collect())
                        .collect()
                };
                json!({
                    "k": r.k,
                    "classes": {
                        "x": remap_classes(&r.x_classes),
                        "y": remap_classes(&r.y_classes),
                    },
                    "gamma_cs": r.gamma_cs,
                    "witness": r.witness.set.iter().map(|v| map[v]).collect::<Vec<_>>(),
                    "trace": r.trace,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({"gamma_cs": total, "components": items})).unwrap()
        );
    } else if reports.len() == 1 {
        chain_report_text(&reports[0].1, "");
    } else {
        println!("gamma_cs={total} ({} components)", reports.len());
        for (i, (_, r)) in reports.iter().enumerate() {
            println!("component {i}:");
            chain_report_text(r, "  ");
        }
    }
    Ok(())
}

fn cmd_reduce(
    kind: ReductionKind,
    input: PathBuf,
    out: PathBuf,
    json: bool,
) -> Result<(), CliError> {
    let art = match kind {
        ReductionKind::SetCover => {
            let text = fs::read_to_string(&input)
                .map_err(|e| CliError::Input(format!("{}: {e}", input.display())))?;
            let inst =
                SetCoverInstance::parse(&text).map_err(|e| CliError::Input(e.to_string()))?;
            gadgets::set_cover_gadget(&inst).map_err(|e| CliError::Input(e.to_string()))?
        }
        _ => {
            let g = read_graph(&input)?;
            match kind {
                ReductionKind::PendantPath => gadgets::pendant_path(&g),
                ReductionKind::Gy4 => gadgets::gy4_construct(&g),
                ReductionKind::StarConvex | ReductionKind::CombConvex => {
                    let bp = g
                        .bipartition_of()
                        .map_err(|_| CliError::Property("base graph is not bipartite".into()))?;
                    let built = match kind {
                        ReductionKind::StarConvex => gadgets::star_convex(&g, &bp),
                        _ => gadgets::comb_convex(&g, &bp),
                    };
                    built.map_err(|e| CliError::Property(e.to_string()))?
                }
                ReductionKind::SetCover => unreachable!(),
            }
        }
    };
    let edges_path = out.with_extension("edges");
    let meta_path = out.with_extension("meta.json");
    fs::write(&edges_path, art.gadget.to_edge_list())
        .map_err(|e| CliError::Input(format!("{}: {e}", edges_path.display())))?;
    let meta = serde_json::to_string_pretty(&art).unwrap();
    fs::write(&meta_path, &meta)
        .map_err(|e| CliError::Input(format!("{}: {e}", meta_path.display())))?;
    if json {
        println!("{meta}");
    } else {
        println!(
            "kind={} gadget_n={} gadget_m={} offset={} -> {} {}",
            art.kind,
            art.gadget.n(),
            art.gadget.m(),
            art.offset,
            edges_path.display(),
            meta_path.display()
        );
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_xcheck(
    kind: ReductionKind,
    max_n: usize,
    trials: usize,
    max_x: usize,
    max_y: usize,
    max_p: usize,
    max_q: usize,
    seed: u64,
    force: bool,
    json: bool,
) -> Result<(), CliError> {
    let instances = match kind {
        ReductionKind::PendantPath | ReductionKind::Gy4 => XcheckInstances::AllConnected { max_n },
        ReductionKind::StarConvex | ReductionKind::CombConvex => XcheckInstances::SeededBipartite {
            trials,
            max_x,
            max_y,
            seed,
        },
        ReductionKind::SetCover => XcheckInstances::SeededSetCover {
            trials,
            max_p,
            max_q,
            seed,
        },
    };
    let opts = oracle_opts(force);
    let report = gadgets::xcheck(kind, &instances, &opts).map_err(|e| match e {
        gadgets::XcheckError::Oracle {
            source: OracleError::GuardExceeded { n, max_n },
            ..
        } => CliError::Guard(format!(
            "gadget has {n} vertices, above the size guard {max_n}; rerun with --force"
        )),
        other => CliError::Input(other.to_string()),
    })?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        for row in &report.rows {
            let formula = row
                .cosecure_formula
                .map(|(got, want)| format!(" cosecure={got}/{want}"))
                .unwrap_or_default();
            println!(
                "instance {}: base({}, {}) opt={} gadget={} expected={}{} structural={} {}",
                row.index,
                row.base_n,
                row.base_m,
                row.base_opt,
                row.gadget_opt,
                row.expected,
                formula,
                row.structural_ok,
                if row.ok { "ok" } else { "VIOLATION" }
            );
        }
        println!(
            "{}: {} instances, {} violations",
            report.kind,
            report.rows.len(),
            report.violations
        );
    }
    if report.ok() {
        Ok(())
    } else {
        Err(CliError::Property(format!(
            "{} offset violations",
            report.violations
        )))
    }
}

fn cmd_gen(args: GenArgs) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let text = match args.family.as_str() {
        "complete-bipartite" => {
            if args.p < 1 || args.q < 1 {
                return Err(CliError::Input("need p >= 1 and q >= 1".into()));
            }
            gen::complete_bipartite(args.p, args.q).to_edge_list()
        }
        "chain" => match &args.classes {
            Some(sizes) => {
                let (x, y) = parse_class_sizes(sizes)?;
                gen::chain_from_classes(&x, &y).to_edge_list()
            }
            None => {
                if args.max_n < 2 {
                    return Err(CliError::Input("need --max-n >= 2".into()));
                }
                gen::random_chain(args.max_n, &mut rng).to_edge_list()
            }
        },
        "random" => {
            if args.connected {
                if args.n < 1 {
                    return Err(CliError::Input("need --n >= 1".into()));
                }
                gen::random_connected_graph(args.n, args.edge_prob, &mut rng).to_edge_list()
            } else {
                gen::random_graph(args.n, args.edge_prob, &mut rng).to_edge_list()
            }
        }
        "set-cover" => {
            if args.max_p < 1 || args.max_q < 1 {
                return Err(CliError::Input("need --max-p >= 1 and --max-q >= 1".into()));
            }
            gen::random_set_cover(args.max_p, args.max_q, &mut rng).serialize()
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown family {other:?}; use chain, complete-bipartite, random or set-cover"
            )))
        }
    };
    write_output(&args.out, &text)
}

fn parse_class_sizes(arg: &str) -> Result<(Vec<usize>, Vec<usize>), CliError> {
    let mut halves = arg.split('/');
    let (a, b) = match (halves.next(), halves.next(), halves.next()) {
        (Some(a), Some(b), None) => (a, b),
        _ => {
            return Err(CliError::Input(
                "class sizes must look like `1,2/2,1` (X sizes / Y sizes)".into(),
            ))
        }
    };
    let parse = |s: &str| -> Result<Vec<usize>, CliError> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Input(format!("invalid class size {t:?}")))
            })
            .collect()
    };
    let (x, y) = (parse(a)?, parse(b)?);
    if x.len() != y.len() || x.is_empty() || x.iter().chain(&y).any(|&s| s == 0) {
        return Err(CliError::Input(
            "class size vectors must be equally long, nonempty and positive".into(),
        ));
    }
    Ok((x, y))
}

#[allow(clippy::too_many_arguments)]
fn cmd_check_class(
    check: String,
    input: Option<PathBuf>,
    order: Option<String>,
    tree: Option<String>,
    vertices: Option<String>,
    backbone: Option<String>,
    teeth: Option<String>,
    json: bool,
) -> Result<(), CliError> {
    let need_graph = || -> Result<Graph, CliError> {
        input
            .as_ref()
            .ok_or_else(|| CliError::Input("this check needs a graph file".into()))
            .and_then(read_graph)
    };
    let class_err = |e: classcheck::ClassCheckError| match e {
        classcheck::ClassCheckError::GuardExceeded { .. } => CliError::Guard(e.to_string()),
        other => CliError::Input(other.to_string()),
    };
    let verdict = |ok: bool, witness: serde_json::Value| -> Result<(), CliError> {
        if json {
            println!(
                "{}",
                serde_json::to_string_pretty(
                    &json!({"check": check, "ok": ok, "witness": witness})
                )
                .unwrap()
            );
        } else {
            println!(
                "{check}: {} witness={witness}",
                if ok { "ok" } else { "FAIL" }
            );
        }
        if ok {
            Ok(())
        } else {
            Err(CliError::Property(format!("{check} check failed")))
        }
    };

    match check.as_str() {
        "chordal-bipartite" => {
            let g = need_graph()?;
            let ok = classcheck::is_chordal_bipartite_small(&g).map_err(class_err)?;
            verdict(ok, serde_json::Value::Null)
        }
        "dpeo" => {
            let g = need_graph()?;
            let order = parse_ids(&order.ok_or_else(|| CliError::Input("need --order".into()))?)?;
            let fail = classcheck::verify_dpeo(&g, &order).map_err(class_err)?;
            verdict(fail.is_none(), json!(fail))
        }
        "tree-convex" => {
            let g = need_graph()?;
            let tree = parse_pairs(&tree.ok_or_else(|| CliError::Input("need --tree".into()))?)?;
            let bp = g
                .bipartition_of()
                .map_err(|_| CliError::Property("graph is not bipartite".into()))?;
            let fail = classcheck::tree_convex_violation(&g, &bp, &tree).map_err(class_err)?;
            verdict(fail.is_none(), json!(fail))
        }
        "star" => {
            let verts =
                parse_ids(&vertices.ok_or_else(|| CliError::Input("need --vertices".into()))?)?;
            let tree = parse_pairs(&tree.ok_or_else(|| CliError::Input("need --tree".into()))?)?;
            let center = classcheck::star_center(&verts, &tree).map_err(class_err)?;
            verdict(center.is_some(), json!(center))
        }
        "comb" => {
            let verts =
                parse_ids(&vertices.ok_or_else(|| CliError::Input("need --vertices".into()))?)?;
            let tree = parse_pairs(&tree.ok_or_else(|| CliError::Input("need --tree".into()))?)?;
            let backbone =
                parse_ids(&backbone.ok_or_else(|| CliError::Input("need --backbone".into()))?)?;
            let teeth = parse_ids(&teeth.ok_or_else(|| CliError::Input("need --teeth".into()))?)?;
            let ok = classcheck::is_comb(&verts, &tree, &backbone, &teeth).map_err(class_err)?;
            verdict(ok, serde_json::Value::Null)
        }
        other => Err(CliError::Input(format!(
            "unknown check {other:?}; use chordal-bipartite, dpeo, tree-convex, star or comb"
        ))),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve {
            input,
            witness,
            force,
            per_component,
            json,
        } => cmd_solve(input, witness, force, per_component, json),
        Command::Verify { input, set, json } => cmd_verify(input, set, json),
        Command::Chain { input, json } => cmd_chain(input, json),
        Command::Reduce {
            kind,
            input,
            out,
            json,
        } => cmd_reduce(kind, input, out, json),
        Command::Xcheck {
            kind,
            max_n,
            trials,
            max_x,
            max_y,
            max_p,
            max_q,
            seed,
            force,
            json,
        } => cmd_xcheck(
            kind, max_n, trials, max_x, max_y, max_p, max_q, seed, force, json,
        ),
        Command::Gen(args) => cmd_gen(args),
        Command::CheckClass {
            check,
            input,
            order,
            tree,
            vertices,
            backbone,
            teeth,
            json,
        } => cmd_check_class(check, input, order, tree, vertices, backbone, teeth, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}
