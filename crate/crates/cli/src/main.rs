mod report;

use clap::{Parser, Subcommand, ValueEnum};
use grouptrix::arith::{self, ConditionList, FactorKind};
use grouptrix::embed::{self, EmbedKind, Instance};
use grouptrix::graph as io;
use grouptrix::hierarchy::{self, BuildOptions, Cover, GraphKind, Reduction};
use grouptrix::table1::{self, Column, Tier};
use grouptrix::twins::{cokernel, ReductionOrder};
use grouptrix::{Error, Exec};
use report::ReportDocument;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "grouptrix", version, about = "Graphs defined on finite groups")]
struct Cli {
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Print the structured form instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    El,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Core,
    Extended,
}

#[derive(Subcommand)]
enum Command {
    /// Build one graph on a group.
    Graph {
        #[arg(long)]
        group: String,
        #[arg(long)]
        kind: String,
        /// Output file; the format follows the extension unless --format is given.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// none, identity or centre.
        #[arg(long, default_value = "none")]
        reduced: String,
        /// Central cover `<group>,center` for the deep commuting graph.
        #[arg(long)]
        cover: Option<String>,
        /// Also report the cokernel size.
        #[arg(long)]
        cokernel: bool,
    },
    /// Cokernel sizes on small simple groups next to the published values.
    Table1 {
        /// Comma-separated row names, e.g. `A5,L2(7)`.
        #[arg(long)]
        rows: Option<String>,
        #[arg(long, value_enum, default_value = "core")]
        tier: TierArg,
    },
    /// Arithmetic conditions and structural reports.
    Classify {
        #[command(subcommand)]
        task: Task,
    },
    /// Embed a graph read from an edge list and print the certificate.
    Embed {
        /// com, pow, epow, dep or gen.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        edges: PathBuf,
    },
}

#[derive(Subcommand)]
enum Task {
    /// Whether the power graph of PSL(2,q) is a cograph.
    Pslq { q: u64 },
    /// Values satisfying the PSL(2,q) condition: `even_d <max d>` or `odd_q <max q>`.
    Lists { kind: String, bound: u64 },
    /// Inclusions and equalities along the hierarchy.
    Hierarchy {
        group: String,
        #[arg(long)]
        cover: Option<String>,
    },
    /// Gruenberg–Kegel graph.
    Gk { group: String },
}

struct Ctx {
    opts: BuildOptions,
    json: bool,
}

impl Ctx {
    fn print(&self, doc: &ReportDocument) {
        if self.json {
            println!("{}", doc.to_json());
        } else {
            print!("{}", doc.to_text());
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let mut opts = BuildOptions::with_exec(if cli.jobs == Some(1) {
        Exec::Sequential
    } else {
        Exec::default()
    });
    if let Ok(v) = std::env::var("GROUPTRIX_MAX_ORDER") {
        match v.parse() {
            Ok(n) => opts.max_pair_order = n,
            Err(_) => {
                eprintln!("error: GROUPTRIX_MAX_ORDER must be an integer");
                return ExitCode::from(2);
            }
        }
    }
    let ctx = Ctx { opts, json: cli.json };
    let result = match cli.command {
        Command::Graph {
            group,
            kind,
            out,
            format,
            reduced,
            cover,
            cokernel,
        } => cmd_graph(&ctx, &group, &kind, out, format, &reduced, cover.as_deref(), cokernel),
        Command::Table1 { rows, tier } => cmd_table1(&ctx, rows.as_deref(), tier),
        Command::Classify { task } => cmd_classify(&ctx, task),
        Command::Embed { kind, edges } => cmd_embed(&ctx, &kind, &edges),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        _ if e.is_size_guard() => 3,
        Error::InvalidSpec(_)
        | Error::Parse { .. }
        | Error::NotAGroup(_)
        | Error::NotNormal
        | Error::InvalidCover(_)
        | Error::NotPrimePower(_)
        | Error::Unsupported(_)
        | Error::Io(_) => 2,
        _ => 1,
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_graph(
    ctx: &Ctx,
    group: &str,
    kind: &str,
    out: Option<PathBuf>,
    format: Option<Format>,
    reduced: &str,
    cover: Option<&str>,
    want_cokernel: bool,
) -> Result<bool, Error> {
    let kind: GraphKind = kind.parse()?;
    let how: Reduction = reduced.parse()?;
    let g = grouptrix::group::parse_group(group)?;
    let cover = cover.map(Cover::parse).transpose()?;
    let graph = hierarchy::build(&g, kind, cover.as_ref(), &ctx.opts)?;
    let (graph, _) = hierarchy::reduce(&graph, kind, how);
    let components = graph.components().len();
    let mut summary = format!("n={} m={} components={components}", graph.order(), graph.edge_count());
    let mut doc = ReportDocument::new();
    doc.push("n", graph.order());
    doc.push("m", graph.edge_count());
    doc.push("components", components);
    if want_cokernel {
        let k = cokernel(&graph, ReductionOrder::Deterministic).size();
        summary.push_str(&format!(" cokernel={k}"));
        doc.push("cokernel", k);
    }
    if let Some(path) = out {
        let dot = match format {
            Some(Format::Dot) => true,
            Some(Format::El) => false,
            None => path.extension().is_some_and(|e| e == "dot"),
        };
        let text = if dot {
            io::write_dot(&graph, None)
        } else {
            io::write_edge_list(&graph)
        };
        std::fs::write(&path, text)?;
        doc.push("out", path.display().to_string());
    }
    if ctx.json {
        ctx.print(&doc);
    } else {
        println!("{summary}");
    }
    Ok(true)
}

fn cmd_table1(ctx: &Ctx, rows: Option<&str>, tier: TierArg) -> Result<bool, Error> {
    let tier = match tier {
        TierArg::Core => Tier::Core,
        TierArg::Extended => Tier::Extended,
    };
    let selected = match rows {
        Some(list) => list
            .split(',')
            .map(|name| {
                table1::find_row(name.trim()).ok_or_else(|| Error::InvalidSpec(format!("unknown row `{name}`")))
            })
            .collect::<Result<Vec<_>, _>>()?,
        None => table1::rows(tier),
    };
    let results = ctx
        .opts
        .exec
        .map_slice(&selected, |row| table1::compute_row(row, &Column::ALL, &ctx.opts));
    let mut doc = ReportDocument::new();
    let mut all = true;
    for r in results {
        let r = r?;
        let mut cells = serde_json::Map::new();
        for (i, col) in Column::ALL.iter().enumerate() {
            let status = match r.matches(*col) {
                Some(true) => "MATCH",
                Some(false) => "MISMATCH",
                None => "SKIPPED",
            };
            cells.insert(
                col.name().to_string(),
                json!({
                    "computed": r.cells[i].to_string(),
                    "paper": r.row.expected[i],
                    "status": status,
                }),
            );
        }
        all &= r.all_match();
        doc.push(r.row.name, json!({ "order": r.row.order, "cells": cells }));
    }
    doc.push("all_match", all);
    ctx.print(&doc);
    Ok(all)
}

fn kind_name(k: FactorKind) -> &'static str {
    match k {
        FactorKind::Unit => "UNIT",
        FactorKind::PrimePower => "PRIME_POWER",
        FactorKind::TwoDistinctPrimes => "TWO_PRIMES",
        FactorKind::Other => "OTHER",
    }
}

fn cmd_classify(ctx: &Ctx, task: Task) -> Result<bool, Error> {
    let mut doc = ReportDocument::new();
    match task {
        Task::Pslq { q } => {
            let holds = arith::psl2_cograph_condition(q)?;
            let (a, b) = arith::psl2_condition_pair(q);
            let (la, lb) = if q % 2 == 0 {
                ("q-1", "q+1")
            } else {
                ("(q-1)/2", "(q+1)/2")
            };
            let (ca, cb) = (arith::factor_classify(a), arith::factor_classify(b));
            doc.push("q", q);
            doc.push("condition", holds);
            doc.push(la, format!("{a} {}", kind_name(ca.kind)));
            doc.push(lb, format!("{b} {}", kind_name(cb.kind)));
            let failing: Vec<String> = [(la, &ca), (lb, &cb)]
                .iter()
                .filter(|(_, c)| !c.is_pp_or_pq())
                .map(|(l, c)| format!("{l}={} is OTHER", c.value))
                .collect();
            if !failing.is_empty() {
                doc.push("note", failing.join("; "));
            }
        }
        Task::Lists { kind, bound } => {
            let list = match kind.as_str() {
                "even_d" => ConditionList::EvenExponents(
                    u32::try_from(bound).map_err(|_| Error::BoundExceeded {
                        got: bound,
                        max: arith::MAX_EVEN_EXPONENT as u64,
                    })?,
                ),
                "odd_q" => ConditionList::OddPrimePowers(bound),
                _ => return Err(Error::InvalidSpec(format!("unknown list `{kind}`"))),
            };
            let values = arith::enumerate_condition_values(list)?;
            doc.push("kind", kind);
            doc.push("bound", bound);
            doc.push("count", values.len());
            doc.push("values", values);
        }
        Task::Hierarchy { group, cover } => {
            let g = grouptrix::group::parse_group(&group)?;
            let cover = cover.as_deref().map(Cover::parse).transpose()?;
            let rep = hierarchy::hierarchy_report(&g, cover.as_ref(), &ctx.opts)?;
            for (k, v) in rep.facts() {
                doc.push(k, v);
            }
            doc.push("all_hold", rep.all_hold());
        }
        Task::Gk { group } => {
            let g = grouptrix::group::parse_group(&group)?;
            let gk = hierarchy::gk_graph(&g);
            doc.push("gk", gk.to_string());
            doc.push("connected", gk.is_connected());
        }
    }
    ctx.print(&doc);
    Ok(true)
}

fn cmd_embed(ctx: &Ctx, kind: &str, edges: &PathBuf) -> Result<bool, Error> {
    let kind: EmbedKind = kind.parse()?;
    let graph = io::parse_edge_list(&std::fs::read_to_string(edges)?)?;
    let cert = embed::embed(kind, &Instance::Graph(graph))?;
    let ok = embed::verify_embedding(&cert).holds();
    if ctx.json {
        let mut doc = ReportDocument::new();
        doc.push("kind", kind.name());
        doc.push("ambient", cert.ambient.descriptor());
        doc.push(
            "vertex_map",
            cert.vertex_map.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        );
        doc.push("verified", ok);
        ctx.print(&doc);
    } else {
        print!("{}", cert.export());
        println!("verified={ok}");
    }
    Ok(ok)
}
