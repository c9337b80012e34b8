use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use rayon::prelude::*;
use serde_json::{json, Value};
use tupledom::bounds::{compare_report, Bound};
use tupledom::domination::{coverage, dominating_r, first_deficient, total_dominating_r_minus_1};
use tupledom::exact::{exact_gamma, ExactOutcome};
use tupledom::generators::{random_regular, GENERATOR_ID};
use tupledom::io::write_graph6;
use tupledom::{atlas, Error, Graph, Variant, VertexSet};

use crate::input::{read_items, InputFormat, Item};
use crate::output::{OutputFormat, Table};

/// Process exit status; a batch reports the most severe one seen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    Failed = 1,
    BadInput = 2,
}

pub struct Source {
    pub path: Option<PathBuf>,
    pub format_in: Option<InputFormat>,
    pub format: OutputFormat,
}

pub struct GenRequest {
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub count: usize,
    pub seed: u64,
    pub atlas: Option<String>,
    pub out: Option<PathBuf>,
    pub meta: Option<PathBuf>,
}

fn fail(status: Status, message: impl std::fmt::Display) -> Status {
    eprintln!("tupledom: {message}");
    status
}

fn error_status(e: &Error) -> Status {
    match e {
        Error::Generation(_) | Error::Unsupported(_) => Status::Failed,
        _ => Status::BadInput,
    }
}

fn ids(set: &VertexSet) -> Value {
    json!(set.to_vec())
}

pub fn gen(req: GenRequest) -> Status {
    let (graphs, header) = match (&req.atlas, req.n, req.r) {
        (Some(name), _, _) => match atlas::named(name) {
            Ok(g) => {
                let r = g.regularity().map_or("-".to_string(), |r| r.to_string());
                let header = format!("# atlas={name} n={} r={r} generator=atlas", g.n());
                (vec![g], header)
            }
            Err(e) => return fail(error_status(&e), e),
        },
        (None, Some(n), Some(r)) => {
            let mut graphs = Vec::with_capacity(req.count);
            for i in 0..req.count as u64 {
                match random_regular(n, r, req.seed.wrapping_add(i)) {
                    Ok(g) => graphs.push(g),
                    Err(e) => return fail(error_status(&e), e),
                }
            }
            let header = format!(
                "# n={n} r={r} seed={} count={} generator={GENERATOR_ID}",
                req.seed, req.count
            );
            (graphs, header)
        }
        _ => return fail(Status::BadInput, "gen needs --n and --r, or --atlas"),
    };
    let mut text = String::new();
    for g in &graphs {
        text.push_str(&write_graph6(g));
        text.push('\n');
    }
    let written = match &req.out {
        Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("standard output: {e}")),
    };
    if let Err(e) = written {
        return fail(Status::BadInput, e);
    }
    if let Some(meta) = &req.meta {
        if let Err(e) = fs::write(meta, format!("{header}\n")) {
            return fail(Status::BadInput, format!("{}: {e}", meta.display()));
        }
    }
    Status::Ok
}

/// Runs `work` on every parsed graph in parallel and collects rows in input
/// order. Unparseable items become error rows with status `BadInput`.
fn batch<F>(source: &Source, columns: &'static [&'static str], work: F) -> Status
where
    F: Fn(&Graph) -> (Vec<(&'static str, Value)>, Status) + Sync,
{
    let items = match read_items(source.path.as_ref(), source.format_in) {
        Ok(items) => items,
        Err(e) => return fail(Status::BadInput, e),
    };
    let results: Vec<(Vec<(&str, Value)>, Status)> = items
        .par_iter()
        .map(|item: &Item| {
            let mut fields = vec![("index", json!(item.index)), ("graph6", json!(item.graph6))];
            let status = match &item.graph {
                Ok(g) => {
                    let (more, status) = work(g);
                    fields.extend(more);
                    status
                }
                Err(e) => {
                    fields.push(("error", json!(e)));
                    Status::BadInput
                }
            };
            (fields, status)
        })
        .collect();
    let mut table = Table::new(columns);
    let mut worst = Status::Ok;
    for (fields, status) in results {
        table.push(fields);
        worst = worst.max(status);
    }
    if let Err(e) = table.write(source.format, &mut io::stdout().lock()) {
        return fail(Status::BadInput, format!("standard output: {e}"));
    }
    worst
}

const DOMINATE_COLUMNS: &[&str] = &[
    "index", "graph6", "n", "r", "variant", "k", "branch", "size", "bound", "verified", "set",
    "error",
];

pub fn dominate(variant: Variant, source: &Source) -> Status {
    batch(source, DOMINATE_COLUMNS, |g| {
        let built = match variant {
            Variant::Total => total_dominating_r_minus_1(g),
            Variant::Closed => dominating_r(g),
        };
        let base = vec![
            ("n", json!(g.n())),
            ("r", json!(g.regularity())),
            ("variant", json!(variant)),
        ];
        match built {
            Ok(cert) => {
                let verified = cert.verify(g);
                let mut fields = base;
                fields.extend([
                    ("k", json!(cert.k)),
                    ("branch", json!(cert.branch)),
                    ("size", json!(cert.size())),
                    ("bound", json!(cert.bound_value())),
                    ("verified", json!(verified)),
                    ("set", ids(&cert.set)),
                ]);
                (fields, if verified { Status::Ok } else { Status::Failed })
            }
            Err(e) => {
                let mut fields = base;
                fields.push(("error", json!(e.to_string())));
                (fields, Status::Failed)
            }
        }
    })
}

const EXACT_COLUMNS: &[&str] = &[
    "index", "graph6", "n", "variant", "k", "status", "size", "witness", "nodes", "error",
];

pub fn exact(variant: Variant, k: usize, budget: u64, source: &Source) -> Status {
    batch(source, EXACT_COLUMNS, |g| {
        let mut fields = vec![
            ("n", json!(g.n())),
            ("variant", json!(variant)),
            ("k", json!(k)),
        ];
        let status = match exact_gamma(g, k, variant, budget) {
            ExactOutcome::Optimal { size, witness } => {
                fields.extend([
                    ("status", json!("optimal")),
                    ("size", json!(size)),
                    ("witness", ids(&witness)),
                ]);
                Status::Ok
            }
            ExactOutcome::Infeasible => {
                fields.push(("status", json!("infeasible")));
                Status::Failed
            }
            ExactOutcome::Unknown { nodes, incumbent } => {
                fields.extend([
                    ("status", json!("unknown (budget)")),
                    ("witness", ids(&incumbent)),
                    ("nodes", json!(nodes)),
                ]);
                Status::Ok
            }
        };
        (fields, status)
    })
}

const BOUNDS_COLUMNS: &[&str] = &[
    "index",
    "graph6",
    "n",
    "r",
    "total_k",
    "closed_k",
    "coloring_total",
    "coloring_closed",
    "prob_closed",
    "prob_total",
    "prob_closed_vacuous",
    "prob_total_vacuous",
    "error",
];

fn bound_value(b: Bound) -> Value {
    json!(b.value())
}

fn vacuous(b: Bound, n: usize) -> Value {
    b.value().map_or(Value::Null, |_| json!(b.is_vacuous(n)))
}

pub fn bounds(source: &Source) -> Status {
    batch(source, BOUNDS_COLUMNS, |g| {
        let rep = compare_report(g);
        let fields = vec![
            ("n", json!(rep.n)),
            ("r", json!(rep.r)),
            ("total_k", json!(rep.total_k)),
            ("closed_k", json!(rep.closed_k)),
            ("coloring_total", bound_value(rep.coloring_total)),
            ("coloring_closed", bound_value(rep.coloring_closed)),
            ("prob_closed", bound_value(rep.prob_closed)),
            ("prob_total", bound_value(rep.prob_total)),
            ("prob_closed_vacuous", vacuous(rep.prob_closed, rep.n)),
            ("prob_total_vacuous", vacuous(rep.prob_total, rep.n)),
        ];
        (fields, Status::Ok)
    })
}

const VERIFY_COLUMNS: &[&str] = &[
    "index",
    "graph6",
    "variant",
    "k",
    "size",
    "pass",
    "first_deficient",
    "coverage",
    "error",
];

fn parse_ids(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| format!("invalid vertex id {s:?}"))
        })
        .collect()
}

pub fn verify(variant: Variant, k: usize, set: &str, source: &Source) -> Status {
    let ids = match parse_ids(set) {
        Ok(ids) => ids,
        Err(e) => return fail(Status::BadInput, e),
    };
    let items = match read_items(source.path.as_ref(), source.format_in) {
        Ok(items) => items,
        Err(e) => return fail(Status::BadInput, e),
    };
    let [item] = items.as_slice() else {
        return fail(
            Status::BadInput,
            format!("verify needs exactly one graph, got {}", items.len()),
        );
    };
    let g = match &item.graph {
        Ok(g) => g,
        Err(e) => return fail(Status::BadInput, e),
    };
    let s = match VertexSet::from_vertices(g.n(), ids) {
        Ok(s) => s,
        Err(e) => return fail(Status::BadInput, e),
    };
    let deficient = first_deficient(g, &s, k, variant);
    let mut table = Table::new(VERIFY_COLUMNS);
    table.push(vec![
        ("index", json!(item.index)),
        ("graph6", json!(item.graph6)),
        ("variant", json!(variant)),
        ("k", json!(k)),
        ("size", json!(s.len())),
        ("pass", json!(deficient.is_none())),
        ("first_deficient", json!(deficient)),
        (
            "coverage",
            json!(deficient.map(|v| coverage(g, &s, v, variant))),
        ),
    ]);
    if let Err(e) = table.write(source.format, &mut io::stdout().lock()) {
        return fail(Status::BadInput, format!("standard output: {e}"));
    }
    if deficient.is_some() {
        Status::Failed
    } else {
        Status::Ok
    }
}
