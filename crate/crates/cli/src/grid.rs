use std::path::Path;

use clap::ValueEnum;
use knotwidth::families::{
    random_small_diagrams, torus_diagram, trefoil_connect_sum, tw_lower_bound_report,
};
use knotwidth::pipeline::{report_from_run, run_pipeline};
use knotwidth::triangulation::{face_pairing_width, torus_complement};
use knotwidth::Diagram;
use rayon::prelude::*;

use crate::Format;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GridFamily {
    /// Torus knots `T(p, q)` with `2 <= q < p <= max`.
    Torus,
    /// Connected sums of `1..=max` trefoils.
    Sum,
    /// `max` seeded random reduced braid closures.
    Random,
    /// Torus knot complement triangulations with `2 <= q < p <= max`.
    Triangulation,
}

pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub all_pass: bool,
}

const KNOT_HEADERS: [&str; 13] = [
    "instance",
    "crossings",
    "graph_vertices",
    "carving_width",
    "exact",
    "tw_lower",
    "tw_upper",
    "k",
    "sphere_cost",
    "splitting_cost",
    "checks",
    "k_min_lower_bound",
    "lower_bound_note",
];

const TRI_HEADERS: [&str; 9] = [
    "p",
    "q",
    "u",
    "v",
    "tetrahedra",
    "h1",
    "meridian_intersection",
    "face_pairing_width",
    "checks",
];

fn coprime_pairs(max: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for p in 3..=max {
        for q in 2..p {
            if knotwidth::families::gcd(p as i64, q as i64) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

fn knot_row(
    label: String,
    d: anyhow::Result<Diagram>,
    cap: usize,
    torus: Option<(u64, u64)>,
) -> (Vec<String>, bool) {
    let lower = torus.and_then(|(p, q)| tw_lower_bound_report(p as i64, q as i64).ok());
    let (k_min, note) = match &lower {
        Some(r) => (
            r.k_min.to_string(),
            format!("bridge number {} (external input)", r.bridge_number),
        ),
        None => (String::new(), String::new()),
    };
    let run = d.and_then(|d| Ok((run_pipeline(&d, cap)?, d)));
    match run {
        Ok((run, d)) => {
            let r = report_from_run(&d, &run, None);
            let pass = r.all_hold();
            let row = vec![
                label,
                r.crossings.to_string(),
                r.graph_vertices.to_string(),
                r.carving_width.to_string(),
                r.carving_exact.to_string(),
                r.bounds.tw_lower.to_string(),
                r.bounds.tw_upper.to_string(),
                r.k.to_string(),
                r.sphere_cost.to_string(),
                r.splitting_cost.to_string(),
                if pass { "pass".into() } else { "fail".into() },
                k_min,
                note,
            ];
            (row, pass)
        }
        Err(e) => {
            let mut row = vec![label];
            row.extend(std::iter::repeat_n(String::new(), 9));
            row[10] = format!("error: {e}");
            row.extend([k_min, note]);
            (row, false)
        }
    }
}

fn knot_table(
    items: Vec<(String, anyhow::Result<Diagram>, Option<(u64, u64)>)>,
    cap: usize,
) -> Table {
    let results: Vec<(Vec<String>, bool)> = items
        .into_par_iter()
        .map(|(label, d, torus)| knot_row(label, d, cap, torus))
        .collect();
    let all_pass = results.iter().all(|r| r.1);
    Table {
        headers: KNOT_HEADERS.to_vec(),
        rows: results.into_iter().map(|r| r.0).collect(),
        all_pass,
    }
}

fn triangulation_table(max: u64) -> Table {
    let results: Vec<(Vec<String>, bool)> = coprime_pairs(max)
        .into_par_iter()
        .map(|(p, q)| match torus_complement(p, q) {
            Ok(c) => {
                let h1 = c.triangulation.homology_h1();
                let (_, w) = face_pairing_width(&c.triangulation);
                let pass = c.triangulation.validate().is_ok()
                    && c.triangulation.is_orientable()
                    && c.meridian_intersection() == 1
                    && h1.as_ref().is_ok_and(|h| h.is_integers());
                let row = vec![
                    p.to_string(),
                    q.to_string(),
                    c.u.to_string(),
                    c.v.to_string(),
                    c.triangulation.size().to_string(),
                    h1.map(|h| h.to_string())
                        .unwrap_or_else(|e| format!("error: {e}")),
                    c.meridian_intersection().to_string(),
                    w.to_string(),
                    if pass { "pass".into() } else { "fail".into() },
                ];
                (row, pass)
            }
            Err(e) => {
                let mut row = vec![p.to_string(), q.to_string()];
                row.extend(std::iter::repeat_n(String::new(), 6));
                row.push(format!("error: {e}"));
                (row, false)
            }
        })
        .collect();
    let all_pass = results.iter().all(|r| r.1);
    Table {
        headers: TRI_HEADERS.to_vec(),
        rows: results.into_iter().map(|r| r.0).collect(),
        all_pass,
    }
}

pub fn build_table(family: GridFamily, max: u64, seed: u64, cap: usize) -> Table {
    match family {
        GridFamily::Torus => knot_table(
            coprime_pairs(max)
                .into_iter()
                .map(|(p, q)| {
                    (
                        format!("T({p},{q})"),
                        torus_diagram(p as i64, q as i64).map_err(Into::into),
                        Some((p, q)),
                    )
                })
                .collect(),
            cap,
        ),
        GridFamily::Sum => knot_table(
            (1..=max as usize)
                .map(|n| {
                    (
                        format!("#{n} trefoil"),
                        trefoil_connect_sum(n).map_err(Into::into),
                        None,
                    )
                })
                .collect(),
            cap,
        ),
        GridFamily::Random => knot_table(
            random_small_diagrams(seed, max as usize, 10)
                .into_iter()
                .enumerate()
                .map(|(i, (word, d))| (format!("random{i} {word:?}"), Ok(d), None))
                .collect(),
            cap,
        ),
        GridFamily::Triangulation => triangulation_table(max),
    }
}

pub fn render(table: &Table, format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Md => {
            let mut s = format!(
                "| {} |\n|{}\n",
                table.headers.join(" | "),
                "---|".repeat(table.headers.len())
            );
            for r in &table.rows {
                s.push_str(&format!("| {} |\n", r.join(" | ")));
            }
            s
        }
        Format::Json => {
            let rows: Vec<serde_json::Map<String, serde_json::Value>> = table
                .rows
                .iter()
                .map(|r| {
                    table
                        .headers
                        .iter()
                        .zip(r)
                        .map(|(h, v)| (h.to_string(), v.clone().into()))
                        .collect()
                })
                .collect();
            serde_json::to_string_pretty(&rows)? + "\n"
        }
        Format::Csv | Format::Text => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&table.headers)?;
            for r in &table.rows {
                w.write_record(r)?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Dot | Format::Svg => anyhow::bail!("format {format:?} is not available for grids"),
    })
}

pub fn cmd_grid(
    format: Format,
    seed: u64,
    cap: usize,
    family: GridFamily,
    max: u64,
    out: Option<&Path>,
) -> anyhow::Result<bool> {
    let table = build_table(family, max, seed, cap);
    let body = render(&table, format)?;
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
        let ext = if format == Format::Md {
            "md"
        } else if format == Format::Json {
            "json"
        } else {
            "csv"
        };
        std::fs::write(dir.join(format!("grid.{ext}")), &body)?;
    }
    print!("{body}");
    Ok(table.all_pass)
}
