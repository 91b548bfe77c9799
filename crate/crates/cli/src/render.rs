//! Output rendering. Text mirrors the `{b;c}` notation, JSON is one object
//! per line, CSV has a header row.

use std::io::{self, Write};

use drg_core::array::IntersectionArray;
use drg_core::catalog::{self, Entry};
use drg_core::feasibility::{FeasibilityReport, GeometricNecessary};
use drg_core::graphs::manifest::{EntryReport, EntryStatus};
use drg_core::graphs::{DrCheck, GeometricVerdict};
use drg_core::search::{CaseId, ScanReport, SearchOutcome, TaylorCandidate, TaylorReport};
use drg_core::spectral::{self, Spectrum};
use serde::Serialize;
use serde_json::json;

use crate::config::Format;

fn json_line(out: &mut impl Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn csv_writer(out: &mut impl Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out as &mut dyn Write)
}

fn csv_err(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

pub fn report(
    out: &mut impl Write,
    r: &FeasibilityReport,
    with_bcn444: bool,
    feasible: bool,
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Json => json_line(
            out,
            &json!({ "report": r, "with_bcn444": with_bcn444, "verdict": verdict_word(feasible) }),
        ),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["array", "criterion", "verdict", "detail"]).map_err(csv_err)?;
            for (id, v) in &r.criteria {
                let text = v.to_string();
                let (word, detail) = text.split_once(' ').unwrap_or((&text, ""));
                w.write_record([r.array.to_string(), id.to_string(), word.to_string(), detail.trim().to_string()])
                    .map_err(csv_err)?;
            }
            w.write_record([r.array.to_string(), "divisibility".into(), r.divisibility.to_string(), String::new()])
                .map_err(csv_err)?;
            w.flush()
        }
        Format::Text => {
            writeln!(out, "array     {}", r.array)?;
            writeln!(out, "diameter  {}", r.diameter)?;
            writeln!(out, "a         {:?}", r.derived.a)?;
            writeln!(out, "k_i       {}", r.derived.k_seq.join(", "))?;
            writeln!(out, "v         {}", r.derived.v)?;
            if let Some(s) = &r.spectrum {
                writeln!(out, "spectrum  {s}")?;
            }
            writeln!(out, "criteria")?;
            for (id, v) in &r.criteria {
                writeln!(out, "  {id:>2}  {v}")?;
            }
            writeln!(out, "bounds")?;
            for (name, v) in &r.bounds {
                writeln!(out, "  {name:<22}  {v}")?;
            }
            let tag = if with_bcn444 { "" } else { " (not applied)" };
            writeln!(out, "divisibility{tag}  {}", r.divisibility)?;
            if let Some(d) = &r.delsarte {
                let exact = d.exact.as_deref().unwrap_or("irrational");
                writeln!(out, "delsarte  1 + k/|theta_min| = {exact} (~{:.6}), cliques <= {}", d.approx, d.max_clique)?;
            }
            if let Some(g) = &r.geometric {
                match g {
                    GeometricNecessary::CertifiedNonGeometric { reason } => writeln!(out, "geometric no: {reason}")?,
                    GeometricNecessary::Inconclusive => writeln!(out, "geometric not decided by the spectrum")?,
                }
            }
            for n in &r.notes {
                writeln!(out, "note      {n}")?;
            }
            writeln!(out, "verdict   {}", verdict_word(feasible))
        }
    }
}

fn verdict_word(feasible: bool) -> &'static str {
    if feasible {
        "feasible"
    } else {
        "infeasible"
    }
}

fn annotation(ia: &IntersectionArray) -> Option<String> {
    catalog::annotation(ia).map(Entry::to_string)
}

pub fn search(out: &mut impl Write, outcome: &SearchOutcome, format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            for ia in &outcome.arrays {
                let spec = spectral::spectrum(ia).ok();
                json_line(
                    out,
                    &json!({
                        "array": ia,
                        "v": ia.derive().v.to_string(),
                        "spectrum": spec,
                        "catalog": catalog::annotation(ia),
                    }),
                )?;
            }
            json_line(out, &json!({ "summary": outcome.stats }))
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["array", "v", "k", "theta_min", "spectrum", "catalog"]).map_err(csv_err)?;
            for ia in &outcome.arrays {
                let spec = spectral::spectrum(ia).ok();
                w.write_record([
                    ia.to_string(),
                    ia.derive().v.to_string(),
                    ia.k().to_string(),
                    spec.as_ref().map(|s| s.theta_min().to_string()).unwrap_or_default(),
                    spec.as_ref().map(Spectrum::to_string).unwrap_or_default(),
                    catalog::annotation(ia).map(|e| e.name.to_string()).unwrap_or_default(),
                ])
                .map_err(csv_err)?;
            }
            w.flush()
        }
        Format::Text => {
            for (i, ia) in outcome.arrays.iter().enumerate() {
                let note = annotation(ia).map(|n| format!("  # {n}")).unwrap_or_default();
                writeln!(out, "({:>2}) {ia}{note}", i + 1)?;
            }
            let s = &outcome.stats;
            writeln!(
                out,
                "{} arrays ({} tuples, {} candidates checked)",
                s.found, s.tuples, s.candidates
            )
        }
    }
}

pub fn spectrum(out: &mut impl Write, ia: &IntersectionArray, spec: &Spectrum, format: Format) -> io::Result<()> {
    match format {
        Format::Json => json_line(out, &json!({ "array": ia, "v": spec.v().to_string(), "spectrum": spec })),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["eigenvalue", "approx", "multiplicity", "minimal_polynomial"]).map_err(csv_err)?;
            for e in spec.entries() {
                w.write_record([
                    e.value.to_string(),
                    format!("{:.12}", e.value.approx()),
                    e.multiplicity.to_string(),
                    e.value.factor().to_string(),
                ])
                .map_err(csv_err)?;
            }
            w.flush()
        }
        Format::Text => {
            writeln!(out, "{ia}  v = {}", spec.v())?;
            writeln!(out, "{spec}")?;
            for e in spec.entries() {
                writeln!(
                    out,
                    "  {:<20} ~{:>14.9}  m = {:<14} root of {}",
                    e.value.to_string(),
                    e.value.approx(),
                    e.multiplicity.to_string(),
                    e.value.factor()
                )?;
            }
            Ok(())
        }
    }
}

pub struct Verification<'a> {
    pub label: String,
    pub order: usize,
    pub edges: usize,
    pub check: &'a DrCheck,
    pub theta_min_exact: Option<String>,
    pub theta_min_numeric: Option<f64>,
    pub geometric: Option<Result<GeometricVerdict, String>>,
    pub catalog: Option<&'static Entry>,
}

fn geometric_text(g: &GeometricVerdict) -> String {
    match g {
        GeometricVerdict::Geometric { clique_size, cliques } => {
            format!("geometric ({cliques} Delsarte {clique_size}-cliques partition the edges)")
        }
        GeometricVerdict::NonGeometric { reason } => format!("non-geometric ({reason})"),
        GeometricVerdict::Inconclusive { reason } => format!("inconclusive ({reason})"),
    }
}

pub fn verification(out: &mut impl Write, v: &Verification, format: Format) -> io::Result<()> {
    let geometric = v.geometric.as_ref().map(|g| match g {
        Ok(g) => geometric_text(g),
        Err(e) => format!("not tested ({e})"),
    });
    match format {
        Format::Json => json_line(
            out,
            &json!({
                "graph": v.label,
                "vertices": v.order,
                "edges": v.edges,
                "distance_regular": v.check.is_distance_regular,
                "array": v.check.array,
                "violation": v.check.violation,
                "theta_min": v.theta_min_exact,
                "theta_min_numeric": v.theta_min_numeric,
                "geometric": v.geometric.as_ref().map(|g| g.as_ref().ok()),
                "catalog": v.catalog,
            }),
        ),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["graph", "vertices", "edges", "array", "theta_min", "theta_min_numeric", "geometric"])
                .map_err(csv_err)?;
            w.write_record([
                v.label.clone(),
                v.order.to_string(),
                v.edges.to_string(),
                v.check.array.as_ref().map(|a| a.to_string()).unwrap_or_default(),
                v.theta_min_exact.clone().unwrap_or_default(),
                v.theta_min_numeric.map(|x| format!("{x:.12}")).unwrap_or_default(),
                geometric.clone().unwrap_or_default(),
            ])
            .map_err(csv_err)?;
            w.flush()
        }
        Format::Text => {
            writeln!(out, "graph      {} ({} vertices, {} edges)", v.label, v.order, v.edges)?;
            match (&v.check.array, &v.check.violation) {
                (Some(ia), _) => writeln!(out, "array      {ia}")?,
                (None, Some(x)) => writeln!(
                    out,
                    "not distance-regular: x = {}, y = {} at distance {} has (c, a, b) = {:?}, expected {:?}",
                    x.x, x.y, x.i, x.seen, x.expected
                )?,
                (None, None) => writeln!(out, "not distance-regular")?,
            }
            if let Some(t) = &v.theta_min_exact {
                writeln!(out, "theta_min  {t}")?;
            }
            if let Some(x) = v.theta_min_numeric {
                writeln!(out, "numeric    {x:.12}")?;
            }
            if let Some(g) = geometric {
                writeln!(out, "geometric  {g}")?;
            }
            if let Some(e) = v.catalog {
                writeln!(out, "catalog    {e}")?;
            }
            Ok(())
        }
    }
}

pub fn manifest(out: &mut impl Write, reports: &[EntryReport], format: Format) -> io::Result<()> {
    match format {
        Format::Json => reports.iter().try_for_each(|r| json_line(out, r)),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["name", "expected", "status"]).map_err(csv_err)?;
            for r in reports {
                w.write_record([r.name.clone(), r.expected.to_string(), status_text(&r.status)])
                    .map_err(csv_err)?;
            }
            w.flush()
        }
        Format::Text => {
            for r in reports {
                writeln!(out, "{:<28} {:<32} {}", r.name, r.expected.to_string(), status_text(&r.status))?;
            }
            Ok(())
        }
    }
}

fn status_text(s: &EntryStatus) -> String {
    match s {
        EntryStatus::Verified { digest_pinned: true } => "verified".into(),
        EntryStatus::Verified { digest_pinned: false } => "verified (digest not pinned)".into(),
        EntryStatus::DataAbsent => "data absent".into(),
        EntryStatus::WrongArray { found: Some(a) } => format!("wrong array {a}"),
        EntryStatus::WrongArray { found: None } => "not distance-regular".into(),
        EntryStatus::Error { message } => format!("error: {message}"),
    }
}

pub fn scan(out: &mut impl Write, id: CaseId, report: &ScanReport, format: Format) -> io::Result<()> {
    let survivors: Vec<String> = report.survivors().iter().map(|p| p.to_string()).collect();
    let op = if report.strict { "<" } else { "<=" };
    match format {
        Format::Json => {
            let rows: Vec<_> = report
                .results
                .iter()
                .map(|r| {
                    json!({
                        "partial": r.instance.partial.to_string(),
                        "vars": r.instance.vars.iter().map(|(n, x)| (n.to_string(), *x)).collect::<Vec<_>>(),
                        "min_eigenvalue": r.min_eig.to_string(),
                        "min_eigenvalue_approx": r.min_eig.approx(),
                        "survives": r.survives,
                    })
                })
                .collect();
            json_line(
                out,
                &json!({
                    "case": id,
                    "label": report.label,
                    "threshold": report.threshold,
                    "eliminated_when": format!("min eigenvalue {op} {}", report.threshold),
                    "scanned": report.results.len(),
                    "survivors": survivors,
                    "all_strictly_below": report.all_strictly_below(),
                    "results": rows,
                }),
            )
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["partial", "min_eigenvalue", "approx", "survives"]).map_err(csv_err)?;
            for r in &report.results {
                w.write_record([
                    r.instance.partial.to_string(),
                    r.min_eig.to_string(),
                    format!("{:.12}", r.min_eig.approx()),
                    r.survives.to_string(),
                ])
                .map_err(csv_err)?;
            }
            w.flush()
        }
        Format::Text => {
            let (k, a1) = id.k_a1();
            writeln!(
                out,
                "case {id}: k = {k}, a1 = {a1} ({} matrices, eliminated when min eigenvalue {op} {})",
                report.results.len(),
                report.threshold
            )?;
            writeln!(out, "{} survivors", survivors.len())?;
            for s in &survivors {
                writeln!(out, "  {s}")?;
            }
            if survivors.is_empty() && report.all_strictly_below() {
                writeln!(out, "every scanned matrix has smallest eigenvalue strictly below {}", report.threshold)?;
            }
            Ok(())
        }
    }
}

pub fn taylor(out: &mut impl Write, report: &TaylorReport, format: Format) -> io::Result<()> {
    match format {
        Format::Json => json_line(out, report),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["branch", "array", "c2", "a1", "theta_min", "status", "note"]).map_err(csv_err)?;
            let rows = report
                .minus_three
                .iter()
                .map(|c| ("theta=-3", c))
                .chain(report.irrational.iter().map(|c| ("irrational", c)));
            for (branch, c) in rows {
                w.write_record([
                    branch.to_string(),
                    c.array.to_string(),
                    c.c2.to_string(),
                    c.a1.to_string(),
                    c.theta_min.clone(),
                    serde_json::to_value(c.status).map(|v| v.as_str().unwrap_or("").to_string()).unwrap_or_default(),
                    c.note.clone(),
                ])
                .map_err(csv_err)?;
            }
            w.flush()
        }
        Format::Text => {
            writeln!(out, "theta_3 = -3 branch: c2 in {:?}", report.minus_three_c2)?;
            for c in &report.minus_three {
                taylor_row(out, c)?;
            }
            writeln!(out, "irrational branch")?;
            for c in &report.irrational {
                taylor_row(out, c)?;
            }
            let ng: Vec<String> = report.non_geometric().iter().map(|a| a.to_string()).collect();
            writeln!(out, "non-geometric: {}", ng.join(" "))
        }
    }
}

fn taylor_row(out: &mut impl Write, c: &TaylorCandidate) -> io::Result<()> {
    let status = serde_json::to_value(c.status)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();
    writeln!(out, "  {:<24} theta_min {:<8} {:<14} {}", c.array.to_string(), c.theta_min, status, c.note)
}

pub fn catalog(out: &mut impl Write, format: Format) -> io::Result<()> {
    let rows = catalog::CLASSIFIED
        .iter()
        .map(|e| ("classified", e))
        .chain(catalog::ELIMINATED.iter().map(|e| ("eliminated", e)));
    match format {
        Format::Json => {
            for (group, e) in rows {
                json_line(out, &json!({ "group": group, "entry": e }))?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["group", "name", "array", "status", "backing", "note"]).map_err(csv_err)?;
            for (group, e) in rows {
                let word = |v: serde_json::Value| v.as_str().unwrap_or("").to_string();
                w.write_record([
                    group.to_string(),
                    e.name.to_string(),
                    e.array.to_string(),
                    serde_json::to_value(e.status).map(word).unwrap_or_default(),
                    serde_json::to_value(e.backing).map(word).unwrap_or_default(),
                    e.note.to_string(),
                ])
                .map_err(csv_err)?;
            }
            w.flush()
        }
        Format::Text => {
            for (group, e) in rows {
                writeln!(out, "{group:<11} {:<34} {e}", e.array)?;
            }
            Ok(())
        }
    }
}
