//! The five commands. Each returns its full output as a string so the binary
//! only decides where to write it.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use ideal_graph_core::graph::IntersectionGraph;
use ideal_graph_core::ideal::{self, IdealSet};
use ideal_graph_core::structure;
use ideal_graph_core::theorems::{self, Analysis, TheoremReport, Verdict};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::export::{self, GraphExport};
use crate::instance::{self, load_instance, Instance};
use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    /// `Gr(R)` on the nontrivial proper graded left ideals.
    Graded,
    /// `G(R)` on all nontrivial proper left ideals.
    All,
    /// `G(R_e)`.
    Identity,
    /// `Gr(R)` modulo equal traces on `R_e`.
    Quotient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Dot,
    Json,
}

fn json_text(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn grading_summary(inst: &Instance) -> String {
    let g = &inst.grading;
    format!("{} grading by {}", format!("{:?}", g.kind()).to_lowercase(), g.group().description())
}

fn header(inst: &Instance) -> String {
    let desc = inst.ring().description();
    if inst.name.is_empty() || inst.name == desc {
        format!("# {desc}, {}", grading_summary(inst))
    } else {
        format!("# {} ({desc}), {}", inst.name, grading_summary(inst))
    }
}

pub fn cmd_ideals(inst: &Instance, graded_only: bool, format: Format) -> Result<String> {
    let r = inst.ring();
    let g = &inst.grading;
    let all = ideal::mark_graded(g, ideal::enumerate_left_ideals(r, &inst.limits)?);
    let shown: Vec<&IdealSet> = all.iter().filter(|i| !graded_only || i.graded() == Some(true)).collect();
    let rows: Vec<(String, usize, bool, Vec<String>)> = shown
        .iter()
        .map(|i| {
            let graded = i.graded() == Some(true);
            let label = ideal::describe(r, i, graded.then_some(g));
            (label, i.len(), graded, instance::element_labels(r, i.members()))
        })
        .collect();
    match format {
        Format::Json => Ok(json_text(&json!({
            "instance": inst.name,
            "ring": r.description(),
            "ideals": rows.iter().map(|(l, n, gr, e)| json!({"label": l, "size": n, "graded": gr, "elements": e})).collect::<Vec<_>>(),
        }))),
        Format::Text => {
            let mut out = String::new();
            let graded = all.iter().filter(|i| i.graded() == Some(true)).count();
            writeln!(out, "{}", header(inst)).unwrap();
            writeln!(out, "# {} left ideals, {} graded", all.len(), graded).unwrap();
            for (label, size, gr, elems) in rows {
                writeln!(out, "{label}\t{size}\t{}\t{{{}}}", if gr { "graded" } else { "-" }, elems.join(", ")).unwrap();
            }
            Ok(out)
        }
        Format::Dot => Err(CliError::Usage("ideals supports text and json output".into())),
    }
}

fn pick_graph(inst: &Instance, which: Which) -> Result<IntersectionGraph> {
    let a = Analysis::new(inst.grading.clone(), inst.limits)?;
    Ok(match which {
        Which::Graded => a.graded_graph().clone(),
        Which::All => a.full_graph().clone(),
        Which::Identity => a.component_view()?.graph.clone(),
        Which::Quotient => {
            let view = a.component_view()?;
            let p = structure::sim_partition(a.grading(), view, a.graded_proper_ideals())?;
            structure::quotient_graph(&p, view, a.graded_graph())?
        }
    })
}

pub fn cmd_graph(inst: &Instance, which: Which, format: Format) -> Result<String> {
    let g = pick_graph(inst, which)?;
    let name = match which {
        Which::Graded => "Gr",
        Which::All => "G",
        Which::Identity => "G_e",
        Which::Quotient => "Gr_quotient",
    };
    match format {
        Format::Dot => Ok(export::to_dot(name, &g)),
        Format::Json => {
            let inv = g.invariants(&inst.limits)?;
            Ok(export::to_json(&GraphExport::new(name, &g, Some(inv))))
        }
        Format::Text => {
            let inv = g.invariants(&inst.limits)?;
            let mut out = String::new();
            writeln!(out, "{name}: {} vertices, {} edges", inv.order, inv.size).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "{} -- {}", g.labels()[u], g.labels()[v]).unwrap();
            }
            writeln!(
                out,
                "components {}, diameter {}, girth {}, omega {}, gamma {}, planar {:?}",
                inv.components, inv.diameter, inv.girth, inv.clique_number, inv.domination_number, inv.planar
            )
            .unwrap();
            Ok(out)
        }
    }
}

pub fn cmd_classify(inst: &Instance, format: Format) -> Result<String> {
    let a = Analysis::new(inst.grading.clone(), inst.limits)?;
    let g = a.grading();
    let r = a.ring();
    let support: Vec<(String, usize)> =
        g.components().iter().map(|(d, c)| (g.label_degree(*d), c.len())).collect();
    let inv = a.graded_invariants()?;
    let e_faithful = g.is_sigma_faithful(g.identity());
    let re_size = a.component_view()?.re.ring().size();
    let facts: Vec<(&str, String)> = vec![
        ("ring", r.description().to_string()),
        ("order", r.size().to_string()),
        ("commutative", yes(r.is_commutative()).into()),
        ("grading", grading_summary(inst)),
        (
            "support",
            support.iter().map(|(d, n)| format!("{d}:{n}")).collect::<Vec<_>>().join(" "),
        ),
        ("identity component order", re_size.to_string()),
        ("trivial", yes(g.is_trivial()).into()),
        ("e-faithful", yes(e_faithful).into()),
        ("faithful", yes(g.is_faithful()).into()),
        ("strong", yes(g.is_strong()).into()),
        ("first strong", yes(g.is_first_strong()).into()),
        ("left ideals", a.all_ideals().len().to_string()),
        ("graded left ideals", a.graded_ideals().len().to_string()),
        ("graded local", yes(ideal::is_graded_local(a.graded_proper_ideals())).into()),
        ("graded field", yes(ideal::is_graded_field(g)).into()),
        ("graded domain", yes(ideal::is_graded_domain(g)).into()),
        ("graded reduced", yes(ideal::is_graded_reduced(g)).into()),
        ("Gr order", inv.order.to_string()),
        ("Gr connected", yes(inv.flags.connected).into()),
        ("Gr girth", inv.girth.to_string()),
        ("Gr clique number", inv.clique_number.to_string()),
        ("Gr domination number", inv.domination_number.to_string()),
    ];
    match format {
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> =
                facts.into_iter().map(|(k, v)| (k.replace(' ', "_"), v.into())).collect();
            Ok(json_text(&map))
        }
        Format::Text => {
            let mut out = String::new();
            for (k, v) in facts {
                writeln!(out, "{k:<26}{v}").unwrap();
            }
            Ok(out)
        }
        Format::Dot => Err(CliError::Usage("classify supports text and json output".into())),
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOutput {
    pub reports: Vec<TheoremReport>,
    pub text: String,
}

impl VerifyOutput {
    pub fn any_fail(&self) -> bool {
        self.reports.iter().any(|r| r.verdict == Verdict::Fail)
    }
}

fn select(a: &Analysis, ids: &[String]) -> Result<Vec<TheoremReport>> {
    if ids.is_empty() || ids.iter().any(|i| i == "all") {
        return Ok(theorems::run_all(a));
    }
    ids.iter().map(|id| theorems::run_check(id, a).map_err(CliError::from)).collect()
}

fn render_report(out: &mut String, r: &TheoremReport) {
    writeln!(out, "{:<20}{:<9}{}", r.id, r.verdict.to_string(), r.statement).unwrap();
    if r.verdict == Verdict::Skipped {
        return;
    }
    writeln!(out, "    hypotheses: {}", r.hypotheses).unwrap();
    for p in &r.parts {
        if p.detail.is_empty() {
            writeln!(out, "    {}: {}", p.name, p.verdict).unwrap();
        } else {
            writeln!(out, "    {}: {} ({})", p.name, p.verdict, p.detail).unwrap();
        }
    }
    if let Some(w) = &r.witness {
        writeln!(out, "    witness: {w}").unwrap();
    }
    for n in &r.notes {
        writeln!(out, "    note: {n}").unwrap();
    }
}

fn tally(reports: &[TheoremReport]) -> BTreeMap<Verdict, usize> {
    let mut t = BTreeMap::new();
    for r in reports {
        *t.entry(r.verdict).or_insert(0) += 1;
    }
    t
}

pub fn cmd_verify(inst: &Instance, ids: &[String], format: Format) -> Result<VerifyOutput> {
    let a = Analysis::new(inst.grading.clone(), inst.limits)?;
    let reports = select(&a, ids)?;
    let text = match format {
        Format::Json => json_text(&json!({"instance": inst.name, "reports": reports})),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "{}", header(inst)).unwrap();
            for r in &reports {
                render_report(&mut out, r);
            }
            let t = tally(&reports);
            let counts: Vec<String> = t.iter().map(|(v, n)| format!("{n} {v}")).collect();
            writeln!(out, "summary: {}", counts.join(", ")).unwrap();
            out
        }
        Format::Dot => return Err(CliError::Usage("verify supports text and json output".into())),
    };
    Ok(VerifyOutput { reports, text })
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusRow {
    pub instance: String,
    pub id: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub instances: Vec<String>,
    pub rows: Vec<CorpusRow>,
    /// `(file, message)` for instances that did not load or analyse.
    pub errors: Vec<(String, String)>,
}

impl CorpusReport {
    pub fn any_fail(&self) -> bool {
        self.rows.iter().any(|r| r.verdict == Verdict::Fail)
    }

    /// Per check id, in registry order: counts of each verdict.
    pub fn coverage(&self) -> Vec<(&'static str, BTreeMap<Verdict, usize>)> {
        theorems::registry_ids()
            .map(|id| {
                let mut t = BTreeMap::new();
                for r in self.rows.iter().filter(|r| r.id == id) {
                    *t.entry(r.verdict).or_insert(0) += 1;
                }
                (id, t)
            })
            .collect()
    }

    /// Check ids that never reached a non-vacuous PASS.
    pub fn uncovered(&self) -> Vec<&'static str> {
        self.coverage()
            .into_iter()
            .filter(|(_, t)| t.get(&Verdict::Pass).copied().unwrap_or(0) == 0)
            .map(|(id, _)| id)
            .collect()
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(json_text(&json!({
                "instances": self.instances,
                "rows": self.rows,
                "errors": self.errors,
                "uncovered": self.uncovered(),
            }))),
            Format::Text => {
                let mut out = String::new();
                for r in &self.rows {
                    write!(out, "{:<24}{:<20}{}", r.instance, r.id, r.verdict).unwrap();
                    if let Some(w) = &r.witness {
                        write!(out, "  {w}").unwrap();
                    }
                    out.push('\n');
                }
                out.push('\n');
                writeln!(out, "{:<20}{:>6}{:>9}{:>6}{:>9}", "check", "pass", "vacuous", "fail", "skipped").unwrap();
                for (id, t) in self.coverage() {
                    let n = |v| t.get(&v).copied().unwrap_or(0);
                    writeln!(
                        out,
                        "{id:<20}{:>6}{:>9}{:>6}{:>9}",
                        n(Verdict::Pass),
                        n(Verdict::Vacuous),
                        n(Verdict::Fail),
                        n(Verdict::Skipped)
                    )
                    .unwrap();
                }
                for (file, msg) in &self.errors {
                    writeln!(out, "error: {file}: {msg}").unwrap();
                }
                let fails = self.rows.iter().filter(|r| r.verdict == Verdict::Fail).count();
                writeln!(out, "instances {}, errors {}, FAIL {}", self.instances.len(), self.errors.len(), fails).unwrap();
                let uncovered = self.uncovered();
                if !uncovered.is_empty() {
                    writeln!(out, "no non-vacuous PASS: {}", uncovered.join(", ")).unwrap();
                }
                Ok(out)
            }
            Format::Dot => Err(CliError::Usage("corpus supports text and json output".into())),
        }
    }
}

fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let io = |e: std::io::Error| CliError::Io { path: dir.display().to_string(), message: e.to_string() };
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<Vec<_>>>()
        .map_err(io)?
        .into_iter()
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

/// Every `*.json` instance under `dir`, analysed in parallel and reported in
/// path order.
pub fn cmd_corpus(dir: &Path, ids: &[String]) -> Result<CorpusReport> {
    let wanted: Vec<&str> = ids.iter().map(String::as_str).filter(|&i| i != "all").collect();
    if let Some(bad) = wanted.iter().find(|i| theorems::lookup(i).is_none()) {
        return Err(ideal_graph_core::Error::UnknownTheorem((*bad).into()).into());
    }
    let files = corpus_files(dir)?;
    let results: Vec<(String, std::result::Result<Vec<TheoremReport>, String>)> = files
        .par_iter()
        .map(|path| {
            let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let res = load_instance(path)
                .map_err(CliError::from)
                .and_then(|inst| {
                    let a = Analysis::new(inst.grading, inst.limits)?;
                    let mut reports = theorems::run_all(&a);
                    if !wanted.is_empty() {
                        reports.retain(|r| wanted.contains(&r.id.as_str()));
                    }
                    Ok(reports)
                })
                .map_err(|e| e.to_string());
            (stem, res)
        })
        .collect();
    let mut report = CorpusReport { instances: Vec::new(), rows: Vec::new(), errors: Vec::new() };
    for (stem, res) in results {
        match res {
            Ok(reports) => {
                report.instances.push(stem.clone());
                report.rows.extend(reports.into_iter().map(|r| CorpusRow {
                    instance: stem.clone(),
                    id: r.id,
                    verdict: r.verdict,
                    witness: r.witness,
                }));
            }
            Err(msg) => report.errors.push((stem, msg)),
        }
    }
    Ok(report)
}
