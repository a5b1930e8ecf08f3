//! Reproduction sweeps: closed-form theorems checked against exact search,
//! the super-path inequality under fuzzing, and conjecture evidence.

use std::ops::RangeInclusive;

use monok_core::arith::{binomial2, ceil_div};
use monok_core::colouring::CSV_HEADER;
use monok_core::constructions::{bipartite_harary, harary};
use monok_core::graph::{serialize_graph, GraphFormat};
use monok_core::random::{gnp, k_connected_gnp, rng, uniform_colouring, with_random_edges, InstanceRng};
use monok_core::solver::{conjectured_mck, h_k_value, mck_exact, Provenance, SolverError};
use monok_core::verify::{check_superpath_bound, VerifyError};
use monok_core::{EdgeColouring, Graph, SearchBudget};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::args::Suite;
use crate::ExitCode;

/// Ranges and sizes for one suite run.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub k: RangeInclusive<usize>,
    /// Vertex counts, or the smaller class size for bipartite suites.
    pub n: RangeInclusive<usize>,
    /// Larger class size for bipartite suites.
    pub t: RangeInclusive<usize>,
    /// Fuzz instances, or random supergraphs per shape.
    pub instances: usize,
    pub seed: u64,
    pub budget: SearchBudget,
}

impl SuiteConfig {
    pub fn defaults(suite: Suite) -> Self {
        let (k, n, t, instances) = match suite {
            Suite::SmallK => (2..=3, 3..=7, 0..=0, 2),
            Suite::BipSmallK => (2..=3, 2..=3, 2..=4, 1),
            Suite::CompleteGraphs => (2..=4, 3..=5, 0..=0, 0),
            Suite::CompleteBipartite => (2..=3, 2..=3, 2..=4, 0),
            Suite::Superpath => (0..=0, 3..=8, 0..=0, 1000),
            Suite::Conjecture => (2..=2, 4..=6, 0..=0, 3),
        };
        SuiteConfig { suite, k, n, t, instances, seed: 1, budget: SearchBudget::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    BudgetExceeded,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::BudgetExceeded => "budget-exceeded",
        }
    }
}

/// How `computed` must relate to `expected` for a match.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equal,
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub value: i64,
    pub formula: &'static str,
    pub relation: Relation,
}

/// Graph and colouring reproducing a mismatch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub colouring_csv: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub instance: String,
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub k: Option<usize>,
    pub expected: Expected,
    pub computed: Option<i64>,
    pub status: Status,
    /// How the computed value was obtained.
    pub method: Option<String>,
    /// Canonical labels of the witness colouring, in edge order.
    pub witness: Option<String>,
    pub counterexample: Option<Counterexample>,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub budget_exceeded: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Parameters {
    pub k: [usize; 2],
    pub n: [usize; 2],
    pub t: [usize; 2],
    pub instances: usize,
    pub seed: u64,
    pub budget_edges: usize,
    pub budget_nodes: u64,
    pub shortcut: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: &'static str,
    /// `theorem`, `inequality` or `evidence`; evidence runs never fail.
    pub kind: &'static str,
    pub parameters: Parameters,
    pub records: Vec<InstanceRecord>,
    pub summary: Summary,
}

impl CheckReport {
    pub fn exit_code(&self) -> ExitCode {
        if self.summary.mismatched > 0 && self.kind != "evidence" {
            ExitCode::Failed
        } else if self.summary.budget_exceeded > 0 {
            ExitCode::Budget
        } else {
            ExitCode::Ok
        }
    }
}

enum Task {
    Mck { graph: Graph, k: usize, expected: Expected },
    Superpath { graph: Graph, colouring: EdgeColouring },
    Conjecture { graph: Graph, k: usize },
}

struct Instance {
    name: String,
    task: Task,
}

impl Instance {
    fn graph(&self) -> &Graph {
        match &self.task {
            Task::Mck { graph, .. } | Task::Superpath { graph, .. } | Task::Conjecture { graph, .. } => graph,
        }
    }
}

fn g6(g: &Graph) -> String {
    serialize_graph(g, GraphFormat::Graph6)
}

fn labels_string(phi: &EdgeColouring) -> String {
    phi.labels().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn csv(g: &Graph, phi: &EdgeColouring) -> String {
    debug_assert!(phi.to_csv(g).starts_with(CSV_HEADER));
    phi.to_csv(g)
}

fn intersect(a: &RangeInclusive<usize>, lo: usize, hi: usize) -> RangeInclusive<usize> {
    (*a.start()).max(lo)..=(*a.end()).min(hi)
}

/// Extra edges to add to a base graph while staying inside the full-search
/// budget when possible.
fn extra_edges(rng: &mut InstanceRng, base_edges: usize, budget: &SearchBudget) -> usize {
    let room = budget.max_edges.saturating_sub(base_edges).clamp(1, 3);
    rng.gen_range(1..=room)
}

fn complete_graph_formula(n: usize, k: usize) -> Expected {
    Expected {
        value: (binomial2(n) + 1 - ceil_div(k * n, 2)) as i64,
        formula: "C(n,2) - ceil(kn/2) + 1",
        relation: Relation::Equal,
    }
}

fn min_edge_formula(g: &Graph, k: usize) -> Expected {
    Expected {
        value: g.edge_count() as i64 + 1 - ceil_div(k * g.n(), 2) as i64,
        formula: "e(G) - ceil(kn/2) + 1",
        relation: Relation::Equal,
    }
}

fn bipartite_formula(g: &Graph, k: usize, t: usize, formula: &'static str) -> Expected {
    Expected { value: g.edge_count() as i64 + 1 - (k * t) as i64, formula, relation: Relation::Equal }
}

/// Whether the closed form for bipartite `G ⊇ H_{s,t,k}` is a theorem.
fn bipartite_theorem_applies(s: usize, t: usize, k: usize) -> bool {
    (2..=3).contains(&k) || (s == t && (2..=5).contains(&k))
}

fn instances(cfg: &SuiteConfig) -> Vec<Instance> {
    let mut rng = rng(cfg.seed);
    let mut out = Vec::new();
    match cfg.suite {
        Suite::CompleteGraphs => {
            for k in intersect(&cfg.k, 2, 5) {
                for n in intersect(&cfg.n, k + 1, usize::MAX) {
                    out.push(Instance {
                        name: format!("K_{n}"),
                        task: Task::Mck { graph: Graph::complete(n), k, expected: complete_graph_formula(n, k) },
                    });
                }
            }
        }
        Suite::CompleteBipartite => {
            for k in intersect(&cfg.k, 2, usize::MAX) {
                for s in intersect(&cfg.n, k, usize::MAX) {
                    for t in intersect(&cfg.t, s, usize::MAX) {
                        if !(s == k || bipartite_theorem_applies(s, t, k)) {
                            continue;
                        }
                        let graph = Graph::complete_bipartite(s, t);
                        let expected = bipartite_formula(&graph, k, t, "st - kt + 1");
                        out.push(Instance { name: format!("K_{s},{t}"), task: Task::Mck { graph, k, expected } });
                    }
                }
            }
        }
        Suite::SmallK => {
            for k in intersect(&cfg.k, 2, 5) {
                for n in intersect(&cfg.n, k + 1, usize::MAX) {
                    let base = harary(n, k).expect("n > k >= 2");
                    let mut push = |name: String, graph: Graph| {
                        let expected = min_edge_formula(&graph, k);
                        out.push(Instance { name, task: Task::Mck { graph, k, expected } });
                    };
                    push(format!("harary({n},{k})"), base.clone());
                    for _ in 0..cfg.instances {
                        let extra = extra_edges(&mut rng, base.edge_count(), &cfg.budget);
                        let g = with_random_edges(&mut rng, &base, extra, |_, _| true);
                        if g.edge_count() > base.edge_count() {
                            push(format!("harary({n},{k})+{}", g.edge_count() - base.edge_count()), g);
                        }
                    }
                }
            }
        }
        Suite::BipSmallK => {
            for k in intersect(&cfg.k, 2, 5) {
                for s in intersect(&cfg.n, k, usize::MAX) {
                    for t in intersect(&cfg.t, s, usize::MAX) {
                        if !bipartite_theorem_applies(s, t, k) {
                            continue;
                        }
                        let base = bipartite_harary(s, t, k).expect("t >= s >= k >= 2");
                        let across = move |u: usize, v: usize| (u < s) != (v < s);
                        let mut push = |name: String, graph: Graph| {
                            let expected = bipartite_formula(&graph, k, t, "e(G) - kt + 1");
                            out.push(Instance { name, task: Task::Mck { graph, k, expected } });
                        };
                        let complete = Graph::complete_bipartite(s, t);
                        if complete == base {
                            push(format!("K_{s},{t}"), complete);
                        } else {
                            push(format!("H({s},{t},{k})"), base.clone());
                            push(format!("K_{s},{t}"), complete);
                        }
                        for _ in 0..cfg.instances {
                            let extra = extra_edges(&mut rng, base.edge_count(), &cfg.budget);
                            let g = with_random_edges(&mut rng, &base, extra, across);
                            if g.edge_count() > base.edge_count() && g.edge_count() < s * t {
                                push(format!("H({s},{t},{k})+{}", g.edge_count() - base.edge_count()), g);
                            }
                        }
                    }
                }
            }
        }
        Suite::Superpath => {
            let sizes = intersect(&cfg.n, 3, usize::MAX);
            for _ in 0..cfg.instances {
                let n = rng.gen_range(sizes.clone());
                let p = [0.4, 0.6, 0.8][rng.gen_range(0..3)];
                let graph = gnp(&mut rng, n, p);
                let labels = ceil_div(graph.edge_count(), 3) as u64;
                let colouring = uniform_colouring(&mut rng, &graph, labels);
                out.push(Instance { name: format!("G({n},{p})"), task: Task::Superpath { graph, colouring } });
            }
        }
        Suite::Conjecture => {
            for k in intersect(&cfg.k, 2, usize::MAX) {
                for n in intersect(&cfg.n, k + 1, usize::MAX) {
                    for _ in 0..cfg.instances {
                        let p = rng.gen_range(0.5..0.9);
                        let Some(graph) = k_connected_gnp(&mut rng, n, p, k, 200) else { continue };
                        out.push(Instance { name: format!("G({n},{p:.2})"), task: Task::Conjecture { graph, k } });
                    }
                }
            }
        }
    }
    out
}

fn is_budget(e: &SolverError) -> bool {
    matches!(e, SolverError::BudgetExhausted(_) | SolverError::Verify(VerifyError::PathLimit { .. }))
}

fn provenance_name(p: Provenance) -> String {
    serde_json::to_value(p).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
}

fn evaluate(index: usize, inst: &Instance, budget: &SearchBudget) -> InstanceRecord {
    let g = inst.graph();
    let mut rec = InstanceRecord {
        index,
        instance: inst.name.clone(),
        graph6: g6(g),
        n: g.n(),
        edges: g.edge_count(),
        k: None,
        expected: Expected { value: 0, formula: "", relation: Relation::Equal },
        computed: None,
        status: Status::BudgetExceeded,
        method: None,
        witness: None,
        counterexample: None,
        detail: None,
    };
    match &inst.task {
        Task::Mck { graph, k, expected } => {
            rec.k = Some(*k);
            rec.expected = expected.clone();
            match mck_exact(graph, *k, budget) {
                Ok(report) => match report.exact {
                    Some(exact) => {
                        let witness = report.witness.expect("exact reports carry a witness");
                        rec.computed = Some(exact.value as i64);
                        rec.method = Some(provenance_name(exact.provenance));
                        rec.witness = Some(labels_string(&witness));
                        rec.status = if exact.value as i64 == expected.value { Status::Match } else { Status::Mismatch };
                        if rec.status == Status::Mismatch {
                            rec.counterexample =
                                Some(Counterexample { graph6: g6(graph), colouring_csv: Some(csv(graph, &witness)) });
                        }
                    }
                    None => {
                        rec.detail = Some(format!("bounds {}..={}", report.lower.value, report.upper.value));
                    }
                },
                Err(e) if is_budget(&e) => rec.detail = Some(e.to_string()),
                Err(e) => {
                    rec.status = Status::Mismatch;
                    rec.detail = Some(e.to_string());
                    rec.counterexample = Some(Counterexample { graph6: g6(graph), colouring_csv: None });
                }
            }
        }
        Task::Superpath { graph, colouring } => {
            rec.expected.formula = "ceil(w(f)/(n-2)) + r - 1 <= e(G)";
            rec.expected.relation = Relation::AtLeast;
            rec.witness = Some(labels_string(colouring));
            match check_superpath_bound(graph, colouring) {
                Ok(rep) => {
                    rec.expected.value = rep.rhs;
                    rec.computed = Some(rep.lhs);
                    rec.method = Some(format!("w={} r={}", rep.weight, rep.colours));
                    rec.status = if rep.holds { Status::Match } else { Status::Mismatch };
                    if !rep.holds {
                        rec.counterexample =
                            Some(Counterexample { graph6: g6(graph), colouring_csv: Some(csv(graph, colouring)) });
                    }
                }
                Err(e @ VerifyError::PathLimit { .. }) => rec.detail = Some(e.to_string()),
                Err(e) => {
                    rec.status = Status::Mismatch;
                    rec.detail = Some(e.to_string());
                }
            }
        }
        Task::Conjecture { graph, k } => {
            rec.k = Some(*k);
            rec.expected.formula = "e(G) - e(H) + h_k(G)";
            let outcome = h_k_value(graph, *k, budget).and_then(|hk| Ok((hk.clone(), mck_exact(graph, *k, budget)?)));
            match outcome {
                Ok((hk, report)) => {
                    rec.expected.value = conjectured_mck(graph, &hk) as i64;
                    rec.method = Some(format!("h_k={} e(H)={} subgraphs={}", hk.value, hk.subgraph_edges, hk.subgraphs));
                    match report.exact {
                        Some(exact) => {
                            rec.computed = Some(exact.value as i64);
                            rec.witness = report.witness.as_ref().map(labels_string);
                            rec.status =
                                if exact.value as i64 == rec.expected.value { Status::Match } else { Status::Mismatch };
                        }
                        None => rec.detail = Some(format!("bounds {}..={}", report.lower.value, report.upper.value)),
                    }
                }
                Err(e) if is_budget(&e) => rec.detail = Some(e.to_string()),
                Err(e) => {
                    rec.status = Status::Mismatch;
                    rec.detail = Some(e.to_string());
                }
            }
        }
    }
    rec
}

/// Runs every instance, in parallel, keeping instance order in the report.
pub fn run_suite(cfg: &SuiteConfig) -> CheckReport {
    let insts = instances(cfg);
    let records: Vec<InstanceRecord> =
        insts.par_iter().enumerate().map(|(i, inst)| evaluate(i, inst, &cfg.budget)).collect();
    let mut summary = Summary { total: records.len(), ..Summary::default() };
    for r in &records {
        match r.status {
            Status::Match => summary.matched += 1,
            Status::Mismatch => summary.mismatched += 1,
            Status::BudgetExceeded => summary.budget_exceeded += 1,
        }
    }
    let kind = match cfg.suite {
        Suite::Conjecture => "evidence",
        Suite::Superpath => "inequality",
        _ => "theorem",
    };
    CheckReport {
        suite: cfg.suite.id(),
        kind,
        parameters: Parameters {
            k: [*cfg.k.start(), *cfg.k.end()],
            n: [*cfg.n.start(), *cfg.n.end()],
            t: [*cfg.t.start(), *cfg.t.end()],
            instances: cfg.instances,
            seed: cfg.seed,
            budget_edges: cfg.budget.max_edges,
            budget_nodes: cfg.budget.max_nodes,
            shortcut: cfg.budget.shortcut_allowed,
        },
        records,
        summary,
    }
}

const COLUMNS: [&str; 9] = ["#", "instance", "n", "e", "k", "expected", "computed", "status", "method"];

fn row(r: &InstanceRecord, evidence: bool) -> [String; 9] {
    let rel = match r.expected.relation {
        Relation::Equal => "",
        Relation::AtLeast => ">=",
    };
    let status = match (evidence, r.status) {
        (true, Status::Match) => "consistent",
        (true, Status::Mismatch) => "counterexample",
        (_, s) => s.as_str(),
    };
    [
        r.index.to_string(),
        r.instance.clone(),
        r.n.to_string(),
        r.edges.to_string(),
        r.k.map_or_else(|| "-".into(), |k| k.to_string()),
        format!("{rel}{}", r.expected.value),
        r.computed.map_or_else(|| r.detail.clone().unwrap_or_else(|| "-".into()), |c| c.to_string()),
        status.to_owned(),
        r.method.clone().unwrap_or_default(),
    ]
}

/// Aligned plain-text table with a summary line.
pub fn render_table(report: &CheckReport) -> String {
    let evidence = report.kind == "evidence";
    let rows: Vec<[String; 9]> = report.records.iter().map(|r| row(r, evidence)).collect();
    let mut widths = COLUMNS.map(str::len);
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[&str]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_owned() + "\n"
    };
    let mut out = format!("suite {} ({})\n", report.suite, report.kind);
    out += &line(&COLUMNS);
    out += &line(&widths.map(|w| "-".repeat(w)).iter().map(String::as_str).collect::<Vec<_>>());
    for r in &rows {
        out += &line(&r.iter().map(String::as_str).collect::<Vec<_>>());
    }
    let s = report.summary;
    let label = if evidence { "evidence only, not a proof" } else { report.kind };
    out += &format!(
        "{} instances: {} match, {} mismatch, {} budget-exceeded ({label})\n",
        s.total, s.matched, s.mismatched, s.budget_exceeded
    );
    out
}

pub fn render_csv(report: &CheckReport) -> Result<String, csv::Error> {
    let evidence = report.kind == "evidence";
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = COLUMNS.to_vec();
    header.push("graph6");
    w.write_record(&header)?;
    for r in &report.records {
        let mut cells = row(r, evidence).to_vec();
        cells.push(r.graph6.clone());
        w.write_record(&cells)?;
    }
    let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("cells are UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(suite: Suite, edit: impl FnOnce(&mut SuiteConfig)) -> CheckReport {
        let mut cfg = SuiteConfig::defaults(suite);
        edit(&mut cfg);
        run_suite(&cfg)
    }

    #[test]
    fn complete_graph_suite_matches() {
        let rep = run(Suite::CompleteGraphs, |c| c.budget.shortcut_allowed = false);
        let got: Vec<_> = rep.records.iter().map(|r| (r.instance.as_str(), r.k.unwrap(), r.computed)).collect();
        assert_eq!(
            got,
            [
                ("K_3", 2, Some(1)),
                ("K_4", 2, Some(3)),
                ("K_5", 2, Some(6)),
                ("K_4", 3, Some(1)),
                ("K_5", 3, Some(3)),
                ("K_5", 4, Some(1)),
            ]
        );
        assert_eq!(rep.summary.matched, 6);
        assert_eq!(rep.exit_code(), ExitCode::Ok);
    }

    #[test]
    fn bipartite_suite_example() {
        let rep = run(Suite::BipSmallK, |c| {
            c.k = 2..=2;
            c.instances = 0;
        });
        let complete: Vec<_> = rep
            .records
            .iter()
            .filter(|r| ["K_2,2", "K_2,3", "K_3,3"].contains(&r.instance.as_str()))
            .map(|r| (r.instance.as_str(), r.computed))
            .collect();
        assert_eq!(complete, [("K_2,2", Some(1)), ("K_2,3", Some(1)), ("K_3,3", Some(4))]);
        assert_eq!(rep.summary.mismatched, 0);
    }

    #[test]
    fn superpath_fuzz_is_seeded() {
        let a = run(Suite::Superpath, |c| c.instances = 30);
        let b = run(Suite::Superpath, |c| c.instances = 30);
        assert_eq!(a.records, b.records);
        assert_eq!(a.summary.matched, 30);
        let c = run(Suite::Superpath, |c| {
            c.instances = 30;
            c.seed = 2;
        });
        assert_ne!(a.records, c.records);
    }

    #[test]
    fn budget_exhaustion_is_reported_per_instance() {
        let rep = run(Suite::CompleteGraphs, |c| {
            c.k = 2..=2;
            c.n = 7..=7;
        });
        assert_eq!(rep.records[0].status, Status::BudgetExceeded);
        assert_eq!(rep.records[0].detail.as_deref(), Some("bounds 15..=17"));
        assert_eq!(rep.exit_code(), ExitCode::Budget);
    }

    #[test]
    fn tables_align_and_csv_round_trips() {
        let rep = run(Suite::CompleteGraphs, |c| c.k = 4..=4);
        let table = render_table(&rep);
        assert!(table.contains("K_5"));
        assert!(table.ends_with("1 instances: 1 match, 0 mismatch, 0 budget-exceeded (theorem)\n"));
        let csv = render_csv(&rep).unwrap();
        let mut reader = csv::Reader::from_reader(csv.as_bytes());
        let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
        assert_eq!(&rows[0][1], "K_5");
        assert_eq!(&rows[0][9], "D~{");
    }

    #[test]
    fn evidence_never_fails() {
        let rep = run(Suite::Conjecture, |c| {
            c.n = 4..=5;
            c.instances = 2;
        });
        assert_eq!(rep.kind, "evidence");
        assert_ne!(rep.exit_code(), ExitCode::Failed);
        assert!(render_table(&rep).contains("evidence only"));
    }
}
