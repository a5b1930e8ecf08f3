use std::time::Duration;

use monok_core::constructions::{bipartite_harary, harary, lower_bound_colouring, regular_bipartite, ConstructionError};
use monok_core::graph::{min_spanning_k_connected, serialize_graph, SpanningError};
use monok_core::solver::{mck_exact, SolverError};
use monok_core::verify::{is_monochromatic_k_connected_with, VerifyError, VerifyOptions};
use monok_core::{Graph, GraphFormat, SearchBudget, VerifyReport};
use serde::Serialize;

use crate::args::{BudgetArgs, CheckArgs, Cli, Command, ConstructArgs, Construction, SolveArgs, Suite, VerifyArgs};
use crate::input::{load_colouring, load_graph, write_text};
use crate::report::{envelope, render};
use crate::suites::{render_csv, render_table, run_suite, SuiteConfig};
use crate::{CliError, ExitCode, Output};

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::Solve(args) => solve(args),
        Command::Construct(args) => construct(args),
        Command::Check(args) => check(args),
    }
}

impl BudgetArgs {
    pub fn apply(&self, mut budget: SearchBudget) -> Result<SearchBudget, CliError> {
        if let Some(e) = self.budget_edges {
            budget.max_edges = e;
            budget.max_edges_shortcut = budget.max_edges_shortcut.max(e);
        }
        if let Some(n) = self.budget_nodes {
            budget.max_nodes = n;
        }
        if let Some(t) = self.timeout_sec {
            budget.time_limit = Some(
                Duration::try_from_secs_f64(t)
                    .map_err(|e| CliError::Precondition(format!("--timeout-sec {t}: {e}")))?,
            );
        }
        budget.shortcut_allowed = !self.no_shortcut;
        Ok(budget)
    }
}

fn verify_error(e: VerifyError) -> CliError {
    match e {
        VerifyError::PathLimit { .. } => CliError::Budget(e.to_string()),
        _ => CliError::Precondition(e.to_string()),
    }
}

fn solver_error(e: SolverError) -> CliError {
    match e {
        SolverError::BudgetExhausted(m) => CliError::Budget(m),
        SolverError::Verify(v) => verify_error(v),
        other => CliError::Precondition(other.to_string()),
    }
}

fn construction_error(e: ConstructionError) -> CliError {
    CliError::Precondition(e.to_string())
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    n: usize,
    edges: usize,
    colours: usize,
    #[serde(flatten)]
    report: &'a VerifyReport,
}

fn verify(args: VerifyArgs) -> Result<Output, CliError> {
    let g = load_graph(&args.input.graph, args.input.format.map(Into::into))?;
    let phi = load_colouring(&g, &args.colouring)?;
    let opts = VerifyOptions { with_witnesses: args.witnesses, ..VerifyOptions::default() };
    let report = is_monochromatic_k_connected_with(&g, &phi, args.k, &opts).map_err(verify_error)?;
    let out = VerifyOutput { n: g.n(), edges: g.edge_count(), colours: phi.colour_count(), report: &report };
    Ok(Output {
        stdout: render(&envelope("verify", out)),
        code: if report.ok { ExitCode::Ok } else { ExitCode::Failed },
    })
}

fn solve(args: SolveArgs) -> Result<Output, CliError> {
    let g = load_graph(&args.input.graph, args.input.format.map(Into::into))?;
    let budget = args.budget.apply(SearchBudget::default())?;
    let report = mck_exact(&g, args.k, &budget).map_err(solver_error)?;
    if let (Some(path), Some(witness)) = (&args.witness_out, &report.witness) {
        write_text(path, &witness.to_csv(&g))?;
    }
    Ok(Output {
        stdout: render(&envelope("solve", report.record(&g))),
        code: if report.budget_exceeded { ExitCode::Budget } else { ExitCode::Ok },
    })
}

fn graph_text(g: &Graph, format: GraphFormat) -> String {
    let mut text = serialize_graph(g, format);
    if !text.ends_with('\n') {
        text.push('\n');
    }
    text
}

fn construct(args: ConstructArgs) -> Result<Output, CliError> {
    let format: GraphFormat = args.out_format.into();
    let graph = match args.kind {
        Construction::Harary { n, k } => harary(n, k).map_err(construction_error)?,
        Construction::Regbip { s, k } => regular_bipartite(s, k).map_err(construction_error)?,
        Construction::Bipharary { s, t, k } => bipartite_harary(s, t, k).map_err(construction_error)?,
        Construction::Lowerbound { input, subgraph, k, colouring_out } => {
            let g = load_graph(&input.graph, input.format.map(Into::into))?;
            let h = match subgraph {
                Some(path) => load_graph(&path, input.format.map(Into::into))?,
                None => min_spanning_k_connected(&g, k, &SearchBudget::default().spanning).map_err(|e| match e {
                    SpanningError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
                    _ => CliError::Precondition(e.to_string()),
                })?,
            };
            let phi = lower_bound_colouring(&g, &h, k).map_err(construction_error)?;
            let mut stdout = graph_text(&g, format);
            match colouring_out {
                Some(path) => write_text(&path, &phi.to_csv(&g))?,
                None => stdout.push_str(&phi.to_csv(&g)),
            }
            return Ok(Output { stdout, code: ExitCode::Ok });
        }
    };
    Ok(Output { stdout: graph_text(&graph, format), code: ExitCode::Ok })
}

fn check(args: CheckArgs) -> Result<Output, CliError> {
    let mut cfg = SuiteConfig::defaults(args.suite);
    if let Some(k) = args.k {
        cfg.k = k.0;
    }
    if let Some(n) = args.n {
        cfg.n = n.0;
    }
    if let Some(t) = args.t {
        cfg.t = t.0;
    }
    if let Some(i) = args.instances {
        cfg.instances = i;
    }
    cfg.seed = args.seed;
    cfg.budget = args.budget.apply(cfg.budget)?;
    if args.suite != Suite::Superpath && *cfg.k.start() < 2 {
        return Err(CliError::Precondition(format!("{} needs k >= 2", args.suite.id())));
    }

    let report = match args.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| CliError::Precondition(e.to_string()))?
            .install(|| run_suite(&cfg)),
        None => run_suite(&cfg),
    };
    let json = render(&envelope("check", &report));
    if let Some(path) = &args.json_out {
        write_text(path, &json)?;
    }
    if let Some(path) = &args.csv_out {
        let csv = render_csv(&report).map_err(|e| CliError::Precondition(e.to_string()))?;
        write_text(path, &csv)?;
    }
    let stdout = if args.json { json } else { render_table(&report) };
    Ok(Output { stdout, code: report.exit_code() })
}
