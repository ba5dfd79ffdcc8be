//! Exhaustive checks over every labeled graph (edge subset) or every poset on
//! `1..=n`, for each `n` up to the requested maximum.

use chromatic_core::chromatic::{
    verify_chromatic_polynomial, verify_e_sink_identity, verify_hook_symmetric, verify_hook_t,
    CheckReport,
};
use chromatic_core::combinatorics::Permutation;
use chromatic_core::graph::{Graph, Labeling};
use chromatic_core::poset::{verify_hook_proposition, Poset};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::{describe_graph, describe_labeling, describe_poset, GraphRecord, PosetRecord};
use crate::report::{CellValue, Outcome, RouteValue, RunReport, Status};
use crate::table::Table;
use crate::{Check, InputError};

pub const SWEEP_MAX_N: usize = 7;
/// The poset universe grows past six million orders at seven elements.
pub const POSET_SWEEP_MAX_N: usize = 6;

pub struct SweepOptions {
    pub n_max: usize,
    pub checks: Vec<Check>,
    pub jobs: Option<usize>,
    pub keep_going: bool,
    pub all_labelings: bool,
}

#[derive(Serialize)]
struct SweepInputs {
    n_max: usize,
    checks: Vec<Check>,
    all_labelings: bool,
    keep_going: bool,
}

#[derive(Serialize)]
struct RowRecord {
    check: Check,
    n: usize,
    cases: u64,
    checked: u64,
    passed: u64,
}

#[derive(Serialize)]
struct Counterexample {
    check: Check,
    n: usize,
    /// Position in the enumeration order of the row's universe.
    case: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<GraphRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labeling: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    poset: Option<PosetRecord>,
    k: usize,
    values: Vec<RouteValue>,
    #[serde(skip)]
    text: String,
}

#[derive(Serialize)]
struct SweepOutputs {
    rows: Vec<RowRecord>,
    failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<Counterexample>,
}

enum Subject<'a> {
    Graph(&'a Graph, Option<&'a Labeling>),
    Poset(&'a Poset),
}

fn mismatch<T: CellValue>(
    check: Check,
    n: usize,
    case: u64,
    subject: Subject<'_>,
    report: &CheckReport<T>,
) -> Option<Counterexample> {
    let row = report.first_mismatch()?;
    let values: Vec<RouteValue> = report
        .routes
        .iter()
        .zip(&row.values)
        .map(|(&route, v)| RouteValue { route, value: v.json() })
        .collect();
    let value_text: Vec<String> = report
        .routes
        .iter()
        .zip(&row.values)
        .map(|(route, v)| format!("{route} = {}", v.text()))
        .collect();
    let mut c = Counterexample {
        check,
        n,
        case,
        graph: None,
        labeling: None,
        poset: None,
        k: row.k,
        values,
        text: String::new(),
    };
    let mut head = Table::new();
    head.row(["counterexample", check.name()]);
    match subject {
        Subject::Graph(g, zeta) => {
            head.row(["graph", &describe_graph(g)]);
            c.graph = Some(g.into());
            if let Some(zeta) = zeta {
                head.row(["labeling", &describe_labeling(zeta)]);
                c.labeling = Some(zeta.labels().to_vec());
            }
        }
        Subject::Poset(p) => {
            head.row(["poset", &describe_poset(p)]);
            c.poset = Some(p.into());
        }
    }
    head.row(["k", &row.k.to_string()]);
    head.row(["values", &value_text.join(", ")]);
    c.text = head.render(0);
    Some(c)
}

fn graph_count(n: usize) -> u64 {
    1u64 << Graph::pair_count(n)
}

/// Counterexample for one case of a row, if it fails.
fn run_case(check: Check, n: usize, case: u64, labelings: &[Labeling], posets: &[Poset]) -> Option<Counterexample> {
    match check {
        Check::Ptableaux => {
            let p = &posets[case as usize];
            mismatch(check, n, case, Subject::Poset(p), &verify_hook_proposition(p))
        }
        Check::HookT => {
            let per_graph = labelings.len() as u64;
            let g = Graph::from_edge_mask(n, case / per_graph);
            let zeta = &labelings[(case % per_graph) as usize];
            let report = verify_hook_t(&g, zeta).expect("labeling matches graph size");
            mismatch(check, n, case, Subject::Graph(&g, Some(zeta)), &report)
        }
        _ => {
            let g = Graph::from_edge_mask(n, case);
            let subject = Subject::Graph(&g, None);
            match check {
                Check::Hook1 => mismatch(check, n, case, subject, &verify_hook_symmetric(&g)),
                Check::ESink => mismatch(check, n, case, subject, &verify_e_sink_identity(&g)),
                Check::Chrompoly => {
                    mismatch(check, n, case, subject, &verify_chromatic_polynomial(&g, n))
                }
                Check::HookT | Check::Ptableaux => unreachable!(),
            }
        }
    }
}

pub fn sweep(opts: &SweepOptions) -> Result<Outcome, InputError> {
    if opts.n_max == 0 || opts.n_max > SWEEP_MAX_N {
        return Err(InputError(format!(
            "--n-max must be between 1 and {SWEEP_MAX_N}, got {}",
            opts.n_max
        )));
    }
    let mut checks: Vec<Check> = Vec::new();
    for &c in &opts.checks {
        if !checks.contains(&c) {
            checks.push(c);
        }
    }
    if checks.contains(&Check::Ptableaux) && opts.n_max > POSET_SWEEP_MAX_N {
        return Err(InputError(format!(
            "the ptableaux sweep is limited to --n-max {POSET_SWEEP_MAX_N}"
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.unwrap_or(0))
        .build()
        .map_err(|e| InputError(format!("--jobs: {e}")))?;
    let (rows, failures, counterexample) = pool.install(|| run_rows(opts, &checks));

    let status = Status::from_pass(failures == 0);
    let mut head = Table::new();
    head.row(["n-max", &opts.n_max.to_string()]).row([
        "checks",
        &checks.iter().map(|c| c.name()).collect::<Vec<_>>().join(","),
    ]);
    if checks.contains(&Check::HookT) {
        head.row(["labelings", if opts.all_labelings { "all" } else { "identity" }]);
    }
    let mut table = Table::new();
    table.row(["check", "n", "cases", "checked", "passed"]);
    for r in &rows {
        table.row([
            r.check.name().to_owned(),
            r.n.to_string(),
            r.cases.to_string(),
            r.checked.to_string(),
            r.passed.to_string(),
        ]);
    }
    let mut text = head.render(0) + &table.render(2);
    if let Some(c) = &counterexample {
        text += &c.text;
        if opts.keep_going {
            text += &format!("failures  {failures}\n");
        }
    }
    text += &format!("status  {}\n", status.word());

    let report = RunReport {
        command: "sweep",
        inputs: SweepInputs {
            n_max: opts.n_max,
            checks,
            all_labelings: opts.all_labelings,
            keep_going: opts.keep_going,
        },
        outputs: SweepOutputs {
            rows,
            failures,
            counterexample,
        },
        status,
    };
    Ok(Outcome::new(&report, text))
}

fn run_rows(opts: &SweepOptions, checks: &[Check]) -> (Vec<RowRecord>, u64, Option<Counterexample>) {
    let mut rows = Vec::new();
    let mut failures = 0u64;
    let mut first: Option<Counterexample> = None;
    for &check in checks {
        for n in 1..=opts.n_max {
            let posets = if check == Check::Ptableaux { Poset::all(n) } else { Vec::new() };
            let labelings: Vec<Labeling> = if check == Check::HookT && opts.all_labelings {
                Permutation::all(n)
                    .into_iter()
                    .map(|p| Labeling::new(p.images().to_vec()).expect("permutations are labelings"))
                    .collect()
            } else {
                vec![Labeling::identity(n)]
            };
            let cases = match check {
                Check::Ptableaux => posets.len() as u64,
                Check::HookT => graph_count(n) * labelings.len() as u64,
                _ => graph_count(n),
            };
            let case = |i: u64| run_case(check, n, i, &labelings, &posets);

            let (row_failures, found) = if opts.keep_going {
                (0..cases)
                    .into_par_iter()
                    .filter_map(case)
                    .map(|c| (1u64, c))
                    .reduce_with(|a, b| {
                        let count = a.0 + b.0;
                        (count, if a.1.case <= b.1.case { a.1 } else { b.1 })
                    })
                    .map_or((0, None), |(count, c)| (count, Some(c)))
            } else {
                let found = (0..cases).into_par_iter().find_map_first(case);
                (u64::from(found.is_some()), found)
            };
            let checked = match (&found, opts.keep_going) {
                (Some(c), false) => c.case + 1,
                _ => cases,
            };
            rows.push(RowRecord {
                check,
                n,
                cases,
                checked,
                passed: checked - row_failures,
            });
            failures += row_failures;
            if first.is_none() {
                first = found;
            }
            if failures > 0 && !opts.keep_going {
                return (rows, failures, first);
            }
        }
    }
    (rows, failures, first)
}
