use std::collections::BTreeSet;
use std::path::Path;

use chromatic_core::chromatic::{
    cqf_fundamental_via_orientations, cqf_monomial, csf_monomial, dual_linear_extensions,
    sink_minimal_increasing_labeling, verify_chromatic_polynomial, verify_e_sink_identity,
    verify_hook_symmetric, verify_hook_t, CheckReport,
};
use chromatic_core::combinatorics::Composition;
use chromatic_core::graph::Graph;
use chromatic_core::poset::verify_hook_proposition;
use chromatic_core::symfunc::{
    m_to_e, m_to_s, qsym_m_to_f, Basis, QuasisymmetricF, SymmetricFunction, SymmetricFunctionM,
};
use chromatic_core::tpoly::TPoly;
use num_bigint::BigInt;
use serde::Serialize;

use crate::input::{
    describe_graph, describe_labeling, describe_poset, load_graph, load_poset, GraphRecord,
    PosetRecord,
};
use crate::report::{rows_json, rows_text, CellValue, Outcome, RowRecord, RunReport, Status};
use crate::table::Table;
use crate::{BasisArg, Check, InputError};

fn core_error(e: chromatic_core::Error) -> InputError {
    InputError(e.to_string())
}

#[derive(Serialize)]
struct GraphInputs {
    graph: GraphRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    labeling: Option<Vec<usize>>,
}

#[derive(Serialize)]
#[serde(bound = "")]
struct ExpandOutputs<'a, B: Basis> {
    expansion: &'a SymmetricFunction<B>,
}

pub fn expand(path: &Path, basis: BasisArg, max_n: usize) -> Result<Outcome, InputError> {
    let loaded = load_graph(path, None, max_n)?;
    let m = csf_monomial(&loaded.graph);
    Ok(match basis {
        BasisArg::M => expand_outcome(&loaded.graph, &m),
        BasisArg::E => expand_outcome(&loaded.graph, &m_to_e(&m)),
        BasisArg::S => expand_outcome(&loaded.graph, &m_to_s(&m)),
    })
}

fn expand_outcome<B: Basis>(g: &Graph, f: &SymmetricFunction<B>) -> Outcome {
    let mut head = Table::new();
    head.row(["graph", &describe_graph(g)])
        .row(["basis", B::LETTER])
        .row(["terms", &f.len().to_string()]);
    let mut terms = Table::new();
    for (lambda, c) in f.terms() {
        terms.row([lambda.to_string(), c.to_string()]);
    }
    let text = format!("{}{}\n{f}\n", head.render(0), terms.render(2));
    let report = RunReport {
        command: "expand",
        inputs: GraphInputs {
            graph: g.into(),
            labeling: None,
        },
        outputs: ExpandOutputs { expansion: f },
        status: Status::Pass,
    };
    Outcome::new(&report, text)
}

#[derive(Serialize)]
struct DiffRecord {
    index: Vec<usize>,
    orientation_route: serde_json::Value,
    coloring_route: serde_json::Value,
}

#[derive(Serialize)]
struct TEvalRecord {
    t: String,
    expansion: QuasisymmetricF,
    symmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    monomial: Option<SymmetricFunctionM>,
}

#[derive(Serialize)]
struct OrientationRecord {
    arcs: Vec<[usize; 2]>,
    des: usize,
    sinks: usize,
    omega: Vec<usize>,
    extensions: Vec<String>,
}

#[derive(Serialize)]
struct CqfOutputs {
    orientation_route: QuasisymmetricF,
    coloring_route: QuasisymmetricF,
    diff: Vec<DiffRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_eval: Option<TEvalRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orientations: Option<Vec<OrientationRecord>>,
}

pub fn cqf(
    path: &Path,
    labeling: Option<&str>,
    t_eval: Option<&BigInt>,
    verbose: bool,
    max_n: usize,
) -> Result<Outcome, InputError> {
    let loaded = load_graph(path, labeling, max_n)?;
    let (g, zeta) = (&loaded.graph, &loaded.labeling);
    let monomial = cqf_monomial(g, zeta).map_err(core_error)?;
    let via_orientations = cqf_fundamental_via_orientations(g, zeta).map_err(core_error)?;
    let via_colorings = qsym_m_to_f(&monomial);
    let diff = via_orientations.diff(&via_colorings);

    let mut text = String::new();
    let mut head = Table::new();
    head.row(["graph", &describe_graph(g)])
        .row(["labeling", &describe_labeling(zeta)]);
    text += &head.render(0);

    let indices: BTreeSet<&Composition> = via_orientations
        .terms()
        .chain(via_colorings.terms())
        .map(|(alpha, _)| alpha)
        .collect();
    let mut terms = Table::new();
    terms.row(["F", "orientation route", "coloring route"]);
    for alpha in indices {
        terms.row([
            alpha.to_string(),
            via_orientations.coeff(alpha).to_string(),
            via_colorings.coeff(alpha).to_string(),
        ]);
    }
    text += &terms.render(2);
    if diff.is_empty() {
        text += "diff  empty\n";
    } else {
        text += &format!("diff  {} terms differ\n", diff.len());
        let mut t = Table::new();
        for (alpha, a, b) in &diff {
            t.row([alpha.to_string(), a.to_string(), b.to_string()]);
        }
        text += &t.render(2);
    }

    let t_record = t_eval.map(|value| {
        let expansion = via_orientations.evaluate_t(value);
        let evaluated_m = monomial.evaluate_t(value);
        let symmetric = evaluated_m.is_symmetric();
        let monomial = evaluated_m.to_symmetric();
        text += &format!("at t={value}\n");
        let mut t = Table::new();
        for (alpha, c) in expansion.terms() {
            t.row([alpha.to_string(), c.to_string()]);
        }
        text += &t.render(2);
        text += &format!("symmetric  {}\n", if symmetric { "yes" } else { "no" });
        if let Some(m) = &monomial {
            text += &format!("  = {m}\n");
        }
        TEvalRecord {
            t: value.to_string(),
            expansion,
            symmetric,
            monomial,
        }
    });

    let orientations = if verbose {
        let mut records = Vec::new();
        let mut t = Table::new();
        t.row(["arcs", "des", "sinks", "omega", "extensions"]);
        for o in g.acyclic_orientations() {
            let omega = sink_minimal_increasing_labeling(&o).map_err(core_error)?;
            let words: Vec<String> = dual_linear_extensions(&o, &omega)
                .map_err(core_error)?
                .iter()
                .map(ToString::to_string)
                .collect();
            let arcs: Vec<[usize; 2]> = o.arcs().map(|(a, b)| [a, b]).collect();
            let des = o.descents(zeta).map_err(core_error)?;
            let arc_text: Vec<String> = arcs.iter().map(|[a, b]| format!("{a}->{b}")).collect();
            t.row([
                if arc_text.is_empty() { "none".to_owned() } else { arc_text.join(" ") },
                des.to_string(),
                o.sinks().to_string(),
                describe_labeling(&omega),
                words.join(" "),
            ]);
            records.push(OrientationRecord {
                arcs,
                des,
                sinks: o.sinks(),
                omega: omega.labels().to_vec(),
                extensions: words,
            });
        }
        text += &format!("acyclic orientations  {}\n", records.len());
        text += &t.render(2);
        Some(records)
    } else {
        None
    };

    let status = Status::from_pass(diff.is_empty());
    text += &format!("status  {}\n", status.word());
    let report = RunReport {
        command: "cqf",
        inputs: GraphInputs {
            graph: g.into(),
            labeling: Some(zeta.labels().to_vec()),
        },
        outputs: CqfOutputs {
            diff: diff
                .iter()
                .map(|(alpha, a, b)| DiffRecord {
                    index: alpha.parts().to_vec(),
                    orientation_route: a.json(),
                    coloring_route: b.json(),
                })
                .collect(),
            orientation_route: via_orientations,
            coloring_route: via_colorings,
            t_eval: t_record,
            orientations,
        },
        status,
    };
    Ok(Outcome::new(&report, text))
}

#[derive(Serialize)]
struct VerifyInputs {
    check: Check,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<GraphRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labeling: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    poset: Option<PosetRecord>,
}

#[derive(Serialize)]
struct VerifyOutputs {
    rows: Vec<RowRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<RowRecord>,
}

pub fn verify(path: &Path, check: Check, labeling: Option<&str>, max_n: usize) -> Result<Outcome, InputError> {
    let mut head = Table::new();
    head.row(["check", check.name()]);
    if check == Check::Ptableaux {
        let p = load_poset(path, max_n)
            .map_err(|e| InputError(format!("{e} (ptableaux expects a poset file)")))?;
        head.row(["poset", &describe_poset(&p)]);
        let inputs = VerifyInputs {
            check,
            graph: None,
            labeling: None,
            poset: Some((&p).into()),
        };
        return Ok(check_outcome(inputs, head, &verify_hook_proposition(&p)));
    }

    let loaded = load_graph(path, labeling, max_n)?;
    let g = &loaded.graph;
    head.row(["graph", &describe_graph(g)]);
    let mut inputs = VerifyInputs {
        check,
        graph: Some(g.into()),
        labeling: None,
        poset: None,
    };
    Ok(match check {
        Check::Hook1 => check_outcome(inputs, head, &verify_hook_symmetric(g)),
        Check::ESink => check_outcome(inputs, head, &verify_e_sink_identity(g)),
        Check::Chrompoly => check_outcome(inputs, head, &verify_chromatic_polynomial(g, g.n())),
        Check::HookT => {
            let zeta = &loaded.labeling;
            head.row(["labeling", &describe_labeling(zeta)]);
            inputs.labeling = Some(zeta.labels().to_vec());
            let report: CheckReport<TPoly> = verify_hook_t(g, zeta).map_err(core_error)?;
            check_outcome(inputs, head, &report)
        }
        Check::Ptableaux => unreachable!("handled above"),
    })
}

fn check_outcome<T: CellValue>(inputs: VerifyInputs, head: Table, report: &CheckReport<T>) -> Outcome {
    let status = Status::from_pass(report.passed());
    let rows = rows_json(report);
    let counterexample = report
        .rows
        .iter()
        .position(|r| !r.agrees())
        .map(|i| rows_json(report).swap_remove(i));
    let mut text = head.render(0);
    text += &rows_text(report);
    if let Some(row) = report.first_mismatch() {
        let values: Vec<String> = report
            .routes
            .iter()
            .zip(&row.values)
            .map(|(route, v)| format!("{route} = {}", v.text()))
            .collect();
        text += &format!("counterexample  k={}: {}\n", row.k, values.join(", "));
    }
    text += &format!("status  {}\n", status.word());
    let report = RunReport {
        command: "verify",
        inputs,
        outputs: VerifyOutputs { rows, counterexample },
        status,
    };
    Outcome::new(&report, text)
}
