use chromatic_core::chromatic::CheckReport;
use chromatic_core::tpoly::TPoly;
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn word(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        }
    }
}

/// Machine-readable record of one run.
#[derive(Serialize)]
pub struct RunReport<I: Serialize, O: Serialize> {
    pub command: &'static str,
    pub inputs: I,
    pub outputs: O,
    pub status: Status,
}

/// Both renderings of a finished command.
pub struct Outcome {
    pub status: Status,
    pub text: String,
    pub json: String,
}

impl Outcome {
    pub fn new<I: Serialize, O: Serialize>(report: &RunReport<I, O>, text: String) -> Self {
        let mut json = serde_json::to_string_pretty(report).expect("reports serialize");
        json.push('\n');
        Outcome {
            status: report.status,
            text,
            json,
        }
    }
}

/// Values that appear in comparison tables.
pub trait CellValue: PartialEq + Clone {
    fn text(&self) -> String;
    fn json(&self) -> serde_json::Value;
}

impl CellValue for BigInt {
    fn text(&self) -> String {
        self.to_string()
    }

    fn json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }
}

/// Coefficient lists, lowest power first, matching the canonical function
/// serialization.
impl CellValue for TPoly {
    fn text(&self) -> String {
        self.to_string()
    }

    fn json(&self) -> serde_json::Value {
        self.coeffs().iter().map(|c| serde_json::Value::String(c.to_string())).collect()
    }
}

#[derive(Serialize)]
pub struct RouteValue {
    pub route: &'static str,
    pub value: serde_json::Value,
}

#[derive(Serialize)]
pub struct RowRecord {
    pub k: usize,
    pub values: Vec<RouteValue>,
    pub agrees: bool,
}

pub fn rows_json<T: CellValue>(report: &CheckReport<T>) -> Vec<RowRecord> {
    report
        .rows
        .iter()
        .map(|row| RowRecord {
            k: row.k,
            values: report
                .routes
                .iter()
                .zip(&row.values)
                .map(|(&route, v)| RouteValue { route, value: v.json() })
                .collect(),
            agrees: row.agrees(),
        })
        .collect()
}

/// `k | route... | status` with one line per row.
pub fn rows_text<T: CellValue>(report: &CheckReport<T>) -> String {
    let mut table = crate::table::Table::new();
    let mut header = vec!["k".to_owned()];
    header.extend(report.routes.iter().map(|r| r.to_string()));
    header.push(String::new());
    table.row(header);
    for row in &report.rows {
        let mut cells = vec![row.k.to_string()];
        cells.extend(row.values.iter().map(CellValue::text));
        cells.push(if row.agrees() { String::new() } else { "MISMATCH".to_owned() });
        table.row(cells);
    }
    table.render(2)
}
