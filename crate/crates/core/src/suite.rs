//! Named batches of polynomials and the aggregate report the CLI and the
//! acceptance harness share.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::invariants::{deligne_milnor_check, parse_weights, DmReport};
use crate::parse::parse_with_inferred_ring;
use crate::poly::{CoefficientField, MonomialOrder};

/// One batch entry. Variables are inferred from `f` and sorted
/// alphabetically; `weights` follow that order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub name: String,
    pub f: String,
    #[serde(default)]
    pub weights: Option<Vec<String>>,
}

impl SuiteEntry {
    fn new(name: &str, f: &str, weights: &[&str]) -> Self {
        SuiteEntry {
            name: name.into(),
            f: f.into(),
            weights: Some(weights.iter().map(|w| w.to_string()).collect()),
        }
    }
}

/// The simple singularities used for acceptance: `A_1..A_8` in one variable,
/// the plane curves `A_2, D_4, E_6, E_7, E_8`, the quadric in three variables,
/// and suspensions `f + z^2` of the plane curves.
pub fn ade_suite() -> Vec<SuiteEntry> {
    let mut out: Vec<SuiteEntry> = (1..=8u32)
        .map(|k| {
            let w = format!("1/{}", k + 1);
            SuiteEntry::new(&format!("A{k}"), &format!("x^{}", k + 1), &[&w])
        })
        .collect();
    let plane = [
        ("A2 cusp", "x^2 + y^3", ["1/2", "1/3"]),
        ("D4 fermat", "x^3 + y^3", ["1/3", "1/3"]),
        ("D4", "x^2*y + y^3", ["1/3", "1/3"]),
        ("E6", "x^3 + y^4", ["1/3", "1/4"]),
        ("E7", "x^3 + x*y^3", ["1/3", "2/9"]),
        ("E8", "x^3 + y^5", ["1/3", "1/5"]),
    ];
    for (name, f, w) in plane {
        out.push(SuiteEntry::new(name, f, &w));
    }
    out.push(SuiteEntry::new("A1 quadric", "x^2 + y^2 + z^2", &["1/2", "1/2", "1/2"]));
    for (name, f, w) in plane {
        out.push(SuiteEntry::new(&format!("{name} suspended"), &format!("{f} + z^2"), &[w[0], w[1], "1/2"]));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteRow {
    pub name: String,
    pub report: DmReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub field: String,
    pub rows: Vec<SuiteRow>,
    pub all_verdicts: bool,
}

impl SuiteReport {
    pub fn new(field: CoefficientField, rows: Vec<SuiteRow>) -> Self {
        let all_verdicts = rows.iter().all(|r| r.report.verdict);
        SuiteReport { field: field_label(field), rows, all_verdicts }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// `q` or `fp:<p>`, the same spelling the CLI accepts.
pub fn field_label(field: CoefficientField) -> String {
    match field.characteristic() {
        0 => "q".into(),
        p => format!("fp:{p}"),
    }
}

/// Runs the Milnor/pairing comparison on one entry.
pub fn run_entry(entry: &SuiteEntry, field: CoefficientField) -> Result<SuiteRow> {
    let f = parse_with_inferred_ring(&entry.f, field, MonomialOrder::Grevlex)?;
    let weights = entry.weights.as_ref().map(|w| parse_weights(w)).transpose()?;
    let report = deligne_milnor_check(&f, weights.as_deref())?;
    Ok(SuiteRow { name: entry.name.clone(), report })
}

/// Sequential batch run; entries are reported in input order.
pub fn run_suite(entries: &[SuiteEntry], field: CoefficientField) -> Result<SuiteReport> {
    let rows = entries.iter().map(|e| run_entry(e, field)).collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport::new(field, rows))
}
