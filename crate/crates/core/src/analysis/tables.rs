use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use super::{column, spearman_pairwise, GraphMeasures, Measure};

/// A labeled table of cells; `None` cells are written as `undefined`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentResult {
    pub table_id: String,
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<String>,
    pub cells: Vec<Vec<Option<f64>>>,
    /// Graphs dropped per cell because a value was undefined.
    pub excluded: Vec<Vec<usize>>,
    pub metadata: Value,
}

impl ExperimentResult {
    pub fn cell(&self, row: &str, col: &str) -> Option<f64> {
        let r = self.rows.iter().position(|x| x == row)?;
        let c = self.columns.iter().position(|x| x == col)?;
        self.cells[r][c]
    }

    /// CSV with six decimals; first column holds the row labels.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("metric");
        for c in &self.columns {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for (label, row) in self.rows.iter().zip(&self.cells) {
            out.push_str(label);
            for cell in row {
                match cell {
                    Some(v) => {
                        let _ = write!(out, ",{v:.6}");
                    }
                    None => out.push_str(",undefined"),
                }
            }
            out.push('\n');
        }
        out
    }

    /// Sidecar JSON: everything except the cells already in the CSV layout.
    pub fn metadata_json(&self) -> Value {
        serde_json::json!({
            "table_id": self.table_id,
            "title": self.title,
            "columns": self.columns,
            "rows": self.rows,
            "excluded": self.excluded,
            "metadata": self.metadata,
        })
    }
}

fn spearman_cell(x: &[Option<f64>], y: &[Option<f64>]) -> (Option<f64>, usize) {
    let (r, dropped) = spearman_pairwise(x, y);
    (r.ok(), dropped)
}

/// Spearman between one property and every robustness metric, per set.
pub fn correlation_table(
    table_id: &str,
    property: Measure,
    sets: &[(&str, &[GraphMeasures])],
) -> ExperimentResult {
    let mut cells = Vec::new();
    let mut excluded = Vec::new();
    for metric in Measure::ROBUSTNESS {
        let (row, drops): (Vec<_>, Vec<_>) = sets
            .iter()
            .map(|(_, set)| spearman_cell(&column(set, property), &column(set, metric)))
            .unzip();
        cells.push(row);
        excluded.push(drops);
    }
    ExperimentResult {
        table_id: table_id.into(),
        title: format!(
            "Spearman correlation of {} with robustness metrics",
            property.label()
        ),
        columns: sets.iter().map(|(name, _)| name.to_string()).collect(),
        rows: Measure::ROBUSTNESS
            .iter()
            .map(|m| m.label().to_string())
            .collect(),
        cells,
        excluded,
        metadata: Value::Null,
    }
}

/// Spearman of every robustness metric against CF, R and ANF on one set.
pub fn tendency_table(table_id: &str, set_name: &str, set: &[GraphMeasures]) -> ExperimentResult {
    let refs = [Measure::Cf, Measure::R, Measure::Anf];
    let mut cells = Vec::new();
    let mut excluded = Vec::new();
    for metric in Measure::ROBUSTNESS {
        let (row, drops): (Vec<_>, Vec<_>) = refs
            .iter()
            .map(|&r| spearman_cell(&column(set, metric), &column(set, r)))
            .unzip();
        cells.push(row);
        excluded.push(drops);
    }
    ExperimentResult {
        table_id: table_id.into(),
        title: format!("Spearman correlation with CF, R and ANF on {set_name} graphs"),
        columns: refs.iter().map(|m| m.label().to_string()).collect(),
        rows: Measure::ROBUSTNESS
            .iter()
            .map(|m| m.label().to_string())
            .collect(),
        cells,
        excluded,
        metadata: Value::Null,
    }
}

/// Per-set means of the given measures over the graphs where they are defined.
pub fn model_average_table(
    table_id: &str,
    measures: &[Measure],
    sets: &[(&str, &[GraphMeasures])],
) -> ExperimentResult {
    let mut cells = Vec::new();
    let mut excluded = Vec::new();
    for &m in measures {
        let (row, drops): (Vec<_>, Vec<_>) = sets
            .iter()
            .map(|(_, set)| {
                let defined: Vec<f64> = column(set, m).into_iter().flatten().collect();
                let dropped = set.len() - defined.len();
                let mean = if defined.is_empty() {
                    None
                } else {
                    Some(defined.iter().sum::<f64>() / defined.len() as f64)
                };
                (mean, dropped)
            })
            .unzip();
        cells.push(row);
        excluded.push(drops);
    }
    ExperimentResult {
        table_id: table_id.into(),
        title: "Mean values per graph model".into(),
        columns: sets.iter().map(|(name, _)| name.to_string()).collect(),
        rows: measures.iter().map(|m| m.label().to_string()).collect(),
        cells,
        excluded,
        metadata: Value::Null,
    }
}

/// Spearman between every pair of measures on one set.
pub fn correlation_matrix(table_id: &str, set: &[GraphMeasures]) -> ExperimentResult {
    let mut cells = Vec::new();
    let mut excluded = Vec::new();
    for a in Measure::ALL {
        let (row, drops): (Vec<_>, Vec<_>) = Measure::ALL
            .iter()
            .map(|&b| spearman_cell(&column(set, a), &column(set, b)))
            .unzip();
        cells.push(row);
        excluded.push(drops);
    }
    let labels: Vec<String> = Measure::ALL.iter().map(|m| m.label().to_string()).collect();
    ExperimentResult {
        table_id: table_id.into(),
        title: "Spearman correlation between all measures".into(),
        columns: labels.clone(),
        rows: labels,
        cells,
        excluded,
        metadata: Value::Null,
    }
}
