//! Reproduction of the reference inner-derivation tables with per-row comparison.

use std::fmt::Write as _;

use serde::Serialize;

use crate::catalog::{CatalogEntry, TableStatus, CATALOG};
use crate::derivation::{inner_derivation_space, symbolic_ad};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum RowStatus {
    #[serde(rename = "match")]
    Match,
    #[serde(rename = "dimension-match-matrix-differs")]
    DimensionMatchMatrixDiffers,
    #[serde(rename = "mismatch")]
    Mismatch,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Match => "match",
            RowStatus::DimensionMatchMatrixDiffers => "dimension-match-matrix-differs",
            RowStatus::Mismatch => "mismatch",
        }
    }

    fn derive(dim_equal: bool, matrix_equal: bool) -> Self {
        match (dim_equal, matrix_equal) {
            (false, _) => RowStatus::Mismatch,
            (true, false) => RowStatus::DimensionMatchMatrixDiffers,
            (true, true) => RowStatus::Match,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ReportRow {
    pub id: String,
    pub algebra_dim: usize,
    /// Parameter case, empty when the reference table does not split.
    pub case: String,
    /// `name=value` pairs used to compute the row.
    pub bindings: Vec<String>,
    pub computed_dim: usize,
    pub expected_dim: usize,
    pub computed_matrix: Vec<Vec<String>>,
    pub expected_matrix: Vec<Vec<String>>,
    pub status: RowStatus,
    pub table_status: TableStatus,
    pub note: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Report {
    pub rows: Vec<ReportRow>,
    pub matches: usize,
    pub matrix_differs: usize,
    pub mismatches: usize,
}

impl Report {
    /// `true` when no row has a dimension mismatch.
    pub fn all_dimensions_match(&self) -> bool {
        self.mismatches == 0
    }

    pub fn row(&self, id: &str, case: &str) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.id == id && r.case == case)
    }
}

fn rows_for(entry: &CatalogEntry) -> Vec<ReportRow> {
    entry
        .case_bindings()
        .into_iter()
        .map(|(case, b)| {
            let a = entry.instantiate(&b).expect("representative bindings are admissible");
            let computed = symbolic_ad(&a);
            let expected = entry.expected_matrix(&b).expect("admissible");
            let computed_dim = inner_derivation_space(&a).dim();
            ReportRow {
                id: entry.id.to_string(),
                algebra_dim: entry.dim,
                case: case.label.to_string(),
                bindings: b.iter().map(|(k, v)| format!("{k}={v}")).collect(),
                computed_dim,
                expected_dim: case.expected_dim,
                computed_matrix: computed.cells(),
                expected_matrix: expected.cells(),
                status: RowStatus::derive(computed_dim == case.expected_dim, computed == expected),
                table_status: entry.table_status,
                note: entry.note.map(str::to_string),
            }
        })
        .collect()
}

pub fn generate_report() -> Report {
    let rows: Vec<ReportRow> = CATALOG.iter().flat_map(rows_for).collect();
    let count = |s: RowStatus| rows.iter().filter(|r| r.status == s).count();
    Report {
        matches: count(RowStatus::Match),
        matrix_differs: count(RowStatus::DimensionMatchMatrixDiffers),
        mismatches: count(RowStatus::Mismatch),
        rows,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum ReportFormat {
    Table,
    Markdown,
    Json,
}

pub fn render_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Table => render_table(report),
        ReportFormat::Markdown => render_markdown(report),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("plain data serializes");
            s.push('\n');
            s
        }
    }
}

fn row_title(r: &ReportRow) -> String {
    if r.case.is_empty() {
        r.id.clone()
    } else {
        format!("{} ({})", r.id, r.case)
    }
}

fn indent(block: &str, by: &str) -> String {
    block.lines().map(|l| format!("{by}{l}\n")).collect()
}

fn render_table(report: &Report) -> String {
    let mut out = String::new();
    let mut section = 0;
    for r in &report.rows {
        if r.algebra_dim != section {
            section = r.algebra_dim;
            if !out.is_empty() {
                out.push('\n');
            }
            let _ = writeln!(out, "== inner derivations of {section}-dimensional algebras ==");
        }
        let _ = writeln!(out);
        let _ = write!(
            out,
            "{}  dim {} (expected {})  {}",
            row_title(r),
            r.computed_dim,
            r.expected_dim,
            r.status.as_str()
        );
        if r.table_status == TableStatus::Flagged {
            out.push_str("  [flagged]");
        }
        out.push('\n');
        if !r.bindings.is_empty() {
            let _ = writeln!(out, "  at {}", r.bindings.join(", "));
        }
        out.push_str(&indent(&crate::render::align_columns(&r.computed_matrix), "    "));
        if r.computed_matrix != r.expected_matrix {
            out.push_str("  expected:\n");
            out.push_str(&indent(&crate::render::align_columns(&r.expected_matrix), "    "));
        }
        if let Some(note) = &r.note {
            let _ = writeln!(out, "  note: {note}");
        }
    }
    let _ = writeln!(
        out,
        "\n{} rows: {} match, {} dimension-match-matrix-differs, {} mismatch",
        report.rows.len(),
        report.matches,
        report.matrix_differs,
        report.mismatches
    );
    out
}

fn inline_matrix(m: &[Vec<String>]) -> String {
    m.iter().map(|row| format!("({})", row.join(", "))).collect::<Vec<_>>().join("; ")
}

fn render_markdown(report: &Report) -> String {
    let mut out = String::from(
        "| Algebra | Case | Computed ad_w (rows) | Dim | Expected dim | Status | Note |\n\
         |---|---|---|---|---|---|---|\n",
    );
    for r in &report.rows {
        let mut note = r.note.clone().unwrap_or_default();
        if r.computed_matrix != r.expected_matrix {
            if !note.is_empty() {
                note.push_str("; ");
            }
            note.push_str(&format!("expected {}", inline_matrix(&r.expected_matrix)));
        }
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            r.id,
            r.case,
            inline_matrix(&r.computed_matrix),
            r.computed_dim,
            r.expected_dim,
            r.status.as_str(),
            note
        );
    }
    out
}
