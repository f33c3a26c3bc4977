//! Algebra files and table reports.

mod format;
mod report;

pub use format::{emit_algebra, parse_algebra, AlgebraFile, ProductRecord, TermRecord, FORMAT_VERSION};
pub use report::{generate_report, render_report, Report, ReportFormat, ReportRow, RowStatus};
