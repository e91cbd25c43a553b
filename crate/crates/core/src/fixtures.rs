//! Curve records in JSON lines, and the vendored regression tables.

use serde::{Deserialize, Serialize};

use crate::catalog::TorsionStructure;
use crate::numkernel::Rational;

pub const TABLE1_JSONL: &str = include_str!("../data/table1.jsonl");
pub const CM_JSONL: &str = include_str!("../data/cm.jsonl");

/// One input row: a model or a bare j-invariant, never both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ainvs: Option<[Rational; 5]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<TorsionStructure>,
}

#[derive(Debug, thiserror::Error)]
pub enum RecordError {
    #[error("line {line}: {source}")]
    Json { line: usize, source: serde_json::Error },
    #[error("line {line}: exactly one of ainvs and j must be given")]
    Shape { line: usize },
}

impl CurveRecord {
    pub fn parse(text: &str, line: usize) -> Result<Self, RecordError> {
        let r: CurveRecord = serde_json::from_str(text).map_err(|source| RecordError::Json { line, source })?;
        if r.ainvs.is_some() == r.j.is_some() {
            return Err(RecordError::Shape { line });
        }
        Ok(r)
    }
}

/// Lines that carry a record: blank lines and `#` comments are skipped.
/// Yields 1-based line numbers alongside the text.
pub fn record_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_jsonl(text: &str) -> Result<Vec<CurveRecord>, RecordError> {
    record_lines(text).map(|(n, l)| CurveRecord::parse(l, n)).collect()
}

pub fn table1() -> Vec<CurveRecord> {
    parse_jsonl(TABLE1_JSONL).expect("vendored table parses")
}

pub fn cm_curves() -> Vec<CurveRecord> {
    parse_jsonl(CM_JSONL).expect("vendored table parses")
}
