use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldTag;

use super::{BoundsReport, ErrorRecord, IdentityReport};

/// Version of the flat record layout below.
pub const SCHEMA_VERSION: u32 = 1;

/// Column names of [`Record`], in order.
pub const COLUMNS: [&str; 23] = [
    "schema_version",
    "kind",
    "graph_id",
    "k",
    "n",
    "bipartite",
    "unmixed",
    "claw_free",
    "deg",
    "reg",
    "lower",
    "upper",
    "defect",
    "field",
    "holds",
    "lower_tight",
    "upper_tight",
    "identity",
    "parameters",
    "pass",
    "witness",
    "binding",
    "message",
];

/// One report row with every column, so JSON and CSV share a layout.
/// Columns that do not apply to a row's `kind` are null (JSON) or empty
/// (CSV).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub schema_version: u32,
    /// `bounds`, `identity` or `error`.
    pub kind: &'static str,
    pub graph_id: String,
    pub k: Option<u32>,
    pub n: Option<usize>,
    pub bipartite: Option<bool>,
    pub unmixed: Option<bool>,
    pub claw_free: Option<bool>,
    pub deg: Option<u32>,
    pub reg: Option<u32>,
    pub lower: Option<u32>,
    pub upper: Option<u32>,
    pub defect: Option<i64>,
    pub field: Option<FieldTag>,
    pub holds: Option<bool>,
    pub lower_tight: Option<bool>,
    pub upper_tight: Option<bool>,
    pub identity: Option<&'static str>,
    pub parameters: Option<String>,
    pub pass: Option<bool>,
    pub witness: Option<String>,
    pub binding: Option<bool>,
    pub message: Option<String>,
}

impl Record {
    fn blank(kind: &'static str, graph_id: String, k: Option<u32>) -> Self {
        Record {
            schema_version: SCHEMA_VERSION,
            kind,
            graph_id,
            k,
            n: None,
            bipartite: None,
            unmixed: None,
            claw_free: None,
            deg: None,
            reg: None,
            lower: None,
            upper: None,
            defect: None,
            field: None,
            holds: None,
            lower_tight: None,
            upper_tight: None,
            identity: None,
            parameters: None,
            pass: None,
            witness: None,
            binding: None,
            message: None,
        }
    }

    /// Whether this row contradicts a theorem.
    pub fn is_violation(&self) -> bool {
        match self.kind {
            "bounds" => {
                let low = self.reg < self.lower;
                low || (self.holds == Some(false) && self.binding == Some(true))
            }
            "identity" => self.pass == Some(false) && self.binding == Some(true),
            _ => false,
        }
    }

    pub fn is_error(&self) -> bool {
        self.kind == "error"
    }
}

impl From<&BoundsReport> for Record {
    fn from(r: &BoundsReport) -> Self {
        Record {
            n: Some(r.n),
            bipartite: Some(r.bipartite),
            unmixed: Some(r.unmixed),
            claw_free: Some(r.claw_free),
            deg: Some(r.deg),
            reg: Some(r.reg),
            lower: Some(r.lower),
            upper: Some(r.upper),
            defect: Some(r.defect()),
            field: Some(r.field),
            holds: Some(r.holds),
            lower_tight: Some(r.lower_tight),
            upper_tight: Some(r.upper_tight),
            binding: Some(r.in_class()),
            ..Record::blank("bounds", r.graph_id.clone(), Some(r.k))
        }
    }
}

impl From<&IdentityReport> for Record {
    fn from(r: &IdentityReport) -> Self {
        Record {
            identity: Some(r.identity.name()),
            parameters: Some(r.parameters.clone()),
            pass: Some(r.pass),
            witness: r.witness.clone(),
            binding: Some(r.binding),
            ..Record::blank("identity", r.graph_id.clone(), r.k)
        }
    }
}

impl From<&ErrorRecord> for Record {
    fn from(r: &ErrorRecord) -> Self {
        Record {
            identity: Some(r.check),
            message: Some(r.message.clone()),
            ..Record::blank("error", r.graph_id.clone(), r.k)
        }
    }
}

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::Parameter(format!("write failed: {e}"))
}

/// Pretty JSON array of records, with a trailing newline.
pub fn write_json<W: Write>(records: &[Record], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, records).map_err(io_error)?;
    writeln!(out).map_err(io_error)
}

/// CSV with a header row and the same columns as the JSON form.
pub fn write_csv<W: Write>(records: &[Record], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if records.is_empty() {
        // serde only emits the header alongside a first row
        w.write_record(COLUMNS).map_err(io_error)?;
    }
    for r in records {
        w.serialize(r).map_err(io_error)?;
    }
    w.flush().map_err(io_error)
}

/// One human-readable line per record. Not a stable format.
pub fn write_text<W: Write>(records: &[Record], mut out: W) -> Result<()> {
    for r in records {
        let k = r.k.map_or(String::from("-"), |k| k.to_string());
        let line = match r.kind {
            "bounds" => format!(
                "{:<5} bounds {} k={} n={} deg={} reg={} in [{}, {}] defect={}{}",
                verdict(r),
                r.graph_id,
                k,
                r.n.unwrap_or(0),
                r.deg.unwrap_or(0),
                r.reg.unwrap_or(0),
                r.lower.unwrap_or(0),
                r.upper.unwrap_or(0),
                r.defect.unwrap_or(0),
                if r.binding == Some(true) {
                    ""
                } else {
                    " (outside classes)"
                },
            ),
            "identity" => format!(
                "{:<5} {} {} k={} {}{}",
                verdict(r),
                r.identity.unwrap_or(""),
                r.graph_id,
                k,
                r.parameters.as_deref().unwrap_or(""),
                r.witness
                    .as_deref()
                    .map(|w| format!(" [{w}]"))
                    .unwrap_or_default(),
            ),
            _ => format!(
                "ERROR {} {} k={}: {}",
                r.parameters.as_deref().unwrap_or(""),
                r.graph_id,
                k,
                r.message.as_deref().unwrap_or("")
            ),
        };
        writeln!(out, "{line}").map_err(io_error)?;
    }
    Ok(())
}

fn verdict(r: &Record) -> &'static str {
    let ok = r.holds.or(r.pass).unwrap_or(false);
    match (ok, r.is_violation()) {
        (true, _) => "PASS",
        (false, true) => "FAIL",
        (false, false) => "OBS",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_header_matches_columns() {
        let mut buf = Vec::new();
        write_csv(&[Record::blank("error", "g".into(), None)], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), COLUMNS.join(","));

        let mut empty = Vec::new();
        write_csv(&[], &mut empty).unwrap();
        assert_eq!(
            String::from_utf8(empty).unwrap().trim_end(),
            COLUMNS.join(",")
        );
    }

    #[test]
    fn json_keeps_every_column() {
        let mut buf = Vec::new();
        write_json(&[Record::blank("error", "g".into(), Some(2))], &mut buf).unwrap();
        let value: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        let row = value[0].as_object().unwrap();
        assert_eq!(row.len(), COLUMNS.len());
        assert_eq!(row["schema_version"], 1);
        assert_eq!(row["k"], 2);
        assert!(row["witness"].is_null());
    }
}
