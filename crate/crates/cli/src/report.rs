use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::args::{Command, Format, GlobalArgs};

/// What to run and under which limits.
#[derive(Clone, Debug, Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub command: Command,
    #[serde(default)]
    pub global: GlobalArgs,
}

impl ExperimentSpec {
    pub fn new(command: Command, global: GlobalArgs) -> ExperimentSpec {
        ExperimentSpec { command, global }
    }

    pub fn from_json(text: &str) -> Result<ExperimentSpec, crate::CliError> {
        serde_json::from_str(text).map_err(|e| crate::CliError::Invalid(format!("spec: {e}")))
    }
}

/// Rows are the deterministic part of a run. Columns are fixed per
/// subcommand; `notes` carry free-form lines such as orbit representatives.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Results {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

impl Results {
    pub fn new(columns: &[&str]) -> Results {
        Results {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Results::default()
        }
    }

    pub fn push<I, S>(&mut self, row: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        let row: Vec<String> = row.into_iter().map(|c| c.to_string()).collect();
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn cell(&self, row: usize, column: &str) -> Option<&str> {
        let j = self.columns.iter().position(|c| c == column)?;
        self.rows.get(row).map(|r| r[j].as_str())
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    /// Fields used, with their defining polynomials.
    pub fields: Vec<String>,
    pub bounds: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Complete,
    /// A budget ran out; rows hold what was finished.
    BudgetExhausted {
        reason: String,
    },
    /// The acceptance suite ran and something failed.
    Failed,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub spec: ExperimentSpec,
    pub status: Status,
    pub provenance: Provenance,
    pub results: Results,
    /// Per row timings for the subcommands that report them, and the total.
    pub timing: Timing,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timing {
    /// Milliseconds per result row, when the subcommand times its rows.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows_ms: Option<Vec<u64>>,
    pub wall_ms: u64,
}

impl Report {
    /// The byte-stable part of the report: everything except timings.
    pub fn results_json(&self) -> String {
        #[derive(Serialize)]
        struct Stable<'a> {
            spec: &'a ExperimentSpec,
            status: &'a Status,
            provenance: &'a Provenance,
            results: &'a Results,
        }
        serde_json::to_string_pretty(&Stable {
            spec: &self.spec,
            status: &self.status,
            provenance: &self.provenance,
            results: &self.results,
        })
        .expect("serializable")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serializable") + "\n",
            Format::Csv => self.to_csv(),
        }
    }

    /// Header and rows, then `# ` lines for notes and the budget marker. Row
    /// timings, when present, form a final `wall_ms` column.
    pub fn to_csv(&self) -> String {
        let timed = self
            .timing
            .rows_ms
            .as_ref()
            .filter(|t| t.len() == self.results.rows.len());
        let mut w = csv::WriterBuilder::new()
            .flexible(true)
            .from_writer(Vec::new());
        let mut header = self.results.columns.clone();
        if timed.is_some() {
            header.push("wall_ms".into());
        }
        if !header.is_empty() {
            w.write_record(&header).expect("in-memory write");
        }
        for (i, row) in self.results.rows.iter().enumerate() {
            let mut cells = row.clone();
            if let Some(t) = timed {
                cells.push(t[i].to_string());
            }
            w.write_record(&cells).expect("in-memory write");
        }
        let mut out = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8");
        for note in &self.results.notes {
            writeln!(out, "# {note}").unwrap();
        }
        if let Status::BudgetExhausted { reason } = &self.status {
            writeln!(out, "# EXHAUSTED: {reason}").unwrap();
        }
        out
    }
}
