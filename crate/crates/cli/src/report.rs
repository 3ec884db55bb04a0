use std::collections::BTreeMap;
use std::fmt::Display;
use std::io::{self, Write};

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// Outcome of one subcommand. `values` carries computed data that is not
/// itself a check (orders, invariant factors, degree lists).
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub values: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
    #[serde(skip)]
    pub table: Option<Table>,
}

/// A plain table, emitted as-is by `--format csv`.
#[derive(Clone, Debug)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), ..Default::default() }
    }

    pub fn param(&mut self, key: &str, value: impl Display) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    pub fn value(&mut self, key: &str, value: impl Display) {
        self.values.insert(key.to_string(), value.to_string());
    }

    pub fn check(&mut self, name: impl Into<String>, expected: impl Display, actual: impl Display) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        self.checks.push(Check { name: name.into(), expected, actual, pass });
    }

    /// A check that passes when `pass` holds, shown as `true`/`false`.
    pub fn check_flag(&mut self, name: impl Into<String>, pass: bool) {
        self.check(name, true, pass);
    }

    /// Appends the checks and values of `other`, prefixing names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix} {}", c.name);
            self.checks.push(c);
        }
        for (k, v) in other.values {
            self.values.insert(format!("{prefix} {k}"), v);
        }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Human => self.write_human(out),
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            Format::Csv => self.write_csv(out),
        }
    }

    fn write_human(&self, out: &mut impl Write) -> io::Result<()> {
        writeln!(out, "{}", self.command)?;
        for (k, v) in &self.parameters {
            writeln!(out, "  {k} = {v}")?;
        }
        for (k, v) in &self.values {
            writeln!(out, "  {k}: {v}")?;
        }
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            writeln!(out, "  [{tag}] {}: expected {}, actual {}", c.name, c.expected, c.actual)?;
        }
        if let Some(ms) = self.runtime_ms {
            writeln!(out, "  runtime_ms = {ms}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        if failed == 0 {
            writeln!(out, "PASS ({} checks)", self.checks.len())
        } else {
            writeln!(out, "FAIL ({failed} of {} checks failed)", self.checks.len())
        }
    }

    fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        match &self.table {
            Some(t) => {
                w.write_record(&t.header)?;
                for row in &t.rows {
                    w.write_record(row)?;
                }
            }
            None => {
                w.write_record(["name", "expected", "actual", "pass"])?;
                for c in &self.checks {
                    w.write_record([&c.name, &c.expected, &c.actual, &c.pass.to_string()])?;
                }
            }
        }
        w.flush()
    }
}
