use std::io::Write;

use heegner_core::Error;
use serde::Serialize;
use serde_json::Value;

use crate::config::Format;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// A mathematical check did not hold.
    Fail,
    /// Input outside the hypotheses, or bad usage.
    Rejected,
    /// Precision or search budget ran out.
    Budget,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Rejected => 2,
            Status::Budget => 3,
        }
    }

    pub fn of_error(e: &Error) -> Status {
        match e {
            Error::InvalidInput(_) | Error::Hypothesis(_) => Status::Rejected,
            Error::Precision(_) | Error::Budget(_) => Status::Budget,
            Error::Check(_) => Status::Fail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub precision_used: usize,
    pub wall_time_ms: u64,
    pub status: Status,
    pub reason: Option<String>,
    pub result: Option<Value>,
}

impl Record {
    pub fn new(command: &str, inputs: Value, precision_used: usize) -> Record {
        Record {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            inputs,
            precision_used,
            wall_time_ms: 0,
            status: Status::Pass,
            reason: None,
            result: None,
        }
    }

    pub fn error(mut self, e: &Error) -> Record {
        self.status = Status::of_error(e);
        self.reason = Some(e.to_string());
        self
    }
}

const CSV_HEADER: [&str; 8] = ["schema_version", "command", "inputs", "precision_used", "wall_time_ms", "status", "reason", "result"];

/// Writes records in the chosen format; csv gets a header before the first row.
pub struct Emitter<W: Write> {
    out: W,
    format: Format,
    wrote_header: bool,
}

impl<W: Write> Emitter<W> {
    pub fn new(out: W, format: Format) -> Self {
        Emitter { out, format, wrote_header: false }
    }

    pub fn emit(&mut self, r: &Record) -> std::io::Result<()> {
        match self.format {
            Format::JsonLines => {
                serde_json::to_writer(&mut self.out, r)?;
                writeln!(self.out)
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut self.out);
                if !self.wrote_header {
                    w.write_record(CSV_HEADER)?;
                    self.wrote_header = true;
                }
                let status = serde_json::to_value(r.status)?.as_str().unwrap_or_default().to_string();
                w.write_record([
                    r.schema_version.to_string(),
                    r.command.clone(),
                    r.inputs.to_string(),
                    r.precision_used.to_string(),
                    r.wall_time_ms.to_string(),
                    status,
                    r.reason.clone().unwrap_or_default(),
                    r.result.as_ref().map(|v| v.to_string()).unwrap_or_default(),
                ])?;
                w.flush()
            }
            Format::Pretty => {
                writeln!(self.out, "{} {} [{:?}] prec={} {} ms", r.command, r.inputs, r.status, r.precision_used, r.wall_time_ms)?;
                if let Some(reason) = &r.reason {
                    writeln!(self.out, "  reason: {reason}")?;
                }
                match &r.result {
                    Some(Value::Object(m)) => {
                        for (k, v) in m {
                            writeln!(self.out, "  {k}: {v}")?;
                        }
                    }
                    Some(v) => writeln!(self.out, "  {v}")?,
                    None => {}
                }
                Ok(())
            }
        }
    }

    pub fn into_inner(self) -> W {
        self.out
    }
}
