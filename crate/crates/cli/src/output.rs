use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde_json::{Map, Value};

use crate::args::{Format, OutputArgs};

/// Rows of decimal strings under a header; an empty cell means "no entry".
pub struct Sheet {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Sheet {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Sheet { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn write_csv(&self, out: impl Write) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new().flexible(false).from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()
    }

    fn write_json(&self, mut out: impl Write) -> io::Result<()> {
        for row in &self.rows {
            let object: Map<String, Value> = self
                .header
                .iter()
                .zip(row)
                .filter(|(_, cell)| !cell.is_empty())
                .map(|(k, cell)| (k.clone(), Value::String(cell.clone())))
                .collect();
            serde_json::to_writer(&mut out, &Value::Object(object))?;
            out.write_all(b"\n")?;
        }
        out.flush()
    }

    pub fn emit(&self, spec: &OutputArgs) -> io::Result<()> {
        let sink = open(spec.output.as_deref())?;
        match spec.format {
            Format::Csv => self.write_csv(sink),
            Format::Json => self.write_json(sink),
        }
    }
}

pub fn open(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}
