use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug)]
pub enum Cell {
    Int(usize),
    /// Emitted as a JSON string so big integers keep every digit.
    Big(String),
    Text(String),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Big(s) | Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Big(s) | Cell::Text(s) => Value::from(s.as_str()),
        }
    }
}

pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

pub struct Sink {
    pub format: Format,
    out: Box<dyn Write>,
}

impl Sink {
    pub fn open(format: Format, path: Option<&Path>) -> io::Result<Self> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Self { format, out })
    }

    pub fn line(&mut self, text: &str) -> io::Result<()> {
        writeln!(self.out, "{text}")
    }

    /// `{"command": …, "params": …, key: payload}` on one line.
    pub fn envelope(
        &mut self,
        command: &str,
        params: Map<String, Value>,
        key: &str,
        payload: Value,
    ) -> io::Result<()> {
        writeln!(
            self.out,
            "{{\"command\":{},\"params\":{},{}:{}}}",
            Value::from(command),
            Value::Object(params),
            Value::from(key),
            payload
        )
    }

    pub fn csv(
        &mut self,
        header: &[&str],
        rows: impl IntoIterator<Item = Vec<String>>,
    ) -> io::Result<()> {
        let mut writer = csv::Writer::from_writer(&mut self.out);
        writer.write_record(header)?;
        for row in rows {
            writer.write_record(&row)?;
        }
        writer.flush()
    }

    pub fn table(
        &mut self,
        command: &str,
        params: Map<String, Value>,
        table: &Table,
    ) -> io::Result<()> {
        match self.format {
            Format::Json => {
                let rows = table
                    .rows
                    .iter()
                    .map(|row| {
                        let object: Map<String, Value> = table
                            .header
                            .iter()
                            .zip(row)
                            .map(|(h, c)| (h.to_string(), c.json()))
                            .collect();
                        Value::Object(object)
                    })
                    .collect();
                self.envelope(command, params, "rows", Value::Array(rows))
            }
            Format::Csv => self.csv(
                &table.header,
                table
                    .rows
                    .iter()
                    .map(|r| r.iter().map(Cell::text).collect()),
            ),
            Format::Text => {
                for row in &table.rows {
                    let fields: Vec<String> = row.iter().map(Cell::text).collect();
                    self.line(&fields.join("\t"))?;
                }
                Ok(())
            }
        }
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }
}
