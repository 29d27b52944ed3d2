use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

/// Rows for the `csv` format.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// The result of one subcommand in every output format.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub table: Table,
    pub text: String,
    /// `false` when the command ran but a check it performs failed.
    pub ok: bool,
}

impl Report {
    pub fn new(json: Value, table: Table, text: String) -> Self {
        Report { json, table, text, ok: true }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("JSON values always serialize"),
            Format::Pretty => self.text.trim_end().to_string(),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.table.headers).expect("in-memory write");
                for row in &self.table.rows {
                    w.write_record(row).expect("in-memory write");
                }
                let bytes = w.into_inner().expect("in-memory flush");
                String::from_utf8(bytes).expect("CSV of UTF-8 fields").trim_end().to_string()
            }
        }
    }
}
