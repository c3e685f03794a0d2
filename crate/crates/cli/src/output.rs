use std::fmt::Write as _;

use bchkit::analysis::WeightDistribution;
use bchkit::bch::BchCode;
use bchkit::Error;
use serde_json::{json, Value};

pub const EXIT_BAD_PARAMS: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_MISMATCH: u8 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One command's result in every format, plus its exit status.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub csv: String,
    pub exit: u8,
    /// Printed to stderr whatever the format.
    pub notes: Vec<String>,
}

impl Output {
    pub fn new(text: String, json: Value, csv: String) -> Output {
        Output {
            text,
            json,
            csv,
            exit: 0,
            notes: Vec::new(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv.clone(),
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub exit: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let exit = match e {
            Error::TooLarge { .. } => EXIT_CAP,
            _ => EXIT_BAD_PARAMS,
        };
        Failure {
            exit,
            message: e.to_string(),
        }
    }
}

pub fn bad(message: impl Into<String>) -> Failure {
    Failure {
        exit: EXIT_BAD_PARAMS,
        message: message.into(),
    }
}

pub fn code_json(code: &BchCode) -> Value {
    json!({
        "q": code.q(),
        "m": code.m(),
        "n": code.n(),
        "delta": code.delta,
        "even_like": code.even_like,
        "k": code.k,
        "bose_distance": code.bose_distance,
    })
}

pub fn weights_json(wd: &WeightDistribution) -> Value {
    Value::Array(
        wd.counts()
            .iter()
            .map(|(w, c)| json!({ "w": w, "count": c.to_string() }))
            .collect(),
    )
}

pub fn weights_text(wd: &WeightDistribution) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "  {:>8}  count", "weight");
    for (w, c) in wd.counts() {
        let _ = writeln!(s, "  {w:>8}  {c}");
    }
    s
}

pub fn weights_csv(wd: &WeightDistribution) -> String {
    let mut s = String::from("weight,count\n");
    for (w, c) in wd.counts() {
        let _ = writeln!(s, "{w},{c}");
    }
    s
}

/// Two-column CSV of string pairs, quoting fields that contain commas.
pub fn pairs_csv(header: (&str, &str), rows: &[(String, String)]) -> String {
    let quote = |f: &str| {
        if f.contains(',') || f.contains('"') {
            format!("\"{}\"", f.replace('"', "\"\""))
        } else {
            f.to_string()
        }
    };
    let mut s = format!("{},{}\n", header.0, header.1);
    for (a, b) in rows {
        let _ = writeln!(s, "{},{}", quote(a), quote(b));
    }
    s
}
