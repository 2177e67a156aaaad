//! Line-oriented `key: value` reports.
//!
//! Keys are dotted paths under four roots: `command`, `input.*`, `result.*`
//! and `diagnostic.*`, followed by a final `status` line. Entries keep
//! insertion order. Floats are written in `{:.15e}` form (16 significant
//! digits), lists space-separated.

use std::fmt::Write as _;

use hitsym_core::Graph;
use sha2::{Digest, Sha256};

#[derive(Debug, Default)]
pub struct Report {
    command: String,
    inputs: Vec<(String, String)>,
    results: Vec<(String, String)>,
    diagnostics: Vec<(String, String)>,
}

pub fn float(x: f64) -> String {
    format!("{x:.15e}")
}

pub fn floats<'a>(xs: impl IntoIterator<Item = &'a f64>) -> String {
    xs.into_iter()
        .map(|&x| float(x))
        .collect::<Vec<_>>()
        .join(" ")
}

impl Report {
    pub fn new(command: String) -> Self {
        Report {
            command,
            ..Report::default()
        }
    }

    /// Records `n`, `m`, the degree multiset and a SHA-256 of the bytes the
    /// graph was read from (or written as), under `input.<label>`.
    pub fn graph_input(&mut self, label: &str, source: &str, bytes: &[u8], g: &Graph) {
        let degrees = g
            .degree_multiset()
            .iter()
            .map(|(d, c)| format!("{d}x{c}"))
            .collect::<Vec<_>>()
            .join(" ");
        let digest = Sha256::digest(bytes);
        let mut hex = String::with_capacity(64);
        for byte in digest.iter() {
            let _ = write!(hex, "{byte:02x}");
        }
        let key = |k: &str| format!("{label}.{k}");
        self.inputs.push((key("source"), source.to_string()));
        self.inputs.push((key("n"), g.n().to_string()));
        self.inputs.push((key("m"), g.m().to_string()));
        self.inputs.push((key("degrees"), degrees));
        self.inputs.push((key("sha256"), hex));
    }

    pub fn input(&mut self, key: impl Into<String>, value: impl ToString) {
        self.inputs.push((key.into(), value.to_string()));
    }

    pub fn result(&mut self, key: impl Into<String>, value: impl ToString) {
        self.results.push((key.into(), value.to_string()));
    }

    pub fn result_f64(&mut self, key: impl Into<String>, value: f64) {
        self.results.push((key.into(), float(value)));
    }

    pub fn diagnostic(&mut self, key: impl Into<String>, value: impl ToString) {
        self.diagnostics.push((key.into(), value.to_string()));
    }

    pub fn diagnostic_f64(&mut self, key: impl Into<String>, value: f64) {
        self.diagnostics.push((key.into(), float(value)));
    }

    pub fn render(&self, status: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for (section, entries) in [
            ("input", &self.inputs),
            ("result", &self.results),
            ("diagnostic", &self.diagnostics),
        ] {
            for (k, v) in entries {
                let _ = writeln!(out, "{section}.{k}: {v}");
            }
        }
        let _ = writeln!(out, "status: {status}");
        out
    }
}
