//! JSON for machines, text with letter names for people.

use clap::ValueEnum;
use kernelfix::dynamics::vertex_name;
use kernelfix::{VertexSet, Word};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// What a command produced: the exit status and both renderings.
pub struct Report {
    pub yes: bool,
    pub json: Value,
    pub text: String,
    quiet: bool,
}

impl Report {
    pub fn new(yes: bool, json: Value, text: impl Into<String>) -> Self {
        Report { yes, json, text: text.into(), quiet: false }
    }

    /// Output already went out elsewhere; only the exit code remains.
    pub fn quiet(mut self) -> Self {
        self.quiet = true;
        self
    }

    pub fn print(&self, format: Format) {
        if self.quiet {
            return;
        }
        match format {
            Format::Json => println!("{}", self.json),
            Format::Text => println!("{}", self.text.trim_end()),
        }
    }
}

/// Vertex names for text output: letters up to 26 vertices, indices beyond.
pub struct Names {
    letters: bool,
}

impl Names {
    pub fn new(n: usize) -> Self {
        Names { letters: n <= 26 }
    }

    pub fn vertex(&self, v: usize) -> String {
        if self.letters {
            vertex_name(v)
        } else {
            v.to_string()
        }
    }

    pub fn word(&self, w: &Word) -> String {
        let sep = if self.letters { "" } else { " " };
        let s = w.letters().iter().map(|&v| self.vertex(v)).collect::<Vec<_>>().join(sep);
        if s.is_empty() {
            "(empty)".into()
        } else {
            s
        }
    }

    pub fn set(&self, s: VertexSet) -> String {
        format!("{{{}}}", s.iter().map(|v| self.vertex(v)).collect::<Vec<_>>().join(","))
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
