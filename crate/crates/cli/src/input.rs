//! Reading graphs, words, sets and JSON files from the command line.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use kernelfix::io::parse_graph_text;
use kernelfix::{Graph, VertexSet, Word};
use serde::de::DeserializeOwned;

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphArg {
    /// graph6, a JSON edge list, or a family name (P3, C7, K4, E2, S4, W8).
    #[arg(long)]
    pub graph: Option<String>,
    /// File holding the graph in any of the forms `--graph` accepts.
    #[arg(long, value_name = "PATH")]
    pub graph_file: Option<PathBuf>,
}

impl GraphArg {
    pub fn load(&self) -> Result<Graph> {
        let text = match (&self.graph, &self.graph_file) {
            (Some(text), None) => text.clone(),
            (None, Some(path)) => read(path)?,
            _ => bail!("give exactly one of --graph and --graph-file"),
        };
        parse_graph_text(&text).with_context(|| format!("reading graph {:?}", text.trim()))
    }
}

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    serde_json::from_str(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// Vertex indices separated by spaces or commas, or letters `a..z` as in
/// `acb` or `a c b`.
pub fn parse_word(text: &str, g: &Graph) -> Result<Word> {
    let t = text.trim();
    let word = if !t.is_empty() && t.chars().all(|c| c.is_ascii_lowercase() || c.is_whitespace() || c == ',') {
        Word(t.chars().filter(char::is_ascii_lowercase).map(|c| (c as u8 - b'a') as usize).collect())
    } else {
        t.parse::<Word>()?
    };
    word.check(g)?;
    Ok(word)
}

pub fn parse_set(text: &str, g: &Graph) -> Result<VertexSet> {
    let set = parse_word(text, g)?.visited();
    g.check_set(set)?;
    Ok(set)
}
