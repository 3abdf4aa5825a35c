//! Streaming census: one JSON line per isomorphism class, in canonical order,
//! resumable from a partial output file.

use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use kernelfix::enumerate::enumerate_graphs;
use kernelfix::io::{parse_graph6, write_graph6};
use kernelfix::permis::{classify, is_permis, CensusRecord, SearchOptions, MAX_CENSUS_ORDER};
use kernelfix::Word;
use rayon::prelude::*;

/// Classes classified between two flushes.
const CHUNK: usize = 256;

pub struct Summary {
    pub classes: Vec<(usize, usize)>,
    pub without_permis: Vec<String>,
    pub resumed: usize,
}

/// Keeps the leading lines of `path` that parse as records and truncates
/// the rest, which can only be a line cut short by an interruption.
fn completed_records(path: &Path) -> Result<Vec<CensusRecord>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(e).with_context(|| format!("opening {}", path.display())),
    };
    let mut records = Vec::new();
    let mut kept_bytes = 0u64;
    for line in BufReader::new(file).lines() {
        let line = line?;
        match serde_json::from_str::<CensusRecord>(&line) {
            Ok(r) => {
                kept_bytes += line.len() as u64 + 1;
                records.push(r);
            }
            Err(_) => break,
        }
    }
    OpenOptions::new().write(true).open(path)?.set_len(kept_bytes)?;
    Ok(records)
}

fn check_record(r: &CensusRecord) -> Result<()> {
    let g = parse_graph6(&r.graph6)?;
    match (&r.permis, &r.certificate) {
        (Some(p), None) if is_permis(&g, &Word(p.clone()))? => Ok(()),
        (None, Some(_)) => Ok(()),
        _ => bail!("record for {} fails verification", r.graph6),
    }
}

pub fn run(max_n: usize, out: Option<&Path>, resume: bool, options: &SearchOptions) -> Result<Summary> {
    if max_n > MAX_CENSUS_ORDER {
        bail!("census supports at most {MAX_CENSUS_ORDER} vertices, got {max_n}");
    }
    let done = match (out, resume) {
        (Some(path), true) => completed_records(path)?,
        (None, true) => bail!("--resume needs --out"),
        _ => Vec::new(),
    };
    let mut sink: Box<dyn Write> = match out {
        Some(path) => Box::new(
            OpenOptions::new()
                .create(true)
                .append(resume)
                .write(true)
                .truncate(!resume)
                .open(path)
                .with_context(|| format!("opening {}", path.display()))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let mut summary = Summary { classes: Vec::new(), without_permis: Vec::new(), resumed: done.len() };
    let mut index = 0;
    for n in 1..=max_n {
        let graphs = enumerate_graphs(n)?;
        summary.classes.push((n, graphs.len()));
        let resumed = done.get(index..).unwrap_or_default();
        let skip = resumed.len().min(graphs.len());
        for (g, r) in graphs.iter().zip(&resumed[..skip]) {
            if write_graph6(g) != r.graph6 {
                bail!("existing output does not match the class order at {}", r.graph6);
            }
            if r.permis.is_none() {
                summary.without_permis.push(r.graph6.clone());
            }
        }
        index += skip;
        for chunk in graphs[skip..].chunks(CHUNK) {
            let records = chunk.par_iter().map(|g| classify(g, options)).collect::<Result<Vec<_>, _>>()?;
            for r in records {
                check_record(&r)?;
                if r.permis.is_none() {
                    summary.without_permis.push(r.graph6.clone());
                }
                writeln!(sink, "{}", serde_json::to_string(&r)?)?;
            }
            sink.flush()?;
            index += chunk.len();
        }
    }
    if index < done.len() {
        bail!("existing output has more records than a census up to n = {max_n}");
    }
    Ok(summary)
}
