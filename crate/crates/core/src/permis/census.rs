//! Permis status of every small graph, one record per isomorphism class.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{find_permis_with, Certificate, PermisAnswer, SearchOptions};
use crate::enumerate::enumerate_graphs;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::write_graph6;

/// Largest order for which [`census`] runs.
pub const MAX_CENSUS_ORDER: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub graph6: String,
    pub permis: Option<Vec<usize>>,
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CensusReport {
    /// `(n, number of classes)` for each order swept.
    pub classes: Vec<(usize, usize)>,
    pub records: Vec<CensusRecord>,
}

impl CensusReport {
    /// graph6 strings of the classes without a permis.
    pub fn without_permis(&self) -> Vec<&str> {
        self.records.iter().filter(|r| r.permis.is_none()).map(|r| r.graph6.as_str()).collect()
    }
}

/// Searches one graph; its record carries either a permis or the exhaustive certificate.
pub fn classify(g: &Graph, options: &SearchOptions) -> Result<CensusRecord> {
    let verdict = find_permis_with(g, options);
    let graph6 = write_graph6(g);
    match verdict.answer {
        PermisAnswer::Exists => Ok(CensusRecord { graph6, permis: verdict.word.map(|w| w.0), certificate: None }),
        PermisAnswer::NotExists => Ok(CensusRecord { graph6, permis: None, certificate: verdict.certificate }),
        PermisAnswer::Unknown => Err(Error::TooLarge { what: "census search", n: g.n(), max: options.max_order }),
    }
}

/// Classifies every graph with `1..=max_n` vertices, classes in canonical order.
pub fn census(max_n: usize) -> Result<CensusReport> {
    if max_n > MAX_CENSUS_ORDER {
        return Err(Error::TooLarge { what: "census", n: max_n, max: MAX_CENSUS_ORDER });
    }
    let options = SearchOptions { parallel: false, ..SearchOptions::default() };
    let mut report = CensusReport::default();
    for n in 1..=max_n {
        let graphs = enumerate_graphs(n)?;
        report.classes.push((n, graphs.len()));
        let records = graphs.par_iter().map(|g| classify(g, &options)).collect::<Result<Vec<_>>>()?;
        report.records.extend(records);
    }
    Ok(report)
}
