//! `kernelfix`: command-line front end for the kernel network engine.
//!
//! Exit codes: 0 when the answer is yes, 1 when it is no, 2 on any error.

mod census;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use kernelfix::dynamics::{apply_word_traced, enumerate_kernels};
use kernelfix::enumerate::enumerate_graphs;
use kernelfix::io::write_graph6;
use kernelfix::permis::{
    certify_no_permis_tethered, comparability_permis, composition_permis, find_permis_with, is_permis,
    simplicial_permis, Certificate, NoPermisMemo, PermisAnswer, SearchOptions, DEFAULT_MAX_ORDER,
};
use kernelfix::reductions::{
    colony_to_dominion, fixingset_to_fixingword, nondominion_to_fixingset, setcover_to_colony, verify_preservation,
    ReductionInput, SetCoverInstance, TargetedGraph, TargetedGraphJson,
};
use kernelfix::sets::{is_colony, is_dominion, is_vertex_cover, DominionRule};
use kernelfix::words::{
    doubled_word, fixes, fixing_set, prefixes, shortest_fixing_word, suffixes, ShortestWord, Witness, WordVerdict,
    DEFAULT_SHORTEST_BUDGET,
};
use kernelfix::{Configuration, Graph, Word};
use serde_json::json;

use input::{parse_set, parse_word, read_json, GraphArg};
use output::{yes_no, Format, Names, Report};

#[derive(Parser, Debug)]
#[command(name = "kernelfix", version, about = "Sequential updates of kernel networks on small graphs")]
struct Cli {
    /// Worker threads for parallel scans and sweeps.
    #[arg(long, global = true, env = "KERNELFIX_WORKERS", value_parser = clap::value_parser!(u16).range(1..))]
    workers: Option<u16>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Run single-threaded so output never depends on scheduling.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply a word to a configuration.
    Trajectory {
        #[command(flatten)]
        graph: GraphArg,
        /// Vertex indices (`0 2 1`) or letters (`acb`).
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Bit string, vertex 0 first.
        #[arg(long)]
        config: String,
        /// Print every intermediate configuration.
        #[arg(long)]
        trace: bool,
    },
    /// Decide whether a word prefixes, suffixes or fixes.
    #[command(group(ArgGroup::new("property").required(true).args(["prefixes", "suffixes", "fixes"])))]
    CheckWord {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        word: String,
        #[arg(long)]
        prefixes: bool,
        #[arg(long)]
        suffixes: bool,
        #[arg(long)]
        fixes: bool,
    },
    /// Decide a property of a vertex set.
    #[command(group(ArgGroup::new("property").required(true).args(["cover", "colony", "dominion", "fixing_set"])))]
    CheckSet {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        set: String,
        #[arg(long)]
        cover: bool,
        #[arg(long)]
        colony: bool,
        #[arg(long)]
        dominion: bool,
        #[arg(long)]
        fixing_set: bool,
        /// Let the colony witness of a dominion use neighbours of `v`.
        #[arg(long)]
        open_rule: bool,
    },
    /// Permutations that fix the network.
    Permis {
        #[command(subcommand)]
        command: PermisCommand,
    },
    /// Build a reduction instance, optionally checking answer preservation.
    Reduce {
        #[arg(value_enum)]
        kind: ReductionKind,
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Decide source and target by brute force; exit 1 if the answers differ.
        #[arg(long)]
        verify: bool,
    },
    /// Shortest fixing word by iterative deepening.
    ShortestWord {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Search nodes before giving up.
        #[arg(long, default_value_t = DEFAULT_SHORTEST_BUDGET)]
        budget: u64,
    },
    /// List the kernels (maximal independent sets).
    Kernels {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Print one graph6 line per isomorphism class on `n` vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum PermisCommand {
    /// Exhaustive search; exit 1 when no permis exists.
    Find {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Build a permis from structure; exit 1 when no route applies.
    Construct {
        #[command(flatten)]
        source: ConstructSource,
        #[arg(long, value_enum, default_value_t = Route::Auto)]
        route: Route,
    },
    /// Look for a tethered subgraph without a permis; exit 1 when none is found.
    CertifyNone {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Classify every graph up to `--max-n` vertices, one JSON line per class.
    Census {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Keep the records already in `--out` and continue after them.
        #[arg(long)]
        resume: bool,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Larger graphs are reported as undecided.
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Give up after this many seconds.
    #[arg(long, value_name = "SECS")]
    timeout: Option<f64>,
}

#[derive(Args, Debug)]
struct ConstructSource {
    #[arg(long, conflicts_with = "outer")]
    graph: Option<String>,
    /// Outer graph of a composition; needs one `--part` per vertex.
    #[arg(long, requires = "part")]
    outer: Option<String>,
    #[arg(long)]
    part: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    Auto,
    Comparability,
    Simplicial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReductionKind {
    SetcoverColony,
    ColonyDominion,
    NondominionFixingset,
    FixingsetWord,
}

struct Settings {
    format: Format,
    parallel: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = if cli.deterministic { Some(1) } else { cli.workers };
    if let Some(w) = workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let ctx = Settings { format: cli.format, parallel: !cli.deterministic };
    match run(cli.command, &ctx) {
        Ok(report) => {
            report.print(ctx.format);
            ExitCode::from(if report.yes { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, ctx: &Settings) -> Result<Report> {
    match command {
        Command::Trajectory { graph, word, config, trace } => {
            let g = graph.load()?;
            trajectory(&g, &parse_word(&word, &g)?, config.parse()?, trace)
        }
        Command::CheckWord { graph, word, prefixes, suffixes, .. } => {
            let g = graph.load()?;
            let w = parse_word(&word, &g)?;
            let property = if prefixes {
                "prefixes"
            } else if suffixes {
                "suffixes"
            } else {
                "fixes"
            };
            check_word(&g, &w, property)
        }
        Command::CheckSet { graph, set, cover, colony, dominion, open_rule, .. } => {
            let g = graph.load()?;
            let s = parse_set(&set, &g)?;
            let rule = if open_rule { DominionRule::Open } else { DominionRule::Closed };
            if cover {
                check_cover(&g, s)
            } else if colony {
                check_colony(&g, s)
            } else if dominion {
                check_dominion(&g, s, rule)
            } else {
                check_fixing_set(&g, s)
            }
        }
        Command::Permis { command } => match command {
            PermisCommand::Find { graph, search } => permis_find(&graph.load()?, &search, ctx),
            PermisCommand::Construct { source, route } => permis_construct(&source, route, ctx),
            PermisCommand::CertifyNone { graph } => permis_certify(&graph.load()?),
            PermisCommand::Census { max_n, out, resume } => permis_census(max_n, out, resume, ctx),
        },
        Command::Reduce { kind, input, out, verify } => reduce(kind, &input, out.as_deref(), verify),
        Command::ShortestWord { graph, max_len, budget } => shortest_word(&graph.load()?, max_len, budget),
        Command::Kernels { graph } => kernels(&graph.load()?),
        Command::Enumerate { n } => enumerate(n),
    }
}

fn trajectory(g: &Graph, w: &Word, x: Configuration, trace: bool) -> Result<Report> {
    let (y, t) = apply_word_traced(g, x, w)?;
    let names = Names::new(g.n());
    let mut json = json!({ "x": x, "word": w, "y": y });
    let mut text = format!("{x} --{}--> {y}\n", names.word(w));
    if trace {
        json["trajectory"] = json!(t);
        text = t.0.iter().enumerate().fold(String::new(), |mut acc, (k, c)| {
            let step = k.checked_sub(1).map(|i| names.vertex(w.letters()[i])).unwrap_or_default();
            acc.push_str(&format!("{step:>3} {c}\n"));
            acc
        });
    }
    Ok(Report::new(true, json, text))
}

fn describe_witness(witness: &Witness, names: &Names) -> String {
    match *witness {
        Witness::Config { x, y } => format!("from {x} the word reaches {y}, which is not a kernel"),
        Witness::Edge { u, v, x } => {
            format!("edge {}{} is never visited; from {x} both ends stay 1", names.vertex(u), names.vertex(v))
        }
        Witness::Dominion { v, i, x } => format!(
            "dominion at {} with I = {}; from {x} the closed neighbourhood of {} stays 0",
            names.vertex(v),
            names.set(i),
            names.vertex(v)
        ),
    }
}

fn verdict_report(
    g: &Graph,
    property: &str,
    subject: String,
    verdict: WordVerdict,
    replay_on: &Word,
) -> Result<Report> {
    if !verdict.validate(g, replay_on) {
        bail!("internal error: {property} witness does not replay");
    }
    let names = Names::new(g.n());
    let mut text = format!("{property} {subject}: {}\n", yes_no(verdict.answer));
    if let Some(w) = &verdict.witness {
        text.push_str(&format!("witness: {}\n", describe_witness(w, &names)));
    }
    let json = json!({ "property": property, "answer": verdict.answer, "witness": verdict.witness });
    Ok(Report::new(verdict.answer, json, text))
}

fn check_word(g: &Graph, w: &Word, property: &str) -> Result<Report> {
    let verdict = match property {
        "prefixes" => prefixes(g, w)?,
        "suffixes" => suffixes(g, w)?,
        _ => fixes(g, w)?,
    };
    verdict_report(g, property, Names::new(g.n()).word(w), verdict, w)
}

fn check_cover(g: &Graph, s: kernelfix::VertexSet) -> Result<Report> {
    let names = Names::new(g.n());
    Ok(match is_vertex_cover(g, s) {
        Ok(()) => {
            Report::new(true, json!({ "property": "cover", "answer": true }), format!("cover {}: yes", names.set(s)))
        }
        Err((u, v)) => {
            if s.contains(u) || s.contains(v) || !g.has_edge(u, v) {
                bail!("internal error: uncovered edge witness is wrong");
            }
            Report::new(
                false,
                json!({ "property": "cover", "answer": false, "witness": { "kind": "edge", "u": u, "v": v } }),
                format!(
                    "cover {}: no\nwitness: edge {}{} is uncovered",
                    names.set(s),
                    names.vertex(u),
                    names.vertex(v)
                ),
            )
        }
    })
}

fn check_colony(g: &Graph, s: kernelfix::VertexSet) -> Result<Report> {
    let names = Names::new(g.n());
    Ok(match is_colony(g, s) {
        Some(w) => {
            if !w.validate(g, g.vertices(), s) {
                bail!("internal error: colony witness does not validate");
            }
            Report::new(
                true,
                json!({ "property": "colony", "answer": true, "witness": w }),
                format!("colony {}: yes\nwitness: independent I = {} dominates it", names.set(s), names.set(w.i)),
            )
        }
        None => {
            Report::new(false, json!({ "property": "colony", "answer": false }), format!("colony {}: no", names.set(s)))
        }
    })
}

fn check_dominion(g: &Graph, s: kernelfix::VertexSet, rule: DominionRule) -> Result<Report> {
    let names = Names::new(g.n());
    let rule_name = if rule == DominionRule::Open { "open" } else { "closed" };
    Ok(match is_dominion(g, s, rule) {
        Some(w) => {
            if !w.validate(g, s, rule) {
                bail!("internal error: dominion witness does not validate");
            }
            Report::new(
                true,
                json!({ "property": "dominion", "rule": rule_name, "answer": true, "witness": w }),
                format!("dominion {}: yes\nwitness: v = {}, I = {}", names.set(s), names.vertex(w.v), names.set(w.i)),
            )
        }
        None => Report::new(
            false,
            json!({ "property": "dominion", "rule": rule_name, "answer": false }),
            format!("dominion {}: no", names.set(s)),
        ),
    })
}

fn check_fixing_set(g: &Graph, s: kernelfix::VertexSet) -> Result<Report> {
    let subject = Names::new(g.n()).set(s);
    verdict_report(g, "fixing-set", subject, fixing_set(g, s)?, &doubled_word(s))
}

fn search_options(search: &SearchArgs, ctx: &Settings) -> Result<SearchOptions> {
    let deadline = match search.timeout {
        Some(secs) if secs.is_finite() && secs >= 0.0 => Some(Instant::now() + Duration::from_secs_f64(secs)),
        Some(secs) => bail!("invalid timeout {secs}"),
        None => None,
    };
    Ok(SearchOptions { max_order: search.max_order, deadline, parallel: ctx.parallel })
}

fn permis_find(g: &Graph, search: &SearchArgs, ctx: &Settings) -> Result<Report> {
    let verdict = find_permis_with(g, &search_options(search, ctx)?);
    let names = Names::new(g.n());
    match verdict.answer {
        PermisAnswer::Exists => {
            let w = verdict.word.clone().context("search reported a permis without a word")?;
            if !is_permis(g, &w)? {
                bail!("internal error: {w} is not a permis");
            }
            Ok(Report::new(true, json!(verdict), format!("permis: {}", names.word(&w))))
        }
        PermisAnswer::NotExists => Ok(Report::new(false, json!(verdict), "no permis (all permutations refuted)")),
        PermisAnswer::Unknown => bail!("undecided: graph larger than --max-order or --timeout reached"),
    }
}

fn permis_construct(source: &ConstructSource, route: Route, ctx: &Settings) -> Result<Report> {
    let parse = |t: &str| kernelfix::io::parse_graph_text(t).with_context(|| format!("reading graph {t:?}"));
    if let Some(outer) = &source.outer {
        let outer = parse(outer)?;
        let parts = source.part.iter().map(|p| parse(p)).collect::<Result<Vec<_>>>()?;
        let options = SearchOptions { parallel: ctx.parallel, ..SearchOptions::default() };
        let permis_of = |g: &Graph, what: &str| -> Result<Word> {
            find_permis_with(g, &options).word.with_context(|| format!("{what} has no permis"))
        };
        let part_words =
            parts.iter().enumerate().map(|(k, p)| permis_of(p, &format!("part {k}"))).collect::<Result<Vec<_>>>()?;
        let (c, w) = composition_permis(&outer, &parts, &part_words, &permis_of(&outer, "the outer graph")?)?;
        if !is_permis(&c.graph, &w)? {
            bail!("internal error: composed word is not a permis");
        }
        let text = format!("graph: {}\npermis: {}", write_graph6(&c.graph), Names::new(c.graph.n()).word(&w));
        return Ok(Report::new(
            true,
            json!({ "route": "composition", "graph6": write_graph6(&c.graph), "word": w }),
            text,
        ));
    }
    let g = parse(source.graph.as_deref().context("give --graph, or --outer with --part")?)?;
    let mut tried = Vec::new();
    for (name, r, build) in [
        ("comparability", Route::Comparability, comparability_permis as fn(&Graph) -> _),
        ("simplicial", Route::Simplicial, simplicial_permis),
    ] {
        if route != Route::Auto && route != r {
            continue;
        }
        tried.push(name);
        if let Some(w) = build(&g)? {
            if !is_permis(&g, &w)? {
                bail!("internal error: {name} route gave {w}, not a permis");
            }
            let text = format!("permis ({name} route): {}", Names::new(g.n()).word(&w));
            return Ok(Report::new(true, json!({ "route": name, "word": w }), text));
        }
    }
    Ok(Report::new(
        false,
        json!({ "route": null, "tried": tried }),
        format!("no constructive route applies (tried {})", tried.join(", ")),
    ))
}

fn permis_certify(g: &Graph) -> Result<Report> {
    let names = Names::new(g.n());
    match certify_no_permis_tethered(g, &mut NoPermisMemo::new())? {
        Some(cert) => {
            let Certificate::Tethered { set, .. } = &cert else {
                bail!("internal error: unexpected certificate kind");
            };
            let (inner, _) = g.induced_subgraph(*set);
            let options = SearchOptions { max_order: inner.n(), ..SearchOptions::default() };
            if !g.is_tethered(*set) || find_permis_with(&inner, &options).answer != PermisAnswer::NotExists {
                bail!("internal error: certificate does not check out");
            }
            let text =
                format!("no permis: S = {} is tethered and G[S] = {} has none", names.set(*set), write_graph6(&inner));
            Ok(Report::new(true, json!({ "certified": true, "certificate": cert }), text))
        }
        None => Ok(Report::new(
            false,
            json!({ "certified": false }),
            "no tethered certificate found (this does not mean a permis exists)",
        )),
    }
}

fn permis_census(max_n: usize, out: Option<PathBuf>, resume: bool, ctx: &Settings) -> Result<Report> {
    let options = SearchOptions { parallel: false, ..SearchOptions::default() };
    let summary = census::run(max_n, out.as_deref(), resume, &options)?;
    let json = json!({
        "classes": summary.classes,
        "without_permis": summary.without_permis,
        "resumed": summary.resumed,
    });
    let counts = summary.classes.iter().map(|(n, c)| format!("n={n}: {c}")).collect::<Vec<_>>().join(", ");
    let text = format!("classes: {counts}\nwithout permis: {}", summary.without_permis.join(" "));
    if out.is_none() {
        // Records already went to stdout; keep the stream pure JSON lines.
        eprintln!("{}", if ctx.format == Format::Json { json.to_string() } else { text });
        return Ok(Report::new(true, serde_json::Value::Null, String::new()).quiet());
    }
    Ok(Report::new(true, json, text))
}

fn targeted(path: &std::path::Path) -> Result<TargetedGraph> {
    let j: TargetedGraphJson = read_json(path)?;
    Ok(j.try_into()?)
}

fn reduce(kind: ReductionKind, input: &std::path::Path, out: Option<&std::path::Path>, verify: bool) -> Result<Report> {
    let (output, check) = match kind {
        ReductionKind::SetcoverColony => {
            let inst: SetCoverInstance = read_json(input)?;
            let t = setcover_to_colony(&inst)?;
            (json!(TargetedGraphJson::from(&t)), ReductionInput::SetCoverToColony(inst))
        }
        ReductionKind::ColonyDominion => {
            let src = targeted(input)?;
            let t = colony_to_dominion(&src.graph, src.target)?;
            (json!(TargetedGraphJson::from(&t)), ReductionInput::ColonyToDominion { graph: src.graph, set: src.target })
        }
        ReductionKind::NondominionFixingset => {
            let src = targeted(input)?;
            let t = nondominion_to_fixingset(&src.graph, src.target)?;
            (
                json!(TargetedGraphJson::from(&t)),
                ReductionInput::NonDominionToFixingSet { graph: src.graph, set: src.target },
            )
        }
        ReductionKind::FixingsetWord => {
            let src = targeted(input)?;
            let (g, w) = fixingset_to_fixingword(&src.graph, src.target)?;
            (
                json!({ "graph6": write_graph6(&g), "word": w }),
                ReductionInput::FixingSetToFixingWord { graph: src.graph, set: src.target },
            )
        }
    };
    let rendered = serde_json::to_string_pretty(&output)?;
    match out {
        Some(path) => std::fs::write(path, rendered + "\n").with_context(|| format!("writing {}", path.display()))?,
        None if !verify => return Ok(Report::new(true, output, rendered)),
        None => {}
    }
    if !verify {
        return Ok(Report::new(true, json!({ "written": out.map(|p| p.display().to_string()) }), "written"));
    }
    let report = verify_preservation(&check)?;
    let text = format!(
        "{}: source {}, target {}, {}",
        report.reduction,
        yes_no(report.source_answer),
        yes_no(report.target_answer),
        if report.preserved { "preserved" } else { "NOT preserved" }
    );
    let mut json = json!(report);
    if out.is_none() {
        json["output"] = output;
    }
    Ok(Report::new(report.preserved, json, text))
}

fn shortest_word(g: &Graph, max_len: usize, budget: u64) -> Result<Report> {
    let result = shortest_fixing_word(g, max_len, budget)?;
    let names = Names::new(g.n());
    match &result {
        ShortestWord::Found { word } => {
            if !fixes(g, word)?.answer {
                bail!("internal error: {word} does not fix");
            }
            Ok(Report::new(true, json!(result), format!("shortest fixing word: {}", names.word(word))))
        }
        ShortestWord::NoneUpTo { bound } => {
            Ok(Report::new(false, json!(result), format!("no fixing word of length <= {bound}")))
        }
        ShortestWord::Unknown { complete_up_to } => {
            bail!("budget exhausted; no fixing word of length <= {complete_up_to}")
        }
    }
}

fn kernels(g: &Graph) -> Result<Report> {
    let ks = enumerate_kernels(g);
    let names = Names::new(g.n());
    let text = ks.iter().map(|k| format!("{k} {}", names.set(k.ones()))).collect::<Vec<_>>().join("\n");
    Ok(Report::new(true, json!({ "kernels": ks }), text))
}

fn enumerate(n: usize) -> Result<Report> {
    let lines: Vec<String> = enumerate_graphs(n)?.iter().map(write_graph6).collect();
    Ok(Report::new(true, json!({ "n": n, "graph6": lines }), lines.join("\n")))
}
