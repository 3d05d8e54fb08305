//! `seqrecon`: deletion balls, intersections, N(n,d,t) values and
//! reconstruction experiments from the command line.
//!
//! Exit status: 0 success, 1 computation failure (failed claim, failed
//! experiment, cache error), 2 usage or range error.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use seqrecon::cache::Cache;
use seqrecon::delball::{ball_size, deletion_ball, levenshtein_distance};
use seqrecon::formulas::{self, construct_extremal};
use seqrecon::intersect::{intersection_elements, intersection_size};
use seqrecon::reconstruct::threshold_experiment;
use seqrecon::search::{self, nvalue_search, ClaimStatus, SearchOptions, SearchReport};
use seqrecon::{BinarySequence, Error};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "seqrecon", version, about = "Deletion balls and sequence reconstruction")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,

    /// Cache directory (default: $SEQRECON_CACHE_DIR, else ./.seqrecon-cache).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Formula,
    Table,
    Search,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CodeKind {
    Greedy,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Size (and optionally elements) of the deletion ball D_t(x).
    Ball {
        #[arg(long, value_parser = parse_seq)]
        x: BinarySequence,
        #[arg(long, allow_negative_numbers = true)]
        t: i64,
        /// List the elements.
        #[arg(long)]
        elements: bool,
    },
    /// Deletion (Levenshtein) distance n - LCS(x, y).
    Distance {
        #[arg(long, value_parser = parse_seq)]
        x: BinarySequence,
        #[arg(long, value_parser = parse_seq)]
        y: BinarySequence,
    },
    /// |D_s(x) ∩ D_t(y)|.
    Intersect {
        #[arg(long, value_parser = parse_seq)]
        x: BinarySequence,
        #[arg(long, value_parser = parse_seq)]
        y: BinarySequence,
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
        #[arg(long, allow_negative_numbers = true)]
        t: i64,
        /// List the common elements.
        #[arg(long)]
        witnesses: bool,
    },
    /// N(n, d, t) from a closed form, a table of known values, or exhaustive search.
    Nvalue {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, allow_negative_numbers = true)]
        t: i64,
        #[arg(long, value_enum, default_value_t = Mode::Formula)]
        mode: Mode,
        /// Search worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Allow searches up to n = 16.
        #[arg(long)]
        extended: bool,
        /// Neither read nor write the search cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Extremal pair for (n, d) and its verified intersection at radius t.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Radius (default 4 for d = 3, 1 for d = 1).
        #[arg(long)]
        t: Option<i64>,
    },
    /// Recompute the tabulated and computer-searched constants.
    VerifyClaims {
        /// Check a single claim id.
        #[arg(long)]
        only: Option<String>,
        /// Also recompute claims that need n = 14.
        #[arg(long)]
        extended: bool,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// List claim ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Reconstruction threshold experiment over simulated deletion channels.
    ReconstructSim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: i64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = CodeKind::Greedy)]
        code: CodeKind,
        /// Also write the JSON report to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Inspect or clear the search cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug)]
enum CacheAction {
    /// Print the cache directory.
    Path,
    /// List cached (n, d, t) keys.
    List,
    /// Show one cached report.
    Show {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: i64,
    },
    /// Delete every cached report.
    Clear,
}

fn parse_seq(text: &str) -> Result<BinarySequence, String> {
    BinarySequence::parse(text).map_err(|e| e.to_string())
}

/// What a command produced, in every format it supports.
struct Rendered {
    params: Value,
    text: String,
    json: Value,
    csv: Option<String>,
    success: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Cache(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    match run(&cli) {
        Ok(out) => {
            emit(&cli, name, out.0);
            ExitCode::from(out.1)
        }
        Err(f) => {
            eprintln!("seqrecon {name}: error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Ball { .. } => "ball",
        Command::Distance { .. } => "distance",
        Command::Intersect { .. } => "intersect",
        Command::Nvalue { .. } => "nvalue",
        Command::Construct { .. } => "construct",
        Command::VerifyClaims { .. } => "verify-claims",
        Command::ReconstructSim { .. } => "reconstruct-sim",
        Command::Cache { .. } => "cache",
    }
}

/// Writes the result to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(cli: &Cli, name: &str, r: Rendered) {
    let body = match cli.output {
        Output::Text => format!("# {name} {}\n{}", echo(&r.params), r.text),
        Output::Json => {
            let mut doc = json!({
                "schema_version": SCHEMA_VERSION,
                "command": name,
                "params": r.params,
            });
            if let (Value::Object(doc), Value::Object(body)) = (&mut doc, r.json) {
                doc.extend(body);
            }
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
        Output::Csv => {
            eprintln!("# {name} {}", echo(&r.params));
            r.csv.expect("csv support checked before running")
        }
    };
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(body.as_bytes()).and_then(|()| out.flush());
}

fn echo(params: &Value) -> String {
    match params {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn supports_csv(c: &Command) -> bool {
    matches!(c, Command::Nvalue { .. } | Command::VerifyClaims { .. })
}

fn cache_for(cli: &Cli) -> Cache {
    cli.cache_dir.clone().map_or_else(Cache::from_env, Cache::new)
}

fn run(cli: &Cli) -> Result<(Rendered, u8), Failure> {
    if cli.output == Output::Csv && !supports_csv(&cli.command) {
        return Err(Failure::usage(
            "--output csv is only available for nvalue and verify-claims",
        ));
    }
    let rendered = match &cli.command {
        Command::Ball { x, t, elements } => ball(x, *t, *elements),
        Command::Distance { x, y } => distance(x, y)?,
        Command::Intersect { x, y, s, t, witnesses } => intersect(x, *s, y, *t, *witnesses),
        Command::Nvalue {
            n,
            d,
            t,
            mode,
            threads,
            extended,
            no_cache,
        } => {
            let cache = (!no_cache).then(|| cache_for(cli));
            nvalue(*n, *d, *t, *mode, *threads, *extended, cache)?
        }
        Command::Construct { n, d, t } => construct(*n, *d, *t)?,
        Command::VerifyClaims {
            only,
            extended,
            threads,
            list,
        } => verify_claims(only.as_deref(), *extended, *threads, *list)?,
        Command::ReconstructSim {
            n,
            d,
            t,
            trials,
            seed,
            code,
            json,
        } => reconstruct_sim(*n, *d, *t, *trials, *seed, *code, json.as_ref())?,
        Command::Cache { action } => cache_cmd(&cache_for(cli), action)?,
    };
    let code = if rendered.success { 0 } else { 1 };
    Ok((rendered, code))
}

fn ball(x: &BinarySequence, t: i64, elements: bool) -> Rendered {
    let size = ball_size(x, t);
    let mut text = format!("{size}\n");
    let mut body = json!({ "size": size });
    if elements {
        let els: Vec<String> = deletion_ball(x, t).elements().iter().map(|e| e.to_string()).collect();
        for e in &els {
            writeln!(text, "{e}").unwrap();
        }
        body["elements"] = json!(els);
    }
    Rendered {
        params: json!({ "x": x, "t": t, "elements": elements }),
        text,
        json: body,
        csv: None,
        success: true,
    }
}

fn distance(x: &BinarySequence, y: &BinarySequence) -> Result<Rendered, Failure> {
    let dist = levenshtein_distance(x, y)?;
    Ok(Rendered {
        params: json!({ "x": x, "y": y }),
        text: format!("{dist}\n"),
        json: json!({ "distance": dist }),
        csv: None,
        success: true,
    })
}

fn intersect(x: &BinarySequence, s: i64, y: &BinarySequence, t: i64, witnesses: bool) -> Rendered {
    let size = intersection_size(x, s, y, t);
    let mut text = format!("{size}\n");
    let mut body = json!({ "size": size });
    if witnesses {
        let els: Vec<String> = intersection_elements(x, s, y, t).iter().map(|e| e.to_string()).collect();
        for e in &els {
            writeln!(text, "{e}").unwrap();
        }
        body["elements"] = json!(els);
    }
    Rendered {
        params: json!({ "x": x, "s": s, "y": y, "t": t, "witnesses": witnesses }),
        text,
        json: body,
        csv: None,
        success: true,
    }
}

fn searched(
    n: usize,
    d: usize,
    t: i64,
    threads: usize,
    extended: bool,
    cache: Option<Cache>,
) -> Result<(SearchReport, &'static str), Failure> {
    let opts = SearchOptions {
        threads,
        symmetry: true,
        max_n: if extended { search::EXTENDED_MAX_N } else { search::DEFAULT_MAX_N },
    };
    let Some(cache) = cache else {
        return Ok((nvalue_search(n, d, t, &opts)?, "off"));
    };
    // Validate before touching the cache so range errors stay usage errors.
    if n > opts.max_n {
        return Err(nvalue_search(n, d, t, &opts).unwrap_err().into());
    }
    if let Some(report) = cache.load(n, d, t)? {
        return Ok((report, "hit"));
    }
    let report = nvalue_search(n, d, t, &opts)?;
    cache.store(&report)?;
    Ok((report, "miss"))
}

fn nvalue(
    n: usize,
    d: usize,
    t: i64,
    mode: Mode,
    threads: usize,
    extended: bool,
    cache: Option<Cache>,
) -> Result<Rendered, Failure> {
    let mode_name = format!("{mode:?}").to_lowercase();
    let params = json!({
        "n": n, "d": d, "t": t, "mode": mode_name, "threads": threads,
        "extended": extended, "cache": cache.is_some(),
    });
    let (value, source, mut body, mut extra_text) = match mode {
        Mode::Formula => {
            let (value, name) = formulas::closed_form(n, d, t).ok_or_else(|| {
                Failure::usage(format!("no closed form applies to (n, d, t) = ({n}, {d}, {t})"))
            })?;
            (value, "formula", json!({ "formula": name }), format!("formula: {name}\n"))
        }
        Mode::Table => {
            let value = formulas::tabulated(n, d, t).ok_or_else(|| {
                Failure::usage(format!("no tabulated value for (n, d, t) = ({n}, {d}, {t})"))
            })?;
            (value, "table", json!({}), String::new())
        }
        Mode::Search => {
            let (report, cache_state) = searched(n, d, t, threads, extended, cache)?;
            let mut text = String::new();
            if let Some(w) = &report.witness {
                writeln!(text, "witness: x={} y={} distance={} intersection={}", w.x, w.y, w.distance, w.intersection)
                    .unwrap();
            }
            writeln!(text, "pairs_scanned: {} classes_scanned: {}", report.pairs_scanned, report.classes_scanned)
                .unwrap();
            writeln!(text, "elapsed_us: {} cache: {cache_state}", report.elapsed_us).unwrap();
            let body = json!({
                "witness": report.witness.map(|w| json!({
                    "x": w.x, "y": w.y, "distance": w.distance, "intersection": w.intersection,
                })),
                "pairs_scanned": report.pairs_scanned,
                "classes_scanned": report.classes_scanned,
                "timing": { "elapsed_us": report.elapsed_us, "cache": cache_state },
            });
            (report.value, "search", body, text)
        }
    };
    body["n"] = json!(n);
    body["d"] = json!(d);
    body["t"] = json!(t);
    body["value"] = json!(value);
    body["source"] = json!(source);
    extra_text.insert_str(0, &format!("N({n},{d},{t}) = {value} [{source}]\n"));
    Ok(Rendered {
        params,
        text: extra_text,
        json: body,
        csv: Some(format!("n,d,t,value,source\n{n},{d},{t},{value},{source}\n")),
        success: true,
    })
}

fn construct(n: usize, d: usize, t: Option<i64>) -> Result<Rendered, Failure> {
    let t = t.unwrap_or(if d == 3 { 4 } else { 1 });
    let w = construct_extremal(n, d, t)?;
    let origin = serde_json::to_value(w.origin).expect("json");
    Ok(Rendered {
        params: json!({ "n": n, "d": d, "t": t }),
        text: format!(
            "x = {}\ny = {}\ndistance = {}\nintersection = {}\nconstruction = {}\n",
            w.x,
            w.y,
            w.distance,
            w.intersection,
            origin.as_str().unwrap_or_default()
        ),
        json: json!({
            "x": w.x, "y": w.y, "distance": w.distance,
            "intersection": w.intersection, "construction": origin,
        }),
        csv: None,
        success: true,
    })
}

fn verify_claims(only: Option<&str>, extended: bool, threads: usize, list: bool) -> Result<Rendered, Failure> {
    let params = json!({ "only": only, "extended": extended, "threads": threads, "list": list });
    if list {
        let ids = search::claim_ids();
        return Ok(Rendered {
            params,
            text: ids.iter().map(|id| format!("{id}\n")).collect(),
            csv: Some(std::iter::once("claim_id\n".to_string()).chain(ids.iter().map(|id| format!("{id}\n"))).collect()),
            json: json!({ "claim_ids": ids }),
            success: true,
        });
    }
    let records = search::verify_constants(extended, only, threads)?;
    let failed = records.iter().filter(|r| !r.passed()).count();
    let trusted = records.iter().filter(|r| r.status == ClaimStatus::TrustedNotRecomputed).count();
    let status = |s: ClaimStatus| serde_json::to_value(s).expect("json").as_str().unwrap_or_default().to_string();
    let relation = |r: search::Relation| serde_json::to_value(r).expect("json").as_str().unwrap_or_default().to_string();
    let mut text = String::new();
    let mut csv = String::from("claim_id,expected,computed,relation,status\n");
    for r in &records {
        let computed = r.computed.map_or("-".to_string(), |c| c.to_string());
        writeln!(
            text,
            "{:<24} expected {:>4} {:<8} computed {:>4}  {}",
            r.claim_id,
            r.expected,
            relation(r.relation),
            computed,
            status(r.status).to_uppercase()
        )
        .unwrap();
        writeln!(csv, "{},{},{},{},{}", r.claim_id, r.expected, r.computed.map_or(String::new(), |c| c.to_string()), relation(r.relation), status(r.status)).unwrap();
    }
    writeln!(
        text,
        "{} claims: {} passed, {} failed, {} trusted without recomputation",
        records.len(),
        records.len() - failed - trusted,
        failed,
        trusted
    )
    .unwrap();
    Ok(Rendered {
        params,
        text,
        json: json!({ "claims": records, "failed": failed }),
        csv: Some(csv),
        success: failed == 0,
    })
}

fn reconstruct_sim(
    n: usize,
    d: usize,
    t: i64,
    trials: usize,
    seed: u64,
    _code: CodeKind,
    out: Option<&PathBuf>,
) -> Result<Rendered, Failure> {
    let report = threshold_experiment(n, d, t, trials, seed)?;
    let doc = serde_json::to_value(&report).expect("json");
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&doc).expect("json") + "\n";
        std::fs::write(path, text).map_err(|e| Failure {
            code: 1,
            message: format!("{}: {e}", path.display()),
        })?;
    }
    let mut text = String::new();
    writeln!(
        text,
        "threshold: N({n},{d},{t}) = {} [{}], {} reads per trial",
        report.threshold.nvalue, report.threshold.source, report.threshold.reads
    )
    .unwrap();
    writeln!(
        text,
        "code: {}, {} words ({} with enough distinct reads)",
        report.code.kind, report.code.size, report.code.eligible
    )
    .unwrap();
    writeln!(
        text,
        "positive: {}/{} trials decoded uniquely ({} skipped), pass rate {:.4}",
        report.unique_decodes, report.trials_run, report.trials_skipped, report.positive_pass_rate
    )
    .unwrap();
    match &report.sharpness_witness {
        Some(w) => writeln!(
            text,
            "sharpness: x={} y={} with {} shared reads -> {} candidates",
            w.x,
            w.y,
            w.reads_count,
            w.candidates.len()
        )
        .unwrap(),
        None => writeln!(text, "sharpness: no extremal pair available").unwrap(),
    }
    let ok = report.confirms_threshold();
    writeln!(text, "result: {}", if ok { "threshold confirmed" } else { "threshold NOT confirmed" }).unwrap();
    let mut body = doc;
    body.as_object_mut().expect("object").remove("schema_version");
    Ok(Rendered {
        params: json!({ "n": n, "d": d, "t": t, "trials": trials, "seed": seed, "code": "greedy" }),
        text,
        json: body,
        csv: None,
        success: ok,
    })
}

fn cache_cmd(cache: &Cache, action: &CacheAction) -> Result<Rendered, Failure> {
    let dir = cache.dir().display().to_string();
    let (text, body) = match action {
        CacheAction::Path => (format!("{dir}\n"), json!({ "dir": dir })),
        CacheAction::List => {
            let keys = cache.keys()?;
            let text = keys.iter().map(|(n, d, t)| format!("n={n} d={d} t={t}\n")).collect();
            let keys: Vec<Value> = keys.iter().map(|(n, d, t)| json!({ "n": n, "d": d, "t": t })).collect();
            (text, json!({ "dir": dir, "entries": keys }))
        }
        CacheAction::Show { n, d, t } => match cache.load(*n, *d, *t)? {
            Some(r) => {
                let witness = r.witness.map(|w| format!("{} {}", w.x, w.y)).unwrap_or_else(|| "-".into());
                (
                    format!("N({n},{d},{t}) = {} witness: {witness}\n", r.value),
                    json!({ "entry": r }),
                )
            }
            None => {
                return Err(Failure {
                    code: 1,
                    message: format!("no current cache entry for ({n}, {d}, {t}) in {dir}"),
                })
            }
        },
        CacheAction::Clear => {
            let removed = cache.clear()?;
            (format!("removed {removed} entries\n"), json!({ "removed": removed }))
        }
    };
    let action_name = match action {
        CacheAction::Path => "path",
        CacheAction::List => "list",
        CacheAction::Show { .. } => "show",
        CacheAction::Clear => "clear",
    };
    Ok(Rendered {
        params: json!({ "action": action_name, "dir": dir }),
        text,
        json: body,
        csv: None,
        success: true,
    })
}
