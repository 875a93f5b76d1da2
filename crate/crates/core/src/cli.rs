//! The `sdke` command line.
//!
//! [`run`] takes the argument vector, the contents of standard input (read
//! only when an input path is `-`) and two writers, and returns the exit
//! code: 0 on success, 1 on domain errors, 2 on usage errors. Domain errors
//! are printed to stdout as `{"error": {"code": ..., "message": ...}}`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::decomposition::{sd_ke_partition, Certificate, SdKePartition};
use crate::determinantal::{
    count_sachs, determinant, factorization_report_for, for_each_sachs, permanent, DetMethod,
    FactorOptions, FactorizationReport, PermMethod, SachsComponent, DEFAULT_PERMANENT_BOUND,
    DEFAULT_SACHS_BOUND,
};
use crate::error::Error;
use crate::graph::{export_dot, parse_edge_list, serialize_edge_list, EdgeRef, Graph};
use crate::matching::{
    enumerate_maximum_matchings, enumerate_perfect_matchings, maximum_matching, parse_matching,
    perfect_matching, Matching, DEFAULT_ENUMERATION_BOUND,
};
use crate::verification::{random_matchable_graph, run_theorem_suite_with, SuiteConfig};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "sdke", version, about = "SD-KE decomposition and determinant factorization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Partition a matchable graph into its SD and KE parts.
    Decompose(DecomposeArgs),
    /// Determinant of the adjacency matrix.
    Det(DetArgs),
    /// Permanent of the adjacency matrix.
    Perm(PermArgs),
    /// Run every theorem check against brute-force oracles.
    Verify(VerifyArgs),
    /// Count or list Sachs subgraphs.
    Sachs(SachsArgs),
    /// Enumerate perfect or maximum matchings.
    Matchings(MatchingsArgs),
    /// Generate a random matchable graph as an edge list.
    Gen(GenArgs),
    /// Write the graph in DOT format.
    ExportDot(ExportDotArgs),
}

#[derive(Debug, Args)]
struct DecomposeArgs {
    input: String,
    /// `auto` or a matching file with one `u v` pair per line.
    #[arg(long, default_value = "auto")]
    matching: String,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
    /// Also write a decorated DOT file.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Largest order for which permanents are included.
    #[arg(long, default_value_t = 20, value_parser = positive)]
    max_n: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DetArg {
    Elimination,
    Sachs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PermArg {
    Ryser,
    Sachs,
}

#[derive(Debug, Args)]
struct DetArgs {
    input: String,
    #[arg(long, value_enum, default_value = "elimination")]
    method: DetArg,
    /// Vertex bound for Sachs enumeration.
    #[arg(long, default_value_t = DEFAULT_SACHS_BOUND, value_parser = positive)]
    max_n: usize,
}

#[derive(Debug, Args)]
struct PermArgs {
    input: String,
    #[arg(long, value_enum, default_value = "ryser")]
    method: PermArg,
    #[arg(long, default_value_t = DEFAULT_PERMANENT_BOUND, value_parser = positive)]
    max_n: usize,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    input: String,
    /// Vertex bound for the enumeration-based checks.
    #[arg(long, default_value_t = 12, value_parser = positive)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct SachsArgs {
    input: String,
    #[arg(long, conflicts_with = "count")]
    list: bool,
    #[arg(long)]
    count: bool,
    #[arg(long, default_value_t = DEFAULT_SACHS_BOUND, value_parser = positive)]
    max_n: usize,
}

#[derive(Debug, Args)]
struct MatchingsArgs {
    input: String,
    #[arg(long, conflicts_with = "maximum")]
    perfect: bool,
    #[arg(long)]
    maximum: bool,
    /// Print at most this many matchings.
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND, value_parser = positive)]
    max_n: usize,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    seed: u64,
}

#[derive(Debug, Args)]
struct ExportDotArgs {
    input: String,
    /// Color SD/KE vertices and highlight a maximum matching.
    #[arg(long)]
    decorate: bool,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(k) => Ok(k),
        Err(e) => Err(e.to_string()),
    }
}

/// A failure reported with exit code 1.
#[derive(Debug)]
struct Failure {
    code: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: e.code(),
            message: e.to_string(),
        }
    }
}

fn io_failure(what: &str, e: std::io::Error) -> Failure {
    Failure {
        code: "io",
        message: format!("{what}: {e}"),
    }
}

type Outcome = std::result::Result<(String, i32), Failure>;

/// Runs one command line. `argv[0]` is the program name.
pub fn run<S: AsRef<str>>(
    argv: &[S],
    stdin: &str,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv.iter().map(|s| s.as_ref())) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let (text, code) = match dispatch(cli.command, stdin) {
        Ok(done) => done,
        Err(f) => {
            let body = json!({ "error": { "code": f.code, "message": f.message } });
            (pretty(&body), 1)
        }
    };
    if stdout.write_all(text.as_bytes()).is_err() {
        return 1;
    }
    code
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn load(input: &str, stdin: &str) -> std::result::Result<Graph, Failure> {
    let text = if input == "-" {
        stdin.to_string()
    } else {
        std::fs::read_to_string(input).map_err(|e| io_failure(input, e))?
    };
    Ok(parse_edge_list(&text)?)
}

fn dispatch(command: Command, stdin: &str) -> Outcome {
    match command {
        Command::Decompose(a) => decompose(a, stdin),
        Command::Det(a) => {
            let g = load(&a.input, stdin)?;
            let method = match a.method {
                DetArg::Elimination => DetMethod::Elimination,
                DetArg::Sachs => DetMethod::Sachs,
            };
            let det = determinant(&g, method, a.max_n)?;
            let body = json!({
                "version": VERSION,
                "graph": graph_json(&g),
                "method": method,
                "det": det.to_string(),
            });
            Ok((pretty(&body), 0))
        }
        Command::Perm(a) => {
            let g = load(&a.input, stdin)?;
            let method = match a.method {
                PermArg::Ryser => PermMethod::Ryser,
                PermArg::Sachs => PermMethod::Sachs,
            };
            let options = FactorOptions {
                sachs_bound: a.max_n,
                permanent_bound: a.max_n,
                ..FactorOptions::default()
            };
            let perm = permanent(&g, method, &options)?;
            let body = json!({
                "version": VERSION,
                "graph": graph_json(&g),
                "method": method,
                "perm": perm.to_string(),
            });
            Ok((pretty(&body), 0))
        }
        Command::Verify(a) => verify(a, stdin),
        Command::Sachs(a) => sachs(a, stdin),
        Command::Matchings(a) => matchings(a, stdin),
        Command::Gen(a) => {
            let g = random_matchable_graph(a.n, a.p, a.seed)?;
            Ok((serialize_edge_list(&g), 0))
        }
        Command::ExportDot(a) => {
            let g = load(&a.input, stdin)?;
            let dot = if a.decorate {
                decorated_dot(&g)?
            } else {
                export_dot(&g, None, None)?
            };
            Ok((dot, 0))
        }
    }
}

fn decorated_dot(g: &Graph) -> std::result::Result<String, Failure> {
    match perfect_matching(g) {
        Ok(m) => {
            let p = sd_ke_partition(g, &m)?;
            Ok(export_dot(g, Some(&p), Some(&m))?)
        }
        Err(Error::NotMatchable) => Ok(export_dot(g, None, Some(&maximum_matching(g)))?),
        Err(e) => Err(e.into()),
    }
}

fn labels(g: &Graph, vs: &[usize]) -> Vec<i64> {
    vs.iter().map(|&v| g.label(v)).collect()
}

fn edges_json(g: &Graph, edges: &[EdgeRef]) -> Value {
    edges
        .iter()
        .map(|e| json!([g.label(e.u), g.label(e.v)]))
        .collect()
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "n": g.order(),
        "edges": edges_json(g, g.edges()),
        "labels": g.labels(),
        "hash": g.canonical_hash(),
    })
}

fn matching_json(g: &Graph, m: &Matching) -> Value {
    edges_json(g, &m.pairs())
}

fn partition_json(g: &Graph, p: &SdKePartition) -> Value {
    let witnesses: Vec<Value> = p
        .witnesses()
        .map(|(v, w)| {
            json!({
                "vertex": g.label(v),
                "kind": w.kind,
                "walk": w.labels(g),
            })
        })
        .collect();
    json!({
        "sd": p.sd_labels(g),
        "ke": p.ke_labels(g),
        "cut": edges_json(g, &p.cut),
        "witnesses": witnesses,
    })
}

fn determinants_json(r: &FactorizationReport) -> Value {
    json!({
        "det_g": r.det_g.to_string(),
        "det_sd": r.det_sd.to_string(),
        "det_ke": r.det_ke.to_string(),
        "ok": r.det_product_ok,
    })
}

fn permanents_json(r: &FactorizationReport) -> Value {
    json!({
        "perm_g": r.perm_g.to_string(),
        "perm_sd": r.perm_sd.to_string(),
        "perm_ke": r.perm_ke.to_string(),
        "ok": r.perm_product_ok,
    })
}

fn choose_matching(g: &Graph, source: &str) -> std::result::Result<Matching, Failure> {
    if source == "auto" {
        return Ok(perfect_matching(g)?);
    }
    let text = std::fs::read_to_string(source).map_err(|e| io_failure(source, e))?;
    Ok(parse_matching(g, &text)?)
}

fn decompose(a: DecomposeArgs, stdin: &str) -> Outcome {
    let g = load(&a.input, stdin)?;
    let m = choose_matching(&g, &a.matching)?;
    let p = sd_ke_partition(&g, &m)?;
    let with_perm = g.order() <= a.max_n;
    let options = FactorOptions {
        permanent_bound: a.max_n,
        ..FactorOptions::default()
    };
    let report = if with_perm {
        Some(factorization_report_for(&g, &p, &options)?)
    } else {
        None
    };
    if let Some(path) = &a.dot {
        let dot = export_dot(&g, Some(&p), Some(&m))?;
        std::fs::write(path, dot).map_err(|e| io_failure(&path.display().to_string(), e))?;
    }
    if a.text {
        return Ok((decompose_text(&g, &p, report.as_ref()), 0));
    }
    let det = crate::determinantal::det_adjacency;
    let determinants = match &report {
        Some(r) => determinants_json(r),
        None => {
            let (dg, ds, dk) = (det(&g), det(&p.sd_part), det(&p.ke_part));
            json!({
                "det_g": dg.to_string(),
                "det_sd": ds.to_string(),
                "det_ke": dk.to_string(),
                "ok": dg == &ds * &dk,
            })
        }
    };
    let body = json!({
        "version": VERSION,
        "graph": graph_json(&g),
        "matching": matching_json(&g, &m),
        "partition": partition_json(&g, &p),
        "determinants": determinants,
        "permanents": report.as_ref().map(permanents_json),
        "checks": [],
        "seeds": [],
    });
    Ok((pretty(&body), 0))
}

fn decompose_text(g: &Graph, p: &SdKePartition, report: Option<&FactorizationReport>) -> String {
    let join = |xs: Vec<i64>| {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = format!(
        "SD: {{{}}}\nKE: {{{}}}\ncut: {}\n",
        join(p.sd_labels(g)),
        join(p.ke_labels(g)),
        p.cut
            .iter()
            .map(|e| format!("{}-{}", g.label(e.u), g.label(e.v)))
            .collect::<Vec<_>>()
            .join(" ")
    );
    for (v, cert) in p.certificates.iter().enumerate() {
        if let Certificate::Witness(w) = cert {
            out.push_str(&format!("witness {}: {}\n", g.label(v), join(w.labels(g))));
        }
    }
    match report {
        Some(r) => out.push_str(&r.to_text()),
        None => out.push_str("permanents skipped: graph exceeds --max-n\n"),
    }
    out
}

fn verify(a: VerifyArgs, stdin: &str) -> Outcome {
    let g = load(&a.input, stdin)?;
    let config = SuiteConfig {
        enumeration_bound: a.max_n,
        seed: a.seed,
        ..SuiteConfig::default()
    };
    let m = perfect_matching(&g)?;
    let p = sd_ke_partition(&g, &m)?;
    let suite = run_theorem_suite_with(&g, &p, &config)?;
    let options = FactorOptions {
        permanent_bound: config.permanent_bound,
        ..FactorOptions::default()
    };
    let r = factorization_report_for(&g, &p, &options)?;
    let code = if suite.all_pass() { 0 } else { 1 };
    let body = json!({
        "version": VERSION,
        "graph": graph_json(&g),
        "matching": matching_json(&g, &m),
        "partition": partition_json(&g, &p),
        "determinants": determinants_json(&r),
        "permanents": permanents_json(&r),
        "checks": suite.checks,
        "seeds": [a.seed],
    });
    Ok((pretty(&body), code))
}

fn sachs(a: SachsArgs, stdin: &str) -> Outcome {
    let g = load(&a.input, stdin)?;
    let mut body = json!({
        "version": VERSION,
        "graph": graph_json(&g),
    });
    if a.list {
        let mut listed = Vec::new();
        for_each_sachs(&g, a.max_n, |s| {
            let components: Vec<Value> = s
                .components
                .iter()
                .map(|c| match c {
                    SachsComponent::K2(u, v) => json!({ "k2": [g.label(*u), g.label(*v)] }),
                    SachsComponent::Cycle(c) => json!({ "cycle": labels(&g, c) }),
                })
                .collect();
            listed.push(json!({
                "components": components,
                "det_term": s.determinant_term().to_string(),
                "perm_term": s.permanent_term().to_string(),
            }));
            std::ops::ControlFlow::Continue(())
        })?;
        body["count"] = json!(listed.len());
        body["subgraphs"] = Value::Array(listed);
    } else {
        body["count"] = json!(count_sachs(&g, a.max_n)?);
    }
    Ok((pretty(&body), 0))
}

fn matchings(a: MatchingsArgs, stdin: &str) -> Outcome {
    let g = load(&a.input, stdin)?;
    let (kind, family) = if a.maximum {
        ("maximum", enumerate_maximum_matchings(&g, a.max_n)?)
    } else {
        ("perfect", enumerate_perfect_matchings(&g, a.max_n)?)
    };
    let shown = a.limit.unwrap_or(family.len()).min(family.len());
    let listed: Vec<Value> = family
        .iter()
        .take(shown)
        .map(|m| matching_json(&g, m))
        .collect();
    let body = json!({
        "version": VERSION,
        "graph": graph_json(&g),
        "kind": kind,
        "count": family.len(),
        "truncated": shown < family.len(),
        "matchings": listed,
    });
    Ok((pretty(&body), 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["sdke"];
        argv.extend_from_slice(args);
        let code = run(&argv, stdin, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn det_of_k2_from_stdin() {
        let (code, out, _) = run_str(&["det", "-", "--method", "sachs"], "2 1\n0 1\n");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["det"], "-1");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&[], "").0, 2);
        assert_eq!(run_str(&["det", "-", "--method", "lu"], "").0, 2);
        assert_eq!(run_str(&["verify", "-", "--max-n", "0"], "").0, 2);
    }

    #[test]
    fn malformed_input_exits_1() {
        let (code, out, _) = run_str(&["det", "-"], "2 1\n0 0\n");
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"]["code"], "loop_edge");
    }

    #[test]
    fn gen_is_deterministic() {
        let a = run_str(&["gen", "--n", "8", "--p", "0.3", "--seed", "5"], "");
        let b = run_str(&["gen", "--n", "8", "--p", "0.3", "--seed", "5"], "");
        assert_eq!(a, b);
        assert_eq!(a.0, 0);
        assert!(a.1.starts_with("8 "));
        assert_eq!(run_str(&["gen", "--n", "7", "--p", "0.3", "--seed", "5"], "").0, 1);
    }
}
