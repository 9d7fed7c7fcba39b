//! Command-line front end: the ring-expression DSL, command dispatch and
//! report rendering. Every command produces one JSON value; the text output
//! is rendered from that same value.

pub mod expr;
mod render;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::classify::{
    check_remark_2_2, classify_element, classify_ring, potent_nilpotent_decompose,
    potent_split_with, q_bound, split_candidates, uniform_period, ProfileOptions, SplitMode,
};
use crate::harness::{run_suite, search_property, verify_theorem, SuiteConfig, TheoremStatus};
use crate::ring::{Elem, FiniteRing, BUILD_CAP, DEFAULT_CAP};
use crate::{Result, RingError};

pub use render::render_text;

pub const FORMAT_VERSION: &str = "ringlab/1";

/// Largest ring on which `radical` also runs the brute-force scan.
const RADICAL_BRUTE_MAX: usize = 4096;

#[derive(Parser, Debug)]
#[command(
    name = "ringlab",
    version,
    about = "Finite rings: classification, decompositions and theorem checks"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Order cap. Precedence: this flag, then the config file, then
    /// RINGLAB_CAP, then the built-in default.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Suite config (TOML); the shipped default when absent.
    #[arg(long, global = true)]
    pub config: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DecomposeMode {
    /// Potent plus nilpotent.
    Potent,
    /// Tripotent plus potent, for matrices over a potent ring.
    Tripotent,
    /// Idempotent plus potent; needs 3 to be a unit of the base.
    Idempotent,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate every predicate of the property profile.
    Classify {
        expr: String,
        /// Exponent for the m-nil-clean flags.
        #[arg(long, default_value_t = 3)]
        m: u64,
    },
    /// Element-level predicates for one element.
    Element {
        expr: String,
        #[arg(long, value_parser = parse_elem)]
        elem: Elem,
    },
    /// Split elements into potent and nilpotent parts (or tripotent and
    /// potent parts of a matrix).
    Decompose {
        expr: String,
        /// Every element when absent.
        #[arg(long, value_parser = parse_elem)]
        elem: Option<Elem>,
        #[arg(long, value_enum, default_value_t = DecomposeMode::Potent)]
        mode: DecomposeMode,
    },
    /// The Jacobson radical, by structure and by brute force.
    Radical { expr: String },
    /// Least (n, k) with x^(n+k) = x^n for every x.
    UniformPeriod { expr: String },
    /// The exponent q with A^q − A nilpotent over M(n, R).
    Qbound {
        expr: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Run one registered theorem check.
    Verify {
        id: String,
        /// Largest p-group order for the endomorphism-ring checks.
        #[arg(long)]
        max_group: Option<u64>,
        /// Exponent range, `a..b`.
        #[arg(long)]
        m: Option<String>,
        /// Replace the configured ring instances.
        #[arg(long)]
        ring: Vec<String>,
    },
    /// Run every registered theorem check.
    Suite {
        /// Comma-separated theorem ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
    },
    /// Evaluate a predicate over a family with parameter `n`.
    Search {
        predicate: String,
        family: String,
        #[arg(long)]
        bound: u64,
        #[arg(long, default_value_t = 2)]
        from: u64,
        #[arg(long, default_value_t = 3)]
        m: u64,
    },
}

fn parse_elem(s: &str) -> std::result::Result<Elem, String> {
    s.trim()
        .trim_start_matches('#')
        .parse()
        .map_err(|_| format!("`{s}` is not an element index"))
}

/// A report and the exit code it maps to.
#[derive(Debug)]
pub struct Outcome {
    pub report: Value,
    pub exit: i32,
}

/// Captured output of one invocation.
#[derive(Debug)]
pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses the arguments, executes and renders. Usage, parse and cap errors
/// exit 1; failed verifications and counterexamples exit 2.
pub fn run<I, T>(args: I) -> Run
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Run {
                    stdout: text,
                    stderr: String::new(),
                    code: 0,
                },
                _ => Run {
                    stdout: String::new(),
                    stderr: text,
                    code: 1,
                },
            };
        }
    };
    match execute(&cli) {
        Ok(out) => Run {
            stdout: render(&out.report, cli.format),
            stderr: String::new(),
            code: out.exit,
        },
        Err(e) => Run {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 1,
        },
    }
}

pub fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => render_text(report),
    }
}

struct Settings {
    suite: SuiteConfig,
    /// Cap from the flag, a config file or the environment.
    cap: Option<usize>,
}

fn env_cap() -> Result<Option<usize>> {
    match std::env::var("RINGLAB_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| RingError::Config(format!("RINGLAB_CAP=`{v}` is not a number"))),
        Err(_) => Ok(None),
    }
}

fn settings(cli: &Cli) -> Result<Settings> {
    let (mut suite, file_cap) = match &cli.config {
        Some(path) => {
            let s = SuiteConfig::load(path)?;
            let cap = s.cap;
            (s, cap)
        }
        None => (SuiteConfig::default_suite(), None),
    };
    let env = env_cap()?;
    suite.cap = suite.cap.or(env);
    if let Some(seed) = cli.seed {
        suite.seed = seed;
    }
    Ok(Settings {
        suite,
        cap: cli.cap.or(file_cap).or(env),
    })
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn header(name: &str, args: Value, ring: Option<&FiniteRing>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("format".into(), json!(FORMAT_VERSION));
    m.insert("command".into(), json!({ "name": name, "args": args }));
    if let Some(r) = ring {
        m.insert("ring".into(), json!(r.expr()));
        m.insert("order".into(), json!(r.order()));
        m.insert("characteristic".into(), to_value(&r.characteristic()));
    }
    m
}

fn extend(m: &mut Map<String, Value>, payload: Value) {
    if let Value::Object(p) = payload {
        for (k, v) in p {
            m.entry(k).or_insert(v);
        }
    }
}

fn elem_in(ring: &FiniteRing, x: Elem) -> Result<Elem> {
    if (x as usize) < ring.order() {
        Ok(x)
    } else {
        Err(RingError::InvalidParameter(format!(
            "#{x} is not an element of {} (order {})",
            ring.expr(),
            ring.order()
        )))
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let st = settings(cli)?;
    let build_cap = st.cap.unwrap_or(BUILD_CAP);
    let search_cap = st.cap.unwrap_or(DEFAULT_CAP);
    let build = |text: &str| expr::parse_expr(text)?.build(build_cap);
    let done = |m: Map<String, Value>, exit: i32| Outcome {
        report: Value::Object(m),
        exit,
    };
    match &cli.command {
        Command::Classify { expr, m } => {
            let r = build(expr)?;
            let p = classify_ring(
                &r,
                ProfileOptions {
                    m: *m,
                    cap: search_cap,
                },
            );
            let mut out = header("classify", json!({ "expr": expr, "m": m }), Some(&r));
            extend(&mut out, to_value(&p));
            Ok(done(out, 0))
        }
        Command::Element { expr, elem } => {
            let r = build(expr)?;
            let x = elem_in(&r, *elem)?;
            let mut out = header("element", json!({ "expr": expr, "elem": elem }), Some(&r));
            extend(&mut out, to_value(&classify_element(&r, x)));
            Ok(done(out, 0))
        }
        Command::Decompose { expr, elem, mode } => {
            let r = build(expr)?;
            let xs: Vec<Elem> = match elem {
                Some(x) => vec![elem_in(&r, *x)?],
                None => r.elements().collect(),
            };
            let args = json!({ "expr": expr, "elem": elem, "mode": mode_name(*mode) });
            let mut out = header("decompose", args, Some(&r));
            let (rows, failures) = decompose(&r, &xs, *mode)?;
            out.insert("mode".into(), json!(mode_name(*mode)));
            out.insert("elements".into(), json!(xs.len()));
            out.insert("failures".into(), json!(failures));
            match elem {
                Some(_) => out.insert("decomposition".into(), rows.into_iter().next().unwrap()),
                None => out.insert("decompositions".into(), Value::Array(rows)),
            };
            Ok(done(out, if failures == 0 { 0 } else { 2 }))
        }
        Command::Radical { expr } => {
            let r = build(expr)?;
            let (payload, agree) = radical(&r)?;
            let mut out = header("radical", json!({ "expr": expr }), Some(&r));
            extend(&mut out, payload);
            Ok(done(out, if agree { 0 } else { 2 }))
        }
        Command::UniformPeriod { expr } => {
            let r = build(expr)?;
            let u = uniform_period(&r);
            let rem = check_remark_2_2(&r);
            let mut out = header("uniform-period", json!({ "expr": expr }), Some(&r));
            out.insert("period".into(), to_value(&u));
            out.insert(
                "law".into(),
                json!(format!("x^{} = x^{}", u.index + u.period, u.index)),
            );
            out.insert("potent".into(), json!(u.index == 1));
            out.insert("remark_checks_pass".into(), json!(rem.passed()));
            out.insert("char_divides_2n3".into(), to_value(&rem.char_divides));
            out.insert("opposite_parity".into(), to_value(&rem.opposite_parity));
            Ok(done(out, if rem.passed() { 0 } else { 2 }))
        }
        Command::Qbound { expr, n } => {
            let r = build(expr)?;
            let q = q_bound(&r, *n, build_cap)?;
            let mut out = header("qbound", json!({ "expr": expr, "n": n }), Some(&r));
            let bad = q.violation.is_some();
            extend(&mut out, to_value(&q));
            Ok(done(out, if bad { 2 } else { 0 }))
        }
        Command::Verify {
            id,
            max_group,
            m,
            ring,
        } => {
            let mut suite = st.suite;
            let mut tc = suite.theorem(id);
            if let Some(g) = max_group {
                tc.p_groups = vec![(2, *g), (3, *g)];
            }
            if let Some(m) = m {
                crate::harness::parse_range(m)?;
                tc.m = Some(m.clone());
            }
            if !ring.is_empty() {
                tc.rings = ring.clone();
            }
            suite.theorems.insert(id.clone(), tc);
            let rep = verify_theorem(id, &suite, cli.cap)?;
            let failed = rep.status == TheoremStatus::Fail;
            let failures: Vec<Value> = rep.failures().map(to_value).collect();
            let mut theorem = to_value(&rep);
            theorem["failures"] = Value::Array(failures);
            let args = json!({ "id": id, "max_group": max_group, "m": m, "ring": ring });
            let mut out = header("verify", args, None);
            out.insert("seed".into(), json!(suite.seed));
            out.insert("passed".into(), json!(!failed));
            out.insert("theorem".into(), theorem);
            Ok(done(out, if failed { 2 } else { 0 }))
        }
        Command::Suite { only } => {
            let rep = run_suite(&st.suite, only.as_deref(), cli.cap)?;
            let mut out = header("suite", json!({ "only": only }), None);
            extend(&mut out, to_value(&rep));
            Ok(done(out, if rep.passed { 0 } else { 2 }))
        }
        Command::Search {
            predicate,
            family,
            bound,
            from,
            m,
        } => {
            let rep = search_property(predicate, family, *from, *bound, *m, search_cap)?;
            let args = json!({
                "predicate": predicate, "family": family,
                "from": from, "bound": bound, "m": m,
            });
            let mut out = header("search", args, None);
            let found = rep.first_counterexample.is_some();
            extend(&mut out, to_value(&rep));
            Ok(done(out, if found { 2 } else { 0 }))
        }
    }
}

fn mode_name(m: DecomposeMode) -> &'static str {
    match m {
        DecomposeMode::Potent => "potent",
        DecomposeMode::Tripotent => "tripotent",
        DecomposeMode::Idempotent => "idempotent",
    }
}

/// One row per element and the number of elements without a valid split.
fn decompose(r: &FiniteRing, xs: &[Elem], mode: DecomposeMode) -> Result<(Vec<Value>, usize)> {
    let mut failures = 0;
    let rows = match mode {
        DecomposeMode::Potent => xs
            .iter()
            .map(|&x| {
                let d = potent_nilpotent_decompose(r, x);
                let check = d.verify(r);
                failures += check.is_err() as usize;
                let mut row = json!({
                    "x": x,
                    "label": r.label(x),
                    "a": d.a,
                    "a_label": r.label(d.a),
                    "b": d.b,
                    "b_label": r.label(d.b),
                    "period": d.period,
                    "m_potency": d.m_potency,
                    "nil_index": d.nil_index,
                    "commute": d.commute,
                    "annihilate": d.annihilate,
                    "verified": check.is_ok(),
                });
                if let Err(e) = check {
                    row["error"] = json!(e);
                }
                row
            })
            .collect(),
        DecomposeMode::Tripotent | DecomposeMode::Idempotent => {
            let sm = if mode == DecomposeMode::Tripotent {
                SplitMode::Tripotent
            } else {
                SplitMode::Idempotent
            };
            let cands = split_candidates(r, sm)?;
            xs.iter()
                .map(|&x| match potent_split_with(r, x, sm, &cands) {
                    Some(s) => json!({
                        "x": x,
                        "label": r.label(x),
                        "t": s.t,
                        "t_label": r.label(s.t),
                        "p": s.p,
                        "p_label": r.label(s.p),
                        "t_exponent": s.t_exponent,
                        "p_potency": s.p_potency,
                    }),
                    None => {
                        failures += 1;
                        json!({
                            "x": x,
                            "label": r.label(x),
                            "error": "no split exists",
                        })
                    }
                })
                .collect()
        }
    };
    Ok((rows, failures))
}

fn subset_json(r: &FiniteRing, members: &[Elem]) -> Value {
    const LISTED: usize = 64;
    let mut m = Map::new();
    m.insert("size".into(), json!(members.len()));
    if members.len() <= LISTED {
        m.insert("members".into(), json!(members));
        m.insert("labels".into(), json!(r.labels(members)));
    }
    Value::Object(m)
}

/// J(R) with both computation paths when available; `agree` is false when
/// they differ.
fn radical(r: &FiniteRing) -> Result<(Value, bool)> {
    let j = r.jacobson_radical();
    let structural = r.jacobson_radical_structural();
    let brute = (r.order() <= RADICAL_BRUTE_MAX).then(|| r.jacobson_radical_brute());
    let agree = match (&structural, &brute) {
        (Some(s), Some(b)) => s.set.members() == b.set.members(),
        _ => true,
    };
    let quot = r.quotient_by_radical()?;
    let mut radical = subset_json(r, j.set.members());
    radical["nilpotency_index"] = json!(j.nilpotency_index);
    radical["source"] = to_value(&j.source);
    let path = |x: &Option<crate::ring::Radical>| x.as_ref().map(|x| x.set.len());
    Ok((
        json!({
            "radical": radical,
            "paths": {
                "structural": path(&structural),
                "brute_force": path(&brute),
                "agree": agree,
            },
            "quotient_order": quot.ring.order(),
        }),
        agree,
    ))
}
