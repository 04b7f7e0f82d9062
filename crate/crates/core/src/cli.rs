//! Command-line front end. `run` is the whole program; `main` only wires up
//! the process streams.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_rational::Rational64;
use serde_json::{json, Value};

use crate::homocalc::{self, Complex, HomError, SupportRegion};
use crate::projector::projector_for_word;
use crate::qring::{expand, LaurentPoly, RationalFunc, TruncatedSeries};
use crate::tangle::{colored_invariant, evaluate, TangleDiagram};
use crate::twistlimit::stabilization_report;
use crate::web::{WebSum, Word};

pub const DEFAULT_ORDER: i64 = 40;
pub const ORDER_ENV: &str = "SPIDER_TRUNCATION";
/// Resolution branches allowed without `--force`.
pub const BRANCH_BUDGET: u64 = 1 << 24;
const TWIST_MAX_WORD: usize = 3;
const TWIST_MAX_K: usize = 4;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "sl3spider", version, about = "Quantum sl3 webs, clasps and tangle invariants")]
struct Cli {
    /// Series truncation order (overrides SPIDER_TRUNCATION)
    #[arg(long, global = true)]
    order: Option<i64>,
    /// Emit JSON only
    #[arg(long, global = true)]
    json: bool,
    /// Indent JSON output
    #[arg(long, global = true)]
    pretty: bool,
    /// Run jobs beyond the default resource limits
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Skein evaluation of a tangle file
    Evaluate { file: PathBuf },
    /// Clasp for a sign word
    Projector {
        #[arg(long)]
        word: String,
        /// Expand coefficients as power series (to N, or to --order)
        #[arg(long, num_args = 0..=1, default_missing_value = "-1")]
        series: Option<i64>,
    },
    /// Colored invariant of a closed tangle, one label per component
    Colored {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        labels: Vec<String>,
    },
    /// Shifted full-twist evaluations and their convergence
    TwistLimit {
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
    },
    /// Chain complex tools
    #[command(subcommand)]
    Homocalc(Homocalc),
}

#[derive(Subcommand, Debug)]
enum Homocalc {
    /// Gaussian elimination down to a smaller homotopy-equivalent complex
    Simplify {
        file: PathBuf,
        /// Last degree whose incoming differential may be eliminated
        #[arg(long)]
        through: Option<i64>,
    },
    /// Graded Euler characteristic through a homological degree
    Euler {
        file: PathBuf,
        #[arg(long)]
        through: i64,
        /// Support slope, e.g. 2 or 1/2
        #[arg(long, allow_hyphen_values = true)]
        slope: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        h0: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        q0: i64,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Budget(String),
}

impl From<HomError> for Failure {
    fn from(e: HomError) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Ctx {
    order: i64,
    json_only: bool,
    pretty: bool,
    force: bool,
}

impl Ctx {
    fn emit(&self, out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
        let s = if self.pretty {
            serde_json::to_string_pretty(v)
        } else {
            serde_json::to_string(v)
        };
        writeln!(out, "{}", s.expect("json values serialize"))
    }
}

/// Truncation order from the flag, then the environment, then the default.
pub fn resolve_order(flag: Option<i64>, env: Option<&str>) -> Result<i64, String> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match env {
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| format!("{ORDER_ENV}={s:?} is not an integer")),
        None => Ok(DEFAULT_ORDER),
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let env = std::env::var(ORDER_ENV).ok();
    let order = match resolve_order(cli.order, env.as_deref()) {
        Ok(n) if n >= 0 => n,
        Ok(n) => {
            let _ = writeln!(err, "error: truncation order {n} is negative");
            return EXIT_INPUT;
        }
        Err(m) => {
            let _ = writeln!(err, "error: {m}");
            return EXIT_INPUT;
        }
    };
    let ctx = Ctx {
        order,
        json_only: cli.json,
        pretty: cli.pretty,
        force: cli.force,
    };
    let result = match cli.command {
        Command::Evaluate { file } => cmd_evaluate(&ctx, &file, out),
        Command::Projector { word, series } => cmd_projector(&ctx, &word, series, out),
        Command::Colored { file, labels } => cmd_colored(&ctx, &file, &labels, out),
        Command::TwistLimit { word, kmax } => cmd_twist(&ctx, &word, kmax, out),
        Command::Homocalc(Homocalc::Simplify { file, through }) => cmd_simplify(&ctx, &file, through, out),
        Command::Homocalc(Homocalc::Euler {
            file,
            through,
            slope,
            h0,
            q0,
        }) => cmd_euler(&ctx, &file, through, &slope, h0, q0, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_INPUT
        }
        Err(Failure::Budget(m)) => {
            let _ = writeln!(err, "error: {m} (use --force to run anyway)");
            EXIT_BUDGET
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Input(format!("write failed: {e}"))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_diagram(path: &Path) -> Result<TangleDiagram, Failure> {
    let text = read_file(path)?;
    let d = TangleDiagram::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    d.validate()
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(d)
}

fn parse_word(s: &str) -> Result<Word, Failure> {
    s.parse()
        .map_err(|e| Failure::Input(format!("word {s:?}: {e}")))
}

fn check_budget(ctx: &Ctx, crossings: usize) -> Result<(), Failure> {
    let branches = 1u64.checked_shl(crossings as u32).unwrap_or(u64::MAX);
    if !ctx.force && (crossings >= 64 || branches > BRANCH_BUDGET) {
        return Err(Failure::Budget(format!(
            "{crossings} crossings exceed the budget of {BRANCH_BUDGET} resolution branches"
        )));
    }
    Ok(())
}

fn cmd_evaluate(ctx: &Ctx, file: &Path, out: &mut dyn Write) -> Result<(), Failure> {
    let d = read_diagram(file)?;
    let counts = d.crossing_counts().map_err(|e| Failure::Input(e.to_string()))?;
    check_budget(ctx, counts.total())?;
    let s = evaluate(&d).map_err(|e| Failure::Input(e.to_string()))?;
    let v = if s.domain().is_empty() && s.codomain().is_empty() {
        json!({ "invariant": s.identity_coeff().to_json() })
    } else {
        json!({ "invariant": s.to_json() })
    };
    ctx.emit(out, &v).map_err(io)
}

fn series_sum(s: &WebSum<RationalFunc>, order: i64) -> Result<WebSum<TruncatedSeries>, Failure> {
    let mut acc = WebSum::zero(s.domain().clone(), s.codomain().clone());
    for (w, c) in s.terms() {
        let e = expand(c, order).map_err(|e| Failure::Input(e.to_string()))?;
        acc.add_term(w.clone(), e);
    }
    Ok(acc)
}

fn cmd_projector(ctx: &Ctx, word: &str, series: Option<i64>, out: &mut dyn Write) -> Result<(), Failure> {
    let w = parse_word(word)?;
    if w.len() > 6 && !ctx.force {
        return Err(Failure::Budget(format!("clasp on {} strands", w.len())));
    }
    let p = projector_for_word(&w);
    let v = match series {
        None => p.to_json(),
        Some(n) => series_sum(&p, if n < 0 { ctx.order } else { n })?.to_json(),
    };
    ctx.emit(out, &v).map_err(io)
}

fn cmd_colored(ctx: &Ctx, file: &Path, labels: &[String], out: &mut dyn Write) -> Result<(), Failure> {
    let d = read_diagram(file)?;
    let labels = labels
        .iter()
        .map(|s| parse_word(s.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    let cabled_crossings: usize = {
        let c = crate::tangle::cable(&d, &labels).map_err(|e| Failure::Input(e.to_string()))?;
        c.crossing_counts().map_err(|e| Failure::Input(e.to_string()))?.total()
    };
    check_budget(ctx, cabled_crossings)?;
    let s = colored_invariant(&d, &labels).map_err(|e| Failure::Input(e.to_string()))?;
    let value = s.identity_coeff();
    let v = match value.as_laurent() {
        Some(p) if s.domain().is_empty() && s.codomain().is_empty() => json!({ "invariant": p.to_json() }),
        _ if s.domain().is_empty() && s.codomain().is_empty() => json!({ "invariant": value.to_json() }),
        _ => json!({ "invariant": s.to_json() }),
    };
    ctx.emit(out, &v).map_err(io)
}

fn cmd_twist(ctx: &Ctx, word: &str, kmax: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let w = parse_word(word)?;
    if kmax < 1 {
        return Err(Failure::Input("--kmax must be at least 1".into()));
    }
    if (w.len() > TWIST_MAX_WORD || kmax > TWIST_MAX_K) && !ctx.force {
        return Err(Failure::Budget(format!(
            "twist limits are |w| <= {TWIST_MAX_WORD} and k <= {TWIST_MAX_K}"
        )));
    }
    let crossings = kmax * w.len() * w.len().saturating_sub(1);
    check_budget(ctx, crossings)?;
    let report = stabilization_report(&w, kmax, ctx.order);
    ctx.emit(out, &report.to_json()).map_err(io)?;
    if !ctx.json_only {
        write!(out, "{}", report.table()).map_err(io)?;
    }
    Ok(())
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = read_file(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn cmd_simplify(ctx: &Ctx, file: &Path, through: Option<i64>, out: &mut dyn Write) -> Result<(), Failure> {
    let v = read_json(file)?;
    let res = homocalc::simplify_json(&v, through)?;
    ctx.emit(out, &res).map_err(io)
}

fn parse_slope(s: &str) -> Result<Rational64, Failure> {
    let bad = || Failure::Input(format!("slope {s:?} is not a rational number"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(n, d))
        }
        None => Ok(Rational64::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn cmd_euler(
    ctx: &Ctx,
    file: &Path,
    through: i64,
    slope: &str,
    h0: i64,
    q0: i64,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let region = SupportRegion::new(parse_slope(slope)?, h0, q0);
    let v = read_json(file)?;
    if v.get("ring").and_then(Value::as_str).is_some_and(|r| r != "laurent") {
        return Err(Failure::Input("euler characteristics need a graded (laurent) complex".into()));
    }
    let c = Complex::<LaurentPoly>::from_json(&v)?;
    let chi = homocalc::euler_char(&c, through, &region)?;
    let chi = chi
        .into_iter()
        .map(|(k, s)| (k, s.to_json()))
        .collect::<serde_json::Map<_, _>>();
    ctx.emit(out, &json!({ "euler": chi })).map_err(io)
}
