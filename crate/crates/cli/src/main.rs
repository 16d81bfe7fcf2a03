mod cache;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sawlab::cayley::{
    first_disagreement, fingerprint_distance, fingerprint_with, relative_girth_with,
    DEFAULT_FINGERPRINT_CUTOFF,
};
use sawlab::estimate::{
    lattice_counts, locality_experiment, Lattice, LatticeAdapter, LocalityTable, QuotientFamily,
};
use sawlab::presentation::{validate_class_g_with, DEFAULT_CLASS_CUTOFF};
use sawlab::saw::{
    count_bridges, count_saws, verify_hw_inequality, verify_reflection, verify_step2_inequality,
    verify_supermultiplicativity, Report,
};
use sawlab::{Bracket, Counts, EnumOptions, Error, GroupSpec};

use cache::Cache;

const EXIT_FAILED: u8 = 1;
const EXIT_SPEC: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_NOT_QUOTIENT: u8 = 4;
const EXIT_IO: u8 = 5;

#[derive(Parser)]
#[command(name = "sawlab", version, about = "Self-avoiding walks on Cayley graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Cache file; SAWLAB_CACHE is used when absent.
    #[arg(long, global = true, env = "SAWLAB_CACHE")]
    cache: Option<PathBuf>,
    /// Do not read or write the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Count SAWs, and with --bridges bridges and half-space walks by span.
    Count {
        #[arg(long)]
        group: String,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        bridges: bool,
        /// Count bridges even if the class check fails.
        #[arg(long)]
        skip_class_check: bool,
    },
    /// Run the class check and the inequality suites.
    Verify {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long = "B", default_value_t = 3.0)]
        b: f64,
    },
    /// Relative girth, count equality horizon and brackets along a quotient family.
    Locality {
        #[arg(long)]
        base: String,
        /// Relator template with the parameter as the exponent, e.g. "b^m".
        #[arg(long)]
        relator: String,
        /// Parameter range `lo..hi` (inclusive) or comma list.
        #[arg(long)]
        m: String,
        #[arg(long)]
        max_len: usize,
        /// Relative-girth search cutoff.
        #[arg(long, default_value_t = DEFAULT_FINGERPRINT_CUTOFF)]
        cutoff: usize,
    },
    /// Shortest new identity word of a quotient.
    Girth {
        #[arg(long)]
        base: String,
        #[arg(long)]
        quotient: String,
        #[arg(long, default_value_t = DEFAULT_FINGERPRINT_CUTOFF)]
        cutoff: usize,
    },
    /// Identity words up to a cutoff, optionally compared with another group.
    Fingerprint {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = DEFAULT_FINGERPRINT_CUTOFF)]
        cutoff: usize,
        #[arg(long)]
        compare: Option<String>,
    },
    /// Connective-constant bracket for a group or a coordinate lattice.
    Estimate {
        #[arg(long, conflicts_with = "lattice", required_unless_present = "lattice")]
        group: Option<String>,
        #[arg(long)]
        lattice: Option<String>,
        #[arg(long)]
        max_len: usize,
    },
}

/// An error with its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<Error>() {
            Some(e) => exit_code(e),
            None => EXIT_IO,
        };
        Failure { code, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            error: e.into(),
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::UnsupportedPresentation(_) | Error::UnsupportedQuotient(_) => EXIT_UNSUPPORTED,
        Error::QuotientRelationViolated { .. } => EXIT_NOT_QUOTIENT,
        Error::RootDependent(_) => EXIT_FAILED,
        _ => EXIT_SPEC,
    }
}

type Outcome = Result<bool, Failure>;

struct Ctx {
    opts: EnumOptions,
    cache: Option<Cache>,
    format: Option<Format>,
    output: Option<PathBuf>,
}

impl Ctx {
    fn new(g: Global) -> Self {
        let opts = g.threads.map_or_else(EnumOptions::default, EnumOptions::with_threads);
        let cache = (!g.no_cache).then(|| Cache::new(g.cache.unwrap_or_else(default_cache_path)));
        Ctx {
            opts,
            cache,
            format: g.format,
            output: g.output,
        }
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        let mut text = text.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.output {
            Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
            None => std::io::stdout()
                .write_all(text.as_bytes())
                .context("writing to stdout")?,
        }
        Ok(())
    }

    fn emit_json(&self, v: &Value) -> Result<(), Failure> {
        self.emit(&serde_json::to_string_pretty(v).expect("values serialize"))
    }

    fn counts(&self, spec: &GroupSpec, max_len: usize, heights: bool) -> Result<Counts, Failure> {
        let group = spec.render();
        let d = if heights { spec.distinguished() } else { None };
        if let Some(cache) = &self.cache {
            if let Some(t) = cache.lookup(&group, d, max_len, heights)? {
                log::info!("{group}: served from {}", cache.path().display());
                return Ok(t);
            }
        }
        let t: Counts = if heights {
            count_bridges(spec, max_len, &self.opts)?
        } else {
            let t: Counts = count_saws(spec, max_len, &self.opts)?;
            // c-only tables are keyed without a distinguished generator
            Counts::from_rows(group.clone(), None, (0..=max_len).map(|n| t.row(n)).collect())?
        };
        if let Some(cache) = &self.cache {
            cache.store(&t)?;
        }
        Ok(t)
    }
}

fn default_cache_path() -> PathBuf {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(|| PathBuf::from("."));
    base.join("sawlab").join("counts.jsonl")
}

fn parse_spec(text: &str) -> Result<GroupSpec, Failure> {
    Ok(GroupSpec::parse(text)?)
}

fn parse_params(text: &str) -> Result<Vec<u64>, Failure> {
    let bad = || Failure {
        code: EXIT_SPEC,
        error: anyhow::anyhow!("bad parameter list `{text}`; use lo..hi or a comma list"),
    };
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok((lo..=hi).collect())
    } else {
        text.split(',').map(|s| s.trim().parse().map_err(|_| bad())).collect()
    }
}

fn cmd_count(ctx: &Ctx, group: &str, max_len: usize, bridges: bool, skip: bool) -> Outcome {
    let spec = parse_spec(group)?;
    let t = if skip {
        let mut opts = ctx.opts;
        opts.skip_class_check = true;
        let ctx = Ctx {
            opts,
            cache: None,
            format: ctx.format,
            output: None,
        };
        ctx.counts(&spec, max_len, bridges)?
    } else {
        ctx.counts(&spec, max_len, bridges)?
    };
    match ctx.format.unwrap_or(Format::Csv) {
        Format::Csv => ctx.emit(&t.to_csv())?,
        Format::Json => ctx.emit_json(&t.to_json())?,
    }
    Ok(true)
}

fn cmd_verify(ctx: &Ctx, group: &str, max_len: usize, b: f64) -> Outcome {
    let spec = parse_spec(group)?;
    if spec.distinguished().is_none() {
        return Err(Error::NoDistinguished.into());
    }
    if b <= sawlab::saw::HW_THRESHOLD {
        return Err(Error::ConstantTooSmall(b).into());
    }
    let class = validate_class_g_with(&spec, max_len.max(DEFAULT_CLASS_CUTOFF), &ctx.opts)?;
    let mut out = json!({
        "group": spec.render(),
        "N": max_len,
        "class_check": class,
    });
    if !class.passed() {
        ctx.emit_json(&out)?;
        return Ok(false);
    }
    // b_{N+1} is needed for the last Hammersley-Welsh statistic
    let t = ctx.counts(&spec, max_len + 1, true)?;
    let head = t.truncated(max_len);
    let mut report = Report::default();
    report.extend(verify_step2_inequality(&head)?);
    report.extend(verify_supermultiplicativity(&head)?);
    report.extend(verify_reflection(&spec, max_len, &ctx.opts)?);
    let hw = verify_hw_inequality(&t, b)?;
    let passed = report.passed() && hw.passed();
    out["checks"] = report.to_json()["checks"].clone();
    if !report.witnesses.is_empty() {
        out["witnesses"] = json!(report.witnesses);
    }
    out["hammersley_welsh"] = hw.to_json();
    out["verdict"] = json!(if passed { "PASS" } else { "FAIL" });
    ctx.emit_json(&out)?;
    Ok(passed)
}

fn cmd_locality(ctx: &Ctx, base: &str, relator: &str, m: &str, max_len: usize, cutoff: usize) -> Outcome {
    let family = QuotientFamily::new(parse_spec(base)?, relator)?;
    let params = parse_params(m)?;
    let table: LocalityTable<f64> = locality_experiment(&family, &params, max_len, cutoff, &ctx.opts)?;
    match ctx.format.unwrap_or(Format::Csv) {
        Format::Csv => ctx.emit(&table.to_csv())?,
        Format::Json => ctx.emit_json(&table.to_json())?,
    }
    Ok(true)
}

fn cmd_girth(ctx: &Ctx, base: &str, quotient: &str, cutoff: usize) -> Outcome {
    let report = relative_girth_with(&parse_spec(base)?, &parse_spec(quotient)?, cutoff, &ctx.opts)?;
    ctx.emit_json(&report.to_json())?;
    Ok(true)
}

fn cmd_fingerprint(ctx: &Ctx, group: &str, cutoff: usize, compare: Option<&str>) -> Outcome {
    let f = fingerprint_with(&parse_spec(group)?, cutoff, &ctx.opts)?;
    let mut out = f.to_json();
    if let Some(other) = compare {
        let g = fingerprint_with(&parse_spec(other)?, cutoff, &ctx.opts)?;
        out = json!({
            "fingerprint": out,
            "compare": g.to_json(),
            "first_disagreement": first_disagreement(&f, &g)?,
            "distance": fingerprint_distance(&f, &g)?.to_string(),
        });
    }
    ctx.emit_json(&out)?;
    Ok(true)
}

fn cmd_estimate(ctx: &Ctx, group: Option<&str>, lattice: Option<&str>, max_len: usize) -> Outcome {
    let bracket: Bracket = match (group, lattice) {
        (_, Some(name)) => {
            let lattice: Lattice = name.parse()?;
            let t: Counts = lattice_counts(&LatticeAdapter::new(lattice), max_len, &ctx.opts)?;
            Bracket::from_table(&t)?
        }
        (Some(g), None) => {
            let spec = parse_spec(g)?;
            let t = ctx.counts(&spec, max_len, spec.distinguished().is_some())?;
            Bracket::from_table(&t)?
        }
        (None, None) => {
            return Err(Failure {
                code: EXIT_SPEC,
                error: anyhow::anyhow!("give --group or --lattice"),
            })
        }
    };
    match ctx.format.unwrap_or(Format::Json) {
        Format::Json => ctx.emit_json(&bracket.to_json())?,
        Format::Csv => {
            let lower_n = bracket.lower_n.map_or(String::new(), |n| n.to_string());
            ctx.emit(&format!(
                "group,N,lower,lower_n,lower_flagged,upper,upper_n\n{},{},{},{},{},{},{}\n",
                bracket.group,
                bracket.max_len,
                bracket.lower,
                lower_n,
                bracket.lower_flagged,
                bracket.upper,
                bracket.upper_n
            ))?
        }
    }
    Ok(true)
}

fn run(cli: Cli) -> Outcome {
    let ctx = Ctx::new(cli.global);
    match &cli.command {
        Command::Count {
            group,
            max_len,
            bridges,
            skip_class_check,
        } => cmd_count(&ctx, group, *max_len, *bridges, *skip_class_check),
        Command::Verify { group, max_len, b } => cmd_verify(&ctx, group, *max_len, *b),
        Command::Locality {
            base,
            relator,
            m,
            max_len,
            cutoff,
        } => cmd_locality(&ctx, base, relator, m, *max_len, *cutoff),
        Command::Girth {
            base,
            quotient,
            cutoff,
        } => cmd_girth(&ctx, base, quotient, *cutoff),
        Command::Fingerprint {
            group,
            cutoff,
            compare,
        } => cmd_fingerprint(&ctx, group, *cutoff, compare.as_deref()),
        Command::Estimate {
            group,
            lattice,
            max_len,
        } => cmd_estimate(&ctx, group.as_deref(), lattice.as_deref(), *max_len),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILED),
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
