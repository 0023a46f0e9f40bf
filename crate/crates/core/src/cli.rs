//! Command-line driver: `gen`, `verify`, `stats` and `tables`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::emit::{self, ChainStyle, EmitOptions, Format, IndexBase};
use crate::error::Error;
use crate::generate::generate;
use crate::model::{ConverterSpec, ModConverter};
use crate::transform::{Method, COMBINATORIAL_N_MAX};
use crate::verify::{cross_check_methods, verify_converter};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "xmodp", version, about = "Generate XOR-AND circuits for X mod P")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate, verify and emit a design file plus a JSON report.
    Gen(GenArgs),
    /// Generate and exhaustively verify; prints the JSON report.
    Verify(VerifyArgs),
    /// Print per-output term, literal and depth figures.
    Stats(StatsArgs),
    /// One row of statistics per modulus at a fixed input width.
    Tables(TablesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Fast,
    Combinatorial,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Fast => Method::Fast,
            MethodArg::Combinatorial => Method::Combinatorial,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Instance {
    /// Input width in bits.
    #[arg(short = 'n', value_name = "WIDTH")]
    pub n: u32,
    /// Modulus.
    #[arg(short = 'p', value_name = "MODULUS")]
    pub p: u64,
    #[arg(long, value_enum, default_value = "fast")]
    pub method: MethodArg,
    /// Worker threads (default: all cores).
    #[arg(long, value_name = "K")]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub instance: Instance,
    #[arg(long, default_value = "vhdl", value_parser = parse_format)]
    pub format: Format,
    /// Entity / module name (default: mod<P>_n<N>).
    #[arg(long)]
    pub entity: Option<String>,
    /// Design file path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Report path (default: <out>.report.json when --out is given).
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long)]
    pub no_verify: bool,
    /// Number buses from 0 instead of 1.
    #[arg(long)]
    pub zero_based: bool,
    /// Emit each XOR chain as a balanced tree.
    #[arg(long)]
    pub balanced: bool,
    /// Wrap column for HDL assignments.
    #[arg(long, default_value_t = 100)]
    pub wrap: usize,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub instance: Instance,
    /// Also check that both transform methods agree (n <= 16).
    #[arg(long)]
    pub cross_check: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub instance: Instance,
    #[arg(long)]
    pub no_verify: bool,
    /// Print the JSON report instead of a table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct TablesArgs {
    #[arg(short = 'n', value_name = "WIDTH")]
    pub n: u32,
    /// Moduli: comma-separated values and inclusive ranges, e.g. `7,11,13-17`.
    #[arg(short = 'p', value_name = "LIST", default_value = "", value_parser = parse_moduli)]
    pub moduli: Moduli,
    #[arg(long, value_enum, default_value = "fast")]
    pub method: MethodArg,
    #[arg(long, value_name = "K")]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub no_verify: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TableFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Moduli(pub Vec<u64>);

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `7,11,13-17` → `[7, 11, 13, 14, 15, 16, 17]`; a range with start > end is empty.
pub fn parse_moduli(s: &str) -> Result<Moduli, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad modulus `{t}`"));
        match item.split_once('-') {
            Some((a, b)) => out.extend(num(a)?..=num(b)?),
            None => out.push(num(item)?),
        }
    }
    Ok(Moduli(out))
}

/// Failure of one CLI run, carrying its exit status.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::WidthLimit { .. } => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: format!("cannot write {}: {e}", path.display()),
    }
}

fn spec_for(n: u32, p: u64, method: MethodArg) -> Result<ConverterSpec, Failure> {
    let spec = ConverterSpec::new(n, p)?;
    if method == MethodArg::Combinatorial && n > COMBINATORIAL_N_MAX {
        return Err(Error::CombinatorialWidth {
            n,
            max: COMBINATORIAL_N_MAX,
        }
        .into());
    }
    Ok(spec)
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Failure {
            code: EXIT_USAGE,
            message: "--jobs must be at least 1".into(),
        }),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Failure {
                    code: EXIT_USAGE,
                    message: e.to_string(),
                })?;
            Ok(pool.install(f))
        }
    }
}

fn build(spec: &ConverterSpec, method: MethodArg, verify: bool) -> Result<ModConverter, Failure> {
    let conv = generate(spec, method.into())?;
    Ok(if verify {
        let report = verify_converter(&conv);
        conv.with_verification(report)
    } else {
        conv
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| io_failure(path, e))
}

fn verification_note(conv: &ModConverter, err: &mut dyn Write) {
    if let Some(r) = conv.verification() {
        let spec = conv.spec();
        let _ = match r.counterexample {
            None => writeln!(
                err,
                "verified n={} p={}: {} inputs in {:.3}s",
                spec.n(),
                spec.p(),
                r.inputs_checked,
                r.elapsed.as_secs_f64()
            ),
            Some(c) => writeln!(
                err,
                "verification FAILED n={} p={}: input {} expected {} got {}",
                spec.n(),
                spec.p(),
                c.input,
                c.expected,
                c.produced
            ),
        };
    }
}

fn status_code(conv: &ModConverter) -> i32 {
    match conv.verification() {
        Some(r) if !r.pass => EXIT_VERIFY_FAILED,
        _ => EXIT_OK,
    }
}

/// Truth data → spectra → polynomials → verification → emission.
pub fn run_gen(args: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = (|| {
        let inst = &args.instance;
        let spec = spec_for(inst.n, inst.p, inst.method)?;
        let mut opts = EmitOptions::for_spec(args.format, &spec);
        if let Some(name) = &args.entity {
            opts.entity = name.clone();
        }
        emit::validate_identifier(&opts.entity)?;
        opts.index_base = if args.zero_based { IndexBase::Zero } else { IndexBase::One };
        opts.chain = if args.balanced { ChainStyle::Balanced } else { ChainStyle::Flat };
        opts.wrap_column = args.wrap;
        opts.require_verified = false;

        let conv = with_jobs(inst.jobs, || build(&spec, inst.method, !args.no_verify))??;
        verification_note(&conv, err);

        let report_path = args
            .report
            .clone()
            .or_else(|| args.out.as_ref().map(|o| PathBuf::from(format!("{}.report.json", o.display()))));
        if let Some(path) = &report_path {
            write_file(path, &emit::emit_report(&conv))?;
        }
        let code = status_code(&conv);
        if code != EXIT_OK {
            return Ok(code);
        }

        let text = emit::emit(&conv, &opts)?;
        match &args.out {
            Some(path) => write_file(path, &text)?,
            None => out.write_all(text.as_bytes()).map_err(|e| io_failure(Path::new("<stdout>"), e))?,
        }
        Ok(EXIT_OK)
    })();
    finish(result, err)
}

pub fn run_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = (|| {
        let inst = &args.instance;
        let spec = spec_for(inst.n, inst.p, inst.method)?;
        let (conv, agree) = with_jobs(inst.jobs, || -> Result<_, Failure> {
            let conv = build(&spec, inst.method, true)?;
            let agree = if args.cross_check {
                Some(cross_check_methods(&spec)?)
            } else {
                None
            };
            Ok((conv, agree))
        })??;
        verification_note(&conv, err);
        let report = emit::emit_report(&conv);
        match &args.out {
            Some(path) => write_file(path, &report)?,
            None => out.write_all(report.as_bytes()).map_err(|e| io_failure(Path::new("<stdout>"), e))?,
        }
        if agree == Some(false) {
            let _ = writeln!(err, "transform methods DISAGREE for n={} p={}", spec.n(), spec.p());
            return Ok(EXIT_VERIFY_FAILED);
        }
        if agree == Some(true) {
            let _ = writeln!(err, "transform methods agree on all {} outputs", spec.delta());
        }
        Ok(status_code(&conv))
    })();
    finish(result, err)
}

pub fn run_stats(args: &StatsArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = (|| {
        let inst = &args.instance;
        let spec = spec_for(inst.n, inst.p, inst.method)?;
        let conv = with_jobs(inst.jobs, || build(&spec, inst.method, !args.no_verify))??;
        let text = if args.json {
            emit::emit_report(&conv)
        } else {
            stats_table(&conv)
        };
        out.write_all(text.as_bytes()).map_err(|e| io_failure(Path::new("<stdout>"), e))?;
        verification_note(&conv, err);
        Ok(status_code(&conv))
    })();
    finish(result, err)
}

fn stats_table(conv: &ModConverter) -> String {
    let st = conv.stats();
    let spec = conv.spec();
    let mut s = format!("n={} p={} delta={}\n", spec.n(), spec.p(), spec.delta());
    let _ = writeln!(s, "{:>6} {:>9} {:>9} {:>7} {:>9} {:>9}", "output", "terms", "literals", "degree", "xor_depth", "and_depth");
    for i in 0..st.terms.len() {
        let _ = writeln!(
            s,
            "{:>6} {:>9} {:>9} {:>7} {:>9} {:>9}",
            format!("S{}", i + 1),
            st.terms[i],
            st.literals[i],
            st.degrees[i],
            st.xor_depths[i],
            st.and_depths[i]
        );
    }
    let _ = writeln!(
        s,
        "{:>6} {:>9} {:>9} {:>7} {:>9} {:>9}",
        "total", st.total_terms, st.total_literals, st.max_degree, st.max_xor_depth, st.max_and_depth
    );
    s
}

/// One row of the modulus table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub p: u64,
    pub delta: u32,
    pub terms: Vec<u64>,
    pub total_terms: u64,
    pub total_literals: u64,
    pub max_degree: u32,
    pub max_xor_depth: u32,
    pub max_and_depth: u32,
    /// `None` when verification was disabled.
    pub verified: Option<bool>,
}

fn table_row(conv: &ModConverter) -> TableRow {
    let st = conv.stats();
    TableRow {
        p: conv.spec().p(),
        delta: conv.spec().delta(),
        terms: st.terms.clone(),
        total_terms: st.total_terms,
        total_literals: st.total_literals,
        max_degree: st.max_degree,
        max_xor_depth: st.max_xor_depth,
        max_and_depth: st.max_and_depth,
        verified: conv.verification().map(|r| r.pass),
    }
}

/// Rows for every modulus in `moduli` at width `n`.
pub fn table_rows(n: u32, moduli: &[u64], method: MethodArg, verify: bool) -> Result<Vec<TableRow>, Error> {
    let specs = moduli
        .iter()
        .map(|&p| ConverterSpec::new(n, p))
        .collect::<Result<Vec<_>, _>>()?;
    specs
        .iter()
        .map(|spec| {
            let conv = generate(spec, method.into())?;
            let conv = if verify {
                let r = verify_converter(&conv);
                conv.with_verification(r)
            } else {
                conv
            };
            Ok(table_row(&conv))
        })
        .collect()
}

pub fn format_table(n: u32, rows: &[TableRow]) -> String {
    let mut s = format!("n={n}\n");
    let _ = writeln!(
        s,
        "{:>8} {:>5} {:>8} {:>9} {:>7} {:>9} {:>9} {:>8}  terms_per_output",
        "p", "delta", "terms", "literals", "max_deg", "xor_depth", "and_depth", "verified"
    );
    for r in rows {
        let per: Vec<String> = r.terms.iter().map(u64::to_string).collect();
        let verified = match r.verified {
            Some(true) => "yes",
            Some(false) => "NO",
            None => "-",
        };
        let _ = writeln!(
            s,
            "{:>8} {:>5} {:>8} {:>9} {:>7} {:>9} {:>9} {:>8}  {}",
            r.p,
            r.delta,
            r.total_terms,
            r.total_literals,
            r.max_degree,
            r.max_xor_depth,
            r.max_and_depth,
            verified,
            per.join("/")
        );
    }
    s
}

pub fn run_tables(args: &TablesArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = (|| {
        // Width and method limits are checked even for an empty modulus list.
        spec_for(args.n, 1, args.method)?;
        let rows = with_jobs(args.jobs, || table_rows(args.n, &args.moduli.0, args.method, !args.no_verify))??;
        let text = match args.format {
            TableFormat::Text => format_table(args.n, &rows),
            TableFormat::Json => {
                let mut s = serde_json::to_string_pretty(&rows).expect("plain data serializes");
                s.push('\n');
                s
            }
        };
        match &args.out {
            Some(path) => write_file(path, &text)?,
            None => out.write_all(text.as_bytes()).map_err(|e| io_failure(Path::new("<stdout>"), e))?,
        }
        if rows.iter().any(|r| r.verified == Some(false)) {
            return Ok(EXIT_VERIFY_FAILED);
        }
        Ok(EXIT_OK)
    })();
    finish(result, err)
}

fn finish(result: Result<i32, Failure>, err: &mut dyn Write) -> i32 {
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Parses `args` (program name first) and runs the selected subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match &config.command {
        Command::Gen(a) => run_gen(a, out, err),
        Command::Verify(a) => run_verify(a, out, err),
        Command::Stats(a) => run_stats(a, out, err),
        Command::Tables(a) => run_tables(a, out, err),
    }
}
