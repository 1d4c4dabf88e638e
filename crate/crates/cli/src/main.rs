mod cache;
mod commands;
mod report;
mod scan;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monodec::binomial::DEFAULT_DIMENSION_CAP;
use monodec::maci::DEFAULT_SLP_CAP;
use monodec::Property;
use serde::Serialize;
use serde_json::{json, Value};

use commands::Context;
use report::{to_value, Envelope, Failure, Outcome};

#[derive(Parser)]
#[command(
    name = "monodec",
    version,
    about = "Hilbert functions, Lefschetz properties and decompositions of Artinian monomial ideals"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest quotient dimension any command will work with.
    #[arg(long = "dim-cap", global = true, default_value_t = DEFAULT_DIMENSION_CAP)]
    dim_cap: usize,
    /// Number of variables; inferred from the input when omitted.
    #[arg(long, global = true)]
    nvars: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of R/I.
    Hilbert(HilbertArgs),
    /// Weak Lefschetz property of R/I.
    Wlp(LefschetzArgs),
    /// Strong Lefschetz property of R/I.
    Slp(LefschetzArgs),
    /// Split K along m into K + (m) and K : (m).
    Split(SplitArgs),
    /// Search for a splitting monomial satisfying the Hilbert conditions.
    Witness(WitnessArgs),
    /// Glue I and J along m to K = I_m + mJ.
    Glue(GlueArgs),
    /// Generators of I along which I and J glue.
    Candidates(CandidatesArgs),
    /// Ideal, socle degree and (optionally) SLP of a table given as JSON.
    Table(TableArgs),
    /// Verify the binomial Gorenstein family for given d, alpha and c.
    Gorenstein(GorensteinArgs),
    /// Compare computed and predicted WLP/SLP for (x^d, y^d, z^d, x^a y^b z^c).
    MaciScan(MaciScanArgs),
    /// Run the built-in fixture suite.
    Selftest,
}

#[derive(Args, Serialize)]
struct HilbertArgs {
    /// Ideal, e.g. "x^3, y^3, z^5, x^2*y^2, x*z, y*z" or JSON {"n":..,"gens":..}.
    ideal: String,
    /// Also list the standard monomials by degree.
    #[arg(long)]
    basis: bool,
}

#[derive(Args, Serialize)]
struct LefschetzArgs {
    ideal: String,
    /// Also require a symmetric Hilbert function.
    #[arg(long)]
    narrow: bool,
    /// Decide every rank with exact elimination, skipping the modular shortcut.
    #[arg(long)]
    exact: bool,
}

#[derive(Args, Serialize)]
struct SplitArgs {
    ideal: String,
    /// Splitting monomial.
    #[arg(long)]
    m: String,
    /// Check Hilbert compatibility for this jump only (default: every jump).
    #[arg(long)]
    d: Option<u32>,
}

#[derive(Args, Serialize)]
#[group(required = true, multiple = false)]
struct WitnessSelector {
    /// Require the Hilbert conditions for every jump d.
    #[arg(long = "all-d")]
    all_d: bool,
    /// Require the Hilbert conditions for this jump only.
    #[arg(long)]
    d: Option<u32>,
}

#[derive(Args, Serialize)]
struct WitnessArgs {
    ideal: String,
    #[command(flatten)]
    #[serde(flatten)]
    mode: WitnessSelector,
}

#[derive(Args, Serialize)]
struct GlueArgs {
    #[arg(long)]
    i: String,
    #[arg(long)]
    j: String,
    #[arg(long)]
    m: String,
}

#[derive(Args, Serialize)]
struct CandidatesArgs {
    #[arg(long)]
    i: String,
    #[arg(long)]
    j: String,
}

#[derive(Args, Serialize)]
struct TableArgs {
    /// Table as JSON, e.g. {"s":1,"n":3,"d":[6,7,4],"alpha":[[2,6,0]]}.
    table: String,
    /// Also check the narrow SLP of the table ideal.
    #[arg(long = "check-slp")]
    check_slp: bool,
}

#[derive(Args, Serialize)]
struct GorensteinArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    d: Vec<u32>,
    #[arg(long, value_delimiter = ',', required = true)]
    alpha: Vec<u32>,
    /// Nonzero rational coefficient, e.g. 1, -1 or 3/2.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    c: String,
}

#[derive(Args, Serialize)]
struct MaciScanArgs {
    /// Values of d = a + b + c, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    d: Vec<u32>,
    /// Also compute the SLP (up to --slp-cap).
    #[arg(long)]
    slp: bool,
    #[arg(long = "slp-cap", default_value_t = DEFAULT_SLP_CAP)]
    slp_cap: u32,
    /// Read and append verdicts to a JSON-lines cache; without a path the
    /// file lives in $MONODEC_CACHE_DIR.
    #[arg(long, value_name = "PATH", num_args = 0..=1)]
    #[serde(skip)]
    cache: Option<Option<PathBuf>>,
    /// Recompute rows even when the cache has them.
    #[arg(long)]
    force: bool,
}

fn name(command: &Command) -> &'static str {
    match command {
        Command::Hilbert(_) => "hilbert",
        Command::Wlp(_) => "wlp",
        Command::Slp(_) => "slp",
        Command::Split(_) => "split",
        Command::Witness(_) => "witness",
        Command::Glue(_) => "glue",
        Command::Candidates(_) => "candidates",
        Command::Table(_) => "table",
        Command::Gorenstein(_) => "gorenstein",
        Command::MaciScan(_) => "maci-scan",
        Command::Selftest => "selftest",
    }
}

fn input(command: &Command) -> Value {
    match command {
        Command::Hilbert(a) => to_value(a),
        Command::Wlp(a) | Command::Slp(a) => to_value(a),
        Command::Split(a) => to_value(a),
        Command::Witness(a) => to_value(a),
        Command::Glue(a) => to_value(a),
        Command::Candidates(a) => to_value(a),
        Command::Table(a) => to_value(a),
        Command::Gorenstein(a) => to_value(a),
        Command::MaciScan(a) => {
            let mut v = to_value(a);
            v["cache"] = json!(cache_path(a));
            v
        }
        Command::Selftest => json!({}),
    }
}

fn cache_path(a: &MaciScanArgs) -> Option<PathBuf> {
    a.cache.clone().map(|p| p.unwrap_or_else(cache::default_path))
}

fn dispatch(ctx: &Context, command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Hilbert(a) => commands::hilbert(ctx, &a.ideal, a.basis),
        Command::Wlp(a) => commands::lefschetz(ctx, &a.ideal, Property::Weak, a.narrow, a.exact),
        Command::Slp(a) => commands::lefschetz(ctx, &a.ideal, Property::Strong, a.narrow, a.exact),
        Command::Split(a) => commands::split_cmd(ctx, &a.ideal, &a.m, a.d),
        Command::Witness(a) => commands::witness(ctx, &a.ideal, a.mode.d),
        Command::Glue(a) => commands::glue_cmd(ctx, &a.i, &a.j, &a.m),
        Command::Candidates(a) => commands::candidates(ctx, &a.i, &a.j),
        Command::Table(a) => commands::table(ctx, &a.table, a.check_slp),
        Command::Gorenstein(a) => commands::gorenstein(ctx, &a.d, &a.alpha, &a.c),
        Command::MaciScan(a) => scan::run(
            ctx,
            &scan::ScanArgs {
                d: a.d.clone(),
                slp: a.slp,
                slp_cap: a.slp_cap,
                cache: cache_path(a),
                force: a.force,
            },
        ),
        Command::Selftest => Ok(selftest::run()),
    }
}

fn configure_threads(threads: Option<usize>) -> Result<(), Failure> {
    let Some(n) = threads else {
        return Ok(());
    };
    if n == 0 {
        return Err(Failure::input("--threads must be at least 1"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::input(format!("cannot configure {n} threads: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let ctx = Context {
        dim_cap: cli.dim_cap,
        nvars: cli.nvars,
    };
    let outcome = configure_threads(cli.threads).and_then(|()| dispatch(&ctx, &cli.command));
    let duration = start.elapsed().as_secs_f64();
    let command = name(&cli.command);
    let input = input(&cli.command);

    let (status, result) = match outcome {
        Ok(o) => {
            match cli.format {
                Format::Json => {
                    for line in &o.lines {
                        println!("{line}");
                    }
                }
                Format::Text => println!("{}", o.text),
            }
            (o.status, o.result)
        }
        Err(f) => {
            if cli.format == Format::Text {
                eprintln!("error: {}", f.message);
            }
            let mut result = json!({ "error": f.message });
            if let Some(detail) = f.detail {
                result["detail"] = detail;
            }
            (f.status, result)
        }
    };
    if cli.format == Format::Json {
        let envelope = Envelope {
            tool: "monodec",
            version: env!("CARGO_PKG_VERSION"),
            command,
            input: &input,
            duration_seconds: duration,
            status,
            result: &result,
        };
        println!("{}", serde_json::to_string(&envelope).expect("envelope serializes"));
    }
    status.exit_code()
}
