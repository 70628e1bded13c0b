//! Command-line front end for the certificate suites.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hyperbolic_certs::arith::Rat;
use hyperbolic_certs::checks::{
    factor_vertex, non_percolation_margin, verify_all, FrameChoice, PercolationParams, SuiteConfig, Suites,
};
use hyperbolic_certs::models::{OcticParams, TangentFrame};
use hyperbolic_certs::report::Report;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hypcert", version, about = "Exact certificates for deformations of hyperbolic surfaces in P3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the octic suite.
    VerifyOctic(VerifyArgs),
    /// Run the plane-arrangement suite.
    VerifyPlanes(VerifyArgs),
    /// Print the non-percolation margin for a degree configuration.
    Percolation {
        #[arg(long)]
        lines: u32,
        #[arg(long)]
        truncation: u32,
        #[arg(long)]
        divisor_degree: u32,
    },
    /// Dump the local factorizations at a vertex as JSON.
    FactorVertex {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..4))]
        vertex: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a JSON report as Markdown.
    Report {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
struct ModelArgs {
    /// Four exact rationals, e.g. `1,1,4,-9`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// `auto` or three exact rationals.
    #[arg(long, allow_hyphen_values = true)]
    frame: Option<String>,
    #[arg(long)]
    order: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long)]
    seed: Option<u64>,
    /// Number of planes in the generated arrangement.
    #[arg(long)]
    planes: Option<usize>,
    /// Also certify that the octic has no further singularities.
    #[arg(long)]
    reverse_inclusion: bool,
    #[arg(long)]
    threads: Option<usize>,
    /// JSON config file; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    markdown: Option<PathBuf>,
}

/// A failure with its exit code.
#[derive(Debug)]
struct Exit {
    code: i32,
    message: String,
}

fn config_error(message: impl ToString) -> Exit {
    Exit { code: EXIT_CONFIG, message: message.to_string() }
}

fn parse_rats(text: &str, n: usize, what: &str) -> Result<Vec<Rat>, Exit> {
    let vals = text
        .split(',')
        .map(|s| s.parse::<Rat>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| config_error(format!("--{what}: {e}")))?;
    if vals.len() != n {
        return Err(config_error(format!("--{what} expects {n} values, got {}", vals.len())));
    }
    Ok(vals)
}

fn parse_frame(text: &str) -> Result<FrameChoice, Exit> {
    if text.trim() == "auto" {
        return Ok(FrameChoice::AUTO);
    }
    let mu = parse_rats(text, 3, "frame")?;
    Ok(FrameChoice::Given(mu.try_into().expect("three values")))
}

fn apply_model(config: &mut SuiteConfig, model: &ModelArgs) -> Result<(), Exit> {
    if let Some(l) = &model.lambda {
        config.lambda = parse_rats(l, 4, "lambda")?.try_into().expect("four values");
    }
    if let Some(f) = &model.frame {
        config.frame = parse_frame(f)?;
    }
    if let Some(o) = model.order {
        config.order = o;
    }
    Ok(())
}

fn load_config(path: Option<&Path>) -> Result<SuiteConfig, Exit> {
    let Some(path) = path else { return Ok(SuiteConfig::default()) };
    let text = std::fs::read_to_string(path).map_err(|e| config_error(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| config_error(format!("{}: {e}", path.display())))
}

/// Writes via a temporary file in the target directory and a rename.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Exit> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let io = |e: std::io::Error| config_error(format!("{}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

fn build_config(args: &VerifyArgs, octic: bool) -> Result<SuiteConfig, Exit> {
    let mut config = load_config(args.config.as_deref())?;
    apply_model(&mut config, &args.model)?;
    if let Some(s) = args.seed {
        config.seed = s;
    }
    if let Some(p) = args.planes {
        config.planes = p;
    }
    if args.reverse_inclusion {
        config.suites.reverse_inclusion = true;
    }
    config.threads = args.threads;
    config.suites = Suites { planes: !octic, octic, ..config.suites };
    if octic {
        OcticParams::new(config.lambda.clone()).map_err(config_error)?;
    }
    config.validate().map_err(config_error)?;
    Ok(config)
}

fn link_target(json: &Path, markdown: &Path) -> String {
    match (json.parent(), markdown.parent()) {
        (Some(a), Some(b)) if a == b => {
            json.file_name().map_or_else(|| json.display().to_string(), |f| f.to_string_lossy().into_owned())
        }
        _ => json.display().to_string(),
    }
}

fn verify(args: &VerifyArgs, octic: bool, out: &mut dyn Write) -> Result<i32, Exit> {
    let config = build_config(args, octic)?;
    let report = verify_all(&config).map_err(config_error)?;
    for c in &report.checks {
        let _ = writeln!(out, "{:<7} {}", c.status.as_str(), c.id);
    }
    let _ = writeln!(out, "overall {}  hash {}", report.overall.as_str(), report.hash);
    if let Some(path) = &args.json {
        write_atomic(path, &report.to_json())?;
    }
    if let Some(path) = &args.markdown {
        let link = args.json.as_deref().map(|j| link_target(j, path));
        write_atomic(path, &report.to_markdown(link.as_deref()))?;
    }
    Ok(if report.passed() { EXIT_PASS } else { EXIT_FAIL })
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Exit> {
    match path {
        Some(p) => write_atomic(p, text),
        None => {
            let _ = writeln!(out, "{text}");
            Ok(())
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Exit> {
    match cli.command {
        Command::VerifyOctic(args) => verify(&args, true, out),
        Command::VerifyPlanes(args) => verify(&args, false, out),
        Command::Percolation { lines, truncation, divisor_degree } => {
            let (margin, certified) =
                non_percolation_margin(PercolationParams { n_lines: lines, truncation, divisor_degree })
                    .map_err(config_error)?;
            let verdict = if certified { "certified" } else { "not certified" };
            let _ = writeln!(out, "margin {margin}, {verdict}");
            Ok(EXIT_PASS)
        }
        Command::FactorVertex { model, vertex, out: path } => {
            let mut config = SuiteConfig::default();
            apply_model(&mut config, &model)?;
            config.validate().map_err(config_error)?;
            let params = OcticParams::new(config.lambda.clone()).map_err(config_error)?;
            let frame = match &config.frame {
                FrameChoice::Auto(_) => TangentFrame::auto(&params),
                FrameChoice::Given(mu) => TangentFrame::new(&params, mu.clone()),
            }
            .map_err(config_error)?;
            let fact = factor_vertex(&params, &frame, usize::from(vertex), config.order)
                .map_err(|e| Exit { code: EXIT_FAIL, message: e })?;
            let text = serde_json::to_string_pretty(&fact).expect("serializable factorization");
            emit(path.as_deref(), &text, out)?;
            Ok(EXIT_PASS)
        }
        Command::Report { input, out: path } => {
            let text =
                std::fs::read_to_string(&input).map_err(|e| config_error(format!("{}: {e}", input.display())))?;
            let report = Report::from_json(&text).map_err(|e| config_error(format!("{}: {e}", input.display())))?;
            if report.body_hash() != report.hash {
                return Err(config_error(format!("{}: hash does not match report body", input.display())));
            }
            let link = path.as_deref().map(|p| link_target(&input, p)).unwrap_or_else(|| input.display().to_string());
            emit(path.as_deref(), &report.to_markdown(Some(&link)), out)?;
            Ok(EXIT_PASS)
        }
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// code.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
