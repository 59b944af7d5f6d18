//! Command-line surface: color, verify-oriented oracle queries, generation,
//! and benchmarking.
//!
//! Exit codes are a stable contract:
//!   0 success, 2 parse error, 3 input not H-free, 4 invariant violation
//!   (a bug), 5 enumeration/oracle scale cap exceeded.

use crate::colorer::{
    color_star_forest_free, verify_bound, verify_coloring, CheckMode, ColorConfig, ColorError,
};
use crate::gen::GenSpec;
use crate::graph::Graph;
use crate::io::{read_dimacs_col, read_graph6, write_graph6};
use crate::oracles::{
    chromatic_number_exact_with_cap, clique_number, contains_induced_star_forest, ramsey_bound,
    ramsey_witness, stability_number, RamseyOutcome, DEFAULT_CHI_CAP,
};
use crate::pattern::StarForest;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_H_FREE: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;
pub const EXIT_CAP: i32 = 5;

#[derive(Parser)]
#[command(
    name = "starfree",
    about = "Color star-forest-free graphs within omega^c colors, with exact oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    G6,
    Dimacs,
}

#[derive(Args)]
struct ColorArgs {
    /// Graph file (graph6, or DIMACS .col)
    input: PathBuf,
    /// Excluded pattern, e.g. "star:3", "K1,3+2xK2"
    #[arg(short, long)]
    pattern: String,
    /// Input format; default sniffs by extension (.col -> dimacs)
    #[arg(long, value_enum)]
    format: Option<FileFormat>,
    /// Force the H-freeness pre-check on
    #[arg(long, conflicts_with = "no_check")]
    check: bool,
    /// Force the H-freeness pre-check off
    #[arg(long)]
    no_check: bool,
    /// Write the decomposition trace JSON here
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Testing hook: decompose at this degree instead of omega^c
    #[arg(long)]
    threshold_override: Option<usize>,
    /// Stable-subset enumeration cap per decomposition
    #[arg(long, default_value_t = 1_000_000)]
    cap: u64,
    /// Also report the exact chromatic number (within the oracle cap)
    #[arg(long)]
    chi: bool,
    /// Include wall time in the report (off keeps stdout byte-identical
    /// across runs)
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Clique number
    Omega { input: PathBuf },
    /// Stability number
    Alpha { input: PathBuf },
    /// Exact chromatic number (desk scale)
    Chi {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CHI_CAP)]
        cap: usize,
    },
    /// Induced star-forest freeness
    Hfree {
        input: PathBuf,
        #[arg(short, long)]
        pattern: String,
    },
    /// Stable set of size k, or a vertex-count certificate
    Ramsey {
        input: PathBuf,
        #[arg(short)]
        k: usize,
    },
}

#[derive(Args)]
struct BenchArgs {
    /// Pattern every instance is colored against
    #[arg(short, long)]
    pattern: String,
    /// Directory of .g6 / .col instances
    #[arg(long, conflicts_with = "specs")]
    corpus: Option<PathBuf>,
    /// JSON file holding an array of generator specs
    #[arg(long)]
    specs: Option<PathBuf>,
    /// Output CSV path (stdout when omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Also compute the exact chromatic number per instance (within cap)
    #[arg(long)]
    chi: bool,
    #[arg(long, default_value_t = 1_000_000)]
    cap: u64,
    /// Include per-instance wall time (off keeps the CSV byte-identical)
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Color an H-free graph within omega^c colors
    Color(ColorArgs),
    /// Exact oracle queries
    Oracle {
        #[command(subcommand)]
        query: OracleCmd,
    },
    /// Generate a graph from a JSON spec, as graph6
    Gen {
        /// Spec file; "-" or omitted reads stdin
        spec: Option<PathBuf>,
    },
    /// Color a corpus and emit a CSV of bounds and ratios
    Bench(BenchArgs),
}

struct CliError {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> CliError {
    CliError {
        code,
        message: message.into(),
    }
}

pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Color(args) => cmd_color(args),
        Command::Oracle { query } => cmd_oracle(query),
        Command::Gen { spec } => cmd_gen(spec),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn read_input(path: &Path, format: Option<FileFormat>) -> Result<(Graph, Vec<u8>), CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| fail(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| fail(EXIT_PARSE, format!("{} is not ASCII text", path.display())))?;
    let format = format.unwrap_or_else(|| {
        if path.extension().is_some_and(|e| e == "col") {
            FileFormat::Dimacs
        } else {
            FileFormat::G6
        }
    });
    let graph = match format {
        FileFormat::G6 => read_graph6(&text).map_err(|e| fail(EXIT_PARSE, e.to_string()))?,
        FileFormat::Dimacs => {
            let (g, warnings) =
                read_dimacs_col(&text).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
            for w in warnings {
                eprintln!("warning: {w}");
            }
            g
        }
    };
    Ok((graph, bytes))
}

fn parse_pattern(text: &str) -> Result<StarForest, CliError> {
    StarForest::parse(text).map_err(|e| fail(EXIT_PARSE, e.to_string()))
}

fn color_error(e: ColorError) -> CliError {
    let code = match e {
        ColorError::NotHFree { .. } => EXIT_NOT_H_FREE,
        ColorError::InvariantViolation { .. } => EXIT_INVARIANT,
        ColorError::EnumerationCapExceeded { .. } => EXIT_CAP,
    };
    fail(code, e.to_string())
}

/// Everything a coloring run reports. `bound` is omega^final_c in decimal.
#[derive(Serialize)]
pub struct RunReport {
    pub input_digest: String,
    pub pattern: String,
    pub omega: usize,
    pub final_c: u64,
    pub colors_used: usize,
    pub bound: String,
    pub chi_exact: Option<usize>,
    pub wall_time_ms: Option<u128>,
    pub trace_path: Option<String>,
}

fn cmd_color(args: ColorArgs) -> Result<(), CliError> {
    let (g, bytes) = read_input(&args.input, args.format)?;
    let h = parse_pattern(&args.pattern)?;
    let cfg = ColorConfig {
        check_h_free: if args.check {
            CheckMode::On
        } else if args.no_check {
            CheckMode::Off
        } else {
            CheckMode::Auto
        },
        degree_threshold_override: args.threshold_override,
        enumeration_cap: args.cap,
    };
    let started = Instant::now();
    let (coloring, trace, cert) =
        color_star_forest_free(&g, &h, &cfg).map_err(color_error)?;
    let elapsed = started.elapsed().as_millis();
    debug_assert!(verify_coloring(&g, &coloring));

    if let Some(path) = &args.trace {
        let json = serde_json::to_string_pretty(&trace)
            .expect("trace serializes");
        std::fs::write(path, json)
            .map_err(|e| fail(EXIT_PARSE, format!("cannot write trace: {e}")))?;
    }

    let omega = clique_number(&g);
    let chi_exact = if args.chi {
        chromatic_number_exact_with_cap(&g, DEFAULT_CHI_CAP).ok()
    } else {
        None
    };
    let report = RunReport {
        input_digest: hex_digest(&bytes),
        pattern: h.to_string(),
        omega,
        final_c: cert.final_c,
        colors_used: coloring.distinct_colors(),
        bound: BigUint::from(omega)
            .pow(u32::try_from(cert.final_c).expect("exponent fits u32"))
            .to_string(),
        chi_exact,
        wall_time_ms: args.timing.then_some(elapsed),
        trace_path: args.trace.as_ref().map(|p| p.display().to_string()),
    };
    let mut out = String::new();
    for (v, c) in coloring.colors.iter().enumerate() {
        writeln!(out, "{v}\t{c}").unwrap();
    }
    out.push_str(&serde_json::to_string(&report).expect("report serializes"));
    out.push('\n');
    print!("{out}");
    let _ = verify_bound(&g, &coloring, &cert); // asserted inside the run
    Ok(())
}

fn hex_digest(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn cmd_oracle(query: OracleCmd) -> Result<(), CliError> {
    match query {
        OracleCmd::Omega { input } => {
            let (g, _) = read_input(&input, None)?;
            println!("{}", clique_number(&g));
        }
        OracleCmd::Alpha { input } => {
            let (g, _) = read_input(&input, None)?;
            println!("{}", stability_number(&g));
        }
        OracleCmd::Chi { input, cap } => {
            let (g, _) = read_input(&input, None)?;
            let chi = chromatic_number_exact_with_cap(&g, cap)
                .map_err(|e| fail(EXIT_CAP, e.to_string()))?;
            println!("{chi}");
        }
        OracleCmd::Hfree { input, pattern } => {
            let (g, _) = read_input(&input, None)?;
            let h = parse_pattern(&pattern)?;
            match contains_induced_star_forest(&g, &h) {
                None => println!("true"),
                Some(emb) => {
                    println!("false");
                    let parts: Vec<String> = emb
                        .stars
                        .iter()
                        .map(|s| format!("center={} leaves={:?}", s.center, s.leaves))
                        .collect();
                    println!("embedding: {}", parts.join("; "));
                }
            }
        }
        OracleCmd::Ramsey { input, k } => {
            if k == 0 {
                return Err(fail(EXIT_PARSE, "k must be at least 1"));
            }
            let (g, _) = read_input(&input, None)?;
            match ramsey_witness(&g, k) {
                RamseyOutcome::StableSet(s) => {
                    let verts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                    println!("stable-set {}", verts.join(" "));
                }
                RamseyOutcome::Certificate {
                    omega,
                    k,
                    bound,
                    vertex_count,
                } => {
                    debug_assert_eq!(bound, ramsey_bound(omega as u64, k as u64));
                    println!("certificate {vertex_count} <= {bound}");
                }
            }
        }
    }
    Ok(())
}

fn cmd_gen(spec_path: Option<PathBuf>) -> Result<(), CliError> {
    let text = match spec_path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(&p)
            .map_err(|e| fail(EXIT_PARSE, format!("cannot read {}: {e}", p.display())))?,
        _ => {
            use std::io::Read;
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| fail(EXIT_PARSE, format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let spec: GenSpec =
        serde_json::from_str(&text).map_err(|e| fail(EXIT_PARSE, format!("bad spec: {e}")))?;
    match crate::gen::generate(&spec).map_err(|e| fail(EXIT_PARSE, e.to_string()))? {
        Some(g) => println!("{}", write_graph6(&g)),
        None => eprintln!("no H-free instance found within the configured tries"),
    }
    Ok(())
}

struct BenchInstance {
    name: String,
    graph: Graph,
}

fn load_corpus(dir: &Path) -> Result<Vec<BenchInstance>, CliError> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| fail(EXIT_PARSE, format!("cannot read {}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| {
            p.extension()
                .is_some_and(|ext| ext == "g6" || ext == "col")
        })
        .collect();
    paths.sort();
    let mut instances = Vec::new();
    for path in paths {
        let name = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        if path.extension().is_some_and(|e| e == "col") {
            let (g, _) = read_input(&path, Some(FileFormat::Dimacs))?;
            instances.push(BenchInstance { name, graph: g });
        } else {
            // a .g6 file may hold several graphs, one per line
            let text = std::fs::read_to_string(&path)
                .map_err(|e| fail(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
            let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
            for (i, line) in lines.iter().enumerate() {
                let g = read_graph6(line).map_err(|e| {
                    fail(EXIT_PARSE, format!("{}:{}: {e}", path.display(), i + 1))
                })?;
                let name = if lines.len() == 1 {
                    name.clone()
                } else {
                    format!("{name}#{i}")
                };
                instances.push(BenchInstance { name, graph: g });
            }
        }
    }
    Ok(instances)
}

fn load_specs(path: &Path) -> Result<Vec<BenchInstance>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
    let specs: Vec<GenSpec> =
        serde_json::from_str(&text).map_err(|e| fail(EXIT_PARSE, format!("bad specs: {e}")))?;
    let mut instances = Vec::new();
    for (i, spec) in specs.iter().enumerate() {
        if let Some(g) = crate::gen::generate(spec).map_err(|e| fail(EXIT_PARSE, e.to_string()))? {
            instances.push(BenchInstance {
                name: format!("spec[{i}]"),
                graph: g,
            });
        }
    }
    Ok(instances)
}

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    let h = parse_pattern(&args.pattern)?;
    let instances = match (&args.corpus, &args.specs) {
        (Some(dir), None) => load_corpus(dir)?,
        (None, Some(path)) => load_specs(path)?,
        _ => return Err(fail(EXIT_PARSE, "exactly one of --corpus / --specs required")),
    };
    let cfg = ColorConfig {
        check_h_free: CheckMode::On,
        degree_threshold_override: None,
        enumeration_cap: args.cap,
    };
    let mut csv = String::from("# starfree bench csv v1\n");
    csv.push_str("instance,n,m,omega,chi,colors,bound,ratio,time_ms,status\n");
    for inst in &instances {
        let g = &inst.graph;
        let started = Instant::now();
        let run = color_star_forest_free(g, &h, &cfg);
        let elapsed = started.elapsed().as_millis();
        let omega = clique_number(g);
        let chi = if args.chi {
            chromatic_number_exact_with_cap(g, DEFAULT_CHI_CAP)
                .map(|v| v.to_string())
                .unwrap_or_default()
        } else {
            String::new()
        };
        let time_field = if args.timing {
            elapsed.to_string()
        } else {
            String::new()
        };
        match run {
            Ok((coloring, _, cert)) => {
                let bound = BigUint::from(omega)
                    .pow(u32::try_from(cert.final_c).expect("exponent fits u32"));
                let colors = coloring.distinct_colors();
                let ratio = if bound > BigUint::from(0u32) {
                    // decimal ratio at 6 places, exact integer arithmetic
                    let scaled = BigUint::from(colors) * BigUint::from(1_000_000u32) / &bound;
                    let v: f64 = scaled.to_string().parse().unwrap_or(f64::NAN);
                    format!("{:.6}", v / 1_000_000.0)
                } else {
                    String::new()
                };
                writeln!(
                    csv,
                    "{},{},{},{},{},{},{},{},{},ok",
                    inst.name,
                    g.n(),
                    g.edge_count(),
                    omega,
                    chi,
                    colors,
                    bound,
                    ratio,
                    time_field
                )
                .unwrap();
            }
            Err(e) => {
                let status = match e {
                    ColorError::NotHFree { .. } => "not-h-free",
                    ColorError::InvariantViolation { .. } => "invariant-violation",
                    ColorError::EnumerationCapExceeded { .. } => "cap-exceeded",
                };
                writeln!(
                    csv,
                    "{},{},{},{},{},,,,{},{}",
                    inst.name,
                    g.n(),
                    g.edge_count(),
                    omega,
                    chi,
                    time_field,
                    status
                )
                .unwrap();
            }
        }
    }
    match &args.output {
        Some(path) => std::fs::write(path, csv)
            .map_err(|e| fail(EXIT_PARSE, format!("cannot write CSV: {e}")))?,
        None => print!("{csv}"),
    }
    Ok(())
}
