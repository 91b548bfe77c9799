//! `drg`: feasibility checks, parameter searches, spectra and graph
//! verification for distance-regular graphs.

mod config;
mod render;

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};
use drg_core::array::IntersectionArray;
use drg_core::catalog;
use drg_core::feasibility::criteria_with_mask;
use drg_core::graphs::construct::GraphSpec;
use drg_core::graphs::manifest::{self, load_entry, load_graph6_file, DataError, EntryStatus, Manifest};
use drg_core::graphs::{adjacency_spectrum_numeric, check_distance_regular, graph6, is_geometric_small, Graph};
use drg_core::search::{scan_c2one_case, search_with, taylor_classify, CaseId, Exec, PartialArrayScan, SearchConfig};
use drg_core::spectral::spectrum;

use config::{FileConfig, Format};

/// Exit statuses shared by every subcommand.
mod exit {
    pub const OK: u8 = 0;
    pub const NEGATIVE: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const DATA_ABSENT: u8 = 3;
}

#[derive(Parser, Debug)]
#[command(name = "drg", version, about = "Distance-regular graphs with smallest eigenvalue at least -3")]
struct Cli {
    /// JSON file with default option values; command-line flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
struct FormatArg {
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the twelve feasibility criteria on an intersection array.
    Check {
        /// Array such as "{7,4,1;1,2,7}".
        array: String,
        /// Also apply the divisibility elimination.
        #[arg(long)]
        with_bcn444: bool,
        /// Criteria to skip, comma separated.
        #[arg(long, value_delimiter = ',')]
        disable: Vec<u8>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Sweep all arrays of one diameter that pass the criteria.
    Search {
        #[arg(long)]
        diameter: Option<usize>,
        /// Exclusive upper bound on a1.
        #[arg(long)]
        a1_max: Option<i64>,
        /// Worker threads; 0 runs sequentially.
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        disable: Vec<u8>,
        /// Do not stream arrays to stderr as they are found.
        #[arg(long)]
        quiet: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Exact eigenvalues and multiplicities of an intersection array.
    Spectrum {
        array: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Check a concrete graph for distance-regularity and geometricity.
    VerifyGraph {
        #[command(flatten)]
        source: GraphSource,
        /// Directory holding manifest.json and graph6 files.
        #[arg(long, env = manifest::DATA_DIR_ENV)]
        data_dir: Option<PathBuf>,
        /// Skip the Delsarte clique cover search.
        #[arg(long)]
        no_geometric: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Truncated quotient-matrix scan for one c2 = 1 case.
    ScanCase {
        /// One of 5-0, 6-0, 8-1, 12-2.
        case: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Classify the Taylor graphs with smallest eigenvalue at least -3.
    Taylor {
        #[command(flatten)]
        format: FormatArg,
    },
    /// Print a constructed graph in graph6 format.
    ExportGraph6 {
        /// Construction such as "halved_cube:6".
        construct: String,
    },
    /// List the catalogued arrays.
    Catalog {
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Named construction such as "halved_cube:6" or "gosset".
    #[arg(long)]
    construct: Option<String>,
    /// Path to a graph6 file.
    #[arg(long)]
    graph6: Option<PathBuf>,
    /// Manifest entry in the data directory.
    #[arg(long)]
    data: Option<String>,
    /// Every manifest entry in the data directory.
    #[arg(long)]
    all_data: bool,
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure {
            code: exit::INPUT,
            message: message.to_string(),
        }
    }
}

impl From<DataError> for Failure {
    fn from(e: DataError) -> Self {
        let code = match e {
            DataError::Absent(_) => exit::DATA_ABSENT,
            _ => exit::INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn parse_array(text: &str) -> Result<IntersectionArray, Failure> {
    text.parse()
        .map_err(|e| Failure::input(format!("cannot parse {text:?}: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::INPUT } else { exit::OK });
        }
    };
    let result = FileConfig::load(cli.config.as_deref())
        .map_err(Failure::input)
        .and_then(|cfg| run(cli.command, &cfg));
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, cfg: &FileConfig) -> Outcome {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match command {
        Command::Check {
            array,
            with_bcn444,
            disable,
            format,
        } => cmd_check(&mut out, &array, with_bcn444 || cfg.with_bcn444.unwrap_or(false), &cfg.disable(&disable), cfg.format(format.format)),
        Command::Search {
            diameter,
            a1_max,
            workers,
            disable,
            quiet,
            format,
        } => {
            let search = SearchArgs {
                diameter: diameter.or(cfg.diameter).unwrap_or(3),
                a1_max: a1_max.or(cfg.a1_max).unwrap_or(100),
                workers: workers.or(cfg.workers),
                disable: cfg.disable(&disable),
                quiet,
            };
            cmd_search(&mut out, &search, cfg.format(format.format))
        }
        Command::Spectrum { array, format } => cmd_spectrum(&mut out, &array, cfg.format(format.format)),
        Command::VerifyGraph {
            source,
            data_dir,
            no_geometric,
            format,
        } => {
            let dir = data_dir.or_else(|| cfg.data_dir.clone());
            cmd_verify_graph(&mut out, &source, dir.as_deref(), !no_geometric, cfg.format(format.format))
        }
        Command::ScanCase { case, format } => cmd_scan_case(&mut out, &case, cfg.format(format.format)),
        Command::Taylor { format } => cmd_taylor(&mut out, cfg.format(format.format)),
        Command::ExportGraph6 { construct } => {
            let g = build(&construct)?;
            writeln!(out, "{}", graph6::encode(&g)).map(|_| exit::OK).map_err(io_failure)
        }
        Command::Catalog { format } => render::catalog(&mut out, cfg.format(format.format)).map(|_| exit::OK).map_err(io_failure),
    }?;
    out.flush().map_err(io_failure)?;
    Ok(code)
}

fn io_failure(e: io::Error) -> Failure {
    Failure::input(format!("writing output: {e}"))
}

fn cmd_check(out: &mut impl Write, text: &str, with_bcn444: bool, disable: &[u8], format: Format) -> Outcome {
    let ia = parse_array(text)?;
    let mut mask = drg_core::feasibility::CriteriaMask::ALL;
    for &id in disable {
        if !(1..=12).contains(&id) {
            return Err(Failure::input(format!("no criterion {id}")));
        }
        mask = mask.disable(id);
    }
    let report = criteria_with_mask(&ia, mask).map_err(Failure::input)?;
    let feasible = report.feasible_with(with_bcn444);
    render::report(out, &report, with_bcn444, feasible, format).map_err(io_failure)?;
    Ok(if feasible { exit::OK } else { exit::NEGATIVE })
}

struct SearchArgs {
    diameter: usize,
    a1_max: i64,
    workers: Option<usize>,
    disable: Vec<u8>,
    quiet: bool,
}

fn cmd_search(out: &mut impl Write, args: &SearchArgs, format: Format) -> Outcome {
    let exec = match args.workers {
        Some(0) => Exec::Sequential,
        w => Exec::Parallel(w),
    };
    let mut cfg = SearchConfig::new(args.diameter).a1_range(1..args.a1_max).exec(exec);
    for &id in &args.disable {
        if !(1..=12).contains(&id) {
            return Err(Failure::input(format!("no criterion {id}")));
        }
        cfg = cfg.disable(id);
    }
    let stderr = Mutex::new(io::stderr());
    let stream = |ia: &IntersectionArray| {
        if !args.quiet {
            let mut e = stderr.lock().expect("stderr lock");
            let _ = writeln!(e, "found {ia}");
        }
    };
    let outcome = search_with(&cfg, &stream).map_err(Failure::input)?;
    render::search(out, &outcome, format).map_err(io_failure)?;
    Ok(exit::OK)
}

fn cmd_spectrum(out: &mut impl Write, text: &str, format: Format) -> Outcome {
    let ia = parse_array(text)?;
    let spec = spectrum(&ia).map_err(Failure::input)?;
    render::spectrum(out, &ia, &spec, format).map_err(io_failure)?;
    Ok(exit::OK)
}

fn build(text: &str) -> Result<Graph, Failure> {
    let spec: GraphSpec = text.parse().map_err(Failure::input)?;
    spec.build().map_err(Failure::input)
}

fn data_dir(dir: Option<&Path>) -> Result<&Path, Failure> {
    dir.ok_or_else(|| {
        Failure::input(format!("no data directory; pass --data-dir or set {}", manifest::DATA_DIR_ENV))
    })
}

fn cmd_verify_graph(
    out: &mut impl Write,
    source: &GraphSource,
    dir: Option<&Path>,
    geometric: bool,
    format: Format,
) -> Outcome {
    if source.all_data {
        let dir = data_dir(dir)?;
        let reports = manifest::verify_all(dir)?;
        render::manifest(out, &reports, format).map_err(io_failure)?;
        let failed = reports
            .iter()
            .any(|r| !matches!(r.status, EntryStatus::Verified { .. } | EntryStatus::DataAbsent));
        return Ok(if failed { exit::NEGATIVE } else { exit::OK });
    }
    let g = if let Some(text) = &source.construct {
        build(text)?
    } else if let Some(path) = &source.graph6 {
        load_graph6_file(path)?.with_label(path.display().to_string())
    } else {
        let name = source.data.as_deref().expect("clap enforces one source");
        let dir = data_dir(dir)?;
        let m = Manifest::load(dir)?;
        load_entry(dir, m.entry(name)?)?
    };
    let check = check_distance_regular(&g).map_err(Failure::input)?;
    let numeric_min = adjacency_spectrum_numeric(&g).last().copied();
    let (exact_spec, geometric_verdict) = match &check.array {
        Some(ia) => {
            let spec = spectrum(ia).ok();
            let verdict = if geometric {
                Some(is_geometric_small(&g, ia).map_err(|e| e.to_string()))
            } else {
                None
            };
            (spec, verdict)
        }
        None => (None, None),
    };
    let verification = render::Verification {
        label: g.label().unwrap_or("graph").to_string(),
        order: g.order(),
        edges: g.edge_count(),
        check: &check,
        theta_min_exact: exact_spec.as_ref().map(|s| s.theta_min().to_string()),
        theta_min_numeric: numeric_min,
        geometric: geometric_verdict,
        catalog: check.array.as_ref().and_then(catalog::annotation),
    };
    render::verification(out, &verification, format).map_err(io_failure)?;
    Ok(if check.is_distance_regular { exit::OK } else { exit::NEGATIVE })
}

fn cmd_scan_case(out: &mut impl Write, case: &str, format: Format) -> Outcome {
    let id: CaseId = case.parse().map_err(Failure::input)?;
    let report = scan_c2one_case(&PartialArrayScan::case(id)).map_err(Failure::input)?;
    render::scan(out, id, &report, format).map_err(io_failure)?;
    Ok(exit::OK)
}

fn cmd_taylor(out: &mut impl Write, format: Format) -> Outcome {
    render::taylor(out, &taylor_classify(), format).map_err(io_failure)?;
    Ok(exit::OK)
}
