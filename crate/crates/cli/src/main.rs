//! `prochouse`: generate, validate, render and summarize house datasets.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use prochouse::catalog::{load_catalog, Catalog, Split};
use prochouse::house::{load_house, House};
use prochouse::pipeline::{bench, generate_dataset, load_manifest, manifest_for, replay_manifest, write_dataset, PipelineParams};
use prochouse::roomspec::{load_room_specs, RoomSpec};
use prochouse::stats::compute_stats;
use prochouse::svg::{render_svg, SvgOptions};
use prochouse::validate::validate_house;
use prochouse::Error;
use serde::Serialize;

const SEED_ENV: &str = "PROCHOUSE_SEED";

#[derive(Parser)]
#[command(name = "prochouse", version, about = "Procedural house generator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Inputs {
    /// Room-spec registry (JSON array).
    #[arg(long, default_value = "data/room_specs.json")]
    room_specs: PathBuf,
    /// Asset catalog.
    #[arg(long, default_value = "data/catalog.json")]
    catalog: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a dataset directory with a manifest.
    Gen {
        #[arg(long, default_value_t = 10)]
        count: u64,
        /// Root seed; PROCHOUSE_SEED takes precedence.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, default_value = "train")]
        split: Split,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        /// Skip color and material randomization.
        #[arg(long)]
        no_material_rand: bool,
        /// Let floor placement cut rooms into pieces; validation alone
        /// rejects the results.
        #[arg(long)]
        no_nav_guard: bool,
    },
    /// Check navigability of one house file or every house in a directory.
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Draw a house as a top-down SVG.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        svg: PathBuf,
    },
    /// Summarize a dataset directory.
    Stats {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        json: PathBuf,
    },
    /// Time generation plus validation.
    Bench {
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        no_nav_guard: bool,
    },
    /// Regenerate a dataset from its manifest and compare digests.
    Replay {
        #[arg(long)]
        manifest: PathBuf,
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

/// Failure with its exit code: 1 for validation, 2 for bad input.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Schema { .. } | Error::Io { .. } | Error::EmptyRegistry => 2,
            _ => 1,
        };
        Failure(code, e.to_string())
    }
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

fn default_jobs(jobs: Option<usize>) -> usize {
    jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn load_inputs(i: &Inputs) -> Result<(Vec<RoomSpec>, Catalog), Failure> {
    Ok((load_room_specs(&i.room_specs)?, load_catalog(&i.catalog)?))
}

fn root_seed(flag: u64) -> Result<u64, Failure> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| input_error(format!("{SEED_ENV}={v} is not an unsigned integer"))),
        Err(_) => Ok(flag),
    }
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::from(Error::io(path.display().to_string(), e)))
}

/// House files in a directory, sorted; the manifest is skipped.
fn house_files(dir: &Path) -> Result<Vec<PathBuf>, Failure> {
    let rd = std::fs::read_dir(dir).map_err(|e| Failure::from(Error::io(dir.display().to_string(), e)))?;
    let mut files: Vec<PathBuf> = rd
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json") && p.file_name().is_some_and(|n| n != "manifest.json"))
        .collect();
    files.sort();
    Ok(files)
}

fn load_houses(path: &Path) -> Result<Vec<(PathBuf, House)>, Failure> {
    let files = if path.is_dir() { house_files(path)? } else { vec![path.to_path_buf()] };
    files.into_iter().map(|f| Ok((f.clone(), load_house(&f)?))).collect()
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FileReport {
    file: String,
    #[serde(flatten)]
    report: prochouse::validate::ValidationReport,
    millis: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ValidateSummary {
    pass: bool,
    houses: usize,
    failed: usize,
    reports: Vec<FileReport>,
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen { count, seed, inputs, split, out, jobs, no_material_rand, no_nav_guard } => {
            if split == Split::Any {
                return Err(input_error("--split must be train, val or test"));
            }
            let seed = root_seed(seed)?;
            let (specs, catalog) = load_inputs(&inputs)?;
            let params = PipelineParams {
                split,
                material_randomization: !no_material_rand,
                nav_guard: !no_nav_guard,
                ..Default::default()
            };
            let houses = generate_dataset(seed, count, default_jobs(jobs), &specs, &catalog, &params)?;
            let manifest = manifest_for(seed, &houses, &specs, &catalog, &params);
            write_dataset(&out, &houses, &manifest)?;
            let retries: u64 = houses.iter().map(|h| h.house.metadata.retries as u64).sum();
            eprintln!("wrote {count} houses to {} ({retries} retries)", out.display());
        }
        Command::Validate { input } => {
            let mut reports = Vec::new();
            for (file, house) in load_houses(&input)? {
                let t = Instant::now();
                let report = validate_house(&house);
                reports.push(FileReport { file: file.display().to_string(), report, millis: t.elapsed().as_secs_f64() * 1e3 });
            }
            let failed = reports.iter().filter(|r| !r.report.pass).count();
            print_json(&ValidateSummary { pass: failed == 0, houses: reports.len(), failed, reports });
            if failed > 0 {
                return Err(Failure(1, format!("{failed} house(s) failed validation")));
            }
        }
        Command::Render { input, svg } => {
            let house = load_house(&input)?;
            write_file(&svg, &render_svg(&house, &SvgOptions::default()))?;
        }
        Command::Stats { input, json } => {
            if !input.is_dir() {
                return Err(input_error(format!("{} is not a directory", input.display())));
            }
            let houses = load_houses(&input)?;
            let stats = compute_stats(houses.iter().map(|(_, h)| h));
            let mut text = serde_json::to_string_pretty(&stats).expect("serializable");
            text.push('\n');
            write_file(&json, &text)?;
        }
        Command::Bench { count, jobs, seed, inputs, no_nav_guard } => {
            let (specs, catalog) = load_inputs(&inputs)?;
            let params = PipelineParams { nav_guard: !no_nav_guard, ..Default::default() };
            let report = bench(root_seed(seed)?, count, default_jobs(jobs), &specs, &catalog, &params)?;
            print_json(&report);
        }
        Command::Replay { manifest, inputs, jobs } => {
            let m = load_manifest(&manifest)?;
            let (specs, catalog) = load_inputs(&inputs)?;
            let mismatches = replay_manifest(&m, &specs, &catalog, &PipelineParams::default(), default_jobs(jobs))?;
            print_json(&serde_json::json!({ "houses": m.houses.len(), "mismatches": mismatches }));
            if !mismatches.is_empty() {
                return Err(Failure(1, format!("{} house(s) differ from the manifest", mismatches.len())));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
