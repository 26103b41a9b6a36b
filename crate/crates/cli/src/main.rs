mod compute;
mod scenarios;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use compute::{ComputeOptions, Quantity};
use scenarios::{Overrides, ScenarioReport};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_COMPUTE: u8 = 3;

#[derive(Parser)]
#[command(name = "bergerlab", version, about = "Exact curvature spaces and Tanaka prolongations")]
struct Cli {
    /// Emit JSON instead of a text table.
    #[arg(long, global = true)]
    json: bool,
    /// Ground field.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<bergerlab::exactlin::Field>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run registered scenarios (`all` runs every one).
    Run {
        #[arg(required = true)]
        scenarios: Vec<String>,
        /// Override a scenario parameter, e.g. `--param k=sl2:sym3`.
        #[arg(long = "param", value_parser = parse_kv)]
        params: Vec<(String, String)>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Run scenarios on separate threads; output order is unchanged.
        #[arg(long)]
        parallel: bool,
    },
    /// Compute a single quantity for a catalog spec or `@file.json`.
    Compute {
        #[arg(value_enum)]
        quantity: Quantity,
        spec: String,
        #[arg(long)]
        emit_basis: bool,
        #[arg(long, default_value_t = bergerlab::tanaka::DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// List registered scenarios.
    List,
}

fn parse_field(s: &str) -> Result<bergerlab::exactlin::Field, String> {
    scenarios::parse_field(s).ok_or_else(|| format!("unknown field `{s}` (use q or qi)"))
}

fn parse_kv(s: &str) -> Result<(String, String), String> {
    s.split_once('=').map(|(k, v)| (k.to_owned(), v.to_owned())).ok_or_else(|| "expected key=value".to_owned())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for s in scenarios::registry() {
                println!("{:<22} {}", s.name, s.description);
            }
            ExitCode::SUCCESS
        }
        Command::Compute { quantity, spec, emit_basis, max_degree } => {
            let opts = ComputeOptions { field: cli.field.unwrap_or(bergerlab::exactlin::Field::QI), emit_basis, max_degree };
            match compute::compute(quantity, &spec, &opts) {
                Ok(out) => {
                    if cli.json {
                        println!("{}", serde_json::to_string_pretty(&Value::Object(out)).unwrap());
                    } else {
                        print_compute(&out);
                    }
                    ExitCode::SUCCESS
                }
                Err(bergerlab::Error::Parse(msg)) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(EXIT_USAGE)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_COMPUTE)
                }
            }
        }
        Command::Run { scenarios: names, params, seed, max_degree, parallel } => {
            let mut chosen = Vec::new();
            for name in &names {
                if name == "all" {
                    chosen.extend(scenarios::registry());
                } else if let Some(s) = scenarios::find(name) {
                    chosen.push(s);
                } else {
                    eprintln!("error: unknown scenario `{name}`; see `bergerlab list`");
                    return ExitCode::from(EXIT_USAGE);
                }
            }
            chosen.sort_by(|a, b| a.name.cmp(&b.name));
            chosen.dedup_by(|a, b| a.name == b.name);
            let o = Overrides { field: cli.field, seed, max_degree, params };
            let reports: Vec<ScenarioReport> = if parallel {
                std::thread::scope(|scope| {
                    let handles: Vec<_> = chosen.iter().map(|s| scope.spawn(|| scenarios::run(s, &o))).collect();
                    handles.into_iter().map(|h| h.join().expect("scenario thread panicked")).collect()
                })
            } else {
                chosen.iter().map(|s| scenarios::run(s, &o)).collect()
            };
            if let Err(e) = write_reports(&reports) {
                eprintln!("error: cannot write reports: {e}");
                return ExitCode::from(EXIT_COMPUTE);
            }
            if cli.json {
                let v = if reports.len() == 1 { json!(reports[0]) } else { json!(reports) };
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                reports.iter().for_each(print_report);
            }
            if reports.iter().any(|r| r.error.is_some()) {
                ExitCode::from(EXIT_COMPUTE)
            } else if reports.iter().all(|r| r.pass) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_MISMATCH)
            }
        }
    }
}

fn write_reports(reports: &[ScenarioReport]) -> std::io::Result<()> {
    let Some(dir) = std::env::var_os("BERGERLAB_REPORT_DIR") else {
        return Ok(());
    };
    let dir = PathBuf::from(dir);
    std::fs::create_dir_all(&dir)?;
    for r in reports {
        let text = serde_json::to_string_pretty(r).expect("report serializes");
        std::fs::write(dir.join(format!("{}.json", r.scenario)), text + "\n")?;
    }
    Ok(())
}

fn print_report(r: &ScenarioReport) {
    println!("{} {}", if r.pass { "PASS" } else { "FAIL" }, r.scenario);
    if let Some(e) = &r.error {
        println!("  error: {e}");
    }
    for c in &r.checks {
        let mark = if c.pass { "ok " } else { "BAD" };
        let prov = serde_json::to_value(c.provenance).unwrap();
        println!("  {mark} {:<24} expected {:<16} computed {:<16} ({})", c.key, c.expected.to_string(), c.computed.to_string(), prov.as_str().unwrap_or(""));
    }
}

fn print_compute(out: &serde_json::Map<String, Value>) {
    println!("{} {} over {}", out["command"].as_str().unwrap_or(""), out["spec"].as_str().unwrap_or(""), out["field"].as_str().unwrap_or(""));
    println!("  module dim {}, algebra dim {}", out["module_dim"], out["algebra_dim"]);
    if let Some(Value::Object(res)) = out.get("result") {
        for (k, v) in res {
            if k == "basis" || k == "bases" {
                continue;
            }
            println!("  {k:<20} {v}");
        }
        for key in ["basis", "bases"] {
            if let Some(Value::Array(rows)) = res.get(key) {
                println!("  {key}:");
                for row in rows {
                    println!("    {row}");
                }
            }
        }
    }
}
