use clap::Parser;
use hyperlab_cli::{cache, run_task, schema_dump, Status, TaskSpec};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

/// Exact-arithmetic workbench for hypercompositional structures over
/// finite and local fields: constructions, exhaustive verifications and
/// machine-readable reports.
#[derive(Parser)]
#[command(name = "hyperlab", version)]
struct Args {
    /// Task spec file with key=value lines, one of them command=<name>
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Emit the canonical JSON report (the default; kept for scripts)
    #[arg(long)]
    json: bool,
    /// Worker threads for parallel searches
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Seed recorded in the report and used by randomized cross-checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Command name (alternative to --spec)
    command: Option<String>,
    /// key=value parameters for the command
    params: Vec<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let task = match build_task(&args) {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("{msg}\n\nexpected parameters per command:\n{}", schema_dump());
            return ExitCode::from(Status::Error.exit_code() as u8);
        }
    };

    let cache_dir = std::env::var_os(cache::CACHE_ENV).map(PathBuf::from);
    let key = cache::cache_key(&task);
    if let Some(dir) = &cache_dir {
        if let Some(bytes) = cache::cache_lookup(dir, &key) {
            // served byte-identically from the cache
            let text = String::from_utf8_lossy(&bytes);
            print!("{text}");
            let status = serde_json::from_slice::<serde_json::Value>(&bytes)
                .ok()
                .and_then(|v| v.get("status").and_then(|s| s.as_str().map(str::to_string)))
                .and_then(|s| Status::from_name(&s))
                .unwrap_or(Status::Error);
            eprintln!("served from cache ({key})");
            return ExitCode::from(status.exit_code() as u8);
        }
    }

    let pool = rayon::ThreadPoolBuilder::new().num_threads(args.jobs.max(1)).build();
    let started = Instant::now();
    let report = match pool {
        Ok(pool) => pool.install(|| run_task(&task)),
        Err(_) => run_task(&task),
    };
    eprintln!("task completed in {:.3}s", started.elapsed().as_secs_f64());

    let text = report.to_canonical_json();
    if let Some(dir) = &cache_dir {
        cache::cache_store(dir, &key, report.status, text.as_bytes());
    }
    print!("{text}");
    ExitCode::from(report.status.exit_code() as u8)
}

fn build_task(args: &Args) -> Result<TaskSpec, String> {
    match (&args.spec, &args.command) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            TaskSpec::from_spec_text(&text, args.seed).map_err(|e| e.to_string())
        }
        (None, Some(command)) => {
            TaskSpec::new(command, &args.params, args.seed).map_err(|e| e.to_string())
        }
        (Some(_), Some(_)) => Err("use either --spec or a command, not both".into()),
        (None, None) => Err("no command given".into()),
    }
}
