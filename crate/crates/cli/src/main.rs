use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use log::{info, LevelFilter};

use dunkl_cli::{report_exit_code, run, Cli, EXIT_USAGE};

fn init_logging(quiet: bool) {
    env_logger::Builder::new()
        .filter_level(if quiet { LevelFilter::Error } else { LevelFilter::Info })
        .format(|buf, rec| writeln!(buf, "dunkl: {}: {}", rec.level().as_str().to_lowercase(), rec.args()))
        .target(env_logger::Target::Stderr)
        .init();
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    init_logging(cli.quiet);
    let start = Instant::now();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("dunkl: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let text = report.render(cli.format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(|e| format!("cannot write report: {e}")),
    };
    if let Err(e) = written {
        eprintln!("dunkl: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    // timing stays off the report so its bytes are reproducible
    info!("{} finished in {:.3} s", cli.command.name(), start.elapsed().as_secs_f64());
    ExitCode::from(report_exit_code(&report))
}
