use std::process::ExitCode;

fn main() -> ExitCode {
    let config = match calgrid_cli::parse_args(std::env::args_os()) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match calgrid_cli::run(&config) {
        Ok(summary) => {
            for w in &summary.warnings {
                eprintln!("calgrid: warning: {w}");
            }
            eprintln!("calgrid: {summary}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("calgrid: error: {e}");
            ExitCode::from(1)
        }
    }
}
