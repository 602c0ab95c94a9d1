use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use vfilt_cli::exec::{emit_fuzz, Format, Options, Status};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

/// Exact monomial-ideal computations and v-number formula checks.
///
/// Reads a session (ring and ideal declarations followed by commands) and
/// prints one result per command. Exit status: 0 success, 1 a verification
/// found an inequality, 2 usage or input error, 3 internal error.
#[derive(Debug, Parser)]
#[command(name = "vfilt", version)]
struct Cli {
    /// Session file, or `-` for standard input. Defaults to standard input
    /// unless `--fuzz` is given.
    #[arg(long, env = "VFILT_INPUT", value_name = "FILE|-")]
    input: Option<String>,

    #[arg(long, env = "VFILT_FORMAT", value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Seed for `--fuzz`.
    #[arg(long, env = "VFILT_SEED", default_value_t = 0)]
    seed: u64,

    /// Run verify-theorem for every filtration kind on N random instances.
    #[arg(long, env = "VFILT_FUZZ", value_name = "N")]
    fuzz: Option<usize>,

    /// Degree cap for check-property commands without an explicit cap=.
    #[arg(long, env = "VFILT_DEG_CAP", value_name = "N", default_value_t = 6)]
    deg_cap: u32,
}

fn read_input(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
    };
    let opts = Options { format, deg_cap: cli.deg_cap };
    let (stdout, stderr) = (io::stdout(), io::stderr());
    let (mut out, mut err) = (stdout.lock(), stderr.lock());

    let input = cli.input.clone().or_else(|| cli.fuzz.is_none().then(|| "-".to_string()));
    let mut status = Status::Success;
    if let Some(path) = input {
        let text = match read_input(&path) {
            Ok(t) => t,
            Err(e) => {
                let _ = writeln!(err, "error: cannot read {path}: {e}");
                return ExitCode::from(Status::Usage.code() as u8);
            }
        };
        status = match vfilt_cli::run_source(&text, &opts, &mut out, &mut err) {
            Ok(s) => s,
            Err(_) => Status::Internal,
        };
    }
    if let Some(n) = cli.fuzz {
        let s = emit_fuzz(cli.seed, n, format, &mut out, &mut err).unwrap_or(Status::Internal);
        status = status.max(s);
    }
    let _ = out.flush();
    ExitCode::from(status.code() as u8)
}
