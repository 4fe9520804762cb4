use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use harmonic_zeta::real::PrecisionContext;
use harmonic_zeta::report::{
    cmd_chain, cmd_oracle, cmd_verify, parse_conventions, OutputFormat, ReportDocument, Suite,
};

#[derive(Parser)]
#[command(name = "harmonic-zeta", version, about = "Verify harmonic-sum identities and run the zeta'(-k) chain")]
struct Cli {
    /// Decimal digits of precision.
    #[arg(long, global = true, default_value_t = 50, value_parser = clap::value_parser!(u32).range(15..))]
    precision: u32,
    #[arg(long, global = true, default_value = "json")]
    format: OutputFormat,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification suites; exit 1 if any fails.
    Verify {
        /// Comma-separated suite names; all by default.
        #[arg(long, value_delimiter = ',')]
        suites: Option<Vec<Suite>>,
    },
    /// Solve the recurrence chain and compare with classical values.
    Chain {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        kmax: u32,
        /// A, B or all.
        #[arg(long, default_value = "all", value_parser = ["A", "B", "all"])]
        convention: String,
    },
    /// Ramanujan values beside chain and closed-form values.
    Oracle {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(0..=8))]
        kmax: u32,
    },
}

fn emit(doc: &ReportDocument, cli: &Cli) -> Result<(), String> {
    let text = doc.render(cli.format).map_err(|e| e.to_string())?;
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{path}: {e}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = PrecisionContext::new(cli.precision).expect("precision range checked by the parser");
    let doc = match &cli.command {
        Cmd::Verify { suites } => Ok(cmd_verify(&ctx, suites.as_deref().unwrap_or(&Suite::ALL))),
        Cmd::Chain { kmax, convention } => {
            let convs = parse_conventions(convention).expect("value checked by the parser");
            cmd_chain(*kmax, &convs, &ctx)
        }
        Cmd::Oracle { kmax } => cmd_oracle(*kmax, &ctx),
    };
    let doc = match doc {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&doc, &cli) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(doc.exit_code() as u8)
}
