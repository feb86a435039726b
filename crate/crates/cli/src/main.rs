//! Command-line frontend: topology ingestion, frontier search, reaction
//! models, flow-setup scenarios and CSV/JSON export, all reproducible from
//! a seed.

mod args;
mod cmd;
mod output;

use clap::Parser;

use ctrplace::Error;

fn main() {
    let cli = args::Cli::parse();
    let outcome = match cli.command {
        args::Command::Frontier(a) => cmd::frontier::run(a),
        args::Command::Errors(a) => cmd::errors::run(a),
        args::Command::React(a) => cmd::react::run(a),
        args::Command::Scenario(a) => cmd::scenario::run(a),
    };
    if let Err(err) = outcome {
        eprintln!("error: {err}");
        std::process::exit(exit_code(&err));
    }
}

// 2 usage, 3 data, 4 enumeration cap
fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidArgument(_) => 2,
        Error::CapExceeded { .. } => 4,
        _ => 3,
    }
}
