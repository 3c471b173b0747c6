use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use connpart::commands::{self, CommandError, DistributionSpec};
use connpart_core::cumulants::Flavor;
use connpart_core::partition::PartitionFamily;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact moment-cumulant transforms and connected-partition tables.
#[derive(Parser, Debug)]
#[command(name = "connpart", version)]
struct Cli {
    /// Emit JSON instead of tab-separated rows.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert a distribution's sequence between moments and cumulants.
    Transform {
        /// gaussian, poisson:RATE (RATE rational or `lambda`), or custom.
        #[arg(long, value_name = "NAME[:RATE]")]
        dist: String,
        /// JSON array of rational strings holding v_1, v_2, ... in the --from flavor.
        #[arg(long, value_name = "PATH")]
        moments_file: Option<PathBuf>,
        #[arg(long, value_parser = commands::parse_flavor, default_value = "moments")]
        from: Flavor,
        #[arg(long, value_parser = commands::parse_flavor)]
        to: Flavor,
        /// Number of terms, 1 to 16.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Count partitions of a family for n = 1..=MAX.
    Count {
        /// all, noncrossing, interval, pairing, connected, irreducible,
        /// connected-pairing or nc-irreducible.
        #[arg(value_parser = commands::parse_family)]
        kind: PartitionFamily,
        #[arg(long)]
        max: usize,
    },
    /// Check the connected-partition formulas on seeded random cumulants.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Corrupt one comparison to exercise the failure exit.
        #[arg(long, hide = true)]
        tamper: bool,
    },
    /// Block-count polynomials of connected partitions.
    Blockpoly {
        #[arg(long)]
        max: usize,
    },
}

fn run(cli: Cli) -> Result<ExitCode, CommandError> {
    let output = match cli.command {
        Command::Transform {
            dist,
            moments_file,
            from,
            to,
            order,
        } => {
            let dist = DistributionSpec::parse(&dist, moments_file.as_deref())?;
            commands::transform(&dist, from, to, order)?
        }
        Command::Count { kind, max } => commands::count(kind, max)?,
        Command::Blockpoly { max } => commands::blockpoly(max)?,
        Command::Verify {
            max_n,
            trials,
            seed,
            tamper,
        } => {
            let verification = commands::verify(max_n, trials, seed, tamper)?;
            println!("{}", serde_json::to_string_pretty(&verification.report).expect("JSON values serialize"));
            if verification.passed() {
                return Ok(ExitCode::SUCCESS);
            }
            for c in verification.failures() {
                eprintln!(
                    "identity {} fails: n={} seed={} lhs={} rhs={}",
                    c.identity, c.n, c.seed, c.lhs, c.rhs
                );
            }
            return Ok(ExitCode::from(EXIT_VERIFY_FAILED));
        }
    };
    print!("{}", output.render(cli.json));
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
