use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dircat::exactlin::FieldSpec;
use dircat_cli::config::parse_field_spec;
use dircat_cli::{commands, suite, CliError, Format, Outcome, RunConfig};

/// Standard modules, stratification and APR tilting for finite directed categories.
#[derive(Parser)]
#[command(name = "dircat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Ground field override: Q or F<p>.
    #[arg(long, global = true, value_parser = parse_field_spec)]
    field: Option<FieldSpec>,
    /// Linear order such as "x < y < z".
    #[arg(long, global = true)]
    order: Option<String>,
    /// Site vertex for tilting.
    #[arg(long, global = true)]
    site: Option<String>,
    /// Length of the projective resolutions.
    #[arg(long, global = true, default_value_t = 12)]
    cap: usize,
    /// Path length cap when building the algebra.
    #[arg(long, global = true)]
    length_cap: Option<usize>,
    /// Maximum number of candidates in exhaustive enumerations.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    budget: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions, Cartan matrix and directed orders.
    Info { quiver: PathBuf },
    /// Stratification verdicts for every linear order.
    Orders { quiver: PathBuf },
    /// Standard modules and Δ-filtrations for one order.
    Strata { quiver: PathBuf },
    /// Generalized APR tilting at `--site`.
    Tilt {
        quiver: PathBuf,
        /// Directory for the module files of τ⁻¹P and T.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a module file and report its homological data.
    CheckModule { quiver: PathBuf, module: PathBuf },
    /// Run the built-in checks on the bundled examples.
    PaperSuite {
        /// Read `<name>.quiv` files from here instead of the bundled copies.
        #[arg(long)]
        data: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let c = cli.common;
    let mut cfg = RunConfig {
        field: c.field,
        order: c.order,
        site: c.site,
        length_cap: c.length_cap,
        resolution_cap: c.cap,
        budget: c.budget,
        seed: c.seed,
        format: c.format,
        ..RunConfig::default()
    };
    let result: Result<Outcome, CliError> = match cli.command {
        Command::Info { quiver } => {
            cfg.inputs = vec![quiver];
            commands::cmd_info(&cfg)
        }
        Command::Orders { quiver } => {
            cfg.inputs = vec![quiver];
            commands::cmd_orders(&cfg)
        }
        Command::Strata { quiver } => {
            cfg.inputs = vec![quiver];
            commands::cmd_strata(&cfg)
        }
        Command::Tilt { quiver, out } => {
            cfg.inputs = vec![quiver];
            cfg.out_dir = out;
            commands::cmd_tilt(&cfg)
        }
        Command::CheckModule { quiver, module } => {
            cfg.inputs = vec![quiver, module];
            commands::cmd_check_module(&cfg)
        }
        Command::PaperSuite { data } => {
            cfg.data_dir = data;
            suite::cmd_paper_suite(&cfg)
        }
    };
    match result {
        Ok(outcome) => {
            print!("{}", outcome.render(cfg.format));
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
