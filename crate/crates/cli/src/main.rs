mod commands;
mod output;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use modcat::slrep::{DEFAULT_CLOSURE_CAP, DEFAULT_ENUM_CAP};
use modcat::ymat::DEFAULT_PRECISION_BITS;
use output::Format;

/// Exact verification of modular data: axioms, center doubles, generalized
/// Frobenius-Schur indicators, SL(2,Z) liftings and Y-tensors.
#[derive(Parser, Debug)]
#[command(name = "modcat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// MDATA file to read
    #[arg(required_unless_present = "catalog")]
    pub input: Option<PathBuf>,
    /// Built-in dataset instead of a file (toric_code, double_semion, fibonacci)
    #[arg(long, conflicts_with = "input")]
    pub catalog: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest SL(2,Z/n) enumerated when testing congruence
    #[arg(long, default_value_t = DEFAULT_ENUM_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    pub enum_cap: u64,
    /// Largest image group enumerated
    #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub closure_cap: u64,
    /// Precision cap for certified real comparisons
    #[arg(long, default_value_t = DEFAULT_PRECISION_BITS, value_parser = clap::value_parser!(u32).range(64..))]
    pub precision_bits: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the modular data axioms
    Validate(Common),
    /// Write the center double as MDATA
    Double {
        #[command(flatten)]
        common: Common,
        /// Output file (stdout if absent)
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Equivariant indicator table
    Indicators {
        #[command(flatten)]
        common: Common,
        /// Inclusive range `A..B` (default 1..N)
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        m_range: Option<RangeInclusive<i64>>,
        /// Inclusive range `A..B` (default 0..N)
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        l_range: Option<RangeInclusive<i64>>,
    },
    /// Generalized Bantay formula at every center label
    Bantay {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// Indicator identity suite
    EquivCheck {
        #[command(flatten)]
        common: Common,
        /// Largest m (default 2N)
        #[arg(long)]
        m_max: Option<i64>,
        /// Largest |l| (default N)
        #[arg(long)]
        l_max: Option<i64>,
    },
    /// The twelve liftings
    Reps(Common),
    /// Congruence levels of the canonical representation and the liftings
    Congruence {
        #[command(flatten)]
        common: Common,
        /// Projective levels only
        #[arg(long)]
        projective: bool,
    },
    /// Image orders
    Image(Common),
    /// Y-tensor integrality and inequality
    Y {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        /// Exponents r_i of an m-th root diag(zeta_L^r_i) of T, comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        root: Option<Vec<i64>>,
        /// L for --root (default lcm(conductor, m N))
        #[arg(long, requires = "root")]
        root_conductor: Option<u32>,
    },
    /// Everything
    Report(Common),
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate(c) => commands::validate(&c),
        Command::Double { common, output } => commands::double(&common, output.as_deref()),
        Command::Indicators {
            common,
            m_range,
            l_range,
        } => commands::indicators(&common, m_range, l_range),
        Command::Bantay { common, m } => commands::bantay(&common, m),
        Command::EquivCheck { common, m_max, l_max } => commands::equiv_check(&common, m_max, l_max),
        Command::Reps(c) => commands::reps(&c),
        Command::Congruence { common, projective } => commands::congruence(&common, projective),
        Command::Image(c) => commands::image(&c),
        Command::Y {
            common,
            m,
            root,
            root_conductor,
        } => commands::y(&common, m, root, root_conductor),
        Command::Report(c) => commands::report(&c),
    };
    match result {
        Ok((text, status)) => {
            print!("{text}");
            ExitCode::from(status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status() as u8)
        }
    }
}
