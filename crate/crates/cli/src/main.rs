mod commands;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::{CliError, Outcome};
use seifert11::presentations::DEFAULT_BUDGET;

#[derive(Debug, Parser)]
#[command(
    name = "seifert11",
    version,
    about = "Exact checks for Seifert manifolds, cyclic presentations, (1,1)-knots and Dunwoody diagrams"
)]
struct Cli {
    /// Emit JSON instead of the human-readable format.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized property suites.
    #[arg(long, global = true, default_value_t = 0x5eed_1111)]
    seed: u64,
    /// Cap on partial assignments visited when enumerating homomorphisms.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

/// `n p q l` of `Σ(n,p,q,l)`.
#[derive(Debug, Clone, Copy, Args)]
struct SeifertArgs {
    n: u64,
    p: u64,
    q: u64,
    l: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print G_n(w) and the standard presentation of Σ(n,p,q,l).
    Present {
        #[command(flatten)]
        params: SeifertArgs,
        /// Also count homomorphisms of both presentations into S3, S4 or Z/k.
        #[arg(long)]
        target: Option<String>,
    },
    /// Check the four free-word identity families.
    Tietze {
        #[command(flatten)]
        params: SeifertArgs,
    },
    /// First homology via Smith normal form.
    Homology {
        #[command(subcommand)]
        source: HomologySource,
    },
    /// (1,1)-knots and their ambient lens spaces.
    Knot {
        #[command(subcommand)]
        action: KnotAction,
    },
    /// Glue the Dunwoody diagram and check the Seifert criterion.
    Dunwoody {
        #[command(subcommand)]
        action: DunwoodyAction,
    },
    /// First Alexander polynomial of a deficiency-one presentation.
    Alexander {
        /// Presentation JSON file.
        #[arg(long, conflicts_with = "paper_example", required_unless_present = "paper_example")]
        presentation: Option<PathBuf>,
        /// Use the built-in Wirtinger presentation.
        #[arg(long)]
        paper_example: bool,
    },
    /// Run every check over a parameter grid.
    VerifyAll(verify::GridArgs),
}

#[derive(Debug, Subcommand)]
enum HomologySource {
    /// H_1 of G_n(w).
    Cyclic(SeifertArgs),
    /// H_1 of the standard presentation.
    Standard(SeifertArgs),
    /// H_1 of a presentation JSON file.
    Presentation { file: PathBuf },
    /// Cokernel of an integer matrix given as nested JSON arrays (rows are relations).
    Matrix { file: PathBuf },
}

#[derive(Debug, Clone, Copy, Args)]
struct KnotArgs {
    a: u64,
    b: u64,
    c: u64,
    #[arg(allow_negative_numbers = true)]
    r: i64,
}

#[derive(Debug, Subcommand)]
enum KnotAction {
    /// Rewrite K(a,b,c,r) by Singer moves down to a lens-space diagram.
    Reduce(KnotArgs),
    /// Closed-form ambient lens space of K(a,b,c,r).
    Ambient(KnotArgs),
    /// The knot whose n-fold strongly-cyclic cover is Σ(n,p,q,l).
    FromSeifert(SeifertArgs),
}

#[derive(Debug, Subcommand)]
enum DunwoodyAction {
    /// Build D(a,b,c,n,r,s) for Σ(n,p,q,l), glue it and compare the read-off with G_n(w).
    Check {
        #[command(flatten)]
        params: SeifertArgs,
        /// Include the edge-class table.
        #[arg(long)]
        edges: bool,
    },
    /// Glue an arbitrary D(a,b,c,n,r,s).
    Raw {
        a: u64,
        b: u64,
        c: u64,
        n: u64,
        r: u64,
        s: u8,
        /// Include the edge-class table.
        #[arg(long)]
        edges: bool,
    },
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Present { params, target } => commands::present(params, target.as_deref(), cli.budget),
        Command::Tietze { params } => commands::tietze(params),
        Command::Homology { source } => match source {
            HomologySource::Cyclic(sp) => commands::homology_cyclic(sp),
            HomologySource::Standard(sp) => commands::homology_standard(sp),
            HomologySource::Presentation { file } => commands::homology_presentation(file),
            HomologySource::Matrix { file } => commands::homology_matrix(file),
        },
        Command::Knot { action } => match action {
            KnotAction::Reduce(k) => commands::knot_reduce(k),
            KnotAction::Ambient(k) => commands::knot_ambient(k),
            KnotAction::FromSeifert(sp) => commands::knot_from_seifert(sp),
        },
        Command::Dunwoody { action } => match action {
            DunwoodyAction::Check { params, edges } => commands::dunwoody_check(params, *edges),
            &DunwoodyAction::Raw { a, b, c, n, r, s, edges } => commands::dunwoody_raw([a, b, c, n, r], s, edges),
        },
        Command::Alexander { presentation, .. } => commands::alexander(presentation.as_deref()),
        Command::VerifyAll(grid) => verify::verify_all(grid, cli.json, cli.seed, cli.budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            outcome.print(cli.json);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
