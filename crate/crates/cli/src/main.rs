use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use plattice::commands::{self, Outcome, Recipe, Reference, RunConfig};
use plattice::latticelab::{Strategy, DEFAULT_SUBSPACE_CAP};
use plattice::prelude::{CartanType, Error};

#[derive(Parser)]
#[command(name = "plattice", version, about = "Lie-stable versus group-stable lattices in highest-weight modules")]
struct Cli {
    /// Write JSON here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for window enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Root system summary.
    Root {
        #[command(flatten)]
        ty: TypeArgs,
        /// Include the Chevalley structure-constant table.
        #[arg(long)]
        structure: bool,
    },
    /// Build a module and print its weights.
    Module {
        #[command(flatten)]
        m: ModuleArgs,
        /// Include the sparse action matrices.
        #[arg(long)]
        matrices: bool,
    },
    /// Whether every highest weight is p-restricted.
    Latticed {
        #[command(flatten)]
        m: ModuleArgs,
    },
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// A Lie-stable lattice that is not group-stable.
    Counterexample {
        #[command(flatten)]
        m: ModuleArgs,
        /// Residue vector to spin, as comma-separated integers mod p.
        #[arg(long)]
        seed: Option<String>,
    },
    /// Compare Lie-stable and group-stable lattices over one window.
    Verify {
        #[command(flatten)]
        m: ModuleArgs,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Run `verify` over the built-in catalog.
    Catalog {
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Stability report of a lattice.
    Check {
        #[command(flatten)]
        m: ModuleArgs,
        /// Lattice JSON file ({p, dim, basis}); defaults to the reference lattice.
        #[arg(long)]
        lattice: Option<PathBuf>,
        /// Extra generator, comma-separated rationals; repeatable.
        #[arg(long = "add", allow_hyphen_values = true)]
        add: Vec<String>,
    },
    /// Every lattice between the reference M and p⁻¹M.
    Enumerate {
        #[command(flatten)]
        m: ModuleArgs,
        /// Also classify each lattice.
        #[arg(long)]
        classify: bool,
    },
}

#[derive(Args)]
struct TypeArgs {
    #[arg(long = "type", default_value = "A")]
    family: String,
    #[arg(long, default_value_t = 1)]
    rank: usize,
}

#[derive(Args)]
struct ModuleArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Highest weight as comma-separated ω-coefficients.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    weight: String,
    #[arg(long, default_value_t = 3)]
    p: u32,
    /// Use Sym^k of the simple module.
    #[arg(long, conflicts_with = "tensor")]
    sym: Option<usize>,
    /// Tensor with further simple modules, weights separated by ';'.
    #[arg(long)]
    tensor: Option<String>,
    #[arg(long, value_enum)]
    reference: Option<ReferenceArg>,
    #[arg(long)]
    dim_cap: Option<usize>,
    #[arg(long)]
    subspace_cap: Option<u128>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReferenceArg {
    Monomial,
    Minimal,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Exhaustive,
    Submodules,
}

fn cartan(t: &TypeArgs) -> plattice::Result<CartanType> {
    CartanType::new(commands::parse_family(&t.family)?, t.rank)
}

fn config(m: &ModuleArgs, jobs: usize) -> plattice::Result<RunConfig> {
    let mut c = RunConfig::new(cartan(&m.ty)?, commands::parse_weight(&m.weight)?, m.p).with_env_caps()?;
    c.jobs = jobs;
    if let Some(k) = m.sym {
        c.recipe = Recipe::SymPower(k);
    }
    if let Some(t) = &m.tensor {
        c.recipe = Recipe::Tensor(t.split(';').map(commands::parse_weight).collect::<plattice::Result<_>>()?);
    }
    c.reference = m.reference.map(|r| match r {
        ReferenceArg::Monomial => Reference::Monomial,
        ReferenceArg::Minimal => Reference::Minimal,
    });
    if let Some(d) = m.dim_cap {
        c.dim_cap = d;
    }
    if let Some(s) = m.subspace_cap {
        c.subspace_cap = s;
    }
    c.validate()?;
    Ok(c)
}

fn run(cli: &Cli) -> plattice::Result<Outcome> {
    let jobs = cli.jobs;
    match &cli.cmd {
        Cmd::Root { ty, structure } => commands::cmd_root(cartan(ty)?, *structure),
        Cmd::Module { m, matrices } => commands::cmd_module(&config(m, jobs)?, *matrices),
        Cmd::Latticed { m } => commands::cmd_latticed(&config(m, jobs)?),
        Cmd::Lattice(LatticeCmd::Check { m, lattice, add }) => {
            let text = match lattice {
                Some(path) => Some(
                    std::fs::read_to_string(path)
                        .map_err(|e| Error::Validation(format!("{}: {e}", path.display())))?,
                ),
                None => None,
            };
            let extra = add.iter().map(|s| commands::parse_vector(s)).collect::<plattice::Result<Vec<_>>>()?;
            commands::cmd_lattice_check(&config(m, jobs)?, text.as_deref(), &extra)
        }
        Cmd::Lattice(LatticeCmd::Enumerate { m, classify }) => {
            commands::cmd_lattice_enumerate(&config(m, jobs)?, *classify)
        }
        Cmd::Counterexample { m, seed } => {
            let mut c = config(m, jobs)?;
            if let Some(s) = seed {
                c.seed = Some(
                    s.split(',')
                        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Validation(format!("bad seed entry {t:?}"))))
                        .collect::<plattice::Result<_>>()?,
                );
            }
            commands::cmd_counterexample(&c)
        }
        Cmd::Verify { m, strategy, inject_fault } => {
            let mut c = config(m, jobs)?;
            c.strategy = match strategy {
                StrategyArg::Auto => Strategy::Auto,
                StrategyArg::Exhaustive => Strategy::Exhaustive,
                StrategyArg::Submodules => Strategy::Submodules,
            };
            c.inject_fault = *inject_fault;
            commands::cmd_verify(&c)
        }
        Cmd::Catalog { inject_fault } => {
            let cap = std::env::var(commands::ENV_SUBSPACE_CAP)
                .ok()
                .and_then(|s| s.trim().parse().ok())
                .unwrap_or(DEFAULT_SUBSPACE_CAP);
            commands::cmd_catalog(jobs, cap, *inject_fault)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = out.render();
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(commands::EXIT_USAGE as u8);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e) as u8)
        }
    }
}
