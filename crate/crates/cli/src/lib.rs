//! The `mlab` command line.
//!
//! [`run`] parses arguments, executes one command and returns the buffered
//! standard output, standard error and exit code: 0 on success, 1 on a domain
//! error (bad file, failed check, exhausted budget), 2 on a usage error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub mod commands;
pub mod format;
pub mod report;
pub mod subject;

pub use report::{Format, Record};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("line {line}, column {column}: expected {expected}")]
    Parse {
        line: usize,
        column: usize,
        expected: String,
    },
    #[error(transparent)]
    Validation(#[from] mlab::Error),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    fn record(&self) -> Record {
        let r = Record::new("error");
        match self {
            CliError::Usage(m) => r.field("kind", "usage").field("message", m.as_str()),
            CliError::Parse {
                line,
                column,
                expected,
            } => r
                .field("kind", "parse")
                .field("line", *line)
                .field("column", *column)
                .field("expected", expected.as_str()),
            CliError::Validation(e) => {
                let debug = format!("{e:?}");
                let variant: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
                r.field("kind", "validation")
                    .field("variant", variant)
                    .field("message", e.to_string())
            }
            CliError::Io(m) => r.field("kind", "io").field("message", m.as_str()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "mlab",
    version,
    about = "Finite monoids, wreath embeddings, embedding problems and expansions"
)]
pub struct Cli {
    /// Report encoding.
    #[arg(
        long,
        value_enum,
        global = true,
        env = "MLAB_FORMAT",
        default_value = "text"
    )]
    pub format: Format,
    /// Largest search space any homomorphism search may visit.
    #[arg(long, global = true, env = "MLAB_BUDGET")]
    pub budget: Option<u128>,
    /// Largest order of any constructed monoid.
    #[arg(long, global = true, env = "MLAB_MAX_ORDER")]
    pub max_order: Option<usize>,
    /// Largest order accepted by isomorphism tests.
    #[arg(long, global = true, env = "MLAB_ISO_BOUND")]
    pub iso_bound: Option<usize>,
    /// Largest group order for exhaustive subgroup enumeration.
    #[arg(long, global = true, env = "MLAB_SUBGROUP_CAP")]
    pub subgroup_cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn limits(&self) -> mlab::Limits {
        let d = mlab::Limits::default();
        mlab::Limits {
            size_cap: self.max_order.unwrap_or(d.size_cap),
            iso_bound: self.iso_bound.unwrap_or(d.iso_bound),
            subgroup_cap: self.subgroup_cap.unwrap_or(d.subgroup_cap),
            budget: self.budget.unwrap_or(d.budget),
        }
    }
}

/// A structure given positionally (file, alias or family expression) or by
/// `--family` with its numeric parameters.
#[derive(Debug, Clone, Args)]
pub struct SubjectArgs {
    /// File, alias (z4, v4, lz2, m2_1, t2, ...) or family expression.
    pub structure: Option<String>,
    /// Family name: cyclic, elementary_abelian, left_zero, right_zero,
    /// chain_semilattice, monogenic, zero_adjoined, full_transformation.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub index: Option<usize>,
    #[arg(long)]
    pub period: Option<usize>,
    /// The structure a zero is adjoined to, for `--family zero_adjoined`.
    #[arg(long)]
    pub of: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate table files.
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// For a `hom` file: the source structure.
        #[arg(long)]
        source: Option<String>,
        /// For a `hom` file: the target structure.
        #[arg(long)]
        target: Option<String>,
    },
    /// Build a family member and print or save its table.
    Family {
        #[command(flatten)]
        subject: SubjectArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Green's relations with an eggbox per J-class.
    Greens {
        #[command(flatten)]
        subject: SubjectArgs,
    },
    /// Band, completely regular and aperiodic flags.
    Classify {
        #[command(flatten)]
        subject: SubjectArgs,
    },
    /// The Schützenberger structure at an idempotent and its monomial embedding.
    Schutz {
        #[command(flatten)]
        subject: SubjectArgs,
        /// The idempotent.
        #[arg(long)]
        e: usize,
        /// First pass to the quotient acting faithfully on the R-class.
        #[arg(long)]
        quotient: bool,
    },
    /// The Krasner–Kaloujnine embedding of a group along a subgroup.
    KkEmbed {
        #[arg(long = "btilde")]
        btilde: String,
        /// Elements of the subgroup, comma-separated.
        #[arg(long = "b")]
        b: String,
    },
    /// The wreath product of a monoid by the right regular action of another.
    Wreath {
        #[arg(long)]
        top: String,
        #[arg(long)]
        bottom: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The expansion of a monoid over labelled generators.
    Expand {
        #[command(flatten)]
        subject: SubjectArgs,
        /// `a,b` (assigned to a greedy generating set) or `a=1,b=2`.
        #[arg(long)]
        gens: String,
        /// A word to factor; needs `--power`.
        #[arg(long)]
        word: Option<String>,
        /// Power of the word for the factorization witness (at least 4).
        #[arg(long)]
        power: Option<usize>,
        /// List every element with its signature.
        #[arg(long)]
        elements: bool,
    },
    /// Search for a weak solution of an embedding problem.
    Solve {
        #[arg(long = "G")]
        g: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long = "A")]
        a: String,
        #[arg(long, default_value = "id")]
        phi: String,
        #[arg(long)]
        alpha: String,
    },
    /// The fibre product of two maps into one group.
    Pullback {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "G")]
        g: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        psi: String,
    },
    /// Move an embedding problem along an inclusion of B into a larger group.
    Transfer {
        #[arg(long = "G")]
        g: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long = "A")]
        a: String,
        #[arg(long, default_value = "id")]
        phi: String,
        #[arg(long)]
        alpha: String,
        #[arg(long = "btilde")]
        btilde: String,
        /// The inclusion of B into B̃.
        #[arg(long)]
        embed: String,
    },
    /// Transfer a group extension of a maximal subgroup to the whole monoid.
    MonoidTransfer {
        #[command(flatten)]
        subject: SubjectArgs,
        #[arg(long)]
        e: usize,
        /// The extension group Ã.
        #[arg(long)]
        atilde: String,
        /// The map Ã ↠ H, with H indexed as in the `schutz` report.
        #[arg(long)]
        alpha: String,
        /// Prime for the subgroup-extension check.
        #[arg(long = "prime", default_value_t = 2)]
        prime: usize,
    },
    /// The Frattini subgroup and the divisibility check.
    Frattini {
        #[command(flatten)]
        subject: SubjectArgs,
    },
    /// A least subgroup in a class mapping onto the image.
    Satlift {
        #[arg(long = "G")]
        g: String,
        #[arg(long = "H")]
        h: String,
        #[arg(long)]
        phi: String,
        /// all | abelian | elementary-abelian | p-group (the last two need `--prime`).
        #[arg(long, default_value = "all")]
        class: String,
        #[arg(long = "prime")]
        prime: Option<usize>,
    },
    /// Search covers for one that does not split.
    Projcheck {
        #[command(flatten)]
        subject: SubjectArgs,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Run the cover search over every catalog semigroup up to an order.
    Bandscan {
        /// Largest subject order.
        #[arg(long, default_value_t = 3)]
        order: usize,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// List semigroups, monoids or groups of one order up to isomorphism.
    Enumerate {
        #[arg(long, value_enum, default_value = "semigroups")]
        kind: commands::CatalogKind,
        #[arg(long)]
        n: usize,
    },
}

/// What a finished command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match commands::dispatch(&cli) {
        Ok(records) => Output {
            code: 0,
            stdout: report::render(&records, cli.format),
            stderr: String::new(),
        },
        Err(e) => Output {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: report::render(&[e.record()], cli.format),
        },
    }
}
