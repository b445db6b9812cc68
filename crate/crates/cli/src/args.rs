use clap::{Args, Parser, Subcommand, ValueEnum};
use grassmann_pentagon::coeffs::modp::DEFAULT_PRIME;
use grassmann_pentagon::{Param, WeightKind};
use num_rational::BigRational;

#[derive(Parser, Debug)]
#[command(
    name = "pentagon",
    version,
    about = "Verify Grassmann-weight solutions of the fermionic pentagon equation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that both sides of the pentagon equation agree.
    Verify(Common),
    /// Print the coefficient of one monomial on one or both sides.
    Coeff {
        #[command(flatten)]
        common: Common,
        /// Comma-separated face triples, e.g. `124,125,135`.
        #[arg(long)]
        monomial: String,
        #[arg(long, value_enum, default_value_t = SideArg::Lhs)]
        side: SideArg,
        /// Print both sides and compare them.
        #[arg(long)]
        both: bool,
    },
    /// Render a weight, a form or one of the form matrices.
    Show {
        #[arg(value_enum)]
        object: ShowObject,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "1234")]
        tet: String,
    },
    /// Check the Gaussian representations and the minor rule.
    Crosscheck(Common),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, default_value = "f")]
    pub weight: WeightKind,
    #[arg(long, value_enum, default_value_t = Mode::Symbolic)]
    pub mode: Mode,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    pub prime: u64,
    /// Number of random points in modp mode.
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// `sym` or a rational such as `3/2`.
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    pub lambda: Param,
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    pub mu: Param,
    /// Five pairwise distinct rationals for z1..z5.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub zeta: Option<Vec<BigRational>>,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Include wall-clock timings in the report.
    #[arg(long)]
    pub timings: bool,
    /// Run without the thread pool.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Modp,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Output {
    Text,
    Structured,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideArg {
    Lhs,
    Rhs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShowObject {
    Weight,
    #[value(name = "matrix-A", alias = "matrix-a")]
    MatrixA,
    MatrixLhs,
    MatrixRhs,
    Form,
}

impl ShowObject {
    pub fn name(self) -> &'static str {
        match self {
            ShowObject::Weight => "weight",
            ShowObject::MatrixA => "matrix-A",
            ShowObject::MatrixLhs => "matrix-lhs",
            ShowObject::MatrixRhs => "matrix-rhs",
            ShowObject::Form => "form",
        }
    }
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic",
            Mode::Modp => "modp",
        }
    }
}
