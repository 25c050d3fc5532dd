use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "lietame", version, about = "Stratification, b-functions and tameness for classical Lie algebras")]
pub struct Cli {
    /// Emit a JSON report instead of text tables.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest Weyl group to enumerate.
    #[arg(long, global = true, value_name = "N")]
    pub max_weyl_order: Option<usize>,

    /// Largest matrix for symbolic characteristic polynomials (also LIETAME_MAX_DIM).
    #[arg(long, global = true, value_name = "N")]
    pub max_dim: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct TypeArg {
    /// Root system type, e.g. A2, B3, C2, D4, A1xA1, G2.
    #[arg(long = "type", short = 't', value_name = "TYPE")]
    pub type_label: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Primitive degrees of the Weyl group.
    Degrees(TypeArg),
    /// Cartan matrix and positive roots.
    Roots(TypeArg),
    /// Conjugacy classes of closed symmetric root subsets.
    Subsets(TypeArg),
    /// Nilpotent orbits with sl2 weights.
    Orbits(TypeArg),
    /// Strata of the algebra.
    Strata(TypeArg),
    /// b-function of one stratum.
    Bfun(BfunArgs),
    /// Tameness of every stratum.
    Tame(TameArgs),
    /// Run an identity suite.
    Verify(VerifyArgs),
    /// Discriminant of ad(X) and its restriction to the Cartan subalgebra.
    Delta(TypeArg),
}

#[derive(Debug, Args)]
pub struct BfunArgs {
    #[command(flatten)]
    pub ty: TypeArg,
    /// Root subset class: an index from `subsets`, or a subsystem type such as A1.
    #[arg(long, value_name = "CLASS", conflicts_with = "origin")]
    pub p_class: Option<String>,
    /// Orbit of the subalgebra as a partition, factors separated by `/`, e.g. 2,1 or 2/1,1.
    #[arg(long, value_name = "PARTITION")]
    pub orbit: Option<String>,
    /// Upper nonnegative root N.
    #[arg(long, default_value_t = 0, value_name = "N")]
    pub upper_root: u32,
    /// b-function along the origin in the weights of the primitive degrees.
    #[arg(long)]
    pub origin: bool,
}

#[derive(Debug, Args)]
pub struct TameArgs {
    #[command(flatten)]
    pub ty: TypeArg,
    #[arg(long, default_value_t = 0, value_name = "N")]
    pub upper_root: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Slice sums of multinomial coefficients equal binomial coefficients.
    SliceSums,
    /// Sum of (N!/a!) x^a D^a equals the falling power of the Euler field.
    Euler,
    /// Membership threshold of power systems equals the degree sum minus n.
    Threshold,
    /// Antisymmetry and Jacobi identity of the matrix realizations.
    Jacobi,
    /// Discriminant restricted to the Cartan subalgebra is a multiple of pi^2.
    Pi2,
    /// sl2 weight totals of every nilpotent orbit.
    Weights,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Largest number of variables.
    #[arg(long, default_value_t = 3, value_name = "n")]
    pub max_n: usize,
    /// Largest power, degree or exponent.
    #[arg(long = "max-N", default_value_t = 5, value_name = "N")]
    pub max_big_n: u32,
    /// Types for the algebra suites (comma separated).
    #[arg(long = "type", short = 't', value_delimiter = ',', value_name = "TYPES")]
    pub types: Vec<String>,
}
