use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "realforms",
    version,
    about = "Exact Galois cohomology of real forms and Picard-Vessiot class counts"
)]
pub struct Cli {
    /// Output format; text prints one `path = value` line per JSON leaf.
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Json)]
    pub output: OutputMode,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count Picard-Vessiot classes and give the Galois group of each.
    Classify(ClassifyArgs),
    /// Build, check and inspect 1-cocycles.
    #[command(subcommand)]
    Cocycle(CocycleCmd),
    /// Form invariants, canonical forms and structured matrices.
    #[command(subcommand)]
    Forms(FormsCmd),
    /// Seeded exact samples.
    #[command(subcommand)]
    Sample(SampleCmd),
    /// Run the property verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SeedArg {
    #[arg(long, env = "REALFORMS_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupFamily {
    /// SL(n) over k
    Sl,
    /// SL(m) over the quaternions
    SlQuat,
    /// SU(n, h_p)
    Su,
    /// SO(n, I_p); odd or even by n
    So,
    /// Sp(2n) over k
    Sp,
    /// SU(n) of a quaternionic hermitian form of index p
    SuQuatHerm,
    /// SU(m) of a quaternionic anti-hermitian form
    SuQuatAnti,
    G2,
    F4,
    E8,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(
        long,
        value_enum,
        required_unless_present = "input_file",
        conflicts_with = "input_file"
    )]
    pub family: Option<GroupFamily>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// `compact`/`split` for g2, `0`..`2` for f4 and e8.
    #[arg(long)]
    pub form: Option<String>,
    /// Group descriptor JSON.
    #[arg(long)]
    pub input_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CocycleFamily {
    Su,
    So,
    Suh,
}

#[derive(Debug, Subcommand)]
pub enum CocycleCmd {
    /// Representative `B_q = I_q I_p` of the class labelled q.
    Rep {
        #[arg(long, value_enum)]
        family: CocycleFamily,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Check the cocycle condition `B c(B) = Id`.
    Check {
        #[arg(long)]
        input_file: PathBuf,
    },
    /// Class index of a cocycle; the family follows from its action.
    Index {
        #[arg(long)]
        input_file: PathBuf,
        /// Required for the plain and quaternionic actions.
        #[arg(long)]
        p: Option<usize>,
    },
    /// Explicit `M` with `M^-1 B c(M) = D I_p` under the unitary action.
    Witness {
        #[arg(long)]
        input_file: PathBuf,
    },
    /// Solve `B = P c(P)^-1`.
    Hilbert90 {
        #[arg(long)]
        input_file: PathBuf,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// The scalar cocycle `zeta Id` under the quaternionic action.
    Scalar {
        #[arg(long)]
        n: usize,
        /// A root of unity: rational (`-1`) or cyclotomic (`4:0,1`).
        #[arg(long, allow_hyphen_values = true)]
        zeta: String,
        #[command(flatten)]
        seed: SeedArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StructuredName {
    Ip,
    Jp,
    An,
    Dq,
}

#[derive(Debug, Subcommand)]
pub enum FormsCmd {
    /// Rank and index of a form.
    Index {
        #[arg(long)]
        input_file: PathBuf,
    },
    /// Equivalence of two forms of the same kind.
    Equivalent {
        #[arg(long)]
        input_file: PathBuf,
        #[arg(long)]
        other_file: PathBuf,
    },
    /// Diagonal canonical form with its congruence witness.
    Canonical {
        #[arg(long)]
        input_file: PathBuf,
    },
    /// Class of the 3-Pfister form <<a, b, c>>.
    Pfister {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// `I_p`, `J_p`, `A_n`, or `D_q = J_q J_p`.
    Structured {
        #[arg(long, value_enum)]
        kind: StructuredName,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormKindName {
    Quadratic,
    Hermitian,
    QuatHermitian,
    QuatAntihermitian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ActionName {
    Plain,
    Quaternion,
    Unitary,
}

#[derive(Debug, Subcommand)]
pub enum SampleCmd {
    /// Determinant-one element of the isometry group of a form.
    Cayley {
        /// Form JSON; otherwise the diagonal form given by --kind, --n, --p.
        #[arg(long, conflicts_with_all = ["kind", "n", "p"])]
        input_file: Option<PathBuf>,
        #[arg(long, value_enum, required_unless_present = "input_file")]
        kind: Option<FormKindName>,
        #[arg(long, required_unless_present = "input_file")]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Invertible matrix fixed by the quaternionic action.
    Fixed {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Coboundary `M^-1 c(M)` for a seeded `M`.
    Coboundary {
        #[arg(long, value_enum)]
        action: ActionName,
        #[arg(long)]
        n: usize,
        /// Signature of the unitary action.
        #[arg(long)]
        p: Option<usize>,
        #[command(flatten)]
        seed: SeedArg,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite to run; repeatable. All suites when omitted.
    #[arg(long = "suite")]
    pub suites: Vec<String>,
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[command(flatten)]
    pub seed: SeedArg,
}
