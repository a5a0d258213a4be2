use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "swallowtail-kit",
    version,
    about = "Exact verifier for functions on the standard swallowtail"
)]
pub struct Cli {
    /// Write the JSON report to PATH, or to stdout when PATH is omitted or `-`.
    #[arg(long, global = true, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
    pub json: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parametrisation, tangency and curve identities of the swallowtail.
    VerifyGeometry,
    /// Reduce a 1-jet `a*u + b*v + c*w` to its orbit.
    Classify {
        /// Coefficients `a,b,c` as rationals.
        #[arg(long, allow_hyphen_values = true)]
        jet: String,
    },
    /// Complete transversal of a germ at a given degree.
    Transversal {
        #[command(flatten)]
        germ: GermArg,
        /// Degree of the transversal monomials (at least 2).
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        level: u32,
    },
    /// Certify k-determinacy of a germ.
    Determinacy {
        #[command(flatten)]
        germ: GermArg,
        #[arg(long)]
        k: u32,
    },
    /// Quotient of the maximal ideal by the tangent space.
    Codim {
        #[command(flatten)]
        germ: GermArg,
        /// Number of moduli in the family the germ belongs to.
        #[arg(long, default_value_t = 0)]
        moduli: usize,
        #[arg(long, default_value_t = 10)]
        max_order: u32,
    },
    /// Every row, transversal, Mather path and exclusion of the classification.
    VerifyTable1,
    /// Discriminant branches of a versal unfolding.
    Discriminant {
        #[command(flatten)]
        form: FormArgs,
        /// Restrict to one discriminant.
        #[arg(long)]
        which: Option<String>,
    },
    /// Families and discriminants against the golden data.
    VerifyDiscriminants {
        /// Golden data file; defaults to $SWK_GOLDEN, then the bundled data.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Export sampled surfaces and branches.
    #[command(subcommand)]
    Mesh(MeshCommand),
    /// verify-geometry, verify-table1 and verify-discriminants together.
    VerifyAll {
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct GermArg {
    /// Polynomial in u, v, w, optionally followed by `; a=p/q, b=p/q`.
    #[arg(long, allow_hyphen_values = true)]
    pub germ: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Sign {
    #[value(name = "+", alias = "1", alias = "plus")]
    Plus,
    #[value(name = "-", alias = "-1", alias = "minus")]
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Debug, Args)]
pub struct FormArgs {
    /// 1: ±u, 2: v + a*u^2, 3: v + a*u^3, 4: ±w + a*u^2 + b*u^3.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub case: u8,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub b: String,
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    pub sign: Sign,
}

#[derive(Debug, Subcommand)]
pub enum MeshCommand {
    /// The parametrisation f(x, y) over a rectangle, as OBJ.
    Surface {
        /// `x0:x1,y0:y1`
        #[arg(long, default_value = "-3:1,-3/2:3/2", allow_hyphen_values = true)]
        range: String,
        #[arg(long, default_value_t = 60)]
        resolution: usize,
        /// Write vertices only.
        #[arg(long)]
        no_faces: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// One discriminant branch, as OBJ (two parameters) or CSV (one).
    Branch {
        #[command(flatten)]
        form: FormArgs,
        #[arg(long)]
        which: String,
        /// Branch label such as `plane` or `sheet`, or `S1`, `S2` for the first and second branch.
        #[arg(long)]
        component: Option<String>,
        /// Fix a parameter, `name=p/q`; repeatable.
        #[arg(long, allow_hyphen_values = true)]
        fix: Vec<String>,
        /// One `lo:hi` per free parameter, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        #[arg(long, default_value_t = 50)]
        resolution: usize,
        #[arg(long)]
        out: PathBuf,
    },
}
