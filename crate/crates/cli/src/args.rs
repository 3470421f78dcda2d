use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "chowkit", version, about = "Exact resultants, wedge products and Chow forms over ℚ")]
pub struct Cli {
    /// Print `{"result", "normalization", "status"}` instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Run sampled checks in parallel.
    #[arg(long, global = true)]
    pub parallel: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PolyInput {
    /// Manifest holding the polynomial.
    #[arg(long = "in")]
    pub input: PathBuf,

    /// Binding to use when the manifest holds several.
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Args)]
pub struct PointInput {
    /// Minimal polynomial of the field generator `t`; omit for ℚ.
    #[arg(long)]
    pub minpoly: Option<String>,

    /// Comma-separated coordinates, polynomials in `t`.
    #[arg(long)]
    pub coords: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the elementary symmetric σ_α for D points of ℙⁿ.
    Sigma {
        #[arg(long)]
        n: usize,
        #[arg(long = "D")]
        count: usize,
    },
    /// Write a symmetric polynomial in terms of the σ_α.
    Decompose {
        #[command(flatten)]
        poly: PolyInput,
        /// Family whose copies are permuted.
        #[arg(long, default_value = "X")]
        family: String,
    },
    /// The universal quotient expressing f ∧ G_D through σ's.
    WedgeTable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long = "D")]
        count: usize,
    },
    /// f ∧ g for a form g in the dual group given by --dual.
    Wedge {
        /// Manifest holding f.
        #[arg(long)]
        f: PathBuf,
        /// Manifest holding g in coefficient form.
        #[arg(long, conflicts_with = "split", required_unless_present = "split")]
        g: Option<PathBuf>,
        /// JSON file `{"y": "1", "points": [["1","1"], ...]}` giving g split.
        #[arg(long)]
        split: Option<PathBuf>,
        /// Dual block of g, such as `L` or `L1`.
        #[arg(long, default_value = "L")]
        dual: String,
    },
    /// Macaulay resultant of n + 1 forms on ℙⁿ.
    Macaulay {
        #[arg(long)]
        system: PathBuf,
    },
    /// Whether a polynomial is alternating in the copies of a dual family.
    CheckAlternating {
        #[command(flatten)]
        poly: PolyInput,
        #[arg(long, default_value = "L")]
        family: String,
    },
    /// The sharp g♯ of an alternating polynomial, over an extra scalar group Y.
    Sharp {
        #[command(flatten)]
        poly: PolyInput,
        #[arg(long, default_value = "L")]
        family: String,
    },
    /// Maximal minors of the (m+1) × (n+1) matrix of the family L.
    Minors {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Build a Chow form.
    Chow {
        #[command(subcommand)]
        kind: ChowKind,
        /// Write the Chow form as a manifest for later commands.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Whether W meets V(λ_0, .., λ_ℓ); with ℓ forms, the points of W ∩ V(λ).
    Meets {
        #[arg(long)]
        chow: PathBuf,
        /// A linear form such as `L0_0 - 2*L0_1`, or comma-separated coefficients.
        #[arg(long)]
        lambda: Vec<String>,
        /// Sample this many random λ tuples instead and count the hits.
        #[arg(long, conflicts_with = "lambda")]
        random: Option<usize>,
        /// Coefficient bound for sampled λ.
        #[arg(long, default_value_t = 3)]
        range: i64,
    },
    /// Whether W ∩ V(f_0, .., f_ℓ) is nonempty.
    Intersects {
        #[arg(long)]
        chow: PathBuf,
        #[arg(long)]
        system: PathBuf,
    },
    /// Whether a rational point lies on W.
    Member {
        #[arg(long)]
        chow: PathBuf,
        /// Comma-separated coordinates.
        #[arg(long)]
        point: String,
    },
    /// The form P_λ(Y) cutting out the image of W under [x] ↦ [λx].
    Project {
        #[arg(long)]
        chow: PathBuf,
        #[arg(long)]
        lambda: Vec<String>,
    },
    /// Resultant of an algebraic point.
    PointResultant {
        #[command(flatten)]
        point: PointInput,
        /// Raise to [K : ℚ(x)], giving the norm form of K.
        #[arg(long)]
        normalized: bool,
    },
    /// The Veronese image of an algebraic point.
    Veronese {
        #[command(flatten)]
        point: PointInput,
        #[arg(long)]
        d: u32,
        /// Print the resultant of the image instead of its coordinates.
        #[arg(long)]
        resultant: bool,
    },
    /// The Segre image of two algebraic points over the same field.
    Segre {
        #[command(flatten)]
        point: PointInput,
        /// Coordinates of the second point.
        #[arg(long)]
        coords2: String,
        /// Print the resultant of the image instead of its coordinates.
        #[arg(long)]
        resultant: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum ChowKind {
    /// ∏ (L·x)^m over a point set given as JSON.
    Points {
        /// `{"n": 1, "minpoly": "t^2-2", "points": [["t","1"], {"coords": ["1","0"], "mult": 2}]}`.
        #[arg(long)]
        points: PathBuf,
    },
    /// Chow form of the hypersurface V(f).
    Hypersurface {
        #[command(flatten)]
        poly: PolyInput,
    },
    /// det(L_0, .., L_n)^power, the Chow form of ℙⁿ.
    Ambient {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Chow form of the complete intersection V(f_1, .., f_k).
    Ci {
        #[arg(long)]
        system: PathBuf,
    },
}
