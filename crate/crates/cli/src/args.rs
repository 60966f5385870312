use clap::{Args, Parser, Subcommand};
use gl11_core::extensions::ExtensionSpec;
use gl11_core::symbolic::rational::{parse_rational, to_i64};
use gl11_core::Rational;

#[derive(Parser, Debug)]
#[command(name = "gl11", version, about = "Fusion, characters, KZ checks and simple-current extensions for affine gl(1|1)")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Emit JSON (the only output format).
    #[arg(long, global = true, default_value_t = true)]
    pub json: bool,
    /// Depth of q-expansions above the lowest weight.
    #[arg(long, global = true, value_parser = rational_arg, default_value = "3")]
    pub cutoff: Rational,
    /// Summands `|m| <= M` of an induced module.
    #[arg(long = "m-range", global = true, default_value_t = 3)]
    pub m_range: i64,
    /// Tolerance for the hypergeometric summation.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,
    /// Extension: sl21-neg-half, sl21-level1 or custom:<n>,<l>.
    #[arg(long, global = true, value_parser = extension_arg, default_value = "sl21-neg-half")]
    pub ext: ExtensionSpec,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fusion product of two module labels.
    Fuse { a: String, b: String },
    /// Character of a Verma-type label or of A(n;0).
    Char { label: String },
    /// Summands of the induction of a simple or projective label.
    Induce { label: String },
    /// Monodromy exponents with the extension generators `|m| <= M`.
    Monodromy { label: String },
    /// Whether a simple label has trivial monodromy with the extension.
    Local { label: String },
    /// KZ equation and hypergeometric checks.
    Kz {
        #[command(subcommand)]
        action: KzAction,
    },
    /// Decompose the tensor product of two gl(1|1) labels (v, a, p).
    Oracle { a: String, b: String },
    /// Composition factors of a module label.
    Kdec { label: String },
    /// Run one command per input line and print one JSON document per line.
    Batch {
        /// Input file; standard input when omitted.
        file: Option<std::path::PathBuf>,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum KzAction {
    /// Run every symbolic and numeric check.
    Verify,
    /// Evaluate 2F1(x, -x; 1; z).
    Hyp2f1 {
        #[arg(allow_negative_numbers = true)]
        x: f64,
        #[arg(allow_negative_numbers = true)]
        z: f64,
    },
}

pub fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

pub fn extension_arg(s: &str) -> Result<ExtensionSpec, String> {
    match s {
        "sl21-neg-half" => Ok(ExtensionSpec::sl21_minus_half()),
        "sl21-level1" => Ok(ExtensionSpec::sl21_level1()),
        _ => {
            let rest = s
                .strip_prefix("custom:")
                .ok_or_else(|| format!("unknown extension {s:?}"))?;
            let (n, l) = rest
                .split_once(',')
                .ok_or_else(|| format!("expected custom:<n>,<l>, got {s:?}"))?;
            let n = rational_arg(n.trim())?;
            let l = rational_arg(l.trim())?;
            let l = to_i64(&l)
                .filter(|_| l.is_integer())
                .ok_or_else(|| format!("l must be an integer in {s:?}"))?;
            ExtensionSpec::custom(n, l).map_err(|e| e.to_string())
        }
    }
}
