use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::report::Format;

/// Exact computations with Schur Q-functions, Virasoro constraints,
/// formal group laws and Witt vectors.
#[derive(Debug, Parser)]
#[command(name = "schurq", version)]
pub struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,

    /// Directory for the intersection-number cache [env: SCHURQ_CACHE_DIR]
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Report cache use and timings on stderr.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of a polynomial in the q_k, e.g. "q3*q3 - 2*q1*q5".
    Qreduce { expr: String },
    /// The Schur Q-function of a strict partition, e.g. "3,2,1".
    Qfunction { partition: String },
    /// The inner product of two q-expressions.
    Inner { a: String, b: String },
    /// Intersection numbers <tau_d1 ... tau_dn> with sum (2 d_j + 1) <= W.
    Intersection {
        #[arg(long, value_name = "W")]
        max_weight: u32,
    },
    /// Checks [L_m, L_n] = (m-n) L_{m+n} + (m^3-m)/12 delta_{m+n,0}.
    VirasoroCheck {
        #[arg(long, allow_hyphen_values = true)]
        m: i32,
        #[arg(long, allow_hyphen_values = true)]
        n: i32,
        /// Largest weight of the test monomials.
        #[arg(long, default_value_t = 8)]
        max_weight: u32,
    },
    /// The Kontsevich-Witten law and genus.
    Kw(KwArgs),
    /// A formal group law from its exponential.
    Fgl {
        /// JSON array of exponential coefficients of T^0, T^1, ..., e.g. ["0", "1", "1/2"].
        #[arg(long, value_name = "FILE")]
        exp: PathBuf,
    },
    /// Mittag-Leffler exponential exp_alpha(z), alpha in {1, 1/2}.
    Ml {
        #[arg(long)]
        alpha: f64,
        /// Points such as 2, -8, 10i or 1.5-2i; repeatable.
        #[arg(long, required = true, allow_hyphen_values = true)]
        z: Vec<String>,
        /// Compare exp_1/2 with its optimally truncated asymptotic expansion.
        #[arg(long)]
        compare_asymptotic: bool,
    },
    /// Big Witt vector arithmetic on integer sequences h_1, h_2, ...
    Witt(WittArgs),
    /// Vertex operator checks.
    #[command(subcommand)]
    Voa(VoaCommand),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("kw_mode").required(true).args(["cpn", "integrality", "modp"])))]
pub struct KwArgs {
    /// The genus of CP^n.
    #[arg(long, value_name = "N")]
    pub cpn: Option<u32>,
    /// Integrality of the exponential in the q-basis to T^N.
    #[arg(long, value_name = "N")]
    pub integrality: Option<u32>,
    /// Vanishing of the mod-p reduction of the exponential.
    #[arg(long, value_name = "P")]
    pub modp: Option<u32>,
    /// Truncation order for --modp.
    #[arg(long, default_value_t = 12)]
    pub order: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum WittOp {
    Add,
    Mul,
    Neg,
    Ghost,
}

#[derive(Debug, Args)]
pub struct WittArgs {
    #[arg(long, value_enum)]
    pub op: WittOp,
    /// Coefficients h_1, h_2, ... of 1 + h_1 T + h_2 T^2 + ..., e.g. "1,0,-2".
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    /// Second operand for add and mul.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Truncation order; defaults to the longest operand.
    #[arg(long)]
    pub order: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum VoaCommand {
    /// Checks Y(b) Y(b') = Y(b b') at t = 0 on a window of z-powers.
    YCheck {
        /// Element of the symmetric functions in p_k (power sums) and h_k (complete).
        #[arg(long)]
        b: String,
        #[arg(long)]
        bprime: String,
        /// Compare the coefficients of z^k for |k| <= WINDOW.
        #[arg(long, default_value_t = 6)]
        window: u32,
        /// Truncation degree in p and in the dual power sums.
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
    /// Whether Y(p_n) at a primitive root of unity preserves the ideal (p_p).
    Closure {
        #[arg(long, default_value_t = 3)]
        p: u32,
        /// Check n = 1 ..= N, skipping multiples of p.
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        /// Number of modes examined.
        #[arg(long, default_value_t = 30)]
        bound: u32,
    },
    /// Nondegeneracy of the trace pairing on 1 + x T^i, i <= ORDER.
    Pairing {
        #[arg(long, default_value_t = 6)]
        order: u32,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        RunConfig::command().debug_assert();
    }

    #[test]
    fn negative_arguments() {
        let c = RunConfig::try_parse_from(["schurq", "virasoro-check", "--m", "2", "--n", "-2"]).unwrap();
        assert!(matches!(c.command, Command::VirasoroCheck { m: 2, n: -2, max_weight: 8 }));
        let c = RunConfig::try_parse_from(["schurq", "ml", "--alpha", "0.5", "--z", "-2i", "--z", "3"]).unwrap();
        assert!(matches!(c.command, Command::Ml { ref z, .. } if z == &["-2i", "3"]));
        assert!(RunConfig::try_parse_from(["schurq", "kw"]).is_err());
        assert!(RunConfig::try_parse_from(["schurq", "kw", "--cpn", "1", "--modp", "3"]).is_err());
    }
}
