//! The `knotcalc` command line. [`run`] does all the work so tests can
//! drive it without a process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use knotcalc::alexander::alexander;
use knotcalc::bracket::{jones_capped, kauffman_bracket_capped, normalized_bracket_capped, writhe_factor};
use knotcalc::hopf::{check_oracle, compile_h, hopf_bracket, s_family, thistlethwaite, thistlethwaite_tangles, OracleStatus};
use knotcalc::tangle::{compile_tangle, tangle_bracket_statesum};
use knotcalc::{bracket_vector, Diagram, JonesPoly, TangleExpr, DEFAULT_CAP};

#[derive(Debug, Parser)]
#[command(name = "knotcalc", version, about = "Bracket, Jones and Alexander polynomials of links and tangles")]
struct Cli {
    /// Largest crossing number for which states are enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct PdInput {
    /// PD file, or `-` for standard input.
    #[arg(long, value_name = "FILE")]
    pd: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Kauffman bracket <L>.
    Bracket(PdInput),
    /// Writhe-normalized bracket (-A)^(-3w) <L>.
    Nbracket(PdInput),
    /// Jones polynomial.
    Jones(PdInput),
    /// Alexander polynomial of a knot.
    Alexander(PdInput),
    /// Linking number of two components (1-based), or the total.
    Lk {
        #[command(flatten)]
        input: PdInput,
        #[arg(long, value_name = "I,J", value_parser = parse_pair, conflicts_with = "total", required_unless_present = "total")]
        pair: Option<(usize, usize)>,
        #[arg(long)]
        total: bool,
    },
    /// Bracket vector (f, g) of a tangle.
    Brvec {
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        tangle: String,
        /// Also compile the tangle and compare with its state sum.
        #[arg(long)]
        oracle: bool,
    },
    /// Bracket of H(T, U) from the bilinear form.
    Hopf {
        #[arg(long = "t", value_name = "EXPR", allow_hyphen_values = true)]
        t: String,
        #[arg(long = "u", value_name = "EXPR", allow_hyphen_values = true)]
        u: String,
        #[arg(long)]
        jones: bool,
        #[arg(long, value_name = "FILE")]
        emit_pd: Option<PathBuf>,
        #[arg(long)]
        oracle: bool,
    },
    /// The link S(n) = H(T_n, -T_n).
    Family {
        #[arg(long)]
        n: usize,
        /// Compare with the state sum when under the cap.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_name = "FILE")]
        emit_pd: Option<PathBuf>,
    },
    /// Thistlethwaite's link H((-1)^w, (inf + 2)^wb).
    Thistlethwaite {
        #[arg(long, value_name = "FILE")]
        emit_pd: Option<PathBuf>,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected I,J")?;
    let idx = |x: &str| match x.trim().parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("'{x}' is not a component number (they start at 1)")),
        Ok(i) => Ok(i),
    };
    Ok((idx(a)?, idx(b)?))
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Failure {
    Domain(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn domain(msg: String) -> Failure {
    Failure::Domain(msg)
}

/// Runs the command line `args` (including the program name).
/// Exit codes: 0 success, 1 domain error, 2 usage error.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { stdout: String::new(), stderr: text, code: 2 }
            } else {
                Output { stdout: text, stderr: String::new(), code: 0 }
            };
        }
    };
    let mut out = String::new();
    match execute(&cli, stdin, &mut out) {
        Ok(()) => Output { stdout: out, stderr: String::new(), code: 0 },
        Err(Failure::Domain(msg)) => Output { stdout: out, stderr: format!("error: {msg}\n"), code: 1 },
    }
}

fn read_pd(input: &PdInput, stdin: &mut dyn Read) -> Result<Diagram, Failure> {
    let text = if input.pd == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| domain(format!("cannot read standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&input.pd).map_err(|e| domain(format!("cannot read {}: {e}", input.pd)))?
    };
    Diagram::parse(&text).map_err(|e| domain(format!("{}: {e}", input.pd)))
}

fn parse_tangle(s: &str) -> Result<TangleExpr, Failure> {
    s.parse().map_err(|e| domain(format!("tangle '{s}': {e}")))
}

fn emit(path: &Option<PathBuf>, d: &Diagram) -> CmdResult {
    if let Some(p) = path {
        std::fs::write(p, d.to_pd()).map_err(|e| domain(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

fn jones_for(d: &Diagram, bracket: &knotcalc::LaurentPoly) -> Result<JonesPoly, Failure> {
    Ok(JonesPoly::from_normalized_bracket(&writhe_factor(d.writhe())?.checked_mul(bracket)?))
}

fn oracle_line(out: &mut String, status: &OracleStatus) {
    let _ = match status {
        OracleStatus::NotRun => writeln!(out, "oracle: not run"),
        OracleStatus::Agrees => writeln!(out, "oracle: state sum agrees"),
        OracleStatus::Skipped { crossings, cap } => writeln!(out, "oracle: skipped ({crossings} crossings > cap {cap})"),
    };
}

fn execute(cli: &Cli, stdin: &mut dyn Read, out: &mut String) -> CmdResult {
    let cap = cli.cap;
    match &cli.command {
        Command::Bracket(input) => {
            let _ = writeln!(out, "{}", kauffman_bracket_capped(&read_pd(input, stdin)?, cap)?);
        }
        Command::Nbracket(input) => {
            let _ = writeln!(out, "{}", normalized_bracket_capped(&read_pd(input, stdin)?, cap)?);
        }
        Command::Jones(input) => {
            let _ = writeln!(out, "{}", jones_capped(&read_pd(input, stdin)?, cap)?);
        }
        Command::Alexander(input) => {
            let _ = writeln!(out, "{}", alexander(&read_pd(input, stdin)?)?.render("t"));
        }
        Command::Lk { input, pair, total } => {
            let d = read_pd(input, stdin)?;
            let lk = match (pair, total) {
                (Some((i, j)), _) => d.linking_number(i - 1, j - 1)?,
                _ => d.total_linking_number()?,
            };
            let _ = writeln!(out, "{lk}");
        }
        Command::Brvec { tangle, oracle } => {
            let t = parse_tangle(tangle)?;
            let v = bracket_vector(&t)?;
            let _ = writeln!(out, "f: {}\ng: {}", v.f, v.g);
            if *oracle {
                let td = compile_tangle(&t)?;
                let got = tangle_bracket_statesum(&td, cap)?;
                if got != v {
                    return Err(domain(format!("oracle mismatch: state sum gives f: {}, g: {}", got.f, got.g)));
                }
                let _ = writeln!(out, "oracle: state sum agrees ({} crossings)", td.num_crossings());
            }
        }
        Command::Hopf { t, u, jones, emit_pd, oracle } => {
            let (t, u) = (parse_tangle(t)?, parse_tangle(u)?);
            let b = hopf_bracket(&t, &u)?;
            let _ = writeln!(out, "bracket: {b}");
            if *jones || *oracle || emit_pd.is_some() {
                let d = compile_h(&t, &u)?;
                if *jones {
                    let _ = writeln!(out, "crossings: {}\nwrithe: {}\njones: {}", d.num_crossings(), d.writhe(), jones_for(&d, &b)?);
                }
                if *oracle {
                    let n = d.num_crossings();
                    if n > cap {
                        return Err(knotcalc::Error::CapExceeded { crossings: n, cap }.into());
                    }
                    oracle_line(out, &check_oracle(&d, &b, cap)?);
                }
                emit(emit_pd, &d)?;
            }
        }
        Command::Family { n, verify, emit_pd } => {
            let mut e = s_family(*n)?;
            if *verify {
                e.run_oracle(cap)?;
            }
            let _ = writeln!(out, "n: {}\nT: {}\nU: {}\ncrossings: {}\nbracket: {}", e.n, e.t, e.u, e.diagram.num_crossings(), e.bracket);
            for (w, j) in &e.jones {
                let _ = writeln!(out, "writhe {w}: jones {j}");
            }
            oracle_line(out, &e.oracle);
            let _ = writeln!(out, "distinct and nontrivial: unverified");
            emit(emit_pd, &e.diagram)?;
        }
        Command::Thistlethwaite { emit_pd } => {
            let (t, u) = thistlethwaite_tangles();
            let d = thistlethwaite()?;
            let b = hopf_bracket(&t, &u)?;
            let _ = writeln!(out, "T: {t}\nU: {u}\ncrossings: {}\nwrithe: {}\nbracket: {b}\njones: {}", d.num_crossings(), d.writhe(), jones_for(&d, &b)?);
            emit(emit_pd, &d)?;
        }
    }
    Ok(())
}
