//! Command-line front end.
//!
//! Exit codes: 0 when every check passed, 1 on a failed check, 2 on I/O,
//! parse or usage errors, 3 when a size guard refuses the run.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use splinekit_core::deltastar::{cf_generators, k_space, verify_slicing, DeltaS};
use splinekit_core::splinecore::{alfeld_schumaker, spline_dim, Triangulation};
use splinekit_core::structmat::{
    lower_residual, roth_lower_solve, roth_triangular_solve, schur_dim_det, schur_dim_weyl, upper_residual,
};

use crate::checks;
use crate::formats::{delta_s_document, load_triangulation, parse_matrix, parse_poly};
use crate::report::{Report, Row};

/// Largest smoothness accepted for spline dimension work without `--force`.
pub const SPLINE_R_GUARD: u32 = 6;
/// Largest `n` for the full minor enumeration without `--force`.
pub const MINOR_N_GUARD: u32 = 6;
pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "splinekit", version, about = "Exact verification of spline dimension identities")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Lift the size guards.
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spline spaces on a triangulation.
    #[command(subcommand)]
    Spline(SplineCmd),
    /// The built-in eight-triangle complex and K(r).
    #[command(subcommand)]
    Deltastar(DeltaCmd),
    /// Structured matrices, Schur dimensions and Roth's equation.
    #[command(subcommand)]
    Structmat(StructCmd),
    /// Every claim family at once.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct TriArg {
    /// Triangulation document, or `deltaS` for the built-in complex.
    #[arg(long, default_value = "deltaS")]
    pub tri: String,
}

#[derive(Debug, Subcommand)]
pub enum SplineCmd {
    /// Dimension of C^r_d.
    Dim {
        #[command(flatten)]
        tri: TriArg,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
    },
    /// Dimension against the formula at d = 2r, 2r+1, 3r+1.
    Check {
        #[command(flatten)]
        tri: TriArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r_max: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum DeltaCmd {
    /// dim K(r).
    KDim {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
    },
    /// epsilon(r) in the original coordinates.
    Epsilon {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
    },
    /// All structural verifiers for r = 1..=r_max.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r_max: u32,
    },
    /// Summary of the built-in complex; `--emit` prints its document.
    Tri {
        #[arg(long)]
        emit: bool,
    },
    /// Slicing and parameter relations for one polynomial of K(r).
    Slice {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        #[arg(long)]
        poly: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RothMode {
    Upper,
    Lower,
}

#[derive(Debug, Subcommand)]
pub enum StructCmd {
    /// Kernel dimensions of the M(k) blocks and the triangular Roth operator.
    Kdim {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
    },
    /// Schur module dimension by determinant and by Weyl's product.
    Schur {
        /// Comma separated parts, e.g. `2,1`.
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u32>,
        #[arg(long)]
        t: u32,
    },
    /// Triangular solution of W X - Y^T W^T = C (upper) or U X - Y^T U = C (lower).
    Roth {
        #[arg(long)]
        w: PathBuf,
        #[arg(long)]
        c: PathBuf,
        #[arg(long, value_enum, default_value_t = RothMode::Upper)]
        mode: RothMode,
    },
    /// Minors of N and contiguous Toeplitz windows.
    Positivity {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    pub r_max: u32,
    /// Bound for the spline dimension claims; defaults to min(r_max, 4).
    #[arg(long)]
    pub spline_r_max: Option<u32>,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Guard(String),
}

type Outcome = Result<(String, bool), Failure>;

fn report(cli: &Cli, command: &str, rows: Vec<Row>) -> (String, bool) {
    let rep = Report::new(command, cli.seed, rows);
    let text = match cli.format {
        Format::Tsv => rep.to_tsv(),
        Format::Json => rep.to_json(),
    };
    (text, rep.passed())
}

fn triangulation(arg: &TriArg) -> Result<Triangulation, Failure> {
    if arg.tri == "deltaS" {
        return DeltaS::new().map(|d| d.triangulation).map_err(|e| Failure::Input(e.to_string()));
    }
    load_triangulation(std::path::Path::new(&arg.tri)).map_err(|e| Failure::Input(format!("{}: {e}", arg.tri)))
}

fn guard(cli: &Cli, r: u32, what: &str) -> Result<(), Failure> {
    if r > SPLINE_R_GUARD && !cli.force {
        return Err(Failure::Guard(format!(
            "{what} with r = {r} exceeds the size guard (r <= {SPLINE_R_GUARD}); pass --force to run it"
        )));
    }
    Ok(())
}

fn json_line(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

#[derive(Serialize)]
struct DimOut {
    r: u32,
    d: u32,
    dim_spline: usize,
    l_value: Option<i64>,
    sigma: Option<i64>,
    hf_n: usize,
    equal: Option<bool>,
}

fn spline(cli: &Cli, cmd: &SplineCmd) -> Outcome {
    match cmd {
        SplineCmd::Dim { tri, r, d } => {
            guard(cli, *r, "spline dim")?;
            let t = triangulation(tri)?;
            let sd = spline_dim(&t, *r, *d);
            let formula = alfeld_schumaker(&t, *r, *d).ok();
            let text = match cli.format {
                Format::Tsv => format!("{}\n", sd.dim),
                Format::Json => json_line(&DimOut {
                    r: *r,
                    d: *d,
                    dim_spline: sd.dim,
                    l_value: formula.map(|f| f.0),
                    sigma: formula.map(|f| f.1),
                    hf_n: sd.hf_n,
                    equal: formula.map(|f| f.0 == sd.dim as i64),
                }),
            };
            Ok((text, true))
        }
        SplineCmd::Check { tri, r_max } => {
            guard(cli, *r_max, "spline check")?;
            let t = triangulation(tri)?;
            let rows = checks::conjecture_rows(&t, *r_max).map_err(|e| Failure::Input(e.to_string()))?;
            Ok(report(cli, "spline check", rows))
        }
    }
}

fn delta_s() -> Result<DeltaS, Failure> {
    DeltaS::new().map_err(|e| Failure::Input(e.to_string()))
}

fn deltastar(cli: &Cli, cmd: &DeltaCmd) -> Outcome {
    match cmd {
        DeltaCmd::KDim { r } => Ok(report(cli, "deltastar k-dim", vec![checks::k_dim_row(*r)])),
        DeltaCmd::Epsilon { r } => Ok(report(cli, "deltastar epsilon", checks::epsilon_rows(&delta_s()?, *r))),
        DeltaCmd::Verify { r_max } => {
            let mut rows = checks::complex_rows();
            rows.extend(checks::deltastar_sweep(*r_max));
            Ok(report(cli, "deltastar verify", rows))
        }
        DeltaCmd::Tri { emit } => {
            if *emit {
                Ok((delta_s_document().to_json() + "\n", true))
            } else {
                Ok(report(cli, "deltastar tri", checks::complex_rows()))
            }
        }
        DeltaCmd::Slice { r, poly } => {
            let f = parse_poly(poly).map_err(|e| Failure::Input(format!("--poly: {e}")))?;
            let k = k_space(*r);
            if !k.contains(&f) {
                let row = Row::with("slicing", Some(*r), None, "not in K(r)", "in K(r)", false);
                return Ok(report(cli, "deltastar slice", vec![row]));
            }
            let cf = cf_generators(*r).map_err(|e| Failure::Input(e.to_string()))?;
            let ok = verify_slicing(&k, &cf, &f).unwrap_or(false);
            let rows = vec![
                Row::eq("slicing", Some(*r), None, ok, true),
                checks::param_element_row(&k, &f),
            ];
            Ok(report(cli, "deltastar slice", rows))
        }
    }
}

fn read_matrix(path: &PathBuf) -> Result<splinekit_core::exactla::QMatrix, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct RothOut {
    mode: &'static str,
    x: String,
    y: String,
    residual_zero: bool,
    triangular: bool,
}

#[derive(Serialize)]
struct SchurOut<'a> {
    lambda: &'a [u32],
    t: u32,
    determinant: String,
    weyl: String,
    equal: bool,
}

fn structmat(cli: &Cli, cmd: &StructCmd) -> Outcome {
    match cmd {
        StructCmd::Kdim { r } => {
            let mut rows = checks::kernel_rows(*r);
            rows.push(checks::operator_row(*r));
            Ok(report(cli, "structmat kdim", rows))
        }
        StructCmd::Schur { lambda, t } => {
            let det = schur_dim_det(lambda, *t).map_err(|e| Failure::Input(e.to_string()))?;
            let weyl = schur_dim_weyl(lambda, *t).map_err(|e| Failure::Input(e.to_string()))?;
            let equal = det == weyl;
            let text = match cli.format {
                Format::Tsv => format!("{det}\n"),
                Format::Json => json_line(&SchurOut {
                    lambda,
                    t: *t,
                    determinant: det.to_string(),
                    weyl: weyl.to_string(),
                    equal,
                }),
            };
            Ok((text, equal))
        }
        StructCmd::Roth { w, c, mode } => {
            let w = read_matrix(w)?;
            let c = read_matrix(c)?;
            if !w.is_square() || w.rows() != c.rows() || w.cols() != c.cols() {
                return Err(Failure::Input("W and C must be square of the same size".into()));
            }
            let solved = match mode {
                RothMode::Upper => roth_triangular_solve(&w, &c).map(|(x, y)| {
                    let tri = x.is_upper_triangular() && y.is_upper_triangular();
                    (upper_residual(&w, &x, &y, &c).is_zero(), tri, x, y)
                }),
                RothMode::Lower => roth_lower_solve(&w, &c).map(|(x, y)| {
                    let tri = x.is_lower_triangular() && y.is_lower_triangular();
                    (lower_residual(&w, &x, &y, &c).is_zero(), tri, x, y)
                }),
            };
            let (zero, tri, x, y) = match solved {
                Ok(v) => v,
                Err(e) => return Ok((format!("no triangular solution: {e}\n"), false)),
            };
            let out = RothOut {
                mode: if *mode == RothMode::Upper { "upper" } else { "lower" },
                x: x.to_string(),
                y: y.to_string(),
                residual_zero: zero,
                triangular: tri,
            };
            let text = match cli.format {
                Format::Tsv => format!(
                    "X\t{}\nY\t{}\nresidual_zero\t{}\ntriangular\t{}\n",
                    out.x, out.y, out.residual_zero, out.triangular
                ),
                Format::Json => json_line(&out),
            };
            Ok((text, zero && tri))
        }
        StructCmd::Positivity { r, max_order } => {
            let n = r.div_ceil(2);
            if (n > MINOR_N_GUARD || *max_order > 12) && !cli.force {
                return Err(Failure::Guard(format!(
                    "positivity with n = {n}, max order {max_order} exceeds the size guard (n <= {MINOR_N_GUARD}, order <= 12); pass --force"
                )));
            }
            Ok(report(cli, "structmat positivity", vec![checks::positivity_row(*r, *max_order)]))
        }
    }
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Outcome {
    let spline_max = args.spline_r_max.unwrap_or(args.r_max.min(4));
    guard(cli, spline_max, "verify --spline-r-max")?;
    let ds = delta_s()?;
    let mut rows = checks::complex_rows();
    rows.extend(checks::deltastar_sweep(args.r_max));
    rows.extend(checks::epsilon_sweep(&ds, args.r_max));
    rows.extend(checks::sigma_rows(&ds, args.r_max));
    rows.extend(checks::delta_s_spline_sweep(&ds, spline_max));
    rows.extend(checks::structmat_sweep(args.r_max, cli.seed));
    Ok(report(cli, "verify", rows))
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Spline(c) => spline(&cli, c),
        Command::Deltastar(c) => deltastar(&cli, c),
        Command::Structmat(c) => structmat(&cli, c),
        Command::Verify(a) => verify(&cli, a),
    };
    match outcome {
        Ok((text, pass)) => {
            let _ = out.write_all(text.as_bytes());
            if pass {
                0
            } else {
                1
            }
        }
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Guard(m)) => {
            let _ = writeln!(err, "refused: {m}");
            3
        }
    }
}
