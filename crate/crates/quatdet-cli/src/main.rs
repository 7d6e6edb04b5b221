//! `quatdet`: exact quaternion matrix determinants, inverses, adjugates,
//! ranks and Cramer-style solvers over matrix files.

mod matfile;
mod output;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use quatdet::{
    adjugate_side, cdet, ddet, ddet_verified, det_hermitian, det_hermitian_verified,
    left_inverse, oracle, rank_by_principal_minors, rdet, right_inverse, set_size_cap,
    solve_ax_b, solve_axb_c, solve_left_system, solve_right_system, solve_xa_b, DoubleSide,
    Error, Formula, Orientation, QMatrix, QVector, SolveReport,
};
use serde_json::{json, Value};

use matfile::MatFileError;
use output::{matrix_json, matrix_text, max_abs_difference, quat_json, quat_text, rational_text};

const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "quatdet",
    version,
    about = "Exact quaternion matrix determinants, inverses and Cramer-style solvers",
    after_help = "Matrix files: a `rows cols` header line, then rows of whitespace-separated\n\
                  quaternion literals such as `1`, `-i`, `3/2j`, `2-3i+j-k`.\n\
                  Exit codes: 0 ok, 2 parse, 3 shape, 4 singular, 5 not-Hermitian,\n\
                  6 size-cap, 64 usage."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
    /// Override the determinant size cap (default 9, at most 20).
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,
    /// Run the built-in cross-checks alongside the computation.
    #[arg(long, global = true)]
    verify: bool,
    /// Accept decimal entries and print approximately; needs --tol.
    #[arg(long, global = true)]
    float: bool,
    /// Comparison tolerance for --float mode.
    #[arg(long, global = true, value_name = "T")]
    tol: Option<f64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a determinant functional of a square matrix.
    Det {
        #[arg(long, value_enum)]
        kind: DetKind,
        /// Anchor row (rdet) or column (cdet), 1-based.
        #[arg(long)]
        index: Option<usize>,
        file: PathBuf,
    },
    /// Invert a matrix through its double-cofactor adjugate.
    Inverse { file: PathBuf },
    /// Print the double-cofactor adjugate table.
    Adjugate {
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        file: PathBuf,
    },
    /// Rank of a Hermitian matrix by principal minors.
    Rank {
        /// Rank the Gram matrix A*A of the input instead.
        #[arg(long)]
        gram: bool,
        file: PathBuf,
    },
    /// Solve a vector system or matrix equation exactly.
    Solve {
        /// One of: ax=y, xa=y, ax=b, xa=b, axb=c.
        #[arg(long)]
        form: FormArg,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: Option<PathBuf>,
        #[arg(long)]
        c: Option<PathBuf>,
        /// Constants vector file (n x 1 for ax=y, 1 x n for xa=y).
        #[arg(long)]
        y: Option<PathBuf>,
        /// Formula for axb=c: row, column, or both.
        #[arg(long, value_enum)]
        formula: Option<FormulaArg>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DetKind {
    Rdet,
    Cdet,
    Ddet,
    Hermitian,
}

impl DetKind {
    fn as_str(self) -> &'static str {
        match self {
            DetKind::Rdet => "rdet",
            DetKind::Cdet => "cdet",
            DetKind::Ddet => "ddet",
            DetKind::Hermitian => "hermitian",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormulaArg {
    Row,
    Column,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum FormArg {
    AxY,
    XaY,
    AxB,
    XaB,
    AxbC,
}

impl FormArg {
    fn as_str(self) -> &'static str {
        match self {
            FormArg::AxY => "ax=y",
            FormArg::XaY => "xa=y",
            FormArg::AxB => "ax=b",
            FormArg::XaB => "xa=b",
            FormArg::AxbC => "axb=c",
        }
    }
}

impl FromStr for FormArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ax=y" => Ok(FormArg::AxY),
            "xa=y" => Ok(FormArg::XaY),
            "ax=b" => Ok(FormArg::AxB),
            "xa=b" => Ok(FormArg::XaB),
            "axb=c" => Ok(FormArg::AxbC),
            other => Err(format!(
                "unknown form `{other}`; expected ax=y, xa=y, ax=b, xa=b or axb=c"
            )),
        }
    }
}

struct CliError {
    code: &'static str,
    exit: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { code: "Usage", exit: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (code, exit) = match &e {
            Error::Parse { .. } => ("ParseError", 2),
            Error::ShapeMismatch(_) | Error::DegenerateSize => ("ShapeMismatch", 3),
            Error::Singular { .. } | Error::ZeroDivisor => ("SingularMatrix", 4),
            Error::NotHermitian => ("NotHermitian", 5),
            Error::SizeCapExceeded { .. } => ("SizeCapExceeded", 6),
            Error::IndexOutOfRange { .. } | Error::InvalidPermutation(_) => {
                ("IndexOutOfRange", EXIT_USAGE)
            }
        };
        CliError { code, exit, message: e.to_string() }
    }
}

impl From<MatFileError> for CliError {
    fn from(e: MatFileError) -> Self {
        match e {
            MatFileError::Parse { .. } => CliError { code: "ParseError", exit: 2, message: e.to_string() },
            MatFileError::Shape(_) => CliError { code: "ShapeMismatch", exit: 3, message: e.to_string() },
        }
    }
}

/// Options shared by every command.
struct Ctx {
    verify: bool,
    float: Option<f64>,
}

impl Ctx {
    fn is_float(&self) -> bool {
        self.float.is_some()
    }
}

/// Payload plus any verification diagnostics, ready for rendering.
struct Outcome {
    text: String,
    json: Value,
    diagnostics: Vec<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let format = cli.output;
    match run(cli) {
        Ok(outcome) => {
            match format {
                OutputFormat::Text => {
                    print!("{}", outcome.text);
                    if !outcome.text.ends_with('\n') {
                        println!();
                    }
                    for line in &outcome.diagnostics {
                        println!("verify: {line}");
                    }
                }
                OutputFormat::Json => {
                    let mut value = outcome.json;
                    if !outcome.diagnostics.is_empty() {
                        value["diagnostics"] = Value::Array(
                            outcome.diagnostics.iter().map(|d| json!(d)).collect(),
                        );
                    }
                    println!("{value}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            match format {
                OutputFormat::Text => eprintln!("error ({}): {}", err.code, err.message),
                OutputFormat::Json => println!(
                    "{}",
                    json!({"status": "error", "code": err.code, "message": err.message})
                ),
            }
            ExitCode::from(err.exit)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    if cli.tol.is_some() && !cli.float {
        return Err(CliError::usage("--tol only applies together with --float"));
    }
    if cli.float && cli.tol.is_none() {
        return Err(CliError::usage("--float needs a comparison tolerance; pass --tol T"));
    }
    if let Some(cap) = cli.max_n {
        if !(1..=20).contains(&cap) {
            return Err(CliError::usage("--max-n must lie in 1..=20"));
        }
        set_size_cap(cap);
    }
    let ctx = Ctx { verify: cli.verify, float: cli.float.then(|| cli.tol.unwrap()) };

    match cli.cmd {
        Cmd::Det { kind, index, file } => cmd_det(&ctx, kind, index, &file),
        Cmd::Inverse { file } => cmd_inverse(&ctx, &file),
        Cmd::Adjugate { side, file } => cmd_adjugate(&ctx, side, &file),
        Cmd::Rank { gram, file } => cmd_rank(&ctx, gram, &file),
        Cmd::Solve { form, a, b, c, y, formula } => cmd_solve(&ctx, form, a, b, c, y, formula),
    }
}

fn load_matrix(ctx: &Ctx, path: &Path) -> Result<QMatrix, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError {
        code: "ParseError",
        exit: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    Ok(matfile::parse_matrix(&text, ctx.is_float())?)
}

fn cmd_det(ctx: &Ctx, kind: DetKind, index: Option<usize>, file: &Path) -> Result<Outcome, CliError> {
    match kind {
        DetKind::Rdet | DetKind::Cdet if index.is_none() => {
            return Err(CliError::usage(format!("--kind {} needs --index", kind.as_str())));
        }
        DetKind::Ddet | DetKind::Hermitian if index.is_some() => {
            return Err(CliError::usage(format!(
                "--index does not apply to --kind {}",
                kind.as_str()
            )));
        }
        _ => {}
    }
    let a = load_matrix(ctx, file)?;
    let mut diagnostics = Vec::new();
    let mut json_value = json!({"status": "ok", "command": "det", "kind": kind.as_str()});

    let text;
    match kind {
        DetKind::Rdet | DetKind::Cdet => {
            let anchor = index.expect("checked above");
            let value = match kind {
                DetKind::Rdet => rdet(&a, anchor)?,
                _ => cdet(&a, anchor)?,
            };
            text = quat_text(&value, ctx.is_float());
            json_value["index"] = json!(anchor);
            json_value["value"] = quat_json(&value);
        }
        DetKind::Ddet => {
            let value = if ctx.verify {
                let v = ddet_verified(&a)?;
                diagnostics.push("det(A*A) = det(AA*) and every anchored determinant agrees".into());
                assert!(oracle::study_check(&a)?, "Study determinant must match ddet");
                diagnostics.push("Study determinant of the complex representation matches".into());
                v
            } else {
                ddet(&a)?
            };
            text = rational_text(&value, ctx.is_float());
            json_value["value"] = json!(value.to_string());
        }
        DetKind::Hermitian => {
            let value = if ctx.verify {
                let v = det_hermitian_verified(&a)?;
                diagnostics.push("all row and column determinants agree and are real".into());
                v
            } else {
                det_hermitian(&a)?
            };
            text = rational_text(&value, ctx.is_float());
            json_value["value"] = json!(value.to_string());
        }
    }
    Ok(Outcome { text, json: json_value, diagnostics })
}

fn cmd_inverse(ctx: &Ctx, file: &Path) -> Result<Outcome, CliError> {
    let a = load_matrix(ctx, file)?;
    let inv = left_inverse(&a)?;
    let mut diagnostics = Vec::new();
    if ctx.verify {
        let right = right_inverse(&a)?;
        assert!(inv == right, "left and right inverses must agree");
        let n = a.rows();
        assert!(a.matmul(&inv)? == QMatrix::identity(n), "A * inv(A) must be the identity");
        assert!(inv.matmul(&a)? == QMatrix::identity(n), "inv(A) * A must be the identity");
        diagnostics.push("left and right double-cofactor inverses agree and invert from both sides".into());
    }
    Ok(Outcome {
        text: matrix_text(&inv, ctx.is_float()),
        json: json!({"status": "ok", "command": "inverse", "matrix": matrix_json(&inv)}),
        diagnostics,
    })
}

fn cmd_adjugate(ctx: &Ctx, side: SideArg, file: &Path) -> Result<Outcome, CliError> {
    let a = load_matrix(ctx, file)?;
    let (side_name, table) = match side {
        SideArg::Left => ("left", adjugate_side(&a, DoubleSide::Left)?),
        SideArg::Right => ("right", adjugate_side(&a, DoubleSide::Right)?),
    };
    Ok(Outcome {
        text: matrix_text(&table.values, ctx.is_float()),
        json: json!({
            "status": "ok",
            "command": "adjugate",
            "side": side_name,
            "matrix": matrix_json(&table.values),
        }),
        diagnostics: Vec::new(),
    })
}

fn cmd_rank(ctx: &Ctx, gram: bool, file: &Path) -> Result<Outcome, CliError> {
    let a = load_matrix(ctx, file)?;
    let target = if gram { a.adjoint().matmul(&a)? } else { a };
    let rank = rank_by_principal_minors(&target)?;
    Ok(Outcome {
        text: rank.to_string(),
        json: json!({"status": "ok", "command": "rank", "value": rank}),
        diagnostics: Vec::new(),
    })
}

/// Reads a vector file in the orientation the solve form needs.
fn vector_from_matrix(m: &QMatrix, want: Orientation) -> Result<QVector, CliError> {
    match want {
        Orientation::Column if m.cols() == 1 => Ok(QVector::column(m.col(1))),
        Orientation::Row if m.rows() == 1 => Ok(QVector::row(m.row(1))),
        Orientation::Column => Err(Error::ShapeMismatch(format!(
            "this form needs a column (n x 1) of constants, got {}x{}",
            m.rows(),
            m.cols()
        ))
        .into()),
        Orientation::Row => Err(Error::ShapeMismatch(format!(
            "this form needs a row (1 x n) of constants, got {}x{}",
            m.rows(),
            m.cols()
        ))
        .into()),
    }
}

fn cmd_solve(
    ctx: &Ctx,
    form: FormArg,
    a: PathBuf,
    b: Option<PathBuf>,
    c: Option<PathBuf>,
    y: Option<PathBuf>,
    formula: Option<FormulaArg>,
) -> Result<Outcome, CliError> {
    if formula.is_some() && form != FormArg::AxbC {
        return Err(CliError::usage("--formula only applies to --form axb=c"));
    }
    let a = load_matrix(ctx, &a)?;
    let mut diagnostics = Vec::new();

    // Loaded right-hand operands, kept for the float-mode residual measure.
    let mut b_mat = None;
    let mut c_mat = None;
    let mut y_vec = None;

    let report: SolveReport = match form {
        FormArg::AxY | FormArg::XaY => {
            let y_path = y.ok_or_else(|| CliError::usage("this form needs --y"))?;
            let want = if form == FormArg::AxY { Orientation::Column } else { Orientation::Row };
            let vec = vector_from_matrix(&load_matrix(ctx, &y_path)?, want)?;
            let report = match form {
                FormArg::AxY => solve_right_system(&a, &vec)?,
                _ => solve_left_system(&a, &vec)?,
            };
            y_vec = Some(vec);
            report
        }
        FormArg::AxB | FormArg::XaB => {
            let b_path = b.ok_or_else(|| CliError::usage("this form needs --b"))?;
            let mat = load_matrix(ctx, &b_path)?;
            let report = match form {
                FormArg::AxB => solve_ax_b(&a, &mat)?,
                _ => solve_xa_b(&a, &mat)?,
            };
            b_mat = Some(mat);
            report
        }
        FormArg::AxbC => {
            let b_path = b.ok_or_else(|| CliError::usage("--form axb=c needs --b"))?;
            let c_path = c.ok_or_else(|| CliError::usage("--form axb=c needs --c"))?;
            let b_loaded = load_matrix(ctx, &b_path)?;
            let c_loaded = load_matrix(ctx, &c_path)?;
            let choice = if ctx.verify {
                Formula::Both
            } else {
                match formula.unwrap_or(FormulaArg::Row) {
                    FormulaArg::Row => Formula::Row,
                    FormulaArg::Column => Formula::Column,
                    FormulaArg::Both => Formula::Both,
                }
            };
            let report = solve_axb_c(&a, &b_loaded, &c_loaded, choice)?;
            if choice == Formula::Both {
                diagnostics.push("row and column formulas agree".into());
            }
            b_mat = Some(b_loaded);
            c_mat = Some(c_loaded);
            report
        }
    };

    let solution = report.solution.as_matrix();
    let mut text = matrix_text(&solution, ctx.is_float());
    let _ = writeln!(text, "ddet A = {}", rational_text(&report.ddet_a, ctx.is_float()));
    if let Some(dd_b) = &report.ddet_b {
        let _ = writeln!(text, "ddet B = {}", rational_text(dd_b, ctx.is_float()));
    }
    let _ = writeln!(text, "method: {}", report.method.as_str());
    match ctx.float {
        None => {
            let _ = writeln!(text, "residual: exact");
        }
        Some(tol) => {
            // Float mode re-measures the residual by substituting the
            // solution back into the equation and projecting to f64.
            let (lhs, rhs) = match form {
                FormArg::AxY => (a.matmul(&solution)?, y_vec.unwrap().as_matrix()),
                FormArg::XaY => (solution.matmul(&a)?, y_vec.unwrap().as_matrix()),
                FormArg::AxB => (a.matmul(&solution)?, b_mat.clone().unwrap()),
                FormArg::XaB => (solution.matmul(&a)?, b_mat.clone().unwrap()),
                FormArg::AxbC => (
                    a.matmul(&solution)?.matmul(b_mat.as_ref().unwrap())?,
                    c_mat.unwrap(),
                ),
            };
            let residual = max_abs_difference(&lhs, &rhs);
            if residual <= tol {
                let _ = writeln!(text, "residual: {residual} within tolerance {tol}");
            } else {
                let _ = writeln!(text, "residual: {residual} EXCEEDS tolerance {tol}");
            }
        }
    }

    let mut json_value = json!({
        "status": "ok",
        "command": "solve",
        "form": form.as_str(),
        "method": report.method.as_str(),
        "ddet_a": report.ddet_a.to_string(),
        "residual_zero": report.residual_zero,
        "solution": matrix_json(&solution),
    });
    if let Some(dd_b) = &report.ddet_b {
        json_value["ddet_b"] = json!(dd_b.to_string());
    }
    if let Some(tol) = ctx.float {
        json_value["tolerance"] = json!(tol);
    }
    Ok(Outcome { text, json: json_value, diagnostics })
}
