//! Command-line surface: polynomial listings, series solutions, comparison
//! tables, and figure data. Output is deterministic (no timestamps, "." as
//! the decimal point, "\n" line endings).
//!
//! Exit codes: 0 success, 2 argument/parse error, 3 domain error
//! (singularity / blow-up violation).

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use adomian::table::{build_comparison_table, figure_data, list_polynomials, TableFormat};
use adomian::{Error, HPReal, ODEProblem, Rational, RenderFormat, TimePolynomial};

#[derive(Parser)]
#[command(
    name = "adomian",
    version,
    about = "Exact decomposition series for u' = c*u + b*u^eta + f(t)",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the polynomials A_0..A_max_order for the nonlinearity u^eta
    Polys {
        #[arg(long)]
        eta: u32,
        #[arg(long = "max-order")]
        max_order: u32,
        #[arg(long, value_enum, default_value_t = PolyFormatArg::Plain)]
        format: PolyFormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve a problem and print the components u_0..u_N and their sum
    Solve {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Truncation order N
        #[arg(long, default_value_t = 11)]
        order: usize,
        #[arg(long, value_enum, default_value_t = SolveFormatArg::Plain)]
        format: SolveFormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact-versus-series comparison table over a t grid
    Table {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, default_value_t = 11)]
        order: usize,
        /// Comma-separated t values (default: the -0.14..0.14 grid)
        #[arg(long)]
        t: Option<String>,
        #[arg(long, default_value_t = adomian::DEFAULT_DIGITS)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = TableFormatArg::Csv)]
        format: TableFormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV plot data on an equally spaced t grid
    Figure {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, default_value_t = 11)]
        order: usize,
        #[arg(long = "t-min", allow_hyphen_values = true)]
        t_min: String,
        #[arg(long = "t-max", allow_hyphen_values = true)]
        t_max: String,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = adomian::DEFAULT_DIGITS)]
        digits: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ProblemArgs {
    /// Built-in problem (conflicts with the explicit flags)
    #[arg(long, value_enum)]
    preset: Option<Preset>,
    /// Linear coefficient, "p/q" or integer
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    /// Nonlinear coefficient, "p/q" or integer
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Exponent of the nonlinearity u^eta
    #[arg(long)]
    eta: Option<u32>,
    /// Initial value u(0), "p/q" or integer
    #[arg(long, allow_hyphen_values = true)]
    u0: Option<String>,
    /// Forcing polynomial as comma-separated coefficients "c0,c1,..."
    #[arg(long, allow_hyphen_values = true)]
    forcing: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Problem1,
    Problem2,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormatArg {
    Plain,
    Latex,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveFormatArg {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormatArg {
    Csv,
    Markdown,
    Json,
}

impl From<PolyFormatArg> for RenderFormat {
    fn from(value: PolyFormatArg) -> Self {
        match value {
            PolyFormatArg::Plain => RenderFormat::Plain,
            PolyFormatArg::Latex => RenderFormat::Latex,
            PolyFormatArg::Json => RenderFormat::Json,
        }
    }
}

impl From<TableFormatArg> for TableFormat {
    fn from(value: TableFormatArg) -> Self {
        match value {
            TableFormatArg::Csv => TableFormat::Csv,
            TableFormatArg::Markdown => TableFormat::Markdown,
            TableFormatArg::Json => TableFormat::Json,
        }
    }
}

/// "p/q", integer, or decimal literal.
fn parse_rational(text: &str) -> Result<Rational, Error> {
    text.parse()
        .or_else(|_| Rational::from_decimal_str(text))
        .map_err(|_| {
            Error::InvalidArgument(format!(
                "invalid number {text:?} (expected p/q, integer, or decimal)"
            ))
        })
}

impl ProblemArgs {
    fn resolve(&self) -> Result<ODEProblem, Error> {
        let explicit = [
            self.c.is_some(),
            self.b.is_some(),
            self.eta.is_some(),
            self.u0.is_some(),
            self.forcing.is_some(),
        ]
        .into_iter()
        .any(|set| set);
        match (&self.preset, explicit) {
            (Some(_), true) => Err(Error::InvalidArgument(
                "--preset conflicts with explicit problem flags".into(),
            )),
            (Some(Preset::Problem1), false) => Ok(ODEProblem::problem1()),
            (Some(Preset::Problem2), false) => Ok(ODEProblem::problem2()),
            (None, _) => {
                let (Some(c), Some(b), Some(eta), Some(u0)) =
                    (&self.c, &self.b, self.eta, &self.u0)
                else {
                    return Err(Error::InvalidArgument(
                        "either --preset or all of --c, --b, --eta, --u0 are required".into(),
                    ));
                };
                let forcing = match &self.forcing {
                    None => TimePolynomial::zero(),
                    Some(list) => TimePolynomial::from_coeffs(
                        list.split(',')
                            .map(|piece| parse_rational(piece.trim()))
                            .collect::<Result<_, _>>()?,
                    ),
                };
                Ok(ODEProblem::new(
                    parse_rational(c)?,
                    parse_rational(b)?,
                    eta,
                    parse_rational(u0)?,
                    forcing,
                ))
            }
        }
    }
}

fn parse_t_grid(text: &str, digits: u32) -> Result<Vec<HPReal>, Error> {
    text.split(',')
        .map(|piece| {
            Ok(HPReal::from_rational(
                &parse_rational(piece.trim())?,
                digits,
            ))
        })
        .collect()
}

const DEFAULT_GRID: &str = "-0.14,-0.13,-0.12,-0.11,-0.1,0,0.1,0.11,0.12,0.13,0.14";

fn check_digits(digits: u32) -> Result<(), Error> {
    if digits < adomian::MIN_DIGITS {
        return Err(Error::InvalidArgument(format!(
            "--digits must be at least {}, got {digits}",
            adomian::MIN_DIGITS
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct SolveJson {
    label: String,
    c: String,
    b: String,
    eta: u32,
    u0: String,
    forcing: Vec<String>,
    order: usize,
    components: Vec<Vec<String>>,
    partial_sum: Vec<String>,
}

fn solve_output(
    problem: &ODEProblem,
    order: usize,
    format: SolveFormatArg,
) -> Result<String, Error> {
    let solution = adomian::solve(problem, order);
    let sum = solution.partial_sum(order)?;
    match format {
        SolveFormatArg::Plain => {
            let mut out = String::new();
            for (n, component) in solution.components().iter().enumerate() {
                out.push_str(&format!("u{n} = {component}\n"));
            }
            out.push_str(&format!("sum = {sum}\n"));
            Ok(out)
        }
        SolveFormatArg::Json => {
            let coeff_strings =
                |p: &TimePolynomial| p.coeffs().iter().map(|c| c.to_string()).collect();
            let doc = SolveJson {
                label: problem.label(),
                c: problem.c.to_string(),
                b: problem.b.to_string(),
                eta: problem.eta,
                u0: problem.u0.to_string(),
                forcing: coeff_strings(&problem.forcing),
                order,
                components: solution.components().iter().map(coeff_strings).collect(),
                partial_sum: coeff_strings(&sum),
            };
            let mut text = serde_json::to_string_pretty(&doc).expect("schema serializes");
            text.push('\n');
            Ok(text)
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => fs::write(path, text).map_err(|err| {
            Error::InvalidArgument(format!("cannot write {}: {err}", path.display()))
        }),
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Polys {
            eta,
            max_order,
            format,
            out,
        } => emit(
            &list_polynomials(eta, max_order, format.into()),
            out.as_ref(),
        ),
        Command::Solve {
            problem,
            order,
            format,
            out,
        } => {
            let problem = problem.resolve()?;
            emit(&solve_output(&problem, order, format)?, out.as_ref())
        }
        Command::Table {
            problem,
            order,
            t,
            digits,
            format,
            out,
        } => {
            check_digits(digits)?;
            let problem = problem.resolve()?;
            let grid = parse_t_grid(t.as_deref().unwrap_or(DEFAULT_GRID), digits)?;
            let table = build_comparison_table(&problem, order, &grid, digits)?;
            emit(&table.export(format.into()), out.as_ref())
        }
        Command::Figure {
            problem,
            order,
            t_min,
            t_max,
            samples,
            digits,
            out,
        } => {
            check_digits(digits)?;
            let problem = problem.resolve()?;
            let t_min = HPReal::from_rational(&parse_rational(&t_min)?, digits);
            let t_max = HPReal::from_rational(&parse_rational(&t_max)?, digits);
            let csv = figure_data(&problem, order, &t_min, &t_max, samples, digits)?;
            emit(&csv, out.as_ref())
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        let code = match err {
            Error::Singularity { .. } => 3,
            _ => 2,
        };
        std::process::exit(code);
    }
}
