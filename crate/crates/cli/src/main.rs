//! `binomat`: build binomial matrices, print their characteristic
//! polynomials, spectra and generating functions, and run the
//! verification suites.
//!
//! Exit status: 0 on success or when every verified case passes, 1 when a
//! verification case fails, 2 on usage or domain errors.

use std::fmt::Display;
use std::process::ExitCode;

use binomat::arith::is_prime;
use binomat::family::binomial_r;
use binomat::genfun::{col_gf, column_rational_function, row_gf};
use binomat::spectra::{closed_form_eigenvalues, eigvec_matrix};
use binomat::suite::DEFAULT_E_MAX;
use binomat::{
    build, DensePolynomial, GoldenNumber, MatrixKind, ModScalar, QuadModulus, Rational, Ring, RingSelector,
    RunReport, SquareMatrix, Suite, SuiteOptions,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const MAX_EXPONENT: u64 = 64;

#[derive(Parser, Debug)]
#[command(name = "binomat", version, about = "Exact computations with binomial matrices")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Work modulo the prime P (GF(P^2) for matrices that need phi).
    #[arg(long = "mod", global = true, value_name = "P")]
    modulus: Option<u64>,
    /// Use det(A - xI) instead of the monic det(xI - A).
    #[arg(long, global = true)]
    paper_sign: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a named matrix.
    Gen {
        /// One of L, R, K, A, Rinv, X, C, D, V.
        #[arg(long)]
        kind: MatrixKind,
        /// Matrix order
        #[arg(long)]
        n: usize,
    },
    /// Characteristic polynomial of R_n.
    Charpoly {
        /// Matrix order
        #[arg(long)]
        n: usize,
    },
    /// Closed-form eigenvalues of R_n, sorted by decreasing absolute value.
    Eigen {
        /// Matrix order
        #[arg(long)]
        n: usize,
        /// Also print the eigenvector matrix W_n.
        #[arg(long)]
        vectors: bool,
    },
    /// Row polynomial or column series of R_n^e.
    Genfun(GenfunArgs),
    /// Run a verification suite and report every case.
    Verify {
        /// structure, spectrum, mod3, mod5, power, genfun or all.
        #[arg(long)]
        suite: Suite,
        /// Largest order checked
        #[arg(long)]
        n_max: usize,
        /// Comma-separated primes for the power suite.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        /// Largest exponent for the genfun suite.
        #[arg(long, default_value_t = DEFAULT_E_MAX)]
        e_max: u64,
    },
}

#[derive(Args, Debug)]
struct GenfunArgs {
    /// Matrix order
    #[arg(long)]
    n: usize,
    /// Power of R_n (1..=64)
    #[arg(long)]
    e: u64,
    /// Row index I (1-based).
    #[arg(long, conflicts_with = "col", required_unless_present = "col")]
    row: Option<usize>,
    /// Column index J (1-based).
    #[arg(long)]
    col: Option<usize>,
    /// Number of series terms for --col (default n).
    #[arg(long)]
    terms: Option<usize>,
}

/// A failure that maps to exit status 2.
struct UsageError(String);

impl<E: Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, UsageError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(UsageError(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> CliResult<u8> {
    if let Some(p) = cli.modulus {
        if !is_prime(p) {
            return usage(format!("--mod {p}: not a prime"));
        }
    }
    if cli.paper_sign && !matches!(cli.command, Command::Charpoly { .. }) {
        return usage("--paper-sign only applies to charpoly");
    }
    if cli.format == Format::Csv && !matches!(cli.command, Command::Gen { .. }) {
        return usage("csv output is only available for gen");
    }
    match &cli.command {
        Command::Gen { kind, n } => cmd_gen(cli, *kind, *n),
        Command::Charpoly { n } => cmd_charpoly(cli, *n),
        Command::Eigen { n, vectors } => cmd_eigen(cli, *n, *vectors),
        Command::Genfun(args) => cmd_genfun(cli, args),
        Command::Verify { suite, n_max, primes, e_max } => cmd_verify(cli, *suite, *n_max, primes.clone(), *e_max),
    }
}

fn positive(n: usize) -> CliResult<usize> {
    if n == 0 {
        usage("--n must be positive")
    } else {
        Ok(n)
    }
}

fn print_json(value: Value) {
    println!("{}", serde_json::to_string_pretty(&value).expect("json"));
}

fn strings<T: Display>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn cmd_gen(cli: &Cli, kind: MatrixKind, n: usize) -> CliResult<u8> {
    let n = positive(n)?;
    let ring = match (cli.modulus, kind.is_integral()) {
        (None, true) => RingSelector::Rational,
        (None, false) => RingSelector::Golden,
        (Some(p), true) => RingSelector::Prime(p),
        (Some(p), false) => RingSelector::PrimeSquare(p),
    };
    let m = build(kind, n, ring)?;
    match cli.format {
        Format::Pretty => println!("{}", m.to_pretty()),
        Format::Csv => println!("{}", m.to_csv()),
        Format::Json => {
            let mut v = m.to_json();
            v["schema"] = json!(1);
            v["kind"] = json!(kind.tag());
            print_json(v);
        }
    }
    Ok(0)
}

fn cmd_charpoly(cli: &Cli, n: usize) -> CliResult<u8> {
    let n = positive(n)?;
    let r = binomial_r(n, &Rational::one());
    match cli.modulus {
        None => emit_charpoly(cli, n, r.charpoly_over_z()),
        Some(p) => emit_charpoly(cli, n, r.reduce_mod(p)?.charpoly()),
    }
}

fn emit_charpoly<T: Ring>(cli: &Cli, n: usize, monic: DensePolynomial<T>) -> CliResult<u8> {
    let ring = monic.leading().map(Ring::ring_tag).unwrap_or_default();
    let (poly, convention) = if cli.paper_sign { (monic.sign_flipped(n), "paper-sign") } else { (monic, "monic") };
    // monic form reads highest degree first, the paper-sign closed forms lowest first
    let text = if cli.paper_sign { poly.to_ascending_string() } else { poly.to_descending_string() };
    match cli.format {
        Format::Json => print_json(json!({
            "schema": 1,
            "n": n,
            "ring": ring,
            "convention": convention,
            "polynomial": text,
            "coefficients": strings(poly.coeffs()),
        })),
        _ => println!("{text}"),
    }
    Ok(0)
}

fn cmd_eigen(cli: &Cli, n: usize, vectors: bool) -> CliResult<u8> {
    let n = positive(n)?;
    let spectrum = closed_form_eigenvalues(n);
    let modulus = cli.modulus.map(QuadModulus::standard).transpose()?;
    let render = |x: &GoldenNumber| -> CliResult<String> {
        Ok(match modulus {
            Some(m) => x.to_mod_quad(m)?.to_string(),
            None => x.to_string(),
        })
    };
    let values = spectrum.eigenvalues.iter().map(|e| render(&e.value)).collect::<CliResult<Vec<_>>>()?;
    let labels = spectrum.labels();
    let w = if vectors { Some(eigvec_matrix(n)?.w) } else { None };
    let w_rendered = match (&w, modulus) {
        (Some(w), Some(m)) => Some(w_in_extension(w, m)?),
        (Some(w), None) => Some((w.to_pretty(), w.to_json())),
        (None, _) => None,
    };
    match cli.format {
        Format::Json => {
            let mut v = json!({
                "schema": 1,
                "n": n,
                "ring": match modulus { Some(m) => format!("GF({}^2)", m.p()), None => "Q(phi)".into() },
                "eigenvalues": labels.iter().zip(&values)
                    .map(|(l, v)| json!({"label": l, "value": v}))
                    .collect::<Vec<_>>(),
            });
            if let Some((_, wj)) = w_rendered {
                v["W"] = wj;
            }
            print_json(v);
        }
        _ => {
            println!("{}", labels.join(", "));
            println!("{}", values.join(", "));
            if let Some((wp, _)) = w_rendered {
                println!("W =");
                println!("{wp}");
            }
        }
    }
    Ok(0)
}

fn w_in_extension(w: &SquareMatrix<GoldenNumber>, m: QuadModulus) -> CliResult<(String, Value)> {
    let mapped = w.try_map(|x| x.to_mod_quad(m))?;
    Ok((mapped.to_pretty(), mapped.to_json()))
}

fn cmd_genfun(cli: &Cli, args: &GenfunArgs) -> CliResult<u8> {
    let n = positive(args.n)?;
    let e = args.e;
    if e == 0 || e > MAX_EXPONENT {
        return usage(format!("--e must be between 1 and {MAX_EXPONENT}"));
    }
    let reduce = |c: &Rational| -> CliResult<String> {
        Ok(match cli.modulus {
            Some(p) => c.to_mod(p)?.to_string(),
            None => c.to_string(),
        })
    };
    let ring = match cli.modulus {
        Some(p) => ModScalar::new(0, p).ring_tag(),
        None => "Q".to_string(),
    };
    let (line, index, coeffs, extra) = if let Some(i) = args.row {
        if args.terms.is_some() {
            return usage("--terms only applies to --col");
        }
        let poly = row_gf(n, e, i)?;
        let coeffs: Vec<Rational> = (0..n).map(|k| poly.coeff(k).cloned().unwrap_or_else(Rational::zero)).collect();
        let text = match cli.modulus {
            Some(p) => poly.try_map(|c| c.to_mod(p))?.to_ascending_string(),
            None => poly.to_ascending_string(),
        };
        ("row", i, coeffs, json!({"polynomial": text}))
    } else {
        let j = args.col.expect("clap enforces --row or --col");
        let terms = args.terms.unwrap_or(n);
        if terms == 0 {
            return usage("--terms must be positive");
        }
        let series = col_gf(n, e, j, terms)?;
        let f = column_rational_function(n, e, j)?;
        let extra = match cli.modulus {
            None => json!({
                "numerator": f.numerator.to_ascending_string(),
                "denominator": f.denominator.to_ascending_string(),
            }),
            Some(_) => json!({}),
        };
        ("column", j, series.coeffs().to_vec(), extra)
    };
    let rendered = coeffs.iter().map(reduce).collect::<CliResult<Vec<_>>>()?;
    match cli.format {
        Format::Json => {
            let mut v = json!({
                "schema": 1,
                "n": n,
                "e": e,
                "line": line,
                "index": index,
                "ring": ring,
                "coefficients": rendered,
            });
            if let (Value::Object(dst), Value::Object(src)) = (&mut v, extra) {
                dst.extend(src);
            }
            print_json(v);
        }
        _ => {
            println!("{}", rendered.join(" "));
            if let Some(p) = extra.get("polynomial").and_then(Value::as_str) {
                println!("{p}");
            }
            if let (Some(num), Some(den)) = (
                extra.get("numerator").and_then(Value::as_str),
                extra.get("denominator").and_then(Value::as_str),
            ) {
                println!("({num}) / ({den})");
            }
        }
    }
    Ok(0)
}

fn cmd_verify(cli: &Cli, suite: Suite, n_max: usize, primes: Option<Vec<u64>>, e_max: u64) -> CliResult<u8> {
    if cli.modulus.is_some() {
        return usage("--mod does not apply to verify; use --primes for the power suite");
    }
    let mut opts = SuiteOptions::new(n_max);
    opts.e_max = e_max;
    if let Some(primes) = primes {
        opts.primes = primes;
    }
    let report = binomat::run_suite(suite, &opts)?;
    match cli.format {
        Format::Json => print_json(report.to_json()),
        _ => print_report(&report),
    }
    Ok(report.exit_code() as u8)
}

fn print_report(report: &RunReport) {
    for case in &report.cases {
        let mut params = format!("n={}", case.n);
        if let Some(e) = case.e {
            params.push_str(&format!(" e={e}"));
        }
        if let Some(p) = case.p {
            params.push_str(&format!(" p={p}"));
        }
        let status = if case.pass { "PASS" } else { "FAIL" };
        let skipped = case
            .checks
            .iter()
            .filter_map(|c| c.detail.as_deref())
            .find(|d| d.starts_with("skipped"))
            .map(|d| format!(" ({d})"))
            .unwrap_or_default();
        println!("{} {params}: {status}{skipped}", case.suite);
        if !case.pass {
            println!("  {}", case.detail);
        }
        for note in &case.paper_notes {
            println!("  note [{}]: {}", note.id, note.detail);
        }
    }
    let s = &report.summary;
    println!(
        "{}: {} cases, {} passed, {} failed, {} notes",
        report.suite, s.total, s.passed, s.failed, s.paper_notes
    );
}
