//! Command-line front end: run the iteration, reproduce the nine-part worked
//! example, generate and export sine tables, compare the two table-building
//! methods, inspect eigenvalue convergence, and multiply via table lookups.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 configuration or I/O
//! error. All output is deterministic for a given command line.

mod worked_example;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use buergi::classical::ptolemy_sine_table;
use buergi::dec::Dec;
use buergi::kunstweg::{iterate, normalize, perron_eigenvalue, DyadicVector, StopRule};
use buergi::prosthaphaeresis::prost_multiply;
use buergi::sexagesimal::Sexagesimal;
use buergi::tablegen::{
    degree_table, minute_table, sin1_minute_seed, table_error_report, SineTable,
};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "buergi",
    about = "Sine tables by Bürgi's arithmetical iteration and by the classical chord method",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce the nine-part worked example (columns, auxiliary columns,
    /// final ratios) and verify every number against the embedded copy
    Fig4,
    /// Run the iteration for an n-part division and print the normalized
    /// sines with convergence diagnostics
    Iterate {
        /// Number of equal parts of the right angle
        #[arg(long)]
        n: usize,
        /// Comma-separated integer seed (defaults to the ramp 1,2,...,n)
        #[arg(long, value_delimiter = ',')]
        seed: Option<Vec<u64>>,
        /// Fixed iteration count
        #[arg(long, conflicts_with = "target_digits")]
        iterations: Option<usize>,
        /// Iterate until normalized entries settle to this many digits
        /// (the default, with 9 digits)
        #[arg(long)]
        target_digits: Option<u32>,
        /// Decimal places for printed values
        #[arg(long, default_value_t = 10)]
        precision: u32,
    },
    /// Generate a sine table and write it as csv, tsv, or sexagesimal text
    #[command(alias = "export")]
    Table {
        /// Angular step in arcminutes (60 = degree table via the iteration,
        /// otherwise derived from the minute recurrence)
        #[arg(long, default_value_t = 1)]
        step: u32,
        /// Decimal places for the sine_decimal column
        #[arg(long, default_value_t = 12)]
        precision: u32,
        /// Sexagesimal fractional places
        #[arg(long, default_value_t = 7)]
        places: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Output path (stdout when omitted)
        #[arg(long)]
        output: Option<std::path::PathBuf>,
        /// ASCII-only angle display (30deg0' instead of 30°0′)
        #[arg(long)]
        ascii: bool,
    },
    /// Build the iteration and chord tables on a matching grid and report
    /// their errors against the reference sine and against each other
    Compare {
        /// Decimal places for the iteration table
        #[arg(long, default_value_t = 9)]
        precision: u32,
        /// Radius of the chord-table circle
        #[arg(long, default_value_t = 60)]
        radius: u32,
    },
    /// Closed-form dominant eigenvalue next to the per-iteration
    /// bottom-entry growth ratios
    Eigen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 12)]
        iterations: usize,
        /// Comma-separated integer seed (defaults to the ramp 1,2,...,n)
        #[arg(long, value_delimiter = ',')]
        seed: Option<Vec<u64>>,
        /// Decimal places for the closed form
        #[arg(long, default_value_t = 10)]
        precision: u32,
    },
    /// Multiply two sines by table lookups:
    /// sin a sin b = [sin(90°-a+b) - sin(90°-a-b)]/2
    Prost {
        /// First angle in arcminutes, in (0, 5400]
        #[arg(long)]
        alpha: u32,
        /// Second angle in arcminutes, in (0, 5400]
        #[arg(long)]
        beta: u32,
        /// Minute-table precision backing the lookups
        #[arg(long, default_value_t = 12)]
        precision: u32,
        /// Linearly interpolate lookups that fall between grid points
        #[arg(long)]
        interpolate: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Tsv,
    /// One "D°M′  s;d,d,..." line per entry
    #[value(alias = "sexagesimal")]
    SexagesimalText,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match command {
        Command::Fig4 => {
            let mismatches = worked_example::run();
            Ok(if mismatches == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Iterate { n, seed, iterations, target_digits, precision } => {
            cmd_iterate(n, seed, iterations, target_digits, precision)
        }
        Command::Table { step, precision, places, format, output, ascii } => {
            cmd_table(step, precision, places, format, output, ascii)
        }
        Command::Compare { precision, radius } => cmd_compare(precision, radius),
        Command::Eigen { n, iterations, seed, precision } => {
            cmd_eigen(n, iterations, seed, precision)
        }
        Command::Prost { alpha, beta, precision, interpolate } => {
            cmd_prost(alpha, beta, precision, interpolate)
        }
    }
}

fn cmd_iterate(
    n: usize,
    seed: Option<Vec<u64>>,
    iterations: Option<usize>,
    target_digits: Option<u32>,
    precision: u32,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let state = match seed {
        Some(values) => {
            if values.len() != n {
                return Err(format!("seed has {} entries, expected n = {n}", values.len()).into());
            }
            DyadicVector::from_seed(&values)?
        }
        None => DyadicVector::ramp(n)?,
    };
    let stop = match (iterations, target_digits) {
        (Some(k), None) => StopRule::MaxIterations(k),
        (None, Some(d)) => StopRule::TargetDigits(d),
        (None, None) => StopRule::TargetDigits(9),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    let (final_state, report) = iterate(&state, stop)?;
    let values = normalize(&final_state, precision)?;

    println!("n = {n}, iterations = {}", report.iterations);
    println!("angle          sine");
    for (j, value) in values.iter().enumerate() {
        let degrees = (j + 1) as f64 * 90.0 / n as f64;
        println!("{degrees:>10.4}  {value}");
    }
    println!(
        "closed-form eigenvalue: {}",
        report.closed_form_eigenvalue
    );
    if let Some(last) = report.eigenvalue_estimates.last() {
        println!("last bottom-ratio estimate: {last}");
    }
    println!(
        "final residual vs reference: {} ({} digits)",
        report.normalized_residual, report.digits_correct
    );
    Ok(ExitCode::SUCCESS)
}

fn angle_display(arcmin: u32, ascii: bool) -> String {
    let (d, m) = (arcmin / 60, arcmin % 60);
    if ascii {
        format!("{d}deg{m}'")
    } else {
        format!("{d}\u{00B0}{m}\u{2032}")
    }
}

fn build_table(step: u32, precision: u32) -> Result<SineTable, buergi::Error> {
    if step == 0 || 5400 % step != 0 {
        return Err(buergi::Error::Config(format!(
            "step {step}' does not divide 5400'"
        )));
    }
    if step.is_multiple_of(60) {
        // whole-degree grids come straight from the 90-part iteration
        degree_table(precision)?.subsample(step)
    } else {
        let seed = sin1_minute_seed(precision)?;
        minute_table(&seed, precision)?.subsample(step)
    }
}

fn cmd_table(
    step: u32,
    precision: u32,
    places: u32,
    format: OutputFormat,
    output: Option<std::path::PathBuf>,
    ascii: bool,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let table = build_table(step, precision)?;
    let mut text = String::new();
    match format {
        OutputFormat::Csv | OutputFormat::Tsv => {
            let sep = if matches!(format, OutputFormat::Csv) { "," } else { "\t" };
            text.push_str(&format!(
                "angle_arcmin{sep}angle_display{sep}sine_decimal{sep}sine_sexagesimal\n"
            ));
            for (angle, value) in table.entries() {
                text.push_str(&format!(
                    "{angle}{sep}{}{sep}{}{sep}{}\n",
                    angle_display(*angle, ascii),
                    value.rescale(precision),
                    Sexagesimal::format(value, places)
                ));
            }
        }
        OutputFormat::SexagesimalText => {
            for (angle, value) in table.entries() {
                text.push_str(&format!(
                    "{}  {}\n",
                    angle_display(*angle, ascii),
                    Sexagesimal::format(value, places)
                ));
            }
        }
    }
    match output {
        Some(path) => fs::write(&path, text)?,
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_compare(precision: u32, radius: u32) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let kunstweg_table = degree_table(precision)?;
    let chord_table = ptolemy_sine_table(&Dec::from_int(radius as i64), 60, 12)?;

    let k_report = table_error_report(&kunstweg_table, precision.max(12))?;
    let p_report = table_error_report(&chord_table, 12)?;

    let mut cross_max = 0.0f64;
    for (angle, value) in kunstweg_table.entries() {
        let other = chord_table.get(*angle).expect("same grid");
        let diff = value.sub(other).abs().to_f64();
        if diff > cross_max {
            cross_max = diff;
        }
    }

    let k_budget = 10f64.powi(-(precision as i32));
    let p_budget = 5e-6;
    println!(
        "iteration table (n=90, precision {precision}): max err {:.3e} at {}', rms {:.3e}",
        k_report.max_abs_error, k_report.angle_of_max, k_report.rms
    );
    println!(
        "chord table (R={radius}, step 60'): max err {:.3e} at {}', rms {:.3e}",
        p_report.max_abs_error, p_report.angle_of_max, p_report.rms
    );
    println!("cross difference on the shared grid: max {cross_max:.3e}");

    let k_ok = k_report.max_abs_error < k_budget;
    let p_ok = p_report.max_abs_error < p_budget;
    println!(
        "budgets: iteration < {k_budget:.0e}: {}; chords < {p_budget:.0e}: {}",
        if k_ok { "OK" } else { "EXCEEDED" },
        if p_ok { "OK" } else { "EXCEEDED" }
    );
    Ok(if k_ok && p_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_eigen(
    n: usize,
    iterations: usize,
    seed: Option<Vec<u64>>,
    precision: u32,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let mu = perron_eigenvalue(n, precision);
    println!("n = {n}");
    println!("closed-form eigenvalue csc^2(pi/4n)/4 = {mu}");
    let state = match seed {
        Some(values) => {
            if values.len() != n {
                return Err(format!("seed has {} entries, expected n = {n}", values.len()).into());
            }
            DyadicVector::from_seed(&values)?
        }
        None => DyadicVector::ramp(n)?,
    };
    let (_, report) = iterate(&state, StopRule::MaxIterations(iterations))?;
    println!("iter  bottom-ratio estimate                digits correct");
    for (i, estimate) in report.eigenvalue_estimates.iter().enumerate() {
        println!(
            "{:>4}  {:<36} {}",
            i + 1,
            estimate.rescale(precision.min(12)).to_string(),
            report.digits_history[i]
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_prost(
    alpha: u32,
    beta: u32,
    precision: u32,
    interpolate: bool,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let seed = sin1_minute_seed(precision)?;
    let table = minute_table(&seed, precision)?;
    let result = prost_multiply(alpha, beta, &table, interpolate)?;
    println!(
        "sin({}) * sin({})",
        angle_display(alpha, true),
        angle_display(beta, true)
    );
    println!("lookups: {} and {}", result.table_lookups.0, result.table_lookups.1);
    println!(
        "estimate: {}",
        result.product_estimate.rescale(precision + 2)
    );
    println!("error bound: {}", result.absolute_error_bound);
    Ok(ExitCode::SUCCESS)
}
