//! Command-line front end: parse ideal files, run the vanishing-ideal
//! computations, and print canonical text output.
//!
//! Exit codes: 0 success, 2 parse/usage error, 3 semantic error
//! (empty variety, inhomogeneous input, ...), 4 resource limit.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use zariski::codes::{
    affine_code_parameters_bounded, code_parameters_bounded, GeneratorMatrix,
};
use zariski::ideal_file::IdealFile;
use zariski::poly::{parse_polynomial, MonomialOrder};
use zariski::projective::{
    check_theorem_bounded, variety_points_bounded, vanishing_ideal_oracle,
    vanishing_ideal_poly, vanishing_ideal_saturation, PointSet,
};
use zariski::{stats, Error};

/// Vanishing ideals of finite projective point sets over F_q, by
/// saturation with respect to the homogeneous maximal ideal.
#[derive(Parser)]
#[command(name = "zariski", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the rational projective points of an ideal's variety
    Points {
        file: PathBuf,
        /// Name of an `ideal` block in the file
        ideal: String,
    },
    /// Print the reduced Groebner basis of the vanishing ideal I(X)
    Vanish {
        file: PathBuf,
        ideal: String,
        /// sat (saturation), oracle (point-ideal intersection), or
        /// poly=<f> (saturation by a nonvanishing witness)
        #[arg(long, default_value = "sat")]
        method: String,
    },
    /// Report saturatedness, degrees, and method agreement for an ideal
    Check {
        file: PathBuf,
        ideal: String,
        /// Emit the report as JSON instead of key/value text
        #[arg(long)]
        json: bool,
    },
    /// Parameters of the projective Reed-Muller-type code on a point
    /// set or on the variety of an ideal
    Code {
        file: PathBuf,
        /// Name of a `points` block, or of an `ideal` block whose
        /// variety supplies the points
        name: String,
        /// Evaluation degree d
        #[arg(long)]
        degree: u32,
        /// Also write the generator matrix as CSV to this path
        #[arg(long)]
        export_matrix: Option<PathBuf>,
    },
    /// Parameters of the affine variety code of an ideal
    Affine {
        file: PathBuf,
        ideal: String,
        /// Bound on the degree of the evaluated standard monomials
        #[arg(long)]
        degree: u32,
    },
    /// Time the saturation method against the point-ideal oracle
    Bench {
        file: PathBuf,
        ideal: String,
        /// Number of timed runs per method (the median is reported)
        #[arg(long, default_value_t = 3)]
        repeat: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

fn point_limit() -> usize {
    std::env::var("ZARISKI_MAX_POINTS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(zariski::DEFAULT_POINT_LIMIT)
}

fn message_limit() -> u128 {
    std::env::var("ZARISKI_MAX_MESSAGES")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(zariski::DEFAULT_MESSAGE_LIMIT)
}

fn load(path: &PathBuf) -> Result<IdealFile, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    IdealFile::parse(&text)
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Points { file, ideal } => {
            let file = load(&file)?;
            let i = file.ideal(&ideal)?;
            let points = variety_points_bounded(i, point_limit())?;
            for p in points.iter() {
                println!("{p}");
            }
            println!("count: {}", points.len());
        }
        Command::Vanish {
            file,
            ideal,
            method,
        } => {
            let file = load(&file)?;
            let i = file.ideal(&ideal)?;
            let result = match method.as_str() {
                "sat" => vanishing_ideal_saturation(i)?,
                "oracle" => {
                    let points = variety_points_bounded(i, point_limit())?;
                    if points.is_empty() {
                        return Err(Error::EmptyVariety);
                    }
                    vanishing_ideal_oracle(&points, file.ring())?
                }
                other => match other.strip_prefix("poly=") {
                    Some(text) => {
                        let witness = parse_polynomial(file.ring(), text, 1)?;
                        vanishing_ideal_poly(i, &witness)?
                    }
                    None => {
                        return Err(Error::Parse {
                            line: 0,
                            column: 0,
                            message: format!(
                                "unknown method `{other}` (expected sat, oracle, or poly=<f>)"
                            ),
                        })
                    }
                },
            };
            let gb = result.reduced_basis(MonomialOrder::Grevlex)?;
            for g in gb.polys() {
                println!("{}", g.format_with_order(MonomialOrder::Grevlex));
            }
        }
        Command::Check { file, ideal, json } => {
            let file = load(&file)?;
            let report = check_theorem_bounded(file.ideal(&ideal)?, point_limit())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("q: {}", report.q);
                println!("m: {}", report.m);
                println!("points: {}", report.point_count);
                println!("deg(S/I_q): {}", report.degree_sum_ideal);
                println!("deg(S/I(X)): {}", report.degree_vanishing_ideal);
                println!("height(I_q): {}", report.height_sum_ideal);
                println!("height(I(X)): {}", report.height_vanishing_ideal);
                println!("I_q saturated: {}", yes_no(report.sum_ideal_saturated));
                println!(
                    "I_q equals I(X): {}",
                    yes_no(report.sum_ideal_equals_vanishing_ideal)
                );
                println!(
                    "saturation equals oracle: {}",
                    yes_no(report.saturation_equals_oracle)
                );
                println!(
                    "max generator degree of I(X): {}",
                    report.max_generator_degree
                );
                println!(
                    "only I(X) can sum to I(X) (degree {} < q+1 = {}): {}",
                    report.max_generator_degree,
                    report.q + 1,
                    yes_no(report.impos_applicable)
                );
            }
        }
        Command::Code {
            file,
            name,
            degree,
            export_matrix,
        } => {
            let file = load(&file)?;
            let ring = file.ring();
            let points: PointSet = match file.point_set(&name) {
                Ok(set) => set.clone(),
                Err(Error::UnknownName(_)) => {
                    let i = file.ideal(&name)?;
                    variety_points_bounded(i, point_limit())?
                }
                Err(e) => return Err(e),
            };
            if points.is_empty() {
                return Err(Error::EmptyPointSet);
            }
            let params = code_parameters_bounded(&points, ring, degree, message_limit())?;
            if let Some(path) = export_matrix {
                let matrix = GeneratorMatrix::new(&points, ring, degree)?;
                std::fs::write(&path, matrix.to_csv()).map_err(|e| Error::Parse {
                    line: 0,
                    column: 0,
                    message: format!("cannot write {}: {e}", path.display()),
                })?;
            }
            println!("n\tk\td_min\td\tq\tm");
            println!(
                "{}\t{}\t{}\t{}\t{}\t{}",
                params.n,
                params.k,
                params
                    .d_min
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "unknown".to_string()),
                params.d,
                params.q,
                params.m
            );
        }
        Command::Affine {
            file,
            ideal,
            degree,
        } => {
            let file = load(&file)?;
            let params =
                affine_code_parameters_bounded(file.ideal(&ideal)?, degree, point_limit())?;
            println!("n\tk\tL\tq\tm");
            println!(
                "{}\t{}\t{}\t{}\t{}",
                params.n, params.k, params.l_degree, params.q, params.m
            );
        }
        Command::Bench {
            file,
            ideal,
            repeat,
        } => {
            let file = load(&file)?;
            let i = file.ideal(&ideal)?;
            let ring = file.ring();
            let repeat = repeat.max(1);

            let mut sat_result = None;
            let sat = time_method(repeat, || {
                let r = vanishing_ideal_saturation(i)?;
                // force the canonical basis so both methods do the
                // same amount of terminal work
                r.reduced_basis(MonomialOrder::Grevlex)?;
                sat_result = Some(r);
                Ok(())
            })?;

            let mut oracle_result = None;
            let oracle = time_method(repeat, || {
                let points = variety_points_bounded(i, point_limit())?;
                if points.is_empty() {
                    return Err(Error::EmptyVariety);
                }
                let r = vanishing_ideal_oracle(&points, ring)?;
                r.reduced_basis(MonomialOrder::Grevlex)?;
                oracle_result = Some(r);
                Ok(())
            })?;

            let agree = sat_result
                .unwrap()
                .equals(&oracle_result.unwrap())
                .unwrap_or(false);
            println!("method\tmedian_ms\truns\ts_pairs\treductions");
            println!(
                "sat\t{:.3}\t{}\t{}\t{}",
                sat.median_ms, repeat, sat.stats.s_pairs, sat.stats.reduction_steps
            );
            println!(
                "oracle\t{:.3}\t{}\t{}\t{}",
                oracle.median_ms, repeat, oracle.stats.s_pairs, oracle.stats.reduction_steps
            );
            println!("results agree: {}", yes_no(agree));
        }
    }
    Ok(())
}

struct BenchSample {
    median_ms: f64,
    stats: stats::KernelStats,
}

fn time_method(
    repeat: usize,
    mut body: impl FnMut() -> Result<(), Error>,
) -> Result<BenchSample, Error> {
    let mut times = Vec::with_capacity(repeat);
    let mut last_stats = stats::snapshot();
    for _ in 0..repeat {
        stats::reset();
        let start = Instant::now();
        body()?;
        times.push(start.elapsed().as_secs_f64() * 1e3);
        last_stats = stats::snapshot();
    }
    times.sort_by(f64::total_cmp);
    Ok(BenchSample {
        median_ms: times[times.len() / 2],
        stats: last_stats,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
