//! `latnorm`: command-line front end for digital convex sets.
//!
//! Exit codes: 0 success, 1 usage error, 2 the input fails a domain check
//! (unparsable, not digital convex, ...), 3 internal invariant violation.

mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use latnorm::bench::{bench_set, disc_of_size, BenchConfig, CSV_HEADER};
use latnorm::instances::format_points;
use latnorm::{
    classify, convex_hull, generate, is_digital_convex, lattice_diameter_bruteforce, lattice_diameter_fast,
    parse_points, serialize_result, to_almost_4_connected, verify_result, DigitalSet, Error, GeneratorSpec,
};

#[derive(Parser, Debug)]
#[command(name = "latnorm", version, about = "Unimodular normalization of digital convex sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Digital convexity verdict and connectivity class.
    Check { input: PathBuf },
    /// Convex hull vertices, counter-clockwise.
    Hull { input: PathBuf },
    /// Lattice diameter: count, endpoints and direction.
    Diameter {
        input: PathBuf,
        /// Recompute by the quadratic pair scan and fail on disagreement.
        #[arg(long)]
        brute: bool,
    },
    /// Map the set onto an almost 4-connected one and write the result JSON.
    Normalize {
        input: PathBuf,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Write a generated point list.
    Gen(GenArgs),
    /// Draw a point list as a character grid or SVG.
    Render {
        input: PathBuf,
        #[arg(long)]
        svg: bool,
    },
    /// Time diameter and normalization on discs of the given sizes (CSV).
    Bench {
        #[arg(long, value_delimiter = ',', value_parser = parse_size, default_value = "1e3,1e4,1e5")]
        sizes: Vec<u64>,
        #[arg(long, default_value_t = 3)]
        warmups: usize,
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
    /// Run the built-in golden suite.
    Selftest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Kind {
    Disc,
    RandomHull,
    ThinSlab,
    Pompom,
    Rows,
}

#[derive(clap::Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, env = "LATNORM_SEED", default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    radius: i64,
    #[arg(long, default_value_t = 2)]
    k: i64,
    #[arg(long, default_value_t = 10)]
    n: i64,
    /// Sample count for random_hull.
    #[arg(long, default_value_t = 20)]
    samples: u32,
    #[arg(long, default_value_t = 50)]
    half_width: i64,
    #[arg(long, default_value_t = 100)]
    length: i64,
    #[arg(long, default_value_t = 2)]
    width: i64,
    #[arg(long, default_value_t = 5)]
    max_slope: i64,
    #[arg(short, long, default_value = "-")]
    output: PathBuf,
}

impl GenArgs {
    fn spec(&self) -> GeneratorSpec {
        match self.kind {
            Kind::Disc => GeneratorSpec::Disc { radius: self.radius },
            Kind::RandomHull => {
                GeneratorSpec::RandomHull { samples: self.samples, half_width: self.half_width, seed: self.seed }
            }
            Kind::ThinSlab => GeneratorSpec::ThinSlab {
                length: self.length,
                width: self.width,
                max_slope: self.max_slope,
                seed: self.seed,
            },
            Kind::Pompom => GeneratorSpec::Pompom { k: self.k },
            Kind::Rows => GeneratorSpec::Rows { n: self.n },
        }
    }
}

/// `1000`, `1e3` or `2e5`; integers only.
fn parse_size(text: &str) -> Result<u64, String> {
    let bad = || format!("`{text}` is not a size like 1000 or 1e3");
    let (mantissa, exp) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<u32>().map_err(|_| bad())?),
        None => (text, 0),
    };
    let m: u64 = mantissa.parse().map_err(|_| bad())?;
    10u64.checked_pow(exp).and_then(|p| p.checked_mul(m)).filter(|&n| n > 0).ok_or_else(bad)
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Domain(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptySet
            | Error::CoordinateOutOfRange(_)
            | Error::NotDigitalConvex
            | Error::Parse { .. }
            | Error::BadParams(_) => Failure::Domain(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read_input(path: &Path) -> Result<DigitalSet, Failure> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))?
    };
    Ok(parse_points(&text)?)
}

fn write_output(path: &Path, text: &str) -> CmdResult {
    if path == Path::new("-") {
        io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Internal(format!("writing stdout: {e}")))
    } else {
        fs::write(path, text).map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display())))
    }
}

fn check(input: &Path) -> CmdResult {
    let s = read_input(input)?;
    let convex = !s.is_empty() && is_digital_convex(&s)?;
    let class = classify(&s)?;
    let verdict = if convex { "digital convex" } else { "not digital convex" };
    println!("{verdict}; {}", class.tag());
    if convex {
        Ok(())
    } else {
        Err(Failure::Domain(String::new()))
    }
}

fn hull(input: &Path) -> CmdResult {
    let s = read_input(input)?;
    for v in convex_hull(&s)?.vertices() {
        println!("{} {}", v.x, v.y);
    }
    Ok(())
}

fn diameter(input: &Path, brute: bool) -> CmdResult {
    let s = read_input(input)?;
    let (d, stats) = lattice_diameter_fast(&s, &convex_hull(&s)?)?;
    println!("k {}", d.k);
    println!("start {} {}", d.p_start.x, d.p_start.y);
    println!("end {} {}", d.p_end.x, d.p_end.y);
    println!("direction {} {}", d.direction[0], d.direction[1]);
    println!("rows_scanned {}", stats.rows_scanned);
    if brute {
        let b = lattice_diameter_bruteforce(&s)?;
        println!("brute_k {}", b.k);
        if b.k != d.k {
            return Err(Failure::Internal(format!("fast k = {} but brute force k = {}", d.k, b.k)));
        }
    }
    Ok(())
}

fn normalize(input: &Path, output: &Path) -> CmdResult {
    let s = read_input(input)?;
    let out = to_almost_4_connected(&s)?;
    let report = verify_result(&s, &out.map, &out.image);
    if !report.all_pass() {
        for step in &out.trace.steps {
            eprintln!("  {} {} [{}]", step.name, step.map, step.check.as_str());
        }
        return Err(Failure::Internal(format!("result failed verification: {:?}", report.failures())));
    }
    if out.trace.fallback_used {
        eprintln!("warning: fallback search used ({})", out.trace.fallback_reason.as_deref().unwrap_or("?"));
    }
    write_output(output, &serialize_result(&out.map, &out.image, &out.trace)?)
}

fn gen(args: &GenArgs) -> CmdResult {
    let s = generate(&args.spec())?;
    write_output(&args.output, &format_points(&s))
}

fn render(input: &Path, svg: bool) -> CmdResult {
    let s = read_input(input)?;
    let witness = classify(&s)?.witness();
    let text = if svg { render::svg(&s, witness) } else { render::ascii(&s, witness) };
    write_output(Path::new("-"), &text)
}

fn bench(sizes: &[u64], cfg: BenchConfig) -> CmdResult {
    println!("{CSV_HEADER}");
    for &n in sizes {
        let row = bench_set(&disc_of_size(n)?, cfg)?;
        println!("{}", row.to_csv());
    }
    Ok(())
}

fn selftest() -> CmdResult {
    let mut cases: Vec<(String, GeneratorSpec)> = Vec::new();
    for k in 2..=6 {
        cases.push((format!("pompom k={k}"), GeneratorSpec::Pompom { k }));
    }
    for radius in [1, 5, 20] {
        cases.push((format!("disc R={radius}"), GeneratorSpec::Disc { radius }));
    }
    for seed in 1..=3 {
        cases.push((format!("slab seed={seed}"), GeneratorSpec::ThinSlab { length: 60, width: 2, max_slope: 7, seed }));
    }
    let mut failures = 0;
    for (name, spec) in cases {
        let s = generate(&spec)?;
        let verdict = to_almost_4_connected(&s)
            .map(|out| (verify_result(&s, &out.map, &out.image), out.trace.fallback_used, out.class));
        match verdict {
            Ok((report, false, class)) if report.all_pass() => println!("ok    {name}: {}", class.tag()),
            Ok((report, fallback, _)) => {
                failures += 1;
                println!("FAIL  {name}: failed {:?}, fallback {fallback}", report.failures());
            }
            Err(e) => {
                failures += 1;
                println!("FAIL  {name}: {e}");
            }
        }
    }
    if failures == 0 {
        Ok(())
    } else {
        Err(Failure::Internal(format!("{failures} selftest cases failed")))
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Check { input } => check(&input),
        Command::Hull { input } => hull(&input),
        Command::Diameter { input, brute } => diameter(&input, brute),
        Command::Normalize { input, output } => normalize(&input, &output),
        Command::Gen(args) => gen(&args),
        Command::Render { input, svg } => render(&input, svg),
        Command::Bench { sizes, warmups, reps } => bench(&sizes, BenchConfig { warmups, repetitions: reps }),
        Command::Selftest => selftest(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Domain(m) | Failure::Internal(m) if !m.is_empty() => {
                    eprintln!("latnorm: {m}")
                }
                _ => {}
            }
            ExitCode::from(f.code())
        }
    }
}
