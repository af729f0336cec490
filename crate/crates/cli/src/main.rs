//! `fincon`: verify congruences prime by prime, search for special primes,
//! export sequences and evaluate the real Gregory series for Euler's constant.
//!
//! Exit status is 0 when every admissible check passes, 1 on a failing check
//! (the counterexample is printed) and 2 on malformed arguments.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use finite_analogues::analytic::{bla101_partial, gamma_ref, mascheroni_partial};
use finite_analogues::arith::harmonic;
use finite_analogues::bfile::{format_bfile, write_bfile};
use finite_analogues::cache::{gamma_m_params, TAG_GAMMA_M};
use finite_analogues::dobinski::{bell, coeff_family, g_seq, verify_dobinski};
use finite_analogues::euler::{
    verify_eisenstein, verify_interlude, verify_kluyver, verify_log_additivity, verify_mascheroni,
    verify_mascheroni_at_minus_one,
};
use finite_analogues::gregory::gregory_values;
use finite_analogues::search::search;
use finite_analogues::{parse_rational, Error, Float, PrimeWindow, Rational, ResidueCache, ResidueCacheRecord, SearchTarget, VerificationReport};

#[derive(Parser)]
#[command(name = "fincon", version, about = "Finite analogues of e and Euler's constant")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a family of congruences over a prime window.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// List window primes where the chosen residue vanishes.
    Search {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long, default_value_t = 5)]
        pmin: u64,
        #[arg(long, default_value_t = 600)]
        pmax: u64,
        /// Do not read or append the residue cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Print a sequence as `n a(n)` lines.
    Seq {
        #[arg(long, value_enum)]
        name: SeqName,
        #[arg(long)]
        nmax: usize,
        /// Column of b_{2,j} (0 or 1).
        #[arg(long, default_value_t = 0)]
        j: usize,
        /// Evaluation point for b2j and gregory.
        #[arg(long, value_parser = rational_arg)]
        x: Option<Rational>,
        /// Also write the sequence to this b-file.
        #[arg(long)]
        bfile: Option<PathBuf>,
    },
    /// Evaluate a partial sum of a Gregory series for Euler's constant.
    Gamma {
        #[arg(long, value_enum)]
        method: GammaMethod,
        #[arg(long, value_parser = rational_arg, default_value = "0", allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 10_000)]
        terms: usize,
        #[arg(long, default_value_t = 128)]
        prec: u32,
    },
    /// Residue cache maintenance.
    Cache {
        #[command(subcommand)]
        what: CacheCmd,
    },
}

#[derive(Subcommand)]
enum Verify {
    Dobinski {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, default_value_t = 5)]
        pmin: u64,
        #[arg(long, default_value_t = 2003)]
        pmax: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    Euler {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, default_value_t = 2)]
        k: u64,
        /// Second argument of the log-additivity check.
        #[arg(long, value_parser = rational_arg, default_value = "2", allow_hyphen_values = true)]
        y: Rational,
        #[arg(long, default_value_t = 5)]
        pmin: u64,
        #[arg(long, default_value_t = 1009)]
        pmax: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct OutputArgs {
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    threads: Option<usize>,
    /// Write the report as one JSON line to this file.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Omit wall time and timestamp from the JSON report.
    #[arg(long)]
    no_timestamp: bool,
}

#[derive(Subcommand)]
enum CacheCmd {
    /// Recompute a random sample of cached residues.
    Verify {
        #[arg(long, default_value_t = 200)]
        sample: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Mascheroni,
    Interlude,
    Kluyver,
    Eisenstein,
    Logadd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    #[value(name = "eA-zero")]
    EAZero,
    Wilson,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqName {
    Bell,
    G,
    B2j,
    Gregory,
}

#[derive(Clone, Copy, ValueEnum)]
enum GammaMethod {
    Mascheroni,
    Kluyver,
    Bla101,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Failure kinds mapped to exit codes.
enum Failure {
    Check,
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::ParseRational(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Verify { what } => run_verify(what),
        Command::Search { target, pmin, pmax, no_cache } => {
            let target = match target {
                Target::EAZero => SearchTarget::EAZero,
                Target::Wilson => SearchTarget::Wilson,
            };
            let window = PrimeWindow::new(pmin, pmax);
            let found = if no_cache {
                search(target, &window, None)?
            } else {
                let mut cache = ResidueCache::from_env()?;
                search(target, &window, Some(&mut cache))?
            };
            for p in found {
                println!("{p}");
            }
            Ok(())
        }
        Command::Seq { name, nmax, j, x, bfile } => run_seq(name, nmax, j, x, bfile),
        Command::Gamma { method, x, m, k, terms, prec } => run_gamma(method, &x, m, k, terms, prec),
        Command::Cache { what: CacheCmd::Verify { sample, seed } } => {
            let cache = ResidueCache::from_env()?;
            let bad = cache.verify_sample(sample, seed)?;
            println!("checked {} of {} records in {}", sample.min(cache.len()), cache.len(), cache.path().display());
            if bad.is_empty() {
                return Ok(());
            }
            for (rec, fresh) in bad {
                let fresh = fresh.map_or("undefined".to_string(), |v| v.to_string());
                println!("mismatch: {} {:?} p={} cached={} fresh={fresh}", rec.tag, rec.params, rec.prime, rec.residue);
            }
            Err(Failure::Check)
        }
    }
}

fn set_threads(threads: Option<usize>) -> Result<(), Failure> {
    if let Some(t) = threads {
        if t == 0 {
            return Err(Failure::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    Ok(())
}

fn run_verify(what: Verify) -> Result<(), Failure> {
    let (reports, out) = match what {
        Verify::Dobinski { r, nmax, x, pmin, pmax, out } => {
            if r == 0 {
                return Err(Failure::Usage("--r must be positive".into()));
            }
            set_threads(out.threads)?;
            (vec![verify_dobinski(r, nmax, &x, &PrimeWindow::new(pmin, pmax))], out)
        }
        Verify::Euler { which, x, m, k, y, pmin, pmax, out } => {
            set_threads(out.threads)?;
            let w = PrimeWindow::new(pmin, pmax);
            let reports = match which {
                Which::Mascheroni => {
                    let rep = verify_mascheroni(&x, &w);
                    // the left-hand residues are gamma_A^M(x) itself
                    let params = gamma_m_params(&x);
                    ResidueCache::from_env()?.extend(
                        rep.records.iter().map(|c| ResidueCacheRecord::new(TAG_GAMMA_M, params.clone(), c.prime, c.lhs)),
                    )?;
                    if x == -1 {
                        vec![rep, verify_mascheroni_at_minus_one(&w)]
                    } else {
                        vec![rep]
                    }
                }
                Which::Interlude if k < 2 => return Err(Failure::Usage("--k must be at least 2".into())),
                Which::Interlude => vec![verify_interlude(k, &x, &w)],
                Which::Kluyver if m < 1 => return Err(Failure::Usage("--m must be positive".into())),
                Which::Kluyver => vec![verify_kluyver(m, &x, &w)],
                Which::Eisenstein => vec![verify_eisenstein(&x, &w)],
                Which::Logadd if x == 0 || y == 0 => {
                    return Err(Failure::Usage("log-additivity needs nonzero x and y".into()))
                }
                Which::Logadd => vec![verify_log_additivity(&x, &y, &w)],
            };
            (reports, out)
        }
    };
    let reports: Vec<VerificationReport> = if out.no_timestamp {
        reports.into_iter().map(VerificationReport::without_timing).collect()
    } else {
        reports
    };
    for rep in &reports {
        print_table(rep);
    }
    if let Some(path) = out.json {
        let body: String = reports.iter().map(|r| r.to_json_line() + "\n").collect();
        fs::write(path, body)?;
    }
    if reports.iter().all(VerificationReport::all_pass) {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn print_table(rep: &VerificationReport) {
    println!("{:>8}  {:>7}  {:>6}", "prime", "checks", "failed");
    let mut i = 0;
    while i < rep.records.len() {
        let p = rep.records[i].prime;
        let group = rep.records[i..].iter().take_while(|c| c.prime == p).count();
        let failed = rep.records[i..i + group].iter().filter(|c| !c.pass).count();
        println!("{p:>8}  {group:>7}  {failed:>6}");
        i += group;
    }
    for s in &rep.skipped {
        println!("skipped {}: {}", s.prime, s.reason);
    }
    for c in rep.failures() {
        let idx = c.index.map_or(String::new(), |n| format!(" n={n}"));
        println!("counterexample: p={}{idx} lhs={} rhs={}", c.prime, c.lhs, c.rhs);
    }
    println!("{}", rep.summary());
    if let Some(us) = rep.wall_time_us {
        println!("wall time {:.3} s", us as f64 / 1e6);
    }
}

fn run_seq(name: SeqName, nmax: usize, j: usize, x: Option<Rational>, bfile: Option<PathBuf>) -> Result<(), Failure> {
    let values: Vec<String> = match name {
        SeqName::Bell => bell(nmax).iter().map(ToString::to_string).collect(),
        SeqName::G => g_seq(nmax).iter().map(ToString::to_string).collect(),
        SeqName::B2j => {
            if j > 1 {
                return Err(Failure::Usage("--j must be 0 or 1 for b2j".into()));
            }
            let x = x.unwrap_or_else(|| Rational::from(1));
            let fam = coeff_family(2, nmax);
            (0..=nmax).map(|n| fam.b(j, n).eval(&x).to_string()).collect()
        }
        SeqName::Gregory => gregory_values(&x.unwrap_or_default(), nmax).iter().map(ToString::to_string).collect(),
    };
    print!("{}", format_bfile(0, &values));
    if let Some(path) = bfile {
        write_bfile(fs::File::create(path)?, 0, &values)?;
    }
    Ok(())
}

fn run_gamma(method: GammaMethod, x: &Rational, m: u32, k: u32, terms: usize, prec: u32) -> Result<(), Failure> {
    if *x <= -1 {
        return Err(Failure::Usage(format!("x = {x} must exceed -1")));
    }
    let value = match method {
        GammaMethod::Mascheroni => mascheroni_partial(x, 0, terms, prec)?,
        GammaMethod::Kluyver => mascheroni_partial(x, m, terms, prec)?,
        GammaMethod::Bla101 => bla101_partial(k, x, terms, prec)?,
    };
    let reference = gamma_ref(prec);
    println!("approximation  {value}");
    match method {
        GammaMethod::Mascheroni | GammaMethod::Kluyver => {
            let m = if matches!(method, GammaMethod::Mascheroni) { 0 } else { m };
            let log = Float::with_val(prec, &Rational::from(x + (m + 1))).ln();
            println!("H_{m}            {}", harmonic(u64::from(m)));
            println!("log(x+{})       {}", m + 1, log.to_string_radix(10, Some(25)));
        }
        GammaMethod::Bla101 => {
            let mut logs = Float::with_val(prec, 0);
            for j in 1..=k {
                logs += Float::with_val(prec, &Rational::from(x + j)).ln();
            }
            println!("sum log(x+j)/k {}", Float::with_val(prec, logs / k).to_string_radix(10, Some(25)));
        }
    }
    println!("terms {terms}, precision {} bits", value.precision());
    println!("|approx - gamma| {:e}", value.abs_diff(&reference));
    Ok(())
}
