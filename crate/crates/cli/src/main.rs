//! `qsym` — algebra calculator, harmonic-sum evaluator and congruence
//! verifier.
//!
//! Exit codes: 0 success, 1 verification failure (or no fit found),
//! 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qsym_core::congruence::{
    check_all, check_theorem, fit_coefficients, generator_values, verify_weight_table,
    CheckConfig, FitCaps, GenExpr, TableSet, VerificationReport,
};
use qsym_core::mhs::{eval_exact, eval_mod_p, SumKind};
use qsym_core::modp::is_prime_u64;
use qsym_core::qsym::{Basis, QSymElem, WordPoly};
use qsym_core::word::Word;
use qsym_core::{Composition, Error};

#[derive(Parser)]
#[command(name = "qsym", version, about = "Quasi-symmetric functions and mod-p multiple harmonic sums")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SweepArgs {
    /// Inclusive prime range `a..b`, a single prime, or a comma list
    #[arg(long, default_value = "11..101")]
    primes: String,
    /// Worker threads for the sweep (default: all cores)
    #[arg(long)]
    parallel: Option<usize>,
    /// Alternative relation-table file
    #[arg(long)]
    tables: Option<PathBuf>,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Stuffle product of two basis compositions, e.g. `mul M "(2)" "(3)"`
    Mul {
        basis: String,
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Antipode of an element, e.g. `antipode "M(1,1)"`
    Antipode {
        elem: String,
        /// Use the splitting expansion instead of the closed form
        #[arg(long)]
        splitting: bool,
        #[arg(long)]
        json: bool,
    },
    /// The ψ involution of an element, or of a word with --word
    Psi {
        elem: Option<String>,
        /// Apply ψ at word level, e.g. --word x^2y^3
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Change of basis, e.g. `convert "M(2,1)" --to F`
    Convert {
        elem: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        json: bool,
    },
    /// Deconcatenation coproduct of an M- or E-basis element
    Coproduct { elem: String },
    /// Evaluate A_I or S_I: mod p with --prime/--primes, exactly with --n
    Eval {
        kind: String,
        composition: String,
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long)]
        primes: Option<String>,
        /// Exact rational evaluation at this n
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        json: bool,
        /// CSV rows `kind,composition,p,value`
        #[arg(long)]
        csv: bool,
    },
    /// Verify a theorem (--theorem ID) or the whole registry (--all)
    Verify {
        #[arg(long)]
        theorem: Option<String>,
        #[arg(long)]
        all: bool,
        /// Override the default weight range of the sweep
        #[arg(long)]
        max_weight: Option<u32>,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Verify a weight table, or print its generator values
    Table {
        #[arg(long)]
        weight: u32,
        /// Evaluate at one prime (with --generators prints the values)
        #[arg(long)]
        prime: Option<u64>,
        /// Print generator values instead of verifying
        #[arg(long)]
        generators: bool,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Fit rational coefficients: target ≡ Σ c_g·generator_g across primes
    Fit {
        #[arg(long)]
        target: String,
        /// Generator products, e.g. --generators "S(6,1,1,1)" "S(8,1)"
        #[arg(long, num_args = 1.., required = true)]
        generators: Vec<String>,
        #[arg(long)]
        primes: String,
        #[arg(long)]
        json: bool,
    },
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

fn run(command: Command) -> Result<ExitCode, anyhow::Error> {
    match command {
        Command::Mul { basis, left, right, json } => {
            let basis: Basis = basis.parse::<Basis>()?;
            let l: Composition = left.parse()?;
            let r: Composition = right.parse()?;
            let a = QSymElem::generator(basis, l);
            let b = QSymElem::generator(basis, r);
            // Multiply in M, then return to the requested basis.
            let product = a
                .convert_to(Basis::M)
                .stuffle(&b.convert_to(Basis::M))?
                .convert_to(basis);
            print_elem(&product, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Antipode { elem, splitting, json } => {
            let e: QSymElem = elem.parse()?;
            let out = if splitting { e.antipode_splitting()? } else { e.antipode() };
            print_elem(&out, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Psi { elem, word, json } => {
            match (elem, word) {
                (_, Some(word)) => {
                    let w: Word = word.parse()?;
                    let out = WordPoly::from_word(w).psi()?;
                    println!("{out}");
                }
                (Some(elem), None) => {
                    let e: QSymElem = elem.parse()?;
                    print_elem(&e.psi(), json);
                }
                (None, None) => {
                    return Err(Error::parse("psi needs an element or --word").into());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { elem, to, json } => {
            let e: QSymElem = elem.parse()?;
            let target: Basis = to.parse()?;
            print_elem(&e.convert_to(target), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Coproduct { elem } => {
            let e: QSymElem = elem.parse()?;
            println!("{}", e.coproduct()?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval { kind, composition, prime, primes, n, json, csv } => {
            let kind: SumKind = kind.parse()?;
            let comp: Composition = composition.parse()?;
            if let Some(n) = n {
                let value = eval_exact(kind, &comp, n);
                if json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "kind": kind.to_string(),
                            "composition": comp.parts(),
                            "n": n,
                            "value": value.to_string(),
                        })
                    );
                } else {
                    println!("{value}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let prime_list = match (prime, primes) {
                (Some(p), None) => {
                    if !is_prime_u64(p) {
                        return Err(Error::NotPrime(p).into());
                    }
                    vec![p]
                }
                (None, Some(spec)) => parse_primes(&spec)?,
                _ => return Err(Error::parse("eval needs exactly one of --prime, --primes, --n").into()),
            };
            if csv {
                println!("kind,composition,p,value");
            }
            for p in prime_list {
                let ctx = qsym_core::PrimeCtx::new(p)?;
                let value = eval_mod_p(kind, &comp, &ctx);
                if json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "kind": kind.to_string(),
                            "composition": comp.parts(),
                            "prime": p,
                            "value": value.value().to_string(),
                        })
                    );
                } else if csv {
                    println!("{kind},\"{comp}\",{p},{value}");
                } else {
                    println!("{value}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { theorem, all, max_weight, sweep } => {
            configure_threads(sweep.parallel)?;
            let tables = load_tables(&sweep.tables)?;
            let primes = parse_primes(&sweep.primes)?;
            let cfg = CheckConfig { max_weight };
            let reports = match (theorem, all) {
                (Some(id), false) => vec![check_theorem(&id, &primes, cfg, &tables)?],
                (None, true) => check_all(&primes, cfg, &tables)?,
                _ => return Err(Error::parse("verify needs exactly one of --theorem, --all").into()),
            };
            Ok(emit_reports(&reports, sweep.json))
        }
        Command::Table { weight, prime, generators, sweep } => {
            configure_threads(sweep.parallel)?;
            let tables = load_tables(&sweep.tables)?;
            if generators {
                let p = prime.ok_or_else(|| Error::parse("--generators needs --prime"))?;
                let values = generator_values(weight, p, &tables)?;
                if sweep.json {
                    let entries: Vec<serde_json::Value> = values
                        .iter()
                        .map(|(g, v)| {
                            serde_json::json!({"generator": g.to_string(), "value": v.value()})
                        })
                        .collect();
                    println!("{}", serde_json::json!({"weight": weight, "prime": p, "generators": entries}));
                } else {
                    let rendered: Vec<String> =
                        values.iter().map(|(g, v)| format!("{g}={v}")).collect();
                    println!("{}", rendered.join(" "));
                }
                return Ok(ExitCode::SUCCESS);
            }
            let primes = match prime {
                Some(p) => vec![p],
                None => parse_primes(&sweep.primes)?,
            };
            let report = verify_weight_table(weight, &primes, &tables)?;
            Ok(emit_reports(&[report], sweep.json))
        }
        Command::Fit { target, generators, primes, json } => {
            let target: GenExpr = target.parse()?;
            let gens: Vec<GenExpr> = generators
                .iter()
                .map(|g| g.parse())
                .collect::<Result<_, _>>()?;
            let prime_list = parse_primes(&primes)?;
            match fit_coefficients(&target, &gens, &prime_list, FitCaps::default()) {
                Ok(outcome) => {
                    if json {
                        let coeffs: Vec<String> =
                            outcome.coefficients.iter().map(|c| c.to_string()).collect();
                        println!(
                            "{}",
                            serde_json::json!({
                                "target": target.to_string(),
                                "coefficients": coeffs,
                                "validation_prime": outcome.validation_prime,
                            })
                        );
                    } else {
                        let rendered: Vec<String> = gens
                            .iter()
                            .zip(&outcome.coefficients)
                            .map(|(g, c)| format!("{c}*{g}"))
                            .collect();
                        println!(
                            "{target} = {} (validated at p={})",
                            rendered.join(" + "),
                            outcome.validation_prime
                        );
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(e @ (Error::FitInconsistent | Error::FitNeedMorePrimes)) => {
                    println!("no solution: {e}");
                    Ok(ExitCode::FAILURE)
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

fn print_elem(elem: &QSymElem, json: bool) {
    if json {
        println!("{}", elem.to_json());
    } else {
        println!("{elem}");
    }
}

fn emit_reports(reports: &[VerificationReport], json: bool) -> ExitCode {
    if json {
        println!("{}", serde_json::to_string_pretty(reports).expect("reports serialize"));
    } else {
        for report in reports {
            println!("{}", report.render_text());
        }
    }
    if reports.iter().all(VerificationReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn configure_threads(parallel: Option<usize>) -> Result<(), anyhow::Error> {
    if let Some(n) = parallel {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| anyhow::anyhow!("thread pool: {e}"))?;
    }
    Ok(())
}

fn load_tables(path: &Option<PathBuf>) -> Result<TableSet, anyhow::Error> {
    match path {
        None => Ok(TableSet::builtin()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| anyhow::anyhow!("reading {}: {e}", p.display()))?;
            Ok(TableSet::parse(&text)?)
        }
    }
}

/// Parses `a..b` (inclusive, filtered to primes), a single prime, or an
/// ascending comma list of primes.
fn parse_primes(spec: &str) -> Result<Vec<u64>, Error> {
    let spec = spec.trim();
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: u64 = lo
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad prime range `{spec}`")))?;
        let hi: u64 = hi
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad prime range `{spec}`")))?;
        if lo > hi {
            return Err(Error::parse(format!("empty prime range `{spec}`")));
        }
        let primes = qsym_core::modp::primes_in_range(lo, hi);
        if primes.is_empty() {
            return Err(Error::parse(format!("no primes in `{spec}`")));
        }
        return Ok(primes);
    }
    let mut out = Vec::new();
    for token in spec.split(',') {
        let p: u64 = token
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad prime `{token}`")))?;
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if let Some(&last) = out.last() {
            if p <= last {
                return Err(Error::parse("prime list must be ascending"));
            }
        }
        out.push(p);
    }
    if out.is_empty() {
        return Err(Error::parse("empty prime list"));
    }
    Ok(out)
}
