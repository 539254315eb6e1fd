//! Command-line surface: evaluate, decide equality, verify relations,
//! export generators, benchmark.
//!
//! Exit codes are a stable contract: 0 for success / EQUAL, 1 for DISTINCT
//! or a failed verification, 2 for usage or parse errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::export::{matrix_record, to_json_string};
use crate::genus2::{Genus2Rep, HyperellipticRep};
use crate::lk::{full_twist_word, LkRep};
use crate::matrix::RingMatrix;
use crate::sphere::SphereRep;
use crate::word::{relation_suite, Context, Letter, Word};

/// Exact matrices for braid groups, punctured-sphere mapping class groups,
/// and the genus-2 mapping class group.
#[derive(Parser, Debug)]
#[command(name = "mapclass", version, about)]
pub struct Cli {
    /// Group family to work in.
    #[arg(long, value_enum)]
    group: GroupKind,

    /// Strand / puncture count for braid and sphere groups.
    #[arg(long)]
    n: Option<usize>,

    /// Genus for the hyperelliptic family.
    #[arg(long)]
    g: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GroupKind {
    Braid,
    Sphere,
    Genus2,
    Hyperelliptic,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a word to its representation matrix.
    Eval {
        /// Word text, or @FILE to read the word from a file.
        word: String,
        /// Use the rescaled Lawrence-Krammer representation (braid only).
        #[arg(long)]
        rescaled: bool,
        /// Write the matrix (export format) to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether two words are the same group element.
    Equal {
        /// First word, or @FILE.
        word1: String,
        /// Second word, or @FILE.
        word2: String,
        /// Compare under the rescaled representation (braid only;
        /// identifies words modulo the center).
        #[arg(long)]
        rescaled: bool,
    },
    /// Run the context's relation suite through the representation.
    Verify,
    /// Write every generator and inverse matrix to a directory.
    Export {
        /// Output directory (created if missing).
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate random words and report timing and term growth.
    Bench {
        /// Letters per random word.
        #[arg(long)]
        length: usize,
        /// Number of random words.
        #[arg(long, default_value_t = 3)]
        trials: usize,
        /// RNG seed; identical seeds give identical words and matrices.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write a deterministic JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Rep {
    Braid(LkRep),
    Sphere(SphereRep),
    Genus2(Box<Genus2Rep>),
    Hyperelliptic(Box<HyperellipticRep>),
}

impl Rep {
    fn context(&self) -> Context {
        match self {
            Rep::Braid(r) => Context::Braid(r.n()),
            Rep::Sphere(r) => Context::Sphere(r.n()),
            Rep::Genus2(_) => Context::Genus2,
            Rep::Hyperelliptic(r) => Context::Hyperelliptic(r.g()),
        }
    }

    fn label(&self) -> String {
        match self.context() {
            Context::Braid(n) => format!("braid{n}"),
            Context::Sphere(n) => format!("sphere{n}"),
            Context::Genus2 => "genus2".into(),
            Context::Hyperelliptic(g) => format!("hyperelliptic{g}"),
        }
    }

    fn eval(&self, w: &Word, rescaled: bool) -> Result<RingMatrix> {
        match self {
            Rep::Braid(r) => r.eval(w, rescaled),
            Rep::Sphere(r) => r.eval(w),
            Rep::Genus2(r) => r.eval(w),
            Rep::Hyperelliptic(r) => r.eval(w),
        }
    }

    fn generator_count(&self) -> usize {
        self.context().generator_count()
    }

    fn generator_matrix(&self, i: usize) -> Result<RingMatrix> {
        match self {
            Rep::Braid(r) => r.generator(i).cloned(),
            Rep::Sphere(r) => r.generator_matrix(i),
            Rep::Genus2(r) => r.generator_matrix(i),
            Rep::Hyperelliptic(r) => r.generator_matrix(i),
        }
    }

    fn generator_inverse_matrix(&self, i: usize) -> Result<RingMatrix> {
        match self {
            Rep::Braid(r) => r.generator_inverse(i).cloned(),
            Rep::Sphere(r) => r.generator_inverse_matrix(i),
            Rep::Genus2(r) => r.generator_inverse_matrix(i),
            Rep::Hyperelliptic(r) => r.generator_inverse_matrix(i),
        }
    }
}

fn build_rep(cli: &Cli) -> Result<Rep> {
    match cli.group {
        GroupKind::Braid => {
            let n = cli.n.ok_or_else(|| Error::InvalidArgument("braid needs --n".into()))?;
            Ok(Rep::Braid(LkRep::new(n)?))
        }
        GroupKind::Sphere => {
            let n = cli.n.ok_or_else(|| Error::InvalidArgument("sphere needs --n".into()))?;
            Ok(Rep::Sphere(SphereRep::new(n)?))
        }
        GroupKind::Genus2 => Ok(Rep::Genus2(Box::new(Genus2Rep::new()?))),
        GroupKind::Hyperelliptic => {
            let g = cli.g.ok_or_else(|| Error::InvalidArgument("hyperelliptic needs --g".into()))?;
            Ok(Rep::Hyperelliptic(Box::new(HyperellipticRep::new(g)?)))
        }
    }
}

fn read_word_arg(arg: &str) -> Result<String> {
    if let Some(path) = arg.strip_prefix('@') {
        Ok(fs::read_to_string(path)?)
    } else {
        Ok(arg.to_string())
    }
}

fn describe(m: &RingMatrix) -> String {
    if m.is_identity() {
        "identity".into()
    } else if let Some(s) = m.is_scalar() {
        format!("scalar {s} * I")
    } else {
        format!("general matrix, max term count {}", m.max_term_count())
    }
}

fn cmd_eval(cli: &Cli, word: &str, rescaled: bool, out: Option<&Path>) -> Result<i32> {
    if rescaled && !matches!(cli.group, GroupKind::Braid) {
        return Err(Error::InvalidArgument("--rescaled only applies to braid groups".into()));
    }
    let rep = build_rep(cli)?;
    let text = read_word_arg(word)?;
    let w = Word::parse(&text, rep.context())?;
    let m = rep.eval(&w, rescaled)?;
    let json = to_json_string(&matrix_record(&m));
    match out {
        Some(path) => {
            fs::write(path, json)?;
            println!("wrote {}", path.display());
        }
        None => print!("{json}"),
    }
    println!("dim {}; {}", m.dim(), describe(&m));
    Ok(0)
}

fn cmd_equal(cli: &Cli, word1: &str, word2: &str, rescaled: bool) -> Result<i32> {
    if rescaled && !matches!(cli.group, GroupKind::Braid) {
        return Err(Error::InvalidArgument("--rescaled only applies to braid groups".into()));
    }
    let rep = build_rep(cli)?;
    let w1 = Word::parse(&read_word_arg(word1)?, rep.context())?;
    let w2 = Word::parse(&read_word_arg(word2)?, rep.context())?;
    let quotient = w1.concat(&w2.inverse())?;
    let equal = rep.eval(&quotient, rescaled)?.is_identity();
    if rescaled {
        println!("note: the rescaled representation decides equality modulo the center <Delta^2>");
    }
    if equal {
        println!("EQUAL");
        Ok(0)
    } else {
        println!("DISTINCT");
        Ok(1)
    }
}

fn cmd_verify(cli: &Cli) -> Result<i32> {
    let rep = build_rep(cli)?;
    let mut failures = 0usize;
    for relator in relation_suite(rep.context()) {
        let ok = rep.eval(&relator.word, false)?.is_identity();
        println!("{} {}", if ok { "PASS" } else { "FAIL" }, relator.name);
        if !ok {
            failures += 1;
        }
    }
    match &rep {
        Rep::Braid(r) => {
            // the full twist is central, not trivial: report its scalar
            let m = r.eval(&full_twist_word(r.n()), false)?;
            match m.is_scalar() {
                Some(s) => println!("PASS center: L(Delta^2) = {s} * I"),
                None => {
                    println!("FAIL center: L(Delta^2) is not scalar");
                    failures += 1;
                }
            }
        }
        Rep::Genus2(r) => {
            let iota = Genus2Rep::involution_word();
            let m = r.eval(&iota)?;
            let nontrivial = !m.is_identity();
            println!(
                "{} involution_nontrivial: rho(iota) != I",
                if nontrivial { "PASS" } else { "FAIL" }
            );
            if !nontrivial {
                failures += 1;
            }
        }
        _ => {}
    }
    if failures == 0 {
        println!("all checks passed");
        Ok(0)
    } else {
        println!("{failures} check(s) failed");
        Ok(1)
    }
}

fn cmd_export(cli: &Cli, out: &Path) -> Result<i32> {
    let rep = build_rep(cli)?;
    fs::create_dir_all(out)?;
    let prefix = rep.context().token_prefix();
    let label = rep.label();
    for i in 1..=rep.generator_count() {
        let g = rep.generator_matrix(i)?;
        let path = out.join(format!("{label}_{prefix}{i}.json"));
        fs::write(&path, to_json_string(&matrix_record(&g)))?;
        println!("wrote {}", path.display());
        let gi = rep.generator_inverse_matrix(i)?;
        let path = out.join(format!("{label}_{prefix}{i}_inv.json"));
        fs::write(&path, to_json_string(&matrix_record(&gi)))?;
        println!("wrote {}", path.display());
    }
    Ok(0)
}

#[derive(Serialize)]
struct BenchTrial {
    word: String,
    peak_terms: usize,
    sha256: String,
}

#[derive(Serialize)]
struct BenchReport {
    context: String,
    length: usize,
    trials: usize,
    seed: u64,
    results: Vec<BenchTrial>,
}

fn cmd_bench(cli: &Cli, length: usize, trials: usize, seed: u64, out: Option<&Path>) -> Result<i32> {
    let rep = build_rep(cli)?;
    let count = rep.generator_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut results = Vec::with_capacity(trials);
    let total = Instant::now();
    for trial in 0..trials {
        let letters: Vec<Letter> = (0..length)
            .map(|_| {
                let index = rng.gen_range(1..=count);
                if rng.gen_bool(0.5) { Letter::gen(index) } else { Letter::inv(index) }
            })
            .collect();
        let word = Word::new(rep.context(), letters)?;
        let started = Instant::now();
        let m = rep.eval(&word, false)?;
        let elapsed = started.elapsed();
        let json = to_json_string(&matrix_record(&m));
        let mut hasher = Sha256::new();
        hasher.update(json.as_bytes());
        let digest = hasher
            .finalize()
            .iter()
            .fold(String::with_capacity(64), |mut acc, b| {
                use std::fmt::Write;
                let _ = write!(acc, "{b:02x}");
                acc
            });
        println!(
            "trial {trial}: {} letters in {:.3} ms, peak terms {}",
            word.len(),
            elapsed.as_secs_f64() * 1e3,
            m.max_term_count()
        );
        results.push(BenchTrial {
            word: word.to_string(),
            peak_terms: m.max_term_count(),
            sha256: digest,
        });
    }
    println!("total {:.3} ms", total.elapsed().as_secs_f64() * 1e3);
    let report = BenchReport {
        context: rep.context().to_string(),
        length,
        trials,
        seed,
        results,
    };
    if let Some(path) = out {
        fs::write(path, to_json_string(&report))?;
        println!("wrote {}", path.display());
    }
    Ok(0)
}

/// Parses arguments and runs one command; returns the process exit code.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Eval { word, rescaled, out } => cmd_eval(&cli, word, *rescaled, out.as_deref()),
        Command::Equal { word1, word2, rescaled } => cmd_equal(&cli, word1, word2, *rescaled),
        Command::Verify => cmd_verify(&cli),
        Command::Export { out } => cmd_export(&cli, out),
        Command::Bench { length, trials, seed, out } => {
            cmd_bench(&cli, *length, *trials, *seed, out.as_deref())
        }
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
