// SPDX-License-Identifier: Apache-2.0

//! `orthoelim`: decide and solve Boolean equations `f(X) = 0`.
//!
//! Exit status: 0 consistent (or check passed), 1 inconsistent (or check
//! failed), 2 error.

mod problem;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use orthoelim::random::random_function;
use orthoelim::solver::consecutive_split;
use orthoelim::{
    brute_consistency, eliminate_blocks, extract_solution, is_in_class, Algebra, AlgebraElement,
    BoolFunction, Budget, OnError, OrthonormalSet, PhiPolicy,
};
use problem::Problem;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[derive(Parser)]
#[command(
    name = "orthoelim",
    version,
    about = "Boolean equation solver by orthonormal expansion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Minterm,
    Ladder,
}

impl From<Policy> for PhiPolicy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::Minterm => PhiPolicy::Minterm,
            Policy::Ladder => PhiPolicy::Ladder,
        }
    }
}

#[derive(clap::Args)]
struct SolveOpts {
    /// Atom count of the algebra, overriding the problem file.
    #[arg(long = "algebra", value_name = "K")]
    algebra: Option<usize>,
    /// Consecutive block size, overriding any split in the problem file.
    #[arg(long, value_name = "B")]
    block_size: Option<usize>,
    #[arg(long, value_enum, default_value = "minterm")]
    phi_policy: Policy,
}

#[derive(Subcommand)]
enum Command {
    /// Decide f = 0 and print a model when consistent.
    Solve {
        problem: PathBuf,
        #[command(flatten)]
        opts: SolveOpts,
        /// Print the per-stage elimination report.
        #[arg(long)]
        trace: bool,
        /// Evaluate f at the model in FILE instead of solving.
        #[arg(long, value_name = "FILE")]
        check_model: Option<PathBuf>,
    },
    /// Check that an ON-set file describes an orthonormal set.
    CheckOn {
        onset: PathBuf,
        #[arg(long = "algebra", value_name = "K", default_value_t = 1)]
        algebra: usize,
    },
    /// Print the coefficient intervals of f in an ON set.
    Expand {
        problem: PathBuf,
        /// ON-set file, overriding the problem file's `onset` line.
        #[arg(long, value_name = "FILE")]
        onset: Option<PathBuf>,
        #[arg(long = "algebra", value_name = "K")]
        algebra: Option<usize>,
    },
    /// Compare the solver with brute force on problem files or random
    /// instances.
    Verify {
        /// Problem files, or directories searched for `.eq` and `.cnf` files.
        paths: Vec<PathBuf>,
        #[command(flatten)]
        opts: SolveOpts,
        /// Also check this many random instances generated from the seed.
        #[arg(long, value_name = "N")]
        seed: Option<u64>,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

fn split_for(
    f: &BoolFunction,
    file_split: Option<&Vec<Vec<usize>>>,
    opts: &SolveOpts,
) -> Vec<Vec<usize>> {
    match (opts.block_size, file_split) {
        (None, Some(s)) => s.clone(),
        (b, _) => consecutive_split(f.arity(), b.unwrap_or(4)),
    }
}

fn format_model(names: &[String], z: &[AlgebraElement]) -> String {
    let pairs: Vec<String> = names
        .iter()
        .zip(z)
        .map(|(n, v)| format!("{n}={v}"))
        .collect();
    format!("model: {}", pairs.join(" ")).trim_end().to_string()
}

fn cmd_solve(
    path: &Path,
    opts: &SolveOpts,
    trace: bool,
    check_model: Option<&Path>,
) -> Result<ExitCode> {
    let p = problem::load(path, opts.algebra)?;
    if let Some(model) = check_model {
        let z = problem::load_model(model, &p)?;
        let v = p.function.evaluate(&z)?;
        if v.is_zero() {
            println!("MODEL OK");
            return Ok(ExitCode::from(0));
        }
        println!("MODEL REJECTED: f = {v}");
        return Ok(ExitCode::from(1));
    }
    let split = split_for(&p.function, p.split.as_ref(), opts);
    let t = eliminate_blocks(&p.function, &split, opts.phi_policy.into())?;
    if !t.is_consistent() {
        println!("INCONSISTENT");
    } else {
        let z = extract_solution(&t)?
            .to_tuple()
            .ok_or_else(|| anyhow!("partial model"))?;
        println!("CONSISTENT");
        println!("{}", format_model(&p.names, &z));
    }
    if trace {
        print!("{}", t.report(&p.names));
    }
    Ok(ExitCode::from(if t.is_consistent() { 0 } else { 1 }))
}

fn cmd_check_on(path: &Path, atoms: usize) -> Result<ExitCode> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    match OrthonormalSet::parse(&text, Algebra::new(atoms)?) {
        Ok(phi) => {
            println!("ON of order {}", phi.order());
            print!("{}", phi.to_text());
            Ok(ExitCode::from(0))
        }
        Err(e @ OnError::Format(_)) => Err(e.into()),
        Err(e) => {
            println!("NOT ON: {e}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_expand(path: &Path, onset: Option<&Path>, atoms: Option<usize>) -> Result<ExitCode> {
    let p = problem::load(path, atoms)?;
    let on_path = onset
        .map(Path::to_path_buf)
        .or(p.onset.clone())
        .ok_or_else(|| anyhow!("no ON set given; use --onset or an `onset` line"))?;
    let text = std::fs::read_to_string(&on_path)
        .with_context(|| format!("reading {}", on_path.display()))?;
    let phi = OrthonormalSet::parse(&text, p.algebra)?;
    if phi.arity() != p.function.arity() {
        bail!(
            "ON set has {} variables, the equation has {}",
            phi.arity(),
            p.function.arity()
        );
    }
    let cm = is_in_class(&p.function, &phi);
    println!("ON of order {}", phi.order());
    for (i, iv) in cm.intervals.iter().enumerate() {
        let mark = if iv.is_nonempty() { "" } else { "  (empty)" };
        println!("M{}: [{}, {}]{mark}", i + 1, iv.low, iv.high);
    }
    match &cm.constants {
        Some(c) => {
            let list: Vec<String> = c.iter().map(ToString::to_string).collect();
            println!("IN CLASS: constants ({})", list.join(", "));
            let product = c.iter().fold(p.algebra.one(), |acc, a| acc & a.clone());
            println!("product of constants: {product}");
        }
        None => println!(
            "NOT IN CLASS: member {} has an empty interval",
            cm.first_violation().map_or(0, |i| i + 1)
        ),
    }
    Ok(ExitCode::from(0))
}

fn collect_problem_files(paths: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut found: Vec<PathBuf> = std::fs::read_dir(p)?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.extension().is_some_and(|e| e == "eq" || e == "cnf"))
                .collect();
            found.sort();
            out.extend(found);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// Solver and oracle verdicts, with the solver's model checked.
fn compare(f: &BoolFunction, split: &[Vec<usize>], policy: PhiPolicy) -> Result<(bool, bool)> {
    let t = eliminate_blocks(f, split, policy)?;
    let solver = t.is_consistent();
    if solver {
        let z = extract_solution(&t)?
            .to_tuple()
            .ok_or_else(|| anyhow!("partial model"))?;
        if !f.evaluate(&z)?.is_zero() {
            bail!("solver model does not satisfy the equation");
        }
    }
    let oracle = brute_consistency(f, Budget::default())?.consistent;
    Ok((solver, oracle))
}

fn verdict(b: bool) -> &'static str {
    if b {
        "CONSISTENT"
    } else {
        "INCONSISTENT"
    }
}

fn report_line(label: &str, outcome: Result<(bool, bool)>) -> bool {
    match outcome {
        Ok((s, o)) => {
            let tag = if s == o { "agree" } else { "DISAGREE" };
            println!("{label}: solver={} oracle={} {tag}", verdict(s), verdict(o));
            s == o
        }
        Err(e) => {
            println!("{label}: error: {e:#}");
            false
        }
    }
}

fn cmd_verify(
    paths: &[PathBuf],
    opts: &SolveOpts,
    seed: Option<u64>,
    count: usize,
) -> Result<ExitCode> {
    let files = collect_problem_files(paths)?;
    if files.is_empty() && seed.is_none() {
        bail!("nothing to verify; give problem files or --seed");
    }
    let (mut agree, mut total) = (0, 0);
    for path in &files {
        let outcome = problem::load(path, opts.algebra).and_then(|p: Problem| {
            let split = split_for(&p.function, p.split.as_ref(), opts);
            compare(&p.function, &split, opts.phi_policy.into())
        });
        agree += report_line(&path.display().to_string(), outcome) as usize;
        total += 1;
    }
    if let Some(seed) = seed {
        let algebra = Algebra::new(opts.algebra.unwrap_or(1))?;
        let max_n = (24 / algebra.atoms().max(1)).clamp(1, 10);
        let mut rng = StdRng::seed_from_u64(seed);
        for i in 0..count {
            let n = rng.random_range(1..=max_n);
            let mut f = random_function(&mut rng, algebra, n);
            for _ in 0..rng.random_range(0..=n) {
                f = f.join(&random_function(&mut rng, algebra, n));
            }
            let split = consecutive_split(n, opts.block_size.unwrap_or(4));
            let outcome = compare(&f, &split, opts.phi_policy.into());
            agree += report_line(&format!("random #{i} (n={n})"), outcome) as usize;
            total += 1;
        }
    }
    println!("agree: {agree}/{total}");
    Ok(ExitCode::from(if agree == total { 0 } else { 1 }))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            problem,
            opts,
            trace,
            check_model,
        } => cmd_solve(&problem, &opts, trace, check_model.as_deref()),
        Command::CheckOn { onset, algebra } => cmd_check_on(&onset, algebra),
        Command::Expand {
            problem,
            onset,
            algebra,
        } => cmd_expand(&problem, onset.as_deref(), algebra),
        Command::Verify {
            paths,
            opts,
            seed,
            count,
        } => cmd_verify(&paths, &opts, seed, count),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
