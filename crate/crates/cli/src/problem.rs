// SPDX-License-Identifier: Apache-2.0

//! Problem files.
//!
//! ```text
//! # comment to end of line
//! algebra 1            # atom count k, default 1
//! vars x y z           # variable names, or a count: `vars 3` for x1..x3
//! split y z | x        # optional block split
//! onset phi.on         # optional ON-set file, relative to this file
//! f = x + x y'z + x y
//!     + x'z'           # lines without a keyword continue the expression
//! ```
//!
//! A file ending in `.cnf` or whose first non-comment line starts with
//! `p cnf` is read as DIMACS over the two-element algebra.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use orthoelim::{parse_named, Algebra, BoolFunction, Cnf};

#[derive(Debug, Clone)]
pub struct Problem {
    pub algebra: Algebra,
    pub names: Vec<String>,
    pub function: BoolFunction,
    pub split: Option<Vec<Vec<usize>>>,
    pub onset: Option<PathBuf>,
}

fn is_dimacs(path: &Path, text: &str) -> bool {
    path.extension().is_some_and(|e| e == "cnf")
        || text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('c'))
            .is_some_and(|l| l.starts_with("p cnf"))
}

fn indexed_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Reads a problem; `atoms` overrides the file's `algebra` line.
pub fn load(path: &Path, atoms: Option<usize>) -> Result<Problem> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if is_dimacs(path, &text) {
        if atoms.is_some_and(|k| k != 1) {
            bail!("DIMACS input is over the two-element algebra; --algebra must be 1");
        }
        let cnf = Cnf::parse_dimacs(&text)?;
        let function = cnf.to_function()?;
        return Ok(Problem {
            algebra: Algebra::two(),
            names: indexed_names(cnf.num_vars),
            function,
            split: None,
            onset: None,
        });
    }
    parse_problem(&text, path.parent().unwrap_or(Path::new(".")), atoms)
}

pub fn parse_problem(text: &str, base: &Path, atoms: Option<usize>) -> Result<Problem> {
    let mut k = 1;
    let mut names: Option<Vec<String>> = None;
    let mut split_line: Option<(usize, String)> = None;
    let mut onset = None;
    let mut expr: Option<String> = None;
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let at = || format!("line {}", no + 1);
        match head {
            "algebra" => {
                k = rest
                    .parse()
                    .map_err(|_| anyhow!("{}: bad atom count `{rest}`", at()))?
            }
            "vars" => {
                names = Some(match rest.parse::<usize>() {
                    Ok(n) => indexed_names(n),
                    Err(_) => rest.split_whitespace().map(String::from).collect(),
                })
            }
            "split" => split_line = Some((no + 1, rest.to_string())),
            "onset" => onset = Some(base.join(rest)),
            _ if line.starts_with("f") && line[1..].trim_start().starts_with('=') => {
                let body = line[1..].trim_start()[1..].to_string();
                expr = Some(body);
            }
            _ => match &mut expr {
                Some(e) => {
                    e.push(' ');
                    e.push_str(line);
                }
                None => bail!("{}: expected a keyword, got `{line}`", at()),
            },
        }
    }
    let names = names.ok_or_else(|| anyhow!("missing `vars` line"))?;
    let expr = expr.ok_or_else(|| anyhow!("missing `f = ...` line"))?;
    let algebra = Algebra::new(atoms.unwrap_or(k))?;
    let function = parse_named(&expr, &names, algebra).context("in the equation")?;
    let split = match split_line {
        Some((no, s)) => Some(parse_split(&s, &names).with_context(|| format!("line {no}"))?),
        None => None,
    };
    Ok(Problem {
        algebra,
        names,
        function,
        split,
        onset,
    })
}

fn parse_split(text: &str, names: &[String]) -> Result<Vec<Vec<usize>>> {
    text.split('|')
        .map(|block| {
            block
                .split_whitespace()
                .map(|v| {
                    names
                        .iter()
                        .position(|n| n == v)
                        .ok_or_else(|| anyhow!("unknown variable `{v}` in split"))
                })
                .collect()
        })
        .collect()
}

/// Reads `name=value` pairs, ignoring a leading `model:` tag and the
/// decision line printed by `solve`.
pub fn load_model(path: &Path, problem: &Problem) -> Result<Vec<orthoelim::AlgebraElement>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut values = vec![None; problem.names.len()];
    for tok in text.split_whitespace() {
        let Some((name, value)) = tok.split_once('=') else {
            continue;
        };
        let i = problem
            .names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| anyhow!("model names unknown variable `{name}`"))?;
        values[i] = Some(problem.algebra.parse_element(value)?);
    }
    values
        .into_iter()
        .zip(&problem.names)
        .map(|(v, n)| v.ok_or_else(|| anyhow!("model lacks a value for `{n}`")))
        .collect()
}
