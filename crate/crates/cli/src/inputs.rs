use std::fmt;
use std::ops::RangeInclusive;
use std::path::Path;

use anyhow::{Context, Result};
use hindman_core::colorings::{delta2_coloring, four_coloring, three_coloring, Constant, Parity};
use hindman_core::solver::parse_integer_set;
use hindman_core::{Coloring, EnumeratedFunction, LimitApproximation};

use crate::{Scheme, SchemeArgs};

/// Bad flag combinations that clap cannot express; mapped to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn load_enum(path: &Path) -> Result<EnumeratedFunction> {
    read(path)?
        .parse()
        .with_context(|| format!("invalid enumerated function in {}", path.display()))
}

pub fn load_approx(path: &Path) -> Result<LimitApproximation> {
    read(path)?
        .parse()
        .with_context(|| format!("invalid limit approximation in {}", path.display()))
}

pub fn load_set(path: &Path) -> Result<Vec<u64>> {
    parse_integer_set(&read(path)?)
        .with_context(|| format!("invalid integer set in {}", path.display()))
}

/// `A..B`, both ends inclusive, `1 <= A <= B`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<u64>> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| usage(format!("range must look like A..B, got {text:?}")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| usage(format!("invalid range bound {s:?}")))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    if a == 0 || a > b {
        return Err(usage(format!(
            "range must satisfy 1 <= A <= B, got {a}..{b}"
        )));
    }
    Ok(a..=b)
}

pub fn check_base(base: u64) -> Result<()> {
    if base == 3 || base == 7 {
        Ok(())
    } else {
        Err(usage(format!("--base must be 3 or 7, got {base}")))
    }
}

pub fn build_coloring(args: &SchemeArgs) -> Result<Box<dyn Coloring>> {
    let need_enum = || {
        args.enum_path
            .as_deref()
            .ok_or_else(|| usage("this scheme needs --enum PATH"))
            .and_then(load_enum)
    };
    Ok(match args.scheme {
        Scheme::Parity => Box::new(Parity),
        Scheme::Const => Box::new(Constant),
        Scheme::Four => Box::new(four_coloring(need_enum()?)),
        Scheme::Three => Box::new(three_coloring(need_enum()?)),
        Scheme::Delta2 => {
            let path = args
                .approx_path
                .as_deref()
                .ok_or_else(|| usage("the delta2 scheme needs --approx PATH"))?;
            Box::new(delta2_coloring(load_approx(path)?))
        }
    })
}

/// Comma-joined display of a set, `{}` when empty.
pub fn braces<T: fmt::Display>(xs: impl IntoIterator<Item = T>) -> String {
    let items: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}
