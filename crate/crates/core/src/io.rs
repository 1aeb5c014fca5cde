//! File formats, run reports and CSV output.

use std::path::Path;
use std::time::Instant;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::lambda::LambdaTuple;
use crate::scalar::{fmt_f64, parse_rat};
use crate::tree::{RootedTree, TreeFile};
use crate::weights::{rat_to_value, value_to_rat, WeightFile, WeightFn};
use crate::{Error, Result};

pub const SCHEMA: &str = "hedge-iep/1";
pub const SEED_ENV: &str = "HEDGE_IEP_SEED";

/// Seed from the environment, or 0.
pub fn default_seed() -> u64 {
    std::env::var(SEED_ENV).ok().and_then(|s| s.parse().ok()).unwrap_or(0)
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_json<T: Serialize>(path: &Path, v: &T) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(v)? + "\n")?;
    Ok(())
}

pub fn read_tree(path: &Path) -> Result<RootedTree> {
    RootedTree::from_file(&read_json::<TreeFile>(path)?)
}

pub fn read_weights(path: &Path) -> Result<WeightFn<BigRational>> {
    read_json::<WeightFile>(path)?.to_rational()
}

/// `{"alpha1": …, "alpha2": …, "beta2": …, "beta3": …, "beta4": …}` with
/// numbers or `"p/q"` strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LambdaFile {
    pub alpha1: Value,
    pub alpha2: Value,
    pub beta2: Value,
    pub beta3: Value,
    pub beta4: Value,
}

impl LambdaFile {
    pub fn from_lambda(lam: &LambdaTuple<BigRational>) -> Self {
        LambdaFile {
            alpha1: rat_to_value(&lam.alpha1),
            alpha2: rat_to_value(&lam.alpha2),
            beta2: rat_to_value(&lam.beta2),
            beta3: rat_to_value(&lam.beta3),
            beta4: rat_to_value(&lam.beta4),
        }
    }

    pub fn to_lambda(&self) -> Result<LambdaTuple<BigRational>> {
        LambdaTuple::new([
            value_to_rat(&self.alpha1)?,
            value_to_rat(&self.alpha2)?,
            value_to_rat(&self.beta2)?,
            value_to_rat(&self.beta3)?,
            value_to_rat(&self.beta4)?,
        ])
    }
}

/// Parses `a,b,c,d,e` (rationals or decimals) in the order `α1, α2, β2, β3, β4`.
pub fn parse_lambda_list(s: &str) -> Result<LambdaTuple<BigRational>> {
    let v = parse_rat_list(s)?;
    let arr: [BigRational; 5] = v
        .try_into()
        .map_err(|v: Vec<BigRational>| Error::WrongArity { expected: 5, found: v.len() })?;
    LambdaTuple::new(arr)
}

pub fn parse_rat_list(s: &str) -> Result<Vec<BigRational>> {
    s.split(',')
        .map(|p| parse_rat(p.trim()).ok_or_else(|| Error::Parse(format!("cannot read number {p:?}"))))
        .collect()
}

/// Parses `alpha1=…,alpha2=…,…` in any order.
pub fn parse_assignment(s: &str) -> Result<LambdaTuple<BigRational>> {
    let mut vals: [Option<BigRational>; 5] = Default::default();
    for part in s.split(',') {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected name=value, got {part:?}")))?;
        let k = k.trim().replace('α', "alpha").replace('β', "beta");
        let i = crate::lambda::NAMES
            .iter()
            .position(|n| *n == k)
            .ok_or_else(|| Error::Parse(format!("unknown name {k:?}")))?;
        vals[i] = Some(parse_rat(v.trim()).ok_or_else(|| Error::Parse(format!("cannot read number {v:?}")))?);
    }
    let missing = vals.iter().filter(|v| v.is_none()).count();
    if missing > 0 {
        return Err(Error::WrongArity { expected: 5, found: 5 - missing });
    }
    LambdaTuple::new(vals.map(Option::unwrap))
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// JSON report printed by every subcommand.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: String,
    pub seed: u64,
    #[serde(rename = "inputsDigest")]
    pub inputs_digest: String,
    pub outputs: Value,
    pub checks: Vec<Check>,
    #[serde(rename = "wallTimeSeconds")]
    pub wall_time_s: f64,
}

/// Accumulates checks and outputs while a command runs.
pub struct Reporter {
    command: String,
    seed: u64,
    hasher: Sha256,
    outputs: serde_json::Map<String, Value>,
    checks: Vec<Check>,
    start: Instant,
}

impl Reporter {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        let command = command.into();
        let mut hasher = Sha256::new();
        hasher.update(command.as_bytes());
        hasher.update(seed.to_le_bytes());
        Reporter { command, seed, hasher, outputs: Default::default(), checks: vec![], start: Instant::now() }
    }

    pub fn input_bytes(&mut self, bytes: &[u8]) {
        self.hasher.update(bytes);
    }

    pub fn input_file(&mut self, path: &Path) {
        if let Ok(b) = std::fs::read(path) {
            self.hasher.update(&b);
        }
    }

    pub fn output(&mut self, key: &str, v: impl Serialize) {
        self.outputs.insert(key.into(), serde_json::to_value(v).unwrap_or(Value::Null));
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
        passed
    }

    pub fn finish(self) -> RunReport {
        RunReport {
            schema: SCHEMA,
            command: self.command,
            seed: self.seed,
            inputs_digest: format!("{:x}", self.hasher.finalize()),
            outputs: Value::Object(self.outputs),
            checks: self.checks,
            wall_time_s: self.start.elapsed().as_secs_f64(),
        }
    }
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Floats as 12-significant-digit strings for JSON output.
pub fn num(v: f64) -> Value {
    Value::String(fmt_f64(v))
}

pub fn nums(v: &[f64]) -> Value {
    Value::Array(v.iter().map(|&x| num(x)).collect())
}

pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::Io(e.to_string()))?;
    w.write_record(header).map_err(|e| Error::Io(e.to_string()))?;
    for r in rows {
        w.write_record(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv(path: &Path) -> Result<(Vec<String>, Vec<Vec<String>>)> {
    let mut r = csv::Reader::from_path(path).map_err(|e| Error::Io(e.to_string()))?;
    let header = r.headers().map_err(|e| Error::Io(e.to_string()))?.iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.map(|r| r.iter().map(String::from).collect()).map_err(|e| Error::Io(e.to_string())))
        .collect::<Result<_>>()?;
    Ok((header, rows))
}
