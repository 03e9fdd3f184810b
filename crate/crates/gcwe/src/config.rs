//! Flat `key = value` pipeline configuration.
//!
//! ```text
//! # comments and blank lines are ignored
//! operator_order = state-first      # or operator-first
//! a1 = 1                            # transition V rank, 1st position
//! a2 = 2
//! a3 = 0
//! b_list = CA,GA,CG,UG,UA,UU,AU,AA,GG,AG
//! b_in = 2                          # 3rd-position transversion H rank on b_list
//! b_out = 1
//! c_same = 1                        # C→A H rank, comparison codons in one irrep
//! c_diff = 2
//! d1 = 1                            # transversion V rank by position
//! d2 = 2
//! d3 = 1
//! merge_policy = protect-weakest    # or c-or-a
//! level2_policy = tva-and-tvc       # or any-of, all-of-three
//! level4_merges = off
//! level5_pairs = same-family        # or same-kind, all
//! ser_reading = census              # or literal
//! tie_order = ACUG                  # third letters, weakest first
//! max_size = 6
//! ```

use std::path::Path;

use gcwe_core::{HalfInt, Nucleotide, PipelineConfig};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: bad value `{value}` for `{key}`: {reason}")]
    Value {
        line: usize,
        key: String,
        value: String,
        reason: String,
    },
}

pub fn load(path: &Path) -> Result<PipelineConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<PipelineConfig, ConfigError> {
    let mut cfg = PipelineConfig::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or(ConfigError::Syntax { line: i + 1 })?;
        set(&mut cfg, key.trim(), value.trim()).map_err(|e| match e {
            SetError::Unknown => ConfigError::UnknownKey {
                line: i + 1,
                key: key.trim().into(),
            },
            SetError::Bad(reason) => ConfigError::Value {
                line: i + 1,
                key: key.trim().into(),
                value: value.trim().into(),
                reason,
            },
        })?;
    }
    Ok(cfg)
}

pub enum SetError {
    Unknown,
    Bad(String),
}

fn bad(e: impl std::fmt::Display) -> SetError {
    SetError::Bad(e.to_string())
}

fn rank(value: &str) -> Result<HalfInt, SetError> {
    let r: HalfInt = value.parse().map_err(bad)?;
    if r.is_negative() {
        return Err(SetError::Bad("ranks are non-negative".into()));
    }
    Ok(r)
}

fn switch(value: &str) -> Result<bool, SetError> {
    match value.to_ascii_lowercase().as_str() {
        "on" | "true" | "yes" | "1" => Ok(true),
        "off" | "false" | "no" | "0" => Ok(false),
        _ => Err(SetError::Bad("expected on or off".into())),
    }
}

fn nucleotides(value: &str) -> Result<Vec<Nucleotide>, SetError> {
    value.chars().map(|c| Nucleotide::from_char(c).map_err(bad)).collect()
}

/// Sets one key. Shared by the config file and `sensitivity --vary`.
pub fn set(cfg: &mut PipelineConfig, key: &str, value: &str) -> Result<(), SetError> {
    match key {
        "operator_order" | "order" => cfg.order = value.parse().map_err(bad)?,
        "a1" => cfg.rules.a[0] = rank(value)?,
        "a2" => cfg.rules.a[1] = rank(value)?,
        "a3" => cfg.rules.a[2] = rank(value)?,
        "d1" => cfg.rules.d[0] = rank(value)?,
        "d2" => cfg.rules.d[1] = rank(value)?,
        "d3" => cfg.rules.d[2] = rank(value)?,
        "b_in" => cfg.rules.b_in = rank(value)?,
        "b_out" => cfg.rules.b_out = rank(value)?,
        "c_same" => cfg.rules.c_same = rank(value)?,
        "c_diff" => cfg.rules.c_diff = rank(value)?,
        "b_list" => {
            let mut list = Vec::new();
            for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                match nucleotides(item)?.as_slice() {
                    [x, z] => list.push([*x, *z]),
                    _ => return Err(SetError::Bad(format!("`{item}` is not a dinucleotide"))),
                }
            }
            cfg.rules.b_list = list;
        }
        "merge_policy" => cfg.merge_policy = value.parse().map_err(bad)?,
        "level2_policy" => cfg.level2_policy = value.parse().map_err(bad)?,
        "level4_merges" | "level4" => cfg.level4_merges = switch(value)?,
        "level5_pairs" => cfg.level5_pairs = value.parse().map_err(bad)?,
        "ser_reading" => cfg.ser_reading = value.parse().map_err(bad)?,
        "tie_order" => {
            let order = nucleotides(value)?;
            let mut sorted = order.clone();
            sorted.sort();
            if sorted != Nucleotide::ALL {
                return Err(SetError::Bad("expected each of C, U, G, A once".into()));
            }
            cfg.tie_order = [order[0], order[1], order[2], order[3]];
        }
        "max_size" => cfg.max_size = value.parse().map_err(bad)?,
        _ => return Err(SetError::Unknown),
    }
    Ok(())
}

/// The configuration as `(key, value)` pairs in documented order.
pub fn entries(cfg: &PipelineConfig) -> Vec<(&'static str, String)> {
    let r = &cfg.rules;
    vec![
        ("operator_order", cfg.order.to_string()),
        ("a1", r.a[0].to_string()),
        ("a2", r.a[1].to_string()),
        ("a3", r.a[2].to_string()),
        ("b_list", r.b_list_string()),
        ("b_in", r.b_in.to_string()),
        ("b_out", r.b_out.to_string()),
        ("c_same", r.c_same.to_string()),
        ("c_diff", r.c_diff.to_string()),
        ("d1", r.d[0].to_string()),
        ("d2", r.d[1].to_string()),
        ("d3", r.d[2].to_string()),
        ("merge_policy", cfg.merge_policy.to_string()),
        ("level2_policy", cfg.level2_policy.to_string()),
        ("level4_merges", if cfg.level4_merges { "on" } else { "off" }.into()),
        ("level5_pairs", cfg.level5_pairs.to_string()),
        ("ser_reading", cfg.ser_reading.to_string()),
        ("tie_order", cfg.tie_order.iter().map(|n| n.as_char()).collect()),
        ("max_size", cfg.max_size.to_string()),
    ]
}
