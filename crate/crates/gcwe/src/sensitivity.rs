use std::collections::BTreeSet;

use anyhow::{bail, Context};
use clap::Args;
use serde_json::{json, Value};

use gcwe_core::pipeline::{census, census_line, expected_census, run_pipeline};
use gcwe_core::{Codon, HalfInt, PipelineConfig};

use crate::config::{set, SetError};
use crate::style::{print_json, Format, Style};

const MAX_ASSIGNMENTS: usize = 4096;

#[derive(Debug, Args)]
pub struct SensitivityArgs {
    /// `name=lo..hi` (integer steps) or `name=v1,v2,...`; repeat to sweep
    /// several keys jointly.
    #[arg(long, required = true)]
    vary: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn values(spec: &str) -> anyhow::Result<Vec<String>> {
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: HalfInt = lo.parse().with_context(|| format!("bad range start `{lo}`"))?;
        let hi: HalfInt = hi.parse().with_context(|| format!("bad range end `{hi}`"))?;
        if hi < lo {
            bail!("empty range `{spec}`");
        }
        let mut out = Vec::new();
        let mut v = lo;
        while v <= hi {
            out.push(v.to_string());
            v += HalfInt::ONE;
        }
        return Ok(out);
    }
    let out: Vec<String> = spec
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if out.is_empty() {
        bail!("no values in `{spec}`");
    }
    Ok(out)
}

fn parse_vary(base: &PipelineConfig, items: &[String]) -> anyhow::Result<Vec<(String, Vec<String>)>> {
    let mut out: Vec<(String, Vec<String>)> = Vec::new();
    for item in items {
        let (name, spec) = item
            .split_once('=')
            .with_context(|| format!("expected name=values, got `{item}`"))?;
        let name = name.trim().to_string();
        if out.iter().any(|(n, _)| *n == name) {
            bail!("`{name}` is varied twice");
        }
        let vals = values(spec.trim())?;
        for v in &vals {
            let mut probe = base.clone();
            match set(&mut probe, &name, v) {
                Ok(()) => {}
                Err(SetError::Unknown) => bail!("unknown key `{name}`"),
                Err(SetError::Bad(reason)) => bail!("bad value `{v}` for `{name}`: {reason}"),
            }
        }
        out.push((name, vals));
    }
    Ok(out)
}

fn assignments(vary: &[(String, Vec<String>)]) -> Vec<Vec<(String, String)>> {
    let mut out: Vec<Vec<(String, String)>> = vec![Vec::new()];
    for (name, vals) in vary {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                vals.iter().map(move |v| {
                    let mut a = prefix.clone();
                    a.push((name.clone(), v.clone()));
                    a
                })
            })
            .collect();
    }
    out
}

struct Row {
    assignment: Vec<(String, String)>,
    outcome: Result<(std::collections::BTreeMap<usize, usize>, usize), String>,
}

pub fn run(args: &SensitivityArgs, base: &PipelineConfig, style: Style) -> anyhow::Result<u8> {
    let vary = parse_vary(base, &args.vary)?;
    let count: usize = vary.iter().map(|(_, v)| v.len()).product();
    if count > MAX_ASSIGNMENTS {
        bail!("{count} assignments exceed the limit of {MAX_ASSIGNMENTS}");
    }
    let baseline = run_pipeline(base).context("baseline pipeline failed")?;
    let bulk: BTreeSet<Vec<Codon>> = baseline.blocks().into_iter().filter(|b| b.len() > 1).collect();
    let expected = expected_census();

    let rows: Vec<Row> = assignments(&vary)
        .into_iter()
        .map(|assignment| {
            let mut cfg = base.clone();
            for (k, v) in &assignment {
                let _ = set(&mut cfg, k, v);
            }
            let outcome = run_pipeline(&cfg).map_err(|e| e.to_string()).map(|p| {
                let blocks: BTreeSet<Vec<Codon>> = p.blocks().into_iter().collect();
                (census(&p), bulk.iter().filter(|b| blocks.contains(*b)).count())
            });
            Row { assignment, outcome }
        })
        .collect();

    let label = |a: &[(String, String)]| a.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
    match args.format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let assignment: serde_json::Map<String, Value> =
                        r.assignment.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
                    match &r.outcome {
                        Ok((c, kept)) => json!({
                            "assignment": assignment,
                            "census": c.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
                            "census_line": census_line(c),
                            "census_matches": *c == expected,
                            "bulk_kept": kept,
                            "error": null,
                        }),
                        Err(e) => json!({
                            "assignment": assignment,
                            "census": null,
                            "census_line": null,
                            "census_matches": false,
                            "bulk_kept": null,
                            "error": e,
                        }),
                    }
                })
                .collect();
            print_json(&json!({
                "baseline": census_line(&census(&baseline)),
                "bulk_total": bulk.len(),
                "rows": rows,
            }))?;
        }
        Format::Text => {
            println!(
                "baseline: {} ({} merged multiplets)",
                census_line(&census(&baseline)),
                bulk.len()
            );
            let width = rows.iter().map(|r| label(&r.assignment).len()).max().unwrap_or(0);
            for r in &rows {
                let name = label(&r.assignment);
                match &r.outcome {
                    Ok((c, kept)) => {
                        let ok = *c == expected;
                        println!(
                            "{name:<width$}  {:<36} bulk {kept}/{}  {}",
                            census_line(c),
                            bulk.len(),
                            style.verdict(ok, if ok { "match" } else { "differs" })
                        );
                    }
                    Err(e) => println!("{name:<width$}  {}", style.bad(&format!("error: {e}"))),
                }
            }
        }
    }
    Ok(0)
}
