use std::collections::BTreeSet;

use anyhow::Context;
use clap::Args;
use serde_json::{json, Value};

use gcwe_core::genetic_code::{codon_labels, frequency, AminoAcidMap, Position};
use gcwe_core::misread::{allowed, allowed_double};
use gcwe_core::pipeline::run_pipeline;
use gcwe_core::qlimit::{limit_checks, Direction, LimitKind, QValue};
use gcwe_core::tensor::couple;
use gcwe_core::{CodeKind, Codon, CouplingOrder, HalfInt, MisreadSpec, Nucleotide, PipelineConfig};

use crate::style::{print_json, Format, Style};

fn position(s: &str) -> Result<u8, String> {
    match s.parse::<u8>() {
        Ok(p @ 1..=3) => Ok(p),
        _ => Err(format!("`{s}` is not a codon position (1, 2 or 3)")),
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Source codon, e.g. CCC.
    codon: Codon,
    #[arg(long, value_parser = position)]
    pos: u8,
    /// Nucleotide read at `--pos`.
    #[arg(long)]
    to: Nucleotide,
    /// Second misreading, applied to the intermediate codon.
    #[arg(long, value_parser = position, requires = "second_to")]
    second_pos: Option<u8>,
    #[arg(long, requires = "second_pos")]
    second_to: Option<Nucleotide>,
    /// Overrides the configured coupling order.
    #[arg(long)]
    order: Option<CouplingOrder>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn spec_for(codon: Codon, pos: u8, to: Nucleotide) -> anyhow::Result<MisreadSpec> {
    let p = Position::new(pos)?;
    Ok(MisreadSpec::new(p, codon.at(p), to)?)
}

pub fn check(args: &CheckArgs, cfg: &PipelineConfig, style: Style) -> anyhow::Result<u8> {
    let order = args.order.unwrap_or(cfg.order);
    let first = spec_for(args.codon, args.pos, args.to)?;
    let source = codon_labels(args.codon).quad;
    let value = match (args.second_pos, args.second_to) {
        (Some(pos), Some(to)) => {
            let middle = gcwe_core::misread::substitute(args.codon, first)?;
            let second = spec_for(middle, pos, to)?;
            let r = allowed_double(args.codon, first, second, &cfg.rules, order)?;
            json!({
                "codon": r.source.to_string(),
                "source": source.to_string(),
                "order": order.as_str(),
                "specs": r.specs.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "operators": r.operators.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
                "virtual_codon": r.virtual_codon.to_string(),
                "virtual_labels": r.virtual_labels.to_string(),
                "predicted": r.predicted.to_string(),
                "target_codon": r.target_codon.to_string(),
                "target": r.target.to_string(),
                "allowed": r.allowed,
            })
        }
        _ => {
            let r = allowed(args.codon, first, &cfg.rules, order)?;
            json!({
                "codon": r.source.to_string(),
                "source": source.to_string(),
                "order": order.as_str(),
                "specs": [r.spec.to_string()],
                "operators": [r.operator.to_string()],
                "predicted": r.predicted.to_string(),
                "target_codon": r.target_codon.to_string(),
                "target": r.target.to_string(),
                "allowed": r.allowed,
            })
        }
    };
    match args.format {
        Format::Json => print_json(&value)?,
        Format::Text => {
            let s = |k: &str| value[k].as_str().unwrap_or_default().to_string();
            let list = |k: &str| {
                value[k]
                    .as_array()
                    .map(|a| a.iter().filter_map(Value::as_str).collect::<Vec<_>>().join(" then "))
                    .unwrap_or_default()
            };
            println!("misreading: {} {}", s("codon"), list("specs"));
            println!("operator:   {}", list("operators"));
            println!("order:      {}", s("order"));
            println!("source:     {} {}", s("codon"), s("source"));
            if value.get("virtual_codon").is_some() {
                println!("virtual:    {} {}", s("virtual_codon"), s("virtual_labels"));
            }
            println!("predicted:  {}", s("predicted"));
            println!("target:     {} {}", s("target_codon"), s("target"));
            let ok = value["allowed"].as_bool().unwrap_or(false);
            println!(
                "verdict:    {}",
                style.verdict(ok, if ok { "allowed" } else { "forbidden" })
            );
        }
    }
    Ok(0)
}

#[derive(Debug, Args)]
pub struct CoupleArgs {
    /// State spin, e.g. 3/2.
    #[arg(allow_hyphen_values = true)]
    j1: HalfInt,
    #[arg(allow_hyphen_values = true)]
    m1: HalfInt,
    /// Operator rank.
    #[arg(allow_hyphen_values = true)]
    j2: HalfInt,
    #[arg(allow_hyphen_values = true)]
    m2: HalfInt,
    #[arg(long)]
    order: Option<CouplingOrder>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

pub fn couple_cmd(args: &CoupleArgs, cfg: &PipelineConfig) -> anyhow::Result<u8> {
    let order = args.order.unwrap_or(cfg.order);
    let (j, m) = couple(args.j1, args.m1, args.j2, args.m2, order)?;
    match args.format {
        Format::Json => print_json(&json!({ "J": j.to_string(), "m": m.to_string(), "order": order.as_str() }))?,
        Format::Text => println!("J={j} m={m}"),
    }
    Ok(0)
}

#[derive(Debug, Args)]
pub struct QcheckArgs {
    /// Deformation parameter, 0 < q < 1.
    #[arg(long)]
    q: f64,
    /// Largest q-number argument.
    #[arg(long, default_value_t = 4)]
    max_x: u32,
    /// Largest spin for coefficient and Casimir rows.
    #[arg(long, default_value = "2")]
    max_j: HalfInt,
    /// Exit 1 if any relative deviation exceeds this.
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn kind_name(kind: LimitKind) -> &'static str {
    match kind {
        LimitKind::QNumber => "qnumber",
        LimitKind::Coefficient(Direction::Raise) => "f_plus",
        LimitKind::Coefficient(Direction::Lower) => "f_minus",
        LimitKind::Casimir => "casimir",
    }
}

pub fn qcheck(args: &QcheckArgs, style: Style) -> anyhow::Result<u8> {
    let q = QValue::new(args.q)?;
    let report = limit_checks(q, args.max_x, args.max_j);
    let max = report.max_deviation();
    let ok = args.tolerance.is_none_or(|t| report.within(t));
    match args.format {
        Format::Json => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "kind": kind_name(r.kind),
                        "x": r.x.to_string(),
                        "m": r.m.map(|m| m.to_string()),
                        "value": r.value,
                        "leading": r.leading,
                        "deviation": r.deviation,
                    })
                })
                .collect();
            print_json(&json!({
                "q": q.get(),
                "rows": rows,
                "max_deviation": max,
                "tolerance": args.tolerance,
                "within": args.tolerance.map(|_| ok),
            }))?;
        }
        Format::Text => {
            println!("q = {:e}", q.get());
            println!(
                "{:<8} {:>4} {:>5} {:>24} {:>24} {:>24}",
                "kind", "x", "m", "value", "leading", "deviation"
            );
            for r in &report.rows {
                let m = r.m.map(|m| m.to_string()).unwrap_or_else(|| "-".into());
                let dev = format!("{:e}", r.deviation);
                let dev = match args.tolerance {
                    Some(t) if r.deviation > t => style.bad(&dev),
                    _ => dev,
                };
                println!(
                    "{:<8} {:>4} {:>5} {:>24} {:>24} {:>24}",
                    kind_name(r.kind),
                    r.x.to_string(),
                    m,
                    format!("{:e}", r.value),
                    format!("{:e}", r.leading),
                    dev
                );
            }
            println!("max deviation: {max:e}");
            if let Some(t) = args.tolerance {
                println!(
                    "tolerance {t:e}: {}",
                    style.verdict(ok, if ok { "within" } else { "exceeded" })
                );
            }
        }
    }
    Ok(if ok { 0 } else { 1 })
}

#[derive(Debug, Args)]
pub struct FreqArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

pub fn freq(args: &FreqArgs, cfg: &PipelineConfig) -> anyhow::Result<u8> {
    let partition = run_pipeline(cfg).context("pipeline failed")?;
    let classes = AminoAcidMap::new(CodeKind::Suc).classes();
    let mut rows = Vec::new();
    for r in frequency::TABLE {
        let codons = classes.get(&r.amino_acid).cloned().unwrap_or_default();
        let mut blocks = BTreeSet::new();
        for &c in &codons {
            blocks.insert(partition.multiplet_of(c).codons().to_vec());
        }
        let mut sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        rows.push((r, codons.len(), sizes));
    }
    match args.format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(r, n, sizes)| {
                    json!({
                        "amino_acid": r.amino_acid.to_string(),
                        "relative_frequency": r.relative_frequency,
                        "codons": r.codons,
                        "standard_code_codons": n,
                        "multiplet_sizes": sizes,
                    })
                })
                .collect();
            print_json(&json!({ "rows": rows }))?;
        }
        Format::Text => {
            println!("aa  rf n code multiplets");
            for (r, n, sizes) in &rows {
                let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
                println!(
                    "{:<3} {:>2} {} {:>4} {}",
                    r.amino_acid,
                    r.relative_frequency,
                    r.codons,
                    n,
                    sizes.join("+")
                );
            }
        }
    }
    Ok(0)
}
