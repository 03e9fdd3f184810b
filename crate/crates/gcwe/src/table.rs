use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use gcwe_core::genetic_code::{build_table, TableReport, TableRow};

use crate::style::{print_json, Style};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: TableFormat,
    /// Exit 1 unless every row matches the published labels.
    #[arg(long)]
    check: bool,
}

pub const CSV_HEADER: &str = "codon,aa_vmc,aa_suc,JH,JV,mH,mV,copyH,copyV";

fn fields(r: &TableRow) -> [String; 9] {
    let q = r.label.quad;
    [
        r.codon.to_string(),
        r.aa_vmc.to_string(),
        r.aa_suc.to_string(),
        q.j_h.to_string(),
        q.j_v.to_string(),
        q.m_h.to_string(),
        q.m_v.to_string(),
        r.copy_h.to_string(),
        r.copy_v.to_string(),
    ]
}

fn to_json(report: &TableReport) -> Value {
    let names: Vec<&str> = CSV_HEADER.split(',').collect();
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|r| {
            let f = fields(r);
            let mut obj = serde_json::Map::new();
            for (name, value) in names.iter().zip(f) {
                let v = if name.starts_with("copy") {
                    json!(value.parse::<u8>().unwrap_or(0))
                } else {
                    json!(value)
                };
                obj.insert((*name).to_string(), v);
            }
            Value::Object(obj)
        })
        .collect();
    let mismatches: Vec<Value> = report
        .mismatches
        .iter()
        .map(|m| {
            json!({
                "codon": m.codon.to_string(),
                "computed": m.computed.to_string(),
                "published": m.published.to_string(),
            })
        })
        .collect();
    json!({
        "rows": rows,
        "mismatches": mismatches,
        "partition_matches": report.partition_matches,
    })
}

pub fn run(args: &TableArgs, style: Style) -> anyhow::Result<u8> {
    let report = build_table();
    match args.format {
        TableFormat::Json => print_json(&to_json(&report))?,
        TableFormat::Csv => {
            println!("{CSV_HEADER}");
            for r in &report.rows {
                println!("{}", fields(r).join(","));
            }
        }
        TableFormat::Text => {
            println!("codon  VMC  SUC  (JH,JV,mH,mV)          copy");
            for r in &report.rows {
                let bad = report.mismatches.iter().any(|m| m.codon == r.codon);
                let mark = if bad { style.bad("  mismatch") } else { String::new() };
                println!(
                    "{}    {}  {}  {:<22} {},{}{}",
                    r.codon,
                    r.aa_vmc,
                    r.aa_suc,
                    r.label.quad.to_string(),
                    r.copy_h,
                    r.copy_v,
                    mark
                );
            }
            for m in &report.mismatches {
                println!(
                    "mismatch {}: computed {} published {}",
                    m.codon, m.computed, m.published
                );
            }
            let ok = report.is_clean();
            println!(
                "rows=64 mismatches={} copy partition {}",
                report.mismatches.len(),
                style.verdict(
                    report.partition_matches,
                    if report.partition_matches { "matches" } else { "differs" }
                )
            );
            if args.check {
                println!("check: {}", style.verdict(ok, if ok { "ok" } else { "failed" }));
            }
        }
    }
    Ok(if args.check && !report.is_clean() { 1 } else { 0 })
}
