use std::collections::BTreeMap;

use clap::Args;
use serde_json::{json, Value};

use gcwe_core::genetic_code::AminoAcidMap;
use gcwe_core::pipeline::{
    census, census_line, compare_to_code, expected_census, pattern_of, run_level, ser_partner, ser_sextet_matches,
    CodeComparison, MergeEvent, SerReading, Verdict, LEVELS,
};
use gcwe_core::{CodeKind, Codon, MultipletPartition, PipelineConfig};

use crate::config::entries;
use crate::style::{print_json, Format, Style};

#[derive(Debug, Args)]
pub struct PipelineArgs {
    /// Print every proposal, not only accepted merges.
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

pub struct Run {
    pub levels: Vec<(Vec<MergeEvent>, BTreeMap<usize, usize>)>,
    pub partition: MultipletPartition,
}

pub fn execute(cfg: &PipelineConfig) -> anyhow::Result<Run> {
    let mut partition = MultipletPartition::singletons();
    let mut levels = Vec::new();
    for level in 1..=LEVELS {
        let (next, events) = run_level(&partition, level, cfg)?;
        levels.push((events, census(&next)));
        partition = next;
    }
    Ok(Run { levels, partition })
}

fn codons(cs: &[Codon]) -> Vec<String> {
    cs.iter().map(Codon::to_string).collect()
}

fn census_json(c: &BTreeMap<usize, usize>) -> Value {
    let obj: serde_json::Map<String, Value> = c.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    Value::Object(obj)
}

fn event_json(e: &MergeEvent) -> Value {
    json!({
        "level": e.level,
        "source": e.source.to_string(),
        "target": e.target.to_string(),
        "specs": e.specs.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "operators": e.operators.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
        "order": e.order.as_str(),
        "allowed": e.allowed,
        "accepted": e.accepted,
        "verdict": e.verdict.as_str(),
    })
}

fn amino_acids(map: &AminoAcidMap, cs: &[Codon]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for &c in cs {
        let name = map.translate(c).to_string();
        if !out.contains(&name) {
            out.push(name);
        }
    }
    out
}

fn comparison_json(c: &CodeComparison) -> Value {
    json!({
        "code": c.code.as_str(),
        "include_ter": c.include_ter,
        "exact": c.exact.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
        "broken": c.broken.iter().map(|b| json!({
            "multiplet": pattern_of(&b.codons),
            "pieces": b.pieces.iter().map(|(aa, cs)| json!({
                "amino_acid": aa.to_string(),
                "codons": pattern_of(cs),
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "spread": c.spread.iter().map(|s| json!({
            "amino_acid": s.amino_acid.to_string(),
            "parts": s.parts.iter().map(|p| pattern_of(p)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn comparisons(partition: &MultipletPartition) -> Vec<CodeComparison> {
    let mut out = Vec::new();
    for code in [CodeKind::Vmc, CodeKind::Suc] {
        for include_ter in [true, false] {
            out.push(compare_to_code(partition, code, include_ter));
        }
    }
    out
}

fn ser_note(cfg: &PipelineConfig, partition: &MultipletPartition) -> (String, bool, Option<String>) {
    let mut expected: Vec<Codon> = ser_partner(cfg.ser_reading).to_vec();
    let ucn: Vec<Codon> = gcwe_core::Nucleotide::ALL
        .iter()
        .map(|&n| Codon::new(gcwe_core::Nucleotide::U, gcwe_core::Nucleotide::C, n))
        .collect();
    expected.extend(ucn);
    expected.sort_unstable();
    let ok = ser_sextet_matches(partition, cfg.ser_reading);
    let warning = (cfg.ser_reading == SerReading::Literal).then(|| {
        let agr = ser_partner(SerReading::Literal)[0];
        format!(
            "ser_reading=literal expects {} but {} belongs to {}",
            pattern_of(&expected),
            pattern_of(&ser_partner(SerReading::Literal)),
            partition.multiplet_of(agr).pattern()
        )
    });
    (pattern_of(&expected), ok, warning)
}

pub fn run(args: &PipelineArgs, cfg: &PipelineConfig, style: Style) -> anyhow::Result<u8> {
    let result = execute(cfg)?;
    let partition = &result.partition;
    let got = census(partition);
    let expected = expected_census();
    let matches = got == expected;
    let vmc = AminoAcidMap::new(CodeKind::Vmc);
    let suc = AminoAcidMap::new(CodeKind::Suc);
    let comps = comparisons(partition);
    let (ser_expected, ser_ok, ser_warning) = ser_note(cfg, partition);

    match args.format {
        Format::Json => {
            let levels: Vec<Value> = result
                .levels
                .iter()
                .enumerate()
                .map(|(i, (events, c))| {
                    json!({
                        "level": i + 1,
                        "proposals": events.len(),
                        "accepted": events.iter().filter(|e| e.accepted).count(),
                        "events": events.iter().map(event_json).collect::<Vec<_>>(),
                        "census": census_json(c),
                    })
                })
                .collect();
            let multiplets: Vec<Value> = partition
                .multiplets()
                .iter()
                .map(|m| {
                    json!({
                        "pattern": m.pattern(),
                        "codons": codons(m.codons()),
                        "size": m.len(),
                        "formed_at_level": m.formed_at_level,
                        "vmc": amino_acids(&vmc, m.codons()),
                        "suc": amino_acids(&suc, m.codons()),
                    })
                })
                .collect();
            let config: serde_json::Map<String, Value> = entries(cfg)
                .into_iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect();
            print_json(&json!({
                "config": config,
                "levels": levels,
                "multiplets": multiplets,
                "census": census_json(&got),
                "census_line": census_line(&got),
                "expected_census": census_json(&expected),
                "census_matches": matches,
                "ser": {
                    "reading": cfg.ser_reading.as_str(),
                    "expected": ser_expected,
                    "matches": ser_ok,
                    "warning": ser_warning,
                },
                "comparisons": comps.iter().map(comparison_json).collect::<Vec<_>>(),
            }))?;
        }
        Format::Text => {
            let line: Vec<String> = entries(cfg).into_iter().map(|(k, v)| format!("{k}={v}")).collect();
            println!("config: {}", line.join(" "));
            for (i, (events, c)) in result.levels.iter().enumerate() {
                let accepted = events.iter().filter(|e| e.accepted).count();
                println!(
                    "level {}: {} proposals, {} accepted, {}",
                    i + 1,
                    events.len(),
                    accepted,
                    census_line(c)
                );
                let mut rejected: BTreeMap<&str, usize> = BTreeMap::new();
                for e in events {
                    if !e.accepted {
                        *rejected.entry(e.verdict.as_str()).or_default() += 1;
                    }
                    if args.trace || e.accepted {
                        let ok = e.verdict == Verdict::Accepted;
                        let text = e.to_string();
                        let (head, verdict) = text.rsplit_once(' ').unwrap_or((&text, ""));
                        println!("  {head} {}", style.verdict(ok, verdict));
                    }
                }
                if !rejected.is_empty() {
                    let r: Vec<String> = rejected.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    println!("  rejected: {}", r.join(" "));
                }
            }
            println!("multiplets: {}", partition.multiplets().len());
            for m in partition.multiplets() {
                println!(
                    "  {:<10} {}  level {}  VMC {}  SUC {}",
                    m.pattern(),
                    m.len(),
                    m.formed_at_level,
                    amino_acids(&vmc, m.codons()).join("/"),
                    amino_acids(&suc, m.codons()).join("/")
                );
            }
            println!("census: {}", census_line(&got));
            if matches {
                println!("census {}", style.good("matches"));
            } else {
                println!("census {}: expected {}", style.bad("differs"), census_line(&expected));
                let sizes: std::collections::BTreeSet<usize> = got.keys().chain(expected.keys()).copied().collect();
                for s in sizes {
                    let (g, e) = (
                        got.get(&s).copied().unwrap_or(0),
                        expected.get(&s).copied().unwrap_or(0),
                    );
                    if g != e {
                        println!("  size {s}: got {g}, expected {e}");
                    }
                }
            }
            println!(
                "ser sextet ({}): {} {}",
                cfg.ser_reading,
                ser_expected,
                style.verdict(ser_ok, if ser_ok { "found" } else { "missing" })
            );
            if let Some(w) = ser_warning {
                println!("{}", style.note(&format!("warning: {w}")));
            }
            for c in &comps {
                let ter = if c.include_ter { "with Ter" } else { "without Ter" };
                println!(
                    "{} {}: {} exact classes, {} broken multiplets",
                    c.code,
                    ter,
                    c.exact.len(),
                    c.broken.len()
                );
                for b in &c.broken {
                    let pieces: Vec<String> = b
                        .pieces
                        .iter()
                        .map(|(aa, cs)| format!("{aa} {}", pattern_of(cs)))
                        .collect();
                    println!("  broken {}: {}", pattern_of(&b.codons), pieces.join(" | "));
                }
                for s in &c.spread {
                    let parts: Vec<String> = s.parts.iter().map(|p| pattern_of(p)).collect();
                    println!("  spread {}: {}", s.amino_acid, parts.join(" | "));
                }
            }
        }
    }
    Ok(if matches { 0 } else { 1 })
}
