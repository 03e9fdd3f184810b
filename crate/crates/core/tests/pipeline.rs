use std::collections::BTreeMap;

use gcwe_core::genetic_code::normalize;
use gcwe_core::pipeline::{
    census, code_partition, compare_to_code, expected_census, run_level, run_pipeline, Level2Policy, Level5Pairs,
    MergePolicy, MultipletPartition, PipelineConfig, PipelineError, Verdict,
};
use gcwe_core::{AminoAcid, CodeKind, Codon, CouplingOrder};

fn c(s: &str) -> Codon {
    s.parse().unwrap()
}

fn levels(cfg: &PipelineConfig) -> Vec<MultipletPartition> {
    let mut out = vec![MultipletPartition::singletons()];
    for level in 1..=5 {
        let next = run_level(out.last().unwrap(), level, cfg).unwrap().0;
        out.push(next);
    }
    out
}

fn size_map(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    pairs.iter().copied().collect()
}

#[test]
fn invariants_at_every_level() {
    let cfg = PipelineConfig::default();
    let runs = levels(&cfg);
    for pair in runs.windows(2) {
        let (before, after) = (&pair[0], &pair[1]);
        assert!(after.is_valid());
        assert_eq!(census(after).iter().map(|(s, n)| s * n).sum::<usize>(), 64);
        assert!(after.multiplets().len() <= before.multiplets().len());
        for m in before.multiplets() {
            let first = m.codons()[0];
            assert!(
                m.codons().iter().all(|&x| after.same_multiplet(first, x)),
                "split {}",
                m.pattern()
            );
        }
        for m in after.multiplets() {
            let parts: std::collections::BTreeSet<_> =
                m.codons().iter().map(|&x| before.multiplet_of(x).codons()[0]).collect();
            assert!(parts.len() <= 2, "{} merges more than two multiplets", m.pattern());
        }
    }
}

#[test]
fn accepted_events_are_allowed_and_distinct() {
    let p = run_pipeline(&PipelineConfig::default()).unwrap();
    for level in 1..=5u8 {
        let mut seen = Vec::new();
        for e in p.events_at(level).filter(|e| e.accepted) {
            assert!(e.allowed);
            assert_eq!(e.verdict, Verdict::Accepted);
            assert!(!seen.contains(&e.source) && !seen.contains(&e.target));
            seen.extend([e.source, e.target]);
        }
    }
}

#[test]
fn deterministic() {
    let cfg = PipelineConfig::default();
    assert_eq!(run_pipeline(&cfg).unwrap(), run_pipeline(&cfg).unwrap());
}

#[test]
fn rejects_repeat_level() {
    let cfg = PipelineConfig::default();
    let p = run_level(&MultipletPartition::singletons(), 1, &cfg).unwrap().0;
    assert_eq!(
        run_level(&p, 1, &cfg).unwrap_err(),
        PipelineError::OutOfOrder {
            requested: 1,
            expected: 2
        }
    );
}

#[test]
fn level_three_resolution_reasons() {
    let p = run_pipeline(&PipelineConfig::default()).unwrap();
    let verdict = |s: &str, t: &str| {
        p.events_at(3)
            .find(|e| e.source == c(s) && e.target == c(t))
            .map(|e| e.verdict)
            .unwrap()
    };
    assert_eq!(verdict("CUA", "UUA"), Verdict::Accepted);
    assert_eq!(verdict("CUU", "UUU"), Verdict::TargetNotWeakest);
    assert_eq!(verdict("CGA", "AGA"), Verdict::Accepted);
    assert_eq!(verdict("CCA", "UCA"), Verdict::SizeLimit);
    assert_eq!(verdict("CUG", "UUG"), Verdict::NotAllowed);
}

#[test]
fn level_two_policies() {
    let quartets = |policy| {
        let cfg = PipelineConfig {
            level2_policy: policy,
            ..PipelineConfig::default()
        };
        let runs = levels(&cfg);
        census(&runs[2]).get(&4).copied().unwrap_or(0)
    };
    assert_eq!(quartets(Level2Policy::TvaAndTvc), 8);
    assert_eq!(quartets(Level2Policy::AllOfThree), 8);
    assert_eq!(quartets(Level2Policy::AnyOf), 10);
}

#[test]
fn level_four_merges_change_the_census() {
    let cfg = PipelineConfig {
        level4_merges: true,
        ..PipelineConfig::default()
    };
    let p = run_pipeline(&cfg).unwrap();
    assert!(p.events_at(4).any(|e| e.accepted));
    assert_ne!(census(&p), expected_census());
}

#[test]
fn level_five_pairing_rules() {
    let run = |pairs| {
        let cfg = PipelineConfig {
            level5_pairs: pairs,
            ..PipelineConfig::default()
        };
        run_pipeline(&cfg).unwrap()
    };
    let family = run(Level5Pairs::SameFamily);
    assert_eq!(family.multiplet_of(c("UCC")).pattern(), "UCN∪AGY");
    let all = run(Level5Pairs::All);
    assert_eq!(all.multiplet_of(c("CCC")).pattern(), "CCN∪GAY");
}

#[test]
fn c_or_a_policy_census() {
    let cfg = PipelineConfig {
        merge_policy: MergePolicy::COrA,
        ..PipelineConfig::default()
    };
    let p = run_pipeline(&cfg).unwrap();
    assert!(p.is_valid());
    assert!(p.log().iter().any(|e| e.verdict == Verdict::NotCOrA));
    assert_ne!(census(&p), expected_census());
}

#[test]
fn operator_first_runs() {
    let cfg = PipelineConfig {
        order: CouplingOrder::OperatorFirst,
        ..PipelineConfig::default()
    };
    let p = run_pipeline(&cfg).unwrap();
    assert!(p.is_valid());
    assert!(p.log().iter().all(|e| e.order == CouplingOrder::OperatorFirst));
    assert_ne!(census(&p), expected_census());
}

#[test]
fn comparison_with_standard_code() {
    let p = run_pipeline(&PipelineConfig::default()).unwrap();
    let cmp = compare_to_code(&p, CodeKind::Suc, true);
    let broken: Vec<String> = cmp
        .broken
        .iter()
        .map(|b| gcwe_core::pipeline::pattern_of(&b.codons))
        .collect();
    assert_eq!(broken, ["UGR", "AUR"]);
    assert!(cmp.spread.iter().any(|s| s.amino_acid == AminoAcid::Ile));
    assert!(cmp.spread.iter().any(|s| s.amino_acid == AminoAcid::Ter));
    let without = compare_to_code(&p, CodeKind::Suc, false);
    let broken: Vec<String> = without
        .broken
        .iter()
        .map(|b| gcwe_core::pipeline::pattern_of(&b.codons))
        .collect();
    assert_eq!(broken, ["AUR"]);
}

#[test]
fn comparison_with_mitochondrial_code() {
    let p = run_pipeline(&PipelineConfig::default()).unwrap();
    let cmp = compare_to_code(&p, CodeKind::Vmc, true);
    let broken: Vec<String> = cmp
        .broken
        .iter()
        .map(|b| gcwe_core::pipeline::pattern_of(&b.codons))
        .collect();
    assert_eq!(broken, ["CGN∪AGR"]);
    assert!(compare_to_code(&p, CodeKind::Vmc, false).broken.is_empty());
}

#[test]
fn code_partitions_are_clean() {
    for code in [CodeKind::Vmc, CodeKind::Suc] {
        let p = code_partition(code);
        for ter in [true, false] {
            assert!(compare_to_code(&p, code, ter).is_empty());
        }
    }
    assert_eq!(
        census(&code_partition(CodeKind::Vmc)),
        size_map(&[(6, 2), (4, 7), (2, 12)])
    );
}

#[test]
fn final_blocks() {
    let p = run_pipeline(&PipelineConfig::default()).unwrap();
    let sextets: Vec<String> = p
        .multiplets()
        .iter()
        .filter(|m| m.len() == 6)
        .map(|m| m.pattern())
        .collect();
    assert_eq!(sextets, ["CUN∪UUR", "CGN∪AGR", "UCN∪AGY"]);
    let blocks = normalize(p.blocks());
    assert_eq!(blocks.len(), 21);
}
