use gcwe_core::genetic_code::{codon_labels, Position};
use gcwe_core::misread::{allowed, allowed_double, operator_for, substitute, we_apply, MisreadError};
use gcwe_core::{Codon, CouplingOrder, CrystalTensorOp, HalfInt, LabelQuad, MisreadSpec, Nucleotide, RankRules};
use Nucleotide::*;

fn c(s: &str) -> Codon {
    s.parse().unwrap()
}

fn spec(pos: u8, from: Nucleotide, to: Nucleotide) -> MisreadSpec {
    MisreadSpec::at(pos, from, to).unwrap()
}

fn allowed_sources(pos: u8, from: Nucleotide, to: Nucleotide) -> Vec<String> {
    let rules = RankRules::default();
    Codon::all()
        .filter(|x| x.at(Position::new(pos).unwrap()) == from)
        .filter(|&x| {
            allowed(x, spec(pos, from, to), &rules, CouplingOrder::StateFirst)
                .unwrap()
                .allowed
        })
        .map(|x| x.to_string())
        .collect()
}

#[test]
fn we_apply_examples() {
    let op = CrystalTensorOp::from_twice(2, -2, 0, 0).unwrap();
    let ccc = codon_labels(c("CCC")).quad;
    assert_eq!(
        we_apply(ccc, op, CouplingOrder::StateFirst).unwrap(),
        codon_labels(c("CCU")).quad
    );
    let ucc = codon_labels(c("UCC")).quad;
    assert_eq!(
        we_apply(ucc, op, CouplingOrder::StateFirst).unwrap(),
        LabelQuad::from_twice(1, 3, -1, 3)
    );
    for x in Codon::all() {
        let q = codon_labels(x).quad;
        assert_eq!(
            we_apply(q, CrystalTensorOp::IDENTITY, CouplingOrder::OperatorFirst).unwrap(),
            q
        );
    }
}

#[test]
fn substitution_examples() {
    assert_eq!(substitute(c("CCC"), spec(3, C, U)).unwrap(), c("CCU"));
    assert_eq!(substitute(c("CUG"), spec(1, C, U)).unwrap(), c("UUG"));
    assert_eq!(substitute(c("UCA"), spec(1, U, A)).unwrap(), c("ACA"));
    assert!(matches!(
        substitute(c("UCA"), spec(2, U, A)),
        Err(MisreadError::Mismatch { .. })
    ));
}

#[test]
fn third_position_transversion_ranks() {
    let r = RankRules::default();
    let b2 = ["CA", "GA", "CG", "UG", "UA", "UU", "AU", "AA", "GG", "AG"];
    for x in Codon::all().filter(|x| x.at(Position::THIRD) == C) {
        let prefix = &x.to_string()[..2];
        let b = if b2.contains(&prefix) { 2 } else { 1 };
        let op = operator_for(spec(3, C, G), x, &r).unwrap();
        assert_eq!(
            op,
            CrystalTensorOp::new(HalfInt::from_int(b), HalfInt::ZERO, HalfInt::ONE, -HalfInt::ONE).unwrap()
        );
        let op = operator_for(spec(3, C, A), x, &r).unwrap();
        assert_eq!(op.j_h, HalfInt::from_int(b));
        let u = x.with(Position::THIRD, U);
        let op = operator_for(spec(3, U, A), u, &r).unwrap();
        assert_eq!(op.j_h, HalfInt::from_int(b - 1));
    }
}

#[test]
fn first_position_c_to_a_rank_follows_irrep_copy() {
    let r = RankRules::default();
    for x in Codon::all().filter(|x| x.at(Position::FIRST) == C) {
        let same = codon_labels(x).same_irrep(&codon_labels(x.with(Position::FIRST, U)));
        let op = operator_for(spec(1, C, A), x, &r).unwrap();
        assert_eq!(op.j_h, HalfInt::from_int(if same { 1 } else { 2 }), "{x}");
    }
}

#[test]
fn level_three_events() {
    assert_eq!(allowed_sources(1, C, U), ["CCU", "CCA", "CUU", "CUA", "CGU", "CAU"]);
    assert_eq!(allowed_sources(1, G, A), ["GCU", "GUU", "GGU", "GAU"]);
    assert_eq!(allowed_sources(1, C, G), ["CCG", "CCA", "CUG", "CGG", "CGA", "CAG"]);
    assert_eq!(allowed_sources(1, U, A), ["UCG", "UGG"]);
    assert_eq!(allowed_sources(1, C, A), ["CCA", "CUG", "CGA", "CAG"]);
}

#[test]
fn level_four_events() {
    assert_eq!(allowed_sources(2, C, U), ["CCC", "CCU", "UCU", "GCC", "GCU", "ACU"]);
    assert_eq!(allowed_sources(2, C, G), ["CCC", "CCU", "UCC", "GCC", "GCU", "ACC"]);
    assert_eq!(allowed_sources(2, C, A), ["CCC", "GCC"]);
    assert!(allowed_sources(2, G, A).is_empty());
    assert!(allowed_sources(2, U, A).is_empty());
}

#[test]
fn level_five_events() {
    let rules = RankRules::default();
    let mut found = Vec::new();
    for x in Codon::all() {
        for first in MisreadSpec::applicable(x, Position::FIRST) {
            for second in MisreadSpec::applicable(x, Position::SECOND) {
                let r = allowed_double(x, first, second, &rules, CouplingOrder::StateFirst).unwrap();
                if r.allowed {
                    found.push(format!("{x}>{}", r.target_codon));
                }
            }
        }
    }
    assert_eq!(
        found,
        [
            "CCC>GUC", "CCC>GGC", "CCC>GAC", "CCU>UUU", "CCU>GUU", "CCU>GGU", "CCU>AUU", "UCC>AGC", "UCU>AUU",
            "GCU>AUU"
        ]
    );
}

#[test]
fn leu_example_is_partial() {
    let rules = RankRules::default();
    let s = spec(1, C, U);
    assert!(allowed(c("CUA"), s, &rules, CouplingOrder::StateFirst).unwrap().allowed);
    let r = allowed(c("CUG"), s, &rules, CouplingOrder::StateFirst).unwrap();
    assert!(!r.allowed);
    assert_eq!((r.predicted.j_h, r.predicted.m_h), (HalfInt::HALF, -HalfInt::HALF));
}

#[test]
fn operator_first_breaks_level_one() {
    let rules = RankRules::default();
    let failures = Codon::all()
        .filter(|x| x.at(Position::THIRD) == C)
        .filter(|&x| {
            !allowed(x, spec(3, C, U), &rules, CouplingOrder::OperatorFirst)
                .unwrap()
                .allowed
        })
        .count();
    assert!(failures > 0);
}

#[test]
fn identity_double() {
    let rules = RankRules::default();
    for x in Codon::all() {
        let r = allowed_double(
            x,
            MisreadSpec::identity(Position::FIRST, x.at(Position::FIRST)),
            MisreadSpec::identity(Position::SECOND, x.at(Position::SECOND)),
            &rules,
            CouplingOrder::StateFirst,
        )
        .unwrap();
        assert!(r.allowed);
        assert_eq!(r.predicted, codon_labels(x).quad);
    }
}
