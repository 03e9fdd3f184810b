mod common;

use std::collections::BTreeSet;

use gcwe_core::genetic_code::frequency;
use gcwe_core::genetic_code::{build_table, codon_labels, codon_paths, AminoAcidMap, Position};
use gcwe_core::{AminoAcid, CodeKind, Codon, HalfInt, Nucleotide};

#[test]
fn labels_agree_with_signature_oracle() {
    for codon in Codon::all() {
        let q = codon_labels(codon).quad;
        let got = (q.j_h.twice(), q.j_v.twice(), q.m_h.twice(), q.m_v.twice());
        assert_eq!(got, common::codon_labels(&codon.to_string()), "{codon}");
    }
}

#[test]
fn weights_are_symmetric() {
    let (mut mh, mut mv) = (HalfInt::ZERO, HalfInt::ZERO);
    for codon in Codon::all() {
        let q = codon_labels(codon).quad;
        mh += q.m_h;
        mv += q.m_v;
        assert!(q.m_h.abs() <= q.j_h && q.m_v.abs() <= q.j_v);
    }
    assert_eq!((mh, mv), (HalfInt::ZERO, HalfInt::ZERO));
}

#[test]
fn labels_with_copies_are_injective() {
    let mut seen = BTreeSet::new();
    for codon in Codon::all() {
        let l = codon_labels(codon);
        assert!(seen.insert((l.copy_h.clone(), l.copy_v.clone(), l.quad.m_h, l.quad.m_v)));
    }
    let paths: BTreeSet<_> = Codon::all().map(codon_paths).collect();
    assert_eq!(paths.len(), 64);
}

#[test]
fn third_letter_pyrimidine_swap() {
    for codon in Codon::all().filter(|c| c.at(Position::THIRD) == Nucleotide::C) {
        let a = codon_labels(codon).quad;
        let b = codon_labels(codon.with(Position::THIRD, Nucleotide::U)).quad;
        assert_eq!(a.m_h - b.m_h, HalfInt::ONE);
        assert_eq!(a.m_v, b.m_v);
    }
}

#[test]
fn table_is_clean() {
    let report = build_table();
    assert!(report.is_clean());
    assert_eq!(report.rows.len(), 64);
    assert_eq!(report.rows[0].codon.to_string(), "CCC");
    let copies: BTreeSet<(HalfInt, HalfInt, u8, u8)> = report
        .rows
        .iter()
        .map(|r| (r.label.quad.j_h, r.label.quad.j_v, r.copy_h, r.copy_v))
        .collect();
    assert_eq!(copies.len(), 9);
}

#[test]
fn codes() {
    let vmc = AminoAcidMap::new(CodeKind::Vmc);
    let suc = AminoAcidMap::new(CodeKind::Suc);
    let c = |s: &str| s.parse::<Codon>().unwrap();
    assert_eq!(vmc.translate(c("UGA")), AminoAcid::Trp);
    assert_eq!(suc.translate(c("UGA")), AminoAcid::Ter);
    assert_eq!(vmc.translate(c("AGA")), AminoAcid::Ter);
    assert_eq!(suc.translate(c("AGA")), AminoAcid::Arg);
    assert_eq!(vmc.translate(c("AUA")), AminoAcid::Met);
    assert_eq!(suc.translate(c("AUA")), AminoAcid::Ile);
    assert_eq!(suc.classes().len(), 21);
}

#[test]
fn frequency_table() {
    let leu = frequency::lookup(AminoAcid::Leu).unwrap();
    assert_eq!((leu.relative_frequency, leu.codons), (91, 6));
    assert!(frequency::lookup(AminoAcid::Ter).is_none());
    let suc = AminoAcidMap::new(CodeKind::Suc).classes();
    let differing: Vec<AminoAcid> = frequency::TABLE
        .iter()
        .filter(|r| suc[&r.amino_acid].len() as u32 != r.codons)
        .map(|r| r.amino_acid)
        .collect();
    assert_eq!(differing, [AminoAcid::Tyr]);
}
