//! The vertebrate mitochondrial code table with its crystal labels, as
//! published, in publication row order (left column, then right column of
//! each printed row).
//!
//! Spins and weights are stored as twice their value. `copy` is the
//! printed multiplicity superscript distinguishing irreps with equal
//! `(J_H, J_V)`; `0` marks the unique `(3/2, 3/2)` irrep, which carries none.
//! The standard-code column differs from the mitochondrial one exactly at
//! UGA, AUA, AGG and AGA.

use super::AminoAcid;
use super::AminoAcid::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub codon: &'static str,
    pub aa_vmc: AminoAcid,
    pub aa_suc: AminoAcid,
    pub j_h2: i32,
    pub j_v2: i32,
    pub m_h2: i32,
    pub m_v2: i32,
    pub copy: u8,
}

#[allow(clippy::too_many_arguments)]
const fn row(
    codon: &'static str,
    aa_vmc: AminoAcid,
    aa_suc: AminoAcid,
    j_h2: i32,
    j_v2: i32,
    m_h2: i32,
    m_v2: i32,
    copy: u8,
) -> GoldenRow {
    GoldenRow {
        codon,
        aa_vmc,
        aa_suc,
        j_h2,
        j_v2,
        m_h2,
        m_v2,
        copy,
    }
}

pub const TABLE: [GoldenRow; 64] = [
    row("CCC", Pro, Pro, 3, 3, 3, 3, 0),
    row("UCC", Ser, Ser, 3, 3, 1, 3, 0),
    row("CCU", Pro, Pro, 1, 3, 1, 3, 1),
    row("UCU", Ser, Ser, 1, 3, -1, 3, 1),
    row("CCG", Pro, Pro, 3, 1, 3, 1, 1),
    row("UCG", Ser, Ser, 3, 1, 1, 1, 1),
    row("CCA", Pro, Pro, 1, 1, 1, 1, 1),
    row("UCA", Ser, Ser, 1, 1, -1, 1, 1),
    row("CUC", Leu, Leu, 1, 3, 1, 3, 2),
    row("UUC", Phe, Phe, 3, 3, -1, 3, 0),
    row("CUU", Leu, Leu, 1, 3, -1, 3, 2),
    row("UUU", Phe, Phe, 3, 3, -3, 3, 0),
    row("CUG", Leu, Leu, 1, 1, 1, 1, 3),
    row("UUG", Leu, Leu, 3, 1, -1, 1, 1),
    row("CUA", Leu, Leu, 1, 1, -1, 1, 3),
    row("UUA", Leu, Leu, 3, 1, -3, 1, 1),
    row("CGC", Arg, Arg, 3, 1, 3, 1, 2),
    row("UGC", Cys, Cys, 3, 1, 1, 1, 2),
    row("CGU", Arg, Arg, 1, 1, 1, 1, 2),
    row("UGU", Cys, Cys, 1, 1, -1, 1, 2),
    row("CGG", Arg, Arg, 3, 1, 3, -1, 2),
    row("UGG", Trp, Trp, 3, 1, 1, -1, 2),
    row("CGA", Arg, Arg, 1, 1, 1, -1, 2),
    row("UGA", Trp, Ter, 1, 1, -1, -1, 2),
    row("CAC", His, His, 1, 1, 1, 1, 4),
    row("UAC", Tyr, Tyr, 3, 1, -1, 1, 2),
    row("CAU", His, His, 1, 1, -1, 1, 4),
    row("UAU", Tyr, Tyr, 3, 1, -3, 1, 2),
    row("CAG", Gln, Gln, 1, 1, 1, -1, 4),
    row("UAG", Ter, Ter, 3, 1, -1, -1, 2),
    row("CAA", Gln, Gln, 1, 1, -1, -1, 4),
    row("UAA", Ter, Ter, 3, 1, -3, -1, 2),
    row("GCC", Ala, Ala, 3, 3, 3, 1, 0),
    row("ACC", Thr, Thr, 3, 3, 1, 1, 0),
    row("GCU", Ala, Ala, 1, 3, 1, 1, 1),
    row("ACU", Thr, Thr, 1, 3, -1, 1, 1),
    row("GCG", Ala, Ala, 3, 1, 3, -1, 1),
    row("ACG", Thr, Thr, 3, 1, 1, -1, 1),
    row("GCA", Ala, Ala, 1, 1, 1, -1, 1),
    row("ACA", Thr, Thr, 1, 1, -1, -1, 1),
    row("GUC", Val, Val, 1, 3, 1, 1, 2),
    row("AUC", Ile, Ile, 3, 3, -1, 1, 0),
    row("GUU", Val, Val, 1, 3, -1, 1, 2),
    row("AUU", Ile, Ile, 3, 3, -3, 1, 0),
    row("GUG", Val, Val, 1, 1, 1, -1, 3),
    row("AUG", Met, Met, 3, 1, -1, -1, 1),
    row("GUA", Val, Val, 1, 1, -1, -1, 3),
    row("AUA", Met, Ile, 3, 1, -3, -1, 1),
    row("GGC", Gly, Gly, 3, 3, 3, -1, 0),
    row("AGC", Ser, Ser, 3, 3, 1, -1, 0),
    row("GGU", Gly, Gly, 1, 3, 1, -1, 1),
    row("AGU", Ser, Ser, 1, 3, -1, -1, 1),
    row("GGG", Gly, Gly, 3, 3, 3, -3, 0),
    row("AGG", Ter, Arg, 3, 3, 1, -3, 0),
    row("GGA", Gly, Gly, 1, 3, 1, -3, 1),
    row("AGA", Ter, Arg, 1, 3, -1, -3, 1),
    row("GAC", Asp, Asp, 1, 3, 1, -1, 2),
    row("AAC", Asn, Asn, 3, 3, -1, -1, 0),
    row("GAU", Asp, Asp, 1, 3, -1, -1, 2),
    row("AAU", Asn, Asn, 3, 3, -3, -1, 0),
    row("GAG", Glu, Glu, 1, 3, 1, -3, 2),
    row("AAG", Lys, Lys, 3, 3, -1, -3, 0),
    row("GAA", Glu, Glu, 1, 3, -1, -3, 2),
    row("AAA", Lys, Lys, 3, 3, -3, -3, 0),
];
