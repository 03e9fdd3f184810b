//! Relative amino-acid usage frequencies (units of 10⁻³) and the printed
//! number of encoding codons, as published. Descriptive data only.
//!
//! The codon counts are reproduced verbatim, including Tyr = 4 (the
//! standard code assigns Tyr two codons), so they sum to 63.

use super::AminoAcid;
use super::AminoAcid::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrequencyRow {
    pub amino_acid: AminoAcid,
    /// Relative frequency ×10³.
    pub relative_frequency: u32,
    /// Printed codon count.
    pub codons: u32,
}

const fn f(amino_acid: AminoAcid, relative_frequency: u32, codons: u32) -> FrequencyRow {
    FrequencyRow {
        amino_acid,
        relative_frequency,
        codons,
    }
}

/// Rows in descending frequency order, as printed column by column.
pub const TABLE: [FrequencyRow; 20] = [
    f(Leu, 91, 6),
    f(Ala, 77, 4),
    f(Gly, 74, 4),
    f(Ser, 69, 6),
    f(Val, 66, 4),
    f(Glu, 62, 2),
    f(Thr, 59, 4),
    f(Lys, 59, 2),
    f(Ile, 53, 3),
    f(Asp, 52, 2),
    f(Arg, 51, 6),
    f(Pro, 51, 4),
    f(Asn, 43, 2),
    f(Gln, 41, 2),
    f(Phe, 40, 2),
    f(Tyr, 32, 4),
    f(Met, 24, 1),
    f(His, 23, 2),
    f(Cys, 20, 2),
    f(Trp, 14, 1),
];

pub fn lookup(amino_acid: AminoAcid) -> Option<&'static FrequencyRow> {
    TABLE.iter().find(|r| r.amino_acid == amino_acid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_distinct_amino_acids() {
        let mut seen = alloc::vec::Vec::new();
        for r in &TABLE {
            assert_ne!(r.amino_acid, Ter);
            assert!(!seen.contains(&r.amino_acid));
            seen.push(r.amino_acid);
        }
        assert_eq!(seen.len(), 20);
    }

    #[test]
    fn printed_counts() {
        assert_eq!(lookup(Leu), Some(&f(Leu, 91, 6)));
        assert_eq!(TABLE.iter().map(|r| r.codons).sum::<u32>(), 63);
        assert!(TABLE
            .windows(2)
            .all(|w| w[0].relative_frequency >= w[1].relative_frequency));
    }
}
