//! Nucleotides, codons and their crystal labels.
//!
//! A nucleotide is a state of the fundamental `(½, ½)` irrep of
//! `sl_H(2) ⊕ sl_V(2)`:
//!
//! | letter | `m_H` | `m_V` |
//! |--------|-------|-------|
//! | C      | +½    | +½    |
//! | U      | −½    | +½    |
//! | G      | +½    | −½    |
//! | A      | −½    | −½    |
//!
//! A codon is a word of three such states, i.e. a pair of length-3 paths,
//! one in `B(½)^⊗3` for each `sl(2)`.

pub mod frequency;
pub mod golden;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::disjoint_set::DisjointSet;
use crate::half_int::HalfInt;
use crate::tensor::{component_of, ComponentId, SignPath};

/// One of the four RNA bases. Ordered `C < U < G < A`, the order used by the
/// published table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Nucleotide {
    C,
    U,
    G,
    A,
}

impl Nucleotide {
    pub const ALL: [Nucleotide; 4] = [Nucleotide::C, Nucleotide::U, Nucleotide::G, Nucleotide::A];

    pub const fn weight_h(self) -> HalfInt {
        match self {
            Nucleotide::C | Nucleotide::G => HalfInt::from_twice(1),
            Nucleotide::U | Nucleotide::A => HalfInt::from_twice(-1),
        }
    }

    pub const fn weight_v(self) -> HalfInt {
        match self {
            Nucleotide::C | Nucleotide::U => HalfInt::from_twice(1),
            Nucleotide::G | Nucleotide::A => HalfInt::from_twice(-1),
        }
    }

    /// Pyrimidines C and U.
    pub const fn is_pyrimidine(self) -> bool {
        matches!(self, Nucleotide::C | Nucleotide::U)
    }

    pub const fn as_char(self) -> char {
        match self {
            Nucleotide::C => 'C',
            Nucleotide::U => 'U',
            Nucleotide::G => 'G',
            Nucleotide::A => 'A',
        }
    }

    /// Accepts `C U G A` in either case; `T` is read as `U`.
    pub fn from_char(c: char) -> Result<Self, CodeError> {
        match c.to_ascii_uppercase() {
            'C' => Ok(Nucleotide::C),
            'U' | 'T' => Ok(Nucleotide::U),
            'G' => Ok(Nucleotide::G),
            'A' => Ok(Nucleotide::A),
            _ => Err(CodeError::BadNucleotide(c)),
        }
    }

    const fn rank(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Nucleotide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Nucleotide {
    type Err = CodeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Nucleotide::from_char(c),
            _ => Err(CodeError::BadNucleotideText(s.into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("unknown nucleotide {0:?}")]
    BadNucleotide(char),
    #[error("`{0}` is not a single nucleotide")]
    BadNucleotideText(String),
    #[error("a codon has exactly 3 nucleotides, got `{0}`")]
    BadLength(String),
    #[error("codon position must be 1, 2 or 3, got {0}")]
    BadPosition(u8),
}

/// A position inside a codon, 1-based in reading order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position(u8);

impl Position {
    pub const FIRST: Position = Position(1);
    pub const SECOND: Position = Position(2);
    pub const THIRD: Position = Position(3);

    pub fn new(pos: u8) -> Result<Self, CodeError> {
        match pos {
            1..=3 => Ok(Position(pos)),
            _ => Err(CodeError::BadPosition(pos)),
        }
    }

    pub const fn get(self) -> u8 {
        self.0
    }

    const fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Three nucleotides in reading order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codon([Nucleotide; 3]);

impl Codon {
    pub const fn new(n1: Nucleotide, n2: Nucleotide, n3: Nucleotide) -> Self {
        Codon([n1, n2, n3])
    }

    pub const fn nucleotides(self) -> [Nucleotide; 3] {
        self.0
    }

    pub const fn at(self, pos: Position) -> Nucleotide {
        self.0[pos.index()]
    }

    /// The codon with `pos` replaced by `n`.
    pub const fn with(self, pos: Position, n: Nucleotide) -> Codon {
        let mut out = self.0;
        out[pos.index()] = n;
        Codon(out)
    }

    /// `16·n₁ + 4·n₂ + n₃` in `C, U, G, A` order.
    pub const fn index(self) -> usize {
        16 * self.0[0].rank() + 4 * self.0[1].rank() + self.0[2].rank()
    }

    pub const fn from_index(i: usize) -> Codon {
        let n = Nucleotide::ALL;
        Codon([n[(i / 16) % 4], n[(i / 4) % 4], n[i % 4]])
    }

    /// All 64 codons in [`Codon::index`] order.
    pub fn all() -> impl Iterator<Item = Codon> {
        (0..64).map(Codon::from_index)
    }

    /// All 64 codons in the row order of the published table.
    pub fn table_order() -> impl Iterator<Item = Codon> {
        golden::TABLE.iter().map(|r| r.codon.parse().expect("golden codon"))
    }

    /// The first two nucleotides.
    pub const fn dinucleotide(self) -> [Nucleotide; 2] {
        [self.0[0], self.0[1]]
    }

    /// Number of C or A letters. C and A are the nucleotides most prone to
    /// misreading.
    pub fn ca_count(self) -> u32 {
        self.0
            .iter()
            .filter(|n| matches!(n, Nucleotide::C | Nucleotide::A))
            .count() as u32
    }
}

impl fmt::Display for Codon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in self.0 {
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

impl FromStr for Codon {
    type Err = CodeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters: Vec<char> = s.trim().chars().collect();
        if letters.len() != 3 {
            return Err(CodeError::BadLength(s.into()));
        }
        Ok(Codon([
            Nucleotide::from_char(letters[0])?,
            Nucleotide::from_char(letters[1])?,
            Nucleotide::from_char(letters[2])?,
        ]))
    }
}

/// The `(J_H, J_V, m_H, m_V)` labels of a state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelQuad {
    pub j_h: HalfInt,
    pub j_v: HalfInt,
    pub m_h: HalfInt,
    pub m_v: HalfInt,
}

impl LabelQuad {
    pub const fn from_twice(j_h: i32, j_v: i32, m_h: i32, m_v: i32) -> Self {
        LabelQuad {
            j_h: HalfInt::from_twice(j_h),
            j_v: HalfInt::from_twice(j_v),
            m_h: HalfInt::from_twice(m_h),
            m_v: HalfInt::from_twice(m_v),
        }
    }
}

impl fmt::Display for LabelQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.j_h, self.j_v, self.m_h, self.m_v)
    }
}

/// Crystal labels of a codon plus the irrep copy it belongs to in each factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CodonLabel {
    pub quad: LabelQuad,
    pub copy_h: ComponentId,
    pub copy_v: ComponentId,
}

impl CodonLabel {
    /// Whether both factors lie in the same connected components, i.e. the
    /// codons belong to the same irrep of `sl_H(2) ⊕ sl_V(2)`.
    pub fn same_irrep(&self, other: &CodonLabel) -> bool {
        self.copy_h == other.copy_h && self.copy_v == other.copy_v
    }
}

/// The `H` and `V` weight paths of a codon in reading order.
pub fn codon_paths(codon: Codon) -> (SignPath, SignPath) {
    let n = codon.nucleotides();
    let h = SignPath::spin_half(&n.map(Nucleotide::weight_h)).expect("spin-½ letters");
    let v = SignPath::spin_half(&n.map(Nucleotide::weight_v)).expect("spin-½ letters");
    (h, v)
}

pub fn codon_labels(codon: Codon) -> CodonLabel {
    let (h, v) = codon_paths(codon);
    let (copy_h, m_h) = component_of(&h);
    let (copy_v, m_v) = component_of(&v);
    CodonLabel {
        quad: LabelQuad {
            j_h: copy_h.j,
            j_v: copy_v.j,
            m_h,
            m_v,
        },
        copy_h,
        copy_v,
    }
}

/// Labels of all 64 codons, indexed by [`Codon::index`].
pub fn all_labels() -> Vec<CodonLabel> {
    Codon::all().map(codon_labels).collect()
}

/// The 20 amino acids and the stop signal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AminoAcid {
    Ala,
    Arg,
    Asn,
    Asp,
    Cys,
    Gln,
    Glu,
    Gly,
    His,
    Ile,
    Leu,
    Lys,
    Met,
    Phe,
    Pro,
    Ser,
    Thr,
    Trp,
    Tyr,
    Val,
    Ter,
}

impl AminoAcid {
    pub const fn name(self) -> &'static str {
        use AminoAcid::*;
        match self {
            Ala => "Ala",
            Arg => "Arg",
            Asn => "Asn",
            Asp => "Asp",
            Cys => "Cys",
            Gln => "Gln",
            Glu => "Glu",
            Gly => "Gly",
            His => "His",
            Ile => "Ile",
            Leu => "Leu",
            Lys => "Lys",
            Met => "Met",
            Phe => "Phe",
            Pro => "Pro",
            Ser => "Ser",
            Thr => "Thr",
            Trp => "Trp",
            Tyr => "Tyr",
            Val => "Val",
            Ter => "Ter",
        }
    }
}

impl fmt::Display for AminoAcid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which genetic code an amino-acid assignment follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeKind {
    /// Vertebrate mitochondrial code.
    Vmc,
    /// Standard (universal) code.
    Suc,
}

impl CodeKind {
    pub const fn as_str(self) -> &'static str {
        match self {
            CodeKind::Vmc => "VMC",
            CodeKind::Suc => "SUC",
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A total codon → amino-acid assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AminoAcidMap {
    pub code: CodeKind,
    assignment: [AminoAcid; 64],
}

impl AminoAcidMap {
    /// Built from the embedded table.
    pub fn new(code: CodeKind) -> Self {
        let mut assignment = [AminoAcid::Ter; 64];
        for row in &golden::TABLE {
            let codon: Codon = row.codon.parse().expect("golden codon");
            assignment[codon.index()] = match code {
                CodeKind::Vmc => row.aa_vmc,
                CodeKind::Suc => row.aa_suc,
            };
        }
        AminoAcidMap { code, assignment }
    }

    pub fn translate(&self, codon: Codon) -> AminoAcid {
        self.assignment[codon.index()]
    }

    /// Synonymous classes, each sorted by codon index, keyed by amino acid.
    pub fn classes(&self) -> BTreeMap<AminoAcid, Vec<Codon>> {
        let mut out: BTreeMap<AminoAcid, Vec<Codon>> = BTreeMap::new();
        for c in Codon::all() {
            out.entry(self.translate(c)).or_default().push(c);
        }
        out
    }
}

/// One row of the computed table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub codon: Codon,
    pub aa_vmc: AminoAcid,
    pub aa_suc: AminoAcid,
    pub label: CodonLabel,
    /// 1-based display number of the `H` component among components of
    /// equal spin, by first appearance in table row order.
    pub copy_h: u8,
    pub copy_v: u8,
}

/// A disagreement between a computed and a published row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMismatch {
    pub codon: Codon,
    pub computed: LabelQuad,
    pub published: LabelQuad,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableReport {
    /// Rows in published order.
    pub rows: Vec<TableRow>,
    pub mismatches: Vec<LabelMismatch>,
    /// Whether the irrep-copy partition equals the published superscript partition.
    pub partition_matches: bool,
}

impl TableReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.partition_matches
    }
}

/// Computes all 64 rows and diffs them against the embedded table.
pub fn build_table() -> TableReport {
    let mut numbering: BTreeMap<ComponentId, u8> = BTreeMap::new();
    let mut next_copy: BTreeMap<HalfInt, u8> = BTreeMap::new();
    let mut number = |id: &ComponentId| -> u8 {
        *numbering.entry(id.clone()).or_insert_with(|| {
            let n = next_copy.entry(id.j).or_insert(0);
            *n += 1;
            *n
        })
    };

    let mut rows = Vec::with_capacity(64);
    let mut mismatches = Vec::new();
    for g in &golden::TABLE {
        let codon: Codon = g.codon.parse().expect("golden codon");
        let label = codon_labels(codon);
        let published = LabelQuad::from_twice(g.j_h2, g.j_v2, g.m_h2, g.m_v2);
        if label.quad != published {
            mismatches.push(LabelMismatch {
                codon,
                computed: label.quad,
                published,
            });
        }
        let copy_h = number(&label.copy_h);
        let copy_v = number(&label.copy_v);
        rows.push(TableRow {
            codon,
            aa_vmc: g.aa_vmc,
            aa_suc: g.aa_suc,
            label,
            copy_h,
            copy_v,
        });
    }
    let partition_matches = normalize(product_components()) == normalize(published_irreps());
    TableReport {
        rows,
        mismatches,
        partition_matches,
    }
}

/// Connected components of the 64-codon crystal of `sl_H(2) ⊕ sl_V(2)`,
/// found by following `H` and `V` raising edges.
pub fn product_components() -> Vec<Vec<Codon>> {
    let mut sets = DisjointSet::new(64);
    for codon in Codon::all() {
        let (h, v) = codon_paths(codon);
        if let Some(up) = h.raise() {
            sets.union(codon.index(), codon_from_paths(&up, &v).index());
        }
        if let Some(up) = v.raise() {
            sets.union(codon.index(), codon_from_paths(&h, &up).index());
        }
    }
    sets.groups()
        .into_iter()
        .map(|g| g.into_iter().map(Codon::from_index).collect())
        .collect()
}

/// The partition of codons by published `(J_H, J_V)` and multiplicity superscript.
pub fn published_irreps() -> Vec<Vec<Codon>> {
    let mut groups: BTreeMap<(i32, i32, u8), Vec<Codon>> = BTreeMap::new();
    for g in &golden::TABLE {
        groups
            .entry((g.j_h2, g.j_v2, g.copy))
            .or_default()
            .push(g.codon.parse().expect("golden codon"));
    }
    groups.into_values().collect()
}

/// Sorts members and blocks so partitions compare by value.
pub fn normalize(mut partition: Vec<Vec<Codon>>) -> Vec<Vec<Codon>> {
    for block in &mut partition {
        block.sort_unstable();
    }
    partition.sort_unstable();
    partition
}

/// Inverse of [`codon_paths`] for spin-½ paths of length 3.
pub fn codon_from_paths(h: &SignPath, v: &SignPath) -> Codon {
    let letter = |mh: HalfInt, mv: HalfInt| match (mh.is_negative(), mv.is_negative()) {
        (false, false) => Nucleotide::C,
        (true, false) => Nucleotide::U,
        (false, true) => Nucleotide::G,
        (true, true) => Nucleotide::A,
    };
    let hf = h.factors();
    let vf = v.factors();
    assert!(hf.len() == 3 && vf.len() == 3, "codon paths have length 3");
    Codon::new(
        letter(hf[0].m(), vf[0].m()),
        letter(hf[1].m(), vf[1].m()),
        letter(hf[2].m(), vf[2].m()),
    )
}
