//! The five-level multiplet merging pipeline.
//!
//! 1. third-position transitions pair `XZC/XZU` and `XZG/XZA` into doublets;
//! 2. third-position transversions join doublet pairs into quartets;
//! 3. first-position misreadings;
//! 4. second-position misreadings, proposed but not merged by default;
//! 5. first-then-second double misreadings through a virtual state.
//!
//! A multiplet formed at one level is frozen: later levels may merge it
//! whole into another multiplet but never split it.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::genetic_code::{AminoAcid, AminoAcidMap, CodeKind, Codon, Nucleotide, Position};
use crate::misread::{
    allowed, allowed_double, CrystalTensorOp, MisreadError, MisreadSpec, RankRules, SubstitutionKind,
};
use crate::tensor::CouplingOrder;

pub const LEVELS: u8 = 5;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("level {requested} requested but the next level is {expected}")]
    OutOfOrder { requested: u8, expected: u8 },
    #[error("no level {0}; levels run 1 to 5")]
    NoSuchLevel(u8),
    #[error(transparent)]
    Misread(#[from] MisreadError),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown {what} `{value}`")]
pub struct ParseOptionError {
    pub what: &'static str,
    pub value: String,
}

macro_rules! keyword_enum {
    ($(#[$meta:meta])* $name:ident, $what:literal { $($(#[$vmeta:meta])* $variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($(#[$vmeta])* $variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub const fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = ParseOptionError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                let s = s.trim();
                $(if s.eq_ignore_ascii_case($text) || s.replace('_', "-").eq_ignore_ascii_case($text) {
                    return Ok($name::$variant);
                })+
                Err(ParseOptionError { what: $what, value: s.into() })
            }
        }
    };
}

keyword_enum! {
    /// How competing merge proposals at levels 3 to 5 are resolved.
    MergePolicy, "merge policy" {
        /// A source merges into a target only through the target's weakest
        /// codon; proposals on weaker targets go first.
        ProtectWeakest => "protect-weakest",
        /// Only C or A misreadings merge; each source keeps its weakest target.
        COrA => "c-or-a",
    }
}

keyword_enum! {
    /// Which third-position transversions must be allowed for `XZY` and
    /// `XZR` to form a quartet.
    Level2Policy, "level-2 policy" {
        /// Both C→G and C→A on `XZC`.
        TvaAndTvc => "tva-and-tvc",
        /// Any of C→G, U→A, C→A.
        AnyOf => "any-of",
        /// All three.
        AllOfThree => "all-of-three",
    }
}

keyword_enum! {
    /// Which operator pairs take part in level 5.
    Level5Pairs, "level-5 pairing" {
        /// Both misreadings from the same family: {C→U, G→A}, {C→G, U→A} or {C→A}.
        SameFamily => "same-family",
        /// Both transitions or both transversions.
        SameKind => "same-kind",
        All => "all",
    }
}

keyword_enum! {
    /// The expected doublet partner of the `UCN` quartet in the third sextet.
    SerReading, "Ser reading" {
        /// `AGY`, the only partner compatible with the final census.
        Census => "census",
        /// `AGR`, as literally named.
        Literal => "literal",
    }
}

/// Substitution family used for level-5 pairing.
fn family(spec: MisreadSpec) -> u8 {
    match spec.kind() {
        SubstitutionKind::Identity => 0,
        SubstitutionKind::Transition => 1,
        SubstitutionKind::TransversionCgUa => 2,
        SubstitutionKind::TransversionCa => 3,
    }
}

impl Level5Pairs {
    pub fn admits(self, first: MisreadSpec, second: MisreadSpec) -> bool {
        match self {
            Level5Pairs::SameFamily => family(first) == family(second),
            Level5Pairs::SameKind => first.kind().is_transversion() == second.kind().is_transversion(),
            Level5Pairs::All => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineConfig {
    pub rules: RankRules,
    pub order: CouplingOrder,
    pub merge_policy: MergePolicy,
    pub level2_policy: Level2Policy,
    /// Whether level-4 proposals are merged.
    pub level4_merges: bool,
    pub level5_pairs: Level5Pairs,
    pub ser_reading: SerReading,
    /// Third letters from weakest to strongest, breaking ties in the C/A count.
    pub tie_order: [Nucleotide; 4],
    /// Largest multiplet a merge may produce.
    pub max_size: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            rules: RankRules::default(),
            order: CouplingOrder::StateFirst,
            merge_policy: MergePolicy::ProtectWeakest,
            level2_policy: Level2Policy::TvaAndTvc,
            level4_merges: false,
            level5_pairs: Level5Pairs::SameFamily,
            ser_reading: SerReading::Census,
            tie_order: [Nucleotide::A, Nucleotide::C, Nucleotide::U, Nucleotide::G],
            max_size: 6,
        }
    }
}

impl PipelineConfig {
    /// `(number of C or A letters, third-letter rank)`; larger is weaker.
    pub fn weakness(&self, codon: Codon) -> (u32, usize) {
        let third = codon.at(Position::THIRD);
        let rank = self.tie_order.iter().position(|&n| n == third).unwrap_or(3);
        (codon.ca_count(), 3 - rank)
    }

    /// The weakest codon of a set; ties go to the earliest codon.
    pub fn weakest(&self, codons: &[Codon]) -> Option<Codon> {
        codons
            .iter()
            .copied()
            .max_by_key(|&c| (self.weakness(c), Reverse(c.index())))
    }
}

/// A set of codons merged so far.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multiplet {
    codons: Vec<Codon>,
    pub formed_at_level: u8,
}

impl Multiplet {
    fn new(mut codons: Vec<Codon>, formed_at_level: u8) -> Self {
        codons.sort_unstable();
        codons.dedup();
        Multiplet {
            codons,
            formed_at_level,
        }
    }

    pub fn codons(&self) -> &[Codon] {
        &self.codons
    }

    pub fn len(&self) -> usize {
        self.codons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codons.is_empty()
    }

    pub fn contains(&self, codon: Codon) -> bool {
        self.codons.binary_search(&codon).is_ok()
    }

    /// Compact name such as `CUN∪UUR`: codons sharing a dinucleotide are
    /// folded into `N`, `Y` or `R` when possible.
    pub fn pattern(&self) -> String {
        pattern_of(&self.codons)
    }
}

/// See [`Multiplet::pattern`].
pub fn pattern_of(codons: &[Codon]) -> String {
    let mut by_prefix: BTreeMap<[Nucleotide; 2], BTreeSet<Nucleotide>> = BTreeMap::new();
    for c in codons {
        by_prefix
            .entry(c.dinucleotide())
            .or_default()
            .insert(c.at(Position::THIRD));
    }
    let mut parts: Vec<String> = Vec::new();
    for ([x, z], thirds) in by_prefix {
        let mut prefix = String::new();
        prefix.push(x.as_char());
        prefix.push(z.as_char());
        let set: Vec<Nucleotide> = thirds.into_iter().collect();
        use Nucleotide::*;
        let folded = match set.as_slice() {
            [C, U, G, A] => Some('N'),
            [C, U] => Some('Y'),
            [G, A] => Some('R'),
            _ => None,
        };
        match folded {
            Some(letter) => {
                prefix.push(letter);
                parts.push(prefix);
            }
            None => {
                for n in set {
                    let mut p = prefix.clone();
                    p.push(n.as_char());
                    parts.push(p);
                }
            }
        }
    }
    parts.join("∪")
}

/// Why a proposal was or was not merged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Accepted,
    /// Predicted labels differ from the target's.
    NotAllowed,
    /// Source and target already share a multiplet.
    SameMultiplet,
    /// The merged multiplet would exceed the size limit.
    SizeLimit,
    /// No event of this source reaches the weakest codon of the target.
    TargetNotWeakest,
    /// The misread nucleotide is not C or A.
    NotCOrA,
    /// The source has another allowed target with a weaker codon.
    WeakerTargetPreferred,
    /// One of the two multiplets already merged at this level.
    Conflict,
    /// Another event already realises the same merge.
    Redundant,
    /// Level-4 proposal, not merged.
    Suppressed,
    /// Allowed, but the quartet condition of level 2 is not met.
    QuartetConditionUnmet,
}

impl Verdict {
    pub const fn as_str(self) -> &'static str {
        match self {
            Verdict::Accepted => "accepted",
            Verdict::NotAllowed => "not-allowed",
            Verdict::SameMultiplet => "same-multiplet",
            Verdict::SizeLimit => "size-limit",
            Verdict::TargetNotWeakest => "target-not-weakest",
            Verdict::NotCOrA => "not-c-or-a",
            Verdict::WeakerTargetPreferred => "weaker-target-preferred",
            Verdict::Conflict => "conflict",
            Verdict::Redundant => "redundant",
            Verdict::Suppressed => "suppressed",
            Verdict::QuartetConditionUnmet => "quartet-condition-unmet",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One proposal: a (possibly double) misreading from `source` to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeEvent {
    pub level: u8,
    pub source: Codon,
    pub target: Codon,
    pub specs: Vec<MisreadSpec>,
    pub operators: Vec<CrystalTensorOp>,
    pub order: CouplingOrder,
    pub allowed: bool,
    pub accepted: bool,
    pub verdict: Verdict,
}

impl MergeEvent {
    fn set(&mut self, verdict: Verdict) {
        self.verdict = verdict;
        self.accepted = verdict == Verdict::Accepted;
    }
}

impl fmt::Display for MergeEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{} {}→{} [", self.level, self.source, self.target)?;
        for (i, s) in self.specs.iter().enumerate() {
            if i > 0 {
                f.write_str(" then ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "] {}", self.verdict)
    }
}

/// A partition of the 64 codons into multiplets, with the merge log so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipletPartition {
    multiplets: Vec<Multiplet>,
    owner: [u8; 64],
    completed: u8,
    log: Vec<MergeEvent>,
}

impl Default for MultipletPartition {
    fn default() -> Self {
        Self::singletons()
    }
}

impl MultipletPartition {
    /// Every codon on its own.
    pub fn singletons() -> Self {
        Self::from_blocks(Codon::all().map(|c| alloc::vec![c]).collect(), 0)
    }

    /// Builds a partition from blocks covering each codon exactly once.
    pub fn from_blocks(blocks: Vec<Vec<Codon>>, completed: u8) -> Self {
        let mut p = MultipletPartition {
            multiplets: blocks.into_iter().map(|b| Multiplet::new(b, 0)).collect(),
            owner: [0; 64],
            completed,
            log: Vec::new(),
        };
        p.reindex();
        p
    }

    fn reindex(&mut self) {
        self.multiplets.retain(|m| !m.is_empty());
        self.multiplets.sort_by_key(|m| m.codons[0]);
        let mut owner = [u8::MAX; 64];
        for (i, m) in self.multiplets.iter().enumerate() {
            for c in &m.codons {
                owner[c.index()] = i as u8;
            }
        }
        self.owner = owner;
    }

    pub fn multiplets(&self) -> &[Multiplet] {
        &self.multiplets
    }

    pub fn multiplet_of(&self, codon: Codon) -> &Multiplet {
        &self.multiplets[usize::from(self.owner[codon.index()])]
    }

    fn index_of(&self, codon: Codon) -> usize {
        usize::from(self.owner[codon.index()])
    }

    pub fn same_multiplet(&self, a: Codon, b: Codon) -> bool {
        self.owner[a.index()] == self.owner[b.index()]
    }

    /// Levels run so far.
    pub fn completed_level(&self) -> u8 {
        self.completed
    }

    pub fn log(&self) -> &[MergeEvent] {
        &self.log
    }

    pub fn events_at(&self, level: u8) -> impl Iterator<Item = &MergeEvent> {
        self.log.iter().filter(move |e| e.level == level)
    }

    /// Whether every codon appears exactly once.
    pub fn is_valid(&self) -> bool {
        let mut seen = [false; 64];
        for m in &self.multiplets {
            for c in &m.codons {
                if seen[c.index()] {
                    return false;
                }
                seen[c.index()] = true;
            }
        }
        seen.iter().all(|&s| s)
    }

    fn apply_merges(&mut self, pairs: &[(usize, usize)], level: u8) {
        for &(a, b) in pairs {
            let moved = core::mem::take(&mut self.multiplets[b].codons);
            self.multiplets[a].codons.extend(moved);
            self.multiplets[a].codons.sort_unstable();
            self.multiplets[a].formed_at_level = level;
        }
        self.reindex();
    }

    /// Blocks as sorted codon lists.
    pub fn blocks(&self) -> Vec<Vec<Codon>> {
        self.multiplets.iter().map(|m| m.codons.clone()).collect()
    }
}

/// Histogram of multiplet sizes.
pub fn census(partition: &MultipletPartition) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for m in partition.multiplets() {
        *out.entry(m.len()).or_insert(0) += 1;
    }
    out
}

/// The census as `sextets=3 quartets=5 doublets=13`, largest first.
pub fn census_line(census: &BTreeMap<usize, usize>) -> String {
    let mut parts = Vec::new();
    for (&size, &count) in census.iter().rev() {
        parts.push(alloc::format!("{}={}", size_name(size), count));
    }
    parts.join(" ")
}

pub fn size_name(size: usize) -> String {
    match size {
        1 => "singlets".into(),
        2 => "doublets".into(),
        3 => "triplets".into(),
        4 => "quartets".into(),
        5 => "quintets".into(),
        6 => "sextets".into(),
        n => alloc::format!("size{n}"),
    }
}

/// The census `{6: 3, 4: 5, 2: 13}`.
pub fn expected_census() -> BTreeMap<usize, usize> {
    [(6, 3), (4, 5), (2, 13)].into_iter().collect()
}

fn single_event(
    level: u8,
    codon: Codon,
    spec: MisreadSpec,
    config: &PipelineConfig,
) -> Result<MergeEvent, MisreadError> {
    let r = allowed(codon, spec, &config.rules, config.order)?;
    Ok(MergeEvent {
        level,
        source: codon,
        target: r.target_codon,
        specs: alloc::vec![spec],
        operators: alloc::vec![r.operator],
        order: config.order,
        allowed: r.allowed,
        accepted: false,
        verdict: if r.allowed {
            Verdict::Accepted
        } else {
            Verdict::NotAllowed
        },
    })
}

type LevelOutcome = (Vec<MergeEvent>, Vec<(usize, usize)>);

fn level1(partition: &MultipletPartition, config: &PipelineConfig) -> Result<LevelOutcome, MisreadError> {
    let mut events = Vec::new();
    let mut merges = Vec::new();
    for codon in Codon::all() {
        let spec = match codon.at(Position::THIRD) {
            Nucleotide::C => MisreadSpec::new(Position::THIRD, Nucleotide::C, Nucleotide::U)?,
            Nucleotide::G => MisreadSpec::new(Position::THIRD, Nucleotide::G, Nucleotide::A)?,
            _ => continue,
        };
        let mut e = single_event(1, codon, spec, config)?;
        if e.allowed {
            let (a, b) = (partition.index_of(e.source), partition.index_of(e.target));
            if a == b {
                e.set(Verdict::SameMultiplet);
            } else {
                e.set(Verdict::Accepted);
                merges.push((a, b));
            }
        }
        events.push(e);
    }
    Ok((events, merges))
}

fn level2(partition: &MultipletPartition, config: &PipelineConfig) -> Result<LevelOutcome, MisreadError> {
    use Nucleotide::*;
    let mut events = Vec::new();
    let mut merges = Vec::new();
    for x in Nucleotide::ALL {
        for z in Nucleotide::ALL {
            let xzc = Codon::new(x, z, C);
            let xzu = Codon::new(x, z, U);
            let mut tva = single_event(2, xzc, MisreadSpec::new(Position::THIRD, C, G)?, config)?;
            let mut tvb = single_event(2, xzu, MisreadSpec::new(Position::THIRD, U, A)?, config)?;
            let mut tvc = single_event(2, xzc, MisreadSpec::new(Position::THIRD, C, A)?, config)?;
            let quartet = match config.level2_policy {
                Level2Policy::TvaAndTvc => tva.allowed && tvc.allowed,
                Level2Policy::AnyOf => tva.allowed || tvb.allowed || tvc.allowed,
                Level2Policy::AllOfThree => tva.allowed && tvb.allowed && tvc.allowed,
            };
            let (a, b) = (partition.index_of(xzc), partition.index_of(Codon::new(x, z, G)));
            let merged = quartet && a != b;
            if merged {
                merges.push((a, b));
            }
            let mut first = true;
            for e in [&mut tva, &mut tvb, &mut tvc] {
                if !e.allowed {
                    continue;
                }
                if partition.same_multiplet(e.source, e.target) {
                    e.set(Verdict::SameMultiplet);
                } else if !quartet {
                    e.set(Verdict::QuartetConditionUnmet);
                } else if first {
                    e.set(Verdict::Accepted);
                    first = false;
                } else {
                    e.set(Verdict::Redundant);
                }
            }
            events.extend([tva, tvb, tvc]);
        }
    }
    Ok((events, merges))
}

fn single_position_events(
    level: u8,
    position: Position,
    config: &PipelineConfig,
) -> Result<Vec<MergeEvent>, MisreadError> {
    let mut events = Vec::new();
    for codon in Codon::all() {
        for spec in MisreadSpec::applicable(codon, position) {
            events.push(single_event(level, codon, spec, config)?);
        }
    }
    Ok(events)
}

fn double_events(config: &PipelineConfig) -> Result<Vec<MergeEvent>, MisreadError> {
    let mut events = Vec::new();
    for codon in Codon::all() {
        for first in MisreadSpec::applicable(codon, Position::FIRST) {
            for second in MisreadSpec::applicable(codon, Position::SECOND) {
                if !config.level5_pairs.admits(first, second) {
                    continue;
                }
                let r = allowed_double(codon, first, second, &config.rules, config.order)?;
                events.push(MergeEvent {
                    level: 5,
                    source: codon,
                    target: r.target_codon,
                    specs: alloc::vec![first, second],
                    operators: r.operators.to_vec(),
                    order: config.order,
                    allowed: r.allowed,
                    accepted: false,
                    verdict: if r.allowed {
                        Verdict::Accepted
                    } else {
                        Verdict::NotAllowed
                    },
                });
            }
        }
    }
    Ok(events)
}

struct Proposal {
    source: usize,
    target: usize,
    events: Vec<usize>,
    /// Event realising the merge if accepted.
    lead: usize,
    key: ((u32, usize), usize),
}

/// Resolves competing proposals of levels 3 to 5.
fn resolve(
    level: u8,
    events: &mut [MergeEvent],
    partition: &MultipletPartition,
    config: &PipelineConfig,
) -> Vec<(usize, usize)> {
    let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, e) in events.iter_mut().enumerate() {
        if !e.allowed {
            e.set(Verdict::NotAllowed);
            continue;
        }
        let (s, t) = (partition.index_of(e.source), partition.index_of(e.target));
        if s == t {
            e.set(Verdict::SameMultiplet);
        } else {
            groups.entry((s, t)).or_default().push(i);
        }
    }

    let multiplets = partition.multiplets();
    let mut proposals: Vec<Proposal> = Vec::new();
    for ((s, t), idx) in groups {
        if multiplets[s].len() + multiplets[t].len() > config.max_size {
            for &i in &idx {
                events[i].set(Verdict::SizeLimit);
            }
            continue;
        }
        let min_source = multiplets[s].codons()[0].index();
        match config.merge_policy {
            MergePolicy::ProtectWeakest => {
                let weakest = config.weakest(multiplets[t].codons()).expect("non-empty");
                match idx.iter().copied().find(|&i| events[i].target == weakest) {
                    Some(lead) => proposals.push(Proposal {
                        source: s,
                        target: t,
                        events: idx,
                        lead,
                        key: (config.weakness(weakest), min_source),
                    }),
                    None => {
                        for &i in &idx {
                            events[i].set(Verdict::TargetNotWeakest);
                        }
                    }
                }
            }
            MergePolicy::COrA => {
                let ca = |e: &MergeEvent| {
                    e.specs
                        .iter()
                        .all(|s| matches!(s.from(), Nucleotide::C | Nucleotide::A))
                };
                let (ok, bad): (Vec<usize>, Vec<usize>) = idx.iter().partition(|&&i| ca(&events[i]));
                for i in bad {
                    events[i].set(Verdict::NotCOrA);
                }
                if let Some(&lead) = ok.first() {
                    let weakest = config.weakest(multiplets[t].codons()).expect("non-empty");
                    proposals.push(Proposal {
                        source: s,
                        target: t,
                        events: ok,
                        lead,
                        key: (config.weakness(weakest), min_source),
                    });
                }
            }
        }
    }

    if config.merge_policy == MergePolicy::COrA {
        let mut best: BTreeMap<usize, (u32, usize)> = BTreeMap::new();
        for p in &proposals {
            let w = best.entry(p.source).or_insert(p.key.0);
            if p.key.0 > *w {
                *w = p.key.0;
            }
        }
        proposals.retain(|p| {
            let keep = best[&p.source] == p.key.0;
            if !keep {
                for &i in &p.events {
                    events[i].set(Verdict::WeakerTargetPreferred);
                }
            }
            keep
        });
    }

    proposals.sort_by_key(|p| (Reverse(p.key.0), p.key.1, p.target));
    let mut used = BTreeSet::new();
    let mut merges = Vec::new();
    let merging = level != 4 || config.level4_merges;
    for p in proposals {
        if used.contains(&p.source) || used.contains(&p.target) {
            for &i in &p.events {
                events[i].set(Verdict::Conflict);
            }
            continue;
        }
        used.insert(p.source);
        used.insert(p.target);
        for &i in &p.events {
            let verdict = if !merging {
                Verdict::Suppressed
            } else if i == p.lead {
                Verdict::Accepted
            } else {
                Verdict::Redundant
            };
            events[i].set(verdict);
        }
        if merging {
            merges.push((p.target, p.source));
        }
    }
    merges
}

/// Runs the next level on a copy of `partition`. Returns the new partition
/// (with the level's events appended to its log) and the level's events.
pub fn run_level(
    partition: &MultipletPartition,
    level: u8,
    config: &PipelineConfig,
) -> Result<(MultipletPartition, Vec<MergeEvent>), PipelineError> {
    if !(1..=LEVELS).contains(&level) {
        return Err(PipelineError::NoSuchLevel(level));
    }
    let expected = partition.completed + 1;
    if level != expected {
        return Err(PipelineError::OutOfOrder {
            requested: level,
            expected,
        });
    }
    let (events, merges) = match level {
        1 => level1(partition, config)?,
        2 => level2(partition, config)?,
        _ => {
            let mut events = match level {
                3 => single_position_events(3, Position::FIRST, config)?,
                4 => single_position_events(4, Position::SECOND, config)?,
                _ => double_events(config)?,
            };
            let merges = resolve(level, &mut events, partition, config);
            (events, merges)
        }
    };
    let mut next = partition.clone();
    next.apply_merges(&merges, level);
    next.completed = level;
    next.log.extend(events.iter().cloned());
    Ok((next, events))
}

/// Runs all five levels from singletons.
pub fn run_pipeline(config: &PipelineConfig) -> Result<MultipletPartition, PipelineError> {
    let mut partition = MultipletPartition::singletons();
    for level in 1..=LEVELS {
        partition = run_level(&partition, level, config)?.0;
    }
    Ok(partition)
}

/// The doublet partner `UCN` is expected to join.
pub fn ser_partner(reading: SerReading) -> [Codon; 2] {
    use Nucleotide::*;
    match reading {
        SerReading::Census => [Codon::new(A, G, C), Codon::new(A, G, U)],
        SerReading::Literal => [Codon::new(A, G, G), Codon::new(A, G, A)],
    }
}

/// Whether `UCN` merged with exactly the partner named by `reading`.
pub fn ser_sextet_matches(partition: &MultipletPartition, reading: SerReading) -> bool {
    use Nucleotide::*;
    let m = partition.multiplet_of(Codon::new(U, C, C));
    let mut expected: Vec<Codon> = Nucleotide::ALL.iter().map(|&n| Codon::new(U, C, n)).collect();
    expected.extend(ser_partner(reading));
    expected.sort_unstable();
    m.codons() == expected.as_slice()
}

/// A multiplet that a code's synonymous classes cut into pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrokenMultiplet {
    pub codons: Vec<Codon>,
    pub pieces: Vec<(AminoAcid, Vec<Codon>)>,
}

/// A synonymous class spread over several multiplets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpreadClass {
    pub amino_acid: AminoAcid,
    pub parts: Vec<Vec<Codon>>,
}

/// How a partition relates to the synonymous classes of a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeComparison {
    pub code: CodeKind,
    /// Whether stop codons count as a class of their own.
    pub include_ter: bool,
    /// Multiplets equal to a whole class.
    pub exact: Vec<AminoAcid>,
    pub broken: Vec<BrokenMultiplet>,
    pub spread: Vec<SpreadClass>,
}

impl CodeComparison {
    pub fn is_empty(&self) -> bool {
        self.broken.is_empty() && self.spread.is_empty()
    }
}

/// Diffs `partition` against the synonymous classes of `code`. Without
/// `include_ter`, stop codons are dropped from both sides first.
pub fn compare_to_code(partition: &MultipletPartition, code: CodeKind, include_ter: bool) -> CodeComparison {
    let map = AminoAcidMap::new(code);
    let keep = |c: &Codon| include_ter || map.translate(*c) != AminoAcid::Ter;
    let mut exact = Vec::new();
    let mut broken = Vec::new();
    for m in partition.multiplets() {
        let codons: Vec<Codon> = m.codons().iter().copied().filter(keep).collect();
        if codons.is_empty() {
            continue;
        }
        let mut pieces: BTreeMap<AminoAcid, Vec<Codon>> = BTreeMap::new();
        for &c in &codons {
            pieces.entry(map.translate(c)).or_default().push(c);
        }
        if pieces.len() > 1 {
            broken.push(BrokenMultiplet {
                codons,
                pieces: pieces.into_iter().collect(),
            });
        }
    }
    let mut spread = Vec::new();
    for (aa, class) in map.classes() {
        if !include_ter && aa == AminoAcid::Ter {
            continue;
        }
        let mut parts: BTreeMap<usize, Vec<Codon>> = BTreeMap::new();
        for &c in &class {
            parts.entry(partition.index_of(c)).or_default().push(c);
        }
        if parts.len() > 1 {
            spread.push(SpreadClass {
                amino_acid: aa,
                parts: parts.into_values().collect(),
            });
        } else if parts
            .keys()
            .next()
            .is_some_and(|&i| partition.multiplets()[i].codons().iter().filter(|c| keep(c)).count() == class.len())
        {
            exact.push(aa);
        }
    }
    CodeComparison {
        code,
        include_ter,
        exact,
        broken,
        spread,
    }
}

/// The partition into synonymous classes of `code`.
pub fn code_partition(code: CodeKind) -> MultipletPartition {
    let blocks = AminoAcidMap::new(code).classes().into_values().collect();
    MultipletPartition::from_blocks(blocks, LEVELS)
}

/// Size histogram of a code's classes, with or without stop codons.
pub fn code_census(code: CodeKind, include_ter: bool) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for (aa, class) in AminoAcidMap::new(code).classes() {
        if include_ter || aa != AminoAcid::Ter {
            *out.entry(class.len()).or_insert(0) += 1;
        }
    }
    out
}
