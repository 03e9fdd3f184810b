//! Crystal tensor operators and the allowed-misreading predicate.
//!
//! A misreading of one nucleotide is modelled by an operator
//! `τ^{j}_{H,m} ⊗ τ^{j'}_{V,m'}` acting through the crystal Wigner–Eckart
//! theorem: on each factor the state `|J, M⟩` goes to the pure state given
//! by [`couple`]. The misreading is allowed when the predicted labels are
//! those of the substituted codon.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::crystal::{CrystalError, CrystalState};
use crate::genetic_code::{codon_labels, CodeError, Codon, LabelQuad, Nucleotide, Position};
use crate::half_int::HalfInt;
use crate::tensor::{couple, CouplingOrder};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MisreadError {
    #[error("invalid operator factor: {0}")]
    Operator(#[from] CrystalError),
    #[error("{from}→{to} is not one of the modelled substitutions")]
    NotModelled { from: Nucleotide, to: Nucleotide },
    #[error("transversion {from}→{to} would raise m_H")]
    RaisesWeight { from: Nucleotide, to: Nucleotide },
    #[error("codon {codon} has {found} at position {position}, not {expected}")]
    Mismatch {
        codon: Codon,
        position: Position,
        expected: Nucleotide,
        found: Nucleotide,
    },
    #[error("both misreadings act on position {0}")]
    Overlap(Position),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// `τ^{j_h}_{H,m_h} ⊗ τ^{j_v}_{V,m_v}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrystalTensorOp {
    pub j_h: HalfInt,
    pub m_h: HalfInt,
    pub j_v: HalfInt,
    pub m_v: HalfInt,
}

impl CrystalTensorOp {
    pub fn new(j_h: HalfInt, m_h: HalfInt, j_v: HalfInt, m_v: HalfInt) -> Result<Self, MisreadError> {
        CrystalState::new(j_h, m_h)?;
        CrystalState::new(j_v, m_v)?;
        Ok(CrystalTensorOp { j_h, m_h, j_v, m_v })
    }

    /// From twice-values `(2j_h, 2m_h, 2j_v, 2m_v)`.
    pub fn from_twice(j_h: i32, m_h: i32, j_v: i32, m_v: i32) -> Result<Self, MisreadError> {
        Self::new(
            HalfInt::from_twice(j_h),
            HalfInt::from_twice(m_h),
            HalfInt::from_twice(j_v),
            HalfInt::from_twice(m_v),
        )
    }

    pub const IDENTITY: CrystalTensorOp = CrystalTensorOp {
        j_h: HalfInt::ZERO,
        m_h: HalfInt::ZERO,
        j_v: HalfInt::ZERO,
        m_v: HalfInt::ZERO,
    };
}

impl fmt::Display for CrystalTensorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "τ[{},{}]_H ⊗ τ[{},{}]_V", self.j_h, self.m_h, self.j_v, self.m_v)
    }
}

/// Which operator family models a substitution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubstitutionKind {
    Identity,
    /// C→U or G→A.
    Transition,
    /// C→G or U→A.
    TransversionCgUa,
    /// C→A.
    TransversionCa,
}

impl SubstitutionKind {
    pub const fn is_transversion(self) -> bool {
        matches!(
            self,
            SubstitutionKind::TransversionCgUa | SubstitutionKind::TransversionCa
        )
    }

    pub const fn as_str(self) -> &'static str {
        match self {
            SubstitutionKind::Identity => "identity",
            SubstitutionKind::Transition => "transition",
            SubstitutionKind::TransversionCgUa => "transversion-cg-ua",
            SubstitutionKind::TransversionCa => "transversion-ca",
        }
    }
}

/// A single-nucleotide misreading at a fixed codon position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MisreadSpec {
    position: Position,
    from: Nucleotide,
    to: Nucleotide,
    kind: SubstitutionKind,
}

impl MisreadSpec {
    /// The five modelled substitutions.
    pub const SUBSTITUTIONS: [(Nucleotide, Nucleotide); 5] = [
        (Nucleotide::C, Nucleotide::U),
        (Nucleotide::G, Nucleotide::A),
        (Nucleotide::C, Nucleotide::G),
        (Nucleotide::U, Nucleotide::A),
        (Nucleotide::C, Nucleotide::A),
    ];

    /// `from == to` gives the identity misreading.
    pub fn new(position: Position, from: Nucleotide, to: Nucleotide) -> Result<Self, MisreadError> {
        use Nucleotide::*;
        let kind = match (from, to) {
            _ if from == to => SubstitutionKind::Identity,
            (C, U) | (G, A) => SubstitutionKind::Transition,
            (C, G) | (U, A) => SubstitutionKind::TransversionCgUa,
            (C, A) => SubstitutionKind::TransversionCa,
            _ => {
                let transversion = from.is_pyrimidine() != to.is_pyrimidine();
                if transversion && to.weight_h() > from.weight_h() {
                    return Err(MisreadError::RaisesWeight { from, to });
                }
                return Err(MisreadError::NotModelled { from, to });
            }
        };
        Ok(MisreadSpec {
            position,
            from,
            to,
            kind,
        })
    }

    /// Shorthand taking a 1-based position.
    pub fn at(position: u8, from: Nucleotide, to: Nucleotide) -> Result<Self, MisreadError> {
        Self::new(Position::new(position)?, from, to)
    }

    pub fn identity(position: Position, n: Nucleotide) -> Self {
        MisreadSpec {
            position,
            from: n,
            to: n,
            kind: SubstitutionKind::Identity,
        }
    }

    pub const fn position(self) -> Position {
        self.position
    }

    pub const fn from(self) -> Nucleotide {
        self.from
    }

    pub const fn to(self) -> Nucleotide {
        self.to
    }

    pub const fn kind(self) -> SubstitutionKind {
        self.kind
    }

    /// Every modelled spec applicable to `codon`, in position then
    /// [`MisreadSpec::SUBSTITUTIONS`] order.
    pub fn applicable(codon: Codon, position: Position) -> impl Iterator<Item = MisreadSpec> {
        Self::SUBSTITUTIONS
            .into_iter()
            .filter(move |(from, _)| codon.at(position) == *from)
            .map(move |(from, to)| MisreadSpec::new(position, from, to).expect("modelled substitution"))
    }

    fn check(self, codon: Codon) -> Result<(), MisreadError> {
        let found = codon.at(self.position);
        if found == self.from {
            Ok(())
        } else {
            Err(MisreadError::Mismatch {
                codon,
                position: self.position,
                expected: self.from,
                found,
            })
        }
    }
}

impl fmt::Display for MisreadSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pos{} {}→{}", self.position, self.from, self.to)
    }
}

/// Position- and context-dependent operator ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankRules {
    /// `V` rank of a transition, by position 1, 2, 3.
    pub a: [HalfInt; 3],
    /// Dinucleotides for which the third-position transversion `H` rank is `b_in`.
    pub b_list: Vec<[Nucleotide; 2]>,
    pub b_in: HalfInt,
    pub b_out: HalfInt,
    /// `H` rank of a C→A misreading when the comparison codons share an irrep.
    pub c_same: HalfInt,
    pub c_diff: HalfInt,
    /// `V` rank of a transversion, by position 1, 2, 3.
    pub d: [HalfInt; 3],
}

impl Default for RankRules {
    fn default() -> Self {
        use Nucleotide::*;
        let h = HalfInt::from_int;
        RankRules {
            a: [h(1), h(2), h(0)],
            b_list: alloc::vec![
                [C, A],
                [G, A],
                [C, G],
                [U, G],
                [U, A],
                [U, U],
                [A, U],
                [A, A],
                [G, G],
                [A, G],
            ],
            b_in: h(2),
            b_out: h(1),
            c_same: h(1),
            c_diff: h(2),
            d: [h(1), h(2), h(1)],
        }
    }
}

impl RankRules {
    pub fn a(&self, position: Position) -> HalfInt {
        self.a[usize::from(position.get()) - 1]
    }

    pub fn d(&self, position: Position) -> HalfInt {
        self.d[usize::from(position.get()) - 1]
    }

    pub fn b(&self, codon: Codon) -> HalfInt {
        if self.b_list.contains(&codon.dinucleotide()) {
            self.b_in
        } else {
            self.b_out
        }
    }

    /// Compares `CXZ`/`UXZ` (first position) or `XCZ`/`XUZ` (second).
    pub fn c(&self, codon: Codon, position: Position) -> HalfInt {
        let pyr_c = codon_labels(codon.with(position, Nucleotide::C));
        let pyr_u = codon_labels(codon.with(position, Nucleotide::U));
        if pyr_c.same_irrep(&pyr_u) {
            self.c_same
        } else {
            self.c_diff
        }
    }

    /// `b_list` rendered as `CA,GA,…`.
    pub fn b_list_string(&self) -> String {
        let mut out = String::new();
        for (i, [x, z]) in self.b_list.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push(x.as_char());
            out.push(z.as_char());
        }
        out
    }
}

/// The operator modelling `spec` on `codon`.
pub fn operator_for(spec: MisreadSpec, codon: Codon, rules: &RankRules) -> Result<CrystalTensorOp, MisreadError> {
    use Nucleotide::*;
    spec.check(codon)?;
    let h = HalfInt::from_int;
    let pos = spec.position();
    let third = pos == Position::THIRD;
    let (j_h, m_h, j_v, m_v) = match (spec.from(), spec.to()) {
        _ if spec.kind() == SubstitutionKind::Identity => (h(0), h(0), h(0), h(0)),
        (C, U) | (G, A) => (h(1), h(-1), rules.a(pos), h(0)),
        (C, G) if third => (rules.b(codon), h(0), rules.d(pos), h(-1)),
        (U, A) if third => (rules.b(codon) - h(1), h(0), rules.d(pos), h(-1)),
        (C, A) if third => (rules.b(codon), h(-1), rules.d(pos), h(-1)),
        (C, G) => (h(1), h(0), rules.d(pos), h(-1)),
        (U, A) => (h(2), h(0), rules.d(pos), h(-1)),
        (C, A) => (rules.c(codon, pos), h(-1), rules.d(pos), h(-1)),
        (from, to) => return Err(MisreadError::NotModelled { from, to }),
    };
    CrystalTensorOp::new(j_h, m_h, j_v, m_v)
}

/// The codon with `spec` applied.
pub fn substitute(codon: Codon, spec: MisreadSpec) -> Result<Codon, MisreadError> {
    spec.check(codon)?;
    Ok(codon.with(spec.position(), spec.to()))
}

/// Crystal Wigner–Eckart action of `op` on a state with `labels`, factor by factor.
pub fn we_apply(labels: LabelQuad, op: CrystalTensorOp, order: CouplingOrder) -> Result<LabelQuad, MisreadError> {
    let (j_h, m_h) = couple(labels.j_h, labels.m_h, op.j_h, op.m_h, order)?;
    let (j_v, m_v) = couple(labels.j_v, labels.m_v, op.j_v, op.m_v, order)?;
    Ok(LabelQuad { j_h, j_v, m_h, m_v })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AllowedResult {
    pub allowed: bool,
    pub source: Codon,
    pub spec: MisreadSpec,
    pub operator: CrystalTensorOp,
    pub predicted: LabelQuad,
    pub target_codon: Codon,
    pub target: LabelQuad,
    /// Whether source and target codons lie in the same `H` and `V` irrep
    /// copies. Reported only.
    pub same_copy: bool,
}

pub fn allowed(
    codon: Codon,
    spec: MisreadSpec,
    rules: &RankRules,
    order: CouplingOrder,
) -> Result<AllowedResult, MisreadError> {
    let operator = operator_for(spec, codon, rules)?;
    let target_codon = substitute(codon, spec)?;
    let source = codon_labels(codon);
    let target = codon_labels(target_codon);
    let predicted = we_apply(source.quad, operator, order)?;
    Ok(AllowedResult {
        allowed: predicted == target.quad,
        source: codon,
        spec,
        operator,
        predicted,
        target_codon,
        target: target.quad,
        same_copy: source.same_irrep(&target),
    })
}

/// Two misreadings composed through a virtual state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleResult {
    pub allowed: bool,
    pub source: Codon,
    pub specs: [MisreadSpec; 2],
    pub operators: [CrystalTensorOp; 2],
    /// The codon after the first misreading only.
    pub virtual_codon: Codon,
    /// Labels predicted by the first operator.
    pub virtual_labels: LabelQuad,
    pub predicted: LabelQuad,
    pub target_codon: Codon,
    pub target: LabelQuad,
}

/// Applies `first` to the labels of `codon`, giving a virtual state carried
/// by the singly substituted codon, then `second` with its operator chosen
/// for that virtual codon.
pub fn allowed_double(
    codon: Codon,
    first: MisreadSpec,
    second: MisreadSpec,
    rules: &RankRules,
    order: CouplingOrder,
) -> Result<DoubleResult, MisreadError> {
    if first.position() == second.position() {
        return Err(MisreadError::Overlap(first.position()));
    }
    let op1 = operator_for(first, codon, rules)?;
    let virtual_codon = substitute(codon, first)?;
    let virtual_labels = we_apply(codon_labels(codon).quad, op1, order)?;
    let op2 = operator_for(second, virtual_codon, rules)?;
    let target_codon = substitute(virtual_codon, second)?;
    let predicted = we_apply(virtual_labels, op2, order)?;
    let target = codon_labels(target_codon).quad;
    Ok(DoubleResult {
        allowed: predicted == target,
        source: codon,
        specs: [first, second],
        operators: [op1, op2],
        virtual_codon,
        virtual_labels,
        predicted,
        target_codon,
        target,
    })
}
