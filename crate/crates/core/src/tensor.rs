//! Tensor products of `sl(2)` crystals.
//!
//! Two factors follow Kashiwara's rule: for `u ⊗ v`,
//!
//! - `J̃₊` acts on `v` if some `n ≥ 1` has `J̃₊ⁿv ≠ 0` and `J̃₋ⁿu = 0`, else on `u`;
//! - `J̃₋` acts on `u` if some `n ≥ 1` has `J̃₋ⁿu ≠ 0` and `J̃₊ⁿv = 0`, else on `v`.
//!
//! Longer words are read as left-associated products `((b₁ ⊗ b₂) ⊗ b₃) ⊗ …`,
//! so the rule is applied recursively to (all but the last factor) ⊗ (last).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::crystal::{CrystalError, CrystalState};
use crate::half_int::HalfInt;

/// One tensor factor `|j, m⟩`.
pub type FactorState = CrystalState;

/// An element of `B(j₁) ⊗ … ⊗ B(jₙ)`, one crystal state per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignPath {
    factors: Vec<FactorState>,
}

impl SignPath {
    /// Fails on an empty factor list.
    pub fn new(factors: Vec<FactorState>) -> Result<Self, EmptyPath> {
        if factors.is_empty() {
            Err(EmptyPath)
        } else {
            Ok(SignPath { factors })
        }
    }

    /// A word in `B(½)^⊗n` from letter weights `±½`.
    pub fn spin_half(weights: &[HalfInt]) -> Result<Self, PathError> {
        let factors = weights
            .iter()
            .map(|&m| CrystalState::new(HalfInt::HALF, m))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(factors)?)
    }

    /// Shorthand for [`SignPath::spin_half`] from a `+`/`-` string.
    pub fn from_signs(signs: &str) -> Result<Self, PathError> {
        let weights = signs
            .chars()
            .map(|c| match c {
                '+' => Ok(HalfInt::HALF),
                '-' => Ok(-HalfInt::HALF),
                other => Err(PathError::BadSign(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::spin_half(&weights)
    }

    pub fn factors(&self) -> &[FactorState] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total weight `m = Σ mᵢ`.
    pub fn weight(&self) -> HalfInt {
        self.factors.iter().map(|f| f.m()).sum()
    }

    pub fn spins(&self) -> Vec<HalfInt> {
        self.factors.iter().map(|f| f.j()).collect()
    }

    pub fn raise(&self) -> Option<SignPath> {
        raise_word(&self.factors).map(|factors| SignPath { factors })
    }

    pub fn lower(&self) -> Option<SignPath> {
        lower_word(&self.factors).map(|factors| SignPath { factors })
    }

    /// Number of successive lowerings before annihilation.
    pub fn lowering_length(&self) -> u32 {
        lowering_length(&self.factors)
    }

    /// Number of successive raisings before annihilation.
    pub fn raising_length(&self) -> u32 {
        raising_length(&self.factors)
    }

    pub fn is_highest_weight(&self) -> bool {
        self.raise().is_none()
    }

    /// Every element of `B(spins[0]) ⊗ … ⊗ B(spins[n-1])`, first factor
    /// varying slowest, weights descending within a factor.
    pub fn all(spins: &[HalfInt]) -> Result<Vec<SignPath>, PathError> {
        if spins.is_empty() {
            return Err(PathError::Empty(EmptyPath));
        }
        let mut words: Vec<Vec<FactorState>> = vec![Vec::new()];
        for &j in spins {
            let mut states: Vec<FactorState> = CrystalState::irrep(j)?.collect();
            states.reverse();
            words = words
                .into_iter()
                .flat_map(|w| {
                    states.iter().map(move |&s| {
                        let mut w = w.clone();
                        w.push(s);
                        w
                    })
                })
                .collect();
        }
        Ok(words.into_iter().map(|factors| SignPath { factors }).collect())
    }
}

impl fmt::Display for SignPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.iter().all(|s| s.j() == HalfInt::HALF) {
            for s in &self.factors {
                f.write_str(if s.m().is_negative() { "-" } else { "+" })?;
            }
            Ok(())
        } else {
            for (i, s) in self.factors.iter().enumerate() {
                if i > 0 {
                    f.write_str("⊗")?;
                }
                write!(f, "{s}")?;
            }
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("a tensor path needs at least one factor")]
pub struct EmptyPath;

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error(transparent)]
    Empty(#[from] EmptyPath),
    #[error(transparent)]
    Crystal(#[from] CrystalError),
    #[error("unexpected character {0:?} in sign word")]
    BadSign(char),
}

fn raise_word(word: &[FactorState]) -> Option<Vec<FactorState>> {
    let (&v, u) = word.split_last()?;
    if u.is_empty() {
        return v.raise().map(|s| vec![s]);
    }
    // J̃₊ⁿv ≠ 0 exactly for n ≤ ε(v); J̃₋ⁿu = 0 exactly for n > φ(u).
    let phi_u = lowering_length(u);
    let acts_on_v = (1..=v.raising_length()).any(|n| n > phi_u);
    if acts_on_v {
        let mut out = u.to_vec();
        out.push(v.raise()?);
        Some(out)
    } else {
        let mut out = raise_word(u)?;
        out.push(v);
        Some(out)
    }
}

fn lower_word(word: &[FactorState]) -> Option<Vec<FactorState>> {
    let (&v, u) = word.split_last()?;
    if u.is_empty() {
        return v.lower().map(|s| vec![s]);
    }
    let phi_u = lowering_length(u);
    let acts_on_u = (1..=phi_u).any(|n| n > v.raising_length());
    if acts_on_u {
        let mut out = lower_word(u)?;
        out.push(v);
        Some(out)
    } else {
        let mut out = u.to_vec();
        out.push(v.lower()?);
        Some(out)
    }
}

fn lowering_length(word: &[FactorState]) -> u32 {
    if let [single] = word {
        return single.lowering_length();
    }
    let mut n = 0;
    let mut current = word.to_vec();
    while let Some(next) = lower_word(&current) {
        current = next;
        n += 1;
    }
    n
}

fn raising_length(word: &[FactorState]) -> u32 {
    if let [single] = word {
        return single.raising_length();
    }
    let mut n = 0;
    let mut current = word.to_vec();
    while let Some(next) = raise_word(&current) {
        current = next;
        n += 1;
    }
    n
}

/// A connected component of a tensor-product crystal, named by its
/// highest-weight element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentId {
    pub highest_weight: SignPath,
    /// Spin of the component: the weight of `highest_weight`.
    pub j: HalfInt,
}

/// Locates `path` in its component: raises until annihilation.
pub fn component_of(path: &SignPath) -> (ComponentId, HalfInt) {
    let m = path.weight();
    let mut top = path.clone();
    while let Some(next) = top.raise() {
        top = next;
    }
    let j = top.weight();
    (ComponentId { highest_weight: top, j }, m)
}

/// One connected component with its members, highest weight first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub id: ComponentId,
    pub members: Vec<SignPath>,
}

/// Decomposes `B(spins[0]) ⊗ …` into components, ordered by first
/// appearance in [`SignPath::all`] order.
pub fn decompose(spins: &[HalfInt]) -> Result<Vec<Component>, PathError> {
    let mut components: Vec<Component> = Vec::new();
    for path in SignPath::all(spins)? {
        if !path.is_highest_weight() {
            continue;
        }
        let j = path.weight();
        let mut members = vec![path.clone()];
        let mut cur = path.clone();
        while let Some(next) = cur.lower() {
            members.push(next.clone());
            cur = next;
        }
        components.push(Component {
            id: ComponentId {
                highest_weight: path,
                j,
            },
            members,
        });
    }
    Ok(components)
}

/// Which of the two irreps is the left tensor factor in [`couple`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CouplingOrder {
    /// `|j₁ m₁⟩ ⊗ |j₂ m₂⟩`: the operator irrep is the second factor.
    #[default]
    StateFirst,
    /// `|j₂ m₂⟩ ⊗ |j₁ m₁⟩`.
    OperatorFirst,
}

impl CouplingOrder {
    pub const fn as_str(self) -> &'static str {
        match self {
            CouplingOrder::StateFirst => "state-first",
            CouplingOrder::OperatorFirst => "operator-first",
        }
    }
}

impl fmt::Display for CouplingOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown coupling order `{0}` (expected state-first or operator-first)")]
pub struct ParseOrderError(pub alloc::string::String);

impl FromStr for CouplingOrder {
    type Err = ParseOrderError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "state-first" | "state_first" => Ok(CouplingOrder::StateFirst),
            "operator-first" | "operator_first" => Ok(CouplingOrder::OperatorFirst),
            other => Err(ParseOrderError(other.into())),
        }
    }
}

/// The crystal Wigner–Eckart coupling: the pure state `|J, m₁+m₂⟩` reached
/// from `|j₁ m₁⟩` and `|j₂ m₂⟩`. `J` is the weight of the highest-weight
/// element above the two-factor path.
pub fn couple(
    j1: HalfInt,
    m1: HalfInt,
    j2: HalfInt,
    m2: HalfInt,
    order: CouplingOrder,
) -> Result<(HalfInt, HalfInt), CrystalError> {
    let a = CrystalState::new(j1, m1)?;
    let b = CrystalState::new(j2, m2)?;
    Ok(couple_states(a, b, order))
}

/// [`couple`] on already validated states.
pub fn couple_states(state: CrystalState, op: CrystalState, order: CouplingOrder) -> (HalfInt, HalfInt) {
    let factors = match order {
        CouplingOrder::StateFirst => vec![state, op],
        CouplingOrder::OperatorFirst => vec![op, state],
    };
    let (id, m) = component_of(&SignPath { factors });
    (id.j, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(twice: i32) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn p(s: &str) -> SignPath {
        SignPath::from_signs(s).unwrap()
    }

    #[test]
    fn raise_two_factor() {
        assert_eq!(p("-+").raise(), Some(p("++")));
        assert_eq!(p("++").raise(), None);
        assert_eq!(p("+-").raise(), None);
    }

    #[test]
    fn lower_two_factor() {
        assert_eq!(p("++").lower(), Some(p("-+")));
        assert_eq!(p("--").lower(), None);
        assert_eq!(p("+-").lower(), None);
    }

    #[test]
    fn three_letter_components() {
        let (id, m) = component_of(&p("+++"));
        assert_eq!((id.j, m), (h(3), h(3)));
        let (id, m) = component_of(&p("+-+"));
        assert_eq!((id.j, m), (h(1), h(1)));
        assert_eq!(id.highest_weight, p("+-+"));
        let (id, _) = component_of(&p("+--"));
        assert_eq!(id.highest_weight, p("+-+"));
        let (id, _) = component_of(&p("++-"));
        assert_eq!(id.highest_weight, p("++-"));

        let mut sizes: Vec<usize> = decompose(&[h(1); 3]).unwrap().iter().map(|c| c.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 4]);
    }

    #[test]
    fn couple_examples() {
        assert_eq!(
            couple(h(3), h(3), h(2), h(-2), CouplingOrder::StateFirst).unwrap(),
            (h(1), h(1))
        );
        assert_eq!(
            couple(h(1), h(1), h(1), h(-1), CouplingOrder::StateFirst).unwrap(),
            (h(0), h(0))
        );
        for order in [CouplingOrder::StateFirst, CouplingOrder::OperatorFirst] {
            assert_eq!(couple(h(3), h(3), h(4), h(4), order).unwrap(), (h(7), h(7)));
        }
        assert!(couple(h(1), h(3), h(1), h(1), CouplingOrder::StateFirst).is_err());
    }

    #[test]
    fn rank_zero_is_identity() {
        for j2 in 0..=6 {
            for s in CrystalState::irrep(h(j2)).unwrap() {
                let zero = CrystalState::new(h(0), h(0)).unwrap();
                for order in [CouplingOrder::StateFirst, CouplingOrder::OperatorFirst] {
                    assert_eq!(couple_states(s, zero, order), (s.j(), s.m()));
                }
            }
        }
    }

    #[test]
    fn order_parse_roundtrip() {
        for o in [CouplingOrder::StateFirst, CouplingOrder::OperatorFirst] {
            assert_eq!(o.as_str().parse::<CouplingOrder>().unwrap(), o);
        }
        assert!("sideways".parse::<CouplingOrder>().is_err());
    }

    #[test]
    fn display_paths() {
        use alloc::string::ToString;
        assert_eq!(p("+-+").to_string(), "+-+");
        let mixed = SignPath::new(vec![
            CrystalState::from_twice(3, 1).unwrap(),
            CrystalState::from_twice(2, -2).unwrap(),
        ])
        .unwrap();
        assert_eq!(mixed.to_string(), "|3/2,1/2⟩⊗|1,-1⟩");
    }
}
