//! The crystal basis of a single irreducible `sl(2)` module.
//!
//! At `q → 0` the rescaled generators act on `|j, m⟩` as unit shifts inside
//! the weight range and annihilate at its ends. Annihilation is `None`.

use core::fmt;

use thiserror::Error;

use crate::half_int::{HalfInt, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("spin must be non-negative, got {0}")]
    NegativeSpin(HalfInt),
    #[error("weight {m} out of range for spin {j}")]
    WeightOutOfRange { j: HalfInt, m: HalfInt },
    #[error("weight {m} has the wrong parity for spin {j}")]
    ParityMismatch { j: HalfInt, m: HalfInt },
}

/// A basis vector `|j, m⟩` with `-j ≤ m ≤ j` and `j - m ∈ ℤ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrystalState {
    j: HalfInt,
    m: HalfInt,
}

impl CrystalState {
    pub fn new(j: HalfInt, m: HalfInt) -> Result<Self, CrystalError> {
        if j.is_negative() {
            return Err(CrystalError::NegativeSpin(j));
        }
        if m.abs() > j {
            return Err(CrystalError::WeightOutOfRange { j, m });
        }
        if !j.same_parity(m) {
            return Err(CrystalError::ParityMismatch { j, m });
        }
        Ok(CrystalState { j, m })
    }

    /// Same as [`CrystalState::new`] on twice-values.
    pub fn from_twice(j2: i32, m2: i32) -> Result<Self, CrystalError> {
        Self::new(HalfInt::from_twice(j2), HalfInt::from_twice(m2))
    }

    pub fn highest(j: HalfInt) -> Result<Self, CrystalError> {
        Self::new(j, j)
    }

    pub fn lowest(j: HalfInt) -> Result<Self, CrystalError> {
        Self::new(j, -j)
    }

    #[inline]
    pub fn j(self) -> HalfInt {
        self.j
    }

    #[inline]
    pub fn m(self) -> HalfInt {
        self.m
    }

    /// `J̃₊|j,m⟩ = |j,m+1⟩` for `m < j`, annihilated at `m = j`.
    pub fn raise(self) -> Option<Self> {
        (self.m < self.j).then(|| CrystalState {
            j: self.j,
            m: self.m + HalfInt::ONE,
        })
    }

    /// `J̃₋|j,m⟩ = |j,m-1⟩` for `m > -j`, annihilated at `m = -j`.
    pub fn lower(self) -> Option<Self> {
        (self.m > -self.j).then(|| CrystalState {
            j: self.j,
            m: self.m - HalfInt::ONE,
        })
    }

    /// Number of times [`raise`](Self::raise) applies before annihilation: `j - m`.
    pub fn raising_length(self) -> u32 {
        (self.j - self.m).twice() as u32 / 2
    }

    /// Number of times [`lower`](Self::lower) applies before annihilation: `j + m`.
    pub fn lowering_length(self) -> u32 {
        (self.j + self.m).twice() as u32 / 2
    }

    /// Eigenvalue of the crystal Casimir, `j(j+1)`, independent of `m`.
    pub fn crystal_casimir(self) -> Rational {
        self.j.j_j_plus_one()
    }

    /// All `2j + 1` states of spin `j`, lowest weight first.
    pub fn irrep(j: HalfInt) -> Result<impl Iterator<Item = CrystalState>, CrystalError> {
        let mut next = Some(Self::lowest(j)?);
        Ok(core::iter::from_fn(move || {
            let current = next?;
            next = current.raise();
            Some(current)
        }))
    }
}

impl fmt::Display for CrystalState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{}⟩", self.j, self.m)
    }
}
