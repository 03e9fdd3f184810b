//! Crystal-basis representation theory of `sl(2) ⊕ sl(2)` in the `q → 0`
//! limit, applied to the multiplet structure of the genetic code.
//!
//! The crate is `no_std` and only needs `alloc`. Labels are exact
//! half-integers and crystal operators return `None` on annihilation.
//!
//! Layers, bottom-up:
//!
//! - [`qlimit`]: floating-point q-numbers used to check the `q → 0` asymptotics.
//! - [`half_int`] and [`crystal`]: exact labels and the single-irrep crystal.
//! - [`tensor`]: the tensor-product rule, component decomposition and [`tensor::couple`].
//! - [`genetic_code`]: nucleotides, codons, their crystal labels and the embedded tables.
//! - [`misread`]: crystal tensor operators and the allowed-misreading predicate.
//! - [`pipeline`]: the five-level multiplet merging pipeline.
#![no_std]

extern crate alloc;

pub mod crystal;
pub mod genetic_code;
pub mod half_int;
pub mod misread;
pub mod pipeline;
pub mod qlimit;
pub mod tensor;

mod disjoint_set;

pub use crystal::{CrystalError, CrystalState};
pub use genetic_code::{AminoAcid, CodeKind, Codon, CodonLabel, LabelQuad, Nucleotide};
pub use half_int::{HalfInt, ParseHalfIntError, Rational};
pub use misread::{AllowedResult, CrystalTensorOp, DoubleResult, MisreadError, MisreadSpec, RankRules};
pub use pipeline::{MergePolicy, MultipletPartition, PipelineConfig};
pub use tensor::{ComponentId, CouplingOrder, SignPath};
