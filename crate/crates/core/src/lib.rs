//! Exact combinatorial engine for type-A seaweed (biparabolic) Lie algebras.
//!
//! A seaweed `p^A(a|b)` is identified by two compositions of the same `n`.
//! Everything here is computed from its meander: the index (`2C + P - 1`),
//! and, for Frobenius seaweeds, the oriented-meander path weights that give
//! the spectrum matrix, the extended spectrum matrix, the principal element
//! and the spectrum itself. Closed-form spectra for the known families live
//! in [`families`], and the spectral predicates and lemma verifiers in
//! [`analysis`].
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic is exact.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod composition;
pub mod error;
pub mod families;
pub mod meander;
pub mod multiset;
pub mod spectrum;

pub use analysis::{
    is_log_concave, is_symmetric_about_half, is_unbroken_centered_half, is_unimodal,
    verify_block_lemmas, verify_reverse_lemma, verify_swap_lemma, BlockLemmaOutcome,
    SpectrumReport,
};
pub use composition::{compositions_of, parse_composition, parse_seaweed, Composition, SeaweedSpec};
pub use error::Error;
pub use families::{
    extend_tail, extend_with_2s, extend_with_4s, extended_base_with_2s, extended_base_with_4s,
    family_extended_spectrum, family_grid, family_spec, family_spectrum,
    FamilyId, FoursVariant, TwosVariant,
};
pub use meander::{
    build_meander, components, index_gcd_maximal_parabolic, index_gcd_three_part, index_gl,
    index_sl, is_frobenius, ComponentKind, ComponentSummary, Meander,
};
pub use multiset::{multiset_equal, IntegerMultiset};
pub use spectrum::{
    extended_spectrum, extended_spectrum_matrix, frobenius_form_support, orient,
    principal_element, shape_mask, spectrum, spectrum_matrix, vertex_potentials,
    OrientedMeander, PartialIntegerMatrix, PrincipalElement, ShapeMask, VertexPotential,
};

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
