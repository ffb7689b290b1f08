//! An exact, fully combinatorial model of the Hopf fibration S³ → S².
//!
//! The model is built from three pieces, each computable without any
//! floating-point arithmetic:
//!
//! * [`gamma`] — the inverse Dold–Kan construction Γ turning a chain complex
//!   into a simplicial abelian group; applied to the sphere complex Z(2) it
//!   yields an Eilenberg–MacLane model K(Z, 2) of the base's fiber... see
//!   [`sphere`] for the minimal S² itself.
//! * [`loop_group`] — Kan's simplicial loop group G, a free-group model of
//!   the loop space; for ΓZ(2) this is a K(Z, 1) ≃ S¹ fiber.
//! * [`twisting`] / [`twisted_product`] — twisting functions η classifying
//!   principal twisted cartesian products; the class-1 twist assembles the
//!   Hopf bundle S¹ → S³ → S², and class m gives the lens-space family.
//!
//! Everything is exact: coefficients are integers, group elements are reduced
//! words, and simplices are canonical-form operator words produced by the
//! rewrite engine in [`operators`]. The [`verify`] module turns the defining
//! equations into executable law suites with replayable witnesses.

pub mod chain;
pub mod error;
pub mod gamma;
pub mod linalg;
pub mod loop_group;
pub mod operators;
pub mod report;
pub mod sample;
pub mod sphere;
pub mod twisted_product;
pub mod twisting;
pub mod verify;

pub use chain::ChainComplex;
pub use error::Error;
pub use gamma::{
    apply_word, coordinates, gamma_basis, gamma_degeneracy, gamma_face, normalized_chains,
    GammaElement, GammaSymbol,
};
pub use loop_group::{
    class_of, degree_invariant, fill_horn, is_moore_chain, loop_degeneracy, loop_face,
    symbol_generator_words, LoopGenerator, LoopWord,
};
pub use operators::{enumerate_degeneracy_words, DegeneracyWord, Operator, OperatorWord};
pub use report::{Bounds, SuiteResult, VerificationReport, Violation};
pub use sample::Sampler;
pub use sphere::{s2_degeneracy, s2_face, s2_simplices, BaseSimplex, Cell};
pub use twisted_product::{
    TotalSimplex, TotalSimplexPayload, TwistedProduct, UniversalProduct, UniversalTotalSimplex,
};
pub use twisting::{alpha, check_sphere_twisting, check_universal_twisting, eta, universal_zeta};
pub use verify::{enumerate_moore_two_cycles, run_all, run_bundle_class, run_golden_tables};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
