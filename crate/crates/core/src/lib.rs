//! Modern sets and a law checker for weak Boolean algebras.
//!
//! A *weak Boolean algebra* is a carrier with two binary operations `∗∧`,
//! `∗∨` and distinct constants `O`, `I` that satisfy the eight two-valued
//! truth-table identities and nothing more. A *modern set* over a finite
//! universe `X` assigns to each point `x` an element of that point's own
//! algebra `H_x`. Classical sets, fuzzy sets, L-fuzzy sets and generalized
//! fuzzy sets are all special cases; the [`classify`] module places a family
//! in that hierarchy.
//!
//! Everything is generic over an exact [`Scalar`] (used for fuzzy degrees and
//! matrix entries). [`Rational`] (arbitrary precision) is the default type
//! parameter; `*64` aliases use `i64`-backed rationals.

pub mod algebra;
pub mod checker;
pub mod classify;
pub mod error;
pub mod gf_ring;
pub mod instances;
pub mod lattice;
pub mod law;
pub mod lifting;
pub mod matrix;
pub mod modern_set;
pub mod scalar;

pub use algebra::{
    apply_complement, apply_vee, apply_wedge, check_wba_axioms, enumerate_elements, Algebra,
    AlgebraKind, AxiomReport, AxiomViolation, BinaryOp, CarrierKind, Element, FiniteAlgebraTable,
    LatticeAlgebra,
};
pub use checker::{
    check_all_laws, check_frame_law, check_law, CheckMode, FrameVerdict, FrameWitness, LawReport,
    LawVerdict, SampleConfig,
};
pub use classify::{classify_family, FamilyClassification, Level, PointEvidence};
pub use error::{Error, Result};
pub use gf_ring::{check_gf_ring_conditions, Condition, GfRingReport};
pub use instances::{find_noncommuting_witness, normalize_matrix};
pub use lattice::{
    check_boolean, check_cha, check_lattice_laws, lattice_from_hasse, powerset_lattice,
    FiniteLattice, LatticeCertificate, Verdict,
};
pub use law::{Law, LawStructure, LawWitness};
pub use lifting::{lift_check, LiftReport};
pub use matrix::Matrix;
pub use modern_set::{
    embed_crisp, verify_crisp_restriction, AlgebraFamily, CrispOracleReport, CrispSet, ModernSet,
    Universe,
};
pub use scalar::Scalar;

/// Arbitrary-precision rationals; the default scalar.
pub type Rational = num_rational::BigRational;
/// `i64`-backed rationals. Faster, but entries can overflow on long products.
pub type Rational64 = num_rational::Rational64;

pub type Element64 = Element<Rational64>;
pub type Algebra64 = Algebra<Rational64>;
pub type Matrix64 = Matrix<Rational64>;
pub type AlgebraFamily64 = AlgebraFamily<Rational64>;
pub type ModernSet64 = ModernSet<Rational64>;
