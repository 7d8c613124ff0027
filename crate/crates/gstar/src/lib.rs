//! Exact-arithmetic workbench for finite-dimensional graded algebras with a
//! homogeneous involution.
//!
//! Everything here works over cyclotomic extensions of the rationals with no
//! floating point anywhere: scalars are residues modulo a cyclotomic
//! polynomial, matrices are eliminated fraction-free, and every higher-level
//! answer (radical bases, codimension values, growth verdicts, separating
//! polynomials) is certified by exact linear algebra.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar`] and [`matrix`] provide the exact field Q(zeta_m) and rank /
//!   nullspace computations over it,
//! * [`group`] holds finite groups as index tables together with
//!   order-reversing involutions,
//! * [`algebra`] defines the central [`algebra::GradedStarAlgebra`] type and
//!   the constructions that produce new algebras from old ones,
//! * [`catalog`] builds the small named algebras that control exponential
//!   growth and the exclusion list attached to a group context,
//! * [`structure`] computes the Jacobson radical, its powers, the semisimple
//!   quotient and idempotent splitting / lifting,
//! * [`poly`] is the identity DSL: parsing, printing, evaluation,
//!   multilinearization and the identity test,
//! * [`codim`] enumerates multilinear monomial spaces and computes
//!   codimension sequences as ranks of evaluation matrices,
//! * [`growth`] ties it all together into the polynomial-versus-exponential
//!   classifier with embedded witnesses and the dichotomy check,
//! * [`io`] reads and writes the JSON interchange format for algebras.

pub mod algebra;
pub mod catalog;
pub mod codim;
pub mod group;
pub mod matrix;
pub mod morphism;
pub mod poly;
pub mod scalar;
pub mod structure;

pub use algebra::GradedStarAlgebra;
pub use catalog::CatalogId;
pub use codim::{CodimReport, Flavor, Limits};
pub use group::{FiniteGroup, GroupInvolution};
pub use matrix::ExactMatrix;
pub use poly::GStarPolynomial;
pub use scalar::CycScalar;
