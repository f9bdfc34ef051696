//! Hilbert functions that force the Weak Lefschetz Property, and the exact
//! machinery to check the ingredients on small examples.
//!
//! * [`macaulay`]: binomial expansions and the operators built on them.
//! * [`hilbert`]: O-sequences, the forcing classifier, enumeration.
//! * [`ideal`], [`wlp`], [`decompose`], [`points`], [`enumerate`]: a
//!   degree-truncated engine for homogeneous ideals over exact rationals.
//! * [`betti`]: graded Betti tables and their comparisons.
//! * [`verify`]: the brute-force sweep tying the pieces together.

pub mod betti;
pub mod decompose;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod hilbert;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod macaulay;
pub mod points;
pub mod poly;
pub mod verify;
pub mod wlp;

pub use betti::BettiTable;
pub use error::{AlgebraError, BettiError, HilbertError, MacaulayError, VerifyError};
pub use field::{Coeff, Field};
pub use hilbert::HilbertFunction;
pub use ideal::{GradedIdeal, GradedQuotient};
pub use macaulay::BinomialExpansion;
pub use poly::{Monomial, PolyRing, Polynomial};
pub use wlp::{FormChoice, WlpReport};
