//! Explicit arrows for the distributivity of Cartesian closed categories
//! with finite coproducts, `A × (B + C) ≅ (A × B) + (A × C)`, together with
//! the currying isomorphism and hom-set transposition they are built from.
//!
//! The constructions in [`constructions`] are written once against the
//! [`Bicc`] signature and run in three decidable instances:
//!
//! * [`finset::FinSet`], finite sets and function tables;
//! * [`heyting::Heyting`], finite Heyting algebras as thin categories;
//! * [`terms::Terms`], the free syntactic category, compared by
//!   interpretation into finite sets.

pub mod category;
pub mod constructions;
pub mod error;
pub mod finset;
pub mod heyting;
pub mod terms;

pub use category::{check_iso, commutes, compose_path, Bicc, Iso, IsoCheck, Structural};
pub use constructions::{Builder, Chain, ConstructionTrace, MediatorPlan};
pub use error::{CatError, Result};
pub use finset::{FinSet, FinSetObj, FunTable};
pub use heyting::{FiniteLattice, Heyting, LatObj, LeqWitness};
pub use terms::{TermArrow, Terms, TypeExpr};
