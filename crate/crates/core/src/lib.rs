//! Finite-ring computational algebra.
//!
//! Every ring is a finite carrier with index-based total operations
//! (`0..order`). Structured constructions (matrices, group rings, endomorphism
//! rings, formal matrix rings, Morita contexts, idealizations, tensor products)
//! compute their operations from components; small carriers are materialized
//! into tables.
//!
//! On finite carriers the predicates periodic, weakly periodic, strongly
//! π-regular, π-UU and semi-clean always hold. They are reported as trivially
//! true and the checks focus on witnesses, exponents, decompositions and
//! radical structure instead.

pub mod classify;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod harness;
pub mod ring;

pub use error::{Result, RingError};
pub use ring::{Elem, FiniteRing, Subset, SubsetKind};
