//! Exact-arithmetic toolkit for self-distributive algebra: racks and
//! quandles as Cayley tables, structure-constant bialgebras with a full
//! set of identity checkers, Yang-Baxter operators, and the classification
//! of 2-dimensional counital self-distributive bialgebras.
//!
//! Everything is computed over exact rings (Q, GF(p), Q(sqrt d)); there are
//! no tolerances anywhere, every verdict is an equality of canonical forms.

// tensor code indexes several arrays by the same basis indices
#![allow(clippy::needless_range_loop)]

pub mod bialg;
pub mod classify;
pub mod cli;
pub mod construct;
pub mod error;
pub mod group;
pub mod io;
pub mod linalg;
pub mod magma;
pub mod scalar;
pub mod ybe;

pub use bialg::{Axiom, AxiomReport, StructureBialgebra};
pub use error::{Error, Result};
pub use magma::{FiniteMagma, MagmaClass, MagmaReport};
pub use scalar::{Ring, Scalar};
