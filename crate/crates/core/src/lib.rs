//! Multi-valued algebra workbench.
//!
//! Finite groups, racks and quandles given by Cayley tables, their
//! n-valued analogues (products landing in multisets), multi-operation
//! families, coset constructions, braid-equation solutions and the
//! rack/corack bialgebras attached to them. All arithmetic on scalars is
//! exact.

pub mod bialgebra;
pub mod braid;
pub mod error;
pub mod format;
pub mod groups;
pub mod matrix;
pub mod multiset;
pub mod nvalued;
pub mod quandles;
pub mod report;
pub mod scalar;
pub mod table;

pub use error::{Error, Result};
pub use multiset::{InclusionMode, Multiset};
pub use report::{AxiomReport, Verdict, Witness};
pub use table::CayleyTable;
