//! Finite relations, finite join-semilattices and the equivalence between them.

pub mod demorgan;
pub mod dep;
pub mod equivalence;
pub mod error;
pub mod finset;
pub mod freecat;
pub mod io;
pub mod jsl;
pub mod poset;
pub mod rel;
pub mod subset;
pub mod tensor;

pub use error::{Error, Result};
pub use finset::FinSet;
pub use jsl::{Jsl, JslMorphism};
pub use poset::Poset;
pub use rel::Rel;
pub use subset::Subset;
