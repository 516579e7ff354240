//! Exact enumeration, bijections, transfer-matrix counting and uniform
//! sampling for corners of tree-like, permutation, type-B and symmetric
//! tree-like tableaux.

pub mod bijections;
pub mod chain;
pub mod decimal;
pub mod enumerator;
pub mod error;
pub mod exec;
pub mod sampler;
pub mod shapes;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
pub use shapes::{BorderPath, Cell, FerrersShape, ShiftedShape, Step};
pub use tableaux::{Family, PermutationTableau, SymmetricTableau, Tableau, TreeLikeTableau, TypeBTableau};
