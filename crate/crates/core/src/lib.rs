pub mod algebra;
pub mod bases;
pub mod cyclotomic;
pub mod field;
pub mod linalg;
pub mod rank1;
pub mod relations;
pub mod simple;
pub mod verma;
pub mod weights;

pub use cyclotomic::{CycError, CycNum};
pub use field::Field;

pub type Vector = linalg::SparseVec<CycNum>;
pub type Operator = linalg::Operator<CycNum>;
pub type Subspace = linalg::EchelonBasis<CycNum>;
