//! Lattice arithmetic and divisor-class computations on moduli of
//! hyperkähler fourfolds of K3^[2] type with polarisation of split type.

pub mod borcherds;
pub mod checks;
pub mod cyclotomic;
pub mod discriminant;
pub mod divisor;
pub mod enumerate;
pub mod expr;
pub mod dtower;
pub mod error;
pub mod lattice;
pub mod matrix;
pub mod predictions;
pub mod picard;
pub mod rational;
pub mod sublattice;

pub use error::{Error, Result};
