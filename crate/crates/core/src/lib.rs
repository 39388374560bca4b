#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod coefficient;
pub mod counting;
pub mod error;
pub mod forms;
pub mod global_density;
pub mod local_density;
pub mod number_theory;
pub mod spectral;
pub mod symbolic;

pub use error::{Error, Result};
pub use forms::{FieldSpec, FormSpec, OrderBasis};
pub use symbolic::SymbolicReal;
