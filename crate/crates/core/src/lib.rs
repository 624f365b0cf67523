pub mod algebra;
pub mod error;

pub use error::{Error, Result};
pub mod genera;
pub mod zeta_det;
pub mod clifford;
pub mod index;
pub mod descriptor;
pub mod verify;
