pub mod brauer;
pub mod chartab;
pub mod cyclo;
pub mod error;
pub mod harness;
mod memo;
pub mod numtheory;
pub mod permgroup;
pub mod pspecial;
pub mod vertex;

pub use cyclo::Cyclotomic;
pub use error::{Error, Result};
pub use permgroup::{Group, GroupRef, Permutation};
