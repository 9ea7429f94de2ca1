pub mod bell;
pub mod cli;
pub mod error;
pub mod moyal;
pub mod phasespace;
pub mod specfun;

pub use error::{Error, Result};
